"""Chevalley bases, structure tables and the subalgebras b, n, p, m and d_m.

Brackets of the root vectors are fixed by choosing a sign for every
extraspecial pair; all other constants follow from the standard identities

    N(b, a) = -N(a, b)
    N(-a, -b) = -N(a, b)                 (internal basis e_a, a in Delta)
    a + b + c = 0  =>  N(a, b)/(c, c) = N(b, c)/(a, a) = N(c, a)/(b, b)
    a + b + c + d = 0, no opposite pair  =>
        N(a,b)N(c,d)/(a+b)^2 + N(b,c)N(a,d)/(b+c)^2 + N(c,a)N(b,d)/(c+a)^2 = 0

The exposed basis is H_i (simple coroots), X_a = e_a and Y_a = (-1)^(ht a + 1) e_{-a}
for positive a, which gives [X_i, Y_i] = H_i and equal constants for the X and
Y brackets.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from .cascade import Cascade, gamma_set
from .roots import Root, RootSystem, add, height, inner_product, is_root, neg, sub

Vector = dict[int, int | Fraction]


def _add_into(acc: Vector, vec: Mapping[int, int | Fraction], scale=1) -> None:
    for k, c in vec.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


class StructureTable:
    """A finite-dimensional Lie algebra given by brackets of basis vectors.

    ``brackets`` maps ordered pairs (i, j) to the sparse expansion of [e_i, e_j];
    missing pairs bracket to zero.
    """

    def __init__(self, labels: Sequence[str], brackets: Mapping[tuple[int, int], Mapping[int, int | Fraction]]):
        self.labels = list(labels)
        self.brackets = {k: dict(v) for k, v in brackets.items() if v}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, i: int, j: int) -> Vector:
        return self.brackets.get((i, j), {})

    def bracket_vectors(self, u: Mapping[int, int | Fraction], v: Mapping[int, int | Fraction]) -> Vector:
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                br = self.brackets.get((i, j))
                if br:
                    _add_into(out, br, a * b)
        return out

    @classmethod
    def abelian(cls, dim: int, prefix: str = "e") -> "StructureTable":
        return cls([f"{prefix}{i + 1}" for i in range(dim)], {})

    def antisymmetry_violations(self) -> list[tuple[int, int]]:
        bad = []
        for (i, j), v in self.brackets.items():
            w = self.brackets.get((j, i), {})
            if any(w.get(k, 0) != -c for k, c in v.items()) or len(w) != len(v):
                bad.append((i, j))
        bad += [(i, i) for (i, j) in self.brackets if i == j]
        return sorted(set(bad))

    def _sparse_tensor(self) -> sp.csr_matrix:
        # rows (x, y) flattened, columns k: coefficient of e_k in [e_x, e_y]
        n = self.dim
        rows, cols, vals = [], [], []
        for (i, j), v in self.brackets.items():
            for k, c in v.items():
                if isinstance(c, Fraction) and c.denominator != 1:
                    raise TypeError("sparse Jacobi check needs integral structure constants")
                rows.append(i * n + j)
                cols.append(k)
                vals.append(int(c))
        return sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)), shape=(n * n, n))

    def jacobi_violations(self, limit: int | None = 20) -> list[tuple[int, int, int]]:
        """Triples (x, y, z) with [x,[y,z]] != [[x,y],z] + [y,[x,z]].

        All n^3 triples are checked, one ``x`` at a time with sparse products.
        """
        n = self.dim
        if n == 0:
            return []
        T = self._sparse_tensor()
        eye = sp.identity(n, dtype=np.int64, format="csr")
        bad: list[tuple[int, int, int]] = []
        for x in range(n):
            ad_x = T[x * n:(x + 1) * n, :]                    # ad_x[k, m] = C[x, k, m]
            inner = T @ ad_x                                  # [x, [y, z]] at row (y, z)
            left = sp.kron(ad_x, eye, format="csr") @ T       # [[x, y], z]
            right = sp.kron(eye, ad_x, format="csr") @ T      # [y, [x, z]]
            diff = (inner - left - right).tocoo()
            nz = diff.data != 0
            if nz.any():
                for r in np.unique(diff.row[nz]):
                    bad.append((x, int(r) // n, int(r) % n))
                    if limit is not None and len(bad) >= limit:
                        return bad
        return bad

    def to_json(self) -> dict:
        out = []
        for (i, j) in sorted(self.brackets):
            if i < j:
                out.append([i, j, [[k, _json_num(c)] for k, c in sorted(self.brackets[(i, j)].items())]])
        return {"basis": self.labels, "brackets": out}

    @classmethod
    def from_json(cls, data: Mapping) -> "StructureTable":
        br: dict[tuple[int, int], Vector] = {}
        for i, j, terms in data["brackets"]:
            v = {k: _parse_num(c) for k, c in terms}
            br[(i, j)] = v
            br[(j, i)] = {k: -c for k, c in v.items()}
        return cls(data["basis"], br)


def _json_num(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return int(c)


def _parse_num(c):
    return Fraction(c) if isinstance(c, str) else c


def direct_sum(tables: Sequence[StructureTable]) -> StructureTable:
    labels, br, off = [], {}, 0
    for n, t in enumerate(tables, start=1):
        labels += [f"{lab}@{n}" for lab in t.labels]
        for (i, j), v in t.brackets.items():
            br[(i + off, j + off)] = {k + off: c for k, c in v.items()}
        off += t.dim
    return StructureTable(labels, br)


# -- structure constants ------------------------------------------------------

class _Constants:
    """N(a, b) for the internal basis {e_a : a in Delta}."""

    def __init__(self, rs: RootSystem, signs: Mapping[Root, int] | None = None):
        self.rs = rs
        self.signs = dict(signs or {})
        self.memo: dict[tuple[Root, Root], int] = {}
        pos = rs.positive_roots
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        for xi in pos:
            for a in pos:  # increasing order, so the first hit is minimal
                b = sub(xi, a)
                if rs.is_positive_root(b):
                    self.extraspecial[xi] = (a, b)
                    break

    def sq(self, a: Root) -> int:
        return inner_product(self.rs, a, a)

    def N(self, a: Root, b: Root) -> int:
        key = (a, b)
        if key not in self.memo:
            self.memo[key] = self._compute(a, b)
        return self.memo[key]

    def _compute(self, a: Root, b: Root) -> int:
        rs = self.rs
        s = add(a, b)
        if not any(s) or not is_root(rs, s):
            return 0
        pa, pb = rs.is_positive_root(a), rs.is_positive_root(b)
        if pa and pb:
            if rs.position(a) > rs.position(b):
                return -self.N(b, a)
            a1, b1 = self.extraspecial[s]
            if a == a1:
                p = 0
                while is_root(rs, tuple(y - (p + 1) * x for x, y in zip(a, b))):
                    p += 1
                return self.signs.get(s, 1) * (p + 1)
            t = Fraction(0)
            d = sub(b, a1)
            if is_root(rs, d):
                t += Fraction(self.N(b, neg(a1)) * self.N(a, neg(b1)), self.sq(d))
            d = sub(a, a1)
            if is_root(rs, d):
                t += Fraction(self.N(neg(a1), a) * self.N(b, neg(b1)), self.sq(d))
            return _integral(self.sq(s) * t / self.N(a1, b1))
        if not pa and not pb:
            return -self.N(neg(a), neg(b))
        if not pa:
            return -self.N(b, a)
        # a positive, b negative, a + b = s
        if rs.is_positive_root(s):
            return _integral(Fraction(self.sq(s), self.sq(a)) * self.N(b, neg(s)))
        return _integral(Fraction(self.sq(s), self.sq(b)) * self.N(neg(s), a))


def _integral(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral structure constant {q}")
    return q.numerator


def _label(root: Root) -> str:
    return "[" + ",".join(map(str, root)) + "]"


class ChevalleyAlgebra(StructureTable):
    """The simple Lie algebra of a root system in the basis H_i, X_a, Y_a."""

    def __init__(self, rs: RootSystem, signs: Mapping[Root, int] | None = None):
        self.rs = rs
        r, pos = rs.rank, rs.positive_roots
        P = len(pos)
        consts = _Constants(rs, signs)
        self.constants = consts
        labels = [f"H{i + 1}" for i in range(r)] + [f"X{_label(a)}" for a in pos] + [f"Y{_label(a)}" for a in pos]

        # internal e_a for all roots -> (public index, sign)
        e_index: dict[Root, tuple[int, int]] = {}
        for k, a in enumerate(pos):
            e_index[a] = (r + k, 1)
            e_index[neg(a)] = (r + P + k, (-1) ** (height(a) + 1))
        cor = {a: rs.coroot_coefficients(a) for a in pos}

        def e_bracket(a: Root, b: Root) -> Vector:
            s = add(a, b)
            if not any(s):
                if rs.is_positive_root(a):
                    return {i: c for i, c in enumerate(cor[a]) if c}
                return {i: -c for i, c in enumerate(cor[b]) if c}
            n = consts.N(a, b)
            if not n:
                return {}
            k, sgn = e_index[s]
            return {k: n * sgn}

        roots = list(pos) + [neg(a) for a in pos]
        br: dict[tuple[int, int], Vector] = {}
        for a in roots:
            ia, sa = e_index[a]
            for i in range(r):
                # [H_i, e_a] = <a, a_i^v> e_a
                v = sum(a[j] * rs.cartan[j][i] for j in range(r))
                if v:
                    br[(i, ia)] = {ia: v}
                    br[(ia, i)] = {ia: -v}
            for b in roots:
                ib, sb = e_index[b]
                v = e_bracket(a, b)
                if v:
                    br[(ia, ib)] = {k: c * sa * sb for k, c in v.items()}
        super().__init__(labels, br)
        self._e_index = e_index

    def h(self, i: int) -> int:
        return i

    def x(self, root: Sequence[int]) -> int:
        return self.rs.rank + self.rs.position(tuple(root))

    def y(self, root: Sequence[int]) -> int:
        return self.rs.rank + len(self.rs.positive_roots) + self.rs.position(tuple(root))

    def coroot_vector(self, root: Sequence[int]) -> Vector:
        """H_beta as a combination of the simple coroots H_i."""
        return {i: c for i, c in enumerate(self.rs.coroot_coefficients(root)) if c}

    def structure_constant(self, a: Root, b: Root) -> int:
        """N(a, b) with [X_a, X_b] = N(a, b) X_{a+b} for positive a, b."""
        v = self.bracket(self.x(a), self.x(b))
        s = add(a, b)
        return v.get(self.x(s), 0) if self.rs.is_positive_root(s) else 0


def build_algebra(rs: RootSystem, signs: Mapping[Root, int] | None = None) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs, signs)


def random_signs(rs: RootSystem, seed: int) -> dict[Root, int]:
    """A random sign for each extraspecial pair; every choice gives a valid algebra."""
    rng = random.Random(seed)
    return {xi: rng.choice((1, -1)) for xi in rs.positive_roots if height(xi) > 1}


def inject_fault(table: StructureTable) -> StructureTable:
    """Copy of ``table`` with one bracket's sign flipped (breaks Jacobi)."""
    br = {k: dict(v) for k, v in table.brackets.items()}
    target = None
    if isinstance(table, ChevalleyAlgebra):
        pos = table.rs.positive_roots
        for a in pos:
            for b in pos:
                if table.rs.is_positive_root(add(a, b)):
                    target = (table.x(a), table.x(b))
                    break
            if target:
                break
    if target is None:
        target = min(k for k in br if k[0] != k[1])
    i, j = target
    br[(i, j)] = {k: -c for k, c in br[(i, j)].items()}
    br[(j, i)] = {k: -c for k, c in br[(j, i)].items()}
    return StructureTable(table.labels, br)


# -- subalgebras --------------------------------------------------------------

class _Decomposer:
    """Coordinates of vectors in the span of a linearly independent family."""

    def __init__(self, members: Sequence[Mapping[int, int | Fraction]]):
        # fully reduced echelon rows: pivot -> (row, combination of members)
        rows: dict[int, tuple[dict, dict]] = {}
        for idx, m in enumerate(members):
            v: dict = {k: Fraction(c) for k, c in m.items() if c}
            comb: dict = {idx: Fraction(1)}
            for p in [k for k in v if k in rows]:
                c = v.get(p)
                if c:
                    rv, rc = rows[p]
                    _add_into(v, rv, -c)
                    _add_into(comb, rc, -c)
            if not v:
                raise ValueError("subalgebra members are linearly dependent")
            p = min(v)
            c = v[p]
            v = {k: x / c for k, x in v.items()}
            comb = {k: x / c for k, x in comb.items()}
            for rv, rc in rows.values():
                e = rv.get(p)
                if e:
                    _add_into(rv, v, -e)
                    _add_into(rc, comb, -e)
            rows[p] = (v, comb)
        self.rows = rows

    def coordinates(self, vec: Mapping[int, int | Fraction]) -> Vector:
        out: dict = {}
        resid: dict = {k: c for k, c in vec.items() if c}
        for p, c in list(resid.items()):
            if p in self.rows:
                rv, rc = self.rows[p]
                _add_into(out, rc, c)
                _add_into(resid, rv, -c)
        if resid:
            raise ValueError("vector is not in the span")
        return {k: (int(c) if c.denominator == 1 else c) if isinstance(c, Fraction) else c
                for k, c in out.items()}


@dataclass
class Subalgebra:
    parent: StructureTable
    members: list[Vector]
    labels: list[str]
    name: str
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.members)

    @cached_property
    def _decomposer(self) -> _Decomposer:
        return _Decomposer(self.members)

    @cached_property
    def table(self) -> StructureTable:
        """Structure table in the member basis; raises if not bracket-closed."""
        dec = self._decomposer
        br = {}
        for i, u in enumerate(self.members):
            for j, v in enumerate(self.members):
                if i == j:
                    continue
                w = self.parent.bracket_vectors(u, v)
                if w:
                    try:
                        br[(i, j)] = dec.coordinates(w)
                    except ValueError:
                        raise ValueError(f"{self.name} is not closed: [{self.labels[i]}, {self.labels[j]}]") from None
        return StructureTable(self.labels, br)

    def is_closed(self) -> bool:
        try:
            self.table
        except ValueError:
            return False
        return True

    def contains(self, vec: Mapping[int, int | Fraction]) -> bool:
        try:
            self._decomposer.coordinates(vec)
        except ValueError:
            return False
        return True


def whole(table: StructureTable, name: str = "algebra") -> Subalgebra:
    return Subalgebra(table, [{i: 1} for i in range(table.dim)], list(table.labels), name)


def borel(alg: ChevalleyAlgebra) -> Subalgebra:
    idx = list(range(alg.rs.rank)) + [alg.x(a) for a in alg.rs.positive_roots]
    return Subalgebra(alg, [{i: 1} for i in idx], [alg.labels[i] for i in idx], "borel",
                      {"type": str(alg.rs.type)})


def nilradical_n(alg: ChevalleyAlgebra) -> Subalgebra:
    idx = [alg.x(a) for a in alg.rs.positive_roots]
    return Subalgebra(alg, [{i: 1} for i in idx], [alg.labels[i] for i in idx], "nilradical_n",
                      {"type": str(alg.rs.type)})


def _check_excluded(rs: RootSystem, excluded: Iterable[int]) -> frozenset[int]:
    ex = frozenset(excluded)
    if any(not 1 <= i <= rs.rank for i in ex):
        raise ValueError(f"parabolic indices must lie in 1..{rs.rank}")
    return ex


def parabolic_q_plus(rs: RootSystem, excluded: Iterable[int]) -> tuple[Root, ...]:
    """Positive roots whose support meets the excluded simple roots (1-based)."""
    ex = _check_excluded(rs, excluded)
    return tuple(a for a in rs.positive_roots if any(a[i - 1] for i in ex))


def parabolic(alg: ChevalleyAlgebra, excluded: Iterable[int]) -> Subalgebra:
    rs = alg.rs
    q = set(parabolic_q_plus(rs, excluded))
    idx = list(range(rs.rank)) + [alg.x(a) for a in rs.positive_roots] + \
        [alg.y(a) for a in rs.positive_roots if a not in q]
    return Subalgebra(alg, [{i: 1} for i in idx], [alg.labels[i] for i in idx], "parabolic_p",
                      {"type": str(rs.type), "excluded": sorted(_check_excluded(rs, excluded))})


def parabolic_nilradical(alg: ChevalleyAlgebra, excluded: Iterable[int]) -> Subalgebra:
    rs = alg.rs
    ex = sorted(_check_excluded(rs, excluded))
    q = parabolic_q_plus(rs, ex)
    idx = [alg.x(a) for a in q]
    return Subalgebra(alg, [{i: 1} for i in idx], [alg.labels[i] for i in idx], "nilradical_m",
                      {"type": str(rs.type), "excluded": ex, "q_plus": q})


def cascade_support(c: Cascade, q_plus: Iterable[Root]) -> list[tuple[int, ...]]:
    """I(Q+): cascade indices whose root lies in Q+."""
    q = set(q_plus)
    return [n.word for n in c if n.beta in q]


def build_d_m(alg: ChevalleyAlgebra, c: Cascade, q_plus: Iterable[Root]) -> Subalgebra:
    """h_{I(Q+)} + sum of the root spaces of Gamma_L over L in I(Q+)."""
    words = cascade_support(c, q_plus)
    gammas: set[Root] = set()
    for w in words:
        gammas.update(gamma_set(c, w).roots)
    roots = [a for a in alg.rs.positive_roots if a in gammas]
    members = [alg.coroot_vector(c[w].beta) for w in words] + [{alg.x(a): 1} for a in roots]
    labels = [f"H{_label(c[w].beta)}" for w in words] + [alg.labels[alg.x(a)] for a in roots]
    return Subalgebra(alg, members, labels, "d_m",
                      {"type": str(alg.rs.type), "support": [list(w) for w in words]})
