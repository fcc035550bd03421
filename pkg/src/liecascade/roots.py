"""Finite root systems of simple Lie algebras in exact integer arithmetic.

Roots are integer tuples of coordinates over the simple roots, numbered as in
Bourbaki's tables.  The invariant form is normalised so that short roots have
squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple[int, ...]

_RANK_OK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise ValueError(f"invalid rank {self.rank!r} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> SimpleType:
    """Parse strings such as ``"B5"``, ``"e6"`` or ``"A_3"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
    if m is None:
        raise ValueError(f"cannot parse type {text!r}")
    return SimpleType(m.group(1).upper(), int(m.group(2)))


def _simple_root_vectors(t: SimpleType) -> list[list[Fraction]]:
    # Euclidean realisations from Bourbaki's plates.
    r = t.rank
    h = Fraction(1, 2)

    def e(i, n):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return v

    def diff(i, j, n):
        return [a - b for a, b in zip(e(i, n), e(j, n))]

    if t.family == "A":
        return [diff(i, i + 1, r + 1) for i in range(r)]
    if t.family == "B":
        return [diff(i, i + 1, r) for i in range(r - 1)] + [e(r - 1, r)]
    if t.family == "C":
        return [diff(i, i + 1, r) for i in range(r - 1)] + [[2 * x for x in e(r - 1, r)]]
    if t.family == "D":
        last = [a + b for a, b in zip(e(r - 2, r), e(r - 1, r))]
        return [diff(i, i + 1, r) for i in range(r - 1)] + [last]
    if t.family == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)],
                [Fraction(-2), Fraction(1), Fraction(1)]]
    if t.family == "F":
        return [diff(1, 2, 4), diff(2, 3, 4), e(3, 4), [h, -h, -h, -h]]
    # E_r is the span of the first r simple roots of E_8
    e8 = [[h, -h, -h, -h, -h, -h, -h, h],
          [a + b for a, b in zip(e(0, 8), e(1, 8))],
          diff(1, 0, 8)]
    e8 += [diff(i + 1, i, 8) for i in range(1, 6)]
    return e8[:r]


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries n(i, j) = 2(a_i, a_j) / (a_j, a_j)."""
    vs = _simple_root_vectors(t)
    g = [[sum(a * b for a, b in zip(u, v)) for v in vs] for u in vs]
    n = len(vs)
    return tuple(tuple(int(2 * g[i][j] / g[j][j]) for j in range(n)) for i in range(n))


def _symmetrizer(cartan) -> tuple[int, ...]:
    # d_j = (a_j, a_j)/2 with short roots at 1; propagate along the Dynkin graph
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] and d[j] is None:
                    # n(i,j) d_j = n(j,i) d_i
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
    lo = min(d)
    return tuple(int(x / lo) for x in d)


def height(root: Sequence[int]) -> int:
    return sum(root)


def _order_key(root: Root):
    return (sum(root), tuple(-x for x in root))


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Gram matrix (a_i, a_j) of the simple roots."""
        n = self.rank
        return tuple(tuple(self.cartan[i][j] * self.symmetrizer[j] for j in range(n))
                     for i in range(n))

    @cached_property
    def _index(self) -> dict[Root, int]:
        return {a: k for k, a in enumerate(self.positive_roots)}

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    def position(self, root: Root) -> int:
        return self._index[root]

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._index

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """2(a, b)/(b, b) for a root ``b``."""
        num = 2 * inner_product(self, a, b)
        den = inner_product(self, b, b)
        q, rem = divmod(num, den)
        if rem:
            raise ValueError("pairing is not integral; is b a root?")
        return q

    def coroot_coefficients(self, root: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the coroot of ``root`` over the simple coroots."""
        ll = inner_product(self, root, root)
        out = []
        for i, a in enumerate(root):
            q, rem = divmod(a * self.gram[i][i], ll)
            if rem:
                raise ValueError("coroot is not integral")
            out.append(q)
        return tuple(out)


def unit(rank: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(rank))


def enumerate_positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[Root, ...]:
    """All positive roots, graded by height and lexicographically decreasing within a height.

    Built by closure from the simple roots: for a positive root ``a`` and simple
    root ``a_i`` the string a - p a_i, ..., a + q a_i satisfies p - q = <a, a_i^v>,
    so ``a + a_i`` is a root exactly when q > 0.
    """
    n = len(cartan)
    found: set[Root] = {unit(n, i) for i in range(n)}
    layer = sorted(found, key=_order_key)
    while layer:
        nxt: set[Root] = set()
        for a in layer:
            for i in range(n):
                if a == unit(n, i):
                    p = 0
                else:
                    p = 0
                    b = list(a)
                    while True:
                        b[i] -= 1
                        if tuple(b) in found:
                            p += 1
                        else:
                            break
                # <a, a_i^v> = sum_j a_j n(j, i)
                q = p - sum(a[j] * cartan[j][i] for j in range(n))
                if q > 0:
                    c = list(a)
                    c[i] += 1
                    nxt.add(tuple(c))
        found |= nxt
        layer = sorted(nxt, key=_order_key)
    return tuple(sorted(found, key=_order_key))


def root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = parse_type(t)
    c = cartan_matrix(t)
    return RootSystem(t, c, _symmetrizer(c), enumerate_positive_roots(c))


def inner_product(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != rs.rank or len(b) != rs.rank:
        raise ValueError("dimension mismatch")
    g = rs.gram
    return sum(a[i] * b[j] * g[i][j] for i in range(rs.rank) if a[i] for j in range(rs.rank) if b[j])


def is_root(rs: RootSystem, v: Sequence[int]) -> bool:
    if len(v) != rs.rank:
        return False
    v = tuple(v)
    return rs.is_positive_root(v) or rs.is_positive_root(neg(v))


def neg(v: Sequence[int]) -> Root:
    return tuple(-x for x in v)


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def root_string(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, int]:
    """Interval [p, q] (p <= 0 <= q) of k with beta + k alpha a root."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not is_root(rs, alpha):
        raise ValueError(f"{alpha} is not a root")
    if not is_root(rs, beta):
        raise ValueError(f"{beta} is not a root")
    if alpha == beta or alpha == neg(beta):
        raise ValueError("root string is undefined for alpha = +-beta")
    p = 0
    while is_root(rs, tuple(b + (p - 1) * a for a, b in zip(alpha, beta))):
        p -= 1
    q = 0
    while is_root(rs, tuple(b + (q + 1) * a for a, b in zip(alpha, beta))):
        q += 1
    return p, q


# -- subsystems ---------------------------------------------------------------

def simple_roots_of(rs: RootSystem, positive: Iterable[Root]) -> list[Root]:
    """Indecomposable elements of a positive system (its simple roots)."""
    pos = set(positive)
    return sorted((a for a in pos
                   if not any(sub(a, b) in pos for b in pos if b != a)),
                  key=_order_key)


def irreducible_components(rs: RootSystem, positive: Iterable[Root] | None = None
                           ) -> list[tuple[Root, ...]]:
    """Split a root subsystem (given by its positive roots) into irreducible pieces.

    Components are ordered by the smallest simple-root index in their support.
    """
    pos = list(rs.positive_roots if positive is None else positive)
    if not pos:
        return []
    simples = simple_roots_of(rs, pos)
    # connected components of the non-orthogonality graph on the simple roots
    comp_of: dict[Root, int] = {}
    groups: list[list[Root]] = []
    for s in simples:
        if s in comp_of:
            continue
        comp_of[s] = len(groups)
        group = [s]
        stack = [s]
        while stack:
            a = stack.pop()
            for b in simples:
                if b not in comp_of and inner_product(rs, a, b) != 0:
                    comp_of[b] = comp_of[s]
                    group.append(b)
                    stack.append(b)
        groups.append(group)
    buckets: list[list[Root]] = [[] for _ in groups]
    for a in pos:
        hits = {comp_of[s] for s in simples if inner_product(rs, a, s) != 0}
        if len(hits) != 1:
            raise ValueError("input is not a closed root subsystem")
        buckets[hits.pop()].append(a)
    comps = [tuple(sorted(b, key=_order_key)) for b in buckets]
    return sorted(comps, key=lambda c: min(min(i for i, x in enumerate(a) if x) for a in c))


def highest_root(rs: RootSystem, positive: Iterable[Root] | None = None) -> Root:
    """Highest root of an irreducible (sub)system given by its positive roots."""
    pos = list(rs.positive_roots if positive is None else positive)
    if not pos:
        raise ValueError("empty root system has no highest root")
    if len(irreducible_components(rs, pos)) != 1:
        raise ValueError("highest root requires an irreducible system")
    top = max(pos, key=_order_key)
    if any(min(sub(top, a)) < 0 for a in pos):
        raise ValueError("no root dominates the system")
    return top


def orthogonal_subsystem(rs: RootSystem, beta: Sequence[int],
                         positive: Iterable[Root] | None = None) -> tuple[Root, ...]:
    """Positive roots (of the given subsystem) orthogonal to ``beta``."""
    pos = rs.positive_roots if positive is None else positive
    return tuple(a for a in pos if inner_product(rs, a, beta) == 0)


def classify(rs: RootSystem, positive: Iterable[Root]) -> str:
    """Cartan type label (e.g. ``"C2"``) of an irreducible subsystem."""
    pos = list(positive)
    simples = simple_roots_of(rs, pos)
    n, count = len(simples), len(pos)
    lengths = [inner_product(rs, s, s) for s in simples]
    if len(set(lengths)) == 1:
        if count == n * (n + 1) // 2:
            return f"A{n}"
        if count == n * (n - 1):
            return f"D{n}"
        return f"E{n}"
    if n == 2 and count == 6:
        return "G2"
    if n == 4 and count == 24:
        return "F4"
    short = [s for s, l in zip(simples, lengths) if l == min(lengths)]
    if n >= 3:
        return f"B{n}" if len(short) == 1 else f"C{n}"
    # rank 2: name by which end of the chain (in ambient order) is long
    return "B2" if lengths[-1] == min(lengths) else "C2"
