"""Exhaustive property suites over one simple type.

Each suite takes a :class:`TypeContext` and returns a list of failure
messages; an empty list means the suite passed.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

from . import cascade as cas
from .chevalley import (
    ChevalleyAlgebra,
    StructureTable,
    borel,
    build_algebra,
    build_d_m,
    cascade_support,
    inject_fault,
    nilradical_n,
    parabolic,
    parabolic_nilradical,
    parabolic_q_plus,
)
from .index import cascade_form, form_matrix, index_estimate, index_of_form
from .linalg import rank_exact, rank_modular_oracle
from .roots import (
    RootSystem,
    SimpleType,
    add,
    inner_product,
    is_root,
    neg,
    root_string,
    root_system,
    sub,
)

MAX_REPORTED = 5


def classical_root_count(t: SimpleType) -> int:
    r = t.rank
    return {
        "A": r * (r + 1) // 2,
        "B": r * r,
        "C": r * r,
        "D": r * (r - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(r, -1),
        "F": 24,
        "G": 6,
    }[t.family]


def expected_borel_index(t: SimpleType) -> int:
    if t.family == "A":
        return t.rank // 2
    if t.family == "D":
        return t.rank % 2
    if t.family == "E" and t.rank == 6:
        return 2
    return 0


def expected_cascade_size(t: SimpleType) -> int:
    if t.family == "A":
        return (t.rank + 1) // 2
    if t.family == "D":
        return 2 * (t.rank // 2)
    if t.family == "E" and t.rank == 6:
        return 4
    return t.rank


def parabolic_choices(rank: int, exhaustive_up_to: int = 5) -> list[tuple[int, ...]]:
    """All subsets of simple roots for small rank; otherwise singletons and extremes."""
    simples = range(1, rank + 1)
    if rank <= exhaustive_up_to:
        return [ex for k in range(rank + 1) for ex in itertools.combinations(simples, k)]
    return [()] + [(i,) for i in simples] + [tuple(simples)]


@dataclass
class TypeContext:
    type: SimpleType
    fault: bool = False
    seed: int = 20240607
    extra: dict = field(default_factory=dict)

    @cached_property
    def rs(self) -> RootSystem:
        return root_system(self.type)

    @cached_property
    def cascade(self) -> cas.Cascade:
        return cas.build_cascade(self.rs)

    @cached_property
    def algebra(self) -> ChevalleyAlgebra:
        return build_algebra(self.rs)

    @cached_property
    def table(self) -> StructureTable:
        return inject_fault(self.algebra) if self.fault else self.algebra

    @cached_property
    def borel(self):
        return borel(self.algebra)


def _cap(msgs: list[str]) -> list[str]:
    if len(msgs) > MAX_REPORTED:
        return msgs[:MAX_REPORTED] + [f"... {len(msgs) - MAX_REPORTED} more"]
    return msgs


def check_root_count(ctx: TypeContext) -> list[str]:
    got, want = len(ctx.rs.positive_roots), classical_root_count(ctx.type)
    return [] if got == want else [f"{got} positive roots, expected {want}"]


def check_cartan(ctx: TypeContext) -> list[str]:
    rs, out = ctx.rs, []
    n = rs.rank
    for i in range(n):
        for j in range(n):
            v = rs.cartan[i][j]
            if i == j and v != 2:
                out.append(f"diagonal entry n({i + 1},{i + 1}) = {v}")
            if i != j and v not in (0, -1, -2, -3):
                out.append(f"off-diagonal entry n({i + 1},{j + 1}) = {v}")
            if rs.cartan[i][j] * rs.symmetrizer[j] != rs.cartan[j][i] * rs.symmetrizer[i]:
                out.append(f"symmetrizer fails at ({i + 1},{j + 1})")
    # positive definiteness via exact leading principal minors
    g = [[Fraction(x) for x in row] for row in rs.gram]
    for k in range(n):
        piv = g[k][k]
        if piv <= 0:
            out.append(f"Gram matrix not positive definite at minor {k + 1}")
            break
        for i in range(k + 1, n):
            f = g[i][k] / piv
            for j in range(k, n):
                g[i][j] -= f * g[k][j]
    return out


def check_highest_root(ctx: TypeContext) -> list[str]:
    rs, out = ctx.rs, []
    beta = rs.positive_roots[-1]
    bb = inner_product(rs, beta, beta)
    if min(beta) < 1:
        out.append(f"highest root {beta} has a zero coefficient")
    for i in range(rs.rank):
        if inner_product(rs, beta, rs.simple_roots[i]) < 0:
            out.append(f"(beta, a_{i + 1}) < 0")
    for a in rs.positive_roots:
        if min(sub(beta, a)) < 0:
            out.append(f"{beta} does not dominate {a}")
        if bb < inner_product(rs, a, a):
            out.append(f"(beta,beta) < ({a},{a})")
        if a != beta:
            ab = inner_product(rs, a, beta)
            if 2 * ab not in (0, bb):
                out.append(f"2(a,beta)/(beta,beta) not in {{0,1}} for a = {a}")
            if ab > 0 and not is_root(rs, sub(beta, a)):
                out.append(f"(a,beta) > 0 but beta - a not a root, a = {a}")
    return _cap(out)


def check_root_strings(ctx: TypeContext) -> list[str]:
    rs, out = ctx.rs, []
    roots = list(rs.positive_roots) + [neg(a) for a in rs.positive_roots]
    for a in rs.positive_roots:
        aa = inner_product(rs, a, a)
        for b in roots:
            if b == a or b == neg(a):
                continue
            p, q = root_string(rs, a, b)
            n, rem = divmod(2 * inner_product(rs, b, a), aa)
            if rem or p + q != -n:
                out.append(f"string of {a} through {b}: p+q = {p + q}")
    return _cap(out)


def check_strong_orthogonality(ctx: TypeContext) -> list[str]:
    rs, out = ctx.rs, []
    betas = ctx.cascade.betas
    for x, y in itertools.combinations(betas, 2):
        if not cas.strongly_orthogonal(rs, x, y):
            out.append(f"{x} and {y} not strongly orthogonal")
        if inner_product(rs, x, y) != 0:
            out.append(f"({x},{y}) != 0")
    roots = list(rs.positive_roots) + [neg(a) for a in rs.positive_roots]
    for a in rs.positive_roots:
        for b in roots:
            if b != a and b != neg(a) and cas.strongly_orthogonal(rs, a, b) and inner_product(rs, a, b):
                out.append(f"{a}, {b} strongly orthogonal but not orthogonal")
    return _cap(out)


def check_cascade_structure(ctx: TypeContext) -> list[str]:
    c, rs, out = ctx.cascade, ctx.rs, []
    if len(c) != expected_cascade_size(ctx.type):
        out.append(f"cascade has {len(c)} roots, expected {expected_cascade_size(ctx.type)}")
    for node in c:
        if node.beta != cas.highest_root(rs, node.subsystem):
            out.append(f"{cas.format_word(node.word)}: beta is not the highest root")
        kids = c.children(node.word)
        rest = set(cas.orthogonal_subsystem(rs, node.beta, node.subsystem))
        got = set().union(*(set(k.subsystem) for k in kids)) if kids else set()
        if got != rest:
            out.append(f"{cas.format_word(node.word)}: children do not tile beta-perp")
    return out


def check_maximality(ctx: TypeContext) -> list[str]:
    extra = cas.maximality_witnesses(ctx.cascade)
    return [f"{a} is strongly orthogonal to the whole cascade" for a in extra]


def check_gamma_partition(ctx: TypeContext) -> list[str]:
    rs, c, out = ctx.rs, ctx.cascade, []
    seen: dict = {}
    for node in c:
        g = cas.gamma_set(c, node.word)
        if node.beta not in g.roots:
            out.append(f"beta_{cas.format_word(node.word)} missing from its Gamma")
        for a in g.roots:
            if a in seen:
                out.append(f"{a} in Gamma_{cas.format_word(seen[a])} and Gamma_{cas.format_word(node.word)}")
            seen[a] = node.word
        comp = set(node.subsystem) - set(cas.orthogonal_subsystem(rs, node.beta, node.subsystem))
        if comp != set(g.roots):
            out.append(f"Gamma_{cas.format_word(node.word)} is not the complement of beta-perp")
    missing = set(rs.positive_roots) - set(seen)
    if missing:
        out.append(f"{len(missing)} positive roots in no Gamma_K")
    return _cap(out)


def check_heisenberg(ctx: TypeContext) -> list[str]:
    rs, c, out = ctx.rs, ctx.cascade, []
    for node in c:
        g = [a for a in cas.gamma_set(c, node.word).roots if a != node.beta]
        for x, y in itertools.combinations_with_replacement(g, 2):
            s = add(x, y)
            if is_root(rs, s) and s != node.beta:
                out.append(f"{x} + {y} = {s} != beta_{cas.format_word(node.word)}")
    return _cap(out)


def check_pairing_constant(ctx: TypeContext) -> list[str]:
    rs, c, out = ctx.rs, ctx.cascade, []
    for node in c:
        b = node.beta
        bb = inner_product(rs, b, b)
        roots = cas.gamma_set(c, node.word).roots
        for gmm in roots:
            if gmm == b:
                continue
            if 2 * inner_product(rs, b, gmm) != bb:
                out.append(f"(beta, {gmm}) != (beta,beta)/2")
            if sub(b, gmm) not in roots:
                out.append(f"beta - {gmm} not in Gamma_{cas.format_word(node.word)}")
    return _cap(out)


def check_cross_closure(ctx: TypeContext) -> list[str]:
    rs, c, out = ctx.rs, ctx.cascade, []
    owner = {a: n.word for n in c for a in cas.gamma_set(c, n.word).roots}
    for x, y in itertools.combinations_with_replacement(rs.positive_roots, 2):
        s = add(x, y)
        if not rs.is_positive_root(s):
            continue
        k, l = owner[x], owner[y]
        if cas.cascade_leq(c, k, l):
            lo = k
        elif cas.cascade_leq(c, l, k):
            lo = l
        else:
            out.append(f"{x} + {y} is a root across incomparable {k}, {l}")
            continue
        if owner[s] != lo:
            out.append(f"{x} + {y} lands in Gamma_{owner[s]}, expected Gamma_{lo}")
    return _cap(out)


def check_parabolic_order(ctx: TypeContext) -> list[str]:
    c, out = ctx.cascade, []
    for n in c:
        closure = cas.parabolic_closure(c, n.word)
        for w in closure:
            if not all(v in closure for v in cas.parabolic_closure(c, w)):
                out.append(f"I_{cas.format_word(n.word)} not downward closed")
        if closure != {m.word for m in c if cas.cascade_leq(c, m.word, n.word)}:
            out.append(f"I_{cas.format_word(n.word)} disagrees with the order")
    return out


def check_jacobi(ctx: TypeContext) -> list[str]:
    t = ctx.table
    out = [f"antisymmetry fails at {p}" for p in t.antisymmetry_violations()]
    bad = t.jacobi_violations(limit=MAX_REPORTED)
    lab = t.labels
    out += [f"Jacobi fails on ({lab[x]}, {lab[y]}, {lab[z]})" for x, y, z in bad]
    return out


def check_weyl_relations(ctx: TypeContext) -> list[str]:
    alg, rs, t, out = ctx.algebra, ctx.rs, ctx.table, []
    r = rs.rank
    s = rs.simple_roots
    for i in range(r):
        for j in range(r):
            if t.bracket(i, j):
                out.append(f"[H{i + 1},H{j + 1}] != 0")
            if t.bracket(i, alg.x(s[j])) != ({alg.x(s[j]): rs.cartan[j][i]} if rs.cartan[j][i] else {}):
                out.append(f"[H{i + 1},X{j + 1}] != n({j + 1},{i + 1}) X{j + 1}")
            if t.bracket(i, alg.y(s[j])) != ({alg.y(s[j]): -rs.cartan[j][i]} if rs.cartan[j][i] else {}):
                out.append(f"[H{i + 1},Y{j + 1}] != -n({j + 1},{i + 1}) Y{j + 1}")
            want = {i: 1} if i == j else {}
            if t.bracket(alg.x(s[i]), alg.y(s[j])) != want:
                out.append(f"[X{i + 1},Y{j + 1}] wrong")
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            ab = add(a, b)
            if not rs.is_positive_root(ab):
                if t.bracket(alg.x(a), alg.x(b)):
                    out.append(f"[X{a},X{b}] != 0 although a+b is not a root")
                continue
            nx = t.bracket(alg.x(a), alg.x(b)).get(alg.x(ab), 0)
            ny = t.bracket(alg.y(a), alg.y(b)).get(alg.y(ab), 0)
            p = -root_string(rs, a, b)[0]
            if abs(nx) != p + 1:
                out.append(f"|N({a},{b})| = {abs(nx)}, expected {p + 1}")
            if nx != ny:
                out.append(f"N({a},{b}) = {nx} but the Y-bracket gives {ny}")
    return _cap(out)


def check_rank_oracle(ctx: TypeContext) -> list[str]:
    b, out = ctx.borel, []
    rng = random.Random(ctx.seed)
    forms = [cascade_form(b), [rng.randint(-100, 100) for _ in range(b.dim)],
             [rng.randint(-1, 1) for _ in range(b.dim)]]
    for f in forms:
        M = form_matrix(b, f)
        if rank_exact(M) != rank_modular_oracle(M):
            out.append("exact and modular ranks disagree")
    return out


def check_index(ctx: TypeContext) -> list[str]:
    rep = index_estimate(ctx.borel, seed=ctx.seed, use_cascade=False)
    out = []
    want = expected_borel_index(ctx.type)
    if rep.index != want:
        out.append(f"sampled Borel index {rep.index}, expected {want}")
    if rep.cascade_form_index != rep.index:
        out.append(f"cascade form has kernel {rep.cascade_form_index}, sampled minimum {rep.index}")
    if rep.index != ctx.rs.rank - len(ctx.cascade):
        out.append("index != rank - |cascade|")
    return out


def check_subalgebras(ctx: TypeContext) -> list[str]:
    alg, rs, c, out = ctx.algebra, ctx.rs, ctx.cascade, []
    b = ctx.borel
    for s in (b, nilradical_n(alg)):
        if not s.is_closed():
            out.append(f"{s.name} is not closed")
    pos = set(rs.positive_roots)
    for ex in parabolic_choices(rs.rank):
        q = parabolic_q_plus(rs, ex)
        qs = set(q)
        for s in (parabolic(alg, ex), parabolic_nilradical(alg, ex)):
            if not s.is_closed():
                out.append(f"{s.name}{list(ex)} is not closed")
        # m is an ideal of p: the roots of p are Delta+ and -(Delta+ minus Q+)
        p_roots = list(pos) + [neg(a) for a in pos if a not in qs]
        for g in q:
            for d in p_roots:
                sm = add(g, d)
                if sm in pos and sm not in qs:
                    out.append(f"Q+{list(ex)}: {g} + {d} leaves Q+")
        support = cascade_support(c, q)
        for n in c:
            if qs & set(cas.gamma_set(c, n.word).roots) and n.beta not in qs:
                out.append(f"Q+{list(ex)} meets Gamma_{n.word} without beta")
        for w in support:
            if not cas.parabolic_closure(c, w) <= set(support):
                out.append(f"I(Q+){list(ex)} not downward closed")
        dm = build_d_m(alg, c, q)
        if not dm.is_closed():
            out.append(f"d_m{list(ex)} is not closed")
            continue
        if any(not b.contains(v) for v in dm.members):
            out.append(f"d_m{list(ex)} not inside b")
        m = parabolic_nilradical(alg, ex)
        for u in dm.members:
            for v in m.members:
                if not m.contains(alg.bracket_vectors(u, v)):
                    out.append(f"[d_m, m]{list(ex)} not inside m")
        if any(not dm.contains(v) for v in m.members):
            out.append(f"m{list(ex)} not inside d_m")
    return _cap(out)


def check_dm_frobenius(ctx: TypeContext) -> list[str]:
    alg, rs, c, out = ctx.algebra, ctx.rs, ctx.cascade, []
    for ex in parabolic_choices(rs.rank):
        dm = build_d_m(alg, c, parabolic_q_plus(rs, ex))
        rep = index_estimate(dm, seed=ctx.seed)
        if rep.index:
            out.append(f"d_m for parabolic {list(ex)} has index {rep.index}")
    return out


def check_regular_form(ctx: TypeContext) -> list[str]:
    b = ctx.borel
    rep = index_estimate(b, seed=ctx.seed, use_cascade=False)
    got = index_of_form(b, cascade_form(b))
    return [] if got == rep.index else [f"cascade form kernel {got} vs sampled {rep.index}"]


SUITES: dict[str, Callable[[TypeContext], list[str]]] = {
    "root-count": check_root_count,
    "cartan": check_cartan,
    "highest-root": check_highest_root,
    "root-strings": check_root_strings,
    "strong-orthogonality": check_strong_orthogonality,
    "cascade-structure": check_cascade_structure,
    "maximality": check_maximality,
    "gamma-partition": check_gamma_partition,
    "heisenberg": check_heisenberg,
    "pairing-constant": check_pairing_constant,
    "cross-closure": check_cross_closure,
    "parabolic-order": check_parabolic_order,
    "jacobi": check_jacobi,
    "weyl-relations": check_weyl_relations,
    "rank-oracle": check_rank_oracle,
    "index": check_index,
    "regular-form": check_regular_form,
    "subalgebras": check_subalgebras,
    "dm-frobenius": check_dm_frobenius,
}


def run_suite(name: str, ctx: TypeContext) -> list[str]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(ctx)
