"""Index of a Lie algebra: kernel dimension of B_f(X, Y) = f([X, Y]) for generic f."""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

from .cascade import Cascade, build_cascade
from .chevalley import ChevalleyAlgebra, StructureTable, Subalgebra, direct_sum, whole
from .linalg import rank_exact

DEFAULT_SEED = 20240607
DEFAULT_SAMPLES = 32
DEFAULT_BOUND = 100

Form = Sequence[int | Fraction]


@dataclass(frozen=True)
class SamplingConfig:
    """Parameters of the randomized index search."""
    num_samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    coeff_bound: int = DEFAULT_BOUND
    use_cascade: bool = True

    def __post_init__(self):
        if self.num_samples < 1 or self.coeff_bound < 1:
            raise ValueError("num_samples and coeff_bound must be positive")

    def kwargs(self) -> dict:
        return asdict(self)


def _table(alg: Subalgebra | StructureTable) -> StructureTable:
    return alg.table if isinstance(alg, Subalgebra) else alg


def form_matrix(alg: Subalgebra | StructureTable, f: Form) -> list[list[int | Fraction]]:
    """M[i][j] = f([e_i, e_j]) in the basis of ``alg``."""
    t = _table(alg)
    if len(f) != t.dim:
        raise ValueError(f"form has length {len(f)}, algebra has dimension {t.dim}")
    M = [[0] * t.dim for _ in range(t.dim)]
    for (i, j), v in t.brackets.items():
        M[i][j] = sum(c * f[k] for k, c in v.items() if f[k])
    return M


def index_of_form(alg: Subalgebra | StructureTable, f: Form) -> int:
    return _table(alg).dim - rank_exact(form_matrix(alg, f))


def cascade_form(sub: Subalgebra, c: Cascade | None = None) -> list[int]:
    """Sum of the duals of X_beta over the cascade roots, on a Borel subalgebra."""
    alg = sub.parent
    if sub.name != "borel" or not isinstance(alg, ChevalleyAlgebra):
        raise ValueError("cascade form is defined on the Borel subalgebra of a simple algebra")
    if c is None:
        c = build_cascade(alg.rs)
    elif c.rs.type != alg.rs.type:
        raise ValueError("cascade and algebra come from different root systems")
    pos = {lab: k for k, lab in enumerate(sub.labels)}
    f = [0] * sub.dim
    for beta in c.betas:
        f[pos[alg.labels[alg.x(beta)]]] = 1
    return f


@dataclass
class IndexReport:
    algebra_name: str
    dimension: int
    best_rank: int
    index: int
    witness_form: list
    samples_used: int
    seed: int
    cascade_form_rank: int | None = None
    meta: dict = field(default_factory=dict)

    @property
    def cascade_form_index(self) -> int | None:
        return None if self.cascade_form_rank is None else self.dimension - self.cascade_form_rank

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra_name,
            "dim": self.dimension,
            "index": self.index,
            "rank": self.best_rank,
            "samples": self.samples_used,
            "seed": self.seed,
            "witness": [[k, _num(c)] for k, c in enumerate(self.witness_form) if c],
            "cascade_form_index": self.cascade_form_index,
            **self.meta,
        }


def _num(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c


def index_estimate(alg: Subalgebra | StructureTable, num_samples: int = DEFAULT_SAMPLES,
                   seed: int = DEFAULT_SEED, coeff_bound: int = DEFAULT_BOUND,
                   use_cascade: bool = True) -> IndexReport:
    """Minimum of dim Ker B_f over random integer forms (and the cascade form on a Borel).

    Regular forms are Zariski-dense, so a handful of random forms find the
    index.  Sampling stops early once the kernel dimension reaches its parity
    floor ``dim % 2``, which no form can beat.
    """
    if num_samples < 1 or coeff_bound < 1:
        raise ValueError("num_samples and coeff_bound must be positive")
    t = _table(alg)
    n = t.dim
    name = alg.name if isinstance(alg, Subalgebra) else "algebra"
    floor = n % 2
    rng = random.Random(seed)
    best_rank, witness, used = -1, [0] * n, 0
    for _ in range(num_samples):
        if n - best_rank == floor:
            break
        f = [rng.randint(-coeff_bound, coeff_bound) for _ in range(n)]
        used += 1
        r = rank_exact(form_matrix(t, f))
        if r % 2:
            raise ArithmeticError("skew-symmetric form matrix has odd rank")
        if r > best_rank:
            best_rank, witness = r, f
    cf_rank = None
    if isinstance(alg, Subalgebra) and alg.name == "borel" and isinstance(alg.parent, ChevalleyAlgebra):
        cf = cascade_form(alg)
        cf_rank = rank_exact(form_matrix(t, cf))
        if use_cascade and cf_rank > best_rank:
            best_rank, witness = cf_rank, cf
    best_rank = max(best_rank, 0)
    meta = dict(alg.meta) if isinstance(alg, Subalgebra) else {}
    return IndexReport(name, n, best_rank, n - best_rank, witness, used, seed, cf_rank, meta)


def is_regular(alg: Subalgebra | StructureTable, f: Form, established_index: int) -> bool:
    return index_of_form(alg, f) == established_index


def is_frobenius(alg: Subalgebra | StructureTable, **kw) -> bool:
    return index_estimate(alg, **kw).index == 0


def product_index_check(subs: Sequence[Subalgebra | StructureTable], forms: Sequence[Form],
                        **kw) -> bool:
    """Check i(g_1 x ... x g_r) = sum i(g_k), and that ``forms`` is regular iff each piece is.

    Bare structure tables are external factors.  Subalgebras of a common
    parent must form an internal product (commuting, independent).
    """
    if len(subs) != len(forms):
        raise ValueError("need one form per factor")
    _require_product([s for s in subs if isinstance(s, Subalgebra)])
    subs = [s if isinstance(s, Subalgebra) else whole(s) for s in subs]
    prod = direct_sum([s.table for s in subs])
    parts = [index_estimate(s, **kw).index for s in subs]
    total = index_estimate(prod, **kw).index
    f = [x for form in forms for x in form]
    regular_parts = all(is_regular(s, g, i) for s, g, i in zip(subs, forms, parts))
    return total == sum(parts) and is_regular(prod, f, total) == regular_parts


def _require_product(subs: Sequence[Subalgebra]) -> None:
    # factors sharing a parent must commute and be independent
    for a in range(len(subs)):
        for b in range(a + 1, len(subs)):
            x, y = subs[a], subs[b]
            if x.parent is not y.parent:
                continue
            if any(x.parent.bracket_vectors(u, v) for u in x.members for v in y.members):
                raise ValueError(f"{x.name} and {y.name} do not commute")
            if set().union(*map(set, x.members)) & set().union(*map(set, y.members)):
                raise ValueError(f"{x.name} and {y.name} overlap")
