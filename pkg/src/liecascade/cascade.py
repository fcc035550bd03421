"""Maximal strongly orthogonal root sets by recursive highest roots.

Each node of the cascade is labelled by a word ``K = (i, j, k, ...)``: ``i``
picks an irreducible component of the root system, ``j`` a component of the
orthogonal complement of its highest root, and so on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .roots import (
    Root,
    RootSystem,
    add,
    classify,
    highest_root,
    inner_product,
    irreducible_components,
    is_root,
    orthogonal_subsystem,
    sub,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class CascadeNode:
    word: Word
    beta: Root
    subsystem: tuple[Root, ...] = field(repr=False)  # positive roots of Delta_K
    parent: Word | None
    type_label: str

    @property
    def depth(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class GammaSet:
    index: Word
    roots: tuple[Root, ...]


@dataclass
class Cascade:
    rs: RootSystem
    nodes: dict[Word, CascadeNode]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[CascadeNode]:
        return iter(self.nodes.values())

    def __getitem__(self, word) -> CascadeNode:
        word = as_word(word)
        try:
            return self.nodes[word]
        except KeyError:
            raise KeyError(f"unknown cascade index {format_word(word)}") from None

    @property
    def betas(self) -> list[Root]:
        return [n.beta for n in self.nodes.values()]

    def children(self, word) -> list[CascadeNode]:
        word = as_word(word)
        return [n for n in self.nodes.values() if n.parent == word]

    def to_json(self) -> list[dict]:
        def tree(node):
            return {
                "word": format_word(node.word),
                "beta": list(node.beta),
                "type": node.type_label,
                "children": [tree(c) for c in self.children(node.word)],
            }
        return [tree(n) for n in self.nodes.values() if n.parent is None]


def as_word(word) -> Word:
    if isinstance(word, str):
        return tuple(int(x) for x in word.split("."))
    return tuple(word)


def format_word(word: Word) -> str:
    return ".".join(str(x) for x in word)


def build_cascade(rs: RootSystem, positive: Iterable[Root] | None = None) -> Cascade:
    """Recursive highest-root construction on ``rs`` (or on a closed subsystem of it)."""
    nodes: dict[Word, CascadeNode] = {}
    todo: list[tuple[Word | None, tuple[Root, ...]]] = [
        (None, tuple(rs.positive_roots if positive is None else positive))]
    while todo:
        parent, pos = todo.pop(0)
        for k, comp in enumerate(irreducible_components(rs, pos), start=1):
            word = (k,) if parent is None else parent + (k,)
            beta = highest_root(rs, comp)
            nodes[word] = CascadeNode(word, beta, comp, parent, classify(rs, comp))
            rest = orthogonal_subsystem(rs, beta, comp)
            if rest:
                todo.append((word, rest))
    return Cascade(rs, dict(sorted(nodes.items())))


def cascade_leq(c: Cascade, l, k) -> bool:
    """``l <= k`` iff ``l`` is a prefix of ``k``."""
    l, k = c[l].word, c[k].word
    return k[:len(l)] == l


def parabolic_closure(c: Cascade, k) -> set[Word]:
    """All L in I(Delta) with L <= K."""
    w = c[k].word
    return {w[:i] for i in range(1, len(w) + 1)}


def gamma_set(c: Cascade, k) -> GammaSet:
    node = c[k]
    rs = c.rs
    roots = tuple(g for g in node.subsystem if inner_product(rs, g, node.beta) > 0)
    return GammaSet(node.word, roots)


def strongly_orthogonal(rs: RootSystem, a: Root, b: Root) -> bool:
    return not is_root(rs, add(a, b)) and not is_root(rs, sub(a, b))


def maximality_witnesses(c: Cascade) -> list[Root]:
    """Positive roots outside the cascade strongly orthogonal to every cascade root.

    An empty list certifies that the cascade cannot be enlarged.
    """
    betas = set(c.betas)
    return [a for a in c.rs.positive_roots
            if a not in betas and all(strongly_orthogonal(c.rs, a, b) for b in betas)]
