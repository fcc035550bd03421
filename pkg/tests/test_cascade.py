import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecascade.cascade import (
    build_cascade,
    cascade_leq,
    format_word,
    gamma_set,
    maximality_witnesses,
    parabolic_closure,
    strongly_orthogonal,
)
from liecascade.checks import expected_cascade_size
from liecascade.roots import highest_root, inner_product, is_root, parse_type

from conftest import ALL_TYPES, orbit_roots


def _sum(*terms):
    return tuple(map(sum, zip(*terms)))


def _e(n, i, k=1):
    return tuple(k if j == i - 1 else 0 for j in range(n))


@pytest.fixture(scope="module")
def cascades(systems):
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_cascade(systems(name))
        return cache[name]
    return get


def _max_strongly_orthogonal(rs):
    """Size of the largest pairwise strongly orthogonal set of positive roots, by exhaustive search."""
    roots = orbit_roots(rs.cartan)
    pos = sorted(a for a in roots if min(a) >= 0)
    ok = {(a, b): _sum(a, b) not in roots and tuple(x - y for x, y in zip(a, b)) not in roots
          for a in pos for b in pos}
    best = 0

    def grow(chosen, rest):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(rest) <= best:
            return
        for i, a in enumerate(rest):
            grow(chosen + [a], [b for b in rest[i + 1:] if ok[a, b]])
    grow([], pos)
    return best


class TestPublishedCascades:
    def test_a1(self, cascades):
        c = cascades("A1")
        assert len(c) == 1 and c.betas == [(1,)]

    def test_g2(self, cascades):
        assert set(cascades("G2").betas) == {(3, 2), (1, 0)}

    def test_f4(self, cascades):
        assert set(cascades("F4").betas) == {(2, 3, 4, 2), (0, 1, 2, 2), (0, 1, 2, 0), (0, 1, 0, 0)}

    def test_e6(self, cascades):
        assert set(cascades("E6").betas) == {
            (1, 2, 2, 3, 2, 1), (1, 0, 1, 1, 1, 1), (0, 0, 1, 1, 1, 0), (0, 0, 0, 1, 0, 0)}

    def test_e7(self, cascades):
        e = lambda i: _e(7, i)  # noqa: E731
        assert set(cascades("E7").betas) == {
            (2, 2, 3, 4, 3, 2, 1), (0, 1, 1, 2, 2, 2, 1), (0, 1, 1, 2, 1, 0, 0),
            e(3), e(7), e(5), e(2)}

    def test_e8(self, cascades):
        e = lambda i: _e(8, i)  # noqa: E731
        got = set(cascades("E8").betas)
        # the second root listed in print drops its a3 term; that vector is not a root
        assert not is_root(cascades("E8").rs, (2, 2, 0, 3, 2, 2, 1, 0))
        assert got == {
            (2, 3, 4, 6, 5, 4, 3, 2), (2, 2, 3, 4, 3, 2, 1, 0), (0, 1, 1, 2, 2, 2, 1, 0),
            (0, 1, 1, 2, 1, 0, 0, 0), e(3), e(7), e(5), e(2)}

    @pytest.mark.parametrize("r", range(1, 9))
    def test_a_family(self, cascades, r):
        want = {_sum(*(_e(r, k) for k in range(j, r + 2 - j))) for j in range(1, (r + 1) // 2 + 1)}
        assert set(cascades(f"A{r}").betas) == want

    def test_a4(self, cascades):
        assert set(cascades("A4").betas) == {(1, 1, 1, 1), (0, 1, 1, 0)}

    @pytest.mark.parametrize("r", range(2, 9))
    def test_c_family(self, cascades, r):
        want = {_sum(_e(r, r), *(_e(r, k, 2) for k in range(j, r))) for j in range(1, r + 1)}
        assert set(cascades(f"C{r}").betas) == want

    @pytest.mark.parametrize("r", range(2, 9))
    def test_b_family(self, cascades, r):
        want = set()
        for j in range(1, r // 2 + 1):
            want.add(_sum(_e(r, 2 * j - 1), *(_e(r, i, 2) for i in range(2 * j, r + 1))))
            want.add(_e(r, 2 * j - 1))
        if r % 2:
            # odd rank leaves the short simple root on its own
            want.add(_e(r, r))
        assert set(cascades(f"B{r}").betas) == want


class TestSizes:
    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_cardinality(self, cascades, name):
        assert len(cascades(name)) == expected_cascade_size(parse_type(name))

    @pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                      "C2", "C3", "C4", "D4", "D5", "G2"])
    def test_is_maximum(self, cascades, systems, name):
        assert len(cascades(name)) == _max_strongly_orthogonal(systems(name))

    def test_d_family(self, cascades):
        assert [len(cascades(f"D{r}")) for r in range(3, 9)] == [2, 4, 4, 6, 6, 8]


class TestInvariants:
    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_strongly_orthogonal_and_maximal(self, cascades, name):
        c = cascades(name)
        rs = c.rs
        for a, b in itertools.combinations(c.betas, 2):
            assert strongly_orthogonal(rs, a, b)
            assert inner_product(rs, a, b) == 0
        assert maximality_witnesses(c) == []

    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_gamma_partition(self, cascades, name):
        c = cascades(name)
        counts = Counter(g for n in c for g in gamma_set(c, n.word).roots)
        assert set(counts) == set(c.rs.positive_roots)
        assert set(counts.values()) == {1}

    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_heisenberg_and_pairing(self, cascades, name):
        c = cascades(name)
        rs = c.rs
        for node in c:
            beta = node.beta
            gam = set(gamma_set(c, node.word).roots)
            assert beta in gam
            half = inner_product(rs, beta, beta)
            for g in gam - {beta}:
                assert 2 * inner_product(rs, g, beta) == half
                assert tuple(x - y for x, y in zip(beta, g)) in gam

    @pytest.mark.parametrize("name", ["B5", "D6", "E7", "F4"])
    def test_node_is_highest_of_its_subsystem(self, cascades, name):
        c = cascades(name)
        for node in c:
            assert node.beta == highest_root(c.rs, node.subsystem)
            if node.parent is not None:
                assert set(node.subsystem) <= set(c[node.parent].subsystem)

    def test_highest_at_root(self, cascades, systems):
        for name in ("B3", "D5", "E6"):
            assert cascades(name)[(1,)].beta == highest_root(systems(name))

    @settings(max_examples=40, deadline=None)
    @given(name=st.sampled_from(ALL_TYPES), data=st.data())
    def test_siblings_incomparable(self, cascades, name, data):
        c = cascades(name)
        words = [n.word for n in c]
        l, k = data.draw(st.sampled_from(words)), data.draw(st.sampled_from(words))
        assert cascade_leq(c, l, l)
        assert cascade_leq(c, l, k) == (k[:len(l)] == l)
        if cascade_leq(c, l, k) and cascade_leq(c, k, l):
            assert l == k
        if len(l) == len(k) and l != k:
            assert not cascade_leq(c, l, k) and not cascade_leq(c, k, l)


class TestOrder:
    def test_root_below_everything(self, cascades):
        c = cascades("B6")
        for n in c:
            assert cascade_leq(c, (1,), n.word)

    def test_d4_siblings(self, cascades):
        c = cascades("D4")
        kids = [n.word for n in c.children((1,))]
        assert len(kids) == 3
        for a, b in itertools.permutations(kids, 2):
            assert not cascade_leq(c, a, b)

    def test_closure_of_root(self, cascades):
        assert parabolic_closure(cascades("B6"), "1") == {(1,)}

    def test_b6_chain(self, cascades):
        c = cascades("B6")
        deep = [n for n in c if n.depth == 3]
        assert deep
        for node in deep:
            chain, w = set(), node.word
            while w is not None:
                chain.add(w)
                w = c[w].parent
            assert parabolic_closure(c, node.word) == chain
            assert len(chain) == 3

    def test_string_and_tuple_lookup(self, cascades):
        c = cascades("D4")
        assert c["1.2"] is c[(1, 2)]
        assert format_word((1, 2)) == "1.2"

    @pytest.mark.parametrize("fn", [lambda c: c["9"], lambda c: cascade_leq(c, "1", "7.7"),
                                    lambda c: parabolic_closure(c, (2,)),
                                    lambda c: gamma_set(c, "1.1.1.1")])
    def test_unknown_index(self, cascades, fn):
        with pytest.raises(KeyError):
            fn(cascades("A3"))


class TestGamma:
    def test_a1(self, cascades):
        assert gamma_set(cascades("A1"), "1").roots == ((1,),)

    def test_g2_root_node(self, cascades):
        roots = set(gamma_set(cascades("G2"), "1").roots)
        assert len(roots) == 5
        assert (1, 0) not in roots

    def test_c3_partition_total(self, cascades):
        c = cascades("C3")
        assert sum(len(gamma_set(c, n.word).roots) for n in c) == 9


def test_json_tree(cascades):
    tree = cascades("D4").to_json()
    assert len(tree) == 1
    assert tree[0]["beta"] == [1, 2, 1, 1]
    assert [ch["type"] for ch in tree[0]["children"]] == ["A1", "A1", "A1"]
