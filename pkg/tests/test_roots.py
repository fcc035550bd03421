import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecascade.roots import (
    SimpleType,
    cartan_matrix,
    classify,
    highest_root,
    inner_product,
    irreducible_components,
    is_root,
    orthogonal_subsystem,
    parse_type,
    root_string,
    root_system,
)

from conftest import ALL_TYPES, SMALL_TYPES, oracle_positive, oracle_string, orbit_roots


class TestTypes:
    @pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9),
                                     ("F", 3), ("G", 3), ("H", 3)])
    def test_invalid_rank_rejected(self, bad):
        with pytest.raises(ValueError):
            SimpleType(*bad)

    @pytest.mark.parametrize("text,want", [("B5", ("B", 5)), ("e6", ("E", 6)), ("A_3", ("A", 3))])
    def test_parse(self, text, want):
        assert parse_type(text) == SimpleType(*want)

    @pytest.mark.parametrize("text", ["", "Z9", "A", "5B", "B1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_type(text)


class TestCartan:
    def test_a1(self):
        assert cartan_matrix(SimpleType("A", 1)) == ((2,),)

    def test_a2(self, systems):
        assert cartan_matrix(SimpleType("A", 2)) == ((2, -1), (-1, 2))
        assert len(oracle_positive(systems("A2"))) == 3

    def test_g2_orientation(self, systems):
        # first simple root short, second long
        assert cartan_matrix(SimpleType("G", 2)) == ((2, -1), (-3, 2))
        rs = systems("G2")
        assert inner_product(rs, (1, 0), (1, 0)) == 2
        assert inner_product(rs, (0, 1), (0, 1)) == 6
        assert len(oracle_positive(rs)) == 6

    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_symmetrisable_and_short_roots_normalised(self, systems, name):
        rs = systems(name)
        n = rs.rank
        for i, j in itertools.product(range(n), repeat=2):
            assert rs.cartan[i][j] * rs.symmetrizer[j] == rs.cartan[j][i] * rs.symmetrizer[i]
        assert min(rs.gram[i][i] for i in range(n)) == 2


class TestEnumeration:
    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_matches_weyl_orbit(self, systems, name):
        rs = systems(name)
        assert set(rs.positive_roots) == oracle_positive(rs)
        assert len(set(rs.positive_roots)) == len(rs.positive_roots)

    def test_a2_roots(self, systems):
        assert systems("A2").positive_roots == ((1, 0), (0, 1), (1, 1))

    def test_g2_contains_highest(self, systems):
        rs = systems("G2")
        assert len(rs.positive_roots) == 6
        assert (3, 2) in rs.positive_roots

    def test_b2_count(self, systems):
        assert len(systems("B2").positive_roots) == 4

    @pytest.mark.parametrize("name", ["A4", "B3", "F4", "E6"])
    def test_graded_order(self, systems, name):
        roots = systems(name).positive_roots
        heights = [sum(a) for a in roots]
        assert heights == sorted(heights)


class TestInnerProduct:
    def test_a2_pairing(self, systems):
        assert inner_product(systems("A2"), (1, 0), (0, 1)) == -1

    def test_dimension_mismatch(self, systems):
        with pytest.raises(ValueError):
            inner_product(systems("A2"), (1, 0, 0), (0, 1))

    @settings(max_examples=60, deadline=None)
    @given(name=st.sampled_from(SMALL_TYPES), data=st.data())
    def test_symmetric_bilinear(self, systems, name, data):
        rs = systems(name)
        vec = st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank).map(tuple)
        a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
        k = data.draw(st.integers(-4, 4))
        assert inner_product(rs, a, b) == inner_product(rs, b, a)
        lhs = inner_product(rs, tuple(x + k * y for x, y in zip(a, b)), c)
        assert lhs == inner_product(rs, a, c) + k * inner_product(rs, b, c)


class TestIsRoot:
    def test_zero(self, systems):
        assert not is_root(systems("A2"), (0, 0))

    def test_sums(self, systems):
        assert is_root(systems("A2"), (1, 1))
        assert is_root(systems("A2"), (-1, -1))
        assert is_root(systems("G2"), (1, 1))

    @pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
    def test_no_doubles(self, systems, name):
        rs = systems(name)
        for a in rs.positive_roots:
            assert not is_root(rs, tuple(2 * x for x in a))

    @pytest.mark.parametrize("name", ["B3", "G2", "D4"])
    def test_agrees_with_orbit(self, systems, name):
        rs = systems(name)
        roots = orbit_roots(rs.cartan)
        for v in itertools.product(range(-3, 4), repeat=rs.rank):
            assert is_root(rs, v) == (v in roots)


class TestRootString:
    def test_a2(self, systems):
        assert root_string(systems("A2"), (1, 0), (0, 1)) == (0, 1)

    def test_b2_orthogonal_but_not_strongly(self, systems):
        rs = systems("B2")
        # short a2 through the short root a1 + a2
        assert inner_product(rs, (0, 1), (1, 1)) == 0
        assert root_string(rs, (0, 1), (1, 1)) == (-1, 1)

    @pytest.mark.parametrize("pair", [((1, 0), (1, 0)), ((1, 0), (-1, 0))])
    def test_rejects_equal(self, systems, pair):
        with pytest.raises(ValueError):
            root_string(systems("A2"), *pair)

    def test_rejects_non_root(self, systems):
        with pytest.raises(ValueError):
            root_string(systems("A2"), (2, 0), (0, 1))

    @pytest.mark.parametrize("name", ["A3", "B2", "B3", "C3", "G2", "F4"])
    def test_against_bruteforce(self, systems, name):
        rs = systems(name)
        roots = orbit_roots(rs.cartan)
        for a in rs.positive_roots:
            for b in roots:
                if b in (a, tuple(-x for x in a)):
                    continue
                p, q = root_string(rs, a, b)
                assert (p, q) == oracle_string(rs, a, b)
                assert p + q == -2 * inner_product(rs, b, a) // inner_product(rs, a, a)


class TestHighestRoot:
    def test_known(self, systems):
        assert highest_root(systems("A2")) == (1, 1)
        assert highest_root(systems("G2")) == (3, 2)
        assert highest_root(systems("E6")) == (1, 2, 2, 3, 2, 1)

    def test_reducible_rejected(self, systems):
        rs = systems("D4")
        perp = orthogonal_subsystem(rs, highest_root(rs))
        with pytest.raises(ValueError):
            highest_root(rs, perp)

    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_properties(self, systems, name):
        rs = systems(name)
        beta = highest_root(rs)
        bb = inner_product(rs, beta, beta)
        assert min(beta) >= 1
        assert all(inner_product(rs, beta, s) >= 0 for s in rs.simple_roots)
        for a in rs.positive_roots:
            assert min(x - y for x, y in zip(beta, a)) >= 0
            assert inner_product(rs, a, a) <= bb
            if a != beta:
                ab = inner_product(rs, a, beta)
                assert 2 * ab in (0, bb)
                if ab > 0:
                    assert is_root(rs, tuple(x - y for x, y in zip(beta, a)))


def _brute_perp(rs, beta):
    roots = orbit_roots(rs.cartan)
    return {a for a in roots if min(a) >= 0 and inner_product(rs, a, beta) == 0}


class TestSubsystems:
    def test_irreducible_whole(self, systems):
        rs = systems("B3")
        assert irreducible_components(rs) == [rs.positive_roots]

    def test_a3_perp(self, systems):
        rs = systems("A3")
        perp = _brute_perp(rs, (1, 1, 1))
        assert perp == {(0, 1, 0)}
        comps = irreducible_components(rs, orthogonal_subsystem(rs, highest_root(rs)))
        assert comps == [((0, 1, 0),)]

    def test_d4_perp(self, systems):
        rs = systems("D4")
        perp = _brute_perp(rs, (1, 2, 1, 1))
        assert perp == {(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}
        comps = irreducible_components(rs, orthogonal_subsystem(rs, highest_root(rs)))
        assert [classify(rs, c) for c in comps] == ["A1", "A1", "A1"]
        assert sorted(map(set, comps), key=min) == sorted(({a} for a in perp), key=min)

    def test_empty_perps(self, systems):
        for name in ("A1", "A2"):
            rs = systems(name)
            assert orthogonal_subsystem(rs, highest_root(rs)) == ()

    def test_c3_perp(self, systems):
        rs = systems("C3")
        perp = orthogonal_subsystem(rs, (2, 2, 1))
        assert set(perp) == _brute_perp(rs, (2, 2, 1))
        assert set(perp) == {(0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 2, 1)}
        assert classify(rs, perp) == "C2"

    @pytest.mark.parametrize("name", ["B4", "C4", "D5", "F4", "E6", "E7"])
    def test_perp_is_closed_subsystem(self, systems, name):
        rs = systems(name)
        perp = set(orthogonal_subsystem(rs, highest_root(rs)))
        full = perp | {tuple(-x for x in a) for a in perp}
        for a, b in itertools.product(full, repeat=2):
            s = tuple(x + y for x, y in zip(a, b))
            if is_root(rs, s):
                assert s in full
        beta = highest_root(rs)
        for a in perp:
            assert not is_root(rs, tuple(x + y for x, y in zip(a, beta)))
            assert not is_root(rs, tuple(x - y for x, y in zip(a, beta)))

    @pytest.mark.parametrize("name,labels", [
        ("B5", ["A1", "B3"]), ("E7", ["D6"]), ("E8", ["E7"]), ("F4", ["C3"]), ("G2", ["A1"]),
        ("A5", ["A3"]), ("D6", ["A1", "D4"]),
    ])
    def test_perp_types(self, systems, name, labels):
        rs = systems(name)
        comps = irreducible_components(rs, orthogonal_subsystem(rs, highest_root(rs)))
        assert [classify(rs, c) for c in comps] == labels
