"""Unit and property tests for the SPG domain types and verifiers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_force_endpoint_violations, spg_instances
from spgraphs import (
    BudgetExceededError,
    FacetSet,
    InvalidSpgError,
    Spg,
    Spindle,
    SymbolTable,
    check_adjacency,
    check_connectivity,
    check_dimension_reduction,
    check_endpoint_count,
    check_partition,
    check_singleton,
    check_strong_adjacency,
    graph_distance,
    max_degree,
    restrict,
    validate,
)


def fs(*elements):
    return FacetSet(elements)


def path_spg(*sets, n=None):
    size = max(max(s.elements) for s in sets) + 1 if n is None else n
    return Spg.build(
        SymbolTable.alphabetic(size),
        len(sets[0]),
        [[s] for s in sets],
        [(i, i + 1) for i in range(len(sets) - 1)],
    )


GOOD_PATH = path_spg(fs(0, 1), fs(1, 2), fs(2, 3))      # {a,b}-{b,c}-{c,d}
BAD_PATH = path_spg(fs(0, 1), fs(2, 3), fs(1, 2))       # {a,b}-{c,d}-{b,c}


class TestSymbolTable:
    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            SymbolTable(("a", "a"))

    def test_empty_allowed_for_full_restrictions(self):
        assert SymbolTable(()).n == 0

    def test_alphabetic(self):
        t = SymbolTable.alphabetic(3)
        assert t.labels == ("a", "b", "c")
        assert t.index("b") == 1
        with pytest.raises(KeyError):
            t.index("z")

    def test_lifted_layout(self):
        t = SymbolTable(("a", "b")).lifted(2)
        # base-major: copy of symbol x in row j sits at x*r + (j-1)
        assert t.labels == ("a@1", "a@2", "b@1", "b@2")


class TestFacetSet:
    def test_canonical_order(self):
        assert fs(3, 1, 2).elements == (1, 2, 3)
        assert fs(1, 2, 3) == fs(3, 2, 1)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            fs(1, 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            fs(-1, 2)

    def test_set_operations(self):
        a, b = fs(0, 1, 2), fs(1, 2, 3)
        assert a.intersection_size(b) == 2
        assert a.without(b) == fs(0)
        assert fs(1, 2).issubset(a)
        assert not fs(3).issubset(a)

    def test_render(self):
        assert fs(0, 2).render(SymbolTable.alphabetic(3)) == "{a,c}"
        assert fs(0, 2).render() == "{0,2}"

    @given(st.sets(st.integers(0, 40), max_size=10),
           st.sets(st.integers(0, 40), max_size=10))
    def test_mask_intersection_matches_set_intersection(self, xs, ys):
        a, b = FacetSet(xs), FacetSet(ys)
        assert a.intersection_size(b) == len(xs & ys)


class TestValidate:
    def test_single_vertex_holds(self):
        spg = Spg.build(SymbolTable.alphabetic(2), 2, [[fs(0, 1)]])
        assert validate(spg).holds

    def test_duplicate_set_across_vertices(self):
        spg = Spg.build(
            SymbolTable.alphabetic(2), 2, [[fs(0, 1)], [fs(0, 1)]], [(0, 1)])
        report = validate(spg)
        assert not report.holds
        assert ("duplicate-set", fs(0, 1), 0, 1) in report.witnesses
        assert not check_partition(spg).holds

    def test_disconnected(self):
        spg = Spg.build(
            SymbolTable.alphabetic(4), 2, [[fs(0, 1)], [fs(2, 3)]])
        report = validate(spg)
        assert not report.holds
        assert any(w[0] == "disconnected" for w in report.witnesses)

    def test_restriction_exempt_from_connectivity(self):
        spg = Spg.build(
            SymbolTable.alphabetic(4), 2, [[fs(0, 1)], [fs(2, 3)]],
            is_restriction=True)
        assert validate(spg).holds
        assert not check_connectivity(spg).holds

    def test_wrong_size_and_range(self):
        spg = Spg.build(
            SymbolTable.alphabetic(2), 2, [[fs(0, 1)], [fs(0,)]], [(0, 1)])
        assert any(w[0] == "wrong-size-set" for w in validate(spg).witnesses)
        spg = Spg.build(SymbolTable.alphabetic(2), 2, [[fs(0, 5)]])
        assert any(w[0] == "symbol-out-of-range" for w in validate(spg).witnesses)

    def test_graph_shape_violations(self):
        table = SymbolTable.alphabetic(4)
        spg = Spg(table, 2, ((fs(0, 1),), (fs(2, 3),)), ((0, 0), (0, 1), (0, 1)))
        kinds = {w[0] for w in validate(spg).witnesses}
        assert "self-loop" in kinds
        assert "parallel-edge" in kinds
        spg = Spg(table, 2, ((fs(0, 1),),), ((0, 7),))
        assert any(w[0] == "edge-endpoint-out-of-range"
                   for w in validate(spg).witnesses)

    def test_empty_vertex_and_dimension(self):
        table = SymbolTable.alphabetic(2)
        spg = Spg(table, 2, ((fs(0, 1),), ()), ((0, 1),))
        assert any(w[0] == "empty-vertex" for w in validate(spg).witnesses)
        spg = Spg(table, 3, ((fs(0, 1, 2),),), ())
        assert any(w[0] == "dimension-out-of-range"
                   for w in validate(spg).witnesses)

    @given(spg_instances())
    def test_generated_instances_valid(self, spg):
        assert validate(spg).holds
        # partition: every set occurs exactly once
        family = spg.family()
        assert len(set(family)) == len(family)


class TestAdjacency:
    def test_ordered_path_holds(self):
        assert check_adjacency(GOOD_PATH).holds

    def test_reordered_path_fails(self):
        report = check_adjacency(BAD_PATH)
        assert not report.holds
        assert ("non-adjacent-pair", fs(0, 1), fs(1, 2), 0, 2) in report.witnesses

    def test_same_vertex_pairs_allowed(self):
        spg = Spg.build(
            SymbolTable.alphabetic(3), 2, [[fs(0, 1), fs(1, 2)]])
        assert check_adjacency(spg).holds

    def test_rejects_invalid(self):
        broken = Spg.build(
            SymbolTable.alphabetic(4), 2, [[fs(0, 1)], [fs(2, 3)]])
        with pytest.raises(InvalidSpgError):
            check_adjacency(broken)


class TestStrongAdjacency:
    def test_overlapping_edge_holds(self):
        assert check_strong_adjacency(path_spg(fs(0, 1), fs(1, 2))).holds

    def test_disjoint_edge_fails(self):
        report = check_strong_adjacency(path_spg(fs(0, 1), fs(2, 3)))
        assert not report.holds
        assert ("unwitnessed-edge", 0, 1) in report.witnesses

    @given(spg_instances())
    @settings(max_examples=60)
    def test_strong_implies_adjacency(self, spg):
        if check_strong_adjacency(spg).holds:
            assert check_adjacency(spg).holds


class TestEndpointCount:
    def test_path_family_holds(self):
        assert check_endpoint_count(GOOD_PATH).holds

    def test_three_sets_through_one_symbol(self):
        spg = Spg.build(
            SymbolTable.alphabetic(4), 2,
            [[fs(0, 1)], [fs(1, 2)], [fs(1, 3)]],
            [(0, 1), (1, 2)])
        report = check_endpoint_count(spg)
        assert not report.holds
        (witness,) = report.witnesses
        assert witness[0] == "over-counted-face"
        assert witness[1] == fs(1)
        assert set(witness[2]) == {fs(0, 1), fs(1, 2), fs(1, 3)}

    @given(spg_instances(max_symbols=7, max_sets=8))
    @settings(max_examples=80)
    def test_agrees_with_brute_force(self, spg):
        report = check_endpoint_count(spg)
        expected = brute_force_endpoint_violations(spg)
        got = {frozenset(w[1].elements) for w in report.witnesses}
        assert got == expected
        assert report.holds == (not expected)


class TestSingleton:
    def test_all_singleton_path(self):
        assert check_singleton(GOOD_PATH).holds

    def test_vertex_with_two_sets(self):
        spg = Spg.build(
            SymbolTable.alphabetic(3), 2, [[fs(0, 1), fs(1, 2)]])
        report = check_singleton(spg)
        assert not report.holds
        assert ("non-singleton-vertex", 0, 2) in report.witnesses


class TestRestrict:
    def test_empty_face_is_identity(self):
        result = restrict(GOOD_PATH, fs())
        assert result.vertices == GOOD_PATH.vertices
        assert result.edges == GOOD_PATH.edges
        assert result.symbols == GOOD_PATH.symbols
        assert result.is_restriction

    def test_ordered_path_restriction_connected(self):
        result = restrict(GOOD_PATH, fs(1))  # {b}
        assert result.dimension == 1
        assert result.symbols.labels == ("a", "c", "d")
        rendered = [[f.render(result.symbols) for f in v] for v in result.vertices]
        assert rendered == [["{a}"], ["{c}"]]
        assert result.edges == ((0, 1),)
        assert check_connectivity(result).holds

    def test_reordered_path_restriction_disconnects(self):
        result = restrict(BAD_PATH, fs(1))  # middle vertex drops out
        assert len(result.vertices) == 2
        assert result.edges == ()
        assert not check_connectivity(result).holds

    def test_face_contained_nowhere(self):
        assert restrict(GOOD_PATH, fs(0, 3)) is None

    def test_face_too_large(self):
        with pytest.raises(ValueError):
            restrict(GOOD_PATH, fs(0, 1, 2))

    def test_full_member_face_gives_dimension_zero(self):
        result = restrict(GOOD_PATH, fs(0, 1))
        assert result.dimension == 0
        assert result.vertices == ((fs(),),)
        assert validate(result).holds

    @given(spg_instances(), st.data())
    @settings(max_examples=60)
    def test_definition_replay(self, spg, data):
        face_size = data.draw(st.integers(0, spg.dimension))
        face_pool = sorted({e for s in spg.family() for e in s.elements})
        if len(face_pool) < face_size:
            return
        face = FacetSet(data.draw(
            st.lists(st.sampled_from(face_pool), min_size=face_size,
                     max_size=face_size, unique=True)))
        result = restrict(spg, face)
        expected = {
            frozenset(spg.symbols.labels[e] for e in s.elements if e not in face)
            for s in spg.family() if face.issubset(s)
        }
        if result is None:
            assert expected == set()
        else:
            got = {
                frozenset(result.symbols.labels[e] for e in s.elements)
                for s in result.family()
            }
            assert got == expected


class TestDimensionReduction:
    def test_single_vertex_holds(self):
        spg = Spg.build(SymbolTable.alphabetic(2), 2, [[fs(0, 1)]])
        assert check_dimension_reduction(spg).holds

    def test_ordered_path_holds(self):
        assert check_dimension_reduction(GOOD_PATH).holds

    def test_reordered_path_fails_on_shared_symbol(self):
        report = check_dimension_reduction(BAD_PATH)
        assert not report.holds
        assert ("disconnecting-face", fs(1)) in report.witnesses

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError):
            check_dimension_reduction(GOOD_PATH, budget=2)


class TestGraphMetrics:
    def test_distance_basics(self):
        assert graph_distance(GOOD_PATH, 1, 1) == 0
        assert graph_distance(GOOD_PATH, 0, 1) == 1
        assert graph_distance(GOOD_PATH, 0, 2) == 2

    def test_distance_bad_index(self):
        with pytest.raises(ValueError):
            graph_distance(GOOD_PATH, 0, 9)

    def test_distance_unreachable(self):
        spg = Spg.build(
            SymbolTable.alphabetic(4), 2, [[fs(0, 1)], [fs(2, 3)]],
            is_restriction=True)
        with pytest.raises(ValueError):
            graph_distance(spg, 0, 1)

    def test_max_degree(self):
        assert max_degree(GOOD_PATH) == 2
        star = Spg.build(
            SymbolTable.alphabetic(8), 2,
            [[fs(0, 1)], [fs(2, 3)], [fs(4, 5)], [fs(6, 7)]],
            [(0, 1), (0, 2), (0, 3)])
        assert max_degree(star) == 3
        single = Spg.build(SymbolTable.alphabetic(2), 2, [[fs(0, 1)]])
        assert max_degree(single) == 0

    @given(spg_instances(), st.data())
    @settings(max_examples=40)
    def test_distance_is_a_metric(self, spg, data):
        k = len(spg.vertices)
        u = data.draw(st.integers(0, k - 1))
        v = data.draw(st.integers(0, k - 1))
        w = data.draw(st.integers(0, k - 1))
        duv = graph_distance(spg, u, v)
        assert duv == graph_distance(spg, v, u)
        assert (duv == 0) == (u == v)
        assert duv <= graph_distance(spg, u, w) + graph_distance(spg, w, v)


class TestSpindleType:
    def test_apices_must_cover_symbols(self):
        spg = path_spg(fs(0, 1), fs(1, 2), n=4)
        with pytest.raises(ValueError):
            Spindle(spg, fs(0, 1), fs(1, 2))

    def test_requires_doubled_symbols(self):
        spg = path_spg(fs(0, 1), fs(1, 2), n=3)
        with pytest.raises(ValueError):
            Spindle(spg, fs(0, 1), fs(1, 2))

    def test_length(self):
        spg = Spg.build(
            SymbolTable.alphabetic(4), 2,
            [[fs(0, 1)], [fs(1, 2)], [fs(2, 3)]], [(0, 1), (1, 2)])
        spindle = Spindle(spg, fs(0, 1), fs(2, 3))
        assert spindle.length() == 2
