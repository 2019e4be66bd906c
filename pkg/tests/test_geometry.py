from itertools import combinations

import pytest

from splithex.algebra import from_gf2, hermitian, symplectic, to_gf2, v_scale
from splithex.geometry import (
    all_pg_lines,
    enumerate_strata,
    exterior_points,
    hyperoval_partitions,
    nonzero_vectors,
    perp_line,
    pg_line_through,
    point_vectors,
    proj_rep,
    projective_points,
    self_polar_triangles,
    span_perp,
    ti_lines,
    ti_planes,
    unital_points,
)


def test_nonzero_vectors_count_and_order():
    vecs = nonzero_vectors()
    assert len(vecs) == 63
    assert len(set(vecs)) == 63
    assert list(vecs) == sorted(vecs, key=to_gf2)


def test_strata_counts_against_support_oracle():
    strata = enumerate_strata()
    assert len(strata.isotropic) == 27
    assert len(strata.norm_one) == 36
    # oracle: the norm is the parity of the support
    even_support = {
        v for v in nonzero_vectors() if sum(1 for c in v if c != 0) % 2 == 0
    }
    assert strata.isotropic == even_support
    assert strata.norm_one == set(nonzero_vectors()) - even_support


def test_strata_membership_examples():
    strata = enumerate_strata()
    assert (1, 1, 0) in strata.isotropic
    assert (1, 1, 1) in strata.norm_one
    assert strata.oval_vectors is None and strata.twin_vectors is None


def test_projective_points():
    pts = projective_points()
    assert len(pts) == 21
    for p in pts:
        first = next(c for c in p if c != 0)
        assert first == 1
        assert len(set(point_vectors(p))) == 3
    covered = {v for p in pts for v in point_vectors(p)}
    assert covered == set(nonzero_vectors())


def test_unital_and_exterior_points():
    assert len(unital_points()) == 9
    assert len(exterior_points()) == 12
    assert 9 * 3 == len(enumerate_strata().isotropic)


def test_proj_rep_idempotent_and_scale_invariant():
    for v in nonzero_vectors():
        p = proj_rep(v)
        assert proj_rep(p) == p
        for c in (1, 2, 3):
            assert proj_rep(v_scale(c, v)) == p


def test_perp_line_against_enumeration_oracle():
    for p in projective_points():
        expected = frozenset(
            q for q in projective_points() if hermitian(p, q) == 0
        )
        assert perp_line(p) == expected
        assert len(expected) == 5


def test_perp_line_examples():
    p = proj_rep((1, 1, 0))
    assert hermitian(p, p) == 0
    assert p in perp_line(p)
    non_iso = sum(1 for q in perp_line(p) if hermitian(q, q) == 1)
    assert non_iso == 4

    e1 = (1, 0, 0)
    line = perp_line(e1)
    assert e1 not in line
    assert line == frozenset(q for q in projective_points() if q[0] == 0)


def test_span_perp_examples_and_oracle():
    assert span_perp((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert span_perp((1, 0, 0), (0, 1, 1)) == (0, 1, 1)

    a, b = (1, 1, 0), (1, 0, 1)
    u = span_perp(a, b)
    matches = [
        q
        for q in projective_points()
        if hermitian(q, a) == 0 and hermitian(q, b) == 0
    ]
    assert matches == [u]


def test_span_perp_degenerate():
    with pytest.raises(ValueError, match="degenerate span"):
        span_perp((1, 0, 0), (2, 0, 0))
    with pytest.raises(ValueError, match="degenerate span"):
        span_perp((1, 2, 3), (0, 0, 0))


def test_pg_lines():
    lines = all_pg_lines()
    assert len(lines) == 21
    assert all(len(L) == 5 for L in lines)
    through = pg_line_through((1, 0, 0), (0, 1, 0))
    assert through in set(lines)
    with pytest.raises(ValueError, match="degenerate span"):
        pg_line_through((1, 0, 0), (3, 0, 0))


def test_self_polar_triangles_partition_the_exterior_points():
    triangles = self_polar_triangles()
    assert len(triangles) == 4
    assert frozenset({(1, 0, 0), (0, 1, 0), (0, 0, 1)}) in triangles
    assert frozenset({(1, 1, 1), (1, 2, 3), (1, 3, 2)}) in triangles
    union = set().union(*triangles)
    assert union == set(exterior_points())
    for tri in triangles:
        for p, q in combinations(tri, 2):
            assert hermitian(p, q) == 0
            assert hermitian(p, p) == 1


def test_orthogonality_graph_is_exactly_the_triangles():
    triangles = self_polar_triangles()
    member = {p: tri for tri in triangles for p in tri}
    for p in exterior_points():
        partners = {
            q for q in exterior_points() if q != p and hermitian(p, q) == 0
        }
        assert partners == member[p] - {p}


def test_hyperoval_partitions_structure():
    partitions = hyperoval_partitions()
    assert len(partitions) == 3
    assert [p.index for p in partitions] == [0, 1, 2]
    triangles = set(self_polar_triangles())
    for partition in partitions:
        assert partition.oval & partition.twin == frozenset()
        assert partition.oval | partition.twin == set(exterior_points())
        assert len(partition.oval) == 6 and len(partition.twin) == 6
        for half in (partition.oval, partition.twin):
            split = [tri for tri in triangles if tri <= half]
            assert len(split) == 2
    # the three ovals pair the first triangle with each of the other three
    first = next(t for t in self_polar_triangles() if (1, 0, 0) in t)
    partners = {frozenset(p.oval - first) for p in partitions}
    assert partners == {t for t in triangles if t != first}


def test_every_tangent_meets_each_triangle_once():
    for a in unital_points():
        tangent = perp_line(a)
        assert a in tangent
        for tri in self_polar_triangles():
            assert len(tangent & tri) == 1


def test_every_secant_pair_lies_in_one_triangle():
    tangents = {perp_line(a) for a in unital_points()}
    member = {p: tri for tri in self_polar_triangles() for p in tri}
    for line in all_pg_lines():
        if line in tangents:
            continue
        exterior = [q for q in line if hermitian(q, q) == 1]
        assert len(exterior) == 2
        assert member[exterior[0]] is member[exterior[1]]


def test_hyperovals_meet_every_line_in_0_or_2_points():
    for partition in hyperoval_partitions():
        for line in all_pg_lines():
            assert len(line & partition.oval) in (0, 2)
            assert len(line & partition.twin) in (0, 2)


def test_hyperovals_meet_every_tangent_twice():
    for partition in hyperoval_partitions():
        for a in unital_points():
            tangent = perp_line(a)
            assert len(tangent & partition.oval) == 2
            assert len(tangent & partition.twin) == 2


def test_strata_for_fills_the_halves(partition, strata):
    assert len(strata.oval_vectors) == 18
    assert len(strata.twin_vectors) == 18
    assert strata.oval_vectors & strata.twin_vectors == frozenset()
    assert strata.oval_vectors | strata.twin_vectors == strata.norm_one
    for x in strata.oval_vectors:
        assert v_scale(2, x) in strata.oval_vectors
        assert proj_rep(x) in partition.oval


def test_ti_lines_and_planes_counts():
    lines = ti_lines()
    planes = ti_planes()
    assert len(lines) == 315
    assert len(planes) == 135
    assert all(line.rank == 2 and len(line.vectors) == 3 for line in lines)
    assert all(plane.rank == 3 and len(plane.vectors) == 7 for plane in planes)


def test_ti_subspaces_are_closed_and_orthogonal():
    def xor(u, v):
        return tuple(a ^ b for a, b in zip(u, v))

    zero = (0, 0, 0, 0, 0, 0)
    for sub in list(ti_lines()) + list(ti_planes()):
        for u, v in combinations(sub.vectors, 2):
            s = xor(u, v)
            assert s in sub.vectors or s == zero
            assert symplectic(from_gf2(u), from_gf2(v)) == 0


def test_each_ti_line_in_exactly_3_planes():
    planes = ti_planes()
    for line in ti_lines():
        count = sum(1 for plane in planes if line.vectors <= plane.vectors)
        assert count == 3


def test_line_plane_intersections():
    sizes = {
        len(line.vectors & plane.vectors)
        for line in ti_lines()
        for plane in ti_planes()
    }
    assert sizes == {0, 1, 3}
