import random

import pytest

import tropfan.cones as C
import tropfan.fans as F
import tropfan.lattice as L
import tropfan.oracle as oracle
import tropfan.semiabelian as S
import tropfan.serialize as SER
from conftest import FIXTURES


def load(name):
    return SER.load_path(str(FIXTURES / name))[1]


def tate_base():
    return load("tate_two_arc.json").base


class TestForms:
    def test_gram_and_q_hom(self):
        base = tate_base()
        assert S.gram(base, (3,)) == [[3]]
        assert S.q_hom(base, (2,), (3,)) == (6,)

    def test_translate_vector(self):
        base = tate_base()
        assert S.translate_vector(base, (1, 1), (1,)) == (1, 2)
        assert S.translate_vector(base, (2, 0), (-1,)) == (2, -2)

    def test_validate_form_tate(self):
        assert S.validate_form(tate_base()) == []

    def test_validate_form_asymmetric(self):
        base = tate_base()
        bad = S.PolarizedBase(
            base.base_cone,
            2,
            (((1,), (2,)), ((3,), (1,))),
            0,
        )
        assert any("symmetric" in v for v in S.validate_form(bad))

    def test_validate_form_degenerate(self):
        base = tate_base()
        bad = S.PolarizedBase(base.base_cone, 1, (((0,),),), 0)
        assert any("degenerate" in v for v in S.validate_form(bad))

    def test_validate_form_not_psd(self):
        base = tate_base()
        bad = S.PolarizedBase(base.base_cone, 1, (((-1,),),), 0)
        assert any("positive semidefinite" in v for v in S.validate_form(bad))


class TestAdmissibility:
    def test_admissible_point_tate(self):
        base = tate_base()
        assert S.admissible_point((1,), (5,), base)
        assert S.admissible_point((0,), (0,), base)
        assert not S.admissible_point((0,), (1,), base)
        assert not S.admissible_point((-1,), (0,), base)

    def test_admissible_point_rank(self):
        # g = 2 over a quadrant base with a rank-1 gram at one ray.
        base_cone = F.stacky_cone([(1, 0), (0, 1)], [(1, 0), (0, 1)], 2)
        q = (
            ((1, 0), (0, 0)),
            ((0, 0), (0, 1)),
        )
        base = S.PolarizedBase(base_cone, 2, q, 0)
        assert S.validate_form(base) == []
        # At n = (1, 0) the gram matrix is diag(1, 0).
        assert S.admissible_point((1, 0), (3, 0), base)
        assert not S.admissible_point((1, 0), (0, 1), base)
        assert S.admissible_point((1, 1), (2, 5), base)

    def test_admissible_hom_matches_pointwise(self):
        base = tate_base()
        tau = C.from_rays([(1,)], 1)
        structure = [[1]]
        # phi(e_1) = (c,): admissible iff the single covector value lies in
        # the span of gram column, always true for c anything since G=(1).
        assert S.admissible_hom(tau, structure, [(5,)], base)
        assert S.admissible_hom(tau, structure, [(0,)], base)


class TestTranslations:
    def test_candidate_translations_tate(self):
        fan = load("tate_two_arc.json")
        tau0 = fan.representatives[3]
        tau1 = fan.representatives[4]
        assert tau0.cone.rays == ((1, 0), (2, 1))
        assert tau1.cone.rays == ((1, 1), (2, 1))
        ms = S.candidate_translations(tau0, tau1, fan.base)
        assert ms == ((-1,), (0,))
        assert list(ms) == oracle.translations_bruteforce(tau0, tau1, fan.base, 10)

    def test_fixed_cone_convention(self):
        base = tate_base()
        n = base.ambient_rank
        zero = F.StackyCone(C.zero_cone(n), L.zero_lattice(n))
        ray = F.stacky_cone([(1, 0)], [(1, 0)], n)
        assert S.candidate_translations(zero, zero, base) == ()
        assert S.candidate_translations(ray, ray, base) == ((0,),)

    def test_singular_slope_raises(self):
        base_cone = F.stacky_cone([(1,)], [(1,)], 1)
        base = S.PolarizedBase(base_cone, 1, (((0,),),), 0)
        c = F.stacky_cone([(1, 1)], [(1, 1)], 2)
        with pytest.raises(S.DefinitenessRequiredError):
            S.candidate_translations(c, c, base)

    def test_translate_preserves_validity(self):
        fan = load("tate_two_arc.json")
        tau0 = fan.representatives[3]
        moved = S.translate(tau0, (2,), fan.base)
        assert moved.cone.rays == ((1, 2), (2, 5))
        back = S.translate(moved, (-2,), fan.base)
        assert back.cone.rays == tau0.cone.rays
        assert back.lattice == tau0.lattice


class TestTateSuite:
    def test_one_arc_fails_condition_5(self):
        fan = load("tate_one_arc.json")
        violations = S.validate_av_fan(fan)
        assert violations
        assert any(v.startswith("(5)") for v in violations)
        assert any("(1, 2)" in v for v in violations)

    def test_two_arc_validates(self):
        assert S.validate_av_fan(load("tate_two_arc.json")) == []

    def test_two_arc_complete(self):
        assert S.av_complete(load("tate_two_arc.json"))

    def test_one_arc_complete_but_invalid(self):
        # The one-arc translates still tile the admissible half-plane;
        # the fixture fails equivariance, not completeness.
        assert S.av_complete(load("tate_one_arc.json"))

    def test_partial_fan_not_complete(self):
        fan = load("tate_two_arc.json")
        kept = [sc for sc in fan.representatives if sc.cone.rays != ((1, 1), (2, 1))]
        partial = S.av_fan(fan.base, kept)
        assert not S.av_complete(partial)

    def test_two_arc_quotient(self):
        qc = S.quotient_complex(load("tate_two_arc.json"))
        assert qc.cells_by_dim() == {0: 1, 1: 2, 2: 2}
        pairs = [(i, j) for i, j, _ in qc.face_maps]
        assert len(pairs) == len(set(pairs))

    def test_quotient_duplicate_orbit_raises(self):
        fan = load("tate_two_arc.json")
        # Add the ray (1, 1) = T_1 (1, 0): same orbit as an existing cell.
        extra = F.stacky_cone([(1, 1)], [(1, 1)], 2)
        bigger = S.av_fan(fan.base, list(fan.representatives) + [extra])
        with pytest.raises(S.NormalizationError):
            S.quotient_complex(bigger)

    def test_three_arc_equivalent_to_two_arc(self):
        two = load("tate_two_arc.json")
        three = load("tate_three_arc.json")
        assert S.validate_av_fan(three) == []
        assert S.av_complete(three)
        assert S.av_bir_equivalent(two, three)

    def test_index_two_not_equivalent(self):
        two = load("tate_two_arc.json")
        idx2 = load("tate_two_arc_idx2.json")
        assert S.validate_av_fan(idx2) == []
        assert not S.av_bir_equivalent(two, idx2)

    def test_av_minimal_two_arc_stable(self):
        fan = load("tate_two_arc.json")
        m = S.av_minimal(fan)
        assert S.validate_av_fan(m) == []
        # The two top cells cannot merge without breaking equivariance.
        tops = [sc for sc in m.representatives if sc.dim == 2]
        assert len(tops) == 2
        assert S.av_bir_equivalent(fan, m)

    def test_av_minimal_three_arc_coarsens(self):
        three = load("tate_three_arc.json")
        m = S.av_minimal(three)
        assert S.validate_av_fan(m) == []
        assert S.av_bir_equivalent(three, m)
        tops = [sc for sc in m.representatives if sc.dim == 2]
        assert len(tops) == 2

    def test_different_bases_incompatible(self):
        two = load("tate_two_arc.json")
        other_base = S.PolarizedBase(two.base.base_cone, 1, (((2,),),), 0)
        other = S.av_fan(other_base, two.representatives)
        with pytest.raises(S.IncompatibleBaseError):
            S.av_bir_equivalent(two, other)


class TestJacobian:
    def test_theta_graph(self):
        num_vertices, edges, base_cone, torus_rank = load("theta_graph.json")
        base = S.jacobian_form(num_vertices, edges, base_cone, torus_rank)
        assert base.m_rank == 2
        assert S.validate_form(base) == []
        d1 = (1, 0, 0)
        d2 = (0, 1, 0)
        d3 = (0, 0, 1)
        expected = (
            (tuple(a + b for a, b in zip(d1, d2)), tuple(-x for x in d2)),
            (tuple(-x for x in d2), tuple(a + b for a, b in zip(d2, d3))),
        )
        u = ((-1, 1), (0, -1))
        assert S.congruent_by(base.q_matrix, expected, u) or S.congruent_by(
            base.q_matrix, expected, ((1, 0), (0, 1))
        )

    def test_loop_graph(self):
        num_vertices, edges, base_cone, torus_rank = load("loop_graph.json")
        base = S.jacobian_form(num_vertices, edges, base_cone, torus_rank)
        assert base.m_rank == 1
        assert S.validate_form(base) == []

    def test_tree_gives_rank_zero(self):
        num_vertices, edges, base_cone, torus_rank = load("path_graph.json")
        base = S.jacobian_form(num_vertices, edges, base_cone, torus_rank)
        assert base.m_rank == 0
        assert S.validate_form(base) == []

    def test_zero_length_rejected(self):
        num_vertices, edges, base_cone, torus_rank = load("zero_loop_graph.json")
        base = S.jacobian_form(num_vertices, edges, base_cone, torus_rank)
        assert S.validate_form(base)

    def test_disconnected_raises(self):
        _, _, base_cone, _ = load("loop_graph.json")
        with pytest.raises(S.ConnectivityError):
            S.jacobian_form(3, [(0, 1, (1,))], base_cone, 0)

    def test_congruent_by(self):
        q1 = (((2,), (0,)), ((0,), (3,)))
        u = ((0, 1), (1, 0))
        q2 = (((3,), (0,)), ((0,), (2,)))
        assert S.congruent_by(q1, q2, u)
        assert not S.congruent_by(q1, q1, u)


class TestReferenceSubdivision:
    def test_standard_r2(self):
        fan = S.reference_subdivision([(1, 0), (0, 1)], 2)
        assert F.validate(fan) == []
        assert F.is_complete(fan)
        assert len(F.maximal_cones(fan)) == 4

    def test_with_diagonals(self):
        fan = S.reference_subdivision([(1, 0), (0, 1), (1, 1), (1, -1)], 2)
        assert F.validate(fan) == []
        assert F.is_complete(fan)
        assert len(F.maximal_cones(fan)) == 8

    def test_degenerate_raises(self):
        with pytest.raises(S.ArrangementDegenerateError):
            S.reference_subdivision([(1, 0), (2, 0)], 2)

    def test_rank_zero(self):
        fan = S.reference_subdivision([], 0)
        assert fan.ambient_rank == 0

    def test_join_with_barycenter(self):
        q = C.from_rays([(1, 0), (0, 1)], 2)
        cells = S.join_with_barycenter(q, [C.ray_cone((1, 0), 2), C.ray_cone((0, 1), 2)])
        assert all(c.dim == 2 for c in cells)
        assert C.cone_covered_by(q, cells)


class TestOracles:
    def test_cover_sample_two_arc(self):
        fan = load("tate_two_arc.json")
        covered, total = oracle.cover_sample_av(fan, 50, 3)
        assert covered == total == 50

    def test_cover_sample_partial_fan_misses(self):
        fan = load("tate_two_arc.json")
        kept = [sc for sc in fan.representatives if sc.cone.rays != ((1, 1), (2, 1))]
        partial = S.av_fan(fan.base, kept)
        covered, total = oracle.cover_sample_av(partial, 50, 3)
        assert covered < total

    def test_cover_sample_reproducible(self):
        fan = load("tate_two_arc.json")
        assert oracle.cover_sample_av(fan, 30, 9) == oracle.cover_sample_av(fan, 30, 9)
