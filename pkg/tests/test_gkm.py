"""Moment-graph congruence spaces, group actions, quotients, localization."""

from fractions import Fraction

import pytest

from hessllt.characters import frobenius_inverse
from hessllt.errors import BudgetExceededError
from hessllt.gkm import (
    EquivariantClass,
    GkmModel,
    GkmSpace,
    betti_numbers,
    degree_piece,
    equivariant_palindromicity_check,
    gkm_report,
    localization_equivariance_check,
    localization_pushforward,
    perm_monomial_map,
    quotient_character_bruteforce,
    quotient_graded_character,
    xi_transport,
)
from hessllt.hessgraph import HessenbergFunction, csf, llt
from hessllt.qrat import QPoly, QRat
from hessllt.combinat import all_permutations

H = HessenbergFunction.parse


def models(text):
    mx = GkmModel(H(text), "X")
    return mx, mx.twin()


class TestModelShape:
    def test_vertices_and_edges(self):
        mx, my = models("2,2")
        assert mx.vertices == ((1, 2), (2, 1))
        assert len(mx.edges) == 1
        assert my.flavor == "Y"
        assert my.twin().flavor == "X"
        assert len(GkmModel(H("3,3,3"), "X").edges) == 3 * 6 // 2

    def test_flavor_validation(self):
        with pytest.raises(ValueError):
            GkmModel(H("2,2"), "Z")

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            GkmModel(HessenbergFunction([5] * 5), "X")


class TestDegreePieces:
    def test_dims_two_vertices(self):
        # pairs of homogeneous polynomials in t1,t2 agreeing under t1=t2:
        # one linear condition per degree, so dims 2(d+1) - 1
        mx, my = models("2,2")
        for model in (mx, my):
            assert degree_piece(model, 0).dim == 1
            assert degree_piece(model, 1).dim == 3
            assert degree_piece(model, 2).dim == 5

    def test_identity_trace_is_dimension(self):
        mx, my = models("2,3,3")
        for model, action in ((mx, "dot"), (my, "dagger")):
            for d in range(3):
                space = degree_piece(model, d)
                assert space.trace((1, 2, 3), action) == space.dim

    def test_transposition_traces_two_vertices(self):
        # hand computation on the bases {t1, t2, (t1 at id, t2 at w)}
        mx, my = models("2,2")
        assert degree_piece(mx, 0).trace((2, 1), "dot") == 1
        assert degree_piece(mx, 1).trace((2, 1), "dot") == 1
        assert degree_piece(my, 0).trace((2, 1), "dagger") == 1
        assert degree_piece(my, 1).trace((2, 1), "dagger") == 1

    def test_degree_budget(self):
        mx, _ = models("2,2")
        with pytest.raises(BudgetExceededError):
            degree_piece(mx, H("2,2").size() + 4)

    def test_certified_path_reports_certificate(self):
        mx = GkmModel(H("2,3,4,4"), "X")
        space = degree_piece(mx, 1)
        assert space.dim == 15
        cert = space.certificate
        assert cert["nullity_bound"] == 15
        assert cert["exhibited"] == 15
        assert cert["route"] in ("crt-lift", "products-and-rank", "components", "exact")


class TestEquivariantClasses:
    def test_one_t_x(self):
        mx, my = models("2,2")
        one = EquivariantClass.one(mx)
        one.verify()
        t1 = EquivariantClass.t_class(mx, 1)
        t1.verify()
        x1 = EquivariantClass.x_class(mx, 1)
        x1.verify()
        assert x1.values[0] == {(1, 0): Fraction(1)}
        assert x1.values[1] == {(0, 1): Fraction(1)}
        with pytest.raises(ValueError):
            EquivariantClass.x_class(my, 1)

    def test_verify_rejects_noncongruent(self):
        mx, _ = models("2,2")
        with pytest.raises(ValueError):
            EquivariantClass(
                mx, 1, [{(1, 0): Fraction(1)}, {(1, 0): Fraction(2)}]
            )

    def test_column_round_trip(self):
        mx, _ = models("2,3,3")
        space = degree_piece(mx, 2)
        for col in space.basis[: min(4, space.dim)]:
            cls = EquivariantClass.from_column(mx, 2, col)
            assert [int(x) for x in cls.to_column()] == list(col)

    def test_dot_fixes_tautological_classes(self):
        for text in ("2,2", "2,3,3", "3,3,3"):
            mx, _ = models(text)
            n = mx.n
            for i in range(1, n + 1):
                xi = EquivariantClass.x_class(mx, i)
                for sigma in all_permutations(n):
                    assert xi.act(sigma, "dot") == xi

    def test_dot_permutes_t_classes(self):
        mx, _ = models("2,3,3")
        sigma = (2, 3, 1)
        t1 = EquivariantClass.t_class(mx, 1)
        assert t1.act(sigma, "dot") == EquivariantClass.t_class(mx, sigma[0])

    def test_dagger_fixes_t_classes(self):
        _, my = models("2,3,3")
        t2 = EquivariantClass.t_class(my, 2)
        for sigma in all_permutations(3):
            assert t2.act(sigma, "dagger") == t2

    def test_action_flavor_rules(self):
        mx, my = models("2,3,3")
        one_x = EquivariantClass.one(mx)
        one_y = EquivariantClass.one(my)
        with pytest.raises(ValueError):
            one_x.act((2, 1, 3), "dagger")
        with pytest.raises(ValueError):
            one_y.act((2, 1, 3), "dot")
        with pytest.raises(ValueError):
            one_x.act((2, 1, 3), "star")  # h not full
        full_x, _ = models("3,3,3")
        one_full = EquivariantClass.one(full_x)
        assert one_full.act((2, 1, 3), "star") == one_full

    def test_multiplication(self):
        mx, _ = models("2,2")
        x1 = EquivariantClass.x_class(mx, 1)
        sq = x1 * x1
        assert sq.degree == 2
        sq.verify()


class TestQuotientCharacters:
    def test_two_vertex_literals(self):
        # dot/t: (q+1) on both classes; dot/x and dagger/t: q+1 and 1-q
        mx, my = models("2,2")
        q = QRat.q()
        dot_t = quotient_graded_character(mx, "dot", "t_vars")
        assert dot_t((1, 1)) == q + 1
        assert dot_t((2,)) == q + 1
        dot_x = quotient_graded_character(mx, "dot", "x_classes")
        assert dot_x((1, 1)) == q + 1
        assert dot_x((2,)) == 1 - q
        dag_t = quotient_graded_character(my, "dagger", "t_vars")
        assert dag_t == dot_x

    def test_quotient_matches_symmetric_functions(self):
        for text in ("2,2", "2,3,3", "3,3,3"):
            mx, my = models(text)
            h = mx.h
            assert quotient_graded_character(mx, "dot", "t_vars") == frobenius_inverse(
                csf(h).omega()
            )
            assert quotient_graded_character(mx, "dot", "x_classes") == frobenius_inverse(
                llt(h)
            )
            assert quotient_graded_character(my, "dagger", "t_vars") == frobenius_inverse(
                llt(h)
            )

    def test_koszul_equals_bruteforce(self):
        for text in ("2,2", "1,2", "2,3,3", "3,3,3"):
            mx, my = models(text)
            for model, action, gens in (
                (mx, "dot", "t_vars"),
                (mx, "dot", "x_classes"),
                (my, "dagger", "t_vars"),
            ):
                koszul = quotient_graded_character(model, action, gens)
                brute = quotient_character_bruteforce(model, action, gens)
                assert koszul == brute, (text, action, gens)

    def test_vanishing_beyond_top_degree(self):
        mx, _ = models("2,3,3")
        size = mx.h.size()
        chi = quotient_graded_character(mx, "dot", "t_vars", max_d=size + 1)
        assert chi == quotient_graded_character(mx, "dot", "t_vars")

    def test_invalid_combinations(self):
        mx, my = models("2,2")
        with pytest.raises(ValueError):
            quotient_graded_character(mx, "dagger", "t_vars")
        with pytest.raises(ValueError):
            quotient_graded_character(my, "dagger", "x_classes")
        with pytest.raises(ValueError):
            quotient_graded_character(my, "dot", "t_vars")


class TestXiTransport:
    def test_t_goes_to_x(self):
        mx, my = models("2,3,3")
        for i in (1, 2, 3):
            assert xi_transport(
                EquivariantClass.t_class(my, i), "Y_to_X"
            ) == EquivariantClass.x_class(mx, i)

    def test_round_trip(self):
        mx, my = models("2,3,3")
        space = degree_piece(my, 2)
        for col in space.basis[:3]:
            f = EquivariantClass.from_column(my, 2, col)
            assert xi_transport(xi_transport(f, "Y_to_X"), "X_to_Y") == f

    def test_intertwines_actions(self):
        mx, my = models("2,3,3")
        f = EquivariantClass.t_class(my, 1) * EquivariantClass.t_class(my, 2)
        for sigma in ((2, 1, 3), (2, 3, 1)):
            lhs = xi_transport(f.act(sigma, "dagger"), "Y_to_X")
            rhs = xi_transport(f, "Y_to_X").act(sigma, "dot")
            assert lhs == rhs

    def test_direction_validation(self):
        mx, my = models("2,2")
        f = EquivariantClass.one(my)
        with pytest.raises(ValueError):
            xi_transport(f, "sideways")
        with pytest.raises(ValueError):
            xi_transport(f, "X_to_Y")  # f lives on Y


class TestLocalization:
    def test_push_forward_constants_to_zero(self):
        mx, _ = models("2,2")
        assert localization_pushforward(mx, EquivariantClass.one(mx)) == {}
        assert localization_pushforward(mx, EquivariantClass.t_class(mx, 1)) == {}

    def test_push_forward_tautological_class(self):
        mx, _ = models("2,2")
        x1 = EquivariantClass.x_class(mx, 1)
        assert localization_pushforward(mx, x1) == {(0, 0): Fraction(-1)}

    def test_integrality_on_basis(self):
        mx, _ = models("2,3,3")
        for d in range(H("2,3,3").size() + 1):
            space = degree_piece(mx, d)
            for col in space.basis:
                f = EquivariantClass.from_column(mx, d, col, verify=False)
                localization_pushforward(mx, f)  # must not raise

    def test_equivariance(self):
        mx, _ = models("2,3,3")
        f = EquivariantClass.x_class(mx, 1) * EquivariantClass.x_class(mx, 2)
        for sigma in ((2, 1, 3), (3, 1, 2)):
            assert localization_equivariance_check(mx, f, sigma)


class TestTopology:
    def test_betti_numbers(self):
        assert betti_numbers(H("2,2")) == [1, 1]
        assert betti_numbers(H("1,2,3")) == [6]
        assert betti_numbers(H("1,3,3")) == [3, 3]
        assert betti_numbers(H("2,3,3")) == [1, 4, 1]
        assert betti_numbers(H("3,3,3")) == [1, 2, 2, 1]

    def test_equivariant_palindromicity(self):
        for text in ("2,2", "2,3,3", "3,3,3"):
            assert equivariant_palindromicity_check(H(text))


class TestMonomialRelabeling:
    def test_identity(self):
        pm = perm_monomial_map((1, 2, 3), 2)
        assert list(pm) == list(range(len(pm)))

    def test_swap_two_variables(self):
        assert list(perm_monomial_map((2, 1), 1)) == [1, 0]
        assert list(perm_monomial_map((2, 1), 2)) == [2, 1, 0]

    def test_involution(self):
        pm = perm_monomial_map((2, 1, 3), 3)
        assert [pm[pm[i]] for i in range(len(pm))] == list(range(len(pm)))


class TestReport:
    def test_report_passes(self):
        rep = gkm_report(H("2,3,3"))
        assert rep["all_passed"]
        assert rep["betti_numbers"] == [1, 4, 1]
        assert rep["n"] == 3
        assert rep["edge_count"] == 2
        names = {c["name"] for c in rep["checks"]}
        assert "free-module-dimension-law" in names
        assert "twin-quotient-equals-x-quotient" in names
        assert "localization-integrality-and-equivariance" in names
