from fractions import Fraction

import pytest

from coxtools.cyclotomic import CycloNum, cyclotomic_polynomial, euler_phi
from coxtools.quotients import (ClosureCapExceededError, NotInvertibleError,
                                close_group, pseudoreflections, quotient_report,
                                reynolds_invariants,
                                symmetric_power_trace_dimension)


def _i():
    return CycloNum.zeta(4)


def _q8():
    i = _i()
    return close_group([[[i, 0], [0, -i]], [[0, 1], [-1, 0]]], conductor=4)


# -- cyclotomic arithmetic ------------------------------------------------------

def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(12) == 4


def test_cyclotomic_field_ops():
    i = _i()
    assert i * i == CycloNum.rational(4, -1)
    z = CycloNum.zeta(5)
    acc = CycloNum.rational(5, 1)
    for _ in range(5):
        acc = acc * z
    assert acc.is_one()
    assert (z * z.inverse()).is_one()
    half = CycloNum.rational(4, Fraction(1, 2))
    assert (half + half).is_one()


# -- closure ---------------------------------------------------------------------

def test_q8_closure_order():
    assert _q8().order == 8


def test_closure_of_identity():
    g = close_group([[[1, 0], [0, 1]]], conductor=1)
    assert g.order == 1


def test_closure_of_cube_root_diagonal():
    z = CycloNum.zeta(3)
    zero = CycloNum(3)
    g = close_group([[[z, zero], [zero, z.inverse()]]], conductor=3)
    assert g.order == 3


def test_closure_cap():
    z = CycloNum.zeta(5)
    zero = CycloNum(5)
    with pytest.raises(ClosureCapExceededError):
        close_group([[[z, zero], [zero, z]]], conductor=5, cap=3)


def test_singular_generator_rejected():
    with pytest.raises(NotInvertibleError):
        close_group([[[1, 1], [1, 1]]], conductor=1)


def test_lagrange_order_divides():
    g = _q8()
    rep = quotient_report(g)
    assert rep.order_g % rep.order_h == 0
    assert rep.order_g % rep.order_h_tilde == 0
    assert rep.order_h_tilde % rep.order_h == 0


# -- pseudoreflections -------------------------------------------------------------

def test_q8_has_no_pseudoreflections():
    assert pseudoreflections(_q8()) == ()


def test_single_reflection():
    g = close_group([[[-1, 0], [0, 1]]], conductor=1)
    assert len(pseudoreflections(g)) == 1


def test_swap_is_pseudoreflection():
    g = close_group([[[0, 1], [1, 0]]], conductor=1)
    assert len(pseudoreflections(g)) == 1


# -- quotient reports ----------------------------------------------------------------

def test_q8_report():
    rep = quotient_report(_q8())
    assert rep.order_g == 8
    assert rep.order_h == 1
    assert rep.order_h_tilde == 2
    assert not rep.f_abelian
    assert rep.commutant_order == 2
    assert rep.n_invariants == (2, 2)
    assert not rep.is_toric


def test_cyclic_weight_action_reports():
    for n in (2, 3, 5):
        z = CycloNum.zeta(n)
        zero = CycloNum(n)
        gen = [[z * z * z, zero, zero], [zero, z, zero], [zero, zero, z.inverse()]]
        rep = quotient_report(close_group([gen], conductor=n))
        assert rep.order_g == n
        assert rep.order_h == 1
        assert rep.f_abelian and rep.is_toric
        assert rep.n_invariants == (n,)


def test_reflection_group_report():
    rep = quotient_report(close_group([[[-1, 0], [0, 1]]], conductor=1))
    assert rep.order_h == rep.order_g == 2
    assert rep.is_toric
    assert rep.n_invariants == ()


def test_proper_nontrivial_reflection_subgroup():
    """A reflection plus a scalar of order 4.  The scalar's square turns
    the reflection into a second one (diag(1,-1)), so the reflection
    subgroup has order 4 and the quotient is cyclic of order 2; the
    presentation must also handle the generator that dies in the
    quotient."""
    i = _i()
    zero = CycloNum(4)
    g = close_group([[[-1, 0], [0, 1]], [[i, zero], [zero, i]]], conductor=4)
    assert g.order == 8
    assert len(pseudoreflections(g)) == 2
    rep = quotient_report(g)
    assert rep.order_h == 4
    assert rep.f_abelian and rep.is_toric
    assert rep.commutant_order == 1
    assert rep.order_h_tilde == 4
    assert rep.n_invariants == (2,)


def test_coset_multiplication_is_associative():
    """Spot check: quotient multiplication through representatives is
    associative (well-definedness of the coset group)."""
    from coxtools.quotients import c_mul
    g = close_group([[[0, -1], [1, 0]], [[0, 1], [1, 0]]], conductor=1)  # dihedral
    refl = pseudoreflections(g)
    assert refl  # the swap and friends
    rep = quotient_report(g)
    assert rep.order_g == 8 and rep.is_toric
    # associativity of the underlying matrix product on a sample
    els = g.elements
    for a in els[:4]:
        for b in els[:4]:
            for c in els[:4]:
                assert c_mul(c_mul(a, b), c) == c_mul(a, c_mul(b, c))


def test_invariants_multiply_to_quotient_order():
    for gens, conductor in [
        ([[[_i(), 0], [0, -_i()]], [[0, 1], [-1, 0]]], 4),
        ([[[0, 1], [1, 0]]], 1),
        ([[[0, -1], [1, 0]]], 1),
    ]:
        g = close_group(gens, conductor=conductor)
        rep = quotient_report(g)
        n_order = 1
        for d in rep.n_invariants:
            n_order *= d
        assert n_order * rep.order_h_tilde == rep.order_g


# -- Reynolds invariants ----------------------------------------------------------------

def test_reynolds_plus_minus_identity():
    pm = close_group([[[-1, 0], [0, -1]]], conductor=1)
    assert len(reynolds_invariants(pm, 2)) == 3
    assert len(reynolds_invariants(pm, 1)) == 0


def test_reynolds_trivial_group():
    triv = close_group([[[1, 0], [0, 1]]], conductor=1)
    basis = reynolds_invariants(triv, 3)
    assert len(basis) == 4  # all cubic monomials in two variables


def test_reynolds_cube_root_weights():
    z = CycloNum.zeta(3)
    zero = CycloNum(3)
    g = close_group([[[z, zero], [zero, z.inverse()]]], conductor=3)
    basis = reynolds_invariants(g, 2)
    assert len(basis) == 1
    assert list(basis[0].keys()) == [(1, 1)]


def test_reynolds_invariance_under_action():
    """Averaged forms really are fixed by every group element."""
    from coxtools.quotients import _apply_matrix_to_monomial
    g = _q8()
    for form in reynolds_invariants(g, 2):
        for a in g.elements:
            acc = {}
            for expo, coeff in form.items():
                for mono, c in _apply_matrix_to_monomial(g, a, expo).items():
                    cur = acc.get(mono)
                    val = coeff * c
                    acc[mono] = val if cur is None else cur + val
            acc = {k: v for k, v in acc.items() if not v.is_zero()}
            assert acc == form


def test_reynolds_dimension_matches_trace_formula():
    z3 = CycloNum.zeta(3)
    z5 = CycloNum.zeta(5)
    zero3, zero5 = CycloNum(3), CycloNum(5)
    cases = [
        (close_group([[[-1, 0], [0, -1]]], conductor=1), [1, 2, 3, 4]),
        (_q8(), [1, 2, 3, 4]),
        (close_group([[[z3, zero3], [zero3, z3.inverse()]]], conductor=3), [1, 2, 3]),
        # a dimension-3 action
        (close_group([[[z5 * z5 * z5, zero5, zero5], [zero5, z5, zero5],
                       [zero5, zero5, z5.inverse()]]], conductor=5), [1, 2, 3, 4]),
    ]
    for group, degrees in cases:
        for d in degrees:
            assert len(reynolds_invariants(group, d)) == \
                symmetric_power_trace_dimension(group, d)
