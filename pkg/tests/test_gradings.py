import pytest

from coxtools.gradings import (AbGroup, DependsOnTargetError, GradedEndo, GradedRing,
                               ImagesNotHomogeneousError, NotElementaryError,
                               NotHomogeneousError, NotHomogeneousShearError,
                               SingularLinearError, ZERO_DEGREE, anick_automorphism,
                               check_normalizes, degree_of, elementary_inverse,
                               elementary_linear, elementary_shear, linear_part,
                               nagata_polymap, quadric_grading, rho_replace,
                               search_tame_decomposition, shear_family, shear_map,
                               transpose_map, verify_inverse, wildness_certificate,
                               wildness_machinery, NotZeta)
from coxtools.polynomials import (Poly, PolyMap, compose, parse_map, parse_poly,
                                  substitute)

from conftest import YS

RING = quadric_grading()


def _y(i):
    return Poly.variable(4, i)


def _delta():
    return parse_poly("y1*y4-y2*y3", YS)


# -- degrees ------------------------------------------------------------------

def test_degree_of_quadric_invariant():
    assert degree_of(_delta(), RING) == RING.group.element((0,))


def test_degree_of_nagata_images():
    g = AbGroup(1, ())
    ring = GradedRing(g, (g.element((3,)), g.element((1,)), g.element((-1,))))
    degs = [degree_of(p, ring) for p in nagata_polymap().images]
    assert [d.free for d in degs] == [(3,), (1,), (-1,)]


def test_degree_of_inhomogeneous():
    g = AbGroup(1, ())
    ring = GradedRing(g, (g.element((1,)), g.element((2,))))
    with pytest.raises(NotHomogeneousError):
        degree_of(parse_poly("y1+y2", ["y1", "y2"]), ring)


def test_degree_of_zero_polynomial():
    assert degree_of(Poly.zero(4), RING) is ZERO_DEGREE


def test_torsion_degree_arithmetic():
    g = AbGroup(0, (2,))
    ring = GradedRing(g, (g.element((), (1,)), g.element((), (1,))))
    sq = parse_poly("y1*y2", ["y1", "y2"])
    assert degree_of(sq, ring) == g.element((), (0,))


# -- normalization classification ----------------------------------------------

def test_zeta_preserves():
    assert check_normalizes(anick_automorphism()).kind == "preserves"


def test_transpose_normalizes_with_negation():
    res = check_normalizes(transpose_map())
    assert res.kind == "normalizes"
    assert res.phi0.free_matrix == ((-1,),)


def test_squaring_map_is_neither():
    g = AbGroup(1, ())
    ring = GradedRing(g, (g.element((1,)), g.element((0,)),
                          g.element((0,)), g.element((0,))))
    e = GradedEndo(ring, parse_map(["y1^2", "y2", "y3", "y4"], YS))
    assert check_normalizes(e).kind == "neither"


def test_normalization_composition_property():
    t = transpose_map()
    tt = GradedEndo(RING, compose(t.map, t.map))
    assert check_normalizes(tt).kind == "preserves"


def test_phi0_multiplies_under_composition():
    """phi0 of a composition is the composition of the phi0's."""
    t = transpose_map()
    z = anick_automorphism()
    tz = GradedEndo(RING, compose(t.map, z.map))
    res = check_normalizes(tz)
    assert res.kind == "normalizes"
    # phi0(transpose) = -1 and phi0(zeta) = 1, so the composite is -1
    assert res.phi0.free_matrix == ((-1,),)


def test_images_not_homogeneous_error():
    with pytest.raises(ImagesNotHomogeneousError):
        GradedEndo(RING, parse_map(["y1+y3", "y2", "y3", "y4"], YS))


# -- elementary constructors -----------------------------------------------------

def test_elementary_shear_shapes():
    # the proper shear shape: y1 += y2*H(y2*y3, y2*y4)
    e = elementary_shear(RING, 0, parse_poly("y2*(y2*y3)", YS))
    assert e.map.images[0] == parse_poly("y1+y2^2*y3", YS)
    assert check_normalizes(e).kind == "preserves"
    assert verify_inverse(e, elementary_inverse(e))


def test_elementary_shear_rejects_target_variable():
    with pytest.raises(DependsOnTargetError):
        elementary_shear(RING, 1, _y(0) * _delta())


def test_elementary_shear_rejects_wrong_degree():
    with pytest.raises(NotHomogeneousShearError):
        elementary_shear(RING, 0, parse_poly("y2*y3", YS))


def test_elementary_linear():
    e = elementary_linear(RING, [[0, 1, 0, 0], [1, 0, 0, 0],
                                 [0, 0, 0, 1], [0, 0, 1, 0]])
    assert check_normalizes(e).kind == "preserves"
    assert verify_inverse(e, elementary_inverse(e))
    with pytest.raises(SingularLinearError):
        elementary_linear(RING, [[1, 0, 0, 0]] * 4)


def test_verify_inverse_negative(zeta_map):
    z = anick_automorphism()
    ident = GradedEndo(RING, PolyMap.identity(4))
    assert not verify_inverse(z, ident)
    assert verify_inverse(ident, ident)


def test_conjugation_by_transpose_stays_elementary():
    """Conjugating a grading-preserving shear by the grading-reversing swap
    yields another grading-preserving shear (checked on all four shapes)."""
    t = transpose_map()
    shapes = [
        (0, parse_poly("y2*(y2*y3)", YS)),
        (1, parse_poly("y1*(y1*y4)", YS)),
        (2, parse_poly("y4*(y1*y4)", YS)),
        (3, parse_poly("y3*(y2*y3)", YS)),
    ]
    for index, f in shapes:
        e = elementary_shear(RING, index, f)
        conj = compose(t.map, compose(e.map, t.map))
        diffs = [i for i in range(4)
                 if conj.images[i] != Poly.variable(4, i)]
        assert len(diffs) == 1
        i = diffs[0]
        g = conj.images[i] - Poly.variable(4, i)
        assert not g.involves(i)
        e2 = elementary_shear(RING, i, g)
        assert check_normalizes(e2).kind == "preserves"


# -- replacement machinery ---------------------------------------------------------

def test_rho_replace_keeps_unfrozen_shear():
    sh = shear_map(RING, 1, _y(0) * _delta())
    assert rho_replace([sh], (2, 3)) == sh.map


def test_rho_replace_freezes_nonlinear():
    sh = shear_map(RING, 3, _y(2) * _delta())
    assert rho_replace([sh], (2, 3)).is_identity()


def test_rho_replace_requires_elementary(zeta_map):
    with pytest.raises(NotElementaryError):
        rho_replace([anick_automorphism()], (2, 3))


def test_rho_replace_empty_sequence_is_identity():
    assert rho_replace([], (2, 3), num_vars=4).is_identity()
    with pytest.raises(ValueError):
        rho_replace([], (2, 3))


def test_shear_map_matches_second_component_of_the_two_shear_map():
    sh = shear_map(RING, 1, _y(0) * _delta())
    assert sh.map.images[1] == anick_automorphism().map.images[1]


def test_verify_inverse_of_the_two_shear_map():
    # the defining quadratic is invariant, so negating both shears at
    # once inverts the map
    z = anick_automorphism()
    d = _delta()
    z_inv = GradedEndo(RING, PolyMap((_y(0), _y(1) - _y(0) * d,
                                      _y(2), _y(3) - _y(2) * d)))
    assert verify_inverse(z, z_inv)


def test_linear_part_of_shear():
    sh = shear_map(RING, 1, _y(0) * _delta())
    assert linear_part(sh).map.is_identity()


def test_machinery_on_frozen_shear():
    m = wildness_machinery([shear_map(RING, 1, _y(0) * _delta())])
    assert m.det_jacobian == parse_poly("1-y1*y3", YS)
    assert m.residual.is_zero() and m.residual_in_i2
    assert m.f.is_zero() and m.g.is_zero() and m.f_in_i3 and m.g_in_i3
    assert m.rho_fixes_frozen
    assert not m.det_is_constant


def test_certificate_single_shear_not_zeta():
    res = wildness_certificate([shear_map(RING, 1, _y(0) * _delta())])
    assert res == NotZeta(variable=3)


def test_certificate_sequential_shears_not_zeta():
    seq = [shear_map(RING, 1, _y(0) * _delta()),
           shear_map(RING, 3, _y(2) * _delta())]
    res = wildness_certificate(seq)
    assert isinstance(res, NotZeta)
    # the composition really does differ in the variable reported
    from coxtools.polynomials import compose_chain
    chain = compose_chain([e.map for e in seq])
    assert chain.images[res.variable] != anick_automorphism().map.images[res.variable]


def test_certificate_rejects_grading_breaker():
    g = AbGroup(1, ())
    with pytest.raises(ValueError):
        wildness_certificate([transpose_map()])


# -- shear families ------------------------------------------------------------------

def test_shear_family_member():
    e = shear_family(RING, 0, _y(1), parse_poly("y2*y3", YS), 2)
    assert e.map.images[0] == parse_poly("y1+y2*(y2*y3)^2", YS)


def test_shear_family_boundary_k0():
    e = shear_family(RING, 0, _y(1), parse_poly("y2*y3", YS), 0)
    assert e.map.images[0] == parse_poly("y1+y2", YS)
    probe = parse_poly("y1*y3", YS)
    assert substitute(probe, e.map) == parse_poly("y1*y3+y2*y3", YS)


def test_shear_family_growth_is_unbounded():
    probe = parse_poly("y1*y3", YS)
    degrees = []
    for k in range(1, 7):
        e = shear_family(RING, 0, _y(1), parse_poly("y2*y3", YS), k)
        degrees.append(substitute(probe, e.map).total_degree())
    assert degrees == [2 * (k + 1) for k in range(1, 7)]
    assert all(a < b for a, b in zip(degrees, degrees[1:]))


def test_shear_family_rejects_bad_h():
    with pytest.raises(NotHomogeneousShearError):
        shear_family(RING, 0, _y(1), parse_poly("y2", YS), 1)
    with pytest.raises(DependsOnTargetError):
        shear_family(RING, 0, _y(1), parse_poly("y1*y3", YS), 1)


# -- bounded decomposition search --------------------------------------------------

def test_search_finds_a_single_shear():
    target = elementary_shear(RING, 0, parse_poly("y2*(y2*y3)", YS)).map
    found = search_tame_decomposition(target, max_len=2, max_h_degree=1)
    assert found is not None
    from coxtools.polynomials import compose_chain
    assert compose_chain([e.map for e in found]) == target


def test_search_does_not_find_zeta():
    assert search_tame_decomposition(anick_automorphism().map,
                                     max_len=2, max_h_degree=1) is None


# -- Nagata homogeneity scan ---------------------------------------------------------

def nagata_homogeneity_scan(bound=4):
    """All integer gradings (a, b, c) with |entries| <= bound for which
    every image of the Nagata map is homogeneous."""
    nm = nagata_polymap()
    good = []
    g = AbGroup(1, ())
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                ring = GradedRing(g, (g.element((a,)), g.element((b,)), g.element((c,))))
                try:
                    degs = [degree_of(p, ring) for p in nm.images]
                except NotHomogeneousError:
                    continue
                good.append((a, b, c))
    return good


def test_nagata_homogeneity_locus():
    """The homogeneity locus is the line deg(y1) = 3 deg(y2),
    deg(y3) = -deg(y2): exactly the displayed torus weights (3, 1, -1)."""
    good = nagata_homogeneity_scan(4)
    assert good == [(-3, -1, 1), (0, 0, 0), (3, 1, -1)]
    assert all(a == 3 * b and c == -b for a, b, c in good)
