"""Gradings by finitely generated abelian groups and graded endomorphisms.

A grading group is ZZ^a + ZZ/d1 + ... + ZZ/dt with d1 | d2 | ... ; group
elements are (free tuple, torsion residue tuple).  A graded ring fixes a
degree for every polynomial variable.  Endomorphisms given by variable
images are *graded* when every image is homogeneous; they *normalize*
the grading when the induced degree assignment extends to a group
automorphism, and *preserve* it when that automorphism is the identity.

The wildness machinery at the bottom follows the linear-part replacement
argument: freeze the last two quadric variables, compare the frozen
composition with the two-shear map it should equal, and certify the
contradiction through the Jacobian determinant.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .polynomials import (Poly, PolyMap, compose, compose_chain, jacobian,
                          poly_det, in_ideal_power)


class NotHomogeneousError(ValueError):
    """A polynomial mixes two distinct degrees; carries witness terms."""

    def __init__(self, term1, term2):
        super().__init__(f"terms {term1} and {term2} have different degrees")
        self.witnesses = (term1, term2)


class ImagesNotHomogeneousError(ValueError):
    def __init__(self, variable):
        super().__init__(f"image of variable {variable} is not homogeneous")
        self.variable = variable


class DependsOnTargetError(ValueError):
    pass


class NotHomogeneousShearError(ValueError):
    pass


class SingularLinearError(ValueError):
    pass


class NotElementaryError(ValueError):
    pass


class ZeroDegree:
    """Sentinel degree of the zero polynomial (homogeneous of every degree)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_DEGREE"


ZERO_DEGREE = ZeroDegree()


@dataclass(frozen=True)
class GroupElem:
    free: tuple
    torsion: tuple


@dataclass(frozen=True)
class AbGroup:
    """ZZ^free_rank + sum of ZZ/d with the d's a divisibility chain."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion orders must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion orders must form a divisibility chain")

    def element(self, free=(), torsion=()):
        free = tuple(int(x) for x in free)
        torsion = tuple(int(x) for x in torsion)
        if len(free) != self.free_rank or len(torsion) != len(self.torsion):
            raise ValueError("element shape mismatch")
        return GroupElem(free, tuple(r % d for r, d in zip(torsion, self.torsion)))

    def zero(self):
        return GroupElem((0,) * self.free_rank, (0,) * len(self.torsion))

    def add(self, a, b):
        return GroupElem(tuple(x + y for x, y in zip(a.free, b.free)),
                         tuple((x + y) % d for x, y, d in zip(a.torsion, b.torsion, self.torsion)))

    def neg(self, a):
        return GroupElem(tuple(-x for x in a.free),
                         tuple((-x) % d for x, d in zip(a.torsion, self.torsion)))

    def scale(self, a, k):
        return GroupElem(tuple(k * x for x in a.free),
                         tuple((k * x) % d for x, d in zip(a.torsion, self.torsion)))

    @property
    def torsion_order(self):
        n = 1
        for d in self.torsion:
            n *= d
        return n


@dataclass(frozen=True)
class DegreeEndo:
    """Endomorphism of an AbGroup: free matrix, free-to-torsion and
    torsion-to-torsion residue matrices (torsion never maps to free)."""

    group: AbGroup
    free_matrix: tuple
    mixed: tuple
    torsion_matrix: tuple

    def apply(self, e):
        g = self.group
        a, t = g.free_rank, len(g.torsion)
        free = tuple(sum(self.free_matrix[i][j] * e.free[j] for j in range(a)) for i in range(a))
        tors = tuple(
            (sum(self.mixed[i][j] * e.free[j] for j in range(a))
             + sum(self.torsion_matrix[i][j] * e.torsion[j] for j in range(t))) % g.torsion[i]
            for i in range(t))
        return GroupElem(free, tors)

    def is_identity(self):
        g = self.group
        return (self.free_matrix == la.identity(g.free_rank)
                and all(all(x % g.torsion[i] == 0 for x in row) for i, row in enumerate(self.mixed))
                and all(all((self.torsion_matrix[i][j] - (1 if i == j else 0)) % g.torsion[i] == 0
                            for j in range(len(g.torsion))) for i in range(len(g.torsion))))

    def is_automorphism(self):
        g = self.group
        a, t = g.free_rank, len(g.torsion)
        if a and abs(la.det_int(self.free_matrix)) != 1:
            return False
        if t:
            seen = set()
            for residues in itertools.product(*(range(d) for d in g.torsion)):
                img = tuple(sum(self.torsion_matrix[i][j] * residues[j] for j in range(t)) % g.torsion[i]
                            for i in range(t))
                seen.add(img)
            if len(seen) != g.torsion_order:
                return False
        return True


@dataclass(frozen=True)
class GradedRing:
    group: AbGroup
    var_degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "var_degrees", tuple(self.var_degrees))

    @property
    def num_vars(self):
        return len(self.var_degrees)


def degree_of(p, ring):
    """Common degree of all terms, ZERO_DEGREE for 0, or raise."""
    if p.num_vars != ring.num_vars:
        raise ValueError("variable count mismatch")
    if p.is_zero():
        return ZERO_DEGREE
    g = ring.group
    deg = None
    first_term = None
    for e in sorted(p.terms):
        d = g.zero()
        for i, k in enumerate(e):
            if k:
                d = g.add(d, g.scale(ring.var_degrees[i], k))
        if deg is None:
            deg, first_term = d, e
        elif d != deg:
            raise NotHomogeneousError(first_term, e)
    return deg


def is_homogeneous(p, ring):
    try:
        degree_of(p, ring)
        return True
    except NotHomogeneousError:
        return False


class GradedEndo:
    """Endomorphism of a graded polynomial ring by homogeneous images."""

    def __init__(self, ring, polymap, elementary=None, validate=True):
        if polymap.source_vars != ring.num_vars or polymap.target_vars != ring.num_vars:
            raise ValueError("map must be an endomorphism of the ring's variables")
        self.ring = ring
        self.map = polymap
        self.elementary = elementary
        if validate:
            for i, img in enumerate(polymap.images):
                try:
                    degree_of(img, ring)
                except NotHomogeneousError:
                    raise ImagesNotHomogeneousError(i) from None

    def image_degrees(self):
        return tuple(degree_of(img, self.ring) for img in self.map.images)

    def __eq__(self, other):
        return (isinstance(other, GradedEndo) and self.ring == other.ring
                and self.map == other.map)

    def __repr__(self):
        return f"GradedEndo({[p.render() for p in self.map.images]})"


@dataclass(frozen=True)
class NormalizationResult:
    kind: str  # "preserves" | "normalizes" | "neither"
    phi0: DegreeEndo = None
    witness: str = ""


def _degree_endo_candidates(group, pairs, search_bound=2, cap=20000):
    """Deterministic stream of degree endomorphisms matching the pairs.

    ``pairs`` are (source GroupElem, target GroupElem).  The free part is
    solved exactly over the rationals; when underdetermined, integer
    nullspace offsets with coefficients up to ``search_bound`` are tried.
    Torsion blocks are enumerated exhaustively (guarded by ``cap``).
    """
    a, t = group.free_rank, len(group.torsion)
    free_solutions = []
    if a == 0:
        free_solutions.append(())
    else:
        src = [p[0].free for p in pairs]
        rows = []
        consistent = True
        for r in range(a):
            rhs = [p[1].free[r] for p in pairs]
            sol = la.solve(src, rhs) if src else tuple(Fraction(0) for _ in range(a))
            if sol is None:
                consistent = False
                break
            rows.append(sol)
        if consistent:
            null = la.nullspace(src) if src else tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(a)) for i in range(a))
            offsets = [()] if not null else itertools.product(
                range(-search_bound, search_bound + 1), repeat=len(null))
            count = 0
            for combo in offsets:
                cand = []
                ok = True
                for r in range(a):
                    row = list(rows[r])
                    for cidx, coeff in enumerate(combo):
                        if coeff:
                            row = [x + coeff * y for x, y in zip(row, null[cidx])]
                    if any(x.denominator != 1 for x in row):
                        ok = False
                        break
                    cand.append(tuple(int(x) for x in row))
                if ok:
                    free_solutions.append(tuple(cand))
                count += 1
                if count > cap:
                    break
    if not free_solutions:
        return

    if t == 0:
        for fm in free_solutions:
            yield DegreeEndo(group, fm, (), ())
        return

    space = group.torsion_order ** (a + t)
    if space > cap:
        raise ValueError("torsion search space too large")
    for fm in free_solutions:
        for flat in itertools.product(*(range(group.torsion[i]) for i in range(t) for _ in range(a + t))):
            mixed = tuple(tuple(flat[i * (a + t) + j] for j in range(a)) for i in range(t))
            tm = tuple(tuple(flat[i * (a + t) + a + j] for j in range(t)) for i in range(t))
            # torsion matrix must define homomorphisms ZZ/d_j -> ZZ/d_i
            if any((tm[i][j] * group.torsion[j]) % group.torsion[i] for i in range(t) for j in range(t)):
                continue
            endo = DegreeEndo(group, fm, mixed, tm)
            if all(endo.apply(u) == w for u, w in pairs):
                yield endo


def check_normalizes(e):
    """Classify a graded endomorphism against the grading.

    Returns ``preserves`` when every image has its variable's degree,
    ``normalizes`` with the induced group automorphism when one exists,
    and ``neither`` otherwise.
    """
    ring = e.ring
    degs = []
    for i, img in enumerate(e.map.images):
        try:
            degs.append(degree_of(img, ring))
        except NotHomogeneousError:
            raise ImagesNotHomogeneousError(i) from None
    pairs = []
    preserved = True
    for vd, d in zip(ring.var_degrees, degs):
        if d is ZERO_DEGREE:
            continue
        pairs.append((vd, d))
        if d != vd:
            preserved = False
    if preserved:
        return NormalizationResult("preserves", _identity_endo(ring.group))
    for endo in _degree_endo_candidates(ring.group, pairs):
        if endo.is_automorphism():
            return NormalizationResult("normalizes", endo)
    return NormalizationResult(
        "neither", None, "no group automorphism matches the induced degree assignment")


def _identity_endo(group):
    a, t = group.free_rank, len(group.torsion)
    return DegreeEndo(group, la.identity(a),
                      tuple((0,) * a for _ in range(t)),
                      la.identity(t) if t else ())


# -- elementary automorphisms ------------------------------------------------

def elementary_shear(ring, index, f):
    """The shear sending variable ``index`` to itself plus ``f``.

    ``f`` must not involve the sheared variable and must be homogeneous
    of that variable's degree (the zero polynomial is allowed).
    """
    n = ring.num_vars
    if not 0 <= index < n:
        raise ValueError("shear index out of range")
    if f.num_vars != n:
        raise ValueError("shear polynomial variable count mismatch")
    if f.involves(index):
        raise DependsOnTargetError(f"shear polynomial may not involve variable {index}")
    d = degree_of(f, ring)
    if d is not ZERO_DEGREE and d != ring.var_degrees[index]:
        raise NotHomogeneousShearError(
            "shear polynomial degree differs from the sheared variable's degree")
    images = [Poly.variable(n, i) for i in range(n)]
    images[index] = images[index] + f
    return GradedEndo(ring, PolyMap(tuple(images)), elementary=("shear", index, f))


def shear_map(ring, index, f):
    """Additive single-variable modification, for the replacement machinery.

    Unlike :func:`elementary_shear` this allows ``f`` to involve the
    modified variable, so the result need not be invertible (the frozen
    compositions studied by the certificate are exactly of this shape).
    Homogeneity of ``f`` is still required.
    """
    n = ring.num_vars
    if not 0 <= index < n:
        raise ValueError("shear index out of range")
    if f.num_vars != n:
        raise ValueError("shear polynomial variable count mismatch")
    d = degree_of(f, ring)
    if d is not ZERO_DEGREE and d != ring.var_degrees[index]:
        raise NotHomogeneousShearError(
            "shear polynomial degree differs from the sheared variable's degree")
    images = [Poly.variable(n, i) for i in range(n)]
    images[index] = images[index] + f
    return GradedEndo(ring, PolyMap(tuple(images)), elementary=("shear", index, f))


def elementary_linear(ring, matrix):
    """A linear substitution from an invertible coefficient matrix."""
    n = ring.num_vars
    rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("linear matrix must be square of the ring size")
    det = _frac_det(rows)
    if det == 0:
        raise SingularLinearError("linear part is singular")
    images = tuple(
        Poly(n, {tuple(1 if j == k else 0 for k in range(n)): rows[i][j]
                 for j in range(n) if rows[i][j] != 0})
        for i in range(n))
    return GradedEndo(ring, PolyMap(images), elementary=("linear", rows))


def _frac_det(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def elementary_inverse(e):
    """Inverse of an elementary endomorphism (negated shear / inverted matrix)."""
    if e.elementary is None:
        raise NotElementaryError("not an elementary endomorphism")
    kind = e.elementary[0]
    if kind == "shear":
        _, index, f = e.elementary
        return elementary_shear(e.ring, index, -f)
    _, rows = e.elementary
    inv = _frac_inverse(rows)
    return elementary_linear(e.ring, inv)


def _frac_inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise SingularLinearError("linear part is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def verify_inverse(e, e_inv):
    """Exact two-sided inverse check by symbolic composition."""
    if e.ring != e_inv.ring:
        raise ValueError("endomorphisms live on different rings")
    return (compose(e.map, e_inv.map).is_identity()
            and compose(e_inv.map, e.map).is_identity())


# -- linear-part replacement and the wildness certificate --------------------

def linear_part(e):
    """Elementary endomorphism with the shear truncated to its linear part."""
    if e.elementary is None:
        raise NotElementaryError("not an elementary endomorphism")
    if e.elementary[0] == "linear":
        return e
    _, index, f = e.elementary
    return elementary_shear(e.ring, index, f.homogeneous_part(1))


def is_nonlinear(e):
    if e.elementary is None:
        raise NotElementaryError("not an elementary endomorphism")
    if e.elementary[0] == "linear":
        return False
    f = e.elementary[2]
    return f != f.homogeneous_part(1)


def rho_replace(seq, frozen_vars, num_vars=None):
    """Compose ``seq`` after replacing nonlinear shears on frozen variables
    by their linear parts.  Variable indices are 0-based.  An empty
    sequence composes to the identity (``num_vars`` must then be given)."""
    frozen = set(frozen_vars)
    replaced = []
    for e in seq:
        if e.elementary is None:
            raise NotElementaryError("sequence contains a non-elementary endomorphism")
        if e.elementary[0] == "shear" and e.elementary[1] in frozen and is_nonlinear(e):
            replaced.append(linear_part(e))
        else:
            replaced.append(e)
    if not replaced:
        if num_vars is None:
            raise ValueError("an empty sequence needs an explicit variable count")
        return PolyMap.identity(num_vars)
    return compose_chain([e.map for e in replaced])


def quadric_grading(extra_zero_vars=0):
    """ZZ-graded polynomial ring with degrees (1, 1, -1, -1, 0, ..., 0)."""
    g = AbGroup(1, ())
    degs = [g.element((1,)), g.element((1,)), g.element((-1,)), g.element((-1,))]
    degs += [g.element((0,))] * extra_zero_vars
    return GradedRing(g, tuple(degs))


def anick_automorphism(ring=None):
    """The two-shear automorphism y2 += y1*D, y4 += y3*D with D = y1*y4 - y2*y3,
    extended identically on any extra degree-zero variables."""
    ring = ring or quadric_grading()
    n = ring.num_vars
    if n < 4:
        raise ValueError("need at least four variables")
    y = [Poly.variable(n, i) for i in range(n)]
    delta = y[0] * y[3] - y[1] * y[2]
    images = list(y)
    images[1] = y[1] + y[0] * delta
    images[3] = y[3] + y[2] * delta
    return GradedEndo(ring, PolyMap(tuple(images)))


def transpose_map(ring=None):
    """The grading-reversing swap (y1, y2, y3, y4) -> (y3, y4, y1, y2)."""
    ring = ring or quadric_grading()
    if ring.num_vars != 4:
        raise ValueError("transpose map is defined on four variables")
    perm = (2, 3, 0, 1)
    images = tuple(Poly.variable(4, perm[i]) for i in range(4))
    return GradedEndo(ring, PolyMap(images))


def nagata_polymap():
    """The three-variable map (y1 - 2*y2*w - y3*w^2, y2 + y3*w, y3), w = y1*y3 + y2^2."""
    y = [Poly.variable(3, i) for i in range(3)]
    w = y[0] * y[2] + y[1] * y[1]
    return PolyMap((y[0] - 2 * y[1] * w - y[2] * w * w, y[1] + y[2] * w, y[2]))


@dataclass(frozen=True)
class NotZeta:
    """The sequence does not compose to the two-shear target map."""

    variable: int


@dataclass(frozen=True)
class WildnessCertificate:
    f: Poly
    g: Poly
    det_jacobian: Poly
    residual: Poly


@dataclass(frozen=True)
class WildnessMachinery:
    """Raw quantities of the linear-part replacement argument."""

    rho: PolyMap
    f: Poly
    g: Poly
    det_jacobian: Poly
    residual: Poly
    f_in_i3: bool
    g_in_i3: bool
    residual_in_i2: bool
    rho_fixes_frozen: bool
    det_is_constant: bool


def wildness_machinery(seq, ring=None):
    """Compute rho (frozen variables 2, 3), the deviations from the
    two-shear map, and the Jacobian determinant data, without requiring
    the sequence to compose to that map."""
    ring = ring or (seq[0].ring if seq else quadric_grading())
    zeta = anick_automorphism(ring)
    rho = rho_replace(seq, frozen_vars=(2, 3), num_vars=ring.num_vars)
    f = zeta.map.images[0] - rho.images[0]
    g = zeta.map.images[1] - rho.images[1]
    det_j = poly_det(jacobian(rho))
    n = ring.num_vars
    one_minus = Poly.constant(n, 1) - Poly.variable(n, 0) * Poly.variable(n, 2)
    residual = det_j - one_minus
    ideal = (0, 1)
    fixes = (rho.images[2] == Poly.variable(n, 2) and rho.images[3] == Poly.variable(n, 3))
    return WildnessMachinery(
        rho=rho, f=f, g=g, det_jacobian=det_j, residual=residual,
        f_in_i3=in_ideal_power(f, ideal, 3),
        g_in_i3=in_ideal_power(g, ideal, 3),
        residual_in_i2=in_ideal_power(residual, ideal, 2),
        rho_fixes_frozen=fixes,
        det_is_constant=det_j.total_degree() <= 0)


def wildness_certificate(seq, ring=None):
    """Check a claimed elementary decomposition of the two-shear map.

    If the composition differs from the target, returns NotZeta with the
    first differing variable.  Otherwise runs the linear-part replacement
    argument and returns the certificate whose non-constant Jacobian
    determinant contradicts the decomposition's existence.
    """
    ring = ring or (seq[0].ring if seq else quadric_grading())
    if ring.num_vars != 4:
        raise ValueError("the certificate machinery works on the four-variable ring")
    for e in seq:
        if e.elementary is None:
            raise NotElementaryError("sequence contains a non-elementary endomorphism")
        if check_normalizes(e).kind != "preserves":
            raise ValueError("sequence elements must preserve the grading")
    zeta = anick_automorphism(ring)
    chain = compose_chain([e.map for e in seq]) if seq else PolyMap.identity(4)
    for i in range(4):
        if chain.images[i] != zeta.map.images[i]:
            return NotZeta(i)
    m = wildness_machinery(seq, ring)
    if not (m.f_in_i3 and m.g_in_i3 and m.residual_in_i2 and m.rho_fixes_frozen):
        raise AssertionError("linear-part replacement invariants failed")
    return WildnessCertificate(m.f, m.g, m.det_jacobian, m.residual)


def shear_family(ring, index, f, h, k):
    """The grading-preserving shear variable_index += f * h^k.

    ``f`` must be homogeneous of the sheared variable's degree and ``h``
    homogeneous of degree zero; neither may involve the sheared variable.
    """
    k = int(k)
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if h.involves(index):
        raise DependsOnTargetError("h may not involve the sheared variable")
    dh = degree_of(h, ring)
    if dh is not ZERO_DEGREE and dh != ring.group.zero():
        raise NotHomogeneousShearError("h must be homogeneous of degree zero")
    return elementary_shear(ring, index, f * h ** k)


def search_tame_decomposition(target, ring=None, max_len=3, max_h_degree=1):
    """Bounded breadth-first search for an elementary grading-preserving
    decomposition of ``target`` over the quadric ring.

    The catalog holds the four shear shapes with monomial coefficients
    +/-1 up to the given degree in the two degree-zero products.  Returns
    the sequence of shears, or None when the caps are exhausted.  This is
    a desk-scale search, not a decision procedure.
    """
    ring = ring or quadric_grading()
    n = ring.num_vars
    if n != 4:
        raise ValueError("search is implemented for the four-variable quadric ring")
    y = [Poly.variable(4, i) for i in range(4)]
    shapes = {
        0: (y[1], (y[1] * y[2], y[1] * y[3])),
        1: (y[0], (y[0] * y[2], y[0] * y[3])),
        2: (y[3], (y[0] * y[3], y[1] * y[3])),
        3: (y[2], (y[0] * y[2], y[1] * y[2])),
    }
    catalog = []
    for index, (front, (u, v)) in shapes.items():
        for l in range(max_h_degree + 1):
            for r in range(max_h_degree + 1 - l):
                for sign in (1, -1):
                    f = sign * front * u ** l * v ** r
                    catalog.append(elementary_shear(ring, index, f))
    frontier = [(PolyMap.identity(4), ())]
    seen = {frontier[0][0].images}
    for _ in range(max_len):
        next_frontier = []
        for state, seq in frontier:
            for e in catalog:
                new = compose(e.map, state)
                if new.images in seen:
                    continue
                seen.add(new.images)
                new_seq = seq + (e,)
                if new == target:
                    return list(new_seq)
                next_frontier.append((new, new_seq))
        frontier = next_frontier
    return None
