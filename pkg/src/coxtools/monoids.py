"""Affine monoids, divisor theories, and embedding extension.

An affine monoid is given by generator vectors in an integer lattice.
Its *divisor theory* is the embedding into a free commutative monoid
ZZ^r_{>=0} whose coordinates are the primitive functionals on the edges
of the dual cone; it exists exactly when the monoid is saturated (equal
to the lattice points of its own cone).

``extend_embedding`` takes another embedding ``alpha`` of the monoid
into a free monoid and either extends it to the divisor theory or
returns a finite witness violating one of the two extension conditions:

  (*)  whenever alpha(a) = alpha(b) + s with s in the free monoid,
       s must itself be an alpha-image;
  (**) a subset with no common divisor in the divisor theory must have
       no common prime in the target.

All searches are depth-bounded and deterministic; monoid elements are
enumerated by total generator degree, then lexicographic exponents, so
reported witnesses are reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .cones import Cone, NonPointedError, hilbert_basis

DEFAULT_DEPTH = 8


class NotSaturatedError(ValueError):
    """Raised when a divisor theory is requested for a non-saturated monoid."""

    def __init__(self, witness):
        super().__init__(f"monoid is not saturated; missing lattice point {witness}")
        self.witness = witness


class DepthInsufficientError(ValueError):
    """The bounded search neither produced an extension nor a violation."""


class AffineMonoid:
    """Finitely generated submonoid of ZZ^n with a pointed cone.

    ``group_basis`` rows span the monoid's group: by default the integer
    span of the generators, but a larger ambient group may be supplied
    (saturation is always judged inside ``group_basis``'s lattice).
    """

    def __init__(self, ambient_rank, generators, group_basis=None):
        self.ambient_rank = int(ambient_rank)
        gens = tuple(la.vec(g) for g in generators)
        if not gens:
            raise ValueError("a monoid needs at least one generator")
        if any(len(g) != self.ambient_rank for g in gens):
            raise ValueError("generator dimension mismatch")
        if any(la.is_zero_vec(g) for g in gens):
            raise ValueError("zero generator")
        self.generators = gens
        if group_basis is None:
            h, _u = la.hnf(gens)
            basis = tuple(r for r in h if not la.is_zero_vec(r))
        else:
            basis = la.mat(group_basis)
            if la.rank(basis) != len(basis):
                raise ValueError("group basis rows must be independent")
            for g in gens:
                if la.lattice_coords(basis, g) is None:
                    raise ValueError(f"generator {g} lies outside the given group")
        self.group_basis = basis
        self.cone = Cone(self.ambient_rank, gens, lattice=basis)
        if not self.cone.pointed:
            raise NonPointedError("monoid has nontrivial units (cone is not pointed)")

    @property
    def group_rank(self):
        return len(self.group_basis)

    def contains(self, v):
        """Exact membership: is v a nonnegative integer combination of
        the generators?  Decided by depth-first search pruned by cone
        membership; the strictly positive facet-sum functional bounds
        the recursion."""
        v = la.vec(v)
        coords = la.rational_coords(self.cone.span_basis, v)
        if coords is None or any(c.denominator != 1 for c in coords):
            return False
        target = tuple(int(c) for c in coords)
        dual = self.cone.facet_normals()
        gen_coords = self.cone_coords_of_generators()

        # termination: subtracting a generator strictly decreases the sum
        # of all facet values, which stays nonnegative inside the cone
        def in_cone(x):
            return all(la.dot(d, x) >= 0 for d in dual)

        if not in_cone(target):
            return False
        memo = {}

        def search(t, start):
            if la.is_zero_vec(t):
                return True
            key = (t, start)
            if key in memo:
                return memo[key]
            ok = False
            for i in range(start, len(gen_coords)):
                rest = la.vec_sub(t, gen_coords[i])
                if in_cone(rest) and search(rest, i):
                    ok = True
                    break
            memo[key] = ok
            return ok

        return search(target, 0)

    def cone_coords_of_generators(self):
        out = []
        for g in self.generators:
            c = la.lattice_coords(self.cone.span_basis, g)
            if c is None:
                raise AssertionError("generator fell outside its span lattice")
            out.append(c)
        return tuple(out)


def is_saturated(m):
    """(True, None) if the monoid equals the lattice points of its cone,
    else (False, witness) with the first Hilbert basis element that is
    not a generator combination."""
    for h in hilbert_basis(m.cone):
        if not m.contains(h):
            return False, h
    return True, None


class DivisorTheory:
    """An embedding of a monoid into ZZ^r_{>=0} by integer functionals.

    ``functionals`` rows are written in the basis dual to
    ``lattice_basis`` rows (the monoid's group).  Rows produced by
    :func:`divisor_theory` are primitive, pairwise distinct, and are the
    edge generators of the dual cone in canonical (lexicographic) order.
    Hand-built instances may violate primitivity; only nonnegativity on
    the generators and full rank are enforced here, so that defective
    embeddings can be fed to :func:`verify_divisor_axioms`.
    """

    def __init__(self, monoid, functionals, lattice_basis=None):
        self.monoid = monoid
        self.lattice_basis = la.mat(lattice_basis) if lattice_basis is not None \
            else monoid.cone.span_basis
        self.functionals = la.mat(functionals)
        k = len(self.lattice_basis)
        if any(len(row) != k for row in self.functionals):
            raise ValueError("functional row length must match the group rank")
        if la.rank(self.functionals) != k:
            raise ValueError("functionals must have full rank (injective embedding)")
        for g in monoid.generators:
            if any(x < 0 for x in self.image(g)):
                raise ValueError("a generator has a negative image coordinate")

    @classmethod
    def from_ambient_functionals(cls, monoid, rows, lattice_basis=None):
        """Build from integer covectors on the ambient lattice."""
        basis = la.mat(lattice_basis) if lattice_basis is not None \
            else monoid.cone.span_basis
        internal = tuple(tuple(la.dot(row, b) for b in basis) for row in rows)
        return cls(monoid, internal, basis)

    @property
    def free_rank(self):
        return len(self.functionals)

    def image(self, v):
        """Image of a group element in ZZ^r."""
        c = la.lattice_coords(self.lattice_basis, v)
        if c is None:
            raise ValueError(f"{v} is not in the monoid's group")
        return tuple(la.dot(f, c) for f in self.functionals)

    def generator_images(self):
        return tuple(self.image(g) for g in self.monoid.generators)

    def preimage(self, d):
        """The group element mapping to d, or None (the embedding is
        injective on the group, so a preimage is unique)."""
        sol = la.solve(self.functionals, d)
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        return la.vec_mat(tuple(int(x) for x in sol), self.lattice_basis)

    def class_group(self):
        """Invariant factors of (free monoid group) / (monoid group):
        the cokernel of the embedding on groups, read off a Smith normal
        form of the functional matrix.  Returns (free_rank, torsion)."""
        s, _u, _v = la.snf(self.functionals)
        k = len(self.lattice_basis)
        diag = [s[i][i] for i in range(k)]
        free = self.free_rank - k
        torsion = tuple(d for d in diag if d >= 2)
        return free, torsion

    def ambient_functionals(self):
        """Rational covector representatives on the ambient space.

        Unique when the group is full-dimensional; otherwise the
        representative vanishing on the orthogonal complement of the
        group's span is chosen.
        """
        b = self.lattice_basis
        gram = la.mat_mul(b, la.transpose(b))
        ginv = la.inverse_frac(gram)
        out = []
        for f in self.functionals:
            lam = tuple(sum(Fraction(f[i]) * ginv[i][j] for i in range(len(f)))
                        for j in range(len(f)))
            out.append(tuple(sum(lam[i] * b[i][j] for i in range(len(lam)))
                             for j in range(self.monoid.ambient_rank)))
        return tuple(out)


def divisor_theory(m):
    """The canonical divisor theory of a saturated affine monoid.

    Functionals are the primitive generators of the dual cone's edges,
    written on the monoid's group and ordered lexicographically.
    Raises NotSaturatedError (with witness) when none exists.
    """
    sat, witness = is_saturated(m)
    if not sat:
        raise NotSaturatedError(witness)
    return DivisorTheory(m, m.cone.facet_normals())


# ---------------------------------------------------------------------------
# Bounded element enumeration (deterministic: degree, then lexicographic).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Element:
    ambient: tuple
    tau: tuple
    alpha: tuple = None


def _enumerate_elements(dt, depth, alpha=None):
    """Monoid elements with divisor-image coordinate sum <= depth.

    Elements appear ordered by total generator degree and then by
    lexicographic exponent vector; duplicates keep their first
    occurrence.  The unit comes first.
    """
    gens = dt.monoid.generators
    tau_images = dt.generator_images()
    alpha_images = tuple(alpha.image(g) for g in gens) if alpha else None
    seen = {}
    order = []
    zero_amb = (0,) * dt.monoid.ambient_rank
    unit = _Element(zero_amb, (0,) * dt.free_rank,
                    (0,) * alpha.target_rank if alpha else None)
    seen[unit.tau] = unit
    order.append(unit)
    gen_sums = [sum(t) for t in tau_images]
    max_degree = depth  # every generator image has coordinate sum >= 1
    for degree in range(1, max_degree + 1):
        for expo in _compositions(degree, len(gens)):
            s = sum(e * g for e, g in zip(expo, gen_sums))
            if s > depth:
                continue
            tau = tuple(sum(e * t[i] for e, t in zip(expo, tau_images))
                        for i in range(dt.free_rank))
            if tau in seen:
                continue
            ambient = zero_amb
            for e, g in zip(expo, gens):
                ambient = la.vec_add(ambient, la.vec_scale(g, e))
            al = None
            if alpha:
                al = tuple(sum(e * a[i] for e, a in zip(expo, alpha_images))
                           for i in range(alpha.target_rank))
            el = _Element(ambient, tau, al)
            seen[tau] = el
            order.append(el)
    return order


def _compositions(total, parts):
    """Exponent vectors of the given total degree, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Axiom verification.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    failed_axiom: int = 0
    witness: tuple = ()
    depth: int = 0


def _exists_multiple_avoiding(images, da, db):
    """Exact decision: is there a monoid image v with v >= da but not
    v >= db?  Any v splits, per coordinate j with v_j < db_j, into a
    bounded combination of generators positive at j plus arbitrarily
    many generators vanishing at j; the latter can cover any remaining
    coordinate with a positive entry.  No search bound is needed.
    """
    r = len(da)
    for j in range(r):
        if da[j] >= db[j]:
            continue  # the window [da_j, db_j) is empty
        limit = db[j] - 1
        tj = [im for im in images if im[j] > 0]
        sj = [im for im in images if im[j] == 0]
        cover = [any(im[i] > 0 for im in sj) for i in range(r)]

        def feasible(idx, acc):
            if acc[j] > limit:
                return False
            if idx == len(tj):
                if acc[j] < da[j]:
                    return False
                return all(acc[i] >= da[i] or cover[i] for i in range(r))
            im = tj[idx]
            for c in range((limit - acc[j]) // im[j] + 1):
                if feasible(idx + 1, tuple(a + c * b for a, b in zip(acc, im))):
                    return True
            return False

        if feasible(0, (0,) * r):
            return True
    return False


def verify_divisor_axioms(dt, depth):
    """Bounded check of the two divisor-theory axioms.

    Axiom 1: whenever tau(a) = tau(b) + c with c in the free monoid, c
    is itself a tau-image.  Axiom 2: distinct free-monoid elements have
    distinct divisibility sets inside the monoid.  Both quantifiers run
    over coordinate sums <= depth, but an axiom-2 counterexample is only
    reported after an exact (unbounded) confirmation that the two
    divisibility sets coincide, so boundary truncation cannot produce
    spurious reports.  A pass certifies the axioms up to depth only.
    """
    elements = _enumerate_elements(dt, depth)
    # the enumeration is complete up to the depth bound (every generator
    # image has coordinate sum >= 1), so image membership of a difference
    # vector is a set lookup
    tau_set = {e.tau for e in elements}
    # axiom 1
    for a in elements:
        for b in elements:
            if a is b:
                continue
            c = tuple(x - y for x, y in zip(a.tau, b.tau))
            if any(x < 0 for x in c) or all(x == 0 for x in c):
                continue
            if c not in tau_set:
                return AxiomReport(False, 1, (a.ambient, b.ambient, c), depth)
    # axiom 2: group free-monoid elements by truncated divisibility sets,
    # then confirm collisions exactly
    r = dt.free_rank
    gen_images = dt.generator_images()
    by_set = {}
    for total in range(0, depth + 1):
        for d in _compositions(total, r):
            div = frozenset(e.tau for e in elements
                            if all(x >= y for x, y in zip(e.tau, d)))
            bucket = by_set.setdefault(div, [])
            for other in bucket:
                if not (_exists_multiple_avoiding(gen_images, other, d)
                        or _exists_multiple_avoiding(gen_images, d, other)):
                    return AxiomReport(False, 2, (other, d), depth)
            bucket.append(d)
    return AxiomReport(True, 0, (), depth)


# ---------------------------------------------------------------------------
# Embedding extension (conditions (*) and (**)).
# ---------------------------------------------------------------------------

class MonoidHom:
    """Linear map into the exponent lattice of a free monoid.

    Entries may be rational: a monoid map defined on the monoid's group
    need not extend integrally to the ambient lattice.  Images of actual
    group elements must come out integral; ``image`` enforces that.
    """

    def __init__(self, matrix):
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if not self.matrix:
            raise ValueError("empty matrix")
        self.target_rank = len(self.matrix)

    @classmethod
    def from_generator_images(cls, monoid, images):
        """Rational matrix sending each generator to its given image
        (vanishing on the orthogonal complement of the group's span).
        Raises if the images are inconsistent with generator relations.
        """
        images = [la.vec(i) for i in images]
        if len(images) != len(monoid.generators):
            raise ValueError("one image per generator required")
        target_rank = len(images[0])
        gens = monoid.generators
        rows = []
        for r in range(target_rank):
            rhs = [im[r] for im in images]
            sol = la.solve(gens, rhs)
            if sol is None:
                raise ValueError("images are inconsistent with generator relations")
            rows.append(sol)
        # project each row onto the span of the generators
        basis = monoid.cone.span_basis
        gram = la.mat_mul(basis, la.transpose(basis))
        ginv = la.inverse_frac(gram)
        proj = []
        for row in rows:
            vals = tuple(sum(Fraction(b[j]) * row[j] for j in range(len(row))) for b in basis)
            lam = tuple(sum(vals[i] * ginv[i][j] for i in range(len(vals)))
                        for j in range(len(vals)))
            proj.append(tuple(sum(lam[i] * Fraction(basis[i][j]) for i in range(len(lam)))
                              for j in range(monoid.ambient_rank)))
        hom = cls(proj)
        for g, im in zip(gens, images):
            if hom.image(g) != tuple(im):
                raise ValueError("images are inconsistent with generator relations")
        return hom

    def image(self, v):
        out = tuple(sum(row[i] * v[i] for i in range(len(v))) for row in self.matrix)
        if any(x.denominator != 1 for x in out):
            raise ValueError(f"image of {tuple(v)} is not integral")
        return tuple(int(x) for x in out)


@dataclass(frozen=True)
class Beta:
    """Unique extension of alpha to the divisor theory: a nonnegative
    integer matrix with Beta . (tau images) == (alpha images)."""

    matrix: tuple


@dataclass(frozen=True)
class ViolationStar:
    """alpha(a) = alpha(b) + s but s has no alpha-preimage."""

    a: tuple
    b: tuple
    s: tuple


@dataclass(frozen=True)
class ViolationStarStar:
    """witness_set (divisor-theory images) is coprime in the divisor
    theory but every member's alpha-image shares the common prime.
    ``common_prime_index`` is 1-based, matching prime numbering."""

    witness_set: tuple
    common_prime_index: int


@dataclass(frozen=True)
class NotAnEmbedding:
    """Two distinct monoid elements with equal alpha-images."""

    a: tuple
    b: tuple


def extend_embedding(dt, alpha, depth=DEFAULT_DEPTH):
    """Extend ``alpha`` through the divisor theory, or find a violation.

    Checks, in order: injectivity of alpha (up to depth), condition (*),
    condition (**), and finally constructs the extension matrix from the
    divisibility-set correspondence between primes of the target and
    primes of the divisor theory.  Raises DepthInsufficientError when
    the bounded data cannot settle the answer.
    """
    gens = dt.monoid.generators
    for g in gens:
        if all(x == 0 for x in alpha.image(g)):
            return NotAnEmbedding(g, (0,) * dt.monoid.ambient_rank)
        if any(x < 0 for x in alpha.image(g)):
            raise ValueError("alpha must map generators into the free monoid")

    elements = _enumerate_elements(dt, depth, alpha)
    if max(sum(t) for t in dt.generator_images()) > depth:
        raise DepthInsufficientError("depth smaller than a generator's image")

    by_alpha = {}
    for e in elements:
        other = by_alpha.get(e.alpha)
        if other is not None:
            return NotAnEmbedding(other.ambient, e.ambient)
        by_alpha[e.alpha] = e

    alpha_gen_images = tuple(alpha.image(g) for g in gens)

    def alpha_represents(s):
        """Exact decision of s in alpha(monoid), by bounded subtraction."""
        memo = {}

        def rec(t, start):
            if all(x == 0 for x in t):
                return True
            key = (t, start)
            if key in memo:
                return memo[key]
            ok = False
            for i in range(start, len(alpha_gen_images)):
                gi = alpha_gen_images[i]
                if all(x >= y for x, y in zip(t, gi)):
                    if rec(tuple(x - y for x, y in zip(t, gi)), i):
                        ok = True
                        break
            memo[key] = ok
            return ok

        return rec(s, 0)

    # condition (*)
    nonunit = elements[1:]
    for a in nonunit:
        for b in nonunit:
            if a is b:
                continue
            s = tuple(x - y for x, y in zip(a.alpha, b.alpha))
            if any(x < 0 for x in s) or all(x == 0 for x in s):
                continue
            if not alpha_represents(s):
                return ViolationStar(a.ambient, b.ambient, s)

    # condition (**): one maximal candidate subset per target prime
    target_rank = alpha.target_rank
    for p in range(target_rank):
        subset = [e for e in nonunit if e.alpha[p] > 0]
        if not subset:
            continue
        if any(min(e.tau[j] for e in subset) > 0 for j in range(dt.free_rank)):
            continue  # subset has a common divisor in the divisor theory
        # prefer the generator subset when it is already coprime
        gen_candidates = [e for e in nonunit
                          if e.ambient in gens and e.alpha[p] > 0]
        witness = subset
        if gen_candidates and not any(
                min(e.tau[j] for e in gen_candidates) > 0
                for j in range(dt.free_rank)):
            witness = gen_candidates
        return ViolationStarStar(tuple(e.tau for e in witness), p + 1)

    # construct the extension from divisibility-set matching
    r = dt.free_rank
    l_sets = []
    for j in range(r):
        lj = frozenset(i for i, e in enumerate(elements) if e.tau[j] > 0)
        if not lj:
            raise DepthInsufficientError("a divisor-theory prime divides no element in range")
        l_sets.append(lj)
    matrix = [[0] * r for _ in range(target_rank)]
    matched = set()
    for p in range(target_rank):
        n_p = frozenset(i for i, e in enumerate(elements) if e.alpha[p] > 0)
        if not n_p:
            continue
        js = [j for j in range(r) if l_sets[j] == n_p]
        if len(js) != 1:
            raise DepthInsufficientError(
                "divisibility sets do not single out a divisor-theory prime")
        j = js[0]
        matched.add(j)
        exponent = 1
        while True:
            higher = frozenset(i for i, e in enumerate(elements)
                               if e.alpha[p] >= exponent + 1)
            if higher == n_p:
                exponent += 1
            else:
                break
        matrix[p][j] = exponent
    if matched != set(range(r)):
        raise DepthInsufficientError("some divisor-theory prime has no matching target prime")
    beta = la.mat(matrix)
    tau_gen = dt.generator_images()
    for gi, ag in zip(tau_gen, alpha_gen_images):
        if la.mat_vec(beta, gi) != ag:
            raise DepthInsufficientError("candidate extension fails on a generator")
    return Beta(beta)
