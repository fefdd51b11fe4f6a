"""Rational polyhedral cones over an explicit ambient lattice.

A :class:`Cone` is given by generator vectors inside a lattice ``L``
(rows of ``lattice`` form a basis of ``L`` inside ZZ^ambient_rank; the
default is the full integer lattice).  Construction canonicalizes: rays
are made primitive with respect to ``L``, deduplicated, reduced to the
extreme rays, and sorted lexicographically.

All cone computations happen in coordinates of the saturated sublattice
``L ∩ span(rays)``, so non-full-dimensional input is handled by
restricting to its span first.  Facet normals are computed with the
double description method using exact integer pivots.
"""

import itertools
from fractions import Fraction
from math import gcd

from . import intlinalg as la


class NonPointedError(ValueError):
    """The cone contains a line where a pointed cone was required."""


class NotFullDimensionalError(ValueError):
    """The cone does not span its ambient lattice."""


_MAX_RANK = 8


def _dual_extreme_rays(normals, dim):
    """Extreme rays of {x : n.x >= 0 for all n}, assuming the normals span.

    Incremental double description: seed with a simplicial cone cut out
    by ``dim`` independent normals, then clip by the remaining halfspaces,
    keeping only extreme rays (tight-set rank dim-1) after each step.
    """
    if dim == 0:
        return ()
    if dim == 1:
        signs = {1 if n[0] > 0 else -1 for n in normals if n[0] != 0}
        if len(signs) != 1:
            return ()
        return ((signs.pop(),),)

    # pick dim independent normals for the simplicial seed
    seed = []
    rest = []
    for n in normals:
        if len(seed) < dim and la.rank(seed + [n]) == len(seed) + 1:
            seed.append(n)
        else:
            rest.append(n)
    if len(seed) < dim:
        raise NotFullDimensionalError("normals do not span the space")

    # {x : B x >= 0} for invertible B is spanned by the columns of B^{-1}
    binv = la.inverse_frac(seed)
    rays = []
    for j in range(dim):
        col = [binv[i][j] for i in range(dim)]
        den = 1
        for f in col:
            den = den * f.denominator // gcd(den, f.denominator)
        rays.append(la.primitive(tuple(int(f * den) for f in col)))

    processed = list(seed)

    def extreme_only(cands):
        out = []
        seen = set()
        for r in cands:
            r = la.primitive(r)
            if r in seen:
                continue
            seen.add(r)
            tight = [n for n in processed if la.dot(n, r) == 0]
            if la.rank(tight) == dim - 1:
                out.append(r)
        return out

    rays = extreme_only(rays)
    for n in rest:
        vals = [(r, la.dot(n, r)) for r in rays]
        pos = [(r, v) for r, v in vals if v > 0]
        zero = [r for r, v in vals if v == 0]
        neg = [(r, v) for r, v in vals if v < 0]
        processed.append(n)
        if not neg:
            rays = extreme_only([r for r, _ in pos] + zero)
            continue
        cands = [r for r, _ in pos] + zero
        for rp, vp in pos:
            for rn, vn in neg:
                cands.append(tuple(vp * x - vn * y for x, y in zip(rn, rp)))
        rays = extreme_only(cands)
    return tuple(sorted(rays))


class Cone:
    """Pointedness-aware rational cone with canonical extreme rays."""

    def __init__(self, ambient_rank, generators, lattice=None):
        ambient_rank = int(ambient_rank)
        if ambient_rank < 1 or ambient_rank > _MAX_RANK:
            raise ValueError(f"ambient rank must be in 1..{_MAX_RANK}")
        gens = [la.vec(g) for g in generators]
        if any(len(g) != ambient_rank for g in gens):
            raise ValueError("generator dimension mismatch")
        gens = [g for g in gens if not la.is_zero_vec(g)]
        if lattice is None:
            lattice = la.identity(ambient_rank)
        else:
            lattice = la.mat(lattice)
            if la.rank(lattice) != len(lattice):
                raise ValueError("lattice basis rows must be independent")
        self.ambient_rank = ambient_rank
        self.lattice = lattice

        if not gens:
            self.rays = ()
            self.span_basis = ()
            self._coords = ()
            self._dual = ()
            self.pointed = True
            return

        coords = []
        for g in gens:
            c = la.lattice_coords(lattice, g)
            if c is None:
                raise ValueError(f"generator {g} is not in the lattice")
            coords.append(c)

        # restrict to the saturated span lattice inside L; a full-dimensional
        # cone keeps L's own basis so functionals stay in ambient coordinates
        if la.rank(coords) == len(lattice):
            span = la.identity(len(lattice))
        else:
            span = la.saturation_basis(coords)
        sub = []
        for c in coords:
            cc = la.lattice_coords(span, c)
            if cc is None:
                raise AssertionError("saturation failed to contain a generator")
            sub.append(la.primitive(cc))
        dim = len(span)
        # rows of span_basis are ambient vectors: a basis of L ∩ span(rays)
        self.span_basis = tuple(la.vec_mat(s, lattice) for s in span)

        normals = list(dict.fromkeys(sub))
        dual = _dual_extreme_rays(normals, dim)
        self.pointed = la.rank(dual) == dim if dual else dim == 0
        self._dual = dual

        if self.pointed:
            kept = []
            for c in dict.fromkeys(sub):
                tight = [d for d in dual if la.dot(d, c) == 0]
                if la.rank(tight) == dim - 1:
                    kept.append(c)
        else:
            kept = list(dict.fromkeys(sub))
        pairs = sorted((la.vec_mat(c, self.span_basis), c) for c in kept)
        self.rays = tuple(p[0] for p in pairs)
        self._coords = tuple(p[1] for p in pairs)

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self):
        """Dimension of the linear span of the cone."""
        return len(self.span_basis)

    def facet_normals(self):
        """Facet normals in coordinates dual to ``span_basis`` rows."""
        self._require_pointed()
        return self._dual

    def ray_coords(self):
        """Rays in coordinates of ``span_basis`` (full-dimensional there)."""
        return self._coords

    def _require_pointed(self):
        if not self.pointed:
            raise NonPointedError("cone contains a line")

    def __eq__(self, other):
        return (isinstance(other, Cone)
                and self.ambient_rank == other.ambient_rank
                and self.lattice == other.lattice
                and self.rays == other.rays)

    def __repr__(self):
        return f"Cone(rank={self.ambient_rank}, rays={list(self.rays)})"


def dual_cone(c):
    """Extreme rays of the dual cone as primitive functionals on c's lattice.

    The result is a Cone of ambient rank ``c.dim`` over the standard
    lattice; its rays are the facet normals of ``c`` written in the basis
    dual to ``c.span_basis``.  For a full-dimensional cone over the
    standard lattice these are honest integer covectors on ZZ^n.
    """
    c._require_pointed()
    if c.dim == 0:
        raise NonPointedError("dual of the zero cone is not pointed")
    return Cone(c.dim, c._dual)


def cone_contains(c, v):
    """Exact membership of v in the rational cone spanned by c's rays."""
    c._require_pointed()
    v = la.vec(v)
    if len(v) != c.ambient_rank:
        raise ValueError("dimension mismatch")
    if not c.rays:
        return la.is_zero_vec(v)
    x = la.rational_coords(c.span_basis, v)
    if x is None:
        return False
    return all(sum(Fraction(d[i]) * x[i] for i in range(len(x))) >= 0
               for d in c._dual)


def _parallelepiped_points(rows):
    """Nonzero lattice points of the half-open parallelepiped of ``rows``.

    ``rows`` are linearly independent integer vectors in ZZ^dim with
    dim == len(rows); points x satisfy x = sum t_i rows_i, 0 <= t_i < 1.
    """
    s, _u, v = la.snf(rows)
    dim = len(rows)
    diag = [s[i][i] for i in range(dim)]
    vinv = la.inverse_int(v)
    tinv = la.inverse_frac(rows)
    points = []
    for residues in itertools.product(*(range(d) for d in diag)):
        x0 = tuple(sum(residues[i] * vinv[i][j] for i in range(dim)) for j in range(dim))
        # t = x0 . rows^{-1}; reduce fractional parts into [0, 1)
        t = tuple(sum(Fraction(x0[i]) * tinv[i][j] for i in range(dim)) for j in range(dim))
        x = x0
        for i, ti in enumerate(t):
            fl = ti.numerator // ti.denominator
            if fl:
                x = tuple(a - fl * b for a, b in zip(x, rows[i]))
        if not la.is_zero_vec(x):
            points.append(x)
    return points


def hilbert_basis(c):
    """Minimal generating set of ``cone ∩ L`` (ambient vectors, sorted).

    Candidates are gathered from the fundamental parallelepipeds of the
    simplicial subcones spanned by independent ray subsets (these cover
    the cone by Caratheodory), then reduced to the irreducible elements.
    """
    c._require_pointed()
    coords = c._coords
    dim = c.dim
    if dim == 0 or not coords:
        return ()
    dual = c._dual

    def in_cone(x):
        return all(la.dot(d, x) >= 0 for d in dual)

    weight_vec = tuple(sum(d[i] for d in dual) for i in range(dim))

    def weight(x):
        return la.dot(weight_vec, x)

    candidates = set(coords)
    for subset in itertools.combinations(coords, dim):
        if la.det_int(subset) == 0:
            continue
        for p in _parallelepiped_points(subset):
            if in_cone(p):
                candidates.add(p)
    ordered = sorted(candidates, key=lambda x: (weight(x), x))
    basis = []
    for x in ordered:
        wx = weight(x)
        reducible = False
        for y in ordered:
            if weight(y) >= wx:
                break
            if in_cone(la.vec_sub(x, y)):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return tuple(sorted(la.vec_mat(b, c.span_basis) for b in basis))
