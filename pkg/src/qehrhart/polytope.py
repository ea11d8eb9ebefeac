"""Lattice polytopes: hulls, facets, exact lattice-point enumeration,
polytope constructions, antiblocking detection, decomposition checks.

Lower-dimensional polytopes are handled through a Hermite-normal-form
parametrization of the affine lattice: enumeration runs in hull coordinates
and maps back, so simplices sitting inside hyperplanes work like
full-dimensional ones.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as iproduct
from math import gcd

from .linalg import Mat, solve


class PointLocus:
    """Finite set of integer points, sorted and deduplicated."""

    __slots__ = ("ambient_dim", "points")

    def __init__(self, ambient_dim, points):
        self.ambient_dim = ambient_dim
        pts = sorted({tuple(int(x) for x in p) for p in points})
        for p in pts:
            if len(p) != ambient_dim:
                raise ValueError("point of wrong dimension")
        self.points = tuple(pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def __eq__(self, other):
        return (isinstance(other, PointLocus)
                and self.ambient_dim == other.ambient_dim
                and self.points == other.points)

    def __repr__(self):
        return f"PointLocus(dim={self.ambient_dim}, n={len(self.points)})"

    def translate(self, v):
        return PointLocus(self.ambient_dim,
                          [tuple(a + b for a, b in zip(p, v)) for p in self.points])


def minkowski_sum(Z: PointLocus, Zp: PointLocus) -> PointLocus:
    """Sorted deduplicated sumset {z + z'}."""
    if Z.ambient_dim != Zp.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return PointLocus(Z.ambient_dim,
                      [tuple(a + b for a, b in zip(z, zp))
                       for z in Z.points for zp in Zp.points])


def _primitive(vec):
    g = 0
    for a in vec:
        g = gcd(g, a)
    if g > 1:
        return tuple(a // g for a in vec)
    return tuple(vec)


def _int_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * _int_det(minor)
    return total


def _cofactor_normal(diffs, d):
    """Integer normal of the hyperplane through 0 and the d-1 difference
    vectors, or None if they do not span a hyperplane."""
    if d == 1:
        return (1,)
    rows = [list(r) for r in diffs]
    normal = tuple((-1) ** j * _int_det([r[:j] + r[j + 1:] for r in rows])
                   for j in range(d))
    if not any(normal):
        return None
    return normal


def _int_rank(rows, ncols):
    pivots = []
    for r in rows:
        r = list(r)
        for (pc, prow) in pivots:
            c = r[pc]
            if c:
                d = prow[pc]
                r = [d * a - c * b for a, b in zip(r, prow)]
        pc = next((j for j, a in enumerate(r) if a), None)
        if pc is not None:
            pivots.append((pc, r))
    return len(pivots)


def _integer_kernel(rows, n):
    """Basis of the lattice {x in Z^n : r . x = 0 for all rows r}.

    Column elimination with a tracked unimodular transform; the result is a
    genuine lattice basis (saturated), not just a spanning set.
    """
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    C = [list(r) for r in rows]
    m = len(C)
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # n x n
    # column HNF: reduce C columns, tracking U (columns of U follow C's)
    row = 0
    col = 0
    while row < m and col < n:
        # find column with nonzero entry in this row
        nz = [j for j in range(col, n) if C[row][j] != 0]
        if not nz:
            row += 1
            continue
        while True:
            nz = [j for j in range(col, n) if C[row][j] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(C[row][j]))
            pj = nz[0]
            for j in nz[1:]:
                f = C[row][j] // C[row][pj]
                for i in range(m):
                    C[i][j] -= f * C[i][pj]
                for i in range(n):
                    U[i][j] -= f * U[i][pj]
        pj = nz[0]
        if pj != col:
            for i in range(m):
                C[i][col], C[i][pj] = C[i][pj], C[i][col]
            for i in range(n):
                U[i][col], U[i][pj] = U[i][pj], U[i][col]
        row += 1
        col += 1
    kernel_cols = [j for j in range(n) if all(C[i][j] == 0 for i in range(m))]
    return [tuple(U[i][j] for i in range(n)) for j in kernel_cols]


class LatticePolytope:
    """Convex hull of integer points; cached hull and facet data.

    ``vertices`` keeps the extreme points in input order.  Facets are stored
    in hull coordinates as (primitive integer normal, integer offset) with
    the convention normal . u <= offset.
    """

    def __init__(self, vertices, name=None):
        pts = [tuple(int(x) for x in v) for v in vertices]
        if not pts:
            raise ValueError("a polytope needs at least one vertex")
        self.ambient_dim = len(pts[0])
        if any(len(p) != self.ambient_dim for p in pts):
            raise ValueError("mixed ambient dimensions")
        self.name = name
        dedup = []
        for p in pts:
            if p not in dedup:
                dedup.append(p)
        self._setup_hull(dedup)
        points_u = [self.hull_coords(p) for p in dedup]
        self._facets = self._compute_facets(points_u)
        # a generating point is extreme iff its active facet normals span
        self.vertices = tuple(
            p for p, u in zip(dedup, points_u) if self._active_rank(u) == self.dim)
        self._antiblocking = None

    # -- hull -----------------------------------------------------------

    def _setup_hull(self, pts):
        n = self.ambient_dim
        base = pts[0]
        diffs = [tuple(p[i] - base[i] for i in range(n)) for p in pts[1:]]
        diffs = [d for d in diffs if any(d)]
        if diffs:
            constraints = _integer_kernel(diffs, n)  # normals of the affine hull
        else:
            constraints = [tuple(1 if j == i else 0 for j in range(n))
                           for i in range(n)]
        self.hull_normals = constraints
        self.lattice_basis = _integer_kernel(constraints, n)
        self.dim = len(self.lattice_basis)
        # full-dimensional polytopes keep ambient coordinates (base at 0)
        self.base = (0,) * n if self.dim == n else base
        # rational solve matrix for hull coordinates: B^T u = z - base
        if self.dim:
            self._bt = Mat([[self.lattice_basis[k][i] for k in range(self.dim)]
                            for i in range(n)])
        else:
            self._bt = None

    def hull_coords(self, z, scale=1):
        """Coordinates u with z = scale*base + sum u_k b_k, or None."""
        n = self.ambient_dim
        rhs = [z[i] - scale * self.base[i] for i in range(n)]
        for c in self.hull_normals:
            if sum(a * b for a, b in zip(c, rhs)) != 0:
                return None
        if self.dim == 0:
            return () if not any(rhs) else None
        u = solve(self._bt, rhs)
        if u is None:
            return None
        if any(x.denominator != 1 for x in u):
            return None
        return tuple(int(x) for x in u)

    def from_hull_coords(self, u, scale=1):
        n = self.ambient_dim
        return tuple(scale * self.base[i]
                     + sum(u[k] * self.lattice_basis[k][i] for k in range(self.dim))
                     for i in range(n))

    def _vertex_hull_coords(self):
        return [self.hull_coords(v) for v in self.vertices]

    def _active_rank(self, u):
        if self.dim == 0:
            return 0
        active = [nrm for (nrm, off) in self._facets
                  if sum(a * b for a, b in zip(nrm, u)) == off]
        return _int_rank(active, self.dim)

    # -- facets ----------------------------------------------------------

    def _compute_facets(self, points_u):
        d = self.dim
        if d == 0:
            return ()
        found = {}
        for sub in combinations(points_u, d):
            diffs = [tuple(p[i] - sub[0][i] for i in range(d)) for p in sub[1:]]
            normal = _cofactor_normal(diffs, d)
            if normal is None:
                continue
            normal = _primitive(normal)
            off = sum(a * b for a, b in zip(normal, sub[0]))
            sides = {sum(a * b for a, b in zip(normal, u)) - off
                     for u in points_u}
            if all(s <= 0 for s in sides):
                found[(normal, off)] = True
            if all(s >= 0 for s in sides):
                nneg = tuple(-a for a in normal)
                found[(nneg, -off)] = True
        return tuple(sorted(found))

    def facets(self):
        """(normal, offset) pairs in hull coordinates; normal . u <= offset."""
        return self._facets

    # -- membership and enumeration --------------------------------------

    def contains(self, z):
        """Exact membership of an integer point in P."""
        u = self.hull_coords_rational(z)
        if u is None:
            return False
        return all(sum(a * b for a, b in zip(nrm, u)) <= off
                   for (nrm, off) in self._facets)

    def hull_coords_rational(self, z, scale=1):
        """Hull coordinates allowing rational values (affine hull membership)."""
        n = self.ambient_dim
        rhs = [Fraction(z[i]) - scale * self.base[i] for i in range(n)]
        for c in self.hull_normals:
            if sum(a * b for a, b in zip(c, rhs)) != 0:
                return None
        if self.dim == 0:
            return () if not any(rhs) else None
        return solve(self._bt, rhs)

    def lattice_points(self, m: int) -> PointLocus:
        """Integer points of the dilate mP (m = 0 gives the origin)."""
        if m < 0:
            raise ValueError("dilation factor must be nonnegative")
        if m == 0:
            return PointLocus(self.ambient_dim, [(0,) * self.ambient_dim])
        return self._enumerate(m, strict=False)

    def interior_lattice_points(self, m: int) -> PointLocus:
        """Integer points in the relative interior of mP (m >= 1)."""
        if m < 1:
            raise ValueError("interior enumeration needs m >= 1")
        return self._enumerate(m, strict=True)

    def _enumerate(self, m, strict):
        d = self.dim
        if d == 0:
            pt = tuple(m * x for x in self.base)
            return PointLocus(self.ambient_dim, [pt])
        verts_u = self._vertex_hull_coords()
        lo = [m * min(u[k] for u in verts_u) for k in range(d)]
        hi = [m * max(u[k] for u in verts_u) for k in range(d)]
        pts = []
        for u in iproduct(*(range(lo[k], hi[k] + 1) for k in range(d))):
            ok = True
            for (nrm, off) in self._facets:
                s = sum(a * b for a, b in zip(nrm, u))
                if s > m * off or (strict and s == m * off):
                    ok = False
                    break
            if ok:
                pts.append(self.from_hull_coords(u, scale=m))
        return PointLocus(self.ambient_dim, pts)

    def count(self, m):
        return len(self.lattice_points(m))

    # -- constructions ----------------------------------------------------

    def dilate(self, d: int) -> "LatticePolytope":
        return LatticePolytope([tuple(d * x for x in v) for v in self.vertices])

    def product(self, other: "LatticePolytope") -> "LatticePolytope":
        return LatticePolytope([v + w for v in self.vertices
                                for w in other.vertices])

    def join(self, other: "LatticePolytope") -> "LatticePolytope":
        n, m = self.ambient_dim, other.ambient_dim
        verts = [(1,) + v + (0,) * m for v in self.vertices]
        verts += [(0,) + (0,) * n + w for w in other.vertices]
        return LatticePolytope(verts)

    def pyramid(self) -> "LatticePolytope":
        """Free join with the one-point polytope (apex picks up a new coordinate)."""
        return self.join(LatticePolytope([()]))

    def affine_image(self, A, b) -> "LatticePolytope":
        n = self.ambient_dim
        out_dim = len(A)
        verts = []
        for v in self.vertices:
            verts.append(tuple(sum(A[i][j] * v[j] for j in range(n)) + b[i]
                               for i in range(out_dim)))
        return LatticePolytope(verts)

    # -- predicates --------------------------------------------------------

    def is_simplex(self):
        return len(self.vertices) == self.dim + 1

    def is_antiblocking(self) -> bool:
        """Down-closed subset of the nonnegative orthant, as positioned."""
        if self._antiblocking is None:
            self._antiblocking = self._check_antiblocking()
        return self._antiblocking

    def _check_antiblocking(self):
        if any(x < 0 for v in self.vertices for x in v):
            return False
        n = self.ambient_dim
        for v in self.vertices:
            supp = [i for i in range(n) if v[i]]
            for r in range(1, len(supp) + 1):
                for sub in combinations(supp, r):
                    z = list(v)
                    for i in sub:
                        z[i] = 0
                    if not self.contains(z):
                        return False
        return True

    def idp_check(self, m: int):
        """Whether lattice points of mP are m-fold sums of those of P.

        Returns (ok, witness): witness is the lexicographically smallest
        missing point on failure, else None.
        """
        if m < 1:
            raise ValueError("need m >= 1")
        gens = self.lattice_points(1)
        acc = gens
        for _ in range(m - 1):
            acc = minkowski_sum(acc, gens)
        target = self.lattice_points(m)
        missing = sorted(set(target.points) - set(acc.points))
        if missing:
            return False, missing[0]
        return True, None

    def normalized_volume(self):
        """Normalized dim(P)-volume, from the leading Ehrhart behavior.

        Computed by exact interpolation of the counting polynomial from
        dilates 0..dim(P): d! times the leading coefficient.
        """
        d = self.dim
        counts = [self.count(m) for m in range(d + 1)]
        # finite differences: leading coefficient * d! = d-th difference
        diff = list(counts)
        for _ in range(d):
            diff = [b - a for a, b in zip(diff, diff[1:])]
        return diff[0]

    def __repr__(self):
        label = self.name or "P"
        return f"LatticePolytope({label}, dim={self.dim}, vertices={list(self.vertices)})"
