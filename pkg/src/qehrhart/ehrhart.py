"""Graded lattice-point series of polytopes: per-dilate q-counts, the two
series built from them, weighted enumerators, simplex numerators from
semi-open parallelepipeds, rational-form guessing, reciprocity, and the
classical (q = 1) cross-checks.

The per-dilate count is the graded dimension of the dual space attached to
the dilate's lattice points.  Down-closed polytopes in the nonnegative
orthant short-circuit to a direct weight count; lower-dimensional polytopes
are computed in hull coordinates.  Both shortcuts agree with the general
route and the tests exercise that agreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .harmonics import InconsistencyError, hilbert_qpoly
from .linalg import Mat, solve
from .polytope import LatticePolytope
from .qseries import (BivarPoly, QPoly, RatFun2, TQSeries, denominator_search)


class NotASimplexError(ValueError):
    """Operation requires a simplex (dim + 1 vertices)."""


_iq_cache = {}
_iq_interior_cache = {}


def _key(P: LatticePolytope, m):
    return (P.vertices, m)


def _weight_poly(locus):
    """Sum of q^(coordinate sum) over the locus; needs nonnegative sums."""
    counts = {}
    for z in locus:
        w = sum(z)
        if w < 0:
            raise ValueError("negative coordinate sum; no weight enumerator")
        counts[w] = counts.get(w, 0) + 1
    top = max(counts, default=0)
    return QPoly([counts.get(d, 0) for d in range(top + 1)])


def _locus_in_hull_coords(P: LatticePolytope, locus, m):
    return [P.hull_coords(z, scale=m) for z in locus]


def iq(P: LatticePolytope, m: int) -> QPoly:
    """Graded count of lattice points of the m-th dilate; at q=1 the cardinality."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return QPoly.one()
    key = _key(P, m)
    if key in _iq_cache:
        return _iq_cache[key]
    locus = P.lattice_points(m)
    if P.is_antiblocking():
        out = _weight_poly(locus)
    elif P.dim == 0:
        out = QPoly.one()
    else:
        pts = (_locus_in_hull_coords(P, locus, m)
               if P.dim < P.ambient_dim else list(locus))
        out = hilbert_qpoly(pts)
    if out(1) != len(locus):
        raise InconsistencyError("graded count does not sum to the point count")
    _iq_cache[key] = out
    return out


def iq_interior(P: LatticePolytope, m: int) -> QPoly:
    """Graded count for the relative interior of the m-th dilate."""
    if m < 1:
        raise ValueError("m must be positive")
    key = _key(P, m)
    if key in _iq_interior_cache:
        return _iq_interior_cache[key]
    locus = P.interior_lattice_points(m)
    if len(locus) == 0:
        out = QPoly.zero()
    elif P.is_antiblocking():
        out = _weight_poly(locus).divide_by_q_power(P.dim)
    elif P.dim == 0:
        out = QPoly.one()
    else:
        pts = (_locus_in_hull_coords(P, locus, m)
               if P.dim < P.ambient_dim else list(locus))
        out = hilbert_qpoly(pts)
    if out(1) != len(locus):
        raise InconsistencyError("graded count does not sum to the point count")
    _iq_interior_cache[key] = out
    return out


def series_E(P: LatticePolytope, T: int) -> TQSeries:
    return TQSeries([iq(P, m) for m in range(T + 1)], T)


def series_Ebar(P: LatticePolytope, T: int) -> TQSeries:
    return TQSeries([QPoly.zero()] + [iq_interior(P, m) for m in range(1, T + 1)], T)


def weight_series_W(P: LatticePolytope, T: int) -> TQSeries:
    """Coordinate-sum weighted enumerator of the dilates (no dual spaces)."""
    return TQSeries([_weight_poly(P.lattice_points(m)) for m in range(T + 1)], T)


def weight_series_Wbar(P: LatticePolytope, T: int) -> TQSeries:
    return TQSeries([QPoly.zero()]
                    + [_weight_poly(P.interior_lattice_points(m))
                       for m in range(1, T + 1)], T)


# -- simplices --------------------------------------------------------------

def simplex_numerators(P: LatticePolytope):
    """Weight-series numerators of a lattice simplex over prod(1 - t q^|v|).

    Enumerates the lattice points of the half-open parallelepiped spanned by
    the lifted vertices (1, v), and of its opposite; returns (N, Nbar, den)
    where den lists (1, |v|) factors.  At q=1 the numerator N gives the
    classical h*-vector.
    """
    if not P.is_simplex():
        raise NotASimplexError("numerator enumeration needs a simplex")
    d = P.dim
    n = P.ambient_dim
    verts = list(P.vertices)
    weights = [sum(v) for v in verts]
    if any(w < 0 for w in weights):
        raise ValueError("vertex with negative coordinate sum; not supported")
    cols = [(1,) + v for v in verts]
    M = Mat([[cols[j][i] for j in range(d + 1)] for i in range(n + 1)])

    def collect(kmin, kmax, lo_ok, hi_ok):
        terms = {}
        for k in range(kmin, kmax + 1):
            for z in P.lattice_points(k) if k else [(0,) * n]:
                c = solve(M, [k] + list(z))
                if c is None:
                    continue
                if all(lo_ok(x) and hi_ok(x) for x in c):
                    w = sum(z)
                    terms[(k, w)] = terms.get((k, w), 0) + 1
        return BivarPoly(terms)

    N = collect(0, d, lambda x: x >= 0, lambda x: x < 1)
    Nbar = collect(1, d + 1, lambda x: x > 0, lambda x: x <= 1)
    den = tuple(sorted((1, w) for w in weights))
    return N, Nbar, den


# -- rational-form guessing --------------------------------------------------

def default_bounds(P: LatticePolytope):
    """Search bounds: b <= 4, a <= twice the largest L1 norm in P, nu <= dim+3."""
    pts = P.lattice_points(1)
    amax = max((sum(abs(x) for x in z) for z in pts), default=0)
    return {"b_max": 4, "a_max": max(1, 2 * amax), "nu_max": P.dim + 3}


def guess(P: LatticePolytope, T=10, bounds=None, interior=False):
    """First reported denominator with a terminating numerator fit, or None.

    Candidates are scanned in canonical order (factor count, then total
    degree, then the sorted factor list), so the reported form is the
    minimal verifiable one at this truncation order.
    """
    b = dict(default_bounds(P))
    if bounds:
        b.update(bounds)
    S = series_E(P, T) if not interior else series_Ebar(P, T)
    hits = denominator_search(S, b["b_max"], b["a_max"], b["nu_max"],
                              t_deg_max=b.get("t_deg_max"), first_only=True)
    return hits[0] if hits else None


def verify_guess_expansion(P: LatticePolytope, form: RatFun2, T: int) -> bool:
    return form.expand(T) == series_E(P, T)


# -- reciprocity -------------------------------------------------------------

def _laurent_mul(A, B):
    out = {}
    for ka, va in A.items():
        for kb, vb in B.items():
            k = (ka[0] + kb[0], ka[1] + kb[1])
            out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _laurent_of_denominator(factors, inverse=False):
    out = {(0, 0): 1}
    for (b, a) in factors:
        f = {(0, 0): 1, ((-b, -a) if inverse else (b, a)): -1}
        out = _laurent_mul(out, f)
    return out


def reciprocity_check(E: RatFun2, Ebar: RatFun2, d: int) -> bool:
    """Exact identity q^d * Ebar(t, q) == (-1)^(d+1) * E(1/t, 1/q).

    Cross-multiplied and compared as Laurent polynomials, so no common
    denominator needs to be constructed.
    """
    lhs = _laurent_mul(
        {(k[0], k[1] + d): v for k, v in Ebar.numerator.terms.items()},
        _laurent_of_denominator(E.denom_factors, inverse=True))
    sign = 1 if (d + 1) % 2 == 0 else -1
    rhs = _laurent_mul(
        {(-k[0], -k[1]): sign * v for k, v in E.numerator.terms.items()},
        _laurent_of_denominator(Ebar.denom_factors, inverse=False))
    return lhs == rhs


def weight_reciprocity_check(N: BivarPoly, Nbar: BivarPoly, den, d: int) -> bool:
    """Nbar/D == (-1)^(d+1) N(1/t,1/q)/D(1/t,1/q) as rational functions."""
    lhs = _laurent_mul(dict(Nbar.terms), _laurent_of_denominator(den, inverse=True))
    sign = 1 if (d + 1) % 2 == 0 else -1
    rhs = _laurent_mul({(-i, -j): sign * v for (i, j), v in N.terms.items()},
                       _laurent_of_denominator(den, inverse=False))
    return lhs == rhs


# -- structural identity checks ----------------------------------------------

def check_dilation(P: LatticePolytope, d: int, T: int) -> bool:
    """Series of dP versus the subsequence of dilate counts of P."""
    lhs = series_E(P.dilate(d), T)
    rhs = TQSeries([iq(P, d * m) for m in range(T + 1)], T)
    return lhs == rhs


def check_product(P: LatticePolytope, Q: LatticePolytope, T: int) -> bool:
    """Series of P x Q versus the coefficientwise (Hadamard) product."""
    lhs = series_E(P.product(Q), T)
    rhs = series_E(P, T).hadamard(series_E(Q, T))
    return lhs == rhs


def check_join(P: LatticePolytope, Q: LatticePolytope, T: int) -> bool:
    """Series of the free join versus (1-t)/(1-qt) times the product of series."""
    lhs = series_E(P.join(Q), T)
    geom = RatFun2(BivarPoly({(0, 0): 1}), [(1, 1)]).expand(T)  # 1/(1-qt)
    rhs = (series_E(P, T) * series_E(Q, T)).mul_factor(1, 0) * geom
    return lhs == rhs


# -- classical cross-check ----------------------------------------------------

@dataclass
class HStar:
    """Numerator coefficients of the q=1 counting series over (1-t)^(d+1)."""

    coefficients: tuple

    @property
    def volume(self):
        return sum(self.coefficients)


def classical_check(P: LatticePolytope):
    """h*-vector from exact interpolation, with consistency assertions.

    Verifies polynomial counting (rationality margin), h*_0 = 1,
    nonnegativity, the volume sum, and the q -> 1 collapse of the graded
    counts onto the plain counts.
    """
    d = P.dim
    T = d + 3
    counts = [len(P.lattice_points(m)) for m in range(T + 1)]
    # multiply sum counts[m] t^m by (1-t)^(d+1)
    coeffs = list(counts)
    for _ in range(d + 1):
        coeffs = [coeffs[0]] + [coeffs[i] - coeffs[i - 1]
                                for i in range(1, len(coeffs))]
    if any(coeffs[m] != 0 for m in range(d + 1, T + 1)):
        raise InconsistencyError("counting function is not a degree-d polynomial")
    hstar = HStar(tuple(coeffs[: d + 1]))
    report = {
        "h_star": list(hstar.coefficients),
        "volume": hstar.volume,
        "counts": counts,
    }
    if hstar.coefficients[0] != 1:
        raise InconsistencyError("h*_0 must be 1")
    if any(c < 0 for c in hstar.coefficients):
        raise InconsistencyError("negative h* entry")
    if hstar.volume != P.normalized_volume():
        raise InconsistencyError("h* sum differs from the normalized volume")
    for m in range(T + 1):
        if iq(P, m)(1) != counts[m]:
            raise InconsistencyError("graded count disagrees with cardinality")
    return hstar, report


# -- record -------------------------------------------------------------------

@dataclass
class QEhrhartRecord:
    """Assembled per-polytope data: counts to order T plus optional guesses."""

    name: str
    vertices: tuple
    T: int
    iq: list = field(default_factory=list)
    iq_interior: list = field(default_factory=list)
    guess_E: RatFun2 | None = None
    guess_Ebar: RatFun2 | None = None
    verification: str = "none"


def compute_record(P: LatticePolytope, T: int, with_guess=False, bounds=None,
                   generation_cutoff=None):
    """Assemble the per-polytope record; optionally guess rational forms.

    With ``generation_cutoff`` set, a successful span-closure check from
    grades up to the cutoff upgrades the verification level; a guess that
    is merely consistent with the truncation is never labeled stronger.
    """
    rec = QEhrhartRecord(
        name=P.name or "polytope",
        vertices=tuple(P.vertices),
        T=T,
        iq=[iq(P, m) for m in range(T + 1)],
        iq_interior=[QPoly.zero()] + [iq_interior(P, m) for m in range(1, T + 1)],
    )
    if with_guess:
        rec.guess_E = guess(P, T, bounds)
        rec.guess_Ebar = guess(P, T, bounds, interior=True)
        rec.verification = f"truncation({T})" if rec.guess_E else "none"
        if rec.guess_E is not None and generation_cutoff is not None:
            from .halgebra import generation_check
            if generation_check(P, generation_cutoff, T).fully_generated:
                rec.verification = f"generated({generation_cutoff},{T})"
    return rec
