"""Vanishing ideals of finite integer point sets, their associated graded
ideals, and the dual (inverse-system) spaces under the differentiation
pairing.  Everything runs over exact rationals with graded lex order,
x1 > x2 > ... throughout.

The Gröbner basis of a vanishing ideal is computed by incremental echelon
reduction of monomial evaluation vectors, processing monomials in graded
lex order until the standard monomials span all point evaluations.  A
classical S-polynomial algorithm over an independent generating set is
provided as a small-instance cross-check.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial, gcd

from .linalg import Echelon, Mat, nullspace, rref
from .polytope import PointLocus, minkowski_sum
from .qseries import QPoly


class InconsistencyError(RuntimeError):
    """An internal invariant failed; signals an implementation bug."""


class TooLargeError(ValueError):
    """Instance exceeds the supported brute-force bounds."""


# -- monomials ------------------------------------------------------------

def grlex_key(mono):
    """Sort key for graded lex with x1 > x2 > ...; bigger key = bigger monomial."""
    return (sum(mono), mono)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomials_of_degree(n, d):
    """All exponent vectors of total degree d, grlex descending."""
    if n == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), d, n)
    return out


class MultiPoly:
    """Multivariate polynomial as {exponent tuple: Fraction}, zero terms absent."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(m)] = c

    @staticmethod
    def variable(n, i):
        e = [0] * n
        e[i] = 1
        return MultiPoly(n, {tuple(e): 1})

    @staticmethod
    def constant(n, c):
        return MultiPoly(n, {(0,) * n: c})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self):
        return max(self.terms, key=grlex_key) if self.terms else None

    def leading_coeff(self):
        lm = self.leading_monomial()
        return self.terms[lm] if lm is not None else Fraction(0)

    def top_component(self):
        """Highest-degree homogeneous part."""
        d = self.degree()
        return MultiPoly(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def homogeneous_part(self, d):
        return MultiPoly(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPoly(self.n, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return MultiPoly(self.n, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.n, {m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def mul_term(self, mono, coeff):
        return MultiPoly(self.n, {mono_mul(m, mono): c * coeff
                                  for m, c in self.terms.items()})

    def monic(self):
        lc = self.leading_coeff()
        if lc in (0, 1):
            return self
        return self * (Fraction(1) / lc)

    def evaluate(self, point):
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * Fraction(x) ** e
            total += v
        return total

    def __repr__(self):
        return f"MultiPoly({dump_poly(self)})"


def dump_poly(f: MultiPoly, names=None) -> str:
    """One-line textual form: terms grlex descending, reduced fraction coefficients."""
    if f.is_zero():
        return "0"
    if names is None:
        names = [f"x{i+1}" for i in range(f.n)]
    parts = []
    for m in sorted(f.terms, key=grlex_key, reverse=True):
        c = f.terms[m]
        body = "*".join(
            (names[i] if e == 1 else f"{names[i]}^{e}")
            for i, e in enumerate(m) if e)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class GBasis:
    """Reduced graded-lex Gröbner basis with its standard monomials."""

    n: int
    generators: list          # list of MultiPoly, monic, sorted by leading term
    standard_monomials: list  # grlex ascending

    def leading_terms(self):
        return [g.leading_monomial() for g in self.generators]

    def standard_degrees(self):
        counts = {}
        for m in self.standard_monomials:
            counts[sum(m)] = counts.get(sum(m), 0) + 1
        return counts


def _strip_joint(vec, combo):
    g = 0
    for a in vec:
        if a:
            g = gcd(g, a)
            if g == 1:
                return vec, combo
    for a in combo.values():
        if a:
            g = gcd(g, a)
            if g == 1:
                return vec, combo
    if g > 1:
        vec = [a // g for a in vec]
        combo = {m: a // g for m, a in combo.items()}
    return vec, combo


def _center(points):
    n = len(points[0]) if points else 0
    return tuple((min(p[i] for p in points) + max(p[i] for p in points)) // 2
                 for i in range(n))


def _run_bm(points, track_combos):
    """Core elimination: returns (standard monomials, generators or None).

    Rows are kept integral; a new evaluation row is combined with pivot rows
    as d*r - c*p and stripped of content, so no rational arithmetic happens
    until a generator is normalized at the end.
    """
    n = len(points[0]) if points else 0
    N = len(points)
    if N == 0:
        raise ValueError("empty point set")
    heap = [(grlex_key((0,) * n), (0,) * n)]
    seen = {(0,) * n}
    pivots = []    # (pivcol, int vector, combo dict or None)
    std = []
    gens = []
    lead_terms = []
    while heap:
        _, mono = heapq.heappop(heap)
        if any(mono_divides(lt, mono) for lt in lead_terms):
            continue
        vec = []
        for z in points:
            val = 1
            for x, e in zip(z, mono):
                if e:
                    val *= x ** e
            vec.append(val)
        combo = {mono: 1} if track_combos else None
        for (pc, pv, pcombo) in pivots:
            c = vec[pc]
            if c:
                d = pv[pc]
                vec = [d * a - c * b for a, b in zip(vec, pv)]
                if track_combos:
                    combo = {m: d * v for m, v in combo.items()}
                    for m, v in pcombo.items():
                        combo[m] = combo.get(m, 0) - c * v
                if track_combos:
                    vec, combo = _strip_joint(vec, combo)
                else:
                    g = 0
                    for a in vec:
                        if a:
                            g = gcd(g, a)
                            if g == 1:
                                break
                    if g > 1:
                        vec = [a // g for a in vec]
        pc = next((i for i, a in enumerate(vec) if a), None)
        if pc is None:
            lead_terms.append(mono)
            if track_combos:
                lead = Fraction(combo[mono])
                poly = MultiPoly(n, {m: Fraction(c) / lead
                                     for m, c in combo.items()})
                gens.append(poly)
            continue
        pivots.append((pc, vec, combo))
        std.append(mono)
        if not track_combos and len(std) == N:
            break
        for i in range(n):
            suc = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
            if suc not in seen:
                seen.add(suc)
                heapq.heappush(heap, (grlex_key(suc), suc))
    if len(std) != N:
        raise InconsistencyError("standard monomial count differs from locus size")
    return std, (gens if track_combos else None)


def buchberger_moeller(Z) -> GBasis:
    """Reduced Gröbner basis of the vanishing ideal of a finite point set."""
    points = list(Z)
    n = len(points[0])
    std, gens = _run_bm(points, track_combos=True)
    gens.sort(key=lambda g: grlex_key(g.leading_monomial()))
    return GBasis(n, gens, std)


def standard_monomial_degrees(Z):
    """Degree counts of the standard monomials, computed after centering.

    Translation does not change the associated graded ideal, so this is the
    graded dimension count of the quotient by it (and of its dual space).
    """
    points = list(Z)
    c = _center(points)
    shifted = [tuple(a - b for a, b in zip(p, c)) for p in points]
    std, _ = _run_bm(shifted, track_combos=False)
    counts = {}
    for m in std:
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    return counts


def hilbert_qpoly(Z) -> QPoly:
    """Graded dimension count of the quotient by the associated graded ideal."""
    counts = standard_monomial_degrees(Z)
    top = max(counts)
    return QPoly([counts.get(d, 0) for d in range(top + 1)])


def gr_ideal(Z) -> GBasis:
    """Reduced Gröbner basis of the associated graded ideal.

    Top homogeneous components of the vanishing ideal's basis: leading
    terms are unchanged and tails stay supported on standard monomials, so
    the result is already reduced.
    """
    points = list(Z)
    c = _center(points)
    shifted = [tuple(a - b for a, b in zip(p, c)) for p in points]
    gb = buchberger_moeller(shifted)
    taus = [g.top_component() for g in gb.generators]
    return GBasis(gb.n, taus, gb.standard_monomials)


def gr_component(Z, d, _gb=None):
    """Basis of the degree-d piece of the associated graded ideal."""
    gb = _gb if _gb is not None else gr_ideal(Z)
    n = gb.n
    mons = sorted(monomials_of_degree(n, d), key=grlex_key, reverse=True)
    idx = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in gb.generators:
        dg = g.degree()
        if dg > d:
            continue
        for e in monomials_of_degree(n, d - dg):
            row = [Fraction(0)] * len(mons)
            for m, cf in g.terms.items():
                row[idx[mono_mul(m, e)]] += cf
            rows.append(row)
    if not rows:
        return [], mons
    ech, piv = rref(Mat(rows))
    basis = [MultiPoly(n, {mons[j]: ech.entries[i][j] for j in range(len(mons))})
             for i in range(len(piv))]
    expected = len(mons) - sum(1 for m in gb.standard_monomials if sum(m) == d)
    if len(basis) != expected:
        raise InconsistencyError("graded component has unexpected dimension")
    return basis, mons


@dataclass
class HarmonicBasis:
    """Degreewise bases of the dual space of the associated graded ideal.

    Elements are polynomials in the dual (y) variables, normalized to
    reduced echelon form against grlex-descending monomial coordinates.
    """

    n: int
    by_degree: list  # index d -> list of homogeneous MultiPoly

    def dimension(self):
        return sum(len(b) for b in self.by_degree)

    def hilbert(self) -> QPoly:
        return QPoly([len(b) for b in self.by_degree])

    def elements(self):
        for bs in self.by_degree:
            yield from bs


def _is_shifted(points):
    """Down-closed subset of the nonnegative orthant (coordinatewise)."""
    pts = set(points)
    for z in pts:
        for i, e in enumerate(z):
            if e < 0:
                return False
            if e and z[:i] + (e - 1,) + z[i + 1:] not in pts:
                return False
    return True


def harmonic_basis(Z) -> HarmonicBasis:
    """Dual-space basis, degree by degree, for a finite point set.

    Down-closed loci in the nonnegative orthant short-circuit to their
    monomial basis {y^z}; the general route builds the graded ideal and
    takes weighted nullspaces degree by degree.
    """
    points = list(Z)
    n = len(points[0])
    if _is_shifted(points):
        top = max((sum(z) for z in points), default=0)
        by_degree = [[] for _ in range(top + 1)]
        for z in sorted(points, key=grlex_key, reverse=True):
            by_degree[sum(z)].append(MultiPoly(n, {z: 1}))
        return HarmonicBasis(n, by_degree)
    gb = gr_ideal(points)
    counts = gb.standard_degrees()
    top = max(counts)
    by_degree = []
    for d in range(top + 1):
        comp, mons = gr_component(points, d, _gb=gb)
        if not comp:
            by_degree.append([MultiPoly(n, {m: 1}) for m in mons])
            continue
        weights = [_fact(m) for m in mons]
        M = Mat([[g.terms.get(m, Fraction(0)) * w for m, w in zip(mons, weights)]
                 for g in comp])
        kernel = nullspace(M)
        if not kernel:
            by_degree.append([])
            continue
        ech, piv = rref(Mat(kernel)) if kernel else (None, [])
        basis = [MultiPoly(n, {mons[j]: ech.entries[i][j] for j in range(len(mons))})
                 for i in range(len(piv))]
        by_degree.append(basis)
    hb = HarmonicBasis(n, by_degree)
    if hb.dimension() != len(points):
        raise InconsistencyError("dual space dimension differs from locus size")
    for d, bs in enumerate(by_degree):
        if len(bs) != counts.get(d, 0):
            raise InconsistencyError("dual space degree dims mismatch")
    return hb


def _fact(mono):
    w = 1
    for e in mono:
        w *= factorial(e)
    return w


def apolarity_pair(f: MultiPoly, g: MultiPoly) -> Fraction:
    """Differentiation pairing: <x^a, y^b> = a! if a == b else 0, extended bilinearly."""
    total = Fraction(0)
    for m, c in f.terms.items():
        d = g.terms.get(m)
        if d:
            total += c * d * _fact(m)
    return total


def _degree_echelons(hb: HarmonicBasis):
    """Echelon per degree over grlex-descending monomial coordinates."""
    out = []
    for d, basis in enumerate(hb.by_degree):
        mons = sorted(monomials_of_degree(hb.n, d), key=grlex_key, reverse=True)
        idx = {m: i for i, m in enumerate(mons)}
        ech = Echelon()
        for g in basis:
            row = [Fraction(0)] * len(mons)
            for m, c in g.terms.items():
                row[idx[m]] = c
            ech.add(row)
        out.append((ech, idx, mons))
    return out


def closure_check(Z, Zp):
    """Products of the two dual bases against the dual basis of the sumset.

    Returns (holds, proper_containment, witness); ``holds`` being False
    would flag an implementation bug, with the offending product returned.
    ``proper_containment`` reports whether the products span strictly less
    than the sumset's dual space in some degree.
    """
    if not isinstance(Z, PointLocus):
        pts = [tuple(p) for p in Z]
        Z = PointLocus(len(pts[0]), pts)
    if not isinstance(Zp, PointLocus):
        pts = [tuple(p) for p in Zp]
        Zp = PointLocus(len(pts[0]), pts)
    if Z.ambient_dim != Zp.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    V1 = harmonic_basis(Z)
    V2 = harmonic_basis(Zp)
    V12 = harmonic_basis(minkowski_sum(Z, Zp))
    target = _degree_echelons(V12)
    top = len(V12.by_degree) - 1
    span = [Echelon() for _ in range(top + 1)]
    holds = True
    witness = None
    for d1, bs1 in enumerate(V1.by_degree):
        for d2, bs2 in enumerate(V2.by_degree):
            d = d1 + d2
            for f in bs1:
                for g in bs2:
                    prod = f * g
                    if d > top:
                        holds = False
                        witness = witness or prod
                        continue
                    ech, idx, mons = target[d]
                    row = [Fraction(0)] * len(mons)
                    for m, c in prod.terms.items():
                        row[idx[m]] = c
                    if not ech.contains(row):
                        holds = False
                        witness = witness or prod
                    span[d].add(row)
    proper = any(span[d].dim < target[d][0].dim for d in range(top + 1))
    return holds, proper, witness


# -- independent generating-set route --------------------------------------

def product_gens_oracle(Z):
    """Elementary generators of the vanishing ideal: for every assignment of
    a coordinate to each point, the product of the matching linear forms.
    """
    points = list(Z)
    n = len(points[0])
    if len(points) > 6 or n > 3:
        raise TooLargeError("supported only for small instances")
    gens = []
    seen = set()
    for choice in iproduct(range(n), repeat=len(points)):
        f = MultiPoly.constant(n, 1)
        for z, i in zip(points, choice):
            f = f * (MultiPoly.variable(n, i) - MultiPoly.constant(n, z[i]))
        key = tuple(sorted(f.terms.items()))
        if key not in seen:
            seen.add(key)
            gens.append(f)
    return gens


def _normal_form(f: MultiPoly, gens):
    """Remainder of f modulo the generator list (top-reduction repeatedly)."""
    rem = MultiPoly(f.n)
    work = f
    while not work.is_zero():
        lm = work.leading_monomial()
        lc = work.terms[lm]
        for g in gens:
            glm = g.leading_monomial()
            if mono_divides(glm, lm):
                q = tuple(a - b for a, b in zip(lm, glm))
                work = work - g.mul_term(q, lc / g.terms[glm])
                break
        else:
            t = MultiPoly(f.n, {lm: lc})
            rem = rem + t
            work = work - t
    return rem


def buchberger(gens):
    """Classical S-polynomial completion; returns the reduced basis.

    Exponential-time but independent of the evaluation-matrix route; meant
    for cross-checking on small instances only.
    """
    basis = [g.monic() for g in gens if not g.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        fi, fj = basis[i], basis[j]
        mi, mj = fi.leading_monomial(), fj.leading_monomial()
        lcm = tuple(max(a, b) for a, b in zip(mi, mj))
        if all(a + b == c for a, b, c in zip(mi, mj, lcm)):
            continue  # coprime leading terms
        s = (fi.mul_term(tuple(a - b for a, b in zip(lcm, mi)), 1)
             - fj.mul_term(tuple(a - b for a, b in zip(lcm, mj)), 1))
        r = _normal_form(s, basis)
        if not r.is_zero():
            basis.append(r.monic())
            k = len(basis) - 1
            pairs.extend((k, t) for t in range(k))
    # inter-reduce to the unique reduced basis
    reduced = []
    lts = [g.leading_monomial() for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and mono_divides(lts[j], lts[i]) for j in range(len(basis))):
            continue
        others = [h for j, h in enumerate(basis) if j != i]
        tail = g - MultiPoly(g.n, {lts[i]: Fraction(1)})  # entries are monic
        reduced.append(MultiPoly(g.n, {lts[i]: Fraction(1)})
                       + _normal_form(tail, others))
    reduced.sort(key=lambda g: grlex_key(g.leading_monomial()))
    return reduced
