"""Divided-power dual spaces over prime fields, the positive-characteristic
closure test, and the sumset lower-bound function.

Scalars are plain ints in [0, p); divided monomials y^(a) multiply through
binomial coefficients reduced mod p (computed by Lucas's rule, so no big
factorials appear).
"""

from __future__ import annotations

import heapq

from .harmonics import grlex_key, mono_divides, monomials_of_degree


class PointCollisionError(ValueError):
    """Two points of the locus coincide after reduction mod p."""


def binom_mod(n, k, p):
    """Binomial coefficient mod p via Lucas's theorem (p prime)."""
    if k < 0 or k > n:
        return 0
    r = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        num = den = 1
        for i in range(ki):
            num = num * (ni - i) % p
            den = den * (i + 1) % p
        r = r * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return r


class DividedPoly:
    """Element of the divided power algebra over F_p: {exponents: scalar}."""

    __slots__ = ("p", "n", "terms")

    def __init__(self, p, n, terms=None):
        self.p = p
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = int(c) % p
                if c:
                    self.terms[tuple(m)] = c

    @staticmethod
    def one(p, n):
        return DividedPoly(p, n, {(0,) * n: 1})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def __eq__(self, other):
        return (isinstance(other, DividedPoly) and self.p == other.p
                and self.terms == other.terms)

    def __add__(self, other):
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = (out.get(m, 0) + c) % self.p
        return DividedPoly(self.p, self.n, out)

    def scale(self, c):
        return DividedPoly(self.p, self.n,
                           {m: v * c for m, v in self.terms.items()})

    def __repr__(self):
        parts = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            body = "*".join(f"y{i+1}({e})" for i, e in enumerate(m) if e)
            parts.append(f"{c}*{body}" if body else str(c))
        return " + ".join(parts) or "0"


def divided_mul(f: DividedPoly, g: DividedPoly) -> DividedPoly:
    """Product in the divided power algebra: y^(a) y^(b) = prod C(a+b, a) y^(a+b)."""
    if f.p != g.p:
        raise ValueError("modulus mismatch")
    p = f.p
    out = {}
    for ma, ca in f.terms.items():
        for mb, cb in g.terms.items():
            coef = ca * cb % p
            for a, b in zip(ma, mb):
                if coef == 0:
                    break
                coef = coef * binom_mod(a + b, a, p) % p
            if coef:
                m = tuple(a + b for a, b in zip(ma, mb))
                out[m] = (out.get(m, 0) + coef) % p
    return DividedPoly(p, f.n, out)


def _reduce_points(Z, p):
    pts = [tuple(int(x) % p for x in z) for z in Z]
    if len(set(pts)) != len(pts):
        raise PointCollisionError("points collide after reduction mod %d" % p)
    return pts


def _bm_modp(points, p):
    """Standard monomials and graded-basis tails of the vanishing ideal over F_p."""
    n = len(points[0])
    N = len(points)
    heap = [(grlex_key((0,) * n), (0,) * n)]
    seen = {(0,) * n}
    pivots = []   # (pivcol, vector mod p, combo dict)
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
                for _ in range(e):
                    val = val * x % p
            vec.append(val)
        combo = {mono: 1}
        for (pc, pv, pcombo) in pivots:
            c = vec[pc]
            if c:
                # pivot rows are normalized, pv[pc] == 1
                vec = [(a - c * b) % p for a, b in zip(vec, pv)]
                for m, v in pcombo.items():
                    combo[m] = (combo.get(m, 0) - c * v) % p
        pc = next((i for i, a in enumerate(vec) if a), None)
        if pc is None:
            lead_terms.append(mono)
            gens.append({m: c for m, c in combo.items() if c})
            continue
        inv = pow(vec[pc], p - 2, p)
        vec = [a * inv % p for a in vec]
        combo = {m: c * inv % p for m, c in combo.items()}
        pivots.append((pc, vec, combo))
        std.append(mono)
        for i in range(n):
            suc = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
            if suc not in seen:
                seen.add(suc)
                heapq.heappush(heap, (grlex_key(suc), suc))
    if len(std) != N:
        raise RuntimeError("rank deficiency over F_p on distinct points")
    return std, gens


class _FpEchelon:
    """Incremental row echelon over F_p for membership tests."""

    def __init__(self, p):
        self.p = p
        self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def residual(self, row):
        r = [x % self.p for x in row]
        for (pc, pv) in self.pivots:
            c = r[pc]
            if c:
                r = [(a - c * b) % self.p for a, b in zip(r, pv)]
        return r

    def contains(self, row):
        return not any(self.residual(row))

    def add(self, row):
        r = self.residual(row)
        pc = next((j for j, a in enumerate(r) if a), None)
        if pc is None:
            return False
        inv = pow(r[pc], self.p - 2, self.p)
        self.pivots.append((pc, [a * inv % self.p for a in r]))
        return True


def harmonic_basis_modp(Z, p):
    """Degreewise dual-space bases over F_p, as DividedPoly lists.

    Same pipeline as the characteristic-zero case, but with unit pairing
    weights <x^a, y^(b)> = [a == b] and divided-power monomials.
    """
    points = _reduce_points(Z, p)
    n = len(points[0])
    std, gens = _bm_modp(points, p)
    # top components of the generators span the graded ideal degreewise
    taus = []
    for g in gens:
        d = max(sum(m) for m in g)
        taus.append({m: c for m, c in g.items() if sum(m) == d})
    top = max(sum(m) for m in std)
    counts = {}
    for m in std:
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    by_degree = []
    for d in range(top + 1):
        mons = sorted(monomials_of_degree(n, d), key=grlex_key, reverse=True)
        idx = {m: i for i, m in enumerate(mons)}
        rows = []
        for tau in taus:
            dt = sum(next(iter(tau)))
            if dt > d:
                continue
            for e in monomials_of_degree(n, d - dt):
                row = [0] * len(mons)
                for m, c in tau.items():
                    m2 = tuple(a + b for a, b in zip(m, e))
                    row[idx[m2]] = (row[idx[m2]] + c) % p
                rows.append(row)
        basis = _fp_nullspace_echelon(rows, len(mons), p)
        polys = [DividedPoly(p, n, {mons[j]: v[j] for j in range(len(mons))})
                 for v in basis]
        if len(polys) != counts.get(d, 0):
            raise RuntimeError("dual dimension mismatch over F_p")
        by_degree.append(polys)
    return by_degree


def _fp_nullspace_echelon(rows, ncols, p):
    """Nullspace basis over F_p in reduced echelon form."""
    ech = _FpEchelon(p)
    for r in rows:
        ech.add(r)
    piv_cols = sorted(pc for (pc, _) in ech.pivots)
    # back-substitute to RREF of the row space
    rmat = []
    for (pc, pv) in sorted(ech.pivots):
        rmat.append((pc, list(pv)))
    for i in range(len(rmat) - 1, -1, -1):
        pc, pv = rmat[i]
        for j in range(i):
            qj, qv = rmat[j]
            c = qv[pc]
            if c:
                rmat[j] = (qj, [(a - c * b) % p for a, b in zip(qv, pv)])
    rref_rows = {pc: pv for (pc, pv) in rmat}
    free = [j for j in range(ncols) if j not in rref_rows]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for pc, pv in rref_rows.items():
            v[pc] = (-pv[f]) % p
        basis.append(v)
    # normalize: reduced echelon of the basis itself (already is, by freedom pattern)
    return basis


def closure_check_modp(Z, Zp, p) -> bool:
    """Product containment of dual spaces over F_p; True on all valid inputs."""
    pts1 = _reduce_points(Z, p)
    pts2 = _reduce_points(Zp, p)
    if len(pts1[0]) != len(pts2[0]):
        raise ValueError("ambient dimension mismatch")
    n = len(pts1[0])
    # the sumset lives in F_p^n: add coordinatewise mod p and deduplicate
    Zsum = sorted({tuple((a + b) % p for a, b in zip(z, zp))
                   for z in pts1 for zp in pts2})
    Z, Zp = pts1, pts2
    V1 = harmonic_basis_modp(Z, p)
    V2 = harmonic_basis_modp(Zp, p)
    V12 = harmonic_basis_modp(Zsum, p)
    top = len(V12) - 1
    targets = []
    for d in range(top + 1):
        mons = sorted(monomials_of_degree(n, d), key=grlex_key, reverse=True)
        idx = {m: i for i, m in enumerate(mons)}
        ech = _FpEchelon(p)
        for g in V12[d]:
            row = [0] * len(mons)
            for m, c in g.terms.items():
                row[idx[m]] = c
            ech.add(row)
        targets.append((ech, idx, len(mons)))
    for d1, bs1 in enumerate(V1):
        for d2, bs2 in enumerate(V2):
            d = d1 + d2
            for f in bs1:
                for g in bs2:
                    prod = divided_mul(f, g)
                    if prod.is_zero():
                        continue
                    if d > top:
                        return False
                    ech, idx, k = targets[d]
                    row = [0] * k
                    for m, c in prod.terms.items():
                        row[idx[m]] = c
                    if not ech.contains(row):
                        return False
    return True


def beta_bound(r, rp, p) -> int:
    """Smallest n such that every k with a nonvanishing binomial C(n, k)
    (mod p when p > 0) has k >= r or n - k >= rp.

    With p = 0 this is r + rp - 1; positive characteristic can make it
    smaller because binomials vanish.
    """
    if r < 1 or rp < 1:
        raise ValueError("arguments must be positive")
    for n in range(0, r + rp):
        ok = True
        for k in range(n + 1):
            if p:
                if binom_mod(n, k, p) == 0:
                    continue
            if k >= r or n - k >= rp:
                continue
            ok = False
            break
        if ok:
            return n
    return r + rp - 1
