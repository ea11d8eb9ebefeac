"""Exact rational linear algebra on dense matrices.

All entries are ``fractions.Fraction`` (or ints, which are upgraded on the
fly).  Forward elimination is fraction-free on integer-rescaled rows, so
intermediate entries stay integral as long as possible; the final pass
normalizes pivots to 1 with exact division.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class Mat:
    """Dense matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged rows")

    def __eq__(self, other):
        return isinstance(other, Mat) and self.entries == other.entries

    def __repr__(self):
        return f"Mat({self.entries!r})"

    def row(self, i):
        return list(self.entries[i])

    def mul_vec(self, v):
        return [sum(a * x for a, x in zip(row, v)) for row in self.entries]


def _int_rows(entries):
    """Rescale each row by the lcm of denominators; returns integer rows."""
    out = []
    for row in entries:
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _strip_content(row):
    g = 0
    for a in row:
        if a:
            g = gcd(g, a)
            if g == 1:
                return row
    if g > 1:
        return [a // g for a in row]
    return row


def _forward_eliminate(irows, ncols):
    """Integer forward elimination; returns echelon integer rows + pivot cols.

    Rows are combined as d*r - c*p (never divided except by content gcd), so
    every intermediate entry is an integer.
    """
    pivots = []       # (col, row list)
    for r in irows:
        r = list(r)
        for (pc, prow) in pivots:
            c = r[pc]
            if c:
                d = prow[pc]
                r = [d * a - c * b for a, b in zip(r, prow)]
        r = _strip_content(r)
        pc = next((j for j, a in enumerate(r) if a), None)
        if pc is not None:
            if r[pc] < 0:
                r = [-a for a in r]
            pivots.append((pc, r))
    pivots.sort(key=lambda t: t[0])
    return pivots


def rref(M: Mat):
    """Reduced row-echelon form.  Returns (echelon Mat, pivot column list)."""
    pivots = _forward_eliminate(_int_rows(M.entries), M.cols)
    # back-substitute with exact rational division
    reduced = []
    for k in range(len(pivots) - 1, -1, -1):
        pc, row = pivots[k]
        frow = [Fraction(a, row[pc]) for a in row]
        for (qc, qrow) in reduced:
            c = frow[qc]
            if c:
                frow = [a - c * b for a, b in zip(frow, qrow)]
        reduced.append((pc, frow))
    reduced.sort(key=lambda t: t[0])
    piv_cols = [pc for pc, _ in reduced]
    ech = [frow for _, frow in reduced]
    for _ in range(M.rows - len(ech)):
        ech.append([Fraction(0)] * M.cols)
    return Mat(ech), piv_cols


def rank(M: Mat) -> int:
    return len(_forward_eliminate(_int_rows(M.entries), M.cols))


def nullspace(M: Mat):
    """Basis of the right kernel, one vector per free column.

    The free column's coordinate is 1 in its basis vector, so the result is
    in (transposed) reduced echelon form and deterministic.
    """
    ech, piv = rref(M)
    free = [j for j in range(M.cols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -ech.entries[i][f]
        basis.append(v)
    return basis


def solve(M: Mat, b):
    """One exact solution x of M x = b, or None if inconsistent."""
    aug = Mat([row + [v] for row, v in zip(M.entries, [Fraction(x) for x in b])])
    ech, piv = rref(aug)
    if M.cols in piv:
        return None
    x = [Fraction(0)] * M.cols
    for i, pc in enumerate(piv):
        x[pc] = ech.entries[i][M.cols]
        # free columns stay 0, subtract their (zero) contribution: nothing to do
    # verify against non-pivot rows implicitly: rref of aug already consistent
    return x


class Echelon:
    """Incremental row space with exact reduction, used for span/membership.

    Rows are kept fraction-free (primitive integer vectors).  ``reduce``
    returns the residual of a vector against the current span; ``add``
    extends the span and reports whether the vector was new.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots = []  # list of (pivcol, primitive integer row)

    @property
    def dim(self):
        return len(self.pivots)

    def _as_int(self, v):
        den = 1
        for x in v:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        if den == 1:
            return [int(x) for x in v]
        return [int(x * den) for x in v]

    def residual(self, v):
        r = self._as_int(v)
        for (pc, prow) in self.pivots:
            c = r[pc]
            if c:
                d = prow[pc]
                r = [d * a - c * b for a, b in zip(r, prow)]
        return _strip_content(r)

    def contains(self, v) -> bool:
        return not any(self.residual(v))

    def add(self, v) -> bool:
        r = self.residual(v)
        pc = next((j for j, a in enumerate(r) if a), None)
        if pc is None:
            return False
        if r[pc] < 0:
            r = [-a for a in r]
        self.pivots.append((pc, r))
        return True
