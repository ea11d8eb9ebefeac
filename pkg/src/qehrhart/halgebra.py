"""The bigraded algebra of dual spaces over the dilates of a polytope:
graded components, product spans, generation-from-a-cutoff reports,
subalgebra Hilbert series against supplied generators, and the equality
test for the two poset polytopes.

Components are stored without materializing the bookkeeping variable for
the dilation grade; the grade tag plus products in the dual variables
reproduce the bigrading.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ehrhart import iq
from .harmonics import (HarmonicBasis, InconsistencyError, MultiPoly,
                        grlex_key, harmonic_basis, monomials_of_degree)
from .linalg import Echelon
from .polytope import LatticePolytope
from .posets import Poset, chain_polytope, order_polytope
from .qseries import QPoly, TQSeries


class NotInComponentError(ValueError):
    """A supplied generator does not lie in its declared component."""


_component_cache = {}


@dataclass
class HComponent:
    """Dual-space basis of one dilate, tagged with its dilation grade."""

    m: int
    basis: HarmonicBasis

    def dims(self):
        return [len(b) for b in self.basis.by_degree]


def component(P: LatticePolytope, m: int) -> HComponent:
    key = (P.vertices, m)
    if key in _component_cache:
        return _component_cache[key]
    locus = P.lattice_points(m)
    hb = harmonic_basis(locus)
    comp = HComponent(m, hb)
    if hb.hilbert() != iq(P, m):
        raise InconsistencyError("component dimensions disagree with the count")
    _component_cache[key] = comp
    return comp


def _coord_row(poly: MultiPoly, mons, idx):
    row = [Fraction(0)] * len(mons)
    for mo, c in poly.terms.items():
        row[idx[mo]] = c
    return row


class _Cell:
    """Span of homogeneous polynomials of one (grade, degree) cell."""

    def __init__(self, n, d):
        self.n = n
        self.d = d
        self.mons = sorted(monomials_of_degree(n, d), key=grlex_key, reverse=True)
        self.idx = {m: i for i, m in enumerate(self.mons)}
        self.ech = Echelon()
        self.polys = []

    @property
    def dim(self):
        return self.ech.dim

    def add(self, poly: MultiPoly):
        if self.ech.add(_coord_row(poly, self.mons, self.idx)):
            self.polys.append(poly)
            return True
        return False

    def contains(self, poly: MultiPoly):
        return self.ech.contains(_coord_row(poly, self.mons, self.idx))


def _cells_of(basis_lists, n):
    cells = {}
    for d, polys in enumerate(basis_lists):
        if not polys:
            continue
        cell = _Cell(n, d)
        for g in polys:
            cell.add(g)
        cells[d] = cell
    return cells


def product_span(P: LatticePolytope, m: int, mp: int):
    """Span of products of two components inside the component of their sum.

    Returns (span_dims, contained, equals); a containment failure raises,
    since it would contradict the sumset closure property.
    """
    A = component(P, m)
    B = component(P, mp)
    C = component(P, m + mp)
    n = A.basis.n
    target = _cells_of(C.basis.by_degree, n)
    span = {}
    for d1, bs1 in enumerate(A.basis.by_degree):
        for d2, bs2 in enumerate(B.basis.by_degree):
            d = d1 + d2
            for f in bs1:
                for g in bs2:
                    prod = f * g
                    if prod.is_zero():
                        continue
                    if d not in target or not target[d].contains(prod):
                        raise InconsistencyError(
                            f"product escapes the target component: {prod!r}")
                    span.setdefault(d, _Cell(n, d)).add(prod)
    span_dims = {d: c.dim for d, c in sorted(span.items())}
    target_dims = {d: c.dim for d, c in sorted(target.items())}
    equals = span_dims == target_dims
    return span_dims, True, equals


@dataclass
class GenerationReport:
    """Which grades are spanned by products from grades at most the cutoff."""

    cutoff: int
    horizon: int
    per_degree_status: dict = field(default_factory=dict)  # m -> bool
    missing_dims: dict = field(default_factory=dict)       # (m, qdeg) -> deficit

    @property
    def fully_generated(self):
        return all(self.per_degree_status.values())

    def to_json(self):
        return {
            "cutoff": self.cutoff,
            "horizon": self.horizon,
            "fullyGenerated": self.fully_generated,
            "perGrade": {str(m): ok for m, ok in sorted(self.per_degree_status.items())},
            "missing": [[m, d, k] for (m, d), k in sorted(self.missing_dims.items())],
        }


def generation_check(P: LatticePolytope, m0: int, T=None) -> GenerationReport:
    """Iteratively close the span of components with grade <= m0 up to grade T."""
    if T is None:
        T = 2 * m0 + 4
    if m0 > T:
        raise ValueError("cutoff beyond horizon")
    report = GenerationReport(cutoff=m0, horizon=T)
    n = component(P, 0).basis.n
    G = {0: _cells_of(component(P, 0).basis.by_degree, n)}
    for m in range(1, T + 1):
        if m <= m0:
            G[m] = _cells_of(component(P, m).basis.by_degree, n)
            report.per_degree_status[m] = True
            continue
        cells = {}
        for i in range(1, m):
            j = m - i
            if i > j:
                break
            for d1, c1 in G[i].items():
                for d2, c2 in G[j].items():
                    d = d1 + d2
                    cell = cells.setdefault(d, _Cell(n, d))
                    for f in c1.polys:
                        for g in c2.polys:
                            prod = f * g
                            if not prod.is_zero():
                                cell.add(prod)
        G[m] = cells
        ok = True
        for d, polys in enumerate(component(P, m).basis.by_degree):
            want = len(polys)
            have = cells[d].dim if d in cells else 0
            if have > want:
                raise InconsistencyError("span exceeds the component")
            if have < want:
                ok = False
                report.missing_dims[(m, d)] = want - have
        report.per_degree_status[m] = ok
    return report


def subalgebra_hilbert(P: LatticePolytope, gens, T: int) -> TQSeries:
    """Bigraded dimensions of the subalgebra generated by tagged elements.

    Each generator is a pair (grade, homogeneous polynomial in the dual
    variables) and must lie in the component of its grade.
    """
    n = component(P, 0).basis.n
    checked = []
    for (m, g) in gens:
        if not g.is_homogeneous():
            raise NotInComponentError("generators must be homogeneous")
        d = g.degree()
        comp = component(P, m)
        cells = _cells_of(comp.basis.by_degree, n)
        if d > 0 or m > 0:
            if d not in cells or not cells[d].contains(g):
                raise NotInComponentError(f"generator not in component {m}: {g!r}")
        checked.append((m, d, g))
    # close under products, grade by grade
    G = {0: {0: _Cell(n, 0)}}
    G[0][0].add(MultiPoly.constant(n, 1))
    for m in range(1, T + 1):
        cells = {}
        for (k, dg, g) in checked:
            if k == 0 or k > m:
                continue
            lower = G.get(m - k, {})
            for d2, c2 in lower.items():
                d = dg + d2
                cell = cells.setdefault(d, _Cell(n, d))
                for f in c2.polys:
                    prod = g * f
                    if not prod.is_zero():
                        cell.add(prod)
        G[m] = cells
    coeffs = []
    for m in range(T + 1):
        dims = {d: c.dim for d, c in G.get(m, {}).items()}
        top = max(dims, default=0)
        coeffs.append(QPoly([dims.get(d, 0) for d in range(top + 1)]))
    return TQSeries(coeffs, T)


def chain_order_equality(poset: Poset, M: int) -> bool:
    """Whether the two poset polytopes share dual spaces for all dilates <= M.

    Compares the normalized degreewise bases (and the interior ones), which
    are canonical, so subspace equality is basis-list equality.
    """
    O = order_polytope(poset)
    C = chain_polytope(poset)
    for m in range(1, M + 1):
        zo = O.lattice_points(m)
        zc = C.lattice_points(m)
        if zo != zc:
            if harmonic_basis(zo).by_degree != harmonic_basis(zc).by_degree:
                return False
        zo_i = O.interior_lattice_points(m)
        zc_i = C.interior_lattice_points(m)
        if zo_i != zc_i:
            if len(zo_i) != len(zc_i):
                return False
            if len(zo_i) == 0:
                continue
            if harmonic_basis(zo_i).by_degree != harmonic_basis(zc_i).by_degree:
                return False
    # interior count equality when both empty is fine; series equality follows
    return True


def interior_ideal_check(P: LatticePolytope, m: int, mp: int) -> bool:
    """Products of a component with an interior component land in the interior
    component of the sum grade."""
    A = component(P, m)
    locus = P.interior_lattice_points(mp)
    if len(locus) == 0:
        return True
    Vbar = harmonic_basis(locus)
    target_locus = P.interior_lattice_points(m + mp)
    Vbar_target = harmonic_basis(target_locus)
    n = A.basis.n
    target = _cells_of(Vbar_target.by_degree, n)
    for d1, bs1 in enumerate(A.basis.by_degree):
        for d2, bs2 in enumerate(Vbar.by_degree):
            d = d1 + d2
            for f in bs1:
                for g in bs2:
                    prod = f * g
                    if prod.is_zero():
                        continue
                    if d not in target or not target[d].contains(prod):
                        return False
    return True
