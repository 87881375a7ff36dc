"""Resolution builders: Koszul complexes, minimal models, acyclic closures.

The staged constructions follow one recipe.  Stage 1 adjoins exterior
variables (killing the ring variables for a closure, a minimal
generating set of the kernel ideal for a model).  Stage n >= 2 computes
the homology of the current tower in homological degree n-1 through the
internal-degree bound, picks cycle representatives whose classes
minimally generate it as a module over the ground ring (graded Nakayama:
ascending by internal degree, a new generator is anything outside
boundaries + variable-multiples of lower-degree cycles), and adjoins one
variable per generator with that cycle as differential value.

All reported counts are certified only through the internal-degree
bound D: homology generators of internal degree > D are invisible.
"""

from . import linalg
from .extensions import Element, ExtensionTower, TowerError
from .presentations import Presentation


class ResolutionError(ValueError):
    pass


class HomologyPiece:
    """Homology of one bidegree: dimension plus chosen representatives."""

    __slots__ = ("n", "d", "dimension", "cycles", "boundaries")

    def __init__(self, n, d, dimension, cycles, boundaries):
        self.n = n
        self.d = d
        self.dimension = dimension
        self.cycles = cycles          # representatives of a basis of H
        self.boundaries = boundaries  # basis of the boundary subspace

    def __repr__(self):
        return "HomologyPiece(n=%d, d=%d, dim=%d)" % (self.n, self.d, self.dimension)


def kernel_generators(pres):
    """Minimal homogeneous generators of the kernel of base ->> pres.

    Returns [(degree, reduced ground element)] ascending by degree; the
    choice is canonical (echelon representatives of the per-degree ideal
    span, taken in order).  An ideal generated in degrees <= e needs no
    minimal generator above e, so the scan is finite.
    """
    ground = pres.free_base()
    field = pres.field
    raw = []
    for f in pres.relators[len(ground.relators):]:
        g = ground.from_int_poly(f)
        if g:
            raw.append((ground.degree_of(next(iter(g))), g))
    if not raw:
        return []
    maxdeg = max(d for d, _ in raw)
    span_rows = {}  # degree -> list of canonical echelon rows (coord dicts)
    gens = []
    for d in range(2, maxdeg + 1):
        rows = []
        for e, g in raw:
            if e > d:
                continue
            for s in ground.quotient_basis(d - e).monomials:
                prod = ground.multiply({s: field.one}, g)
                if prod:
                    rows.append(ground.coords(prod, d))
        pivots, red = linalg.rref(rows, field)
        span_rows[d] = [red[p] for p in pivots]
        sub = linalg.Echelon(field)
        for i, (nm, w) in enumerate(ground.variables):
            for row in span_rows.get(d - w, ()):
                elem = ground.element(row, d - w)
                vmono = tuple(1 if k == i else 0 for k in range(len(ground.names)))
                prod = ground.multiply({vmono: field.one}, elem)
                if prod:
                    sub.add(ground.coords(prod, d))
        for row in span_rows[d]:
            if sub.add(row) is not None:
                gens.append((d, ground.element(row, d)))
    return gens


def koszul_complex(pres, D=None):
    """Exterior tower over the base with one degree-1 variable per relator
    beyond the base, in relator order, with the relator as differential."""
    ground = pres.free_base()
    rels = pres.relators[len(ground.relators):]
    tower = ExtensionTower(ground, "plain", nmax=None, dmax=D)
    for i, f in enumerate(rels):
        g = ground.from_int_poly(f)
        d = pres.degree_of(next(iter(f)))
        tower.adjoin("y%d" % (i + 1), 1, d, tower.ground_element(g))
    return tower


def koszul_on_minimal_generators(pres, D=None):
    """Koszul tower on a minimal generating set of the kernel ideal."""
    ground = pres.free_base()
    tower = ExtensionTower(ground, "plain", nmax=None, dmax=D)
    for i, (d, g) in enumerate(kernel_generators(pres)):
        tower.adjoin("y%d" % (i + 1), 1, d, tower.ground_element(g))
    return tower


def cycle_space(tower, n, d):
    """Canonical kernel basis of the differential at (n, d), as coord dicts."""
    return tower.solved(n, d).kernel


def boundary_space(tower, n, d):
    """Image basis of the differential from (n+1, d), in (n, d) coordinates."""
    return tower.solved(n + 1, d).image


def homology_piece(tower, n, d):
    """H_n in internal degree d with deterministic cycle representatives."""
    field = tower.field
    cycles = cycle_space(tower, n, d)
    bounds = boundary_space(tower, n, d)
    ech = linalg.Echelon(field)
    for b in bounds:
        ech.add(b)
    reps = []
    for z in cycles:
        if ech.add(z) is not None:
            reps.append(tower.element(z, n, d))
    return HomologyPiece(n, d, len(reps),
                         tuple(reps),
                         tuple(tower.element(b, n, d) for b in bounds))


def minimal_generators(tower, q, D):
    """Cycle lifts of a minimal generating set of H_q over the ground ring.

    Scans internal degrees 0..D ascending; in degree d the new generators
    are a complement basis of (boundaries + variable-multiples of lower
    degree cycles) inside the cycle space.  Returns [(d, Element)].
    """
    field = tower.field
    ground = tower.ground
    gens = []
    zelems = {}
    for d in range(0, D + 1):
        zcoords = cycle_space(tower, q, d)
        zelems[d] = [tower.element(z, q, d) for z in zcoords]
        sub = linalg.Echelon(field)
        for b in boundary_space(tower, q, d):
            sub.add(b)
        for i, (nm, w) in enumerate(ground.variables):
            if d - w < 0:
                continue
            vmono = tuple(1 if k == i else 0 for k in range(len(ground.names)))
            velem = Element(tower, {(vmono, ()): field.one})
            for z in zelems.get(d - w, ()):
                vz = velem * z
                if not vz.is_zero():
                    sub.add(tower.coords(vz, q, d))
        for i, z in enumerate(zcoords):
            if sub.add(z) is not None:
                gens.append((d, zelems[d][i]))
    return gens


def build_minimal_model(pres, N, D):
    """Minimal model of the surjection base ->> pres through stage N, degree D.

    Plain flavor: stage-1 exterior variables kill a minimal generating
    set of the kernel ideal; stage n kills minimal generators of H_{n-1}.
    The differential is decomposable by construction.
    """
    if pres.base is None:
        raise ResolutionError(
            "minimal model needs a base presentation (a surjection); "
            "supply base_relators")
    if N < 1:
        raise ResolutionError("stage bound must be >= 1")
    tower = ExtensionTower(pres.base, "plain", nmax=N, dmax=D)
    for i, (d, g) in enumerate(kernel_generators(pres)):
        tower.adjoin("y1_%d" % (i + 1), 1, d, tower.ground_element(g))
    for n in range(2, N + 1):
        gens = minimal_generators(tower, n - 1, D)
        for i, (d, z) in enumerate(gens):
            tower.adjoin("y%d_%d" % (n, i + 1), n, d, z)
    return tower


def build_acyclic_closure(pres, N, D):
    """Acyclic closure of the residue field over pres through stage N.

    Gamma flavor: even-degree variables carry divided powers, which is
    what makes the construction correct in positive characteristic.
    Stage 1 kills the ring variables (they minimally generate the
    maximal ideal since all relators have degree >= 2).
    """
    if N < 1:
        raise ResolutionError("stage bound must be >= 1")
    tower = ExtensionTower(pres, "gamma", nmax=N, dmax=D)
    for i, (nm, w) in enumerate(pres.variables):
        vmono = tuple(1 if k == i else 0 for k in range(len(pres.names)))
        dval = Element(tower, {(vmono, ()): pres.field.one})
        tower.adjoin("x1_%d" % (i + 1), 1, w, dval)
    for n in range(2, N + 1):
        gens = minimal_generators(tower, n - 1, D)
        for i, (d, z) in enumerate(gens):
            tower.adjoin("x%d_%d" % (n, i + 1), n, d, z)
    return tower
