"""Zero-neighborhood bases, symbolic sets, and the two boundedness notions.

Each shipped topology has a countable directed base of closed boxes, which
are solid and order closed, so the base is a Fatou base by construction.
Boundedness quantifiers ("for every W there is V ...") are decided exactly
through per-coordinate bound functions, never by sampling: box containments
reduce to finitely many rational inequalities per parametric family of base
neighborhoods.  Negative verdicts always carry a concrete refuting
neighborhood.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .elements import EvSeq, FinVec
from .errors import EmptyInput, InvalidElement, NotBounded
from .extended import INF, CoordBounds, is_inf
from .sampling import rand_in_interval, rand_rat
from .scalars import as_rat
from .spaces import Multiplication, Space, SpaceKind, TopologyId, abs_val


# ---------------------------------------------------------------------------
# Neighborhoods.

@dataclass(frozen=True)
class Neighborhood:
    """A base zero neighborhood: a closed coordinate box.

    QN_BOX carries one radius per coordinate; EVSEQ_PRODUCT constrains a
    finite coordinate set by one radius; EVSEQ_SUPNORM bounds every
    coordinate by one radius; the discrete base neighborhood is {0}.
    """

    topology: TopologyId
    radii: tuple[Fraction, ...] | None = None
    coords: frozenset[int] | None = None
    radius: Fraction | None = None

    def __post_init__(self):
        if self.topology is TopologyId.QN_BOX:
            if not self.radii or any(r <= 0 for r in self.radii):
                raise InvalidElement("box neighborhoods need strictly positive radii")
            if self.coords is not None or self.radius is not None:
                raise InvalidElement("box neighborhoods carry only a radius vector")
        elif self.topology is TopologyId.EVSEQ_PRODUCT:
            if self.coords is None or any(i < 0 for i in self.coords):
                raise InvalidElement("product neighborhoods need a finite coordinate set")
            if self.radius is None or self.radius <= 0 or self.radii is not None:
                raise InvalidElement("product neighborhoods need one positive radius")
        elif self.topology is TopologyId.EVSEQ_SUPNORM:
            if self.radius is None or self.radius <= 0:
                raise InvalidElement("sup-norm balls need one positive radius")
            if self.radii is not None or self.coords is not None:
                raise InvalidElement("sup-norm balls carry only a radius")
        else:
            if self.radii is not None or self.coords is not None or self.radius is not None:
                raise InvalidElement("the discrete base neighborhood is exactly {0}")

    @classmethod
    def box(cls, radii: Sequence) -> "Neighborhood":
        return cls(TopologyId.QN_BOX, radii=tuple(as_rat(r) for r in radii))

    @classmethod
    def product(cls, coords: Iterable[int], radius) -> "Neighborhood":
        return cls(TopologyId.EVSEQ_PRODUCT, coords=frozenset(coords), radius=as_rat(radius))

    @classmethod
    def sup_ball(cls, radius) -> "Neighborhood":
        return cls(TopologyId.EVSEQ_SUPNORM, radius=as_rat(radius))

    @classmethod
    def discrete_zero(cls) -> "Neighborhood":
        return cls(TopologyId.Z_DISCRETE_TOP)

    def bounds(self) -> CoordBounds:
        if self.topology is TopologyId.QN_BOX:
            return CoordBounds.finite_dim(self.radii)
        if self.topology is TopologyId.EVSEQ_PRODUCT:
            span = max(self.coords) + 1 if self.coords else 0
            head = tuple(self.radius if i in self.coords else INF for i in range(span))
            return CoordBounds.sequence(head, INF)
        if self.topology is TopologyId.EVSEQ_SUPNORM:
            return CoordBounds.sequence((), self.radius)
        return CoordBounds.finite_dim((Fraction(0),))

    def member(self, x) -> bool:
        if self.topology is TopologyId.QN_BOX:
            if not isinstance(x, FinVec) or x.dim != len(self.radii):
                raise InvalidElement(f"expected a {len(self.radii)}-dim FinVec, got {x!r}")
            return all(abs(a) <= r for a, r in zip(x.entries, self.radii))
        if self.topology is TopologyId.EVSEQ_PRODUCT:
            if not isinstance(x, EvSeq):
                raise InvalidElement(f"expected an EvSeq, got {x!r}")
            return all(abs(x.at(i)) <= self.radius for i in self.coords)
        if self.topology is TopologyId.EVSEQ_SUPNORM:
            if not isinstance(x, EvSeq):
                raise InvalidElement(f"expected an EvSeq, got {x!r}")
            span = len(x.prefix)
            return all(abs(x.at(i)) <= self.radius for i in range(span)) and abs(x.tail) <= self.radius
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidElement(f"expected an integer, got {x!r}")
        return x == 0

    def render(self) -> dict:
        if self.topology is TopologyId.QN_BOX:
            return {"topology": self.topology.value, "radii": [str(r) for r in self.radii]}
        if self.topology is TopologyId.EVSEQ_PRODUCT:
            return {
                "topology": self.topology.value,
                "coords": sorted(self.coords),
                "radius": str(self.radius),
            }
        if self.topology is TopologyId.EVSEQ_SUPNORM:
            return {"topology": self.topology.value, "radius": str(self.radius)}
        return {"topology": self.topology.value}


def nbhd_member(U: Neighborhood, x) -> bool:
    """Exact membership of x in the closed box denoted by U."""
    return U.member(x)


def canonical_generator(topology: TopologyId, dim: int | None = None) -> Neighborhood:
    """A representative base neighborhood with unit radius."""
    if topology is TopologyId.QN_BOX:
        return Neighborhood.box((Fraction(1),) * (dim or 1))
    if topology is TopologyId.EVSEQ_PRODUCT:
        return Neighborhood.product({0}, 1)
    if topology is TopologyId.EVSEQ_SUPNORM:
        return Neighborhood.sup_ball(1)
    return Neighborhood.discrete_zero()


def base_generators(topology: TopologyId, dim: int | None = None) -> list[Neighborhood]:
    """A spread of base neighborhoods across the parametric family."""
    if topology is TopologyId.QN_BOX:
        n = dim or 2
        return [
            Neighborhood.box((Fraction(1),) * n),
            Neighborhood.box(tuple(Fraction(1, i + 1) for i in range(n))),
            Neighborhood.box((Fraction(5, 2),) * n),
        ]
    if topology is TopologyId.EVSEQ_PRODUCT:
        return [
            Neighborhood.product({0}, 1),
            Neighborhood.product({0, 1, 2}, Fraction(1, 3)),
            Neighborhood.product({4}, Fraction(7, 2)),
        ]
    if topology is TopologyId.EVSEQ_SUPNORM:
        return [Neighborhood.sup_ball(1), Neighborhood.sup_ball(Fraction(1, 5)), Neighborhood.sup_ball(3)]
    return [Neighborhood.discrete_zero()]


# ---------------------------------------------------------------------------
# Symbolic sets.

@dataclass(frozen=True)
class SetDesc:
    """Base for symbolic subsets of a space; see the concrete forms below."""

    space: Space


@dataclass(frozen=True)
class Interval(SetDesc):
    lo: object
    hi: object

    def __post_init__(self):
        self.space.validate(self.lo), self.space.validate(self.hi)
        if not self.lo <= self.hi:
            raise InvalidElement("interval needs lo <= hi")


@dataclass(frozen=True)
class FiniteSet(SetDesc):
    elements: tuple

    def __post_init__(self):
        if not self.elements:
            raise EmptyInput("finite set needs at least one element")
        for x in self.elements:
            self.space.validate(x)


@dataclass(frozen=True)
class SolidHull(SetDesc):
    """Union of the boxes [-|y|, |y|] over the generators y."""

    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise EmptyInput("solid hull needs at least one generator")
        for y in self.generators:
            self.space.validate(y)


@dataclass(frozen=True)
class NbhdSet(SetDesc):
    nbhd: Neighborhood

    def __post_init__(self):
        if self.nbhd.topology is not self.space.topology:
            raise InvalidElement("neighborhood belongs to a different base")


@dataclass(frozen=True)
class ImageSet(SetDesc):
    """Image of a box-like set under a diagonal or matrix homomorphism.

    `space` is the codomain.  Bounds are propagated through the coefficient
    moduli, which is the exact per-coordinate supremum over the symmetric
    box spanned by the base's bounds.
    """

    hom: object
    base: SetDesc


def solid_hull(space: Space, points: Sequence) -> SolidHull:
    """Smallest solid superset of a finite set."""
    if not points:
        raise EmptyInput("solid hull of nothing")
    return SolidHull(space, tuple(points))


# ---------------------------------------------------------------------------
# Per-coordinate bounds.

def _element_bounds(space: Space, x) -> CoordBounds:
    if space.kind is SpaceKind.QN:
        return CoordBounds.finite_dim(abs(e) for e in x.entries)
    if space.kind is SpaceKind.EVSEQ:
        a = abs(x)
        return CoordBounds.sequence(a.prefix, a.tail)
    return CoordBounds.finite_dim((Fraction(abs(x)),))


def _merge_max(bounds: Iterable[CoordBounds]) -> CoordBounds:
    items = list(bounds)
    first = items[0]
    if first.tail is None:
        width = max(len(b.head) for b in items)
        head = tuple(
            max((b.at(i) if i < len(b.head) else Fraction(0)) for b in items) for i in range(width)
        )
        return CoordBounds.finite_dim(head)
    span = max(b.span() for b in items)
    head = tuple(max(b.at(i) for b in items) for i in range(span))
    tail = max(b.tail for b in items)
    return CoordBounds.sequence(head, tail)


def coordinate_bounds(S: SetDesc) -> CoordBounds:
    """Exact supremum of |x_i| over x in S, per coordinate (INF when unconstrained)."""
    if isinstance(S, Interval):
        lo_b = _element_bounds(S.space, S.lo)
        hi_b = _element_bounds(S.space, S.hi)
        return _merge_max([lo_b, hi_b])
    if isinstance(S, (FiniteSet, SolidHull)):
        points = S.elements if isinstance(S, FiniteSet) else S.generators
        return _merge_max([_element_bounds(S.space, x) for x in points])
    if isinstance(S, NbhdSet):
        return S.nbhd.bounds()
    if isinstance(S, ImageSet):
        return S.hom.propagate_bounds(coordinate_bounds(S.base))
    raise InvalidElement(f"unknown set form {S!r}")


# ---------------------------------------------------------------------------
# Structural solidity / order closedness.

def _symmetric_interval(S: Interval) -> bool:
    return S.lo == -S.hi


def is_solid(S: SetDesc) -> bool:
    """Structural verdict: |x| <= |y| with y in S forces x in S."""
    if isinstance(S, (NbhdSet, SolidHull)):
        return True
    if isinstance(S, Interval):
        return _symmetric_interval(S)
    if isinstance(S, FiniteSet):
        zero = S.space.zero()
        return all(x == zero for x in S.elements)
    if isinstance(S, ImageSet):
        # A diagonal image of a solid box is again a symmetric box; matrix
        # images are generally slanted, so they are not claimed solid.
        return getattr(S.hom, "is_diagonal", lambda: False)() and is_solid(S.base)
    raise InvalidElement(f"unknown set form {S!r}")


def is_order_closed(S: SetDesc) -> bool:
    """Structural verdict: closed boxes, finite unions of them, and finite sets qualify."""
    if isinstance(S, (NbhdSet, SolidHull, Interval, FiniteSet)):
        return True
    if isinstance(S, ImageSet):
        # Images of closed rational boxes under the shipped forms are rational
        # polyhedra, hence contain every coordinatewise limit they admit.
        return is_order_closed(S.base)
    raise InvalidElement(f"unknown set form {S!r}")


def non_solid_witness(S: SetDesc) -> tuple | None:
    """For a non-solid verdict, a pair (x, y) with y in S, |x| <= |y|, x not in S."""
    if is_solid(S):
        return None
    if isinstance(S, Interval):
        space = S.space
        lo_b, hi_b = S.lo, S.hi
        if space.kind is SpaceKind.QN:
            for i in range(space.dim):
                if lo_b[i] != -hi_b[i]:
                    y = hi_b if abs(hi_b[i]) >= abs(lo_b[i]) else lo_b
                    entries = list(y.entries)
                    entries[i] = -entries[i]
                    x = FinVec(tuple(entries))
                    if not set_contains(S, x):
                        return (x, y)
        else:
            span = max(len(lo_b.prefix), len(hi_b.prefix)) + 1
            for i in range(span):
                if lo_b.at(i) != -hi_b.at(i):
                    y = hi_b if abs(hi_b.at(i)) >= abs(lo_b.at(i)) else lo_b
                    entries = [y.at(j) for j in range(max(span, len(y.prefix)))]
                    entries[i] = -entries[i]
                    x = EvSeq(tuple(entries), y.tail)
                    if not set_contains(S, x):
                        return (x, y)
        return None
    if isinstance(S, FiniteSet):
        for y in S.elements:
            if y == S.space.zero():
                continue
            for x in _shrink_candidates(S.space, y):
                if not set_contains(S, x):
                    return (x, y)
    return None


def _shrink_candidates(space: Space, y):
    if space.kind is SpaceKind.Z_DISCRETE:
        step = 1 if y > 0 else -1
        return [y - step * k for k in range(1, abs(y) + 1)]
    return [y.scale(Fraction(num, 7)) for num in range(6, -1, -1)]


def zero_clamped_value(S: SetDesc, i: int) -> Fraction:
    """A feasible value at coordinate i of S, as close to zero as the set allows.

    Supplies preimage coordinates that a zero coefficient leaves free when
    testing membership in a diagonal image.
    """
    if isinstance(S, (NbhdSet, SolidHull)):
        return Fraction(0)
    if isinstance(S, Interval):
        lo = S.lo.at(i) if isinstance(S.lo, EvSeq) else S.lo[i]
        hi = S.hi.at(i) if isinstance(S.hi, EvSeq) else S.hi[i]
        return min(max(Fraction(0), lo), hi)
    raise InvalidElement(f"no coordinatewise filler for {S!r}")


def base_span(S: SetDesc) -> int:
    """Indices from this one on all share the same per-coordinate constraint."""
    if isinstance(S, Interval):
        if isinstance(S.lo, EvSeq):
            return max(len(S.lo.prefix), len(S.hi.prefix))
        return 0
    if isinstance(S, (FiniteSet, SolidHull)):
        pts = S.elements if isinstance(S, FiniteSet) else S.generators
        return max((len(p.prefix) for p in pts if isinstance(p, EvSeq)), default=0)
    if isinstance(S, NbhdSet):
        return S.nbhd.bounds().span()
    if isinstance(S, ImageSet):
        return base_span(S.base)
    raise InvalidElement(f"unknown set form {S!r}")


# ---------------------------------------------------------------------------
# Membership and member sampling.

def set_contains(S: SetDesc, x) -> bool:
    S.space.validate(x)
    if isinstance(S, Interval):
        return S.lo <= x and x <= S.hi
    if isinstance(S, FiniteSet):
        return any(x == e for e in S.elements)
    if isinstance(S, SolidHull):
        ax = abs_val(S.space, x)
        return any(ax <= abs_val(S.space, y) for y in S.generators)
    if isinstance(S, NbhdSet):
        return S.nbhd.member(x)
    if isinstance(S, ImageSet):
        return S.hom.image_contains(S.base, x)
    raise InvalidElement(f"unknown set form {S!r}")


def sample_member(S: SetDesc, rng: random.Random):
    """A random element of S; every sample respects coordinate_bounds(S)."""
    space = S.space
    if isinstance(S, Interval):
        if space.kind is SpaceKind.QN:
            return FinVec(tuple(rand_in_interval(rng, a, b) for a, b in zip(S.lo, S.hi)))
        if space.kind is SpaceKind.Z_DISCRETE:
            return rng.randint(S.lo, S.hi)
        span = max(len(S.lo.prefix), len(S.hi.prefix))
        entries = tuple(rand_in_interval(rng, S.lo.at(i), S.hi.at(i)) for i in range(span))
        return EvSeq(entries, rand_in_interval(rng, S.lo.tail, S.hi.tail))
    if isinstance(S, FiniteSet):
        return rng.choice(S.elements)
    if isinstance(S, SolidHull):
        y = abs_val(space, rng.choice(S.generators))
        if space.kind is SpaceKind.QN:
            return FinVec(tuple(rand_in_interval(rng, -a, a) for a in y))
        if space.kind is SpaceKind.Z_DISCRETE:
            return rng.randint(-y, y)
        entries = tuple(rand_in_interval(rng, -y.at(i), y.at(i)) for i in range(len(y.prefix)))
        return EvSeq(entries, rand_in_interval(rng, -y.tail, y.tail))
    if isinstance(S, NbhdSet):
        return _sample_nbhd(S.nbhd, rng)
    if isinstance(S, ImageSet):
        return S.hom.apply(sample_member(S.base, rng))
    raise InvalidElement(f"unknown set form {S!r}")


def _sample_nbhd(U: Neighborhood, rng: random.Random):
    if U.topology is TopologyId.QN_BOX:
        return FinVec(tuple(rand_in_interval(rng, -r, r) for r in U.radii))
    if U.topology is TopologyId.Z_DISCRETE_TOP:
        return 0
    if U.topology is TopologyId.EVSEQ_SUPNORM:
        span = rng.randint(0, 4)
        entries = tuple(rand_in_interval(rng, -U.radius, U.radius) for _ in range(span))
        return EvSeq(entries, rand_in_interval(rng, -U.radius, U.radius))
    # Product neighborhood: free coordinates may wander anywhere.
    span = (max(U.coords) + 1 if U.coords else 0) + rng.randint(0, 3)
    entries = [
        rand_in_interval(rng, -U.radius, U.radius) if i in U.coords else rand_rat(rng, span=30)
        for i in range(span)
    ]
    return EvSeq(tuple(entries), rand_rat(rng, span=30))


# ---------------------------------------------------------------------------
# Boundedness deciders.

@dataclass(frozen=True)
class RingBoundedVerdict:
    """VB subset of W and BV subset of W, solvable for every base W?

    `scale` records the recipe on success for box bases: V of radius
    epsilon/scale works against any W of radius epsilon (coordinatewise for
    QN boxes).  `vacuous` marks the zero-multiplication degeneracy.
    """

    bounded: bool
    witness: Neighborhood | None = None
    scale: Fraction | None = None
    vacuous: bool = False


@dataclass(frozen=True)
class GroupBoundedVerdict:
    """B subset of n*U, solvable for every base U?

    `n_unit` is the minimal multiplier against the unit-radius generator.
    """

    bounded: bool
    witness: Neighborhood | None = None
    n_unit: int | None = None


def _infinite_coord_witness(bounds: CoordBounds, topology: TopologyId) -> Neighborhood:
    j = bounds.first_infinite_index()
    if topology is TopologyId.EVSEQ_PRODUCT:
        return Neighborhood.product({j if j is not None else 0}, 1)
    if topology is TopologyId.EVSEQ_SUPNORM:
        return Neighborhood.sup_ball(1)
    raise InvalidElement("no unbounded coordinate to refute with")


def bounds_ring_bounded(
    bounds: CoordBounds, topology: TopologyId, multiplication: Multiplication
) -> RingBoundedVerdict:
    """Ring-boundedness decision from a bound function alone."""
    if multiplication is Multiplication.ZERO:
        return RingBoundedVerdict(True, vacuous=True)
    if topology is TopologyId.Z_DISCRETE_TOP:
        # V = {0} multiplies everything to {0}.
        return RingBoundedVerdict(True, scale=Fraction(1))
    if topology in (TopologyId.QN_BOX, TopologyId.EVSEQ_PRODUCT, TopologyId.EVSEQ_SUPNORM):
        sup = bounds.overall_sup()
        if is_inf(sup):
            return RingBoundedVerdict(False, witness=_infinite_coord_witness(bounds, topology))
        return RingBoundedVerdict(True, scale=max(sup, Fraction(1)))
    raise InvalidElement(f"unknown topology {topology}")


def bounds_group_bounded(bounds: CoordBounds, topology: TopologyId) -> GroupBoundedVerdict:
    """Group-boundedness decision from a bound function alone."""
    if topology is TopologyId.Z_DISCRETE_TOP:
        # n * {0} = {0}: only subsets of {0} qualify.
        if bounds.overall_sup() == 0:
            return GroupBoundedVerdict(True, n_unit=1)
        return GroupBoundedVerdict(False, witness=Neighborhood.discrete_zero())
    sup = bounds.overall_sup()
    if is_inf(sup):
        return GroupBoundedVerdict(False, witness=_infinite_coord_witness(bounds, topology))
    return GroupBoundedVerdict(True, n_unit=max(1, math.ceil(sup)))


def set_ring_bounded(
    S: SetDesc,
    topology: TopologyId | None = None,
    multiplication: Multiplication | None = None,
) -> RingBoundedVerdict:
    """Decide: for every base W there is a base V with V*S and S*V inside W."""
    topology = topology or S.space.topology
    multiplication = multiplication or S.space.multiplication
    return bounds_ring_bounded(coordinate_bounds(S), topology, multiplication)


def set_group_bounded(S: SetDesc, topology: TopologyId | None = None) -> GroupBoundedVerdict:
    """Decide: for every base U there is a positive n with S inside n*U."""
    topology = topology or S.space.topology
    return bounds_group_bounded(coordinate_bounds(S), topology)


def group_bound_multiplier(S: SetDesc, U: Neighborhood) -> int | None:
    """Minimal n with S inside n*U, or None when no multiple suffices."""
    b = coordinate_bounds(S)
    if U.topology is TopologyId.Z_DISCRETE_TOP:
        return 1 if b.overall_sup() == 0 else None
    if U.topology is TopologyId.QN_BOX:
        ratios = [b.at(i) / r for i, r in enumerate(U.radii)]
    elif U.topology is TopologyId.EVSEQ_PRODUCT:
        ratios = []
        for i in U.coords:
            v = b.at(i)
            if is_inf(v):
                return None
            ratios.append(v / U.radius)
    else:
        sup = b.overall_sup()
        if is_inf(sup):
            return None
        ratios = [sup / U.radius]
    if any(is_inf(r) for r in ratios):
        return None
    return max(1, *(math.ceil(r) for r in ratios)) if ratios else 1


def fatou_check(topology: TopologyId) -> bool:
    """Every base neighborhood is solid and order closed (closed boxes are)."""
    space = _space_for(topology)
    for U in base_generators(topology, dim=space.dim):
        s = NbhdSet(space, U)
        if not (is_solid(s) and is_order_closed(s)):
            return False
    return True


def _space_for(topology: TopologyId) -> Space:
    if topology is TopologyId.QN_BOX:
        return Space.qn(2)
    if topology is TopologyId.Z_DISCRETE_TOP:
        return Space.z_discrete()
    return Space.evseq(topology)


@dataclass(frozen=True)
class HullPreservation:
    generators_verdict: RingBoundedVerdict
    hull_verdict: RingBoundedVerdict
    bounds_equal: bool


def hull_bounded_preservation(
    S: SetDesc,
    topology: TopologyId | None = None,
    multiplication: Multiplication | None = None,
) -> HullPreservation:
    """Solid hulls of bounded finite sets stay bounded, with identical bounds."""
    if not isinstance(S, FiniteSet):
        raise NotBounded("expects a finite set of elements")
    gen_verdict = set_ring_bounded(S, topology, multiplication)
    if not gen_verdict.bounded:
        raise NotBounded("the finite set is not ring-bounded, nothing to preserve")
    hull = SolidHull(S.space, S.elements)
    hull_verdict = set_ring_bounded(hull, topology, multiplication)
    same = coordinate_bounds(S) == coordinate_bounds(hull)
    return HullPreservation(gen_verdict, hull_verdict, same)
