"""
Cohomology, homology and Tate cohomology groups with explicit classes.

The Tate complex of M glues the chain complex C_k(G) ⊗_{Z[G]} M (placed
in degree -k-1) to the cochain complex C^r(G, M) through the norm map
from degree -1 to degree 0, so every H_T^r is the homology of one
composable pair of maps.
"""

import functools
import logging
import threading

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup
from local_reciprocity.abgroup.homology import Homology
from local_reciprocity.cohomology.bar import (
    chain_differential,
    chain_term,
    cochain_differential,
    cochain_term,
)
from local_reciprocity.cohomology.cochain import ChainElement, Cochain
from local_reciprocity.gmodule.constructions import norm_map
from local_reciprocity.gmodule.gmodule import GModule
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import DegreeOutOfRange, NonComposable, NotACycle

_logger = logging.getLogger(__name__)

TATE = "tate"
COHOMOLOGY = "cohomology"
HOMOLOGY = "homology"


class TateComplex:
    """Terms and differentials of the complete complex of one module, memoized."""

    def __init__(self, module: GModule):
        self.module = module
        self._lock = threading.RLock()
        self._differentials = {}
        self._groups = {}

    def term(self, r: int) -> FgAbGroup:
        """T^r = C^r(G, M) for r >= 0 and C_(-r-1)(G) ⊗ M for r < 0."""
        if r >= 0:
            return cochain_term(self.module, r)
        return chain_term(self.module, -r - 1)

    def differential(self, r: int) -> AbHom:
        """δ^r: T^r -> T^(r+1)."""
        with self._lock:
            if r not in self._differentials:
                if r >= 0:
                    d = cochain_differential(self.module, r)
                elif r == -1:
                    d = norm_map(self.module)
                    d = AbHom(self.term(-1), self.term(0), d.matrix)
                else:
                    d = chain_differential(self.module, -r - 1)
                self._differentials[r] = d
            return self._differentials[r]

    def _zero_into(self, r: int) -> AbHom:
        return AbHom.zero(FgAbGroup(), self.term(r))

    def _zero_out_of(self, r: int) -> AbHom:
        return AbHom.zero(self.term(r), FgAbGroup())

    def group(self, kind: str, r: int) -> "CohGroup":
        with self._lock:
            key = (kind, r)
            if key not in self._groups:
                self._groups[key] = self._compute(kind, r)
            return self._groups[key]

    def _compute(self, kind: str, r: int) -> "CohGroup":
        if kind == TATE:
            homology = Homology(self.differential(r - 1), self.differential(r))
        elif kind == COHOMOLOGY:
            d_in = self._zero_into(0) if r == 0 else self.differential(r - 1)
            homology = Homology(d_in, self.differential(r))
        elif kind == HOMOLOGY:
            # H_r sits in Tate degree -r-1; H_0 has no outgoing boundary
            d_out = self._zero_out_of(-1) if r == 0 else self.differential(-r - 1)
            homology = Homology(self.differential(-r - 2), d_out)
        else:
            raise ValueError(f"Unknown cohomology kind {kind!r}")
        result = CohGroup(kind, r, self.module, homology)
        _logger.debug("%s^%s(%s) = %s", kind, r, self.module.name, result.group)
        return result


COMPLEX_CACHE_SIZE = 64


@functools.lru_cache(maxsize=COMPLEX_CACHE_SIZE)
def tate_complex(module: GModule) -> TateComplex:
    return TateComplex(module)


def clear_cache():
    tate_complex.cache_clear()


class CohGroup:
    """
    One (co)homology group of a module with its classification machinery.

    Elements of the group are ElementOf values of `group`; cycles live in
    `term`, the corresponding term of the complex.
    """

    def __init__(self, kind: str, degree: int, module: GModule, homology: Homology):
        self.kind = kind
        self.degree = degree
        self.module = module
        self.group = homology.group
        self.term = homology.middle
        self._homology = homology

    @property
    def table_degree(self) -> int:
        """Degree of the cochain or chain tables that represent classes."""
        if self.kind == HOMOLOGY:
            return self.degree
        if self.kind == TATE and self.degree < 0:
            return -self.degree - 1
        return self.degree

    @property
    def uses_chains(self) -> bool:
        return self.kind == HOMOLOGY or (self.kind == TATE and self.degree < 0)

    def _wrap(self, vector: ElementOf):
        table = ChainElement if self.uses_chains else Cochain
        return table(self.module, self.table_degree, vector)

    def _unwrap(self, x) -> ElementOf:
        if isinstance(x, (Cochain, ChainElement)):
            expected = ChainElement if self.uses_chains else Cochain
            if not isinstance(x, expected) or x.degree != self.table_degree or x.module != self.module:
                raise NonComposable(f"{x!r} does not represent classes of {self!r}")
            return x.vector
        if isinstance(x, ElementOf):
            if x.group.same_presentation(self.term):
                return x
            raise NonComposable("Element does not belong to the term of the complex")
        raise TypeError(f"Cannot classify {type(x).__name__}")

    @property
    def representatives(self) -> list:
        """One cycle per generator of the group."""
        return [self._wrap(g) for g in self._homology.generators]

    def classify(self, x) -> ElementOf:
        """
        Class of a cycle given as a Cochain, ChainElement or vector of the term.
        Raises:
            NotACycle: If x is not a cocycle (or cycle).
        """
        return self._homology.classify(self._unwrap(x))

    def is_cycle(self, x) -> bool:
        try:
            self.classify(x)
        except NotACycle:
            return False
        return True

    def lift(self, e: ElementOf) -> ElementOf:
        return self._homology.lift(e)

    def representative(self, e):
        """A Cochain or ChainElement representing the class e."""
        if isinstance(e, CohClass):
            e = e.element
        return self._wrap(self.lift(e))

    def element(self, coords) -> "CohClass":
        return CohClass(self, self.group.element(coords))

    def zero(self) -> "CohClass":
        return CohClass(self, self.group.zero())

    def class_of(self, x) -> "CohClass":
        return CohClass(self, self.classify(x))

    def generators(self) -> list:
        return [CohClass(self, g) for g in self.group.generators()]

    def classes(self):
        """Iterate over all classes of a finite group."""
        for e in self.group.elements():
            yield CohClass(self, e)

    def order(self):
        return self.group.order()

    def is_trivial(self) -> bool:
        return self.group.is_trivial()

    def is_finite(self) -> bool:
        return self.group.is_finite()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohGroup):
            return False
        return (self.kind == other.kind and self.degree == other.degree
                and self.module == other.module)

    def __hash__(self) -> int:
        return hash((self.kind, self.degree, self.module))

    def __repr__(self) -> str:
        return f"CohGroup({self.kind}^{self.degree}({self.module.name}) = {self.group!r})"

    def serialize(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "factors": [str(d) for d in self.group.invariant_factors],
        }


class CohClass:
    """An element of a CohGroup."""

    def __init__(self, cohgroup: CohGroup, element: ElementOf):
        if not element.group.same_presentation(cohgroup.group):
            raise NonComposable("Element does not belong to the cohomology group")
        self.cohgroup = cohgroup
        self.element = element

    @property
    def degree(self) -> int:
        return self.cohgroup.degree

    @property
    def module(self) -> GModule:
        return self.cohgroup.module

    def representative(self):
        return self.cohgroup.representative(self.element)

    def _check(self, other: "CohClass"):
        if self.cohgroup != other.cohgroup:
            raise NonComposable("Classes belong to different groups")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        return CohClass(self.cohgroup, self.element + other.element)

    def __sub__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        return CohClass(self.cohgroup, self.element - other.element)

    def __neg__(self) -> "CohClass":
        return CohClass(self.cohgroup, -self.element)

    def __mul__(self, k: int) -> "CohClass":
        return CohClass(self.cohgroup, self.element * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohClass):
            return False
        return self.cohgroup == other.cohgroup and self.element == other.element

    def __hash__(self) -> int:
        return hash((self.cohgroup, self.element))

    def __repr__(self) -> str:
        return f"CohClass({list(self.element.coords)} in {self.cohgroup!r})"

    def is_zero(self) -> bool:
        return self.element.is_zero()

    def order(self):
        return self.element.order()

    def serialize(self) -> dict:
        return {"group": self.cohgroup.serialize(), "coords": self.element.serialize()}


class CohMap:
    """A homomorphism between two CohGroups."""

    def __init__(self, source: CohGroup, target: CohGroup, hom: AbHom):
        if not (hom.source.same_presentation(source.group)
                and hom.target.same_presentation(target.group)):
            raise NonComposable("Map does not run between the given cohomology groups")
        self.source = source
        self.target = target
        self.hom = hom

    @classmethod
    def from_cochain_function(cls, source: CohGroup, target: CohGroup, fn) -> "CohMap":
        """
        Build the map from a function on representatives.
        Args:
            fn: takes a representative of `source` and returns a cycle of `target`.
        """
        images = [target.classify(fn(rep)) for rep in source.representatives]
        return cls(source, target, AbHom.from_images(source.group, target.group, images))

    @classmethod
    def zero(cls, source: CohGroup, target: CohGroup) -> "CohMap":
        return cls(source, target, AbHom.zero(source.group, target.group))

    @classmethod
    def identity(cls, group: CohGroup) -> "CohMap":
        return cls(group, group, AbHom.identity(group.group))

    def __call__(self, x: CohClass) -> CohClass:
        if x.cohgroup != self.source:
            raise NonComposable("Class does not belong to the source of the map")
        return CohClass(self.target, self.hom(x.element))

    def __matmul__(self, other: "CohMap") -> "CohMap":
        if other.target != self.source:
            raise NonComposable("Target of the inner map is not the source of the outer map")
        return CohMap(other.source, self.target, self.hom @ other.hom)

    def __add__(self, other: "CohMap") -> "CohMap":
        return CohMap(self.source, self.target, self.hom + other.hom)

    def __sub__(self, other: "CohMap") -> "CohMap":
        return CohMap(self.source, self.target, self.hom - other.hom)

    def __neg__(self) -> "CohMap":
        return CohMap(self.source, self.target, -self.hom)

    def scale(self, k: int) -> "CohMap":
        return CohMap(self.source, self.target, self.hom.scale(k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohMap):
            return False
        return self.source == other.source and self.target == other.target and self.hom == other.hom

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.hom))

    def __repr__(self) -> str:
        return f"CohMap({self.source!r} -> {self.target!r})"

    def is_zero(self) -> bool:
        return self.hom.is_zero()

    def is_injective(self) -> bool:
        return self.hom.is_injective()

    def is_surjective(self) -> bool:
        return self.hom.is_surjective()

    def is_isomorphism(self) -> bool:
        return self.hom.is_isomorphism()

    def inverse(self) -> "CohMap":
        return CohMap(self.target, self.source, self.hom.inverse())

    def serialize(self) -> dict:
        return {
            "source": self.source.serialize(),
            "target": self.target.serialize(),
            "matrix": [[str(x) for x in row] for row in self.hom.matrix.entries],
        }


def _check_degree(r: int, low: int, high: int):
    if not low <= r <= high:
        raise DegreeOutOfRange(f"Degree {r} is outside [{low}, {high}]")


def tate(m: GModule, r: int) -> CohGroup:
    """H_T^r(G, M) for r in the configured Tate range."""
    config = Config.instance()
    _check_degree(r, config.min_degree, config.max_degree)
    return tate_complex(m).group(TATE, r)


def cohomology(m: GModule, r: int) -> CohGroup:
    """H^r(G, M) from the inhomogeneous cochain complex; H^0 = M^G."""
    _check_degree(r, 0, Config.instance().max_degree)
    return tate_complex(m).group(COHOMOLOGY, r)


def homology(m: GModule, r: int) -> CohGroup:
    """H_r(G, M) from C_r(G) ⊗_{Z[G]} M; H_0 = M_G."""
    _check_degree(r, 0, Config.instance().max_degree)
    return tate_complex(m).group(HOMOLOGY, r)


def group_of(kind: str, m: GModule, r: int) -> CohGroup:
    if kind == TATE:
        return tate(m, r)
    if kind == COHOMOLOGY:
        return cohomology(m, r)
    if kind == HOMOLOGY:
        return homology(m, r)
    raise ValueError(f"Unknown cohomology kind {kind!r}")
