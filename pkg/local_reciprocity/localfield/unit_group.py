"""
The unit group of O_L / p^N as an abstract finite abelian group.

U = μ_{p^f-1} × U^(1). The Teichmüller part is generated by the lift of a
primitive residue element. U^(1)/U^(N) is generated by s_{m,i} = 1 + p^m·x^i
(1 <= m < N, i < f): peeling the filtration layer by layer writes every
principal unit as ∏ s_{m,i}^{c_{m,i}} with digits c in [0, p). The p-th power
of s_{m,i} lies one layer deeper, so the relations p·e_s - digits(s^p) span a
lattice of index p^{(N-1)f} = |U^(1)/U^(N)|, which makes them a complete set.
The cokernel of the relation matrix is the unit group; p = 2 needs no
special case.
"""

import logging
import threading

from sympy import factorint

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup, direct_sum
from local_reciprocity.abgroup.homology import cokernel
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.gmodule.constructions import integers
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.group.finite_group import cyclic
from local_reciprocity.localfield.tower import OElement, UnramifiedTower
from local_reciprocity.utils.errors import DecompositionFailed, NotAUnit

_logger = logging.getLogger(__name__)


class UnitGroup:
    """(O_L / p^N)^× with generators, discrete logs and the Frobenius action."""

    def __init__(self, tower: UnramifiedTower):
        self.tower = tower
        field = tower.residue_field
        self._q1 = field.order - 1
        self._omega = tower.teichmuller(field.primitive_element())
        self._check_teichmuller_order()
        p = tower.p
        self._layers = []
        for m in range(1, tower.precision):
            layer = []
            for i in range(tower.f):
                basis = [0] * tower.f
                basis[i] = p**m
                s = tower.one() + tower.element(basis)
                layer.append((s, s.inverse()))
            self._layers.append(layer)
        self._raw_group = FgAbGroup.free(1 + len(self._layers) * tower.f)
        relations = [[self._q1] + [0] * (self._raw_group.ngens - 1)]
        for k, (s, _) in enumerate(self._filtration_generators()):
            column = [0] + list(self._digits(s**p))
            column[1 + k] -= p
            relations.append(column)
        relation_map = AbHom(self._raw_group, self._raw_group,
                             IntMatrix.from_columns(relations, self._raw_group.ngens))
        self.group, self._projection = cokernel(relation_map)
        if self.group.order() != tower.unit_count:
            raise DecompositionFailed(
                f"Unit group of {tower!r} came out of order {self.group.order()}, "
                f"expected {tower.unit_count}")
        self.generators = [self._evaluate(self._projection.preimage(e).coords)
                           for e in self.group.generators()]
        for j, g in enumerate(self.generators):
            if self.coordinates(g) != self.group.generator(j):
                raise DecompositionFailed(f"Generator {j} of {tower!r} does not round-trip")
        self._frobenius = {}
        self._lock = threading.Lock()
        _logger.info("Unit group of %r decomposed as %r", tower, self.group)

    def _check_teichmuller_order(self):
        one = self.tower.one()
        if self._omega ** self._q1 != one:
            raise DecompositionFailed("Teichmüller generator has the wrong order")
        for prime in factorint(self._q1):
            if self._omega ** (self._q1 // prime) == one:
                raise DecompositionFailed("Teichmüller generator is not primitive")

    def _filtration_generators(self) -> list:
        return [pair for layer in self._layers for pair in layer]

    def _digits(self, u: OElement) -> tuple:
        """Digits c_{m,i} of a principal unit, layer by layer."""
        tower = self.tower
        p = tower.p
        digits = []
        x = u
        for m, layer in enumerate(self._layers, start=1):
            shifted = [x.coeffs[0] - 1] + list(x.coeffs[1:])
            layer_digits = [(c // p**m) % p for c in shifted]
            for (_, s_inv), c in zip(layer, layer_digits):
                if c:
                    x = x * s_inv**c
            digits.extend(layer_digits)
        if x != tower.one():
            raise DecompositionFailed(f"{u!r} is not a principal unit")
        return tuple(digits)

    def _raw_coordinates(self, u: OElement) -> list:
        if not u.is_unit():
            raise NotAUnit(f"{u!r} is not a unit")
        k = self.tower.residue_field.discrete_log(u.residue())
        principal = u * self._omega ** (-k)
        return [k] + list(self._digits(principal))

    def _evaluate(self, raw) -> OElement:
        result = self._omega ** raw[0]
        for (s, s_inv), c in zip(self._filtration_generators(), raw[1:]):
            result = result * (s**c if c >= 0 else s_inv ** (-c))
        return result

    @property
    def orders(self) -> tuple:
        return self.group.orders

    def coordinates(self, u: OElement) -> ElementOf:
        """The discrete log of u in the generators."""
        return self._projection(ElementOf(self._raw_group, self._raw_coordinates(u)))

    def element(self, coords) -> OElement:
        coords = self.group.reduce(coords)
        result = self.tower.one()
        for g, c in zip(self.generators, coords):
            result = result * g**c
        return result

    def frobenius_matrix(self, k: int) -> IntMatrix:
        """σ^k in the coordinates of the generators."""
        with self._lock:
            if k not in self._frobenius:
                columns = [self.coordinates(g.frobenius(k)).coords for g in self.generators]
                self._frobenius[k] = IntMatrix.from_columns(columns, self.group.ngens)
            return self._frobenius[k]

    def serialize(self) -> dict:
        return {"tower": self.tower.serialize(), "factors": [str(d) for d in self.orders],
                "generators": [g.serialize() for g in self.generators]}


_unit_groups = {}
_unit_groups_lock = threading.Lock()


def unit_group(tower: UnramifiedTower) -> UnitGroup:
    """The memoized decomposition of the units of a tower."""
    with _unit_groups_lock:
        group = _unit_groups.get(tower)
        if group is None:
            group = UnitGroup(tower)
            _unit_groups[tower] = group
        else:
            _logger.debug("Unit group cache hit for %r", tower)
        return group


class TruncatedMultGroup:
    """
    L^× / (1 + p^N·O_L) ≅ Z ⊕ (O_L / p^N)^× as a module over Gal(L/K) = Z/f.

    The first coordinate is the valuation, counting powers of the
    uniformizer π = p, which every Galois element fixes.
    """

    def __init__(self, tower: UnramifiedTower):
        self.tower = tower
        self.units = unit_group(tower)
        self.galois = cyclic(tower.f)
        underlying = direct_sum(FgAbGroup.free(1), self.units.group)
        action = [IntMatrix.block_diagonal([IntMatrix.identity(1), self.units.frobenius_matrix(k)])
                  for k in self.galois.elements()]
        self.module = GModule(self.galois, underlying, action,
                              name=f"L^x mod 1+{tower.p}^{tower.precision} (f={tower.f})")

    def coordinates(self, valuation: int, unit: OElement) -> ElementOf:
        """The coordinates of p^valuation · unit."""
        return self.module.element([valuation] + list(self.units.coordinates(unit).coords))

    def uniformizer(self) -> ElementOf:
        return self.coordinates(1, self.tower.one())

    def value(self, x: ElementOf) -> tuple:
        """
        Returns:
            tuple[int, OElement]: the valuation and the unit part.
        """
        return x.coords[0], self.units.element(x.coords[1:])

    def valuation_map(self) -> GModuleHom:
        """ord: the projection onto the trivial Z."""
        z = integers(self.galois)
        return GModuleHom(self.module, z, [[1] + [0] * self.units.group.ngens])


def truncated_mult_module(tower: UnramifiedTower) -> TruncatedMultGroup:
    return TruncatedMultGroup(tower)
