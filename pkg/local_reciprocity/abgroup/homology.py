"""
Homology of composable pairs of abelian-group maps.

homology_at computes ker(d_out)/im(d_in) at the middle term. The cycle
lattice is read off from one Smith reduction of d_out stacked with the
relations of its target; the boundaries are expressed in a basis of
that lattice and a second reduction gives the invariant factors, the
classification map and the representatives.
"""

import logging
import operator

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup
from local_reciprocity.abgroup.int_matrix import SmithReduction
from local_reciprocity.utils.errors import NonComposable, NotAComplex, NotACycle

_logger = logging.getLogger(__name__)


class Homology:
    """ker(d_out) / im(d_in) with explicit classification and lifting."""

    def __init__(self, d_in: AbHom, d_out: AbHom):
        """
        Args:
            d_in (AbHom): incoming map A -> B.
            d_out (AbHom): outgoing map B -> C.
        Raises:
            NonComposable: If d_in does not land where d_out starts.
            NotAComplex: If d_out ∘ d_in is not zero.
        """
        if not d_in.target.same_presentation(d_out.source):
            raise NonComposable("The incoming map does not land in the source of the outgoing map")
        if not (d_out @ d_in).is_zero():
            raise NotAComplex("The outgoing map does not kill the image of the incoming map")
        self.d_in = d_in
        self.d_out = d_out
        self.middle = d_in.target
        self._out_columns = d_out.matrix.columns()
        self._build_cycle_lattice()
        self._build_quotient()

    def _build_cycle_lattice(self):
        t = self.middle.ngens
        out_orders = self.d_out.target.orders
        self._relation_rows = [j for j, c in enumerate(out_orders) if c]
        width = t + len(self._relation_rows)
        system = [list(row) + [0] * len(self._relation_rows) for row in self.d_out.matrix.entries]
        for k, j in enumerate(self._relation_rows):
            system[j][t + k] = out_orders[j]
        reduction = SmithReduction(
            system, rows=len(out_orders), cols=width, track_right=True, track_inverses=True
        ).run()
        rho = reduction.rank
        self._basis = [column[:t] for column in reduction.right_columns[rho:]]
        coordinate_rows = reduction.right_inverse[rho:]
        if coordinate_rows:
            self._coordinate_columns = [list(c) for c in zip(*coordinate_rows)]
        else:
            self._coordinate_columns = [[] for _ in range(width)]
        _logger.debug("Cycle lattice of rank %s inside Z^%s", len(self._basis), t)

    def _lattice_coordinates(self, coords) -> list:
        """Coordinates of an integer cycle vector in the cycle-lattice basis."""
        ell = len(self._basis)
        image = [0] * self.d_out.target.ngens
        extended = []
        for i, x in enumerate(coords):
            if x:
                image = [a + x * b for a, b in zip(image, self._out_columns[i])]
                extended.append((i, x))
        t = self.middle.ngens
        out_orders = self.d_out.target.orders
        for j, c in enumerate(out_orders):
            if c == 0 and image[j] != 0:
                raise NotACycle("Element is not killed by the outgoing map")
        for k, j in enumerate(self._relation_rows):
            value = image[j]
            if value % out_orders[j]:
                raise NotACycle("Element is not killed by the outgoing map")
            if value:
                extended.append((t + k, -value // out_orders[j]))
        result = [0] * ell
        for index, x in extended:
            result = [a + x * b for a, b in zip(result, self._coordinate_columns[index])]
        return result

    def _build_quotient(self):
        ell = len(self._basis)
        columns = [self._lattice_coordinates(c) for c in self.d_in.matrix.columns()]
        columns += [self._lattice_coordinates(c) for c in self.middle.relation_columns()]
        system = [list(r) for r in zip(*columns)] if columns else [[] for _ in range(ell)]
        reduction = SmithReduction(
            system, rows=ell, cols=len(columns), track_left=True, track_inverses=True
        ).run()
        diagonal = reduction.diagonal()
        kept = [i for i in range(ell) if i >= reduction.rank or diagonal[i] != 1]
        self.group = FgAbGroup([diagonal[i] if i < reduction.rank else 0 for i in kept])
        self._left_rows = [reduction.left[i] for i in kept]
        t = self.middle.ngens
        self.generators = []
        for i in kept:
            combination = reduction.left_inverse_columns[i]
            vector = [0] * t
            for k, x in enumerate(combination):
                if x:
                    vector = [a + x * b for a, b in zip(vector, self._basis[k])]
            self.generators.append(ElementOf(self.middle, vector))

    def classify(self, x: ElementOf) -> ElementOf:
        """
        Class of a cycle in the homology group.
        Raises:
            NotACycle: If d_out(x) is not zero.
        """
        if not x.group.same_presentation(self.middle):
            raise NonComposable("Element does not belong to the middle term")
        if not self.d_out(x).is_zero():
            raise NotACycle("Element is not killed by the outgoing map")
        k = self._lattice_coordinates(x.coords)
        return ElementOf(self.group, [sum(map(operator.mul, row, k)) for row in self._left_rows])

    def lift(self, e: ElementOf) -> ElementOf:
        """A cycle representing the class e."""
        if not e.group.same_presentation(self.group):
            raise NonComposable("Element does not belong to the homology group")
        result = self.middle.zero()
        for c, g in zip(e.coords, self.generators):
            if c:
                result = result + g * c
        return result

    def is_boundary(self, x: ElementOf) -> bool:
        return self.classify(x).is_zero()

    def __iter__(self):
        return iter((self.group, self.classify, self.lift))


def homology_at(d_in: AbHom, d_out: AbHom) -> Homology:
    """
    Homology at the middle term of d_in followed by d_out.
    Returns:
        Homology: unpacks as (group, classify, lift).
    """
    return Homology(d_in, d_out)


def kernel(h: AbHom) -> tuple:
    """
    Kernel of a homomorphism.
    Returns:
        tuple[FgAbGroup, AbHom]: the kernel in invariant-factor form and its inclusion.
    """
    result = Homology(AbHom.zero(FgAbGroup(), h.source), h)
    return result.group, AbHom.from_images(result.group, h.source, result.generators)


def cokernel(h: AbHom) -> tuple:
    """
    Cokernel of a homomorphism.
    Returns:
        tuple[FgAbGroup, AbHom]: the cokernel in invariant-factor form and the projection.
    """
    result = Homology(h, AbHom.zero(h.target, FgAbGroup()))
    images = [result.classify(g) for g in h.target.generators()]
    return result.group, AbHom.from_images(h.target, result.group, images)


def image_order(h: AbHom):
    """|im h| for a map out of a finite group."""
    k, _ = kernel(h)
    if not h.source.is_finite():
        return None
    return h.source.order() // k.order()
