"""Herbrand quotients of modules over cyclic groups."""

import logging
from fractions import Fraction

from local_reciprocity.cohomology.coh_group import tate
from local_reciprocity.cohomology.exact import ShortExact
from local_reciprocity.gmodule.gmodule import GModule
from local_reciprocity.utils.errors import InfiniteCohomology, NotCyclic

_logger = logging.getLogger(__name__)


def herbrand(m: GModule) -> Fraction:
    """
    h(M) = |H_T^0(G, M)| / |H_T^1(G, M)|.
    Raises:
        NotCyclic: If G is not cyclic.
        InfiniteCohomology: If either Tate group has a free factor.
    """
    if not m.group.is_cyclic():
        raise NotCyclic(f"Herbrand quotient needs a cyclic group, got {m.group!r}")
    h0 = tate(m, 0).group
    h1 = tate(m, 1).group
    for r, group in ((0, h0), (1, h1)):
        if not group.is_finite():
            raise InfiniteCohomology(f"H_T^{r}({m.name}) = {group!r} is infinite")
    result = Fraction(h0.order(), h1.order())
    _logger.debug("h(%s) = %s", m.name, result)
    return result


def herbrand_of_sequence(se: ShortExact) -> tuple:
    """
    Returns:
        tuple[Fraction, Fraction, Fraction]: (h(A), h(B), h(C)), with h(B) = h(A)·h(C).
    """
    return herbrand(se.a), herbrand(se.b), herbrand(se.c)
