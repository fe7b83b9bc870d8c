"""
Restriction, corestriction and inflation on Tate cohomology.

Non-negative degrees are computed on cochain tables; negative degrees
are reduced to degree r + 1 through the sequence
0 -> I_G ⊗ M -> Z[G] ⊗ M -> M -> 0, whose connecting maps are
isomorphisms over G and over every subgroup.
"""

import logging

from local_reciprocity.cohomology.coh_group import CohMap, tate
from local_reciprocity.cohomology.cochain import Cochain
from local_reciprocity.cohomology.exact import UP, ShortExact, connecting, dimension_shift
from local_reciprocity.gmodule.constructions import fixed_point_module, restrict_module
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.group.finite_group import SubgroupData
from local_reciprocity.utils.errors import DegreeOutOfRange, InvalidModule

_logger = logging.getLogger(__name__)


def _check_subgroup(m: GModule, subgroup: SubgroupData):
    if subgroup.parent != m.group:
        raise InvalidModule("Subgroup does not belong to the module's group")


def restrict_sequence(se: ShortExact, subgroup: SubgroupData) -> ShortExact:
    """The same sequence viewed over a subgroup."""
    a = restrict_module(se.a, subgroup)
    b = restrict_module(se.b, subgroup)
    c = restrict_module(se.c, subgroup)
    return ShortExact(GModuleHom(a, b, se.i.hom), GModuleHom(b, c, se.p.hom))


def restriction(m: GModule, subgroup: SubgroupData, r: int) -> CohMap:
    """Res: H_T^r(G, M) -> H_T^r(H, M)."""
    _check_subgroup(m, subgroup)
    restricted = restrict_module(m, subgroup)
    source = tate(m, r)
    target = tate(restricted, r)
    if r == 0:
        return CohMap.from_cochain_function(
            source, target, lambda rep: Cochain(restricted, 0, rep.vector.coords))
    if r > 0:
        _, embedding = subgroup.as_group()

        def fn(rep):
            return Cochain.from_function(
                restricted, r, lambda tup: rep.value(tuple(embedding[x] for x in tup)))

        return CohMap.from_cochain_function(source, target, fn)
    shifted, se = dimension_shift(m, UP)
    delta_g = connecting(se, r)
    delta_h = connecting(restrict_sequence(se, subgroup), r)
    _logger.debug("Restriction in degree %s through %s", r, shifted.name)
    return delta_h.inverse() @ restriction(shifted, subgroup, r + 1) @ delta_g


def _corestrict_cochain(m: GModule, subgroup: SubgroupData, f: Cochain) -> Cochain:
    """
    Coset sum of an H-cochain in homogeneous form, de-homogenized at
    (1, g_1, g_1·g_2, ...).
    """
    group = m.group
    _, embedding = subgroup.as_group()
    position = {x: i for i, x in enumerate(embedding)}
    r = f.degree

    def homogeneous_h(hs):
        # F(h_0..h_r) = h_0·f(h_0^-1·h_1, ..., h_(r-1)^-1·h_r)
        steps = tuple(position[group.op(group.inv(a), b)] for a, b in zip(hs, hs[1:]))
        return m.act(hs[0], f.value(steps))

    def extended(xs):
        return homogeneous_h(tuple(subgroup.right_coset_decomposition(x)[0] for x in xs))

    def value(tup):
        p = [group.identity]
        for g in tup:
            p.append(group.op(p[-1], g))
        total = m.underlying.zero()
        for g in subgroup.coset_representatives:
            g_inv = group.inv(g)
            total = total + m.act(g, extended(tuple(group.op(g_inv, x) for x in p)))
        return total

    return Cochain.from_function(m, r, value)


def corestriction(m: GModule, subgroup: SubgroupData, r: int) -> CohMap:
    """Cor: H_T^r(H, M) -> H_T^r(G, M)."""
    _check_subgroup(m, subgroup)
    restricted = restrict_module(m, subgroup)
    source = tate(restricted, r)
    target = tate(m, r)
    if r >= 0:
        return CohMap.from_cochain_function(
            source, target, lambda rep: _corestrict_cochain(m, subgroup, rep))
    shifted, se = dimension_shift(m, UP)
    delta_g = connecting(se, r)
    delta_h = connecting(restrict_sequence(se, subgroup), r)
    _logger.debug("Corestriction in degree %s through %s", r, shifted.name)
    return delta_g.inverse() @ corestriction(shifted, subgroup, r + 1) @ delta_h


def inflation(m: GModule, subgroup: SubgroupData, r: int) -> CohMap:
    """
    Inf: H^r(G/H, M^H) -> H^r(G, M) for a normal subgroup H and r >= 1.
    Raises:
        NotNormal: If H is not normal.
        DegreeOutOfRange: If r < 1.
    """
    if r < 1:
        raise DegreeOutOfRange(f"Inflation is computed in degrees r >= 1, got {r}")
    _check_subgroup(m, subgroup)
    quotient_module, incl, projection = fixed_point_module(m, subgroup)
    source = tate(quotient_module, r)
    target = tate(m, r)

    def fn(rep):
        return Cochain.from_function(
            m, r, lambda tup: incl(rep.value(tuple(projection[g] for g in tup))))

    return CohMap.from_cochain_function(source, target, fn)


def inflation_restriction(m: GModule, subgroup: SubgroupData) -> tuple:
    """
    The maps 0 -> H^1(G/H, M^H) -> H^1(G, M) -> H^1(H, M).
    Returns:
        tuple[CohMap, CohMap]: inflation and restriction in degree 1.
    """
    return inflation(m, subgroup, 1), restriction(m, subgroup, 1)
