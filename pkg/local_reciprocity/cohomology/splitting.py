"""
The splitting module of a 2-cocycle and the explicit reciprocity map.

For φ ∈ Z^2(G, C) the splitting module C(φ) is C ⊕ ⊕_{σ≠1} Z·x_σ with
x_1 := φ(1, 1) and σ·x_τ = x_στ - x_σ + φ(σ, τ). It sits in
0 -> C -> C(φ) --α--> I_G -> 0 with α(x_σ) = σ - 1, and σ ↦ x_σ is a
1-cochain whose coboundary is φ.
"""

import logging

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup, direct_sum
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.cohomology.coh_group import (
    COHOMOLOGY,
    CohClass,
    CohMap,
    cohomology,
    homology,
    tate,
)
from local_reciprocity.cohomology.cochain import ChainElement, Cochain
from local_reciprocity.cohomology.exact import (
    ShortExact,
    augmentation_sequence,
    connecting,
    integer_sequence,
)
from local_reciprocity.datatype.report import Check
from local_reciprocity.gmodule.constructions import augmentation_ideal, coinduced, integers
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.group.finite_group import (
    FiniteGroup,
    SubgroupData,
    abelianization_oracle,
    cyclic,
)
from local_reciprocity.utils.errors import NotACocycle

_logger = logging.getLogger(__name__)


def _check_fundamental_cochain(c: GModule, phi: Cochain):
    if phi.module != c or phi.degree != 2:
        raise NotACocycle("Expected a 2-cochain with values in the given module")
    if not phi.is_cocycle():
        raise NotACocycle("φ does not satisfy the 2-cocycle identity")


class _SplittingCoordinates:
    """Coordinates of x_ρ in C ⊕ Z^(|G|-1)."""

    def __init__(self, c: GModule, phi: Cochain):
        group = c.group
        self.t = c.ngens
        self.basis = [h for h in group.elements() if h != group.identity]
        self.position = {h: i for i, h in enumerate(self.basis)}
        self.identity = group.identity
        self.x_one = phi.value((group.identity, group.identity))

    def x(self, rho: int) -> list:
        if rho == self.identity:
            return list(self.x_one.coords) + [0] * len(self.basis)
        coords = [0] * (self.t + len(self.basis))
        coords[self.t + self.position[rho]] = 1
        return coords

    def embed(self, element) -> list:
        return list(element.coords) + [0] * len(self.basis)


def splitting_module(c: GModule, phi: Cochain) -> tuple:
    """
    Returns:
        tuple[GModule, ShortExact]: C(φ) and 0 -> C -> C(φ) -> I_G -> 0.
    Raises:
        NotACocycle: If φ is not a 2-cocycle of C.
    """
    _check_fundamental_cochain(c, phi)
    group = c.group
    coords = _SplittingCoordinates(c, phi)
    rank = len(coords.basis)
    underlying = direct_sum(c.underlying, FgAbGroup.free(rank))
    action = []
    for sigma in group.elements():
        columns = [coords.embed(c.act(sigma, e)) for e in c.underlying.generators()]
        x_sigma = coords.x(sigma)
        for tau in coords.basis:
            x_sigma_tau = coords.x(group.op(sigma, tau))
            value = coords.embed(phi.value((sigma, tau)))
            columns.append([a - b + v for a, b, v in zip(x_sigma_tau, x_sigma, value)])
        action.append(IntMatrix.from_columns(columns, underlying.ngens))
    cphi = GModule(group, underlying, action, name=f"{c.name}(φ)")
    ig, _ = augmentation_ideal(group)
    incl = GModuleHom(c, cphi, IntMatrix.from_columns(
        [coords.embed(e) for e in c.underlying.generators()], underlying.ngens))
    alpha_columns = [[0] * rank for _ in range(coords.t)]
    for i in range(rank):
        column = [0] * rank
        column[i] = 1
        alpha_columns.append(column)
    alpha = GModuleHom(cphi, ig, IntMatrix.from_columns(alpha_columns, rank))
    _logger.debug("Splitting module of rank %s over %s", underlying.ngens, group.name)
    return cphi, ShortExact(incl, alpha)


def splitting_cochain(se: ShortExact, phi: Cochain) -> Cochain:
    """The 1-cochain σ ↦ x_σ of C(φ), whose coboundary is the image of φ."""
    coords = _SplittingCoordinates(se.a, phi)
    return Cochain.from_function(se.b, 1, lambda tup: coords.x(tup[0]))


def embedded_cocycle(se: ShortExact, phi: Cochain) -> Cochain:
    return Cochain.from_function(se.b, 2, lambda tup: se.i(phi.value(tup)))


def reciprocity_from_cocycle(phi: Cochain, sigma: int) -> CohClass:
    """
    The class of Σ_τ φ(τ, σ) in H_T^0(G, C) = C^G / Nm(C).
    Raises:
        NotACocycle: If φ is not a 2-cocycle.
    """
    c = phi.module
    _check_fundamental_cochain(c, phi)
    total = c.underlying.zero()
    for tau in c.group.elements():
        total = total + phi.value((tau, sigma))
    return tate(c, 0).class_of(Cochain(c, 0, total.coords))


def abelianization_to_tate(group: FiniteGroup, sigma: int) -> CohClass:
    """σ ↦ the class of the chain (σ^-1) ⊗ 1 in H_T^-2(G, Z), matching σ - 1 in I_G / I_G^2."""
    z = integers(group)
    target = group.inv(sigma)
    chain = ChainElement.from_function(z, 1, lambda tup: [1 if tup[0] == target else 0])
    return tate(z, -2).class_of(chain)


def tate_composite(se: ShortExact) -> CohMap:
    """
    H_T^-2(G, Z) -> H_T^-1(G, I_G) -> H_T^0(G, C) through the augmentation
    sequence and the splitting-module sequence.
    """
    first = connecting(augmentation_sequence(se.a.group), -2)
    second = connecting(se, -1)
    return second @ first


def integer_cohomology_check(group: FiniteGroup) -> list:
    """
    H_T^0(G, Z) = Z/|G|, H^1(G, Z) = 0, and H^2(G, Z) ≅ H^1(G, Z/e) ≅ G^ab with e
    the exponent of G.
    Returns:
        list[Check]
    """
    z = integers(group)
    h0 = tate(z, 0).group
    h1 = cohomology(z, 1).group
    checks = [
        Check("H_T^0(G,Z) = Z/|G|", h0 == FgAbGroup.cyclic(group.order),
              {"got": h0.serialize()["factors"]}),
        Check("H^1(G,Z) = 0", h1.is_trivial(), {"got": h1.serialize()["factors"]}),
    ]
    exponent = group.exponent()
    abelianization = abelianization_oracle(group)
    if exponent > 1:
        delta = connecting(integer_sequence(group, exponent), 1, COHOMOLOGY)
        checks.append(Check("δ: H^1(G,Z/e) -> H^2(G,Z) is bijective", delta.is_isomorphism(),
                            {"exponent": exponent}))
        h2 = delta.target.group
    else:
        h2 = cohomology(z, 2).group
    checks.append(Check("|H^2(G,Z)| = |G^ab|", h2.order() == abelianization.order(),
                        {"h2": h2.serialize()["factors"],
                         "abelianization": abelianization.serialize()["factors"]}))
    h_1 = homology(z, 1).group
    checks.append(Check("H_1(G,Z) = G^ab", h_1 == abelianization,
                        {"got": h_1.serialize()["factors"]}))
    return checks


def shapiro_check(subgroup: SubgroupData, m: GModule, r: int) -> Check:
    """H^r(H, M) ≅ H^r(G, CoInd_H^G M) for an H-module M."""
    local = cohomology(m, r).group
    induced = cohomology(coinduced(subgroup, m), r).group
    return Check(f"Shapiro H^{r}", local == induced,
                 {"subgroup": local.serialize()["factors"], "coinduced": induced.serialize()["factors"]})


def carry_cocycle(n: int) -> Cochain:
    """φ(i, j) = 1 when i + j >= n: the generator of H^2(Z/n, Z) as a cochain."""
    z = integers(cyclic(n))
    return Cochain.from_function(z, 2, lambda tup: [1 if tup[0] + tup[1] >= n else 0])
