"""
Cup products at the bidegrees with closed cochain formulas.

The product of a ∈ H_T^r(G, M) and b ∈ H_T^s(G, N) is a class of
H_T^(r+s)(G, M ⊗ N) with M ⊗ N = tensor_z(M, N). Supported bidegrees:
(p, 0) for -2 <= p <= 2, (1, -1), and (1, -2), (2, -2) for N with
trivial action.
"""

import logging

from local_reciprocity.cohomology.coh_group import CohClass, tate
from local_reciprocity.cohomology.cochain import ChainElement, Cochain
from local_reciprocity.gmodule.constructions import tensor_element, tensor_z
from local_reciprocity.utils.errors import NonComposable, UnsupportedBidegree

_logger = logging.getLogger(__name__)

SUPPORTED_BIDEGREES = frozenset([(p, 0) for p in range(-2, 3)] + [(1, -1), (1, -2), (2, -2)])


def _cup_with_invariant(a, b0, m, n, product):
    """Entrywise a_γ ⊗ b0 for a table a and a G-fixed b0."""
    table = type(a)
    return table.from_function(
        product, a.degree, lambda tup: tensor_element(m, n, a.value(tup), b0))


def _cup_one_minus_one(a: Cochain, b: ChainElement, m, n, product) -> Cochain:
    """Σ_τ a(τ) ⊗ τ·b."""
    b0 = b.value(())
    total = product.underlying.zero()
    for tau in m.group.elements():
        total = total + tensor_element(m, n, a.value((tau,)), n.act(tau, b0))
    return Cochain(product, 0, total.coords)


def _cup_one_minus_two(a: Cochain, b: ChainElement, m, n, product) -> ChainElement:
    """Σ_γ a(γ^-1) ⊗ n_γ."""
    group = m.group
    total = product.underlying.zero()
    for gamma in group.elements():
        total = total + tensor_element(m, n, a.value((group.inv(gamma),)), b.value((gamma,)))
    return ChainElement(product, 0, total.coords)


def _cup_two_minus_two(a: Cochain, b: ChainElement, m, n, product) -> Cochain:
    """Σ_γ Σ_τ φ(τ, γ^-1) ⊗ n_γ."""
    group = m.group
    total = product.underlying.zero()
    for gamma in group.elements():
        n_gamma = b.value((gamma,))
        if n_gamma.is_zero():
            continue
        for tau in group.elements():
            total = total + tensor_element(m, n, a.value((tau, group.inv(gamma))), n_gamma)
    return Cochain(product, 0, total.coords)


def cup(a: CohClass, b: CohClass) -> CohClass:
    """
    a ⌣ b in H_T^(r+s)(G, M ⊗ N).
    Raises:
        UnsupportedBidegree: Outside the supported bidegrees, or when (1, -2) or (2, -2)
            is asked for a module N with non-trivial action.
        NonComposable: If the classes live over different groups.
    """
    r, s = a.degree, b.degree
    if a.cohgroup.kind != "tate" or b.cohgroup.kind != "tate":
        raise UnsupportedBidegree("Cup products are defined on Tate classes")
    if (r, s) not in SUPPORTED_BIDEGREES:
        raise UnsupportedBidegree(f"No closed cup product formula at bidegree ({r}, {s})")
    m, n = a.module, b.module
    if m.group != n.group:
        raise NonComposable("Cup product of classes over different groups")
    if s == -2 and not n.is_trivial_action():
        raise UnsupportedBidegree(f"Bidegree ({r}, {s}) needs a module with trivial action")
    product = tensor_z(m, n)
    target = tate(product, r + s)
    rep_a = a.representative()
    rep_b = b.representative()
    _logger.debug("Cup product at bidegree (%s, %s) into %s", r, s, product.name)
    if s == 0:
        table = _cup_with_invariant(rep_a, rep_b.value(()), m, n, product)
    elif (r, s) == (1, -1):
        table = _cup_one_minus_one(rep_a, rep_b, m, n, product)
    elif (r, s) == (1, -2):
        table = _cup_one_minus_two(rep_a, rep_b, m, n, product)
    else:
        table = _cup_two_minus_two(rep_a, rep_b, m, n, product)
    return target.class_of(table)
