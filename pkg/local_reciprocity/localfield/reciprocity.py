"""
Local reciprocity for unramified towers, checked through the cohomology engine.

Everything runs on the truncated multiplicative group L^× / (1 + p^N·O_L),
whose first coordinate is the valuation. The unit part has trivial Tate
cohomology, so H^2 and H_T^0 of the truncation agree with those of L^×.
"""

import logging
import random
from fractions import Fraction

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup, direct_sum
from local_reciprocity.abgroup.homology import cokernel
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.cohomology.coh_group import CohClass, cohomology, tate
from local_reciprocity.cohomology.cochain import Cochain
from local_reciprocity.cohomology.exact import connecting, induced_map, integer_sequence
from local_reciprocity.cohomology.herbrand import herbrand
from local_reciprocity.cohomology.maps import inflation
from local_reciprocity.cohomology.splitting import (
    abelianization_to_tate,
    reciprocity_from_cocycle,
    splitting_module,
    tate_composite,
)
from local_reciprocity.datatype.report import Check, Report
from local_reciprocity.gmodule.constructions import fixed_point_module, integers
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.localfield.finite_field import (
    build_finite_field,
    residue_additive_module,
    residue_unit_module,
)
from local_reciprocity.localfield.tower import (
    OElement,
    UnramifiedTower,
    build_tower,
    norm_lift,
    norm_tower,
)
from local_reciprocity.localfield.unit_group import truncated_mult_module, unit_group
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import DegreeOutOfRange, LiftFailed

_logger = logging.getLogger(__name__)

SWEEP_LIMIT = 200


def _factors(group: FgAbGroup) -> list:
    return [str(d) for d in group.invariant_factors]


def fundamental_cocycle(tower: UnramifiedTower) -> Cochain:
    """φ(σ^i, σ^j) = π if i + j >= f, else 1 (written additively: the valuation coordinate)."""
    mult = truncated_mult_module(tower)
    pi = mult.uniformizer()
    one = mult.module.underlying.zero()
    f = tower.f
    return Cochain.from_function(mult.module, 2, lambda tup: pi if tup[0] + tup[1] >= f else one)


def _valuation_map(module: GModule) -> GModuleHom:
    return GModuleHom(module, integers(module.group), [[1] + [0] * (module.ngens - 1)])


def inv_unramified(c: CohClass) -> int:
    """
    inv: H^2(G, L^×) -> Z/f. Push forward along ord, pull back through the
    connecting map of 0 -> Z --f--> Z -> Z/f -> 0 and evaluate at Frobenius.
    The module's first coordinate must be the valuation.
    Raises:
        DegreeOutOfRange: If c is not a degree-2 class.
    """
    if c.degree != 2:
        raise DegreeOutOfRange(f"inv is defined on H^2, got degree {c.degree}")
    module = c.module
    f = module.group.order
    if f == 1:
        return 0
    c = tate(module, 2).class_of(c.representative())
    ord_class = induced_map(_valuation_map(module), 2)(c)
    delta = connecting(integer_sequence(module.group, f), 1)
    character = delta.inverse()(ord_class).representative()
    frobenius = module.group.cyclic_generator()
    return character.value((frobenius,)).coords[0] % f


class NormGroup:
    """
    K^× / (1 + p^N) ≅ Z ⊕ (Z/p^N)^× with the image of the norm from
    L^× / (1 + p^N·O_L) and the quotient by it.
    """

    def __init__(self, tower: UnramifiedTower):
        self.tower = tower
        self.base = build_tower(tower.p, 1, tower.precision)
        self.base_units = unit_group(self.base)
        mult = truncated_mult_module(tower)
        self.group = direct_sum(FgAbGroup.free(1), self.base_units.group)
        columns = [[tower.f] + [0] * self.base_units.group.ngens]
        for g in mult.units.generators:
            columns.append([0] + list(self._unit_coordinates(norm_tower(g).coeffs[0])))
        self.norm_map = AbHom(mult.module.underlying, self.group,
                              IntMatrix.from_columns(columns, self.group.ngens))
        self.quotient, self.projection = cokernel(self.norm_map)
        _logger.info("K^x/Nm(L^x) for %r is %r", tower, self.quotient)

    def _unit_coordinates(self, u: int) -> tuple:
        return self.base_units.coordinates(self.base.scalar(u)).coords

    def coordinates(self, valuation: int, unit: int) -> ElementOf:
        """p^valuation · unit in K^×."""
        return self.group.element([valuation] + list(self._unit_coordinates(unit)))

    def class_of(self, valuation: int, unit: int) -> ElementOf:
        return self.projection(self.coordinates(valuation, unit))

    def is_norm(self, valuation: int, unit: int) -> bool:
        return self.class_of(valuation, unit).is_zero()

    def serialize(self) -> dict:
        return {"group": _factors(self.group), "quotient": _factors(self.quotient),
                "uniformizer_class": self.class_of(1, 1).serialize()}


def norm_subgroup(tower: UnramifiedTower) -> NormGroup:
    return NormGroup(tower)


def uniformizer_independence(tower: UnramifiedTower, unit: OElement) -> Check:
    """π·Nm(v) and π give the same class in H_T^0(G, L^×)."""
    mult = truncated_mult_module(tower)
    h0 = tate(mult.module, 0)
    other = mult.coordinates(1, norm_tower(unit))
    pi_class = h0.class_of(Cochain(mult.module, 0, mult.uniformizer().coords))
    other_class = h0.class_of(Cochain(mult.module, 0, other.coords))
    return Check("uniformizer class independent of the choice", pi_class == other_class,
                 {"unit": unit.serialize()})


def inflation_consistency(p: int, f_small: int, f_big: int, precision: int) -> Check:
    """
    For K ⊂ L ⊂ E unramified with [L:K] = f_small | f_big = [E:K], the class of
    L/K realized on (E^×)^{Gal(E/L)} inflates to a class with invariant
    f_big/f_small in Z/f_big.
    """
    if f_small < 1 or f_big % f_small:
        raise ValueError(f"{f_small} does not divide {f_big}")
    big = build_tower(p, f_big, precision)
    mult = truncated_mult_module(big)
    subgroup = mult.galois.subgroup(range(0, f_big, f_small))
    fixed_module, incl, _ = fixed_point_module(mult.module, subgroup)
    pi = incl.preimage(mult.uniformizer())
    one = fixed_module.underlying.zero()
    phi = Cochain.from_function(fixed_module, 2, lambda tup: pi if tup[0] + tup[1] >= f_small else one)
    inflated = inflation(mult.module, subgroup, 2)(tate(fixed_module, 2).class_of(phi))
    got = inv_unramified(inflated)
    expected = (f_big // f_small) % f_big
    return Check(f"inv(Inf u) for f={f_small} in f={f_big}", got == expected,
                 {"got": got, "expected": expected, "p": p, "N": precision})


def local_herbrand(tower: UnramifiedTower) -> Fraction:
    """h(L^×) over Gal(L/K) = Z/f."""
    return herbrand(truncated_mult_module(tower).module)


def norm_lift_sweep(tower: UnramifiedTower, seed: int = None, limit: int = SWEEP_LIMIT) -> Check:
    """Every unit of Z/p^N is a norm: all of them, or a seeded sample of `limit`."""
    units = tower.base_units()
    if len(units) > limit:
        seed = Config.instance().default_seed if seed is None else seed
        units = random.Random(seed).sample(units, limit)
    failures = []
    for u in units:
        try:
            v = norm_lift(u, tower)
        except LiftFailed:
            failures.append(u)
            continue
        if norm_tower(v) != tower.scalar(u):
            failures.append(u)
    return Check("norm_lift is surjective on units", not failures,
                 {"tested": len(units), "failures": failures[:10]})


def residue_field_checks(p: int, f: int) -> list:
    """
    Hilbert 90 and norm surjectivity for F_{p^f}/F_p, plus the vanishing of
    H^1 and H^2 of the additive group.
    Returns:
        list[Check]
    """
    field = build_finite_field(p, f)
    units = residue_unit_module(field)
    additive = residue_additive_module(field)
    label = f"F_{p}^{f}"
    checks = [
        Check(f"H^1 of {label} units = 0", cohomology(units, 1).is_trivial()),
        Check(f"H_T^0 of {label} units = 0", tate(units, 0).is_trivial()),
    ]
    for r in (1, 2):
        checks.append(Check(f"H^{r} of {label} additive = 0", cohomology(additive, r).is_trivial()))
    return checks


def reciprocity_check(tower: UnramifiedTower, seed: int = None) -> Report:
    """
    The unramified reciprocity pipeline: norm group, Tate groups of the
    truncation, the fundamental class and its invariant, the explicit
    reciprocity map and the Tate-theorem composite.
    """
    report = Report("reciprocity", tower.serialize())
    mult = truncated_mult_module(tower)
    module = mult.module
    f = tower.f
    group = mult.galois
    target = FgAbGroup.cyclic(f)

    norms = norm_subgroup(tower)
    uniformizer = norms.class_of(1, 1)
    report.results["units"] = _factors(mult.units.group)
    report.results["norm_group"] = norms.serialize()
    report.add(Check("K^x/Nm(L^x) = Z/f", norms.quotient == target,
                     {"quotient": _factors(norms.quotient)}))
    report.add(Check("[p] generates K^x/Nm(L^x)", uniformizer.order() == f,
                     {"order": uniformizer.order()}))
    report.add(Check("all units of K are norms",
                     all(norms.is_norm(0, g.coeffs[0]) for g in norms.base_units.generators),
                     {}))
    report.add(norm_lift_sweep(tower, seed))

    h0, h1, h2 = (tate(module, r) for r in (0, 1, 2))
    report.results["tate"] = {str(r): _factors(g.group) for r, g in ((0, h0), (1, h1), (2, h2))}
    report.add(Check("H^1(G, L^x) = 0", h1.is_trivial(), {}))
    report.add(Check("H_T^0(G, L^x) = Z/f", h0.group == target, {}))
    report.add(Check("H^2(G, L^x) = Z/f", h2.group == target, {}))
    report.add(Check("h(L^x) = f", local_herbrand(tower) == f, {}))

    phi = fundamental_cocycle(tower)
    fundamental = h2.class_of(phi)
    invariant = inv_unramified(fundamental)
    report.results["inv"] = invariant
    report.add(Check("fundamental class has order f", fundamental.order() == f, {}))
    report.add(Check("inv(u) = 1", invariant == 1 % f, {"inv": invariant}))

    explicit = [reciprocity_from_cocycle(phi, k) for k in group.elements()]
    powers = [h0.class_of(Cochain(module, 0, mult.coordinates(k, tower.one()).coords))
              for k in group.elements()]
    report.add(Check("Frobenius^k maps to [p^k]", explicit == powers, {}))

    cphi, se = splitting_module(module, phi)
    report.add(Check("C(φ) has trivial H^1 and H^2",
                     tate(cphi, 1).is_trivial() and tate(cphi, 2).is_trivial(), {}))
    composite = tate_composite(se)
    images = [composite(abelianization_to_tate(group, k)) for k in group.elements()]
    report.add(Check("Tate composite is an isomorphism", composite.is_isomorphism(), {}))
    report.add(Check("Tate composite matches the explicit map", images == explicit, {}))

    unit = mult.units.generators[0] if mult.units.generators else tower.one()
    report.add(uniformizer_independence(tower, unit))
    _logger.info("Reciprocity for %r: %s", tower, "passed" if report.passed else "failed")
    return report
