"""
Batch acceptance suites behind the `suite` command.

Each suite is a list of named tasks. A task takes a seeded random.Random
and returns a Report; the runner fans the tasks out on a thread pool and
merges the reports in task order, so the output does not depend on the
number of workers.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor

from local_reciprocity.abgroup.fg_ab_group import AbHom, FgAbGroup
from local_reciprocity.abgroup.homology import homology_at
from local_reciprocity.cohomology.coh_group import clear_cache, tate
from local_reciprocity.cohomology.cochain import Cochain
from local_reciprocity.cohomology.cup import cup
from local_reciprocity.cohomology.exact import (
    ShortExact,
    augmentation_sequence,
    connecting,
    integer_sequence,
    long_exact_sequence,
    multiplication_sequence,
)
from local_reciprocity.cohomology.herbrand import herbrand, herbrand_of_sequence
from local_reciprocity.cohomology.maps import corestriction, inflation_restriction, restriction
from local_reciprocity.cohomology.splitting import (
    abelianization_to_tate,
    integer_cohomology_check,
    reciprocity_from_cocycle,
    shapiro_check,
)
from local_reciprocity.datatype.report import Check, Report
from local_reciprocity.gmodule.constructions import (
    augmentation,
    augmentation_ideal,
    direct_sum_modules,
    group_ring,
    induced_coinduced_iso,
    integers,
    tensor_element,
    tensor_hom,
    tensor_z,
    trivial_module,
    twisted_cyclic,
)
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.group.finite_group import cyclic, klein, symmetric3
from local_reciprocity.localfield.reciprocity import (
    fundamental_cocycle,
    inflation_consistency,
    reciprocity_check,
    residue_field_checks,
)
from local_reciprocity.localfield.tower import build_tower
from local_reciprocity.localfield.unit_group import truncated_mult_module
from local_reciprocity.utils.config import Config

_logger = logging.getLogger(__name__)

RECIPROCITY_TOWERS = ((2, 2, 3), (3, 2, 3), (2, 3, 2), (5, 2, 2))
RESIDUE_FIELDS = [(p, f) for p in (2, 3, 5) for f in (2, 3, 4) if p**f <= 625]
MAX_TORSION = 12


def _subgroup_pairs() -> list:
    """(G, H) with H normal: Z/2 in Z/4, Z/3 in Z/6, A3 in S3."""
    return [
        cyclic(4).subgroup([0, 2]),
        cyclic(6).subgroup([0, 2, 4]),
        symmetric3().subgroup([0, 3, 4]),
    ]


def _sign_module() -> GModule:
    return GModule(symmetric3(), FgAbGroup((0,)),
                   [[[s]] for s in (1, -1, -1, 1, 1, -1)], name="sign")


def _twists(n: int, k: int) -> list:
    """Multipliers u with u^n = 1 mod k, or ±1 on Z."""
    if k == 0:
        return [1, -1] if n % 2 == 0 else [1]
    return [u for u in range(1, k) if pow(u, n, k) == 1 % k]


def random_cyclic_module(rng: random.Random, n: int, finite: bool = False, rank: int = 3) -> GModule:
    """A direct sum of at most rank twisted cyclic modules over Z/n, torsion at most MAX_TORSION."""
    group = cyclic(n)
    summands = []
    for _ in range(rng.randint(1, rank)):
        k = rng.randint(2, MAX_TORSION) if finite or rng.random() < 0.7 else 0
        summands.append(twisted_cyclic(group, k, rng.choice(_twists(n, k))))
    if len(summands) == 1:
        return summands[0]
    return direct_sum_modules(*summands)[0]


def _factors(group: FgAbGroup) -> list:
    return [str(d) for d in group.invariant_factors]


def integer_cohomology_task(rng: random.Random) -> Report:
    report = Report("integer cohomology")
    groups = [cyclic(n) for n in range(1, 9)] + [klein(), symmetric3()]
    for group in groups:
        for check in integer_cohomology_check(group):
            report.add(Check(f"{group.name}: {check.name}", check.passed, check.details))
    return report


def periodicity_task(rng: random.Random) -> Report:
    """tate(M, r) and tate(M, r + 2) agree over cyclic groups on seeded modules."""
    report = Report("periodicity")
    for index in range(20):
        n = rng.randint(2, 6)
        module = random_cyclic_module(rng, n)
        # degree 1 for |G| >= 5 is periodicity_top_task
        top = 1 if n <= 4 else 0
        mismatched = [r for r in range(-3, top + 1)
                      if tate(module, r).group != tate(module, r + 2).group]
        report.add(Check(f"#{index} {module.name} over Z/{n}", not mismatched,
                         {"mismatched": mismatched}))
    return report


def periodicity_top_task(rng: random.Random) -> Report:
    """H^1 against H^3 for one seeded module over each of Z/5 and Z/6."""
    report = Report("periodicity top")
    for n in (5, 6):
        module = random_cyclic_module(rng, n, rank=1)
        h1, h3 = tate(module, 1).group, tate(module, 3).group
        report.add(Check(f"{module.name} over Z/{n} H^1 = H^3", h1 == h3,
                         {"h1": str(h1), "h3": str(h3)}))
    return report


def shapiro_task(rng: random.Random) -> Report:
    report = Report("shapiro")
    for subgroup in _subgroup_pairs():
        h_group, _ = subgroup.as_group()
        label = f"{subgroup.parent.name}>{h_group.name}"
        for m in (integers(h_group), trivial_module(h_group, FgAbGroup((4,)), name="Z/4")):
            for r in (0, 1, 2):
                check = shapiro_check(subgroup, m, r)
                report.add(Check(f"{label} {m.name}: {check.name}", check.passed, check.details))
            iso = induced_coinduced_iso(subgroup, m)
            report.add(Check(f"{label} {m.name}: induced ≅ coinduced", iso.hom.is_isomorphism()))
    return report


def cor_res_task(rng: random.Random) -> Report:
    """Cor∘Res = [G:H] on H^1 and H^2."""
    report = Report("cor-res")
    for subgroup in _subgroup_pairs():
        group = subgroup.parent
        z8 = trivial_module(group, FgAbGroup((8,)), name="Z/8")
        m = direct_sum_modules(group_ring(group), z8)[0]
        for r in (1, 2):
            composite = corestriction(m, subgroup, r) @ restriction(m, subgroup, r)
            expected = AbHom.identity(composite.source.group).scale(subgroup.index)
            report.add(Check(f"{group.name}>{subgroup.order} {m.name} H^{r}",
                             composite.hom == expected, {"index": subgroup.index}))
    return report


def inflation_restriction_task(rng: random.Random) -> Report:
    report = Report("inflation-restriction")
    z4 = cyclic(4)
    cases = [
        (twisted_cyclic(z4, 8, 3), [0, 2]),
        (twisted_cyclic(z4, 0, -1), [0, 2]),
        (group_ring(z4), [0, 2]),
        (_sign_module(), [0, 3, 4]),
        (integers(symmetric3()), [0, 3, 4]),
    ]
    for module, elements in cases:
        inf, res = inflation_restriction(module, module.group.subgroup(elements))
        exact = (inf.is_injective() and (res.hom @ inf.hom).is_zero()
                 and homology_at(inf.hom, res.hom).group.is_trivial())
        report.add(Check(f"{module.group.name} {module.name}", exact,
                         {"inflation_source": _factors(inf.source.group)}))
    return report


def _random_sequences(rng: random.Random, count: int) -> list:
    """Seeded short exact sequences over Z/4 and S3."""
    z4, s3 = cyclic(4), symmetric3()
    sequences = []
    for _ in range(count):
        kind = rng.randrange(4)
        k = rng.randint(2, 6)
        if kind == 0:
            sequences.append(multiplication_sequence(twisted_cyclic(z4, 0, rng.choice((1, -1))), k))
        elif kind == 1:
            sequences.append(augmentation_sequence(z4))
        elif kind == 2:
            sequences.append(integer_sequence(s3, k))
        else:
            sequences.append(multiplication_sequence(_sign_module(), k))
    return sequences


def long_exactness_task(rng: random.Random) -> Report:
    report = Report("long exactness")
    for index, se in enumerate(_random_sequences(rng, 10)):
        les = long_exact_sequence(se, -2, 2)
        failed = [check.name for check in les.checks if not check.passed]
        report.add(Check(f"#{index} {se!r}", not failed, {"failed_nodes": failed}))
    return report


def herbrand_task(rng: random.Random) -> Report:
    report = Report("herbrand")
    for index in range(20):
        n = rng.choice((4, 6))
        module = random_cyclic_module(rng, n, finite=True, rank=2)
        h = herbrand(module)
        report.add(Check(f"h(finite) = 1 #{index} {module.name}", h == 1, {"h": str(h)}))
    for index in range(10):
        n = rng.choice((4, 6))
        u = rng.choice((1, -1))
        se = multiplication_sequence(twisted_cyclic(cyclic(n), 0, u), rng.randint(2, 6))
        h_a, h_b, h_c = herbrand_of_sequence(se)
        report.add(Check(f"h(B) = h(A)h(C) #{index}", h_b == h_a * h_c,
                         {"h": [str(h_a), str(h_b), str(h_c)]}))
    for n in range(1, 7):
        h = herbrand(integers(cyclic(n)))
        report.add(Check(f"h(Z) over Z/{n}", h == n, {"h": str(h)}))
    return report


def _random_class(rng: random.Random, cohgroup):
    total = cohgroup.zero()
    for generator in cohgroup.generators():
        total = total + generator * rng.randint(0, 7)
    return total


def cup_task(rng: random.Random) -> Report:
    """(0, 0) against invariants, and the connecting-map identity at (1, -2)."""
    report = Report("cup")
    for index in range(10):
        n = rng.choice((2, 3, 4))
        m = random_cyclic_module(rng, n, rank=2)
        other = random_cyclic_module(rng, n, rank=1)
        a = _random_class(rng, tate(m, 0))
        b = _random_class(rng, tate(other, 0))
        product = tensor_z(m, other)
        x = tensor_element(m, other, a.representative().value(()), b.representative().value(()))
        expected = tate(product, 0).class_of(Cochain(product, 0, x.coords))
        report.add(Check(f"(0,0) #{index} {m.name} ⊗ {other.name}", cup(a, b) == expected))
    group = cyclic(4)
    _, incl = augmentation_ideal(group)
    for m in (twisted_cyclic(group, 0, -1), twisted_cyclic(group, 8, 3)):
        identity = GModuleHom.identity(m)
        tensored = ShortExact(tensor_hom(identity, incl), tensor_hom(identity, augmentation(group)))
        delta = connecting(augmentation_sequence(group), -2)
        for a in tate(m, 1).generators():
            for sigma in (1, 3):
                s = abelianization_to_tate(group, sigma)
                holds = cup(a, delta(s)) == -connecting(tensored, -1)(cup(a, s))
                report.add(Check(f"δ-identity {m.name} σ={sigma}", holds))
    return report


def residue_task(rng: random.Random) -> Report:
    report = Report("residue fields")
    for p, f in RESIDUE_FIELDS:
        report.extend(residue_field_checks(p, f))
    return report


def _tower_task(p: int, f: int, n: int):
    def task(rng: random.Random) -> Report:
        tower = build_tower(p, f, n)
        report = reciprocity_check(tower, seed=rng.randrange(2**31))
        mult = truncated_mult_module(tower)
        phi = fundamental_cocycle(tower)
        fundamental = tate(mult.module, 2).class_of(phi)
        agrees = all(cup(fundamental, abelianization_to_tate(mult.galois, k))
                     == reciprocity_from_cocycle(phi, k) for k in mult.galois.elements())
        report.add(Check("u ⌣ [σ] matches the explicit map", agrees))
        return report

    task.__name__ = f"reciprocity {p},{f},{n}"
    return task


def inflation_task(rng: random.Random) -> Report:
    report = Report("inflation of fundamental classes")
    report.add(inflation_consistency(2, 1, 2, 2))
    report.add(inflation_consistency(2, 2, 4, 2))
    return report


def _named(*tasks) -> list:
    return [(task.__name__.replace("_task", "").replace("_", " "), task) for task in tasks]


SUITES = {
    "identities": _named(integer_cohomology_task, periodicity_task, periodicity_top_task,
                         shapiro_task, cor_res_task, inflation_restriction_task,
                         long_exactness_task, herbrand_task, cup_task),
    "hilbert90": _named(residue_task),
    "tate-theorem": _named(*(_tower_task(*t) for t in RECIPROCITY_TOWERS), inflation_task),
}


def run_suite(name: str, seed: int = None, workers: int = 1) -> Report:
    """
    Raises:
        KeyError: If there is no suite called name.
    """
    tasks = SUITES[name]
    seed = Config.instance().default_seed if seed is None else seed
    report = Report("suite", {"name": name, "seed": seed})
    _logger.info("Suite %s started with %s task(s) on %s worker(s)", name, len(tasks), workers)
    # one generator per task, so results do not depend on scheduling
    rngs = [random.Random(f"{seed}:{label}") for label, _ in tasks]
    try:
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            futures = [pool.submit(task, rng) for (_, task), rng in zip(tasks, rngs)]
            for (label, _), future in zip(tasks, futures):
                report.merge(future.result(), prefix=label)
    finally:
        clear_cache()
    _logger.info("Suite %s finished: %s", name, "passed" if report.passed else "failed")
    return report
