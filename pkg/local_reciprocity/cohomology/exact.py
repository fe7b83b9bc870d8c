"""
Short exact sequences of G-modules and the maps they induce.

Connecting homomorphisms are computed on representatives: lift through
B -> C entry by entry, apply the differential of B, pull back through
A -> B entry by entry and classify.
"""

import logging

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup
from local_reciprocity.abgroup.homology import homology_at
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.cohomology.coh_group import (
    COHOMOLOGY,
    HOMOLOGY,
    TATE,
    CohMap,
    group_of,
    tate_complex,
)
from local_reciprocity.datatype.report import Check
from local_reciprocity.gmodule.constructions import (
    augmentation,
    augmentation_ideal,
    integers,
    j_module,
    norm_inclusion,
    tensor_hom,
)
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.utils.errors import (
    DegreeOutOfRange,
    InvalidModule,
    LiftFailed,
    NotAComplex,
    NotExact,
)

_logger = logging.getLogger(__name__)

UP = "up"
DOWN = "down"


class ShortExact:
    """0 -> A --i--> B --p--> C -> 0, verified on construction."""

    def __init__(self, i: GModuleHom, p: GModuleHom):
        """
        Raises:
            NotExact: If i is not injective, p is not surjective or im(i) != ker(p).
        """
        if i.target != p.source:
            raise NotExact("The two maps do not share the middle module")
        if not i.hom.is_injective():
            raise NotExact("The first map is not injective")
        if not p.hom.is_surjective():
            raise NotExact("The second map is not surjective")
        try:
            middle = homology_at(i.hom, p.hom)
        except NotAComplex as ex:
            raise NotExact("The composite of the two maps is not zero") from ex
        if not middle.group.is_trivial():
            raise NotExact(f"Image and kernel differ in the middle, quotient {middle.group!r}")
        self.i = i
        self.p = p
        self.a = i.source
        self.b = i.target
        self.c = p.target

    @property
    def group(self):
        return self.a.group

    def __repr__(self) -> str:
        return f"ShortExact(0 -> {self.a.name} -> {self.b.name} -> {self.c.name} -> 0)"


def tate_degree(kind: str, r: int) -> int:
    """Position in the complete complex of the term computing kind^r."""
    return -r - 1 if kind == HOMOLOGY else r


def _table_count(module: GModule, t: int) -> int:
    k = t if t >= 0 else -t - 1
    return module.group.order**k


def termwise(f: GModuleHom, r: int) -> AbHom:
    """The map T^r(A) -> T^r(B) applying f to every entry of a table."""
    count = _table_count(f.source, r)
    source = tate_complex(f.source).term(r)
    target = tate_complex(f.target).term(r)
    return AbHom(source, target, IntMatrix.block_diagonal([f.hom.matrix] * count))


def _blockwise_preimage(f: GModuleHom, vector: ElementOf, count: int, source_term: FgAbGroup) -> ElementOf:
    s = f.target.ngens
    coords = []
    for k in range(count):
        block = f.target.element(vector.coords[k * s:(k + 1) * s])
        y = f.hom.preimage(block)
        if y is None:
            raise LiftFailed(f"Entry {k} does not lift through {f!r}")
        coords.extend(y.coords)
    return source_term.element(coords)


def connecting(se: ShortExact, r: int, kind: str = TATE) -> CohMap:
    """
    δ: kind^r(C) -> kind^(r+1)(A), or H_r(C) -> H_(r-1)(A) for homology.
    Raises:
        DegreeOutOfRange: For homology in degree 0, which has no connecting map.
    """
    if kind == HOMOLOGY:
        if r < 1:
            raise DegreeOutOfRange("Homology has no connecting map out of degree 0")
        target_degree = r - 1
    else:
        target_degree = r + 1
    source = group_of(kind, se.c, r)
    target = group_of(kind, se.a, target_degree)
    t = tate_degree(kind, r)
    complex_b = tate_complex(se.b)
    d_b = complex_b.differential(t)
    lift_count = _table_count(se.c, t)
    pull_count = _table_count(se.a, t + 1)
    term_b = complex_b.term(t)
    term_a = tate_complex(se.a).term(t + 1)
    _logger.debug("Connecting map %s^%s on %s", kind, r, se)

    def fn(rep):
        lifted = _blockwise_preimage(se.p, rep.vector, lift_count, term_b)
        return _blockwise_preimage(se.i, d_b(lifted), pull_count, term_a)

    return CohMap.from_cochain_function(source, target, fn)


def induced_map(f: GModuleHom, r: int, kind: str = TATE) -> CohMap:
    """f_*: kind^r(A) -> kind^r(B)."""
    source = group_of(kind, f.source, r)
    target = group_of(kind, f.target, r)
    entries = termwise(f, tate_degree(kind, r))
    return CohMap.from_cochain_function(source, target, lambda rep: entries(rep.vector))


class LongExactSequence:
    """The maps of the long exact sequence of a ShortExact and a verdict per interior node."""

    def __init__(self, se: ShortExact, r_min: int, r_max: int, kind: str = TATE):
        self.se = se
        self.kind = kind
        self.maps = []
        for r in range(r_min, r_max + 1):
            self.maps.append(induced_map(se.i, r, kind))
            self.maps.append(induced_map(se.p, r, kind))
            self.maps.append(connecting(se, r, kind))
        self.checks = []
        for f, g in zip(self.maps, self.maps[1:]):
            composite_zero = (g.hom @ f.hom).is_zero()
            exact = composite_zero and homology_at(f.hom, g.hom).group.is_trivial()
            self.checks.append(Check(f"exact at {g.source!r}", exact,
                                     {"composite_zero": composite_zero}))

    def is_exact(self) -> bool:
        return all(check.passed for check in self.checks)


def long_exact_sequence(se: ShortExact, r_min: int, r_max: int, kind: str = TATE) -> LongExactSequence:
    """
    kind^r(A) -> kind^r(B) -> kind^r(C) -> kind^(r+1)(A) for r_min <= r <= r_max.
    Only Tate and ordinary cohomology are spliced this way.
    """
    if kind not in (TATE, COHOMOLOGY):
        raise ValueError(f"Long exact sequences are built for tate or cohomology, not {kind!r}")
    return LongExactSequence(se, r_min, r_max, kind)


def _unit_factor(module: GModule, tensor: GModule) -> tuple:
    """The identity maps Z ⊗ M -> M and M -> Z ⊗ M when both share a presentation."""
    if not tensor.underlying.same_presentation(module.underlying):
        return None, None
    identity = AbHom.identity(module.underlying)
    return GModuleHom(tensor, module, identity), GModuleHom(module, tensor, identity)


def dimension_shift(m: GModule, direction: str) -> tuple:
    """
    up:   0 -> I_G ⊗ M -> Z[G] ⊗ M -> M -> 0, so H_T^r(M) ≅ H_T^(r+1)(I_G ⊗ M).
    down: 0 -> M -> Z[G] ⊗ M -> J_G ⊗ M -> 0, so H_T^r(M) ≅ H_T^(r-1)(J_G ⊗ M).

    When M has cyclic factors of order 1 the outer term stays Z ⊗ M.
    Returns:
        tuple[GModule, ShortExact]: the shifted module and the sequence.
    """
    group = m.group
    identity = GModuleHom.identity(m)
    if direction == UP:
        _, incl = augmentation_ideal(group)
        i = tensor_hom(incl, identity)
        p = tensor_hom(augmentation(group), identity)
        collapse, _ = _unit_factor(m, p.target)
        if collapse is not None:
            p = collapse @ p
        return i.source, ShortExact(i, p)
    if direction == DOWN:
        _, proj = j_module(group)
        i = tensor_hom(norm_inclusion(group), identity)
        _, expand = _unit_factor(m, i.source)
        if expand is not None:
            i = i @ expand
        p = tensor_hom(proj, identity)
        return p.target, ShortExact(i, p)
    raise ValueError(f"Unknown shift direction {direction!r}")


def multiplication_sequence(m: GModule, k: int) -> ShortExact:
    """
    0 -> M --k--> M -> M/kM -> 0 for a module whose underlying group is free.
    Raises:
        InvalidModule: If the underlying group has torsion or k < 2.
    """
    if k < 2:
        raise InvalidModule(f"Multiplier must be at least 2, got {k}")
    if not all(d == 0 for d in m.underlying.orders):
        raise InvalidModule("Multiplication sequences need a free underlying group")
    quotient = FgAbGroup((k,) * m.ngens)
    action = [m.matrix(g) for g in m.group.elements()]
    reduced = GModule(m.group, quotient, action, name=f"{m.name}/{k}")
    i = GModuleHom(m, m, AbHom.identity(m.underlying).scale(k))
    p = GModuleHom(m, reduced, IntMatrix.identity(m.ngens))
    return ShortExact(i, p)


def integer_sequence(group, k: int) -> ShortExact:
    """0 -> Z --k--> Z -> Z/k -> 0 with trivial action."""
    return multiplication_sequence(integers(group), k)


def augmentation_sequence(group) -> ShortExact:
    """0 -> I_G -> Z[G] -> Z -> 0."""
    _, incl = augmentation_ideal(group)
    return ShortExact(incl, augmentation(group))
