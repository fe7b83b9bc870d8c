"""
Standard G-module constructions.

Coset conventions: g_1, ..., g_m are the left coset representatives of
H (G = ⊔ g_j·H) and s_j = g_j^-1 are the matching right representatives
(G = ⊔ H·s_j). Coinduced modules store f(s_j) in block j, induced
modules store g_j ⊗ m in block j, so the comparison map between them is
the identity on coordinates.
"""

import itertools
import logging
import math

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup, block_hom, direct_sum
from local_reciprocity.abgroup.homology import cokernel, kernel
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.group.finite_group import FiniteGroup, SubgroupData
from local_reciprocity.utils.errors import InvalidModule

_logger = logging.getLogger(__name__)


def trivial_module(group: FiniteGroup, underlying: FgAbGroup, name: str = None) -> GModule:
    identity = AbHom.identity(underlying)
    return GModule(group, underlying, [identity] * group.order,
                   name=name or f"trivial {underlying!r}")


def integers(group: FiniteGroup) -> GModule:
    """Z with trivial action."""
    return trivial_module(group, FgAbGroup((0,)), name="Z")


def _permutation(n: int, image) -> IntMatrix:
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[image(j)][j] = 1
    return IntMatrix(rows, n)


def group_ring(group: FiniteGroup) -> GModule:
    """Z[G] with basis e_h and g·e_h = e_gh."""
    n = group.order
    action = [_permutation(n, lambda h, g=g: group.op(g, h)) for g in group.elements()]
    return GModule(group, FgAbGroup.free(n), action, name="Z[G]")


def augmentation(group: FiniteGroup) -> GModuleHom:
    """ε: Z[G] -> Z summing coefficients."""
    return GModuleHom(group_ring(group), integers(group), [[1] * group.order])


def norm_inclusion(group: FiniteGroup) -> GModuleHom:
    """μ: Z -> Z[G], 1 ↦ Σ_g e_g."""
    return GModuleHom(integers(group), group_ring(group), [[1] for _ in group.elements()])


def _non_identity(group: FiniteGroup) -> list:
    return [h for h in group.elements() if h != group.identity]


def augmentation_ideal(group: FiniteGroup) -> tuple:
    """
    I_G with basis b_h = h - 1 (h ≠ 1), where g·b_h = b_gh - b_g.
    Returns:
        tuple[GModule, GModuleHom]: I_G and its inclusion into Z[G].
    """
    basis = _non_identity(group)
    position = {h: i for i, h in enumerate(basis)}
    rank = len(basis)
    action = []
    for g in group.elements():
        rows = [[0] * rank for _ in range(rank)]
        for i, h in enumerate(basis):
            gh = group.op(g, h)
            if gh != group.identity:
                rows[position[gh]][i] += 1
            if g != group.identity:
                rows[position[g]][i] -= 1
        action.append(IntMatrix(rows, rank))
    ig = GModule(group, FgAbGroup.free(rank), action, name="I_G")
    ring = group_ring(group)
    columns = []
    for h in basis:
        column = [0] * group.order
        column[h] += 1
        column[group.identity] -= 1
        columns.append(column)
    incl = GModuleHom(ig, ring, IntMatrix.from_columns(columns, group.order))
    return ig, incl


def j_module(group: FiniteGroup) -> tuple:
    """
    J_G = Z[G] / Z·N with basis [h] (h ≠ 1) and [1] = -Σ_{h≠1} [h].
    Returns:
        tuple[GModule, GModuleHom]: J_G and the projection from Z[G].
    """
    basis = _non_identity(group)
    position = {h: i for i, h in enumerate(basis)}
    rank = len(basis)

    def column_of(x: int) -> list:
        column = [0] * rank
        if x == group.identity:
            return [-1] * rank
        column[position[x]] = 1
        return column

    action = [IntMatrix.from_columns([column_of(group.op(g, h)) for h in basis], rank)
              for g in group.elements()]
    jg = GModule(group, FgAbGroup.free(rank), action, name="J_G")
    proj = GModuleHom(group_ring(group), jg,
                      IntMatrix.from_columns([column_of(x) for x in group.elements()], rank))
    return jg, proj


def direct_sum_modules(*modules) -> tuple:
    """
    M_1 ⊕ ... ⊕ M_k.
    Returns:
        tuple[GModule, list[GModuleHom], list[GModuleHom]]: the sum, inclusions, projections.
    """
    group = modules[0].group
    if any(m.group != group for m in modules):
        raise InvalidModule("Direct sum of modules over different groups")
    parts = [m.underlying for m in modules]
    underlying = direct_sum(*parts)
    action = []
    for g in group.elements():
        action.append(IntMatrix.block_diagonal([m.matrix(g) for m in modules]))
    total = GModule(group, underlying, action, name=" + ".join(m.name for m in modules))
    inclusions, projections = [], []
    for k, m in enumerate(modules):
        column_blocks = [[AbHom.identity(m.underlying) if i == k else None] for i in range(len(modules))]
        inclusions.append(GModuleHom(m, total, block_hom([m.underlying], parts, column_blocks)))
        row_blocks = [[AbHom.identity(m.underlying) if j == k else None for j in range(len(modules))]]
        projections.append(GModuleHom(total, m, block_hom(parts, [m.underlying], row_blocks)))
    return total, inclusions, projections


def twisted_cyclic(group: FiniteGroup, k: int, u: int, name: str = None) -> GModule:
    """
    Z/k (Z when k = 0) with the cyclic generator acting as multiplication by u.
    Raises:
        InvalidModule: If the group is not cyclic or u^|G| is not 1 mod k.
    """
    generator = group.cyclic_generator()
    if generator is None:
        raise InvalidModule(f"{group!r} is not cyclic")
    underlying = FgAbGroup((k,))
    action = [None] * group.order
    x = group.identity
    for i in range(group.order):
        scalar = pow(u, i, k) if k else u**i
        action[x] = IntMatrix([[scalar]], 1)
        x = group.op(x, generator)
    if name is None:
        name = f"Z/{k} twisted by {u}" if k else f"Z twisted by {u}"
    return GModule(group, underlying, action, name=name)


def _tensor_pairs(a: FgAbGroup, b: FgAbGroup) -> tuple:
    pairs, orders = [], []
    for i, j in itertools.product(range(a.ngens), range(b.ngens)):
        d = math.gcd(a.orders[i], b.orders[j])
        if d != 1:
            pairs.append((i, j))
            orders.append(d)
    return pairs, FgAbGroup(orders)


def _tensor_matrix(f: IntMatrix, g: IntMatrix, source_pairs, target_pairs) -> IntMatrix:
    rows = [[f[k, i] * g[l, j] for i, j in source_pairs] for k, l in target_pairs]
    return IntMatrix(rows, len(source_pairs))


def tensor_z(m: GModule, n: GModule) -> GModule:
    """M ⊗_Z N with the diagonal action, on generator pairs e_i ⊗ e_j of order gcd."""
    if m.group != n.group:
        raise InvalidModule("Tensor product of modules over different groups")
    pairs, underlying = _tensor_pairs(m.underlying, n.underlying)
    action = [_tensor_matrix(m.matrix(g), n.matrix(g), pairs, pairs) for g in m.group.elements()]
    return GModule(m.group, underlying, action, name=f"{m.name} ⊗ {n.name}")


def tensor_element(m: GModule, n: GModule, x: ElementOf, y: ElementOf) -> ElementOf:
    """x ⊗ y in the underlying group of tensor_z(m, n)."""
    pairs, underlying = _tensor_pairs(m.underlying, n.underlying)
    return underlying.element([x.coords[i] * y.coords[j] for i, j in pairs])


def tensor_hom(f: GModuleHom, h: GModuleHom) -> GModuleHom:
    """f ⊗ h between the corresponding tensor products."""
    source = tensor_z(f.source, h.source)
    target = tensor_z(f.target, h.target)
    source_pairs, _ = _tensor_pairs(f.source.underlying, h.source.underlying)
    target_pairs, _ = _tensor_pairs(f.target.underlying, h.target.underlying)
    return GModuleHom(source, target,
                      _tensor_matrix(f.hom.matrix, h.hom.matrix, source_pairs, target_pairs))


def _check_subgroup_module(subgroup: SubgroupData, m: GModule):
    h_group, _ = subgroup.as_group()
    if m.group != h_group:
        raise InvalidModule("Module is not defined over the given subgroup")


def _coset_blocks(subgroup: SubgroupData, m: GModule, blocks) -> list:
    """
    Action matrices on M^[G:H] from blocks(g), which yields (row block, column block, h)
    with the block equal to the action of h in H.
    """
    position = {x: i for i, x in enumerate(subgroup.elements)}
    r = m.ngens
    size = subgroup.index * r
    action = []
    for g in subgroup.parent.elements():
        rows = [[0] * size for _ in range(size)]
        for j, k, h in blocks(g):
            block = m.matrix(position[h])
            for a in range(r):
                rows[j * r + a][k * r:(k + 1) * r] = block.row(a)
        action.append(IntMatrix(rows, size))
    return action


def coinduced(subgroup: SubgroupData, m: GModule) -> GModule:
    """
    Hom_{Z[H]}(Z[G], M) stored as (f(s_1), ..., f(s_m)) with (g·f)(x) = f(x·g).
    Writing s_j·g = h·s_k gives (g·f)(s_j) = h·f(s_k).
    """
    _check_subgroup_module(subgroup, m)
    parent = subgroup.parent
    reps = subgroup.coset_representatives

    def blocks(g):
        for j, g_j in enumerate(reps):
            h, k = subgroup.right_coset_decomposition(parent.op(parent.inv(g_j), g))
            yield j, k, h

    underlying = direct_sum(*([m.underlying] * subgroup.index))
    return GModule(parent, underlying, _coset_blocks(subgroup, m, blocks),
                   name=f"CoInd({m.name})")


def induced(subgroup: SubgroupData, m: GModule) -> GModule:
    """Z[G] ⊗_{Z[H]} M on g_j ⊗ M, where g·g_k = g_j·h gives g·(g_k ⊗ x) = g_j ⊗ h·x."""
    _check_subgroup_module(subgroup, m)
    parent = subgroup.parent
    reps = subgroup.coset_representatives

    def blocks(g):
        for k, g_k in enumerate(reps):
            x = parent.op(g, g_k)
            j = subgroup.left_coset_index(x)
            yield j, k, parent.op(parent.inv(reps[j]), x)

    underlying = direct_sum(*([m.underlying] * subgroup.index))
    return GModule(parent, underlying, _coset_blocks(subgroup, m, blocks),
                   name=f"Ind({m.name})")


def induced_coinduced_iso(subgroup: SubgroupData, m: GModule) -> GModuleHom:
    """
    φ ↦ Σ_j g_j ⊗ φ(g_j^-1) from the coinduced to the induced module.
    Raises:
        InvalidModule: If the map fails equivariance or invertibility.
    """
    source = coinduced(subgroup, m)
    target = induced(subgroup, m)
    iso = GModuleHom(source, target, IntMatrix.identity(source.ngens))
    if not iso.hom.is_isomorphism():
        raise InvalidModule("Comparison map is not invertible")
    return iso


def restrict_module(m: GModule, subgroup: SubgroupData) -> GModule:
    """M viewed as a module over H, re-indexed by subgroup.as_group()."""
    if subgroup.parent != m.group:
        raise InvalidModule("Subgroup does not belong to the module's group")
    h_group, embedding = subgroup.as_group()
    return GModule(h_group, m.underlying, [m.action[x] for x in embedding],
                   name=f"Res({m.name})")


def _stacked_differences(m: GModule, elements) -> AbHom:
    elements = [g for g in elements if g != m.group.identity]
    target = direct_sum(*([m.underlying] * len(elements)))
    identity = AbHom.identity(m.underlying)
    blocks = [[m.action[g] - identity] for g in elements]
    if not elements:
        return AbHom.zero(m.underlying, target)
    return block_hom([m.underlying], [m.underlying] * len(elements), blocks)


def fixed_points(m: GModule, elements=None) -> tuple:
    """
    M^G, or the fixed points of the given elements.
    Returns:
        tuple[FgAbGroup, AbHom]: the subgroup and its inclusion.
    """
    elements = m.group.elements() if elements is None else elements
    return kernel(_stacked_differences(m, elements))


def coinvariants(m: GModule) -> tuple:
    """
    M_G = M / I_G·M.
    Returns:
        tuple[FgAbGroup, AbHom]: the quotient and the projection.
    """
    elements = [g for g in m.group.elements() if g != m.group.identity]
    if not elements:
        return cokernel(AbHom.zero(FgAbGroup(), m.underlying))
    identity = AbHom.identity(m.underlying)
    blocks = [[m.action[g] - identity for g in elements]]
    return cokernel(block_hom([m.underlying] * len(elements), [m.underlying], blocks))


def norm_map(m: GModule) -> AbHom:
    """Nm_G = Σ_g action[g]."""
    result = AbHom.zero(m.underlying, m.underlying)
    for a in m.action:
        result = result + a
    return result


def induced_norm(m: GModule) -> AbHom:
    """The map M_G -> M^G induced by Nm_G."""
    quotient, proj = coinvariants(m)
    fixed, incl = fixed_points(m)
    nm = norm_map(m)
    images = []
    for e in quotient.generators():
        x = proj.preimage(e)
        images.append(incl.preimage(nm(x)))
    return AbHom.from_images(quotient, fixed, images)


def fixed_point_module(m: GModule, subgroup: SubgroupData) -> tuple:
    """
    M^H as a module over G/H for a normal subgroup H.
    Returns:
        tuple[GModule, AbHom, tuple[int]]: the module, the inclusion M^H -> M and
        the projection G -> G/H.
    Raises:
        NotNormal: If H is not normal.
    """
    if subgroup.parent != m.group:
        raise InvalidModule("Subgroup does not belong to the module's group")
    quotient, projection = subgroup.quotient()
    fixed, incl = fixed_points(m, subgroup.elements)
    action = []
    for g in subgroup.coset_representatives:
        images = [incl.preimage(m.act(g, incl(e))) for e in fixed.generators()]
        action.append(AbHom.from_images(fixed, fixed, images))
    module = GModule(quotient, fixed, action, name=f"{m.name}^H")
    return module, incl, projection

