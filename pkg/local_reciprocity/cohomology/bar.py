"""
Bar resolutions and the (co)chain complexes they induce.

Basis tuples (g_1, ..., g_r) of G^r are enumerated lexicographically,
so (g_1, ..., g_r) sits at index Σ g_i·n^(r-i). The inhomogeneous
resolution C_r(G) has Z-basis g·(g_1, ..., g_r), stored at index
g·n^r + tuple index; the homogeneous one has Z-basis G^(r+1) in the
same order. On C_r ⊗_{Z[G]} M we use (g·γ) ⊗ m = γ ⊗ g^-1·m.
"""

import itertools
import logging
from collections import Counter

from local_reciprocity.abgroup.fg_ab_group import AbHom, FgAbGroup, direct_sum
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.group.finite_group import FiniteGroup
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import DegreeOutOfRange, SizeCapExceeded

_logger = logging.getLogger(__name__)


def check_size(group: FiniteGroup, r: int):
    """
    Raises:
        DegreeOutOfRange: If r exceeds the supported bar degree.
        SizeCapExceeded: If |G|^r exceeds the configured cap.
    """
    config = Config.instance()
    if r > config.max_bar_degree:
        raise DegreeOutOfRange(f"Bar degree {r} exceeds {config.max_bar_degree}")
    if group.order**r > config.size_cap:
        raise SizeCapExceeded(
            f"|G|^{r} = {group.order**r} exceeds the size cap of {config.size_cap} entries"
        )


def tuples(group: FiniteGroup, r: int):
    return itertools.product(range(group.order), repeat=r)


def tuple_index(n: int, tup) -> int:
    index = 0
    for g in tup:
        index = index * n + g
    return index


def bar_terms(group: FiniteGroup, tup) -> list:
    """
    d_r(g_1, ..., g_r) as (sign, left factor, face) triples:
    g_1·(g_2, ..., g_r) + Σ_i (-1)^i (..., g_i·g_(i+1), ...) + (-1)^r (g_1, ..., g_(r-1)).
    """
    r = len(tup)
    terms = [(1, tup[0], tup[1:])]
    for i in range(1, r):
        merged = tup[:i - 1] + (group.op(tup[i - 1], tup[i]),) + tup[i + 1:]
        terms.append(((-1) ** i, group.identity, merged))
    terms.append(((-1) ** r, group.identity, tup[:-1]))
    return terms


def _sparse_bar(group: FiniteGroup, element: Counter) -> Counter:
    """Apply d to a sparse Z-combination of (g, tuple) basis elements."""
    out = Counter()
    for (g, tup), c in element.items():
        if c == 0 or not tup:
            continue
        for sign, left, face in bar_terms(group, tup):
            out[(group.op(g, left), face)] += sign * c
    return Counter({k: v for k, v in out.items() if v})


def bar_boundary(group: FiniteGroup, r: int) -> IntMatrix:
    """d_r: C_r(G) -> C_(r-1)(G) on Z-bases, for 1 <= r <= 4."""
    check_size(group, r)
    n = group.order
    rows = [[0] * n ** (r + 1) for _ in range(n**r)]
    for g in group.elements():
        for tup in tuples(group, r):
            column = g * n**r + tuple_index(n, tup)
            for sign, left, face in bar_terms(group, tup):
                rows[group.op(g, left) * n ** (r - 1) + tuple_index(n, face)][column] += sign
    return IntMatrix(rows, n ** (r + 1))


def check_bar_complex(group: FiniteGroup, r: int) -> bool:
    """d_(r-1)∘d_r = 0 on every basis element of C_r(G), r >= 2."""
    check_size(group, r)
    for g in group.elements():
        for tup in tuples(group, r):
            if _sparse_bar(group, _sparse_bar(group, Counter({(g, tup): 1}))):
                return False
    return True


def homogeneous_iso(group: FiniteGroup, r: int) -> tuple:
    """
    Φ_r on basis elements and its inverse.
    Returns:
        tuple[callable, callable]: Φ_r sending (g, (g_1..g_r)) to (g, g·g_1, g·g_1·g_2, ...)
        and Φ_r^-1 sending (h_0..h_r) to (h_0, (h_0^-1·h_1, ..., h_(r-1)^-1·h_r)).
    """

    def forward(g: int, tup) -> tuple:
        out = [g]
        for x in tup:
            out.append(group.op(out[-1], x))
        return tuple(out)

    def backward(homogeneous) -> tuple:
        steps = tuple(group.op(group.inv(a), b) for a, b in zip(homogeneous, homogeneous[1:]))
        return homogeneous[0], steps

    return forward, backward


def _sparse_homogeneous(element: Counter) -> Counter:
    out = Counter()
    for tup, c in element.items():
        for i in range(len(tup)):
            out[tup[:i] + tup[i + 1:]] += (-1) ** i * c
    return Counter({k: v for k, v in out.items() if v})


def homogeneous_boundary(group: FiniteGroup, r: int) -> IntMatrix:
    """d̃_r(h_0..h_r) = Σ_i (-1)^i (h_0..ĥ_i..h_r) on the Z-basis G^(r+1)."""
    check_size(group, r)
    n = group.order
    rows = [[0] * n ** (r + 1) for _ in range(n**r)]
    for tup in tuples(group, r + 1):
        column = tuple_index(n, tup)
        for i in range(r + 1):
            rows[tuple_index(n, tup[:i] + tup[i + 1:])][column] += (-1) ** i
    return IntMatrix(rows, n ** (r + 1))


def contracting_homotopy(group: FiniteGroup, r: int) -> IntMatrix:
    """f_r(h_0..h_r) = (1, h_0..h_r); f_-1 sends the generator of Z to (1)."""
    n = group.order
    if r < 0:
        rows = [[1 if h == group.identity else 0] for h in group.elements()]
        return IntMatrix(rows, 1)
    check_size(group, r + 1)
    rows = [[0] * n ** (r + 1) for _ in range(n ** (r + 2))]
    for tup in tuples(group, r + 1):
        rows[tuple_index(n, (group.identity,) + tup)][tuple_index(n, tup)] = 1
    return IntMatrix(rows, n ** (r + 1))


def check_contracting_homotopy(group: FiniteGroup, r: int) -> bool:
    """∂_(r+1)∘f_r + f_(r-1)∘∂_r = 1 on C̃_r, with ∂_0 the augmentation."""
    n = group.order
    upper = homogeneous_boundary(group, r + 1) @ contracting_homotopy(group, r)
    if r == 0:
        lower = contracting_homotopy(group, -1) @ IntMatrix([[1] * n], n)
    else:
        lower = contracting_homotopy(group, r - 1) @ homogeneous_boundary(group, r)
    return upper + lower == IntMatrix.identity(n ** (r + 1))


def check_homogeneous_naturality(group: FiniteGroup, r: int) -> bool:
    """Φ_(r-1)∘d_r = d̃_r∘Φ_r on every basis element of C_r(G)."""
    check_size(group, r)
    forward, _ = homogeneous_iso(group, r)
    for g in group.elements():
        for tup in tuples(group, r):
            left = Counter()
            for (h, face), c in _sparse_bar(group, Counter({(g, tup): 1})).items():
                left[forward(h, face)] += c
            left = Counter({k: v for k, v in left.items() if v})
            if left != _sparse_homogeneous(Counter({forward(g, tup): 1})):
                return False
    return True


def cochain_term(module, r: int) -> FgAbGroup:
    """C^r(G, M) = M^(n^r) as an abelian group."""
    check_size(module.group, r)
    return direct_sum(*([module.underlying] * module.group.order**r))


def chain_term(module, k: int) -> FgAbGroup:
    """C_k(G) ⊗_{Z[G]} M = M^(n^k) as an abelian group."""
    return cochain_term(module, k)


def _block_rows(row_blocks: int, col_blocks: int, t: int) -> list:
    return [[0] * (col_blocks * t) for _ in range(row_blocks * t)]


def _add_block(rows: list, i: int, j: int, t: int, block, sign: int):
    for a in range(t):
        row = rows[i * t + a]
        source = block[a]
        for b in range(t):
            if source[b]:
                row[j * t + b] += sign * source[b]


def _add_identity(rows: list, i: int, j: int, t: int, sign: int):
    for a in range(t):
        rows[i * t + a][j * t + a] += sign


def cochain_differential(module, r: int) -> AbHom:
    """
    d^r: C^r(G, M) -> C^(r+1)(G, M),
    d^r φ(g_0..g_r) = g_0·φ(g_1..g_r) + Σ_k (-1)^k φ(.., g_(k-1)·g_k, ..) + (-1)^(r+1) φ(g_0..g_(r-1)).
    """
    group = module.group
    n = group.order
    t = module.ngens
    source = cochain_term(module, r)
    target = cochain_term(module, r + 1)
    _logger.debug("Cochain differential d^%s on %s cochains of rank %s", r, n ** (r + 1), t)
    actions = [module.matrix(g).entries for g in group.elements()]
    rows = _block_rows(n ** (r + 1), n**r, t)
    for tup in tuples(group, r + 1):
        i = tuple_index(n, tup)
        for sign, left, face in bar_terms(group, tup):
            j = tuple_index(n, face)
            if left == group.identity:
                _add_identity(rows, i, j, t, sign)
            else:
                _add_block(rows, i, j, t, actions[left], sign)
    return AbHom(source, target, IntMatrix(rows, source.ngens))


def chain_differential(module, k: int) -> AbHom:
    """
    ∂_k: C_k ⊗ M -> C_(k-1) ⊗ M for k >= 1,
    ∂((g_1..g_k) ⊗ m) = (g_2..g_k) ⊗ g_1^-1·m + Σ_j (-1)^j (.., g_j·g_(j+1), ..) ⊗ m
                       + (-1)^k (g_1..g_(k-1)) ⊗ m.
    """
    group = module.group
    n = group.order
    t = module.ngens
    check_size(group, k)
    source = chain_term(module, k)
    target = chain_term(module, k - 1)
    _logger.debug("Chain differential d_%s on %s chains of rank %s", k, n**k, t)
    actions = [module.matrix(g).entries for g in group.elements()]
    rows = _block_rows(n ** (k - 1), n**k, t)
    for tup in tuples(group, k):
        j = tuple_index(n, tup)
        for sign, left, face in bar_terms(group, tup):
            i = tuple_index(n, face)
            if left == group.identity:
                _add_identity(rows, i, j, t, sign)
            else:
                _add_block(rows, i, j, t, actions[group.inv(left)], sign)
    return AbHom(source, target, IntMatrix(rows, source.ngens))
