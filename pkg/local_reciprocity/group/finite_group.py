"""
Finite groups given by multiplication tables.

Elements are table indices. Every constructor here puts the identity at
index 0; tables coming from JSON are validated and may put it elsewhere.
"""

import itertools
import logging
import math

from sympy import factorint, multiplicity

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import InvalidGroup, NotNormal

_logger = logging.getLogger(__name__)


class FiniteGroup:
    """A finite group stored as its full multiplication table."""

    def __init__(self, mult, name: str = None):
        """
        Args:
            mult: n x n table, mult[a][b] is the index of a·b.
            name: optional label used in reports.
        Raises:
            InvalidGroup: If the table is not a group table or exceeds the order cap.
        """
        table = tuple(tuple(int(x) for x in row) for row in mult)
        n = len(table)
        if n == 0:
            raise InvalidGroup("A group has at least one element")
        cap = Config.instance().max_group_order
        if n > cap:
            raise InvalidGroup(f"Group order {n} exceeds the cap of {cap}")
        elements = set(range(n))
        for row in table:
            if len(row) != n or set(row) != elements:
                raise InvalidGroup("Every row of the table must be a permutation of the elements")
        for b in range(n):
            if {table[a][b] for a in range(n)} != elements:
                raise InvalidGroup("Every column of the table must be a permutation of the elements")
        identity = next((e for e in range(n) if table[e] == tuple(range(n))), None)
        if identity is None:
            raise InvalidGroup("Table has no identity element")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidGroup(f"Table is not associative at ({a}, {b}, {c})")
        self.mult = table
        self.order = n
        self.identity = identity
        self.inverse = tuple(table[a].index(identity) for a in range(n))
        self.name = name or f"G{n}"

    def op(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = self.identity
        for _ in range(k):
            result = self.mult[result][a]
        return result

    def product(self, elements) -> int:
        result = self.identity
        for x in elements:
            result = self.mult[result][x]
        return result

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mult[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in self.elements()))

    def is_abelian(self) -> bool:
        return all(self.mult[a][b] == self.mult[b][a]
                   for a, b in itertools.combinations(range(self.order), 2))

    def is_cyclic(self) -> bool:
        return self.cyclic_generator() is not None

    def cyclic_generator(self):
        """The smallest-index element generating the group, or None."""
        return next((a for a in self.elements() if self.element_order(a) == self.order), None)

    def subgroup(self, elements) -> "SubgroupData":
        return SubgroupData(self, elements)

    def trivial_subgroup(self) -> "SubgroupData":
        return SubgroupData(self, [self.identity])

    def whole(self) -> "SubgroupData":
        return SubgroupData(self, self.elements())

    def generated_subgroup(self, generators) -> "SubgroupData":
        """The smallest subgroup containing the given elements."""
        members = {self.identity}
        frontier = [self.identity]
        generators = list(generators)
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = self.mult[x][g]
                if y not in members:
                    members.add(y)
                    frontier.append(y)
        return SubgroupData(self, members)

    def commutator(self, a: int, b: int) -> int:
        """a·b·a^-1·b^-1."""
        return self.product((a, b, self.inverse[a], self.inverse[b]))

    def commutator_subgroup(self) -> "SubgroupData":
        commutators = {self.commutator(a, b) for a, b in itertools.product(self.elements(), repeat=2)}
        return self.generated_subgroup(commutators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return False
        return self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def serialize(self) -> dict:
        return {"order": self.order, "mult": [list(row) for row in self.mult]}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGroup":
        group = cls(data["mult"])
        if group.order != int(data["order"]):
            raise InvalidGroup(f"Declared order {data['order']} but the table has {group.order} rows")
        return group


class SubgroupData:
    """A subgroup H of a finite group with left coset representatives of G/H."""

    def __init__(self, parent: FiniteGroup, elements):
        members = sorted(set(int(x) for x in elements))
        if not members or any(x < 0 or x >= parent.order for x in members):
            raise InvalidGroup("Subgroup elements must be valid indices of the parent group")
        member_set = set(members)
        if parent.identity not in member_set:
            raise InvalidGroup("A subgroup must contain the identity")
        for a in members:
            if parent.inv(a) not in member_set:
                raise InvalidGroup(f"Subgroup is not closed under inverses at {a}")
            for b in members:
                if parent.op(a, b) not in member_set:
                    raise InvalidGroup(f"Subgroup is not closed under products at ({a}, {b})")
        self.parent = parent
        # identity first so re-indexed groups keep it at 0
        self.elements = tuple(sorted(members, key=lambda x: (x != parent.identity, x)))
        self.order = len(members)
        self.index = parent.order // self.order
        self._member_set = frozenset(members)
        representatives = []
        coset_of = [None] * parent.order
        for g in parent.elements():
            if coset_of[g] is None:
                j = len(representatives)
                representatives.append(g)
                for h in self.elements:
                    coset_of[parent.op(g, h)] = j
        self.coset_representatives = tuple(representatives)
        self._left_coset_of = tuple(coset_of)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def __repr__(self) -> str:
        return f"SubgroupData({list(self.elements)} in {self.parent!r})"

    def left_coset_index(self, x: int) -> int:
        """j with x in g_j·H."""
        return self._left_coset_of[x]

    def right_coset_decomposition(self, x: int) -> tuple:
        """
        Write x = h·s_j with s_j = g_j^-1.
        Returns:
            tuple[int, int]: (h, j).
        """
        parent = self.parent
        j = self._left_coset_of[parent.inv(x)]
        return parent.op(x, self.coset_representatives[j]), j

    def is_normal(self) -> bool:
        parent = self.parent
        return all(parent.product((g, h, parent.inv(g))) in self._member_set
                   for g in parent.elements() for h in self.elements)

    def as_group(self) -> tuple:
        """
        Re-index H as a group of its own.
        Returns:
            tuple[FiniteGroup, tuple[int]]: the group and the embedding into the parent.
        """
        position = {x: i for i, x in enumerate(self.elements)}
        table = [[position[self.parent.op(a, b)] for b in self.elements] for a in self.elements]
        return FiniteGroup(table, name=f"{self.parent.name}>H{self.order}"), self.elements

    def quotient(self) -> tuple:
        """
        Quotient by a normal subgroup.
        Returns:
            tuple[FiniteGroup, tuple[int]]: G/H with cosets ordered by left coset index,
            and the projection from G.
        Raises:
            NotNormal: If H is not normal.
        """
        if not self.is_normal():
            raise NotNormal(f"{self!r} is not normal")
        parent = self.parent
        reps = self.coset_representatives
        table = [[self._left_coset_of[parent.op(a, b)] for b in reps] for a in reps]
        return FiniteGroup(table, name=f"{parent.name}/H{self.order}"), self._left_coset_of


def cyclic(n: int) -> FiniteGroup:
    """Z/n with generator at index 1."""
    if n < 1:
        raise InvalidGroup(f"Cyclic group order must be positive, got {n}")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z/{n}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup, name: str = None) -> FiniteGroup:
    """g1 × g2 with (a, b) stored at index a·|g2| + b."""
    n2 = g2.order
    table = []
    for a1, b1 in itertools.product(g1.elements(), g2.elements()):
        table.append([g1.op(a1, a2) * n2 + g2.op(b1, b2)
                      for a2, b2 in itertools.product(g1.elements(), g2.elements())])
    return FiniteGroup(table, name=name or f"{g1.name}x{g2.name}")


def klein() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), name="klein")


def symmetric3() -> FiniteGroup:
    """Permutations of {0, 1, 2} in lexicographic order, composed right to left."""
    perms = list(itertools.permutations(range(3)))
    position = {p: i for i, p in enumerate(perms)}
    table = [[position[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return FiniteGroup(table, name="S3")


def abelian_invariants(group: FiniteGroup) -> FgAbGroup:
    """
    Invariant factors of an abelian group from counts of elements of p-power order.
    Raises:
        InvalidGroup: If the group is not abelian.
    """
    if not group.is_abelian():
        raise InvalidGroup(f"{group!r} is not abelian")
    orders = [group.element_order(a) for a in group.elements()]
    factors = []
    for prime, top in factorint(group.order).items():
        # log_p |A[p^k]| for k = 0..top
        logs = []
        for k in range(top + 1):
            count = sum(1 for o in orders if (prime**k) % o == 0)
            logs.append(multiplicity(prime, count))
        at_least = [logs[k] - logs[k - 1] for k in range(1, top + 1)]
        at_least.append(0)
        for k in range(top):
            for _ in range(at_least[k] - at_least[k + 1]):
                factors.append(prime ** (k + 1))
    return FgAbGroup.from_factors(factors)


def abelianization_oracle(group: FiniteGroup) -> FgAbGroup:
    """G / [G, G] by brute force."""
    quotient, _ = group.commutator_subgroup().quotient()
    result = abelian_invariants(quotient)
    _logger.debug("Abelianization of %s is %s", group.name, result)
    return result
