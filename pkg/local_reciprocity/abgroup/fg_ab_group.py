"""
Finitely generated abelian groups, their elements and homomorphisms.

A group is presented as a direct sum of cyclic groups Z/d_i (d_i = 0 is
Z). Cochain groups keep the presentation they are built with; equality
and display always go through the normalized invariant factors.
"""

import itertools
import math
from functools import cached_property

from sympy import factorint

from local_reciprocity.abgroup.int_matrix import IntMatrix, SmithReduction
from local_reciprocity.utils.errors import MalformedHom, NonComposable


def normalize_factors(orders) -> tuple:
    """
    Normalize cyclic orders into invariant factors.
    Args:
        orders: iterable of non-negative integers, 0 meaning Z.
    Returns:
        tuple[int]: d_1 | d_2 | ... with every d_i >= 2, zeros last.
    """
    free = 0
    exponents = {}
    for d in orders:
        d = int(d)
        if d < 0:
            raise ValueError(f"Cyclic orders must be non-negative, got {d}")
        if d == 0:
            free += 1
        elif d > 1:
            for prime, exponent in factorint(d).items():
                exponents.setdefault(prime, []).append(exponent)
    count = max((len(e) for e in exponents.values()), default=0)
    largest_first = [1] * count
    for prime, values in exponents.items():
        for k, exponent in enumerate(sorted(values, reverse=True)):
            largest_first[k] *= prime**exponent
    return tuple(reversed(largest_first)) + (0,) * free


def _describe(factors) -> str:
    if not factors:
        return "0"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


class FgAbGroup:
    """A finitely generated abelian group given by cyclic orders."""

    def __init__(self, orders=()):
        orders = tuple(int(d) for d in orders)
        if any(d < 0 for d in orders):
            raise ValueError(f"Cyclic orders must be non-negative: {orders}")
        self._orders = orders

    @classmethod
    def from_factors(cls, orders) -> "FgAbGroup":
        """Return the group with the given cyclic orders in invariant-factor form."""
        return cls(normalize_factors(orders))

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls((0,) * rank)

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        return cls.from_factors((n,))

    @property
    def orders(self) -> tuple:
        return self._orders

    @property
    def ngens(self) -> int:
        return len(self._orders)

    @cached_property
    def invariant_factors(self) -> tuple:
        return normalize_factors(self._orders)

    @property
    def rank(self) -> int:
        return self.invariant_factors.count(0)

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.invariant_factors if d != 0)

    def is_normalized(self) -> bool:
        return self._orders == self.invariant_factors

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def is_finite(self) -> bool:
        return 0 not in self._orders

    def order(self):
        """Return |A|, or None when A is infinite."""
        if not self.is_finite():
            return None
        return math.prod(self._orders)

    def exponent(self):
        if not self.is_finite():
            return None
        return math.lcm(*self._orders) if self._orders else 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FgAbGroup):
            return False
        return self.invariant_factors == other.invariant_factors

    def __hash__(self) -> int:
        return hash(self.invariant_factors)

    def __repr__(self) -> str:
        return f"FgAbGroup({_describe(self.invariant_factors)})"

    def same_presentation(self, other: "FgAbGroup") -> bool:
        return self._orders == other._orders

    def reduce(self, coords) -> tuple:
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self._orders):
            raise ValueError(f"Expected {len(self._orders)} coordinates, got {len(coords)}")
        return tuple(c % d if d else c for c, d in zip(coords, self._orders))

    def element(self, coords) -> "ElementOf":
        return ElementOf(self, coords)

    def zero(self) -> "ElementOf":
        return ElementOf(self, (0,) * self.ngens)

    def generator(self, i: int) -> "ElementOf":
        coords = [0] * self.ngens
        coords[i] = 1
        return ElementOf(self, coords)

    def generators(self) -> list:
        return [self.generator(i) for i in range(self.ngens)]

    def elements(self):
        """Iterate over every element of a finite group."""
        if not self.is_finite():
            raise ValueError("Cannot enumerate an infinite group")
        for coords in itertools.product(*(range(d) for d in self._orders)):
            yield ElementOf(self, coords)

    def relation_columns(self) -> list:
        """Integer columns d_i·e_i spanning the relations of the presentation."""
        columns = []
        for i, d in enumerate(self._orders):
            if d:
                column = [0] * self.ngens
                column[i] = d
                columns.append(column)
        return columns

    def serialize(self) -> dict:
        return {"factors": [str(d) for d in self._orders]}

    @classmethod
    def from_json(cls, data: dict) -> "FgAbGroup":
        return cls(int(d) for d in data["factors"])


def direct_sum(*groups) -> FgAbGroup:
    return FgAbGroup(tuple(itertools.chain.from_iterable(g.orders for g in groups)))


class ElementOf:
    """An element of an FgAbGroup with coordinates reduced by the cyclic orders."""

    def __init__(self, group: FgAbGroup, coords):
        self.group = group
        self.coords = group.reduce(coords)

    def _check(self, other: "ElementOf"):
        if not self.group.same_presentation(other.group):
            raise NonComposable("Elements belong to different groups")

    def __add__(self, other: "ElementOf") -> "ElementOf":
        self._check(other)
        return ElementOf(self.group, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "ElementOf") -> "ElementOf":
        self._check(other)
        return ElementOf(self.group, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "ElementOf":
        return ElementOf(self.group, [-a for a in self.coords])

    def __mul__(self, k: int) -> "ElementOf":
        return ElementOf(self.group, [k * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementOf):
            return False
        return self.group.same_presentation(other.group) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.group.orders, self.coords))

    def __repr__(self) -> str:
        return f"ElementOf({list(self.coords)} in {self.group!r})"

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self):
        """Order of the element, or None when it has infinite order."""
        result = 1
        for c, d in zip(self.coords, self.group.orders):
            if c == 0:
                continue
            if d == 0:
                return None
            result = math.lcm(result, d // math.gcd(c, d))
        return result

    def serialize(self) -> list:
        return [str(c) for c in self.coords]


class AbHom:
    """A homomorphism of finitely generated abelian groups in coordinates."""

    def __init__(self, source: FgAbGroup, target: FgAbGroup, matrix):
        """
        Args:
            source (FgAbGroup): domain.
            target (FgAbGroup): codomain.
            matrix: IntMatrix or nested lists, target.ngens rows by source.ngens columns;
                column i is the image of the i-th source generator.
        Raises:
            MalformedHom: If the shape is wrong or a relation is not sent to zero.
        """
        if not isinstance(matrix, IntMatrix):
            try:
                matrix = IntMatrix(matrix, source.ngens)
            except ValueError as e:
                raise MalformedHom(str(e)) from e
        if matrix.rows != target.ngens or matrix.cols != source.ngens:
            raise MalformedHom(
                f"Matrix is {matrix.rows}x{matrix.cols}, expected "
                f"{target.ngens}x{source.ngens}"
            )
        reduced = []
        for row, t in zip(matrix.entries, target.orders):
            if t:
                row = [x % t for x in row]
            for x, s in zip(row, source.orders):
                if s == 0 or x == 0:
                    continue
                if t == 0 or (s * x) % t:
                    raise MalformedHom("A source relation is not mapped to zero in the target")
            reduced.append(row)
        self.source = source
        self.target = target
        self.matrix = IntMatrix(reduced, source.ngens)

    @classmethod
    def identity(cls, group: FgAbGroup) -> "AbHom":
        return cls(group, group, IntMatrix.identity(group.ngens))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> "AbHom":
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def from_images(cls, source: FgAbGroup, target: FgAbGroup, images) -> "AbHom":
        """Build the map sending generator i to images[i] (ElementOf or coordinates)."""
        columns = [im.coords if isinstance(im, ElementOf) else tuple(im) for im in images]
        return cls(source, target, IntMatrix.from_columns(columns, target.ngens))

    def __call__(self, x: ElementOf) -> ElementOf:
        if not x.group.same_presentation(self.source):
            raise NonComposable("Element does not belong to the source of the map")
        return ElementOf(self.target, self.matrix.apply(x.coords))

    def apply_coords(self, coords) -> tuple:
        return self.target.reduce(self.matrix.apply(coords))

    def __matmul__(self, other: "AbHom") -> "AbHom":
        """Composition self ∘ other."""
        if not other.target.same_presentation(self.source):
            raise NonComposable("Target of the inner map is not the source of the outer map")
        return AbHom(other.source, self.target, self.matrix @ other.matrix)

    def _check_parallel(self, other: "AbHom"):
        if not (self.source.same_presentation(other.source)
                and self.target.same_presentation(other.target)):
            raise NonComposable("Maps do not share source and target")

    def __add__(self, other: "AbHom") -> "AbHom":
        self._check_parallel(other)
        return AbHom(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other: "AbHom") -> "AbHom":
        self._check_parallel(other)
        return AbHom(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self) -> "AbHom":
        return AbHom(self.source, self.target, -self.matrix)

    def scale(self, k: int) -> "AbHom":
        return AbHom(self.source, self.target, self.matrix.scale(k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbHom):
            return False
        return (self.source.same_presentation(other.source)
                and self.target.same_presentation(other.target)
                and self.matrix == other.matrix)

    def __hash__(self) -> int:
        return hash((self.source.orders, self.target.orders, self.matrix))

    def __repr__(self) -> str:
        return f"AbHom({self.source!r} -> {self.target!r}, {self.matrix.tolist()!r})"

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    @cached_property
    def _solver(self) -> SmithReduction:
        columns = self.matrix.columns() + self.target.relation_columns()
        system = [list(r) for r in zip(*columns)] if columns else [[] for _ in range(self.target.ngens)]
        return SmithReduction(
            system, rows=self.target.ngens, cols=len(columns), track_left=True, track_right=True
        ).run()

    def preimage(self, x: ElementOf):
        """
        Solve self(y) = x by Smith normal form.
        Returns:
            ElementOf | None: some preimage, or None when x is not in the image.
        """
        if not x.group.same_presentation(self.target):
            raise NonComposable("Element does not belong to the target of the map")
        solver = self._solver
        ux = [sum(a * b for a, b in zip(row, x.coords)) for row in solver.left]
        z = [0] * solver.ncols
        for i in range(solver.nrows):
            d = solver.a[i][i] if i < solver.rank else 0
            if i < solver.rank:
                if ux[i] % d:
                    return None
                z[i] = ux[i] // d
            elif ux[i]:
                return None
        y = [0] * self.source.ngens
        for k, zk in enumerate(z):
            if zk:
                column = solver.right_columns[k]
                for i in range(self.source.ngens):
                    y[i] += zk * column[i]
        return ElementOf(self.source, y)

    def image_contains(self, x: ElementOf) -> bool:
        return self.preimage(x) is not None

    def is_surjective(self) -> bool:
        return all(self.image_contains(g) for g in self.target.generators())

    def is_injective(self) -> bool:
        from local_reciprocity.abgroup.homology import kernel

        k, _ = kernel(self)
        return k.is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_surjective() and self.is_injective()

    def inverse(self) -> "AbHom":
        """
        Inverse of an isomorphism.
        Raises:
            MalformedHom: If the map is not an isomorphism.
        """
        if not self.is_injective():
            raise MalformedHom("Map is not injective, it has no inverse")
        images = []
        for g in self.target.generators():
            y = self.preimage(g)
            if y is None:
                raise MalformedHom("Map is not surjective, it has no inverse")
            images.append(y)
        return AbHom.from_images(self.target, self.source, images)

    def serialize(self) -> dict:
        return {
            "source": self.source.serialize(),
            "target": self.target.serialize(),
            "matrix": [[str(x) for x in row] for row in self.matrix.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AbHom":
        source = FgAbGroup.from_json(data["source"])
        target = FgAbGroup.from_json(data["target"])
        rows = [[int(x) for x in row] for row in data["matrix"]]
        return cls(source, target, IntMatrix(rows, source.ngens))


def block_hom(source_parts, target_parts, blocks) -> AbHom:
    """
    Assemble a map between direct sums from a grid of blocks.
    Args:
        source_parts (list[FgAbGroup]): summands of the source.
        target_parts (list[FgAbGroup]): summands of the target.
        blocks: blocks[i][j] is an AbHom source_parts[j] -> target_parts[i] or None for zero.
    """
    source = direct_sum(*source_parts)
    target = direct_sum(*target_parts)
    rows = []
    for i, tpart in enumerate(target_parts):
        for r in range(tpart.ngens):
            row = []
            for j, spart in enumerate(source_parts):
                block = blocks[i][j]
                if block is None:
                    row.extend([0] * spart.ngens)
                else:
                    row.extend(block.matrix.row(r))
            rows.append(row)
    return AbHom(source, target, IntMatrix(rows, source.ngens))
