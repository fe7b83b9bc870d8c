"""
Dense cochains G^r -> M and chains Σ_γ γ ⊗ m_γ in C_r ⊗_{Z[G]} M.

Both store one module element per tuple of G^r as a single vector in
M^(n^r), tuples in lexicographic order.
"""

from local_reciprocity.abgroup.fg_ab_group import ElementOf
from local_reciprocity.cohomology.bar import (
    chain_term,
    cochain_differential,
    cochain_term,
    tuple_index,
    tuples,
)
from local_reciprocity.gmodule.gmodule import GModule
from local_reciprocity.utils.errors import NonComposable


class _TupleTable:
    """Shared storage of one module element per tuple in G^r."""

    term_builder = staticmethod(cochain_term)

    def __init__(self, module: GModule, degree: int, vector):
        if degree < 0:
            raise ValueError(f"Table degree must be non-negative, got {degree}")
        self.module = module
        self.degree = degree
        term = self.term_builder(module, degree)
        if isinstance(vector, ElementOf):
            if not vector.group.same_presentation(term):
                raise NonComposable("Vector does not live in the expected term")
            self.vector = vector
        else:
            self.vector = term.element(vector)

    @classmethod
    def from_function(cls, module: GModule, degree: int, fn):
        """Build the table from fn(tuple) returning an ElementOf or coordinates of M."""
        coords = []
        for tup in tuples(module.group, degree):
            value = fn(tup)
            coords.extend(value.coords if isinstance(value, ElementOf) else value)
        return cls(module, degree, coords)

    @classmethod
    def zero(cls, module: GModule, degree: int):
        return cls(module, degree, cls.term_builder(module, degree).zero())

    def value(self, tup) -> ElementOf:
        t = self.module.ngens
        i = tuple_index(self.module.group.order, tup)
        return self.module.element(self.vector.coords[i * t:(i + 1) * t])

    def items(self):
        for tup in tuples(self.module.group, self.degree):
            yield tup, self.value(tup)

    def is_zero(self) -> bool:
        return self.vector.is_zero()

    def _check(self, other):
        if type(other) is not type(self) or other.degree != self.degree or other.module != self.module:
            raise NonComposable("Tables of different shape or module")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.module, self.degree, self.vector + other.vector)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.module, self.degree, self.vector - other.vector)

    def __neg__(self):
        return type(self)(self.module, self.degree, -self.vector)

    def __mul__(self, k: int):
        return type(self)(self.module, self.degree, self.vector * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return False
        return (self.degree == other.degree and self.module == other.module
                and self.vector == other.vector)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.degree, self.vector))

    def serialize(self) -> dict:
        table = {}
        for tup, value in self.items():
            table[",".join(str(g) for g in tup)] = value.serialize()
        return {"degree": self.degree, "module": self.module.serialize(), "table": table}

    @classmethod
    def from_json(cls, data: dict):
        module = GModule.from_json(data["module"])
        degree = int(data["degree"])
        table = data["table"]

        def fn(tup):
            return [int(x) for x in table[",".join(str(g) for g in tup)]]

        return cls.from_function(module, degree, fn)


class Cochain(_TupleTable):
    """An inhomogeneous r-cochain φ: G^r -> M."""

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, module={self.module.name})"

    def coboundary(self) -> "Cochain":
        return Cochain(self.module, self.degree + 1,
                       cochain_differential(self.module, self.degree)(self.vector))

    def is_cocycle(self) -> bool:
        return self.coboundary().is_zero()


class ChainElement(_TupleTable):
    """Σ_γ γ ⊗ m_γ in C_r(G) ⊗_{Z[G]} M."""

    term_builder = staticmethod(chain_term)

    def __repr__(self) -> str:
        return f"ChainElement(degree={self.degree}, module={self.module.name})"

    def coefficient(self, tup) -> ElementOf:
        return self.value(tup)


def is_cocycle(cochain: Cochain) -> bool:
    return cochain.is_cocycle()


def coboundary(cochain: Cochain) -> Cochain:
    return cochain.coboundary()
