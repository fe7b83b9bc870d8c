"""
Finite fields F_{p^f} = F_p[x]/(m) with the modulus chosen deterministically.

Elements are coefficient vectors c_0 + c_1·x + ... over the polynomial basis;
the dense arithmetic is delegated to sympy's galoistools.
"""

import itertools
import logging
import math

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_compose_mod,
    gf_gcd,
    gf_irreducible_p,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_sub,
)

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.gmodule.constructions import twisted_cyclic
from local_reciprocity.gmodule.gmodule import GModule
from local_reciprocity.group.finite_group import cyclic
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import FieldCapExceeded

_logger = logging.getLogger(__name__)


def to_dense(coeffs) -> list:
    """Low-first coefficients to the high-first list galoistools works with."""
    dense = [int(c) for c in reversed(coeffs)]
    while dense and dense[0] == 0:
        dense.pop(0)
    return dense


def from_dense(poly, length: int) -> tuple:
    coeffs = [int(c) for c in reversed(poly)]
    return tuple(coeffs + [0] * (length - len(coeffs)))


def check_field_parameters(p: int, f: int):
    """
    Raises:
        ValueError: If p is not prime or f < 1.
        FieldCapExceeded: If f or p^f exceeds the configured caps.
    """
    if not isprime(p):
        raise ValueError(f"Characteristic must be prime, got {p}")
    if f < 1:
        raise ValueError(f"Degree must be positive, got {f}")
    config = Config.instance()
    if f > config.max_field_degree:
        raise FieldCapExceeded(f"Degree {f} exceeds the cap {config.max_field_degree}")
    if p**f > config.field_cap:
        raise FieldCapExceeded(f"{p}^{f} exceeds the field cap {config.field_cap}")


class FiniteField:
    """F_p[x]/(modulus) for the first monic irreducible modulus of degree f."""

    def __init__(self, p: int, f: int):
        check_field_parameters(p, f)
        self.p = p
        self.f = f
        self.order = p**f
        self.modulus = self._first_irreducible()
        self._primitive = None
        self._logs = None
        _logger.debug("F_%s^%s with modulus %s", p, f, self.modulus)

    def _first_irreducible(self) -> list:
        # lexicographic in (c_{f-1}, ..., c_0)
        for tail in itertools.product(range(self.p), repeat=self.f):
            candidate = [1] + list(tail)
            if gf_irreducible_p(candidate, self.p, ZZ):
                return candidate
        raise ValueError(f"No irreducible polynomial of degree {self.f} over F_{self.p}")

    def verify_modulus(self) -> bool:
        """gcd(x^{p^i} - x, m) = 1 for 0 < i < f and x^{p^f} ≡ x mod m."""
        x = [1, 0]
        p, m = self.p, self.modulus
        for i in range(1, self.f):
            power = gf_pow_mod(x, p**i, m, p, ZZ)
            if gf_gcd(gf_sub(power, x, p, ZZ), m, p, ZZ) != [1]:
                return False
        return gf_sub(gf_pow_mod(x, self.order, m, p, ZZ), gf_rem(x, m, p, ZZ), p, ZZ) == []

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return False
        return self.p == other.p and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.p, self.f))

    def __repr__(self) -> str:
        return f"FiniteField({self.p}^{self.f})"

    def element(self, coeffs) -> "FFElement":
        return FFElement(self, coeffs)

    def scalar(self, a: int) -> "FFElement":
        return FFElement(self, [a] + [0] * (self.f - 1))

    def zero(self) -> "FFElement":
        return self.scalar(0)

    def one(self) -> "FFElement":
        return self.scalar(1)

    def gen(self) -> "FFElement":
        """The class of x."""
        return FFElement(self, from_dense(gf_rem([1, 0], self.modulus, self.p, ZZ), self.f))

    def basis(self) -> list:
        return [FFElement(self, [1 if i == j else 0 for i in range(self.f)]) for j in range(self.f)]

    def from_int(self, n: int) -> "FFElement":
        """The element whose base-p digits are its coefficients."""
        coeffs = []
        for _ in range(self.f):
            n, digit = divmod(n, self.p)
            coeffs.append(digit)
        return FFElement(self, coeffs)

    def elements(self):
        for n in range(self.order):
            yield self.from_int(n)

    def units(self):
        for n in range(1, self.order):
            yield self.from_int(n)

    def primitive_element(self) -> "FFElement":
        """The first generator of F^× in from_int order."""
        if self._primitive is None:
            q1 = self.order - 1
            exponents = [q1 // prime for prime in factorint(q1)]
            for candidate in self.units():
                if all(candidate**e != self.one() for e in exponents):
                    self._primitive = candidate
                    break
        return self._primitive

    def discrete_log(self, e: "FFElement") -> int:
        """k in [0, p^f - 1) with g^k = e for the primitive element g."""
        if e.is_zero():
            raise ValueError("Zero has no discrete logarithm")
        if self._logs is None:
            # baby steps g^j for j < m
            g = self.primitive_element()
            step = math.isqrt(self.order - 1) + 1
            table = {}
            x = self.one()
            for j in range(step):
                table.setdefault(x, j)
                x = x * g
            self._logs = (step, table, g ** (-step))
        step, table, giant = self._logs
        y = e
        for i in range(step + 1):
            if y in table:
                return (i * step + table[y]) % (self.order - 1)
            y = y * giant
        raise ValueError(f"{e!r} has no logarithm base {self.primitive_element()!r}")

    def frobenius_matrix(self, k: int = 1) -> IntMatrix:
        """σ^k: e ↦ e^{p^k} on the polynomial basis, as a matrix over Z/p."""
        columns = [b.frobenius(k).coeffs for b in self.basis()]
        return IntMatrix.from_columns(columns, self.f)

    def serialize(self) -> dict:
        return {"p": self.p, "f": self.f, "modulus": [str(c) for c in reversed(self.modulus)]}


class FFElement:
    """An element of a FiniteField, immutable."""

    def __init__(self, field: FiniteField, coeffs):
        coeffs = [int(c) % field.p for c in coeffs]
        if len(coeffs) != field.f:
            raise ValueError(f"Expected {field.f} coefficients, got {len(coeffs)}")
        self.field = field
        self.coeffs = tuple(coeffs)

    def _dense(self) -> list:
        return to_dense(self.coeffs)

    def _wrap(self, poly) -> "FFElement":
        field = self.field
        return FFElement(field, from_dense(gf_rem(poly, field.modulus, field.p, ZZ), field.f))

    def _check(self, other: "FFElement"):
        if other.field != self.field:
            raise ValueError("Elements of different fields")

    def __add__(self, other: "FFElement") -> "FFElement":
        self._check(other)
        return self._wrap(gf_add(self._dense(), other._dense(), self.field.p, ZZ))

    def __sub__(self, other: "FFElement") -> "FFElement":
        self._check(other)
        return self._wrap(gf_sub(self._dense(), other._dense(), self.field.p, ZZ))

    def __neg__(self) -> "FFElement":
        return self.field.zero() - self

    def __mul__(self, other) -> "FFElement":
        if isinstance(other, int):
            return FFElement(self.field, [c * other for c in self.coeffs])
        self._check(other)
        return self._wrap(gf_mul(self._dense(), other._dense(), self.field.p, ZZ))

    def __rmul__(self, k: int) -> "FFElement":
        return self * k

    def __pow__(self, n: int) -> "FFElement":
        field = self.field
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("Zero is not invertible")
            n %= field.order - 1
        return self._wrap(gf_pow_mod(self._dense(), n, field.modulus, field.p, ZZ))

    def inverse(self) -> "FFElement":
        return self ** (-1)

    def frobenius(self, k: int = 1) -> "FFElement":
        """σ^k(e) = e^{p^k}."""
        field = self.field
        x_image = gf_pow_mod([1, 0], field.p ** (k % field.f), field.modulus, field.p, ZZ)
        return self._wrap(gf_compose_mod(self._dense(), x_image, field.modulus, field.p, ZZ))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_subfield(self, d: int) -> bool:
        """e lies in F_{p^d} iff σ^d(e) = e."""
        return self.frobenius(d) == self

    def to_int(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FFElement):
            return False
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.f, self.coeffs))

    def __repr__(self) -> str:
        return f"FFElement({list(self.coeffs)} in F_{self.field.p}^{self.field.f})"

    def serialize(self) -> list:
        return [str(c) for c in self.coeffs]


def build_finite_field(p: int, f: int) -> FiniteField:
    return FiniteField(p, f)


def _relative_degree(field: FiniteField, d: int) -> int:
    if d < 1 or field.f % d:
        raise ValueError(f"Subfield degree {d} does not divide {field.f}")
    return field.f // d


def ff_norm(e: FFElement, d: int = 1) -> FFElement:
    """Nm to F_{p^d}: the product of σ^{d·i}(e) over the relative Galois group."""
    result = e.field.one()
    for i in range(_relative_degree(e.field, d)):
        result = result * e.frobenius(d * i)
    return result


def ff_trace(e: FFElement, d: int = 1) -> FFElement:
    """Tr to F_{p^d}: the sum of σ^{d·i}(e) over the relative Galois group."""
    result = e.field.zero()
    for i in range(_relative_degree(e.field, d)):
        result = result + e.frobenius(d * i)
    return result


def residue_unit_module(field: FiniteField) -> GModule:
    """F^× ≅ Z/(p^f - 1) through the discrete log, with Frobenius acting as multiplication by p."""
    g = field.primitive_element()
    u = field.discrete_log(g.frobenius())
    return twisted_cyclic(cyclic(field.f), field.order - 1, u, name=f"F_{field.p}^{field.f} units")


def residue_additive_module(field: FiniteField) -> GModule:
    """F^+ ≅ (Z/p)^f over Gal(F_{p^f}/F_p) = Z/f, σ^k acting by its matrix on the polynomial basis."""
    action = [field.frobenius_matrix(k) for k in range(field.f)]
    return GModule(cyclic(field.f), FgAbGroup((field.p,) * field.f), action,
                   name=f"F_{field.p}^{field.f} additive")
