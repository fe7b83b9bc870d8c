"""
Unramified extensions L = Q_p[x]/(m̃) of degree f, truncated to O_L / p^N.

The lifted modulus m̃ has coefficients in [0, p) and reduces to the
residue modulus, so x generates O_L over Z_p. Arithmetic is the galoistools
dense arithmetic carried out modulo p^N; m̃ is monic, which is all the
division routine needs.
"""

import logging

from sympy import multiplicity
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_compose_mod,
    gf_diff,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_sub,
)

from local_reciprocity.localfield.finite_field import (
    FFElement,
    FiniteField,
    check_field_parameters,
    ff_norm,
    ff_trace,
    from_dense,
    to_dense,
)
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import FieldCapExceeded, LiftFailed, NotAUnit

_logger = logging.getLogger(__name__)


def _valuation(n: int, p: int, cap: int) -> int:
    if n == 0:
        return cap
    return min(int(multiplicity(p, n)), cap)


class UnramifiedTower:
    """O_L / p^N for the unramified extension of Q_p of degree f."""

    def __init__(self, p: int, f: int, precision: int):
        check_field_parameters(p, f)
        if precision < 1:
            raise ValueError(f"Precision must be at least 1, got {precision}")
        config = Config.instance()
        if p ** (precision * f) > config.tower_cap:
            raise FieldCapExceeded(f"{p}^({precision}·{f}) exceeds the tower cap {config.tower_cap}")
        self.p = p
        self.f = f
        self.precision = precision
        self.modulus_pn = p**precision
        self.residue_field = FiniteField(p, f)
        self.modulus = list(self.residue_field.modulus)
        self.unit_count = p ** ((precision - 1) * f) * (p**f - 1)
        self.frobenius_image = self._lift_frobenius()
        _logger.info("Built tower p=%s f=%s N=%s", p, f, precision)

    def _lift_frobenius(self) -> list:
        """Newton iteration y ← y - m̃(y)/m̃'(y) from y ≡ x^p mod p."""
        y = self.element(from_dense(gf_pow_mod([1, 0], self.p, self.modulus, self.p, ZZ), self.f))
        derivative = gf_diff(self.modulus, self.modulus_pn, ZZ)
        reached = 1
        while True:
            value = self._evaluate(self.modulus, y)
            if value.is_zero():
                break
            if reached >= self.precision:
                raise LiftFailed(f"Frobenius did not converge for p={self.p} f={self.f}")
            y = y - value * self._evaluate(derivative, y).inverse()
            reached *= 2
        return y._dense()

    def _evaluate(self, poly, y: "OElement") -> "OElement":
        return self._wrap(gf_compose_mod(poly, y._dense(), self.modulus, self.modulus_pn, ZZ))

    def _wrap(self, poly) -> "OElement":
        return OElement(self, from_dense(gf_rem(poly, self.modulus, self.modulus_pn, ZZ), self.f))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnramifiedTower):
            return False
        return (self.p, self.f, self.precision) == (other.p, other.f, other.precision)

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.precision))

    def __repr__(self) -> str:
        return f"UnramifiedTower(p={self.p}, f={self.f}, N={self.precision})"

    def element(self, coeffs) -> "OElement":
        return OElement(self, coeffs)

    def scalar(self, a: int) -> "OElement":
        return OElement(self, [a] + [0] * (self.f - 1))

    def zero(self) -> "OElement":
        return self.scalar(0)

    def one(self) -> "OElement":
        return self.scalar(1)

    def gen(self) -> "OElement":
        return self._wrap([1, 0])

    def uniformizer(self) -> "OElement":
        return self.scalar(self.p)

    def lift(self, residue: FFElement) -> "OElement":
        """The lift with coefficients in [0, p)."""
        if residue.field != self.residue_field:
            raise ValueError("Residue belongs to another field")
        return OElement(self, residue.coeffs)

    def teichmuller(self, residue: FFElement) -> "OElement":
        """ω(a): the unique (p^f - 1)-th root of unity (or zero) reducing to a."""
        if residue.is_zero():
            return self.zero()
        return self.lift(residue) ** (self.residue_field.order ** (self.precision - 1))

    def base_units(self) -> list:
        """The units of Z/p^N."""
        return [a for a in range(1, self.modulus_pn) if a % self.p]

    def serialize(self) -> dict:
        return {"p": self.p, "f": self.f, "N": self.precision}


class OElement:
    """An element of O_L / p^N."""

    def __init__(self, tower: UnramifiedTower, coeffs):
        coeffs = [int(c) % tower.modulus_pn for c in coeffs]
        if len(coeffs) != tower.f:
            raise ValueError(f"Expected {tower.f} coefficients, got {len(coeffs)}")
        self.tower = tower
        self.coeffs = tuple(coeffs)

    def _dense(self) -> list:
        return to_dense(self.coeffs)

    def _check(self, other: "OElement"):
        if other.tower != self.tower:
            raise ValueError("Elements of different towers")

    def __add__(self, other: "OElement") -> "OElement":
        self._check(other)
        return self.tower._wrap(gf_add(self._dense(), other._dense(), self.tower.modulus_pn, ZZ))

    def __sub__(self, other: "OElement") -> "OElement":
        self._check(other)
        return self.tower._wrap(gf_sub(self._dense(), other._dense(), self.tower.modulus_pn, ZZ))

    def __neg__(self) -> "OElement":
        return self.tower.zero() - self

    def __mul__(self, other) -> "OElement":
        if isinstance(other, int):
            return OElement(self.tower, [c * other for c in self.coeffs])
        self._check(other)
        return self.tower._wrap(gf_mul(self._dense(), other._dense(), self.tower.modulus_pn, ZZ))

    def __rmul__(self, k: int) -> "OElement":
        return self * k

    def __pow__(self, n: int) -> "OElement":
        tower = self.tower
        if n < 0:
            if not self.is_unit():
                raise NotAUnit(f"{self!r} is not invertible")
            n %= tower.unit_count
        return tower._wrap(gf_pow_mod(self._dense(), n, tower.modulus, tower.modulus_pn, ZZ))

    def inverse(self) -> "OElement":
        return self ** (-1)

    def frobenius(self, k: int = 1) -> "OElement":
        """σ^k, by substituting σ(x) into the coefficient polynomial k times."""
        tower = self.tower
        image = OElement(tower, from_dense(tower.frobenius_image, tower.f))
        result = self
        for _ in range(k % tower.f):
            result = tower._evaluate(result._dense(), image)
        return result

    @property
    def valuation(self) -> int:
        """min v_p of the coefficients; N for zero."""
        tower = self.tower
        return min(_valuation(c, tower.p, tower.precision) for c in self.coeffs)

    def is_unit(self) -> bool:
        return self.valuation == 0

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_base(self) -> bool:
        """Lies in Z/p^N: every coefficient past the constant is zero."""
        return not any(self.coeffs[1:])

    def residue(self) -> FFElement:
        return FFElement(self.tower.residue_field, self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OElement):
            return False
        return self.tower == other.tower and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.tower, self.coeffs))

    def __repr__(self) -> str:
        return f"OElement({list(self.coeffs)} mod {self.tower.p}^{self.tower.precision})"

    def serialize(self) -> list:
        return [str(c) for c in self.coeffs]


def build_tower(p: int, f: int, precision: int) -> UnramifiedTower:
    return UnramifiedTower(p, f, precision)


def norm_tower(e: OElement) -> OElement:
    """Nm_{L/K}(e) = ∏_{i<f} σ^i(e), an element of Z/p^N."""
    result = e.tower.one()
    conjugate = e
    for _ in range(e.tower.f):
        result = result * conjugate
        conjugate = conjugate.frobenius()
    return result


def _trace_preimage(field: FiniteField, c: int) -> FFElement:
    """Some a in the residue field with Tr(a) = c in F_p."""
    for b in field.basis():
        t = ff_trace(b).coeffs[0]
        if t:
            return b * (c * pow(t, -1, field.p))
    raise LiftFailed(f"Trace of {field!r} vanishes on the basis")


def norm_lift(u: int, tower: UnramifiedTower) -> OElement:
    """
    A unit v of O_L / p^N with Nm(v) = u.

    The residue equation is solved in the residue field; afterwards each
    layer 1 + p^m·O of the filtration is corrected by 1 + a·p^m with
    Tr(a) equal to the leading digit of the remaining defect.
    Raises:
        NotAUnit: If u is divisible by p.
    """
    p = tower.p
    target = tower.scalar(u)
    if not target.is_unit():
        raise NotAUnit(f"{u} is not a unit modulo {p}^{tower.precision}")
    field = tower.residue_field
    wanted = field.scalar(u)
    residue = next((e for e in field.units() if ff_norm(e) == wanted), None)
    if residue is None:
        raise LiftFailed(f"No residue norm preimage of {u}")
    v = tower.lift(residue)
    for m in range(1, tower.precision):
        defect = target * norm_tower(v).inverse()
        digit = (defect.coeffs[0] - 1) // p**m % p
        if digit:
            a = _trace_preimage(field, digit)
            v = v * (tower.one() + tower.lift(a) * p**m)
    if norm_tower(v) != target:
        raise LiftFailed(f"Norm lift of {u} did not converge")
    return v
