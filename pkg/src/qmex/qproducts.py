"""q-Pochhammer symbols, Gaussian binomials and 2phi1 with monomial parameters.

All parameters are monomials ``±q^k`` (or 0). Products and sums are computed
q-adically: a factor ``1 - a q^j`` with exponent beyond the truncation order
is identically 1 and is skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .series import Series


@dataclass(frozen=True)
class Monomial:
    """The parameter value ``sign * q^exponent``; ``sign == 0`` means 0."""

    sign: int
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.exponent < 0:
            raise ValueError(f"negative exponent {self.exponent} is not supported")
        if self.sign == 0 and self.exponent != 0:
            raise ValueError("the zero monomial has exponent 0")

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse ``0``, ``1``, ``-1``, ``q``, ``-q``, ``q^3``, ``-q^2``."""
        t = text.strip().replace(" ", "")
        if t in ("0", "+0", "-0"):
            return ZERO
        m = re.fullmatch(r"([+-]?)(?:(1)|q(?:\^(\d+))?)", t)
        if not m:
            raise ValueError(f"not a monomial: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2):
            return cls(sign, 0)
        return cls(sign, int(m.group(3)) if m.group(3) else 1)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.is_zero or other.is_zero:
            return ZERO
        return Monomial(self.sign * other.sign, self.exponent + other.exponent)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero monomial")
        if self.is_zero:
            return ZERO
        return Monomial(self.sign * other.sign, self.exponent - other.exponent)

    def __pow__(self, n: int) -> "Monomial":
        if n == 0:
            return Monomial(1, 0)
        if self.is_zero:
            return ZERO
        return Monomial(self.sign**n, self.exponent * n)

    def series(self, order: int) -> Series:
        return Series.monomial(self.sign, self.exponent, order)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        s = "-" if self.sign < 0 else ""
        if self.exponent == 0:
            return s + "1"
        if self.exponent == 1:
            return s + "q"
        return f"{s}q^{self.exponent}"


ZERO = Monomial(0, 0)
Q = Monomial(1, 1)


def _as_monomial(a) -> Monomial:
    if isinstance(a, Monomial):
        return a
    if isinstance(a, str):
        return Monomial.parse(a)
    if a == 0:
        return ZERO
    raise TypeError(f"expected a Monomial, got {a!r}")


def _factor_constant(a: Monomial, j: int, base: int) -> tuple[int, int]:
    """Return ``(c, e)`` so that the factor ``1 - a q^(base*j)`` is ``1 + c q^e``."""
    return -a.sign, a.exponent + base * j


def pochhammer_mul(s: Series, a, base: int, n: int) -> Series:
    """``s * (a; q^base)_n``."""
    a = _as_monomial(a)
    if a.is_zero or n <= 0:
        return s
    for j in range(n):
        c, e = _factor_constant(a, j, base)
        if e == 0:
            # 1 - a with a = ±1
            s = s.scale(1 + c)
        elif e > s.order:
            break
        else:
            s = s.mul_binomial(c, e)
    return s


def pochhammer_div(s: Series, a, base: int, n: int) -> Series:
    """``s / (a; q^base)_n``; every factor must be a unit."""
    a = _as_monomial(a)
    if a.is_zero or n <= 0:
        return s
    for j in range(n):
        c, e = _factor_constant(a, j, base)
        if e == 0:
            raise ValueError(f"not invertible at this truncation: factor 1 - ({a})")
        if e > s.order:
            break
        s = s.div_binomial(c, e)
    return s


def pochhammer_finite(a, base: int, n: int, order: int) -> Series:
    """``(a; q^base)_n = prod_{k<n} (1 - a q^(base*k))`` truncated at ``order``."""
    if n < 0:
        raise ValueError(f"negative length {n}")
    if base < 1:
        raise ValueError(f"base exponent must be >= 1, got {base}")
    return pochhammer_mul(Series.one(order), a, base, n)


def _infinite_length(a: Monomial, base: int, order: int) -> int:
    # factors with a.exponent + base*k > order are 1 mod q^(order+1)
    if a.exponent > order:
        return 0
    return (order - a.exponent) // base + 1


def _check_infinite(a: Monomial, base: int) -> None:
    if base < 1:
        raise ValueError(f"base exponent must be >= 1, got {base}")
    if a.sign == 1 and a.exponent == 0:
        raise ValueError("(1; q)_inf vanishes identically; parameter a = 1 is invalid")


def pochhammer_infinite(a, base: int, order: int) -> Series:
    """``(a; q^base)_inf`` truncated at ``order``."""
    a = _as_monomial(a)
    _check_infinite(a, base)
    if a.is_zero:
        return Series.one(order)
    return pochhammer_mul(Series.one(order), a, base, _infinite_length(a, base, order))


def pochhammer_infinite_div(s: Series, a, base: int) -> Series:
    """``s / (a; q^base)_inf``."""
    a = _as_monomial(a)
    _check_infinite(a, base)
    if a.is_zero:
        return s
    return pochhammer_div(s, a, base, _infinite_length(a, base, s.order))


def _poly_div_one_minus(poly: list, k: int) -> list:
    """Exact division of a polynomial by ``1 - q^k``; raises if inexact."""
    out = list(poly)
    for i in range(k, len(out)):
        out[i] += out[i - k]
    # the quotient has degree len-1-k; the top k entries must vanish
    tail = out[len(out) - k:] if k <= len(out) else out
    if any(tail):
        raise ArithmeticError(f"polynomial not divisible by 1 - q^{k}")
    return out[: len(out) - k]


def qbinomial(m: int, n: int, order: int, *, truncate: bool = False) -> Series:
    """Gaussian binomial ``[m, n]_q``; zero unless ``m >= n >= 0``.

    The result is a polynomial of degree ``n(m-n)``. Unless ``truncate`` is
    set, an order below that degree is an error rather than a silent cut.
    """
    if order < 0:
        raise ValueError(f"truncation order must be non-negative, got {order}")
    if not m >= n >= 0:
        return Series.zero(order)
    n = min(n, m - n)
    degree = n * (m - n)
    if degree > order and not truncate:
        raise ValueError(
            f"order {order} is below the degree {degree} of [{m} {n}]_q"
        )
    if truncate and degree > order:
        s = Series.one(order)
        for i in range(1, n + 1):
            s = s.mul_binomial(-1, m - n + i).div_binomial(-1, i)
        return s
    # [m-n+i, i] = [m-n+i-1, i-1] (1 - q^(m-n+i)) / (1 - q^i), kept as exact polynomials
    poly = [1]
    for i in range(1, n + 1):
        k = m - n + i
        grown = poly + [0] * k
        for j in range(len(poly)):
            grown[j + k] -= poly[j]
        poly = _poly_div_one_minus(grown, i)
    poly = _normalize(poly)
    return Series(poly + [0] * (order + 1 - len(poly)))


def _normalize(poly: list) -> list:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def _check_argument(z: Monomial, label: str) -> None:
    if not z.is_zero and z.exponent < 1:
        raise ValueError(
            f"unsupported parameter; add a bespoke builder ({label}={z} is not q-adically small)"
        )


def phi_2_1(a, b, c, z, order: int, terms: int | None = None, base: int = 1) -> Series:
    """``2phi1(a, b; c; q^base, z)`` truncated at ``order``.

    ``z`` must be 0 or have positive exponent; ``c`` must be 0 or have
    positive exponent so every denominator factor is a unit.
    """
    a, b, c, z = (_as_monomial(x) for x in (a, b, c, z))
    _check_argument(z, "z")
    if not c.is_zero and c.exponent < 1:
        raise ValueError(f"unsupported parameter; add a bespoke builder (c={c})")
    if base < 1:
        raise ValueError(f"base exponent must be >= 1, got {base}")
    if z.is_zero:
        return Series.one(order)
    if terms is None:
        # term k has valuation >= k * exponent(z)
        terms = order // z.exponent
    total = Series.zero(order)
    ratio = Series.one(order)  # (a)_k (b)_k / ((q)_k (c)_k), built incrementally
    qb = Monomial(1, base)
    for k in range(terms + 1):
        if k:
            ratio = pochhammer_mul(ratio, a * Monomial(1, base * (k - 1)), base, 1)
            ratio = pochhammer_mul(ratio, b * Monomial(1, base * (k - 1)), base, 1)
            ratio = pochhammer_div(ratio, qb * Monomial(1, base * (k - 1)), base, 1)
            ratio = pochhammer_div(ratio, c * Monomial(1, base * (k - 1)), base, 1)
        zk = z**k
        if zk.exponent > order:
            break
        total = total + ratio.shift(zk.exponent).scale(zk.sign)
    return total


def phi_1_0(a, z, order: int, base: int = 1) -> Series:
    """``1phi0(a; -; q^base, z) = sum (a)_k z^k / (q)_k``."""
    return phi_2_1(a, ZERO, ZERO, z, order, base=base)


def qbinomial_theorem_rhs(a, z, order: int, base: int = 1) -> Series:
    """``(az)_inf / (z)_inf`` in base ``q^base``."""
    a, z = _as_monomial(a), _as_monomial(z)
    _check_argument(z, "z")
    s = pochhammer_infinite(a * z, base, order)
    return pochhammer_infinite_div(s, z, base)


def heine_rhs(a, b, c, z, order: int, base: int = 1) -> Series:
    """Right side of Heine's transformation:

    ``(b)_inf (az)_inf / ((c)_inf (z)_inf) * 2phi1(c/b, z; az; q^base, b)``.
    """
    a, b, c, z = (_as_monomial(x) for x in (a, b, c, z))
    _check_argument(z, "z")
    if b.is_zero or b.exponent < 1:
        raise ValueError(f"unsupported parameter; add a bespoke builder (b={b})")
    if not c.is_zero and c.exponent < b.exponent:
        raise ValueError(f"unsupported parameter; add a bespoke builder (c/b has negative exponent)")
    az = a * z
    inner = phi_2_1(c / b, z, az, b, order, base=base)
    s = pochhammer_infinite(b, base, order) * pochhammer_infinite(az, base, order)
    s = pochhammer_infinite_div(s, c, base)
    s = pochhammer_infinite_div(s, z, base)
    return s * inner
