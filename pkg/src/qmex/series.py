"""Truncated power series in q with exact integer coefficients.

A :class:`Series` of order ``N`` stores the coefficients of ``q^0 .. q^N``.
Binary operations between series of different orders truncate to the
smaller order.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence


class Series:
    """Immutable power series ``sum c_k q^k + O(q^(N+1))``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int]):
        c = tuple(int(x) for x in coeffs)
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self._c = c

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Series":
        obj = object.__new__(cls)
        obj._c = coeffs
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        _check_order(order)
        return cls._raw((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, c: int, k: int, order: int) -> "Series":
        """``c * q^k`` truncated at ``order``; zero when ``k > order``."""
        _check_order(order)
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        out = [0] * (order + 1)
        if k <= order:
            out[k] = int(c)
        return cls._raw(tuple(out))

    # -- accessors --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside 0..{self.order}")
        return self._c[n]

    __getitem__ = coefficient

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, or None for zero."""
        for i, x in enumerate(self._c):
            if x:
                return i
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Series.monomial(other, 0, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order) + 1
        a, b = self._c, other._c
        return Series._raw(tuple(a[i] + b[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._raw(tuple(-x for x in self._c))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Series.monomial(other, 0, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order) + 1
        a, b = self._c, other._c
        return Series._raw(tuple(a[i] - b[i] for i in range(n)))

    def __rsub__(self, other):
        if isinstance(other, int):
            return Series.monomial(other, 0, self.order) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a = [(i, x) for i, x in enumerate(self._c[: n + 1]) if x]
        b = [(j, y) for j, y in enumerate(other._c[: n + 1]) if y]
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (n + 1)
        for i, x in a:
            lim = n - i
            for j, y in b:
                if j > lim:
                    break
                out[i + j] += x * y
        return Series._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.invert() ** (-e)
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "Series":
        c = int(c)
        return Series._raw(tuple(c * x for x in self._c))

    def shift(self, k: int) -> "Series":
        """Multiply by ``q^k`` (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        n = self.order + 1
        if k >= n:
            return Series.zero(self.order)
        return Series._raw((0,) * k + self._c[: n - k])

    def truncate(self, order: int) -> "Series":
        _check_order(order)
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series._raw(self._c[: order + 1])

    def invert(self) -> "Series":
        """Multiplicative inverse; requires constant term +1 or -1."""
        u = self._c[0]
        if u not in (1, -1):
            raise ValueError(
                f"not invertible at this truncation: constant term {u} is not a unit"
            )
        n = self.order
        a = [(i, x) for i, x in enumerate(self._c) if x and i > 0]
        out = [0] * (n + 1)
        out[0] = u
        for k in range(1, n + 1):
            acc = 0
            for i, x in a:
                if i > k:
                    break
                acc += x * out[k - i]
            out[k] = -u * acc
        return Series._raw(tuple(out))

    # -- sparse factor helpers (O(N) each) -------------------------------

    def mul_binomial(self, c: int, k: int) -> "Series":
        """Multiply by ``1 + c q^k`` with ``k >= 1``."""
        if k < 1:
            raise ValueError("binomial factor needs a positive exponent")
        s = self._c
        if k > self.order or c == 0:
            return self
        out = list(s)
        for i in range(k, len(s)):
            out[i] += c * s[i - k]
        return Series._raw(tuple(out))

    def div_binomial(self, c: int, k: int) -> "Series":
        """Divide by ``1 + c q^k`` with ``k >= 1``."""
        if k < 1:
            raise ValueError("binomial factor needs a positive exponent")
        if k > self.order or c == 0:
            return self
        out = list(self._c)
        for i in range(k, len(out)):
            out[i] -= c * out[i - k]
        return Series._raw(tuple(out))

    # -- substitutions ----------------------------------------------------

    def substitute_q_power(self, m: int) -> "Series":
        """``f(q) -> f(q^m)`` at the same order."""
        if m < 1:
            raise ValueError(f"substitution power must be >= 1, got {m}")
        n = self.order
        out = [0] * (n + 1)
        for k in range(n // m + 1):
            out[m * k] = self._c[k]
        return Series._raw(tuple(out))

    def alternate_sign(self) -> "Series":
        """``f(q) -> f(-q)``."""
        return Series._raw(tuple(-x if i & 1 else x for i, x in enumerate(self._c)))

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Series({list(self._c)!r})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        tail = f"O(q^{self.order + 1})"
        if not terms:
            return tail
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        rest = "".join(f" {s} {b}" for s, b in terms[1:])
        return f"{head}{rest} + {tail}"


class Comparison(NamedTuple):
    order: int
    mismatch: int | None

    @property
    def agree(self) -> bool:
        return self.mismatch is None


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"truncation order must be non-negative, got {order}")


def from_coeffs(coeffs: Sequence[int]) -> Series:
    return Series(coeffs)


def monomial(c: int, k: int, order: int) -> Series:
    return Series.monomial(c, k, order)


def add(a: Series, b: Series) -> Series:
    return a + b


def sub(a: Series, b: Series) -> Series:
    return a - b


def mul(a: Series, b: Series) -> Series:
    return a * b


def invert(a: Series) -> Series:
    return a.invert()


def substitute_q_power(a: Series, m: int) -> Series:
    return a.substitute_q_power(m)


def alternate_sign(a: Series) -> Series:
    return a.alternate_sign()


def equal_up_to(a: Series, b: Series) -> Comparison:
    """Compare through ``min(a.order, b.order)``; report the first mismatch."""
    n = min(a.order, b.order)
    for k in range(n + 1):
        if a._c[k] != b._c[k]:
            return Comparison(n, k)
    return Comparison(n, None)
