"""Builders for the named q-series, each a pure function of the truncation order.

Every infinite sum stops once its summands' valuation exceeds the order;
the valuation bound used is noted next to each loop. Builders are looked up
by stable string ids through :func:`build`.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable

from .qproducts import (
    Monomial,
    pochhammer_infinite,
    pochhammer_infinite_div,
    qbinomial,
)
from .series import Series

Q = Monomial(1, 1)
MINUS_Q = Monomial(-1, 1)


def _tri(n: int) -> int:
    return n * (n + 1) // 2


# -- products ------------------------------------------------------------------

def q_inf(order: int) -> Series:
    """(q; q)_inf"""
    return pochhammer_infinite(Q, 1, order)


def p_bar(order: int) -> Series:
    """Overpartitions: (-q)_inf / (q)_inf."""
    return pochhammer_infinite_div(pochhammer_infinite(MINUS_Q, 1, order), Q, 1)


def p_bar_odd(order: int) -> Series:
    """Overpartitions into odd parts: (-q; q^2)_inf / (q; q^2)_inf."""
    return pochhammer_infinite_div(pochhammer_infinite(MINUS_Q, 2, order), Q, 2)


# -- R(q) and companions -------------------------------------------------------

def r_rep1(order: int) -> Series:
    total = Series.zero(order)
    d = Series.one(order)  # 1/(-q)_n
    n = 0
    while _tri(n) <= order:  # valuation n(n+1)/2
        if n:
            d = d.div_binomial(1, n)
        total += d.shift(_tri(n))
        n += 1
    return total


def r_rep2(order: int) -> Series:
    total = Series.one(order)
    p = Series.one(order)  # (q)_{n-1}
    for n in range(1, order + 1):  # valuation n
        if n >= 2:
            p = p.mul_binomial(-1, n - 1)
        term = p.shift(n)
        total = total - term if n % 2 == 0 else total + term
    return total


def _tail_weights(order: int) -> list:
    """[q^n / ((q)_n (1 + q^n)) for n = 0..order]; the n = 0 entry is 1/2
    and is left as None for the caller to fold."""
    out = [None]
    d = Series.one(order)
    for n in range(1, order + 1):  # valuation n
        d = d.div_binomial(-1, n)
        out.append(d.div_binomial(1, n).shift(n))
    return out


def r_rep3(order: int) -> Series:
    inner = Series.one(order)
    for w in _tail_weights(order)[1:]:
        inner += w.scale(2)
    return q_inf(order) * inner


def f_companion(order: int) -> Series:
    """F(q) = sum_{n>=1} (-1)^n q^{n^2} / (q; q^2)_n."""
    total = Series.zero(order)
    d = Series.one(order)
    n = 1
    while n * n <= order:
        d = d.div_binomial(-1, 2 * n - 1)
        term = d.shift(n * n)
        total = total - term if n % 2 else total + term
        n += 1
    return total


def f_companion_neg(order: int) -> Series:
    """F(-q) written directly: sum_{n>=1} q^{n^2} / (-q; q^2)_n."""
    total = Series.zero(order)
    d = Series.one(order)
    n = 1
    while n * n <= order:
        d = d.div_binomial(1, 2 * n - 1)
        total += d.shift(n * n)
        n += 1
    return total


def f0(order: int) -> Series:
    """Fifth-order mock theta f0(q) = sum q^{n^2} / (-q)_n."""
    total = Series.zero(order)
    d = Series.one(order)
    n = 0
    while n * n <= order:
        if n:
            d = d.div_binomial(1, n)
        total += d.shift(n * n)
        n += 1
    return total


def big_f1(order: int) -> Series:
    """Fifth-order mock theta F1(q) = sum q^{2n^2+2n} / (q; q^2)_{n+1}."""
    total = Series.zero(order)
    d = Series.one(order)
    n = 0
    while 2 * n * n + 2 * n <= order:
        d = d.div_binomial(-1, 2 * n + 1)
        total += d.shift(2 * n * n + 2 * n)
        n += 1
    return total


# -- tails, q-harmonic numbers, divisor series ------------------------------------

def _lambert_term(coeffs: list, i: int, sign: int) -> None:
    """Add q^i / (1 - sign q^i) into ``coeffs`` in place."""
    c = 1
    for e in range(i, len(coeffs), i):
        coeffs[e] += c
        c *= sign


def g_tail(n: int, order: int) -> Series:
    """G_n(q) = sum_{i>n} q^i / (1 + q^i)."""
    if n < 0:
        raise ValueError(f"tail index must be non-negative, got {n}")
    c = [0] * (order + 1)
    for i in range(max(n + 1, 1), order + 1):
        _lambert_term(c, i, -1)
    return Series(c)


def h_qharm(n: int, order: int) -> Series:
    """H_n(q) = sum_{i=1..n} q^i / (1 - q^i)."""
    if n < 0:
        raise ValueError(f"harmonic index must be non-negative, got {n}")
    c = [0] * (order + 1)
    for i in range(1, min(n, order) + 1):
        _lambert_term(c, i, 1)
    return Series(c)


def h_qharm_au(n: int, order: int) -> Series:
    """H_n(q) via sum_{i=1..n} (-1)^{i-1} q^{i(i+1)/2} [n i]_q / (1 - q^i)."""
    if n < 0:
        raise ValueError(f"harmonic index must be non-negative, got {n}")
    total = Series.zero(order)
    for i in range(1, n + 1):
        if _tri(i) > order:
            break
        term = qbinomial(n, i, order, truncate=True).div_binomial(-1, i).shift(_tri(i))
        total = total + term if i % 2 else total - term
    return total


def divisor_lambert(order: int) -> Series:
    return h_qharm(order, order)


def divisor_signed(order: int) -> Series:
    total = Series.zero(order)
    d = Series.one(order)  # 1/(q)_i
    i = 1
    while _tri(i) <= order:
        d = d.div_binomial(-1, i)
        term = d.div_binomial(-1, i).shift(_tri(i))
        total = total + term if i % 2 else total - term
        i += 1
    return total


# -- z-derivative endpoints ------------------------------------------------------

def _weighted_sum(order: int, exponent: Callable[[int], int], start: int, odd: bool) -> Series:
    """sum_{n>=start} n q^{exponent(n)} / (-q; q^b)_n with b = 2 if odd else 1.

    ``exponent`` must be non-decreasing in n.
    """
    total = Series.zero(order)
    d = Series.one(order)
    n = 0
    while True:
        if n:
            d = d.div_binomial(1, 2 * n - 1 if odd else n)
        if n >= start:
            e = exponent(n)
            if e > order:
                break
            total += d.shift(e).scale(n)
        n += 1
    return total


def a_lhs(order: int) -> Series:
    return _weighted_sum(order, lambda n: n * (n - 1) // 2, 1, odd=False)


def b_lhs(order: int) -> Series:
    return _weighted_sum(order, _tri, 1, odd=False)


def b_rhs(order: int) -> Series:
    """2 (q)_inf sum_{n>=0} q^n G_n / ((q)_n (1 + q^n)), the n = 0 half folded."""
    inner = g_tail(0, order)
    for n, w in enumerate(_tail_weights(order)):
        if n == 0:
            continue
        if 2 * n + 1 > order:  # valuation n + (n + 1)
            break
        inner += (w * g_tail(n, order)).scale(2)
    return q_inf(order) * inner


def c_lhs(order: int) -> Series:
    return _weighted_sum(order, lambda n: (n - 1) ** 2, 1, odd=True)


def c_rhs(order: int) -> Series:
    return 1 + f_companion(order).alternate_sign()


def c_mid(order: int) -> Series:
    """1 - sum_{n>=1} (-1)^n (q^2; q^2)_{n-1} q^n."""
    total = Series.one(order)
    p = Series.one(order)
    for n in range(1, order + 1):
        if n >= 2:
            p = p.mul_binomial(-1, 2 * (n - 1))
        term = p.shift(n)
        total = total + term if n % 2 else total - term
    return total


def d_lhs(order: int) -> Series:
    return _weighted_sum(order, lambda n: n * n, 1, odd=True)


def _harmonic_tail_sum(order: int) -> Series:
    """q sum_{n>=1} (-1)^n (q^2; q^2)_n q^n H_n(q^2)."""
    total = Series.zero(order)
    p = Series.one(order)
    h = Series.zero(order)
    n = 1
    while n + 3 <= order:  # valuation 1 + n + 2
        p = p.mul_binomial(-1, 2 * n)
        hc = list(h.coeffs)
        _lambert_term(hc, 2 * n, 1)
        h = Series(hc)
        term = (p * h).shift(n + 1)
        total = total - term if n % 2 else total + term
        n += 1
    return total


def d_rhs(order: int) -> Series:
    return f_companion(order).alternate_sign() - _harmonic_tail_sum(order)


# -- theorem right-hand sides -------------------------------------------------

def thm1_rhs(order: int) -> Series:
    return p_bar(order) * (2 - r_rep1(order))


def thm2_rhs(order: int) -> Series:
    return p_bar_odd(order) * (1 - f_companion(order).alternate_sign())


def thm3_rhs(order: int) -> Series:
    return p_bar(order) * (f0(order) - 1)


def thm4_rhs(order: int) -> Series:
    return (p_bar_odd(order) * big_f1(order).alternate_sign()).shift(1)


def thm5_rhs(order: int) -> Series:
    return p_bar(order) * (r_rep1(order) - b_rhs(order))


def thm6_rhs(order: int) -> Series:
    return p_bar_odd(order) * (1 + _harmonic_tail_sum(order))


# -- combinatorial-side builders --------------------------------------------------

def _mex_product(order: int, odd: bool, exponent: Callable[[int], int],
                 exclude_n: bool, weighted: bool) -> Series:
    """sum_{n>=1} w q^{exponent(n)} prod_{m>n}(1 + q^{v_m}) / prod_m' (1 - q^{v_m})

    with v_m = 2m - 1 if odd else m, the denominator skipping m = n when
    ``exclude_n``, and w = n if ``weighted`` else 1.
    """
    def v(m: int) -> int:
        return 2 * m - 1 if odd else m

    total = Series.zero(order)
    n = 1
    while exponent(n) <= order:
        s = Series.monomial(n if weighted else 1, exponent(n), order)
        m = n + 1
        while v(m) <= order:
            s = s.mul_binomial(1, v(m))
            m += 1
        m = 1
        while v(m) <= order:
            if not (exclude_n and m == n):
                s = s.div_binomial(-1, v(m))
            m += 1
        total += s
        n += 1
    return total


def _sum_side(order: int, odd: bool, exponent: Callable[[int], int],
              numerator: Callable[[int], int] | None, weighted: bool) -> Series:
    """prefactor * sum_{n>=1} w q^{exponent(n)} (1 - q^{numerator(n)}) / (-q; q^b)_n."""
    total = Series.zero(order)
    d = Series.one(order)
    n = 1
    while exponent(n) <= order:
        d = d.div_binomial(1, 2 * n - 1 if odd else n)
        t = d.mul_binomial(-1, numerator(n)) if numerator else d
        total += t.shift(exponent(n)).scale(n if weighted else 1)
        n += 1
    return (p_bar_odd(order) if odd else p_bar(order)) * total


def _tri0(n: int) -> int:
    return n * (n - 1) // 2


def thm1_product(order: int) -> Series:
    return _mex_product(order, False, _tri0, exclude_n=True, weighted=False)


def thm1_sum(order: int) -> Series:
    return _sum_side(order, False, _tri0, lambda n: n, weighted=False)


def thm2_product(order: int) -> Series:
    return _mex_product(order, True, lambda n: (n - 1) ** 2, exclude_n=True, weighted=False)


def thm2_sum(order: int) -> Series:
    return _sum_side(order, True, lambda n: (n - 1) ** 2, lambda n: 2 * n - 1, weighted=False)


def thm3_product(order: int) -> Series:
    return _mex_product(order, False, lambda n: n * n, exclude_n=False, weighted=False)


def thm3_sum(order: int) -> Series:
    return _sum_side(order, False, lambda n: n * n, None, weighted=False)


def thm4_product(order: int) -> Series:
    return _mex_product(order, True, lambda n: 2 * n * n - 2 * n + 1, exclude_n=False, weighted=False)


def thm4_sum(order: int) -> Series:
    return _sum_side(order, True, lambda n: 2 * n * n - 2 * n + 1, None, weighted=False)


def thm5_product(order: int) -> Series:
    return _mex_product(order, False, _tri0, exclude_n=True, weighted=True)


def thm5_sum(order: int) -> Series:
    return _sum_side(order, False, _tri0, lambda n: n, weighted=True)


def thm6_product(order: int) -> Series:
    return _mex_product(order, True, lambda n: (n - 1) ** 2, exclude_n=True, weighted=True)


def thm6_sum(order: int) -> Series:
    return _sum_side(order, True, lambda n: (n - 1) ** 2, lambda n: 2 * n - 1, weighted=True)


# -- parameterized toolkit series -----------------------------------------------

def gasrah_lhs(z: Monomial, order: int, base: int = 1) -> Series:
    """sum z^n q^{b n(n-1)/2} / (-z q^b; q^b)_n in base q^b; equals 1 + z."""
    if z.is_zero:
        return Series.one(order)
    total = Series.zero(order)
    d = Series.one(order)
    n = 0
    while True:
        # valuation z.exponent*n + b*n(n-1)/2, non-decreasing in n
        e = z.exponent * n + base * _tri0(n)
        if e > order:
            break
        if n:
            d = d.div_binomial(z.sign, z.exponent + base * n)
        total += d.shift(e).scale(z.sign**n)
        n += 1
    return total


def _check_gupta(c: Monomial, t: Monomial) -> None:
    if c.sign == 1 and c.exponent == 0:
        raise ValueError("gupta builders reject c = 1")
    if t.is_zero or t.exponent < 1:
        raise ValueError(f"t must have positive exponent, got {t}")


def gupta_lhs(c: Monomial, t: Monomial, order: int) -> Series:
    """sum_{n>=0} c^n ((t)_n - (t)_inf)."""
    _check_gupta(c, t)
    t_inf = pochhammer_infinite(t, 1, order)
    total = Series.zero(order)
    tn = Series.one(order)
    n = 0
    # (t)_n - (t)_inf has valuation >= exponent(t) + n
    while t.exponent + n + (c.exponent * n) <= order:
        if n:
            tn = tn.mul_binomial(-t.sign, t.exponent + n - 1)
        cn = c**n
        total += (tn - t_inf).shift(cn.exponent).scale(cn.sign)
        if c.is_zero:
            break
        n += 1
    return total


def gupta_rhs(c: Monomial, t: Monomial, order: int) -> Series:
    """(t)_inf sum_{n>=1} t^n / ((q)_n (1 - c q^n))."""
    _check_gupta(c, t)
    total = Series.zero(order)
    d = Series.one(order)
    n = 1
    while t.exponent * n <= order:
        d = d.div_binomial(-1, n)
        term = d if c.is_zero else d.div_binomial(-c.sign, c.exponent + n)
        tn = t**n
        total += term.shift(tn.exponent).scale(tn.sign)
        n += 1
    return pochhammer_infinite(t, 1, order) * total


# -- id registry --------------------------------------------------------------

_FIXED: dict[str, Callable[[int], Series]] = {
    "P.bar": p_bar,
    "P.bar.odd": p_bar_odd,
    "q.inf": q_inf,
    "R.rep1": r_rep1,
    "R.rep2": r_rep2,
    "R.rep3": r_rep3,
    "F": f_companion,
    "F.neg": f_companion_neg,
    "f0": f0,
    "F1": big_f1,
    "divisor.lambert": divisor_lambert,
    "divisor.signed": divisor_signed,
    "thm1.rhs": thm1_rhs,
    "thm2.rhs": thm2_rhs,
    "thm3.rhs": thm3_rhs,
    "thm4.rhs": thm4_rhs,
    "thm5.rhs": thm5_rhs,
    "thm6.rhs": thm6_rhs,
    "thm1.product": thm1_product,
    "thm2.product": thm2_product,
    "thm3.product": thm3_product,
    "thm4.product": thm4_product,
    "thm5.product": thm5_product,
    "thm6.product": thm6_product,
    "thm1.sum": thm1_sum,
    "thm2.sum": thm2_sum,
    "thm3.sum": thm3_sum,
    "thm4.sum": thm4_sum,
    "thm5.sum": thm5_sum,
    "thm6.sum": thm6_sum,
    "A.lhs": a_lhs,
    "B.lhs": b_lhs,
    "B.rhs": b_rhs,
    "C.lhs": c_lhs,
    "C.rhs": c_rhs,
    "C.mid": c_mid,
    "D.lhs": d_lhs,
    "D.rhs": d_rhs,
}

_INDEXED = {
    "G.tail": g_tail,
    "H.qharm": h_qharm,
    "H.qharm.AU": h_qharm_au,
}

_PARAMETERIZED = ("gasrah.lhs", "gupta.lhs", "gupta.rhs")


def _parse_params(text: str) -> dict:
    params = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise KeyError(f"malformed parameter {item!r}")
        params[key.strip()] = value.strip()
    return params


def resolve(series_id: str) -> Callable[[int], Series]:
    """Return the builder ``order -> Series`` for a stable id.

    Ids: the fixed names in ``FIXED_IDS``; ``G.tail.<n>``, ``H.qharm.<n>``,
    ``H.qharm.AU.<n>``; ``gasrah.lhs.z=<mono>[,base=<b>]``;
    ``gupta.lhs.c=<mono>,t=<mono>`` and ``gupta.rhs.…``.
    """
    if series_id in _FIXED:
        return _FIXED[series_id]
    m = re.fullmatch(r"(G\.tail|H\.qharm|H\.qharm\.AU)\.(\d+)", series_id)
    if m:
        fn, n = _INDEXED[m.group(1)], int(m.group(2))
        return lambda order: fn(n, order)
    for prefix in _PARAMETERIZED:
        if series_id.startswith(prefix + "."):
            try:
                params = _parse_params(series_id[len(prefix) + 1:])
                if prefix == "gasrah.lhs":
                    z = Monomial.parse(params.pop("z"))
                    base = int(params.pop("base", "1"))
                    if params or base < 1:
                        raise KeyError(series_id)
                    return lambda order: gasrah_lhs(z, order, base)
                c, t = Monomial.parse(params.pop("c")), Monomial.parse(params.pop("t"))
                if params:
                    raise KeyError(series_id)
                _check_gupta(c, t)
            except (KeyError, ValueError) as exc:
                raise KeyError(f"unknown series id {series_id!r}: {exc}") from None
            fn = gupta_lhs if prefix == "gupta.lhs" else gupta_rhs
            return lambda order: fn(c, t, order)
    raise KeyError(f"unknown series id {series_id!r}")


FIXED_IDS = tuple(_FIXED)


@lru_cache(maxsize=512)
def build(series_id: str, order: int) -> Series:
    """Exact truncation at ``order`` of the series named ``series_id``."""
    if order < 0:
        raise ValueError(f"truncation order must be non-negative, got {order}")
    return resolve(series_id)(order)
