"""Registry of identities and the harness that checks them coefficientwise."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import combinatorics as comb
from . import special
from .combinatorics import StatKind
from .qproducts import Monomial, heine_rhs, phi_1_0, phi_2_1, qbinomial_theorem_rhs
from .series import Series, equal_up_to

Builder = Callable[[int], Series]

DEFAULT_ENUM_BOUND = 20


@dataclass(frozen=True)
class IdentityCase:
    name: str
    lhs_id: str
    rhs_id: str
    lhs: Builder
    rhs: Builder
    statement: str
    default_order: int = 200
    enumerative: bool = False  # lhs comes from brute-force enumeration


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class VerificationReport:
    name: str
    compared_order: int
    status: str
    first_mismatch: Mismatch | None
    elapsed: float  # seconds

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        mm = self.first_mismatch
        return {
            "name": self.name,
            "compared_order": self.compared_order,
            "status": self.status,
            "first_mismatch": None if mm is None else {
                "exponent": mm.exponent, "lhs": str(mm.lhs), "rhs": str(mm.rhs),
            },
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else None,
        }


def _named(series_id: str) -> Builder:
    return lambda order: special.build(series_id, order)


def _case(name, lhs_id, rhs_id, statement, **kw) -> IdentityCase:
    return IdentityCase(name, lhs_id, rhs_id, _named(lhs_id), _named(rhs_id), statement, **kw)


def _enum_case(name, lhs_id, lhs, rhs_id, statement) -> IdentityCase:
    return IdentityCase(name, lhs_id, rhs_id, lhs, _named(rhs_id), statement,
                        default_order=DEFAULT_ENUM_BOUND, enumerative=True)


_THEOREMS = {
    1: (StatKind.OMEX, "Mbar(q) = Pbar(q) (2 - R(q))"),
    2: (StatKind.OMOEX, "Mbar_o(q) = Pbar_o(q) (1 - F(-q))"),
    3: (StatKind.TILDE_OMEX, "Mtilde(q) = Pbar(q) (f0(q) - 1)"),
    4: (StatKind.TILDE_OMOEX, "Mtilde_o(q) = q Pbar_o(q) F1(-q)"),
}

GASRAH_Z = ("q", "q^2", "-q", "-q^2", "q^3", "1", "-1")
GUPTA_CT = (("-1", "q"), ("q", "q"), ("-q", "q^2"), ("0", "q"), ("q^2", "-q"))
QBINOM_AZ = tuple(
    (a, z, 1) for a in ("0", "1", "-1", "q", "-q", "q^2") for z in ("q", "-q", "q^2")
) + (("-q", "q^2", 2), ("-q", "q^4", 2), ("0", "q^3", 1))
HEINE_ABCZ = (
    ("q", "-q", "-q^2", "q", 1),
    ("q", "-q^2", "-q^3", "q", 1),
    ("q", "-q^3", "-q^4", "q", 1),
    ("-1", "q", "-q", "q", 1),
    ("0", "q", "q^2", "q^2", 1),
    ("q^2", "q", "0", "q", 1),
    ("-q", "q^2", "-q^3", "-q", 1),
    ("q^3", "-q", "q^2", "q^2", 1),
    ("q^2", "q^2", "0", "q", 2),
    ("-q", "q^2", "q^4", "q^2", 2),
)
AU_MAX = 50


def _base_suffix(base: int) -> str:
    return "" if base == 1 else f",base={base}"


def _build_registry() -> list:
    cases = []
    for k, (kind, statement) in _THEOREMS.items():
        cases.append(_enum_case(
            f"thm{k}", f"enum.{kind.value}",
            lambda order, kind=kind: comb.restricted_count_series(kind, order),
            f"thm{k}.rhs", statement))
        for side in ("product", "sum"):
            cases.append(_case(f"thm{k}.{side}", f"thm{k}.{side}", f"thm{k}.rhs", statement))
    cases.append(_enum_case("thm5", "enum.sigma_omex", comb.sigma_omex_series, "thm5.rhs",
                            "sigma Mbar(q) = Pbar(q) (R(q) - 2 (q)_inf sum q^n G_n / ((q)_n (1+q^n)))"))
    cases.append(_enum_case("thm6", "enum.sigma_omoex_index", comb.sigma_omoex_index_series,
                            "thm6.rhs",
                            "sigma Mbar_o(q) = Pbar_o(q) (1 + q sum (-1)^n (q^2;q^2)_n q^n H_n(q^2))"))
    for k in (5, 6):
        for side in ("product", "sum"):
            cases.append(_case(f"thm{k}.{side}", f"thm{k}.{side}", f"thm{k}.rhs",
                               f"z-derivative at z = 1 of the double series equals thm{k}.rhs"))

    cases.append(_enum_case("P.bar.enum", "enum.overpartitions",
                            lambda order: comb.overpartition_count_series(order),
                            "P.bar", "number of overpartitions = (-q)_inf / (q)_inf"))
    cases.append(_enum_case("P.bar.odd.enum", "enum.odd_overpartitions",
                            lambda order: comb.overpartition_count_series(order, odd_only=True),
                            "P.bar.odd", "odd overpartitions = (-q;q^2)_inf / (q;q^2)_inf"))
    cases.append(_enum_case("F.signed_count", "enum.f_signed", comb.f_signed_series, "F",
                            "signed count of gap-free odd partitions = F(q)"))

    cases.append(_case("R.rep12", "R.rep1", "R.rep2",
                       "sum q^{n(n+1)/2}/(-q)_n = 1 + sum (-1)^{n-1} q^n (q)_{n-1}", default_order=500))
    cases.append(_case("R.rep13", "R.rep1", "R.rep3",
                       "sum q^{n(n+1)/2}/(-q)_n = (q)_inf (1 + 2 sum q^n/((q)_n (1+q^n)))",
                       default_order=500))
    cases.append(IdentityCase("F.neg", "F.neg", "F(-q)", _named("F.neg"),
                              lambda order: special.build("F", order).alternate_sign(),
                              "F(-q) = sum q^{n^2}/(-q;q^2)_n"))

    for n in range(AU_MAX + 1):
        cases.append(_case(f"AU.{n}", f"H.qharm.{n}", f"H.qharm.AU.{n}",
                           "H_n(q) = sum (-1)^{i-1} q^{i(i+1)/2} [n i]_q / (1 - q^i)"))
    cases.append(_case("divisor.lambert_vs_signed", "divisor.lambert", "divisor.signed",
                       "sum q^i/(1-q^i) = sum (-1)^{i-1} q^{i(i+1)/2}/((1-q^i)(q)_i)",
                       default_order=300))
    cases.append(IdentityCase("divisor.trial", "trial_division.d", "divisor.lambert",
                              _divisor_count_series, _named("divisor.lambert"),
                              "coefficients of sum q^i/(1-q^i) are d(n)", default_order=300))

    for z in GASRAH_Z:
        for base in (1, 2):
            zid = f"z={z}{_base_suffix(base)}"
            cases.append(IdentityCase(
                f"gasrah.{zid}", f"gasrah.lhs.{zid}", f"1+({z})",
                _named(f"gasrah.lhs.{zid}"),
                lambda order, z=z: 1 + Monomial.parse(z).series(order),
                "sum z^n q^{n(n-1)/2} / (-zq;q)_n = 1 + z"))
    for c, t in GUPTA_CT:
        p = f"c={c},t={t}"
        cases.append(_case(f"gupta.{p}", f"gupta.lhs.{p}", f"gupta.rhs.{p}",
                           "sum c^n ((t)_n - (t)_inf) = (t)_inf sum t^n / ((q)_n (1 - c q^n))",
                           default_order=150))
    for a, z, base in QBINOM_AZ:
        p = f"a={a},z={z}{_base_suffix(base)}"
        cases.append(IdentityCase(
            f"qbinom.{p}", f"phi10.{p}", f"(az)_inf/(z)_inf.{p}",
            lambda order, a=a, z=z, b=base: phi_1_0(a, z, order, base=b),
            lambda order, a=a, z=z, b=base: qbinomial_theorem_rhs(a, z, order, base=b),
            "sum (a)_k z^k / (q)_k = (az)_inf / (z)_inf"))
    for a, b, c, z, base in HEINE_ABCZ:
        p = f"a={a},b={b},c={c},z={z}{_base_suffix(base)}"
        cases.append(IdentityCase(
            f"heine.{p}", f"phi21.{p}", f"heine_rhs.{p}",
            lambda order, t=(a, b, c, z), m=base: phi_2_1(*t, order, base=m),
            lambda order, t=(a, b, c, z), m=base: heine_rhs(*t, order, base=m),
            "2phi1(a,b;c;z) = (b)_inf (az)_inf / ((c)_inf (z)_inf) 2phi1(c/b,z;az;b)"))

    cases.append(_case("A_vs_R", "A.lhs", "R.rep1", "sum n q^{n(n-1)/2}/(-q)_n = R(q)"))
    cases.append(_case("B_lhs_vs_B_rhs", "B.lhs", "B.rhs",
                       "sum n q^{n(n+1)/2}/(-q)_n = 2 (q)_inf sum q^n G_n / ((q)_n (1+q^n))"))
    cases.append(_case("C_lhs_vs_C_rhs", "C.lhs", "C.rhs",
                       "sum n q^{(n-1)^2}/(-q;q^2)_n = 1 + F(-q)"))
    cases.append(_case("C_lhs_vs_C_mid", "C.lhs", "C.mid",
                       "sum n q^{(n-1)^2}/(-q;q^2)_n = 1 - sum (-1)^n (q^2;q^2)_{n-1} q^n"))
    cases.append(_case("D_lhs_vs_D_rhs", "D.lhs", "D.rhs",
                       "sum n q^{n^2}/(-q;q^2)_n = F(-q) - q sum (-1)^n (q^2;q^2)_n q^n H_n(q^2)"))
    return cases


def _divisor_count_series(order: int) -> Series:
    """d(n) by trial division; independent of any q-series code."""
    def d(n: int) -> int:
        return sum(1 for k in range(1, n + 1) if n % k == 0)
    return Series([0] + [d(n) for n in range(1, order + 1)])


@lru_cache(maxsize=1)
def _registry_index() -> dict:
    cases = _build_registry()
    index = {}
    for c in cases:
        if c.name in index:
            raise RuntimeError(f"duplicate case name {c.name}")
        index[c.name] = c
    return index


def registry() -> list:
    """All identity cases, sorted by name."""
    return [c for _, c in sorted(_registry_index().items())]


def get_case(name: str) -> IdentityCase:
    try:
        return _registry_index()[name]
    except KeyError:
        raise KeyError(f"unknown identity case {name!r}") from None


def check_case(case: IdentityCase, order: int, enum_bound: int = DEFAULT_ENUM_BOUND) -> VerificationReport:
    """Build both sides and compare them coefficientwise."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    start = time.perf_counter()
    lhs_order = min(order, enum_bound) if case.enumerative else order
    lhs = case.lhs(lhs_order)
    rhs = case.rhs(order)
    cmp = equal_up_to(lhs, rhs)
    mismatch = None
    if cmp.mismatch is not None:
        k = cmp.mismatch
        mismatch = Mismatch(k, lhs.coefficient(k), rhs.coefficient(k))
    return VerificationReport(
        name=case.name,
        compared_order=cmp.order,
        status="pass" if mismatch is None else "fail",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - start,
    )


def verify_case(name: str, order: int | None = None, enum_bound: int = DEFAULT_ENUM_BOUND) -> VerificationReport:
    case = get_case(name)
    return check_case(case, case.default_order if order is None else order, enum_bound)


def verify_all(order: int, enum_bound: int = DEFAULT_ENUM_BOUND) -> list:
    return [check_case(c, order, enum_bound) for c in registry()]
