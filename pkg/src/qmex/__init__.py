"""Minimal excludants of overpartitions and the q-series identities behind them."""

from .combinatorics import (
    Overpartition,
    StatKind,
    count_restricted,
    enumerate_overpartitions,
    f_signed_count,
    mex_distribution,
    omex,
    omoex,
    satisfies_restriction,
    sigma_omex,
    sigma_omoex_index,
    tilde_omex,
    tilde_omoex,
)
from .qproducts import Monomial, phi_2_1, pochhammer_finite, pochhammer_infinite, qbinomial
from .series import Series, equal_up_to
from .special import build
from .verify import registry, verify_all, verify_case

__version__ = "0.1.0"
