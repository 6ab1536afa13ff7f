import logging
import math
from dataclasses import dataclass

from vgpp_pricing.domain.distributions import polya_pmf
from vgpp_pricing.domain.ept import CGMParams, vg_ept_call, vg_ept_call_incomplete_gamma
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.pricing.market_model import MarketModel
from vgpp_pricing.domain.pricing.omega import vgpp_omega
from vgpp_pricing.domain.vgpp import VGPPParams, mixture_component_cgm

_logger = logging.getLogger("closed_pricer")

DEFAULT_SERIES_CUTOFF = 1e-4
_MAX_TERMS = 5_000


@dataclass(frozen=True)
class ClosedFormPrice:
    price: float
    terms_used: int
    omega: float


def _check_contract(K: float, T: float, cutoff: float) -> None:
    if not K > 0 or not T > 0:
        raise DomainError("K and T must be positive")
    if not 0 < cutoff <= 1e-2:
        raise DomainError(f"cutoff must lie in (0, 1e-2], got {cutoff}")


def price_call_closed_detail(
    params: VGPPParams,
    market: MarketModel,
    K: float,
    T: float,
    cutoff: float = DEFAULT_SERIES_CUTOFF,
    matrix_form: bool = True,
) -> ClosedFormPrice:
    """Polya-weighted series of integer-shape VG calls plus the atom's intrinsic value.

    a^(alpha T) (F0 e^(omega T) - K e^(-rT))^+ + sum_n Polya(n; alpha T, 1 - a) VGcall_n, where VGcall_n
    has shape n and clock rate beta / a. The sum stops, once past the mode of the Polya weights, at the
    first term below ``cutoff`` times the partial sum. ``matrix_form=False`` evaluates every VG call through
    incomplete gamma sums instead of matrix exponentials.
    """
    _check_contract(K, T, cutoff)
    omega = vgpp_omega(params)
    G, M = mixture_component_cgm(params)
    component_call = vg_ept_call if matrix_form else vg_ept_call_incomplete_gamma
    counter = params.subordinator.counter(T)
    weight_mode = max(0, math.floor(counter.mean))

    total = params.subordinator.atom(T) * max(market.F0 * math.exp(omega * T) - K * market.discount(T), 0.0)
    n = 1
    while n <= _MAX_TERMS:
        term = polya_pmf(counter, n) * component_call(CGMParams(C=n, G=G, M=M), market.F0, K, market.r, T, omega)
        total += term
        if n > weight_mode and term <= cutoff * total:
            break
        n += 1
    else:
        _logger.warning(f"Closed-form series not settled after {_MAX_TERMS} terms", extra={"vgpp_terms": _MAX_TERMS})

    _logger.debug(
        f"Closed-form call K={K}, T={T} used {n} terms",
        extra={"vgpp_strike": K, "vgpp_maturity": T, "vgpp_terms": n},
    )
    return ClosedFormPrice(price=total, terms_used=n, omega=omega)


def price_call_closed(
    params: VGPPParams,
    market: MarketModel,
    K: float,
    T: float,
    cutoff: float = DEFAULT_SERIES_CUTOFF,
    matrix_form: bool = True,
) -> float:
    """European call price from the integral-free series."""
    return price_call_closed_detail(params, market, K, T, cutoff, matrix_form).price


def price_put_closed(
    params: VGPPParams,
    market: MarketModel,
    K: float,
    T: float,
    cutoff: float = DEFAULT_SERIES_CUTOFF,
    matrix_form: bool = True,
) -> float:
    """Put by parity; the discounted forward equals F0 under the corrected drift."""
    call = price_call_closed(params, market, K, T, cutoff, matrix_form)
    return max(call - market.F0 + K * market.discount(T), 0.0)
