import logging
import math
from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray

from vgpp_pricing.domain.distributions import PolyaParams, polya_logpmf

_logger = logging.getLogger("polya_mixture")

_MAX_TERMS = 100_000


def polya_mixture(
    counter: PolyaParams,
    log_component: Callable[[int], NDArray],
    tolerance: float,
) -> NDArray:
    """Sum_{n >= 1} Polya(n) * component_n(x), evaluated term by term in log space.

    Stops past the mode of the Polya weights once every x has a term that is no larger than the
    previous one and contributes less than ``tolerance`` relative to its running sum.
    """
    weight_mode = max(0, math.floor((counter.shape - 1.0) * counter.success_prob / (1.0 - counter.success_prob)))

    total: NDArray | None = None
    previous: NDArray | None = None
    n = 1
    while n <= _MAX_TERMS:
        term = np.exp(polya_logpmf(counter, n) + log_component(n))
        total = term.copy() if total is None else total + term

        if n > weight_mode and previous is not None:
            settled = (term <= previous) & (term <= tolerance * total)
            if np.all(settled):
                break
        previous = term
        n += 1
    else:
        _logger.warning(f"Polya mixture not settled after {_MAX_TERMS} terms", extra={"vgpp_terms": _MAX_TERMS})

    _logger.debug(f"Polya mixture truncated after {n} terms", extra={"vgpp_terms": n})
    assert total is not None
    return total
