"""Grünwald-Letnikov coefficient generation."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import binom, gammaln, gammasgn

# Sanity bound on |order|
MAX_ABS_ORDER = 10.0
# Complementary orders are differences of two orders
MAX_ABS_COMPLEMENTARY_ORDER = 2 * MAX_ABS_ORDER


def validate_order(order: float, bound: float = MAX_ABS_ORDER) -> float:
    """
    Check that a derivative order is usable.

    Negative orders integrate, positive orders differentiate, zero is the identity.

    Args:
        order: Candidate order
        bound: Largest allowed magnitude

    Returns:
        The order as a float

    Raises:
        ValueError: If the order is not finite or exceeds bound in magnitude
    """
    value = _finite_order(order)
    if abs(value) > bound:
        raise ValueError(f"Order {value} exceeds the sanity bound |order| <= {bound}")
    return value


def _finite_order(order: float) -> float:
    value = float(order)
    if not math.isfinite(value):
        raise ValueError(f"Order must be finite, got {order!r}")
    return value


def validate_step(h: float) -> float:
    """Check that a time step is finite and positive."""
    value = float(h)
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"Time step h must be positive and finite, got {h!r}")
    return value


@dataclass(frozen=True)
class GlWeights:
    """
    GL coefficients w[i] = (-1)^i * C(order, i) / h^order.

    Attributes:
        order: Derivative order
        h: Time step
        w: Coefficients w[0..count-1]
    """
    order: float
    h: float
    w: np.ndarray

    def __len__(self) -> int:
        return len(self.w)


def gl_weights(order: float, h: float, count: int) -> GlWeights:
    """
    Generate GL coefficients with the multiplicative recurrence.

    w[0] = h^(-order) and w[i] = w[i-1] * (1 - (order + 1) / i), which avoids
    the overflow and cancellation of factorial or gamma evaluation.

    Args:
        order: Derivative order
        h: Time step
        count: Number of coefficients

    Returns:
        GlWeights holding w[0..count-1]

    Raises:
        ValueError: On a non-positive step, a non-finite order, or count < 1
    """
    order = _finite_order(order)
    h = validate_step(h)
    if count < 1:
        raise ValueError(f"Coefficient count must be at least 1, got {count}")

    factors = np.empty(count)
    factors[0] = h ** (-order)
    i = np.arange(1, count, dtype=float)
    factors[1:] = 1.0 - (order + 1.0) / i
    return GlWeights(order=order, h=h, w=np.cumprod(factors))


def gl_weights_gamma(order: float, h: float, count: int) -> GlWeights:
    """
    Evaluate GL coefficients directly from gamma functions.

    Uses (-1)^i C(a, i) = Gamma(i - a) / (Gamma(-a) Gamma(i + 1)) through
    log-gamma, falling back to exact binomials when the order is a
    non-negative integer (the gamma form has poles there).

    Args:
        order: Derivative order
        h: Time step
        count: Number of coefficients

    Returns:
        GlWeights holding w[0..count-1]
    """
    order = _finite_order(order)
    h = validate_step(h)
    if count < 1:
        raise ValueError(f"Coefficient count must be at least 1, got {count}")

    i = np.arange(count, dtype=float)
    if order >= 0 and float(order).is_integer():
        signed = (-1.0) ** i * binom(order, i)
    else:
        log_mag = gammaln(i - order) - gammaln(-order) - gammaln(i + 1)
        signed = gammasgn(i - order) * gammasgn(-order) * np.exp(log_mag)
    return GlWeights(order=order, h=h, w=signed * h ** (-order))
