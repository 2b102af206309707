"""Product and Lukasiewicz connectives on [0, 1], and the gate polynomial.

These are the scalar operations under which quantum truth values compose:
conjunction is the ordinary product, negation is 1 - x, and disjunction
is the truncated sum min(x + y, 1).
"""

from __future__ import annotations

from .errors import OutOfRange

#: How far outside [0, 1] a value may stray before it is an error
#: rather than rounding noise.
CLAMP_SLACK = 1e-12


def clamp_unit(x: float) -> float:
    """Snap values within CLAMP_SLACK of [0, 1] onto it; reject anything farther."""
    x = float(x)
    if not -CLAMP_SLACK <= x <= 1.0 + CLAMP_SLACK:
        raise OutOfRange(f"{x!r} is not a truth value in [0, 1]")
    return min(max(x, 0.0), 1.0)


def product(x: float, y: float) -> float:
    return clamp_unit(x) * clamp_unit(y)


def luk_neg(x: float) -> float:
    return 1.0 - clamp_unit(x)


def luk_sum(x: float, y: float) -> float:
    return min(clamp_unit(x) + clamp_unit(y), 1.0)


def cnot_polynomial(x: float, y: float) -> float:
    """Truth value (not x . y) (+) (not y . x) of the controlled-NOT target.

    For x, y in [0, 1] the two summands total (1 - x) y + (1 - y) x <= 1,
    so the truncation in the sum never bites and the result is the plain
    polynomial.  It agrees with tr(P1 .) on the gate output whenever the
    input is the product of a control and a target state.
    """
    x, y = clamp_unit(x), clamp_unit(y)
    return luk_sum(product(luk_neg(x), y), product(luk_neg(y), x))
