"""The module contains the routines for finding the real roots of cubics."""

import math
from typing import TYPE_CHECKING

from scipy.optimize import brentq

if TYPE_CHECKING:
    from collections.abc import Callable

_NEWTON_STEPS = 3


def cube_root(x: float) -> float:
    """Computes the signed cube root of the argument x."""

    return math.copysign(abs(x) ** (1 / 3), x)


def solve_depressed_cubic(p: float, q: float) -> tuple[float, ...]:
    """Returns the real solutions to x ** 3 + p * x + q == 0."""

    if p == 0:
        return (-cube_root(q), )

    d = p ** 3 / 27 + q ** 2 / 4

    if d > 0:
        r = -q / 2
        s = math.sqrt(d)
        return (cube_root(r + s) + cube_root(r - s), )

    r = 3 * q / p

    if d == 0:
        return r, -r / 2

    # Rounding may push the argument slightly outside [-1, 1].
    arg = max(-1.0, min(1.0, r / 2 * math.sqrt(-3 / p)))
    s = math.acos(arg) / 3
    t = 2 * math.sqrt(-p / 3)
    u = 2 * math.pi / 3

    return tuple(t * math.cos(s - u * k) for k in range(3))


def solve_cubic(a: float, b: float, c: float, d: float) -> tuple[float, ...]:
    """Returns the real solutions to a * x ** 3 + b * x ** 2 + c * x + d == 0.
    A zero cubic coefficient degrades the equation to a quadratic.
    """

    if a == 0:
        return _solve_quadratic(b, c, d)

    b, c, d = b / a, c / a, d / a
    p = c - b ** 2 / 3
    q = d - b * c / 3 + b ** 3 * 2 / 27

    return tuple(t - b / 3 for t in solve_depressed_cubic(p, q))


def _solve_quadratic(a: float, b: float, c: float) -> tuple[float, ...]:
    if a == 0:
        return () if b == 0 else (-c / b, )

    disc = b * b - 4 * a * c
    if disc < 0:
        return ()

    # The sign choice avoids cancellation.
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0:
        return (0.0, )

    return q / a, c / q


def root_in_interval(
    coefficients: tuple[float, float, float, float],
    lower: float,
    upper: float,
) -> float | None:
    """Returns the smallest root of the cubic lying in (lower, upper], or None.
    The closed-form roots are polished by Newton steps; a root the closed form
    misses is recovered by bracketing when the cubic changes sign on
    the interval.
    """

    a, b, c, d = coefficients

    def func(x: float) -> float:
        return ((a * x + b) * x + c) * x + d

    def slope(x: float) -> float:
        return (3 * a * x + 2 * b) * x + c

    candidates = sorted(
        _polish(root, func, slope)
        for root in solve_cubic(a, b, c, d)
        if math.isfinite(root)
    )
    for root in candidates:
        if lower < root <= upper:
            return root

    f_lower, f_upper = func(lower), func(upper)
    if f_lower * f_upper > 0:
        return None

    if f_upper == 0:
        return upper

    return float(brentq(func, lower, upper, xtol=1e-14, rtol=4 * 2.0 ** -52))


def _polish(
    root: float,
    func: 'Callable[[float], float]',
    slope: 'Callable[[float], float]',
) -> float:
    """Applies a few Newton steps to a root obtained in closed form."""

    for _ in range(_NEWTON_STEPS):
        derivative = slope(root)
        if derivative == 0:
            break

        step = func(root) / derivative
        if not math.isfinite(step):
            break

        root -= step

    return root
