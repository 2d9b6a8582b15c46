"""Smallest enclosing circle of points in the complex plane (Welzl's algorithm)."""
from typing import List, NamedTuple, Optional, Sequence

import numpy as np


class Circle(NamedTuple):
    center: complex
    radius: float


def _contains(circle: Optional[Circle], p: complex) -> bool:
    if circle is None:
        return False
    return abs(p - circle.center) <= circle.radius * (1 + 1e-14) + 1e-15


def _cross(p: complex, q: complex, r: complex) -> float:
    """Twice the signed area of the triangle ``p, q, r``."""
    return ((q - p).conjugate() * (r - p)).imag


def _diameter(a: complex, b: complex) -> Circle:
    center = 0.5 * (a + b)
    return Circle(center, max(abs(center - a), abs(center - b)))


def _circumcircle(a: complex, b: complex, c: complex) -> Optional[Circle]:
    points = (a, b, c)
    origin = complex(
        0.5 * (min(p.real for p in points) + max(p.real for p in points)),
        0.5 * (min(p.imag for p in points) + max(p.imag for p in points)),
    )
    a, b, c = a - origin, b - origin, c - origin
    d = 2.0 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    if d == 0.0:
        return None
    na, nb, nc = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    x = (na * (b.imag - c.imag) + nb * (c.imag - a.imag) + nc * (a.imag - b.imag)) / d
    y = (na * (c.real - b.real) + nb * (a.real - c.real) + nc * (b.real - a.real)) / d
    center = complex(x, y)
    radius = max(abs(center - a), abs(center - b), abs(center - c))
    return Circle(center + origin, radius)


def _circle_with_two(points: Sequence[complex], p: complex, q: complex) -> Circle:
    base = _diameter(p, q)
    left: Optional[Circle] = None
    right: Optional[Circle] = None
    for r in points:
        if _contains(base, r):
            continue
        cross = _cross(p, q, r)
        circle = _circumcircle(p, q, r)
        if circle is None:
            continue
        side = _cross(p, q, circle.center)
        if cross > 0.0 and (left is None or side > _cross(p, q, left.center)):
            left = circle
        elif cross < 0.0 and (right is None or side < _cross(p, q, right.center)):
            right = circle

    if left is None and right is None:
        return base
    if left is None:
        return right
    if right is None:
        return left
    return left if left.radius <= right.radius else right


def _circle_with_one(points: Sequence[complex], p: complex) -> Circle:
    circle = Circle(p, 0.0)
    for i, q in enumerate(points):
        if not _contains(circle, q):
            if circle.radius == 0.0:
                circle = _diameter(p, q)
            else:
                circle = _circle_with_two(points[: i + 1], p, q)
    return circle


def enclosing_circle(points, seed: int = 0) -> Circle:
    """Smallest circle containing every point.

    Args:
        points (array_like): Complex (or real) values, nonempty.
        seed (int, optional): Seed of the shuffle. Defaults to 0.

    Returns:
        Circle: Center and radius.
    """
    values: List[complex] = [complex(p) for p in np.ravel(np.asarray(points))]
    if not values:
        raise ValueError("enclosing_circle needs at least one point")
    order = np.random.default_rng(seed).permutation(len(values))
    shuffled = [values[i] for i in order]

    circle: Optional[Circle] = None
    for i, p in enumerate(shuffled):
        if circle is None or not _contains(circle, p):
            circle = _circle_with_one(shuffled[: i + 1], p)
    return circle
