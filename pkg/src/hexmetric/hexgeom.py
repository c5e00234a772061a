"""Single right-angled hexagon geometry.

A colored right-angled hyperbolic hexagon has alternating x-sides and
y-sides, with y_i opposite x_i.  Everything here is a pure function of
the three x-lengths (or of the half-difference coordinates t_i), namely:

* the cosine law in both directions and the sine law,
* the antiderivatives of ln cosh and ln sinh (via the dilogarithm),
* the concave per-hexagon energy, its exact gradient and Hessian,
* a line-integral evaluation of the energy used as an independent check.

The t-domain is the open cone H3 = {t in R^3 : t_i + t_j > 0 for i != j};
x_i = t_j + t_k maps it onto the positive octant of x-space.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import spence

Triple = tuple[float, float, float]

# Points with min(t_i + t_j) below this are treated as outside the open
# domain: the energy gradient diverges there.
H3_MARGIN = 1e-14

_PI2_24 = math.pi ** 2 / 24.0
_PI2_12 = math.pi ** 2 / 12.0
_LN2 = math.log(2.0)


class DomainError(ValueError):
    """Input outside the hexagon parameter domain."""


def _dilog(x: float) -> float:
    # Li_2(x) for x <= 1; scipy's spence is Li_2(1 - x).
    return float(spence(1.0 - x))


def lambda1(u: float) -> float:
    """Antiderivative of ln cosh:  integral of ln cosh(s) over [0, u].

    Odd in u.  Closed form uses ln cosh s = s - ln 2 + ln(1 + e^{-2s}).
    """
    if not math.isfinite(u):
        raise DomainError(f"lambda1 requires finite u, got {u}")
    if u < 0.0:
        return -lambda1(-u)
    if u == 0.0:
        return 0.0
    return 0.5 * u * u - u * _LN2 + 0.5 * _dilog(-math.exp(-2.0 * u)) + _PI2_24


def lambda2(u: float) -> float:
    """Antiderivative of ln sinh:  integral of ln sinh(s) over [0, u], u >= 0.

    The integrand has an integrable log singularity at 0; the closed form
    below is finite on [0, inf) with lambda2(0) = 0.
    """
    if not (u >= 0.0) or not math.isfinite(u):
        raise DomainError(f"lambda2 requires u >= 0, got {u}")
    if u == 0.0:
        return 0.0
    return 0.5 * u * u - u * _LN2 + 0.5 * _dilog(math.exp(-2.0 * u)) - _PI2_12


def _check_positive(v: Triple, name: str) -> None:
    for c in v:
        if not (c > 0.0) or not math.isfinite(c):
            raise DomainError(f"{name} must be strictly positive and finite, got {v}")


def arccosh(w: float) -> float:
    """arccosh(w) = ln(w + sqrt((w-1)(w+1))), stable for w near 1."""
    if w < 1.0:
        if w > 1.0 - 1e-12:
            w = 1.0
        else:
            raise DomainError(f"arccosh argument below 1: {w}")
    return math.log(w + math.sqrt((w - 1.0) * (w + 1.0)))


def cosine_law_y(x: Triple) -> Triple:
    """y-side lengths from x-side lengths.

    cosh y_i = (cosh x_i + cosh x_j cosh x_k) / (sinh x_j sinh x_k); the
    argument exceeds 1 for every positive x, so the law is total.
    """
    _check_positive(x, "x")
    c = [math.cosh(v) for v in x]
    s = [math.sinh(v) for v in x]
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out.append(arccosh((c[i] + c[j] * c[k]) / (s[j] * s[k])))
    return (out[0], out[1], out[2])


def cosine_law_x(y: Triple) -> Triple:
    """Inverse law: x-side lengths from y-side lengths.

    Same formula with the colors swapped; total on positive triples.
    """
    _check_positive(y, "y")
    return cosine_law_y(y)


def sine_ratio(x: Triple) -> float:
    """sinh(x_i)/sinh(y_i); the sine law makes it independent of i."""
    y = cosine_law_y(x)
    return math.sinh(x[0]) / math.sinh(y[0])


def x_to_t(x: Triple) -> Triple:
    """Half-difference coordinates t_i = (x_j + x_k - x_i)/2."""
    _check_positive(x, "x")
    return (
        0.5 * (x[1] + x[2] - x[0]),
        0.5 * (x[2] + x[0] - x[1]),
        0.5 * (x[0] + x[1] - x[2]),
    )


def t_to_x(t: Triple) -> Triple:
    """Inverse of x_to_t: x_i = t_j + t_k.  Requires t in closed H3."""
    _require_closed_h3(t)
    return (t[1] + t[2], t[2] + t[0], t[0] + t[1])


def pair_sums(t: Triple) -> Triple:
    return (t[0] + t[1], t[1] + t[2], t[2] + t[0])


def _require_closed_h3(t: Triple) -> None:
    if min(pair_sums(t)) < 0.0:
        raise DomainError(f"t outside closed H3: {t}")


def _require_open_h3(t: Triple) -> None:
    if min(pair_sums(t)) <= H3_MARGIN:
        raise DomainError(f"t not strictly inside H3: {t}")


def theta(t: Triple) -> float:
    """Concave hexagon energy on the closed cone H3.

    2*theta(t) = lambda1(t1+t2+t3) + sum_i lambda1(t_i)
                 - lambda2(t1+t2) - lambda2(t2+t3) - lambda2(t3+t1).
    theta(0) = 0; on the positive octant {t >= 0} the value lies in
    [m(u)/2, M(u)/2] with u = sum(t) (see theta_min_on_slice /
    theta_max_on_slice), hence is nonnegative and bounded there.  With a
    sufficiently negative coordinate the value can be negative.
    """
    _require_closed_h3(t)
    total = lambda1(t[0] + t[1] + t[2])
    for ti in t:
        total += lambda1(ti)
    for p in pair_sums(t):
        total -= lambda2(max(p, 0.0))
    return 0.5 * total


def theta_grad(t: Triple) -> Triple:
    """Exact gradient of theta, components ln cosh(y_i/2).

    Evaluated without the cosine law as
    2 d(theta)/dt_i = ln cosh(sum t) + ln cosh(t_i)
                      - ln sinh(t_i+t_j) - ln sinh(t_i+t_k);
    strictly positive, divergent on the boundary of H3.
    """
    _require_open_h3(t)
    lc_sum = _lncosh(t[0] + t[1] + t[2])
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out.append(
            0.5
            * (
                lc_sum
                + _lncosh(t[i])
                - math.log(math.sinh(t[i] + t[j]))
                - math.log(math.sinh(t[i] + t[k]))
            )
        )
    return (out[0], out[1], out[2])


def _lncosh(u: float) -> float:
    # ln cosh u = |u| - ln 2 + ln(1 + e^{-2|u|}), overflow safe.
    a = abs(u)
    return a - _LN2 + math.log1p(math.exp(-2.0 * a))


def theta_hessian(t: Triple) -> np.ndarray:
    """Hessian of theta at an interior point, as a 3x3 numpy array.

    Off-diagonal (i, j):  -2A sinh^2(y_i/2) sinh^2(y_j/2)
    Diagonal   (i, i):    -2A sinh^2(y_i/2) (sinh^2(y_j/2)+sinh^2(y_k/2)+1)
    with the sine-law constant A = sinh(x_i) / (sinh^2(y_i) sinh(x_j) sinh(x_k)).
    Negative definite; -H is strictly diagonally dominant.
    """
    _require_open_h3(t)
    x = t_to_x(t)
    y = cosine_law_y(x)
    a_const = math.sinh(x[0]) / (
        math.sinh(y[0]) ** 2 * math.sinh(x[1]) * math.sinh(x[2])
    )
    sh2 = [math.sinh(v / 2.0) ** 2 for v in y]
    h = np.empty((3, 3))
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        h[i, i] = -2.0 * a_const * sh2[i] * (sh2[j] + sh2[k] + 1.0)
        h[i, j] = h[j, i] = -2.0 * a_const * sh2[i] * sh2[j]
    return h


# 16-point Gauss-Legendre nodes/weights on [0, 1].
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_GL_NODES = 0.5 * (_GL_NODES + 1.0)
_GL_WEIGHTS = 0.5 * _GL_WEIGHTS


def path_integral(points: list[Triple], segments: int) -> float:
    """Line integral of the closed 1-form sum_i ln cosh(y_i/2) dt_i
    along the polygonal path through `points`.

    Each leg is split into `segments` Gauss-Legendre panels.  A leg
    starting at the origin is graded geometrically toward 0 to absorb
    the logarithmic singularity of the form there.
    """
    if segments < 1:
        raise ValueError("segments must be positive")
    total = 0.0
    for a, b in zip(points[:-1], points[1:]):
        a_arr = np.asarray(a, dtype=float)
        b_arr = np.asarray(b, dtype=float)
        d = b_arr - a_arr
        singular = bool(np.all(a_arr == 0.0))
        if singular:
            # breakpoints 0 < r^(n-1) < ... < r < 1 with ratio 1/2
            cuts = [0.0] + [0.5 ** (segments - 1 - i) for i in range(segments)]
        else:
            cuts = list(np.linspace(0.0, 1.0, segments + 1))
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            width = hi - lo
            for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
                s = lo + width * node
                p = tuple(a_arr + s * d)
                g = theta_grad(p)
                total += width * weight * float(np.dot(g, d))
    return total


def theta_by_path_integral(t: Triple, segments: int) -> float:
    """theta(t) as a line integral from the origin; independent of the
    closed-form evaluation, used as its oracle."""
    _require_closed_h3(t)
    if all(v == 0.0 for v in t):
        return 0.0
    return path_integral([(0.0, 0.0, 0.0), t], segments)


def theta_min_on_slice(u: float) -> float:
    """Minimum of 2*theta on the nonnegative slice
    {t >= 0, sum t = u}: attained at a vertex such as (u, 0, 0),
    value 2 lambda1(u) - 2 lambda2(u), positive for u > 0."""
    return 2.0 * lambda1(u) - 2.0 * lambda2(u)


def theta_max_on_slice(u: float) -> float:
    """Maximum of 2*theta on the full slice {sum t = u} of the closed
    cone, at the barycenter: lambda1(u) + 3 lambda1(u/3) - 3 lambda2(2u/3),
    bounded over all u."""
    return lambda1(u) + 3.0 * lambda1(u / 3.0) - 3.0 * lambda2(2.0 * u / 3.0)
