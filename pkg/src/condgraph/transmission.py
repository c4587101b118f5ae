"""Transmission curves T(E) for two-lead devices.

For a symmetric device the transmission is

    T(E) = 4 (u t - s v) b / ((s - v b)^2 + (t + u)^2 b),

where s, t, u, v are the characteristic polynomials of the graph, the graph
minus each contact, and the graph minus both, and b is the squared coupling
parameter.  The numerator u t - s v is the square of an integer polynomial;
the exact square root check lives with the polynomials.

Evaluation away from E = 0 is plain floating point.  At E = 0 both numerator
and denominator can vanish to high order, so the limit is taken by stripping
the shared power of E exactly (the coupling is made an exact rational first)
and only then evaluating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conduction import _require_simple_connected, _sub_char_poly
from .graphs import Graph
from .linalg import IntPolynomial

DENOM_FLOOR = 1e-300  # below this the sample is excluded, not infinite


@dataclass(frozen=True)
class DevicePolynomials:
    """The four characteristic polynomials of a distinct device plus the
    squared numerator jsq = u*t - s*v."""

    s: IntPolynomial
    t: IntPolynomial
    u: IntPolynomial
    v: IntPolynomial
    jsq: IntPolynomial


def device_polynomials(g: Graph, left: int, right: int) -> DevicePolynomials:
    """Exact device polynomials; ipso devices (left == right) are rejected."""
    _require_simple_connected(g)
    if left == right:
        raise ValueError("transmission needs two distinct contact vertices")
    s = _sub_char_poly(g, 0)
    t = _sub_char_poly(g, 1 << left)
    u = _sub_char_poly(g, 1 << right)
    v = _sub_char_poly(g, 1 << left | 1 << right)
    return DevicePolynomials(s, t, u, v, u * t - s * v)


def _fermi_limit(dp: DevicePolynomials, beta_sq) -> float | None:
    """T in the limit E -> 0: strip the common power of E exactly, then
    evaluate.  None marks an excluded (vanishing-denominator) point."""
    b = Fraction(beta_sq)
    num = [4 * b * c for c in dp.jsq.coeffs]
    s, v, t, u = dp.s.coeffs, dp.v.coeffs, dp.t.coeffs, dp.u.coeffs
    sv = [Fraction(c) for c in s]
    for i, c in enumerate(v):
        sv[i] -= b * c
    tu = [Fraction(c) for c in (t if len(t) >= len(u) else u)]
    shorter = u if len(t) >= len(u) else t
    for i, c in enumerate(shorter):
        tu[i] += c
    den = _poly_add(_poly_mul(sv, sv), [b * c for c in _poly_mul(tu, tu)])
    m_num = _trailing(num)
    m_den = _trailing(den)
    if m_den is None:  # identically vanishing denominator: excluded
        return None
    if m_num is None:
        return 0.0
    strip = min(m_num, m_den)
    num_val = num[strip] if strip < len(num) and strip == m_num else Fraction(0)
    den_val = den[strip] if strip == m_den else Fraction(0)
    if den_val == 0:
        return None
    return float(num_val / den_val)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _trailing(coeffs):
    for i, c in enumerate(coeffs):
        if c:
            return i
    return None


def evaluate_T(dp: DevicePolynomials, beta_sq: float, energy: float) -> float | None:
    """Transmission at one energy; None when the sample is excluded."""
    if beta_sq <= 0:
        raise ValueError("beta_sq must be positive")
    if energy == 0:
        return _fermi_limit(dp, beta_sq)
    s = dp.s(energy)
    t = dp.t(energy)
    u = dp.u(energy)
    v = dp.v(energy)
    den = (s - v * beta_sq) ** 2 + (t + u) ** 2 * beta_sq
    if abs(den) < DENOM_FLOOR:
        return None
    return 4.0 * dp.jsq(energy) * beta_sq / den


@dataclass(frozen=True)
class TransmissionCurve:
    beta_sq: float
    samples: tuple             # (E, T) pairs, sorted by E
    excluded: tuple            # E values where the denominator vanished

    def to_csv(self) -> str:
        lines = ["E,T"]
        lines += [f"{e!r},{t!r}" for e, t in self.samples]
        if self.excluded:
            lines.append("# excluded: " + ", ".join(repr(e) for e in self.excluded))
        return "\n".join(lines) + "\n"


def sweep(dp: DevicePolynomials, beta_sq: float, e_min: float, e_max: float,
          steps: int) -> TransmissionCurve:
    """Uniform energy grid; endpoints included, excluded points set aside."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not e_min < e_max:
        raise ValueError("need e_min < e_max")
    samples = []
    excluded = []
    for i in range(steps):
        e = e_min + (e_max - e_min) * i / (steps - 1)
        t = evaluate_T(dp, beta_sq, e)
        if t is None:
            excluded.append(e)
        else:
            samples.append((e, t))
    return TransmissionCurve(beta_sq, tuple(samples), tuple(excluded))
