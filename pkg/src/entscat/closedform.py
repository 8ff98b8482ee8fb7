"""Closed-form scattering amplitudes for the two-site delta problem.

Single site, exchange model (opacity w):

    t = 1/(1+w^2),   r = -w^2/(1+w^2),   f = -i w/(1+w^2)

Single site, contact model, with D = (1+i w)(1-3i w):

    t = (1-i w)/D,   r = i w (1+3i w)/D,   f = -2i w/D
    t_same = 1/(1+i w),   r_same = -i w/(1+i w)

Two sites separated by the gap phase p (= k d), with E = exp(i p):

    t_noflip = t_A t_B E / (1 - r_A r_B E^2)
    r_noflip = r_A + t_A^2 r_B E^2 / (1 - r_A r_B E^2)
    t_flipb  = t_A f_B E / (1 - r_A r_B E^2),          r_flipb = t_flipb * E
    t_flipa  = (1 + t_A r_B E^2/(1 - r_A r_B E^2)) f_A E,  r_flipa = t_flipa / E

For the contact model the same skeleton holds with t, r replaced by dressed
values t~ = t + Sigma, r~ = r + Sigma, where Sigma resums the virtual
flip-and-return excursions to the partner site, plus extra bare bounce
factors after the real flip (see :func:`amplitudes`).

The denominators 1 - r_A r_B E^2 resum the mediator bouncing between the
sites; truncating that geometric series after n bounces
(:func:`truncated_amplitudes`) exposes how the bounce interference builds
the entanglement.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import (
    AmplitudeSet,
    DimensionlessPoint,
    DomainError,
    ModelKind,
    SiteCoefficients,
    UnsupportedModelError,
    validate,
)


@dataclass(frozen=True)
class TruncatedAmplitudeSet(AmplitudeSet):
    """Amplitudes with every bounce series cut after ``bounce_order`` round
    trips between the sites; order 0 keeps only the direct paths."""

    bounce_order: int


def site_coefficients(omega: float, model: ModelKind) -> SiteCoefficients:
    """Amplitudes of a single delta scatterer of opacity ``omega``.

    Both models satisfy |t|^2 + |r|^2 + 2|f|^2 = 1 and
    |t_same|^2 + |r_same|^2 = 1 exactly.
    """
    if not (isinstance(omega, (int, float)) and math.isfinite(omega)):
        raise DomainError(f"omega must be finite, got {omega!r}")
    if omega < 0.0:
        raise DomainError(f"omega must be non-negative, got {omega!r}")
    if model is ModelKind.SPIN_EXCHANGE:
        den = 1.0 + omega * omega
        return SiteCoefficients(
            t=complex(1.0 / den),
            r=complex(-omega * omega / den),
            f=-1j * omega / den,
            t_same=complex(1.0),
            r_same=complex(0.0),
        )
    if model is ModelKind.HEISENBERG_CONTACT:
        den = (1.0 + 1j * omega) * (1.0 - 3j * omega)
        return SiteCoefficients(
            t=(1.0 - 1j * omega) / den,
            r=1j * omega * (1.0 + 3j * omega) / den,
            f=-2j * omega / den,
            t_same=1.0 / (1.0 + 1j * omega),
            r_same=-1j * omega / (1.0 + 1j * omega),
        )
    raise UnsupportedModelError(f"unknown model {model!r}")


def dressed_coefficients(pt: DimensionlessPoint):
    """Bounce-dressed no-flip coefficients for the contact model.

    Returns (t_a, r_a, t_b, r_b, sigma_a, sigma_b) where the self-energy

        sigma_A = f_A^2 r_same_B E^2 / (1 - r_A r_same_B E^2)

    resums the excursions in which the mediator flips at one site, bounces
    off the partner in the aligned-spin state, and flips back.  Only the
    contact model has them; the exchange model is transparent to the
    aligned-spin mediator (r_same = 0), so raising it is an error.
    """
    pt = validate(pt)
    if pt.model is not ModelKind.HEISENBERG_CONTACT:
        raise UnsupportedModelError("dressed coefficients exist only for the contact model")
    a = site_coefficients(pt.omega_a, pt.model)
    b = site_coefficients(pt.omega_b, pt.model)
    e2 = cmath.exp(2j * pt.phase)
    sigma_a = a.f * a.f * b.r_same * e2 / (1.0 - a.r * b.r_same * e2)
    sigma_b = b.f * b.f * a.r_same * e2 / (1.0 - b.r * a.r_same * e2)
    return (a.t + sigma_a, a.r + sigma_a, b.t + sigma_b, b.r + sigma_b, sigma_a, sigma_b)


def amplitudes(pt: DimensionlessPoint) -> AmplitudeSet:
    """Exact two-site amplitudes for the three open channels.

    The denominators cannot vanish for real phase because |r_A r_B| < 1 at
    any finite opacity; this is asserted rather than assumed.
    """
    pt = validate(pt)
    a = site_coefficients(pt.omega_a, pt.model)
    b = site_coefficients(pt.omega_b, pt.model)
    ea = cmath.exp(1j * pt.phase)
    em = cmath.exp(-1j * pt.phase)
    e2 = cmath.exp(2j * pt.phase)

    if pt.model is ModelKind.SPIN_EXCHANGE:
        den = 1.0 - a.r * b.r * e2
        assert abs(den) > 0.0
        t_nf = a.t * b.t * ea / den
        r_nf = a.r + a.t * a.t * b.r * e2 / den
        t_fb = a.t * b.f * ea / den
        r_fb = t_fb * ea
        t_fa = (1.0 + a.t * b.r * e2 / den) * a.f * ea
        r_fa = t_fa * em
        return AmplitudeSet(t_nf, r_nf, t_fb, r_fb, t_fa, r_fa)

    ta_d, ra_d, tb_d, rb_d, _, _ = dressed_coefficients(pt)
    den = 1.0 - ra_d * rb_d * e2
    assert abs(den) > 0.0
    den_b = 1.0 - a.r_same * b.r * e2  # post-flip bouncing, flip happened at B
    den_a = 1.0 - a.r * b.r_same * e2  # post-flip bouncing, flip happened at A
    t_nf = ta_d * tb_d * ea / den
    r_nf = ra_d + ta_d * ta_d * rb_d * e2 / den
    reach_b = ta_d * ea / den
    t_fb = reach_b * b.f * (1.0 + a.r_same * b.t * e2 / den_b)
    r_fb = reach_b * b.f * a.t_same * ea / den_b
    stand_a = 1.0 + ta_d * rb_d * e2 / den
    t_fa = stand_a * a.f * b.t_same * ea / den_a
    r_fa = stand_a * a.f * (1.0 + a.t * b.r_same * e2 / den_a)
    return AmplitudeSet(t_nf, r_nf, t_fb, r_fb, t_fa, r_fa)


def _partial_geometric(q: complex, last_index: int) -> complex:
    """Sum of q^j for j = 0..last_index; zero when last_index < 0."""
    if last_index < 0:
        return complex(0.0)
    total = complex(1.0)
    for _ in range(last_index):
        total = 1.0 + q * total
    return total


def truncated_amplitudes(pt: DimensionlessPoint, n: int) -> TruncatedAmplitudeSet:
    """Exchange-model amplitudes with at most ``n`` bounces kept.

    A bounce is one factor of (r_A r_B E^2); n = 0 keeps only the direct
    paths (for the reflection off A that is the bare r_A, for the A-flip
    the bare f_A E).  As n grows each field converges geometrically to the
    matching field of :func:`amplitudes`.

    The contact model is rejected: its nested series have no single
    bounce-count convention, so no truncation is defined for it here.
    """
    pt = validate(pt)
    if pt.model is not ModelKind.SPIN_EXCHANGE:
        raise UnsupportedModelError("bounce truncation is defined for the exchange model only")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"bounce count must be a non-negative integer, got {n!r}")
    a = site_coefficients(pt.omega_a, pt.model)
    b = site_coefficients(pt.omega_b, pt.model)
    ea = cmath.exp(1j * pt.phase)
    em = cmath.exp(-1j * pt.phase)
    e2 = cmath.exp(2j * pt.phase)
    q = b.r * a.r * e2
    full = _partial_geometric(q, n)        # j = 0..n
    clipped = _partial_geometric(q, n - 1)  # j = 0..n-1
    t_nf = a.t * b.t * ea * full
    r_nf = a.r + a.t * a.t * b.r * e2 * clipped
    t_fb = a.t * b.f * ea * full
    r_fb = t_fb * ea
    t_fa = a.f * ea * (1.0 + a.t * b.r * e2 * clipped)
    r_fa = t_fa * em
    return TruncatedAmplitudeSet(t_nf, r_nf, t_fb, r_fb, t_fa, r_fa, bounce_order=n)


def interaction_time_map(omega: float) -> tuple[float, float]:
    """Map an opacity to the equivalent rotation-angle picture.

    Returns (rotation_angle, transmit_probability): the angle a transmitted
    mediator rotates the joint spin state by, arctan(omega), and the
    probability 1/(1+omega^2) that the transmission happens at all.  A full
    pi/2 rotation needs omega -> infinity, where the transmission
    probability vanishes: the complete flip is unreachable.
    """
    if not (isinstance(omega, (int, float)) and math.isfinite(omega)) or omega < 0.0:
        raise DomainError(f"omega must be finite and non-negative, got {omega!r}")
    return math.atan(omega), 1.0 / (1.0 + omega * omega)
