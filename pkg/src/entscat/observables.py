"""From amplitudes to physics: post-selected states, concurrence, probability.

Detecting the mediator spin-flipped on one side projects the qubit pair
onto an (unnormalized) two-term state

    w_updown |up down> + w_downup |down up>

whose concurrence is 2|w_updown w_downup| / (|w_updown|^2 + |w_downup|^2)
and whose squared norm is the detection probability for that side.  For
the exchange model both sides give identical concurrence and probability;
for the contact model they differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closedform import amplitudes
from .core import AmplitudeSet, DimensionlessPoint, ObservableSet, Side, validate


@dataclass(frozen=True)
class PostSelectedState:
    """Unnormalized weights of |up down> and |down up> after detecting the
    flipped mediator on ``side``; norm_squared is the detection probability."""

    coeff_updown: complex
    coeff_downup: complex
    side: Side

    @property
    def norm_squared(self) -> float:
        return abs(self.coeff_updown) ** 2 + abs(self.coeff_downup) ** 2


def post_selected_state(amps: AmplitudeSet, side: Side) -> PostSelectedState:
    if side is Side.TRANSMITTED:
        return PostSelectedState(amps.t_flipb, amps.t_flipa, side)
    return PostSelectedState(amps.r_flipb, amps.r_flipa, side)


def concurrence_and_ratio(state: PostSelectedState) -> tuple[float | None, float | None]:
    """Concurrence C and weight ratio a = |w_downup / w_updown|.

    C is computed in the symmetric form 2|xy|/(|x|^2+|y|^2), which needs no
    infinity arithmetic when one weight vanishes (a is reported as inf
    then).  Both weights zero means nothing is ever detected; that returns
    (None, None) rather than a misleading 0.
    """
    x = abs(state.coeff_updown)
    y = abs(state.coeff_downup)
    if x == 0.0 and y == 0.0:
        return None, None
    scale = max(x, y)  # keeps the squares from underflowing for tiny weights
    xs, ys = x / scale, y / scale
    concurrence = 2.0 * xs * ys / (xs * xs + ys * ys)
    ratio = math.inf if x == 0.0 else y / x
    return concurrence, ratio


def probability(state: PostSelectedState) -> float:
    """Detection probability on the state's side.  The two sides share the
    total flip flux (P_t + P_r <= 1); the exchange model splits it evenly,
    capping each side at 1/2."""
    return state.norm_squared


def observables_at(pt: DimensionlessPoint) -> ObservableSet:
    """Full per-side observables at a parameter point."""
    pt = validate(pt)
    amps = amplitudes(pt)
    trans = post_selected_state(amps, Side.TRANSMITTED)
    refl = post_selected_state(amps, Side.REFLECTED)
    c_t, a_t = concurrence_and_ratio(trans)
    c_r, a_r = concurrence_and_ratio(refl)
    return ObservableSet(
        concurrence_t=c_t,
        probability_t=probability(trans),
        ratio_a_t=a_t,
        concurrence_r=c_r,
        probability_r=probability(refl),
        ratio_a_r=a_r,
    )


def model1_probability(omega_a, omega_b, sin2_kd):
    """Scalar detection probability for the exchange model.

    Written with field operations only, so exact inputs (e.g. Fraction)
    propagate exactly:

        P = (a + b + 4ab(1+b)s) / ((1+a+b)^2 + 4ab(1+a)(1+b)s)

    with a = omega_a^2, b = omega_b^2, s = sin^2(kd).
    """
    a = omega_a * omega_a
    b = omega_b * omega_b
    num = a + b + 4 * a * b * (1 + b) * sin2_kd
    den = (1 + a + b) ** 2 + 4 * a * b * (1 + a) * (1 + b) * sin2_kd
    return num / den


def model1_ratio(omega_a, omega_b, sin2_kd):
    """Scalar weight ratio for the exchange model:

        a = (omega_a/omega_b) sqrt(1 + 4 omega_b^2 (1 + omega_b^2) s).

    Returns inf when omega_b = 0 with omega_a > 0 (only the A flip
    survives) and nan for the doubly degenerate omega_a = omega_b = 0.
    """
    if omega_b == 0:
        return math.inf if omega_a > 0 else math.nan
    b = omega_b * omega_b
    return omega_a / omega_b * math.sqrt(1 + 4 * b * (1 + b) * sin2_kd)
