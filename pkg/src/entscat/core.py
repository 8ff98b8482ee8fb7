"""Parameter space, spin channels, and shared result containers.

A spin-1/2 mediator X is scattered off two qubits A and B pinned at
x = -d/2 and x = +d/2, each acting through a delta-shaped spin-dependent
potential.  All physics downstream is a function of three dimensionless
numbers:

    omega_a = m g_a / (hbar^2 k)    opacity of site A
    omega_b = m g_b / (hbar^2 k)    opacity of site B
    phase   = k d                   propagation phase across the gap

plus the choice of coupling model.  The phase enters every amplitude only
through exp(2i*phase), so observables are periodic in ``phase`` with period
pi; :func:`validate` folds the phase into [0, pi) once so that everything
downstream sees a canonical value.

The physical-unit layer speaks the conventional units g in [hbar^2 pi/(m d)]
and k in [pi/d], in which omega = g/k and phase = pi*k*d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum


class DomainError(ValueError):
    """An input parameter lies outside its physical domain."""


class ValidationError(DomainError):
    """A dimensionless parameter point failed validation."""


class UnsupportedModelError(ValueError):
    """The requested operation is not defined for this coupling model."""


class NumericError(RuntimeError):
    """A numeric solve failed; carries the offending parameter point."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class ModelKind(Enum):
    """Coupling model between the mediator and each qubit.

    SPIN_EXCHANGE: pure exchange coupling g (s+ s- + s- s+); the mediator
    does not feel a site whose spin matches its own.
    HEISENBERG_CONTACT: full sigma.sigma contact coupling; the mediator
    scatters off a site in either relative spin state.
    """

    SPIN_EXCHANGE = "xy"
    HEISENBERG_CONTACT = "heis"


class Channel(Enum):
    """Open spin channels, labelled (X; A B).  Exactly two spins are up in
    each, which is why only these three couple to the incident state."""

    NO_FLIP = ("down", "up", "up")
    FLIP_B = ("up", "up", "down")
    FLIP_A = ("up", "down", "up")

    @property
    def up_count(self) -> int:
        return sum(1 for s in self.value if s == "up")


class Side(Enum):
    """Detection side for the post-selected mediator."""

    TRANSMITTED = "t"
    REFLECTED = "r"


@dataclass(frozen=True)
class DimensionlessPoint:
    """A complete parameter point: site opacities, gap phase, model.

    ``phase_original`` is populated by :func:`validate` when the phase had
    to be folded into [0, pi); it preserves the caller's raw value.
    """

    omega_a: float
    omega_b: float
    phase: float
    model: ModelKind
    phase_original: float | None = None

    @property
    def sin2_kd(self) -> float:
        s = math.sin(self.phase)
        return s * s


@dataclass(frozen=True)
class PhysicalPoint:
    """Couplings and momentum in paper-style units: g in [hbar^2 pi/(m d)],
    k in [pi/d], separation d as a multiple of the unit length."""

    g_a: float
    g_b: float
    k: float
    d: float = 1.0


@dataclass(frozen=True)
class SiteCoefficients:
    """Single-scatterer amplitudes.

    t, r, f: transmission, reflection, and spin-flip amplitude when the
    mediator spin differs from the site spin (the flip amplitude is the
    same in transmission and reflection).  t_same, r_same: transmission and
    reflection when the spins match; the exchange model is transparent
    there (1, 0).
    """

    t: complex
    r: complex
    f: complex
    t_same: complex
    r_same: complex

    def flux_mismatch(self) -> float:
        """Worst deviation of the two single-site flux sums from 1."""
        flip = abs(self.t) ** 2 + abs(self.r) ** 2 + 2.0 * abs(self.f) ** 2
        same = abs(self.t_same) ** 2 + abs(self.r_same) ** 2
        return max(abs(flip - 1.0), abs(same - 1.0))


@dataclass(frozen=True)
class AmplitudeSet:
    """Two-site transmission/reflection amplitudes for the three open
    channels, with unit incident normalization.  All channels share the
    incident momentum, so the fluxes |.|^2 sum to exactly 1."""

    t_noflip: complex
    r_noflip: complex
    t_flipb: complex
    r_flipb: complex
    t_flipa: complex
    r_flipa: complex

    def as_tuple(self) -> tuple[complex, ...]:
        return (
            self.t_noflip,
            self.r_noflip,
            self.t_flipb,
            self.r_flipb,
            self.t_flipa,
            self.r_flipa,
        )

    def flux(self) -> float:
        return sum(abs(z) ** 2 for z in self.as_tuple())


@dataclass(frozen=True)
class ObservableSet:
    """Concurrence, amplitude ratio, and detection probability per side.

    Concurrence and ratio are ``None`` when nothing can be detected on that
    side (both flip amplitudes vanish), never a silent 0.  The ratio may be
    ``inf`` when only the A-flip branch survives.
    """

    concurrence_t: float | None
    probability_t: float
    ratio_a_t: float | None
    concurrence_r: float | None
    probability_r: float
    ratio_a_r: float | None


def validate(pt: DimensionlessPoint) -> DimensionlessPoint:
    """Check domains and fold the phase into the canonical window [0, pi).

    Raises ValidationError for non-finite or negative opacities and for a
    non-finite phase.  Returns the point unchanged when already canonical.
    """
    for name, value in (("omega_a", pt.omega_a), ("omega_b", pt.omega_b)):
        if not math.isfinite(value):
            raise ValidationError(f"{name} must be finite, got {value!r}")
        if value < 0.0:
            raise ValidationError(f"{name} must be non-negative, got {value!r}")
    if not math.isfinite(pt.phase):
        raise ValidationError(f"phase must be finite, got {pt.phase!r}")
    if 0.0 <= pt.phase < math.pi:
        return pt
    folded = math.fmod(pt.phase, math.pi)
    if folded < 0.0:
        folded += math.pi
    if folded >= math.pi:  # fmod rounding can land exactly on pi
        folded -= math.pi
    original = pt.phase if pt.phase_original is None else pt.phase_original
    return replace(pt, phase=folded, phase_original=original)


def to_dimensionless(p: PhysicalPoint, model: ModelKind) -> DimensionlessPoint:
    """Convert paper-unit couplings and momentum to the dimensionless point.

    In these units omega = g/k and phase = pi*k*d.  Raises DomainError when
    k or d is not positive or a coupling is negative/non-finite.
    """
    if not (math.isfinite(p.k) and p.k > 0.0):
        raise DomainError(f"k must be positive and finite, got {p.k!r}")
    if not (math.isfinite(p.d) and p.d > 0.0):
        raise DomainError(f"d must be positive and finite, got {p.d!r}")
    for name, g in (("g_a", p.g_a), ("g_b", p.g_b)):
        if not math.isfinite(g) or g < 0.0:
            raise DomainError(f"{name} must be a finite non-negative coupling, got {g!r}")
    return DimensionlessPoint(p.g_a / p.k, p.g_b / p.k, math.pi * p.k * p.d, model)


def from_dimensionless(pt: DimensionlessPoint, d: float = 1.0) -> PhysicalPoint:
    """Inverse unit conversion at separation ``d`` (in unit lengths).

    Uses the raw (unfolded) phase, so it round-trips with
    :func:`to_dimensionless` exactly as long as the phase is positive.
    """
    phase = pt.phase if pt.phase_original is None else pt.phase_original
    if not (math.isfinite(d) and d > 0.0):
        raise DomainError(f"d must be positive and finite, got {d!r}")
    if not phase > 0.0:
        raise DomainError(f"phase must be positive to recover a momentum, got {phase!r}")
    k = phase / (math.pi * d)
    return PhysicalPoint(pt.omega_a * k, pt.omega_b * k, k, d)
