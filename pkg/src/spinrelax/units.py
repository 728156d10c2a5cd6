"""Physical constants and unit conversions.

All internal computation runs in natural units (hbar = c = 1): energies in
MeV, times in inverse MeV. Conversions to laboratory units (tesla, oersted,
seconds, inverse meters) happen only at the I/O boundary.

This module is the single constants table of the package; every other
module reads from here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Nuclear magneton as an energy per unit field, MeV/T.
NUCLEAR_MAGNETON = 3.15245e-14
# MeV * s
HBAR = 6.582119569e-22
# MeV * m
HBAR_C = 1.973269804e-13
# MeV
PROTON_MASS = 938.27
PROTON_G_FACTOR = 5.58

# Oersted and gauss are numerically equal; 1 G = 1e-4 T.
TESLA_PER_OERSTED = 1e-4

DIMENSIONS = (
    "energy",
    "inverse_energy",
    "magnetic_field",
    "moment_per_field",
    "dimensionless",
)


class DimensionError(ValueError):
    """Arithmetic attempted between quantities of different dimension."""


@dataclass(frozen=True)
class Quantity:
    """A value tagged with its dimension.

    Addition and subtraction require matching dimensions; multiplication
    by a bare number rescales the value. No general unit algebra beyond
    that is attempted.
    """

    value: float
    dimension: str

    def __post_init__(self):
        if self.dimension not in DIMENSIONS:
            raise DimensionError(f"unknown dimension {self.dimension!r}")

    def _check(self, other):
        if not isinstance(other, Quantity):
            raise DimensionError("Quantity combines only with Quantity")
        if other.dimension != self.dimension:
            raise DimensionError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}"
            )

    def __add__(self, other):
        self._check(other)
        return Quantity(self.value + other.value, self.dimension)

    def __sub__(self, other):
        self._check(other)
        return Quantity(self.value - other.value, self.dimension)

    def __mul__(self, scalar):
        if isinstance(scalar, Quantity):
            raise DimensionError("product of two Quantities is not supported")
        return Quantity(self.value * scalar, self.dimension)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ParticleSpec:
    """A spin-1/2 carrier: rest mass [MeV], g-factor, charge sign."""

    mass: float
    g_factor: float
    charge_sign: int = 1

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("particle mass must be positive")
        if self.charge_sign not in (1, -1):
            raise ValueError("charge_sign must be +1 or -1")


PROTON = ParticleSpec(mass=PROTON_MASS, g_factor=PROTON_G_FACTOR, charge_sign=1)

PARTICLE_PRESETS = {"proton": PROTON}


def gyromagnetic_ratio(p: ParticleSpec) -> float:
    """Magnetic moment per unit field, g*q/(2m), in MeV/T.

    Expressed through the nuclear magneton: a proton-mass particle gets
    g_factor * NUCLEAR_MAGNETON, heavier carriers scale as 1/mass.
    """
    return p.charge_sign * p.g_factor * NUCLEAR_MAGNETON * (PROTON_MASS / p.mass)


def larmor_frequency(p: ParticleSpec, hz_tesla: float) -> float:
    """Level splitting gamma_p * H_z in MeV for a static field in tesla."""
    return gyromagnetic_ratio(p) * hz_tesla


def oersted_to_tesla(h: float) -> float:
    return h * TESLA_PER_OERSTED


def tesla_to_oersted(h: float) -> float:
    return h / TESLA_PER_OERSTED


def inverse_meter_to_mev(x: float) -> float:
    """Interpret an inverse length as an energy via hbar*c."""
    return x * HBAR_C


def mev_to_inverse_meter(e: float) -> float:
    return e / HBAR_C


def mev_inverse_to_seconds(t: float) -> float:
    """Convert a time expressed in 1/MeV to seconds."""
    return t * HBAR


def seconds_to_mev_inverse(t: float) -> float:
    return t / HBAR


def mev_to_megahertz(e: float) -> float:
    """Cycle frequency in MHz of an energy splitting, e/(2 pi hbar)."""
    return e / HBAR / (2.0 * math.pi) / 1e6
