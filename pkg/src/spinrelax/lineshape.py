"""Lorentzian spectral density of the driving field."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LorentzianLine:
    """Lorentzian line f(w) = (delta/pi) / (delta^2 + (w - omega0)^2).

    omega0 is the line center [MeV] (the resonance frequency of the drive),
    delta the half-width at half-maximum [MeV]. The line carries unit mass
    over the full axis and peaks at 1/(pi*delta).
    """

    omega0: float
    delta: float

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("line half-width must be positive")

    def density(self, omega):
        """Evaluate f at omega [MeV]; accepts scalars or arrays."""
        d = self.delta
        return (d / np.pi) / (d * d + (omega - self.omega0) ** 2)

    def mass_between(self, a: float, b: float) -> float:
        """Line mass over [a, b] by the arctan antiderivative (+-inf allowed)."""
        if a > b:
            raise ValueError("interval must satisfy a <= b")
        lo = math.atan((a - self.omega0) / self.delta)
        hi = math.atan((b - self.omega0) / self.delta)
        return (hi - lo) / math.pi
