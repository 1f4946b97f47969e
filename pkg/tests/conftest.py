"""Shared test helpers.

``BargmannPoly`` realizes the ladder algebra on polynomials with exact
integer coefficients (a -> d/dz, a+ -> z), so operator-ordering identities
can be checked with no floating point at all.
"""

import math

import numpy as np
import pytest

from photoncat.fock import FockStateTwoMode, coherent_amplitudes


class BargmannPoly:
    """Polynomial in z with exact integer coefficients: {exponent: coeff}."""

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def basis(j):
        return BargmannPoly({j: 1})

    def create(self):
        return BargmannPoly({e + 1: c for e, c in self.coeffs.items()})

    def annihilate(self):
        return BargmannPoly({e - 1: c * e for e, c in self.coeffs.items() if e > 0})

    def apply_word(self, word):
        """Apply a string like 'a a a+ a+' right-to-left (rightmost acts first)."""
        out = self
        for op in reversed(word.split()):
            out = out.create() if op == "a+" else out.annihilate()
        return out

    def scaled(self, factor):
        return BargmannPoly({e: c * factor for e, c in self.coeffs.items()})

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return BargmannPoly(coeffs)

    def __eq__(self, other):
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"BargmannPoly({self.coeffs})"


def apply_ladder_word(j, word):
    return BargmannPoly.basis(j).apply_word(word)


def coherent_product_state(gamma_a, gamma_b, cutoff_a=42, cutoff_b=42):
    """Product coherent state as a FockStateTwoMode (renormalized truncation)."""
    grid = np.outer(
        coherent_amplitudes(gamma_a, cutoff_a), coherent_amplitudes(gamma_b, cutoff_b)
    )
    norm = float(np.sum(np.abs(grid) ** 2))
    grid = grid / math.sqrt(norm)
    prob = np.abs(grid) ** 2
    return FockStateTwoMode(
        spec=None,
        cutoff_a=cutoff_a,
        cutoff_b=cutoff_b,
        amplitudes=grid,
        norm_sq_pre=norm,
        tail_mass=float(prob[-2:, :].sum() + prob[:, -2:].sum()),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
