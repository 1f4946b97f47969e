"""Truncated two-mode Fock-basis oracle.

Builds the photon-added superpositions by direct expansion and evaluates
operator expectations with dense linear algebra.  This path never touches
the closed-form Laguerre machinery in :mod:`photoncat.states`; it is the
independent ground truth the closed forms are adjudicated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special, states
from .errors import DegenerateState, UnconvergedError
from .states import MomentTable, StateSpec

DEFAULT_TAIL_TOL = 1e-12
DEFAULT_CONVERGENCE_TOL = 1e-10
CUTOFF_CAP = 512
GROWTH = 1.25


def coherent_amplitudes(gamma: complex, cutoff: int) -> np.ndarray:
    """Fock expansion e^(-|g|^2/2) g^j / sqrt(j!) via the stable ratio recurrence."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    g = complex(gamma)
    c = np.zeros(cutoff, dtype=complex)
    c[0] = math.exp(-0.5 * abs(g) ** 2)
    for j in range(cutoff - 1):
        c[j + 1] = c[j] * g / math.sqrt(j + 1)
    return c


@dataclass(frozen=True)
class FockStateTwoMode:
    """Normalized amplitude grid c[j, k] with its truncation bookkeeping."""

    spec: StateSpec | None
    cutoff_a: int
    cutoff_b: int
    amplitudes: np.ndarray
    norm_sq_pre: float
    tail_mass: float


def _component_pairs(spec: StateSpec) -> list[tuple[complex, complex, float]]:
    g = complex(spec.gamma)
    sign = float(spec.family.cross_sign)
    if spec.family.antisymmetric_modes:
        return [(g, -g, 1.0), (-g, g, sign)]
    return [(g, g, 1.0), (-g, -g, sign)]


def _raise_factors(count: int, order: int) -> np.ndarray:
    """sqrt((j+order)! / j!) for j < count."""
    j = np.arange(count, dtype=float)
    out = np.ones(count)
    for i in range(1, order + 1):
        out *= j + i
    return np.sqrt(out)


def build_state(
    spec: StateSpec,
    cutoff_a: int,
    cutoff_b: int,
    tail_tol: float | None = DEFAULT_TAIL_TOL,
) -> FockStateTwoMode:
    """Expand N a+^m b+^n (superposition) on the truncated grid and normalize.

    ``norm_sq_pre`` is the squared norm before normalization, directly
    comparable to :func:`photoncat.states.norm_const_sq_inv`.  ``tail_mass``
    estimates the probability living in the outermost two rows/columns;
    when it exceeds ``tail_tol`` the truncation is deemed unconverged.
    """
    if cutoff_a <= spec.m or cutoff_b <= spec.n:
        raise ValueError("cutoffs must exceed the photon-addition orders")
    psi = np.zeros((cutoff_a, cutoff_b), dtype=complex)
    base = np.zeros((cutoff_a - spec.m, cutoff_b - spec.n), dtype=complex)
    component_scale = 0.0
    for ga, gb, weight in _component_pairs(spec):
        amp_a = coherent_amplitudes(ga, cutoff_a - spec.m)
        amp_b = coherent_amplitudes(gb, cutoff_b - spec.n)
        base += weight * np.outer(amp_a, amp_b)
        component_scale += 1.0
    fa = _raise_factors(cutoff_a - spec.m, spec.m)
    fb = _raise_factors(cutoff_b - spec.n, spec.n)
    psi[spec.m :, spec.n :] = base * np.outer(fa, fb)
    norm_sq_pre = float(np.sum(np.abs(psi) ** 2))
    # Scale of an uncancelled superposition, for the relative degeneracy test.
    scale = component_scale * float(
        np.sum(np.abs(np.outer(fa, fb)) ** 2 * np.abs(np.outer(
            coherent_amplitudes(spec.gamma, cutoff_a - spec.m),
            coherent_amplitudes(spec.gamma, cutoff_b - spec.n),
        )) ** 2)
    )
    if norm_sq_pre < 1e-30 or norm_sq_pre < states.DEGENERACY_RTOL * scale:
        raise DegenerateState(
            f"{spec.family.value} at gamma={spec.gamma} has vanishing norm "
            f"{norm_sq_pre:.3e} on the truncated grid"
        )
    psi /= math.sqrt(norm_sq_pre)
    prob = np.abs(psi) ** 2
    tail = float(prob[-2:, :].sum() + prob[:, -2:].sum())
    if tail_tol is not None and tail > tail_tol:
        raise UnconvergedError(
            f"tail mass {tail:.3e} exceeds {tail_tol:.1e} at cutoffs "
            f"({cutoff_a}, {cutoff_b})"
        )
    return FockStateTwoMode(
        spec=spec,
        cutoff_a=cutoff_a,
        cutoff_b=cutoff_b,
        amplitudes=psi,
        norm_sq_pre=norm_sq_pre,
        tail_mass=tail,
    )


def _lower_a(psi: np.ndarray, order: int) -> np.ndarray:
    """Apply a^order on mode a: out[j] = sqrt((j+order)!/j!) psi[j+order]."""
    if order == 0:
        return psi
    ca = psi.shape[0]
    out = np.zeros_like(psi)
    if order < ca:
        out[: ca - order, :] = psi[order:, :] * _raise_factors(ca - order, order)[:, None]
    return out


def _lower_b(psi: np.ndarray, order: int) -> np.ndarray:
    if order == 0:
        return psi
    cb = psi.shape[1]
    out = np.zeros_like(psi)
    if order < cb:
        out[:, : cb - order] = psi[:, order:] * _raise_factors(cb - order, order)[None, :]
    return out


def moment_numeric(state: FockStateTwoMode, p: int, q: int) -> complex:
    """Normal moment <a+^p a^q> on mode a, mode b summed over.

    Evaluated as <a^p psi | a^q psi>, which never leaves the truncated grid.
    """
    if p < 0 or q < 0:
        raise ValueError("moment orders must be nonnegative")
    if max(p, q) > state.cutoff_a - 1:
        raise ValueError("moment order exceeds cutoff support")
    return complex(np.vdot(_lower_a(state.amplitudes, p), _lower_a(state.amplitudes, q)))


def mode_a_antinormal(state: FockStateTwoMode, p: int, q: int) -> complex:
    """Anti-normal <a^p a+^q> on mode a via direct creation-operator application.

    Independent of the ordering-inversion machinery: evaluated as
    <a+^p psi | a+^q psi> on a grid padded by max(p, q).
    """
    pad = max(p, q)
    ca = state.cutoff_a + pad
    big = np.zeros((ca, state.cutoff_b), dtype=complex)
    big[: state.cutoff_a, :] = state.amplitudes

    def raised(order: int) -> np.ndarray:
        if order == 0:
            return big
        out = np.zeros_like(big)
        out[order:, :] = big[: ca - order, :] * _raise_factors(ca - order, order)[:, None]
        return out

    return complex(np.vdot(raised(p), raised(q)))


def two_mode_antinormal(state: FockStateTwoMode, p: int, q: int) -> complex:
    """<a^p a+^q b^p b+^q>: the reference-figure convention object.

    Creation operators extend support, so the grid is padded by max(p, q)
    before raising; the padded region stays exact because a+ only moves
    amplitude upward.
    """
    pad = max(p, q)
    ca, cb = state.cutoff_a + pad, state.cutoff_b + pad
    big = np.zeros((ca, cb), dtype=complex)
    big[: state.cutoff_a, : state.cutoff_b] = state.amplitudes

    def raised(order: int) -> np.ndarray:
        out = np.zeros_like(big)
        if order == 0:
            return big.copy()
        fa = _raise_factors(ca - order, order)
        out[order:, :] = big[: ca - order, :] * fa[:, None]
        out2 = np.zeros_like(big)
        fb = _raise_factors(cb - order, order)
        out2[:, order:] = out[:, : cb - order] * fb[None, :]
        return out2

    return complex(np.vdot(raised(p), raised(q)))


def quadrature_central_moment(state: FockStateTwoMode, l: int) -> float:
    """<(X - <X>)^l> of mode a, X = (a + a+)/sqrt(2).

    Computed two ways -- powers of the tridiagonal X on the reduced density
    matrix, and the pair-contraction expansion over normal moments -- which
    must agree to 1e-10 relative; the density-matrix value is returned.
    """
    if l < 1 or l > 12:
        raise ValueError("quadrature order limited to 1 <= l <= 12")
    ca = state.cutoff_a
    rho = state.amplitudes @ state.amplitudes.conj().T
    x_op = np.zeros((ca, ca))
    sub = np.sqrt(np.arange(1, ca) / 2.0)
    x_op[np.arange(ca - 1), np.arange(1, ca)] = sub
    x_op[np.arange(1, ca), np.arange(ca - 1)] = sub
    xbar = float(np.trace(rho @ x_op).real)
    centered = x_op - xbar * np.eye(ca)
    power = np.eye(ca)
    for _ in range(l):
        power = power @ centered
    dens_val = float(np.trace(rho @ power).real)

    mom_val = special.quadrature_central_power(
        lambda j, k: moment_numeric(state, j, k), l
    )
    scale = max(1.0, abs(dens_val))
    if abs(dens_val - mom_val) > 1e-10 * scale:
        raise UnconvergedError(
            f"quadrature routes disagree at l={l}: density {dens_val!r} vs "
            f"moment expansion {mom_val!r}"
        )
    return dens_val


def default_cutoffs(spec: StateSpec, headroom: int) -> tuple[int, int]:
    """Base Poisson-support heuristic plus addition order plus headroom."""
    g = abs(spec.gamma)
    base = max(24, math.ceil(g * g + 8 * g))
    return base + spec.m + headroom, base + spec.n + headroom


def _moment_set(state: FockStateTwoMode, max_order: int, convention: str) -> dict:
    out = {}
    for total in range(2 * max_order + 1):
        for p in range(total + 1):
            q = total - p
            if convention == "mode_a":
                out[(p, q)] = moment_numeric(state, p, q)
            else:
                out[(p, q)] = two_mode_antinormal(state, p, q)
    return out


def moment_table_oracle(
    spec: StateSpec,
    max_order: int,
    convergence_tol: float = DEFAULT_CONVERGENCE_TOL,
    convention: str = "mode_a",
    return_cutoff: bool = False,
):
    """Oracle moment table with adaptive cutoff refinement.

    Cutoffs start at the default policy and grow by 25% until every tracked
    moment moves by less than ``convergence_tol`` (relative), capping at
    512.  For the mode_a convention the normal moments are measured
    directly; the two_mode convention measures the anti-normal objects and
    inverts the ordering relation, mirroring how those tables are defined.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if convention not in ("mode_a", "two_mode"):
        raise ValueError(f"unknown convention {convention!r}")
    ca, cb = default_cutoffs(spec, headroom=2 * max_order)

    def attempt(ca_i: int, cb_i: int):
        state = build_state(spec, ca_i, cb_i, tail_tol=None)
        if state.tail_mass > DEFAULT_TAIL_TOL:
            return None
        return _moment_set(state, max_order, convention), ca_i

    prev = None
    while ca <= CUTOFF_CAP and cb <= CUTOFF_CAP:
        got = attempt(ca, cb)
        if got is not None:
            values, cutoff_used = got
            if prev is not None:
                change = max(
                    abs(values[key] - prev[key]) / max(1.0, abs(values[key]))
                    for key in values
                )
                if change <= convergence_tol:
                    return _finish(
                        spec, max_order, values, convention, change,
                        cutoff_used, return_cutoff,
                    )
            prev = values
        ca = math.ceil(ca * GROWTH)
        cb = math.ceil(cb * GROWTH)
    raise UnconvergedError(
        f"oracle moments for {spec} did not converge below cutoff {CUTOFF_CAP}"
    )


def _finish(spec, max_order, values, convention, change, cutoff_used, return_cutoff):
    if convention == "mode_a":
        normal = {(q, p): v for (p, q), v in values.items()}
    else:
        normal = states.invert_antinormal(values, max_order)
        normal[(0, 0)] = 1.0 + 0j
    table = MomentTable(
        spec=spec,
        max_order=max_order,
        normal_moments=normal,
        provenance="oracle",
        convention=convention,
        est_error=change,
    )
    if return_cutoff:
        return table, cutoff_used
    return table


def oracle_quadrature(
    spec: StateSpec, l: int, convergence_tol: float = DEFAULT_CONVERGENCE_TOL
) -> float:
    """Adaptively converged <(X - <X>)^l> for a state spec."""
    ca, cb = default_cutoffs(spec, headroom=2 * l)
    prev = None
    while ca <= CUTOFF_CAP and cb <= CUTOFF_CAP:
        state = build_state(spec, ca, cb, tail_tol=None)
        if state.tail_mass <= DEFAULT_TAIL_TOL:
            val = quadrature_central_moment(state, l)
            if prev is not None and abs(val - prev) <= convergence_tol * max(1.0, abs(val)):
                return val
            prev = val
        ca = math.ceil(ca * GROWTH)
        cb = math.ceil(cb * GROWTH)
    raise UnconvergedError(f"quadrature moment for {spec} did not converge")
