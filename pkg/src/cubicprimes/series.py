"""Partial sums of the Dirichlet series over solvable moduli, and partial
Epstein zeta values for positive definite binary quadratic forms.

Both families of sums are accumulated in a fixed ascending order, so a
given call is bit-for-bit reproducible and chunked re-evaluation agrees
with the one-shot value to float associativity (tested at 1e-12).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import ArithTables, Polynomial, sieve_range
from .dset import members_and_mobius
from .errors import DomainError, ResourceError
from .residues import QuadraticForm

EPSTEIN_BUDGET = 10**7


@dataclass(frozen=True)
class PartialSumRecord:
    """Partial-sum value at checkpoint x; terms_used counts the summands
    with a nonzero Mobius factor (the only ones that contribute)."""

    x: int
    value: float
    terms_used: int


@dataclass(frozen=True)
class KappaTrajectory:
    """Checkpointed s=1 partial sums with a crude limit estimate.

    fitted_kappa is minus the mean over the last quartile of checkpoint
    values (the partial sums approach a negative constant from either
    side); fit_residual is the largest deviation from that mean inside the
    quartile window. Reported quantities only, never asserted against.
    """

    records: list[PartialSumRecord]
    fitted_kappa: float
    fit_residual: float


def dirichlet_partial_sum(
    f: Polynomial,
    s: float,
    x: int,
    checkpoints: list[int] | None = None,
    tables: ArithTables | None = None,
) -> list[PartialSumRecord]:
    """Partial sums of mu(n) log(n) / n^s over solvable moduli n <= x.

    Records are emitted at each checkpoint (default: only at x). The sum
    is a single ascending left-to-right accumulation, so a checkpoint
    value never depends on what lies beyond it.
    """
    if s < 1:
        raise DomainError(f"s = {s} below 1")
    if x < 1:
        raise DomainError("x must be >= 1")
    if checkpoints is None:
        checkpoints = [x]
    if not checkpoints or sorted(checkpoints) != list(checkpoints):
        raise DomainError("checkpoints must be nonempty and ascending")
    if checkpoints[-1] > x or checkpoints[0] < 1:
        raise DomainError("checkpoints must lie in [1, x]")
    members, mu = members_and_mobius(f, x, tables)
    keep = mu != 0
    members = members[keep]
    mu = mu[keep].astype(np.float64)
    vals = np.asarray(members, dtype=np.float64)
    terms = mu * np.log(vals) / vals**s
    running = np.cumsum(terms)
    out = []
    for cp in checkpoints:
        idx = int(np.searchsorted(members, cp, side="right"))
        value = float(running[idx - 1]) if idx > 0 else 0.0
        out.append(PartialSumRecord(x=cp, value=value, terms_used=idx))
    return out


def _log_checkpoints(x_max: int) -> list[int]:
    cps = []
    p = 10
    while p < x_max:
        cps.append(p)
        p *= 10
    cps.append(x_max)
    return cps


def kappa_trajectory(
    f: Polynomial, x_max: int, tables: ArithTables | None = None
) -> KappaTrajectory:
    """s = 1 partial sums at decade checkpoints up to x_max, with the
    last-quartile limit estimate."""
    if x_max < 1:
        raise DomainError("x_max must be >= 1")
    records = dirichlet_partial_sum(f, 1.0, x_max, _log_checkpoints(x_max), tables)
    q = max(1, math.ceil(len(records) / 4))
    window = [r.value for r in records[-q:]]
    mean = sum(window) / len(window)
    residual = max(abs(v - mean) for v in window)
    return KappaTrajectory(records=records, fitted_kappa=-mean, fit_residual=residual)


def epstein_r(form: QuadraticForm, n: int) -> int:
    """Number of integer pairs (u, v) with form(u, v) = n, solved per-n
    from the quadratic in u; the independent check against the lattice
    sweep used by the partial sums."""
    if n < 1:
        raise DomainError("n must be >= 1")
    a, b = form.a, form.b
    neg_disc = -form.discriminant
    total = 0
    vmax = math.isqrt(4 * a * n // neg_disc)
    for v in range(-vmax, vmax + 1):
        disc = 4 * a * n - neg_disc * v * v
        if disc < 0:
            continue
        t = math.isqrt(disc)
        if t * t != disc:
            continue
        for s in (t, -t) if t else (0,):
            if (-b * v + s) % (2 * a) == 0:
                total += 1
    return total


def _lattice_rows(form: QuadraticForm, n_max: int):
    """Yield (y, q_row) for every lattice row intersecting form <= n_max;
    q_row holds the exact form values with 1 <= value <= n_max."""
    a, b, c = form.a, form.b, form.c
    neg_disc = -form.discriminant
    ymax = math.isqrt(4 * a * n_max // neg_disc)
    for y in range(-ymax, ymax + 1):
        disc = 4 * a * n_max - neg_disc * y * y
        t = math.isqrt(max(disc, 0))
        xlo = (-b * y - t) // (2 * a) - 1
        xhi = (-b * y + t) // (2 * a) + 1
        xs = np.arange(xlo, xhi + 1, dtype=np.int64)
        q = a * xs * xs + b * xs * y + c * y * y
        yield y, q[(q >= 1) & (q <= n_max)]


def epstein_zeta_partial(form: QuadraticForm, s: float, n_max: int) -> float:
    """sum over nonzero lattice points with form value <= n_max of
    value^(-s), by direct double sum over the ellipse (never by per-n
    recounting). Requires s > 1."""
    if s <= 1:
        raise DomainError(f"s = {s} must exceed 1 for the lattice sum")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if n_max > EPSTEIN_BUDGET:
        raise ResourceError(f"n_max {n_max} exceeds budget {EPSTEIN_BUDGET}")
    total = 0.0
    for _, q in _lattice_rows(form, n_max):
        if q.size:
            total += float(np.power(q.astype(np.float64), -s).sum())
    return total


def representation_counts(form: QuadraticForm, n_max: int) -> np.ndarray:
    """r(n) for all n <= n_max in one lattice sweep; index 0 unused."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if n_max > EPSTEIN_BUDGET:
        raise ResourceError(f"n_max {n_max} exceeds budget {EPSTEIN_BUDGET}")
    counts = np.zeros(n_max + 1, dtype=np.int64)
    for _, q in _lattice_rows(form, n_max):
        if q.size:
            np.add.at(counts, q, 1)
    return counts


def epstein_mu_sum(
    form: QuadraticForm, s: float, n_max: int, tables: ArithTables | None = None
) -> float:
    """sum over n <= n_max of mu(n) r(n) / n^s (s >= 1); empty when n_max = 0."""
    if s < 1:
        raise DomainError(f"s = {s} below 1")
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    if n_max == 0:
        return 0.0
    counts = representation_counts(form, n_max)
    if tables is None or tables.limit < n_max:
        tables = sieve_range(max(n_max, 2))
    mu = tables.mu[: n_max + 1].astype(np.float64)
    ns = np.arange(n_max + 1, dtype=np.float64)
    ns[0] = 1.0
    terms = mu * counts / ns**s
    return float(np.cumsum(terms[1:])[-1])
