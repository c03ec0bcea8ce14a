"""Independent verification routes for the symbolic engine.

Three exact oracles (one-variable integrability, rational-LP membership
in scaled Newton polyhedra, and a two-path summation-formula evaluation)
plus one statistical oracle (Monte Carlo estimation of the defining
integral over dyadic shells).  The statistical oracle is advisory: it
never gates a symbolic result, only its own agreement test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .errors import OracleMismatch
from .germs import Germ, one_var_weight, one_var_usual_chain
from .filtration import j_lookup
from .monomial import MonomialIdeal, Rat, external_product, ideal_sum


def one_var_integrable(g: int, m: int, alpha: Rat) -> bool:
    """Integrability of |z^g|^2 / |z^m|^(2*alpha) near 0.

    In polar coordinates the radial integrand is r^(2g + 1 - 2*alpha*m),
    integrable at 0 exactly when the exponent exceeds -1.
    """
    if g < 0 or m < 2:
        raise ValueError("need g >= 0 and m >= 2")
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return g + 1 > alpha * m


class Constraint(NamedTuple):
    """Linear constraint sum(coeffs * x) <= rhs, strict when flagged."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    strict: bool


def fm_feasible(constraints: Sequence[Constraint], nvars: int) -> bool:
    """Exact feasibility of a rational linear system by variable elimination."""
    work = [Constraint(tuple(c.coeffs), Fraction(c.rhs), c.strict) for c in constraints]
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for c in work:
            a = c.coeffs[var]
            if a > 0:
                pos.append(c)
            elif a < 0:
                neg.append(c)
            else:
                rest.append(c)
        combined = []
        for p in pos:
            a = p.coeffs[var]
            for n in neg:
                b = -n.coeffs[var]
                coeffs = tuple(b * pc + a * nc for pc, nc in zip(p.coeffs, n.coeffs))
                combined.append(Constraint(coeffs, b * p.rhs + a * n.rhs,
                                           p.strict or n.strict))
        work = rest + combined
        pruned = []
        for c in work:
            if any(c.coeffs):
                pruned.append(c)
            elif c.rhs < 0 or (c.strict and c.rhs == 0):
                return False
        work = pruned
    return True


def newton_membership(a: MonomialIdeal, nu: Sequence[int], alpha: Rat) -> bool:
    """Whether nu + 1 lies in the interior of alpha times the staircase hull.

    The hull is conv(generators) + the positive orthant, so interiority is
    equivalent to dominating a convex combination of generators with a
    uniform positive slack in every coordinate.
    """
    if a.is_zero:
        raise ValueError("the zero ideal has no Newton polyhedron")
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    nu = tuple(nu)
    gens = a.gens
    n = len(gens) + 1  # lambda per generator, then the slack
    zero = Fraction(0)
    one = Fraction(1)
    cons: list[Constraint] = []
    for g_idx in range(len(gens)):
        coeffs = tuple(-one if i == g_idx else zero for i in range(n))
        cons.append(Constraint(coeffs, zero, False))
    lam_row = tuple(one if i < len(gens) else zero for i in range(n))
    cons.append(Constraint(lam_row, one, False))
    cons.append(Constraint(tuple(-c for c in lam_row), -one, False))
    for coord in range(a.dim):
        coeffs = tuple(Fraction(gens[i][coord]) if i < len(gens) else one
                       for i in range(n))
        cons.append(Constraint(coeffs, Fraction(nu[coord] + 1) / alpha, False))
    eps_row = tuple(zero if i < len(gens) else -one for i in range(n))
    cons.append(Constraint(eps_row, zero, True))
    return fm_feasible(cons, n)


def summation_path(m1: int, m2: int, alpha: Rat) -> MonomialIdeal:
    """Multiplier ideal of (z1^m1, z2^m2) at alpha in (0,1), two ways.

    Route one scans a box with the rational-LP membership test; route two
    evaluates the split formula over one-variable chains, one external
    product per interval between adjacent candidate split points.  The
    routes must agree; the common ideal is returned.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    a = MonomialIdeal(2, [(m1, 0), (0, m2)])
    members = [(i, j) for i in range(m1 + 1) for j in range(m2 + 1)
               if newton_membership(a, (i, j), alpha)]
    newton_route = MonomialIdeal(2, members)

    c1 = one_var_usual_chain(m1)
    c2 = one_var_usual_chain(m2)
    points = {Fraction(0), alpha}
    points.update(Fraction(i, m1) for i in range(1, m1) if Fraction(i, m1) < alpha)
    points.update(alpha - Fraction(j, m2) for j in range(1, m2)
                  if 0 < alpha - Fraction(j, m2))
    grid = sorted(points)
    split_route = MonomialIdeal.zero(2)
    for lo, hi in zip(grid, grid[1:]):
        # on (lo, hi) both factors are constant by right-continuity
        block = external_product(j_lookup(c1, lo), j_lookup(c2, alpha - hi))
        split_route = ideal_sum(split_route, block)
    if newton_route != split_route:
        raise OracleMismatch(
            f"summation routes disagree for ({m1},{m2}) at {alpha}: "
            f"{newton_route.gens} vs {split_route.gens}")
    return newton_route


@dataclass(frozen=True)
class MonteCarloConfig:
    shells: int = 12
    samples: int = 20000
    margin: float = 0.05
    seed: int = 0


def _case_key(ms: Sequence[int], nu: Sequence[int], alpha: Fraction) -> int:
    h = 0
    for v in (*ms, -1, *nu, -1, alpha.numerator, alpha.denominator):
        h = (h * 1000003 + v + 11) % ((1 << 61) - 1)
    return h


def monte_carlo_integrable(germ: Germ, nu: Sequence[int], alpha: Rat,
                           config: MonteCarloConfig | None = None) -> dict:
    """Statistical integrability verdict for |z^nu|^2 / |f|^(2*alpha).

    Estimates the integral over the dyadic shells max|z_j| in
    (2^-(k+1), 2^-k] by uniform polydisk sampling, fits the per-shell
    geometric ratio by least squares on the log estimates, and compares
    it against 1 with the configured margin.
    """
    config = config or MonteCarloConfig()
    alpha = Fraction(alpha)
    nu = tuple(int(v) for v in nu)
    if len(nu) != germ.dim or any(v < 0 for v in nu):
        raise ValueError(f"bad monomial exponent {nu} for a {germ.dim}-variable germ")
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    d = germ.dim
    ms = np.array(germ.exponents, dtype=np.float64)
    coeffs = np.array([float(c) for c in germ.coefficients], dtype=np.float64)
    two_nu = 2.0 * np.array(nu, dtype=np.float64)
    two_alpha = 2.0 * float(alpha)
    key = _case_key(germ.exponents, nu, alpha)
    estimates = []
    for k in range(1, config.shells + 1):
        rng = np.random.default_rng([config.seed, key, k])
        radius = 2.0 ** (-k)
        radii = radius * np.sqrt(rng.random((config.samples, d)))
        theta = rng.random((config.samples, d))
        z = radii * np.exp(2j * np.pi * theta)
        in_shell = radii.max(axis=1) > radius / 2.0
        f_abs = np.abs((coeffs * z ** ms).sum(axis=1))
        np.maximum(f_abs, 1e-300, out=f_abs)
        integrand = np.prod(radii ** two_nu, axis=1) / f_abs ** two_alpha
        volume = (np.pi * radius * radius) ** d
        estimates.append(volume * float(np.mean(integrand * in_shell)))
    ks = np.arange(1, config.shells + 1, dtype=np.float64)
    logs = np.log2(np.maximum(estimates, 1e-300))
    slope = float(np.polyfit(ks, logs, 1)[0])
    ratio = 2.0 ** slope
    if ratio <= 1.0 - config.margin:
        verdict = "Integrable"
    elif ratio >= 1.0 + config.margin:
        verdict = "Divergent"
    else:
        verdict = "Inconclusive"
    return {
        "verdict": verdict,
        "ratio": ratio,
        "margin": config.margin,
        "seed": config.seed,
        "samples": config.samples,
        "shells": [{"k": int(k), "estimate": est}
                   for k, est in zip(range(1, config.shells + 1), estimates)],
    }


def exact_monomial_integrable(germ: Germ, nu: Sequence[int], alpha: Rat) -> bool:
    """Exact integrability of |z^nu|^2 / |f|^(2*alpha) near the origin.

    Below 1 this is the Newton weight criterion; at or above 1 no
    monomial survives because the integrand blows up along the whole
    divisor, not just at the origin.
    """
    alpha = Fraction(alpha)
    weight = sum(one_var_weight(m, v, usual=True)
                 for m, v in zip(germ.exponents, nu))
    return alpha < min(weight, Fraction(1))


@dataclass(frozen=True)
class MonteCarloCase:
    germ: Germ
    nu: tuple[int, ...]
    alpha: Fraction
    exact_integrable: bool


def _usual_jump_values(ms: Sequence[int], hi: Fraction) -> set[Fraction]:
    """Usual jumping coefficients below hi, from the microlocal levels."""
    from . import weights as _weights

    model = _weights.diagonal_model(ms, cap=hi + 1, usual=False)
    micro = set(_weights.achieved_levels(model, hi))
    base = {v for v in micro if v < 1} | {Fraction(1)}
    out = set()
    for v in base:
        shift = 0
        while v + shift < hi:
            out.add(v + shift)
            shift += 1
    return out


def mc_case_set(count: int = 200, seed: int = 1,
                min_gap: Fraction = Fraction(1, 20)) -> list[MonteCarloCase]:
    """Deterministic random cases keeping alpha away from every jump.

    Draws one- and two-variable germs with exponents up to 5, a monomial
    in a small box, and alpha on the 1/60 grid below 0.95 at distance at
    least min_gap from the usual jumping coefficients and from the
    monomial's own integrability threshold.
    """
    rng = np.random.default_rng([seed, 0xCA5E5])
    cases: list[MonteCarloCase] = []
    while len(cases) < count:
        d = 1 if rng.random() < 0.55 else 2
        ms = tuple(int(rng.integers(2, 6)) for _ in range(d))
        nu = tuple(int(rng.integers(0, m + 1)) for m in ms)
        germ = Germ(ms)
        weight = sum(one_var_weight(m, v, usual=True) for m, v in zip(ms, nu))
        threshold = min(weight, Fraction(1))
        guarded = _usual_jump_values(ms, Fraction(2)) | {threshold}
        candidates = [Fraction(j, 60) for j in range(1, 58)
                      if all(abs(Fraction(j, 60) - t) >= min_gap for t in guarded)]
        if not candidates:
            continue
        alpha = candidates[int(rng.integers(0, len(candidates)))]
        cases.append(MonteCarloCase(germ, nu, alpha, alpha < threshold))
    return cases
