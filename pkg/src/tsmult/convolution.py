"""Invariants of sums in disjoint variables by convolution of factors.

The microlocal chain of f1 + f2 on disjoint variables is the level-wise
convolution of the factor chains: V^a of the sum is spanned by products
of factor monomials whose levels add up to at least a.  Everything else
here (usual multiplier ideals below 1, jump sets, lct, graded pieces and
the level-1 bookkeeping) is derived from that single engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import weights
from .errors import ChainKindError, NotReduced, WindowExceeded
from .filtration import MICROLOCAL, JumpChain, JumpSet, chain_from_model
from .germs import Germ, diagonal_microlocal_chain
from .monomial import (MonomialIdeal, QuotientBasis, Rat, colength,
                       quotient_basis)


def _require_model(chain: JumpChain) -> weights.WeightModel:
    if chain.model is None:
        raise ChainKindError("this operation needs a model-backed chain "
                             "(built by the germ chain constructors)")
    return chain.model


def ts_convolve_chains(c1: JumpChain, c2: JumpChain,
                       window: Fraction | None = None) -> JumpChain:
    """Microlocal V-chain of the disjoint-variable sum of two germs."""
    for c in (c1, c2):
        if c.mode != "V" or c.family != MICROLOCAL:
            raise ChainKindError("chain convolution expects microlocal V-mode chains")
    max_window = min(c1.window, c2.window)
    window = max_window if window is None else Fraction(window)
    if window > max_window:
        raise WindowExceeded(f"requested window {window} exceeds a factor window {max_window}")
    model = weights.convolve(_require_model(c1), _require_model(c2), cap=window + 2)
    return chain_from_model(model, window, mode="V", family=MICROLOCAL)


def ts_multiplier(c1: JumpChain, c2: JumpChain, alpha: Fraction) -> MonomialIdeal:
    """Multiplier ideal of the sum at alpha in (0, 1).

    Valid because the usual and microlocal ideals agree below 1, so the
    right-continuous value of the convolved chain is the answer.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise WindowExceeded(f"alpha = {alpha} is outside (0, 1); "
                             "use periodic_extend for larger parameters")
    if c1.family != c2.family:
        raise ChainKindError("factor chains must be of the same family")
    if min(c1.window, c2.window) < 1:
        raise WindowExceeded("factor chains must cover the window [0, 1)")
    model = weights.convolve(_require_model(c1), _require_model(c2), cap=Fraction(2))
    return weights.generators_at(model, alpha, strict=True)


def ts_jumpset(s1: JumpSet, s2: JumpSet, window: Fraction | None = None) -> JumpSet:
    """Jump levels of the sum: the truncated sumset of factor levels."""
    if not s1.values or not s2.values:
        w = min(s1.window, s2.window) if window is None else Fraction(window)
        return JumpSet(values=(), window=w)
    if window is None:
        window = min(s1.window + min(s2.values), s2.window + min(s1.values))
    else:
        window = Fraction(window)
    if s1.window + min(s2.values) < window or s2.window + min(s1.values) < window:
        raise WindowExceeded("factor jump sets are too short for the requested window")
    sums = {a + b for a in s1.values for b in s2.values if a + b < window}
    return JumpSet(values=tuple(sorted(sums)), window=window)


def ts_lct(l1: Rat, l2: Rat) -> Rat:
    """Threshold of the sum from factor thresholds, clamped at 1."""
    for l in (l1, l2):
        if not 0 < l <= 1:
            raise ValueError(f"{l} is not a log canonical threshold of a germ (range (0, 1])")
    return min(Fraction(1), Fraction(l1) + Fraction(l2))


@dataclass(frozen=True)
class GradedSummand:
    """One product block of a graded piece of a sum."""

    level1: Fraction
    level2: Fraction
    basis1: QuotientBasis
    basis2: QuotientBasis

    @property
    def dim(self) -> int:
        return self.basis1.dim * self.basis2.dim


def ts_graded(c1: JumpChain, c2: JumpChain, alpha: Fraction) -> list[GradedSummand]:
    """Graded piece of the sum at alpha as a sum of factor products.

    Returns the nonzero blocks (level pair and the two factor bases);
    the total dimension is the sum over blocks of the basis-size product.
    """
    alpha = Fraction(alpha)
    for c in (c1, c2):
        if c.mode != "V" or c.family != MICROLOCAL:
            raise ChainKindError("graded convolution expects microlocal V-mode chains")
        if alpha >= c.window:
            raise WindowExceeded(f"alpha = {alpha} outside factor window [0, {c.window})")
    m1 = _require_model(c1)
    m2 = _require_model(c2)
    out = []
    for lv in c1.levels:
        if not 0 < alpha - lv:
            continue
        e1 = weights.graded_exponents(m1, lv)
        e2 = weights.graded_exponents(m2, alpha - lv)
        if e1 and e2:
            out.append(GradedSummand(lv, alpha - lv,
                                     QuotientBasis(finite=True, exponents=e1),
                                     QuotientBasis(finite=True, exponents=e2)))
    return out


def irrationality_module(germ: Germ) -> QuotientBasis:
    """Monomials outside the level-(>1) microlocal ideal.

    Their span measures the failure of rational singularities; the germ
    must be reduced, which for sums of pure powers means at least two
    variables.
    """
    if germ.dim < 2:
        raise NotReduced("the irrationality module needs a reduced germ (at least 2 variables)")
    model = weights.diagonal_model(germ.exponents, cap=Fraction(3), usual=False)
    j_one = weights.generators_at(model, Fraction(1), strict=True)
    return quotient_basis(MonomialIdeal.unit(germ.dim), j_one)


def irrationality_dim(germ: Germ) -> int:
    return irrationality_module(germ).dim


@dataclass(frozen=True)
class AlphaOneReport:
    """Dimension bookkeeping of the level-1 short exact sequence."""

    g_tilde_dim: int
    paired_g_tilde_dim: int
    irrationality_dim: int
    v_one_cokernel_dim: int
    summands: tuple[GradedSummand, ...]
    consistent: bool

    def to_json(self) -> dict:
        return {
            "g_tilde_dim": self.g_tilde_dim,
            "irrationality_dim": self.irrationality_dim,
            "summands": [
                {"a1": str(s.level1), "a2": str(s.level2), "dim": s.dim}
                for s in self.summands
            ],
            "consistent": self.consistent,
            "paired_g_tilde_dim": self.paired_g_tilde_dim,
            "v_one_cokernel_dim": self.v_one_cokernel_dim,
        }


def alpha_one_sequence_check(g1: Germ, g2: Germ) -> AlphaOneReport:
    """Check the level-1 dimension bookkeeping of a two-factor sum.

    The graded dimension at 1 is computed directly from the convolved
    chain and as the paired sum over factor levels; the cokernel of the
    level-1 ideal splits as the cokernel of the (>= 1) ideal plus the
    graded piece, which pins the kernel of the graded surjection at 1 to
    the irrationality dimension.
    """
    window = Fraction(3, 2)
    c1 = diagonal_microlocal_chain(g1, window)
    c2 = diagonal_microlocal_chain(g2, window)
    conv = ts_convolve_chains(c1, c2, window)
    one = Fraction(1)
    direct = len(weights.graded_exponents(conv.model, one))
    summands = tuple(ts_graded(c1, c2, one))
    paired = sum(s.dim for s in summands)
    sum_exponents = g1.exponents + g2.exponents
    irr_model = weights.diagonal_model(sum_exponents, cap=Fraction(3), usual=False)
    unit = MonomialIdeal.unit(len(sum_exponents))
    irr = colength(unit, weights.generators_at(irr_model, one, strict=True))
    vcoker = colength(unit, weights.generators_at(conv.model, one, strict=False))
    consistent = (direct == paired) and (irr == vcoker + direct)
    return AlphaOneReport(direct, paired, irr, vcoker, summands, consistent)
