"""Exact monomial-ideal arithmetic.

Ideals in k[[z_1..z_d]] generated by monomials are represented by the
minimal antichain of generator exponents, stored lex-sorted so that equal
ideals compare equal structurally.  All rational numbers in the package
are `fractions.Fraction`; floats are rejected at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, InclusionError, InfiniteQuotient

Rat = Fraction
Exponent = tuple[int, ...]


def as_fraction(x: object) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction; refuse floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _dominates(p: Exponent, q: Exponent) -> bool:
    """True when q >= p componentwise, i.e. monomial q lies in (z^p)."""
    return all(a <= b for a, b in zip(p, q))


def minimal_antichain(points: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Reduce a set of exponents to its minimal elements, lex-sorted."""
    pts = sorted(set(points), key=lambda t: (sum(t), t))
    if len(pts) > 64:
        return _minimal_antichain_np(pts)
    kept: list[Exponent] = []
    for p in pts:
        # sorted by total degree, so only earlier points can dominate p
        if not any(_dominates(k, p) for k in kept):
            kept.append(p)
    return tuple(sorted(kept))


def _minimal_antichain_np(pts: list[Exponent]) -> tuple[Exponent, ...]:
    arr = np.array(pts, dtype=np.int64)
    kept_rows: list[int] = []
    for i in range(arr.shape[0]):
        if not kept_rows:
            kept_rows.append(i)
            continue
        ka = arr[kept_rows]
        if not (ka <= arr[i]).all(axis=1).any():
            kept_rows.append(i)
    return tuple(sorted(tuple(int(v) for v in arr[i]) for i in kept_rows))


class MonomialIdeal:
    """A monomial ideal, canonically represented.

    gens is the lex-sorted tuple of minimal generator exponents; the zero
    ideal has no generators, the unit ideal has the single generator 0.
    """

    __slots__ = ("dim", "gens")

    dim: int
    gens: tuple[Exponent, ...]

    def __init__(self, dim: int, gens: Iterable[Sequence[int]], *, _trusted: bool = False):
        if dim < 1:
            raise ValueError("ideal needs at least one variable")
        object.__setattr__(self, "dim", dim)
        if _trusted:
            object.__setattr__(self, "gens", tuple(gens))  # type: ignore[arg-type]
            return
        cleaned: list[Exponent] = []
        for g in gens:
            t = tuple(g)
            if len(t) != dim:
                raise DimensionMismatch(f"generator {t} has {len(t)} coords, expected {dim}")
            if any((not isinstance(v, (int, np.integer))) or isinstance(v, bool) or v < 0 for v in t):
                raise ValueError(f"generator {t} must have nonnegative integer coords")
            cleaned.append(tuple(int(v) for v in t))
        object.__setattr__(self, "gens", minimal_antichain(cleaned))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, [(0,) * dim], _trusted=True)

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, [], _trusted=True)

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, exponent: Sequence[int]) -> bool:
        """Monomial membership: z^exponent lies in the ideal."""
        e = tuple(exponent)
        if len(e) != self.dim:
            raise DimensionMismatch(f"exponent {e} has {len(e)} coords, expected {self.dim}")
        return any(_dominates(g, e) for g in self.gens)

    def contained_in(self, other: "MonomialIdeal") -> bool:
        if self.dim != other.dim:
            raise DimensionMismatch("ideals live in different variable counts")
        return all(other.contains(g) for g in self.gens)

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Relabel variables: new coordinate i is old coordinate perm[i]."""
        if sorted(perm) != list(range(self.dim)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.dim - 1}")
        return MonomialIdeal(
            self.dim,
            [tuple(g[p] for p in perm) for g in self.gens],
            _trusted=False,
        )

    def to_json(self) -> dict:
        return {"dim": self.dim, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialIdeal":
        return cls(int(obj["dim"]), [tuple(int(v) for v in g) for g in obj["gens"]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.dim, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal(dim={self.dim}, gens={list(self.gens)})"


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("ideal_sum needs at least one ideal")
    dim = ideals[0].dim
    gens: list[Exponent] = []
    for ideal in ideals:
        if ideal.dim != dim:
            raise DimensionMismatch("ideals live in different variable counts")
        gens.extend(ideal.gens)
    return MonomialIdeal(dim, gens)


def external_product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by g*h over the disjoint union of the variables."""
    dim = left.dim + right.dim
    gens = [g + h for g in left.gens for h in right.gens]
    # pairs of antichain elements already form an antichain
    return MonomialIdeal(dim, sorted(gens), _trusted=True)


def _saturation_gens(ideal: MonomialIdeal, axis: int) -> tuple[Exponent, ...]:
    """Generators of the saturation with respect to variable `axis`."""
    dropped = [g[:axis] + (0,) + g[axis + 1 :] for g in ideal.gens]
    return minimal_antichain(dropped)


@dataclass(frozen=True)
class QuotientBasis:
    """Monomial basis of big/small, or an infiniteness witness.

    witness_axis is a 0-based variable index along which infinitely many
    basis monomials escape; it is None exactly when the quotient is finite.
    """

    finite: bool
    exponents: tuple[Exponent, ...]
    witness_axis: int | None = None

    @property
    def dim(self) -> int:
        if not self.finite:
            raise InfiniteQuotient(f"quotient is infinite along variable {self.witness_axis}")
        return len(self.exponents)


def quotient_basis(big: MonomialIdeal, small: MonomialIdeal) -> QuotientBasis:
    """Monomials of big not in small, with exact finiteness detection.

    Requires small to be contained in big.  The quotient is finite exactly
    when the two ideals have equal saturation with respect to every
    variable; in that case all basis exponents lie below the componentwise
    maximum of the generators and a box enumeration finds them all.
    """
    if big.dim != small.dim:
        raise DimensionMismatch("ideals live in different variable counts")
    if not small.contained_in(big):
        raise InclusionError("small ideal is not contained in big ideal")
    dim = big.dim
    for axis in range(dim):
        if _saturation_gens(big, axis) != _saturation_gens(small, axis):
            return QuotientBasis(finite=False, exponents=(), witness_axis=axis)
    if small.is_zero:
        # equal saturations with small = 0 force big = 0
        return QuotientBasis(finite=True, exponents=())
    bounds = [0] * dim
    for g in big.gens + small.gens:
        for j, v in enumerate(g):
            bounds[j] = max(bounds[j], v)
    if any(b == 0 for b in bounds):
        # the box is empty, hence so is the quotient
        return QuotientBasis(finite=True, exponents=())
    grid = np.indices(bounds, dtype=np.int64).reshape(dim, -1).T
    in_big = _membership_mask(grid, big)
    in_small = _membership_mask(grid, small)
    rows = grid[in_big & ~in_small]
    exps = tuple(sorted(tuple(int(v) for v in row) for row in rows))
    return QuotientBasis(finite=True, exponents=exps)


def _membership_mask(points: np.ndarray, ideal: MonomialIdeal) -> np.ndarray:
    if ideal.is_zero:
        return np.zeros(points.shape[0], dtype=bool)
    gens = np.array(ideal.gens, dtype=np.int64)
    return (gens[None, :, :] <= points[:, None, :]).all(axis=2).any(axis=1)


def colength(big: MonomialIdeal, small: MonomialIdeal) -> int:
    """Vector-space dimension of big/small; raises if infinite."""
    return quotient_basis(big, small).dim


@dataclass(frozen=True)
class ScaledIdeal:
    """An ideal times the `power`-th power of the ambient germ."""

    power: int
    ideal: MonomialIdeal

    def to_json(self) -> dict:
        return {"power": self.power, "ideal": self.ideal.to_json()}
