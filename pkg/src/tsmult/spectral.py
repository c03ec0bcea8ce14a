"""Vanishing-cycle eigenvalue tables and Hodge spectra of diagonal germs.

An EigenTable records eigenvalue multiplicities indexed by rational
logarithms in (-1, 0]; the eigenvalue itself is exp(-2*pi*i*alpha).
A Spectrum is the finer multiset of rational exponents in (0, d); its
mod-1 fold reproduces the eigentable.  Under sums in disjoint variables
spectra convolve additively while eigentables convolve with a fold back
into (-1, 0].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .germs import Germ, alpha_tilde, milnor_number
from .monomial import Rat


def _sorted_entries(counter: dict[Fraction, int]) -> tuple[tuple[Fraction, int], ...]:
    return tuple(sorted((k, int(v)) for k, v in counter.items()))


@dataclass(frozen=True)
class EigenTable:
    """Finite multiplicity table with keys in (-1, 0]."""

    entries: tuple[tuple[Rat, int], ...]

    def __post_init__(self):
        for key, mult in self.entries:
            if not -1 < key <= 0:
                raise ValueError(f"eigentable key {key} outside (-1, 0]")
            if mult < 1:
                raise ValueError(f"multiplicity at {key} must be positive")

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict[Rat, int]:
        return dict(self.entries)

    def to_json(self) -> dict:
        return {"entries": [{"alpha": str(k), "mult": m} for k, m in self.entries]}


@dataclass(frozen=True)
class Spectrum:
    """Multiset of rational exponents in the open interval (0, dim)."""

    dim: int
    entries: tuple[tuple[Rat, int], ...]

    def __post_init__(self):
        for key, mult in self.entries:
            if not 0 < key < self.dim:
                raise ValueError(f"spectrum entry {key} outside (0, {self.dim})")
            if mult < 1:
                raise ValueError(f"multiplicity at {key} must be positive")

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict[Rat, int]:
        return dict(self.entries)

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "entries": [{"value": str(k), "mult": m} for k, m in self.entries]}


def one_var_eigentable(m: int) -> EigenTable:
    """Nontrivial m-th roots of unity, one dimension each."""
    if m < 2:
        raise ValueError("need an exponent >= 2")
    return EigenTable(tuple((Fraction(-i, m), 1) for i in range(m - 1, 0, -1)))


def phi_convolve(t1: EigenTable, t2: EigenTable) -> EigenTable:
    """Convolve eigenvalue tables, folding key sums back into (-1, 0].

    A key sum lies in (-2, 0]; sums at or below -1 are shifted up by one,
    which is the second branch of the convolution identity.
    """
    acc: Counter = Counter()
    for a, ma in t1.entries:
        for b, mb in t2.entries:
            s = a + b
            key = s if s > -1 else s + 1
            acc[key] += ma * mb
    return EigenTable(_sorted_entries(acc))


def spectrum_of(germ: Germ) -> Spectrum:
    """Multiset of weight sums over interior lattice tuples."""
    acc: Counter = Counter()
    for tup in product(*(range(1, m) for m in germ.exponents)):
        acc[sum(Fraction(i, m) for i, m in zip(tup, germ.exponents))] += 1
    return Spectrum(germ.dim, _sorted_entries(acc))


def spectrum_convolve(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Additive convolution without folding; dimensions add."""
    acc: Counter = Counter()
    for a, ma in s1.entries:
        for b, mb in s2.entries:
            acc[a + b] += ma * mb
    return Spectrum(s1.dim + s2.dim, _sorted_entries(acc))


def fold_spectrum(spectrum: Spectrum) -> EigenTable:
    """Fold exponents mod 1 into (-1, 0]: s maps to -(s mod 1), integers to 0."""
    acc: Counter = Counter()
    for s, m in spectrum.entries:
        frac = s - (s.numerator // s.denominator)
        key = -frac if frac else Fraction(0)
        acc[key] += m
    return EigenTable(_sorted_entries(acc))


@dataclass(frozen=True)
class SpectralReport:
    exponents: tuple[int, ...]
    folded_table: EigenTable
    convolved_table: EigenTable
    tables_match: bool
    total: int
    milnor: int
    total_ok: bool
    symmetric: bool
    min_value: Rat
    alpha_tilde: Rat
    min_ok: bool

    @property
    def ok(self) -> bool:
        return self.tables_match and self.total_ok and self.symmetric and self.min_ok

    def to_json(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "folded_table": self.folded_table.to_json(),
            "convolved_table": self.convolved_table.to_json(),
            "tables_match": self.tables_match,
            "total": self.total,
            "milnor": self.milnor,
            "total_ok": self.total_ok,
            "symmetric": self.symmetric,
            "min_value": str(self.min_value),
            "alpha_tilde": str(self.alpha_tilde),
            "min_ok": self.min_ok,
            "ok": self.ok,
        }


def consistency_check(germ: Germ) -> SpectralReport:
    """Cross-check the two spectral routes on one germ.

    Compares the fold of the enumerated spectrum against the convolution
    of one-variable tables, the totals against the Milnor number, the
    symmetry about dim/2, and the minimum against the minimal level.
    """
    spectrum = spectrum_of(germ)
    folded = fold_spectrum(spectrum)
    conv = one_var_eigentable(germ.exponents[0])
    for m in germ.exponents[1:]:
        conv = phi_convolve(conv, one_var_eigentable(m))
    entries = spectrum.as_dict()
    symmetric = all(entries.get(germ.dim - s) == mult for s, mult in entries.items())
    min_value = min(entries)
    a_tilde = alpha_tilde(germ)
    mu = milnor_number(germ)
    return SpectralReport(
        exponents=germ.exponents,
        folded_table=folded,
        convolved_table=conv,
        tables_match=(folded == conv),
        total=spectrum.total,
        milnor=mu,
        total_ok=(spectrum.total == mu and folded.total == mu),
        symmetric=symmetric,
        min_value=min_value,
        alpha_tilde=a_tilde,
        min_ok=(min_value == a_tilde),
    )
