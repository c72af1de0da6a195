"""Irreducible characters, tensor products and decompositions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .character import Character, demazure_word, is_weyl_invariant, linear_combination
from .root_system import (
    RootSystem,
    RootSystemError,
    enumerate_dominant_below,
    is_dominant,
    to_dominant,
    weyl_orbit,
)


class NotInvariantError(ValueError):
    """A character passed to :func:`decompose` is not Weyl-group invariant."""


@dataclass(frozen=True)
class Decomposition:
    """A (possibly virtual) module as ``{highest weight: multiplicity}``."""

    parts: Mapping[tuple, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, m in self.parts.items():
            w = tuple(int(x) for x in w)
            if not is_dominant(w):
                raise ValueError(f"non-dominant highest weight {w}")
            if m:
                clean[w] = int(m)
        object.__setattr__(self, "parts", dict(sorted(clean.items())))

    @property
    def virtual(self) -> bool:
        return any(m < 0 for m in self.parts.values())

    @property
    def total_multiplicity(self) -> int:
        return sum(self.parts.values())

    def __getitem__(self, weight) -> int:
        return self.parts.get(tuple(weight), 0)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def items(self):
        return self.parts.items()

    def support(self) -> set[tuple]:
        return {w for w, m in self.parts.items() if m > 0}

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * weyl_dimension(rs, w) for w, m in self.parts.items())

    def character(self, rs: RootSystem) -> Character:
        """Reassemble ``Σ m_ν ch V(ν)``."""
        if not self.parts:
            return Character.zero(rs.rank)
        chars = [irreducible_character(rs, w) for w in self.parts]
        return linear_combination(chars, list(self.parts.values()))

    def to_records(self) -> list[dict]:
        return [{"weight": list(w), "multiplicity": m} for w, m in self.parts.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "Decomposition":
        return cls({tuple(r["weight"]): int(r["multiplicity"]) for r in records})


def _require_dominant(rs: RootSystem, weight) -> tuple:
    w = rs.check_weight(weight)
    if not is_dominant(w):
        raise RootSystemError(f"{w} is not a dominant weight")
    return w


def irreducible_character(rs: RootSystem, weight: Sequence[int]) -> Character:
    """``ch V(λ) = D_{w0}(e^λ)`` (Demazure character formula)."""
    lam = _require_dominant(rs, weight)
    return demazure_word(rs, rs.w0_word, Character.monomial(lam))


def rho_character(rs: RootSystem) -> Character:
    """``ch V(ρ) = e^ρ Π_{β>0} (1 + e^{-β})``, expanded factor by factor."""
    ch = Character.monomial(rs.rho)
    for beta in rs.positive_roots:
        ch = ch + ch.shift([-b for b in beta])
    return ch


def weyl_dimension(rs: RootSystem, weight: Sequence[int]) -> int:
    """Weyl dimension formula ``Π_{β>0} (λ+ρ, β) / (ρ, β)``."""
    lam = _require_dominant(rs, weight)
    shifted = [x + 1 for x in lam]
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= rs.inner_product(shifted, beta) / rs.inner_product(rs.rho, beta)
    if num.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {num}")
    return int(num)


def tensor_character(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Character:
    """``ch(V(λ) ⊗ V(μ)) = D_{w0}(e^λ ch V(μ))`` (Brauer's formula)."""
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    return demazure_word(rs, rs.w0_word, irreducible_character(rs, mu).shift(lam))


def _height_vector(rs: RootSystem) -> np.ndarray:
    # det * height(λ) = h @ λ, with det > 0 for finite type
    return rs._adj.sum(axis=0)


def decompose(rs: RootSystem, ch: Character, *, check: bool = True) -> Decomposition:
    """Expand a W-invariant character in the basis of irreducible characters.

    Repeatedly takes the remaining dominant weight that is largest by
    (height, coordinates), records its coefficient and subtracts that many
    copies of the irreducible character.  Both sides are W-invariant, so only
    the dominant part of the remainder needs to be tracked.
    """
    if ch.rank != rs.rank:
        raise ValueError(f"rank mismatch: character {ch.rank}, root system {rs.rank}")
    if check and not is_weyl_invariant(rs, ch):
        raise NotInvariantError("character is not invariant under the Weyl group")
    dominant = np.all(ch.weights >= 0, axis=1)
    remaining = {
        tuple(w): c
        for w, c in zip(ch.weights[dominant].tolist(), ch.coeffs[dominant].tolist())
    }
    h = _height_vector(rs)
    parts = {}
    while remaining:
        top = max(remaining, key=lambda w: (int(h @ np.array(w)), w))
        m = remaining[top]
        parts[top] = m
        irr = irreducible_character(rs, top)
        sel = np.all(irr.weights >= 0, axis=1)
        for w, c in zip(irr.weights[sel].tolist(), irr.coeffs[sel].tolist()):
            w = tuple(w)
            left = remaining.get(w, 0) - m * c
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        if top in remaining:
            raise ArithmeticError(f"leading coefficient of V{top} is not 1")
    return Decomposition(parts)


def freudenthal_character(rs: RootSystem, weight: Sequence[int]) -> Character:
    """``ch V(λ)`` from Freudenthal's recursive multiplicity formula.

    Independent of the Demazure machinery: works with the symmetric form on
    the dominant weights below ``λ`` and extends to the full character by
    Weyl-group orbits.
    """
    lam = _require_dominant(rs, weight)
    dominant = enumerate_dominant_below(rs, lam)
    ip = rs.inner_product
    lr = [x + 1 for x in lam]
    top_norm = ip(lr, lr)
    mult = {lam: 1}
    for mu in dominant[1:]:
        total = Fraction(0)
        for beta in rs.positive_roots:
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, beta))
                rep = to_dominant(rs, nu)[0]
                if rep not in mult:
                    break
                total += mult[rep] * ip(nu, beta)
                k += 1
        mr = [x + 1 for x in mu]
        value = 2 * total / (top_norm - ip(mr, mr))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu}")
        mult[mu] = int(value)
    terms = {}
    for mu, m in mult.items():
        if m:
            for nu in weyl_orbit(rs, mu):
                terms[nu] = m
    return Character.from_dict(terms, rs.rank)
