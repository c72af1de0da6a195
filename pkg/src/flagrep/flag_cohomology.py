"""Polyvector fields on G/B at the level of characters.

``∧^p T_{G/B}`` is the bundle attached to the B-module ``∧^p u``, where ``u``
carries the negative roots.  Euler characteristics come from a single
Demazure sweep, and the total one over all ``p`` equals
``ch(V(ρ) ⊗ V(ρ))``.  Everything computed here about ``H^•(G/B, ∧^• T)``
is either an Euler characteristic or a lower bound; exact per-degree
cohomology is not attempted.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .bwb import BwbResult, bwb_line_bundle, cohomology_support_candidates
from .character import Character, demazure_word, diamond
from .rep_theory import Decomposition, decompose, tensor_character
from .root_system import RootSystem, enumerate_dominant_below, is_dominant

#: types with more positive roots than this need ``force=True``
MAX_POSITIVE_ROOTS = 24


class FeasibilityError(RuntimeError):
    """The requested computation expands 2^|Φ+| terms beyond the default limit."""


def check_feasible(rs: RootSystem, force: bool = False) -> None:
    n = rs.num_positive_roots
    if n > MAX_POSITIVE_ROOTS and not force:
        raise FeasibilityError(
            f"{rs.name} has {n} positive roots (limit {MAX_POSITIVE_ROOTS}); "
            "rerun with force=True (--force) to compute anyway"
        )


@dataclass(frozen=True)
class GradedCharacter:
    """Characters of ``∧^p`` for ``p = 0..|Φ+|``."""

    by_degree: tuple

    def __getitem__(self, p: int) -> Character:
        return self.by_degree[p]

    def __len__(self):
        return len(self.by_degree)

    @property
    def top(self) -> Character:
        return self.by_degree[-1]

    def total(self) -> Character:
        out = self.by_degree[0]
        for ch in self.by_degree[1:]:
            out = out + ch
        return out


def exterior_character(rs: RootSystem, positive: bool = True, *, force: bool = False) -> GradedCharacter:
    """Graded character of ``∧^• n`` (``positive``) or ``∧^• u``.

    Degree ``p`` is the ``p``-th elementary symmetric function in the
    ``e^{±β}``, built one root at a time.
    """
    check_feasible(rs, force)
    sign = 1 if positive else -1
    degrees = [Character.monomial((0,) * rs.rank)]
    for beta in rs.positive_roots:
        shift = [sign * b for b in beta]
        degrees.append(degrees[-1].shift(shift))
        for p in range(len(degrees) - 2, 0, -1):
            degrees[p] = degrees[p] + degrees[p - 1].shift(shift)
    return GradedCharacter(tuple(degrees))


def exterior_total(rs: RootSystem, positive: bool = True, *, force: bool = False) -> Character:
    """``Π_{β>0} (1 + e^{±β})`` without tracking the grading."""
    check_feasible(rs, force)
    sign = 1 if positive else -1
    ch = Character.monomial((0,) * rs.rank)
    for beta in rs.positive_roots:
        ch = ch + ch.shift([sign * b for b in beta])
    return ch


def euler_characteristic(rs: RootSystem, module_character: Character) -> Character:
    """``χ_T(L(M)) = ◇ D_{w0} ◇ ch(M)`` for a B-module with character ``ch(M)``."""
    return diamond(demazure_word(rs, rs.w0_word, diamond(module_character)))


def polyvector_euler_characteristic(rs: RootSystem, degree: int | None = None, *, force: bool = False) -> Character:
    """``χ_T(∧^p T)`` for one ``p``, or summed over all ``p`` when ``degree`` is None.

    The total is an ungraded sum of the ``∧^p``; signs only enter through
    the cohomological degree inside each Euler characteristic.
    """
    if degree is None:
        return euler_characteristic(rs, exterior_total(rs, positive=False, force=force))
    if not 0 <= degree <= rs.num_positive_roots:
        raise ValueError(f"degree {degree} outside 0..{rs.num_positive_roots}")
    graded = exterior_character(rs, positive=False, force=force)
    return euler_characteristic(rs, graded[degree])


def polyvector_euler_decomposition(rs: RootSystem, degree: int | None = None, *, force: bool = False) -> Decomposition:
    """Decompose ``χ_T(∧^• T)`` (or ``χ_T(∧^p T)``) into irreducibles.

    The total is an honest module isomorphic to ``V(ρ) ⊗ V(ρ)``; individual
    degrees may come out virtual.
    """
    return decompose(rs, polyvector_euler_characteristic(rs, degree, force=force), check=False)


def tangent_bundle_decomposition(rs: RootSystem) -> Decomposition:
    """``χ_T(T_{G/B})``; by Bott's theorem this is the adjoint module alone."""
    ch_u = Character.from_dict({tuple(-b for b in beta): 1 for beta in rs.positive_roots}, rs.rank)
    return decompose(rs, euler_characteristic(rs, ch_u), check=False)


@dataclass(frozen=True)
class KostantReport:
    """Comparison of the support of ``V(ρ) ⊗ V(ρ)`` with ``{λ <= 2ρ}``."""

    type_label: str
    rank: int
    support_tensor: frozenset
    support_order: frozenset
    multiplicities: Decomposition
    counterexamples: tuple = field(default=())

    @property
    def conjecture_holds(self) -> bool:
        return not self.counterexamples


def verify_kostant(rs: RootSystem, *, force: bool = False) -> KostantReport:
    """Check whether ``V(λ) ⊂ V(ρ) ⊗ V(ρ)`` exactly when ``λ <= 2ρ``.

    Reports the outcome; a mismatch is listed in ``counterexamples``.
    """
    check_feasible(rs, force)
    multiplicities = decompose(rs, tensor_character(rs, rs.rho, rs.rho), check=False)
    support_tensor = frozenset(multiplicities.support())
    two_rho = tuple(2 * x for x in rs.rho)
    support_order = frozenset(enumerate_dominant_below(rs, two_rho))
    diff = tuple(sorted(support_tensor ^ support_order))
    return KostantReport(rs.type_label, rs.rank, support_tensor, support_order, multiplicities, diff)


@dataclass(frozen=True)
class HHComponent:
    weight: tuple
    lower_bound: int  # m_λ, multiplicity in V(ρ) ⊗ V(ρ)
    candidate: bool  # passes the dot-orbit support test for ∧^• u

    @property
    def flagged(self) -> bool:
        return not self.candidate


@dataclass(frozen=True)
class HHReport:
    """Lower bounds for multiplicities of ``V(λ)`` in ``H^•(G/B, ∧^• T)``.

    ``lower_bound`` is the multiplicity in ``V(ρ) ⊗ V(ρ)``; the true
    multiplicity in Hochschild cohomology can be larger.
    """

    type_label: str
    rank: int
    components: tuple
    note: str = "lower_bound is m_lambda, a lower bound on the multiplicity in HH^*(G/B), not its exact value"

    @property
    def flagged(self) -> list:
        return [c.weight for c in self.components if c.flagged]

    @property
    def total_lower_bound(self) -> int:
        return sum(c.lower_bound for c in self.components)


def hh_component_report(rs: RootSystem, *, force: bool = False) -> HHReport:
    check_feasible(rs, force)
    report = verify_kostant(rs, force=force)
    wedge_u = exterior_total(rs, positive=False, force=force)
    candidates = cohomology_support_candidates(rs, wedge_u.support())
    two_rho = tuple(2 * x for x in rs.rho)
    rows = tuple(
        HHComponent(lam, report.multiplicities[lam], lam in candidates)
        for lam in enumerate_dominant_below(rs, two_rho)
    )
    return HHReport(rs.type_label, rs.rank, rows)


def wahl_h0(rs: RootSystem) -> Decomposition:
    """``H^0(G/B, ∧^{n-1} T) = ⊕ V(2ρ - β)`` over ``β > 0`` with ``2ρ - β`` dominant."""
    counts = Counter()
    for beta in rs.positive_roots:
        w = tuple(2 - b for b in beta)
        if is_dominant(w):
            counts[w] += 1
    return Decomposition(dict(counts))


def top_polyvector_check(rs: RootSystem, *, force: bool = False) -> bool:
    """``∧^n T = L(2ρ)`` with ``H^0 = V(2ρ)`` and nothing else."""
    two_rho = tuple(2 * x for x in rs.rho)
    top = exterior_character(rs, positive=False, force=force).top
    if top != Character.monomial(tuple(-x for x in two_rho)):
        return False
    if bwb_line_bundle(rs, two_rho) != BwbResult(0, two_rho):
        return False
    return decompose(rs, euler_characteristic(rs, top)) == Decomposition({two_rho: 1})
