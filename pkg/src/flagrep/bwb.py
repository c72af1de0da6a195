"""Borel-Weil-Bott for line bundles on G/B.

Convention: ``L(λ)`` is the line bundle attached to the one-dimensional
B-module of weight ``-λ``.  Callers always pass the ``λ`` of ``L(λ)``; the
sign flip lives here and nowhere else.  With this convention ``L(λ)`` for
dominant ``λ`` has ``H^0 = V(λ)*``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .root_system import RootSystem, dual_weight, simple_reflection


@dataclass(frozen=True)
class BwbResult:
    """Cohomology of one line bundle.

    Either ``vanishes`` (all groups zero) or ``H^degree = V(highest_weight)*``
    with every other degree zero.
    """

    degree: int | None = None
    highest_weight: tuple | None = None

    @property
    def vanishes(self) -> bool:
        return self.degree is None

    def describe(self) -> str:
        if self.vanishes:
            return "all cohomology vanishes"
        w = ",".join(str(x) for x in self.highest_weight)
        s = f"H^{self.degree} = V({w})^*"
        if not any(self.highest_weight):
            s += " (trivial)"
        return s


VANISHES = BwbResult()


def dot_normalize(rs: RootSystem, weight: Sequence[int], largest_first: bool = False):
    """Bring ``λ + ρ`` to the dominant chamber.

    Returns ``(v, length)`` with ``v`` dominant regular, or ``None`` when some
    coordinate of the running vector is zero (``λ + ρ`` is singular).
    """
    v = tuple(int(x) + 1 for x in weight)
    order = range(rs.rank - 1, -1, -1) if largest_first else range(rs.rank)
    length = 0
    while True:
        if 0 in v:
            return None
        i = next((k for k in order if v[k] < 0), None)
        if i is None:
            return v, length
        v = simple_reflection(rs, i + 1, v)
        length += 1


def bwb_line_bundle(rs: RootSystem, weight: Sequence[int], largest_first: bool = False) -> BwbResult:
    """Cohomology of ``L(λ)``: ``H^{l(w)} = V(μ)*`` where ``λ = w . μ``, ``μ`` dominant."""
    lam = rs.check_weight(weight)
    found = dot_normalize(rs, lam, largest_first)
    if found is None:
        return VANISHES
    v, length = found
    return BwbResult(length, tuple(x - 1 for x in v))


def cohomology_support_candidates(rs: RootSystem, module_weights: Iterable[Sequence[int]]) -> set[tuple]:
    """Dominant ``μ`` that may occur in ``H^•(G/B, L(M))`` given ``wt(M)``.

    ``V(μ)`` can only appear if ``μ*`` lies in the dot orbit of some ``-ξ``,
    ``ξ ∈ wt(M)``; each ``-ξ`` is resolved as a line bundle and the resulting
    ``V(ν)* = V(ν*)`` contributes ``ν*``.
    """
    out = set()
    for xi in set(tuple(int(x) for x in w) for w in module_weights):
        res = bwb_line_bundle(rs, [-x for x in xi])
        if not res.vanishes:
            out.add(dual_weight(rs, res.highest_weight))
    return out
