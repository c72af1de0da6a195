"""Root systems of simple Lie algebras in the fundamental-weight basis.

Weights are tuples of integers ``(λ_1, ..., λ_ℓ)`` giving coefficients of the
fundamental weights, so that ``λ_i = <λ, α_i^vee>``.  Simple reflections and
Weyl words use 1-based indices following Bourbaki node numbering.  A word
``[i1, i2, ..., ik]`` denotes ``s_i1 s_i2 ... s_ik`` and acts on a weight by
applying ``s_ik`` first.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Weight = tuple  # tuple[int, ...]

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootSystemError(ValueError):
    """Invalid Cartan type or out-of-range reflection index."""


def cartan_matrix(type_label: str, rank: int) -> np.ndarray:
    """Cartan matrix ``a_ij = <α_j, α_i^vee>`` in Bourbaki numbering."""
    t = type_label.upper()
    n = rank
    if t not in _VALID_RANKS or not _VALID_RANKS[t](n):
        raise RootSystemError(
            f"{type_label}{rank} is not a simple type; expected A(>=1), B(>=2), "
            f"C(>=3), D(>=4), E(6,7,8), F4 or G2"
        )
    A = 2 * np.eye(n, dtype=np.int64)
    if t == "G":
        A[0, 1] = -3
        A[1, 0] = -1
        return A
    if t == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
    elif t == "D":
        edges = [(k, k + 1) for k in range(n - 2)] + [(n - 3, n - 1)]
    else:
        edges = [(k, k + 1) for k in range(n - 1)]
    for i, j in edges:
        A[i, j] = A[j, i] = -1
    if t == "B":
        A[n - 1, n - 2] = -2
    elif t == "C":
        A[n - 2, n - 1] = -2
    elif t == "F":
        A[2, 1] = -2
    return A


def _symmetrizer(A: np.ndarray) -> list[Fraction]:
    # d_i a_ij = d_j a_ji, normalized to d_0 = 1
    n = len(A)
    d: list = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if A[i, j] != 0 and d[j] is None:
                d[j] = d[i] * int(A[i, j]) / int(A[j, i])
                queue.append(j)
    return d


def _positive_roots(A: np.ndarray) -> list[tuple]:
    """Positive roots in simple-root coordinates, by root-string closure."""
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for r in layer:
            pairing = A @ np.array(r)
            for i in range(n):
                # p = how far the i-string through r extends downwards
                p = 0
                c = list(r)
                while True:
                    c[i] -= 1
                    if tuple(c) in roots:
                        p += 1
                    else:
                        break
                if p - int(pairing[i]) > 0:
                    c = list(r)
                    c[i] += 1
                    c = tuple(c)
                    if c not in roots:
                        roots.add(c)
                        nxt.append(c)
        layer = nxt
    return sorted(roots, key=lambda c: (sum(c), c))


class RootSystem:
    """Immutable combinatorial data of a simple root system.

    Attributes
    ----------
    type_label, rank
        Cartan type letter and rank.
    cartan
        Integer Cartan matrix, ``cartan[i, j] = <α_j, α_i^vee>``.
    simple_roots
        ``simple_roots[j]`` is column ``j`` of ``cartan``.
    positive_roots
        Positive roots as weights, sorted by height then lexicographically on
        their simple-root coordinates; ``positive_root_coords`` holds those
        coordinates.
    rho
        The Weyl vector ``(1, ..., 1)``.
    w0_word
        A reduced word for the longest element.
    """

    def __init__(self, type_label: str, rank: int):
        A = cartan_matrix(type_label, rank)
        A.setflags(write=False)
        self.type_label = type_label.upper()
        self.rank = rank
        self.cartan = A
        self.simple_roots = tuple(tuple(int(x) for x in A[:, j]) for j in range(rank))
        coords = _positive_roots(A)
        self.positive_root_coords = tuple(coords)
        self.positive_roots = tuple(
            tuple(int(x) for x in A @ np.array(c)) for c in coords
        )
        self.rho = (1,) * rank
        self.symmetrizer = tuple(_symmetrizer(A))
        self._det = int(round(np.linalg.det(A)))
        # integer adjugate: A @ adj == det * I
        adj = np.rint(np.linalg.inv(A) * self._det).astype(np.int64)
        if not np.array_equal(A @ adj, self._det * np.eye(rank, dtype=np.int64)):
            raise RuntimeError("adjugate of Cartan matrix is not exact")
        adj.setflags(write=False)
        self._adj = adj
        self.w0_word = tuple(_greedy_w0_word(self))

    # identity is the Cartan type
    def __eq__(self, other):
        return (
            isinstance(other, RootSystem)
            and (self.type_label, self.rank) == (other.type_label, other.rank)
        )

    def __hash__(self):
        return hash((self.type_label, self.rank))

    def __repr__(self):
        return f"RootSystem('{self.type_label}', {self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def highest_root(self) -> Weight:
        return self.positive_roots[-1]

    def check_weight(self, weight: Iterable[int]) -> Weight:
        w = tuple(int(x) for x in weight)
        if len(w) != self.rank:
            raise RootSystemError(
                f"weight {w} has {len(w)} coordinates, expected {self.rank} for {self.name}"
            )
        return w

    def check_index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"reflection index {i} out of range 1..{self.rank}")
        return i

    def root_coordinates(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients of ``weight`` in the simple-root basis (rational)."""
        scaled = self._adj @ np.asarray(weight, dtype=np.int64)
        return tuple(Fraction(int(x), self._det) for x in scaled)

    def height(self, weight: Sequence[int]) -> Fraction:
        """Sum of simple-root coefficients of ``weight``."""
        return sum(self.root_coordinates(weight), Fraction(0))

    def inner_product(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """W-invariant form normalised so that ``(α_1, α_1) = 2``."""
        c = self.root_coordinates(mu)
        return sum((int(l) * d * x for l, d, x in zip(lam, self.symmetrizer, c)), Fraction(0))


def build_root_system(type_label: str, rank: int) -> RootSystem:
    return RootSystem(type_label, rank)


def _greedy_w0_word(rs: RootSystem) -> list[int]:
    """Walk ρ to -ρ, always reflecting in the smallest positive coordinate."""
    v = list(rs.rho)
    letters = []
    while True:
        i = next((k for k in range(rs.rank) if v[k] > 0), None)
        if i is None:
            break
        letters.append(i + 1)
        v = list(simple_reflection(rs, i + 1, v))
    # the walk spells w0^{-1}, which equals w0
    return letters


def simple_reflection(rs: RootSystem, i: int, weight: Sequence[int]) -> Weight:
    """``s_i(λ) = λ - <λ, α_i^vee> α_i``."""
    rs.check_index(i)
    n = weight[i - 1]
    a = rs.simple_roots[i - 1]
    return tuple(int(x) - n * y for x, y in zip(weight, a))


def apply_word(rs: RootSystem, word: Sequence[int], weight: Sequence[int]) -> Weight:
    """Act by ``s_i1 ... s_ik`` (rightmost letter first)."""
    v = tuple(int(x) for x in weight)
    for i in reversed(word):
        v = simple_reflection(rs, i, v)
    return v


def dot_action(rs: RootSystem, word: Sequence[int], weight: Sequence[int]) -> Weight:
    """``w . λ = w(λ + ρ) - ρ``."""
    shifted = tuple(int(x) + 1 for x in weight)
    return tuple(x - 1 for x in apply_word(rs, word, shifted))


def dual_weight(rs: RootSystem, weight: Sequence[int]) -> Weight:
    """``λ* = -w0 λ``."""
    return tuple(-x for x in apply_word(rs, rs.w0_word, weight))


def is_dominant(weight: Iterable[int]) -> bool:
    return all(x >= 0 for x in weight)


def root_lattice_coefficients(rs: RootSystem, weight: Sequence[int]) -> tuple[int, ...] | None:
    """Integer simple-root coefficients of ``weight``, or None if not in the root lattice."""
    scaled = rs._adj @ np.asarray(weight, dtype=np.int64)
    if np.any(scaled % rs._det):
        return None
    return tuple(int(x) for x in scaled // rs._det)


def dominance_leq(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu - lam`` is a nonnegative integer combination of simple roots."""
    c = root_lattice_coefficients(rs, [int(m) - int(l) for l, m in zip(lam, mu)])
    return c is not None and all(x >= 0 for x in c)


def to_dominant(rs: RootSystem, weight: Sequence[int], largest_first: bool = False):
    """Move ``weight`` into the dominant chamber by simple reflections.

    Returns ``(dominant, letters)`` where ``letters`` lists the reflections in
    the order applied.  At each step the smallest (or largest) index with a
    negative coordinate is used.
    """
    v = tuple(int(x) for x in weight)
    letters = []
    order = range(rs.rank - 1, -1, -1) if largest_first else range(rs.rank)
    while True:
        i = next((k for k in order if v[k] < 0), None)
        if i is None:
            return v, letters
        v = simple_reflection(rs, i + 1, v)
        letters.append(i + 1)


def weight_sort_key(rs: RootSystem, top: Sequence[int]):
    """Sort key: height of ``top - λ`` then coordinates, both ascending."""
    def key(lam):
        return (rs.height([t - x for t, x in zip(top, lam)]), tuple(lam))
    return key


def enumerate_dominant_below(rs: RootSystem, mu: Sequence[int]) -> list[Weight]:
    """All dominant ``λ <= μ``.

    Breadth-first descent from ``μ`` subtracting positive roots and keeping
    dominant results; every dominant weight below ``μ`` is reached this way
    because covering relations among dominant weights are positive roots.
    Ordered by depth below ``μ`` (height of ``μ - λ``), then lexicographically.
    """
    mu = rs.check_weight(mu)
    if not is_dominant(mu):
        raise RootSystemError(f"{mu} is not dominant")
    seen = {mu}
    queue = deque([mu])
    while queue:
        lam = queue.popleft()
        for beta in rs.positive_roots:
            nu = tuple(x - y for x, y in zip(lam, beta))
            if nu not in seen and is_dominant(nu):
                seen.add(nu)
                queue.append(nu)
    return sorted(seen, key=weight_sort_key(rs, mu))


def weyl_orbit(rs: RootSystem, weight: Sequence[int]) -> list[Weight]:
    """The W-orbit of ``weight``, by closure under simple reflections."""
    start = tuple(int(x) for x in weight)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(1, rs.rank + 1):
            if v[i - 1] != 0:
                u = simple_reflection(rs, i, v)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return sorted(seen)


def word_length(rs: RootSystem, word: Sequence[int]) -> int:
    """Length of the Weyl group element represented by ``word``.

    Acts on the regular weight ρ; the length equals the number of simple
    reflections needed to bring ``w(ρ)`` back to the dominant chamber.
    """
    v = apply_word(rs, word, rs.rho)
    return len(to_dominant(rs, v)[1])


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    return word_length(rs, word) == len(word)


def reduced_words(rs: RootSystem, word: Sequence[int]) -> list[tuple[int, ...]]:
    """All reduced words of the element represented by the reduced ``word``.

    Walks the graph of braid moves, so it is only sensible for short words.
    """
    A = rs.cartan
    start = tuple(word)
    # braid relation length m_ij from a_ij a_ji = 0,1,2,3 -> 2,3,4,6
    m = {0: 2, 1: 3, 2: 4, 3: 6}
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, rs.rank + 1):
            for j in range(1, rs.rank + 1):
                if i == j:
                    continue
                mij = m[int(A[i - 1, j - 1] * A[j - 1, i - 1])]
                pat = tuple(i if k % 2 == 0 else j for k in range(mij))
                rep = tuple(j if k % 2 == 0 else i for k in range(mij))
                for s in range(len(w) - mij + 1):
                    if w[s:s + mij] == pat:
                        u = w[:s] + rep + w[s + mij:]
                        if u not in seen:
                            seen.add(u)
                            queue.append(u)
    return sorted(seen)
