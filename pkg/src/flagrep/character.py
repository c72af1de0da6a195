"""Sparse integer characters in the group ring Z[P].

A :class:`Character` stores its monomials ``e^μ`` as two numpy arrays: an
``(N, ℓ)`` array of weights in canonical (lexicographic) order and an ``(N,)``
array of nonzero int64 coefficients.  All heavy operations pack each weight
into a single int64 code so that merging is a sort plus ``np.add.reduceat``.

Coefficient arithmetic is checked: every operation bounds the largest
coefficient it can produce and raises :class:`OverflowError` rather than
wrapping.  Total dimensions are returned as Python integers.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .root_system import RootSystem

_INT64_LIMIT = 2**62
# rows per block in large convolutions
_BLOCK_ROWS = 4_000_000


def _check_bound(bound: int, what: str) -> None:
    if bound >= _INT64_LIMIT:
        raise OverflowError(f"coefficient bound {bound} exceeds int64 range in {what}")


class _Packer:
    """Mixed-radix int64 encoding of weights lying in a bounding box."""

    def __init__(self, lo: np.ndarray, hi: np.ndarray):
        self.lo = np.asarray(lo, dtype=np.int64)
        radix = (np.asarray(hi, dtype=np.int64) - self.lo + 1).tolist()
        strides = [1] * len(radix)
        total = 1
        for j in range(len(radix) - 1, -1, -1):
            strides[j] = total
            total *= int(radix[j])
        if total >= _INT64_LIMIT:
            raise OverflowError("weight coordinates span too large a box to encode")
        self.strides = np.array(strides, dtype=np.int64)
        self.radix = np.array(radix, dtype=np.int64)

    @classmethod
    def covering(cls, *arrays: np.ndarray) -> "_Packer":
        arrays = [a for a in arrays if len(a)]
        lo = np.min([a.min(axis=0) for a in arrays], axis=0)
        hi = np.max([a.max(axis=0) for a in arrays], axis=0)
        return cls(lo, hi)

    def pack(self, weights: np.ndarray) -> np.ndarray:
        return (weights - self.lo) @ self.strides

    def unpack(self, codes: np.ndarray) -> np.ndarray:
        out = np.empty((len(codes), len(self.strides)), dtype=np.int64)
        rem = codes
        for j, s in enumerate(self.strides):
            out[:, j], rem = np.divmod(rem, s)
        return out + self.lo


def _reduce_codes(codes: np.ndarray, coeffs: np.ndarray):
    """Sum coefficients over equal codes; drop zeros.  Output sorted by code.

    Raises OverflowError if a group sum could leave the int64 range.
    """
    if len(codes) == 0:
        return codes, coeffs
    order = np.argsort(codes, kind="stable")
    codes = codes[order]
    coeffs = coeffs[order]
    starts = np.flatnonzero(np.concatenate(([True], codes[1:] != codes[:-1])))
    if len(starts) < len(codes):
        group = int(np.diff(np.append(starts, len(codes))).max())
        _check_bound(_max_abs(coeffs) * group, "coefficient merge")
    codes = codes[starts]
    coeffs = np.add.reduceat(coeffs, starts)
    keep = coeffs != 0
    return codes[keep], coeffs[keep]


def _max_abs(coeffs: np.ndarray) -> int:
    return int(np.abs(coeffs).max()) if len(coeffs) else 0


class Character:
    """Immutable element of Z[P]: a finite sum of ``coeff * e^weight``."""

    __slots__ = ("rank", "weights", "coeffs", "_dict")

    def __init__(self, rank: int, weights: np.ndarray, coeffs: np.ndarray, *, _canonical=False):
        weights = np.asarray(weights, dtype=np.int64).reshape(-1, rank)
        coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1)
        if len(weights) != len(coeffs):
            raise ValueError("weights and coefficients differ in length")
        if not _canonical and len(coeffs):
            p = _Packer.covering(weights)
            codes, coeffs = _reduce_codes(p.pack(weights), coeffs)
            weights = p.unpack(codes)
        weights.setflags(write=False)
        coeffs.setflags(write=False)
        self.rank = rank
        self.weights = weights
        self.coeffs = coeffs
        self._dict = None

    # constructors

    @classmethod
    def zero(cls, rank: int) -> "Character":
        return cls(rank, np.zeros((0, rank), np.int64), np.zeros(0, np.int64), _canonical=True)

    @classmethod
    def monomial(cls, weight: Sequence[int], coeff: int = 1) -> "Character":
        rank = len(weight)
        if coeff == 0:
            return cls.zero(rank)
        return cls(rank, [list(weight)], [coeff], _canonical=True)

    @classmethod
    def from_dict(cls, terms: Mapping[Sequence[int], int], rank: int | None = None) -> "Character":
        if rank is None:
            if not terms:
                raise ValueError("rank required for an empty character")
            rank = len(next(iter(terms)))
        items = [(tuple(k), int(v)) for k, v in terms.items()]
        if any(len(k) != rank for k, _ in items):
            raise ValueError(f"all weights must have {rank} coordinates")
        if not items:
            return cls.zero(rank)
        return cls(rank, [k for k, _ in items], [v for _, v in items])

    @classmethod
    def from_records(cls, records: Iterable, rank: int) -> "Character":
        """Inverse of :meth:`to_records`."""
        return cls.from_dict({tuple(w): c for w, c in records}, rank)

    # mapping-like access

    def as_dict(self) -> dict[tuple, int]:
        if self._dict is None:
            self._dict = {
                tuple(w): c for w, c in zip(self.weights.tolist(), self.coeffs.tolist())
            }
        return self._dict

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.as_dict())

    def items(self):
        return self.as_dict().items()

    def __getitem__(self, weight) -> int:
        return self.as_dict().get(tuple(int(x) for x in weight), 0)

    def __contains__(self, weight) -> bool:
        return tuple(int(x) for x in weight) in self.as_dict()

    def support(self) -> list[tuple]:
        return list(self.as_dict())

    @property
    def dimension(self) -> int:
        """Sum of coefficients, exact."""
        return sum(self.coeffs.tolist())

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def to_records(self) -> list[tuple[list[int], int]]:
        """Canonical serialization: ``[(coords, coeff), ...]`` in lexicographic order."""
        return [(w, c) for w, c in zip(self.weights.tolist(), self.coeffs.tolist())]

    def __repr__(self):
        if len(self) > 8:
            return f"<Character rank={self.rank} terms={len(self)} dim={self.dimension}>"
        body = " + ".join(f"{c}*e^{tuple(w)}" for w, c in self.to_records()) or "0"
        return f"Character({body})"

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return (
            self.rank == other.rank
            and np.array_equal(self.weights, other.weights)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    __hash__ = None

    # ring structure

    def _same_rank(self, other: "Character"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        self._same_rank(other)
        return _combine([self, other], [1, 1])

    def __sub__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        self._same_rank(other)
        return _combine([self, other], [1, -1])

    def __neg__(self):
        return Character(self.rank, self.weights, -self.coeffs, _canonical=True)

    def __mul__(self, other):
        if isinstance(other, Character):
            return char_mul(self, other)
        if isinstance(other, (int, np.integer)):
            other = int(other)
            if other == 0:
                return Character.zero(self.rank)
            _check_bound(_max_abs(self.coeffs) * abs(other), "scalar multiple")
            return Character(self.rank, self.weights, self.coeffs * other, _canonical=True)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, weight: Sequence[int]) -> "Character":
        """Multiply by the monomial ``e^weight`` (order is preserved)."""
        w = np.asarray(weight, dtype=np.int64)
        return Character(self.rank, self.weights + w, self.coeffs, _canonical=True)

    def map_weights(self, matrix: np.ndarray, offset: Sequence[int] | None = None) -> "Character":
        """Apply the linear map ``μ -> matrix @ μ (+ offset)`` to every weight."""
        w = self.weights @ np.asarray(matrix, dtype=np.int64).T
        if offset is not None:
            w = w + np.asarray(offset, dtype=np.int64)
        return Character(self.rank, w, self.coeffs)


def _combine(chars: Sequence[Character], scalars: Sequence[int]) -> Character:
    rank = chars[0].rank
    parts = [(c, s) for c, s in zip(chars, scalars) if len(c) and s]
    if not parts:
        return Character.zero(rank)
    bound = sum(_max_abs(c.coeffs) * abs(s) for c, s in parts)
    _check_bound(bound, "linear combination")
    p = _Packer.covering(*[c.weights for c, _ in parts])
    codes = np.concatenate([p.pack(c.weights) for c, _ in parts])
    coeffs = np.concatenate([c.coeffs * s for c, s in parts])
    codes, coeffs = _reduce_codes(codes, coeffs)
    return Character(rank, p.unpack(codes), coeffs, _canonical=True)


def linear_combination(chars: Sequence[Character], scalars: Sequence[int]) -> Character:
    """``Σ scalars[k] * chars[k]`` in a single merge."""
    if not chars:
        raise ValueError("empty combination")
    for c in chars[1:]:
        chars[0]._same_rank(c)
    return _combine(list(chars), [int(s) for s in scalars])


def char_mul(a: Character, b: Character) -> Character:
    """Convolution product in Z[P].

    The smaller factor is split into blocks; each block's shifted copies of
    the larger factor are merged into the running total.  Integer addition is
    exact, so the blocking never changes the result.
    """
    a._same_rank(b)
    rank = a.rank
    if a.is_zero() or b.is_zero():
        return Character.zero(rank)
    if len(a) > len(b):
        a, b = b, a
    _check_bound(_max_abs(a.coeffs) * _max_abs(b.coeffs) * len(a), "product")
    lo = a.weights.min(axis=0) + b.weights.min(axis=0)
    hi = a.weights.max(axis=0) + b.weights.max(axis=0)
    p = _Packer(lo, hi)
    # pack(x + y) = pa(x) + pb(y) with the two offsets split between factors
    pa = (a.weights - a.weights.min(axis=0)) @ p.strides
    pb = (b.weights - b.weights.min(axis=0)) @ p.strides
    step = max(1, _BLOCK_ROWS // len(b))
    acc_codes = np.zeros(0, np.int64)
    acc_coeffs = np.zeros(0, np.int64)
    for start in range(0, len(a), step):
        ca = pa[start:start + step]
        xa = a.coeffs[start:start + step]
        codes = (ca[:, None] + pb[None, :]).ravel()
        coeffs = (xa[:, None] * b.coeffs[None, :]).ravel()
        acc_codes, acc_coeffs = _reduce_codes(
            np.concatenate([acc_codes, codes]), np.concatenate([acc_coeffs, coeffs])
        )
    return Character(rank, p.unpack(acc_codes), acc_coeffs, _canonical=True)


def diamond(a: Character) -> Character:
    """The involution ``e^μ -> e^{-μ}``."""
    return Character(a.rank, -a.weights, a.coeffs)


def reflect(rs: RootSystem, i: int, a: Character) -> Character:
    """Apply the simple reflection ``s_i`` to every weight of ``a``."""
    rs.check_index(i)
    alpha = np.asarray(rs.simple_roots[i - 1], dtype=np.int64)
    w = a.weights - a.weights[:, i - 1:i] * alpha
    return Character(a.rank, w, a.coeffs)


def is_weyl_invariant(rs: RootSystem, a: Character) -> bool:
    return all(reflect(rs, i, a) == a for i in range(1, rs.rank + 1))


def demazure_apply(rs: RootSystem, i: int, a: Character) -> Character:
    """Demazure operator ``D_i`` via its closed form on monomials.

    With ``n = <λ, α_i^vee>``::

        D_i e^λ = e^λ + e^{λ-α_i} + ... + e^{λ-nα_i}       n >= 0
                = 0                                         n = -1
                = -(e^{λ+α_i} + ... + e^{λ+(-n-1)α_i})      n <= -2
    """
    rs.check_index(i)
    if a.rank != rs.rank:
        raise ValueError(f"rank mismatch: character {a.rank}, root system {rs.rank}")
    if a.is_zero():
        return a
    alpha = np.asarray(rs.simple_roots[i - 1], dtype=np.int64)
    W, C = a.weights, a.coeffs
    n = W[:, i - 1]
    # strings lie between λ and s_i λ
    p = _Packer.covering(W, W - n[:, None] * alpha)
    base = p.pack(W)
    step = int(alpha @ p.strides)

    pos = n >= 0
    neg = n <= -2
    lengths = np.where(pos, n + 1, np.where(neg, -n - 1, 0))
    total = int(lengths.sum())
    if total == 0:
        return Character.zero(a.rank)
    src = np.repeat(np.arange(len(C)), lengths)
    first = np.cumsum(lengths) - lengths
    k = np.arange(total, dtype=np.int64) - np.repeat(first, lengths)
    # positive strings walk down by k = 0..n, negative ones up by k = 1..-n-1
    sign = np.where(pos, 1, -1)[src]
    shift = np.where(pos[src], -k, k + 1)
    codes = base[src] + shift * step
    coeffs = C[src] * sign
    codes, coeffs = _reduce_codes(codes, coeffs)
    return Character(a.rank, p.unpack(codes), coeffs, _canonical=True)


def demazure_word(rs: RootSystem, word: Sequence[int], a: Character) -> Character:
    """``D_{i1} D_{i2} ... D_{ik}`` applied to ``a`` (rightmost first).

    Letters are applied without any reducedness check; the result is only
    meaningful for reduced words.
    """
    for i in reversed(word):
        a = demazure_apply(rs, i, a)
    return a
