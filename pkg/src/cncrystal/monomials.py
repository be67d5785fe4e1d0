"""Nakajima monomials for type C_n and their crystal structure.

A monomial is a finitely supported integer exponent function on the variables
Y_i(m) with i in [1, n] and m in Z.  The crystal data is read off running
exponent sums along each row i:

    phi_i   = max over m of  sum_{k <= m} y_i(k)      (at least 0),
    eps_i   = max over m of -sum_{k >  m} y_i(k)      (at least 0),

with the lowering operator dividing by a root monomial at the smallest
maximizer shift and the raising operator multiplying by one at the largest.
Both maxima are attained inside the support window extended by one on each
side, so the scan below is lossless.

The sign conventions (which neighbour row is shifted inside the root
monomials, and the doubled exponent at i = n) are fixed once and for all
here; every other module builds on top of these operators.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .rootdata import Weight, check_index, check_rank

StringStats = namedtuple("StringStats", "epsilon phi n_e n_f")

ExponentKey = tuple[int, int]  # (row index i, shift m)


class Monomial:
    """Immutable Laurent monomial in the Y_i(m), in canonical form (no zero exponents)."""

    __slots__ = ("rank", "_exps", "_key", "_hash")

    def __init__(self, rank: int, exponents: Mapping[ExponentKey, int]):
        check_rank(rank)
        clean: dict[ExponentKey, int] = {}
        for (i, m), e in exponents.items():
            check_index(rank, i)
            e = int(e)
            if e:
                clean[(i, int(m))] = e
        self._init_trusted(rank, clean)

    def _init_trusted(self, rank: int, clean: dict[ExponentKey, int]) -> None:
        self.rank = rank
        self._exps = clean
        self._key = tuple(sorted(clean.items()))
        self._hash = hash((rank, self._key))

    @classmethod
    def _trusted(cls, rank: int, clean: dict[ExponentKey, int]) -> "Monomial":
        obj = cls.__new__(cls)
        obj._init_trusted(rank, clean)
        return obj

    @classmethod
    def one(cls, rank: int) -> "Monomial":
        check_rank(rank)
        return cls._trusted(rank, {})

    @classmethod
    def generator(cls, rank: int, i: int, m: int, exponent: int = 1) -> "Monomial":
        """Y_i(m)**exponent."""
        check_rank(rank)
        check_index(rank, i)
        if exponent == 0:
            return cls.one(rank)
        return cls._trusted(rank, {(i, int(m)): int(exponent)})

    @classmethod
    def from_factors(cls, rank: int, factors: Iterable[tuple[int, int, int]]) -> "Monomial":
        """Product of Y_i(m)**e factors given as (i, m, e) triples."""
        exps: dict[ExponentKey, int] = {}
        for i, m, e in factors:
            key = (i, m)
            exps[key] = exps.get(key, 0) + e
        return cls(rank, exps)

    # -- structure ---------------------------------------------------------

    def exponent(self, i: int, m: int) -> int:
        return self._exps.get((i, m), 0)

    def items(self) -> tuple[tuple[ExponentKey, int], ...]:
        """Exponents in canonical key order (i ascending, then shift ascending)."""
        return self._key

    def support(self) -> tuple[ExponentKey, ...]:
        return tuple(k for k, _ in self._key)

    def is_one(self) -> bool:
        return not self._exps

    def sort_key(self):
        return self._key

    # -- ring operations ----------------------------------------------------

    def _merge(self, items: Iterable[tuple[ExponentKey, int]]) -> "Monomial":
        exps = dict(self._exps)
        for key, e in items:
            v = exps.get(key, 0) + e
            if v:
                exps[key] = v
            else:
                exps.pop(key, None)
        return Monomial._trusted(self.rank, exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return self._merge(other._key)

    def inv(self) -> "Monomial":
        return Monomial._trusted(self.rank, {k: -e for k, e in self._exps.items()})

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return self._merge((k, -e) for k, e in other._key)

    def shifted(self, a: int) -> "Monomial":
        """Translate every shift by a; commutes with the crystal operators."""
        return Monomial._trusted(self.rank, {(i, m + a): e for (i, m), e in self._exps.items()})

    def without_row(self, i: int) -> "Monomial":
        """Delete all Y_i exponents (projection onto the rank-lowered subalgebra)."""
        check_index(self.rank, i)
        return Monomial._trusted(
            self.rank, {(j, m): e for (j, m), e in self._exps.items() if j != i}
        )

    # -- crystal structure ---------------------------------------------------

    def weight(self) -> Weight:
        sums = [0] * self.rank
        for (i, _), e in self._exps.items():
            sums[i - 1] += e
        return Weight(sums)

    def string_stats(self, i: int) -> StringStats:
        """(eps_i, phi_i, n_e, n_f); the shifts are meaningful only when the
        corresponding statistic is positive."""
        check_index(self.rank, i)
        row = sorted((m, e) for (j, m), e in self._exps.items() if j == i)
        if not row:
            return StringStats(0, 0, 0, 0)
        # Running prefix sums at each support shift, with a virtual zero just
        # below the support; the maximum over all of Z is attained here.
        points = [(row[0][0] - 1, 0)]
        acc = 0
        for m, e in row:
            acc += e
            points.append((m, acc))
        total = acc
        best = max(v for _, v in points)
        phi = best
        eps = best - total
        n_f = next(m for m, v in points if v == best)
        last = max(idx for idx, (_, v) in enumerate(points) if v == best)
        if last == len(points) - 1:
            n_e = points[last][0]
        else:
            # plateau holding the max ends just before the next support shift
            n_e = points[last + 1][0] - 1
        return StringStats(eps, phi, n_e, n_f)

    def epsilon(self, i: int) -> int:
        return self.string_stats(i).epsilon

    def phi(self, i: int) -> int:
        return self.string_stats(i).phi

    def e(self, i: int) -> "Monomial | None":
        """Raising operator: None when eps_i = 0, else multiply by A_i(n_e)."""
        stats = self.string_stats(i)
        if stats.epsilon == 0:
            return None
        return self._merge(root_monomial_exponents(self.rank, i, stats.n_e).items())

    def f(self, i: int) -> "Monomial | None":
        """Lowering operator: None when phi_i = 0, else divide by A_i(n_f)."""
        stats = self.string_stats(i)
        if stats.phi == 0:
            return None
        return self._merge(
            (k, -e) for k, e in root_monomial_exponents(self.rank, i, stats.n_f).items()
        )

    def is_highest_weight(self) -> bool:
        return all(self.string_stats(i).epsilon == 0 for i in range(1, self.rank + 1))

    # -- presentation ---------------------------------------------------------

    def text(self) -> str:
        if not self._key:
            return "1"
        parts = []
        for (i, m), e in self._key:
            parts.append(f"Y{i}({m})" if e == 1 else f"Y{i}({m})^{e}")
        return "*".join(parts)

    def to_json(self) -> list[list[int]]:
        return [[i, m, e] for (i, m), e in self._key]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Monomial)
            and self._hash == other._hash
            and self.rank == other.rank
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self._key < other._key

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Monomial({self.rank}, {self.text()!r})"


def root_monomial_exponents(n: int, i: int, m: int) -> dict[ExponentKey, int]:
    """Exponent map of A_i(m) = Y_i(m) Y_i(m+1) * (neighbour corrections).

    The neighbour below sits at shift m+1 (with a squared inverse when i = n),
    the neighbour above at shift m; rows 0 and n+1 are understood as absent.
    """
    check_rank(n)
    check_index(n, i)
    out = {(i, m): 1, (i, m + 1): 1}
    if i >= 2:
        out[(i - 1, m + 1)] = -2 if i == n else -1
    if i + 1 <= n:
        out[(i + 1, m)] = -1
    return out


def root_monomial(n: int, i: int, m: int) -> Monomial:
    """A_i(m) as a Monomial; multiplying by it raises the weight by alpha_i."""
    return Monomial._trusted(n, root_monomial_exponents(n, i, m))


# -- X-variables and the fundamental sets M_k(m) -------------------------------


@dataclass(frozen=True)
class XLetter:
    """One-letter building block X_v(shift), v signed: +i unbarred, -i barred."""

    value: int
    shift: int

    def __str__(self) -> str:
        v = self.value
        name = str(v) if v > 0 else f"{-v}̄"
        return f"X{name}({self.shift})"


def letter_order_index(n: int, value: int) -> int:
    """Position of a signed letter in the order 1 < ... < n < -n < ... < -1."""
    check_rank(n)
    if not isinstance(value, int) or value == 0 or abs(value) > n:
        raise ValueError(f"letter value {value!r} out of range for rank {n}")
    return value - 1 if value > 0 else 2 * n + value


def letter_alphabet(n: int) -> tuple[int, ...]:
    """All 2n signed letters in increasing order."""
    check_rank(n)
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def x_monomial(n: int, letter: XLetter) -> Monomial:
    """Y-form of an X-variable.

    Unbarred i at shift s is Y_i(s)/Y_{i-1}(s+1); barred i at shift s is
    Y_{i-1}(t)/Y_i(t) with t = s + n - i + 1.  Row 0 is absent.
    """
    check_rank(n)
    v, s = letter.value, letter.shift
    letter_order_index(n, v)  # range check
    exps: dict[ExponentKey, int] = {}
    if v > 0:
        exps[(v, s)] = 1
        if v >= 2:
            exps[(v - 1, s + 1)] = -1
    else:
        i = -v
        t = s + n - i + 1
        exps[(i, t)] = -1
        if i >= 2:
            exps[(i - 1, t)] = 1
    return Monomial._trusted(n, exps)


def x_word_monomial(n: int, letters: Iterable[XLetter]) -> Monomial:
    out = Monomial.one(n)
    for letter in letters:
        out = out * x_monomial(n, letter)
    return out


def m_k_words(n: int, k: int, m: int) -> Iterator[tuple[XLetter, ...]]:
    """All strictly increasing k-letter X-words with base shift m (top shift k+m-1)."""
    check_rank(n)
    if not 1 <= k <= 2 * n:
        raise ValueError(f"k={k!r} out of range [1, {2 * n}]")
    for combo in itertools.combinations(letter_alphabet(n), k):
        yield tuple(XLetter(v, k + m - 1 - j) for j, v in enumerate(combo))


def m_k_set(n: int, k: int, m: int) -> tuple[Monomial, ...]:
    """The fundamental set of length-k monomials at base shift m, deduplicated.

    Distinct X-words can collide in Y-form; identity is always the canonical
    Y-exponent function.  Returned in canonical order.
    """
    seen = {x_word_monomial(n, word) for word in m_k_words(n, k, m)}
    return tuple(sorted(seen))


@dataclass(frozen=True)
class TaggedElement:
    """Monomial together with the ambient set M_p(m) it was produced in.

    The tag is genuine extra data: the same Y-exponent function can occur in
    several ambient sets, and length/height are attributes of the tag.
    """

    monomial: Monomial
    length: int
    base: int

    @property
    def height(self) -> int:
        return self.base + max(self.length - self.monomial.rank, 0)


def tagged_m_k_set(n: int, k: int, m: int) -> tuple[TaggedElement, ...]:
    return tuple(TaggedElement(mon, k, m) for mon in m_k_set(n, k, m))
