"""Kashiwara-Nakashima column model for type C_n.

Letters are the 2n symbols 1 < 2 < ... < n < nbar < ... < 2bar < 1bar,
encoded as signed integers (+i unbarred, -i barred).  The letter crystal is
the 2n-vertex path

    1 -1-> 2 -2-> ... -(n-1)-> n -n-> nbar -(n-1)-> ... -2-> 2bar -1-> 1bar,

and a column [i_1 < ... < i_N] carries the crystal structure of the word
[i_1] (x) ... (x) [i_N], evaluated by folding the two-factor tensor rule
left to right.  Admissible columns (the one-column condition below) realize
the fundamental crystal of highest weight L_N.

This model is the independent oracle for tensor-product decompositions: it
never touches the monomial realization.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Iterable

from .graphs import TensorPair
from .monomials import letter_alphabet, letter_order_index
from .rootdata import Weight, check_index, check_rank


class Letter:
    """One box of the vector-representation crystal; value +i or -i."""

    __slots__ = ("rank", "value", "_hash")

    def __init__(self, rank: int, value: int):
        check_rank(rank)
        letter_order_index(rank, value)  # range check
        self.rank = rank
        self.value = value
        self._hash = hash((Letter, rank, value))

    def order_index(self) -> int:
        return letter_order_index(self.rank, self.value)

    def weight(self) -> Weight:
        eps = [0] * self.rank
        eps[abs(self.value) - 1] = 1 if self.value > 0 else -1
        return Weight.from_epsilon(eps)

    def f(self, i: int) -> "Letter | None":
        check_index(self.rank, i)
        n, v = self.rank, self.value
        if i < n:
            if v == i:
                return Letter(n, i + 1)
            if v == -(i + 1):
                return Letter(n, -i)
            return None
        return Letter(n, -n) if v == n else None

    def e(self, i: int) -> "Letter | None":
        check_index(self.rank, i)
        n, v = self.rank, self.value
        if i < n:
            if v == i + 1:
                return Letter(n, i)
            if v == -i:
                return Letter(n, -(i + 1))
            return None
        return Letter(n, n) if v == -n else None

    def epsilon(self, i: int) -> int:
        return 0 if self.e(i) is None else 1

    def phi(self, i: int) -> int:
        return 0 if self.f(i) is None else 1

    def sort_key(self):
        return (self.order_index(),)

    def __eq__(self, other) -> bool:
        return isinstance(other, Letter) and self.rank == other.rank and self.value == other.value

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Letter") -> bool:
        return self.order_index() < other.order_index()

    def __str__(self) -> str:
        v = self.value
        return str(v) if v > 0 else f"{-v}̄"

    def __repr__(self) -> str:
        return f"Letter({self.rank}, {self.value})"


class Column:
    """Word of letters read top to bottom, acting as their tensor product."""

    __slots__ = ("rank", "letters", "_hash")

    def __init__(self, rank: int, letters: Iterable[int]):
        check_rank(rank)
        letters = tuple(int(v) for v in letters)
        if not letters:
            raise ValueError("a column needs at least one letter")
        for v in letters:
            letter_order_index(rank, v)
        self.rank = rank
        self.letters = letters
        self._hash = hash((Column, rank, letters))

    def __len__(self) -> int:
        return len(self.letters)

    def is_strictly_increasing(self) -> bool:
        idx = [letter_order_index(self.rank, v) for v in self.letters]
        return all(a < b for a, b in zip(idx, idx[1:]))

    def _word(self):
        letters = [Letter(self.rank, v) for v in self.letters]
        return reduce(TensorPair, letters)

    @classmethod
    def _from_word(cls, rank: int, element) -> "Column":
        out: list[int] = []
        stack = [element]
        while stack:
            node = stack.pop()
            if isinstance(node, TensorPair):
                stack.append(node.right)
                stack.append(node.left)
            else:
                out.append(node.value)
        return cls(rank, out)

    def weight(self) -> Weight:
        eps = [0] * self.rank
        for v in self.letters:
            eps[abs(v) - 1] += 1 if v > 0 else -1
        return Weight.from_epsilon(eps)

    def epsilon(self, i: int) -> int:
        return self._word().epsilon(i)

    def phi(self, i: int) -> int:
        return self._word().phi(i)

    def e(self, i: int) -> "Column | None":
        up = self._word().e(i)
        return None if up is None else Column._from_word(self.rank, up)

    def f(self, i: int) -> "Column | None":
        down = self._word().f(i)
        return None if down is None else Column._from_word(self.rank, down)

    def is_highest_weight(self) -> bool:
        return all(self.epsilon(i) == 0 for i in range(1, self.rank + 1))

    def sort_key(self):
        return tuple(letter_order_index(self.rank, v) for v in self.letters)

    def to_json(self) -> list[int]:
        return list(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Column)
            and self.rank == other.rank
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Column") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "[" + ",".join(str(Letter(self.rank, v)) for v in self.letters) + "]"

    def __repr__(self) -> str:
        return f"Column({self.rank}, {self.letters})"


def column_is_admissible(column: Column) -> bool:
    """One-column condition: with i_k = p and i_l = pbar both present,
    the count k + (N - l + 1) of boxes weakly above p and weakly below pbar
    may not exceed p."""
    if not column.is_strictly_increasing():
        raise ValueError("admissibility is defined for strictly increasing columns")
    letters = column.letters
    positions = {v: k for k, v in enumerate(letters, start=1)}
    size = len(letters)
    for p in range(1, column.rank + 1):
        if p in positions and -p in positions:
            k, l = positions[p], positions[-p]
            if k + (size - l + 1) > p:
                return False
    return True


def column_crystal(n: int, length: int) -> tuple[Column, ...]:
    """All admissible strictly increasing columns of the given length.

    This is the fundamental crystal of highest weight L_length; closure under
    the operators is a theorem (and is asserted by the test suite), not
    something this enumeration enforces.
    """
    check_rank(n)
    check_index(n, length, "length")
    out = [
        column
        for combo in itertools.combinations(letter_alphabet(n), length)
        for column in (Column(n, combo),)
        if column_is_admissible(column)
    ]
    return tuple(sorted(out, key=Column.sort_key))


def letter_crystal(n: int) -> tuple[Letter, ...]:
    check_rank(n)
    return tuple(Letter(n, v) for v in letter_alphabet(n))


def tensor_highest_weights(
    n: int, p: int, q: int
) -> tuple[tuple[Column, Column, Weight], ...]:
    """All highest-weight pairs u (x) v with u, v in the fundamental crystals
    of lengths p and q, by exhaustive search over every pair."""
    check_rank(n)
    check_index(n, p, "p")
    check_index(n, q, "q")
    left = column_crystal(n, p)
    right = column_crystal(n, q)
    left_stats = [
        (u, u.weight(), [u.epsilon(i) for i in range(1, n + 1)], [u.phi(i) for i in range(1, n + 1)])
        for u in left
    ]
    right_stats = [(v, [v.epsilon(i) for i in range(1, n + 1)]) for v in right]
    out = []
    for u, wu, eps_u, _phi_u in left_stats:
        pairings = [wu.pairing(i) for i in range(1, n + 1)]
        for v, eps_v in right_stats:
            if all(
                max(eps_u[i], eps_v[i] - pairings[i]) == 0 for i in range(n)
            ):
                out.append((u, v, wu + v.weight()))
    return tuple(out)
