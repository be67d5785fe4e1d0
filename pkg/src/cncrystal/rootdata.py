"""Cartan data for the symplectic series C_n (n >= 2), in exact integer arithmetic.

Weights live in the lattice P = Z*L1 + ... + Z*Ln spanned by the fundamental
weights and are stored in that basis, so the coroot pairing <h_i, w> is a
coordinate lookup.  The orthogonal epsilon-basis (L_i = eps_1 + ... + eps_i)
used by tableau combinatorics is converted on demand; the change of basis is
unitriangular, hence an exact integer bijection.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def check_rank(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    return n


def check_index(n: int, i: int, name: str = "i") -> int:
    if not isinstance(i, int) or not 1 <= i <= n:
        raise ValueError(f"index {name}={i!r} out of range [1, {n}]")
    return i


def cartan_entry(n: int, i: int, j: int) -> int:
    """Entry a_ij of the type-C_n Cartan matrix.

    The only asymmetry is the doubled entry a_{n-1,n} = -2 coming from the
    long simple root alpha_n.
    """
    check_rank(n)
    check_index(n, i, "i")
    check_index(n, j, "j")
    if i == j:
        return 2
    if (i, j) == (n - 1, n):
        return -2
    if abs(i - j) == 1:
        return -1
    return 0


def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    check_rank(n)
    return tuple(
        tuple(cartan_entry(n, i, j) for j in range(1, n + 1)) for i in range(1, n + 1)
    )


def cartan_determinant(n: int) -> int:
    """Exact determinant of the Cartan matrix (2 for every type C_n)."""
    rows = [[Fraction(x) for x in row] for row in cartan_matrix(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] / rows[col][col]
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return int(det)


class Weight:
    """Integer weight sum(coeffs[i-1] * L_i), stored in fundamental-weight coordinates."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = tuple(int(c) for c in coeffs)
        check_rank(len(self.coeffs))
        self._hash = hash(self.coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        check_rank(n)
        return cls((0,) * n)

    @classmethod
    def fundamental(cls, n: int, i: int) -> "Weight":
        """L_i, with the convention L_0 = 0."""
        check_rank(n)
        if i == 0:
            return cls.zero(n)
        check_index(n, i)
        return cls(tuple(1 if j == i else 0 for j in range(1, n + 1)))

    @classmethod
    def from_epsilon(cls, eps: Iterable[int]) -> "Weight":
        eps = tuple(int(e) for e in eps)
        n = len(eps)
        check_rank(n)
        return cls(tuple(eps[i] - (eps[i + 1] if i + 1 < n else 0) for i in range(n)))

    def to_epsilon(self) -> tuple[int, ...]:
        n = self.rank
        out = [0] * n
        running = 0
        for j in range(n - 1, -1, -1):
            running += self.coeffs[j]
            out[j] = running
        return tuple(out)

    def pairing(self, i: int) -> int:
        """Coroot pairing <h_i, self>."""
        check_index(self.rank, i)
        return self.coeffs[i - 1]

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def _check_same_rank(self, other: "Weight") -> None:
        if not isinstance(other, Weight):
            raise TypeError(f"expected Weight, got {type(other).__name__}")
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Weight") -> bool:
        self._check_same_rank(other)
        return self.coeffs < other.coeffs

    def to_json(self) -> dict:
        return {"lambda": list(self.coeffs)}

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            magnitude = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{magnitude}Λ{i}")
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Weight({self.coeffs})"


def simple_root(n: int, i: int) -> Weight:
    """alpha_i in fundamental-weight coordinates (column i of the Cartan matrix)."""
    check_rank(n)
    check_index(n, i)
    return Weight(tuple(cartan_entry(n, j, i) for j in range(1, n + 1)))
