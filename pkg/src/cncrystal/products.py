"""Entrywise products of fundamental monomial crystals and their decomposition.

The product here is the honest product of Laurent monomials (exponents add),
not a tensor product.  Such a product set is again closed under the crystal
operators and splits into irreducibles; this module computes that splitting
two ways and compares:

  * brute force: build the product set, find its highest-weight elements,
    grow their components;
  * closed form: the arithmetic rule predicting which dominant weights
    L_a + L_c occur, each gated by an integer threshold on the shift gap m.

For a pair (a, c) inside the admissible region the gate is

    gap = (p + q) - (a + c) > 0 and even:  appears iff m >= (q-p-a-c+2)/2 + n,
    gap = 0:                               appears iff m >= q - a + 1,

with the top component (a, c) = (p, q) always present.  Dropping the gates
altogether recovers the tensor-product decomposition rule.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    CrystalInvariantError,
    Decomposition,
    decompose_set,
    generate_closure,
    is_closed,
)
from .monomials import Monomial, m_k_set
from .rootdata import Weight, check_index, check_rank


@dataclass(frozen=True)
class ProductSpec:
    """Parameters of the product of the length-p crystal at shift m with the
    length-q crystal at shift 1."""

    n: int
    p: int
    q: int
    m: int

    def __post_init__(self):
        check_rank(self.n)
        check_index(self.n, self.p, "p")
        check_index(self.n, self.q, "q")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m={self.m!r} must be an integer >= 1")


@lru_cache(maxsize=256)
def fundamental_crystal(n: int, k: int, m: int) -> tuple[Monomial, ...]:
    """Connected component of Y_k(m): the monomial model of the k-th
    fundamental crystal, cross-checked against the X-word enumeration."""
    check_rank(n)
    check_index(n, k, "k")
    graph = generate_closure([Monomial.generator(n, k, m)])
    closure = tuple(sorted(graph.vertices))
    if closure != m_k_set(n, k, m):
        raise CrystalInvariantError(
            f"closure of Y_{k}({m}) disagrees with the X-word enumeration at rank {n}"
        )
    return closure


@lru_cache(maxsize=8)
def product_set(spec: ProductSpec) -> tuple[Monomial, ...]:
    """All entrywise products, deduplicated and verified closed."""
    left = fundamental_crystal(spec.n, spec.p, spec.m)
    right = fundamental_crystal(spec.n, spec.q, 1)
    products = {a * b for a in left for b in right}
    if not is_closed(products):
        raise CrystalInvariantError(f"product set for {spec} is not operator-closed")
    return tuple(sorted(products))


def product_factorizations(spec: ProductSpec) -> dict[Monomial, tuple[tuple[Monomial, Monomial], ...]]:
    """Every product monomial with all (left, right) factorizations that
    produced it; collisions are retained, not collapsed."""
    left = fundamental_crystal(spec.n, spec.p, spec.m)
    right = fundamental_crystal(spec.n, spec.q, 1)
    out: dict[Monomial, list[tuple[Monomial, Monomial]]] = {}
    for a in left:
        for b in right:
            out.setdefault(a * b, []).append((a, b))
    return {key: tuple(val) for key, val in out.items()}


def decompose_product_bruteforce(spec: ProductSpec) -> Decomposition:
    """Decompose the product set by closure from its highest-weight elements.

    Also checks the structural fact that every highest-weight product splits
    off the left factor Y_p(m): dividing a witness by it must land in the
    right-hand fundamental crystal.
    """
    elements = product_set(spec)
    decomposition = decompose_set(elements, check_closed=False)
    left_hw = Monomial.generator(spec.n, spec.p, spec.m)
    right = set(fundamental_crystal(spec.n, spec.q, 1))
    for component in decomposition:
        if component.witness / left_hw not in right:
            raise CrystalInvariantError(
                f"highest-weight product {component.witness} has no factorization "
                f"with left factor {left_hw}"
            )
    return decomposition


# -- closed forms ---------------------------------------------------------------


def _region_pairs(n: int, p: int, q: int):
    """(a, c) with 0 <= a <= c <= n, a <= p, |triangle| inequalities, even
    nonnegative gap, and half-sum bound; gap 0 yields the top weights."""
    for a in range(0, min(p, n) + 1):
        for c in range(a, n + 1):
            gap = (p + q) - (a + c)
            if gap < 0 or gap % 2:
                continue
            if a + q > p + c or a + p > q + c:
                continue
            if (p + q + c - a) // 2 > n:
                continue
            yield a, c, gap


def tensor_decomposition_closed_form(n: int, p: int, q: int) -> tuple[tuple[int, int], ...]:
    """Pairs (a, c) with L_a + L_c an irreducible constituent of the tensor
    product of the fundamental crystals p and q (multiplicity one each)."""
    check_rank(n)
    check_index(n, p, "p")
    check_index(n, q, "q")
    return tuple((a, c) for a, c, _ in _region_pairs(n, p, q))


@dataclass(frozen=True)
class ComponentPrediction:
    """One candidate constituent L_a + L_c with its gate.

    family "always" is the top component (a, c) = (p, q) up to order;
    "even_gap" has (p+q)-(a+c) positive and even; "zero_gap" has
    (p+q) = (a+c).  threshold is the least left shift m at which the
    component is present (1 for "always")."""

    a: int
    c: int
    family: str
    threshold: int

    def present(self, m: int) -> bool:
        return m >= self.threshold


def predicted_components(n: int, p: int, q: int) -> tuple[ComponentPrediction, ...]:
    """Every tensor constituent of the (p, q) pair with its product gate."""
    out = []
    for a, c, gap in _region_pairs(n, p, q):
        if (a, c) == (min(p, q), max(p, q)):
            out.append(ComponentPrediction(a, c, "always", 1))
        elif gap == 0:
            out.append(ComponentPrediction(a, c, "zero_gap", q - a + 1))
        else:
            # gap is positive and even, so this halving is exact
            numerator = q - p - a - c + 2
            if numerator % 2:
                raise CrystalInvariantError(
                    f"odd threshold numerator for (a,c)=({a},{c}) in ({n},{p},{q})"
                )
            out.append(ComponentPrediction(a, c, "even_gap", numerator // 2 + n))
    return tuple(out)


def component_threshold(n: int, p: int, q: int, a: int, c: int) -> int | None:
    """Least m at which (a, c) enters the product decomposition, or None when
    the pair is outside the tensor region."""
    for prediction in predicted_components(n, p, q):
        if (prediction.a, prediction.c) == (a, c):
            return prediction.threshold
    return None


def product_decomposition_closed_form(spec: ProductSpec) -> tuple[tuple[int, int], ...]:
    """Pairs (a, c) predicted for the product at shift gap m, in canonical order."""
    return tuple(
        (pred.a, pred.c)
        for pred in predicted_components(spec.n, spec.p, spec.q)
        if pred.present(spec.m)
    )


def weight_of_pair(n: int, a: int, c: int) -> Weight:
    """L_a + L_c with L_0 = 0."""
    return Weight.fundamental(n, a) + Weight.fundamental(n, c)


def weight_to_pair(weight: Weight) -> tuple[int, int]:
    """Inverse of weight_of_pair on weights of total fundamental degree <= 2."""
    nonzero = [(i, c) for i, c in enumerate(weight.coeffs, start=1) if c]
    if not nonzero:
        return (0, 0)
    if len(nonzero) == 1:
        i, c = nonzero[0]
        if c == 1:
            return (0, i)
        if c == 2:
            return (i, i)
    elif len(nonzero) == 2 and all(c == 1 for _, c in nonzero):
        return (nonzero[0][0], nonzero[1][0])
    raise ValueError(f"{weight} is not a sum of two fundamental weights")


def decomposition_pairs(decomposition: Decomposition) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(weight_to_pair(c.weight) for c in decomposition))


# -- products with general tags and shifts --------------------------------------


def normalize_product_params(
    n: int, p: int, m: int, q: int, l: int = 1
) -> ProductSpec:
    """Reduce a product of length-p/q sets at base shifts m/l (lengths up to
    2n) to an equivalent spec with right shift 1.

    Lengths above n fold down to 2n - length with the base shift moved up by
    length - n; a common translation then pins the right shift to 1, swapping
    the factors when that would leave the left shift below 1.
    """
    check_rank(n)
    if not 1 <= p <= 2 * n:
        raise ValueError(f"p={p!r} out of range [1, {2 * n}]")
    if not 1 <= q <= 2 * n:
        raise ValueError(f"q={q!r} out of range [1, {2 * n}]")
    if p > n:
        p, m = 2 * n - p, m - n + p
    if q > n:
        q, l = 2 * n - q, l - n + q
    if p == 0 or q == 0:
        raise ValueError("length-2n sets are trivial; the product is the other factor")
    m_norm = m - l + 1
    if m_norm < 1:
        p, q, m_norm = q, p, 2 - m_norm
    return ProductSpec(n, p, q, m_norm)


def general_product_decomposition(
    n: int, p: int, m: int, q: int, l: int = 1
) -> tuple[Decomposition, ProductSpec]:
    """Brute-force decomposition of the product of the length-p set at base m
    with the length-q set at base l, keeping the original shifts (witnesses
    come out untranslated); also returns the normalized spec."""
    spec = normalize_product_params(n, p, m, q, l)
    left = set(m_k_set(n, p, m))
    right = set(m_k_set(n, q, l))
    products = {a * b for a in left for b in right}
    if not is_closed(products):
        raise CrystalInvariantError("general product set is not operator-closed")
    return decompose_set(products, check_closed=False), spec


# -- exhaustive verification ----------------------------------------------------


@dataclass(frozen=True)
class CellResult:
    n: int
    p: int
    q: int
    m: int
    bruteforce: tuple[tuple[int, int], ...]
    predicted: tuple[tuple[int, int], ...]

    @property
    def match(self) -> bool:
        return self.bruteforce == self.predicted

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "m": self.m,
            "bruteforce": [list(x) for x in self.bruteforce],
            "predicted": [list(x) for x in self.predicted],
            "match": self.match,
        }


@dataclass(frozen=True)
class VerificationReport:
    n_max: int
    m_max: int
    cells: tuple[CellResult, ...]
    elapsed_seconds: float

    @property
    def mismatches(self) -> tuple[CellResult, ...]:
        return tuple(cell for cell in self.cells if not cell.match)

    def summary(self) -> dict:
        return {
            "summary": True,
            "n_max": self.n_max,
            "m_max": self.m_max,
            "cells": len(self.cells),
            "mismatches": len(self.mismatches),
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps(cell.to_json(), separators=(",", ":")) for cell in self.cells]
        lines.append(json.dumps(self.summary(), separators=(",", ":")))
        return "\n".join(lines) + "\n"


def verify_range(n_max: int, m_max: int) -> VerificationReport:
    """Compare brute force against the closed form on every cell
    2 <= n <= n_max, 1 <= p, q <= n, 1 <= m <= m_max."""
    check_rank(n_max)
    if m_max < 1:
        raise ValueError(f"m_max={m_max!r} must be >= 1")
    start = time.perf_counter()
    cells = []
    for n in range(2, n_max + 1):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                for m in range(1, m_max + 1):
                    spec = ProductSpec(n, p, q, m)
                    brute = decomposition_pairs(decompose_product_bruteforce(spec))
                    predicted = product_decomposition_closed_form(spec)
                    cells.append(CellResult(n, p, q, m, brute, predicted))
    elapsed = time.perf_counter() - start
    return VerificationReport(n_max, m_max, tuple(cells), elapsed)


def decomposition_to_json(spec: ProductSpec, decomposition: Decomposition) -> dict:
    components = []
    for comp in decomposition:
        a, c = weight_to_pair(comp.weight)
        components.append(
            {
                "a": a,
                "c": c,
                "lambda": list(comp.weight.coeffs),
                "size": comp.size,
                "hw": comp.witness.text(),
            }
        )
    return {
        "n": spec.n,
        "p": spec.p,
        "q": spec.q,
        "m": spec.m,
        "components": components,
    }
