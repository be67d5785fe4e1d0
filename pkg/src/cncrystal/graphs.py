"""Generic machinery for finite crystals.

Works on any elements exposing the operator protocol: ``rank``, ``weight()``,
``e(i)``, ``f(i)``, ``epsilon(i)``, ``phi(i)``, ``sort_key()``, plus hashing
and equality.  Monomials, tableau letters/columns and tensor pairs all
qualify, so closure, component extraction and decomposition are written once.

All traversals are breadth-first from seeds sorted by ``sort_key``, so vertex
order (and every exported document) is deterministic.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from typing import Iterable, Sequence

DEFAULT_VERTEX_BUDGET = 10**6


class VertexBudgetExceeded(RuntimeError):
    """Closure grew past the configured vertex budget (misuse guard)."""


class CrystalInvariantError(RuntimeError):
    """A structural fact the theory guarantees failed to hold."""


class CrystalGraph:
    """Finite crystal graph: ordered vertices plus i-labeled lowering edges."""

    __slots__ = ("rank", "vertices", "index", "edges")

    def __init__(self, rank: int, vertices: Sequence, edges: Sequence[tuple[int, int, int]]):
        self.rank = rank
        self.vertices = tuple(vertices)
        self.index = {v: k for k, v in enumerate(self.vertices)}
        self.edges = tuple(edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_labels(self) -> tuple[int, ...]:
        return tuple(i for _, i, _ in self.edges)

    def __repr__(self) -> str:
        return f"<CrystalGraph {len(self.vertices)} vertices, {len(self.edges)} edges>"


def generate_closure(seeds: Iterable, budget: int | None = None) -> CrystalGraph:
    """Smallest set containing the seeds and closed under all e(i), f(i).

    Vertex order is the breadth-first discovery order from the sorted seeds;
    edges are exactly the graph of the lowering operators on the closure.
    """
    seed_list = sorted(set(seeds), key=lambda v: v.sort_key())
    if not seed_list:
        raise ValueError("generate_closure requires at least one seed")
    if budget is None:
        budget = DEFAULT_VERTEX_BUDGET
    rank = seed_list[0].rank
    if any(s.rank != rank for s in seed_list):
        raise ValueError("all closure seeds must share one rank")
    index: dict = {}
    order: list = []
    queue = deque()

    def add(v):
        if len(order) >= budget:
            raise VertexBudgetExceeded(f"vertex budget {budget} exceeded")
        index[v] = len(order)
        order.append(v)
        queue.append(v)

    for s in seed_list:
        if s not in index:
            add(s)
    edges: list[tuple[int, int, int]] = []
    while queue:
        v = queue.popleft()
        vi = index[v]
        for i in range(1, rank + 1):
            up = v.e(i)
            if up is not None and up not in index:
                add(up)
            down = v.f(i)
            if down is not None:
                if down not in index:
                    add(down)
                edges.append((vi, i, index[down]))
    return CrystalGraph(rank, order, edges)


def is_closed(elements: Iterable) -> bool:
    """True when every operator image of every element stays inside the set."""
    elems = set(elements)
    for v in elems:
        for i in range(1, v.rank + 1):
            up = v.e(i)
            if up is not None and up not in elems:
                return False
            down = v.f(i)
            if down is not None and down not in elems:
                return False
    return True


class Component:
    """One irreducible constituent: dominant weight, size, highest-weight witness."""

    __slots__ = ("weight", "size", "witness")

    def __init__(self, weight, size: int, witness):
        self.weight = weight
        self.size = size
        self.witness = witness

    def __repr__(self) -> str:
        return f"Component({self.weight}, size={self.size}, hw={self.witness})"


class Decomposition:
    """Multiset of irreducible components; comparisons ignore the witnesses."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Component]):
        self.components = tuple(
            sorted(components, key=lambda c: (c.weight.coeffs, c.size))
        )

    @property
    def total_size(self) -> int:
        return sum(c.size for c in self.components)

    def weights(self) -> tuple:
        return tuple(c.weight for c in self.components)

    def weight_multiset(self) -> Counter:
        return Counter(c.weight.coeffs for c in self.components)

    def size_multiset(self) -> Counter:
        return Counter(c.size for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return [(c.weight.coeffs, c.size) for c in self.components] == [
            (c.weight.coeffs, c.size) for c in other.components
        ]

    def __hash__(self) -> int:
        return hash(tuple((c.weight.coeffs, c.size) for c in self.components))

    def __repr__(self) -> str:
        inner = " + ".join(f"B({c.weight})x{c.size}" for c in self.components)
        return f"<Decomposition {inner or '(empty)'}>"


def decompose_set(elements: Iterable, check_closed: bool = True) -> Decomposition:
    """Split a finite closed set into connected components.

    Every component of a closed set of semi-normal elements contains exactly
    one highest-weight element (all eps_i = 0), which labels it by a dominant
    weight; the components must partition the set, and any failure of that is
    an error rather than a result.
    """
    elems = set(elements)
    if not elems:
        return Decomposition(())
    if check_closed and not is_closed(elems):
        raise ValueError("decompose_set requires a set closed under e and f")
    rank = next(iter(elems)).rank
    highest = sorted(
        (v for v in elems if all(v.epsilon(i) == 0 for i in range(1, rank + 1))),
        key=lambda v: v.sort_key(),
    )
    seen: set = set()
    comps = []
    for h in highest:
        graph = generate_closure([h])
        members = set(graph.vertices)
        if members & seen:
            raise CrystalInvariantError("components are not pairwise disjoint")
        if not members <= elems:
            raise CrystalInvariantError("component escapes the ambient closed set")
        seen |= members
        weight = h.weight()
        if not weight.is_dominant():
            raise CrystalInvariantError(f"highest weight {weight} is not dominant")
        comps.append(Component(weight, len(members), h))
    if seen != elems:
        raise CrystalInvariantError(
            f"components cover {len(seen)} of {len(elems)} elements"
        )
    return Decomposition(comps)


class TensorPair:
    """Ordered pair u (x) v with the standard tensor-product crystal structure."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left, right):
        if left is None or right is None:
            raise ValueError("tensor factors must be elements, not None")
        if left.rank != right.rank:
            raise ValueError("tensor factors must share a rank")
        self.left = left
        self.right = right
        self._hash = hash((TensorPair, left, right))

    @property
    def rank(self) -> int:
        return self.left.rank

    def weight(self):
        return self.left.weight() + self.right.weight()

    def epsilon(self, i: int) -> int:
        return max(
            self.left.epsilon(i),
            self.right.epsilon(i) - self.left.weight().pairing(i),
        )

    def phi(self, i: int) -> int:
        return max(
            self.right.phi(i),
            self.left.phi(i) + self.right.weight().pairing(i),
        )

    def e(self, i: int) -> "TensorPair | None":
        if self.left.phi(i) >= self.right.epsilon(i):
            up = self.left.e(i)
            return None if up is None else TensorPair(up, self.right)
        up = self.right.e(i)
        return None if up is None else TensorPair(self.left, up)

    def f(self, i: int) -> "TensorPair | None":
        if self.left.phi(i) > self.right.epsilon(i):
            down = self.left.f(i)
            return None if down is None else TensorPair(down, self.right)
        down = self.right.f(i)
        return None if down is None else TensorPair(self.left, down)

    def sort_key(self):
        return (self.left.sort_key(), self.right.sort_key())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorPair)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "TensorPair") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.left}(x){self.right}"

    def __repr__(self) -> str:
        return f"TensorPair({self.left!r}, {self.right!r})"


def to_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for k, v in enumerate(graph.vertices):
        label = str(v).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{k} [label="{label}"];')
    for src, i, dst in graph.edges:
        lines.append(f'  n{src} -> n{dst} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: CrystalGraph) -> str:
    doc = {
        "vertices": [str(v) for v in graph.vertices],
        "edges": [[src, i, dst] for src, i, dst in graph.edges],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def export(graph: CrystalGraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "json":
        return to_json(graph)
    raise ValueError(f"unknown export format {fmt!r}")
