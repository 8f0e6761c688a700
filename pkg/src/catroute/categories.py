"""Category systems: families of vertex subsets with a membership index.

A category system is a deduplicated family of non-empty vertex sets over the
universe ``0..n-1``. The membership dimension is the largest number of
categories any single vertex belongs to; the categorical distance from ``u``
to ``t`` counts the categories of ``t`` that ``u`` lacks (it is not
symmetric).
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import Iterable, NamedTuple, Optional

from .errors import IdMismatchError
from .graph import Graph


class CategorySystem:
    """Immutable family of vertex sets plus an inverted membership index.

    Categories are stored as sorted tuples in lexicographic order; equal sets
    are merged and empty ones dropped (with a warning), so the family behaves
    as a set of subsets.
    """

    __slots__ = ("n", "categories", "member_index", "_vertex_masks", "_category_masks")

    def __init__(self, n: int, sets: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("universe size must be non-negative")
        dropped = 0
        canon = set()
        for c in sets:
            tup = tuple(c)
            if not (
                all(type(x) is int for x in tup)
                and all(a < b for a, b in zip(tup, tup[1:]))
            ):
                tup = tuple(sorted(set(int(x) for x in tup)))
            if not tup:
                dropped += 1
                continue
            if tup[0] < 0 or tup[-1] >= n:
                raise IdMismatchError(
                    f"category {tup} references ids outside [0,{n})"
                )
            canon.add(tup)
        if dropped:
            warnings.warn(
                f"dropped {dropped} empty categor{'y' if dropped == 1 else 'ies'}",
                stacklevel=2,
            )
        categories = tuple(sorted(canon))
        index: list[list[int]] = [[] for _ in range(n)]
        for ci, c in enumerate(categories):
            for v in c:
                index[v].append(ci)
        self.n = n
        self.categories = categories
        self.member_index = tuple(tuple(r) for r in index)
        self._vertex_masks = None  # built lazily; queries recompute nothing else
        self._category_masks = None

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "CategorySystem":
        return cls(n, sets)

    def __len__(self) -> int:
        return len(self.categories)

    def cat(self, u: int) -> tuple[int, ...]:
        """Indices of the categories containing ``u``."""
        return self.member_index[u]

    def memdim(self) -> int:
        """Maximum number of categories any vertex belongs to (0 if none)."""
        if self.n == 0:
            return 0
        return max(len(r) for r in self.member_index)

    def _masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        # deterministic memo; concurrent first calls just redo the same work
        if self._vertex_masks is None:
            vmask = [0] * self.n
            cmask = []
            for ci, c in enumerate(self.categories):
                bit = 1 << ci
                mask = 0
                for v in c:
                    vmask[v] |= bit
                    mask |= 1 << v
                cmask.append(mask)
            self._vertex_masks = tuple(vmask)
            self._category_masks = tuple(cmask)
        return self._vertex_masks, self._category_masks

    def cat_distance(self, u: int, t: int) -> int:
        """Number of categories containing ``t`` but not ``u``."""
        vm, _ = self._masks()
        return (vm[t] & ~vm[u]).bit_count()

    def vertex_mask(self, u: int) -> int:
        """Bitmask over category indices containing ``u`` (internal fast path)."""
        return self._masks()[0][u]

    def category_mask(self, ci: int) -> int:
        """Bitmask over vertex ids of category ``ci`` (internal fast path)."""
        return self._masks()[1][ci]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CategorySystem)
            and self.n == other.n
            and self.categories == other.categories
        )

    def __hash__(self) -> int:
        return hash((self.n, self.categories))

    def __repr__(self) -> str:
        return f"CategorySystem(n={self.n}, categories={len(self.categories)}, memdim={self.memdim()})"


class ConnectivityCheck(NamedTuple):
    ok: bool
    violation: Optional[int]  # lowest index of a category inducing a disconnected subgraph


class ShatterCheck(NamedTuple):
    ok: bool
    violation: Optional[tuple[int, int]]  # lexicographically smallest bad ordered pair


def _require_same_universe(g: Graph, s: CategorySystem) -> None:
    if g.n != s.n:
        raise IdMismatchError(
            f"graph has {g.n} vertices but category system is over {s.n}"
        )


def is_internally_connected(g: Graph, s: CategorySystem) -> ConnectivityCheck:
    """Check that every category induces a connected subgraph of ``g``.

    Reports the lowest-index violating category on failure.
    """
    _require_same_universe(g, s)
    for ci, c in enumerate(s.categories):
        members = set(c)
        seen = {c[0]}
        q = deque([c[0]])
        while q:
            u = q.popleft()
            for v in g.adjacency[u]:
                if v in members and v not in seen:
                    seen.add(v)
                    q.append(v)
        if len(seen) != len(members):
            return ConnectivityCheck(False, ci)
    return ConnectivityCheck(True, None)


def is_shattered(g: Graph, s: CategorySystem) -> ShatterCheck:
    """Check the witness property behind greedy routing.

    For every ordered pair ``(s0, t)`` with ``s0 != t`` there must be a
    neighbor ``u`` of ``s0`` and a category containing both ``u`` and ``t``
    but not ``s0`` (``u`` may equal ``t``). Returns the lexicographically
    smallest violating pair on failure.

    Runs in O(n * total category size): for each category ``C`` the vertices
    with a neighbor inside ``C`` are collected once as a bitmask, and each
    target's categories are combined by mask arithmetic.
    """
    _require_same_universe(g, s)
    n = g.n
    if n <= 1:
        return ShatterCheck(True, None)
    nbr_mask = [0] * n
    for u in range(n):
        acc = 0
        for v in g.adjacency[u]:
            acc |= 1 << v
        nbr_mask[u] = acc
    # reach[ci]: vertices having at least one neighbor inside category ci
    reach = []
    for c in s.categories:
        acc = 0
        for v in c:
            acc |= nbr_mask[v]
        reach.append(acc)
    # ok_mask[t]: sources s0 for which some category of t supplies a witness
    ok_mask = [0] * n
    for t in range(n):
        acc = 0
        for ci in s.member_index[t]:
            acc |= reach[ci] & ~s.category_mask(ci)
        ok_mask[t] = acc
    for s0 in range(n):
        bit = 1 << s0
        for t in range(n):
            if s0 != t and not (ok_mask[t] & bit):
                return ShatterCheck(False, (s0, t))
    return ShatterCheck(True, None)
