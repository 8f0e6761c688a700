"""Greedy category-based routing: single-message traces and all-pairs verification.

A message at ``u`` bound for ``t`` may be forwarded to any neighbor strictly
closer in categorical distance. Routing "works" on ``(g, s)`` when every
vertex other than the target has such a neighbor, for every target; since the
distance is a non-negative integer that strictly decreases along any greedy
path, that universal condition makes delivery independent of how ties are
broken.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .categories import CategorySystem, _require_same_universe
from .errors import DisconnectedGraphError
from .graph import Graph, bfs_distances

#: Deterministic default: the strictly-closer neighbor with minimal distance,
#: ties to the lowest id.
CLOSEST = "closest"
#: Stress policy: the strictly-closer neighbor with maximal distance, ties to
#: the highest id. Used to confirm greedy choice does not matter.
ADVERSARIAL = "adversarial"

STUCK_NO_CLOSER = "no strictly closer neighbor"
STUCK_INDISTINGUISHABLE = "indistinguishable from target"


@dataclass(frozen=True)
class RouteResult:
    """Trace of one greedy routing attempt."""

    source: int
    target: int
    path: tuple[int, ...]
    distances: tuple[int, ...]
    delivered: bool
    stuck_at: Optional[int] = None
    stuck_reason: Optional[str] = None

    def hops(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class VerificationReport:
    """All-pairs routing outcome plus route statistics.

    ``works`` is the universal no-dead-end condition; ``first_failure`` is
    the lexicographically smallest ordered pair with no strictly-closer
    neighbor. Statistics cover delivered routes under the default tie-break:
    ``max_stretch`` compares route length to the shortest path.
    """

    works: bool
    first_failure: Optional[tuple[int, int]]
    pairs_checked: int
    max_route_len: int
    mean_route_len: float
    max_stretch: float


def _pick(candidates: list[tuple[int, int]], tie_break: str) -> int:
    # candidates: (distance, vertex) pairs of strictly closer neighbors
    if tie_break == CLOSEST:
        return min(candidates)[1]
    if tie_break == ADVERSARIAL:
        return max(candidates)[1]
    raise ValueError(f"unknown tie-break policy {tie_break!r}")


def greedy_step(
    g: Graph, s: CategorySystem, u: int, t: int, tie_break: str = CLOSEST
) -> Optional[int]:
    """Next hop from ``u`` toward ``t``, or None when no neighbor is closer."""
    _require_same_universe(g, s)
    if u == t:
        raise ValueError("greedy_step requires u != t")
    du = s.cat_distance(u, t)
    candidates = [
        (dv, v)
        for v in g.adjacency[u]
        if (dv := s.cat_distance(v, t)) < du
    ]
    if not candidates:
        return None
    return _pick(candidates, tie_break)


def route(
    g: Graph, s: CategorySystem, src: int, t: int, tie_break: str = CLOSEST
) -> RouteResult:
    """Run greedy forwarding from ``src`` to ``t`` until delivery or a dead end.

    Terminates within ``cat_distance(src, t)`` steps: the distance strictly
    decreases at every hop and never goes below zero. A dead end is reported
    as an outcome, not an error.
    """
    _require_same_universe(g, s)
    path = [src]
    dists = [s.cat_distance(src, t)]
    u = src
    while u != t:
        nxt = greedy_step(g, s, u, t, tie_break)
        if nxt is None:
            reason = (
                STUCK_INDISTINGUISHABLE if dists[-1] == 0 else STUCK_NO_CLOSER
            )
            return RouteResult(
                src, t, tuple(path), tuple(dists), False, stuck_at=u, stuck_reason=reason
            )
        dn = s.cat_distance(nxt, t)
        assert dn < dists[-1], "greedy step must strictly decrease the distance"
        path.append(nxt)
        dists.append(dn)
        u = nxt
    return RouteResult(src, t, tuple(path), tuple(dists), True)


def verify_all_pairs(
    g: Graph, s: CategorySystem, tie_break: str = CLOSEST
) -> VerificationReport:
    """Check the universal routing condition and collect route statistics.

    ``works`` requires every ordered pair ``(u, t)``, ``u != t``, to have a
    strictly-closer neighbor at ``u``; this is exactly tie-break-independent
    guaranteed delivery. Routes are additionally simulated for every pair
    under the given policy to fill the statistics (dead-end pairs are skipped
    there; they can exist only when ``works`` is already false).
    """
    _require_same_universe(g, s)
    n = g.n
    failures: list[tuple[int, int]] = []
    max_len = 0
    total_len = 0
    delivered = 0
    max_stretch = 0.0
    adjacency = g.adjacency
    for t in range(n):
        sp = bfs_distances(g, t)
        if any(d is None for d in sp):
            raise DisconnectedGraphError("verify_all_pairs requires a connected graph")
        tmask = s.vertex_mask(t)
        dcol = [(tmask & ~s.vertex_mask(u)).bit_count() for u in range(n)]
        for u in range(n):
            if u == t:
                continue
            du = dcol[u]
            if all(dcol[v] >= du for v in adjacency[u]):
                failures.append((u, t))
        for src in range(n):
            if src == t:
                continue
            u = src
            hops = 0
            while u != t:
                du = dcol[u]
                candidates = [(dcol[v], v) for v in adjacency[u] if dcol[v] < du]
                if not candidates:
                    hops = -1
                    break
                u = _pick(candidates, tie_break)
                hops += 1
            if hops < 0:
                continue
            delivered += 1
            total_len += hops
            if hops > max_len:
                max_len = hops
            stretch = hops / sp[src]
            if stretch > max_stretch:
                max_stretch = stretch
    return VerificationReport(
        works=not failures,
        first_failure=min(failures) if failures else None,
        pairs_checked=n * (n - 1),
        max_route_len=max_len,
        mean_route_len=(total_len / delivered) if delivered else 0.0,
        max_stretch=max_stretch,
    )
