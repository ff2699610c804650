"""Weighted plumbing graphs.

A plumbing graph here is a finite simple weighted forest: vertices carry
integer surgery weights, edges are unordered pairs, and every connected
component is a tree.  Vertex ids are opaque string tokens; everything that
matters mathematically is invariant under relabeling, but deterministic
output (matrices, file formats, search order) always sorts by id.

Instances are immutable; the calculus moves build new graphs rather than
mutating.  Construction validates all invariants, so any PlumbingGraph in
hand is a genuine simple forest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError

__all__ = ["PlumbingGraph", "VERTEX_ID_RE"]

# Ids must survive the line-oriented file format and DOT export unquoted.
VERTEX_ID_RE = re.compile(r"[A-Za-z0-9_.\-]+\Z")


@dataclass(frozen=True)
class PlumbingGraph:
    """Immutable simple weighted forest.

    ``vertices`` is a tuple of (id, weight) pairs sorted by id; ``edges`` is
    a tuple of (u, v) pairs with u < v, sorted.  Use :meth:`build` rather
    than the raw constructor so the invariants are checked and the tuples
    normalized.
    """

    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...]

    @classmethod
    def build(cls, weights, edges=()) -> "PlumbingGraph":
        """Create a graph from a {id: weight} mapping (or (id, weight)
        pairs) and an iterable of edge pairs.  Raises DomainError unless the
        result is a simple forest with well-formed ids."""
        if hasattr(weights, "items"):
            pairs = list(weights.items())
        else:
            pairs = [(v, w) for v, w in weights]
        weight_map: dict[str, int] = {}
        for v, w in pairs:
            if not isinstance(v, str) or not VERTEX_ID_RE.match(v):
                raise DomainError(f"bad vertex id {v!r}")
            if v in weight_map:
                raise DomainError(f"duplicate vertex id {v!r}")
            weight_map[v] = int(w)

        norm_edges: set[tuple[str, str]] = set()
        parent = {v: v for v in weight_map}  # union-find for the forest check

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            if u not in weight_map or v not in weight_map:
                raise DomainError(f"edge ({u!r}, {v!r}) references a missing vertex")
            if u == v:
                raise DomainError(f"loop edge at {u!r}")
            e = (u, v) if u < v else (v, u)
            if e in norm_edges:
                raise DomainError(f"parallel edge ({u!r}, {v!r})")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise DomainError(f"edge ({u!r}, {v!r}) closes a cycle; graph must be a forest")
            parent[ru] = rv
            norm_edges.add(e)

        return cls(
            vertices=tuple(sorted(weight_map.items())),
            edges=tuple(sorted(norm_edges)),
        )

    # -- accessors ---------------------------------------------------------

    @cached_property
    def _weight_map(self) -> dict[str, int]:
        return dict(self.vertices)

    @cached_property
    def _adjacency(self) -> dict[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {v: [] for v, _ in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def weight(self, v: str) -> int:
        try:
            return self._weight_map[v]
        except KeyError:
            raise DomainError(f"no vertex {v!r}") from None

    def neighbors(self, v: str) -> tuple[str, ...]:
        if v not in self._weight_map:
            raise DomainError(f"no vertex {v!r}")
        return self._adjacency[v]

    def valence(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in set(self.edges)

    def components(self) -> tuple[frozenset[str], ...]:
        """Connected components as vertex-id sets, sorted by smallest id."""
        seen: set[str] = set()
        comps = []
        for v, _ in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(self._adjacency[x])
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(sorted(comps, key=min))

    # -- derivation helpers used by the calculus moves -----------------------

    def replace(self, drop=(), reweight=None, add_edges=()) -> "PlumbingGraph":
        """New graph with ``drop`` vertices removed (with their edges),
        weights updated from the ``reweight`` mapping, and ``add_edges``
        added.  Full invariant validation reruns on the result."""
        drop = set(drop)
        weights = {v: w for v, w in self.vertices if v not in drop}
        for v, w in (reweight or {}).items():
            if v not in weights:
                raise DomainError(f"cannot reweight missing vertex {v!r}")
            weights[v] = w
        edges = [e for e in self.edges if e[0] not in drop and e[1] not in drop]
        edges.extend(add_edges)
        return PlumbingGraph.build(weights, edges)

    def relabeled(self, mapping) -> "PlumbingGraph":
        """Apply an injective id relabeling (used by invariance tests)."""
        weights = {mapping[v]: w for v, w in self.vertices}
        edges = [(mapping[u], mapping[v]) for u, v in self.edges]
        return PlumbingGraph.build(weights, edges)
