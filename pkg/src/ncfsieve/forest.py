"""Chord-diagram model of non-crossing forests.

Vertices are labelled 1..n clockwise around a circle; vertex 1 is the base
vertex. An edge is a chord {u, v}, stored normalized as (u, v) with u < v,
and edge lists are kept sorted lexicographically. A forest is a set of
pairwise non-crossing chords that is acyclic as a graph on {1..n}.

Rotation always means the clockwise step i -> (i mod n) + 1, so rotating by
s steps sends label i to ((i - 1 + s) mod n) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

BASE_VERTEX = 1

Chord = tuple[int, int]


def chord(u: int, v: int) -> Chord:
    """Normalize an edge to (min, max) form. Loops are rejected."""
    if u == v:
        raise ValueError(f"degenerate chord ({u}, {v})")
    return (u, v) if u < v else (v, u)


def check_vertex(x: int, n: int) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= n:
        raise ValueError(f"vertex {x!r} out of range 1..{n}")


def crosses(e1: Chord, e2: Chord, n: int) -> bool:
    """Whether two chords cross, i.e. their endpoints strictly interleave
    around the circle.

    Chords sharing an endpoint never cross. Examples on n = 4: (1,3) and
    (2,4) cross; (1,2) and (3,4) do not; (1,3) and (3,5) on n = 5 do not.
    """
    a, b = chord(*e1)
    c, d = chord(*e2)
    for x in (a, b, c, d):
        check_vertex(x, n)
    if a in (c, d) or b in (c, d):
        return False
    # a < b, so "strictly between a and b clockwise" is the open interval
    # (a, b) in the usual integer order; exactly one endpoint inside means
    # the chords interleave.
    return (a < c < b) != (a < d < b)


def distance(u: int, v: int, n: int) -> int:
    """Number of vertices passed walking clockwise from u to v, endpoints
    included: the unique value in {1..n} congruent to v - u + 1 mod n.

    distance(1, 1, 5) == 1, distance(1, 2, 5) == 2, distance(4, 2, 5) == 4.
    """
    check_vertex(u, n)
    check_vertex(v, n)
    return (v - u) % n + 1


def rotate_label(x: int, s: int, n: int) -> int:
    """Label of vertex x after rotating s clockwise steps."""
    return (x - 1 + s) % n + 1


@dataclass(frozen=True)
class NonCrossingForest:
    """Immutable non-crossing forest: circle size plus sorted chord tuple.

    The constructor normalizes the edge list and enforces every invariant
    (label ranges, no duplicates, pairwise non-crossing, acyclic), so a
    constructed value is always a genuine non-crossing forest.
    """

    n: int
    edges: tuple[Chord, ...]

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"circle size must be a positive integer, got {n!r}")
        norm = sorted(chord(u, v) for (u, v) in edges)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        self._validate()

    @classmethod
    def _unchecked(cls, n: int, edges: tuple[Chord, ...]) -> "NonCrossingForest":
        # Hot path for the enumerator: edges must already be normalized,
        # sorted, and known valid.
        self = cls.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        return self

    def _validate(self) -> None:
        n, edges = self.n, self.edges
        for (u, v) in edges:
            check_vertex(u, n)
            check_vertex(v, n)
        for i in range(1, len(edges)):
            if edges[i - 1] == edges[i]:
                raise ValueError(f"duplicate edge {edges[i]}")
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if crosses(edges[i], edges[j], n):
                    raise ValueError(f"chords {edges[i]} and {edges[j]} cross")
        parent = list(range(n + 1))
        for (u, v) in edges:
            ru, rv = u, v
            while parent[ru] != ru:
                ru = parent[ru]
            while parent[rv] != rv:
                rv = parent[rv]
            if ru == rv:
                raise ValueError(f"edge {(u, v)} closes a cycle")
            parent[ru] = rv

    # -- structure ---------------------------------------------------------

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components as vertex sets, ordered by minimal label."""
        adj: dict[int, list[int]] = {x: [] for x in range(1, self.n + 1)}
        for (u, v) in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        comps = []
        seen: set[int] = set()
        for x in range(1, self.n + 1):
            if x in seen:
                continue
            comp = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for z in adj[y]:
                    if z not in comp:
                        comp.add(z)
                        stack.append(z)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def component_count(self) -> int:
        """Number of connected components (equals n - |edges| for a forest)."""
        return len(self.components())

    def neighbors(self, x: int) -> tuple[int, ...]:
        check_vertex(x, self.n)
        out = [v if u == x else u for (u, v) in self.edges if x in (u, v)]
        return tuple(sorted(out))

    # -- symmetry ----------------------------------------------------------

    def rotate(self, s: int) -> "NonCrossingForest":
        """The forest after s clockwise rotation steps.

        Rotation is a symmetry of the circle, so the result is again a valid
        non-crossing forest; rotate(n) is the identity.
        """
        n = self.n
        s %= n
        if s == 0 or not self.edges:
            return self
        moved = sorted(
            chord(rotate_label(u, s, n), rotate_label(v, s, n))
            for (u, v) in self.edges
        )
        return NonCrossingForest._unchecked(n, tuple(moved))

    def is_d_invariant(self, d: int) -> bool:
        """Whether the forest is fixed by rotation through 1/d of a turn.

        Requires d | n; d = 1 is always true.
        """
        if not isinstance(d, int) or isinstance(d, bool) or d < 1 or self.n % d:
            raise ValueError(f"d = {d!r} must be a positive divisor of n = {self.n}")
        return self.rotate(self.n // d) == self

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        """Canonical JSON form: {"n": n, "edges": [[u, v], ...]} sorted."""
        return {"n": self.n, "edges": [[u, v] for (u, v) in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "NonCrossingForest":
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise ValueError('forest JSON must be {"n": ..., "edges": [[u, v], ...]}')
        edges = obj["edges"]
        if not isinstance(edges, (list, tuple)):
            raise ValueError("edges must be a list of pairs")
        pairs = []
        for e in edges:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise ValueError(f"bad edge entry {e!r}")
            pairs.append((e[0], e[1]))
        return cls(obj["n"], pairs)

    def to_dot(self, name: str = "ncf") -> str:
        """Graphviz DOT source with a circular layout hint."""
        lines = [f"graph {name} {{", "  layout=circo;", "  node [shape=circle];"]
        lines.extend(f"  {x};" for x in range(1, self.n + 1))
        lines.extend(f"  {u} -- {v};" for (u, v) in self.edges)
        lines.append("}")
        return "\n".join(lines)

    def __str__(self) -> str:
        es = ", ".join(f"{u}-{v}" for (u, v) in self.edges)
        return f"forest(n={self.n}; {es})" if es else f"forest(n={self.n}; empty)"
