"""Immutable weighted digraphs and their inbound-mass decompositions.

Vertices are dense integer ids 0..n-1.  Edge weights are positive
integers; absent pairs mean weight 0, and weight-0 insertions are
dropped so that in-degree is well defined.  Self-loops are allowed and
count in every inbound sum.

A graph may designate a *hub* vertex.  The hub's contribution to a
node's inbound mass is split out as ``hub_weight``; everything else is
``rest_weight``.  Generator base families carry no hub (``hub=None``),
in which case every vertex is "non-hub" and rest weight equals total
inbound weight.

The module also owns the graph text format::

    # comment
    hh v1 <n> <hub>
    t <v> <tau>
    e <u> <v> <w>

Tokens are whitespace separated, ``#`` starts a comment, edge weights
are >= 1.  ``format_graph_text`` emits a canonical form that parses
back to an identical graph and tolerance map.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping

import numpy as np

FORMAT_HEADER = "hh v1"


class GraphFormatError(ValueError):
    """Parse failure in the graph text format, with the offending line."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Tolerance:
    """Per-vertex nonnegative integer slack; unset vertices default to 0."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[int, int] | None = None) -> None:
        vals: dict[int, int] = {}
        for v, t in (values or {}).items():
            if v < 0:
                raise ValueError(f"tolerance vertex {v} is negative")
            if t < 0:
                raise ValueError(f"tolerance for vertex {v} is negative")
            if t:
                vals[v] = t
        self._values = vals

    @classmethod
    def uniform(cls, tau: int, n: int) -> "Tolerance":
        return cls({v: tau for v in range(n)})

    def __getitem__(self, v: int) -> int:
        return self._values.get(v, 0)

    def items(self) -> list[tuple[int, int]]:
        """Nonzero entries, sorted by vertex."""
        return sorted(self._values.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tolerance):
            return NotImplemented
        return self._values == other._values

    def __repr__(self) -> str:
        return f"Tolerance({self._values!r})"


ZERO_TOLERANCE = Tolerance()


class WeightedDigraph:
    """Finite weighted digraph with an optional designated hub.

    Immutable after construction; safe to share across threads.
    Duplicate edges passed to the constructor accumulate their weights.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, int]] = (),
        hub: int | None = None,
    ) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if hub is not None and not 0 <= hub < n:
            raise ValueError(f"hub {hub} out of range for n={n}")
        weights: dict[tuple[int, int], int] = {}
        for u, v, w in edges:
            if not 0 <= u < n or not 0 <= v < n:
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if w < 0:
                raise ValueError(f"edge ({u},{v}) has negative weight {w}")
            if w == 0:
                continue
            weights[(u, v)] = weights.get((u, v), 0) + w
        self.n = n
        self.hub = hub
        self._w = weights
        in_lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), w in sorted(weights.items()):
            in_lists[v].append((u, w))
        self._in = [tuple(lst) for lst in in_lists]
        self._total_in = [sum(w for _, w in lst) for lst in self._in]
        self._matrix: np.ndarray | None = None

    # ---- basic queries ----------------------------------------------------

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def weight(self, u: int, v: int) -> int:
        """w(u, v); 0 for absent pairs."""
        self.check_vertex(u)
        self.check_vertex(v)
        return self._w.get((u, v), 0)

    def in_edges(self, v: int) -> tuple[tuple[int, int], ...]:
        """Inbound (source, weight) pairs of v, source-sorted."""
        self.check_vertex(v)
        return self._in[v]

    def edges(self) -> list[tuple[int, int, int]]:
        """All (u, v, w) triples, sorted by (u, v)."""
        return [(u, v, w) for (u, v), w in sorted(self._w.items())]

    @property
    def num_edges(self) -> int:
        return len(self._w)

    # ---- inbound-mass decompositions --------------------------------------

    def total_in(self, v: int) -> int:
        """Total inbound weight to v, hub and self-loop included."""
        self.check_vertex(v)
        return self._total_in[v]

    def hub_weight(self, v: int) -> int:
        """Inbound weight to v from the hub; 0 when the graph is hubless."""
        self.check_vertex(v)
        if self.hub is None:
            return 0
        return self._w.get((self.hub, v), 0)

    def rest_weight(self, v: int) -> int:
        """Inbound weight to v from every non-hub source."""
        self.check_vertex(v)
        return sum(w for u, w in self._in[v] if u != self.hub)

    def seed_masses(self, seeds: Iterable[int], v: int) -> tuple[int, int]:
        """Split v's inbound mass by membership of the source in the seed set.

        Returns (mass from inside the seed set, mass from outside it).
        """
        members = validate_seeds(self, seeds)
        self.check_vertex(v)
        inside = outside = 0
        for u, w in self._in[v]:
            if u in members:
                inside += w
            else:
                outside += w
        return inside, outside

    def nonhub_indeg_and_maxin(self, v: int) -> tuple[int, int]:
        """Count of non-hub in-neighbours of v and their max edge weight.

        Returns (0, 0) for a vertex with no non-hub in-edges.
        """
        self.check_vertex(v)
        indeg = 0
        max_in = 0
        for u, w in self._in[v]:
            if u == self.hub:
                continue
            indeg += 1
            if w > max_in:
                max_in = w
        return indeg, max_in

    # ---- misc --------------------------------------------------------------

    def weight_matrix(self) -> np.ndarray:
        """Dense n x n int64 matrix M with M[u, v] = w(u, v); cached."""
        if self._matrix is None:
            m = np.zeros((self.n, self.n), dtype=np.int64)
            for (u, v), w in self._w.items():
                m[u, v] = w
            self._matrix = m
        return self._matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.n == other.n and self.hub == other.hub and self._w == other._w

    def __repr__(self) -> str:
        return (
            f"WeightedDigraph(n={self.n}, edges={self.num_edges}, hub={self.hub})"
        )


def validate_seeds(G: WeightedDigraph, seeds: Iterable[int]) -> frozenset[int]:
    """Normalize a seed set: nonempty, every member a vertex of G."""
    members = frozenset(seeds)
    if not members:
        raise ValueError("seed set must be nonempty")
    for v in members:
        if not 0 <= v < G.n:
            raise ValueError(f"seed vertex {v} out of range for n={G.n}")
    return members


# ---- text format ------------------------------------------------------------


def parse_graph_text(text: str) -> tuple[WeightedDigraph, Tolerance]:
    """Parse the graph text format into a graph and its tolerance map."""
    n = hub = None
    edges: list[tuple[int, int, int]] = []
    taus: dict[int, int] = {}

    def ints(lineno: int, toks: list[str], what: str) -> list[int]:
        try:
            return [int(t) for t in toks]
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer field in {what} line") from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 4 or toks[0] != "hh" or toks[1] != "v1":
                raise GraphFormatError(lineno, f"expected header '{FORMAT_HEADER} <n> <hub>'")
            n, hub = ints(lineno, toks[2:], "header")
            if n < 1:
                raise GraphFormatError(lineno, f"vertex count {n} must be >= 1")
            if not 0 <= hub < n:
                raise GraphFormatError(lineno, f"hub {hub} out of range for n={n}")
        elif toks[0] == "t":
            if len(toks) != 3:
                raise GraphFormatError(lineno, "expected 't <v> <tau>'")
            v, tau = ints(lineno, toks[1:], "tolerance")
            if not 0 <= v < n:
                raise GraphFormatError(lineno, f"vertex {v} out of range for n={n}")
            if tau < 0:
                raise GraphFormatError(lineno, f"tolerance {tau} must be >= 0")
            if v in taus:
                raise GraphFormatError(lineno, f"duplicate tolerance for vertex {v}")
            taus[v] = tau
        elif toks[0] == "e":
            if len(toks) != 4:
                raise GraphFormatError(lineno, "expected 'e <u> <v> <w>'")
            u, v, w = ints(lineno, toks[1:], "edge")
            if not 0 <= u < n or not 0 <= v < n:
                raise GraphFormatError(lineno, f"edge ({u},{v}) out of range for n={n}")
            if w < 1:
                raise GraphFormatError(lineno, f"edge weight {w} must be >= 1")
            edges.append((u, v, w))
        else:
            raise GraphFormatError(lineno, f"unknown line kind {toks[0]!r}")

    if n is None:
        raise GraphFormatError(1, "empty input, missing header")
    return WeightedDigraph(n, edges, hub=hub), Tolerance(taus)


def format_graph_text(G: WeightedDigraph, tau: Tolerance | None = None) -> str:
    """Serialize to the canonical text form (sorted lines, no comments)."""
    if G.hub is None:
        raise ValueError("text format requires a designated hub")
    lines = [f"{FORMAT_HEADER} {G.n} {G.hub}"]
    if tau is not None:
        for v, t in tau.items():
            if v < G.n:
                lines.append(f"t {v} {t}")
    for u, v, w in G.edges():
        lines.append(f"e {u} {v} {w}")
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> tuple[WeightedDigraph, Tolerance]:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def save_graph(path: str, G: WeightedDigraph, tau: Tolerance | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph_text(G, tau))
