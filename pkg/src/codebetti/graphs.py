"""Relationship graphs, chordality testing, and simplicial elimination orderings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .codes import indices_of
from .polarization import SquarefreeIdeal


class NotSimplicialError(ValueError):
    """An ordering stopped being simplicial; the message names the failing step."""


class GraphParseError(ValueError):
    """Raised for malformed graph files."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n; edges are (i, j) pairs with i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad edge ({i},{j}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        norm = set()
        for a, b in pairs:
            if a == b:
                raise ValueError("self-loops are not allowed")
            norm.add((min(a, b), max(a, b)))
        return cls(n, frozenset(norm))

    def adjacency(self) -> list[int]:
        """Neighbor mask per vertex (index 0 unused); bit i-1 stands for vertex i."""
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= 1 << (j - 1)
            adj[j] |= 1 << (i - 1)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def complement(self) -> "Graph":
        missing = [(i, j) for i, j in combinations(range(1, self.n + 1), 2)
                   if (i, j) not in self.edges]
        return Graph(self.n, frozenset(missing))


@dataclass(frozen=True)
class EliminationOrdering:
    """Removal order plus the residual degree of each vertex when it was removed."""

    order: tuple[int, ...]
    degrees: tuple[int, ...]

    def profile(self) -> tuple[int, ...]:
        """Multiset of simplicial degrees, as a sorted tuple."""
        return tuple(sorted(self.degrees))


def _is_clique(mask: int, adj: list[int]) -> bool:
    m = mask
    while m:
        b = m & -m
        v = b.bit_length()
        if mask & ~adj[v] & ~b:
            return False
        m ^= b
    return True


def _removal_degrees(g: Graph, order) -> tuple[int, ...]:
    adj = g.adjacency()
    remaining = (1 << g.n) - 1
    degs = []
    for t, v in enumerate(order, start=1):
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range")
        bit = 1 << (v - 1)
        if not remaining & bit:
            raise ValueError(f"vertex {v} repeated at step {t}")
        nb = adj[v] & remaining & ~bit
        if not _is_clique(nb, adj):
            raise NotSimplicialError(f"vertex {v} is not simplicial at step {t}")
        degs.append(nb.bit_count())
        remaining ^= bit
    if remaining:
        raise ValueError("ordering does not cover every vertex")
    return tuple(degs)


def simplicial_degree_profile(g: Graph, order) -> tuple[int, ...]:
    """Multiset of residual degrees along a removal order; raises NotSimplicialError otherwise."""
    if isinstance(order, EliminationOrdering):
        order = order.order
    return tuple(sorted(_removal_degrees(g, order)))


def _mcs_order(g: Graph) -> tuple[int, ...]:
    # Maximum-cardinality search; the reverse visit order is a candidate
    # elimination ordering (guaranteed valid exactly when g is chordal).
    adj = g.adjacency()
    visited = 0
    weights = [0] * (g.n + 1)
    visit = []
    for _ in range(g.n):
        best = 0
        best_w = -1
        for v in range(1, g.n + 1):
            if visited >> (v - 1) & 1:
                continue
            if weights[v] > best_w:
                best, best_w = v, weights[v]
        visit.append(best)
        visited |= 1 << (best - 1)
        nb = adj[best] & ~visited
        while nb:
            b = nb & -nb
            weights[b.bit_length()] += 1
            nb ^= b
    return tuple(reversed(visit))


def chordality(g: Graph) -> EliminationOrdering | None:
    """A simplicial elimination ordering if g is chordal, else None.

    MCS proposes the ordering and an explicit clique verification pass
    decides, so correctness does not rest on MCS subtleties.
    """
    order = _mcs_order(g)
    try:
        degs = _removal_degrees(g, order)
    except NotSimplicialError:
        return None
    return EliminationOrdering(order, degs)


def chordless_cycle_witness(g: Graph) -> tuple[int, ...] | None:
    """Some chordless cycle of length >= 4, or None when not cheaply found."""
    order = _mcs_order(g)
    adj = g.adjacency()
    remaining = (1 << g.n) - 1
    for v in order:
        bit = 1 << (v - 1)
        nb = adj[v] & remaining & ~bit
        m = nb
        while m:
            b = m & -m
            u = b.bit_length()
            missing = nb & ~adj[u] & ~b
            if missing:
                w = (missing & -missing).bit_length()
                cycle = _cycle_through(g, adj, v, u, w)
                if cycle:
                    return cycle
            m ^= b
        remaining ^= bit
    return None


def _cycle_through(g: Graph, adj: list[int], v: int, u: int, w: int) -> tuple[int, ...] | None:
    # u, w are non-adjacent neighbors of v; a shortest u-w path avoiding the
    # rest of N[v] is induced, and closing it through v gives a chordless cycle.
    allowed = ((1 << g.n) - 1) & ~(adj[v] | (1 << (v - 1)))
    allowed |= (1 << (u - 1)) | (1 << (w - 1))
    prev = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == w:
            path = []
            node = w
            while node is not None:
                path.append(node)
                node = prev[node]
            return (v, *reversed(path))
        nb = adj[a] & allowed
        while nb:
            b = nb & -nb
            c = b.bit_length()
            if c not in prev:
                prev[c] = a
                queue.append(c)
            nb ^= b
    return None


def all_elimination_orderings(g: Graph, max_n: int = 9):
    """Every simplicial elimination ordering, by backtracking over simplicial vertices."""
    if g.n > max_n:
        raise ValueError(f"n={g.n} exceeds the enumeration guard of {max_n}")
    adj = g.adjacency()

    def rec(remaining: int, order: list[int], degs: list[int]):
        if not remaining:
            yield EliminationOrdering(tuple(order), tuple(degs))
            return
        m = remaining
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length()
            nb = adj[v] & remaining & ~b
            if _is_clique(nb, adj):
                order.append(v)
                degs.append(nb.bit_count())
                yield from rec(remaining ^ b, order, degs)
                order.pop()
                degs.pop()

    yield from rec((1 << g.n) - 1, [], [])


def relationship_graph(ideal: SquarefreeIdeal) -> Graph:
    """Edge {i,j} unless a generator x_i*x_j, x_i*y_j or x_j*y_i forbids it.

    Defined for quadratically generated ideals only.
    """
    forbidden = set()
    for g in ideal.gens:
        if g.degree != 2:
            raise ValueError(f"generator {g.render()} is not quadratic")
        xs = indices_of(g.xsupp)
        ys = indices_of(g.ysupp)
        if len(xs) == 2:
            forbidden.add(xs)
        elif len(xs) == 1 and len(ys) == 1:
            i, j = xs[0], ys[0]
            forbidden.add((min(i, j), max(i, j)))
        # a pure y_i*y_j generator never forbids an edge
    edges = frozenset(p for p in combinations(range(1, ideal.n + 1), 2) if p not in forbidden)
    return Graph(ideal.n, edges)


def parse_graph(text: str) -> Graph:
    """Read an edge-list file: lines "i-j", "#" comments, optional "n=<int>" header."""
    declared = None
    pairs = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if pairs or declared is not None:
                raise GraphParseError(f"line {lineno}: n= header must come first")
            try:
                declared = int(line[2:])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad header {line!r}") from None
            continue
        left, sep, right = line.partition("-")
        if not sep:
            raise GraphParseError(f"line {lineno}: expected i-j, got {line!r}")
        try:
            a, b = int(left), int(right)
        except ValueError:
            raise GraphParseError(f"line {lineno}: bad edge {line!r}") from None
        if a <= 0 or b <= 0 or a == b:
            raise GraphParseError(f"line {lineno}: bad edge {line!r}")
        pairs.append((a, b))
        top = max(top, a, b)
    n = top if declared is None else declared
    if top > n:
        raise GraphParseError(f"vertex {top} exceeds declared n={n}")
    return Graph.from_edges(n, pairs)


def render_graph(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{i}-{j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def render_dot(g: Graph) -> str:
    lines = ["graph G {"]
    isolated = set(range(1, g.n + 1))
    for i, j in sorted(g.edges):
        isolated.discard(i)
        isolated.discard(j)
        lines.append(f"  {i} -- {j};")
    for v in sorted(isolated):
        lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
