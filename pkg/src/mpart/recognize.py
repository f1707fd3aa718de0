"""Graph-class recognition and homogeneous-set analysis."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil  # noqa: F401  (used by callers checking class-size bounds)

from .errors import PartNotUniform, VertexOutOfRange
from .graph import Graph, complement
from .pattern import make_kl_matrix


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class HomogeneityReport:
    part: frozenset[int]
    classes: tuple[tuple[int, ...], ...]
    max_class_size: int


def _is_split_degree_sequence(G: Graph) -> bool:
    # Hammer-Simeone: sum of the h largest degrees equals h(h-1) plus the rest,
    # where h = max{i : d_i >= i-1} over the non-increasing degree sequence.
    d = sorted((G.degree(v) for v in range(G.n)), reverse=True)
    h = 0
    for i, deg in enumerate(d, start=1):
        if deg >= i - 1:
            h = i
    return sum(d[:h]) == h * (h - 1) + sum(d[h:])


def _max_clique_size(G: Graph) -> int:
    adj = G.adj
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        t = cand
        while t:
            if size + t.bit_count() <= best:
                return
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            expand(t & adj[v], size + 1)

    expand((1 << G.n) - 1, 0)
    return best


def _lex_least_split_clique(G: Graph, c: int) -> list[int] | None:
    """Lexicographically least c-clique whose complement is independent."""
    n, adj = G.n, G.adj
    full = (1 << n) - 1
    chosen: list[int] = []

    def rest_independent(cmask: int) -> bool:
        rest = full & ~cmask
        t = rest
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            if adj[v] & rest:
                return False
        return True

    def dfs(start: int, common: int, cmask: int) -> bool:
        if len(chosen) == c:
            return rest_independent(cmask)
        for v in range(start, n - (c - len(chosen)) + 1):
            if chosen and not (common >> v & 1):
                continue
            chosen.append(v)
            if dfs(v + 1, (common & adj[v]) if len(chosen) > 1 else adj[v], cmask | 1 << v):
                return True
            chosen.pop()
        return False

    if dfs(0, full, 0):
        return list(chosen)
    return None


def split_partition(G: Graph) -> SplitPartition | None:
    """A split partition, or None; the clique side is as large as possible
    and lexicographically least among valid cliques of that size."""
    if not _is_split_degree_sequence(G):
        return None
    omega = _max_clique_size(G)
    for c in range(omega, -1, -1):
        clique = _lex_least_split_clique(G, c)
        if clique is not None:
            rest = frozenset(range(G.n)) - set(clique)
            return SplitPartition(frozenset(clique), rest)
    return None  # unreachable for split graphs


def is_bipartite(G: Graph):
    """2-coloring as a tuple of 0/1 colors, or None."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            row = G.adj[v]
            t = row
            while t:
                low = t & -t
                u = low.bit_length() - 1
                t ^= low
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return tuple(color)


def is_cobipartite(G: Graph):
    """Co-2-coloring (each color class a clique), or None."""
    return is_bipartite(complement(G))


def is_chordal(G: Graph):
    """Perfect elimination ordering via maximum cardinality search, or None."""
    n = G.n
    weight = [0] * n
    numbered = 0
    visit: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not (numbered >> v & 1) and (best == -1 or weight[v] > weight[best]):
                best = v
        visit.append(best)
        numbered |= 1 << best
        t = G.adj[best] & ~numbered
        while t:
            low = t & -t
            u = low.bit_length() - 1
            t ^= low
            weight[u] += 1
    elim = list(reversed(visit))
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    for i, v in enumerate(elim):
        later = 0
        t = G.adj[v]
        while t:
            low = t & -t
            u = low.bit_length() - 1
            t ^= low
            if pos[u] > i:
                later |= low
        t = later
        while t:
            low = t & -t
            u = low.bit_length() - 1
            t ^= low
            if later & ~(G.adj[u] | low):
                return None
    return tuple(elim)


def is_kl_graph(G: Graph, k: int, ell: int):
    """Witness assignment into k independent sets and ell cliques, or None."""
    from .solver import solve

    return solve(G, make_kl_matrix(k, ell))


def is_homogeneous_set(G: Graph, H) -> bool:
    hmask = 0
    for v in H:
        if not (0 <= v < G.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")
        hmask |= 1 << v
    for v in range(G.n):
        if hmask >> v & 1:
            continue
        inter = G.adj[v] & hmask
        if inter != 0 and inter != hmask:
            return False
    return True


def homogeneity_report(G: Graph, P) -> HomogeneityReport:
    """Group a uniform part by equality of neighborhoods outside it.

    Each class is then a homogeneous set whenever outside adjacency fully
    determines membership, which is what the clique/independent
    precondition guarantees for parts of star-free blocks.
    """
    verts = sorted(set(P))
    pmask = 0
    for v in verts:
        if not (0 <= v < G.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")
        pmask |= 1 << v
    inner = [G.adj[v] & pmask for v in verts]
    is_indep = all(x == 0 for x in inner)
    is_clique = all(inner[i] == pmask & ~(1 << v) for i, v in enumerate(verts))
    if verts and not (is_indep or is_clique):
        raise PartNotUniform("part induces neither a clique nor an independent set")
    groups: dict[int, list[int]] = {}
    for v in verts:
        groups.setdefault(G.adj[v] & ~pmask, []).append(v)
    classes = tuple(sorted((tuple(g) for g in groups.values())))
    max_size = max((len(g) for g in classes), default=0)
    return HomogeneityReport(frozenset(verts), classes, max_size)
