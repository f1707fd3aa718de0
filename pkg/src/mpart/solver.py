"""Exact partition solving against a pattern matrix.

The generic solver is a backtracking search over per-vertex candidate part
sets (bitmasks) with forward checking; variable order is
minimum-remaining-values with index tiebreak, values are tried lowest part
index first, so witnesses are deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import ListPartOutOfRange, NotSplit, PartOutOfRange, TooLarge
from .graph import Graph
from .pattern import ONE, STAR, ZERO, PatternMatrix, normalize_block_form


@dataclass(frozen=True)
class PartAssignment:
    """Total map vertex -> part index."""

    parts: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps({"parts": list(self.parts)})


@dataclass(frozen=True)
class ListConstraint:
    """Per-vertex allowed part indices."""

    allowed: tuple[frozenset[int], ...]


def _parts_of(assignment) -> tuple[int, ...]:
    if isinstance(assignment, PartAssignment):
        return assignment.parts
    return tuple(assignment)


def validate(G: Graph, M: PatternMatrix, assignment) -> bool:
    """Check an assignment against all pair constraints of the matrix."""
    parts = _parts_of(assignment)
    n, m = G.n, M.m
    if len(parts) != n:
        raise PartOutOfRange(f"assignment covers {len(parts)} of {n} vertices")
    for p in parts:
        if not (0 <= p < m):
            raise PartOutOfRange(f"part index {p} outside 0..{m - 1}")
    rows = M.rows
    adj = G.adj
    for u in range(n):
        ru = rows[parts[u]]
        au = adj[u]
        for v in range(u + 1, n):
            e = ru[parts[v]]
            if e == STAR:
                continue
            if (e == ONE) != bool(au >> v & 1):
                return False
    return True


def _domains(n: int, m: int, lists) -> list[int] | None:
    full = (1 << m) - 1
    if lists is None:
        return [full] * n
    allowed = lists.allowed if isinstance(lists, ListConstraint) else lists
    if len(allowed) != n:
        raise ListPartOutOfRange(f"lists cover {len(allowed)} of {n} vertices")
    dom = []
    for s in allowed:
        mask = 0
        for p in s:
            if not (0 <= p < m):
                raise ListPartOutOfRange(f"list part {p} outside 0..{m - 1}")
            mask |= 1 << p
        if mask == 0:
            return None  # empty list: immediately infeasible
        dom.append(mask)
    return dom


def solve(G: Graph, M: PatternMatrix, lists=None) -> PartAssignment | None:
    """Find an assignment satisfying the matrix (and lists), or prove none exists."""
    n, m = G.n, M.m
    diag = M.diagonal()
    if lists is None and STAR in diag:
        # an unrestricted diagonal part can absorb the whole graph
        return PartAssignment((diag.index(STAR),) * n)
    dom = _domains(n, m, lists)
    if dom is None:
        return None
    if n == 0:
        return PartAssignment(())

    rows = M.rows
    adj = G.adj
    adj_ok = [sum(1 << q for q in range(m) if rows[p][q] != ZERO) for p in range(m)]
    nonadj_ok = [sum(1 << q for q in range(m) if rows[p][q] != ONE) for p in range(m)]
    assigned = [-1] * n

    def search(todo: int) -> bool:
        if todo == 0:
            return True
        best_v = -1
        best_sz = m + 1
        t = todo
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            sz = dom[v].bit_count()
            if sz < best_sz:
                best_sz = sz
                best_v = v
                if sz == 1:
                    break
        v = best_v
        rest = todo & ~(1 << v)
        row = adj[v]
        cand = dom[v]
        while cand:
            low = cand & -cand
            p = low.bit_length() - 1
            cand ^= low
            aok = adj_ok[p]
            nok = nonadj_ok[p]
            ok = True
            trail = []
            t = rest
            while t:
                lu = t & -t
                u = lu.bit_length() - 1
                t ^= lu
                old = dom[u]
                new = old & (aok if row >> u & 1 else nok)
                if new != old:
                    dom[u] = new
                    trail.append((u, old))
                    if new == 0:
                        ok = False
                        break
            if ok:
                assigned[v] = p
                if search(rest):
                    return True
                assigned[v] = -1
            for u, old in trail:
                dom[u] = old
        return False

    if search((1 << n) - 1):
        return PartAssignment(tuple(assigned))
    return None


def solve_split(G: Graph, M: PatternMatrix) -> PartAssignment | None:
    """Split-specialized solving; equivalent in solvability to solve().

    With a star in block C the witness is read off a split partition
    directly.  Otherwise each zero-diagonal part holds at most one
    clique-side vertex and each one-diagonal part at most one
    independent-side vertex, so those occupants are enumerated and the
    residual is completed by list propagation.
    """
    from .recognize import split_partition  # local import to avoid a cycle

    sp = split_partition(G)
    if sp is None:
        raise NotSplit("input graph is not split")
    block, permuted = normalize_block_form(M)
    k, ell, m = block.k, block.ell, M.m
    clique = sorted(sp.clique)
    indep = sorted(sp.independent)

    # path (a): a star in C gives a two-part witness immediately
    for i in range(k):
        for j in range(ell):
            if block.c[i][j] == STAR:
                zero_part = block.perm[i]
                one_part = block.perm[k + j]
                parts = [0] * G.n
                for v in clique:
                    parts[v] = one_part
                for v in indep:
                    parts[v] = zero_part
                out = PartAssignment(tuple(parts))
                assert validate(G, M, out)
                return out

    # path (b): enumerate occupants, complete by list propagation
    zero_parts = [p for p in range(m) if M.rows[p][p] == ZERO]
    one_parts = [p for p in range(m) if M.rows[p][p] == ONE]
    rows = M.rows
    adj = G.adj

    def compatible(chosen, v, p) -> bool:
        for (w, q) in chosen:
            e = rows[p][q]
            if e != STAR and (e == ONE) != bool(adj[v] >> w & 1):
                return False
        return True

    def branch(idx: int, chosen: list[tuple[int, int]]):
        if idx == len(zero_parts) + len(one_parts):
            fixed = dict(chosen)
            one_set = frozenset(one_parts)
            zero_set = frozenset(zero_parts)
            allowed = []
            for v in range(G.n):
                if v in fixed:
                    allowed.append(frozenset((fixed[v],)))
                else:
                    allowed.append(one_set if v in clique_set else zero_set)
            return solve(G, M, ListConstraint(tuple(allowed)))
        if idx < len(zero_parts):
            p = zero_parts[idx]
            pool = clique
        else:
            p = one_parts[idx - len(zero_parts)]
            pool = indep
        used = {v for v, _ in chosen}
        for v in pool:
            if v in used or not compatible(chosen, v, p):
                continue
            chosen.append((v, p))
            result = branch(idx + 1, chosen)
            if result is not None:
                return result
            chosen.pop()
        return branch(idx + 1, chosen)  # part left without an occupant

    clique_set = set(clique)
    return branch(0, [])


def count_partitions(G: Graph, M: PatternMatrix) -> int:
    """Number of valid total assignments, by full enumeration through validate."""
    if G.n > 10 or M.m > 4:
        raise TooLarge(f"count_partitions guarded at n <= 10, m <= 4 (n={G.n}, m={M.m})")
    count = 0
    for cand in product(range(M.m), repeat=G.n):
        if validate(G, M, cand):
            count += 1
    return count
