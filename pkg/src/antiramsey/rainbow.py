"""Complete search for rainbow (all edges distinctly colored) pattern copies.

``find_rainbow`` is a decision procedure, not a heuristic: if it returns
``None`` there is no injective placement of the pattern into the colored
complete host whose edge images carry pairwise distinct colors.

Search organization:

* pattern components are embedded largest-first; within a component vertices
  are placed in BFS order so every new vertex attaches to a placed one and
  color clashes surface as early as possible;
* host candidates are tried in ascending vertex order, so the returned
  witness is deterministic;
* a host vertex is skipped when its color degree (number of distinct colors
  on incident edges) is below the pattern vertex's degree;
* structurally identical components must use increasing root hosts, and of
  any set of currently unused, interchangeable host vertices (vertices whose
  transposition maps the coloring onto itself up to renaming colors) only the
  smallest is tried.  Both prunings preserve completeness: any embedding can
  be rewritten into one the restricted search still visits.

Colors couple across components, so per-component results are never cached;
components are re-driven lazily under the shared used-color set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colorings import EdgeColoring
from .graphs import Graph, PatternSpec, build_pattern


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices."""

    map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"map": list(self.map)}


def check_embedding(coloring: EdgeColoring, pattern: Graph | PatternSpec,
                    emb: Embedding) -> bool:
    """True iff the map is injective into the host and the images of the
    pattern edges have pairwise distinct colors."""
    g = pattern if isinstance(pattern, Graph) else build_pattern(pattern)
    m = emb.map
    if len(m) != g.n:
        return False
    if any(not (0 <= h < coloring.n) for h in m):
        return False
    if len(set(m)) != len(m):
        return False
    seen = set()
    for u, v in g.edge_list:
        c = coloring.color(m[u], m[v])
        if c in seen:
            return False
        seen.add(c)
    return True


# ---------------------------------------------------------------------------
# Host twin classes
# ---------------------------------------------------------------------------

def _twin_partition(coloring: EdgeColoring) -> list[int]:
    """Partition host vertices into interchangeability classes.

    u and v land in one class when swapping them maps every color class of
    the coloring onto a color class (possibly another one), so any embedding
    using v can be rewritten to use u.  The relation is transitive because
    such structure-preserving swaps compose.
    """
    n = coloring.n
    mat = coloring.color_matrix()
    ncol = coloring.num_colors
    class_size = [0] * ncol
    for c in coloring.colors:
        class_size[c] += 1
    inc = [[0] * ncol for _ in range(n)]
    for u in range(n):
        row = mat[u]
        for v in range(n):
            if v != u:
                inc[u][row[v]] += 1

    def appears_elsewhere(c: int, u: int, v: int) -> bool:
        cnt = class_size[c] - inc[u][c] - inc[v][c]
        if mat[u][v] == c:
            cnt += 1
        return cnt > 0

    def is_twin(u: int, v: int) -> bool:
        cuv = mat[u][v]
        sigma = {cuv: cuv}
        for x in range(n):
            if x == u or x == v:
                continue
            a, b = mat[u][x], mat[v][x]
            for p, q in ((a, b), (b, a)):
                prev = sigma.get(p)
                if prev is None:
                    sigma[p] = q
                elif prev != q:
                    return False
        for p, q in sigma.items():
            if p != q and appears_elsewhere(p, u, v):
                return False
        return True

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(u + 1, n):
            if find(u) != find(v) and is_twin(u, v):
                parent[find(v)] = find(u)
    return [find(v) for v in range(n)]


# ---------------------------------------------------------------------------
# Search plan
# ---------------------------------------------------------------------------

def _build_plan(g: Graph):
    """Slot order plus per-slot constraints for the backtracking search."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edge_list:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start] or not adj[start]:
            continue
        order = [start]
        seen[start] = True
        qi = 0
        while qi < len(order):
            x = order[qi]
            qi += 1
            for y in sorted(adj[x]):
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
        comps.append(order)
    isolated = [v for v in range(g.n) if not adj[v]]

    def signature(order):
        pos = {v: i for i, v in enumerate(order)}
        edges = sorted(
            tuple(sorted((pos[u], pos[v])))
            for u, v in g.edge_list if u in pos and v in pos
        )
        return (len(order), tuple(edges))

    def edge_count(order):
        inside = set(order)
        return sum(1 for u, v in g.edge_list if u in inside)

    # largest-first; identical structures adjacent so root ordering can bite
    comps.sort(key=lambda o: (-edge_count(o), -len(o), signature(o), o[0]))

    slots = []  # (pattern_vertex, placed_neighbor_list, prev_identical_root or -1)
    prev_sig = None
    prev_root = -1
    for order in comps:
        sig = signature(order)
        placed = set()
        for i, v in enumerate(order):
            nbrs = tuple(u for u in adj[v] if u in placed)
            if i == 0:
                slots.append((v, nbrs, prev_root if sig == prev_sig else -1))
            else:
                slots.append((v, nbrs, -1))
            placed.add(v)
        prev_sig, prev_root = sig, order[0]
    degs = g.degrees()
    return slots, isolated, degs


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

def find_rainbow(coloring: EdgeColoring,
                 pattern: Graph | PatternSpec) -> Embedding | None:
    """First rainbow embedding in the deterministic search order, or None.

    ``None`` certifies that no rainbow copy exists (complete search).
    """
    g = pattern if isinstance(pattern, Graph) else build_pattern(pattern)
    n = coloring.n
    if g.n > n:
        raise ValueError(f"pattern has {g.n} vertices, host only {n}")
    if g.num_edges == 0:
        return Embedding(tuple(range(g.n)))

    mat = coloring.color_matrix()
    color_degree = [len({c for c in row if c >= 0}) for row in mat]
    twin = _twin_partition(coloring)
    slots, isolated, pdeg = _build_plan(g)

    assignment = [-1] * g.n
    used_host = [False] * n
    used_color = bytearray(coloring.num_colors)

    def place(si: int) -> bool:
        if si == len(slots):
            return True
        v, nbrs, prev_root = slots[si]
        lo = assignment[prev_root] + 1 if prev_root >= 0 else 0
        need = pdeg[v]
        tried_classes = set()
        for h in range(lo, n):
            if used_host[h] or color_degree[h] < need:
                continue
            tc = twin[h]
            if tc in tried_classes:
                continue
            tried_classes.add(tc)
            new_colors = []
            ok = True
            for u in nbrs:
                c = mat[assignment[u]][h]
                if used_color[c] or c in new_colors:
                    ok = False
                    break
                new_colors.append(c)
            if not ok:
                continue
            assignment[v] = h
            used_host[h] = True
            for c in new_colors:
                used_color[c] = 1
            if place(si + 1):
                return True
            for c in new_colors:
                used_color[c] = 0
            used_host[h] = False
            assignment[v] = -1
        return False

    if not place(0):
        return None
    free = iter(h for h in range(n) if not used_host[h])
    for v in isolated:
        assignment[v] = next(free)
    return Embedding(tuple(assignment))


def is_rainbow_free(coloring: EdgeColoring,
                    pattern: Graph | PatternSpec) -> bool:
    """True iff the coloring has no rainbow copy of the pattern."""
    return find_rainbow(coloring, pattern) is None
