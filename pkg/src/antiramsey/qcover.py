"""The cover parameter q_j: minimum vertices incident with all but <= j edges.

``q_cover(g, j)`` finds the smallest vertex set R such that at most j edges
of g avoid R entirely, together with the lexicographically smallest optimal
witness.  This is the quantity that drives every lower-bound construction in
the library: if q_j(G) exceeds r, the two-zone coloring with a distinguished
r-set admits no rainbow copy of G.

The default strategy enumerates subsets in ascending cardinality (bitmask
incidence, first hit in ``itertools.combinations`` order is the lex-smallest
witness).  Pattern graphs here are small with tiny optimal covers, so that is
usually instant; a branch-and-bound fallback (greedy upper bound plus a
degree-sum lower bound, branching on the first uncovered edge) guards larger
custom inputs, with the witness rebuilt lexicographically afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, Matching, build_pattern, disjoint_union

# Max number of subsets to scan per cardinality before switching to
# branch-and-bound.
_ENUM_LIMIT = 2_000_000


@dataclass(frozen=True)
class QResult:
    """Value of q_j with its witness set (edges avoiding it number <= j)."""

    j: int
    value: int
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"j": self.j, "value": self.value, "witness": list(self.witness)}


def _incidence_masks(g: Graph) -> tuple[list[int], int]:
    """Per-vertex bitmask over edge indices, plus the full-edge mask."""
    masks = [0] * g.n
    for idx, (u, v) in enumerate(g.edge_list):
        masks[u] |= 1 << idx
        masks[v] |= 1 << idx
    return masks, (1 << g.num_edges) - 1


def _greedy_upper(active, masks, m, j) -> int:
    covered = 0
    size = 0
    while m - int.bit_count(covered) > j:
        best_v = max(active, key=lambda v: (int.bit_count(masks[v] & ~covered), -v))
        covered |= masks[best_v]
        size += 1
    return size


def _exists_cover(edges, masks, covered, ignored, budget, slack, chosen_limit) -> bool:
    """Is there a set of <= budget allowed vertices leaving <= slack edges?

    ``chosen_limit`` masks the vertices still allowed to enter the cover.
    Branches on the first edge neither covered nor written off, trying each
    endpoint and, slack permitting, leaving the edge uncovered.
    """
    target = None
    for idx, (u, v) in enumerate(edges):
        bit = 1 << idx
        if not (covered & bit) and not (ignored & bit):
            target = (idx, u, v)
            break
    if target is None:
        return True
    if budget == 0 and slack == 0:
        return False
    idx, u, v = target
    if budget > 0:
        for w in (u, v):
            if (chosen_limit >> w) & 1 and _exists_cover(
                    edges, masks, covered | masks[w], ignored,
                    budget - 1, slack, chosen_limit):
                return True
    if slack > 0 and _exists_cover(edges, masks, covered, ignored | (1 << idx),
                                   budget, slack - 1, chosen_limit):
        return True
    return False


def _lex_witness(g: Graph, active, masks, m, j, size) -> tuple[int, ...]:
    """Lexicographically smallest feasible set of exactly ``size`` vertices."""
    edges = g.edge_list
    chosen: list[int] = []
    covered = 0
    allowed = 0
    for v in active:
        allowed |= 1 << v
    for v in active:
        if len(chosen) == size:
            break
        trial_allowed = allowed & ~((1 << (v + 1)) - 1)  # only vertices > v may follow
        if _exists_cover(edges, masks, covered | masks[v], 0,
                         size - len(chosen) - 1, j, trial_allowed):
            chosen.append(v)
            covered |= masks[v]
        else:
            allowed &= ~(1 << v)
    if m - int.bit_count(covered) > j:
        raise AssertionError("witness reconstruction failed")
    return tuple(chosen)


def q_cover(g: Graph, j: int) -> QResult:
    """Exact minimum size of a vertex set incident with all but <= j edges.

    The witness is the lexicographically smallest optimal set.  Isolated
    vertices never help and are pruned up front.  ``j >= |E|`` gives 0 with
    an empty witness.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    m = g.num_edges
    if m <= j:
        return QResult(j, 0, ())
    masks, _ = _incidence_masks(g)
    active = [v for v in range(g.n) if masks[v]]
    upper = _greedy_upper(active, masks, m, j)
    max_deg = max(int.bit_count(masks[v]) for v in active)
    lower = max(0, -(-(m - j) // max_deg))
    for size in range(lower, upper + 1):
        if comb(len(active), size) <= _ENUM_LIMIT:
            for combo in combinations(active, size):
                covered = 0
                for v in combo:
                    covered |= masks[v]
                if m - int.bit_count(covered) <= j:
                    return QResult(j, size, tuple(combo))
        else:
            allowed = 0
            for v in active:
                allowed |= 1 << v
            if _exists_cover(g.edge_list, masks, 0, 0, size, j, allowed):
                return QResult(j, size, _lex_witness(g, active, masks, m, j, size))
    raise AssertionError("greedy upper bound was not feasible")


def cover_by_counting(g: Graph, size: int, slack: int) -> bool:
    """Counting guarantee: if ``C(|V| - size, 2) <= slack`` then every set of
    ``size`` vertices leaves at most ``slack`` edges, so q_slack(g) <= size."""
    if size < 0 or slack < 0:
        raise ValueError("size and slack must be nonnegative")
    return comb(max(g.n - size, 0), 2) <= slack


def q_union_matching(l_graph: Graph, t: int, t_reduced: int, j: int) -> int:
    """q_j of ``l_graph`` plus ``t`` disjoint edges, via the reduction

        min over 0 <= i <= min(j, t - t_reduced) of
            (t - t_reduced) - i + q_{j-i}(l_graph + t_reduced edges).

    Each spare matching edge is either bought into the cover (one vertex) or
    written off against the slack.  Must agree with ``q_cover`` computed on
    the full union directly.
    """
    if not (0 <= t_reduced <= t):
        raise ValueError("need 0 <= t_reduced <= t")
    if j < 0:
        raise ValueError("j must be nonnegative")
    base = disjoint_union(l_graph, build_pattern(Matching(t_reduced))) \
        if t_reduced else l_graph
    spare = t - t_reduced
    return min(spare - i + q_cover(base, j - i).value
               for i in range(0, min(j, spare) + 1))
