"""Exact small-n anti-Ramsey values by exhaustive search over colorings.

``max_rainbow_free(n, G)`` maximizes the number of colors over all surjective
edge-colorings of K_n containing no rainbow copy of G; the anti-Ramsey value
is that maximum plus one.

Colorings are enumerated in restricted-growth normal form (edge i, in the
fixed lexicographic edge order, may reuse any color already open or open the
next fresh id), which quotients out color renamings; every leaf is therefore
automatically surjective.  Depth-first branch and bound:

* a branch is cut when (colors open so far) + (edges still uncolored) cannot
  beat the incumbent;
* a branch is cut as soon as the partially colored host contains a rainbow
  copy of the pattern, since later edges only add colors and an existing
  rainbow copy survives;
* fresh color first, then existing ids in ascending order - strong
  incumbents appear early, which is what makes the count bound bite.

The rainbow check is incremental: all placements of the pattern are
enumerated once as sets of edge ranks and bucketed by their largest rank, so
after coloring edge i exactly the placements completed by edge i are tested.
Host-vertex symmetry pruning is deliberately not attempted here (correctness
over speed; a known optimization hook).

The reported witness is the first incumbent attaining the final maximum in
the fixed search order.  n <= 6 always completes; n = 7 runs under a node
budget and falls back to an explicit inconclusive result.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .colorings import EdgeColoring, edge_index
from .formulas import UnrecognizedFamilyError, ar_family
from .graphs import Graph, PatternSpec, build_pattern, family_name

HARD_CEILING = 7
DEFAULT_BUDGET_N7 = 30_000_000


class OracleInconclusive(RuntimeError):
    """Node budget ran out; carries the best (lower-bound) result found."""

    def __init__(self, result: "OracleResult"):
        super().__init__(
            f"budget exhausted after {result.nodes_explored} nodes; "
            f"best rainbow-free coloring found has {result.max_rainbow_free_colors} colors")
        self.result = result


@dataclass(frozen=True)
class OracleResult:
    n: int
    pattern: PatternSpec | Graph
    max_rainbow_free_colors: int
    ar_exact: int | None
    witness: EdgeColoring | None
    nodes_explored: int
    elapsed: float
    conclusive: bool

    def to_json(self, meta: bool = True) -> dict:
        from .colorings import serialize_coloring

        name = (family_name(self.pattern)
                if not isinstance(self.pattern, Graph)
                else f"custom(n={self.pattern.n},m={self.pattern.num_edges})")
        out = {
            "n": self.n,
            "pattern": name,
            "max_rainbow_free_colors": self.max_rainbow_free_colors,
            "ar_exact": self.ar_exact,
            "witness": None if self.witness is None else serialize_coloring(self.witness),
            "nodes_explored": self.nodes_explored,
            "conclusive": self.conclusive,
        }
        if meta:
            out["elapsed"] = self.elapsed
        return out


def _placement_buckets(n: int, g: Graph) -> list[list[tuple[int, ...]]]:
    """All placements of g into K_n as edge-rank tuples, bucketed by max rank.

    Distinct vertex maps giving the same edge set are deduplicated; only the
    edge set matters for rainbow-ness.  Vertices of degree zero are ignored
    (they never constrain a copy when the host is large enough, which the
    caller checks).
    """
    pverts = [v for v in range(g.n) if any(v in e for e in g.edges)]
    pedges = g.edge_list
    mapping: dict[int, int] = {}
    used = [False] * n
    edge_sets: set[frozenset[int]] = set()

    def rec(i: int) -> None:
        if i == len(pverts):
            edge_sets.add(frozenset(
                edge_index(n, mapping[u], mapping[v]) for u, v in pedges))
            return
        v = pverts[i]
        for h in range(n):
            if not used[h]:
                used[h] = True
                mapping[v] = h
                rec(i + 1)
                used[h] = False
        mapping.pop(v, None)

    rec(0)
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(n * (n - 1) // 2)]
    for es in edge_sets:
        ranks = tuple(sorted(es))
        buckets[ranks[-1]].append(ranks)
    return buckets


PROGRESS_INTERVAL = 1_000_000


def max_rainbow_free(n: int, pattern: Graph | PatternSpec,
                     node_budget: int | None = None,
                     on_progress=None) -> OracleResult:
    """Maximum color count over rainbow-free colorings of K_n, with witness.

    Raises ValueError for hosts above the feasibility ceiling.  If the node
    budget runs out the result is returned with ``conclusive=False`` and
    ``ar_exact=None``; the color count is then only a lower bound.
    ``on_progress(nodes, best)`` is called every PROGRESS_INTERVAL nodes so
    callers can log liveness without touching the result.
    """
    g = pattern if isinstance(pattern, Graph) else build_pattern(pattern)
    if g.num_edges == 0:
        raise ValueError("pattern needs at least one edge")
    if g.n > n:
        raise ValueError(f"pattern has {g.n} vertices, host only {n}")
    if n > HARD_CEILING:
        raise ValueError(
            f"n={n} beyond the exhaustive-search ceiling ({HARD_CEILING})")
    if n == HARD_CEILING and node_budget is None:
        node_budget = DEFAULT_BUDGET_N7

    m = n * (n - 1) // 2
    buckets = _placement_buckets(n, g)
    color = [0] * m
    best = 0
    best_colors: list[int] | None = None
    nodes = 0
    budget_hit = False
    start = time.perf_counter()

    def rec(i: int, cmax: int) -> None:
        nonlocal best, best_colors, nodes, budget_hit
        if budget_hit:
            return
        if i == m:
            if cmax > best:
                best = cmax
                best_colors = color.copy()
            return
        rem = m - i - 1
        bucket = buckets[i]
        col = color
        # fresh color first, then existing ids ascending
        if cmax + 1 + rem > best:
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                budget_hit = True
                return
            if on_progress is not None and nodes % PROGRESS_INTERVAL == 0:
                on_progress(nodes, best)
            col[i] = cmax
            for emb in bucket:
                mask = 0
                for e in emb:
                    b = 1 << col[e]
                    if mask & b:
                        break
                    mask |= b
                else:
                    break  # rainbow copy completed: prune
            else:
                rec(i + 1, cmax + 1)
        if cmax + rem > best:
            for c in range(cmax):
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    budget_hit = True
                    return
                if on_progress is not None and nodes % PROGRESS_INTERVAL == 0:
                    on_progress(nodes, best)
                col[i] = c
                for emb in bucket:
                    mask = 0
                    for e in emb:
                        b = 1 << col[e]
                        if mask & b:
                            break
                        mask |= b
                    else:
                        break
                else:
                    rec(i + 1, cmax)
                if budget_hit:
                    return

    rec(0, 0)
    elapsed = time.perf_counter() - start
    conclusive = not budget_hit
    witness = None if best_colors is None else EdgeColoring(n, tuple(best_colors))
    return OracleResult(
        n=n, pattern=pattern,
        max_rainbow_free_colors=best,
        ar_exact=best + 1 if conclusive else None,
        witness=witness,
        nodes_explored=nodes,
        elapsed=elapsed,
        conclusive=conclusive,
    )


def exact_ar(n: int, pattern: Graph | PatternSpec,
             node_budget: int | None = None) -> int:
    """Exact anti-Ramsey value: max rainbow-free colors plus one."""
    result = max_rainbow_free(n, pattern, node_budget)
    if not result.conclusive:
        raise OracleInconclusive(result)
    assert result.ar_exact is not None
    return result.ar_exact


# ---------------------------------------------------------------------------
# Cross-validation against the closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RangeRow:
    n: int
    status: str  # ok | skipped-small | skipped-infeasible | inconclusive
    ar_oracle: int | None
    formula_exact: int | None
    formula_valid: bool | None
    match: bool | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "status": self.status,
            "ar_oracle": self.ar_oracle,
            "formula_exact": self.formula_exact,
            "formula_valid": self.formula_valid,
            "match": self.match,
        }


@dataclass(frozen=True)
class RangeReport:
    family: PatternSpec
    n_from: int
    n_to: int
    rows: tuple[RangeRow, ...]
    mismatches: tuple[int, ...]  # n where a valid formula disagreed (must be empty)

    def to_json(self) -> dict:
        return {
            "family": family_name(self.family),
            "n_from": self.n_from,
            "n_to": self.n_to,
            "rows": [r.to_json() for r in self.rows],
            "mismatches": list(self.mismatches),
        }


def verify_range(spec: PatternSpec, n_from: int, n_to: int,
                 node_budget: int | None = None) -> RangeReport:
    """Compare the oracle against the closed form for each n in the range.

    Any n where the formula claims validity but disagrees with the oracle is
    flagged in ``mismatches`` (the library's core soundness check: this list
    must stay empty).  Values outside validity windows are recorded as data.
    Hosts beyond the feasibility ceiling are reported as skipped.
    """
    g = build_pattern(spec)
    rows = []
    mismatches = []
    for n in range(n_from, n_to + 1):
        if n < g.n:
            rows.append(RangeRow(n, "skipped-small", None, None, None, None))
            continue
        if n > HARD_CEILING:
            rows.append(RangeRow(n, "skipped-infeasible", None, None, None, None))
            continue
        formula_exact = None
        formula_valid = None
        try:
            rep = ar_family(n, spec)
            formula_exact = rep.exact
            if rep.exact is not None:
                formula_valid = bool(rep.valid.get("exact", False))
        except (UnrecognizedFamilyError, ValueError):
            pass
        result = max_rainbow_free(n, spec, node_budget)
        if not result.conclusive:
            rows.append(RangeRow(n, "inconclusive",
                                 None, formula_exact, formula_valid, None))
            continue
        match = None
        if formula_exact is not None:
            match = result.ar_exact == formula_exact
            if formula_valid and not match:
                mismatches.append(n)
        rows.append(RangeRow(n, "ok", result.ar_exact,
                             formula_exact, formula_valid, match))
    return RangeReport(spec, n_from, n_to, tuple(rows), tuple(mismatches))
