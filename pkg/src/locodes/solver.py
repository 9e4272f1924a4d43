"""Exact minimum-code search with optimality certificates.

Every class condition is a pure hitting-set system over the vertex set:

* coverage demands a codeword in each closed (open, for total domination)
  r-ball;
* separating a pair (u, v) demands a codeword in the symmetric difference
  of their r-balls, widened by {u, v} for the locating-dominating variants
  (a pair with a codeword endpoint never needs separating);
* pairs at distance above 2r are dropped because the coverage constraints
  already hit their disjoint balls, and local variants only separate edges.

All class conditions are superset-closed, so minimising over hitting sets
is exact.  The search runs one depth-first pass per candidate size k,
branching on the unhit constraint with the fewest remaining candidate
vertices (include a candidate, or ban it and move on), with unit
propagation, dead-constraint pruning and a packing bound: pairwise
disjoint unhit constraints each need a distinct new codeword.  A size is
reported infeasible only when its whole tree was exhausted, which is what
certifies optimality of the first feasible size.

On vertex-transitive graphs every non-empty code has an automorphic image
containing vertex 0, so the search may pin vertex 0 as a codeword; this is
sound for feasibility-at-size questions and is enabled automatically for
generators that declare transitivity.

Branching order is canonical and the first witness found is returned, so
identical inputs always produce identical results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .bitset import iter_bits
from .bounds import hypercube_lid_lower_bound
from .codes import Code, CodeClass, CodeKind, admits, verify
from .graphs import Graph


class SolverError(ValueError):
    pass


class InadmissibleGraphError(SolverError):
    """The graph admits no code of the requested kind; carries a twin pair."""

    def __init__(self, klass: CodeClass, twins):
        self.twins = twins
        super().__init__(f"graph admits no {klass} code: twin pair {twins}")


class InfeasibleClassError(SolverError):
    """No code of any size satisfies the class (e.g. total domination with
    an isolated vertex)."""


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    size_hint: int | None = None  # advisory known upper bound

    def __post_init__(self):
        for field in ("max_nodes", "max_seconds", "size_hint"):
            v = getattr(self, field)
            if v is not None and v <= 0:
                raise SolverError(f"{field} must be positive")


@dataclass(frozen=True)
class RefutationOutcome:
    status: str  # "refuted" | "feasible" | "unknown"
    size: int
    witness: Code | None
    nodes: int


@dataclass(frozen=True)
class SolveResult:
    status: str  # "optimal" | "feasible" | "unknown"
    optimal_size: int | None
    witness: Code | None
    nodes_explored: int
    lower_bound_used: int
    exhausted_below: bool  # True: every smaller size is certifiably infeasible
    refuted_up_to: int  # all sizes <= this were refuted within budget

    @property
    def certified(self) -> bool:
        return self.status == "optimal" and self.exhausted_below


class _OutOfBudget(Exception):
    pass


class _Ctx:
    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: SolveBudget | None):
        self.nodes = 0
        self.max_nodes = budget.max_nodes if budget else None
        self.deadline = None
        if budget and budget.max_seconds is not None:
            self.deadline = time.monotonic() + budget.max_seconds

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def class_constraints(graph: Graph, klass: CodeClass) -> list:
    """The hitting-set system of a class on a graph, deduplicated, sorted by
    size and with dominated (superset) constraints removed."""
    kind = klass.kind
    r = klass.r
    balls = graph.ball_masks(r)
    cons = []
    if kind is CodeKind.TOTAL_DOMINATING:
        for v in range(graph.n):
            m = balls[v] & ~(1 << v)
            if m == 0:
                raise InfeasibleClassError(
                    f"vertex {v} has an empty open {r}-ball; no total dominating code exists")
            cons.append(m)
    else:
        cons.extend(balls)

    if kind.separates_pairs:
        if kind in (CodeKind.IDENTIFYING, CodeKind.LOCAL_IDENTIFYING):
            rep = admits(graph, kind, r)
            if not rep.admits:
                raise InadmissibleGraphError(klass, rep.twins)
        if kind.adjacent_pairs_only:
            pairs = graph.edges()
        else:
            near = graph.ball_masks(2 * r)
            pairs = ((u, u + 1 + off) for u in range(graph.n)
                     for off in iter_bits(near[u] >> (u + 1)))
        widen = kind.noncodewords_only
        for u, v in pairs:
            m = balls[u] ^ balls[v]
            if widen:
                m |= (1 << u) | (1 << v)
            cons.append(m)

    uniq = sorted(set(cons), key=lambda m: (m.bit_count(), m))
    kept = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _search(cons, chosen, count, allowed, k, ctx):
    """First hitting set of size <= k extending `chosen`, else None."""
    ctx.tick()
    while True:
        if not cons:
            return chosen
        best_cand = 0
        best_cnt = 1 << 30
        pack = 0
        pack_used = 0
        for m in cons:
            cand = m & allowed
            if cand == 0:
                return None
            if cand & pack_used == 0:
                pack += 1
                pack_used |= cand
            c = cand.bit_count()
            if c < best_cnt:
                best_cnt = c
                best_cand = cand
                if c == 1:
                    break
        if best_cnt == 1:
            if count + 1 > k:
                return None
            chosen |= best_cand
            count += 1
            allowed &= ~best_cand
            cons = [m for m in cons if not m & best_cand]
            continue
        if count + pack > k:
            return None
        break
    cand = best_cand
    while cand:
        b = cand & -cand
        cand ^= b
        if count < k:
            res = _search([m for m in cons if not m & b],
                          chosen | b, count + 1, allowed & ~b, k, ctx)
            if res is not None:
                return res
        allowed &= ~b
    return None


def _root_lower_bound(cons, graph: Graph, klass: CodeClass) -> int:
    pack = 0
    used = 0
    for m in cons:
        if m & used == 0:
            pack += 1
            used |= m
    # a codeword covers at most max-ball-size vertices and all n need covering
    balls = graph.ball_masks(klass.r)
    if klass.kind is CodeKind.TOTAL_DOMINATING:
        ball_max = max((balls[v] & ~(1 << v)).bit_count() for v in range(graph.n))
    else:
        ball_max = max(m.bit_count() for m in balls)
    cover = -(-graph.n // ball_max)
    return max(1, pack, cover)


def _use_symmetry(graph: Graph, symmetry) -> bool:
    if symmetry is None:
        return graph.is_vertex_transitive
    if symmetry and not graph.is_vertex_transitive:
        raise SolverError("symmetry breaking is only sound on vertex-transitive graphs")
    return bool(symmetry)


def _run_size(cons, graph, k, ctx, pin_zero):
    full = (1 << graph.n) - 1
    if pin_zero:
        sub = [m for m in cons if not m & 1]
        return _search(sub, 1, 1, full & ~1, k, ctx)
    return _search(cons, 0, 0, full, k, ctx)


def refute_size(graph: Graph, klass: CodeClass, k: int,
                budget: SolveBudget | None = None, symmetry=None) -> RefutationOutcome:
    """Settle feasibility of the class at exactly size k."""
    if k < 1:
        raise SolverError("size must be >= 1")
    pin = _use_symmetry(graph, symmetry)
    cons = class_constraints(graph, klass)
    ctx = _Ctx(budget)
    try:
        bits = _run_size(cons, graph, k, ctx, pin)
    except _OutOfBudget:
        return RefutationOutcome("unknown", k, None, ctx.nodes)
    if bits is None:
        return RefutationOutcome("refuted", k, None, ctx.nodes)
    witness = Code(graph, bits)
    assert verify(witness, klass).valid
    return RefutationOutcome("feasible", k, witness, ctx.nodes)


def solve_min(graph: Graph, klass: CodeClass,
              budget: SolveBudget | None = None, symmetry=None) -> SolveResult:
    """Minimum code size with a witness; optimality is certified when every
    smaller size was refuted (by exhausted search or a proven formula bound).

    Budget exhaustion yields status "unknown" (no witness yet) or
    "feasible" (witness found but some smaller size unresolved), never a
    silently uncertified optimum.
    """
    pin = _use_symmetry(graph, symmetry)
    cons = class_constraints(graph, klass)
    lb = _root_lower_bound(cons, graph, klass)
    if (graph.family == "hypercube" and klass.kind is CodeKind.LOCAL_IDENTIFYING
            and klass.r == 1 and graph.meta.get("dim", 0) >= 3):
        lb = max(lb, hypercube_lid_lower_bound(graph.meta["dim"]))
    ctx = _Ctx(budget)
    refuted_up_to = lb - 1
    for k in range(lb, graph.n + 1):
        try:
            bits = _run_size(cons, graph, k, ctx, pin)
        except _OutOfBudget:
            return SolveResult("unknown", None, None, ctx.nodes, lb, False, refuted_up_to)
        if bits is not None:
            witness = Code(graph, bits)
            assert verify(witness, klass).valid
            return SolveResult("optimal", len(witness), witness, ctx.nodes, lb,
                               True, refuted_up_to)
        refuted_up_to = k
    # every size refuted: cannot happen for satisfiable classes (C = V works)
    return SolveResult("unknown", None, None, ctx.nodes, lb, False, refuted_up_to)
