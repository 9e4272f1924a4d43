"""Reproduction suite: replay every desk-scale known value in one run.

Each row recomputes one published quantity from scratch (certified solver
optima, explicit-code verifications, exact shares and densities, formula
bounds, equivalences) and compares exactly.  Rows are independent apart
from a memoized solver cache, and all sampling is seeded, so a run is
reproducible end to end.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, constructions
from .codes import (Code, CodeClass, CodeKind, admits, classes_equivalent_on,
                    verify)
from .graphs import Graph, complete_bipartite, cycle, figure_graph, graph_from_uri, hypercube
from .patterns import BUILTIN_PATTERNS, pattern_search
from .solver import SolveBudget, solve_min


@dataclass
class CheckRow:
    row_id: str
    group: str
    ok: bool
    expected: str
    got: str
    seconds: float
    note: str = ""


# known optimal sizes in the binary n-cube for n = 2..5
KNOWN_K = {2: 2, 3: 2, 4: 4, 5: 7}
KNOWN_ML = {2: 2, 3: 4, 4: 6, 5: 8}
KNOWN_M = {2: 3, 3: 4, 4: 7, 5: 10}
KNOWN_MLD = {2: 2, 3: 4, 4: 6, 5: 10}

_HYPERCUBE_TABLE = [
    ("K", CodeKind.COVERING, KNOWN_K),
    ("ML", CodeKind.LOCAL_IDENTIFYING, KNOWN_ML),
    ("M", CodeKind.IDENTIFYING, KNOWN_M),
    ("MLD", CodeKind.LOCATING_DOMINATING, KNOWN_MLD),
]

# known optimal densities on the four grids (name -> builtin pattern id)
GRID_PATTERN_IDS = tuple(BUILTIN_PATTERNS)

OUT_OF_DESK_SCOPE = (
    "optimal grid densities as true infinite-grid infima (discharging lower bounds)",
    "hypercube optima for n >= 6 (e.g. M(6) = 19)",
    "asymptotic comparison of the bound families",
)


class PaperCheck:
    """Builds and runs the reproduction rows; solver results are memoized."""

    def __init__(self, seed: int = 0, budget: SolveBudget | None = None):
        self.seed = seed
        self.budget = budget
        self._solve_cache = {}
        self._rows = []
        self._register_all()

    # -- plumbing ---------------------------------------------------------

    def _solve(self, uri: str, kind: CodeKind, r: int = 1):
        key = (uri, kind, r)
        if key not in self._solve_cache:
            g = graph_from_uri(uri)
            self._solve_cache[key] = solve_min(g, CodeClass(kind, r), budget=self.budget)
        return self._solve_cache[key]

    def _register(self, row_id, group, fn):
        self._rows.append((row_id, group, fn))

    def row_ids(self):
        return [(rid, grp) for rid, grp, _ in self._rows]

    def run(self, only: str | None = None, progress=None):
        out = []
        for rid, grp, fn in self._rows:
            if only and only not in rid and only not in grp:
                continue
            t0 = time.perf_counter()
            try:
                expected, got, ok, note = fn()
            except Exception as exc:  # a crashed row is a failed row
                expected, got, ok, note = "no error", f"{type(exc).__name__}: {exc}", False, ""
            row = CheckRow(rid, grp, ok, str(expected), str(got),
                           time.perf_counter() - t0, note)
            out.append(row)
            if progress:
                progress(row)
        return out

    # -- row definitions ---------------------------------------------------

    def _register_all(self):
        for name, kind, table in _HYPERCUBE_TABLE:
            for n, want in table.items():
                self._register(f"hypercube/{name}({n})={want}", "hypercube",
                               self._make_table_row(name, kind, n, want))
        self._register("equivalence/f3-id-vs-lid", "equivalence", self._row_f3_equivalence)
        for cid in ("f2-lid", "f4-lid6", "f6-lid15"):
            self._register(f"explicit/{cid}", "explicit", self._make_explicit_row(cid))
        self._register("explicit/f6-lid15-induced-paths", "explicit",
                       self._row_f6_induced_paths)
        self._register("hamming/partition-s3", "hamming", self._row_hamming_partition)
        self._register("hamming/lift-s2-k2", "hamming", self._row_hamming_lift)
        self._register("hamming/lift-cover-f3", "hamming", self._make_lift_cover_row(3, 8))
        self._register("hamming/lift-cover-f4", "hamming", self._make_lift_cover_row(4, 16))
        self._register("bounds/lid-lower-formula", "bounds", self._row_formula_values)
        self._register("bounds/lid-lower-vs-optimum", "bounds", self._row_formula_vs_optimum)
        for n in (3, 4, 5):
            self._register(f"k2n/n={n}", "k2n", self._make_k2n_row(n))
        self._register("share/fig2-is-13-6", "share", self._row_fig2_share)
        self._register("share/total-identity", "share", self._row_share_identity)
        self._register("figure1/local-vs-plain-at-r2", "figure", self._row_figure1)
        self._register("trianglefree/random-bipartite", "trianglefree", self._row_tf_bipartite)
        self._register("trianglefree/grid-tori", "trianglefree", self._row_tf_tori)
        self._register("trianglefree/cycle6-exhaustive", "trianglefree", self._row_tf_cycle6)
        self._register("dimlift/f4-equivalence", "dimlift", self._row_dimlift)
        for pid in GRID_PATTERN_IDS:
            self._register(f"grids/{pid}", "grids", self._make_pattern_row(pid))
        self._register("grids/sq-cover-perfect", "grids", self._row_sq_cover_perfect)
        self._register("window/king-lld-4x4", "window", self._row_king_window)
        self._register("declared/out-of-desk-scope", "declared", self._row_declared)

    def _make_table_row(self, name, kind, n, want):
        def row():
            res = self._solve(f"hypercube:{n}", kind)
            got = f"{res.optimal_size} certified={res.certified}"
            return f"{want} certified=True", got, res.certified and res.optimal_size == want, \
                f"nodes={res.nodes_explored}"
        return row

    def _row_f3_equivalence(self):
        res = classes_equivalent_on(hypercube(3), CodeClass("id", 1), CodeClass("lid", 1),
                                    sample=300)
        ok = res.status == "equivalent" and res.exhaustive
        return "equivalent (exhaustive)", f"{res.status} (exhaustive={res.exhaustive})", ok, \
            f"codes checked={res.checked}"

    def _make_explicit_row(self, cid):
        def row():
            ec = constructions.explicit(cid)  # verifies the claimed class on load
            ok = len(ec.code) == ec.entry.size
            return f"verifies {ec.entry.klass}, size {ec.entry.size}", \
                f"valid, size {len(ec.code)}", ok, ""
        return row

    def _row_f6_induced_paths(self):
        # The published structural claim about this word set.  It does not
        # hold of the printed words: 001101 is adjacent to both 011101 and
        # 101101, merging two of the five intended paths into one 6-vertex
        # component.  The headline claim (size-15 local identifying code in
        # F^6) is unaffected and is checked by the row above; this row is
        # expected red and documents the discrepancy.
        ec = constructions.explicit("f6-lid15")
        shape = sorted(_induced_components(ec.code))
        ok = shape == [(3, 2)] * 5
        return "5 induced components, each 3 vertices / 2 edges", \
            f"components (vertices, edges): {shape}", ok, \
            "structural claim fails on the printed words; code itself verifies"

    def _row_hamming_partition(self):
        code = constructions.hamming(3).as_code()
        g = code.graph
        balls = g.ball_masks(1)
        union = 0
        total = 0
        for c in code:
            union |= balls[c]
            total += balls[c].bit_count()
        ok = len(code) == 16 and total == 128 and union == (1 << g.n) - 1
        return "16 words, disjoint balls exhaust 128 vertices", \
            f"{len(code)} words, ball sizes sum {total}, union {union.bit_count()}", ok, ""

    def _row_hamming_lift(self):
        code = constructions.hamming_lift(2, 2)
        rep = verify(code, CodeClass("lid", 1))
        want = bounds.hypercube_lid_upper_bound(2, 2)
        ok = rep.valid and len(code) == 8 == want
        return "size 8 local identifying code in F^5", \
            f"size {len(code)}, valid={rep.valid}", ok, ""

    def _make_lift_cover_row(self, n, want):
        def row():
            res = self._solve(f"hypercube:{n}", CodeKind.COVERING)
            lifted = constructions.lift_covering_to_lid(res.witness)
            rep = verify(lifted, CodeClass("lid", 1))
            ok = res.certified and rep.valid and len(lifted) == want == 4 * res.optimal_size
            return f"4*K({n}) = {want}, local identifying in F^{n + 2}", \
                f"size {len(lifted)}, valid={rep.valid}", ok, ""
        return row

    def _row_formula_values(self):
        got = [bounds.hypercube_lid_lower_bound(n) for n in (3, 4, 5, 9)]
        want = [4, 5, 8, 62]
        return str(want), str(got), got == want, "n=3,4,5,9"

    def _row_formula_vs_optimum(self):
        checks = []
        ok = True
        for n in (3, 4, 5):
            lb = bounds.hypercube_lid_lower_bound(n)
            res = self._solve(f"hypercube:{n}", CodeKind.LOCAL_IDENTIFYING)
            ok = ok and res.certified and lb <= res.optimal_size
            if n == 5:
                ok = ok and lb == res.optimal_size
            checks.append(f"{lb}<={res.optimal_size}")
        return "bound <= optimum (equal at n=5)", " ".join(checks), ok, ""

    def _make_k2n_row(self, n):
        def row():
            uri = f"kbipartite:2,{n}"
            got = {name: self._solve(uri, kind).optimal_size
                   for name, kind in (("id", CodeKind.IDENTIFYING),
                                      ("ld", CodeKind.LOCATING_DOMINATING),
                                      ("lid", CodeKind.LOCAL_IDENTIFYING),
                                      ("lld", CodeKind.LOCAL_LOCATING_DOMINATING))}
            want = {"id": n, "ld": n, "lid": 2, "lld": 2}
            return str(want), str(got), got == want, ""
        return row

    def _row_fig2_share(self):
        ec = constructions.explicit("fig2-cover")
        c = ec.code.graph.index_of("v2")
        s = bounds.share(ec.code, c)
        return "13/6", str(s), s == Fraction(13, 6), ""

    def _row_share_identity(self):
        rng = random.Random(self.seed)
        pool = [hypercube(2), hypercube(3), hypercube(4), cycle(7),
                graph_from_uri("path:6"), complete_bipartite(2, 3),
                graph_from_uri("torus:square:5x5")]
        bad = 0
        for _ in range(100):
            g = pool[rng.randrange(len(pool))]
            code = _random_covering_code(g, rng)
            prof = bounds.share_profile(code)
            if sum(prof.shares.values()) != Fraction(g.n):
                bad += 1
        return "sum of shares == |V| on 100 random covering codes", \
            f"{100 - bad}/100 exact", bad == 0, ""

    def _row_figure1(self):
        g = figure_graph(1)
        plain = admits(g, "id", 2)
        local = admits(g, "lid", 2)
        ec = constructions.explicit("fig1-l2id")
        ok = (not plain.admits and plain.twins is not None
              and local.admits and len(ec.code) == 5)
        twins = None
        if plain.twins:
            twins = tuple(g.labels[v] for v in plain.twins)
        return "no id@r=2 (twins), admits lid@r=2, 5-word code verifies", \
            f"id twins={twins}, lid admits={local.admits}, code valid", ok, ""

    def _row_tf_bipartite(self):
        rng = random.Random(self.seed + 1)
        cov = CodeClass("covering", 1)
        lld = CodeClass("lld", 1)
        graphs_checked = 0
        mismatches = 0
        while graphs_checked < 50:
            a = rng.randrange(1, 8)
            b = rng.randrange(1, 15 - a) if a < 14 else 1
            edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.6]
            g = Graph(a + b, edges)
            if not g.is_triangle_free():
                continue
            graphs_checked += 1
            for _ in range(10):
                bits = rng.getrandbits(g.n) or 1
                code = Code(g, bits)
                if verify(code, cov).valid != verify(code, lld).valid:
                    mismatches += 1
        return "covering == lld on 50 random bipartite graphs x 10 codes", \
            f"{mismatches} mismatches", mismatches == 0, ""

    def _row_tf_tori(self):
        rng = random.Random(self.seed + 2)
        cov = CodeClass("covering", 1)
        lld = CodeClass("lld", 1)
        mismatches = 0
        for uri in ("torus:square:10x10", "torus:hex:8x6", "torus:hex:16x12"):
            g = graph_from_uri(uri)
            if not g.is_triangle_free():
                return "triangle-free tori", f"{uri} has a triangle", False, ""
            for _ in range(40):
                bits = rng.getrandbits(g.n) or 1
                code = Code(g, bits)
                if verify(code, cov).valid != verify(code, lld).valid:
                    mismatches += 1
        return "covering == lld on square and hexagonal tori", \
            f"{mismatches} mismatches", mismatches == 0, ""

    def _row_tf_cycle6(self):
        res = classes_equivalent_on(cycle(6), CodeClass("covering", 1), CodeClass("lld", 1),
                                    sample=100)
        ok = res.status == "equivalent" and res.exhaustive
        return "equivalent (exhaustive)", res.status, ok, f"codes checked={res.checked}"

    def _row_dimlift(self):
        rng = random.Random(self.seed + 3)
        g4 = hypercube(4)
        lid = CodeClass("lid", 1)
        found = 0
        mism = 0
        pred_false = 0
        attempts = 0
        while found < 200 and attempts < 100_000:
            attempts += 1
            bits = rng.getrandbits(16) or 1
            code = Code(g4, bits)
            if not verify(code, lid).valid:
                continue
            found += 1
            pred = constructions.dimension_lift_valid(code)
            real = verify(constructions.dimension_lift(code), lid).valid
            if pred != real:
                mism += 1
            if not pred:
                pred_false += 1
        ok = found == 200 and mism == 0
        return "predicate == lifted validity on 200 random lid codes in F^4", \
            f"{found} codes, {mism} mismatches", ok, f"{pred_false} with an isolated codeword"

    def _make_pattern_row(self, pid):
        def row():
            bp = BUILTIN_PATTERNS[pid]
            pat = bp.pattern
            ok = pat.density == bp.density
            checks = []
            for scale in (1, 2):
                px, py = bp.base_torus[0] * scale, bp.base_torus[1] * scale
                code = pat.to_torus_code(px, py)
                rep = verify(code, bp.klass)
                exact = len(code) * pat.det == len(pat.residues) * px * py
                ok = ok and rep.valid and exact
                checks.append(f"{px}x{py}:valid={rep.valid}")
            note = ""
            if bp.derived:
                regen = pattern_search(pat.family, pat.v1, pat.v2,
                                       len(pat.residues), bp.klass)
                ok = ok and regen is not None and regen.residues == pat.residues
                note = "regenerated by search"
            return f"density {bp.density}, {bp.klass} on two torus scales", \
                " ".join(checks), ok, note
        return row

    def _row_sq_cover_perfect(self):
        bp = BUILTIN_PATTERNS["sq-cover-1/5"]
        code = bp.pattern.to_torus_code(10, 10)
        balls = code.graph.ball_masks(1)
        counts = {(balls[v] & code.bits).bit_count() for v in range(code.graph.n)}
        ok = counts == {1} and len(code) == 20
        return "every vertex covered exactly once (20 words on 10x10)", \
            f"cover counts {sorted(counts)}, size {len(code)}", ok, ""

    def _row_king_window(self):
        bp = BUILTIN_PATTERNS["king-lld-3/16"]
        code = bp.pattern.to_torus_code(8, 8)
        rep = bounds.window_count_bound(code, 4, 3)
        implied = 3 * 64 // 16
        ok = rep.ok and implied == len(code) == 12
        return "all 4x4 windows hold >= 3 codewords; implied bound 12 attained", \
            f"ok={rep.ok}, min window {rep.min_count}, size {len(code)}", ok, ""

    def _row_declared(self):
        return "declared out of desk scope", "declared out of desk scope", True, \
            "; ".join(OUT_OF_DESK_SCOPE)


def _random_covering_code(g: Graph, rng: random.Random) -> Code:
    bits = rng.getrandbits(g.n)
    balls = g.ball_masks(1)
    for v in range(g.n):
        if balls[v] & bits == 0:
            bits |= 1 << v
    return Code(g, bits)


def _induced_components(code: Code):
    """(vertex, edge) counts of the components induced by the codewords."""
    g = code.graph
    members = list(code)
    left = set(members)
    comps = []
    while left:
        start = min(left)
        stack = [start]
        seen = {start}
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u in left and u not in seen:
                    seen.add(u)
                    stack.append(u)
        left -= seen
        ne = sum(1 for u in seen for w in g.neighbors(u) if w in seen) // 2
        comps.append((len(seen), ne))
    return comps
