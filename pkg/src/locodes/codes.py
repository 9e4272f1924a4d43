"""Codes in graphs and verification of six covering-code classes.

A code is a non-empty vertex subset of a fixed graph.  The I-set of a
vertex v with respect to a code C at radius r is ``N_r[v] & C``: the
codewords within distance r of v.  Two vertices are r-separated when their
I-sets differ.  The classes:

* covering: every I-set is non-empty (domination)
* total: every vertex has a codeword in its open r-ball
* id: covering and every vertex pair separated
* ld: covering and every non-codeword pair separated
* lid: covering and every adjacent pair separated
* lld: covering and every adjacent non-codeword pair separated

Verification returns a report with a re-checkable witness on failure: the
smallest uncovered vertex, or the lexicographically smallest unseparated
pair together with the shared I-set.  Pairs at distance above 2r are never
checked for the non-local classes; once covering holds they are separated
automatically because their balls are disjoint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .bitset import iter_bits, mask_of
from .graphs import Graph


class CodeError(ValueError):
    pass


class EmptyCodeError(CodeError):
    pass


class CodeKind(Enum):
    COVERING = "covering"
    TOTAL_DOMINATING = "total"
    IDENTIFYING = "id"
    LOCATING_DOMINATING = "ld"
    LOCAL_IDENTIFYING = "lid"
    LOCAL_LOCATING_DOMINATING = "lld"

    @property
    def separates_pairs(self) -> bool:
        return self in (CodeKind.IDENTIFYING, CodeKind.LOCATING_DOMINATING,
                        CodeKind.LOCAL_IDENTIFYING, CodeKind.LOCAL_LOCATING_DOMINATING)

    @property
    def adjacent_pairs_only(self) -> bool:
        return self in (CodeKind.LOCAL_IDENTIFYING, CodeKind.LOCAL_LOCATING_DOMINATING)

    @property
    def noncodewords_only(self) -> bool:
        return self in (CodeKind.LOCATING_DOMINATING, CodeKind.LOCAL_LOCATING_DOMINATING)


_KIND_ALIASES = {
    "cover": CodeKind.COVERING,
    "covering": CodeKind.COVERING,
    "dominating": CodeKind.COVERING,
    "total": CodeKind.TOTAL_DOMINATING,
    "td": CodeKind.TOTAL_DOMINATING,
    "total-dominating": CodeKind.TOTAL_DOMINATING,
    "id": CodeKind.IDENTIFYING,
    "identifying": CodeKind.IDENTIFYING,
    "ld": CodeKind.LOCATING_DOMINATING,
    "locating-dominating": CodeKind.LOCATING_DOMINATING,
    "lid": CodeKind.LOCAL_IDENTIFYING,
    "local-identifying": CodeKind.LOCAL_IDENTIFYING,
    "lld": CodeKind.LOCAL_LOCATING_DOMINATING,
    "local-locating-dominating": CodeKind.LOCAL_LOCATING_DOMINATING,
}


def parse_kind(name) -> CodeKind:
    if isinstance(name, CodeKind):
        return name
    try:
        return _KIND_ALIASES[str(name).strip().lower()]
    except KeyError:
        raise CodeError(f"unknown code class {name!r}") from None


@dataclass(frozen=True)
class CodeClass:
    kind: CodeKind
    r: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", parse_kind(self.kind))
        if not isinstance(self.r, int) or self.r < 1:
            raise CodeError("radius must be an integer >= 1")

    def __str__(self):
        return f"{self.kind.value}@r={self.r}"


class Code:
    """A vertex subset bound to a specific graph, stored as a bitmask."""

    __slots__ = ("graph", "bits")

    def __init__(self, graph: Graph, bits: int):
        if bits < 0 or bits >> graph.n:
            raise CodeError("code bits outside the graph's vertex range")
        self.graph = graph
        self.bits = bits

    @classmethod
    def from_indices(cls, graph: Graph, indices) -> "Code":
        return cls(graph, mask_of(indices))

    @classmethod
    def from_labels(cls, graph: Graph, labels) -> "Code":
        return cls(graph, mask_of(graph.index_of(str(lab).strip()) for lab in labels))

    def members(self) -> tuple:
        return tuple(iter_bits(self.bits))

    def labels(self) -> list:
        return [self.graph.labels[v] for v in iter_bits(self.bits)]

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool((self.bits >> v) & 1)

    def __iter__(self):
        return iter_bits(self.bits)

    def __eq__(self, other):
        return isinstance(other, Code) and other.graph is self.graph and other.bits == self.bits

    def __hash__(self):
        return hash((id(self.graph), self.bits))

    def __repr__(self):
        shown = ",".join(self.labels()[:8])
        more = "..." if len(self) > 8 else ""
        return f"<Code |C|={len(self)} {{{shown}{more}}}>"


# -- witnesses and reports -------------------------------------------------


@dataclass(frozen=True)
class UncoveredVertex:
    vertex: int


@dataclass(frozen=True)
class UnseparatedPair:
    u: int
    v: int
    shared_iset: tuple


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    klass: CodeClass
    failure: UncoveredVertex | UnseparatedPair | None = None

    def __bool__(self):
        return self.valid


def iset_mask(code: Code, v: int, r: int = 1) -> int:
    return code.graph.ball_masks(r)[v] & code.bits


def iset(code: Code, v: int, r: int = 1) -> frozenset:
    """I-set of v: the codewords within distance r."""
    if not 0 <= v < code.graph.n:
        raise CodeError(f"vertex {v} out of range")
    return frozenset(iter_bits(iset_mask(code, v, r)))


def verify(code: Code, klass: CodeClass) -> VerificationReport:
    """Check the class condition, returning the smallest witness on failure."""
    if code.bits == 0:
        raise EmptyCodeError("codes must be non-empty")
    g = code.graph
    C = code.bits
    r = klass.r
    kind = klass.kind
    balls = g.ball_masks(r)

    # coverage leg first; separation witnesses are only sound afterwards
    if kind is CodeKind.TOTAL_DOMINATING:
        for v in range(g.n):
            if (balls[v] & ~(1 << v)) & C == 0:
                return VerificationReport(False, klass, UncoveredVertex(v))
        return VerificationReport(True, klass)

    for v in range(g.n):
        if balls[v] & C == 0:
            return VerificationReport(False, klass, UncoveredVertex(v))

    if not kind.separates_pairs:
        return VerificationReport(True, klass)

    skip_codewords = kind.noncodewords_only
    if kind.adjacent_pairs_only:
        pairs = g.edges()
    else:
        pairs = _near_pairs(g, 2 * r)
    for u, v in pairs:
        if skip_codewords and ((C >> u) & 1 or (C >> v) & 1):
            continue
        if (balls[u] ^ balls[v]) & C == 0:
            shared = tuple(iter_bits(balls[u] & C))
            return VerificationReport(False, klass, UnseparatedPair(u, v, shared))
    return VerificationReport(True, klass)


def _near_pairs(g: Graph, radius: int):
    """Pairs (u, v), u < v, at distance <= radius, in lexicographic order."""
    near = g.ball_masks(radius)
    for u in range(g.n):
        for off in iter_bits(near[u] >> (u + 1)):
            yield u, u + 1 + off


def witness_violates(code: Code, klass: CodeClass, report: VerificationReport) -> bool:
    """Re-check that a failure witness genuinely breaks the class condition."""
    if report.valid or report.failure is None:
        return False
    g, C, r = code.graph, code.bits, klass.r
    balls = g.ball_masks(r)
    f = report.failure
    if isinstance(f, UncoveredVertex):
        ball = balls[f.vertex]
        if klass.kind is CodeKind.TOTAL_DOMINATING:
            ball &= ~(1 << f.vertex)
        return ball & C == 0
    if isinstance(f, UnseparatedPair):
        if balls[f.u] & C != balls[f.v] & C:
            return False
        if klass.kind.adjacent_pairs_only and not (g.adjacency_mask(f.u) >> f.v) & 1:
            return False
        if klass.kind.noncodewords_only and ((C >> f.u) & 1 or (C >> f.v) & 1):
            return False
        return balls[f.u] & C == mask_of(f.shared_iset)
    return False


# -- admissibility ----------------------------------------------------------


@dataclass(frozen=True)
class AdmitsReport:
    admits: bool
    twins: tuple | None = None

    def __bool__(self):
        return self.admits


def admits(graph: Graph, kind, r: int = 1) -> AdmitsReport:
    """Whether the graph admits an (r-)identifying code of the given kind.

    The criterion is twin-freeness of closed r-balls: over all pairs for
    ``id``, over adjacent pairs only for ``lid``.  Returns the smallest
    twin pair when the answer is no.
    """
    kind = parse_kind(kind)
    if kind not in (CodeKind.IDENTIFYING, CodeKind.LOCAL_IDENTIFYING):
        raise CodeError("admissibility is only non-trivial for id and lid")
    balls = graph.ball_masks(r)
    if kind is CodeKind.LOCAL_IDENTIFYING:
        for u, v in graph.edges():
            if balls[u] == balls[v]:
                return AdmitsReport(False, (u, v))
    else:
        # twins share their balls, hence lie within distance r of each other
        for u in range(graph.n):
            for off in iter_bits(balls[u] >> (u + 1)):
                v = u + 1 + off
                if balls[u] == balls[v]:
                    return AdmitsReport(False, (u, v))
    return AdmitsReport(True)


# -- class equivalence on a fixed graph -------------------------------------


@dataclass(frozen=True)
class EquivalenceResult:
    status: str  # "equivalent" | "counterexample" | "inconclusive"
    exhaustive: bool
    checked: int
    counterexample: Code | None = None

    def __bool__(self):
        return self.status == "equivalent"


def classes_equivalent_on(graph: Graph, a: CodeClass, b: CodeClass,
                          sample: int = 200_000, seed: int = 0) -> EquivalenceResult:
    """Test whether two classes coincide on this graph.

    Exhausts all non-empty codes when 2^n - 1 fits in the iteration budget
    (and n <= 25); otherwise samples random codes.  A sampling run that
    finds no counterexample is reported as inconclusive, never as proven
    equivalence.
    """
    if a.r != b.r:
        raise CodeError("equivalence comparison needs matching radii")
    n = graph.n
    total = (1 << n) - 1 if n <= 25 else None
    if total is not None and total <= sample:
        for bits in range(1, total + 1):
            code = Code(graph, bits)
            if verify(code, a).valid != verify(code, b).valid:
                return EquivalenceResult("counterexample", True, bits, code)
        return EquivalenceResult("equivalent", True, total)
    rng = random.Random(seed)
    for i in range(sample):
        bits = rng.getrandbits(n)
        if bits == 0:
            bits = 1 << rng.randrange(n)
        code = Code(graph, bits)
        if verify(code, a).valid != verify(code, b).valid:
            return EquivalenceResult("counterexample", False, i + 1, code)
    return EquivalenceResult("inconclusive", False, sample)
