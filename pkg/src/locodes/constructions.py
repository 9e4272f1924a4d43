"""Explicit codes in binary hypercubes: perfect codes, direct sums, lifts.

Hypercube vertices are indexed by their binary words, so a word and its
vertex id coincide and XOR of ids is coordinatewise addition.  The direct
sum of a code in F^a with one in F^b concatenates words (first operand in
the high bits) and lives in F^(a+b).

The binary Hamming code of order s has length 2^s - 1; fixing its
parity-check columns to the s-bit expansions of 1..2^s-1 in increasing
order pins down one concrete codeword set, whose closed 1-balls partition
the whole hypercube.  Summing it with a full space F^k (k >= 2) gives a
local identifying code: every codeword of the sum is covered at least
three times, every vertex at least once, and a codeword covered three
times has a unique I-set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Code, CodeClass, CodeKind, verify
from .graphs import Graph, graph_from_uri, hypercube


class ConstructionError(ValueError):
    pass


class LinearCode:
    """A binary linear code given by generator words (ints)."""

    __slots__ = ("length", "generators", "_echelon")

    def __init__(self, length: int, generators):
        self.length = length
        gens = tuple(int(g) for g in generators)
        if any(g >> length for g in gens):
            raise ConstructionError("generator word longer than code length")
        ech = {}
        for g in gens:
            cur = g
            while cur:
                lead = cur.bit_length() - 1
                if lead in ech:
                    cur ^= ech[lead]
                else:
                    ech[lead] = cur
                    break
            else:
                raise ConstructionError("generators are linearly dependent")
        self.generators = gens
        self._echelon = ech

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def contains(self, word: int) -> bool:
        cur = word
        while cur:
            row = self._echelon.get(cur.bit_length() - 1)
            if row is None:
                return False
            cur ^= row
        return True

    def words(self) -> list:
        span = [0]
        for g in self.generators:
            span += [w ^ g for w in span]
        return sorted(span)

    def direct_sum(self, other: "LinearCode") -> "LinearCode":
        gens = tuple(g << other.length for g in self.generators) + other.generators
        return LinearCode(self.length + other.length, gens)

    def as_code(self, graph: Graph | None = None) -> Code:
        if graph is None:
            graph = hypercube(self.length)
        elif graph.meta.get("dim") != self.length:
            raise ConstructionError("graph dimension does not match code length")
        return Code.from_indices(graph, self.words())

    def __repr__(self):
        return f"<LinearCode [{self.length},{self.dimension}]>"


def hamming(s: int) -> LinearCode:
    """Binary Hamming code of length 2^s - 1 and dimension 2^s - 1 - s."""
    if s < 2:
        raise ConstructionError("Hamming codes need s >= 2")
    n = (1 << s) - 1
    gens = []
    for t in range(n):
        col = t + 1
        if col & (col - 1) == 0:
            continue  # parity position
        word = 1 << t
        b = 0
        while (1 << b) <= col:
            if col & (1 << b):
                word |= 1 << ((1 << b) - 1)
            b += 1
        gens.append(word)
    return LinearCode(n, gens)


def _hypercube_dim(code: Code) -> int:
    dim = code.graph.meta.get("dim")
    if code.graph.family != "hypercube" or dim is None:
        raise ConstructionError("operation needs a code bound to a hypercube")
    return dim


def full_space(k: int) -> Code:
    """The whole vertex set of F^k as a code."""
    if k < 1:
        raise ConstructionError("dimension must be >= 1")
    g = hypercube(k)
    return Code(g, (1 << g.n) - 1)


def direct_sum(c1: Code, c2: Code) -> Code:
    """Concatenation code {(x, y)} in F^(a+b); first operand takes the high bits."""
    a = _hypercube_dim(c1)
    b = _hypercube_dim(c2)
    g = hypercube(a + b)
    bits = 0
    for x in c1:
        base = x << b
        for y in c2:
            bits |= 1 << (base | y)
    return Code(g, bits)


def hamming_lift(s: int, k: int) -> Code:
    """Hamming code summed with F^k: a linear local identifying code in
    F^(2^s - 1 + k) of size 2^(2^s + k - s - 1), for s, k >= 2."""
    if s < 2 or k < 2:
        raise ConstructionError("hamming_lift needs s >= 2 and k >= 2")
    unit = LinearCode(k, tuple(1 << i for i in range(k)))
    return hamming(s).direct_sum(unit).as_code()


def lift_covering_to_lid(code: Code) -> Code:
    """F^2 (+) C for a covering code C in F^n: a local identifying code in
    F^(n+2) of four times the size."""
    _hypercube_dim(code)
    if not verify(code, CodeClass(CodeKind.COVERING, 1)).valid:
        raise ConstructionError("input code is not covering")
    return direct_sum(full_space(2), code)


def dimension_lift(code: Code) -> Code:
    """F (+) C: both parity layers of the code, one dimension up."""
    _hypercube_dim(code)
    return direct_sum(full_space(1), code)


def dimension_lift_valid(code: Code) -> bool:
    """Whether F (+) C stays local identifying: true exactly when every
    codeword of the local identifying code C is covered at least twice."""
    if not verify(code, CodeClass(CodeKind.LOCAL_IDENTIFYING, 1)).valid:
        raise ConstructionError("input code is not local identifying")
    balls = code.graph.ball_masks(1)
    return all((balls[c] & code.bits).bit_count() >= 2 for c in code)


# -- explicit code registry --------------------------------------------------


@dataclass(frozen=True)
class ExplicitEntry:
    code_id: str
    graph_uri: str
    members: tuple
    klass: CodeClass
    size: int


@dataclass(frozen=True)
class ExplicitCode:
    entry: ExplicitEntry
    code: Code


EXPLICIT_REGISTRY = {
    e.code_id: e
    for e in (
        ExplicitEntry("f2-lid", "hypercube:2", ("00", "11"),
                      CodeClass(CodeKind.LOCAL_IDENTIFYING, 1), 2),
        ExplicitEntry("f4-lid6", "hypercube:4",
                      ("0000", "0100", "0010", "0111", "1111", "1101"),
                      CodeClass(CodeKind.LOCAL_IDENTIFYING, 1), 6),
        ExplicitEntry("f6-lid15", "hypercube:6",
                      ("100000", "010000", "110000",
                       "001100", "001110", "001101",
                       "000011", "100011", "010011",
                       "111110", "111010", "110110",
                       "111101", "011101", "101101"),
                      CodeClass(CodeKind.LOCAL_IDENTIFYING, 1), 15),
        ExplicitEntry("fig1-l2id", "fig:1", ("v1", "v2", "v3", "v4", "v5"),
                      CodeClass(CodeKind.LOCAL_IDENTIFYING, 2), 5),
        ExplicitEntry("fig2-cover", "fig:2", ("v1", "v2", "v3", "v4"),
                      CodeClass(CodeKind.COVERING, 1), 4),
    )
}


def explicit(code_id: str) -> ExplicitCode:
    """Look up a registry code; the claimed class is re-verified on load."""
    try:
        entry = EXPLICIT_REGISTRY[code_id]
    except KeyError:
        raise ConstructionError(f"unknown explicit code {code_id!r}") from None
    graph = graph_from_uri(entry.graph_uri)
    code = Code.from_labels(graph, entry.members)
    if len(code) != entry.size:
        raise ConstructionError(f"{code_id}: registry size mismatch")
    report = verify(code, entry.klass)
    if not report.valid:
        raise ConstructionError(f"{code_id}: fails its claimed class {entry.klass}: {report.failure}")
    return ExplicitCode(entry, code)
