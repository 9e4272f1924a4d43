"""Lattice-periodic codes on the four infinite grids, realized on tori.

A pattern is a rank-2 sublattice of Z^2 (two period vectors with
determinant D > 0) plus a set of codeword residues in a fundamental
domain; its density is exactly |residues| / D.  Points are reduced to the
canonical domain of the lattice's lower-triangular Hermite form
(alpha, 0), (beta, gamma): the domain is [0, alpha) x [0, gamma).

A pattern can be laid onto any torus whose both axis periods lie in the
lattice (px = py = D * m always works).  With periods of at least 5 the
torus sees the same radius-2 structure as the infinite grid, so class
validity at r=1 transfers both ways; multi-scale re-verification of the
same pattern guards the transcription.

Hexagonal patterns must use lattice vectors of even coordinate sum,
because only those translations preserve the alternating vertical edge
rule.

The shipped registry holds the figure-derived patterns plus patterns
recovered by ``pattern_search``: an exhaustive scan of residue subsets of
a given size over a given lattice, verifying each candidate on a
compatible torus.  A search miss certifies only that the lattice has no
such pattern, not that the density is unachievable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .codes import Code, CodeClass, verify
from .graphs import GraphError, GridFamily, parse_family, torus


class PatternError(ValueError):
    pass


def _egcd(a: int, b: int):
    """(g, p, q) with p*a + q*b == g == gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_p, p = p, old_p - k * p
        old_q, q = q, old_q - k * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


def _hnf(v1, v2):
    """Lower-triangular Hermite basis (alpha, 0), (beta, gamma) of the
    lattice spanned by v1 and v2: alpha, gamma > 0 and 0 <= beta < alpha."""
    x1, y1 = v1
    x2, y2 = v2
    det = x1 * y2 - y1 * x2
    if det == 0:
        raise PatternError("period vectors must be linearly independent")
    g, p, q = _egcd(y1, y2)  # g > 0: y1 = y2 = 0 would zero the determinant
    alpha = abs(det) // g
    beta = (p * x1 + q * x2) % alpha
    return alpha, beta, g


@dataclass(frozen=True)
class PeriodicPattern:
    family: GridFamily
    v1: tuple
    v2: tuple
    residues: tuple  # canonical-domain cells, sorted

    def __post_init__(self):
        object.__setattr__(self, "family", parse_family(self.family))
        v1 = (int(self.v1[0]), int(self.v1[1]))
        v2 = (int(self.v2[0]), int(self.v2[1]))
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)
        if self.family is GridFamily.HEXAGONAL:
            if (v1[0] + v1[1]) % 2 or (v2[0] + v2[1]) % 2:
                raise PatternError("hexagonal period vectors need even coordinate sums")
        alpha, beta, gamma = _hnf(v1, v2)
        object.__setattr__(self, "_hnf_cache", (alpha, beta, gamma))
        reduced = sorted({self._reduce(p) for p in self.residues})
        if len(reduced) != len(self.residues):
            raise PatternError("residues collide modulo the lattice")
        object.__setattr__(self, "residues", tuple(reduced))

    @property
    def hnf(self):
        return self._hnf_cache

    @property
    def det(self) -> int:
        alpha, _, gamma = self._hnf_cache
        return alpha * gamma

    @property
    def density(self) -> Fraction:
        return Fraction(len(self.residues), self.det)

    def _reduce(self, p):
        alpha, beta, gamma = self._hnf_cache
        x, y = int(p[0]), int(p[1])
        k = y // gamma
        x -= k * beta
        return (x % alpha, y - k * gamma)

    def lattice_contains(self, p) -> bool:
        alpha, beta, gamma = self._hnf_cache
        x, y = p
        if y % gamma:
            return False
        return (x - (y // gamma) * beta) % alpha == 0

    def is_codeword(self, i: int, j: int) -> bool:
        return self._reduce((i, j)) in set(self.residues)

    def domain_cells(self):
        """Fundamental-domain cells in canonical order."""
        alpha, _, gamma = self._hnf_cache
        return [(x, y) for x in range(alpha) for y in range(gamma)]

    def compatible_torus(self, scale: int = 1):
        """Smallest torus periods (times scale) on which the pattern tiles."""
        alpha, _, gamma = self._hnf_cache
        need_even = self.family is GridFamily.HEXAGONAL

        def first_period(step, axis):
            q = step
            while True:
                p = (q, 0) if axis == 0 else (0, q)
                if q >= 5 and (not need_even or q % 2 == 0) and self.lattice_contains(p):
                    return q
                q += step

        return first_period(alpha, 0) * scale, first_period(gamma, 1) * scale

    def to_torus_code(self, px: int, py: int) -> Code:
        """Realize the pattern on a px-by-py torus; period compatibility and
        exact codeword count are enforced."""
        if not (self.lattice_contains((px, 0)) and self.lattice_contains((0, py))):
            raise PatternError(f"torus {px}x{py} is not a multiple of the pattern lattice")
        g = torus(self.family, px, py)
        residues = set(self.residues)
        bits = 0
        for i in range(px):
            base = i * py
            for j in range(py):
                if self._reduce((i, j)) in residues:
                    bits |= 1 << (base + j)
        code = Code(g, bits)
        if len(code) * self.det != len(self.residues) * px * py:
            raise PatternError("codeword count does not match the exact density")
        return code

    def __repr__(self):
        return (f"<PeriodicPattern {self.family.value} v1={self.v1} v2={self.v2} "
                f"density={self.density}>")


# -- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class BuiltinPattern:
    pattern_id: str
    pattern: PeriodicPattern
    klass: CodeClass
    base_torus: tuple
    density: Fraction
    derived: bool  # recovered by pattern_search rather than read off a figure


def _builtin(pattern_id, family, v1, v2, residues, klass, base, derived):
    pat = PeriodicPattern(family, v1, v2, tuple(residues))
    num, den = pattern_id.rsplit("-", 1)[-1].split("/")
    density = Fraction(int(num), int(den))
    if pat.density != density:
        raise PatternError(f"{pattern_id}: registry density mismatch ({pat.density})")
    return BuiltinPattern(pattern_id, pat, klass, base, density, derived)


def _registry():
    LLD = CodeClass("lld", 1)
    LID = CodeClass("lid", 1)
    COV = CodeClass("covering", 1)
    entries = [
        # figure-derived patterns
        _builtin("hex-cover-1/4", GridFamily.HEXAGONAL, (4, 0), (0, 2),
                 [(0, 0), (2, 1)], LLD, (8, 6), derived=False),
        _builtin("tri-lld-2/9", GridFamily.TRIANGULAR, (3, 0), (0, 9),
                 [(x, 3 * t) for t in range(3) for x in range(3) if (x + t) % 3 in (0, 1)],
                 LLD, (9, 9), derived=False),
        _builtin("sq-cover-1/5", GridFamily.SQUARE, (1, 2), (2, -1),
                 [(0, 0)], COV, (10, 10), derived=False),
        # patterns recovered once by pattern_search and frozen here;
        # regeneration on the same lattice is covered by tests
        _builtin("sq-lid-3/11", GridFamily.SQUARE, (11, 0), (3, 1),
                 [(0, 0), (3, 0), (6, 0)], LID, (11, 11), derived=True),
        _builtin("hex-lid-3/8", GridFamily.HEXAGONAL, (8, 0), (0, 2),
                 [(0, 0), (1, 0), (2, 0), (4, 1), (5, 1), (6, 1)],
                 LID, (8, 6), derived=True),
        _builtin("king-lld-3/16", GridFamily.KING, (4, 0), (2, 4),
                 [(0, 0), (0, 2), (2, 1)], LLD, (8, 8), derived=True),
        _builtin("king-lid-2/9", GridFamily.KING, (6, 0), (3, 3),
                 [(0, 0), (0, 2), (2, 1), (4, 1)], LID, (6, 6), derived=True),
        _builtin("tri-lid-1/4", GridFamily.TRIANGULAR, (2, 0), (0, 2),
                 [(0, 0)], LID, (6, 6), derived=True),
    ]
    return {e.pattern_id: e for e in entries}


BUILTIN_PATTERNS = _registry()


def builtin_pattern(pattern_id: str) -> BuiltinPattern:
    try:
        return BUILTIN_PATTERNS[pattern_id]
    except KeyError:
        raise PatternError(f"unknown builtin pattern {pattern_id!r}") from None


def pattern_to_torus_code(pattern: PeriodicPattern, px: int, py: int) -> Code:
    return pattern.to_torus_code(px, py)


# -- search -------------------------------------------------------------------


def pattern_search(family, v1, v2, target_count: int, klass: CodeClass):
    """First residue set of the given size (canonical order) that makes the
    lattice a valid code of the class, or None if the lattice has none.

    The determinant is capped at 24 to keep the subset enumeration exact
    and fast.
    """
    family = parse_family(family)
    probe = PeriodicPattern(family, v1, v2, ())
    det = probe.det
    if det > 24:
        raise PatternError(f"lattice determinant {det} too large for exhaustive search")
    cells = probe.domain_cells()
    if not 1 <= target_count <= len(cells):
        raise PatternError("target codeword count out of range")
    px, py = probe.compatible_torus()
    g = torus(family, px, py)
    # expand each domain cell to its torus translates once
    cell_masks = {}
    for i in range(px):
        base = i * py
        for j in range(py):
            cell = probe._reduce((i, j))
            cell_masks[cell] = cell_masks.get(cell, 0) | (1 << (base + j))
    for combo in combinations(cells, target_count):
        bits = 0
        for cell in combo:
            bits |= cell_masks[cell]
        if verify(Code(g, bits), klass).valid:
            return PeriodicPattern(family, v1, v2, combo)
    return None


def hnf_lattices(det: int, family=None):
    """All sublattices of Z^2 of the given index, as canonical Hermite bases
    (alpha, 0), (beta, gamma), alpha ascending; hexagonal lattices are
    filtered to even coordinate sums."""
    fam = parse_family(family) if family is not None else None
    out = []
    for alpha in range(1, det + 1):
        if det % alpha:
            continue
        gamma = det // alpha
        for beta in range(alpha):
            if fam is GridFamily.HEXAGONAL and (alpha % 2 or (beta + gamma) % 2):
                continue
            out.append(((alpha, 0), (beta, gamma)))
    return out


def search_lattices(family, det: int, target_count: int, klass: CodeClass):
    """Scan all index-`det` lattices in canonical order; first hit wins."""
    family = parse_family(family)
    for v1, v2 in hnf_lattices(det, family):
        found = pattern_search(family, v1, v2, target_count, klass)
        if found is not None:
            return found
    return None


# -- pattern file format --------------------------------------------------------
#
# pattern <family>
# v1 <a> <b>
# v2 <c> <d>
# r <i> <j>     (one line per residue)


def pattern_to_text(pattern: PeriodicPattern) -> str:
    lines = [f"pattern {pattern.family.value}",
             f"v1 {pattern.v1[0]} {pattern.v1[1]}",
             f"v2 {pattern.v2[0]} {pattern.v2[1]}"]
    lines += [f"r {i} {j}" for i, j in pattern.residues]
    return "\n".join(lines) + "\n"


def pattern_from_text(text: str) -> PeriodicPattern:
    family = None
    v1 = v2 = None
    residues = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "pattern" and len(parts) == 2:
                family = parse_family(parts[1])
            elif parts[0] in ("v1", "v2") and len(parts) == 3:
                vec = (int(parts[1]), int(parts[2]))
                if parts[0] == "v1":
                    v1 = vec
                else:
                    v2 = vec
            elif parts[0] == "r" and len(parts) == 3:
                residues.append((int(parts[1]), int(parts[2])))
            else:
                raise PatternError(f"line {lineno}: unrecognized pattern line {line!r}")
        except (ValueError, GraphError) as exc:
            raise PatternError(f"line {lineno}: {exc}") from None
    if family is None or v1 is None or v2 is None:
        raise PatternError("pattern file needs 'pattern', 'v1' and 'v2' lines")
    return PeriodicPattern(family, v1, v2, tuple(residues))


def read_pattern(path_) -> PeriodicPattern:
    with open(path_, "r", encoding="utf-8") as fh:
        return pattern_from_text(fh.read())


def write_pattern(pattern: PeriodicPattern, path_) -> None:
    with open(path_, "w", encoding="utf-8") as fh:
        fh.write(pattern_to_text(pattern))
