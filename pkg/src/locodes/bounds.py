"""Exact shares and counting lower bounds.

The share of a codeword c in a covering code C is the sum, over the closed
1-ball of c, of 1/|I(u)|.  Summed over all codewords the shares add to
exactly |V|, so an upper bound alpha on every share forces |C| >= |V|/alpha.
All arithmetic is exact rational: shares on large tori sum many unit
fractions and float equality would be meaningless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitset import iter_bits
from .codes import Code, CodeError


class ShareError(CodeError):
    pass


def _covering_isets(code: Code):
    """Per-vertex I-set sizes at r=1; raises unless the code is covering."""
    balls = code.graph.ball_masks(1)
    sizes = []
    for v in range(code.graph.n):
        k = (balls[v] & code.bits).bit_count()
        if k == 0:
            raise ShareError(f"share needs a covering code; vertex {v} is uncovered")
        sizes.append(k)
    return balls, sizes


def share(code: Code, c: int) -> Fraction:
    """Exact share of codeword c."""
    if c not in code:
        raise ShareError(f"vertex {c} is not a codeword")
    balls, sizes = _covering_isets(code)
    return sum((Fraction(1, sizes[u]) for u in iter_bits(balls[c])), Fraction(0))


@dataclass(frozen=True)
class ShareProfile:
    shares: dict  # codeword -> Fraction
    max_share: Fraction
    argmax: int


def share_profile(code: Code) -> ShareProfile:
    """Shares of every codeword, computed in one covering pass."""
    if code.bits == 0:
        raise ShareError("codes must be non-empty")
    balls, sizes = _covering_isets(code)
    shares = {}
    for c in iter_bits(code.bits):
        shares[c] = sum((Fraction(1, sizes[u]) for u in iter_bits(balls[c])), Fraction(0))
    argmax = max(shares, key=lambda v: (shares[v], -v))
    return ShareProfile(shares, shares[argmax], argmax)


def max_share_lower_bound(code: Code) -> Fraction:
    """|V| / max-share: a size lower bound for any covering code whose
    shares all stay within this code's maximum share.  In particular
    len(code) >= this value must hold for the code itself."""
    prof = share_profile(code)
    return Fraction(code.graph.n) / prof.max_share


def hypercube_lid_lower_bound(n: int) -> int:
    """ceil(3 * 2^n / (3n - 2)), the share bound for local identification
    in the binary n-cube; defined for n >= 3."""
    if n < 3:
        raise ValueError("the hypercube share bound needs n >= 3")
    num = 3 << n
    den = 3 * n - 2
    return -(-num // den)


def hypercube_lid_upper_bound(s: int, k: int) -> int:
    """2^(2^s + k - s - 1): size of the lifted perfect-code construction
    in the binary (2^s + k - 1)-cube; defined for s, k >= 2."""
    if s < 2 or k < 2:
        raise ValueError("the lifted construction needs s >= 2 and k >= 2")
    return 1 << ((1 << s) + k - s - 1)


@dataclass(frozen=True)
class WindowReport:
    ok: bool
    w: int
    kmin: int
    min_count: int
    witness: tuple | None = None  # anchor (x, y) of a failing window

    def __bool__(self):
        return self.ok


def window_count_bound(code: Code, w: int, kmin: int) -> WindowReport:
    """Check that every w-by-w wrapped window of a torus holds >= kmin codewords.

    A pass implies len(code) >= kmin * px * py / w^2: tile the torus by
    translates of the window and average.  The witness is the smallest
    anchor of a deficient window.
    """
    g = code.graph
    meta = g.meta
    if "px" not in meta or "py" not in meta:
        raise CodeError("window counting needs a torus graph")
    px, py = meta["px"], meta["py"]
    if not 1 <= w <= min(px, py):
        raise ValueError("window size must be in [1, min(px, py)]")
    member = [[False] * py for _ in range(px)]
    for v in iter_bits(code.bits):
        member[v // py][v % py] = True
    best = None
    witness = None
    for x in range(px):
        for y in range(py):
            cnt = 0
            for a in range(w):
                row = member[(x + a) % px]
                for b in range(w):
                    if row[(y + b) % py]:
                        cnt += 1
            if best is None or cnt < best:
                best = cnt
                if cnt < kmin:
                    witness = witness or (x, y)
    ok = best >= kmin
    return WindowReport(ok, w, kmin, best, None if ok else witness)
