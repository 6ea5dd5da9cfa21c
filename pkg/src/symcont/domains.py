"""Exactly representable subsets of the real line.

Two flavors of domain exist:

* enumerable point sets (finite lists, integer windows, reciprocal families,
  truncated rationals) whose members can be listed exactly, and
* interval unions, including staircases, whose members form a continuum and
  are handled analytically or through exact grid sampling.

``scale_complete`` marks domains whose enumerated model is the whole set:
nothing exists below the smallest listed gap, so a positive minimum gap proves
uniform statements outright. Reciprocal families, truncated rationals, and
staircases are resolution-limited models of infinite families; they are not
scale complete, and anything established on them carries truncation scope.
"""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InapplicableError
from .exactnum import SQRT2, ZERO, QuadExt, as_quadext


def exact_floor(x: QuadExt) -> int:
    """Largest integer <= x, decided exactly (float is only a starting guess)."""
    n = math.floor(float(x))
    while QuadExt.of(n + 1) <= x:
        n += 1
    while QuadExt.of(n) > x:
        n -= 1
    return n


def exact_ceil(x: QuadExt) -> int:
    return -exact_floor(-x)


@dataclass(frozen=True)
class Enumeration:
    points: tuple[QuadExt, ...]
    truncated: bool


class Domain:
    """Base interface: exact membership plus (when possible) exact listing."""

    scale_complete = False

    @property
    def enumerable(self) -> bool:
        return True

    def contains(self, x: QuadExt) -> bool:
        raise NotImplementedError

    def enumerate(self, limit: int) -> Enumeration:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def min_gap(self, limit: int) -> QuadExt | None:
        """Smallest adjacent difference among the first `limit` points.

        Returns None when fewer than two points exist. For non-enumerable
        domains the question is not meaningful and raises.
        """
        if not self.enumerable:
            raise InapplicableError(f"min_gap undefined for {self.describe()}")
        pts = self.enumerate(limit).points
        if len(pts) < 2:
            return None
        return min(b - a for a, b in itertools.pairwise(pts))


@dataclass(frozen=True)
class FinitePoints(Domain):
    points: tuple[QuadExt, ...]

    scale_complete = True

    def __post_init__(self) -> None:
        pts = tuple(sorted({as_quadext(p) for p in self.points}))
        object.__setattr__(self, "points", pts)

    @staticmethod
    def of(*points) -> "FinitePoints":
        return FinitePoints(points)

    def contains(self, x: QuadExt) -> bool:
        lo, hi = 0, len(self.points)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.points[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self.points) and self.points[lo] == x

    def enumerate(self, limit: int) -> Enumeration:
        return Enumeration(self.points[:limit], truncated=len(self.points) > limit)

    def describe(self) -> str:
        return f"finite set of {len(self.points)} points"


@dataclass(frozen=True)
class IntegerWindow(Domain):
    lo: int
    hi: int

    scale_complete = True

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise DomainError(f"empty integer window [{self.lo}, {self.hi}]")

    def contains(self, x: QuadExt) -> bool:
        return (
            x.irr == 0
            and x.rat.denominator == 1
            and self.lo <= x.rat.numerator <= self.hi
        )

    def enumerate(self, limit: int) -> Enumeration:
        count = self.hi - self.lo + 1
        pts = tuple(QuadExt.of(self.lo + i) for i in range(min(count, limit)))
        return Enumeration(pts, truncated=count > limit)

    def describe(self) -> str:
        return f"integers in [{self.lo}, {self.hi}]"


@lru_cache(maxsize=None)
def _odd_primes_up_to(n: int) -> tuple[int, ...]:
    if n < 3:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return tuple(p for p in range(3, n + 1) if sieve[p])


@lru_cache(maxsize=None)
def _odd_prime_set(n: int) -> frozenset[int]:
    return frozenset(_odd_primes_up_to(n))


@dataclass(frozen=True)
class OddPrimeReciprocals(Domain):
    """{1/p : p an odd prime <= max_prime}, optionally together with 0."""

    max_prime: int
    with_zero: bool = True

    def _primes(self) -> tuple[int, ...]:
        return _odd_primes_up_to(self.max_prime)

    def contains(self, x: QuadExt) -> bool:
        if x == ZERO:
            return self.with_zero
        if x.irr != 0 or x.rat.numerator != 1:
            return False
        return x.rat.denominator in _odd_prime_set(self.max_prime)

    def enumerate(self, limit: int) -> Enumeration:
        pts: list[QuadExt] = [ZERO] if self.with_zero else []
        pts.extend(QuadExt.of(Fraction(1, p)) for p in reversed(self._primes()))
        return Enumeration(tuple(pts[:limit]), truncated=len(pts) > limit)

    def describe(self) -> str:
        base = f"reciprocals of odd primes up to {self.max_prime}"
        return base + (", with 0" if self.with_zero else "")


@dataclass(frozen=True)
class NaturalReciprocals(Domain):
    """{1/n : 1 <= n <= max_n}, optionally together with 0."""

    max_n: int
    with_zero: bool = True

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise DomainError("max_n must be at least 1")

    def contains(self, x: QuadExt) -> bool:
        if x == ZERO:
            return self.with_zero
        return x.irr == 0 and x.rat.numerator == 1 and 1 <= x.rat.denominator <= self.max_n

    def enumerate(self, limit: int) -> Enumeration:
        pts: list[QuadExt] = [ZERO] if self.with_zero else []
        pts.extend(QuadExt.of(Fraction(1, n)) for n in range(self.max_n, 0, -1))
        return Enumeration(tuple(pts[:limit]), truncated=len(pts) > limit)

    def describe(self) -> str:
        base = f"reciprocals of naturals up to {self.max_n}"
        return base + (", with 0" if self.with_zero else "")


@dataclass(frozen=True)
class TruncatedRationals(Domain):
    """Reduced rationals p/q with q <= max_denominator inside [lo, hi].

    When adjoin_sqrt2 is set and sqrt(2) lies in range, that single irrational
    point is a member as well.
    """

    max_denominator: int
    lo: QuadExt
    hi: QuadExt
    adjoin_sqrt2: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_quadext(self.lo))
        object.__setattr__(self, "hi", as_quadext(self.hi))
        if self.max_denominator < 1:
            raise DomainError("max_denominator must be at least 1")
        if self.lo > self.hi:
            raise DomainError("empty range for truncated rationals")

    def _sqrt2_in_range(self) -> bool:
        return self.adjoin_sqrt2 and self.lo <= SQRT2 <= self.hi

    def contains(self, x: QuadExt) -> bool:
        if not (self.lo <= x <= self.hi):
            return False
        if x.irr == 0:
            return x.rat.denominator <= self.max_denominator
        return self._sqrt2_in_range() and x == SQRT2

    def enumerate(self, limit: int) -> Enumeration:
        pts: list[QuadExt] = [SQRT2] if self._sqrt2_in_range() else []
        for q in range(1, self.max_denominator + 1):
            p_lo = exact_ceil(self.lo * q)
            p_hi = exact_floor(self.hi * q)
            for p in range(p_lo, p_hi + 1):
                if math.gcd(p, q) == 1:
                    pts.append(QuadExt(Fraction(p, q)))
        pts.sort()
        return Enumeration(tuple(pts[:limit]), truncated=len(pts) > limit)

    def describe(self) -> str:
        base = (
            f"rationals with denominator <= {self.max_denominator}"
            f" in [{self.lo}, {self.hi}]"
        )
        return base + (" plus sqrt2" if self.adjoin_sqrt2 else "")


@dataclass(frozen=True)
class IntervalPiece:
    lo: QuadExt
    hi: QuadExt
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_quadext(self.lo))
        object.__setattr__(self, "hi", as_quadext(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"piece with lo > hi: {self.describe()}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise DomainError("degenerate piece must be closed on both sides")

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def length(self) -> QuadExt:
        return self.hi - self.lo

    def contains(self, x: QuadExt) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def grid(self, exponent: int) -> list[QuadExt]:
        """Exact sample grid: 2**exponent + 1 equispaced points including the
        closed endpoints; an open endpoint is replaced by a run of points
        approaching it at dyadic fractions of the length."""
        if self.is_degenerate:
            return [self.lo]
        n = 2**exponent
        step = self.length / n
        pts = [self.lo + step * i for i in range(n + 1)]
        if not self.lo_closed:
            pts = pts[1:] + [self.lo + self.length / 2**m for m in range(1, 11)]
        if not self.hi_closed:
            pts = [p for p in pts if p != self.hi]
            pts += [self.hi - self.length / 2**m for m in range(1, 11)]
        return sorted(set(pts))

    def describe(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class IntervalUnion(Domain):
    pieces: tuple[IntervalPiece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise DomainError("interval union needs at least one piece")
        pieces = tuple(sorted(self.pieces, key=lambda p: (p.lo, p.hi)))
        for prev, nxt in itertools.pairwise(pieces):
            if prev.hi > nxt.lo or (
                prev.hi == nxt.lo and prev.hi_closed and nxt.lo_closed
            ):
                raise DomainError(
                    f"overlapping pieces {prev.describe()} and {nxt.describe()}"
                )
        object.__setattr__(self, "pieces", pieces)

    @property
    def enumerable(self) -> bool:
        return all(p.is_degenerate for p in self.pieces)

    @property
    def scale_complete(self) -> bool:
        return self.enumerable

    def contains(self, x: QuadExt) -> bool:
        return any(p.contains(x) for p in self.pieces)

    def enumerate(self, limit: int) -> Enumeration:
        if not self.enumerable:
            raise InapplicableError("cannot enumerate a continuum of points")
        pts = tuple(p.lo for p in self.pieces)
        return Enumeration(pts[:limit], truncated=len(pts) > limit)

    def describe(self) -> str:
        return " u ".join(p.describe() for p in self.pieces)


@dataclass(frozen=True)
class MergeResult:
    components: tuple[tuple[IntervalPiece, ...], ...]
    gaps: tuple[QuadExt, ...]
    shared_endpoint_pairs: tuple[tuple[int, int], ...]


def merge_interval_components(pieces) -> MergeResult:
    """Group pieces into maximal components whose closures chain together.

    gaps holds the distance between every pair of distinct components in
    index order; shared_endpoint_pairs records which input pieces (by their
    position in the argument) were glued across a common endpoint. Overlap
    is an error.
    """
    if not pieces:
        return MergeResult((), (), ())
    order = sorted(range(len(pieces)), key=lambda i: (pieces[i].lo, pieces[i].hi))
    for ia, ib in itertools.pairwise(order):
        a, b = pieces[ia], pieces[ib]
        if b.lo < a.hi or (b.lo == a.hi and a.hi_closed and b.lo_closed):
            raise DomainError(
                f"overlapping pieces {a.describe()} and {b.describe()}"
            )
    components: list[list[int]] = [[order[0]]]
    glued: list[tuple[int, int]] = []
    for idx in order[1:]:
        last = components[-1][-1]
        if pieces[idx].lo == pieces[last].hi:
            glued.append((last, idx))
            components[-1].append(idx)
        else:
            components.append([idx])
    comp_pieces = tuple(tuple(pieces[i] for i in comp) for comp in components)
    gaps = tuple(
        comp_pieces[j][0].lo - comp_pieces[i][-1].hi
        for i in range(len(comp_pieces))
        for j in range(i + 1, len(comp_pieces))
    )
    return MergeResult(comp_pieces, gaps, tuple(glued))


@lru_cache(maxsize=None)
def staircase_breakpoints(variant: str, blocks: int) -> tuple[Fraction, ...]:
    """Endpoints a_1 <= a_2 <= ... <= a_{2*blocks} of the staircase blocks.

    Variant A: block pair k (blocks 2k-1 and 2k) has width 1/(k+1); the gap
    after an odd-numbered block is 1/k and the gap after an even one is 1.
    Variant B: block n has width 1/(2n-1) followed by a gap of 1/(2n), so each
    gap is shorter than the block before it.
    """
    pts: list[Fraction] = []
    if variant == "A":
        pos = Fraction(1)
        for i in range(1, blocks + 1):
            k = (i + 1) // 2
            width = Fraction(1, k + 1)
            pts += [pos, pos + width]
            gap = Fraction(1, k) if i % 2 == 1 else Fraction(1)
            pos = pos + width + gap
    elif variant == "B":
        pos = Fraction(0)
        for n in range(1, blocks + 1):
            width = Fraction(1, 2 * n - 1)
            pts += [pos, pos + width]
            pos = pos + width + Fraction(1, 2 * n)
    else:
        raise DomainError(f"unknown staircase variant {variant!r}")
    return tuple(pts)


@lru_cache(maxsize=None)
def _staircase_pieces(variant: str, blocks: int) -> tuple[IntervalPiece, ...]:
    bp = staircase_breakpoints(variant, blocks)
    return tuple(
        IntervalPiece(QuadExt(bp[2 * i]), QuadExt(bp[2 * i + 1]))
        for i in range(blocks)
    )


@lru_cache(maxsize=None)
def _staircase_los(variant: str, blocks: int) -> tuple[QuadExt, ...]:
    return tuple(p.lo for p in _staircase_pieces(variant, blocks))


@dataclass(frozen=True)
class Staircase(Domain):
    """Union of closed blocks [a_{2i-1}, a_{2i}] with positive gaps between."""

    variant: str
    blocks: int

    enumerable = False

    def __post_init__(self) -> None:
        if self.variant not in ("A", "B"):
            raise DomainError(f"unknown staircase variant {self.variant!r}")
        if self.blocks < 1:
            raise DomainError("staircase needs at least one block")

    def breakpoints(self) -> tuple[Fraction, ...]:
        return staircase_breakpoints(self.variant, self.blocks)

    def block_pieces(self) -> tuple[IntervalPiece, ...]:
        return _staircase_pieces(self.variant, self.blocks)

    def gaps(self) -> tuple[Fraction, ...]:
        bp = self.breakpoints()
        return tuple(bp[2 * i + 2] - bp[2 * i + 1] for i in range(self.blocks - 1))

    def contains(self, x: QuadExt) -> bool:
        pieces = self.block_pieces()
        i = bisect.bisect_right(_staircase_los(self.variant, self.blocks), x) - 1
        return i >= 0 and pieces[i].contains(x)

    def enumerate(self, limit: int) -> Enumeration:
        raise InapplicableError("cannot enumerate a continuum of points")

    def describe(self) -> str:
        return f"staircase {self.variant} with {self.blocks} blocks"


def build_staircase(variant: str, blocks: int) -> Staircase:
    return Staircase(variant, blocks)


@dataclass(frozen=True)
class UnionOf(Domain):
    parts: tuple[Domain, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise DomainError("union needs at least one part")

    @property
    def enumerable(self) -> bool:
        return all(p.enumerable for p in self.parts)

    @property
    def scale_complete(self) -> bool:
        return all(p.scale_complete for p in self.parts)

    def contains(self, x: QuadExt) -> bool:
        return any(p.contains(x) for p in self.parts)

    def enumerate(self, limit: int) -> Enumeration:
        if not self.enumerable:
            raise InapplicableError("cannot enumerate a continuum of points")
        merged: set[QuadExt] = set()
        truncated = False
        for part in self.parts:
            en = part.enumerate(limit)
            truncated |= en.truncated
            merged.update(en.points)
        pts = tuple(sorted(merged))
        return Enumeration(pts[:limit], truncated=truncated or len(pts) > limit)

    def describe(self) -> str:
        return "union of " + "; ".join(p.describe() for p in self.parts)


@dataclass(frozen=True)
class SymmetricPair:
    """Pair (x, y) with x > y whose midpoint lies in the relevant center set."""

    x: QuadExt
    y: QuadExt

    def __post_init__(self) -> None:
        if not self.x > self.y:
            raise DomainError("symmetric pair requires x > y")

    @property
    def h(self) -> QuadExt:
        return (self.x - self.y) / 2

    @property
    def center(self) -> QuadExt:
        return (self.x + self.y) / 2

    def sort_key(self) -> tuple[QuadExt, QuadExt, QuadExt]:
        return (self.h, self.x, self.y)


@dataclass
class PairSurvey:
    pairs: list[SymmetricPair]
    candidates_checked: int
    truncated: bool


def symmetric_pairs(
    ambient: Domain,
    *,
    centers: Domain | None = None,
    delta_max: QuadExt | None = None,
    max_pairs: int,
    enum_limit: int,
) -> PairSurvey:
    """All pairs x > y from the enumerated ambient set whose midpoint lies in
    `centers` (the ambient itself by default). `delta_max` keeps only pairs
    with half-distance strictly below it; `max_pairs` bounds the number of
    candidate pairs inspected."""
    center_dom = ambient if centers is None else centers
    en = ambient.enumerate(enum_limit)
    pts = en.points
    out: list[SymmetricPair] = []
    checked = 0
    truncated = en.truncated
    width_cap = None if delta_max is None else 2 * delta_max
    for j in range(1, len(pts)):
        if truncated and checked >= max_pairs:
            break
        x = pts[j]
        for i in range(j - 1, -1, -1):
            y = pts[i]
            if width_cap is not None and x - y >= width_cap:
                break
            checked += 1
            if checked > max_pairs:
                truncated = True
                break
            if center_dom.contains((x + y) / 2):
                out.append(SymmetricPair(x, y))
        if truncated and checked > max_pairs:
            break
    out.sort(key=SymmetricPair.sort_key)
    return PairSurvey(out, checked, truncated)
