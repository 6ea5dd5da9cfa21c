"""Exactly evaluable functions on domains.

A function spec is one of:

* a bare formula (constant, identity, affine, reciprocal, monomial), applied
  wherever the function is evaluated,
* a piecewise spec mapping regions (domains) to formulas; the first region
  containing a point owns it, or
* a combination (scale, add, sub, mul, div) of other specs.

Everything evaluates inside Q(sqrt 2); no floats are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domains import Domain, FinitePoints, IntervalPiece, IntervalUnion
from .errors import ConfigurationError, DomainError
from .exactnum import ONE, QuadExt, as_quadext


class Formula:
    """Base of the closed-form atoms."""


@dataclass(frozen=True)
class Const(Formula):
    value: QuadExt

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_quadext(self.value))


@dataclass(frozen=True)
class Identity(Formula):
    pass


@dataclass(frozen=True)
class Affine(Formula):
    slope: QuadExt
    intercept: QuadExt

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", as_quadext(self.slope))
        object.__setattr__(self, "intercept", as_quadext(self.intercept))


@dataclass(frozen=True)
class Reciprocal(Formula):
    pass


@dataclass(frozen=True)
class Monomial(Formula):
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ConfigurationError("monomial degree must be at least 1")


def _qpow(x: QuadExt, n: int) -> QuadExt:
    out = ONE
    base = x
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def formula_eval(fm: Formula, x: QuadExt) -> QuadExt:
    if isinstance(fm, Const):
        return fm.value
    if isinstance(fm, Identity):
        return x
    if isinstance(fm, Affine):
        return fm.slope * x + fm.intercept
    if isinstance(fm, Reciprocal):
        if x == 0:
            raise DomainError("reciprocal evaluated at 0")
        return ONE / x
    if isinstance(fm, Monomial):
        return _qpow(x, fm.degree)
    raise ConfigurationError(f"unknown formula {fm!r}")


def formula_limit(fm: Formula, c: QuadExt) -> QuadExt | None:
    """Limit of the formula at c along its own continuous extension.

    Returns None exactly when the limit diverges (reciprocal at 0); all other
    atoms extend continuously to any point.
    """
    if isinstance(fm, Reciprocal) and c == 0:
        return None
    return formula_eval(fm, c)


def formula_describe(fm: Formula) -> str:
    if isinstance(fm, Const):
        return str(fm.value)
    if isinstance(fm, Identity):
        return "x"
    if isinstance(fm, Affine):
        return f"{fm.slope}*x + {fm.intercept}"
    if isinstance(fm, Reciprocal):
        return "1/x"
    if isinstance(fm, Monomial):
        return f"x^{fm.degree}"
    return repr(fm)


@dataclass(frozen=True)
class FuncPiece:
    region: Domain
    formula: Formula


@dataclass(frozen=True)
class Piecewise:
    pieces: tuple[FuncPiece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ConfigurationError("piecewise spec needs at least one piece")


_COMBINE_OPS = ("scale", "add", "sub", "mul", "div")


@dataclass(frozen=True)
class Combined:
    op: str
    operands: tuple["FuncSpec", ...]
    alpha: QuadExt | None = None

    def __post_init__(self) -> None:
        if self.op not in _COMBINE_OPS:
            raise ConfigurationError(f"unknown combination op {self.op!r}")
        if self.op == "scale":
            if self.alpha is None or len(self.operands) != 1:
                raise ConfigurationError("scale needs alpha and one operand")
            object.__setattr__(self, "alpha", as_quadext(self.alpha))
        elif self.op == "div":
            if len(self.operands) != 2:
                raise ConfigurationError("div needs exactly two operands")
        elif len(self.operands) < 2:
            raise ConfigurationError(f"{self.op} needs at least two operands")


FuncSpec = Formula | Piecewise | Combined


def evaluate(f: FuncSpec, x: QuadExt) -> QuadExt:
    if isinstance(f, Formula):
        return formula_eval(f, x)
    if isinstance(f, Piecewise):
        for fp in f.pieces:
            if fp.region.contains(x):
                return formula_eval(fp.formula, x)
        raise DomainError(f"{x} not covered by any piecewise region")
    if isinstance(f, Combined):
        vals = [evaluate(g, x) for g in f.operands]
        if f.op == "scale":
            return f.alpha * vals[0]
        if f.op == "add":
            out = vals[0]
            for v in vals[1:]:
                out = out + v
            return out
        if f.op == "sub":
            out = vals[0]
            for v in vals[1:]:
                out = out - v
            return out
        if f.op == "mul":
            out = vals[0]
            for v in vals[1:]:
                out = out * v
            return out
        num, den = vals
        if den == 0:
            raise DomainError("division by zero in combined spec")
        return num / den
    raise ConfigurationError(f"unknown function spec {f!r}")


def scale(f: FuncSpec, alpha) -> Combined:
    return Combined("scale", (f,), as_quadext(alpha))


def describe_function(f: FuncSpec) -> str:
    if isinstance(f, Formula):
        return formula_describe(f)
    if isinstance(f, Piecewise):
        parts = [
            f"{formula_describe(fp.formula)} on {fp.region.describe()}"
            for fp in f.pieces
        ]
        return "piecewise: " + "; ".join(parts)
    op = f.op
    if op == "scale":
        return f"{f.alpha} * ({describe_function(f.operands[0])})"
    sym = {"add": " + ", "sub": " - ", "mul": " * ", "div": " / "}[op]
    return "(" + sym.join(describe_function(g) for g in f.operands) + ")"


def piecewise_const_regions(
    f: FuncSpec,
) -> list[tuple[Domain | None, QuadExt]] | None:
    """Per-region constant values when f is piecewise constant, else None.

    A bare constant yields a single entry with region None (everywhere).
    """
    if isinstance(f, Const):
        return [(None, f.value)]
    if isinstance(f, Piecewise) and all(
        isinstance(fp.formula, Const) for fp in f.pieces
    ):
        return [(fp.region, fp.formula.value) for fp in f.pieces]
    return None


def tile_formulas(
    f: FuncSpec, pieces: tuple[IntervalPiece, ...]
) -> list[tuple[IntervalPiece, Formula]]:
    """Assign one formula to each interval piece.

    A bare formula covers every piece. A piecewise spec must own each piece
    through exactly one region: an interval-union region listing the piece
    itself, or a finite-points region holding a degenerate piece's point.
    """
    if isinstance(f, Formula):
        return [(p, f) for p in pieces]
    if not isinstance(f, Piecewise):
        raise ConfigurationError(
            "analytic interval analysis needs a bare formula or piecewise spec"
        )
    out: list[tuple[IntervalPiece, Formula]] = []
    for piece in pieces:
        owners = []
        for fp in f.pieces:
            region = fp.region
            if isinstance(region, IntervalUnion) and piece in region.pieces:
                owners.append(fp.formula)
            elif (
                isinstance(region, FinitePoints)
                and piece.is_degenerate
                and region.contains(piece.lo)
            ):
                owners.append(fp.formula)
        if len(owners) != 1:
            raise ConfigurationError(
                f"piece {piece.describe()} owned by {len(owners)} regions; need 1"
            )
        out.append((piece, owners[0]))
    return out


@dataclass(frozen=True)
class SideLimit:
    exists: bool
    value: QuadExt | None  # None with exists=True means the limit diverges


def one_sided_limits(
    f: FuncSpec, pieces: tuple[IntervalPiece, ...], c: QuadExt
) -> tuple[SideLimit, SideLimit]:
    """Closure limits of f at c along the non-degenerate pieces that end at c
    (left) and start at c (right)."""
    tiles = tile_formulas(f, pieces)
    left = right = SideLimit(False, None)
    for piece, fm in tiles:
        if piece.is_degenerate:
            continue
        if piece.hi == c:
            left = SideLimit(True, formula_limit(fm, c))
        if piece.lo == c:
            right = SideLimit(True, formula_limit(fm, c))
    return left, right


@dataclass(frozen=True)
class BoundReport:
    value: QuadExt | None
    attained_at: QuadExt | None
    unbounded: bool
    truncated: bool
    method: str


def _formula_piece_bound(
    fm: Formula, piece: IntervalPiece
) -> tuple[QuadExt | None, QuadExt | None, bool]:
    """(sup |f|, point approaching it, unbounded) on one piece, exactly."""
    if isinstance(fm, Reciprocal):
        if piece.contains(QuadExt.of(0)) or piece.lo == 0 == piece.hi:
            raise ConfigurationError("reciprocal piece contains 0")
        if piece.lo == 0 or piece.hi == 0:
            return None, None, True
    if isinstance(fm, Const):
        return abs(fm.value), piece.lo, False
    # all remaining atoms are monotone in |value| toward an endpoint on a
    # piece that avoids 0 (reciprocal) or on any bounded piece (the rest)
    cands = []
    for end in (piece.lo, piece.hi):
        val = formula_limit(fm, end)
        assert val is not None
        cands.append((abs(val), end))
    cands.sort(key=lambda t: t[0])
    best = cands[-1]
    return best[0], best[1], False


def bounded_on(f: FuncSpec, domain: Domain, *, enum_limit: int = 10**5) -> BoundReport:
    """Exact sup of |f| over the domain.

    Enumerable domains are scanned point by point; interval unions and
    staircases are bounded analytically piece by piece.
    """
    if domain.enumerable:
        en = domain.enumerate(enum_limit)
        best: QuadExt | None = None
        at: QuadExt | None = None
        for p in en.points:
            v = abs(evaluate(f, p))
            if best is None or v > best:
                best, at = v, p
        return BoundReport(best, at, False, en.truncated, "enumeration")
    pieces = _analytic_pieces(domain)
    tiles = tile_formulas(f, pieces)
    best = None
    at = None
    for piece, fm in tiles:
        val, point, unbounded = _formula_piece_bound(fm, piece)
        if unbounded:
            return BoundReport(None, None, True, False, "analytic")
        if best is None or val > best:
            best, at = val, point
    return BoundReport(best, at, False, False, "analytic")


def _analytic_pieces(domain: Domain) -> tuple[IntervalPiece, ...]:
    from .domains import Staircase

    if isinstance(domain, IntervalUnion):
        return domain.pieces
    if isinstance(domain, Staircase):
        return domain.block_pieces()
    raise ConfigurationError(f"no analytic pieces for {domain.describe()}")


def _as_affine(fm: Formula) -> Affine | None:
    if isinstance(fm, Const):
        return Affine(QuadExt.of(0), fm.value)
    if isinstance(fm, Identity):
        return Affine(ONE, QuadExt.of(0))
    if isinstance(fm, Affine):
        return fm
    if isinstance(fm, Monomial) and fm.degree == 1:
        return Affine(ONE, QuadExt.of(0))
    return None


def _sign_fixed(piece: IntervalPiece) -> bool:
    return piece.lo >= 0 or piece.hi <= 0


def sup_abs_diff(f: FuncSpec, g: FuncSpec, domain: Domain) -> QuadExt:
    """Exact sup of |f - g| over an interval union, piece by piece.

    Supported per-piece formula pairs are the ones whose difference is
    monotone on the piece, so the sup sits at an endpoint limit: affine vs
    affine (constants and the identity included), equal-degree monomials,
    monomial vs constant on a sign-fixed piece, reciprocal vs reciprocal, and
    reciprocal vs constant on a piece avoiding 0.
    """
    pieces = _analytic_pieces(domain)
    f_tiles = dict(tile_formulas(f, pieces))
    g_tiles = dict(tile_formulas(g, pieces))
    best = QuadExt.of(0)
    for piece in pieces:
        fa, ga = f_tiles[piece], g_tiles[piece]
        val = _piece_sup_diff(fa, ga, piece)
        if val > best:
            best = val
    return best


def _endpoint_sup(fa: Formula, ga: Formula, piece: IntervalPiece) -> QuadExt:
    vals = []
    for end in (piece.lo, piece.hi):
        va, vb = formula_limit(fa, end), formula_limit(ga, end)
        if va is None or vb is None:
            raise ConfigurationError("divergent endpoint in sup_abs_diff")
        vals.append(abs(va - vb))
    return max(vals)


def _piece_sup_diff(fa: Formula, ga: Formula, piece: IntervalPiece) -> QuadExt:
    if piece.is_degenerate:
        return abs(formula_eval(fa, piece.lo) - formula_eval(ga, piece.lo))
    a1, a2 = _as_affine(fa), _as_affine(ga)
    if a1 is not None and a2 is not None:
        return _endpoint_sup(fa, ga, piece)
    if isinstance(fa, Monomial) and isinstance(ga, Monomial) and fa.degree == ga.degree:
        return QuadExt.of(0)
    if isinstance(fa, Monomial) and isinstance(ga, Const) and _sign_fixed(piece):
        return _endpoint_sup(fa, ga, piece)
    if isinstance(ga, Monomial) and isinstance(fa, Const) and _sign_fixed(piece):
        return _endpoint_sup(fa, ga, piece)
    if isinstance(fa, Reciprocal) and isinstance(ga, Reciprocal):
        return QuadExt.of(0)
    recip_pair = (
        (isinstance(fa, Reciprocal) and isinstance(ga, Const))
        or (isinstance(ga, Reciprocal) and isinstance(fa, Const))
    )
    if recip_pair and piece.lo > 0:
        return _endpoint_sup(fa, ga, piece)
    if recip_pair and piece.hi < 0:
        return _endpoint_sup(fa, ga, piece)
    raise ConfigurationError(
        f"unsupported formula pair for exact sup on {piece.describe()}: "
        f"{formula_describe(fa)} vs {formula_describe(ga)}"
    )


def rational_value(x: QuadExt) -> Fraction | None:
    """The Fraction behind x when x is rational, else None."""
    return x.rat if x.irr == 0 else None
