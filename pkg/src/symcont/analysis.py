"""Exact classification of continuity notions on representable domains.

Four notions are decided for a function f on a domain A:

* C    pointwise continuity on A,
* UC   uniform continuity on A,
* SC   symmetric continuity on A (f(a+h) - f(a-h) -> 0 at every a in A over
       mirror pairs that stay inside A), and
* USC  uniform symmetric continuity on A (one delta serves every valid
       symmetric pair).

Verdicts are `proven`, `refuted`, or `no_violation` (nothing found at the
probed resolution). Proofs carry certificates; refutations carry exact
witnesses. Domains that are finite truncations of infinite families get
`truncation` scope: every reported pair is a real member of the set, but the
verdict extrapolates the observed non-decay pattern past the model floor.

The refutation engine is a flat-modulus rule: compute the relevant oscillation
sup at every schedule delta at which challenges exist, and refute only when
that sup is the same positive value at the largest and the smallest effective
delta (the sup is monotone in delta, so this means it never decays before the
challenges run out). Decaying moduli never refute; empty challenge sets prove
vacuously; everything else stays `no_violation`.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

from .domains import (
    Domain,
    IntervalPiece,
    IntervalUnion,
    Staircase,
    SymmetricPair,
    merge_interval_components,
)
from .errors import ConfigurationError, DomainError, InapplicableError
from .exactnum import QuadExt, as_quadext, format_quadext
from .functions import (
    Affine,
    Const,
    Formula,
    FuncSpec,
    Identity,
    Monomial,
    Reciprocal,
    SideLimit,
    describe_function,
    evaluate,
    one_sided_limits,
    piecewise_const_regions,
    sup_abs_diff,
    tile_formulas,
)

NOTIONS = ("C", "UC", "SC", "USC")

# pair surveys on sampled continua cap the grid to keep pair counts sane
_SYM_SAMPLE_EXPONENT_CAP = 7


def default_delta_schedule() -> tuple[QuadExt, ...]:
    return tuple(QuadExt.of(Fraction(1, 2**j)) for j in range(21))


@dataclass(frozen=True)
class AnalysisConfig:
    delta_schedule: tuple[QuadExt, ...] = field(default_factory=default_delta_schedule)
    grid_exponent: int = 10
    max_pairs: int = 1_000_000
    enum_limit: int = 100_000
    seed: int = 0
    output_format: str = "text"

    def __post_init__(self) -> None:
        sched = tuple(as_quadext(d) for d in self.delta_schedule)
        if not sched:
            raise ConfigurationError("delta schedule must not be empty")
        for d in sched:
            if d.sign() <= 0:
                raise ConfigurationError("delta schedule entries must be positive")
        for a, b in zip(sched, sched[1:]):
            if not b < a:
                raise ConfigurationError("delta schedule must strictly decrease")
        object.__setattr__(self, "delta_schedule", sched)
        if self.grid_exponent < 1:
            raise ConfigurationError("grid exponent must be at least 1")
        if self.max_pairs < 0:
            raise ConfigurationError("max_pairs must be nonnegative")
        if self.enum_limit < 1:
            raise ConfigurationError("enum_limit must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ConfigurationError("output format must be text or json")


@dataclass
class Verdict:
    notion: str
    status: str  # proven | refuted | no_violation
    method: str
    scope: str  # full | truncation
    certificate: dict | None = None
    witness: dict | None = None
    resolution: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "notion": self.notion,
            "status": self.status,
            "method": self.method,
            "scope": self.scope,
            "certificate": self.certificate,
            "witness": self.witness,
            "resolution": self.resolution,
            "notes": list(self.notes),
        }


@dataclass
class OscillationResult:
    value: QuadExt | None  # None when no challenge exists below delta
    witness: tuple[QuadExt, QuadExt] | None
    challenges: int
    truncated: bool


@dataclass
class ModulusProfile:
    notion: str
    rows: list[tuple[QuadExt, OscillationResult]]
    points: int
    sampled: bool
    truncated: bool

    def to_json(self) -> dict:
        rows = []
        for delta, res in self.rows:
            rows.append(
                {
                    "delta": format_quadext(delta),
                    "omega": None if res.value is None else format_quadext(res.value),
                    "challenges": res.challenges,
                    "witness": None
                    if res.witness is None
                    else [format_quadext(res.witness[0]), format_quadext(res.witness[1])],
                }
            )
        return {
            "notion": self.notion,
            "points": self.points,
            "sampled": self.sampled,
            "truncated": self.truncated,
            "rows": rows,
        }


def _fmt(x: QuadExt | None) -> str | None:
    return None if x is None else format_quadext(x)


def _pair_json(x: QuadExt, y: QuadExt, osc: QuadExt | None = None) -> dict:
    out = {
        "x": format_quadext(x),
        "y": format_quadext(y),
        "h": format_quadext((x - y) / 2),
        "midpoint": format_quadext((x + y) / 2),
    }
    if osc is not None:
        out["osc"] = format_quadext(osc)
    return out


def _resolution(
    config: AnalysisConfig,
    *,
    points: int | None = None,
    enumeration_truncated: bool | None = None,
    sampled: bool | None = None,
    pairs_checked: int | None = None,
) -> dict:
    out = {
        "delta_max": format_quadext(config.delta_schedule[0]),
        "delta_min": format_quadext(config.delta_schedule[-1]),
        "delta_count": len(config.delta_schedule),
        "grid_exponent": config.grid_exponent,
        "enum_limit": config.enum_limit,
        "max_pairs": config.max_pairs,
    }
    if points is not None:
        out["points"] = points
    if enumeration_truncated is not None:
        out["enumeration_truncated"] = enumeration_truncated
    if sampled is not None:
        out["sampled"] = sampled
    if pairs_checked is not None:
        out["pairs_checked"] = pairs_checked
    return out


def _analytic_pieces(domain: Domain) -> tuple[IntervalPiece, ...]:
    if isinstance(domain, IntervalUnion):
        return domain.pieces
    if isinstance(domain, Staircase):
        return domain.block_pieces()
    raise InapplicableError(f"no interval pieces for {domain.describe()}")


def _probe_points(
    domain: Domain, config: AnalysisConfig, *, for_pairs: bool
) -> tuple[tuple[QuadExt, ...], bool, bool]:
    """(points, enumeration_truncated, sampled)."""
    if domain.enumerable:
        en = domain.enumerate(config.enum_limit)
        return en.points, en.truncated, False
    exponent = config.grid_exponent
    if for_pairs:
        exponent = min(exponent, _SYM_SAMPLE_EXPONENT_CAP)
    pts: set[QuadExt] = set()
    for piece in _analytic_pieces(domain):
        pts.update(piece.grid(exponent))
    return tuple(sorted(pts)), False, True


@dataclass
class _Survey:
    pairs: list[SymmetricPair]
    candidates_checked: int
    truncated: bool


def _pairs_from_points(
    pts: Sequence[QuadExt],
    center_contains: Callable[[QuadExt], bool],
    delta_max: QuadExt | None,
    max_pairs: int,
    already_truncated: bool = False,
) -> _Survey:
    out: list[SymmetricPair] = []
    checked = 0
    truncated = already_truncated
    width_cap = None if delta_max is None else 2 * delta_max
    for j in range(1, len(pts)):
        x = pts[j]
        stop = False
        for i in range(j - 1, -1, -1):
            y = pts[i]
            if width_cap is not None and x - y >= width_cap:
                break
            checked += 1
            if checked > max_pairs:
                truncated = True
                stop = True
                break
            if center_contains((x + y) / 2):
                out.append(SymmetricPair(x, y))
        if stop:
            break
    out.sort(key=SymmetricPair.sort_key)
    return _Survey(out, checked, truncated)


def _find_any_valid_pair(
    pts: Sequence[QuadExt], center_contains: Callable[[QuadExt], bool]
) -> SymmetricPair | None:
    for j in range(1, len(pts)):
        x = pts[j]
        for i in range(j - 1, -1, -1):
            y = pts[i]
            if center_contains((x + y) / 2):
                return SymmetricPair(x, y)
    return None


# ---------------------------------------------------------------------------
# oscillation computations


def sym_oscillation(
    ambient: Domain,
    f: FuncSpec,
    delta: QuadExt,
    config: AnalysisConfig | None = None,
    *,
    centers: Domain | None = None,
) -> OscillationResult:
    """sup |f(x) - f(y)| over pairs x > y in A with midpoint in `centers`
    (A itself by default) and half-distance strictly below delta."""
    config = config or AnalysisConfig()
    delta = as_quadext(delta)
    pts, en_trunc, _ = _probe_points(ambient, config, for_pairs=True)
    center_dom = centers if centers is not None else ambient
    survey = _pairs_from_points(
        pts, center_dom.contains, delta, config.max_pairs, en_trunc
    )
    val_of = {p: evaluate(f, p) for p in pts}
    best: QuadExt | None = None
    wit = None
    for pair in survey.pairs:
        osc = abs(val_of[pair.x] - val_of[pair.y])
        if best is None or osc > best:
            best, wit = osc, (pair.x, pair.y)
    return OscillationResult(best, wit, len(survey.pairs), survey.truncated)


def _lift_rationals(
    xs: Sequence[QuadExt], vs: Sequence[QuadExt]
) -> tuple[list[int], list[int], int, int] | None:
    """Integer images of rational points/values (scaled by the lcm of the
    denominators) so window scans can run on machine integers."""
    if any(x.irr != 0 for x in xs) or any(v.irr != 0 for v in vs):
        return None
    lx = lcm(*(x.rat.denominator for x in xs)) if xs else 1
    lv = lcm(*(v.rat.denominator for v in vs)) if vs else 1
    xi = [int(x.rat * lx) for x in xs]
    vi = [int(v.rat * lv) for v in vs]
    return xi, vi, lx, lv


def _window_scan_int(
    xi: list[int], vi: list[int], thr_num: int, thr_den: int
) -> tuple[int | None, tuple[int, int] | None, int]:
    """Max oscillation over pairs with (x_j - x_i) < thr_num/thr_den."""
    maxd: deque[int] = deque()
    mind: deque[int] = deque()
    left = 0
    best: int | None = None
    best_idx = None
    pairs = 0
    for r in range(len(xi)):
        while left < r and (xi[r] - xi[left]) * thr_den >= thr_num:
            if maxd and maxd[0] == left:
                maxd.popleft()
            if mind and mind[0] == left:
                mind.popleft()
            left += 1
        while maxd and vi[maxd[-1]] <= vi[r]:
            maxd.pop()
        maxd.append(r)
        while mind and vi[mind[-1]] >= vi[r]:
            mind.pop()
        mind.append(r)
        if r > left:
            pairs += r - left
            osc = vi[maxd[0]] - vi[mind[0]]
            if best is None or osc > best:
                best = osc
                best_idx = (maxd[0], mind[0])
    return best, best_idx, pairs


def _window_scan_exact(
    xs: Sequence[QuadExt], vs: Sequence[QuadExt], delta: QuadExt
) -> tuple[QuadExt | None, tuple[int, int] | None, int]:
    maxd: deque[int] = deque()
    mind: deque[int] = deque()
    left = 0
    best: QuadExt | None = None
    best_idx = None
    pairs = 0
    for r in range(len(xs)):
        while left < r and xs[r] - xs[left] >= delta:
            if maxd and maxd[0] == left:
                maxd.popleft()
            if mind and mind[0] == left:
                mind.popleft()
            left += 1
        while maxd and vs[maxd[-1]] <= vs[r]:
            maxd.pop()
        maxd.append(r)
        while mind and vs[mind[-1]] >= vs[r]:
            mind.pop()
        mind.append(r)
        if r > left:
            pairs += r - left
            osc = vs[maxd[0]] - vs[mind[0]]
            if best is None or osc > best:
                best = osc
                best_idx = (maxd[0], mind[0])
    return best, best_idx, pairs


def _uc_osc_over(
    xs: Sequence[QuadExt], vs: Sequence[QuadExt], delta: QuadExt
) -> OscillationResult:
    lifted = _lift_rationals(xs, vs)
    if lifted is not None and delta.irr == 0:
        xi, vi, lx, lv = lifted
        thr = delta.rat * lx
        best, idx, pairs = _window_scan_int(xi, vi, thr.numerator, thr.denominator)
        if best is None:
            return OscillationResult(None, None, pairs, False)
        val = QuadExt(Fraction(best, lv))
        i, j = idx
        wit = (xs[i], xs[j]) if xs[i] > xs[j] else (xs[j], xs[i])
        return OscillationResult(val, wit, pairs, False)
    best, idx, pairs = _window_scan_exact(xs, vs, delta)
    if best is None:
        return OscillationResult(None, None, pairs, False)
    i, j = idx
    wit = (xs[i], xs[j]) if xs[i] > xs[j] else (xs[j], xs[i])
    return OscillationResult(best, wit, pairs, False)


def uc_oscillation(
    ambient: Domain,
    f: FuncSpec,
    delta: QuadExt,
    config: AnalysisConfig | None = None,
) -> OscillationResult:
    """sup |f(x) - f(y)| over pairs in A with |x - y| strictly below delta."""
    config = config or AnalysisConfig()
    delta = as_quadext(delta)
    pts, en_trunc, _ = _probe_points(ambient, config, for_pairs=False)
    vals = [evaluate(f, p) for p in pts]
    res = _uc_osc_over(pts, vals, delta)
    res.truncated = res.truncated or en_trunc
    return res


def modulus_profile(
    ambient: Domain,
    f: FuncSpec,
    config: AnalysisConfig | None = None,
    notion: str = "usc",
    *,
    centers: Domain | None = None,
) -> ModulusProfile:
    """Oscillation sup at every schedule delta, computed in one pass."""
    config = config or AnalysisConfig()
    if notion not in ("uc", "usc"):
        raise ConfigurationError("modulus profile notion must be 'uc' or 'usc'")
    for_pairs = notion == "usc"
    pts, en_trunc, sampled = _probe_points(ambient, config, for_pairs=for_pairs)
    vals = [evaluate(f, p) for p in pts]
    rows: list[tuple[QuadExt, OscillationResult]] = []
    truncated = en_trunc
    if notion == "uc":
        for delta in config.delta_schedule:
            res = _uc_osc_over(pts, vals, delta)
            res.truncated = res.truncated or en_trunc
            rows.append((delta, res))
    else:
        center_dom = centers if centers is not None else ambient
        survey = _pairs_from_points(
            pts,
            center_dom.contains,
            config.delta_schedule[0],
            config.max_pairs,
            en_trunc,
        )
        truncated = survey.truncated
        val_of = dict(zip(pts, vals))
        entries = [
            (p.h, abs(val_of[p.x] - val_of[p.y]), p) for p in survey.pairs
        ]
        hs = [e[0] for e in entries]
        prefix_best: list[QuadExt] = []
        prefix_wit: list[SymmetricPair] = []
        for h, osc, pair in entries:
            if not prefix_best or osc > prefix_best[-1]:
                prefix_best.append(osc)
                prefix_wit.append(pair)
            else:
                prefix_best.append(prefix_best[-1])
                prefix_wit.append(prefix_wit[-1])
        for delta in config.delta_schedule:
            i = bisect.bisect_left(hs, delta)
            if i == 0:
                rows.append((delta, OscillationResult(None, None, 0, truncated)))
            else:
                pair = prefix_wit[i - 1]
                rows.append(
                    (
                        delta,
                        OscillationResult(
                            prefix_best[i - 1], (pair.x, pair.y), i, truncated
                        ),
                    )
                )
    return ModulusProfile(notion, rows, len(pts), sampled, truncated)


# ---------------------------------------------------------------------------
# flat-modulus helpers


def _flat_over_effective(
    entries: list[tuple[QuadExt, QuadExt]],
    schedule: tuple[QuadExt, ...],
) -> tuple[bool, QuadExt | None, list[tuple[QuadExt, QuadExt | None, int]]]:
    """entries: (scale, osc) challenges sorted by scale ascending.

    Returns (flat, level, profile_rows). A schedule delta is effective when a
    challenge with scale < delta exists. The sup per delta is monotone, so the
    modulus is flat iff the sup at the smallest effective delta equals the sup
    at the largest and is positive; at least two effective deltas are needed.
    """
    scales = [e[0] for e in entries]
    prefix: list[QuadExt] = []
    for _, osc in entries:
        prefix.append(osc if not prefix or osc > prefix[-1] else prefix[-1])
    rows: list[tuple[QuadExt, QuadExt | None, int]] = []
    effective: list[QuadExt] = []
    for delta in schedule:
        i = bisect.bisect_left(scales, delta)
        if i == 0:
            rows.append((delta, None, 0))
        else:
            rows.append((delta, prefix[i - 1], i))
            effective.append(prefix[i - 1])
    if len(effective) < 2:
        return False, None, rows
    top, bottom = effective[0], effective[-1]
    flat = bottom == top and top.sign() > 0
    return flat, top if flat else None, rows


def _profile_rows_json(
    rows: list[tuple[QuadExt, QuadExt | None, int]]
) -> list[dict]:
    return [
        {"delta": format_quadext(d), "omega": _fmt(v), "challenges": c}
        for d, v, c in rows
    ]


# ---------------------------------------------------------------------------
# classification pipelines


def _category(ambient: Domain) -> str:
    if isinstance(ambient, Staircase):
        return "staircase"
    if isinstance(ambient, IntervalUnion) and not ambient.enumerable:
        return "interval"
    if ambient.enumerable:
        return "discrete" if ambient.scale_complete else "family"
    raise ConfigurationError(
        f"unsupported ambient domain {ambient.describe()}: unions mixing "
        "interval parts with point sets are not handled"
    )


def classify(
    ambient: Domain, f: FuncSpec, config: AnalysisConfig | None = None
) -> dict[str, Verdict]:
    """Decide C, UC, SC, and USC for f on the ambient domain."""
    config = config or AnalysisConfig()
    cat = _category(ambient)
    if cat == "interval":
        verdicts = _interval_classify(ambient, f, config)
    elif cat == "staircase":
        verdicts = _staircase_classify(ambient, f, config)
    elif cat == "discrete":
        verdicts = _discrete_classify(ambient, f, config)
    else:
        verdicts = _family_classify(ambient, f, config)
    apply_implications(verdicts)
    return verdicts


def _discrete_classify(
    ambient: Domain, f: FuncSpec, config: AnalysisConfig
) -> dict[str, Verdict]:
    en = ambient.enumerate(config.enum_limit)
    if en.truncated:
        verdicts = _family_classify(ambient, f, config)
        for v in verdicts.values():
            v.notes.append(
                "enumeration hit enum_limit, so the isolation argument is "
                "unavailable; treated as a resolution-limited model"
            )
        return verdicts
    gap = ambient.min_gap(config.enum_limit)
    cert = {
        "kind": "uniformly_discrete",
        "gap": _fmt(gap) if gap is not None else None,
    }
    res = _resolution(config, points=len(en.points), enumeration_truncated=False)
    note = (
        "every point is isolated by the minimum gap, so any function on the "
        "set satisfies all four notions"
        if gap is not None
        else "a domain with fewer than two points satisfies all four notions "
        "vacuously"
    )
    return {
        notion: Verdict(
            notion,
            "proven",
            "uniformly_discrete",
            "full",
            certificate=dict(cert),
            resolution=dict(res),
            notes=[note],
        )
        for notion in NOTIONS
    }


# -- family (resolution-limited enumerable) pipeline ------------------------


def _region_groups(
    pts: Sequence[QuadExt],
    vals: Sequence[QuadExt],
    const_regions: list[tuple[Domain | None, QuadExt]],
) -> list[tuple[list[QuadExt], QuadExt]]:
    """Partition points by the first constant region that contains them."""
    groups: list[list[QuadExt]] = [[] for _ in const_regions]
    for p in pts:
        for gi, (region, _) in enumerate(const_regions):
            if region is None or region.contains(p):
                groups[gi].append(p)
                break
    return [
        (groups[gi], value)
        for gi, (_, value) in enumerate(const_regions)
        if groups[gi]
    ]


def _nearest_distance(sorted_pts: list[QuadExt], a: QuadExt) -> QuadExt | None:
    """Distance from a to the nearest point of the list, excluding a itself."""
    i = bisect.bisect_left(sorted_pts, a)
    best: QuadExt | None = None
    for j in (i - 1, i, i + 1):
        if 0 <= j < len(sorted_pts):
            d = abs(sorted_pts[j] - a)
            if d.sign() == 0:
                continue
            if best is None or d < best:
                best = d
    return best


def _per_point_c(
    ambient: Domain,
    pts: tuple[QuadExt, ...],
    vals: list[QuadExt],
    config: AnalysisConfig,
    en_truncated: bool,
    const_regions: list[tuple[Domain | None, QuadExt]] | None,
) -> Verdict:
    schedule = config.delta_schedule
    n = len(pts)
    res = _resolution(config, points=n, enumeration_truncated=en_truncated)
    flat: list[tuple[QuadExt, QuadExt]] = []  # (anchor, jump)

    if const_regions is not None:
        groups = _region_groups(pts, vals, const_regions)
        for idx, a in enumerate(pts):
            d_any: QuadExt | None = None
            if idx > 0:
                d_any = a - pts[idx - 1]
            if idx + 1 < n:
                d_next = pts[idx + 1] - a
                if d_any is None or d_next < d_any:
                    d_any = d_next
            if d_any is None:
                continue
            eff = [d for d in schedule if d > d_any]
            if len(eff) < 2:
                continue
            va = vals[idx]
            cross = []
            for gpts, gval in groups:
                if gval == va:
                    continue
                dg = _nearest_distance(gpts, a)
                if dg is not None:
                    cross.append((dg, abs(gval - va)))
            if not cross:
                continue
            zero = QuadExt.of(0)
            m_big = max((o for d, o in cross if d < eff[0]), default=zero)
            m_small = max((o for d, o in cross if d < eff[-1]), default=zero)
            if m_small == m_big and m_big.sign() > 0:
                flat.append((a, m_big))
    elif n * n <= config.max_pairs:
        for idx, a in enumerate(pts):
            d_any = None
            if idx > 0:
                d_any = a - pts[idx - 1]
            if idx + 1 < n:
                d_next = pts[idx + 1] - a
                if d_any is None or d_next < d_any:
                    d_any = d_next
            if d_any is None:
                continue
            eff = [d for d in schedule if d > d_any]
            if len(eff) < 2:
                continue
            va = vals[idx]
            zero = QuadExt.of(0)
            m_big = zero
            m_small = zero
            for k in range(n):
                if k == idx:
                    continue
                dist = abs(pts[k] - a)
                if dist >= eff[0]:
                    continue
                osc = abs(vals[k] - va)
                if osc > m_big:
                    m_big = osc
                if dist < eff[-1] and osc > m_small:
                    m_small = osc
            if m_small == m_big and m_big.sign() > 0:
                flat.append((a, m_big))
    else:
        return Verdict(
            "C",
            "no_violation",
            "flat_modulus",
            "truncation",
            resolution=res,
            notes=[
                "per-point scan skipped: the pair budget cannot cover this "
                "many points for a non-constant piecewise function"
            ],
        )

    if flat:
        jump = flat[0][1]
        for _, j in flat[1:]:
            if j > jump:
                jump = j
        anchor = min(a for a, j in flat if j == jump)
        witness = {
            "kind": "anchor",
            "anchor": format_quadext(anchor),
            "jump": format_quadext(jump),
            "flat_anchor_count": len(flat),
            "profile": _anchor_profile_json(pts, vals, anchor, config),
        }
        return Verdict(
            "C",
            "refuted",
            "flat_modulus",
            "truncation",
            witness=witness,
            resolution=res,
            notes=[
                "the pointwise oscillation at the witness anchor stays at the "
                "same positive jump at every effective delta down to the "
                "model floor"
            ],
        )
    return Verdict(
        "C",
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=res,
        notes=["every pointwise oscillation decays before its challenges run out"],
    )


def _anchor_profile_json(
    pts: tuple[QuadExt, ...],
    vals: list[QuadExt],
    anchor: QuadExt,
    config: AnalysisConfig,
) -> list[dict]:
    idx = bisect.bisect_left(list(pts), anchor)
    va = vals[idx]
    entries = sorted(
        (abs(pts[k] - anchor), abs(vals[k] - va))
        for k in range(len(pts))
        if k != idx
    )
    flat_rows = _flat_over_effective(entries, config.delta_schedule)[2]
    return _profile_rows_json(flat_rows)


def _usc_family(
    ambient: Domain,
    pts: tuple[QuadExt, ...],
    vals: list[QuadExt],
    config: AnalysisConfig,
    en_truncated: bool,
    const_regions: list[tuple[Domain | None, QuadExt]] | None,
) -> Verdict:
    n = len(pts)
    res = _resolution(config, points=n, enumeration_truncated=en_truncated)
    all_pairs = n * (n - 1) // 2

    # rule: a complete pair scan finding no valid symmetric pair proves the
    # notion vacuously (no challenge can ever form below any delta)
    if not en_truncated and 0 < all_pairs <= config.max_pairs:
        if _find_any_valid_pair(pts, ambient.contains) is None:
            return Verdict(
                "USC",
                "proven",
                "midpoint_free",
                "truncation",
                certificate={"kind": "midpoint_free", "pairs_checked": all_pairs},
                resolution=_resolution(
                    config,
                    points=n,
                    enumeration_truncated=False,
                    pairs_checked=all_pairs,
                ),
                notes=[
                    "no pair of domain points has its midpoint in the domain, "
                    "so no symmetric challenge exists at any scale"
                ],
            )

    if const_regions is not None:
        return _usc_const_sweep(ambient, pts, vals, config, en_truncated, const_regions)

    if not en_truncated and 0 < all_pairs <= config.max_pairs:
        survey = _pairs_from_points(pts, ambient.contains, None, config.max_pairs)
        val_of = dict(zip(pts, vals))
        entries = [(p.h, abs(val_of[p.x] - val_of[p.y])) for p in survey.pairs]
        return _sweep_verdict(
            "USC", entries, config, res, survey.truncated, en_truncated, survey.pairs
        )

    return Verdict(
        "USC",
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=res,
        notes=["pair budget too small for a symmetric sweep at this resolution"],
    )


def _usc_const_sweep(
    ambient: Domain,
    pts: tuple[QuadExt, ...],
    vals: list[QuadExt],
    config: AnalysisConfig,
    en_truncated: bool,
    const_regions: list[tuple[Domain | None, QuadExt]],
) -> Verdict:
    """Piecewise-constant reduction: pairs inside one region oscillate by
    exactly zero, so only cross-region pairs with distinct values are
    enumerated, and the effective deltas are the scales at which such pairs
    exist."""
    n = len(pts)
    groups = _region_groups(pts, vals, const_regions)
    cross_total = 0
    for gi in range(len(groups)):
        for gj in range(gi + 1, len(groups)):
            if groups[gi][1] != groups[gj][1]:
                cross_total += len(groups[gi][0]) * len(groups[gj][0])
    res = _resolution(
        config,
        points=n,
        enumeration_truncated=en_truncated,
        pairs_checked=cross_total,
    )
    if cross_total > config.max_pairs:
        return Verdict(
            "USC",
            "no_violation",
            "flat_modulus",
            "truncation",
            resolution=res,
            notes=["cross-region pair count exceeds the pair budget"],
        )
    entries: list[tuple[QuadExt, QuadExt, SymmetricPair]] = []
    for gi in range(len(groups)):
        for gj in range(gi + 1, len(groups)):
            pi, vi = groups[gi]
            pj, vj = groups[gj]
            if vi == vj:
                continue
            osc = abs(vi - vj)
            for u in pi:
                for w in pj:
                    x, y = (u, w) if u > w else (w, u)
                    if ambient.contains((x + y) / 2):
                        entries.append(((x - y) / 2, osc, SymmetricPair(x, y)))
    entries.sort(key=lambda e: e[2].sort_key())
    if not entries:
        if en_truncated:
            return Verdict(
                "USC",
                "no_violation",
                "flat_modulus",
                "truncation",
                resolution=res,
                notes=[
                    "no valid cross-region pair found, but the enumeration was "
                    "truncated"
                ],
            )
        return Verdict(
            "USC",
            "proven",
            "exhaustive_enumeration",
            "truncation",
            certificate={
                "kind": "exhaustive_enumeration",
                "pairs_checked": cross_total,
                "max_osc": "0",
            },
            resolution=res,
            notes=[
                "pairs within one constant region oscillate by exactly zero, "
                "and every cross-region pair has its midpoint outside the "
                "domain, so the symmetric modulus vanishes identically"
            ],
        )
    flat, level, rows = _flat_over_effective(
        [(h, osc) for h, osc, _ in entries], config.delta_schedule
    )
    if flat:
        wit_pair = None
        for h, osc, pair in entries:
            if osc == level:
                wit_pair = pair
                break
        witness = {
            "kind": "pair",
            **_pair_json(wit_pair.x, wit_pair.y, level),
            "profile": _profile_rows_json(rows),
        }
        return Verdict(
            "USC",
            "refuted",
            "flat_modulus",
            "truncation",
            witness=witness,
            resolution=res,
            notes=[
                "valid symmetric pairs with the same positive oscillation "
                "exist at every effective delta down to the model floor"
            ],
        )
    return Verdict(
        "USC",
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=res,
        notes=["cross-region symmetric oscillation decays at this resolution"],
    )


def _sweep_verdict(
    notion: str,
    entries: list[tuple[QuadExt, QuadExt]],
    config: AnalysisConfig,
    res: dict,
    pairs_truncated: bool,
    en_truncated: bool,
    pairs: list[SymmetricPair] | None = None,
) -> Verdict:
    flat, level, rows = _flat_over_effective(entries, config.delta_schedule)
    if flat:
        witness = {"kind": "pair", "profile": _profile_rows_json(rows)}
        if pairs is not None:
            val_level = level
            for pair, (h, osc) in zip(pairs, entries):
                if osc == val_level:
                    witness.update(_pair_json(pair.x, pair.y, osc))
                    break
        return Verdict(
            notion,
            "refuted",
            "flat_modulus",
            "truncation",
            witness=witness,
            resolution=res,
            notes=[
                "oscillation stays at the same positive level at every "
                "effective delta down to the model floor"
            ],
        )
    if entries and all(osc.sign() == 0 for _, osc in entries):
        if not pairs_truncated and not en_truncated:
            return Verdict(
                notion,
                "proven",
                "exhaustive_enumeration",
                "truncation",
                certificate={
                    "kind": "exhaustive_enumeration",
                    "pairs_checked": len(entries),
                    "max_osc": "0",
                },
                resolution=res,
                notes=["every valid pair oscillates by exactly zero"],
            )
    if not entries and not pairs_truncated and not en_truncated:
        return Verdict(
            notion,
            "proven",
            "midpoint_free",
            "truncation",
            certificate={"kind": "midpoint_free", "pairs_checked": 0},
            resolution=res,
            notes=["no valid challenge exists at any scale"],
        )
    return Verdict(
        notion,
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=res,
        notes=["oscillation decays (or the probe was truncated) at this resolution"],
    )


def _uc_family(
    ambient: Domain,
    pts: tuple[QuadExt, ...],
    vals: list[QuadExt],
    config: AnalysisConfig,
    en_truncated: bool,
    const_regions: list[tuple[Domain | None, QuadExt]] | None,
    c_verdict: Verdict,
) -> Verdict:
    n = len(pts)
    res = _resolution(config, points=n, enumeration_truncated=en_truncated)
    if c_verdict.status == "refuted":
        return Verdict(
            "UC",
            "refuted",
            "implication",
            c_verdict.scope,
            certificate={
                "kind": "implication",
                "source": "not C",
                "rule": "uc_implies_c",
            },
            resolution=res,
            notes=[
                "a function that fails pointwise continuity cannot be "
                "uniformly continuous"
            ],
        )
    if const_regions is not None:
        groups = _region_groups(pts, vals, const_regions)
        cross_total = 0
        for gi in range(len(groups)):
            for gj in range(gi + 1, len(groups)):
                if groups[gi][1] != groups[gj][1]:
                    cross_total += len(groups[gi][0]) * len(groups[gj][0])
        if cross_total > config.max_pairs:
            return Verdict(
                "UC",
                "no_violation",
                "flat_modulus",
                "truncation",
                resolution=res,
                notes=["cross-region pair count exceeds the pair budget"],
            )
        entries = []
        for gi in range(len(groups)):
            for gj in range(gi + 1, len(groups)):
                pi, vi = groups[gi]
                pj, vj = groups[gj]
                if vi == vj:
                    continue
                osc = abs(vi - vj)
                for u in pi:
                    for w in pj:
                        entries.append((abs(u - w), osc))
        entries.sort()
        if not entries and not en_truncated:
            return Verdict(
                "UC",
                "proven",
                "exhaustive_enumeration",
                "truncation",
                certificate={
                    "kind": "exhaustive_enumeration",
                    "pairs_checked": cross_total,
                    "max_osc": "0",
                },
                resolution=res,
                notes=["all points carry the same value within reach"],
            )
        return _sweep_verdict("UC", entries, config, res, False, en_truncated)
    # generic sweep via sliding windows, one linear pass per delta
    results = [
        (delta, _uc_osc_over(pts, vals, delta)) for delta in config.delta_schedule
    ]
    rows = [(d, r.value, r.challenges) for d, r in results]
    effective = [(d, r) for d, r in results if r.challenges > 0]
    if len(effective) >= 2:
        top, bottom = effective[0][1].value, effective[-1][1].value
        if top == bottom and top.sign() > 0:
            wx, wy = effective[-1][1].witness
            return Verdict(
                "UC",
                "refuted",
                "flat_modulus",
                "truncation",
                witness={
                    "kind": "pair",
                    "x": format_quadext(wx),
                    "y": format_quadext(wy),
                    "osc": format_quadext(bottom),
                    "profile": _profile_rows_json(rows),
                },
                resolution=res,
                notes=[
                    "pair oscillation stays at the same positive level at "
                    "every effective delta down to the model floor"
                ],
            )
    if (
        effective
        and all(r.value.sign() == 0 for _, r in effective)
        and not en_truncated
    ):
        return Verdict(
            "UC",
            "proven",
            "exhaustive_enumeration",
            "truncation",
            certificate={
                "kind": "exhaustive_enumeration",
                "pairs_checked": max(r.challenges for _, r in effective),
                "max_osc": "0",
            },
            resolution=res,
            notes=["every pair below the largest delta oscillates by zero"],
        )
    return Verdict(
        "UC",
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=res,
        notes=["pair oscillation decays at this resolution"],
    )


def _sc_family(
    ambient: Domain,
    pts: tuple[QuadExt, ...],
    vals: list[QuadExt],
    config: AnalysisConfig,
    en_truncated: bool,
) -> Verdict:
    """Per-anchor mirror scan. The effective delta window at an anchor is
    floored by the distance to its nearest neighbor (the scale below which
    the model cannot show any challenger at all); the mirrored oscillation
    must be the same positive value across the whole window to refute."""
    n = len(pts)
    res = _resolution(config, points=n, enumeration_truncated=en_truncated)
    if n * (n - 1) // 2 > config.max_pairs:
        return Verdict(
            "SC",
            "no_violation",
            "flat_modulus",
            "truncation",
            resolution=res,
            notes=["pair budget too small for a per-anchor mirror scan"],
        )
    val_of = dict(zip(pts, vals))
    lo = pts[0] if pts else None
    schedule = config.delta_schedule
    flat: list[tuple[QuadExt, QuadExt]] = []
    for idx, a in enumerate(pts):
        d_any: QuadExt | None = None
        if idx > 0:
            d_any = a - pts[idx - 1]
        if idx + 1 < n:
            d_next = pts[idx + 1] - a
            if d_any is None or d_next < d_any:
                d_any = d_next
        if d_any is None:
            continue
        eff = [d for d in schedule if d > d_any]
        if len(eff) < 2:
            continue
        va = val_of[a]
        m_big: QuadExt | None = None
        m_small: QuadExt | None = None
        for k in range(idx + 1, n):
            x = pts[k]
            h = x - a
            if h >= eff[0]:
                break
            y = 2 * a - x
            if y < lo:
                break
            if not ambient.contains(y):
                continue
            osc = abs(val_of[x] - val_of[y])
            if m_big is None or osc > m_big:
                m_big = osc
            if h < eff[-1] and (m_small is None or osc > m_small):
                m_small = osc
        if (
            m_big is not None
            and m_small is not None
            and m_small == m_big
            and m_big.sign() > 0
        ):
            flat.append((a, m_big))
    if flat:
        jump = flat[0][1]
        for _, j in flat[1:]:
            if j > jump:
                jump = j
        anchor = min(a for a, j in flat if j == jump)
        return Verdict(
            "SC",
            "refuted",
            "flat_modulus",
            "truncation",
            witness={
                "kind": "anchor",
                "anchor": format_quadext(anchor),
                "jump": format_quadext(jump),
                "flat_anchor_count": len(flat),
            },
            resolution=res,
            notes=[
                "mirror pairs around the witness anchor keep the same positive "
                "oscillation across the whole effective delta window"
            ],
        )
    return Verdict(
        "SC",
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=res,
        notes=["every per-anchor mirror oscillation decays at this resolution"],
    )


def _family_classify(
    ambient: Domain, f: FuncSpec, config: AnalysisConfig
) -> dict[str, Verdict]:
    en = ambient.enumerate(config.enum_limit)
    pts = en.points
    vals = [evaluate(f, p) for p in pts]
    const_regions = piecewise_const_regions(f)
    c_v = _per_point_c(ambient, pts, vals, config, en.truncated, const_regions)
    usc_v = _usc_family(ambient, pts, vals, config, en.truncated, const_regions)
    uc_v = _uc_family(ambient, pts, vals, config, en.truncated, const_regions, c_v)
    if c_v.status == "proven" or usc_v.status == "proven":
        sc_v = Verdict(
            "SC",
            "no_violation",
            "flat_modulus",
            "truncation",
            resolution=_resolution(
                config, points=len(pts), enumeration_truncated=en.truncated
            ),
            notes=["scan skipped; an implication settles this notion"],
        )
    else:
        sc_v = _sc_family(ambient, pts, vals, config, en.truncated)
    return {"C": c_v, "UC": uc_v, "SC": sc_v, "USC": usc_v}


# -- interval-union pipeline -------------------------------------------------


_LADDER_TERMS = 8


def _leaf_lipschitz(piece: IntervalPiece, fm: Formula) -> QuadExt | None:
    if isinstance(fm, Const):
        return QuadExt.of(0)
    if isinstance(fm, Identity):
        return QuadExt.of(1)
    if isinstance(fm, Affine):
        return abs(fm.slope)
    if isinstance(fm, Monomial):
        m = max(abs(piece.lo), abs(piece.hi))
        out = QuadExt.of(fm.degree)
        for _ in range(fm.degree - 1):
            out = out * m
        return out
    if isinstance(fm, Reciprocal):
        if piece.lo > 0:
            return 1 / (piece.lo * piece.lo)
        if piece.hi < 0:
            return 1 / (piece.hi * piece.hi)
        return None
    return None


def _leaf_uc_failure(piece: IntervalPiece, fm: Formula) -> dict | None:
    """Witness ladder when the formula is not uniformly continuous on the
    piece (only a reciprocal running into 0 can fail)."""
    if not isinstance(fm, Reciprocal) or piece.is_degenerate:
        return None
    if piece.contains(QuadExt.of(0)):
        raise ConfigurationError("reciprocal piece contains 0")
    if piece.lo == 0:
        s = min(QuadExt.of(3), piece.hi) if piece.hi_closed else piece.hi * Fraction(3, 4)
        terms = []
        for m in range(1, _LADDER_TERMS + 1):
            x, y = s / m, s / (3 * m)
            terms.append(_pair_json(x, y, abs(evaluate(fm, x) - evaluate(fm, y))))
        return {
            "kind": "pair_family",
            "description": "pairs sliding into the open end at 0 with "
            "shrinking distance and growing oscillation",
            "piece": piece.describe(),
            "terms": terms,
        }
    if piece.hi == 0:
        s = max(QuadExt.of(-3), piece.lo) if piece.lo_closed else piece.lo * Fraction(3, 4)
        terms = []
        for m in range(1, _LADDER_TERMS + 1):
            x, y = s / (3 * m), s / m
            terms.append(_pair_json(x, y, abs(evaluate(fm, x) - evaluate(fm, y))))
        return {
            "kind": "pair_family",
            "description": "pairs sliding into the open end at 0 with "
            "shrinking distance and growing oscillation",
            "piece": piece.describe(),
            "terms": terms,
        }
    return None


@dataclass
class _Junction:
    c: QuadExt
    in_domain: bool
    owned: QuadExt | None
    left: SideLimit
    right: SideLimit
    left_piece: IntervalPiece | None
    right_piece: IntervalPiece | None

    def to_json(self) -> dict:
        return {
            "at": format_quadext(self.c),
            "in_domain": self.in_domain,
            "value": _fmt(self.owned),
            "left_limit": "missing"
            if not self.left.exists
            else ("diverges" if self.left.value is None else format_quadext(self.left.value)),
            "right_limit": "missing"
            if not self.right.exists
            else ("diverges" if self.right.value is None else format_quadext(self.right.value)),
        }


def _collect_junctions(
    ambient: IntervalUnion, f: FuncSpec
) -> list[_Junction]:
    pieces = ambient.pieces
    coords: list[QuadExt] = []
    for prev, nxt in zip(pieces, pieces[1:]):
        if prev.hi == nxt.lo and nxt.lo not in coords:
            coords.append(nxt.lo)
    out = []
    for c in coords:
        left_piece = next(
            (p for p in pieces if not p.is_degenerate and p.hi == c), None
        )
        right_piece = next(
            (p for p in pieces if not p.is_degenerate and p.lo == c), None
        )
        left, right = one_sided_limits(f, pieces, c)
        in_dom = ambient.contains(c)
        owned = evaluate(f, c) if in_dom else None
        out.append(_Junction(c, in_dom, owned, left, right, left_piece, right_piece))
    return out


def _junction_c_ok(j: _Junction) -> bool:
    if not j.in_domain:
        return True
    for side in (j.left, j.right):
        if side.exists and (side.value is None or side.value != j.owned):
            return False
    return True


def _junction_sc_ok(j: _Junction) -> bool:
    if not j.in_domain:
        return True
    if not (j.left.exists and j.right.exists):
        return True
    if j.left.value is None or j.right.value is None:
        return False
    return j.left.value == j.right.value


def _junction_uc_ok(j: _Junction) -> bool:
    vals = [s.value for s in (j.left, j.right) if s.exists]
    if any(v is None for v in vals):
        return False
    if len(vals) == 2 and vals[0] != vals[1]:
        return False
    if j.in_domain and vals and vals[0] != j.owned:
        return False
    return True


def _ladder(
    f: FuncSpec,
    make_pair: Callable[[int], tuple[QuadExt, QuadExt]],
    count: int = _LADDER_TERMS,
) -> list[dict]:
    terms = []
    for n_i in range(1, count + 1):
        x, y = make_pair(n_i)
        terms.append(_pair_json(x, y, abs(evaluate(f, x) - evaluate(f, y))))
    return terms


def _junction_uc_witness(j: _Junction, f: FuncSpec) -> dict:
    c = j.c
    if (
        j.left.exists
        and j.right.exists
        and j.left.value is not None
        and j.right.value is not None
        and j.left.value != j.right.value
    ):
        s = min(QuadExt.of(1), j.left_piece.length, j.right_piece.length)
        terms = _ladder(f, lambda m: (c + s / (m + 1), c - s / (m + 1)))
        return {
            "kind": "pair_family",
            "description": "pairs straddling the junction at shrinking "
            "distance keep oscillating by the jump",
            "at": format_quadext(c),
            "terms": terms,
        }
    for side, piece, sgn in (
        (j.right, j.right_piece, 1),
        (j.left, j.left_piece, -1),
    ):
        if side.exists and side.value is None:
            s = piece.length * Fraction(3, 4)
            terms = _ladder(
                f, lambda m: _ordered(c + sgn * s / (m + 1), c + sgn * s / (3 * (m + 1)))
            )
            return {
                "kind": "pair_family",
                "description": "pairs inside the divergent side oscillate "
                "without bound at shrinking distance",
                "at": format_quadext(c),
                "terms": terms,
            }
    # owned value disagrees with the matching limits
    side, piece, sgn = (
        (j.right, j.right_piece, 1)
        if j.right.exists
        else (j.left, j.left_piece, -1)
    )
    s = min(QuadExt.of(1), piece.length)
    terms = _ladder(f, lambda m: _ordered(c + sgn * s / (m + 1), c))
    return {
        "kind": "pair_family",
        "description": "pairs pinned at the junction point itself keep "
        "oscillating by the gap between the value and the limit",
        "at": format_quadext(c),
        "terms": terms,
    }


def _junction_usc_witness(j: _Junction, f: FuncSpec) -> dict:
    c = j.c
    if (
        j.left.exists
        and j.right.exists
        and j.left.value is not None
        and j.right.value is not None
        and j.left.value != j.right.value
    ):
        s = min(QuadExt.of(1), j.left_piece.length, j.right_piece.length)
        terms = _ladder(f, lambda m: (c + s / (m + 4), c - 3 * (s / (m + 4))))
        return {
            "kind": "pair_family",
            "description": "symmetric pairs with midpoint inside the left "
            "piece straddle the junction and keep oscillating by the jump",
            "at": format_quadext(c),
            "terms": terms,
        }
    for side, piece, sgn in (
        (j.right, j.right_piece, 1),
        (j.left, j.left_piece, -1),
    ):
        if side.exists and side.value is None:
            s = piece.length * Fraction(3, 4)
            terms = _ladder(
                f, lambda m: _ordered(c + sgn * s / (m + 1), c + sgn * s / (3 * (m + 1)))
            )
            return {
                "kind": "pair_family",
                "description": "symmetric pairs inside the divergent side "
                "(midpoints stay inside the piece) oscillate without bound",
                "at": format_quadext(c),
                "terms": terms,
            }
    side, piece, sgn = (
        (j.right, j.right_piece, 1)
        if j.right.exists
        else (j.left, j.left_piece, -1)
    )
    s = min(QuadExt.of(1), piece.length)
    terms = _ladder(f, lambda m: _ordered(c + sgn * 2 * (s / (m + 4)), c))
    return {
        "kind": "pair_family",
        "description": "symmetric pairs with one endpoint pinned at the "
        "junction point (midpoint inside the adjacent piece) keep "
        "oscillating by the gap between the value and the limit",
        "at": format_quadext(c),
        "terms": terms,
    }


def _ordered(a: QuadExt, b: QuadExt) -> tuple[QuadExt, QuadExt]:
    return (a, b) if a > b else (b, a)


def _interval_classify(
    ambient: IntervalUnion, f: FuncSpec, config: AnalysisConfig
) -> dict[str, Verdict]:
    pieces = ambient.pieces
    tiles = tile_formulas(f, pieces)
    for piece, fm in tiles:
        if isinstance(fm, Reciprocal) and piece.contains(QuadExt.of(0)):
            raise ConfigurationError(
                f"reciprocal piece {piece.describe()} contains 0"
            )
    junctions = _collect_junctions(ambient, f)
    merged = merge_interval_components(pieces)
    min_gap = min(merged.gaps) if merged.gaps else None

    leaf_reports = []
    leaf_failure: tuple[IntervalPiece, dict] | None = None
    for piece, fm in tiles:
        fail = _leaf_uc_failure(piece, fm)
        lip = _leaf_lipschitz(piece, fm)
        leaf_reports.append(
            {
                "piece": piece.describe(),
                "formula": describe_function(fm),
                "uniformly_continuous": fail is None,
                "lipschitz_bound": _fmt(lip),
            }
        )
        if fail is not None and leaf_failure is None:
            leaf_failure = (piece, fail)

    cert_base = {
        "kind": "interval_decision",
        "leaves": leaf_reports,
        "junctions": [j.to_json() for j in junctions],
        "min_component_gap": _fmt(min_gap),
    }
    res = _resolution(config)

    def verdict(notion, status, *, certificate=None, witness=None, notes=()):
        return Verdict(
            notion,
            status,
            "interval_decision",
            "full",
            certificate=certificate,
            witness=witness,
            resolution=dict(res),
            notes=list(notes),
        )

    # C
    bad_c = [j for j in junctions if not _junction_c_ok(j)]
    if bad_c:
        j = bad_c[0]
        side, piece, sgn = (
            (j.left, j.left_piece, -1)
            if j.left.exists and (j.left.value is None or j.left.value != j.owned)
            else (j.right, j.right_piece, 1)
        )
        s = min(QuadExt.of(1), piece.length)
        terms = []
        for m in range(1, _LADDER_TERMS + 1):
            x = j.c + sgn * s / (m + 1)
            terms.append(
                {
                    "x": format_quadext(x),
                    "osc": format_quadext(abs(evaluate(f, x) - j.owned)),
                }
            )
        c_v = verdict(
            "C",
            "refuted",
            witness={
                "kind": "approach",
                "anchor": format_quadext(j.c),
                "value": _fmt(j.owned),
                "limit": "diverges" if side.value is None else _fmt(side.value),
                "terms": terms,
            },
            notes=[
                "points arbitrarily close to the junction keep their values "
                "away from the value owned at the junction"
            ],
        )
    else:
        c_v = verdict(
            "C",
            "proven",
            certificate=dict(cert_base),
            notes=[
                "each formula is continuous on its piece and every junction "
                "point in the domain matches its one-sided limits"
            ],
        )

    # UC
    bad_uc_junction = [j for j in junctions if not _junction_uc_ok(j)]
    if leaf_failure is not None:
        piece, fail = leaf_failure
        uc_v = verdict(
            "UC",
            "refuted",
            witness=fail,
            notes=["a piece formula is not uniformly continuous on its piece"],
        )
    elif bad_uc_junction:
        j = bad_uc_junction[0]
        uc_v = verdict(
            "UC",
            "refuted",
            witness=_junction_uc_witness(j, f),
            notes=["a junction breaks the uniform modulus"],
        )
    else:
        uc_v = verdict(
            "UC",
            "proven",
            certificate=dict(cert_base),
            notes=[
                "every piece formula is uniformly continuous, junction limits "
                "agree with owned values, and distinct components are "
                "separated by a positive gap"
            ],
        )

    # USC mirrors UC on interval unions: a uniform symmetric modulus forces a
    # uniform modulus across junctions and inside pieces, and conversely
    if leaf_failure is not None:
        piece, fail = leaf_failure
        usc_v = verdict(
            "USC",
            "refuted",
            witness=fail,
            notes=[
                "the divergent-piece pair family is symmetric-valid: each "
                "midpoint lies inside the piece"
            ],
        )
    elif bad_uc_junction:
        j = bad_uc_junction[0]
        usc_v = verdict(
            "USC",
            "refuted",
            witness=_junction_usc_witness(j, f),
            notes=["the junction pair family uses midpoints inside the domain"],
        )
    else:
        usc_v = verdict(
            "USC",
            "proven",
            certificate=dict(cert_base),
            notes=[
                "on interval unions the uniform symmetric modulus and the "
                "uniform modulus stand or fall together"
            ],
        )

    # SC
    bad_sc = [j for j in junctions if not _junction_sc_ok(j)]
    if bad_sc:
        j = bad_sc[0]
        s = min(QuadExt.of(1), j.left_piece.length, j.right_piece.length)
        terms = _ladder(f, lambda m: (j.c + s / (m + 1), j.c - s / (m + 1)))
        sc_v = verdict(
            "SC",
            "refuted",
            witness={
                "kind": "pair_family",
                "description": "mirror pairs around the junction point keep "
                "oscillating by the jump between one-sided limits",
                "anchor": format_quadext(j.c),
                "terms": terms,
            },
            notes=[
                "the junction point lies in the domain and its one-sided "
                "limits disagree, so mirrored differences cannot decay"
            ],
        )
    elif c_v.status == "proven":
        sc_v = Verdict(
            "SC",
            "proven",
            "implication",
            "full",
            certificate={
                "kind": "implication",
                "source": "C",
                "rule": "c_implies_sc",
            },
            resolution=dict(res),
            notes=["pointwise continuity forces symmetric continuity"],
        )
    else:
        sc_v = verdict(
            "SC",
            "proven",
            certificate=dict(cert_base),
            notes=[
                "one-sided limits agree at every junction point of the "
                "domain, and mirrored differences inside a piece decay with "
                "the piece modulus; the owned value at a junction never "
                "enters a mirrored difference"
            ],
        )

    return {"C": c_v, "UC": uc_v, "SC": sc_v, "USC": usc_v}


# -- staircase pipeline ------------------------------------------------------


def _staircase_classify(
    ambient: Staircase, f: FuncSpec, config: AnalysisConfig
) -> dict[str, Verdict]:
    blocks = ambient.block_pieces()
    tiles = tile_formulas(f, blocks)
    res = _resolution(config, points=2 * len(blocks))
    gaps = ambient.gaps()

    c_v = Verdict(
        "C",
        "proven",
        "interval_decision",
        "truncation",
        certificate={
            "kind": "interval_decision",
            "leaves": [
                {"piece": p.describe(), "formula": describe_function(fm)}
                for p, fm in tiles[:4]
            ],
            "blocks": len(blocks),
            "min_present_gap": _fmt(QuadExt(min(gaps))) if gaps else None,
        },
        resolution=dict(res),
        notes=[
            "each block is closed, each formula is continuous on its block, "
            "and at this resolution every block is separated from the next "
            "by a positive gap"
        ],
    )

    # cross-gap records: (gap width, oscillation between facing endpoints)
    records = []
    for i in range(len(blocks) - 1):
        left_end = blocks[i].hi
        right_start = blocks[i + 1].lo
        osc = abs(evaluate(f, right_start) - evaluate(f, left_end))
        records.append((right_start - left_end, osc, left_end, right_start))

    chain: list[tuple[QuadExt, QuadExt, QuadExt, QuadExt]] = []
    for rec in records:
        if not chain or rec[0] < chain[-1][0]:
            chain.append(rec)
    uc_refuted = False
    if len(chain) >= 2:
        max_osc = chain[0][1]
        for rec in chain[1:]:
            if rec[1] > max_osc:
                max_osc = rec[1]
        terminal = chain[-1][1]
        uc_refuted = terminal == max_osc and terminal.sign() > 0
    if uc_refuted:
        sample = chain[:3] + chain[-3:]
        uc_v = Verdict(
            "UC",
            "refuted",
            "structural_chain",
            "truncation",
            witness={
                "kind": "chain",
                "terminal_gap": format_quadext(chain[-1][0]),
                "terminal_osc": format_quadext(chain[-1][1]),
                "records": [
                    {
                        "gap": format_quadext(g),
                        "osc": format_quadext(o),
                        "pair": [format_quadext(r), format_quadext(l)],
                    }
                    for g, o, l, r in sample
                ],
            },
            resolution=dict(res),
            notes=[
                "facing block endpoints across strictly shrinking gaps keep "
                "the same maximal oscillation, so no uniform modulus survives "
                "the gap decay"
            ],
        )
    else:
        uc_v = Verdict(
            "UC",
            "no_violation",
            "structural_chain",
            "truncation",
            resolution=dict(res),
            notes=[
                "cross-gap oscillations decay along the shrinking-gap chain "
                "at this resolution"
            ],
        )

    # USC: candidate symmetric pairs are the endpoint combinations of
    # adjacent blocks whose midpoints land back inside the staircase
    entries: list[tuple[QuadExt, QuadExt, SymmetricPair]] = []
    candidates = 0
    for i in range(len(blocks) - 1):
        b1, b2 = blocks[i], blocks[i + 1]
        for u in (b1.lo, b1.hi):
            for w in (b2.lo, b2.hi):
                candidates += 1
                if ambient.contains((u + w) / 2):
                    osc = abs(evaluate(f, w) - evaluate(f, u))
                    entries.append(((w - u) / 2, osc, SymmetricPair(w, u)))
    entries.sort(key=lambda e: e[2].sort_key())
    res_usc = dict(res)
    res_usc["pairs_checked"] = candidates
    if not entries:
        usc_v = Verdict(
            "USC",
            "no_violation",
            "flat_modulus",
            "truncation",
            resolution=res_usc,
            notes=[
                "every candidate cross-block midpoint falls inside an open "
                "gap, so no symmetric challenge crosses a gap at this "
                "resolution"
            ],
        )
    else:
        flat, level, rows = _flat_over_effective(
            [(h, osc) for h, osc, _ in entries], config.delta_schedule
        )
        if flat:
            wit = next(p for h, osc, p in entries if osc == level)
            usc_v = Verdict(
                "USC",
                "refuted",
                "flat_modulus",
                "truncation",
                witness={
                    "kind": "pair",
                    **_pair_json(wit.x, wit.y, level),
                    "profile": _profile_rows_json(rows),
                },
                resolution=res_usc,
                notes=[
                    "cross-block symmetric pairs with midpoints inside blocks "
                    "keep the same positive oscillation at every effective "
                    "delta"
                ],
            )
        else:
            usc_v = Verdict(
                "USC",
                "no_violation",
                "flat_modulus",
                "truncation",
                resolution=res_usc,
                notes=["valid cross-block oscillation decays at this resolution"],
            )

    sc_v = Verdict(
        "SC",
        "no_violation",
        "flat_modulus",
        "truncation",
        resolution=dict(res),
        notes=["settled by implication from pointwise continuity"],
    )
    return {"C": c_v, "UC": uc_v, "SC": sc_v, "USC": usc_v}


# -- implications ------------------------------------------------------------


_IMPLICATIONS = (
    ("UC", "C", "uc_implies_c"),
    ("UC", "USC", "uc_implies_usc"),
    ("C", "SC", "c_implies_sc"),
    ("USC", "SC", "usc_implies_sc"),
)


def apply_implications(verdicts: dict[str, Verdict]) -> None:
    """Fill unsettled notions from settled ones along the implication order."""
    changed = True
    while changed:
        changed = False
        for prem, conc, rule in _IMPLICATIONS:
            p, q = verdicts[prem], verdicts[conc]
            if p.status == "proven" and q.status == "no_violation":
                q.status = "proven"
                q.method = "implication"
                q.scope = p.scope
                q.certificate = {"kind": "implication", "source": prem, "rule": rule}
                q.notes.append(f"follows because {prem} holds")
                changed = True
            if q.status == "refuted" and p.status == "no_violation":
                p.status = "refuted"
                p.method = "implication"
                p.scope = q.scope
                p.certificate = {
                    "kind": "implication",
                    "source": f"not {conc}",
                    "rule": rule,
                }
                p.notes.append(f"fails because {conc} fails")
                changed = True


def check_consistency(verdicts: dict[str, Verdict]) -> list[str]:
    issues = []
    for prem, conc, rule in _IMPLICATIONS:
        p, q = verdicts.get(prem), verdicts.get(conc)
        if p is None or q is None:
            continue
        if p.status == "proven" and q.status == "refuted":
            issues.append(
                f"implication {rule} violated: {prem} proven but {conc} refuted"
            )
    return issues


# -- subset-anchored uniform symmetric continuity ----------------------------


def check_wrt_subset(
    ambient: Domain,
    f: FuncSpec,
    subset: Domain,
    config: AnalysisConfig | None = None,
) -> Verdict:
    """Uniform symmetric continuity with anchors restricted to a subset:
    challenges are pairs (b+h, b-h) inside the ambient set centered at points
    of the subset."""
    config = config or AnalysisConfig()
    if subset == ambient:
        v = classify(ambient, f, config)["USC"]
        v.notion = "USC_wrt_B"
        v.notes.append("subset equals the ambient set; this is plain USC")
        return v
    if not (ambient.enumerable and subset.enumerable):
        raise ConfigurationError(
            "subset-anchored analysis needs enumerable ambient and subset"
        )
    en_a = ambient.enumerate(config.enum_limit)
    en_b = subset.enumerate(config.enum_limit)
    for b in en_b.points:
        if not ambient.contains(b):
            raise DomainError(
                f"subset point {format_quadext(b)} lies outside the ambient set"
            )
    pts = en_a.points
    val_of = {p: evaluate(f, p) for p in pts}
    truncated = en_a.truncated or en_b.truncated
    entries: list[tuple[QuadExt, QuadExt]] = []
    pairs: list[SymmetricPair] = []
    checked = 0
    lo = pts[0]
    for a in en_b.points:
        i = bisect.bisect_right(pts, a)
        for k in range(i, len(pts)):
            x = pts[k]
            if x == a:
                continue
            y = 2 * a - x
            if y < lo:
                break
            checked += 1
            if checked > config.max_pairs:
                truncated = True
                break
            if ambient.contains(y):
                pairs.append(SymmetricPair(x, y))
        if truncated and checked > config.max_pairs:
            break
    pairs.sort(key=SymmetricPair.sort_key)
    entries = [(p.h, abs(val_of[p.x] - val_of[p.y])) for p in pairs]
    res = _resolution(
        config,
        points=len(pts),
        enumeration_truncated=truncated,
        pairs_checked=checked,
    )
    v = _sweep_verdict("USC_wrt_B", entries, config, res, truncated, truncated, pairs)
    if v.status == "proven" and v.method == "midpoint_free":
        v.notes = ["no symmetric challenge is centered on the subset at any scale"]
        v.certificate["pairs_checked"] = checked
        if ambient.scale_complete and subset.scale_complete and not truncated:
            v.scope = "full"
    return v


# -- refuting sequences and witness re-verification ---------------------------


@dataclass
class RefutingSequence:
    """A parametric family of pairs claimed to refute one notion.

    kind 'usc' needs midpoints inside the ambient set, 'wrt_b' inside the
    centers set, 'sc' mirrors around a fixed anchor, 'c' pins one endpoint at
    the anchor, and 'uc' only needs shrinking distance.
    """

    kind: str
    epsilon: QuadExt
    term: Callable[[int], tuple[QuadExt, QuadExt]]
    claimed: Callable[[int], QuadExt]
    anchor: QuadExt | None = None
    n_max: int | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.kind not in ("usc", "uc", "c", "sc", "wrt_b"):
            raise ConfigurationError(f"unknown sequence kind {self.kind!r}")
        object.__setattr__(self, "epsilon", as_quadext(self.epsilon))
        if self.anchor is not None:
            object.__setattr__(self, "anchor", as_quadext(self.anchor))


@dataclass
class SequenceReport:
    ok: bool
    terms_checked: int
    failure: str | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "terms_checked": self.terms_checked,
            "failure": self.failure,
        }


def verify_refuting_sequence(
    ambient: Domain,
    f: FuncSpec,
    seq: RefutingSequence,
    n_check: int,
    centers: Domain | None = None,
) -> SequenceReport:
    """Re-derive every claim of the sequence exactly: membership, midpoint
    placement, strictly shrinking scale, and the exact oscillation values."""
    prev_scale: QuadExt | None = None
    limit = n_check if seq.n_max is None else min(n_check, seq.n_max)
    for n_i in range(1, limit + 1):
        x, y = (as_quadext(t) for t in seq.term(n_i))
        if not ambient.contains(x) or not ambient.contains(y):
            return SequenceReport(False, n_i - 1, f"term {n_i} leaves the domain")
        osc = abs(evaluate(f, x) - evaluate(f, y))
        if osc != as_quadext(seq.claimed(n_i)):
            return SequenceReport(
                False, n_i - 1, f"term {n_i} oscillation differs from the claim"
            )
        if osc < seq.epsilon:
            return SequenceReport(
                False, n_i - 1, f"term {n_i} oscillates below epsilon"
            )
        if seq.kind == "c":
            if seq.anchor is None or y != seq.anchor:
                return SequenceReport(
                    False, n_i - 1, f"term {n_i} does not pin the anchor"
                )
            scale = abs(x - seq.anchor)
        elif seq.kind == "sc":
            if seq.anchor is None or x + y != 2 * seq.anchor:
                return SequenceReport(
                    False, n_i - 1, f"term {n_i} is not mirrored around the anchor"
                )
            scale = (x - y) / 2 if x > y else (y - x) / 2
        elif seq.kind == "usc":
            if not ambient.contains((x + y) / 2):
                return SequenceReport(
                    False, n_i - 1, f"term {n_i} midpoint leaves the domain"
                )
            scale = abs(x - y) / 2
        elif seq.kind == "wrt_b":
            if centers is None or not centers.contains((x + y) / 2):
                return SequenceReport(
                    False, n_i - 1, f"term {n_i} midpoint leaves the center set"
                )
            scale = abs(x - y) / 2
        else:  # uc
            scale = abs(x - y)
        if scale.sign() <= 0:
            return SequenceReport(False, n_i - 1, f"term {n_i} has zero scale")
        if prev_scale is not None and not scale < prev_scale:
            return SequenceReport(
                False, n_i - 1, f"term {n_i} scale fails to shrink strictly"
            )
        prev_scale = scale
    return SequenceReport(True, limit)


def verify_witness(
    ambient: Domain, f: FuncSpec, verdict: Verdict, centers: Domain | None = None
) -> list[str]:
    """Re-check the exact content of a stored witness. Returns problems."""
    from .exactnum import parse_quadext

    w = verdict.witness
    issues: list[str] = []
    if w is None:
        return issues
    kind = w.get("kind")
    if kind == "pair" and "x" in w:
        x, y = parse_quadext(w["x"]), parse_quadext(w["y"])
        if not (ambient.contains(x) and ambient.contains(y)):
            issues.append("witness pair leaves the domain")
        else:
            osc = abs(evaluate(f, x) - evaluate(f, y))
            if "osc" in w and osc != parse_quadext(w["osc"]):
                issues.append("witness pair oscillation mismatch")
            if verdict.notion in ("USC", "USC_wrt_B"):
                cent = centers if centers is not None else ambient
                if not cent.contains((x + y) / 2):
                    issues.append("witness midpoint leaves the center set")
    elif kind in ("pair_family", "sequence"):
        for t in w.get("terms", []):
            x, y = parse_quadext(t["x"]), parse_quadext(t["y"])
            if not (ambient.contains(x) and ambient.contains(y)):
                issues.append("family term leaves the domain")
                break
            osc = abs(evaluate(f, x) - evaluate(f, y))
            if "osc" in t and osc != parse_quadext(t["osc"]):
                issues.append("family term oscillation mismatch")
                break
    elif kind == "anchor":
        a = parse_quadext(w["anchor"])
        if not ambient.contains(a):
            issues.append("witness anchor leaves the domain")
    elif kind == "approach":
        a = parse_quadext(w["anchor"])
        if not ambient.contains(a):
            issues.append("witness anchor leaves the domain")
        else:
            fa = evaluate(f, a)
            for t in w.get("terms", []):
                x = parse_quadext(t["x"])
                if not ambient.contains(x):
                    issues.append("approach term leaves the domain")
                    break
                if abs(evaluate(f, x) - fa) != parse_quadext(t["osc"]):
                    issues.append("approach term oscillation mismatch")
                    break
    elif kind == "chain":
        for rec in w.get("records", []):
            r, l = parse_quadext(rec["pair"][0]), parse_quadext(rec["pair"][1])
            if not (ambient.contains(r) and ambient.contains(l)):
                issues.append("chain record pair leaves the domain")
                break
            if abs(evaluate(f, r) - evaluate(f, l)) != parse_quadext(rec["osc"]):
                issues.append("chain record oscillation mismatch")
                break
    return issues


# -- uniform limits -----------------------------------------------------------


@dataclass
class TransferReport:
    sup_dists: list[tuple[int, QuadExt]]
    member_uc_status: list[tuple[int, str]]
    inequality_rows: int
    inequality_ok: bool
    stagnant: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "sup_dists": [
                {"index": i, "sup_dist": format_quadext(v)} for i, v in self.sup_dists
            ],
            "member_uc_status": [
                {"index": i, "uc": s} for i, s in self.member_uc_status
            ],
            "inequality_rows": self.inequality_rows,
            "inequality_ok": self.inequality_ok,
            "stagnant": self.stagnant,
            "notes": list(self.notes),
        }


def uniform_limit_transfer(
    domain: Domain,
    members: Sequence[tuple[int, FuncSpec]],
    limit_f: FuncSpec,
    config: AnalysisConfig | None = None,
) -> TransferReport:
    """Exact transfer analysis between a function sequence and its candidate
    limit: sup distances, member classifications, and the sampled-moduli
    inequality omega_sym[limit](delta) <= omega_sym[member](delta) +
    2 * sup_dist, checked exactly on the shared probe set."""
    config = config or AnalysisConfig()
    sup_dists = []
    member_status = []
    for idx, fm in members:
        sup_dists.append((idx, sup_abs_diff(fm, limit_f, domain)))
        member_status.append((idx, classify(domain, fm, config)["UC"].status))
    last_idx, last_fm = members[-1]
    prof_limit = modulus_profile(domain, limit_f, config, "usc")
    prof_member = modulus_profile(domain, last_fm, config, "usc")
    last_sup = sup_dists[-1][1]
    ok = True
    rows = 0
    for (d1, r1), (d2, r2) in zip(prof_limit.rows, prof_member.rows):
        if r1.value is None:
            continue
        rows += 1
        bound = (r2.value if r2.value is not None else QuadExt.of(0)) + 2 * last_sup
        if r1.value > bound:
            ok = False
    stagnant = last_sup > QuadExt.of(Fraction(1, 2))
    notes = []
    if stagnant:
        notes.append(
            "the sup distance to the limit does not fall below 1/2 even at "
            "the largest index, so the transfer bound never forces the "
            "limit's symmetric modulus down"
        )
    return TransferReport(sup_dists, member_status, rows, ok, stagnant, notes)
