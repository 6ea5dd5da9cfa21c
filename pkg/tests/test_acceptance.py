"""End-to-end acceptance checks.

Each test covers one acceptance criterion and prints exactly one
"criterion N [PASS|FAIL]" line (visible under pytest -s); the assertion
carries the same text. Every comparison here is exact: no tolerances.
"""

import json
import random
import time
from fractions import Fraction

from symcont import (
    SQRT2,
    Affine,
    AnalysisConfig,
    Const,
    FuncPiece,
    IntervalPiece,
    IntervalUnion,
    Piecewise,
    QuadExt,
    classify,
    modulus_profile,
    uc_oscillation,
)
from symcont.zoo import (
    build_example,
    midpoint_contrast_naturals,
    midpoint_exclusion_primes,
    run_all,
    run_example,
    verify_staircase_proof,
)

from conftest import (
    brute_force_usc_status,
    dec,
    qx,
    random_piecewise,
    random_quadext,
    random_sparse_domain,
    run_cli,
)


def criterion(n: int, desc: str, ok: bool, detail: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    line = f"criterion {n} [{tag}] {desc}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def seeded_cases(count: int = 200, max_points: int = 40):
    """The shared corpus of random exact domains and step functions.

    A few sampled midpoints are adjoined to each domain so that symmetric
    challenges actually exist; the total stays within max_points."""
    from symcont import FinitePoints

    for i in range(count):
        rng = random.Random(20_000 + i)
        base = random_sparse_domain(rng, max_points=max_points - 8)
        # compress into a window of width about 2 so the default delta
        # schedule (1 down to 2^-20) actually separates the points
        pts = [p / 4096 for p in base.points]
        if len(pts) >= 2:
            for _ in range(8):
                x, y = rng.sample(pts, 2)
                pts.append((x + y) / 2)
        dom = FinitePoints(tuple(pts))
        f = random_piecewise(rng, dom)
        yield dom, f


def test_criterion_1_catalog_verdicts_and_relations():
    t0 = time.perf_counter()
    report = run_all()
    elapsed = time.perf_counter() - t0
    ids = {c.example_id for c in report.cases}
    failures = [
        (c.example_id, c.case, c.mismatches, c.consistency)
        for c in report.cases
        if not c.ok
    ]
    ok = (
        elapsed < 60
        and len(ids) == 12
        and len(report.cases) == 14
        and not failures
        and report.ok
        and len(report.relations) == 5
        and all(r["confirmed"] for r in report.relations)
    )
    criterion(
        1,
        "catalog reproduces all verdicts and the five strictness relations",
        ok,
        f"{len(ids)} entries, {len(report.cases)} cases, {elapsed:.1f}s"
        + (f", failures: {failures}" if failures else ""),
    )


def test_criterion_2_midpoint_exclusion_and_contrast():
    t0 = time.perf_counter()
    primes = midpoint_exclusion_primes(1000)
    elapsed = time.perf_counter() - t0
    contrast = midpoint_contrast_naturals(500)
    ok = (
        primes["midpoint_free"]
        and primes["violations"] == []
        and primes["pairs_checked"] == 14028
        and elapsed < 10
        and contrast["all_in_family"]
        and contrast["confirmed"] == 500
        and contrast["failures"] == []
    )
    criterion(
        2,
        "prime reciprocals are midpoint-free; every natural-reciprocal "
        "midpoint lands in the family",
        ok,
        f"{primes['pairs_checked']} pairs in {elapsed:.1f}s, "
        f"{contrast['confirmed']} naturals",
    )


def test_criterion_3_symmetric_modulus_bounded_by_uniform():
    base = AnalysisConfig()
    doubled = AnalysisConfig(
        delta_schedule=tuple(2 * d for d in base.delta_schedule)
    )
    rows_checked = 0
    bad: list[str] = []
    count = 0
    for dom, f in seeded_cases():
        count += 1
        sym = modulus_profile(dom, f, base, "usc")
        uni = modulus_profile(dom, f, doubled, "uc")
        for (d_sym, r_sym), (d_uc, r_uc) in zip(sym.rows, uni.rows):
            assert d_uc == 2 * d_sym
            if r_sym.value is None:
                continue
            rows_checked += 1
            if r_uc.value is None or r_sym.value > r_uc.value:
                bad.append(f"domain #{count} at delta {d_sym}")
    ok = count == 200 and not bad and rows_checked > 0
    criterion(
        3,
        "omega_sym(delta) <= omega_uc(2*delta) exactly on 200 seeded domains",
        ok,
        f"{rows_checked} profile rows" + (f", violations: {bad[:3]}" if bad else ""),
    )


def test_criterion_4_usc_agrees_with_independent_oracle():
    agreements = 0
    disagreements: list[int] = []
    count = 0
    for dom, f in seeded_cases():
        count += 1
        got = classify(dom, f)["USC"].status
        want = brute_force_usc_status(dom, f)
        if got == want == "proven":
            agreements += 1
        else:
            disagreements.append(count)
    ok = count == 200 and agreements == 200
    criterion(
        4,
        "classifier and sequential-criterion oracle agree on USC for the "
        "same 200 domains",
        ok,
        f"{agreements}/200 agree"
        + (f", disagreements at {disagreements[:5]}" if disagreements else ""),
    )


def test_criterion_5_staircase_structure_at_depth():
    a = verify_staircase_proof("A", 1001, 500)
    b = verify_staircase_proof("B", 501, 500)
    ok = (
        a["all_ok"]
        and a["unit_gaps"]
        and a["skip_midpoints_in_gaps"]
        and a["chain_ok"]
        and b["all_ok"]
        and b["midpoints_inside_blocks"]
        and b["osc_exactly_two"]
        and b["scales_shrinking"]
    )
    criterion(
        5,
        "staircase identities hold exactly at 500 chain steps in both variants",
        ok,
        f"A: {a['all_ok']}, B: {b['all_ok']}",
    )


def _random_union_case(rng: random.Random):
    """A union of 2-4 bounded pieces with constant or affine values.

    Junctions either leave a gap of at least 1/4 or touch; a touching
    junction glues continuously (jump 0) or jumps by an integer >= 1.
    Returns (ambient, f, lipschitz M, max jump J, min gap or None).
    """
    lengths = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2))

    def leaf(anchor_x: QuadExt, anchor_val: QuadExt):
        if rng.random() < 0.5:
            return Const(anchor_val), QuadExt.of(0)
        m = QuadExt.of(Fraction(rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]), rng.choice([1, 2])))
        return Affine(m, anchor_val - m * anchor_x), abs(m)

    n_pieces = rng.randint(2, 4)
    pos = QuadExt.of(Fraction(rng.randint(-6, 6), rng.choice([1, 2])))
    pieces: list[IntervalPiece] = []
    funcs: list[FuncPiece] = []
    m_max = QuadExt.of(0)
    j_max = QuadExt.of(0)
    gaps: list[QuadExt] = []
    value = QuadExt.of(Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3])))
    touching_prev = False
    for k in range(n_pieces):
        fm, slope = leaf(pos, value)
        if slope > m_max:
            m_max = slope
        length = QuadExt.of(rng.choice(lengths))
        piece = IntervalPiece(
            pos, pos + length, lo_closed=not touching_prev, hi_closed=True
        )
        pieces.append(piece)
        funcs.append(FuncPiece(IntervalUnion((piece,)), fm))
        from symcont import evaluate

        end_value = evaluate(fm, piece.hi)
        if k < n_pieces - 1:
            if rng.random() < 0.5:
                gap = QuadExt.of(Fraction(rng.randint(1, 4), 4))
                gaps.append(gap)
                pos = piece.hi + gap
                value = QuadExt.of(Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3])))
                touching_prev = False
            else:
                pos = piece.hi
                if rng.random() < 0.5:
                    jump = QuadExt.of(rng.randint(1, 3) * rng.choice([-1, 1]))
                    value = end_value + jump
                    if abs(jump) > j_max:
                        j_max = abs(jump)
                else:
                    value = end_value
                touching_prev = True
    ambient = IntervalUnion(tuple(pieces))
    f = Piecewise(tuple(funcs))
    min_gap = min(gaps) if gaps else None
    return ambient, f, m_max, j_max, min_gap


def test_criterion_6_interval_decisions_match_sampled_sweeps():
    reports = run_example("ex-4.3")
    cases_ok = all(r.ok for r in reports)
    touching = next(r for r in reports if r.case == "g-touching")
    uc_w = touching.verdicts["UC"].witness
    usc_w = touching.verdicts["USC"].witness
    witness_ok = (
        uc_w["kind"] == "pair_family"
        and all(t["osc"] == "1" for t in uc_w["terms"])
        and usc_w["kind"] == "pair_family"
        and all(t["osc"] == "1" for t in usc_w["terms"])
    )

    cfg12 = AnalysisConfig(grid_exponent=12)
    delta = QuadExt.of(Fraction(1, 1024))
    union_failures: list[int] = []
    for i in range(100):
        rng = random.Random(40_000 + i)
        ambient, f, m_max, j_max, _ = _random_union_case(rng)
        verdict = classify(ambient, f, cfg12)["UC"]
        expect = "refuted" if j_max > 0 else "proven"
        swept = uc_oscillation(ambient, f, delta, cfg12).value
        if verdict.status != expect:
            union_failures.append(i)
            continue
        if expect == "proven":
            if swept is not None and swept > m_max * delta:
                union_failures.append(i)
        else:
            if swept is None or swept < j_max - m_max * delta:
                union_failures.append(i)
    ok = cases_ok and witness_ok and not union_failures
    criterion(
        6,
        "interval decision procedure matches unit-jump witnesses and 100 "
        "sampled sweeps at grid exponent 12",
        ok,
        "catalog cases ok, oscillation exactly 1"
        + (f", sweep failures at {union_failures[:5]}" if union_failures else ""),
    )


def test_criterion_7_exact_arithmetic_battery():
    rng = random.Random(777)
    trips_ok = True
    for _ in range(10_000):
        a = random_quadext(rng)
        b = random_quadext(rng)
        while b == 0:
            b = random_quadext(rng)
        if (a / b) * b != a or (a * b) / b != a or (a + b) - b != a:
            trips_ok = False
            break

    order_ok = True
    for _ in range(10_000):
        a = random_quadext(rng)
        b = random_quadext(rng)
        if (a < b) != (dec(a) < dec(b)) or (a == b) != (dec(a) == dec(b)):
            order_ok = False
            break

    midpoint_ok = True
    for _ in range(1000):
        q = Fraction(rng.randint(-4096, 4096), rng.randint(1, 64))
        mid = (QuadExt.of(q) + SQRT2) / 2
        if mid.irr != Fraction(1, 2) or mid.rat != q / 2:
            midpoint_ok = False
            break

    case = build_example("ex-2.8")[0]
    profile = modulus_profile(case.ambient, case.f, AnalysisConfig(), "usc")
    flat_zero = all(
        res.value is None or res.value == 0 for _, res in profile.rows
    )

    ok = trips_ok and order_ok and midpoint_ok and flat_zero
    criterion(
        7,
        "10^4 field round-trips, decimal order embedding, sqrt2 midpoints, "
        "and an identically zero symmetric modulus",
        ok,
        f"round-trips {trips_ok}, order {order_ok}, midpoints {midpoint_ok}, "
        f"omega_sym==0 {flat_zero}",
    )


def test_criterion_8_byte_identical_reports():
    first = run_cli("zoo", "--all", "--format", "json")
    second = run_cli("zoo", "--all", "--format", "json")
    parsed = json.loads(first.stdout)
    ok = (
        first.returncode == 0
        and second.returncode == 0
        and first.stdout == second.stdout
        and parsed["ok"] is True
    )
    criterion(
        8,
        "two catalog runs emit byte-identical reports on standard output",
        ok,
        f"{len(first.stdout)} bytes each",
    )
