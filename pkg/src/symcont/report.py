"""Deterministic report assembly and rendering.

All reports are plain dicts with stable key order (insertion order), so JSON
output is byte-identical across runs for fixed inputs, configuration, and
seed. Numbers appear in exact form only.
"""

from __future__ import annotations

import json

from .analysis import AnalysisConfig, ModulusProfile, Verdict, NOTIONS
from .exactnum import format_quadext


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def config_json(config: AnalysisConfig) -> dict:
    return {
        "delta_schedule": [format_quadext(d) for d in config.delta_schedule],
        "grid_exponent": config.grid_exponent,
        "max_pairs": config.max_pairs,
        "enum_limit": config.enum_limit,
        "seed": config.seed,
        "output_format": config.output_format,
    }


def analyze_report(
    domain_desc: str,
    function_desc: str,
    config: AnalysisConfig,
    verdicts: dict[str, Verdict],
    consistency: list[str],
    wrt_b: Verdict | None = None,
    witness_checks: dict[str, list[str]] | None = None,
) -> dict:
    report = {
        "command": "analyze",
        "domain": domain_desc,
        "function": function_desc,
        "config": config_json(config),
        "verdicts": {n: verdicts[n].to_json() for n in NOTIONS if n in verdicts},
        "consistency": list(consistency),
    }
    if wrt_b is not None:
        report["wrt_b"] = wrt_b.to_json()
    if witness_checks is not None:
        report["witness_checks"] = witness_checks
    return report


def moduli_report(
    domain_desc: str,
    function_desc: str,
    config: AnalysisConfig,
    profile: ModulusProfile,
) -> dict:
    return {
        "command": "moduli",
        "domain": domain_desc,
        "function": function_desc,
        "config": config_json(config),
        "profile": profile.to_json(),
    }


# ---------------------------------------------------------------------------
# text rendering


def _verdict_lines(verdict: Verdict, indent: str = "") -> list[str]:
    lines = [
        f"{indent}{verdict.notion:<9} {verdict.status:<12} "
        f"method={verdict.method}  scope={verdict.scope}"
    ]
    if verdict.witness:
        kind = verdict.witness.get("kind", "?")
        detail = ""
        if kind == "pair" and "x" in verdict.witness:
            w = verdict.witness
            detail = f" x={w['x']} y={w['y']} osc={w.get('osc', '?')}"
        elif kind == "anchor":
            w = verdict.witness
            detail = f" anchor={w['anchor']} jump={w['jump']}"
        elif kind in ("pair_family", "sequence", "approach", "chain"):
            terms = verdict.witness.get("terms") or verdict.witness.get("records") or []
            if terms:
                t0 = terms[0]
                detail = f" first: {json.dumps(t0)}"
        lines.append(f"{indent}  witness [{kind}]{detail}")
    if verdict.certificate:
        kind = verdict.certificate.get("kind", "?")
        lines.append(f"{indent}  certificate [{kind}]")
    for note in verdict.notes:
        lines.append(f"{indent}  note: {note}")
    return lines


def render_analyze_text(report: dict) -> str:
    lines = [
        f"domain:   {report['domain']}",
        f"function: {report['function']}",
        "",
    ]
    for verdict_json in report["verdicts"].values():
        v = Verdict(
            verdict_json["notion"],
            verdict_json["status"],
            verdict_json["method"],
            verdict_json["scope"],
            verdict_json["certificate"],
            verdict_json["witness"],
            verdict_json["resolution"],
            verdict_json["notes"],
        )
        lines.extend(_verdict_lines(v))
    if "wrt_b" in report:
        w = report["wrt_b"]
        lines.append("")
        lines.extend(
            _verdict_lines(
                Verdict(
                    w["notion"],
                    w["status"],
                    w["method"],
                    w["scope"],
                    w["certificate"],
                    w["witness"],
                    w["resolution"],
                    w["notes"],
                )
            )
        )
    if report["consistency"]:
        lines.append("")
        for flag in report["consistency"]:
            lines.append(f"CONSISTENCY: {flag}")
    if "witness_checks" in report:
        lines.append("")
        bad = {n: errs for n, errs in report["witness_checks"].items() if errs}
        if bad:
            for notion, errs in bad.items():
                for err in errs:
                    lines.append(f"WITNESS {notion}: {err}")
        else:
            lines.append("all witnesses re-verified")
    return "\n".join(lines) + "\n"


def render_moduli_text(report: dict) -> str:
    profile = report["profile"]
    lines = [
        f"domain:   {report['domain']}",
        f"function: {report['function']}",
        f"notion:   {profile['notion']}  points={profile['points']}"
        f"  sampled={profile['sampled']}  truncated={profile['truncated']}",
        "",
        f"{'delta':<22} {'omega':<22} challenges",
    ]
    for row in profile["rows"]:
        omega = "-" if row["omega"] is None else row["omega"]
        lines.append(f"{row['delta']:<22} {omega:<22} {row['challenges']}")
    return "\n".join(lines) + "\n"


def render_zoo_text(report: dict) -> str:
    lines: list[str] = []
    for case in report["cases"]:
        status = "ok" if case["ok"] else "MISMATCH"
        lines.append(f"{case['example']} [{case['case']}] {status}")
        lines.append(f"  domain:   {case['domain']}")
        lines.append(f"  function: {case['function']}")
        for verdict_json in case["verdicts"].values():
            v = Verdict(
                verdict_json["notion"],
                verdict_json["status"],
                verdict_json["method"],
                verdict_json["scope"],
                verdict_json["certificate"],
                verdict_json["witness"],
                verdict_json["resolution"],
                verdict_json["notes"],
            )
            lines.extend(_verdict_lines(v, indent="  "))
        if case["wrt_b"] is not None:
            w = case["wrt_b"]
            lines.append(
                f"  {w['notion']:<9} {w['status']:<12} "
                f"method={w['method']}  scope={w['scope']}"
            )
        for seq in case["sequences"]:
            mark = "verified" if seq["ok"] else f"FAILED: {seq['failure']}"
            extra = " (decides the verdict)" if seq["overrode_model_verdict"] else ""
            lines.append(
                f"  sequence [{seq['kind']}] {seq['terms_checked']} terms "
                f"{mark}{extra}"
            )
        for flag in case["consistency"]:
            lines.append(f"  CONSISTENCY: {flag}")
        for mm in case["mismatches"]:
            lines.append(f"  MISMATCH: {mm}")
        lines.append("")
    if report.get("relations"):
        lines.append("separation relations:")
    for rel in report.get("relations", []):
        mark = "confirmed" if rel["confirmed"] else "NOT CONFIRMED"
        lines.append(f"  {rel['relation']:<24} {mark}")
        for chk in rel["checks"]:
            ok = "ok" if chk["holds"] else "FAIL"
            lines.append(
                f"    {chk['example']}[{chk['case']}] {chk['notion']} "
                f"required={chk['required']} actual={chk['actual']} {ok}"
            )
    lines.append("")
    n = len(report["cases"])
    if report["ok"]:
        lines.append(f"zoo: all {n} cases match the expected verdicts")
    else:
        bad = sum(1 for c in report["cases"] if not c["ok"])
        lines.append(f"zoo: {bad} of {n} cases failed")
    return "\n".join(lines) + "\n"
