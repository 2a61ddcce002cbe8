"""Batch command-line front-end.

Subcommands (all read line-delimited JSON records; see
:mod:`khobstruct.records` for the schema):

* ``check-kh`` -- decomposition criterion for a period ``p^n``.
* ``check-murasugi`` -- Alexander-polynomial congruence.
* ``check-homflypt`` -- HOMFLYPT ideal-membership test.
* ``check-naik`` -- branched-cover torsion multiplicities.
* ``check-linking`` -- linking matrix conditions (plus determinant
  divisibility when determinants are present).
* ``scan`` -- run every criterion a record has data for and aggregate.
* ``import-csv`` -- convert a simple CSV table to the JSON schema.

Exit codes: 0 = no obstruction found, 1 = at least one record
obstructed, 2 = input or configuration error.  Output is deterministic;
pass ``--timing`` to append (non-deterministic) wall-clock fields.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass

from . import classical, criterion, equivlee, records
from .criterion import (
    CriterionInput,
    NoBlockDecomposition,
    SearchCapExceeded,
    Verdict,
    WidthPolicy,
)
from .laurent import BiLaurent

ALL_CRITERIA = ("kh", "murasugi", "homflypt", "naik", "linking")


@dataclass
class RunConfig:
    p: int
    n: int
    char_override: int | None = None
    strict_width: bool = False
    brute_force_cap: int = 64
    l_max: int = 10
    timing: bool = False

    def policy(self) -> WidthPolicy:
        return WidthPolicy(strict=self.strict_width)


def parse_period(text: str) -> tuple[int, int]:
    """Parse ``p`` or ``p^n`` into the pair ``(p, n)``."""
    try:
        if "^" in text:
            p_s, n_s = text.split("^", 1)
            p, n = int(p_s), int(n_s)
        else:
            p, n = int(text), 1
    except ValueError as exc:
        raise ValueError(f"malformed period {text!r}") from exc
    if p < 2 or n < 1:
        raise ValueError(f"period base and exponent must be positive: {text!r}")
    return p, n


def _poly_text_or_none(value) -> str | None:
    return value.text() if value is not None else None


def _kh_criterion(rec: records.KnotRecord, cfg: RunConfig) -> dict:
    if rec.khp is None:
        return {"verdict": Verdict.NOT_APPLICABLE.value, "notes": ["no khp data"]}
    char_r = cfg.char_override if cfg.char_override is not None else rec.field_char
    notes: list[str] = []
    if rec.link_data is None:
        if rec.s_invariant is None:
            return {
                "verdict": Verdict.NOT_APPLICABLE.value,
                "notes": ["knot record lacks s_invariant"],
            }
        vac = criterion.vacuity_check(rec.khp, cfg.p, cfg.n)
        if vac.vacuous:
            out = {
                "verdict": Verdict.VACUOUS.value,
                "certificate": {"defect": vac.defect.text()},
                "notes": ["criterion cannot obstruct knots at this period"],
            }
            if not vac.defect.is_zero():
                out["notes"].append("sanity divisibility FAILED: not a knot polynomial?")
            return out
        inp = CriterionInput.for_knot(rec.khp, cfg.p, cfg.n, char_r, rec.s_invariant)
        free_parts = inp.free_parts
    else:
        data = rec.link_data
        if rec.free_parts is not None:
            free_parts = rec.free_parts
        else:
            # Lee free parts per summand: representation indexed by the
            # kernel of order p^(n-j), normalised by the summand weight.
            parts = []
            for j in range(cfg.n + 1):
                poly = equivlee.elee_poly(data, data.m // cfg.p**j, char_r)
                parts.append(poly.div_exact_scalar(criterion.multiplicity(cfg.p, j)))
            free_parts = tuple(parts)
        if len(free_parts) != cfg.n + 1:
            return {
                "verdict": Verdict.NOT_APPLICABLE.value,
                "notes": ["free_parts length does not match the period exponent"],
            }
        inp = CriterionInput(
            khp=rec.khp, p=cfg.p, n=cfg.n, char_r=char_r, free_parts=tuple(free_parts)
        )
        if cfg.p in (2, 3) and cfg.n == 1:
            notes.append(
                "period-2/3 vacuity applies to knots only; the link congruence is weak"
            )
    policy = cfg.policy()
    result = None
    if cfg.n == 1 and rec.link_data is None:
        try:
            if rec.base_blocks is not None:
                base = criterion.Decomposition.build(
                    cfg.p,
                    1,
                    char_r,
                    free_parts,
                    {(0, 1): rec.base_blocks[0], (1, 1): rec.base_blocks[1]},
                )
            else:
                base = criterion.base_from_lee_ss(
                    rec.khp, rec.s_invariant, cfg.p, char_r
                )
            result = criterion.pruned_check_n1(inp, base, policy)
            notes.append("pruned residue-class search")
        except NoBlockDecomposition as exc:
            notes.append(f"pruned search unavailable ({exc}); brute force used")
    if result is None:
        try:
            result = criterion.brute_force_check(inp, policy, cap=cfg.brute_force_cap)
            notes.append("brute-force search")
        except SearchCapExceeded as exc:
            return {"verdict": Verdict.NOT_APPLICABLE.value, "notes": [str(exc)]}
    cert = dict(result.certificate)
    if "xi" in cert:
        cert["xi"] = cert["xi"].text()
    cert["cases"] = result.cases
    if result.witness is not None:
        cert["witness_blocks"] = {
            f"S[{k},{j}]": s.text() for (k, j), s in result.witness.blocks
        }
    return {
        "verdict": result.verdict.value,
        "certificate": cert,
        "notes": notes + result.notes,
    }


def _murasugi_criterion(rec: records.KnotRecord, cfg: RunConfig) -> dict:
    if rec.alexander is None:
        return {"verdict": Verdict.NOT_APPLICABLE.value, "notes": ["no alexander data"]}
    from .laurent import QLaurent

    candidates = list(rec.alexander_quotients) or []
    candidates.insert(0, QLaurent({0: 1}))
    feasible = {}
    for idx, delta0 in enumerate(candidates):
        ls = classical.murasugi_check(rec.alexander, delta0, cfg.p, cfg.l_max)
        feasible[f"delta0_{idx}"] = sorted(ls)
    verdict = (
        Verdict.NO_OBSTRUCTION if any(feasible.values()) else Verdict.OBSTRUCTED
    )
    return {
        "verdict": verdict.value,
        "certificate": {"feasible_l": feasible, "l_max": cfg.l_max},
        "notes": [],
    }


def _homflypt_criterion(rec: records.KnotRecord, cfg: RunConfig) -> dict:
    if rec.homflypt_triples is None:
        return {"verdict": Verdict.NOT_APPLICABLE.value, "notes": ["no homflypt data"]}
    poly = classical.HomflyPoly.from_triples(rec.homflypt_triples)
    ok = classical.homflypt_check(poly, cfg.p)
    return {
        "verdict": (Verdict.NO_OBSTRUCTION if ok else Verdict.OBSTRUCTED).value,
        "notes": [],
    }


def _naik_criterion(rec: records.KnotRecord, cfg: RunConfig) -> dict:
    if rec.torsion is None:
        return {"verdict": Verdict.NOT_APPLICABLE.value, "notes": ["no torsion data"]}
    ok = classical.naik_multiplicity_check(
        list(rec.torsion), list(rec.torsion_quotient), cfg.p
    )
    return {
        "verdict": (Verdict.NO_OBSTRUCTION if ok else Verdict.OBSTRUCTED).value,
        "notes": [],
    }


def _linking_criterion(rec: records.KnotRecord, cfg: RunConfig) -> dict:
    if rec.link_data is None:
        return {"verdict": Verdict.NOT_APPLICABLE.value, "notes": ["no link_data"]}
    ok = classical.linking_obstruction(rec.link_data, cfg.p)
    notes = ["orbit-by-orbit fixed/moved rule (interpretation)"]
    cert: dict = {"linking_passes": ok}
    if rec.determinant is not None and rec.determinant_quotient is not None:
        det_ok = classical.det_divisibility(rec.determinant, rec.determinant_quotient)
        cert["determinant_divisibility"] = det_ok
        ok = ok and det_ok
    return {
        "verdict": (Verdict.NO_OBSTRUCTION if ok else Verdict.OBSTRUCTED).value,
        "certificate": cert,
        "notes": notes,
    }


_DISPATCH = {
    "kh": _kh_criterion,
    "murasugi": _murasugi_criterion,
    "homflypt": _homflypt_criterion,
    "naik": _naik_criterion,
    "linking": _linking_criterion,
}


def run(rec: records.KnotRecord, cfg: RunConfig, criteria=ALL_CRITERIA) -> dict:
    """Run the selected criteria on one record and aggregate a report."""
    start = time.monotonic()
    report: dict = {
        "schema_version": records.SCHEMA_VERSION,
        "name": rec.name,
        "period": f"{cfg.p}^{cfg.n}" if cfg.n > 1 else str(cfg.p),
        "criteria": {},
    }
    overall = Verdict.NO_OBSTRUCTION
    any_applicable = False
    for name in criteria:
        entry = _DISPATCH[name](rec, cfg)
        report["criteria"][name] = entry
        if entry["verdict"] == Verdict.OBSTRUCTED.value:
            overall = Verdict.OBSTRUCTED
        if entry["verdict"] != Verdict.NOT_APPLICABLE.value:
            any_applicable = True
    if not any_applicable:
        overall = Verdict.NOT_APPLICABLE
    report["overall"] = overall.value
    if cfg.timing:
        report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
    return report


def scan(recs, cfg: RunConfig, criteria=ALL_CRITERIA) -> tuple[list[dict], dict]:
    """Run ``run`` over a record stream; returns (reports, summary).

    Records that fail to parse or raise input errors are quarantined and
    counted; the scan continues.  Reports are ordered by record name
    (ties broken by input order).
    """
    reports: list[dict] = []
    quarantined: list[dict] = []
    indexed = []
    for idx, item in enumerate(recs):
        try:
            rec = item if isinstance(item, records.KnotRecord) else records.parse_record(item)
            indexed.append((rec.name, idx, rec))
        except records.SchemaError as exc:
            quarantined.append({"index": idx, "error": str(exc)})
    for name, _idx, rec in sorted(indexed, key=lambda x: (x[0], x[1])):
        try:
            reports.append(run(rec, cfg, criteria))
        except (criterion.FieldNotAdmissible, classical.NotInRing,
                classical.QuotientNotSubgroup, ValueError) as exc:
            quarantined.append({"name": name, "error": str(exc)})
    counts: dict[str, int] = {}
    for rep in reports:
        counts[rep["overall"]] = counts.get(rep["overall"], 0) + 1
    summary = {
        "schema_version": records.SCHEMA_VERSION,
        "records": len(reports),
        "quarantined": len(quarantined),
        "quarantine_details": quarantined,
        "verdict_counts": dict(sorted(counts.items())),
    }
    return reports, summary


# -- command-line plumbing ----------------------------------------------------


def _read_records(path: str):
    stream = sys.stdin if path == "-" else open(path, "r", encoding="utf-8")
    try:
        for line in stream:
            line = line.strip()
            if not line:
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                yield {"__malformed__": str(exc)}
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(reports: list[dict], summary: dict | None, args) -> None:
    lines = [records.dumps_canonical(rep) for rep in reports]
    if summary is not None:
        lines.append(records.dumps_canonical({"summary": summary}))
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", help="path to a JSONL record file, or - for stdin")
    sub.add_argument("--period", required=True, help="tested period, p or p^n")
    sub.add_argument("--char", type=int, default=None,
                     help="override the coefficient field characteristic")
    sub.add_argument("--strict-width", action="store_true",
                     help="use the tighter block-width bound")
    sub.add_argument("--brute-force-cap", type=int, default=64,
                     help="refuse brute-force searches above this coefficient mass")
    sub.add_argument("--l-max", type=int, default=10,
                     help="largest axis linking number tried in the Alexander test")
    sub.add_argument("--jsonl", default=None, help="write reports to this file")
    sub.add_argument("--timing", action="store_true",
                     help="append wall-clock timings (breaks byte-reproducibility)")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="khobstruct",
        description="Periodicity obstructions for knots and links",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for cmd in ("check-kh", "check-murasugi", "check-homflypt",
                "check-naik", "check-linking", "scan"):
        _add_common(subs.add_parser(cmd))
    imp = subs.add_parser("import-csv", help="convert a CSV table to JSONL records")
    imp.add_argument("input", help="CSV file with name/khp/s_invariant/field_char columns")
    args = parser.parse_args(argv)

    if args.command == "import-csv":
        return _import_csv(args)

    try:
        p, n = parse_period(args.period)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cfg = RunConfig(
        p=p,
        n=n,
        char_override=args.char,
        strict_width=args.strict_width,
        brute_force_cap=args.brute_force_cap,
        l_max=args.l_max,
        timing=args.timing,
    )
    criteria = (
        ALL_CRITERIA
        if args.command == "scan"
        else (args.command.removeprefix("check-"),)
    )
    try:
        raw = list(_read_records(args.input))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parsed = []
    for idx, obj in enumerate(raw):
        if "__malformed__" in obj:
            parsed.append({"name": ""})  # quarantined by the schema check
        else:
            parsed.append(obj)
    reports, summary = scan(parsed, cfg, criteria)
    _emit(reports, summary if args.command == "scan" else None, args)
    obstructed = any(rep["overall"] == Verdict.OBSTRUCTED.value for rep in reports)
    return 1 if obstructed else 0


def _import_csv(args) -> int:
    try:
        with open(args.input, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            rows = list(reader)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for row in rows:
        obj: dict = {"schema_version": records.SCHEMA_VERSION, "name": row["name"]}
        if row.get("khp"):
            poly = BiLaurent.from_text(row["khp"])
            obj["khp"] = records.bilaurent_triples(poly)
        if row.get("s_invariant"):
            obj["s_invariant"] = int(row["s_invariant"])
        if row.get("field_char"):
            obj["field_char"] = int(row["field_char"])
        sys.stdout.write(records.dumps_canonical(obj) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
