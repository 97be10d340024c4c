"""Batch driver: verification runs, dimension tables, invariant listings.

Subcommands:

* ``verify``: for each n in the configured range, check the closed-form
  tables against raw invariant dimensions and the character oracle, run
  the coefficient and rank batteries, replay the full dimension chase,
  and emit a PASS/FAIL report (text, csv, or json). Exit code 0 on PASS,
  1 on FAIL, 2 on usage or internal error. Warnings about known
  discrepancies in the published reference tables are attached to the
  report but never affect the verdict.
* ``table``: one closed-form family next to its raw recomputation.
* ``invariants``: dimension (and optionally the echelonized basis) of a
  single space.

JSON reports are deterministic: two runs with the same configuration
produce byte-identical output. The environment variable
``EQUIVEXT_WORKERS`` overrides how many worker processes handle the
per-n verification jobs; results are assembled in order of n either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import characters, dimformulas
from .chase import TheoremFailure, verify_theorem
from .spaces import SpaceDescriptor, invariant_basis, space_dim
from .yoneda import DistinguishedClass, build_class, compose, map_on_invariants, theta_of

REPORT_VERSION = "1.0"

TABLE_ORDER = ("h_OP", "h_G", "ext_G_OP", "ext_G_G")


@dataclass(frozen=True)
class RunConfig:
    n_min: int = 2
    n_max: int = 4
    oracle_n_max: int = 8
    format: str = "text"
    output: str | None = None
    check_remark: bool = False
    swap_uv: bool = False
    print_bases: bool = False

    def __post_init__(self):
        if not (2 <= self.n_min <= self.n_max):
            raise ValueError("need 2 <= n_min <= n_max")
        if self.oracle_n_max < self.n_max:
            raise ValueError("oracle_n_max must be at least n_max")
        if self.format not in ("text", "csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def _raw_table(family: str, n: int) -> list[int]:
    a, b = dimformulas.TABLE_FAMILIES[family]
    return [invariant_basis(SpaceDescriptor(n, k, a, b)).dim for k in range(2 * n + 1)]


def _coefficient_checks(n: int) -> list[dict]:
    theta = build_class("theta(v)", n)
    omega = build_class("omega", n)
    phi_v = build_class("phi(v)", n)
    phi_u = build_class("phi(u)", n)
    xi = build_class("xi", n)
    # The published values; the xi.theta one needs the literal table
    # contraction (the other three involve no contraction at all).
    cases = [
        ("theta.omega", compose(theta.value, omega.value), "u1^v1^v2|e2", 3),
        ("theta.phi_v", compose(theta.value, phi_v.value), "v1^v2|d1|e2", 3),
        ("theta.phi_u", compose(theta.value, phi_u.value), "u1^v1|d1|e1", 4),
        (
            "xi.theta",
            compose(xi.value, theta.value, pairing="table"),
            "u1^v1|e1",
            1 - n,
        ),
        (
            "xi.theta.equivariant",
            compose(xi.value, theta.value),
            "u1^v1|e2",
            -1,
        ),
    ]
    out = []
    for check_id, value, monomial, expected in cases:
        got = value.coeff_of(monomial)
        out.append(
            {
                "id": check_id,
                "monomial": monomial,
                "expected": expected,
                "got": int(got) if got.denominator == 1 else str(got),
                "status": "PASS" if got == expected else "FAIL",
            }
        )
    return out


def _rank_checks(n: int, swap_uv: bool, check_remark: bool) -> list[dict]:
    theta = build_class("theta(u)" if swap_uv else "theta(v)", n)
    zero = DistinguishedClass("theta(0)", theta_of(n, 0, 0), theta.space)
    cases = [
        ("push-H0", theta, "push", SpaceDescriptor(n, 0, 0, 0), "== 1", lambda r: r == 1),
        ("push-H2", theta, "push", SpaceDescriptor(n, 2, 0, 0), "== 1", lambda r: r == 1),
        ("push-ext1-G-OP", theta, "push", SpaceDescriptor(n, 1, 1, 0), "== 2", lambda r: r == 2),
        ("pull-ext1-G-G", theta, "pull", SpaceDescriptor(n, 1, 1, 1), ">= 1", lambda r: r >= 1),
        ("push-zero-class", zero, "push", SpaceDescriptor(n, 0, 0, 0), "== 0", lambda r: r == 0),
    ]
    if check_remark:
        for i in range(2, n):
            cases.append(
                (
                    f"push-H{2 * i}",
                    theta,
                    "push",
                    SpaceDescriptor(n, 2 * i, 0, 0),
                    "== 1",
                    lambda r: r == 1,
                )
            )
    out = []
    for check_id, cls, side, source, expected, ok in cases:
        got = map_on_invariants(cls, side, source).rank
        out.append(
            {
                "id": check_id,
                "expected": expected,
                "got": got,
                "status": "PASS" if ok(got) else "FAIL",
            }
        )
    return out


def _battery_descriptors(n: int) -> list[SpaceDescriptor]:
    return [
        SpaceDescriptor(n, 0, 0, 0),
        SpaceDescriptor(n, 1, 0, 1),
        SpaceDescriptor(n, 2, 0, 0),
        SpaceDescriptor(n, 3, 0, 1),
        SpaceDescriptor(n, 1, 1, 0),
        SpaceDescriptor(n, 2, 1, 1),
        SpaceDescriptor(n, 1, 1, 1),
        SpaceDescriptor(n, 2, 0, 1),
    ]


def _verify_one(args: tuple[int, bool, bool, bool]) -> dict:
    n, check_remark, swap_uv, print_bases = args
    result: dict = {"n": n}

    tables: dict[str, dict] = {}
    raw: dict[str, list[int]] = {}
    for family in TABLE_ORDER:
        formula = dimformulas.formula_table(family, n)
        raw[family] = _raw_table(family, n)
        tables[family] = {
            "formula": list(formula.dims),
            "raw": raw[family],
            "match": list(formula.dims) == raw[family],
        }
    d_formula = dimformulas.d_vector(n)
    d_raw = [x + y for x, y in zip(raw["ext_G_OP"], raw["ext_G_G"])]
    tables["d"] = {
        "formula": list(d_formula.dims),
        "raw": d_raw,
        "match": list(d_formula.dims) == d_raw,
    }
    result["tables"] = tables
    result["palindromes"] = all(
        dimformulas.formula_table(f, n).is_palindrome() for f in TABLE_ORDER
    )

    seen: set[SpaceDescriptor] = set()
    oracle_match = True
    count = 0
    for family in TABLE_ORDER:
        a, b = dimformulas.TABLE_FAMILIES[family]
        for k in range(2 * n + 1):
            seen.add(SpaceDescriptor(n, k, a, b))
    seen.update(_battery_descriptors(n))
    for s in sorted(seen, key=lambda s: (s.k, s.a, s.b)):
        count += 1
        if characters.invariant_dim(s) != invariant_basis(s).dim:
            oracle_match = False
    result["oracle"] = {"descriptors": count, "all_match": oracle_match}

    result["coefficients"] = _coefficient_checks(n)
    result["ranks"] = _rank_checks(n, swap_uv, check_remark)

    try:
        theorem = verify_theorem(n, check_remark=check_remark, swap_uv=swap_uv)
        result["theorem"] = {
            "ext1_MM": theorem.ext1_MM,
            "hom_MM": theorem.hom_MM,
            "h_M": list(theorem.h_M),
            "steps": [s.as_dict() for s in theorem.steps],
            "status": "PASS" if theorem.passed else "FAIL",
        }
    except TheoremFailure as failure:
        result["theorem"] = {
            "ext1_MM": None,
            "hom_MM": None,
            "h_M": [],
            "steps": [s.as_dict() for s in failure.steps],
            "status": "FAIL",
        }

    if print_bases:
        bases: dict[str, list[str]] = {}
        for family in TABLE_ORDER:
            a, b = dimformulas.TABLE_FAMILIES[family]
            for k in range(2 * n + 1):
                basis = invariant_basis(SpaceDescriptor(n, k, a, b))
                if basis.dim:
                    key = f"{family}[{k}]"
                    bases[key] = [v.render() for v in basis.vectors]
        result["bases"] = bases

    ok = (
        all(t["match"] for t in tables.values())
        and result["palindromes"]
        and oracle_match
        and all(c["status"] == "PASS" for c in result["coefficients"])
        and all(c["status"] == "PASS" for c in result["ranks"])
        and result["theorem"]["status"] == "PASS"
    )
    result["verdict"] = "PASS" if ok else "FAIL"
    return result


def _oracle_extension(n_from: int, n_to: int) -> list[dict]:
    out = []
    for n in range(n_from, n_to + 1):
        entry: dict = {"n": n}
        match = True
        for family in TABLE_ORDER:
            a, b = dimformulas.TABLE_FAMILIES[family]
            dims = [
                characters.invariant_dim(SpaceDescriptor(n, k, a, b))
                for k in range(2 * n + 1)
            ]
            entry[family] = dims
            match = match and dims == list(dimformulas.formula_table(family, n).dims)
        entry["match_formula"] = match
        out.append(entry)
    return out


def run_verify(cfg: RunConfig) -> dict:
    ns = list(range(cfg.n_min, cfg.n_max + 1))
    jobs = [(n, cfg.check_remark, cfg.swap_uv, cfg.print_bases) for n in ns]
    workers = int(os.environ.get("EQUIVEXT_WORKERS", "0")) or min(
        len(jobs), os.cpu_count() or 1
    )
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_n = list(pool.map(_verify_one, jobs))
    else:
        per_n = [_verify_one(job) for job in jobs]
    per_n.sort(key=lambda r: r["n"])

    warnings = [
        {
            "code": "published-coefficient-monomial",
            "n": None,
            "message": (
                "the published coefficient check names the monomial u1^u1|d1|e1, "
                "whose repeated wedge factor makes it identically zero; the "
                "nonzero coefficient lives at u1^v1|d1|e1 and equals 4"
            ),
        },
        {
            "code": "published-pull-pairing",
            "n": None,
            "message": (
                "the published nonvanishing witness for precomposition contracts "
                "legs through the literal delta table, which does not commute "
                "with the group action; the equivariant contraction "
                "(delta - 1/(n+1)) sends the same class to a nonzero invariant "
                "whose coefficient at u1^v1|e1 vanishes, with nonvanishing "
                "visible at u1^v1|e2 (value -1 for every n); the table replay "
                "reproduces the published value 1-n at u1^v1|e1, and every "
                "rank and chase conclusion is unaffected"
            ),
        },
    ]
    for n in ns:
        if n >= 3:
            computed = dimformulas.d_vector(n).render()
            warnings.append(
                {
                    "code": "published-d-tail",
                    "n": n,
                    "message": (
                        f"published reference table lists the two-leg degree vector "
                        f"with tail {dimformulas.PUBLISHED_D_TAIL}; the exact "
                        f"convolution is palindromic with tail "
                        f"{dimformulas.COMPUTED_D_TAIL}, computed {computed}; "
                        f"ranks and chases are unaffected"
                    ),
                }
            )

    oracle_tables = _oracle_extension(cfg.n_max + 1, cfg.oracle_n_max)
    verdict = "PASS" if (
        all(r["verdict"] == "PASS" for r in per_n)
        and all(e["match_formula"] for e in oracle_tables)
    ) else "FAIL"
    return {
        "version": REPORT_VERSION,
        "config": asdict(cfg),
        "per_n": per_n,
        "oracle_tables": oracle_tables,
        "warnings": warnings,
        "verdict": verdict,
    }


def _verify_text(report: dict) -> str:
    lines = []
    cfg = report["config"]
    lines.append(
        f"verify n={cfg['n_min']}..{cfg['n_max']} "
        f"check_remark={str(cfg['check_remark']).lower()} "
        f"swap_uv={str(cfg['swap_uv']).lower()}"
    )
    for r in report["per_n"]:
        n = r["n"]
        table_ok = all(t["match"] for t in r["tables"].values())
        lines.append(
            f"n={n}: tables {'OK' if table_ok else 'MISMATCH'}, "
            f"oracle {'OK' if r['oracle']['all_match'] else 'MISMATCH'} "
            f"({r['oracle']['descriptors']} spaces), "
            f"coefficients {sum(c['status'] == 'PASS' for c in r['coefficients'])}/"
            f"{len(r['coefficients'])}, "
            f"ranks {sum(c['status'] == 'PASS' for c in r['ranks'])}/{len(r['ranks'])}, "
            f"ext1(M,M)={r['theorem']['ext1_MM']} [{r['theorem']['status']}]"
        )
        for family, t in r["tables"].items():
            mark = "OK" if t["match"] else "MISMATCH"
            formula = "(" + ",".join(map(str, t["formula"])) + ")"
            raw = "(" + ",".join(map(str, t["raw"])) + ")"
            lines.append(f"  {family}: {formula} | {raw} | {mark}")
        if "bases" in r:
            for key, vectors in r["bases"].items():
                lines.append(f"  basis {key}:")
                for v in vectors:
                    lines.append(f"    {v}")
    for e in report["oracle_tables"]:
        lines.append(
            f"oracle n={e['n']}: ext_G_G=("
            + ",".join(map(str, e["ext_G_G"]))
            + f") match_formula={str(e['match_formula']).lower()}"
        )
    for w in report["warnings"]:
        where = f" n={w['n']}" if w["n"] is not None else ""
        lines.append(f"WARN [{w['code']}]{where}: {w['message']}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines) + "\n"


def _verify_csv(report: dict) -> str:
    rows = ["section,n,id,expected,got,status"]

    def add(section, n, check_id, expected, got, status):
        rows.append(f"{section},{n},{check_id},{expected},{got},{status}")

    for r in report["per_n"]:
        n = r["n"]
        for family, t in r["tables"].items():
            for k, (f, raw) in enumerate(zip(t["formula"], t["raw"])):
                add("table", n, f"{family}[{k}]", f, raw, "PASS" if f == raw else "FAIL")
        add(
            "oracle",
            n,
            "dimensions",
            "match",
            r["oracle"]["descriptors"],
            "PASS" if r["oracle"]["all_match"] else "FAIL",
        )
        for c in r["coefficients"]:
            add("coefficient", n, c["id"], c["expected"], c["got"], c["status"])
        for c in r["ranks"]:
            add("rank", n, c["id"], c["expected"].replace(",", ";"), c["got"], c["status"])
        for s in r["theorem"]["steps"]:
            add("theorem", n, s["id"], "", json.dumps(s["value"]).replace(",", ";"), s["status"])
        add("verdict", n, "per-n", "PASS", r["verdict"], r["verdict"])
    for w in report["warnings"]:
        add("warning", w["n"] if w["n"] is not None else "", w["code"], "", "", "WARN")
    add("verdict", "", "overall", "PASS", report["verdict"], report["verdict"])
    return "\n".join(rows) + "\n"


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _verify_csv(report)
    return _verify_text(report)


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    report = run_verify(cfg)
    return report, 0 if report["verdict"] == "PASS" else 1


def cmd_table(which: str, n: int, fmt: str) -> str:
    if which not in TABLE_ORDER + ("d",):
        raise ValueError(f"unknown table {which!r}")
    formula = dimformulas.formula_table(which, n)
    if which == "d":
        raw = [
            x + y
            for x, y in zip(_raw_table("ext_G_OP", n), _raw_table("ext_G_G", n))
        ]
    else:
        raw = _raw_table(which, n)
    match = list(formula.dims) == raw
    if fmt == "json":
        payload = {
            "table": which,
            "n": n,
            "formula": list(formula.dims),
            "raw": raw,
            "match": match,
        }
        return json.dumps(payload, indent=2) + "\n"
    formula_s = "(" + ",".join(map(str, formula.dims)) + ")"
    raw_s = "(" + ",".join(map(str, raw)) + ")"
    mark = "OK" if match else "MISMATCH"
    if fmt == "csv":
        rows = ["table,n,formula,raw,match"]
        rows.append(f"{which},{n},\"{formula_s}\",\"{raw_s}\",{mark}")
        return "\n".join(rows) + "\n"
    return f"table {which} n={n}\n{formula_s} | {raw_s} | {mark}\n"


def cmd_invariants(n: int, k: int, a: int, b: int, print_bases: bool, fmt: str) -> str:
    s = SpaceDescriptor(n, k, a, b)
    basis = invariant_basis(s)
    untested = not s.validated_legs
    if fmt == "json":
        payload = {
            "descriptor": {"n": n, "k": k, "dual_legs": a, "legs": b},
            "space_dim": space_dim(s),
            "dim": basis.dim,
            "untested_legs": untested,
        }
        if print_bases:
            payload["basis"] = [v.render() for v in basis.vectors]
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"dim {basis.dim}"]
    if untested:
        lines.append("note: leg counts above 1 are outside the validated paths (untested)")
    if print_bases:
        for v in basis.vectors:
            lines.append(v.render())
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equivext",
        description="exact verification of equivariant extension dimension tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full verification battery")
    p_verify.add_argument("--n-min", type=int, default=2)
    p_verify.add_argument("--n-max", type=int, default=4)
    p_verify.add_argument("--oracle-n-max", type=int, default=8)
    p_verify.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_verify.add_argument("--output", default=None)
    p_verify.add_argument("--check-remark", action="store_true")
    p_verify.add_argument("--swap-uv", action="store_true")
    p_verify.add_argument("--print-bases", action="store_true")

    p_table = sub.add_parser("table", help="render one dimension table")
    p_table.add_argument("which", choices=TABLE_ORDER + ("d",))
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_table.add_argument("--output", default=None)

    p_inv = sub.add_parser("invariants", help="dimension of one invariant subspace")
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--k", type=int, required=True)
    p_inv.add_argument("--dual", type=int, default=0, help="number of dual legs")
    p_inv.add_argument("--rho", type=int, default=0, help="number of plain legs")
    p_inv.add_argument("--print-bases", action="store_true")
    p_inv.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_inv.add_argument("--output", default=None)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(
                n_min=args.n_min,
                n_max=args.n_max,
                oracle_n_max=args.oracle_n_max,
                format=args.format,
                output=args.output,
                check_remark=args.check_remark,
                swap_uv=args.swap_uv,
                print_bases=args.print_bases,
            )
            report, code = cmd_verify(cfg)
            _emit(render_report(report, cfg.format), cfg.output)
            return code
        if args.command == "table":
            if args.n < 2:
                raise ValueError("table requires n >= 2")
            _emit(cmd_table(args.which, args.n, args.format), args.output)
            return 0
        if args.command == "invariants":
            _emit(
                cmd_invariants(
                    args.n, args.k, args.dual, args.rho, args.print_bases, args.format
                ),
                args.output,
            )
            return 0
        parser.error("unknown command")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal error
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
