"""Command-line surface.

Subcommands: check, replay, verify-paper, lattice, gset, sapir, derive,
refute.  Reports go to stdout; --json writes machine-readable output,
and the verify-paper / lattice report paths additionally write CSV and
matplotlib figures.  Exit status is 0 exactly when every executed check
passed (for derive: proved; for refute: refuted), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import deduction, gsets, lattices, semigroups, varieties, verify
from .varieties import Equation, parse_identity
from .words import PartitionLambda, word


def _read_lines(path: str) -> list[str]:
    return Path(path).read_text().splitlines()


def _identities_from_args(args: argparse.Namespace) -> list:
    idents = []
    for text in args.id or []:
        idents.append(parse_identity(text))
    if getattr(args, "file", None):
        idents.extend(varieties.parse_identity_lines(_read_lines(args.file)))
    if not idents:
        raise ValueError("no identities given; use --id or --file")
    return idents


def cmd_check(args: argparse.Namespace) -> int:
    patterns = [word(p) for p in args.patterns or []]
    variety = varieties.parse_variety(args.variety, patterns)
    idents = _identities_from_args(args)
    records = []
    all_hold = True
    for ident in idents:
        res = varieties.holds(variety, ident)
        all_hold &= res.holds
        verdict = "holds" if res.holds else "FAILS"
        print(f"{verdict}  {ident}  [{res.reason}]")
        records.append(
            {"id": str(ident), "status": "pass" if res.holds else "fail", "witness": res.reason}
        )
    if args.json:
        Path(args.json).write_text(
            json.dumps({"suite": f"check:{variety}", "checks": records}, indent=2) + "\n"
        )
    return 0 if all_hold else 1


def cmd_replay(args: argparse.Namespace) -> int:
    rep = gsets.replay_balanced_identity(word(args.u), word(args.v))
    for line in rep.trace:
        print(line)
    print(f"replay ok: {rep.ok}")
    if args.json:
        Path(args.json).write_text(json.dumps(rep.to_dict(), indent=2) + "\n")
    return 0 if rep.ok else 1


def cmd_verify_paper(args: argparse.Namespace) -> int:
    profile_name = os.environ.get("VLL_BUDGET", args.profile)
    if profile_name not in verify.PROFILES:
        raise ValueError(f"unknown profile {profile_name!r} (quick or full)")
    profile = verify.PROFILES[profile_name]
    report = verify.run_suite(profile, echo=print)
    print(report.summary_lines()[-1])
    if args.json:
        report.write_json(args.json)
    if args.csv:
        report.write_csv(args.csv)
    if args.figures:
        from .report import render_hasse_figure, render_report_figure

        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        render_report_figure(report, outdir / "suite-summary.png")
        for lat in (lattices.n5(), lattices.m3()):
            bad = {
                x
                for x in range(lat.size)
                if not lattices.classify_element(lat, x).modular
            }
            render_hasse_figure(
                lat,
                outdir / f"{str(lat).lower()}.png",
                highlight=bad,
                caption=f"{lat} (non-modular elements in red)",
            )
        print(f"figures written to {outdir}")
    return report.exit_code


def _load_lattice(args: argparse.Namespace) -> lattices.FiniteLattice:
    if args.file:
        return lattices.parse_lattice_lines(_read_lines(args.file), name=Path(args.file).stem)
    if args.name:
        return lattices.catalog(args.name)
    raise ValueError("give --file or --name")


def cmd_lattice(args: argparse.Namespace) -> int:
    lat = _load_lattice(args)
    print(f"{lat}: size {lat.size}, bottom {lat.label(lat.bottom)}, top {lat.label(lat.top)}")
    rows = []
    if args.classify:
        flags = lattices.classify_all(lat)
        for x, f in enumerate(flags):
            rows.append(
                {
                    "element": lat.label(x),
                    "modular": f.modular,
                    "lower_modular": f.lower_modular,
                    "upper_modular": f.upper_modular,
                    "distributive": f.distributive,
                }
            )
            marks = ",".join(
                name
                for name, flag in (
                    ("mod", f.modular),
                    ("lmod", f.lower_modular),
                    ("umod", f.upper_modular),
                    ("distr", f.distributive),
                )
                if flag
            )
            print(f"  {lat.label(x)}: {marks or '-'}")
        zd, zd_witness = lattices.is_zero_distributive(lat)
        print(f"0-distributive: {zd}" + (f" (witness {zd_witness})" if zd_witness else ""))
    if args.congruences:
        cons = lattices.enumerate_lattice_congruences(lat)
        print(f"congruences: {len(cons)}")
    if args.json:
        payload = {"lattice": str(lat), "size": lat.size, "elements": rows}
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    if args.csv and rows:
        import csv as _csv

        with open(args.csv, "w", newline="") as fh:
            writer = _csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
    if args.figure:
        from .report import render_hasse_figure

        flags = lattices.classify_all(lat)
        bad = {x for x, f in enumerate(flags) if not f.modular}
        render_hasse_figure(
            lat, args.figure, highlight=bad, caption=f"{lat} (non-modular in red)"
        )
        print(f"figure written to {args.figure}")
    return 0


def cmd_gset(args: argparse.Namespace) -> int:
    parts = tuple(int(tok) for tok in args.lam.split(","))
    lam = PartitionLambda(parts)
    gset = gsets.build_word_gset(lam)
    print(f"W{lam}: carrier {gset.size}, stabilizer order {gset.group_order}")
    payload: dict = {
        "lambda": list(parts),
        "carrier_size": gset.size,
        "group_order": gset.group_order,
    }
    if args.enumerate:
        cons = gsets.enumerate_congruences(gset, budget=args.budget)
        print(f"congruences: {len(cons)}")
        payload["congruence_count"] = len(cons)
        if gset.size <= 6:
            for c in cons:
                classes = [
                    "{" + ",".join(str(gset.carrier[i]) for i in cls) + "}"
                    for cls in c.classes()
                ]
                print("  " + " ".join(classes))
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_sapir(args: argparse.Namespace) -> int:
    basis = [word(b) for b in args.basis or []]
    if args.verbal is not None:
        sap = deduction.sapir_with_verbal(args.r, basis, [word(v) for v in args.verbal])
    else:
        sap = deduction.sapir_system(args.r, basis)
    print(sap.generated.label)
    eqs = sorted(str(e) for e in sap.generated.equations)
    for line in eqs:
        print(f"  {line}")
    if args.json:
        Path(args.json).write_text(
            json.dumps({"label": sap.generated.label, "identities": eqs}, indent=2) + "\n"
        )
    return 0


def _bounds_from_args(args: argparse.Namespace) -> deduction.Bounds:
    return deduction.Bounds(args.max_word_len, args.max_image_len, args.max_states)


def cmd_derive(args: argparse.Namespace) -> int:
    if args.system:
        sys_ = deduction.parse_system_lines(_read_lines(args.system))
    elif args.axiom:
        sys_ = deduction.parse_system_lines(args.axiom)
    else:
        raise ValueError("give --system or --axiom")
    ident = parse_identity(args.id)
    if not isinstance(ident, Equation):
        raise ValueError("derive works on equations u = v")
    res = deduction.derive(sys_, ident, _bounds_from_args(args))
    print(f"{ident}: {res.outcome}")
    for step in res.trace:
        print("  " + step.describe())
    if args.json:
        Path(args.json).write_text(
            json.dumps(
                {
                    "identity": str(ident),
                    "outcome": res.outcome,
                    "trace": [s.describe() for s in res.trace],
                },
                indent=2,
            )
            + "\n"
        )
    return 0 if res.proved else 1


def cmd_refute(args: argparse.Namespace) -> int:
    models = [semigroups.builtin(name) for name in args.model or []]
    if args.table:
        models.append(
            semigroups.parse_cayley_lines(_read_lines(args.table), name=Path(args.table).stem)
        )
    if not models:
        raise ValueError("give at least one --model or --table")
    ident = parse_identity(args.id)
    res = deduction.refute(models, ident)
    if res.outcome == "refuted":
        print(f"{ident}: refuted in {res.model} at {dict(res.assignment or ())}")
    else:
        print(f"{ident}: no refutation found ({res.outcome})")
    if args.json:
        Path(args.json).write_text(
            json.dumps(
                {
                    "identity": str(ident),
                    "outcome": res.outcome,
                    "model": res.model,
                    "assignment": dict(res.assignment or ()) or None,
                },
                indent=2,
            )
            + "\n"
        )
    return 0 if res.outcome == "refuted" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semivar",
        description="Identity criteria, finite oracles and congruence machinery "
        "for semigroup varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide identities against a variety criterion")
    p.add_argument("--variety", required=True, help="T SL LZ RZ COM P Prev Cn ZR")
    p.add_argument("--id", action="append", help='identity like "ab = aab" or "aa = 0"')
    p.add_argument("--file", help="identity file, one per line")
    p.add_argument("--patterns", action="append", help="null patterns for ZR")
    p.add_argument("--json", help="write a JSON report")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("replay", help="congruence-chain replay for a balanced identity")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--json", help="write the replay report as JSON")
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("verify-paper", help="run the verification suite")
    p.add_argument("--profile", default="quick", choices=sorted(verify.PROFILES))
    p.add_argument("--json", help="write the JSON report")
    p.add_argument("--csv", help="write the delimited report")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("lattice", help="validate and classify a finite lattice")
    p.add_argument("--file", help='lattice file ("n <size>" plus cover lines "i < j")')
    p.add_argument("--name", help="catalog name: chain(n) boolean(k) M3 N5 product(a,b)")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--congruences", action="store_true")
    p.add_argument("--figure", help="render the cover diagram to this file")
    p.add_argument("--json", help="write a JSON report")
    p.add_argument("--csv", help="write the classification table as CSV")
    p.set_defaults(fn=cmd_lattice)

    p = sub.add_parser("gset", help="build an anagram G-set")
    p.add_argument("--lambda", dest="lam", required=True, help="partition like 3,2,1,1")
    p.add_argument("--enumerate", action="store_true", help="enumerate congruences")
    p.add_argument("--budget", type=int, default=500_000)
    p.add_argument("--json", help="write a JSON report")
    p.set_defaults(fn=cmd_gset)

    p = sub.add_parser("sapir", help="generate the identity system of a group variety")
    p.add_argument("--r", type=int, required=True, help="exponent of the group variety")
    p.add_argument("--basis", action="append", help="basis word (repeatable)")
    p.add_argument("--verbal", action="append", help="verbal generator word (repeatable)")
    p.add_argument("--json", help="write the identities as JSON")
    p.set_defaults(fn=cmd_sapir)

    p = sub.add_parser("derive", help="bounded equational derivation")
    p.add_argument("--system", help="identity-system file with optional label: header")
    p.add_argument("--axiom", action="append", help='axiom like "ab = aab" (repeatable)')
    p.add_argument("--id", required=True, help="target identity")
    p.add_argument("--max-word-len", type=int, default=16)
    p.add_argument("--max-image-len", type=int, default=4)
    p.add_argument("--max-states", type=int, default=2_000_000)
    p.add_argument("--json", help="write outcome and trace as JSON")
    p.set_defaults(fn=cmd_derive)

    p = sub.add_parser("refute", help="search finite models for a counterexample")
    p.add_argument("--model", action="append", help="builtin name (repeatable)")
    p.add_argument("--table", help="Cayley table file")
    p.add_argument("--id", required=True, help="identity to refute")
    p.add_argument("--json", help="write outcome as JSON")
    p.set_defaults(fn=cmd_refute)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, gsets.BudgetExceeded, lattices.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
