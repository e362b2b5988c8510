"""Command-line interface: ``whitney <subcommand> ...``.

Exit codes: 0 success, 1 a normative validation failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import closed, recurrences
from .families import AP, FAP, Crown, Fence, fence
from .poset import (
    DEFAULT_MAX_ELEMENTS,
    DEFAULT_MAX_IDEALS,
    OracleBoundError,
    PosetError,
    load_poset,
    to_dot,
    whitney_oracle,
)
from .rankpoly import fap_rank_polynomial, oracle_rank_polynomial, rp_from_table
from .sequences import conjecture_sweep, summarize

FAMILIES = ("fence", "crown", "ap", "fap")
FORMATS = ("json", "csv", "plain")
_PARAMS = {"fence": ("n",), "crown": ("n",), "ap": ("mu", "nu"), "fap": ("w", "x", "y", "z")}


class UsageError(Exception):
    pass


def _family(args):
    if args.family is None:
        raise UsageError("give a family (fence, crown, ap, fap) or --poset FILE")
    missing = [p for p in _PARAMS[args.family] if getattr(args, p) is None]
    if missing:
        raise UsageError(f"{args.family} needs " + ", ".join(f"--{p}" for p in missing))
    vals = [getattr(args, p) for p in _PARAMS[args.family]]
    return {"fence": Fence, "crown": Crown, "ap": AP, "fap": FAP}[args.family](*vals)


def _bounds(args):
    return {"max_elements": args.max_elements, "max_ideals": args.max_ideals}


def _subject(args):
    """(header dict, poset-or-None, family-or-None) for family/--poset commands."""
    if args.poset:
        P = load_poset(args.poset)
        return {"family": "poset", "file": args.poset}, P, None
    fam = _family(args)
    return fam.to_json(), None, fam


def _counts(args):
    """Whitney numbers by the fastest valid path, plus the path name."""
    head, P, fam = _subject(args)
    if P is not None or args.force_oracle:
        P = P if P is not None else fam.poset()
        return head, whitney_oracle(P, **_bounds(args)).counts, "oracle"
    if isinstance(fam, Fence):
        return head, closed.fence_table(fam.n).counts, "closed_form"
    if isinstance(fam, Crown):
        return head, closed.crown_table(fam.n).counts, "closed_form"
    if isinstance(fam, AP):
        return head, closed.ap_table(fam.mu, fam.nu).counts, "closed_form"
    poly = fap_rank_polynomial(fam.w, fam.x, fam.y, fam.z)
    return head, poly.coeffs, "star_composition"


def _emit_counts(head, counts, path, fmt, key, out):
    if fmt == "json":
        doc = dict(head)
        doc[key] = [str(c) for c in counts]
        doc["path"] = path
        out.write(json.dumps(doc) + "\n")
    elif fmt == "csv":
        out.write("k,count\n")
        for k, c in enumerate(counts):
            out.write(f"{k},{c}\n")
    elif key == "coeffs":
        out.write(str(rp_from_table(counts)) + "\n")
    else:
        out.write(" ".join(str(c) for c in counts) + "\n")


def cmd_table(args, out):
    head, counts, path = _counts(args)
    _emit_counts(head, counts, path, args.format, "counts", out)
    return 0


def cmd_poly(args, out):
    head, counts, path = _counts(args)
    _emit_counts(head, counts, path, args.format, "coeffs", out)
    return 0


def cmd_oracle(args, out):
    args.force_oracle = True
    head, counts, path = _counts(args)
    _emit_counts(head, counts, path, args.format, "counts", out)
    return 0


def run_checks(max_n: int) -> list[dict]:
    """Oracle / recurrence / closed-form cross-checks up to order max_n."""
    results = []

    def add(name, passed, detail="", normative=True, counterexample=None):
        results.append({
            "name": name,
            "passed": bool(passed),
            "normative": normative,
            "detail": detail,
            "counterexample": counterexample,
        })

    rec = recurrences.fence_table_recursive(max_n)
    bad = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            vals = {
                "recurrence": rec[n][k],
                "hypergeometric": closed.fence_whitney(n, k),
                "binomial_sum": closed.fence_whitney(n, k, closed.BINOMIAL_SUM),
            }
            if len(set(vals.values())) != 1:
                bad = {"n": n, "k": k, **{a: str(b) for a, b in vals.items()}}
                break
        if bad:
            break
    add("fence closed form == recurrence", bad is None, f"n <= {max_n}", counterexample=bad)

    n_or = min(max_n, 25)
    bad = None
    for n in range(n_or + 1):
        got = whitney_oracle(fence(n)).counts
        if got != rec[n].counts:
            bad = {"n": n, "oracle": [str(c) for c in got], "recurrence": [str(c) for c in rec[n].counts]}
            break
    add("fence oracle == recurrence", bad is None, f"n <= {n_or}", counterexample=bad)

    c_or = min(max_n, 9)
    bad = None
    for n in range(2, c_or + 1):
        got = whitney_oracle(Crown(n).poset()).counts
        if got != closed.crown_table(n).counts:
            bad = {"n": n, "oracle": [str(c) for c in got]}
            break
    add("crown oracle == crown_whitney", bad is None, f"2 <= n <= {c_or}", counterexample=bad)

    a_or = min(max_n, 8)
    bad = None
    for mu in range(1, a_or + 1):
        for nu in range(1, a_or + 1):
            if whitney_oracle(AP(mu, nu).poset()).counts != closed.ap_table(mu, nu).counts:
                bad = {"mu": mu, "nu": nu}
    add("asymmetric peak oracle == closed form", bad is None, f"mu, nu <= {a_or}", counterexample=bad)

    bad = None
    for w in (3, 5):
        for z in (3, 5):
            for x in (1, 2, 3):
                for y in (1, 2, 3):
                    if oracle_rank_polynomial(FAP(w, x, y, z).poset()) != fap_rank_polynomial(w, x, y, z):
                        bad = {"w": w, "x": x, "y": y, "z": z}
    add("FAP star composition == oracle", bad is None, "w, z in {3, 5}; x, y in {1, 2, 3}",
        counterexample=bad)

    v_max = max(0, (max_n - 1) // 2)
    bad = None
    for v in range(v_max + 1):
        for k in range(2 * v + 2):
            s = sum(closed.fence_peak_class_count(v, k, j) for j in range(k + 1))
            if s != closed.fence_whitney_odd(v, k):
                bad = {"v": v, "k": k}
    add("peak-class refinement sums to f(2v+1, k)", bad is None, f"v <= {v_max}", counterexample=bad)

    four = recurrences.verify_four_step(max_n)
    add("fence four-step identity", four.passed, f"{four.checked} cells", counterexample=four.counterexample)

    for backend, bound in (("closed", max_n), ("oracle", min(max_n, 9))):
        for chk in recurrences.verify_crown_identities(bound, backend):
            add(f"{chk.name} [{backend}, crown order <= {bound}]", chk.passed,
                chk.note or f"{chk.checked} cells", normative=chk.normative,
                counterexample=chk.counterexample)

    for conv in closed.CONVENTIONS:
        cmp = closed.crown_closed_comparison(max(2, min(max_n, 9)), conv)
        dis = cmp["disagreements"]
        add(f"experimental crown closed form [{conv}]", not dis,
            f"{cmp['agree']}/{cmp['checked']} cells agree", normative=False,
            counterexample={"disagreements": dis} if dis else None)
    return results


def _status(r):
    return ("PASS" if r["passed"] else "FAIL") if r["normative"] else "INFO"


def cmd_check(args, out):
    results = run_checks(args.max_n)
    ok = all(r["passed"] for r in results if r["normative"])
    if args.format == "json":
        out.write(json.dumps({"passed": ok, "checks": results}, default=str) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["status", "check", "detail", "counterexample"])
        for r in results:
            ce = json.dumps(r["counterexample"], default=str) if r["counterexample"] else ""
            w.writerow([_status(r), r["name"], r["detail"], ce])
    else:
        for r in results:
            line = f"{_status(r)}  {r['name']}: {r['detail']}"
            ce = r["counterexample"]
            if not r["passed"] and ce:
                dis = ce.get("disagreements")
                if dis and len(dis) > 4:
                    ce = {"disagreements": dis[:4] + [f"... {len(dis) - 4} more"]}
                line += f"  counterexample={json.dumps(ce, default=str)}"
            out.write(line + "\n")
        out.write(("all normative checks pass" if ok else "normative check FAILED") + "\n")
    return 0 if ok else 1


_PROPS = ("unimodal", "log_concave", "strictly_log_concave")


def summary_line(summary) -> str:
    if summary["all_pass"]:
        text = f"{summary['claimed']} claimed instances: all pass"
    else:
        text = f"{summary['claimed']} claimed instances: FAILURES " + ", ".join(summary["failing"])
    for o in summary["outside_claim"]:
        text += f"; known exception {o['instance']} (not {', not '.join(o['fails'])})"
    return text


def cmd_conjecture(args, out):
    reports = conjecture_sweep(args.max_card)
    summary = summarize(reports)
    sink = out
    if args.format == "json":
        # one report per line so the array can be consumed as a stream
        out.write("[\n")
        for i, r in enumerate(reports):
            out.write(json.dumps(r.to_json()) + (",\n" if i + 1 < len(reports) else "\n"))
        out.write("]\n")
        sink = sys.stderr
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["instance", *_PROPS, "claim", "passes"])
        for r in reports:
            w.writerow([str(r.instance), *(int(getattr(r, p)) for p in _PROPS), r.claim or "", int(r.passes)])
        sink = sys.stderr
    else:
        for r in reports:
            flags = " ".join(f"{p}={'yes' if getattr(r, p) else 'no'}" for p in _PROPS)
            claim = f"claim={r.claim} {'pass' if r.passes else 'FAIL'}" if r.claim else "outside claim"
            out.write(f"{r.instance}: {flags}; {claim}\n")
    sink.write("summary: " + summary_line(summary) + "\n")
    return 0 if summary["all_pass"] else 1


def cmd_export_dot(args, out):
    head, P, fam = _subject(args)
    if P is None:
        P = fam.poset()
    name = str(fam) if fam is not None else args.poset
    out.write(to_dot(P, name))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="whitney", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def family_args(sp, fmt=True):
        sp.add_argument("family", nargs="?", choices=FAMILIES)
        for name in ("n", "mu", "nu", "w", "x", "y", "z"):
            sp.add_argument(f"--{name}", type=int)
        sp.add_argument("--poset", metavar="FILE", help="poset JSON file")
        sp.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
        sp.add_argument("--max-ideals", type=int, default=DEFAULT_MAX_IDEALS)
        if fmt:
            sp.add_argument("--format", choices=FORMATS, default="json")

    sp = sub.add_parser("table", help="Whitney numbers of a family or poset")
    family_args(sp)
    sp.add_argument("--force-oracle", action="store_true", help="use brute-force enumeration")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("poly", help="rank polynomial of a family or poset")
    family_args(sp)
    sp.add_argument("--force-oracle", action="store_true")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("oracle", help="Whitney numbers by brute-force enumeration")
    family_args(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("check", help="cross-validate oracle, recurrences and closed forms")
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--format", choices=FORMATS, default="plain")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("conjecture", help="log-concavity sweep over fences and crowns")
    sp.add_argument("--max-card", type=int, default=90)
    sp.add_argument("--format", choices=FORMATS, default="json")
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("export-dot", help="Hasse diagram in DOT format")
    family_args(sp, fmt=False)
    sp.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, PosetError, OracleBoundError, OSError, ValueError) as exc:
        print(f"whitney {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
