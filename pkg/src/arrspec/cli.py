"""Command-line interface.

    arrspec spectrum --n 4 --k 2 --format csv
    arrspec verify --n 5 --k 3
    arrspec conjecture --k 3 --n-max 20

Exit codes: 0 success, 1 failed verification or conjecture check, 2 usage
or limit error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .errors import ArrspecError, LimitError
from .oracle import build_graph, dump_adjacency, verify
from .partitions import Partition
from .spectrum import SpectralLine, Spectrum, minus_k_multiplicity, spectrum, threshold

__all__ = ["main", "render_spectrum", "spectrum_from_json"]


def spectrum_to_json(spec: Spectrum, witnesses: bool = False) -> str:
    lines = []
    for line in spec.lines:
        item = {"eigenvalue": line.eigenvalue, "multiplicity": str(line.multiplicity)}
        if witnesses:
            item["witnesses"] = [{"lambda": list(lam), "mu": list(mu)} for lam, mu in line.witnesses]
        lines.append(item)
    return json.dumps({"n": spec.n, "k": spec.k, "lines": lines}, indent=2) + "\n"


def spectrum_from_json(text: str) -> Spectrum:
    data = json.loads(text)
    lines = tuple(
        SpectralLine(
            int(item["eigenvalue"]),
            int(item["multiplicity"]),
            tuple((Partition(w["lambda"]), Partition(w["mu"])) for w in item.get("witnesses", ())),
        )
        for item in data["lines"]
    )
    return Spectrum(int(data["n"]), int(data["k"]), lines)


def _fmt_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def render_spectrum(spec: Spectrum, fmt: str = "table", witnesses: bool = False) -> str:
    if fmt == "json":
        return spectrum_to_json(spec, witnesses)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["eigenvalue", "multiplicity"])
        for line in spec.lines:
            writer.writerow([line.eigenvalue, line.multiplicity])
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")

    rows = [(str(line.eigenvalue), str(line.multiplicity), line) for line in spec.lines]
    ew = max([len("eigenvalue")] + [len(r[0]) for r in rows])
    mw = max([len("multiplicity")] + [len(r[1]) for r in rows])
    out = [f"A({spec.n},{spec.k}): {spec.vertex_count} vertices, {len(spec.lines)} distinct eigenvalues",
           f"{'eigenvalue':>{ew}}  {'multiplicity':>{mw}}" + ("  witnesses (lambda -> mu)" if witnesses else "")]
    for e, m, line in rows:
        text = f"{e:>{ew}}  {m:>{mw}}"
        if witnesses:
            text += "  " + " ".join(
                f"{_fmt_partition(lam)}->{_fmt_partition(mu)}" for lam, mu in line.witnesses
            )
        out.append(text)
    return "\n".join(out) + "\n"


def _cmd_spectrum(args) -> int:
    spec = spectrum(args.n, args.k, max_n=args.max_n)
    sys.stdout.write(render_spectrum(spec, args.format, args.show_witnesses))
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.n, args.k, exact_limit=args.exact_limit, float_limit=args.float_limit,
                    tolerance=args.tolerance)
    if args.dump_adjacency:
        with open(args.dump_adjacency, "w") as fh:
            dump_adjacency(build_graph(args.n, args.k, vertex_limit=report.vertex_count), fh)
    print(report.summary())
    print(f"{'eigenvalue':>10}  {'predicted':>10}  {'observed':>10}  method")
    for r in report.records:
        flag = "" if r.matched else "  MISMATCH"
        print(f"{r.eigenvalue:>10}  {r.predicted:>10}  {r.observed:>10}  {r.method}{flag}")
    for p, (graph, formula) in report.moments.items():
        flag = "" if graph == formula else "  MISMATCH"
        print(f"trace(A^{p}) = {graph}  (formula {formula}){flag}")
    if report.unaccounted:
        print(f"unaccounted dimension: {report.unaccounted}")
    return 0 if report.passed else 1


def conjecture_rows(k: int, n_max: int | None = None) -> list[dict]:
    p = threshold(k)
    last = n_max if n_max is not None else p + 10
    rows = []
    for n in range(k + 1, last + 1):
        negatives = [line for line in spectrum(n, k).lines if line.eigenvalue < 0]
        only = [line.eigenvalue for line in negatives] == [-k]
        row = {
            "n": n,
            "above_threshold": n > p,
            "negatives": [(line.eigenvalue, line.multiplicity) for line in negatives],
            "only_minus_k": only,
        }
        if n > p:
            row["formula_multiplicity"] = minus_k_multiplicity(n, k)
            row["holds"] = only and negatives[0].multiplicity == row["formula_multiplicity"]
        rows.append(row)
    return rows


def _cmd_conjecture(args) -> int:
    p = threshold(args.k)
    rows = conjecture_rows(args.k, args.n_max)
    ok = all(r["holds"] for r in rows if r["above_threshold"])
    if args.format == "json":
        payload = {
            "k": args.k,
            "threshold": p,
            "rows": [
                {
                    "n": r["n"],
                    "above_threshold": r["above_threshold"],
                    "negatives": [{"eigenvalue": e, "multiplicity": str(m)} for e, m in r["negatives"]],
                    "only_minus_k": r["only_minus_k"],
                }
                for r in rows
            ],
            "holds": ok,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"k = {args.k}, threshold p(k) = {p}")
        for r in rows:
            neg = " ".join(f"{e}:{m}" for e, m in r["negatives"]) or "-"
            tag = "only -k" if r["only_minus_k"] else "extra negatives"
            side = ">p" if r["above_threshold"] else "<=p"
            print(f"n={r['n']:<4} {side:<3}  {tag:<15}  {neg}")
        print("claim holds for all scanned n > p(k)" if ok else "claim FAILS for some n > p(k)")
    return 0 if ok else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arrspec", description="Spectra of arrangement graphs A(n,k).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="print the spectrum of A(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--show-witnesses", action="store_true")
    p.add_argument("--max-n", type=int, default=None, help="n cap (default ARRSPEC_MAX_N or 500)")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify", help="check the formula against the explicit graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact-limit", type=int, default=None,
                   help="max vertices for exact nullity (default ARRSPEC_EXACT_LIMIT or 400)")
    p.add_argument("--float-limit", type=int, default=None,
                   help="max vertices for the float path (default ARRSPEC_FLOAT_LIMIT or 10000)")
    p.add_argument("--tolerance", type=float, default=None,
                   help="integrality tolerance per vertex (default ARRSPEC_FLOAT_TOLERANCE or 1e-6)")
    p.add_argument("--dump-adjacency", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="scan negative eigenvalues for fixed k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None, help="last n scanned (default p(k)+10)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=_cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "conjecture" and args.k < 1:
        parser.error("--k must be at least 1")
    try:
        return args.func(args)
    except (LimitError, ValueError) as exc:
        print(f"arrspec: error: {exc}", file=sys.stderr)
        return 2
    except ArrspecError as exc:
        print(f"arrspec: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
