"""Command line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import _accel
from .complexity import REPORT_KEYS, linear_complexity, two_adic_complexity, verify_prime
from .correlation import resolve_params, spectrum
from .numtheory import InadmissiblePrime, admissible_primes, build_params
from .seqcore import BVector, SequenceFormatError, construct_u, read_sequence, write_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(p):
    if p is None:
        raise UsageError("--p is required")
    return build_params(p)


def _bvec(text):
    if text is None:
        raise UsageError("--b is required")
    return BVector.parse(text)


def _sequence(args):
    if args.input is not None:
        if args.p is not None or args.b is not None:
            raise UsageError("give either --in or --p/--b, not both")
        return read_sequence(args.input)
    return construct_u(_params(args.p), _bvec(args.b))


def _emit(text, args):
    if getattr(args, "out", None) and args.command != "construct":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def cmd_primes(args):
    if args.max_p is None or args.max_p < 5:
        raise UsageError("--max-p must be at least 5")
    rows = [build_params(p) for p in admissible_primes(args.max_p)]
    if args.format == "json":
        text = _dump([{"p": r.p, "x": r.x, "f": r.f} for r in rows])
    elif args.format == "csv":
        text = "p,x,f\n" + "".join(f"{r.p},{r.x},{r.f}\n" for r in rows)
    else:
        text = "".join(f"{r.p}\tx={r.x}\tf={r.f}\n" for r in rows)
    _emit(text, args)
    return EXIT_OK


def cmd_construct(args):
    params = _params(args.p)
    b = _bvec(args.b)
    u = construct_u(params, b)
    if args.out:
        write_sequence(u, args.out)
    if args.format == "json":
        text = _dump({"p": params.p, "b": str(b), "N": u.period, "weight": u.weight, "bits": str(u)})
    else:
        text = f"N={u.period}\nweight={u.weight}\n"
        if not args.out:
            text += str(u) + "\n"
    sys.stdout.write(text)
    return EXIT_OK


def cmd_autocorr(args):
    sp = spectrum(_sequence(args))
    if args.format == "csv":
        text = sp.to_csv()
    elif args.format == "json":
        text = _dump(sp.to_dict())
    else:
        off = sorted({int(c) for c in sp.values[1:]})
        text = f"N={sp.period}\nclassification={sp.classification}\nout-of-phase values={off}\n"
    _emit(text, args)
    return EXIT_OK


def cmd_adic(args):
    rep = two_adic_complexity(_sequence(args))
    if args.format == "json":
        text = _dump(rep.to_dict())
    elif args.format == "csv":
        d = rep.to_dict()
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(d), lineterminator="\n")
        w.writeheader()
        w.writerow({k: "" if v is None else v for k, v in d.items()})
        text = buf.getvalue()
    else:
        text = "".join(f"{k}={'-' if v is None else v}\n" for k, v in rep.to_dict().items() if k != "U2")
    _emit(text, args)
    return EXIT_OK


def cmd_linear(args):
    s = _sequence(args)
    lc = linear_complexity(s)
    if args.format == "json":
        text = _dump({"period": s.period, "linear_complexity": lc})
    elif args.format == "csv":
        text = f"period,linear_complexity\n{s.period},{lc}\n"
    else:
        text = f"N={s.period}\nlinear_complexity={lc}\n"
    _emit(text, args)
    return EXIT_OK


def _verify_one(p):
    return verify_prime(resolve_params(build_params(p)))


def _table(report):
    lines = [f"p={report.p} g={report.g} x={report.x} y={report.y:+d} d={report.d}"]
    for k in REPORT_KEYS:
        c = report.checks[k]
        tag = "PASS" if c.passed else "FAIL"
        if not c.applicable:
            tag = "n/a "
        w = c.witness if len(c.witness) <= 24 else c.witness[:21] + "..."
        note = ""
        if c.printed is not None:
            note = "  (literature form: " + ("holds" if c.printed.passed else "fails") + ")"
        lines.append(f"  {tag}  {k:<13} {w}{note}")
    lines.append("ALL PASS" if report.passed else "FAILED: " + ", ".join(report.failures))
    return "\n".join(lines) + "\n"


def _csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "g", "x", "y", "d", *REPORT_KEYS, "pass"])
    for r in reports:
        w.writerow([r.p, r.g, r.x, r.y, r.d, *(str(r.checks[k].passed).lower() for k in REPORT_KEYS),
                    str(r.passed).lower()])
    return buf.getvalue()


def _render(reports, fmt, single):
    if fmt == "json":
        if single:
            return _dump(reports[0].to_dict())
        return "".join(json.dumps(r.to_dict()) + "\n" for r in reports)
    if fmt == "csv":
        return _csv(reports)
    return "".join(_table(r) for r in reports)


def _report_failures(reports):
    for r in reports:
        if not r.passed:
            print(f"p={r.p}: failed {', '.join(r.failures)}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args):
    params = _params(args.p)
    report = verify_prime(resolve_params(params))
    _emit(_render([report], args.format, True), args)
    return _report_failures([report])


def _parse_plist(text):
    try:
        ps = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError as exc:
        raise UsageError(f"--p-list must be comma-separated integers: {exc}") from None
    if not ps:
        raise UsageError("--p-list is empty")
    return ps


def cmd_scan(args):
    if args.p_list:
        ps = _parse_plist(args.p_list)
        for p in ps:
            build_params(p)
    elif args.max_p is not None:
        ps = admissible_primes(args.max_p)
    else:
        raise UsageError("scan needs --p-list or --max-p")
    if args.jobs > 1 and len(ps) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            reports = list(ex.map(_verify_one, ps))
    else:
        reports = [_verify_one(p) for p in ps]
    _emit(_render(reports, args.format, False), args)
    return _report_failures(reports)


COMMANDS = {
    "primes": cmd_primes,
    "construct": cmd_construct,
    "autocorr": cmd_autocorr,
    "adic": cmd_adic,
    "linear": cmd_linear,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="adicseq",
        description="Period-4p interleaved sequences: construction, autocorrelation, 2-adic complexity.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s (backend: {_accel.backend()})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, *opts):
        sp = sub.add_parser(name, help=help)
        for o in opts:
            if o == "p":
                sp.add_argument("--p", type=int)
            elif o == "b":
                sp.add_argument("--b", help="4-bit string with b0=b2, b1=b3, e.g. 0101")
            elif o == "max_p":
                sp.add_argument("--max-p", type=int)
            elif o == "p_list":
                sp.add_argument("--p-list", help="comma-separated primes")
            elif o == "in":
                sp.add_argument("--in", dest="input", help="sequence file (N=<period> / bits)")
            elif o == "out":
                sp.add_argument("--out")
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        return sp

    add("primes", "list admissible primes", "max_p", "out")
    add("construct", "build the period-4p sequence", "p", "b", "out")
    add("autocorr", "autocorrelation spectrum", "p", "b", "in", "out")
    add("adic", "exact 2-adic complexity", "p", "b", "in", "out")
    add("linear", "linear complexity (Berlekamp-Massey)", "p", "b", "in", "out")
    add("verify", "check every congruence and gcd result for one prime", "p", "out")
    scan = add("scan", "verify a list or range of primes", "p_list", "max_p", "out")
    scan.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InadmissiblePrime, SequenceFormatError, ValueError, OSError) as exc:
        print(f"adicseq {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
