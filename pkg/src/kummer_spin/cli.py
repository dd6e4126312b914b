"""Command-line entry point: deterministic verification suites with text
and JSON reports.

Exit status 0 when every non-skipped check passes, 1 on any failure, 2 on
usage errors.  Report bodies contain no timestamps or timings, so a fixed
command line produces byte-identical output; per-suite elapsed times go
to stderr.
"""

import argparse
import json
import os
import sys

from .suites import SUITE_BUILDERS, run_all

SCHEMA_VERSION = 1


def default_seed():
    try:
        return int(os.environ.get("KUMMER_SPIN_SEED", "0"))
    except ValueError:
        return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kummer-spin",
        description="Exact verification suites for the lattice, Clifford, "
                    "triality, and period computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a named verification suite")
    suites = verify.add_subparsers(dest="suite", required=True)

    def n_value(text):
        value = int(text)
        if value < 2:
            raise argparse.ArgumentTypeError("n must be at least 2")
        return value

    def common(p, with_n=False, n_default=3):
        p.add_argument("--seed", type=int, default=None,
                       help="deterministic seed (default 0 or "
                            "KUMMER_SPIN_SEED)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write the report to a file")
        if with_n:
            p.add_argument("--n", type=n_value, default=n_default,
                           help="class parameter n >= 2 (default %d)"
                                % n_default)

    common(suites.add_parser("clifford"))
    common(suites.add_parser("triality"))
    common(suites.add_parser("fm"))
    p = suites.add_parser("stabilizer")
    common(p, with_n=True)
    p.add_argument("--samples", type=int, default=12)
    p = suites.add_parser("modn")
    common(p, with_n=True)
    p = suites.add_parser("detchi")
    common(p, with_n=True)
    p.add_argument("--samples", type=int, default=8)
    p = suites.add_parser("gamma")
    common(p, with_n=True)
    p = suites.add_parser("cayley")
    common(p, with_n=True)
    p.add_argument("--with-h", dest="with_h", default=None,
                   help="six comma-separated degree-two coordinates; adds "
                        "the rank-3 joint-stabilizer check")
    p = suites.add_parser("weil")
    common(p, with_n=True)
    p.add_argument("--h", dest="h", default=None,
                   help="eight comma-separated even-half coordinates of the "
                        "polarization class (default (0, e1e2+e3e4, 0))")
    p = suites.add_parser("discriminant")
    common(p, with_n=True)
    p = suites.add_parser("all")
    common(p, with_n=True, n_default=4)
    return parser


def _parse_coords(text, count, what):
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(2)
    if len(coords) != count:
        sys.stderr.write("expected %d comma-separated integers for %s\n"
                         % (count, what))
        raise SystemExit(2)
    return coords


def render_text(reports):
    lines = []
    failures = 0
    for rep in reports:
        for c in rep.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[c.status]
            if c.status == "fail":
                failures += 1
            line = "[%s] %s:%s (%s)" % (mark, rep.suite, c.name, c.ref)
            if c.detail:
                line += " -- " + c.detail
            lines.append(line)
        passed = sum(1 for c in rep.checks if c.status == "pass")
        lines.append("suite %s: %d/%d passed, seed %d"
                     % (rep.suite, passed, len(rep.checks), rep.seed))
    lines.append("result: %s" % ("ok" if failures == 0 else
                                 "%d check(s) failed" % failures))
    return "\n".join(lines) + "\n"


def render_json(reports, seed):
    body = {
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "suites": [rep.to_json() for rep in reports],
        "ok": all(rep.ok for rep in reports),
    }
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed if args.seed is not None else default_seed()
    params = {"seed": seed, "n": getattr(args, "n", 3)}
    if getattr(args, "samples", None) is not None:
        params["samples"] = args.samples
    if getattr(args, "with_h", None) is not None:
        params["with_h"] = _parse_coords(args.with_h, 6, "--with-h")
        from .stabilizer import h2_square

        if h2_square(params["with_h"]) <= 0:
            sys.stderr.write("--with-h must be a degree-two class of "
                             "positive self-intersection\n")
            raise SystemExit(2)
    if getattr(args, "h", None) is not None:
        params["h"] = _parse_coords(args.h, 8, "--h")
        from .stabilizer import s_n
        from .weil import weil_structure

        try:
            weil_structure(s_n(params["n"]), params["h"])
        except ValueError as exc:
            sys.stderr.write("--h is not an admissible polarization class: "
                             "%s\n" % exc)
            raise SystemExit(2)

    if args.suite == "all":
        reports = run_all(params["n"], seed)
    else:
        reports = [SUITE_BUILDERS[args.suite](params)]

    for rep in reports:
        sys.stderr.write("# suite %s elapsed %.1f ms\n"
                         % (rep.suite, rep.elapsed_ms))
    text = render_json(reports, seed) if args.format == "json" \
        else render_text(reports)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(rep.ok for rep in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
