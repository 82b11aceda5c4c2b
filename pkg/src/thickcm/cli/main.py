"""``thickcm`` command-line entry point."""
import argparse
import sys

from ..algebra import Field


def build_parser():
    ap = argparse.ArgumentParser(prog="thickcm", description="homological invariants and subcategory classification")
    sub = ap.add_subparsers(dest="cmd", required=True)
    run = sub.add_parser("run", help="execute a script")
    run.add_argument("script", help="script file, or - for stdin")
    run.add_argument("--json", metavar="PATH", help="write certificates to PATH")
    run.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    run.add_argument("--field", help="override the declared field (Q or Fp<prime>)")
    corpus = sub.add_parser("corpus", help="replay the fixture corpus")
    corpus.add_argument("--filter", metavar="NAME", help="only fixtures whose name contains NAME")
    return ap


def main(argv=None):
    from .corpus import run_corpus
    from .parser import ScriptError
    from .runner import Runner, dump, summary_line

    args = build_parser().parse_args(argv)
    if args.cmd == "corpus":
        results = run_corpus(args.filter)
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
            for f in r.failures:
                print(f"    {f}")
        print(f"{sum(r.passed for r in results)}/{len(results)} fixtures passed")
        return 0 if all(r.passed for r in results) else 1

    try:
        field = Field.parse(args.field) if args.field else None
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        text = sys.stdin.read() if args.script == "-" else open(args.script, encoding="utf-8").read()
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    runner = Runner(field=field, seed=args.seed)
    try:
        certs = runner.run_text(text)
    except ScriptError as err:
        print(f"{args.script}: {err}", file=sys.stderr)
        return 2
    for c in certs:
        print(summary_line(c))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dump(certs))
    errors = sum(1 for c in certs if c["error"])
    if errors:
        print(f"{errors} command(s) failed", file=sys.stderr)
    return 0 if errors == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
