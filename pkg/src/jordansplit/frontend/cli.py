"""Command-line entry point.

    jordansplit check FILE            run every command in a script
    jordansplit split FILE --map NAME split one map defined in a script
    jordansplit corpus                run the built-in golden corpus
    jordansplit report FILE --format {text,json}

Exit status: 0 when every verdict passes (``unknown`` counts as passing),
1 on any failed or errored verdict, 2 on usage, file or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import JordanSplitError
from ..jordan import LinearMap
from . import dsl
from .runner import RunReport, corpus_report, execute, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting options given before it
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="sampling seed for non-multilinear identities (default 0)")
    common.add_argument("--timings", action="store_true", default=argparse.SUPPRESS,
                        help="record wall-clock time per command")
    common.add_argument("-o", "--output", default=argparse.SUPPRESS,
                        help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="jordansplit", parents=[common],
                                description="Decide and construct splittings of Jordan homomorphisms.")
    sub = p.add_subparsers(dest="cmd", required=True)
    c = sub.add_parser("check", parents=[common], help="run every command in a script")
    c.add_argument("file")
    c.add_argument("--format", choices=dsl.FORMATS, help="defaults to the script's 'report' statement, else text")
    s = sub.add_parser("split", parents=[common], help="split one map")
    s.add_argument("file")
    s.add_argument("--map", required=True, dest="map_name")
    s.add_argument("--format", choices=dsl.FORMATS)
    k = sub.add_parser("corpus", parents=[common], help="run the built-in corpus")
    k.add_argument("--format", choices=dsl.FORMATS)
    r = sub.add_parser("report", parents=[common], help="run a script and emit its report")
    r.add_argument("file")
    r.add_argument("--format", choices=dsl.FORMATS, default="text")
    return p


def _load(path: str) -> dsl.Script:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise dsl.DslError(f"cannot read {path}: {exc.strerror}") from None
    return dsl.parse(text, base_dir=p.parent)


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    for opt, default in (("seed", 0), ("timings", False), ("output", None)):
        if not hasattr(args, opt):
            setattr(args, opt, default)
    try:
        if args.cmd == "corpus":
            rep, fmt = corpus_report(args.seed, args.timings), args.format
        else:
            script = _load(args.file)
            fmt = args.format or script.output_format
            if args.cmd == "split":
                obj = script.env.get(args.map_name)
                if not isinstance(obj, LinearMap):
                    what = "undefined name" if obj is None else "not a map:"
                    raise dsl.DslError(f"{what} {args.map_name!r}")
                stmt = dsl.Split(args.map_name)
                rep = RunReport(args.seed, [execute(stmt, script.env, args.seed, args.timings)])
            else:
                rep = run(script, args.seed, args.timings)
    except dsl.DslError as exc:
        where = getattr(args, "file", None)
        sep = ":" if exc.line else ": "
        print(f"jordansplit: {where}{sep}{exc}" if where else f"jordansplit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except JordanSplitError as exc:  # e.g. malformed algebra file
        print(f"jordansplit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = rep.render(fmt or "text")
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
