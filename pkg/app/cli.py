##############################################################################
# File: cli.py — the `kconn` console entry point
#   kconn [--mode M] [-k K] [--delta D] [--algorithm A] [--format F]
#         [--stats] [--include-singletons] [--verify] FILE|-
#   kconn gen   --family F [--seed S] [--param key=value ...] [--out PATH]
#   kconn bench [--out CSV] [--modes ...] [--families ...] [--sizes ...] [--seeds ...]
#   kconn serve [--host H] [--port P]
# Exit codes: 0 ok, 1 bad input, 2 invariant violation, 3 oracle divergence.
##############################################################################
import argparse
import logging
import os
import sys
from typing import Dict, List, Optional

from app.models.digraph import UndirectedGraph
from app.services.config import settings
from app.services.errors import GraphInputError, KconnError, OracleDivergence
from app.utils.graph_parser import parse_graph, write_graph
from app.utils.report_writer import emit_report

logger = logging.getLogger("kconn")

MODES = ["2ecs", "2vcs", "kecs", "kecs-undirected"]


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not argparse's exit 2."""

    def error(self, message: str):
        raise GraphInputError(f"{self.prog}: {message}")


# 🧮 1. solve (default command)
def _solve(argv: List[str]) -> int:
    from app.services.solve_service import cross_check, solve

    parser = _Parser(prog="kconn", description="Maximal 2-edge/2-vertex/k-edge-connected subgraphs")
    parser.add_argument("file", help="graph file, or - for stdin")
    parser.add_argument("--mode", choices=MODES, default="2ecs")
    parser.add_argument("-k", type=int, default=2)
    parser.add_argument("--delta", type=int, default=None)
    parser.add_argument("--algorithm", choices=["fast", "baseline"], default="fast")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--stats", action="store_true", help="append stats to text output")
    parser.add_argument("--include-singletons", action="store_true")
    parser.add_argument("--verify", action="store_true", help="cross-check against the baseline")
    args = parser.parse_args(argv)

    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {args.file}: {exc.strerror}") from None
    graph = parse_graph(text)

    if args.verify:
        fast, oracle = cross_check(graph, args.mode, args.k, args.delta, args.include_singletons)
        report = fast if args.algorithm == "fast" else oracle
    else:
        report = solve(graph, args.mode, args.k, args.algorithm, args.delta, args.include_singletons)
    sys.stdout.write(emit_report(report, args.format, args.stats).decode("utf-8"))
    return 0


# 🎲 2. gen
def _params(items: List[str]) -> Dict[str, int]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise GraphInputError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise GraphInputError(f"--param {key} must be an integer, got {value!r}") from None
    return params


def _gen(argv: List[str]) -> int:
    from app.utils.generators import generate

    parser = _Parser(prog="kconn gen", description="Write a generated graph in graph-file format")
    parser.add_argument("--family", required=True)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    parser.add_argument("--out", default=None)
    args = parser.parse_args(argv)

    text = write_graph(generate(args.family, seed=args.seed, **_params(args.param)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)
    return 0


# 📈 3. bench
def _bench(argv: List[str]) -> int:
    from app.services.bench_service import fitted_slopes, run_benchmark

    parser = _Parser(prog="kconn bench", description="Scaling sweep with fast/baseline cross-checks")
    parser.add_argument("--out", default=os.path.join(settings.BENCH_DIR, "bench.csv"))
    parser.add_argument("--modes", nargs="+", choices=MODES, default=["2ecs"])
    parser.add_argument("--families", nargs="+", default=["cycle-chain"])
    parser.add_argument("--sizes", nargs="+", type=int, default=[1000, 4000, 16000])
    parser.add_argument("--seeds", nargs="+", type=int, default=[0])
    parser.add_argument("-k", type=int, default=3)
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args(argv)

    directory = os.path.dirname(args.out)
    if directory:
        os.makedirs(directory, exist_ok=True)
    records = run_benchmark(args.modes, args.families, args.sizes, args.seeds, args.k, args.out, args.threads)
    for (mode, algorithm), slope in sorted(fitted_slopes(records).items()):
        sys.stdout.write(f"{mode} {algorithm} slope={slope:.3f}\n")
    return 0


# 🌐 4. serve
def _serve(argv: List[str]) -> int:
    import uvicorn

    parser = _Parser(prog="kconn serve", description="Run the HTTP API")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args(argv)
    uvicorn.run("app.main:app", host=args.host, port=args.port)
    return 0


COMMANDS = {"solve": _solve, "gen": _gen, "bench": _bench, "serve": _serve}


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(level=settings.LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")
    command = "solve"
    if argv and argv[0] in COMMANDS:
        command = argv.pop(0)
    try:
        return COMMANDS[command](argv)
    except KconnError as exc:
        logger.debug("%s failed", command, exc_info=True)
        sys.stderr.write(f"kconn: {exc}\n")
        if isinstance(exc, OracleDivergence) and exc.counterexample is not None:
            graph = exc.counterexample
            if "kecs-undirected" in argv and not isinstance(graph, UndirectedGraph):
                graph = UndirectedGraph(graph.n, graph.live_pairs())
            sys.stderr.write(write_graph(graph))
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
