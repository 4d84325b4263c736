import argparse
import asyncio
import sys
from typing import List, Optional

from shared.config.config_manager import ConfigManager

from . import QWittKernel
from .config import FORMATS, SUITES, RunConfig, parse_q, parse_s_values
from .exceptions import QWittError
from .serializers import emit

# Values such as "-4..4" or "-1,2" would otherwise be taken for option flags
VALUE_FLAGS = ("--s", "--q", "--window", "--range", "--n", "--m", "--seed")


def _attach_values(argv: List[str]) -> List[str]:
    out: List[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def _range(text: str):
    try:
        return ConfigManager.parse_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", dest="s_values", help="twist exponent, or a comma-separated list")
    common.add_argument("--q", dest="q", help="specialize q to NUM/DEN (default: formal q)")
    common.add_argument("--window", type=_range, help="index window A..B")
    common.add_argument("--seed", type=int, help="seed for randomized checks")
    common.add_argument("--format", dest="output_format", choices=FORMATS)
    common.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(prog="qwitt", description="Exact sigma-derivations of C[t, t^-1]")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("delta", parents=[common], help="print g, d, lambda, T and delta")

    bracket = commands.add_parser("bracket", parents=[common], help="bracket [d_n, d_m] and its reduction")
    bracket.add_argument("--n", type=int, required=True)
    bracket.add_argument("--m", type=int, required=True)

    reduce = commands.add_parser("reduce", parents=[common], help="canonical decomposition of coeff*Delta")
    reduce.add_argument("expr", help='Laurent coefficient, e.g. "1 - q*t^2"')

    table = commands.add_parser("table", parents=[common], help="reduced bracket table modulo Inn")
    table.add_argument("--range", dest="index_range", type=_range, help="index range A..B (default: the window)")
    table.add_argument("--mod-inner", action="store_true", help="reduce modulo Inn (default: raw brackets)")

    verify = commands.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", dest="suites", action="append", choices=SUITES)
    verify.add_argument("--check-window", type=int, help="operator identity window N")
    verify.add_argument("--samples", type=int, help="randomized samples per check")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Environment first, then every flag given on the command line"""
    return RunConfig.from_env().with_overrides(
        s_values=parse_s_values(args.s_values) if args.s_values is not None else None,
        q_value=parse_q(args.q),
        window=args.window,
        seed=args.seed,
        output_format=args.output_format,
        log_level=args.log_level.upper() if args.log_level else None,
        suites=tuple(dict.fromkeys(args.suites)) if getattr(args, "suites", None) else None,
        check_window=getattr(args, "check_window", None),
        samples=getattr(args, "samples", None),
    )


def run(args: argparse.Namespace) -> int:
    kernel = QWittKernel(load_config(args))
    status = 0
    if args.command == "delta":
        record = kernel.delta()
    elif args.command == "bracket":
        record = kernel.bracket(args.n, args.m)
    elif args.command == "reduce":
        record = kernel.reduce(args.expr)
    elif args.command == "table":
        record = kernel.table(args.index_range, mod_inner=args.mod_inner)
    else:
        status, record = asyncio.run(kernel.verify())
    print(emit(record, kernel.config.output_format))
    return status


def main(argv: Optional[List[str]] = None) -> int:
    """Exit 0 on success, 1 when a claim is refuted, 2 on usage or kernel errors, 3 on internal failures"""
    args = build_parser().parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    try:
        status = run(args)
    except KeyboardInterrupt:
        print("Stopped by user", file=sys.stderr)
        status = 0
    except QWittError as e:
        print(f"error: {str(e)}", file=sys.stderr)
        status = 2
    except Exception as e:
        print(f"qwitt failed with error: {str(e)}", file=sys.stderr)
        status = 3
    if argv is None:
        sys.exit(status)
    return status


if __name__ == "__main__":
    main()
