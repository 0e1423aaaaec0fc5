"""Command-line front end.

Subcommands:

* ``converge``  run a two-mesh convergence sweep and write the table;
* ``solve``     solve one configuration and dump the nodal values;
* ``figures``   sample the remainder and the reconstructed solution on a
  uniform rectangle, for plotting;
* ``compat``    print the corner-compatibility report for a built-in problem.

eps is always given as a dyadic exponent (``--eps-exp 16`` means 2^-16)
so sweep members are represented exactly.  A flat key=value config file
can seed any flag; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from .errors import CapabilityError, ConfigurationError, DomainError, NumericalError
from .harness import (
    EQUAL_LADDER,
    M16_LADDER,
    SweepConfig,
    dyadic_eps_set,
    ladder_from,
    reconstruct_solution,
    uniform_sweep,
)
from .interp import eval_on_grid
from .mesh import uniform_time_grid
from .problem import builtin_example, check_compatibility, raw_problem, transform
from .solver import solve_parabolic

_USER_ERRORS = (ConfigurationError, DomainError, CapabilityError, NumericalError, OSError)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--example", type=int, choices=(1, 2, 3, 4), required=True,
                   help="built-in problem index")
    p.add_argument("--mu", type=float, default=1.0, help="mesh transition factor (default 1)")
    p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p.add_argument("--config", type=Path, default=None,
                   help="flat key=value file supplying defaults; flags override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singsub",
        description="Layer-adapted finite-difference solver with singularity subtraction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    conv = sub.add_parser("converge", help="run a two-mesh convergence sweep")
    _add_common(conv)
    conv.add_argument("--no-subtract", dest="subtract", action="store_false",
                      help="solve the raw discontinuous problem instead")
    conv.add_argument("--nm-coupling", choices=("M16", "equal"), default="M16",
                      help="ladder shape: N = 16*M (default) or N = M")
    conv.add_argument("--N", type=int, default=None, help="ladder starting N")
    conv.add_argument("--M", type=int, default=None, help="ladder starting M")
    conv.add_argument("--steps", type=int, default=5, help="ladder length (default 5)")
    conv.add_argument("--eps-max-exp", type=int, default=30,
                      help="sweep eps over 2^0..2^-K (default K=30)")
    conv.add_argument("--output", choices=("csv", "table"), default="table",
                      help="write csv only, or also an aligned text table")
    conv.add_argument("--threads", default="auto",
                      help="worker cap for sweep rows (integer or 'auto')")

    slv = sub.add_parser("solve", help="solve one configuration, dump nodal values")
    _add_common(slv)
    slv.add_argument("--eps-exp", type=int, default=16, help="eps = 2^-this (default 16)")
    slv.add_argument("--N", type=int, default=64)
    slv.add_argument("--M", type=int, default=64)
    slv.add_argument("--no-subtract", dest="subtract", action="store_false")

    fig = sub.add_parser("figures", help="sample remainder and reconstruction for plotting")
    _add_common(fig)
    fig.add_argument("--eps-exp", type=int, default=16)
    fig.add_argument("--N", type=int, default=64)
    fig.add_argument("--M", type=int, default=64)
    fig.add_argument("--sample-nx", type=int, default=101)
    fig.add_argument("--sample-nt", type=int, default=101)

    comp = sub.add_parser("compat", help="print the corner-compatibility report")
    _add_common(comp)
    comp.add_argument("--order", type=int, choices=(0, 1, 2), default=2)
    comp.add_argument("--eps-exp", type=int, default=0,
                      help="eps used in the eps-dependent conditions (default 2^0)")

    return parser


def _load_config_file(path: Path) -> dict:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _coerce(parser: argparse.ArgumentParser, key: str, value: str):
    for action in parser._actions:
        if action.dest == key:
            if isinstance(action, (argparse._StoreFalseAction, argparse._StoreTrueAction)):
                if value.lower() not in ("true", "false"):
                    raise ConfigurationError(f"config key {key!r} expects true/false")
                return value.lower() == "true"
            if action.type is not None:
                return action.type(value)
            return value
    raise ConfigurationError(f"unknown config key {key!r}")


def _parse(argv) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        file_values = _load_config_file(args.config)
        command = args.command
        sub_parser = None
        for action in parser._actions:
            if isinstance(action, argparse._SubParsersAction):
                sub_parser = action.choices[command]
        defaults = {k: _coerce(sub_parser, k, v) for k, v in file_values.items()}
        sub_parser.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def _threads_value(raw) -> int | None:
    if raw in (None, "auto"):
        return None
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise ConfigurationError(f"--threads expects an integer or 'auto', got {raw!r}")


def _write_field_csv(path: Path, xs, ts, field: np.ndarray) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x", "t", "value"])
        for r, t in enumerate(ts):
            for c, x in enumerate(xs):
                writer.writerow([repr(float(x)), repr(float(t)), repr(float(field[r, c]))])


def _cmd_converge(args) -> int:
    spec = builtin_example(args.example)
    if args.N is None or args.M is None:
        start = M16_LADDER[0] if args.nm_coupling == "M16" else EQUAL_LADDER[0]
        n0 = args.N if args.N is not None else start[0]
        m0 = args.M if args.M is not None else start[1]
    else:
        n0, m0 = args.N, args.M
    cfg = SweepConfig(
        mesh_pairs=ladder_from(n0, m0, args.steps),
        eps_set=dyadic_eps_set(args.eps_max_exp),
        mu=args.mu,
        subtract_singularity=args.subtract,
        threads=_threads_value(args.threads),
    )
    table = uniform_sweep(spec, cfg, example=args.example)
    args.out.mkdir(parents=True, exist_ok=True)
    mode = "sub" if args.subtract else "raw"
    csv_path = args.out / f"table_{args.example}_{mode}.csv"
    table.to_csv(csv_path)
    written = [str(csv_path)]
    if args.output == "table":
        txt_path = args.out / f"table_{args.example}_{mode}.txt"
        txt_path.write_text(table.to_text() + "\n", encoding="utf-8")
        written.append(str(txt_path))
        print(table.to_text())
    print("wrote " + ", ".join(written))
    return 0


def _solved(args, subtract: bool):
    from .harness import _space_mesh_for

    spec = builtin_example(args.example)
    eps = 2.0**-args.eps_exp
    tp = transform(spec, eps) if subtract else raw_problem(spec)
    mesh = _space_mesh_for(spec, args.N, eps, args.mu)
    grid = uniform_time_grid(args.M, spec.T)
    return spec, tp, solve_parabolic(tp, mesh, grid, eps)


def _cmd_solve(args) -> int:
    _, _, g = _solved(args, args.subtract)
    args.out.mkdir(parents=True, exist_ok=True)
    tag = "y" if args.subtract else "u"
    path = args.out / f"grid_{args.example}_{tag}.csv"
    xs = g.mesh.points
    ts = g.grid.points
    _write_field_csv(path, xs, ts, g.values)
    print(f"wrote {path}")
    return 0


def _cmd_figures(args) -> int:
    _, tp, g = _solved(args, subtract=True)
    args.out.mkdir(parents=True, exist_ok=True)
    xs = np.linspace(0.0, 1.0, args.sample_nx)
    ts = np.linspace(0.0, tp.spec.T, args.sample_nt)
    y_field = eval_on_grid(g, xs, ts)
    _, _, u_field = reconstruct_solution(tp, g, args.sample_nx, args.sample_nt)
    y_path = args.out / f"field_{args.example}_y.csv"
    u_path = args.out / f"field_{args.example}_u.csv"
    _write_field_csv(y_path, xs, ts, y_field)
    _write_field_csv(u_path, xs, ts, u_field)
    print(f"wrote {y_path}, {u_path}")
    return 0


def _cmd_compat(args) -> int:
    spec = builtin_example(args.example)
    report = check_compatibility(spec, order=args.order, eps=2.0**-args.eps_exp)
    print(report)
    return 0


def main(argv=None) -> int:
    args = _parse(argv)
    handlers = {
        "converge": _cmd_converge,
        "solve": _cmd_solve,
        "figures": _cmd_figures,
        "compat": _cmd_compat,
    }
    try:
        return handlers[args.command](args)
    except _USER_ERRORS as exc:
        print(f"singsub: error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"singsub: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
