"""Command-line front end: run cases, emit equilibria, list the registry.

All numeric output is written with %.17g so repeated invocations with the
same arguments produce byte-identical files.
"""

import argparse
import ast
import configparser
import inspect
import os

import numpy as np

from .cases import (CASES, build_case, case_names, convergence_table,
                    equilibrium_profile, error_norms)
from .errors import ConfigError, SolverError
from .solver1d import SolverConfig

_FLOAT_FMT = "%.17g"


def _fmt(value):
    if isinstance(value, (float, np.floating)):
        return _FLOAT_FMT % float(value)
    return str(value)


def _write_csv(path, header, rows, preamble=()):
    with open(path, "w", newline="\n") as f:
        for line in preamble:
            f.write(f"# {line}\n")
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def _parse_value(text):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def _parse_list(text, cast):
    items = [s for s in str(text).replace(",", " ").split() if s]
    return [cast(s) for s in items]


def _load_config(path):
    """INI file with a [run] section and an optional [case] section."""
    run, case = {}, {}
    if path:
        if not os.path.exists(path):
            raise ConfigError(f"config file not found: {path}")
        cp = configparser.ConfigParser()
        cp.read(path)
        if cp.has_section("run"):
            run = dict(cp.items("run"))
        if cp.has_section("case"):
            case = {k: _parse_value(v) for k, v in cp.items("case")}
    return run, case


def _pick(flag_value, run_cfg, key, cast=None):
    """Command-line flags win over config-file values."""
    if flag_value is not None:
        return flag_value
    if key in run_cfg:
        raw = run_cfg[key]
        return cast(raw) if cast else raw
    return None


def _var_names(case):
    return ("rho", "u", "v", "p") if case.dim == 2 else ("rho", "u", "p")


def _solver_config(args, run_cfg):
    cfg = SolverConfig()
    scheme = _pick(args.scheme, run_cfg, "scheme")
    cfl = _pick(args.cfl, run_cfg, "cfl", float)
    kappa = _pick(args.kappa, run_cfg, "kappa", float)
    flux = _pick(args.flux, run_cfg, "flux")
    opts = {}
    if scheme is not None:
        if scheme not in ("wb", "nwb"):
            raise ConfigError(f"scheme must be 'wb' or 'nwb', got {scheme!r}")
        opts["scheme"] = scheme
    if cfl is not None:
        opts["cfl"] = cfl
    if kappa is not None:
        opts["kappa"] = kappa
    if flux is not None:
        if flux != "hllc":
            raise ConfigError(f"unknown flux {flux!r} (available: hllc)")
        opts["flux"] = flux
    return cfg.with_options(**opts) if opts else cfg


def _builder_params(case):
    """Case parameters that round-trip through the builder signature."""
    if case.name not in CASES:
        return {}
    builder = CASES[case.name].builder
    accepted = set(inspect.signature(builder).parameters)
    return {k: v for k, v in case.params.items() if k in accepted}


def _write_resolved_config(path, case_name, case, args_out, solver_cfg,
                           snapshots=None, grids=None, extra_case=None):
    cp = configparser.ConfigParser()
    run = {"case": case_name,
           "scheme": solver_cfg.scheme,
           "flux": solver_cfg.flux,
           "cfl": repr(solver_cfg.cfl),
           "kappa": repr(solver_cfg.kappa)}
    if case is not None:
        if case.dim == 2:
            run["nx"] = str(case.sim.grid.nx)
            run["ny"] = str(case.sim.grid.ny)
        else:
            run["nx"] = str(case.sim.grid.n)
        if case.t_final is not None:
            run["tfinal"] = repr(float(case.t_final))
        elif case.n_steps is not None:
            run["nsteps"] = str(int(case.n_steps))
    if snapshots:
        run["snapshots"] = ",".join(repr(float(s)) for s in snapshots)
    if grids:
        run["grids"] = ",".join(str(int(g)) for g in grids)
    if args_out:
        run["out"] = args_out
    cp["run"] = run
    params = dict(extra_case or {})
    if case is not None:
        params = _builder_params(case)
    if params:
        cp["case"] = {k: repr(v) for k, v in sorted(params.items())}
    with open(path, "w", newline="\n") as f:
        cp.write(f)


def _profile_rows(case, prim):
    g = case.sim.grid
    diags = [(name, fn(prim)) for name, fn in case.diagnostics.items()]
    if case.dim == 2:
        X, Y = g.mesh()
        cols = [X, Y, prim[0], prim[1], prim[2], prim[3]]
        header = ["x", "y", "rho", "u", "v", "p"]
    else:
        x = g.centers()
        cols = [x, prim[0], prim[1], prim[2]]
        header = ["x", "rho", "u", "p"]
    for name, values in diags:
        header.append(name)
        cols.append(values)
    flat = [np.asarray(c, dtype=float).reshape(-1) for c in cols]
    rows = zip(*flat)
    return header, rows


def _write_profile(outdir, case, label=None):
    prim = case.sim.primitive()
    tag = f"{case.sim.t:g}" if label is None else label
    path = os.path.join(outdir, f"profile_t{tag}.csv")
    header, rows = _profile_rows(case, prim)
    _write_csv(path, header, rows)
    return path


def _write_norms(outdir, case):
    names = _var_names(case)
    prim = case.sim.primitive()
    refs = [("initial", case.initial)]
    if case.background is not None:
        refs.append(("background", case.background))
    if case.exact is not None:
        exact = case.exact(case.sim.t) if callable(case.exact) else case.exact
        refs.append(("exact", exact))
    rows = []
    for ref_name, ref in refs:
        for norm in ("l1", "l2", "linf"):
            vals = error_norms(prim, ref, norm, case.weights())
            for var, val in zip(names, vals):
                rows.append((var, f"{norm}_{ref_name}", val))
    _write_csv(os.path.join(outdir, "norms.csv"), ("variable", "norm", "value"),
               rows)


def _thin(rows, limit=1200):
    if len(rows) <= limit:
        return rows
    idx = np.unique(np.round(np.linspace(0, len(rows) - 1, limit)).astype(int))
    return [rows[i] for i in idx]


def _cmd_run(args):
    run_cfg, case_params = _load_config(args.config)
    name = _pick(args.case, run_cfg, "case")
    if not name:
        raise ConfigError("no case given (use --case or a config file)")
    solver_cfg = _solver_config(args, run_cfg)
    nx = _pick(args.nx, run_cfg, "nx", int)
    ny = _pick(args.ny, run_cfg, "ny", int)
    tfinal = _pick(args.tfinal, run_cfg, "tfinal", float)
    nsteps = _pick(None, run_cfg, "nsteps", int)
    outdir = _pick(args.out, run_cfg, "out") or "."
    grids = _pick(args.grids, run_cfg, "grids")
    snapshots = _pick(args.snapshots, run_cfg, "snapshots")
    os.makedirs(outdir, exist_ok=True)

    if grids:
        grids = _parse_list(grids, int)
        extra = dict(case_params)
        if tfinal is not None:
            extra["t_final"] = tfinal
        rows = convergence_table(name, grids, norm="l2", config=solver_cfg,
                                 **extra)
        var_names = list(rows[0]["errors"])
        header = ["n", "h"]
        for var in var_names:
            header += [f"{var}_error", f"{var}_rate"]
        table = []
        for row in rows:
            line = [row["n"], row["h"]]
            for var in var_names:
                rate = row["rates"][var]
                line += [row["errors"][var], "n/a" if rate is None else rate]
            table.append(line)
        _write_csv(os.path.join(outdir, "convergence.csv"), header, table)
        _write_resolved_config(os.path.join(outdir, "resolved_config.ini"),
                               name, None, outdir, solver_cfg, grids=grids,
                               extra_case=case_params)
        print(f"wrote {os.path.join(outdir, 'convergence.csv')}")
        return 0

    case = build_case(name, nx=nx, ny=ny, config=solver_cfg, **case_params)
    if tfinal is not None:
        case.t_final, case.n_steps = tfinal, None
    if nsteps is not None:
        case.t_final, case.n_steps = None, nsteps

    names = _var_names(case)
    weights = case.weights()
    initial = case.initial
    history = []

    def record(sim):
        vals = error_norms(sim.primitive(), initial, "l1", weights)
        history.append((sim.t, *vals))

    snap_times = []
    if snapshots:
        if case.t_final is None:
            raise ConfigError("snapshots need a time-based run")
        snap_times = sorted(set(_parse_list(snapshots, float)))
        bad = [s for s in snap_times if not 0.0 < s < case.t_final]
        if bad:
            raise ConfigError(f"snapshot times outside (0, tfinal): {bad}")

    for s in snap_times:
        case.sim.advance(t_final=s, callback=record)
        history.pop()  # segment boundaries repeat the same state
        _write_profile(outdir, case)
    case.run(callback=record)

    _write_profile(outdir, case)
    _write_norms(outdir, case)
    rows = _thin(history)
    _write_csv(os.path.join(outdir, "timeseries.csv"),
               ("t",) + tuple(f"{v}_l1_vs_initial" for v in names), rows)
    _write_resolved_config(os.path.join(outdir, "resolved_config.ini"), name,
                           case, outdir, solver_cfg, snapshots=snap_times)
    print(f"case {name}: advanced to t={case.sim.t:g} "
          f"in {case.sim.n_steps} steps; output in {outdir}")
    return 0


def _cmd_equilibrium(args):
    run_cfg, case_params = _load_config(args.config)
    name = _pick(args.case, run_cfg, "case")
    if not name:
        raise ConfigError("no case given (use --case or a config file)")
    n = _pick(args.nx, run_cfg, "nx", int) or 101
    outdir = _pick(args.out, run_cfg, "out") or "."
    os.makedirs(outdir, exist_ok=True)
    prof = equilibrium_profile(name, n=n, **case_params)
    path = os.path.join(outdir, f"equilibrium_{name}.csv")
    rows = zip(prof.x, prof.rho, prof.p, prof.T)
    _write_csv(path, ("x", "rho", "p", "T"), rows,
               preamble=(f"case: {name}", f"provenance: {prof.provenance}",
                         f"nodes: {n}"))
    print(f"wrote {path}")
    return 0


def _cmd_list_cases(args):
    width = max(len(n) for n in case_names())
    for name in case_names():
        entry = CASES[name]
        grids = "/".join(str(g) for g in entry.grids)
        print(f"{name:<{width}}  {entry.dim}D  grids {grids:<18} "
              f"{entry.description}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="gravfv",
        description="finite-volume Euler solver with well-balanced gravity")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a registered case")
    run.add_argument("--case", help="case name (see list-cases)")
    run.add_argument("--nx", type=int, help="cells (1D) or nodes in x (2D)")
    run.add_argument("--ny", type=int, help="nodes in y (2D only)")
    run.add_argument("--grids", help="comma list of resolutions; "
                     "writes convergence.csv instead of running once")
    run.add_argument("--tfinal", type=float, help="final time override")
    run.add_argument("--cfl", type=float, help="CFL number (default 0.45)")
    run.add_argument("--scheme", choices=("wb", "nwb"),
                     help="well-balanced or central-difference source")
    run.add_argument("--flux", help="Riemann solver (hllc)")
    run.add_argument("--kappa", type=float, help="limiter weight in [1, 2]")
    run.add_argument("--out", help="output directory (default .)")
    run.add_argument("--snapshots", help="comma list of intermediate "
                     "profile times")
    run.add_argument("--config", help="INI file with [run] and [case] "
                     "sections; flags win")
    run.set_defaults(fn=_cmd_run)

    eq = sub.add_parser("equilibrium",
                        help="write a discrete hydrostatic profile as CSV")
    eq.add_argument("--case", help="1-D case name")
    eq.add_argument("--nx", type=int, help="number of nodes (default 101)")
    eq.add_argument("--out", help="output directory (default .)")
    eq.add_argument("--config", help="INI file with [run] and [case] sections")
    eq.set_defaults(fn=_cmd_equilibrium)

    lc = sub.add_parser("list-cases", help="list registered cases")
    lc.set_defaults(fn=_cmd_list_cases)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SolverError, OSError) as exc:
        parser.exit(2, f"gravfv: error: {exc}\n")


if __name__ == "__main__":
    raise SystemExit(main())
