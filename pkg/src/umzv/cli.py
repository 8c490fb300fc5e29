"""Batch command-line front end.

Subcommands compute values (zeta, zeta-u, t-expansion, finite-zeta) or
run named verification suites (verify).  Configuration precedence is
flags > environment (CARLITZ_*) > --config file > defaults; outputs are
deterministic for a fixed configuration (verify reports carry timing
fields, everything else is byte-stable).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, asdict

from .errors import UmzvError, UnknownSuite
from .fields import GF
from .harmonic import finite_mzv, t_expansion, zeta_thakur
from .serialize import (fmzv_to_csv_rows, fmzv_to_json, laurent_to_csv,
                        laurent_to_json, texpansion_to_json, poly_to_string,
                        useries_to_json)
from .suites import SUITES, run_suite
from .useries import zeta_u_series

_ENV_PREFIX = "CARLITZ_"

_DEFAULTS = dict(r=3, prec=25, d_max=4, D_max=3, N_max=2)


@dataclass
class RunConfig:
    r: int = 3
    prec: int = 25
    d_max: int = 4
    D_max: int = 3
    N_max: int = 2
    index: tuple = ()
    suite: str | None = None
    fmt: str = "json"
    out: str | None = None
    terms: int = 30
    n_max: int | None = None
    deg_max: int | None = None
    k_max: int | None = None
    weight_max: int | None = None
    weight_max_formal: int | None = None
    d_max_formal: int | None = None


_ENV_KEYS = {
    "R": ("r", int),
    "PREC": ("prec", int),
    "D_MAX": ("d_max", int),
    "PLACES_MAX": ("D_max", int),
    "N_MAX": ("N_max", int),
    "TERMS": ("terms", int),
    "FORMAT": ("fmt", str),
    "OUT": ("out", str),
}


def _parse_index(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    # config file
    path = getattr(args, "config", None) or os.environ.get(_ENV_PREFIX + "CONFIG")
    if path:
        with open(path) as fh:
            data = json.load(fh)
        for key, val in data.items():
            if hasattr(cfg, key):
                setattr(cfg, key, tuple(val) if key == "index" else val)
    # environment
    for env_key, (field_name, conv) in _ENV_KEYS.items():
        raw = os.environ.get(_ENV_PREFIX + env_key)
        if raw is not None:
            setattr(cfg, field_name, conv(raw))
    raw = os.environ.get(_ENV_PREFIX + "INDEX")
    if raw is not None:
        cfg.index = _parse_index(raw)
    # explicit flags win
    mapping = {
        "r": "r", "prec": "prec", "dmax": "d_max", "places_max": "D_max",
        "nmax": "N_max", "terms": "terms", "format": "fmt", "out": "out",
        "deg_max": "deg_max", "k_max": "k_max", "weight_max": "weight_max",
        "suite": "suite", "n_max": "n_max",
    }
    for arg_name, field_name in mapping.items():
        val = getattr(args, arg_name, None)
        if val is not None:
            setattr(cfg, field_name, val)
    if getattr(args, "index", None) is not None:
        cfg.index = _parse_index(args.index)
    return cfg


def _emit(payload, cfg: RunConfig, csv_rows=None, text=None) -> None:
    if cfg.fmt == "json":
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in (csv_rows if csv_rows is not None else [[json.dumps(payload)]]):
            writer.writerow(row)
        body = buf.getvalue()
    else:
        body = (text if text is not None
                else json.dumps(payload, sort_keys=True, indent=2)) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def cmd_zeta(cfg: RunConfig) -> int:
    F = GF(cfg.r)
    z = zeta_thakur(F, cfg.index, cfg.prec)
    payload = {"command": "zeta", "r": cfg.r, "index": list(cfg.index),
               "value": laurent_to_json(z)}
    _emit(payload, cfg, csv_rows=[["index", "value"],
                                  [",".join(map(str, cfg.index)), laurent_to_csv(z)]],
          text=f"zeta_A{tuple(cfg.index)} = {z!r}")
    return 0


def cmd_zeta_u(cfg: RunConfig) -> int:
    F = GF(cfg.r)
    us = zeta_u_series(F, cfg.index, cfg.N_max, cfg.prec)
    payload = {"command": "zeta-u", "r": cfg.r, **useries_to_json(us)}
    rows = [["N", "gamma_N"]]
    rows += [[str(n), laurent_to_csv(g)] for n, g in enumerate(us.gammas)]
    _emit(payload, cfg, csv_rows=rows,
          text="\n".join(f"gamma_{n} = {g!r}" for n, g in enumerate(us.gammas)))
    return 0


def cmd_t_expansion(cfg: RunConfig) -> int:
    F = GF(cfg.r)
    cs = t_expansion(F, cfg.index, cfg.terms)
    payload = {"command": "t-expansion", "r": cfg.r,
               **texpansion_to_json(F, cfg.index, cs)}
    rows = [["k", "coeff"]] + [[str(k), poly_to_string(c)]
                               for k, c in enumerate(cs)]
    _emit(payload, cfg, csv_rows=rows,
          text="\n".join(f"t^{k}: {c!r}" for k, c in enumerate(cs)))
    return 0


def cmd_finite_zeta(cfg: RunConfig) -> int:
    F = GF(cfg.r)
    vec = finite_mzv(F, cfg.index, cfg.D_max)
    payload = {"command": "finite-zeta", "r": cfg.r, **fmzv_to_json(vec)}
    _emit(payload, cfg, csv_rows=fmzv_to_csv_rows(vec),
          text="\n".join(f"{v!r}: {val.rep!r}" for v, val in vec.entries))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.suite is None:
        raise UnknownSuite(f"no suite given; known: {sorted(SUITES)}")
    report = run_suite(cfg.suite, cfg)
    payload = {"command": "verify", "r": cfg.r, **report.to_json()}
    lines = [f"[{'PASS' if c['pass'] else 'FAIL'}] {report.suite}: {c['id']}"
             + (f"  ({c['detail']})" if c["detail"] else "")
             for c in report.cases]
    lines.append(f"suite {report.suite}: "
                 f"{'PASS' if report.ok else 'FAIL'} "
                 f"({sum(c['pass'] for c in report.cases)}/{len(report.cases)})")
    rows = [["id", "pass", "detail"]] + \
           [[c["id"], str(c["pass"]), c["detail"]] for c in report.cases]
    _emit(payload, cfg, csv_rows=rows, text="\n".join(lines))
    return 0 if report.ok else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="umzv",
        description="Function-field multiple zeta values and their u-analogs "
                    "via the Carlitz module.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, index_default=False):
        p.add_argument("--r", type=int, default=None, help="field size r = p^e")
        p.add_argument("--prec", type=int, default=None,
                       help="target precision in uniformizer units")
        p.add_argument("--format", choices=("json", "csv", "text"), default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--config", default=None, help="JSON config file")
        if index_default:
            p.add_argument("--index", default=None,
                           help="comma-separated index entries, e.g. 2,1")

    p = sub.add_parser("zeta", help="Thakur multiple zeta value in K_inf")
    common(p, True)
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("zeta-u", help="u-multiple zeta value coefficients")
    common(p, True)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(fn=cmd_zeta_u)

    p = sub.add_parser("t-expansion", help="t-expansion at the infinite cusp")
    common(p, True)
    p.add_argument("--terms", type=int, default=None)
    p.set_defaults(fn=cmd_t_expansion)

    p = sub.add_parser("finite-zeta", help="finite multiple zeta value vector")
    common(p, True)
    p.add_argument("--dmax", type=int, default=None, dest="places_max",
                   help="max degree of the places v")
    p.set_defaults(fn=cmd_finite_zeta)

    p = sub.add_parser("verify", help="run a named verification suite")
    common(p, False)
    p.add_argument("--suite", default=None, help=f"one of {sorted(SUITES)}")
    p.add_argument("--dmax", type=int, default=None,
                   help="chain truncation degree d_max")
    p.add_argument("--places-max", type=int, default=None, dest="places_max")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None, dest="n_max",
                   help="largest n for the u-Sinnott identity")
    p.add_argument("--deg-max", type=int, default=None, dest="deg_max")
    p.add_argument("--k-max", type=int, default=None, dest="k_max")
    p.add_argument("--weight-max", type=int, default=None, dest="weight_max")
    p.add_argument("--terms", type=int, default=None)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        return args.fn(cfg)
    except UmzvError as exc:
        record = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
