"""Command line front end: build a kite fixture, run check sweeps, print
window tables, and emit deterministic reports.

Exit codes: 0 when everything checked Holds, 1 when anything Fails, 2 when
the only non-Holds results are Unknown, 64 for configuration errors and
budget refusals. Reports are reproducible: given the same config the JSON is
byte-identical except for the wall_ms timing fields.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import dataclass, field, replace
from typing import Any, Optional

from . import perms
from .axioms import (check_commutative, check_pea_axioms, check_pmv_axioms,
                     check_symmetric, perfect_split, unique_state)
from .ideals import (IdealSet, canonical_form, is_normal, least_normal_ideal,
                     normal_ideal_generated, orbits)
from .kite import Kite, KiteShape
from .pogroup import (CapabilityError, UsageError, Window, parse_group)
from .representations import perfect_representation, verify_iso
from .riesz import RdpLevel, check_rdp_level
from .verdict import Status, Verdict, fails, holds, unknown

SCHEMA = "kite-checks/1"
TOOL = "kitealg 0.1.0"

CHECK_TOKENS = ("axioms", "rdp", "rip", "rdp0", "rdp1", "rdp2",
                "ideals", "iso", "state")
DEFAULT_CHECKS = ("axioms", "rdp0", "ideals", "iso", "state")


@dataclass
class RunConfig:
    group: Any = "z"
    shape: dict = field(default_factory=lambda: {"n": 1, "lambda": "id",
                                                 "rho": "id"})
    height: int = 2
    cap: Optional[int] = None
    nmax: int = 8
    depth: int = 4
    checks: tuple = DEFAULT_CHECKS
    out: Optional[str] = None
    format: str = "text"
    seed: Optional[int] = None
    grid: Optional[dict] = None
    sweep_budget: int = 400
    show_budget: int = 64

    def echo(self) -> dict:
        return {"group": self.group, "shape": self.shape,
                "height": self.height, "cap": self.cap, "nmax": self.nmax,
                "depth": self.depth, "checks": list(self.checks),
                "format": self.format, "seed": self.seed, "grid": self.grid,
                "sweep_budget": self.sweep_budget,
                "show_budget": self.show_budget}


_CONFIG_FIELDS = {"group", "shape", "height", "cap", "nmax", "depth",
                  "checks", "out", "format", "seed", "grid",
                  "sweep_budget", "show_budget"}


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise UsageError(what)


def load_config(path: Optional[str], overrides: dict) -> RunConfig:
    cfg = RunConfig()
    data: dict = {}
    if path is not None:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise UsageError(f"config file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file line {exc.lineno}: {exc.msg}")
        _expect(isinstance(data, dict), "config file must hold an object")
    merged = dict(data)
    for k, v in overrides.items():
        if v is not None:
            merged[k] = v
    for k in merged:
        _expect(k in _CONFIG_FIELDS, f"field {k!r} is not recognized")
    if "checks" in merged and isinstance(merged["checks"], str):
        merged["checks"] = [c for c in merged["checks"].split(",") if c]
    cfg = replace(cfg, **merged)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    _expect(isinstance(cfg.height, int) and cfg.height >= 0,
            "field 'height': must be a non-negative integer")
    _expect(cfg.cap is None or (isinstance(cfg.cap, int) and cfg.cap >= 1),
            "field 'cap': must be a positive integer or null")
    _expect(isinstance(cfg.nmax, int) and cfg.nmax >= 1,
            "field 'nmax': must be a positive integer")
    _expect(isinstance(cfg.depth, int) and cfg.depth >= 1,
            "field 'depth': must be a positive integer")
    _expect(cfg.format in ("json", "text"),
            "field 'format': must be 'json' or 'text'")
    _expect(cfg.seed is None or isinstance(cfg.seed, int),
            "field 'seed': must be an integer or null")
    checks = tuple(cfg.checks)
    for c in checks:
        _expect(c in CHECK_TOKENS,
                f"field 'checks': {c!r} is not one of {', '.join(CHECK_TOKENS)}")
    cfg.checks = checks
    _expect(isinstance(cfg.shape, dict), "field 'shape': must be an object")
    _expect(cfg.grid is None or isinstance(cfg.grid, dict),
            "field 'grid': must be an object or null")


def _parse_perm(spec, n: int, fieldname: str) -> tuple:
    if isinstance(spec, (list, tuple)):
        try:
            return tuple(perms.check_perm(spec, n))
        except ValueError as exc:
            raise UsageError(f"field '{fieldname}': {exc}")
    if isinstance(spec, str):
        name = spec.strip().lower()
        if name in ("id", "identity"):
            return tuple(perms.identity(n))
        if name == "swap":
            _expect(n == 2, f"field '{fieldname}': 'swap' needs n=2")
            return (1, 0)
        if name.startswith("shift"):
            k = int(name.split(":", 1)[1]) if ":" in name else 1
            return tuple(perms.cyclic_shift(n, k))
        if name.startswith("reflect"):
            k = int(name.split(":", 1)[1]) if ":" in name else 0
            return tuple((k - i) % n for i in range(n)) if n else ()
    raise UsageError(f"field '{fieldname}': expected a permutation list or a "
                     "name like 'id', 'swap', 'shift:k', 'reflect:k'")


def build_kite(cfg: RunConfig) -> Kite:
    base = parse_group(cfg.group)
    shp = cfg.shape
    _expect("n" in shp and isinstance(shp["n"], int) and shp["n"] >= 0,
            "field 'shape.n': must be a non-negative integer")
    n = shp["n"]
    lam = _parse_perm(shp.get("lambda", shp.get("lam", "id")), n, "shape.lambda")
    rho = _parse_perm(shp.get("rho", "id"), n, "shape.rho")
    extra = set(shp) - {"n", "lambda", "lam", "rho"}
    _expect(not extra, f"field 'shape': unrecognized keys {sorted(extra)}")
    return Kite(KiteShape(n=n, lam=lam, rho=rho, base=base))


# -- report plumbing -----------------------------------------------------------


def vjson(v: Verdict) -> dict:
    return {"status": v.status.value, "checked": v.checked,
            "skipped": v.skipped, "witness": v.witness_dict(),
            "reason": v.reason}


def _worst(statuses) -> int:
    vals = list(statuses)
    if any(s == Status.FAILS.value for s in vals):
        return 1
    if any(s == Status.UNKNOWN.value for s in vals):
        return 2
    return 0


def _all_statuses(sections: dict):
    for section in sections.values():
        for v in section["verdicts"].values():
            yield v["status"]


_RDP_TOKEN = {"rip": (RdpLevel.RIP,), "rdp0": (RdpLevel.RDP0,),
              "rdp1": (RdpLevel.RDP1,), "rdp2": (RdpLevel.RDP2,),
              "rdp": (RdpLevel.RIP, RdpLevel.RDP0, RdpLevel.RDP,
                      RdpLevel.RDP1, RdpLevel.RDP2)}


def run_check_token(token: str, kite: Kite, cfg: RunConfig) -> tuple[dict, dict]:
    """(verdicts by label, extra JSON payloads) for one check token."""
    w = Window(cfg.height, cfg.cap)
    P = kite.pea()
    ser = P.serialize
    verdicts: dict = {}
    extras: dict = {}
    if token == "axioms":
        verdicts.update(check_pea_axioms(P, w))
        if kite.base.is_lattice:
            verdicts.update(check_pmv_axioms(kite.mv(), w))
        # descriptive classification, not pass/fail: an asymmetric or
        # noncommutative kite is a valid kite
        extras["classification"] = {
            "symmetry": vjson(check_symmetric(P, w)),
            "commutativity": vjson(check_commutative(P, w))}
    elif token in _RDP_TOKEN:
        for level in _RDP_TOKEN[token]:
            verdicts[level.value] = check_rdp_level(kite, level, w)
    elif token == "ideals":
        report = orbits(kite.shape)
        extras["orbit_report"] = report.as_json()
        v, payload = least_normal_ideal(kite, w)
        verdicts["least_normal_ideal"] = v
        if isinstance(payload, IdealSet):
            extras["least_ideal"] = payload.as_json(ser)
        elif isinstance(payload, list):
            extras["witness_ideals"] = [p.as_json(ser) for p in payload]
        gen = next((x for x in kite.elements(w)
                    if x.tag == "L" and kite.dimension(x) == 1), None)
        if gen is not None:
            ideal = normal_ideal_generated(kite, gen, w, depth=cfg.depth)
            extras["generated_ideal"] = ideal.as_json(ser)
            verdicts["generated_ideal_normal"] = is_normal(kite, ideal, w)
    elif token == "iso":
        try:
            new_shape, relabel = canonical_form(kite.shape)
        except UsageError as exc:
            verdicts["canonical_roundtrip"] = unknown(reason=str(exc))
        else:
            extras["canonical_shape"] = new_shape.describe()
            extras["relabel"] = relabel.as_json()
            verdicts["canonical_roundtrip"] = verify_iso(
                P, Kite(new_shape).pea(), relabel, w)
        if kite.shape.lam == kite.shape.rho and \
                kite.base.rdp_hint in ("rdp1", "rdp2"):
            target, spec, v = perfect_representation(kite, w)
            verdicts["perfect_representation"] = v
            if spec is not None:
                extras["representation_map"] = spec.as_json()
            extras["representation_target"] = target.name()
    elif token == "state":
        split = perfect_split(P, w, nmax=cfg.nmax)
        if split is None:
            verdicts["perfect_split"] = fails(
                reason="no two-class split on this window")
        else:
            verdicts["perfect_split"] = holds(
                checked=len(split.e0) + len(split.e1))
            extras["split_sizes"] = {"e0": len(split.e0), "e1": len(split.e1)}
            table, sv = unique_state(P, split, w, nmax=cfg.nmax)
            verdicts["unique_state"] = sv
            extras["state_table"] = table.as_json(ser)
            kernel = IdealSet(elements=split.e0, generators=(),
                              closed_flags={"downward": True, "sums": True,
                                            "exhaustive": False})
            verdicts["state_kernel_normal"] = is_normal(kite, kernel, w)
    return verdicts, extras


def cmd_check(cfg: RunConfig) -> tuple[dict, int]:
    kite = build_kite(cfg)
    sections: dict = {}
    for token in cfg.checks:
        t0 = time.perf_counter()
        verdicts, extras = run_check_token(token, kite, cfg)
        section = {"verdicts": {k: vjson(v) for k, v in verdicts.items()},
                   "wall_ms": int((time.perf_counter() - t0) * 1000)}
        if extras:
            section["extras"] = extras
        sections[token] = section
    code = _worst(_all_statuses(sections))
    report = {"schema": SCHEMA, "tool": TOOL, "command": "check",
              "config": cfg.echo(), "fixture": kite.shape.label(),
              "checks": sections, "exit_code": code}
    return report, code


def _grid_cells(cfg: RunConfig):
    grid = cfg.grid or {}
    groups = grid.get("groups", [cfg.group])
    ns = grid.get("n", [cfg.shape.get("n", 1)])
    heights = grid.get("heights", [cfg.height])
    pair_spec = grid.get("perm_pairs", "all")
    cells = []
    for gdesc, n, h in itertools.product(groups, ns, heights):
        if pair_spec == "all":
            pairs = [(tuple(l), tuple(r))
                     for l in perms.all_perms(n) for r in perms.all_perms(n)]
        else:
            pairs = [(tuple(_parse_perm(l, n, "grid.perm_pairs")),
                      tuple(_parse_perm(r, n, "grid.perm_pairs")))
                     for l, r in pair_spec]
        for lam, rho in pairs:
            cells.append((gdesc, n, lam, rho, h))
    return cells


def cmd_sweep(cfg: RunConfig) -> tuple[dict, int]:
    cells = _grid_cells(cfg)
    if len(cells) > cfg.sweep_budget:
        raise UsageError(
            f"sweep grid has {len(cells)} cells, over the budget of "
            f"{cfg.sweep_budget}; shrink the grid or raise 'sweep_budget'")
    rows = []
    for gdesc, n, lam, rho, h in cells:
        cell_cfg = replace(cfg, group=gdesc, height=h,
                           shape={"n": n, "lambda": list(lam),
                                  "rho": list(rho)})
        kite = build_kite(cell_cfg)
        statuses: dict = {}
        classification: dict = {}
        for token in cfg.checks:
            verdicts, extras = run_check_token(token, kite, cell_cfg)
            for k, v in verdicts.items():
                statuses[f"{token}.{k}"] = v.status.value
            for k, v in extras.get("classification", {}).items():
                classification[k] = v["status"]
        row = {"group": gdesc, "n": n, "lam": list(lam), "rho": list(rho),
               "height": h, "statuses": statuses}
        if classification:
            row["classification"] = classification
        rows.append(row)
    code = _worst(s for row in rows for s in row["statuses"].values())
    report = {"schema": SCHEMA, "tool": TOOL, "command": "sweep",
              "config": cfg.echo(), "cells": rows, "exit_code": code}
    return report, code


def cmd_show(cfg: RunConfig) -> tuple[dict, int]:
    kite = build_kite(cfg)
    w = Window(cfg.height, cfg.cap)
    carrier = kite.elements(w)
    if len(carrier) > cfg.show_budget:
        raise UsageError(
            f"{len(carrier)} elements is too many to tabulate; lower the "
            f"height, set a cap, or raise 'show_budget'")
    labels = [repr(x) for x in carrier]
    add_rows = []
    for x in carrier:
        for y in carrier:
            s = kite.add(x, y)
            if s is not None:
                add_rows.append({"x": repr(x), "y": repr(y), "sum": repr(s)})
    negs = [{"x": repr(x),
             "left": repr(kite.complement_left(x)),
             "right": repr(kite.complement_right(x))} for x in carrier]
    report = {"schema": SCHEMA, "tool": TOOL, "command": "show",
              "config": cfg.echo(), "fixture": kite.shape.label(),
              "carrier": labels, "addition": add_rows, "negations": negs,
              "orbits": orbits(kite.shape).as_json(), "exit_code": 0}
    return report, 0


# -- rendering -------------------------------------------------------------------


def _render_text(report: dict) -> str:
    lines = [f"{report['tool']} :: {report['command']}"]
    if "fixture" in report:
        lines.append(f"fixture: {report['fixture']}")
    if report["command"] in ("check",):
        for token, section in report["checks"].items():
            lines.append(f"[{token}] ({section['wall_ms']} ms)")
            for label, v in section["verdicts"].items():
                tail = f" ({v['reason']})" if v["reason"] else ""
                lines.append(
                    f"  {label}: {v['status']} checked={v['checked']}"
                    + (f" skipped={v['skipped']}" if v["skipped"] else "")
                    + tail)
                if v["witness"]:
                    lines.append(f"    witness: {json.dumps(v['witness'], sort_keys=True)}")
            cls = section.get("extras", {}).get("classification", {})
            for label, v in cls.items():
                lines.append(f"  {label} (classification): {v['status']}")
    elif report["command"] == "sweep":
        for row in report["cells"]:
            head = (f"group={row['group']} n={row['n']} lam={row['lam']} "
                    f"rho={row['rho']} h={row['height']}")
            worst = _worst(row["statuses"].values())
            tag = {0: "holds", 1: "FAILS", 2: "unknown"}[worst]
            cls = row.get("classification", {})
            cls_txt = "".join(f" {k}={v}" for k, v in cls.items())
            lines.append(f"{head}: {tag}{cls_txt}")
            for label, status in row["statuses"].items():
                if status != "holds":
                    lines.append(f"  {label}: {status}")
        lines.append(f"cells: {len(report['cells'])}")
    elif report["command"] == "show":
        lines.append("carrier:")
        for lab in report["carrier"]:
            lines.append(f"  {lab}")
        lines.append("addition (defined cells):")
        for row in report["addition"]:
            lines.append(f"  {row['x']} + {row['y']} = {row['sum']}")
        lines.append("negations (element, left, right):")
        for row in report["negations"]:
            lines.append(f"  {row['x']}: {row['left']}, {row['right']}")
        orb = report["orbits"]
        lines.append(f"orbits: sigma={orb['sigma']} cycles={orb['cycles']} "
                     f"connected={orb['connected']}")
    lines.append(f"exit: {report['exit_code']}")
    return "\n".join(lines)


def _emit(report: dict, cfg: RunConfig) -> None:
    rendered = json.dumps(report, indent=2, sort_keys=True)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(rendered + "\n")
    if cfg.format == "json":
        print(rendered)
    else:
        print(_render_text(report))


# -- entry point -------------------------------------------------------------------


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", help="JSON config file; flags override it")
    sp.add_argument("--group", help="group shortcut (z, z2, z3, strictcone2) "
                                    "or inline JSON descriptor")
    sp.add_argument("--shape", help="inline JSON, e.g. "
                                    '\'{"n":2,"lambda":"id","rho":"swap"}\'')
    sp.add_argument("--height", type=int, help="window height (default 2)")
    sp.add_argument("--checks", help="comma list: " + ",".join(CHECK_TOKENS))
    sp.add_argument("--out", help="also write the JSON report here")
    sp.add_argument("--format", choices=("json", "text"),
                    help="stdout format (default text)")
    sp.add_argument("--seed", type=int,
                    help="echoed for bookkeeping; all searches are deterministic")
    sp.add_argument("--cap", type=int, help="carrier sample cap")
    sp.add_argument("--grid", help="inline JSON sweep grid")


def _overrides(args: argparse.Namespace) -> dict:
    out = {"group": args.group, "height": args.height, "checks": args.checks,
           "out": args.out, "format": args.format, "seed": args.seed,
           "cap": args.cap}
    if args.shape is not None:
        try:
            out["shape"] = json.loads(args.shape)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--shape: {exc.msg}")
    if args.grid is not None:
        try:
            out["grid"] = json.loads(args.grid)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--grid: {exc.msg}")
    if args.group is not None and args.group.strip().startswith("{"):
        try:
            out["group"] = json.loads(args.group)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--group: {exc.msg}")
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="kitealg",
        description="Construct kite algebras over po-groups and machine-check "
                    "their laws on bounded windows.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("check", "run the selected checkers"),
                            ("sweep", "cross-product of fixtures, one "
                                      "verdict summary per cell"),
                            ("show", "print carrier and operation tables")):
        sp = sub.add_parser(name, help=help_text)
        _add_common(sp)
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config, _overrides(args))
        runner = {"check": cmd_check, "sweep": cmd_sweep,
                  "show": cmd_show}[args.command]
        report, code = runner(cfg)
        _emit(report, cfg)
        return code
    except (UsageError, CapabilityError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 64


if __name__ == "__main__":
    sys.exit(main())
