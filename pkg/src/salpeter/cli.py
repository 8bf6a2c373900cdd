"""Batch command-line front end.

    salpeter [--format csv|json] [--seed N] [--threads N] [--config FILE] COMMAND ...

Commands: constants, critical, bound, lmax, below-energy, table.  A config
file holds ``key = value`` lines in a ``[global]`` section and one section
per command; command-line flags win over the file, which wins over the
built-in defaults.  The thread count may also come from SALPETER_THREADS.

Exit codes: 0 success, 2 configuration error, 3 numerical failure,
4 regression mismatch (``table``).
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from salpeter import __version__, bounds, reference, solver
from salpeter.errors import DomainError, SalpeterError
from salpeter.numerics.special import airy_negative_zeros, riemann_zeta
from salpeter.potentials import (
    exponential, from_file, harmonic_oscillator, poschl_teller, square_well,
)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_MISMATCH = 0, 2, 3, 4
COMMANDS = ("constants", "critical", "bound", "lmax", "below-energy", "table")
_VALUE_OPTIONS = ("--format", "--seed", "--threads", "--config")


class ConfigError(SalpeterError):
    """Invalid command line or configuration file."""


@dataclass
class OutputRecord:
    command: str
    params: dict
    rows: list = field(default_factory=list)
    columns: list = field(default_factory=list)
    seed: int = 0
    mismatch: bool = False


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------

def int_list(text: str) -> list[int]:
    """'0..3,7' -> [0, 1, 2, 3, 7]; an empty or reversed range gives no items."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                a, b = part.split("..", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None
    return out


def float_list(text: str) -> list[float]:
    """Comma-separated reals; 'a..b' expands to the integers in between."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                out.extend(float(v) for v in int_list(part))
            else:
                out.append(float(part))
        except (ValueError, argparse.ArgumentTypeError):
            raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None
    return out


def _kappa2_spec(text: str):
    if text.startswith("auto-airy:"):
        try:
            count = int(text.split(":", 1)[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad auto-airy count in {text!r}") from None
        if not 1 <= count <= 50:
            raise argparse.ArgumentTypeError("auto-airy count must be in 1..50")
        return ("airy", count)
    return ("list", float_list(text))


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_common(p, suppress):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("csv", "json"), default=d)
    p.add_argument("--seed", type=int, default=d)
    p.add_argument("--threads", type=_positive_int, default=d)
    p.add_argument("--config", default=d)


def _add_potential(p):
    p.add_argument("--potential", choices=("exp", "pt", "sqw", "osc", "file"), default="exp")
    p.add_argument("--g", type=float, default=1.0)
    p.add_argument("--v0", type=float)
    p.add_argument("--r1", type=float)
    p.add_argument("--r2", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="salpeter", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_common(parser, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="c(l), C(nu, q) and B(n, p, p') tables")
    _add_common(p, suppress=True)
    p.add_argument("which", choices=("c_ell", "c_nu_q", "b_npp"))
    p.add_argument("--lmax", type=int)
    p.add_argument("--l", type=int_list)
    p.add_argument("--nu", type=int_list, default=[0])
    p.add_argument("--q", type=float_list, default=[2.0])
    p.add_argument("--n", type=int_list, default=[5])
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--pp", type=float, default=3.0)
    p.add_argument("--alpha", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("critical", help="critical couplings from bounds or the exact solver")
    _add_common(p, suppress=True)
    p.add_argument("--method", required=True,
                   choices=("trace", "existence-p", "existence-max", "daubechies", "exact"))
    p.add_argument("--potential", choices=("exp", "pt"), default="exp")
    p.add_argument("--l", type=int_list, default=[0])
    p.add_argument("--beta", "--m", dest="beta", type=float_list, default=[0.0])
    p.add_argument("--alpha", type=int, choices=(1, 2), default=2)
    p.add_argument("--rel-tol", type=float, default=1e-3)

    p = sub.add_parser("bound", help="upper limit on the number of bound states")
    _add_common(p, suppress=True)
    p.add_argument("--method", required=True,
                   choices=("trace-lwave", "trace-total", "holder-lwave", "holder-total",
                            "central-ur", "daubechies"))
    _add_potential(p)
    p.add_argument("--beta", "--m", dest="beta", type=float, default=0.0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--pp", type=float, default=math.inf)
    p.add_argument("--nu-max", type=int, default=8)
    p.add_argument("--samples", type=_positive_int, default=bounds.DEFAULT_SAMPLES)
    p.add_argument("--alpha", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("lmax", help="largest angular momentum with a bound state")
    _add_common(p, suppress=True)
    p.add_argument("--potential", choices=("exp", "pt"), default="exp")
    p.add_argument("--g", type=float_list, required=True)
    p.add_argument("--method", choices=("bound", "exact"), default="bound")
    p.add_argument("--beta", "--m", dest="beta", type=float, default=0.0)
    p.add_argument("--alpha", type=int, choices=(1, 2), default=2)

    p = sub.add_parser("below-energy", help="limit on l-wave states below an energy")
    _add_common(p, suppress=True)
    _add_potential(p)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--kappa2", type=_kappa2_spec, required=True)
    p.add_argument("--beta", "--m", dest="beta", type=float, default=0.0)
    p.add_argument("--alpha", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("table", help="recompute a reference table and compare")
    _add_common(p, suppress=True)
    p.add_argument("which", choices=("1", "2", "3", "4", "s5"))
    return parser


def _split_argv(argv):
    """(options before the command, command, remaining arguments)."""
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS:
            i += 2
            continue
        if tok.startswith("-"):
            i += 1
            continue
        break
    if i >= len(argv) or argv[i] not in COMMANDS:
        return argv, None, []
    return argv[:i], argv[i], argv[i + 1:]


def _config_path(argv):
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--config="):
            return tok.split("=", 1)[1]
    return None


def _known_options(parser, command):
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    sp = sub.choices[command]
    opts = {}
    for action in sp._actions:
        for s in action.option_strings:
            if s.startswith("--"):
                opts[s[2:]] = action
    return sp, opts


def _config_args(path, parser, command):
    cp = configparser.ConfigParser(interpolation=None)
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    _, opts = _known_options(parser, command)
    out = []
    for section in ("global", command):
        if not cp.has_section(section):
            continue
        for key, value in cp.items(section):
            name = key.replace("_", "-")
            if name in ("config", "help", "version") or name not in opts:
                raise ConfigError(f"unknown key {key!r} in section [{section}] of {path}")
            out += [f"--{name}", value]
    unknown = [s for s in cp.sections() if s != "global" and s not in COMMANDS]
    if unknown:
        raise ConfigError(f"unknown section(s) {unknown} in {path}")
    return out


def parse_config(argv=None):
    """Parse flags, the optional config file and defaults into a namespace."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    pre, command, rest = _split_argv(argv)
    if command is None:
        parser.parse_args(argv)  # prints usage and exits 2
    path = _config_path(argv)
    cfg = _config_args(path, parser, command) if path else []
    try:
        ns = parser.parse_args([command] + cfg + pre + rest)
    except SystemExit as exc:
        raise ConfigError("invalid arguments") if exc.code not in (0, None) else exc
    ns.format = getattr(ns, "format", None) or "csv"
    ns.seed = getattr(ns, "seed", None)
    ns.seed = 0 if ns.seed is None else ns.seed
    threads = getattr(ns, "threads", None) or os.environ.get("SALPETER_THREADS") or 1
    try:
        ns.threads = max(1, int(threads))
    except ValueError:
        raise ConfigError("SALPETER_THREADS must be an integer") from None
    return ns


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _pmap(fn, items, threads):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _echo(ns, *names):
    out = {}
    for n in names:
        v = getattr(ns, n, None)
        if isinstance(v, tuple) and v and v[0] == "airy":
            v = f"auto-airy:{v[1]}"
        elif isinstance(v, tuple):
            v = list(v[1])
        out[n] = v
    return out


def cmd_constants(ns) -> OutputRecord:
    rec = OutputRecord("constants", _echo(ns, "which", "alpha"), seed=ns.seed)
    if ns.which == "c_ell":
        ells = ns.l if ns.l is not None else list(range(1, (ns.lmax or 0) + 1))
        if any(l < 1 for l in ells):
            raise DomainError("c(0) is infinite because C(0, 1) diverges; use l >= 1")
        rec.params["l"] = ells
        rec.columns = ["ell", "c_ell"]
        rec.rows = _pmap(lambda l: {"ell": l, "c_ell": bounds.const_c_ell(l)}, ells, ns.threads)
    elif ns.which == "c_nu_q":
        rec.params.update(nu=ns.nu, q=ns.q)
        rec.columns = ["nu", "q", "alpha", "c_nu_q"]
        pairs = [(nu, q) for nu in ns.nu for q in ns.q]
        rec.rows = _pmap(lambda t: {"nu": t[0], "q": t[1], "alpha": ns.alpha,
                                    "c_nu_q": bounds.const_c_nu_q(t[0], t[1], ns.alpha)},
                         pairs, ns.threads)
    else:
        rec.params.update(n=ns.n, p=ns.p, pp=ns.pp)
        rec.columns = ["n", "p", "pp", "alpha", "b", "nu_index", "tail", "zeta_bound"]

        def row(n):
            s = bounds.const_b(n, ns.p, ns.pp, ns.alpha)
            w = (3 * n - 7) / 6.0
            zb = math.nan
            if ns.p == 2 and ns.pp == 3 and w > 1 and ns.alpha == 1:
                zb = (1 - 2.0 ** (-w)) * riemann_zeta(w)
            return {"n": n, "p": ns.p, "pp": ns.pp, "alpha": ns.alpha, "b": s.value,
                    "nu_index": s.index, "tail": s.tail, "zeta_bound": zb}

        rec.rows = _pmap(row, ns.n, ns.threads)
    return rec


def _family(name, g=1.0):
    return exponential(g) if name == "exp" else poschl_teller(g)


def critical_value(method, form, ell, beta, alpha, rel_tol=1e-3):
    """(g_c, extra columns) for one sweep point."""
    if method in ("existence-p", "existence-max") and beta != 0:
        raise DomainError(f"{method} applies to m = 0 only")
    if method == "trace":
        return bounds.critical_trace(form, ell, beta, alpha), {}
    if method == "daubechies":
        if ell != 0:
            raise DomainError("the Daubechies bound counts all partial waves; use --l 0")
        return bounds.critical_daubechies(form, beta, alpha), {}
    if method == "existence-p":
        res = bounds.existence_critical_p(_family(form), ell, alpha)
        return res.g_crit, {"p_star": res.p_star}
    if method == "existence-max":
        return bounds.existence_critical_max(_family(form), ell, alpha).g_crit, {}
    res = solver.critical_coupling_exact(form, ell, beta, alpha, rel_tol)
    return res.g_c_exact, {"g_low": res.bracket[0], "g_high": res.bracket[1]}


def cmd_critical(ns) -> OutputRecord:
    rec = OutputRecord("critical", _echo(ns, "method", "potential", "l", "beta", "alpha"), seed=ns.seed)
    if ns.method == "existence-max" and any(l < 1 for l in ns.l):
        raise DomainError("existence-max needs l >= 1: C(0, 1) diverges")
    points = [(l, b) for l in ns.l for b in ns.beta]

    def row(pt):
        g, extra = critical_value(ns.method, ns.potential, pt[0], pt[1], ns.alpha, ns.rel_tol)
        return {"potential": ns.potential, "method": ns.method, "ell": pt[0], "beta": pt[1],
                "alpha": ns.alpha, "g_c": g, **extra}

    rec.rows = _pmap(row, points, ns.threads)
    rec.columns = ["potential", "method", "ell", "beta", "alpha", "g_c"]
    if ns.method == "existence-p":
        rec.columns.append("p_star")
    if ns.method == "exact":
        rec.columns += ["g_low", "g_high"]
    return rec


def build_potential(ns):
    kind = ns.potential
    if kind in ("exp", "pt"):
        return _family(kind, ns.g)
    if kind == "sqw":
        if None in (ns.v0, ns.r1, ns.r2):
            raise DomainError("square well needs --v0, --r1 and --r2")
        return square_well(ns.v0, ns.r1, ns.r2)
    if kind == "osc":
        if ns.k is None:
            raise DomainError("oscillator needs --k")
        return harmonic_oscillator(ns.k)
    if not ns.file:
        raise DomainError("tabulated potential needs --file")
    try:
        return from_file(ns.file)
    except OSError as exc:
        raise DomainError(f"cannot read {ns.file}: {exc}") from None


def cmd_bound(ns) -> OutputRecord:
    V = build_potential(ns)
    rec = OutputRecord("bound", _echo(ns, "method", "potential", "g", "beta", "alpha"), seed=ns.seed)
    m, a = ns.beta, ns.alpha
    meth = ns.method
    if meth in ("holder-lwave", "holder-total", "central-ur") and m != 0:
        raise DomainError(f"{meth} applies to m = 0 only")
    if meth == "trace-lwave":
        rep = bounds.bound_lwave_trace(V, ns.l, m, a, ns.n or 2, ns.samples, ns.seed)
    elif meth == "trace-total":
        rep = bounds.bound_total_trace(V, m, a, ns.n or 4, ns.nu_max, ns.samples, ns.seed)
    elif meth == "holder-lwave":
        rep = bounds.bound_lwave_holder(V, ns.l, ns.n or 2, ns.p, ns.pp, a)
    elif meth == "holder-total":
        rep = bounds.bound_total_holder(V, ns.n or 5, ns.p, ns.pp, a)
    elif meth == "central-ur":
        rep = bounds.bound_total_central_ur(V, a)
    else:
        rep = bounds.bound_daubechies(V, m, a)
    rec.columns = ["method", "raw_bound", "implied_count", "err_estimate"]
    row = {"method": rep.method.value, "raw_bound": rep.raw_bound,
           "implied_count": rep.implied_count, "err_estimate": rep.err_estimate}
    for key in ("n", "ell", "p", "pp", "nu_max", "samples", "seed", "l_plus", "asymptotic", "tail"):
        if key in rep.params:
            rec.columns.append(key)
            row[key] = rep.params[key]
    rec.rows = [row]
    return rec


def cmd_lmax(ns) -> OutputRecord:
    rec = OutputRecord("lmax", _echo(ns, "potential", "g", "method", "beta", "alpha"), seed=ns.seed)
    if ns.method == "bound":
        if ns.beta != 0:
            raise DomainError("the bound on L applies to m = 0 only")
        rec.columns = ["g", "l_plus", "l_plus_plus"]

        def row(g):
            lim = bounds.l_plus(_family(ns.potential, g), ns.alpha)
            return {"g": g, "l_plus": lim.l_plus, "l_plus_plus": lim.l_plus_plus}
    else:
        rec.columns = ["g", "l_exact"]

        def row(g):
            return {"g": g, "l_exact": solver.l_exact(ns.potential, g, ns.beta, ns.alpha)}

    rec.rows = _pmap(row, ns.g, ns.threads)
    return rec


def cmd_below_energy(ns) -> OutputRecord:
    V = build_potential(ns)
    rec = OutputRecord("below-energy", _echo(ns, "potential", "g", "k", "l", "kappa2", "beta", "alpha"),
                       seed=ns.seed)
    kind, payload = ns.kappa2
    if kind == "airy":
        if not V.confining:
            raise DomainError("auto-airy energies need the oscillator potential")
        kappas = [V.k * lam for lam in airy_negative_zeros(payload)]
    else:
        kappas = payload
    rec.columns = ["kappa2", "raw_bound", "implied_count", "exact_count"]

    def row(k2):
        rep = bounds.bound_below_energy(V, ns.l, ns.beta, ns.alpha, k2)
        energy = k2 if V.confining else -k2
        exact = solver.count_states_below(V, ns.l, ns.beta, ns.alpha, energy - 1e-9 * abs(energy))
        return {"kappa2": k2, "raw_bound": rep.raw_bound, "implied_count": rep.implied_count,
                "exact_count": exact}

    rec.rows = _pmap(row, kappas, ns.threads)
    return rec


def _cell(table, potential, key, value, quantity, computed, ref, tol, absolute=False):
    if isinstance(ref, int) and isinstance(computed, int):
        dev = float(computed - ref)
        ok = computed == ref
    elif absolute:
        dev = computed - ref
        ok = abs(dev) <= tol
    else:
        dev = computed / ref - 1.0
        ok = abs(dev) <= tol
    return {"table": table, "potential": potential, "key": key, "value": value, "quantity": quantity,
            "computed": computed, "reference": ref, "deviation": dev, "tolerance": tol, "pass": ok}


def table_tasks(which):
    """Callables, one per reference cell group, each returning a list of rows."""
    tasks = []
    if which == "1":
        for l, ref in reference.C_ELL.items():
            tasks.append(lambda l=l, ref=ref: [_cell("1", "", "ell", l, "c_ell", bounds.const_c_ell(l),
                                                     ref, reference.C_ELL_TOL, absolute=True)])
    elif which == "2":
        for form, cols in reference.CRITICAL_S_WAVE.items():
            for method, refs in cols.items():
                for beta, ref in zip(reference.CRITICAL_S_WAVE_BETAS, refs):
                    tasks.append(lambda f=form, m=method, b=beta, r=ref: [_cell(
                        "2", f, "beta", b, m, critical_value(m, f, 0, float(b), 2)[0], r,
                        reference.CRITICAL_TOL[m])])
    elif which == "3":
        for form, cols in reference.CRITICAL_L_WAVE.items():
            for method, refs in cols.items():
                for ell, ref in zip(reference.CRITICAL_L_WAVE_ELLS, refs):
                    tasks.append(lambda f=form, m=method, l=ell, r=ref: [_cell(
                        "3", f, "ell", l, m, critical_value(m, f, l, 0.0, 2)[0], r,
                        reference.CRITICAL_TOL[m])])
    elif which == "4":
        for form, cols in reference.L_MAX.items():
            for g, lp, le in zip(reference.L_MAX_G, cols["bound"], cols["exact"]):
                def task(f=form, g=g, lp=lp, le=le):
                    got_p = bounds.l_plus(_family(f, g), 2).l_plus
                    got_e = solver.l_exact(f, g, 0.0, 2)
                    return [_cell("4", f, "g", g, "l_plus", got_p, lp, 0),
                            _cell("4", f, "g", g, "l_exact", got_e, le, 0)]
                tasks.append(task)
    else:
        osc = harmonic_oscillator(1.0)
        lams = airy_negative_zeros(3)
        for n, lam in enumerate(lams, 1):
            def task(n=n, lam=lam):
                rep = bounds.bound_below_energy(osc, 0, 0.0, 1, lam)
                exact = solver.count_states_below(osc, 0, 0.0, 1, lam * (1 - 1e-9))
                return [_cell("s5", "osc", "n", n, "implied_count", rep.implied_count,
                              reference.OSCILLATOR_IMPLIED[n - 1], 0),
                        _cell("s5", "osc", "n", n, "exact_count", exact,
                              reference.OSCILLATOR_EXACT[n - 1], 0)]
            tasks.append(task)
    return tasks


def cmd_table(ns) -> OutputRecord:
    rec = OutputRecord("table", _echo(ns, "which"), seed=ns.seed)
    results = _pmap(lambda t: t(), table_tasks(ns.which), ns.threads)
    rec.rows = [row for group in results for row in group]
    rec.columns = ["table", "potential", "key", "value", "quantity", "computed", "reference",
                   "deviation", "tolerance", "pass"]
    rec.mismatch = not all(r["pass"] for r in rec.rows)
    return rec


_DISPATCH = {
    "constants": cmd_constants, "critical": cmd_critical, "bound": cmd_bound,
    "lmax": cmd_lmax, "below-energy": cmd_below_energy, "table": cmd_table,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _num(v, digits):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")
        return format(v, f".{digits}g")
    return str(v)


def _json(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".17g") if math.isfinite(v) else "null"
    if isinstance(v, str):
        return _json_str(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_json_str(str(k))}: {_json(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json(x) for x in v) + "]"
    return _json_str(str(v))


def _json_str(s):
    return json.dumps(s)


def render(rec: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        meta = {"command": rec.command, "params": rec.params, "version": __version__,
                "seed": rec.seed, "columns": rec.columns}
        rows = ["  " + _json({c: r.get(c) for c in rec.columns}) for r in rec.rows]
        body = "[\n" + ",\n".join(rows) + "\n]" if rows else "[]"
        return "{\n\"meta\": " + _json(meta) + ",\n\"rows\": " + body + "\n}\n"
    float_cols = {c for c in rec.columns if any(isinstance(r.get(c), float) for r in rec.rows)}
    header = []
    for c in rec.columns:
        header.append(c)
        if c in float_cols:
            header.append(c + "_full")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rec.rows:
        out = []
        for c in rec.columns:
            v = r.get(c)
            out.append("" if v is None else _num(v, 6))
            if c in float_cols:
                out.append("" if v is None else _num(v, 17))
        w.writerow(out)
    return buf.getvalue()


def main(argv=None) -> int:
    try:
        ns = parse_config(argv)
    except ConfigError as exc:
        print(f"salpeter: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rec = _DISPATCH[ns.command](ns)
    except (DomainError, ConfigError) as exc:
        print(f"salpeter: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SalpeterError as exc:
        print(f"salpeter: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ArithmeticError, ValueError) as exc:
        print(f"salpeter: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    sys.stdout.write(render(rec, ns.format))
    return EXIT_MISMATCH if rec.mismatch else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
