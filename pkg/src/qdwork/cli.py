"""Command-line front end: single verifications, grid scans, report emission.

Exit codes: 0 all checks passed, 1 a genuine congruence failure (with
witness), 2 invalid parameters / usage / config errors, 3 internal error.

The scan config file is line-oriented ``key = value`` under ``[section]``
headers (integers, comma-separated integer lists, booleans):

    [grid]
    m_values = 2, 3, 4
    s_rule = all
    n_values = 3, 5
    r_values = 2

    [theorems]
    thm1 = true
    thm2 = true

    [padic]
    mortenson = false
    sun_liu = false
    dwork = false
    prime_bound = 31

    [run]
    jobs = 1
    size_guard = 200
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__, padic, verifier
from .errors import InvalidParameter, NotPIntegral
from .polyring import cyclotomic
from .verifier import TheoremParams

_THEOREM_ORDER = ("thm1", "thm2", "lemma21", "param1", "param2", "gz-d2")


class ConfigError(InvalidParameter):
    """Malformed or inconsistent scan configuration."""


@dataclass
class ScanConfig:
    m_values: list[int]
    n_values: list[int]
    r_values: list[int]
    s_rule: str = "all"
    theorems: dict[str, bool] = field(default_factory=dict)
    mortenson: bool = False
    sun_liu: bool = False
    dwork: bool = False
    prime_bound: int = 31
    jobs: int = 1
    size_guard: int = verifier.DEFAULT_SIZE_GUARD

    def validate(self) -> None:
        if not self.m_values or not self.n_values or not self.r_values:
            raise ConfigError("m_values, n_values and r_values must be nonempty")
        if self.s_rule != "all":
            raise ConfigError("the only supported s_rule is 'all' (every s < m)")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        unknown = set(self.theorems) - set(_THEOREM_ORDER)
        if unknown:
            raise ConfigError(f"unknown theorem selection: {sorted(unknown)}")

    def echo(self) -> dict:
        return {
            "m_values": self.m_values,
            "s_rule": self.s_rule,
            "n_values": self.n_values,
            "r_values": self.r_values,
            "theorems": {t: self.theorems.get(t, False) for t in _THEOREM_ORDER},
            "padic": {
                "mortenson": self.mortenson,
                "sun_liu": self.sun_liu,
                "dwork": self.dwork,
                "prime_bound": self.prime_bound,
            },
            "jobs": self.jobs,
            "size_guard": self.size_guard,
        }


def _int_list(raw: str) -> list[int]:
    items = [x.strip() for x in raw.split(",") if x.strip()]
    try:
        return [int(x) for x in items]
    except ValueError as e:
        raise ConfigError(f"expected comma-separated integers, got {raw!r}") from e


def load_scan_config(path: str) -> ScanConfig:
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except OSError as e:
        raise ConfigError(f"cannot read config file: {e}") from e
    except configparser.Error as e:
        raise ConfigError(f"config parse error: {e}") from e

    def get(section, key, fallback=None):
        return parser.get(section, key, fallback=fallback)

    def getbool(section, key, fallback=False):
        try:
            return parser.getboolean(section, key, fallback=fallback)
        except ValueError as e:
            raise ConfigError(f"[{section}] {key} must be a boolean") from e

    def getint(section, key, fallback):
        try:
            return parser.getint(section, key, fallback=fallback)
        except ValueError as e:
            raise ConfigError(f"[{section}] {key} must be an integer") from e

    cfg = ScanConfig(
        m_values=_int_list(get("grid", "m_values", "")),
        n_values=_int_list(get("grid", "n_values", "")),
        r_values=_int_list(get("grid", "r_values", "")),
        s_rule=get("grid", "s_rule", "all").strip(),
        theorems={t: getbool("theorems", t.replace("-", "_")) for t in _THEOREM_ORDER},
        mortenson=getbool("padic", "mortenson"),
        sun_liu=getbool("padic", "sun_liu"),
        dwork=getbool("padic", "dwork"),
        prime_bound=getint("padic", "prime_bound", 31),
        jobs=getint("run", "jobs", 1),
        size_guard=getint("run", "size_guard", verifier.DEFAULT_SIZE_GUARD),
    )
    cfg.validate()
    return cfg


# -- report document ----------------------------------------------------------------


@dataclass
class ReportDocument:
    version: str
    config: dict
    entries: list[dict]
    summary: dict

    @staticmethod
    def build(config: dict, entries: list[dict]) -> "ReportDocument":
        summary = {"passed": 0, "failed": 0, "skipped": 0}
        for e in entries:
            if e["kind"] == "skipped":
                summary["skipped"] += 1
            elif e.get("passed", True):
                summary["passed"] += 1
            else:
                summary["failed"] += 1
        return ReportDocument(version=__version__, config=config, entries=entries, summary=summary)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "entries": self.entries,
            "summary": self.summary,
        }

    @staticmethod
    def from_dict(d: dict) -> "ReportDocument":
        return ReportDocument(
            version=d["version"], config=d["config"], entries=d["entries"], summary=d["summary"]
        )


def emit_report(doc: ReportDocument, format: str = "text") -> str:
    """Render a document; 'json' uses the fixed schema, 'text' one line per entry."""
    if format == "json":
        return json.dumps(doc.to_dict(), indent=2) + "\n"
    lines = [_entry_line(e) for e in doc.entries]
    s = doc.summary
    lines.append(f"summary: passed={s['passed']} failed={s['failed']} skipped={s['skipped']}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> ReportDocument:
    return ReportDocument.from_dict(json.loads(text))


_PARAM_ORDER = ("m", "s", "n", "r", "p", "variant", "x")


def _params_str(p: dict) -> str:
    ordered = [k for k in _PARAM_ORDER if p.get(k) is not None]
    ordered += [k for k in p if k not in _PARAM_ORDER and p[k] is not None]
    return " ".join(f"{k}={p[k]}" for k in ordered)


def _entry_line(e: dict) -> str:
    kind = e["kind"]
    if kind == "cyclotomic":
        return e["polynomial"]
    if kind == "skipped":
        return f"SKIP {e['target']} {_params_str(e['params'])} ({e['reason']})"
    status = "PASS" if e["passed"] else "FAIL"
    if kind == "theorem":
        mods = "*".join(f"{i}^{m}" for i, m in e["modulus_factors"]) or "-"
        line = f"{status} {e['theorem']} {_params_str(e['params'])} mod={mods} ({e['elapsed_ms']} ms)"
        if e["failure_witness"]:
            line += f" :: {e['failure_witness']}"
        return line
    if kind == "padic":
        check = e["check"]
        if check == "dwork":
            return (
                f"{status} dwork p={e['prime']} r={e['r']} m={e['m']} s={e['s']} "
                f"diff_val={e['diff_valuation']} w_val={e['w_valuation']}"
            )
        extra = f"variant={e['variant']}" if check == "mortenson" else f"n={e['n']} x={e['x']}"
        return (
            f"{status} {check} p={e['prime']} {extra} "
            f"lhs={e['lhs_residue']} rhs={e['rhs_residue']} (mod {e['prime']}^{e['exponent']})"
        )
    return f"{status} {kind}"


# -- entry builders -------------------------------------------------------------------


def _theorem_entry(rep: verifier.VerificationReport) -> dict:
    p = rep.params
    return {
        "kind": "theorem",
        "theorem": rep.theorem.value,
        "params": {"m": p.m, "s": p.s, "n": p.n, "r": p.r},
        "modulus_factors": [[i, m] for i, m in rep.modulus_factors],
        "passed": rep.passed,
        "failure_witness": rep.failure_witness,
        "elapsed_ms": rep.elapsed_ms,
    }


def _skip_entry(target: str, params: dict, reason: str) -> dict:
    return {"kind": "skipped", "target": target, "params": params, "reason": reason}


def _mortenson_entry(inst: padic.CongruenceInstance, variant: int) -> dict:
    return {
        "kind": "padic",
        "check": "mortenson",
        "variant": variant,
        "prime": inst.prime,
        "exponent": inst.exponent,
        "lhs_residue": inst.lhs_residue,
        "rhs_residue": inst.rhs_residue,
        "passed": inst.passed,
    }


def _sun_liu_entry(inst: padic.CongruenceInstance, n: int, x: Fraction) -> dict:
    return {
        "kind": "padic",
        "check": "sun-liu",
        "n": n,
        "x": str(x),
        "prime": inst.prime,
        "exponent": inst.exponent,
        "lhs_residue": inst.lhs_residue,
        "rhs_residue": inst.rhs_residue,
        "passed": inst.passed,
    }


def _dwork_entry(rep: padic.DworkPadicReport) -> dict:
    return {
        "kind": "padic",
        "check": "dwork",
        "prime": rep.prime,
        "r": rep.r,
        "m": rep.m,
        "s": rep.s,
        "diff_valuation": rep.diff_valuation,
        "w_valuation": rep.w_valuation,
        "binom_inverse_valuation": rep.binom_inverse_valuation,
        "passed": rep.passed,
    }


# -- scan ---------------------------------------------------------------------------


def _scan_tasks(cfg: ScanConfig) -> list[tuple]:
    tasks: list[tuple] = []
    svals = lambda m: range(1, m)
    for theorem in _THEOREM_ORDER:
        if not cfg.theorems.get(theorem, False):
            continue
        if theorem == "lemma21":
            for m in sorted(cfg.m_values):
                for s in svals(m):
                    for n in sorted(cfg.n_values):
                        tasks.append(("lemma21", m, s, n))
        elif theorem == "gz-d2":
            for n in sorted(cfg.n_values):
                for r in sorted(cfg.r_values):
                    tasks.append(("gz-d2", n, r, cfg.size_guard))
        else:
            for m in sorted(cfg.m_values):
                for s in svals(m):
                    for n in sorted(cfg.n_values):
                        for r in sorted(cfg.r_values):
                            tasks.append((theorem, m, s, n, r, cfg.size_guard))
    primes = padic.primes_up_to(cfg.prime_bound)
    if cfg.mortenson:
        for p in primes:
            if p > 3:
                for variant in (1, 2, 3, 4):
                    tasks.append(("mortenson", p, variant))
    if cfg.sun_liu:
        for p in primes:
            if p > 2:
                for x in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 6)):
                    tasks.append(("sun-liu", p, 1, str(x)))
    if cfg.dwork:
        for m in sorted(cfg.m_values):
            for s in svals(m):
                for p in primes:
                    tasks.append(("dwork", p, 2, m, s, cfg.size_guard))
    return tasks


def _run_scan_task(task: tuple) -> dict:
    kind = task[0]
    try:
        if kind in ("thm1", "thm2"):
            _, m, s, n, r, guard = task
            fn = verifier.verify_thm1 if kind == "thm1" else verifier.verify_thm2
            return _theorem_entry(fn(TheoremParams(m, s, n, r), size_guard=guard))
        if kind in ("param1", "param2"):
            _, m, s, n, r, guard = task
            variant = 1 if kind == "param1" else 2
            return _theorem_entry(
                verifier.verify_param_roots(variant, TheoremParams(m, s, n, r), size_guard=guard)
            )
        if kind == "lemma21":
            _, m, s, n = task
            return _theorem_entry(verifier.verify_lemma21(m, n, s))
        if kind == "gz-d2":
            _, n, r, guard = task
            return _theorem_entry(verifier.verify_gz_d2(n, r, size_guard=guard))
        if kind == "mortenson":
            _, p, variant = task
            return _mortenson_entry(padic.check_mortenson(p, variant), variant)
        if kind == "sun-liu":
            _, p, n, x = task
            x = Fraction(x)
            return _sun_liu_entry(padic.check_sun_liu(p, n, x), n, x)
        if kind == "dwork":
            _, p, r, m, s, guard = task
            if p ** r > guard:
                raise InvalidParameter(f"p^r = {p ** r} exceeds the size guard {guard}")
            return _dwork_entry(padic.check_dwork_padic(p, r, m, s))
        raise InvalidParameter(f"unknown task kind {kind}")
    except (InvalidParameter, NotPIntegral) as e:
        params = _task_params(task)
        return _skip_entry(kind, params, str(e))


def _task_params(task: tuple) -> dict:
    kind = task[0]
    if kind in ("thm1", "thm2", "param1", "param2"):
        _, m, s, n, r = task[:5]
        return {"m": m, "s": s, "n": n, "r": r}
    if kind == "lemma21":
        _, m, s, n = task
        return {"m": m, "s": s, "n": n}
    if kind == "gz-d2":
        _, n, r = task[:3]
        return {"n": n, "r": r}
    if kind == "mortenson":
        return {"p": task[1], "variant": task[2]}
    if kind == "sun-liu":
        return {"p": task[1], "n": task[2], "x": task[3]}
    if kind == "dwork":
        _, p, r, m, s = task[:5]
        return {"m": m, "s": s, "p": p, "r": r}
    return {}


def run_scan(cfg: ScanConfig) -> ReportDocument:
    """Run every selected driver over the grid; deterministic entry order."""
    cfg.validate()
    tasks = _scan_tasks(cfg)
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            entries = list(pool.map(_run_scan_task, tasks))
    else:
        entries = [_run_scan_task(t) for t in tasks]
    return ReportDocument.build(cfg.echo(), entries)


# -- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qdwork",
        description="Exact verification of q-Dwork-type supercongruences.",
    )
    top.add_argument("--version", action="version", version=f"qdwork {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON report schema")
        p.add_argument("--out", metavar="PATH", help="also write the report to PATH")

    p_cyc = sub.add_parser("cyclotomic", help="print the n-th cyclotomic polynomial")
    p_cyc.add_argument("n", type=int)
    common(p_cyc)

    p_verify = sub.add_parser("verify", help="verify one congruence instance")
    vsub = p_verify.add_subparsers(dest="theorem", required=True)
    for name in ("thm1", "thm2", "param1", "param2"):
        p = vsub.add_parser(name)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--size-guard", type=int, default=verifier.DEFAULT_SIZE_GUARD)
        common(p)
    p = vsub.add_parser("lemma21")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    common(p)
    p = vsub.add_parser("gz-d2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--size-guard", type=int, default=verifier.DEFAULT_SIZE_GUARD)
    common(p)

    p_padic = sub.add_parser("padic", help="classical q -> 1 congruence checks")
    psub = p_padic.add_subparsers(dest="check", required=True)
    p = psub.add_parser("mortenson")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--variant", type=int, required=True, choices=(1, 2, 3, 4))
    common(p)
    p = psub.add_parser("sun-liu")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=Fraction, required=True, help="rational like 1/2")
    common(p)
    p = psub.add_parser("dwork")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    common(p)

    p_scan = sub.add_parser("scan", help="run a parameter grid from a config file")
    p_scan.add_argument("--config", required=True, metavar="FILE")
    p_scan.add_argument("--jobs", type=int, default=None, help="override [run] jobs")
    p_scan.add_argument("--size-guard", type=int, default=None, help="override [run] size_guard")
    common(p_scan)
    return top


def _emit(doc: ReportDocument, args) -> None:
    fmt = "json" if args.json else "text"
    text = emit_report(doc, fmt)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)


def _doc_exit_code(doc: ReportDocument) -> int:
    return 0 if doc.summary["failed"] == 0 else 1


def _cmd_cyclotomic(args) -> int:
    if args.n < 1:
        raise InvalidParameter("cyclotomic index must be a positive integer")
    poly = cyclotomic(args.n)
    if args.json:
        entry = {"kind": "cyclotomic", "n": args.n, "polynomial": str(poly)}
        doc = ReportDocument.build({"command": "cyclotomic", "n": args.n}, [entry])
        _emit(doc, args)
    else:
        text = f"{poly}\n"
        sys.stdout.write(text)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
    return 0


def _cmd_verify(args) -> int:
    name = args.theorem
    if name == "lemma21":
        rep = verifier.verify_lemma21(args.m, args.n, args.s)
        config = {"command": "verify lemma21", "m": args.m, "n": args.n, "s": args.s}
    elif name == "gz-d2":
        rep = verifier.verify_gz_d2(args.n, args.r, size_guard=args.size_guard)
        config = {"command": "verify gz-d2", "n": args.n, "r": args.r}
    else:
        params = TheoremParams(args.m, args.s, args.n, args.r)
        if name == "thm1":
            rep = verifier.verify_thm1(params, size_guard=args.size_guard)
        elif name == "thm2":
            rep = verifier.verify_thm2(params, size_guard=args.size_guard)
        else:
            rep = verifier.verify_param_roots(1 if name == "param1" else 2, params,
                                              size_guard=args.size_guard)
        config = {"command": f"verify {name}", "m": args.m, "s": args.s,
                  "n": args.n, "r": args.r}
    doc = ReportDocument.build(config, [_theorem_entry(rep)])
    _emit(doc, args)
    return _doc_exit_code(doc)


def _cmd_padic(args) -> int:
    if args.check == "mortenson":
        entry = _mortenson_entry(padic.check_mortenson(args.p, args.variant), args.variant)
        config = {"command": "padic mortenson", "p": args.p, "variant": args.variant}
    elif args.check == "sun-liu":
        entry = _sun_liu_entry(padic.check_sun_liu(args.p, args.n, args.x), args.n, args.x)
        config = {"command": "padic sun-liu", "p": args.p, "n": args.n, "x": str(args.x)}
    else:
        entry = _dwork_entry(padic.check_dwork_padic(args.p, args.r, args.m, args.s))
        config = {"command": "padic dwork", "p": args.p, "r": args.r, "m": args.m, "s": args.s}
    doc = ReportDocument.build(config, [entry])
    _emit(doc, args)
    return _doc_exit_code(doc)


def _cmd_scan(args) -> int:
    cfg = load_scan_config(args.config)
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.size_guard is not None:
        cfg.size_guard = args.size_guard
    cfg.validate()
    doc = run_scan(cfg)
    _emit(doc, args)
    return _doc_exit_code(doc)


def run_cli(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "cyclotomic":
            return _cmd_cyclotomic(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "padic":
            return _cmd_padic(args)
        if args.command == "scan":
            return _cmd_scan(args)
        raise InvalidParameter(f"unknown command {args.command}")
    except (InvalidParameter, NotPIntegral) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - CLI boundary
        print(f"internal error: {e}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
