"""Command line interface: ``rigcon <verb> [options]``.

Exit status is 0 on success, 1 when a verification finds a counterexample
and 2 for usage or domain errors. Machine output goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bijection import phi_steps, phi_tilde, psi_su2_trace, rc_from_path
from .crystal import (
    CartanType,
    DomainError,
    Path,
    TensorSpec,
    check_weight,
    dominant_weights,
    enumerate_paths,
    is_classically_highest,
    parse_letter,
    parse_weight,
)
from .energy import energy, one_dim_sum
from .qseries import LaurentPoly, invert_q
from .rigged import RiggedConfiguration, cocharge, complement, enumerate_rc, fermionic_M
from .xxx import count_total

VERBS = (
    "enumerate-paths", "enumerate-rc", "rc-to-path", "path-to-rc", "xsum", "msum",
    "verify-xm", "verify-bijection", "xxx-count", "xxx-psi",
)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigcon",
        description="Rigged configurations, B^{1,1} paths and X = M for types A_n^(1), D_n^(1).",
    )
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def common(p, weight=True):
        p.add_argument("--type", dest="family", choices=["A", "D"])
        p.add_argument("--rank", type=int)
        p.add_argument("--length", type=int)
        if weight:
            p.add_argument("--weight", help='epsilon coordinates "3,2" or fundamental weights "L3+L4"')
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--jobs", type=int, default=1)

    for verb in ("enumerate-paths", "enumerate-rc", "xsum", "msum", "verify-xm", "verify-bijection"):
        common(sub.add_parser(verb))
    for verb in ("rc-to-path", "path-to-rc"):
        p = sub.add_parser(verb)
        common(p, weight=False)
        p.add_argument("--input", help="JSON file with a rigged configuration or a path")
        p.add_argument("--word", help='path letters, leftmost first, e.g. "2 1 1 2 1" or "4b 3 1b"')
        p.add_argument("--trace", action="store_true", help="print the delta step table")
    p = sub.add_parser("xxx-count")
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--down", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p = sub.add_parser("xxx-psi")
    p.add_argument("--word", help="A1 path, leftmost first, e.g. 21121")
    p.add_argument("--input", help="JSON file with an A1 path")
    p.add_argument("--trace", action="store_true", help="print the insertion step table")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


# --- argument coherence --------------------------------------------------------------

def _tensor_spec(args) -> TensorSpec:
    missing = [f for f in ("family", "rank", "length") if getattr(args, f, None) is None]
    if missing:
        names = {"family": "--type", "rank": "--rank", "length": "--length"}
        raise UsageError("missing " + ", ".join(names[m] for m in missing))
    return TensorSpec(CartanType(args.family, args.rank), args.length)


def _weight(args, ts: TensorSpec):
    if args.weight is None:
        return None
    return parse_weight(args.weight, ts.ctype)


def _parse_word(text: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    return [parse_letter(x) for x in tokens]


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _path_arg(args, family=None, rank=None) -> Path:
    if args.input:
        obj = _load_json(args.input)
        try:
            return Path.from_json(obj)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"{args.input} is not a path document: {exc}") from None
    if args.word:
        family = family or getattr(args, "family", None)
        rank = rank or getattr(args, "rank", None)
        if family is None or rank is None:
            raise UsageError("--word needs --type and --rank")
        p = Path.of(family, rank, _parse_word(args.word))
        if getattr(args, "length", None) not in (None, len(p)):
            raise UsageError(f"--length {args.length} does not match a word of length {len(p)}")
        return p
    raise UsageError("give a path with --word or --input")


# --- per-weight workers (module level so they can run in worker processes) ---------------

def _xm_check(task):
    ts, lam = task
    x_inv = invert_q(one_dim_sum(ts, lam))
    m = fermionic_M(ts, lam)
    return {"weight": list(lam), "x_inverted": x_inv.to_json(), "m": m.to_json(), "ok": x_inv == m}


def _bijection_check(task):
    ts, lam = task
    rcs = enumerate_rc(ts, lam)
    paths = enumerate_paths(ts, lam)
    images = [phi_tilde(rc) for rc in rcs]
    path_set = {p.letters for p in paths}
    image_set = {p.letters for p in images}
    failures = []
    injective = len(image_set) == len(images)
    statistic = True
    round_trip = True
    for rc, img in zip(rcs, images):
        bad = False
        if cocharge(rc) != -energy(img):
            statistic = False
            bad = True
        if injective and rc_from_path(img) != rc:
            round_trip = False
            bad = True
        if bad:
            failures.append(rc.to_json())
    if not injective:
        round_trip = False
    cardinality = len(rcs) == len(paths) and image_set == path_set
    ok = cardinality and injective and statistic and round_trip
    return {
        "weight": list(lam), "rc_count": len(rcs), "path_count": len(paths),
        "cardinality": cardinality, "injective": injective, "statistic": statistic,
        "round_trip": round_trip, "ok": ok, "failures": failures,
    }


def _sweep(worker, ts: TensorSpec, weights, jobs: int):
    tasks = [(ts, lam) for lam in weights]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(worker, tasks))
    return [worker(t) for t in tasks]


# --- commands ------------------------------------------------------------------------

def _emit(out, args, json_obj, text_lines):
    if args.format == "json":
        out.write(json.dumps(json_obj, sort_keys=False) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _fmt_weight(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def _delta_table(rc: RiggedConfiguration) -> list[str]:
    comp = complement(rc)
    lines = ["rk  | configuration (row[rigging]vacancy per color)", f"    | {comp}"]
    for step in phi_steps(comp):
        rk = f"{-step.rank}b" if step.rank < 0 else str(step.rank)
        lines.append(f"{rk:<3} | {step.rest}")
    return lines


def cmd_enumerate_paths(args, out):
    ts = _tensor_spec(args)
    lam = _weight(args, ts)
    if lam is None:
        raise UsageError("--weight is required")
    paths = enumerate_paths(ts, lam, jobs=args.jobs)
    _emit(out, args, [p.to_json() for p in paths], [str(p) for p in paths])
    return 0


def cmd_enumerate_rc(args, out):
    ts = _tensor_spec(args)
    lam = _weight(args, ts)
    if lam is None:
        raise UsageError("--weight is required")
    rcs = enumerate_rc(ts, lam, jobs=args.jobs)
    _emit(out, args, [rc.to_json() for rc in rcs], [f"{rc}   cc={cocharge(rc)}" for rc in rcs])
    return 0


def cmd_rc_to_path(args, out):
    if not args.input:
        raise UsageError("rc-to-path needs --input with a rigged configuration")
    obj = _load_json(args.input)
    try:
        rc = RiggedConfiguration.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{args.input} is not a rigged configuration document: {exc}") from None
    rc.validate()
    p = phi_tilde(rc)
    if args.trace:
        table = _delta_table(rc)
        if args.format == "json":
            sys.stderr.write("\n".join(table) + "\n")
        else:
            for line in table:
                out.write(line + "\n")
    _emit(out, args, p.to_json(),
          [f"path: {p}", f"cocharge: {cocharge(rc)}", f"energy (<= 0 convention): {energy(p)}"])
    return 0


def cmd_path_to_rc(args, out):
    p = _path_arg(args)
    if not is_classically_highest(p):
        raise DomainError(f"{p} is not classically highest weight")
    rc = rc_from_path(p)
    if args.trace:
        table = _delta_table(rc)
        if args.format == "json":
            sys.stderr.write("\n".join(table) + "\n")
        else:
            for line in table:
                out.write(line + "\n")
    _emit(out, args, rc.to_json(), [f"rc: {rc}", f"cocharge: {cocharge(rc)}"])
    return 0


def cmd_xsum(args, out):
    ts = _tensor_spec(args)
    lam = _weight(args, ts)
    if lam is None:
        raise UsageError("--weight is required")
    x = one_dim_sum(ts, lam, jobs=args.jobs)
    _emit(out, args, x.to_json(), [f"X(q) [energy <= 0 convention] = {x}"])
    return 0


def cmd_msum(args, out):
    ts = _tensor_spec(args)
    lam = _weight(args, ts)
    if lam is None:
        raise UsageError("--weight is required")
    m = fermionic_M(ts, lam)
    _emit(out, args, m.to_json(), [f"M(q) = {m}"])
    return 0


def _weights_for(args, ts):
    lam = _weight(args, ts)
    if lam is not None:
        return [check_weight(lam, ts.ctype)]
    return dominant_weights(ts.ctype, ts.length)


def cmd_verify_xm(args, out):
    ts = _tensor_spec(args)
    results = _sweep(_xm_check, ts, _weights_for(args, ts), args.jobs)
    lines = []
    for r in results:
        x = LaurentPoly.from_json(r["x_inverted"])
        m = LaurentPoly.from_json(r["m"])
        status = "PASS" if r["ok"] else "FAIL"
        rel = "=" if r["ok"] else "!="
        lines.append(f"{status} weight={_fmt_weight(r['weight'])}: X(q^-1) = {x} {rel} M = {m}")
    _emit(out, args, results, lines)
    return 0 if all(r["ok"] for r in results) else 1


def cmd_verify_bijection(args, out):
    ts = _tensor_spec(args)
    results = _sweep(_bijection_check, ts, _weights_for(args, ts), args.jobs)
    lines = []
    for r in results:
        status = "PASS" if r["ok"] else "FAIL"
        lines.append(
            f"{status} weight={_fmt_weight(r['weight'])}: |RC|={r['rc_count']} |P|={r['path_count']}"
            f" cardinality={r['cardinality']} injective={r['injective']}"
            f" cc=-E={r['statistic']} round_trip={r['round_trip']}"
        )
        for f in r["failures"]:
            lines.append("  offending rc: " + json.dumps(f))
    _emit(out, args, results, lines)
    return 0 if all(r["ok"] for r in results) else 1


def cmd_xxx_count(args, out):
    z = count_total(args.sites, args.down)
    _emit(out, args, z, [str(z)])
    return 0


def cmd_xxx_psi(args, out):
    p = _path_arg(args, family="A", rank=1)
    rc, steps = psi_su2_trace(p)
    if args.trace:
        lines = ["prefix | rows as length[label]vacancy"]
        for s in steps:
            body = " ".join(f"{x}[{r}]{v}" for x, r, v in s.rows) or "-"
            lines.append(f"{s.prefix or '-':<6} | {body}")
        if args.format == "json":
            sys.stderr.write("\n".join(lines) + "\n")
        else:
            for line in lines:
                out.write(line + "\n")
    _emit(out, args, rc.to_json(), [f"rc: {rc.format()}", f"cocharge: {cocharge(rc)}"])
    return 0


COMMANDS = {
    "enumerate-paths": cmd_enumerate_paths,
    "enumerate-rc": cmd_enumerate_rc,
    "rc-to-path": cmd_rc_to_path,
    "path-to-rc": cmd_path_to_rc,
    "xsum": cmd_xsum,
    "msum": cmd_msum,
    "verify-xm": cmd_verify_xm,
    "verify-bijection": cmd_verify_bijection,
    "xxx-count": cmd_xxx_count,
    "xxx-psi": cmd_xxx_psi,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("rigcon: --jobs must be >= 1\n")
        return 2
    try:
        return COMMANDS[args.verb](args, out)
    except (UsageError, DomainError) as exc:
        sys.stderr.write(f"rigcon {args.verb}: error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
