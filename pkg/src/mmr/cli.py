"""Command-line front end with JSON/text output and an on-disk result cache."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .braid import closure_info, parity_check, parse_braid, require_knot
from .burau import alexander_conway
from .errors import ConsistencyError, InputError
from .exactalg import scalar_str
from .mmexpand import check_integrality, extract_D, recover_P, to_line_series
from .perturb import KAPPA_VARIANTS, line_via_perturbation
from .qtrace import colored_jones

SCHEMA = 1
MAX_PERTURBATIVE_LINE = 2


@dataclass(frozen=True)
class JobSpec:
    braid: str
    strands: int | None = None
    alphas: tuple = (1, 2, 3)
    order: int = 8
    lines: int = 1
    cross_check: bool = False
    fmt: str = "json"
    cache: bool = True
    name: str | None = None

    def __post_init__(self):
        if self.order < 0:
            raise InputError("--h-order must be >= 0")
        if self.lines < 0:
            raise InputError("--lines must be >= 0")
        if self.lines > self.order:
            raise InputError(f"line index {self.lines} exceeds h-order {self.order}")
        if any(a < 1 for a in self.alphas):
            raise InputError("colours must be >= 1")
        if self.fmt not in ("json", "text"):
            raise InputError("--format must be json or text")

    def key(self) -> str:
        payload = {k: v for k, v in asdict(self).items() if k not in ("fmt", "cache")}
        payload["version"] = __version__
        blob = json.dumps(payload, sort_keys=True, default=list).encode()
        return hashlib.sha256(blob).hexdigest()


def parse_alphas(text: str) -> tuple:
    """"3", "1,2,5" or "2..4"."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise InputError(f"empty colour range {text!r}")
            return tuple(range(lo, hi + 1))
        vals = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"cannot parse colours {text!r}") from None
    if not vals:
        raise InputError("no colours given")
    return tuple(sorted(set(vals)))


def _line_doc(r):
    return {
        "n": r.n,
        "line": [scalar_str(c) for c in r.line],
        "P": None if r.P is None else [scalar_str(c) for c in r.P],
        "stable": r.stable,
        "residual_zero_order": r.residual_zero_order,
        "undetermined_at": None if r.undetermined_at is None else [r.undetermined_at[0], scalar_str(r.undetermined_at[1])],
        "line_integral": r.line_integral,
        "P_integral": r.P_integral,
        "source": r.source,
        "meta": {k: str(v) for k, v in sorted(r.meta.items())},
    }


def run(job: JobSpec) -> dict:
    """Compute the full result document for one braid."""
    b = parse_braid(job.braid, job.strands)
    info = closure_info(b)
    require_knot(b)
    delta = alexander_conway(b)
    jones = []
    for a in job.alphas:
        r = colored_jones(b, a)
        jones.append(
            {
                "alpha": a,
                "framing_exponent_quarters": r.framing_exponent,
                "V_q_terms": [[k, scalar_str(c)] for k, c in r.value.to_q().items()],
            }
        )
    table = extract_D(b, job.order)
    series = to_line_series(table)
    lines = [recover_P(b, n, table, series) for n in range(job.lines + 1)]
    report = check_integrality(table, lines)
    doc = {
        "schema": SCHEMA,
        "version": __version__,
        "input": {"name": job.name, "braid": b.text(), "strands": b.strands, "alphas": list(job.alphas), "h_order": job.order, "lines": job.lines},
        "closure": {
            "permutation": list(info.permutation),
            "cycles": [list(c) for c in info.cycles],
            "is_knot": info.is_knot,
            "writhe": b.writhe,
            "parity_even": parity_check(b),
        },
        "alexander_conway_z2": [scalar_str(c) for c in delta.coeffs],
        "jones": jones,
        "mm_table": {
            "order": table.order,
            "samples": list(table.samples),
            "entries": [[m, n, scalar_str(c)] for (m, n), c in sorted(table.D.items())],
        },
        "lines": [_line_doc(r) for r in lines],
        "line_reliability": f"line n is exact for z^(2m) with n + 2m <= {job.order}",
        "integrality": {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(report).items()},
        "provenance": {"lines": "direct"},
    }
    if job.cross_check:
        doc["cross_check"] = cross_check(b, lines, min(job.lines, MAX_PERTURBATIVE_LINE), job.order)
        doc["provenance"]["cross_check"] = "perturbative"
    return doc


def cross_check(b, direct_lines, max_n: int, order: int) -> dict:
    out = {"variants": {}, "matching_variant": None}
    matches = {v: True for v in KAPPA_VARIANTS}
    for v in KAPPA_VARIANTS:
        entries = []
        for n in range(max_n + 1):
            d = direct_lines[n]
            try:
                r = line_via_perturbation(b, n, 2 * (len(d.line) - 1), v)
            except ConsistencyError as exc:
                entries.append({"n": n, "error": str(exc), "agrees": False})
                matches[v] = False
                continue
            agrees = tuple(r.line) == tuple(d.line) and (d.P is None or tuple(d.P) == tuple(r.P))
            matches[v] = matches[v] and agrees
            entries.append({"n": n, "P": [scalar_str(c) for c in r.P], "line": [scalar_str(c) for c in r.line], "agrees": agrees})
        out["variants"][v] = entries
    chosen = [v for v in KAPPA_VARIANTS if matches[v]]
    out["matching_variant"] = chosen[0] if chosen else None
    return out


# ---------------------------------------------------------------------------
# cache


def default_cache_dir() -> Path:
    env = os.environ.get("MMR_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "mmr"


def cache_lookup(cache_dir: Path, key: str) -> dict | None:
    path = Path(cache_dir) / f"{key}.json"
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(doc, dict) or doc.get("version") != __version__ or doc.get("schema") != SCHEMA:
        return None
    return doc


def cache_store(cache_dir: Path, key: str, doc: dict) -> None:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(encode(doc))
        os.replace(tmp, cache_dir / f"{key}.json")
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_cached(job: JobSpec, cache_dir: Path | None) -> dict:
    if job.cache and cache_dir is not None:
        hit = cache_lookup(cache_dir, job.key())
        if hit is not None:
            return hit
    doc = run(job)
    if job.cache and cache_dir is not None:
        try:
            cache_store(cache_dir, job.key(), doc)
        except OSError:
            pass
    return doc


# ---------------------------------------------------------------------------
# output


def encode(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(doc: dict) -> str:
    if "error" in doc:
        return f"{doc.get('name') or doc.get('braid')}: error ({doc['kind']}): {doc['error']}\n"
    inp = doc["input"]
    out = [f"braid {inp['braid'] or '(empty)'} on {inp['strands']} strands" + (f"  [{inp['name']}]" if inp["name"] else "")]
    out.append(f"  writhe {doc['closure']['writhe']}, closure cycles {doc['closure']['cycles']}")
    out.append("  Conway: " + " ".join(doc["alexander_conway_z2"]) + "  (ascending powers of z^2)")
    for j in doc["jones"]:
        terms = " + ".join(f"{c} q^{k}" for k, c in j["V_q_terms"]).replace("+ -", "- ")
        out.append(f"  V_{j['alpha']} = {terms}")
    for ln in doc["lines"]:
        p = "undetermined" if ln["P"] is None else " ".join(ln["P"])
        out.append(f"  line {ln['n']}: d = {' '.join(ln['line'])}; P = {p}")
    integ = doc["integrality"]
    out.append(f"  MM bound {integ['mm_bound']}, n!D integral {integ['factorial_D']}, lines integral {integ['line_coeffs']}, P integral {integ['P_coeffs']}")
    if "cross_check" in doc:
        out.append(f"  cross-check matching kappa variant: {doc['cross_check']['matching_variant']}")
    return "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mmr", description="Coloured Jones, Alexander-Conway and Melvin-Morton lines of braid closures.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help='signed generators, e.g. "1,-2,1,-2"')
    src.add_argument("--table", help="JSON array of {name, braid, strands} records")
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--alpha", default="1..3", help='colour, list "1,3" or range "2..4"')
    p.add_argument("--h-order", type=int, default=8, dest="order")
    p.add_argument("--lines", type=int, default=1)
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--version", action="version", version=f"mmr {__version__}")
    return p


def _jobs(args) -> list:
    common = dict(
        alphas=parse_alphas(args.alpha),
        order=args.order,
        lines=args.lines,
        cross_check=args.cross_check,
        fmt=args.fmt,
        cache=not args.no_cache,
    )
    if args.braid is not None:
        return [JobSpec(braid=args.braid, strands=args.strands, **common)]
    try:
        records = json.loads(Path(args.table).read_text())
    except OSError as exc:
        raise InputError(f"cannot read table: {exc}") from None
    except ValueError as exc:
        raise InputError(f"table is not valid JSON: {exc}") from None
    if not isinstance(records, list):
        raise InputError("table must be a JSON array")
    jobs = []
    for i, rec in enumerate(records):
        if not isinstance(rec, dict) or "braid" not in rec:
            raise InputError(f"table entry {i} needs a 'braid' field")
        jobs.append(JobSpec(braid=str(rec["braid"]), strands=rec.get("strands"), name=rec.get("name"), **common))
    return jobs


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        jobs = _jobs(args)
    except InputError as exc:
        print(f"mmr: input error: {exc}", file=sys.stderr)
        return 2
    cache_dir = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    docs = []
    status = 0
    for job in jobs:
        try:
            docs.append(run_cached(job, cache_dir))
        except InputError as exc:
            if args.braid is not None:
                print(f"mmr: input error: {exc}", file=sys.stderr)
                return 2
            docs.append({"name": job.name, "braid": job.braid, "kind": "input", "error": str(exc)})
            status = max(status, 2)
        except ConsistencyError as exc:
            if args.braid is not None:
                print(f"mmr: internal consistency failure: {exc}", file=sys.stderr)
                return 3
            docs.append({"name": job.name, "braid": job.braid, "kind": "consistency", "error": str(exc)})
            status = 3
    if args.fmt == "json":
        sys.stdout.write(encode(docs[0] if args.braid is not None else docs))
    else:
        sys.stdout.write("".join(render_text(d) for d in docs))
    return status


if __name__ == "__main__":
    sys.exit(main())
