"""Compare lines from the coloured Jones fit with the perturbed Burau expansion.

    python3 scripts/cross_check.py --max-line 1
"""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from mmr.braid import parse_braid
from mmr.errors import ConsistencyError
from mmr.mmexpand import extract_D, recover_P, to_line_series
from mmr.perturb import KAPPA_VARIANTS, line_via_perturbation

HERE = Path(__file__).resolve().parent


@dataclass(frozen=True)
class CrossCheckConfig:
    table: Path = HERE / "knots.json"
    order: int = 12
    max_line: int = 1
    order_z: int = 6


def main(cfg: CrossCheckConfig) -> None:
    for rec in json.loads(cfg.table.read_text()):
        b = parse_braid(rec["braid"], rec.get("strands"))
        table = extract_D(b, cfg.order)
        series = to_line_series(table)
        for n in range(cfg.max_line + 1):
            direct = recover_P(b, n, table, series)
            for v in KAPPA_VARIANTS:
                start = time.perf_counter()
                try:
                    r = line_via_perturbation(b, n, cfg.order_z, v)
                    same_line = r.line == direct.line[: len(r.line)]
                    if direct.P is None:
                        verdict = "lines agree, fitted P undetermined" if same_line else "DIFFER"
                    else:
                        verdict = "agree" if same_line and r.P == direct.P else "DIFFER"
                except ConsistencyError as exc:
                    verdict = f"failed ({exc})"
                print(f"{rec['name']:>13} n={n} {v:>7}: {verdict}  ({time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--table", type=Path, default=CrossCheckConfig.table)
    p.add_argument("--order", type=int, default=CrossCheckConfig.order)
    p.add_argument("--max-line", type=int, default=CrossCheckConfig.max_line)
    a = p.parse_args()
    main(CrossCheckConfig(a.table, a.order, a.max_line))
