"""Print the lines P_n(z^2) recovered from coloured Jones data for a table of knots.

    python3 scripts/line_table.py --order 12 --lines 2
"""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from mmr.braid import parse_braid
from mmr.burau import alexander_conway
from mmr.mmexpand import check_integrality, extract_D, recover_P, to_line_series

HERE = Path(__file__).resolve().parent


@dataclass(frozen=True)
class LineTableConfig:
    table: Path = HERE / "knots.json"
    order: int = 12
    lines: int = 2


def fmt_poly(coeffs) -> str:
    if coeffs is None:
        return "undetermined"
    terms = []
    for k, c in enumerate(coeffs):
        if c:
            mono = f"z^{2 * k}"
            terms.append(f"{c}" if k == 0 else mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def main(cfg: LineTableConfig) -> None:
    records = json.loads(cfg.table.read_text())
    for rec in records:
        b = parse_braid(rec["braid"], rec.get("strands"))
        start = time.perf_counter()
        table = extract_D(b, cfg.order)
        series = to_line_series(table)
        results = [recover_P(b, n, table, series) for n in range(cfg.lines + 1)]
        report = check_integrality(table, results)
        print(f"{rec['name']}: Delta = {alexander_conway(b)}")
        for r in results:
            print(f"  P_{r.n} = {fmt_poly(r.P)}    d = {list(r.line)}")
        print(f"  integrality ok: {report.ok}  ({time.perf_counter() - start:.2f} s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--table", type=Path, default=LineTableConfig.table)
    p.add_argument("--order", type=int, default=LineTableConfig.order)
    p.add_argument("--lines", type=int, default=LineTableConfig.lines)
    a = p.parse_args()
    main(LineTableConfig(a.table, a.order, a.lines))
