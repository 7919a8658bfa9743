from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, Tuple

ROOT = Path(__file__).resolve().parents[1]
for path in (ROOT / "src", ROOT):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from genstirling.identities import default_ranges, rows_needed, run_suite  # noqa: E402
from genstirling.profiles import specialize  # noqa: E402
from genstirling.stirling import build_table  # noqa: E402
from tools.export import render_reports_json  # noqa: E402


def _timed(fn: Callable[[], Any]) -> Tuple[Any, float]:
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def run_bench(numeric_n: int, poly_n: int, suite_n: int, threads: int) -> Dict[str, Any]:
    lah, numeric_seconds = _timed(lambda: specialize("lah", numeric_n))
    table, poly_seconds = _timed(lambda: build_table(poly_n))

    ranges = default_ranges(suite_n)
    suite_table = build_table(rows_needed(ranges))
    sequential, suite_seconds = _timed(lambda: run_suite(ranges, suite_table, threads=1))
    parallel = run_suite(ranges, suite_table, threads=threads)

    return {
        "numeric_lah_n": numeric_n,
        "numeric_lah_seconds": round(numeric_seconds, 3),
        "numeric_lah_last_row_digits": len(str(max(lah[numeric_n]))),
        "poly_n": poly_n,
        "poly_seconds": round(poly_seconds, 3),
        "poly_terms_last_row": sum(len(v.terms) for v in table.row(poly_n)),
        "suite_n": suite_n,
        "suite_checks": len(sequential),
        "suite_seconds": round(suite_seconds, 3),
        "deterministic_across_threads": render_reports_json(sequential) == render_reports_json(parallel),
    }


def main() -> int:
    parser = argparse.ArgumentParser(description="Time triangle construction and check suite determinism")
    parser.add_argument("--numeric-n", type=int, default=200, help="Rows of the numeric Lah triangle")
    parser.add_argument("--poly-n", type=int, default=40, help="Rows of the polynomial triangle")
    parser.add_argument("--suite-n", type=int, default=8, help="max-n of the identity suite")
    parser.add_argument("--threads", type=int, default=4, help="Thread count compared against a sequential run")
    parser.add_argument("--budget", type=float, default=10.0, help="Seconds allowed for each timed stage")
    args = parser.parse_args()

    stats = run_bench(args.numeric_n, args.poly_n, args.suite_n, args.threads)
    print(json.dumps(stats, indent=2, sort_keys=True))

    over = [key for key in ("numeric_lah_seconds", "poly_seconds") if stats[key] > args.budget]
    if over:
        print(f"Over budget ({args.budget}s): {', '.join(over)}", file=sys.stderr)
        return 1
    if not stats["deterministic_across_threads"]:
        print("Suite reports differ between thread counts", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
