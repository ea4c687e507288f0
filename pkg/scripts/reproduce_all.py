"""Run the full reproduction and write the JSON report plus a text table."""

import argparse
import json
from pathlib import Path

from faircoal.reproduce import SCOPES, reproduce


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scope", choices=SCOPES, default="all")
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()
    report = reproduce(args.scope)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / f"reproduce_{args.scope}.json").write_text(json.dumps(report.to_json(), indent=2))
    table = report.table()
    (args.out / f"reproduce_{args.scope}.txt").write_text(table + "\n")
    print(table)
    print(f"\n{len(report.claims)} claims in {report.elapsed:.1f}s; ok={report.ok}")
    raise SystemExit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
