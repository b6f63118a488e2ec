"""Deterministic report artifacts: CSV and JSON renderings of a sweep.

Machine formats carry 17 significant digits (bit-exact double round-trip);
repeated runs produce byte-identical files.  The same artifacts are
available from the command line:

    besselstruve sweep --id T3 --format csv --output t3.csv
    besselstruve audit --id T1 --mu 1 --lambda 2.5 --a 1 --y 0.5 --alpha 1
    besselstruve --config run.json
"""

import json
import tempfile
from pathlib import Path

from besselstruve import audit_sweep, default_grid, render_report, write_report

records = audit_sweep("T4", default_grid("T4"))
csv_text = render_report(records, "csv")
print("CSV header and first two rows:")
for line in csv_text.splitlines()[:3]:
    print(" ", line)

print("\nText rendering (truncated):")
for line in render_report(records, "text").splitlines()[:5]:
    print(" ", line)
print("  ...")
print(" ", render_report(records, "text").splitlines()[-1])

parsed = json.loads(render_report(records, "json"))
rec = records[0]
print("\nJSON round-trip is bit-exact:",
      parsed[0]["lhs_value"] == rec.lhs.value
      and parsed[0]["rel_err_derived"] == rec.rel_err_derived)

print("Repeated renderings byte-identical:",
      render_report(records, "csv") == render_report(audit_sweep("T4"), "csv"))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "t4_report.csv"
    write_report(records, "csv", str(path))
    print(f"\nwrote {path.name}: {len(path.read_text().splitlines())} lines")
