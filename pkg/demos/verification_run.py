#!/usr/bin/env python3
"""Run the full oracle suite and save the JSON report.

Every closed form in the package is recomputed by an independent numerical
route and compared at an explicit tolerance: moment-ODE integration,
truncated Fock-space Lindblad steady states (two-mode and degenerate),
Gauss-Hermite quadrature of the Q function, Lorentzian quadrature of the
spectrum, and seeded Monte Carlo sampling.  Equivalent to
`subharmonic verify`.
"""

import json
from pathlib import Path

from subharmonic.oracles import run_verification

OUT = Path(__file__).resolve().parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    report = run_verification()

    by_prefix: dict[str, list] = {}
    for check in report["checks"]:
        by_prefix.setdefault(check["name"].split(".")[0].split("[")[0], []).append(check)
    for prefix, checks in by_prefix.items():
        worst = max(checks, key=lambda c: c["error"] / c["tolerance"])
        status = "ok " if all(c["passed"] for c in checks) else "FAIL"
        print(f"[{status}] {prefix:12s} {len(checks):3d} checks, "
              f"worst {worst['name']}: err {worst['error']:.2e} "
              f"(tol {worst['tolerance']:.0e})")

    path = OUT / "verification_report.json"
    path.write_text(json.dumps(report, sort_keys=True, indent=2) + "\n",
                    encoding="utf-8")
    print(f"\n{'all passed' if report['passed'] else 'FAILURES PRESENT'}; "
          f"full report in {path}")


if __name__ == "__main__":
    main()
