#!/usr/bin/env python3
"""Audit every catalog certificate: check the printed rational function,
synthesize an independent one, and report agreement.

For each terminating identity this prints one row with
  - the verdict on the printed certificate (pass / FAIL / absent),
  - the synthesis outcome with its wall time,
  - whether the synthesized certificate is semantically equal to the
    printed one.

Usage:  python3 scripts/audit_certificates.py [--names theorem1,theorem2 ...]
"""
from __future__ import annotations

import argparse
import time

from wzpi import (
    BUILTIN_NAMES,
    builtin_record,
    load_builtin,
    synthesize_certificate,
    verify_certificate,
    wz_residual,
)


def audit_one(name: str) -> dict:
    rec = builtin_record(name)
    row = {"name": name, "printed": "absent", "synth": "-", "agrees": "-",
           "seconds": 0.0}
    if rec.kind != "wz":
        row["printed"] = "n/a (no finite sum)"
        return row

    ident = rec.to_identity()
    if rec.has_certificate:
        report = verify_certificate(ident)
        if report.symbolic_ok:
            row["printed"] = "pass"
        else:
            residual = wz_residual(ident)
            row["printed"] = (f"FAIL ({len(residual.num.terms)} residual "
                              f"monomials{', flagged' if rec.erratum else ''})")

    start = time.perf_counter()
    result = synthesize_certificate(ident)
    row["seconds"] = time.perf_counter() - start
    row["synth"] = (f"{result.status} (deg bound {result.degree_bound_used}, "
                    f"dispersion {list(result.dispersion_set)})")
    if result.certificate is not None and rec.has_certificate:
        row["agrees"] = ("equal" if result.certificate.equal(ident.certificate)
                         else "DIFFERS")
    return row


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--names", help="comma-separated subset of the catalog")
    args = parser.parse_args()
    names = args.names.split(",") if args.names else list(BUILTIN_NAMES)

    print(f"{'identity':<11} {'printed certificate':<38} "
          f"{'synthesis':<42} {'vs printed':<10} {'time':>7}")
    print("-" * 112)
    for name in names:
        row = audit_one(name)
        print(f"{row['name']:<11} {row['printed']:<38} {row['synth']:<42} "
              f"{row['agrees']:<10} {row['seconds']:>6.2f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
