"""
Invariant suites
================

The same report the ``verify`` command prints, once clean and once with the
Blaschke zero nudged off its sharp position.
"""
from schwarzian_lab import run_suites

for fault in (None, "perturb-b"):
    print(f"-- fault = {fault}")
    for r in run_suites(fault=fault):
        print(f"  {r.name:22s} {'pass' if r.passed else 'FAIL'}  worst={r.worst:.3g}  tol={r.tolerance:g}")
