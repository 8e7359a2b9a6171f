#!/usr/bin/env python3
"""Run the bundled corpus: three-way SMB agreement plus oracle verification
for every case.  Prints one line per case and a summary; exits 1 on any
disagreement."""

import argparse
import sys
import time

from drinfeld_smb import poly as P
from drinfeld_smb.corpus import all_cases
from drinfeld_smb.engine import analyze, smb_recursion, verify_multiset
from drinfeld_smb.errors import HypothesisError


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quiet", action="store_true")
    args = parser.parse_args()

    failures = 0
    total = 0
    skipped = 0
    t0 = time.perf_counter()
    for case in all_cases():
        F = case.module.field
        label = (
            f"q={F.q} phi=({', '.join(str(c) for c in case.module.phi_t.coeffs)}) "
            f"w={case.place} u={P.format_poly(F, case.u)} n={case.n}"
        )
        try:
            an = analyze(case.module, case.place, case.u, case.n)
        except HypothesisError as exc:
            skipped += 1
            if not args.quiet:
                print(f"skip {label}: {exc}")
            continue
        total += 1
        rec = smb_recursion(case.module, case.u, case.n, case.place)
        rec_vals = rec.levels[-1].valuations
        rep = verify_multiset(case.module, case.place, case.u, case.n)
        ok = (
            an.closed.valuations == rec_vals == an.dictionary.valuations
            and rep.equal
        )
        if not ok:
            failures += 1
        if not args.quiet or not ok:
            lam = ", ".join(str(v) for v in an.closed.valuations)
            print(f"{'ok  ' if ok else 'FAIL'} {label} case={an.case} lam=({lam})")
    dt = time.perf_counter() - t0
    print(
        f"\n{total - failures}/{total} cases passed, {skipped} skipped, "
        f"{dt:.1f}s"
    )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
