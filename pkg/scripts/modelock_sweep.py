#!/usr/bin/env python3
"""Sweep interior-type kneading sequences of a given height and tabulate
the maximum backward itinerary, demonstrating that it is locked to rhe(q)
while the kneading sequences themselves (the forward maxima) vary.

Usage: modelock_sweep.py [--q M/N] [--limit K] [--out FILE.csv]
"""

import argparse
import csv
import sys
from fractions import Fraction

from tentsym import (
    SeqEP,
    TypeKind,
    c_word,
    classify,
    format_seq,
    max_backward_itinerary,
    validate_kappa,
)
from tentsym.admissibility import KappaInvalid


def interior_kappas(q: Fraction, limit: int):
    """Enumerate interior-type kneading sequences of height q."""
    c = c_word(q)
    out = []
    seen = set()
    for length in range(1, 8):
        for m in range(1 << length):
            suffix = format(m, f"0{length}b")
            for cand in (SeqEP("", c + suffix), SeqEP(c, suffix)):
                if cand in seen:
                    continue
                seen.add(cand)
                try:
                    kap = validate_kappa(cand)
                except KappaInvalid:
                    continue
                ktype = classify(kap)
                if ktype.kind is TypeKind.INTERIOR and ktype.q == q:
                    out.append(kap)
                    if len(out) >= limit:
                        return out
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", default="1/3", help="rational height m/n")
    ap.add_argument("--limit", type=int, default=25)
    ap.add_argument("--out", default="-", help="CSV output path, - for stdout")
    args = ap.parse_args()

    q = Fraction(args.q)
    kappas = interior_kappas(q, args.limit)
    if not kappas:
        print(f"no interior kappas found at height {q}", file=sys.stderr)
        return 1

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(fh)
    writer.writerow(["kappa", "q", "max_backward", "witness"])
    maxima = set()
    for kap in kappas:
        top, witness = max_backward_itinerary(kap)
        maxima.add(top)
        writer.writerow([format_seq(kap.seq), str(q), format_seq(top), format_seq(witness)])
    if fh is not sys.stdout:
        fh.close()
        print(f"wrote {len(kappas)} rows to {args.out}")
    print(
        f"distinct kappas: {len(kappas)}; distinct maxima: {len(maxima)}"
        f" (locked to {format_seq(next(iter(maxima)))})",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
