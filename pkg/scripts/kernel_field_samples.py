#!/usr/bin/env python3
"""Sample reproducing kernels on a polar grid and emit JSON-lines records
({n, kind, z, w, value_re, value_im}) for external plotting.

Usage:
    python3 scripts/kernel_field_samples.py --n 3 --kind poly --radius 2.5 \
        --steps 24 > kernel_samples.jsonl
"""

import argparse
import cmath
import sys

from polyfock.fock_spaces import kernel_poly, kernel_true


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--kind", choices=("poly", "true"), default="poly")
    parser.add_argument("--z", type=complex, default=0.5 + 0.5j)
    parser.add_argument("--radius", type=float, default=2.0)
    parser.add_argument("--steps", type=int, default=16)
    args = parser.parse_args()

    kernel = kernel_poly if args.kind == "poly" else kernel_true
    for i in range(args.steps):
        r = args.radius * (i + 1) / args.steps
        for j in range(args.steps):
            w = r * cmath.exp(2j * cmath.pi * j / args.steps)
            value = kernel(args.n, args.z, w)
            sys.stdout.write(
                '{"n":%d,"kind":"%s","z":[%.17g,%.17g],"w":[%.17g,%.17g],'
                '"value_re":%.17g,"value_im":%.17g}\n'
                % (args.n, args.kind, args.z.real, args.z.imag, w.real, w.imag,
                   value.real, value.imag))


if __name__ == "__main__":
    main()
