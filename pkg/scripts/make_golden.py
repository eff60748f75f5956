"""Regenerate tests/golden/: canonical element and tensor texts for round-trip tests.

Run once and commit; the round-trip test then pins the printer and parser.
Usage: python scripts/make_golden.py [outdir]
"""
import json
import sys
from pathlib import Path

from wittbialg.bialgebra import michaelis_r
from wittbialg.sampling import Sampler
from wittbialg.scalars import AlgebraConfig
from wittbialg.textio import format_any, parse

HANDWRITTEN = {
    "n1_elt_zero": (1, "0"),
    "n1_elt_witt_l3": (1, "t[3] d[1]"),
    "n1_elt_mixed": (1, "t[-2] d[1/2] + d[-3] + t[5/2] d[1]"),
    "n2_elt_torus": (2, "d[1,-2/3]"),
    "n3_elt_three_terms": (3, "t[-1,0,1/2] d[0,0,1] + d[1,1,1] + t[0,2,0] d[-1,0,3]"),
    "n1_t2_michaelis": (1, "d[1] (*) t[1] d[1] - t[1] d[1] (*) d[1]"),
    "n1_t2_symmetric": (1, "d[1] (*) d[1]"),
    "n2_t2_torus_alternating": (2, "d[1,0] (*) d[0,1] - d[0,1] (*) d[1,0]"),
    "n3_t2_michaelis_k2": (3, "d[1,0,0] (*) t[2,0,0] d[0,1,0] - t[2,0,0] d[0,1,0] (*) d[1,0,0]"),
    "n1_t2_not_triangular": (1, "t[1] d[1] (*) t[2] d[1] - t[2] d[1] (*) t[1] d[1]"),
    "n1_t3_cube": (1, "d[1] (*) d[1] (*) d[1]"),
    "n1_t3_zero": (1, "0"),
    "n2_t3_coeffs": (2, "2 * d[1,0] (*) d[1,0] (*) d[1,0] - 3/2 * t[1,0] d[1,0] (*) d[0,1] (*) t[-1,0] d[0,1]"),
}

# expected classify exit codes for the r-matrix files
CLASSIFY = {
    "n1_t2_michaelis": 0,
    "n1_t2_symmetric": 2,
    "n2_t2_torus_alternating": 0,
    "n1_t2_not_triangular": 2,
    "n3_t2_michaelis_k2": 0,
    "n1_t2_michaelis_sample": 0,
    "n2_t2_michaelis_sample": 0,
    "n3_t2_michaelis_sample": 0,
}


def generated():
    out = {}
    for n in (1, 2, 3):
        s = Sampler(AlgebraConfig(n, seed=100 + n))
        out[f"n{n}_elt_sample"] = (n, s.element(3))
        out[f"n{n}_t2_sample"] = (n, s.tensor(2, 3))
        out[f"n{n}_t3_sample"] = (n, s.tensor(3, 2))
        out[f"n{n}_t2_alternating_sample"] = (n, s.alternating_r(pairs=2))
        a, b, k = s.michaelis_pair()
        out[f"n{n}_t2_michaelis_sample"] = (n, michaelis_r(a, b, k))
        if n > 1:
            out[f"n{n}_t2_homogeneous_sample"] = (n, s.homogeneous(s.nonzero_point()))
    return out


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    files = {}
    for name, (n, text) in HANDWRITTEN.items():
        arity = 3 if "_t3_" in name else 2 if "_t2_" in name else 1
        if format_any(parse(text, n, arity)) != text:
            raise SystemExit(f"{name}: handwritten text is not canonical")
        files[name] = text
    for name, (n, value) in generated().items():
        files[name] = format_any(value)
    for name, text in files.items():
        (outdir / f"{name}.txt").write_text(text)
    (outdir / "classify_exit_codes.json").write_text(json.dumps(CLASSIFY, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(files)} files to {outdir}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "tests" / "golden")
