"""Cross-check the construction routes on random gluing data.

    python3 scripts/sweep_random.py --n 500 --snc 200 --seed 0

For every random dataset the gluing route is compared with the closed-form
enumeration and with the quotient route, the Euler bookkeeping is checked,
and the literal endpoint rule is compared against the validation warning.
Random snc datasets are compared with the subdivided classical dual complex.
A short summary of the outcome distribution is printed at the end.
"""
import argparse
import random
import time
from collections import Counter

from slc_dual.cell_complex import barycentric_subdivision, euler_characteristic, isomorphic
from slc_dual.construction import build_by_quotient, build_dual_complex, enumerate_cells, snc_dual_complex
from slc_dual.halfedge_graph import GraphType
from slc_dual.random_data import RandomConfig, random_dataset, random_snc_dataset
from slc_dual.slc_data import validate
from slc_dual.topology import homology


def sweep(n, rng, cfg):
    stats, bad = Counter(), []
    for i in range(n):
        d = random_dataset(rng, cfg)
        rep = validate(d)
        r = build_dual_complex(d)
        c = r.complex
        circles = sum(t.kind is GraphType.Circle for t in r.link_types.values())
        stats["circles"] += circles
        stats["intervals"] += len(r.link_types) - circles
        stats["warned"] += bool(rep.warnings)
        stats["H1 torsion"] += bool(homology(c).torsion[1])
        if not isomorphic(c, enumerate_cells(d)):
            bad.append((i, "enumerate_cells"))
        if not isomorphic(c, build_by_quotient(d)):
            bad.append((i, "build_by_quotient"))
        if euler_characteristic(c) != euler_characteristic(r.c1_complex) + circles:
            bad.append((i, "euler bookkeeping"))
        differs = build_by_quotient(d, "endpoints").counts() != c.counts()
        if differs != bool(rep.warnings):
            bad.append((i, "endpoint warning"))
    return stats, bad


def sweep_snc(n, rng):
    stats, bad = Counter(), []
    for i in range(n):
        d = random_snc_dataset(rng)
        s = snc_dual_complex(d)
        stats["triangles"] += len(s.triangles)
        if not isomorphic(build_dual_complex(d).complex, barycentric_subdivision(s), match_labels="vertices"):
            bad.append((i, "snc oracle"))
    return stats, bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--snc", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-points", type=int, default=12)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    stats, bad = sweep(args.n, rng, RandomConfig(max_points=args.max_points))
    snc_stats, snc_bad = sweep_snc(args.snc, rng)
    elapsed = time.perf_counter() - t0
    print(f"random datasets: {args.n}, snc datasets: {args.snc}, {elapsed:.1f}s")
    for k, v in sorted((stats + snc_stats).items()):
        print(f"  {k}: {v}")
    for i, what in bad + snc_bad:
        print(f"MISMATCH #{i}: {what}")
    print("mismatches:", len(bad) + len(snc_bad))
    raise SystemExit(1 if bad or snc_bad else 0)


if __name__ == "__main__":
    main()
