"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload runs once per backend; the results of both must agree.
"""

import argparse
import json
import random
import time

import symcert._kernels as kernels
from symcert.cyclotomic import _residue_table
from symcert.groebner import IdealSpec, groebner_basis
from symcert.lefschetz import slp_check
from symcert.polycore import PolyRingContext
from symcert.primecert import jacobian, minor_ideal
from symcert.symmetric import complete_homogeneous, power_sum


def _groebner():
    ctx = PolyRingContext.standard(4)
    I = IdealSpec(ctx, (power_sum(ctx, 2), power_sum(ctx, 9)))
    return len(groebner_basis(I.plus(minor_ideal(jacobian(I), 2, ctx).generators)).basis)


def _rank():
    rng = random.Random(7)
    rows = [[rng.randint(-30, 30) for _ in range(80)] for _ in range(80)]
    return kernels.bareiss_rank(rows)


def _vanishing():
    table = _residue_table(42)
    found = []
    for n in range(1, 13):
        w, _ = kernels.vanishing_search(42, n, table, len(table[0]), 10**8)
        found.append(w is not None)
    return found


def _slp():
    ctx = PolyRingContext.standard(3)
    return slp_check(IdealSpec(ctx, tuple(complete_homogeneous(ctx, a) for a in (3, 4, 5)))).verdict


WORKLOADS = {
    "groebner <p2,p9> + minors, n=4": _groebner,
    "bareiss rank, 80x80 integers": _rank,
    "vanishing sums, m=42, n<=12": _vanishing,
    "SLP check <h3,h4,h5>, n=3": _slp,
}


def _use(backend):
    for name in ("nf_reduce", "bareiss_rank", "vanishing_search"):
        setattr(kernels, name, getattr(backend, name))


def run(repeat: int = 3) -> list:
    saved = {n: getattr(kernels, n) for n in ("nf_reduce", "bareiss_rank", "vanishing_search")}
    rows = []
    try:
        for label, work in WORKLOADS.items():
            row = {"workload": label}
            answers = {}
            for backend in kernels.backends():
                _use(backend)
                best = float("inf")
                for _ in range(repeat):
                    start = time.perf_counter()
                    answers[backend.BACKEND] = work()
                    best = min(best, time.perf_counter() - start)
                row[backend.BACKEND] = best
            if len(set(map(repr, answers.values()))) != 1:
                raise AssertionError(f"backends disagree on {label}: {answers}")
            if "cython" in row:
                row["speedup"] = row["python"] / row["cython"]
            rows.append(row)
    finally:
        for n, f in saved.items():
            setattr(kernels, n, f)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if len(kernels.backends()) == 1:
        print("compiled extension not built; timing the pure backend only")
    print(f"{'workload':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for r in rows:
        cy = f"{r['cython']:9.4f}s" if "cython" in r else "-"
        sp = f"{r['speedup']:7.1f}x" if "speedup" in r else "-"
        print(f"{r['workload']:40s} {r['python']:9.4f}s {cy:>10s} {sp:>8s}")


if __name__ == "__main__":
    main()
