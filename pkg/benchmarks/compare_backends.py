"""Time the compiled and pure-python engines on recorded workloads.

Each workload is one (case, simplex, combination) triple from the pinned
registry. Both engines must agree on status and step count; timings are
the minimum over --repeat runs. When a deep subdivision overflows the
compiled engine's two-limb range, certify transparently redoes the run
on the pure engine, so such rows time the full fallback path.
"""

import argparse
import time

from tetravol.case_suite_cli import case_registry
from tetravol.positive_dominance import certify
from tetravol.simplex_pullback import pullback

WORKLOADS = [
    ("single-edge", 0),
    ("incident-pair", 8),
    ("opposite-pair", 4),
    ("4-cycle", 0),
    ("4-cycle", 1),
    ("3-cycle", 0),
    ("full-K4", 0),
]


def build(case_name, task_index):
    spec = case_registry()[case_name]
    task = spec.tasks[task_index]
    p = pullback(task.func.polynomial(spec.beta),
                 spec.simplices[task.simplex])
    label = "%s %s on %s" % (case_name, task.func.label, task.simplex)
    return label, p


def time_backend(p, backend, budget, repeat):
    best = None
    cert = None
    for _ in range(repeat):
        start = time.perf_counter()
        cert = certify(p, budget=budget, backend=backend)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return cert, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="runs per engine, keep the fastest")
    ap.add_argument("--budget", type=int, default=10 ** 6)
    ap.add_argument("--skip-flagship", action="store_true",
                    help="drop the slowest full-K4 workload")
    args = ap.parse_args(argv)

    rows = []
    for case_name, task_index in WORKLOADS:
        if args.skip_flagship and case_name == "full-K4":
            continue
        label, p = build(case_name, task_index)
        nb_cert, nb_time = time_backend(p, "numba", args.budget,
                                        args.repeat)
        np_cert, np_time = time_backend(p, "numpy", args.budget,
                                        args.repeat)
        agree = (nb_cert.status == np_cert.status
                 and nb_cert.steps == np_cert.steps)
        rows.append((label, nb_cert.status, nb_cert.steps, nb_time,
                     np_time, agree))

    width = max(len(r[0]) for r in rows)
    print("%-*s  %-12s %6s %10s %10s %8s %s" % (
        width, "workload", "status", "steps", "numba[s]", "numpy[s]",
        "speedup", "agree"))
    for label, status, steps, nb, np_, agree in rows:
        print("%-*s  %-12s %6d %10.3f %10.3f %7.1fx %s" % (
            width, label, status, steps, nb, np_, np_ / nb,
            "yes" if agree else "NO"))
    if not all(r[5] for r in rows):
        print("engine disagreement detected")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
