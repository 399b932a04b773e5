#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Runs each workload on both backends, checks that the outputs agree, and
prints a timing table.  Workloads mirror the hot paths: full axiom scans,
Yang-Baxter checks, isomorphism/homomorphism searches, and the labeling
counter on the Kishino diagrams.  Inputs are prepared outside the timed
region so the numbers compare kernel work only.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import time

from biquandles import (build_diagram, kishino_codes, make_alexander,
                        make_scalar_module, make_switch_biquandle)
from biquandles.kernels import available_backends, get_backend
from biquandles.modules import counting_element_order


def _scalar_tables(n):
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    return [make_alexander(make_scalar_module(n, s, t))
            for s in units for t in units]


def make_workloads():
    scan_tables = [(t.n, t.flats()) for t in
                   (make_alexander(make_scalar_module(m, s, t))
                    for m, s, t in ((8, 3, 5), (12, 5, 7), (24, 5, 7)))]

    def axiom_scan(kern):
        return sum(len(kern.axiom_scan(n, *flats))
                   for n, flats in scan_tables)

    ybe_table = make_alexander(make_scalar_module(16, 3, 5))
    ybe_args = (ybe_table.n, ybe_table.flat("up"), ybe_table.flat("down"))

    def yang_baxter(kern):
        return kern.yang_baxter(*ybe_args)

    iso_inputs = []
    for n in (5, 7, 8):
        tables = [(t.n, t.flats()) for t in _scalar_tables(n)]
        iso_inputs += [(a, b) for a in tables for b in tables]

    def iso_search(kern):
        found = 0
        for (na, fa), (nb, fb) in iso_inputs:
            maps, _ = kern.search_maps(na, fa, nb, fb, find_all=False,
                                       limit=1)
            found += bool(maps)
        return found

    hom_tables = [(t.n, t.flats()) for t in
                  (make_alexander(make_scalar_module(8, s, t))
                   for s in (1, 3, 5, 7) for t in (3, 5, 7))]

    def hom_enumeration(kern):
        total = 0
        for na, fa in hom_tables:
            for nb, fb in hom_tables:
                maps, _ = kern.search_maps(
                    na, fa, nb, fb, require_bijection=False,
                    use_profiles=False, find_all=True)
                total += len(maps)
        return total

    target = make_switch_biquandle(
        2, 2, ((0, 1), (1, 1)), ((1, 1), (0, 1)), (1, 1),
        counting_element_order(2, 2)).table
    diagrams = [build_diagram(code) for code in kishino_codes()]
    count_args = [(d.semi_arcs, d.crossings, target.n, *target.flats())
                  for d in diagrams]

    def kishino_counts(kern):
        total = 0
        for args in count_args:
            for _ in range(50):
                count, _ = kern.diagram_count(*args)
                total += count
        return total

    return [
        ("axiom scan (orders 8/12/24)", axiom_scan),
        ("yang-baxter (order 16)", yang_baxter),
        ("iso search sweep (Z_5/Z_7/Z_8)", iso_search),
        ("hom enumeration (Z_8 pairs)", hom_enumeration),
        ("kishino counting x50", kishino_counts),
    ]


def run(repeat):
    names = available_backends()
    if names == ["pure"]:
        print("compiled backend unavailable; timing pure only")
    backends = [(name, get_backend(name)) for name in names]
    workloads = make_workloads()

    width = max(len(name) for name, _ in workloads)
    header = f"{'workload':<{width}}  " + "".join(
        f"{name:>10}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, fn in workloads:
        times = []
        results = []
        for _, kern in backends:
            best = min(_time_once(fn, kern) for _ in range(repeat))
            times.append(best)
            results.append(fn(kern))
        assert len(set(map(str, results))) == 1, \
            f"backend outputs differ on {label!r}: {results}"
        row = f"{label:<{width}}  " + "".join(
            f"{t * 1e3:>8.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


def _time_once(fn, kern):
    start = time.perf_counter()
    fn(kern)
    return time.perf_counter() - start


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per workload (best-of)")
    run(parser.parse_args().repeat)
