"""Acceptance gate: every headline claim, at exact (zero) tolerance.

One test per criterion; each prints a pass/fail line per sub-check so a
verbose run doubles as a human-readable certificate.  All arithmetic is
rational, so every comparison is exact equality.
"""

from __future__ import annotations

import random
import time
from math import factorial

from diffhom.catalog import (
    build_catalog,
    nested_count_formula,
    top_order_indices,
    top_order_nested_indices,
    verify_finite_generation,
    verify_minimality,
    verify_quotient_basis,
)
from diffhom.harmonic import (
    Partition,
    closed_form_dimension,
    ik_presentation,
    perp_basis,
    quotient_dimension,
    verify_dcp_equality,
    verify_spanning,
)
from diffhom.jets import JetContext, diff_homog_basis
from diffhom.suite import _PROPERTY_CHECKS
from diffhom.tensors import invariant_tensor_basis, verify_wronskian_basis


def _line(tag: str, ok: bool, detail: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {tag}: {detail}")
    return ok


def test_criterion_01_schmidt_kolchin_dimensions():
    ok = True
    for n, d in ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)):
        start = time.perf_counter()
        dim = diff_homog_basis(JetContext(n, d - 1, d)).dimension
        elapsed = time.perf_counter() - start
        good = dim == (n + 1) ** d and elapsed < 60.0
        ok &= _line(
            f"criterion-1 (N={n},d={d})",
            good,
            f"dim={dim} expected={(n + 1) ** d} [{elapsed:.2f}s]",
        )
    assert ok


def test_criterion_02_stabilization():
    ok = True
    for n, d in ((1, 2), (1, 3)):
        at_full = diff_homog_basis(JetContext(n, d - 1, d)).dimension
        above = diff_homog_basis(JetContext(n, d, d)).dimension
        ok &= _line(
            f"criterion-2 (N={n},d={d})",
            at_full == above,
            f"dim(k={d - 1})={at_full} dim(k={d})={above}",
        )
    assert ok


def test_criterion_03_tensor_invariants():
    ok = True
    for d in (1, 2, 3, 4, 5):
        dim = len(invariant_tensor_basis(max(d - 1, 0), d))
        ok &= _line(
            f"criterion-3 dim (d={d})", dim == factorial(d), f"dim={dim} expected={factorial(d)}"
        )
    for d in (2, 3, 4):
        report = verify_wronskian_basis(d)
        ok &= _line(
            f"criterion-3 basis (d={d})",
            report.passed,
            f"rank={report.rank} invariant={report.all_invariant}",
        )
    assert ok


HARMONIC_CASES = ((2, 1, 2), (3, 1, 3), (4, 1, 6), (3, 2, 6), (5, 2, 30))


def test_criterion_04_harmonic_dimensions():
    ok = True
    for d, k, expected in HARMONIC_CASES:
        dim = len(perp_basis(ik_presentation(d, k), k))
        assert closed_form_dimension(d, k) == expected
        ok &= _line(
            f"criterion-4 (d={d},k={k})", dim == expected, f"dim={dim} expected={expected}"
        )
    assert ok


def test_criterion_05_oberst_equality():
    ok = True
    for d, k, _ in HARMONIC_CASES:
        kernel = len(perp_basis(ik_presentation(d, k), k))
        quotient = quotient_dimension(d, k)
        ok &= _line(
            f"criterion-5 (d={d},k={k})",
            kernel == quotient,
            f"kernel={kernel} quotient={quotient}",
        )
    assert ok


def test_criterion_06_dcp_identification():
    ok = True
    for d, k in ((3, 1), (4, 1), (4, 2)):
        report = verify_dcp_equality(d, k, d * (k + 1))
        ok &= _line(
            f"criterion-6 (d={d},k={k})",
            report.passed,
            f"cap={report.degree_cap} uncertified="
            f"{len(report.uncertified_forward) + len(report.uncertified_backward)}",
        )
    assert ok


def test_criterion_07_spanning():
    ok = True
    for shape in ((1, 1), (1, 1, 1), (2, 2), (2, 3)):
        report = verify_spanning(Partition.of(shape))
        ok &= _line(
            f"criterion-7 mu={report.partition}",
            report.passed,
            f"rank={report.rank} expected={report.expected_dimension} via {report.route}",
        )
    assert ok


def test_criterion_08_counting_lemmas():
    ok = True
    for d in (2, 3, 4, 5, 6):
        count = len(top_order_indices(d))
        ok &= _line(
            f"criterion-8 model d={d}", count == factorial(d) // 2, f"{count} == d!/2"
        )
    for n in (1, 2, 3):
        for d in (1, 2, 3, 4, 5):
            count = len(top_order_nested_indices(n, d))
            expected = nested_count_formula(n, d)
            ok &= _line(
                f"criterion-8 nested N={n},d={d}", count == expected, f"{count} == {expected}"
            )
    assert ok


def test_criterion_09_quotient_basis():
    ok = True
    for n, d in ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3)):
        report = verify_quotient_basis(n, d)
        gap = report.full_dimension - report.lower_dimension
        good = report.passed and gap == nested_count_formula(n, d)
        ok &= _line(
            f"criterion-9 (N={n},d={d})",
            good,
            f"{report.full_dimension}-{report.lower_dimension}={gap} family={report.family_size}",
        )
    assert ok


def test_criterion_10_finite_generation_and_minimality():
    ok = True
    for n, k, d_max in ((1, 1, 5), (1, 2, 4), (2, 1, 3)):
        report = verify_finite_generation(n, k, d_max)
        detail = "; ".join(
            f"d={e.degree}:{e.rank}/{e.invariant_dimension}" for e in report.entries
        )
        ok &= _line(f"criterion-10 generation (N={n},k={k})", report.passed, detail)
    for n in (1, 2):
        for k in (1, 2):
            report = verify_minimality(n, k)
            ok &= _line(
                f"criterion-10 minimality (N={n},k={k})",
                report.passed,
                f"degrees {[e.degree for e in report.entries]}",
            )
    for n in (1, 2):
        for k in (0, 1, 2):
            counts = build_catalog(n, k).counts()
            expected = [nested_count_formula(n, i) for i in range(1, k + 2)]
            ok &= _line(
                f"criterion-10 counts (N={n},k={k})", counts == expected, f"{counts}"
            )
    # the N=2, k=2 catalog in particular: 3 linear generators, 3 of degree 2,
    # and 9 of degree 3 (the (N+1)^(d-2) count, consistent with criteria 8-9)
    assert build_catalog(2, 2).counts() == [3, 3, 9]
    assert ok


def test_criterion_11_property_suites():
    start = time.perf_counter()
    total = 0
    ok = True
    for name, _formula, _d, fn, trials in _PROPERTY_CHECKS:
        rng = random.Random(f"acceptance/{name}")
        count, failures = fn(rng, None, trials)
        total += count
        ok &= _line(
            f"criterion-11 {name}", failures == 0, f"{count} instances, {failures} failures"
        )
    elapsed = time.perf_counter() - start
    ok &= _line("criterion-11 volume", total >= 200, f"{total} instances in {elapsed:.1f}s")
    ok &= _line("criterion-11 runtime", elapsed < 300.0, f"{elapsed:.1f}s < 300s")
    assert ok
