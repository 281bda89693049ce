"""Acceptance suite: one test per criterion, each printing a verdict line.

Every tolerance is zero: all comparisons are exact rational identities.
The long-running expansions (tr omega^7 and the beta family members) run
when CEALG_LONG=1 is set, mirroring the CLI --long flag.
"""

import json
import os
import subprocess
import sys
from fractions import Fraction

from cealg import (
    Element,
    apply_d,
    brane_cocycle,
    check_d_squared,
    cohomology_dims,
    family_seven_cocycle,
    forms_fiber_check,
    hopf_sequence_check,
    lorentz_trace,
    m2brane,
    m5_cocycle,
    measured_c,
    poly_de_rham,
    quartic_fierz_check,
    resolved_minkowski,
    resolved_poincare,
    set_generators_to_zero,
    sphere_model,
    super_poincare,
    trace_power,
    transport,
    verify_brane_scan_entry,
    verify_m5_relation,
)
from cealg.catalog import _mink, _mu, resolution_homotopy_report
from cealg.reporting import run_task

LONG = os.environ.get("CEALG_LONG") == "1"


def verdict(n, ok, text):
    print(f"ACCEPTANCE {n:2d} {'PASS' if ok else 'FAIL'}: {text}")
    assert ok, f"criterion {n}: {text}"


def test_criterion_01_d_squared_everywhere():
    algebras = [
        ("CE(R^{2,1|2})", _mink(3).algebra),
        ("CE(R^{10,1|32})", _mink(11).algebra),
        ("m2brane", m2brane().algebra),
        ("resolved", resolved_minkowski()[0].algebra),
        ("iso", super_poincare().algebra),
        ("resolvedPoincare", resolved_poincare().algebra),
        ("s4", sphere_model(4).algebra),
    ] + [(f"deRham(R^{n})", poly_de_rham(n).algebra) for n in range(1, 9)]
    failures = [name for name, alg in algebras if not check_d_squared(alg).ok]
    verdict(1, not failures,
            f"d^2 = 0 exactly on {len(algebras)} catalog algebras"
            + (f" (failed: {failures})" if failures else ""))


def test_criterion_02_cocycle_closure():
    ok4 = apply_d(_mink(11).algebra, _mu(11, 2)).is_zero()
    ok3 = apply_d(_mink(3).algebra, _mu(3, 1)).is_zero()
    # a genuine closure failure as negative control: p = 1 in d = 11
    control = not apply_d(_mink(11).algebra, _mu(11, 1)).is_zero()
    # in d = 3 the p = 2 element is closed as well: Gamma^{ab} =
    # eps^{abc} Gamma_c turns the quartic obstruction into a commutator,
    # which the four-index symmetrization kills; its class is exact, so
    # the brane scan still rejects it (criterion 9)
    d3_p2_closed = apply_d(_mink(3).algebra, brane_cocycle(_mink(3), 2)).is_zero()
    verdict(2, ok4 and ok3 and control and d3_p2_closed,
            "d mu4 = 0 (d=11) and d mu3 = 0 (d=3), exactly; d mu3 != 0 in "
            "d=11 as the closure negative control; (d=3, p=2) is closed "
            "but exact")


def test_criterion_03_five_brane_relation():
    from cealg.reporting import compare_golden, load_golden

    rep = verify_m5_relation()
    c = Fraction(rep.pinned["c"]) if rep.ok else None
    fast = quartic_fierz_check(_mink(11).rep, "mu7-relation")
    agree = rep.ok and fast.ok and fast.pinned["c"] == rep.pinned["c"]
    golden = compare_golden(run_task("m5.relation"), load_golden("m5.relation"))
    verdict(3, agree and golden.ok and c == 15,
            f"d mu7 = c mu4^2 exactly with one rational c = {c}; symbolic "
            "and tensor-contraction paths agree; c matches the golden report")


def test_criterion_04_m5_cocycle_closed():
    chi, rep = m5_cocycle()
    verdict(4, rep.ok,
            f"d(h3 mu4 + (1/c) mu7) = 0 exactly in CE(m2brane) "
            f"({len(chi)} terms, c = {measured_c()})")


def test_criterion_05_resolution_equivalence():
    rep = resolution_homotopy_report()
    verdict(5, rep.ok,
            "p after iota = id exactly and id - iota p = d s + s d on all "
            "generators with s: g4 -> h3")


def test_criterion_06_equivariant_lift():
    from cealg.catalog import equivariant_lift

    phi, rep = equivariant_lift()  # construction validates d(g7 image) = g4^2
    cat, _, _, _ = resolved_minkowski()
    sig = cat.algebra.sig
    g4 = Element.generator(sig, "g4")
    mu4 = transport(_mu(11, 2), sig)
    identity_holds = (g4 - mu4) * (g4 + mu4) + mu4 * mu4 == g4 * g4
    verdict(6, rep.ok and identity_holds,
            "(g4 - mu4)(g4 + mu4) + mu4^2 = g4^2 verified as an exact "
            "residual-zero chain-map check on the lift")


def test_criterion_07_hopf_pushout():
    rep = hopf_sequence_check()
    fiber = set_generators_to_zero(sphere_model(4).algebra, ["g4"])
    verdict(7, rep.ok and fiber == sphere_model(7).algebra,
            "killing g4 in the 4-sphere model gives R[g7] with zero "
            "differential")


def test_criterion_08_s4_cohomology():
    dims = cohomology_dims(sphere_model(4).algebra, 12)
    want = [1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]
    verdict(8, dims == want, f"H(s4 model) dims 0..12 = {dims}")


def test_criterion_09_brane_scan_table():
    e1 = verify_brane_scan_entry(3, 2, 1)
    e2 = verify_brane_scan_entry(11, 32, 2)
    e3 = verify_brane_scan_entry(3, 2, 2)
    ok = (e1.closed and e1.nontrivial == "yes"
          and e2.closed and e2.nontrivial == "yes"
          and not (e3.closed and e3.nontrivial == "yes"))
    # (3,2,2) is rejected because its class is exact: the coboundary
    # witness is computed and verified, not assumed
    verdict(9, ok and e3.closed and e3.nontrivial == "no",
            "(3,2,1) and (11,32,2) closed+nontrivial by exact coboundary "
            "solve; (3,2,2) rejected: closed but exact")


def test_criterion_10_poincare_suite():
    iso_ok = check_d_squared(super_poincare().algebra).ok
    tr2 = trace_power("superPoincare", 2).is_zero()
    tr4 = trace_power("superPoincare", 4).is_zero()
    tr3, rep3 = lorentz_trace(3)
    fam00 = family_seven_cocycle(0, 0)[1].ok
    fam10 = family_seven_cocycle(1, 0)[1].ok
    base = iso_ok and tr2 and tr4 and rep3.ok and fam00 and fam10
    if LONG:
        tr7, rep7 = lorentz_trace(7)
        fam01 = family_seven_cocycle(0, 1)[1].ok
        fam11 = family_seven_cocycle(1, 1)[1].ok
        verdict(10, base and rep7.ok and fam01 and fam11,
                "iso d^2, trace identities, family (0,0),(1,0) and long "
                "members tr(w^7), (0,1),(1,1) all pass")
    else:
        verdict(10, base,
                "iso d^2, tr(w^2) = tr(w^4) = 0, d tr(w^3) = 0, family "
                "(0,0),(1,0) pass (long members gated on CEALG_LONG=1)")


def test_criterion_11_flat_forms_suite():
    rep = run_task("flatforms.suite")
    fiber = forms_fiber_check(poly_de_rham(8), n_samples=50)
    verdict(11, rep.ok and fiber.ok and fiber.pinned["samples"] >= 50,
            "three flat-form examples return their stated verdicts; fiber "
            f"sequence verified on {fiber.pinned['samples']} samples")


def test_criterion_12_determinism():
    # fresh rebuilds of the heavy elements must be bit-identical
    cat = _mink(11)
    mu4_again = brane_cocycle(cat, 2)
    same_mu4 = json.dumps(mu4_again.to_json()) == json.dumps(_mu(11, 2).to_json())
    r1 = run_task("s4.cohomology").pinned
    r2 = run_task("s4.cohomology").pinned
    scan1 = run_task("scan.3.2.1").pinned
    scan2 = run_task("scan.3.2.1").pinned
    # cross-process determinism on a full task
    outs = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-m", "cealg.cli", "--task", "mu3.closure",
             "--json", "--no-write"],
            capture_output=True, text=True, timeout=300)
        data = json.loads(proc.stdout)
        outs.append((data["verdict"], data["pinned"]))
    verdict(12, same_mu4 and r1 == r2 and scan1 == scan2
            and outs[0] == outs[1],
            "re-runs give bit-identical pinned scalars in and across "
            "processes (evaluation is sequential and order-independent)")
