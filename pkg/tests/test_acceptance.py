"""Acceptance gate: one pass/fail line per criterion.

Each test prints "criterion N: PASS/FAIL - summary" and asserts the
result, so the battery is readable both as pytest output and as a
transcript.  All comparisons are exact unless a check is stated to use
the float fallback (couplings with radicals outside the exact ring).
"""

import subprocess
import sys
import time

from fockduality import cli, oracle, shell, young
from fockduality.params import ModelParams, ORTHOGONAL, SYMPLECTIC
from fockduality.sparse import SparseOperator, CREATE, ANNIHILATE

MODE_BUDGET = 12


def report(num, ok, summary):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {summary}")
    assert ok, summary


def grid(include_odd=True):
    for d in range(1, MODE_BUDGET + 1):
        if not include_odd and d % 2:
            continue
        for k in range(1, MODE_BUDGET + 1):
            if d * k <= MODE_BUDGET:
                yield d, k


def _field(dim, kind, bit):
    return SparseOperator.from_terms(dim, [(1, ((kind, bit),))])


def test_criterion_1_car_relations():
    """Anticommutators on every mode pair, all dk <= 12, under 10 s."""
    start = time.monotonic()
    ok = True
    checked = set()
    for d, k in grid():
        params = ModelParams(d, k, ORTHOGONAL)
        n = params.n_modes
        if n in checked:
            continue
        checked.add(n)
        dim = params.dim
        ident = SparseOperator.identity(dim)
        zero = SparseOperator.zero(dim)
        ann = [_field(dim, ANNIHILATE, b) for b in range(n)]
        cre = [_field(dim, CREATE, b) for b in range(n)]
        for i in range(n):
            for j in range(i, n):
                ok &= ann[i].anticommutator(ann[j]) == zero
                ok &= cre[i].anticommutator(cre[j]) == zero
        for i in range(n):
            for j in range(n):
                expect = ident if i == j else zero
                ok &= ann[i].anticommutator(cre[j]) == expect
    elapsed = time.monotonic() - start
    ok &= elapsed < 10
    report(1, ok, f"canonical anticommutation relations, dk <= 12 "
                  f"({elapsed:.1f} s)")


def test_criterion_2_commutant():
    """Both algebra actions commute elementwise, both families."""
    ok = True
    for d, k in grid():
        for fam in (ORTHOGONAL, SYMPLECTIC):
            if fam == SYMPLECTIC and d % 2:
                continue
            ok &= oracle.check_commutant(ModelParams(d, k, fam))
    report(2, ok, "commutant relations on the full dk <= 12 grid")


def test_criterion_3_sp_sp():
    """Symplectic-symplectic decomposition on the even-d grid."""
    ok = True
    for d, k in grid(include_odd=False):
        rep = oracle.verify_duality(young.SP_SP, d, k, with_commutant=False)
        ok &= rep.all_pass
        ok &= rep.dimension_sum == 2 ** (d * k)
    ref = oracle.verify_duality(young.SP_SP, 4, 1, with_commutant=False)
    dims = sorted((p.dim_d, p.dim_k) for p in ref.pairs)
    ok &= dims == [(1, 3), (4, 2), (5, 1)] and ref.dimension_sum == 16
    report(3, ok, "sp-sp decomposition matches the oracle and tiles 2**(dk); "
                  "d=4, k=1 gives dims (1,3),(4,2),(5,1)")


def test_criterion_4_o_o():
    """Orthogonal-orthogonal decomposition with the reducibility remarks."""
    ok = True
    for d, k in grid():
        rep = oracle.verify_duality(young.O_O, d, k, with_commutant=False)
        ok &= rep.all_pass
        for pair in rep.pairs:
            reducible = (len(pair.d_weights) > 1, len(pair.k_weights) > 1)
            ok &= sum(reducible) == 1
            if d % 2:
                for weight in pair.k_weights:
                    ok &= all(2 * w % 2 == 1 for w in weight)
    report(4, ok, "o-o decomposition; exactly one reducible side per pair; "
                  "half-integral k-side weights for odd d")


def test_criterion_5_group_and_pin():
    """O(d)-o(2k) and o(d)-Pin(2k) label sets and generator semantics."""
    ok = True
    for duality in (young.GROUP_O_O, young.O_PIN):
        for d, k in grid():
            rep = oracle.verify_duality(duality, d, k, with_commutant=False)
            ok &= rep.all_pass
            ok &= "groupModuleAction" in rep.checks
    report(5, ok, "O-o and o-Pin label sets match the oracle; reflection and "
                  "sigma eigenvalue/swap semantics hold on every pair")


def test_criterion_6_pin_operator_suite():
    """sigma and rho identities, coset signs, sign formula, vacuum images."""
    ok = True
    for d in range(1, 6):
        for k in (1, 2):
            checks = cli.pin_checks(d, k)
            ok &= all(checks.values())
    report(6, ok, "sigma squares to (-1)**d, rho(-1) = (-1)**d, coset "
                  "(anti)commutation, diagram sign formula and vacuum images "
                  "for d <= 5, k <= 2")


def test_criterion_7_particle_hole_suite():
    """Conjugation relations at l = 1 (64-dim) and l = 2 (1024-dim)."""
    start = time.monotonic()
    ok = True
    for l in (1, 2):
        checks = shell.conjugation_checks(l, 2)
        ok &= all(checks.values())
    for two_j in (1, 3, 5):
        ok &= all(shell.bare_conjugation_checks(two_j).values())
    elapsed = time.monotonic() - start
    ok &= elapsed < 60
    report(7, ok, f"particle-hole conjugations at l = 1, 2: C3 = C2, "
                  f"scalar against L and S, per-j relations and vacuum "
                  f"signs ({elapsed:.1f} s)")


def test_criterion_8_nucleon_shell():
    """Bell's composed conjugation on the 4096-dim l = 1, k = 4 shell."""
    start = time.monotonic()
    checks = shell.conjugation_checks(1, 4)
    ok = checks["bellScalar"] and checks["bellSquare"] and all(checks.values())
    elapsed = time.monotonic() - start
    ok &= elapsed < 120
    report(8, ok, f"k = 4 conjugation commutes with total spin and isospin "
                  f"({elapsed:.1f} s)")


def test_criterion_9_determinism():
    """The full suite emits byte-identical reports across two runs."""
    runs = []
    for _ in range(2):
        out = subprocess.run(
            [sys.executable, "-m", "fockduality.cli", "suite",
             "--format", "json"],
            capture_output=True, check=True)
        runs.append(out.stdout)
    ok = runs[0] == runs[1] and len(runs[0]) > 0
    report(9, ok, "suite output is byte-identical across consecutive runs")
