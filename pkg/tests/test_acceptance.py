"""End-to-end acceptance checks.

One test per criterion, each printing a single PASS/FAIL line.  Every
comparison is exact integer equality; there are no tolerances anywhere.
The session-scoped oracle cache keeps each group's enumeration to one run
(the largest, Z_2 wr S_8, has 10,321,920 elements).
"""

import itertools
from contextlib import contextmanager
from math import factorial

from colorperm import cli, dist
from colorperm.closed import D_closed, check_eq2, d_explicit
from colorperm.dist import (
    eulerian_row,
    excA_dist,
    exc_dist,
    exc_row_from_table,
    initial_condition_diagnostic,
    initial_condition_formula,
    iter_joint_tables,
    joint_table,
)
from colorperm.oracle import compare
from colorperm.perm import ColoredLetter, apply_extended, format_window, parse_window
from colorperm.properties import (
    check_exc_complement,
    check_involution,
    check_symmetry_dist,
    is_log_concave,
    is_unimodal,
    symmetry_map,
)
from colorperm.stats import csum, exc, exc_A, summarize


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL", flush=True)
        raise
    print(f"ACCEPTANCE {label}: PASS", flush=True)


def letter(text):
    value, _, color = text.partition("^")
    return ColoredLetter(int(value), int(color) if color else 0)


def test_c01_worked_examples():
    with criterion("C01 worked examples"):
        # Statistics of sigma = (3, 1^1, 2^2) over three colors.
        p = parse_window("3,1^1,2^2", r=3)
        s = summarize(p)
        assert (s.exc, s.exc_A, s.csum) == (6, 1, 3)
        assert s.exc_set == {
            letter(x) for x in ("1^2", "2^2", "3^2", "1^1", "3^1", "1")
        }
        # Its full extended-alphabet action, letter by letter.
        inputs = ["1^2", "2^2", "3^2", "1^1", "2^1", "3^1", "1", "2", "3"]
        images = ["3^2", "1", "2^1", "3^1", "1^2", "2", "3", "1^1", "2^2"]
        for x, y in zip(inputs, images):
            assert apply_extended(p, letter(x)) == letter(y)

        # Statistics of sigma = (1^1, 3^2, 4, 2^1).
        q = parse_window("1^1,3^2,4,2^1", r=3)
        assert (exc(q)[1], csum(q)) == (7, 4)
        assert exc_A(q) == (frozenset({3}), 1)

        # One-color case: the classical Eulerian row for n = 4.
        assert eulerian_row(4) == [1, 11, 11, 1]

        # Joint, exc and exc_A distributions for two small groups.
        b2 = joint_table(2, 2)
        assert dict(b2.items()) == {
            (0, 0): 1, (0, 1): 1, (1, 0): 3, (1, 1): 1, (2, 0): 2, (2, 1): 0,
        }
        assert exc_dist(2, 2) == [1, 3, 3, 1]
        assert excA_dist(2, 2) == [6, 2]
        g32 = joint_table(3, 2)
        assert [g32.get(i, 0) for i in range(5)] == [1, 3, 5, 4, 2]
        assert [g32.get(i, 1) for i in range(5)] == [1, 1, 1, 0, 0]
        assert exc_dist(3, 2) == [1, 3, 5, 5, 3, 1]
        assert excA_dist(3, 2) == [15, 3]

        # Generating polynomials.
        assert D_closed(2, 2).render() == "6 + 2*t"
        assert D_closed(3, 2).render() == "15 + 3*t"

        # Initial-condition closed form at small points.
        assert initial_condition_formula(2, 2, 1) == 3
        assert initial_condition_formula(2, 1, 1) == 1
        assert initial_condition_formula(3, 1, 1) == 2

        # The complementing involution on a four-letter example.
        pi = parse_window("2^1,1^2,4^1,3", r=3)
        image = symmetry_map(pi)
        assert format_window(image) == "1^2,4^1,3^2,2^2"
        assert summarize(pi).exc == 4 and summarize(image).exc == 7


def test_c02_dp_matches_enumeration(oracle_cache):
    with criterion("C02 DP joint vs enumeration"):
        points = [(r, n) for r in (1, 2, 3) for n in range(1, 7)]
        points += [(4, n) for n in range(1, 5)]
        for r, n in points:
            report = oracle_cache.get(r, n)
            assert compare(joint_table(r, n), report.joint_by_csum) == [], (r, n)
            assert exc_dist(r, n) == report.exc_row, (r, n)
            assert excA_dist(r, n) == report.joint_by_csum.d_row(), (r, n)


def test_c03_triple_agreement():
    with criterion("C03 recurrence/closed/explicit agreement"):
        for r in range(1, 5):
            for n, table in zip(range(1, 13), iter_joint_tables(r, 12)):
                rec = excA_dist(r, n, method="recurrence")
                assert table.d_row() == rec, (r, n)
                poly = D_closed(r, n)
                assert [poly.coeff(k) for k in range(n)] == rec, (r, n)
                assert [d_explicit(r, n, k) for k in range(n)] == rec, (r, n)
        for r in range(1, 6):
            for n, table in zip(range(1, 41), iter_joint_tables(r, 40)):
                rec = excA_dist(r, n, method="recurrence")
                assert table.d_row() == rec, (r, n)
                poly = D_closed(r, n)
                assert [poly.coeff(k) for k in range(n)] == rec, (r, n)


def test_c04_derivative_recurrence():
    with criterion("C04 polynomial derivative recurrence"):
        for r in range(1, 5):
            report = check_eq2(r, 12)
            assert report.passed, report.detail


def test_c05_mass_conservation(oracle_cache):
    with criterion("C05 mass conservation"):
        for r in range(1, 6):
            for n in range(1, 13):
                order = r**n * factorial(n)
                assert joint_table(r, n).total == order, (r, n)
                assert sum(exc_dist(r, n)) == order, (r, n)
                assert sum(excA_dist(r, n)) == order, (r, n)
                assert D_closed(r, n)(1) == order, (r, n)
        for r in range(1, 5):
            for n in range(1, 11):
                order = r**n * factorial(n)
                assert sum(d_explicit(r, n, k) for k in range(n)) == order
        assert sum(excA_dist(5, 40)) == 5**40 * factorial(40)
        for (r, n), report in oracle_cache.cached().items():
            order = r**n * factorial(n)
            assert report.joint_by_csum.total == order, (r, n)
            assert report.joint_by_colored_count.total == order, (r, n)
            assert sum(report.exc_row) == order, (r, n)


def test_c06_symmetry(oracle_cache):
    with criterion("C06 palindromic exc distribution"):
        for r in range(1, 4):
            for n in range(1, 7):
                row = oracle_cache.get(r, n).exc_row
                assert check_symmetry_dist(row, r, n).passed, (r, n)
        for r in range(1, 6):
            for n, table in zip(range(1, 41), iter_joint_tables(r, 40)):
                row = exc_row_from_table(table)
                assert check_symmetry_dist(row, r, n).passed, (r, n)
        for r in range(1, 4):
            for n in range(1, 6):
                assert check_exc_complement(r, n).passed, (r, n)
                assert check_involution(r, n).passed, (r, n)


def test_c07_log_concavity(oracle_cache):
    with criterion("C07 log-concave exc_A distribution"):
        for n in range(1, 9):
            row = oracle_cache.get(2, n).joint_by_csum.d_row()
            assert is_log_concave(row, 2, n).passed, n
            assert is_unimodal(row, 2, n).passed, n
        for n in range(1, 61):
            row = excA_dist(2, n)
            assert is_log_concave(row, 2, n).passed, n
            assert is_unimodal(row, 2, n).passed, n
        # Beyond two colors this is checked as an empirical observation.
        for r in (3, 4):
            for n, table in zip(range(1, 41), iter_joint_tables(r, 40)):
                row = table.d_row()
                assert is_log_concave(row, r, n).passed, (r, n)
                assert is_unimodal(row, r, n).passed, (r, n)


def test_c08_initial_condition(oracle_cache):
    with criterion("C08 initial-condition closed form"):
        # Two colors: the formula gives the k = 0 column of both the DP
        # table and the enumeration, for every i.
        for n in range(1, 9):
            dp = joint_table(2, n)
            brute = oracle_cache.get(2, n).joint_by_csum
            for i in range(n + 2):
                value = initial_condition_formula(2, n, i)
                assert value == dp.get(i, 0), (n, i)
                assert value == brute.get(i, 0), (n, i)
        # Three colors: the diagnostic must come out definitive; the
        # formula matches the colored-count column and provably not the
        # color-sum column, while still summing to d(r, n, 0).
        for n in range(1, 6):
            diag = initial_condition_diagnostic(3, n, oracle_cache.get(3, n))
            assert diag.verdict == "colored-count", n
            assert diag.matches_colored_count and not diag.matches_csum, n
            assert diag.sum_matches_k0_total, n
        # The column sum identity holds generally.
        for r in range(1, 5):
            for n in range(1, 9):
                total = sum(
                    initial_condition_formula(r, n, i)
                    for i in range((r - 1) * n + 1)
                )
                assert total == excA_dist(r, n)[0], (r, n)


def test_c09_eulerian_specialization():
    with criterion("C09 one-color Eulerian specialization"):
        for n in range(1, 8):
            tally = [0] * n
            for sigma in itertools.permutations(range(1, n + 1)):
                tally[sum(1 for i, v in enumerate(sigma, 1) if v > i)] += 1
            assert eulerian_row(n) == tally, n
            assert excA_dist(1, n) == tally, n
            assert list(D_closed(1, n).coeffs) == tally, n
        for n in range(201):
            assert sum(eulerian_row(n)) == factorial(n), n


def test_c10_negative_control(oracle_cache, monkeypatch, capsys):
    with criterion("C10 injected fault is caught"):
        report = oracle_cache.get(2, 3)

        def skewed(m, k):
            return m - k, k  # off by one in the non-raising slot count

        monkeypatch.setattr(dist, "_insertion_weights", skewed)
        diffs = compare(joint_table(2, 3), report.joint_by_csum)
        assert diffs, "perturbed recursion was not detected"
        code = cli.main(
            ["check", "--r-max", "2", "--n-max", "3", "--suite", "recursion"]
        )
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL dp_joint_matches_enumeration" in out
        assert "cell (i=" in out

        monkeypatch.undo()
        code = cli.main(
            ["check", "--r-max", "2", "--n-max", "3", "--suite", "recursion"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "0 failed" in out

        # The advertised example sweep runs clean end to end.
        code = cli.main(["check", "--r-max", "3", "--n-max", "5", "--suite", "all"])
        out = capsys.readouterr().out
        assert code == 0
        assert "0 failed" in out
