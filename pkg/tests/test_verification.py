"""The self-verification suite, including a corrupted-oracle negative control."""

from digitscreen import count_leading
from digitscreen.verification import (
    run_all,
    verify_convergence,
    verify_counting,
    verify_extrema,
    verify_partition,
)


def test_quick_suite_passes():
    results = run_all(bases=(2, 10), limit=300, extrema_alpha=4, convergence_alpha=10)
    assert [r.name for r in results] == [
        "counting-oracle",
        "partition-of-unity",
        "extrema-identities",
        "interval-convergence",
    ]
    assert all(r.passed for r in results)
    assert all(r.checks > 0 for r in results)


def test_counting_negative_control():
    def corrupted(digit, n, base):
        count = count_leading(digit, n, base)
        return count + 1 if (digit, n) == (1, 37) else count

    result = verify_counting(bases=(10,), limit=100, count_fn=corrupted)
    assert not result.passed
    assert "n=37" in result.detail

    result = verify_partition(bases=(10,), limit=100, count_fn=corrupted)
    assert not result.passed


def test_extrema_across_default_bases():
    result = verify_extrema(bases=(2, 3, 8, 10, 16), alpha_max=4)
    assert result.passed


def test_convergence_across_default_bases():
    result = verify_convergence(bases=(2, 3, 8, 10, 16), alpha_max=12)
    assert result.passed


def test_base2_degenerate_suite():
    results = run_all(bases=(2,), limit=200, extrema_alpha=5, convergence_alpha=10)
    assert all(r.passed for r in results)
