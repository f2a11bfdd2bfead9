from fractions import Fraction

import pytest

from eqhilb import (
    GroupParams,
    InsufficientSamplesError,
    Partition,
    PreconditionError,
    Quasipolynomial,
    check_rectangle_bijection,
    enumerate_balanced,
    fit_quasipolynomial,
    hj_expand,
    is_balanced,
    l_class,
    multipartition_count,
    normalize_group,
    partitions_of,
    rectangle_map,
    satisfies_star,
    verify_quasipolynomial,
)


def test_normalize_examples():
    assert normalize_group(GroupParams(2, 3, 4)) == GroupParams(1, 3, 2)
    assert normalize_group(GroupParams(1, 1, 5)) == GroupParams(1, 1, 5)
    assert normalize_group(GroupParams(3, -2, 9)) == GroupParams(1, -2, 3)


def test_normalize_preserves_l_class():
    for a, b, n, rmax in [(2, 3, 4, 2), (3, -2, 9, 1), (2, 3, 6, 2), (4, 1, 6, 2)]:
        g = GroupParams(a, b, n)
        h = normalize_group(g)
        for r in range(rmax + 1):
            assert l_class(g, r) == l_class(h, r), (g, h, r)


def test_rectangle_map_values():
    assert rectangle_map(GroupParams(1, -2, 3), Partition()) == Partition()
    assert rectangle_map(GroupParams(1, -2, 3), Partition((2, 1))) == Partition((2, 2, 1, 1))
    assert rectangle_map(GroupParams(2, -3, 5), Partition((1,))) == Partition((2, 2, 2))


def test_rectangle_map_sign_check():
    with pytest.raises(PreconditionError):
        rectangle_map(GroupParams(1, 2, 3), Partition((1,)))


def test_satisfies_star():
    assert satisfies_star(Partition((2, 2, 1, 1)), 1, -2)
    assert not satisfies_star(Partition((2, 1)), 1, -2)
    assert satisfies_star(Partition(), 1, -2)
    assert satisfies_star(Partition((4, 4, 4)), 2, -3)
    assert not satisfies_star(Partition((4, 4)), 2, -3)
    assert not satisfies_star(Partition((3, 3, 3)), 2, -3)


def test_star_characterizes_rectangle_image():
    g = GroupParams(1, -2, 3)
    image = {rectangle_map(g, lam) for m in range(13) for lam in partitions_of(m)}
    for m in range(25):
        for mu in partitions_of(m):
            assert satisfies_star(mu, 1, -2) == (mu in image), mu


def test_rectangle_map_injective():
    g = GroupParams(2, -3, 5)
    seen = {}
    for m in range(5):
        for lam in partitions_of(m):
            mu = rectangle_map(g, lam)
            assert mu not in seen
            seen[mu] = lam


def test_rectangle_map_balance_equivalence_both_directions():
    # balance transfers through the rectangle map for every partition,
    # not just the balanced ones
    for a, b, n in [(1, -2, 3), (2, -3, 5)]:
        g = GroupParams(a, b, n)
        flip = GroupParams(1, -1, n)
        for m in range(1, 9):
            for lam in partitions_of(m):
                assert is_balanced(g, lam)[0] == is_balanced(flip, rectangle_map(g, lam))[0]


def test_check_rectangle_bijection():
    for a, b, n in [(1, -2, 3), (1, -2, 5), (2, -3, 5)]:
        report = check_rectangle_bijection(GroupParams(a, b, n), 1)
        assert report["bijective"], report
        assert report["source_count"] == report["target_count"]
    with pytest.raises(PreconditionError):
        check_rectangle_bijection(GroupParams(1, -2, 4), 1)  # b shares a factor with n
    with pytest.raises(PreconditionError):
        check_rectangle_bijection(GroupParams(1, 2, 3), 1)


def test_multipartition_count_values():
    assert multipartition_count(4, 0) == 1
    assert multipartition_count(2, 2) == 5
    assert multipartition_count(3, 1) == 3
    # matches the balanced family for the sign-flipped coloring
    assert multipartition_count(3, 1) == len(enumerate_balanced(GroupParams(1, -1, 3), 1))


def test_multipartition_count_oracle():
    # brute force over tuples via nested partition counts
    from itertools import product

    for n in (1, 2, 3):
        for r in range(6):
            parts = [list(partitions_of(m)) for m in range(r + 1)]
            brute = sum(
                1
                for sizes in product(range(r + 1), repeat=n)
                if sum(sizes) == r
                for _ in product(*(parts[s] for s in sizes))
            )
            assert multipartition_count(n, r) == brute


def test_hj_expand_values():
    assert hj_expand(3, 2) == (2, 2)
    assert hj_expand(5, 2) == (3, 2)
    assert hj_expand(12, 5) == (3, 2, 3)
    assert hj_expand(5, 1) == (5,)


def test_hj_expand_reconstructs_fraction():
    for n, k in [(3, 2), (5, 2), (12, 5), (7, 3), (11, 4), (9, 7)]:
        terms = hj_expand(n, k)
        assert all(t >= 2 for t in terms)
        value = Fraction(terms[-1])
        for t in reversed(terms[:-1]):
            value = t - 1 / value
        assert value == Fraction(n, k)


def test_hj_length_periodic_in_n():
    import math

    for k in (2, 3, 5):
        for n in range(k + 1, 30):
            if math.gcd(n, k) != 1:
                continue
            assert len(hj_expand(n + k, k)) == len(hj_expand(n, k))


def test_hj_expand_preconditions():
    with pytest.raises(PreconditionError):
        hj_expand(4, 2)
    with pytest.raises(PreconditionError):
        hj_expand(3, 3)
    with pytest.raises(PreconditionError):
        hj_expand(3, 0)


def test_fit_constant():
    qp = fit_quasipolynomial([(n, 7) for n in range(1, 5)], 1, 0)
    assert qp.polys == ((Fraction(7),),)
    assert qp.all_validated()
    assert qp.evaluate(100) == 7


def test_fit_two_multipartitions_closed_form():
    samples = [(n, multipartition_count(n, 2)) for n in range(2, 9)]
    qp = fit_quasipolynomial(samples, 1, 2)
    assert qp.all_validated()
    # n(n+3)/2, checked at n=2 where the count is 5
    assert qp.polys[0] == (Fraction(0), Fraction(3, 2), Fraction(1, 2))
    assert qp.evaluate(2) == 5


def test_fit_period_two_linear():
    g = GroupParams(1, -2, 3)
    samples = [(n, len(enumerate_balanced(g.with_n(n), 1))) for n in range(3, 14, 2)]
    qp = fit_quasipolynomial(samples, 2, 1)
    assert qp.all_validated()
    assert qp.polys[0] is None and qp.class_validated[0] is None
    assert qp.polys[1] == (Fraction(1, 2), Fraction(1, 2))


def test_fit_flags_inconsistent_class():
    # a quadratic sequence cannot validate under a linear bound
    samples = [(n, n * n) for n in range(6)]
    qp = fit_quasipolynomial(samples, 1, 1)
    assert qp.class_validated == (False,)


def test_fit_insufficient_samples():
    with pytest.raises(InsufficientSamplesError):
        fit_quasipolynomial([(1, 1), (2, 2)], 1, 1)


def test_quasipolynomial_json_roundtrip():
    samples = [(n, multipartition_count(n, 2)) for n in range(2, 9)]
    qp = fit_quasipolynomial(samples, 1, 2)
    assert Quasipolynomial.from_json(qp.to_json()) == qp


def test_verify_quasipolynomial_equal_weights():
    for r in (1, 2, 3):
        report = verify_quasipolynomial(GroupParams(1, -1, 2), r, 2, 10)
        assert report["ok"], report
        assert report["observed_degree"] == r
        qp = Quasipolynomial.from_json(report["quasipolynomial"])
        for n in range(2, 11):
            assert qp.evaluate(n) == multipartition_count(n, r)


def test_verify_quasipolynomial_period_two():
    report = verify_quasipolynomial(GroupParams(1, -2, 3), 1, 3, 15)
    assert report["ok"], report
    assert report["period"] == 2
    assert report["observed_degree"] <= 1
    assert report["skipped_not_coprime"] == [4, 6, 8, 10, 12, 14]
    assert len(report["extrapolation"]) == 2


def test_verify_quasipolynomial_reduction_flag():
    report = verify_quasipolynomial(GroupParams(1, -2, 3), 1, 3, 9, use_reduction=True)
    # even orders are counted through their reduced parameters
    for n, count in report["reduced_counts"].items():
        g = normalize_group(GroupParams(1, -2, n))
        assert count == len(enumerate_balanced(g, 1))


def test_verify_quasipolynomial_rejects_same_signs():
    with pytest.raises(PreconditionError):
        verify_quasipolynomial(GroupParams(1, 2, 3), 1, 3, 9)
