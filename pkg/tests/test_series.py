import math
import random

import pytest

from cocharacters.series import (
    TruncatedSeries,
    evaluate_diagonal,
    geometric_product,
    mul_geometric,
    substitute_monomials,
    variable_sum,
)


def brute_multiply(a, b):
    """Reference convolution: plain double loop, then truncate."""
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def random_series(rng, var_count, bound, max_terms=8, coeff_range=5):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exps = [0] * var_count
        budget = rng.randrange(bound + 1)
        for _ in range(budget):
            exps[rng.randrange(var_count)] += 1
        coeff = rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
        terms[tuple(exps)] = coeff
    return TruncatedSeries(var_count, bound, terms)


def test_add_negate_scale():
    one_plus_t = TruncatedSeries(1, 4, {(0,): 1, (1,): 1})
    assert one_plus_t + (-1) == TruncatedSeries(1, 4, {(1,): 1})
    assert one_plus_t + (-one_plus_t) == TruncatedSeries.zero(1, 4)
    s = TruncatedSeries(2, 4, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    assert s * 3 == TruncatedSeries(2, 4, {(0, 0): 3, (1, 0): 3, (0, 1): 3})


def test_mul_telescopes_geometric():
    geo = geometric_product([0], 1, 1, 3)
    one_minus_t = TruncatedSeries(1, 3, {(0,): 1, (1,): -1})
    assert geo * one_minus_t == TruncatedSeries.one(1, 3)


def test_geometric_squared_coefficients():
    geo = geometric_product([0], 1, 1, 4)
    squared = geo * geo
    for a in range(5):
        assert squared.coefficient((a,)) == a + 1
    reference = brute_multiply(dict(geo.items()), dict(geo.items()))
    assert dict(squared.items()) == {
        e: c for e, c in reference.items() if sum(e) <= 4
    }


def test_shifted_double_geometric_coefficients():
    # coefficient of v1^n1 v2^n2 in v1^a1 v2^a2 / ((1-v1)^3 (1-v2)^3)
    bound = 8
    for a1, a2 in ((0, 0), (1, 0), (1, 2), (2, 2)):
        series = TruncatedSeries.monomial((a1, a2), 1, 2, bound) * geometric_product(
            (0, 1), 3, 2, bound
        )
        for n1 in range(bound + 1):
            for n2 in range(bound + 1 - n1):
                want = 0
                if n1 >= a1 and n2 >= a2:
                    want = math.comb(n1 - a1 + 2, 2) * math.comb(n2 - a2 + 2, 2)
                assert series.coefficient((n1, n2)) == want


def test_geometric_product_examples():
    assert geometric_product([0], 1, 1, 3) == TruncatedSeries(
        1, 3, {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    )
    assert geometric_product((0, 1), 1, 2, 6).coefficient((2, 3)) == 1
    cube = geometric_product([0], 3, 1, 6)
    assert cube.coefficient((4,)) == 15
    geo = geometric_product([0], 1, 1, 6)
    assert cube == geo * geo * geo


def test_geometric_product_power_equals_repeated_mul():
    for d in (1, 2, 3):
        for power in (1, 2, 3):
            direct = geometric_product(range(d), power, d, 6)
            single = geometric_product(range(d), 1, d, 6)
            assert direct == single**power, (d, power)


def test_mul_geometric_matches_generic_mul():
    rng = random.Random(7)
    for _ in range(40):
        d = rng.randrange(1, 4)
        bound = rng.randrange(2, 8)
        s = random_series(rng, d, bound)
        indices = [i for i in range(d) if rng.random() < 0.7] or [0]
        assert mul_geometric(s, indices) == s * geometric_product(
            indices, 1, d, bound
        )


def test_mul_properties_on_random_series():
    rng = random.Random(11)
    for _ in range(30):
        d = rng.randrange(1, 5)
        bound = rng.randrange(1, 8)
        a = random_series(rng, d, bound)
        b = random_series(rng, d, bound)
        c = random_series(rng, d, bound)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_no_zero_coefficients_stored():
    rng = random.Random(3)
    for _ in range(20):
        a = random_series(rng, 2, 6)
        b = random_series(rng, 2, 6)
        for result in (a + b, a - b, a * b, a * 0, mul_geometric(a, [0, 1])):
            assert all(coeff for _, coeff in result.items())


def test_mismatched_operands_rejected():
    a = TruncatedSeries.one(2, 4)
    with pytest.raises(ValueError):
        a + TruncatedSeries.one(3, 4)
    with pytest.raises(ValueError):
        a * TruncatedSeries.one(2, 5)


def test_substitute_monomials_examples():
    s = TruncatedSeries(2, 6, {(2, 0): 1})
    images = [(1, (1, 1)), (1, (0, 1))]  # t1 -> t1 t2, t2 -> t2
    assert substitute_monomials(s, images) == TruncatedSeries(2, 6, {(2, 2): 1})

    s = TruncatedSeries(2, 6, {(1, 0): 1, (0, 1): 1})
    images = [(1, (1, 1, 0)), (1, (0, 0, 1))]  # t1 -> t1 t2, t2 -> t3
    assert substitute_monomials(s, images) == TruncatedSeries(
        3, 6, {(1, 1, 0): 1, (0, 0, 1): 1}
    )


def test_substitute_monomials_term_by_term():
    s = TruncatedSeries(1, 4, {(n,): 1 for n in range(5)})
    image = [(1, (1, 1))]
    got = substitute_monomials(s, image)
    want = {(n, n): 1 for n in range(3)}  # degree 2n <= 4
    assert got == TruncatedSeries(2, 4, want)


def test_substitute_monomials_rejects_degree_zero_image():
    s = TruncatedSeries.one(2, 4)
    with pytest.raises(ValueError):
        substitute_monomials(s, [(1, (1, 0)), (1, (0, 0))])
    with pytest.raises(ValueError):
        substitute_monomials(s, [(0, (1, 0)), (1, (0, 1))])


def test_substitute_monomials_is_ring_map():
    rng = random.Random(5)
    images = [(1, (1, 1, 0)), (-1, (0, 1, 1)), (1, (0, 0, 2))]
    for _ in range(20):
        a = random_series(rng, 3, 6)
        b = random_series(rng, 3, 6)
        sub = lambda s: substitute_monomials(s, images)
        assert sub(a + b) == sub(a) + sub(b)
        assert sub(a * b) == sub(a) * sub(b)


def test_evaluate_diagonal():
    assert evaluate_diagonal(
        TruncatedSeries(2, 4, {(1, 1): 1})
    ) == TruncatedSeries(1, 4, {(2,): 1})
    assert evaluate_diagonal(
        TruncatedSeries(2, 4, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    ) == TruncatedSeries(1, 4, {(0,): 1, (1,): 2})


def test_variable_sum():
    assert variable_sum(3, 5) == TruncatedSeries(
        3, 5, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    )


def test_pow():
    linear = variable_sum(2, 4) - 1
    assert linear**0 == TruncatedSeries.one(2, 4)
    assert linear**3 == linear * linear * linear


def test_coefficient_guards():
    s = TruncatedSeries.one(2, 3)
    assert s.coefficient((0, 0)) == 1
    assert s.coefficient((1, 2)) == 0
    with pytest.raises(ValueError):
        s.coefficient((2, 2))
    with pytest.raises(ValueError):
        s.coefficient((1,))


def test_dump_golden():
    geo = geometric_product((0, 1), 1, 2, 2)
    assert geo.dump() == "\n".join(
        [
            "0 0 : 1",
            "0 1 : 1",
            "1 0 : 1",
            "0 2 : 1",
            "1 1 : 1",
            "2 0 : 1",
        ]
    )


def test_construction_validates():
    with pytest.raises(ValueError):
        TruncatedSeries(2, 4, {(1,): 1})
    with pytest.raises(ValueError):
        TruncatedSeries(2, 4, {(-1, 0): 1})
    with pytest.raises(TypeError):
        TruncatedSeries(1, 4, {(1,): 1.5})
    # beyond-bound terms are dropped, zero coefficients pruned
    s = TruncatedSeries(1, 2, {(3,): 5, (1,): 0, (2,): 7})
    assert dict(s.items()) == {(2,): 7}
