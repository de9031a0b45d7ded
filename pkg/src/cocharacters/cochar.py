"""Hilbert and multiplicity series for upper triangular matrix identities.

U_k denotes the algebra of k x k upper triangular matrices.  The relatively
free algebra of its identities has an explicit Hilbert series, and applying
the Young-derivation operator to its expansion in powers of the geometric
series gives the multiplicity series of the cocharacter sequence of U_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .partitions import partitions_of, standard_tableaux_count, weight
from .series import (
    TruncatedSeries,
    evaluate_diagonal,
    geometric_product,
    variable_sum,
)
from .schur import MultiplicitySeries, schur_polynomial, young_derive

DEFAULT_BOUND_SMALL = 10  # k <= 3
DEFAULT_BOUND_LARGE = 8  # k == 4 and beyond: the series grow seven variables wide


def default_var_count(k: int) -> int:
    """Smallest variable count carrying every nonzero multiplicity of U_k."""
    return 2 * k - 1


def default_degree_bound(k: int) -> int:
    return DEFAULT_BOUND_SMALL if k <= 3 else DEFAULT_BOUND_LARGE


@dataclass(frozen=True)
class MultiplicityTable:
    """CLI-facing list of (partition, multiplicity) pairs for one U_k."""

    k: int
    d: int
    degree_bound: int
    entries: tuple[tuple[tuple[int, ...], int], ...]


def hilbert_series_two_forms(k: int, var_count: int, degree_bound: int):
    """Both closed forms of the Hilbert series of the U_k identities.

    Returns (binomial_sum, telescoped): the sum over j of C(k,j) * G^j *
    (t_1+...+t_d-1)^(j-1), and G times the geometric sum of powers of
    1 + (t_1+...+t_d-1)*G, where G = prod 1/(1-t_i).  The two agree as
    series; callers may compare them as a self-check.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    d, bound = var_count, degree_bound
    all_vars = range(d)
    linear = variable_sum(d, bound) - 1
    binomial_sum = TruncatedSeries.zero(d, bound)
    for j in range(1, k + 1):
        term = geometric_product(all_vars, j, d, bound) * linear ** (j - 1)
        binomial_sum = binomial_sum + term * math.comb(k, j)
    geometric = geometric_product(all_vars, 1, d, bound)
    base = linear * geometric + 1
    telescoped = TruncatedSeries.zero(d, bound)
    power = TruncatedSeries.one(d, bound)
    for _ in range(k):
        telescoped = telescoped + power
        power = power * base
    telescoped = telescoped * geometric
    return binomial_sum, telescoped


@lru_cache(maxsize=None)
def hilbert_series_Uk(k: int, var_count: int, degree_bound: int) -> TruncatedSeries:
    """Truncated Hilbert series of the relatively free algebra of U_k."""
    binomial_sum, telescoped = hilbert_series_two_forms(k, var_count, degree_bound)
    assert binomial_sum == telescoped, "the two closed forms disagree"
    return binomial_sum


def hook_sum(var_count: int, degree_bound: int) -> TruncatedSeries:
    """Sum of the hook Schur polynomials S_(m,1) for m >= 1, truncated.

    Equals 1 + (t_1+...+t_d-1) * prod 1/(1-t_i): the generating series of the
    one-commutator layer of the proper polynomials.
    """
    total = TruncatedSeries.zero(var_count, degree_bound)
    for m in range(1, degree_bound):
        total = total + schur_polynomial((m, 1), var_count, degree_bound)
    return total


def hilbert_series_proper_oracle(k: int, var_count: int, degree_bound: int) -> TruncatedSeries:
    """Hilbert series rebuilt from the proper-polynomial decomposition.

    Multiplies prod 1/(1-t_i) by the sum over r < k of the r-th power of the
    hook sum; an independent route that must agree with hilbert_series_Uk.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    d, bound = var_count, degree_bound
    hooks = hook_sum(d, bound)
    layers = TruncatedSeries.zero(d, bound)
    power = TruncatedSeries.one(d, bound)
    for _ in range(k):
        layers = layers + power
        power = power * hooks
    return layers * geometric_product(range(d), 1, d, bound)


def formanek_recurrence_check(k: int, var_count: int, degree_bound: int) -> bool:
    """Product-of-T-ideals recurrence for the Hilbert series.

    H(U_k) = H(U_1) + H(U_{k-1}) + (t_1+...+t_d-1) * H(U_1) * H(U_{k-1}),
    checked term by term at the truncation bound.
    """
    if k < 2:
        raise ValueError("the recurrence needs k >= 2")
    d, bound = var_count, degree_bound
    h_one = hilbert_series_Uk(1, d, bound)
    h_prev = hilbert_series_Uk(k - 1, d, bound)
    h_full = hilbert_series_Uk(k, d, bound)
    linear = variable_sum(d, bound) - 1
    return h_full == h_one + h_prev + linear * h_one * h_prev


@lru_cache(maxsize=None)
def multiplicity_series_Uk(
    k: int, var_count: int | None = None, degree_bound: int | None = None
) -> MultiplicitySeries:
    """Multiplicity series of the cocharacter sequence of U_k.

    Assembles sum over 1 <= j <= k, 0 <= q < j and lam |- q of
    (-1)^(j-q-1) * C(k,j) * C(j-1,q) * d_lam * Y^j(T^lam), where d_lam counts
    standard tableaux and Y is the Young-derivation operator.  The powers
    Y^j(T^lam) are shared across the triple sum by deriving each chain once.

    ``var_count`` defaults to 2k-1, the smallest width carrying the full
    support; smaller values restrict the result to partitions with at most
    that many parts.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    d = default_var_count(k) if var_count is None else var_count
    bound = default_degree_bound(k) if degree_bound is None else degree_bound
    if d < 1:
        raise ValueError("var_count must be >= 1")
    acc: dict = {}
    for q in range(k):
        for lam in partitions_of(q, min(q, d) if q else 1):
            degree = standard_tableaux_count(lam)
            chain = MultiplicitySeries.unit(lam, d, bound)
            for j in range(1, k + 1):
                chain = young_derive(chain)
                if j <= q:
                    continue
                factor = (
                    (-1) ** (j - q - 1)
                    * math.comb(k, j)
                    * math.comb(j - 1, q)
                    * degree
                )
                for exps, coeff in chain.series._terms.items():
                    total = acc.get(exps, 0) + factor * coeff
                    if total:
                        acc[exps] = total
                    elif exps in acc:
                        del acc[exps]
    for exps, coeff in acc.items():
        assert coeff > 0, f"negative multiplicity {coeff} at {exps}"
    inner = TruncatedSeries._raw(d, bound, acc)
    return MultiplicitySeries(inner, bound)


def to_v_variables(m: MultiplicitySeries) -> TruncatedSeries:
    """Reindex a dominant series by consecutive differences.

    T^lam maps to v_1^(lam_1-lam_2) ... v_{d-1}^(lam_{d-1}-lam_d) v_d^lam_d;
    the map is a bijection on dominant support.
    """
    d = m.var_count
    terms = {}
    for exps, coeff in m.series._terms.items():
        key = tuple(
            exps[i] - (exps[i + 1] if i + 1 < d else 0) for i in range(d)
        )
        terms[key] = coeff
    return TruncatedSeries(d, m.series.degree_bound, terms)


def from_v_variables(series: TruncatedSeries, effective_bound: int | None = None) -> MultiplicitySeries:
    """Inverse of :func:`to_v_variables`: lam_i is the tail sum of exponents."""
    d = series.var_count
    terms = {}
    for exps, coeff in series._terms.items():
        lam = tuple(sum(exps[i:]) for i in range(d))
        if sum(lam) > series.degree_bound:
            raise ValueError(
                f"reindexed term {lam} exceeds the degree bound"
            )
        terms[lam] = coeff
    inner = TruncatedSeries._raw(d, series.degree_bound, terms)
    return MultiplicitySeries(inner, effective_bound)


def colength_series(k: int, degree_bound: int) -> TruncatedSeries:
    """Generating function of the colength sequence of U_k.

    Sets every variable of the multiplicity series (at full width 2k-1) to a
    single variable t, summing the multiplicities degree by degree.
    """
    m = multiplicity_series_Uk(k, default_var_count(k), degree_bound)
    return evaluate_diagonal(m.series)


def multiplicity_table(
    k: int, var_count: int | None = None, degree_bound: int | None = None
) -> MultiplicityTable:
    """Multiplicities as an ordered table, graded reverse-lexicographic."""
    d = default_var_count(k) if var_count is None else var_count
    bound = default_degree_bound(k) if degree_bound is None else degree_bound
    m = multiplicity_series_Uk(k, d, bound)
    entries = sorted(
        m.items(), key=lambda kv: (weight(kv[0]), tuple(-p for p in kv[0]))
    )
    return MultiplicityTable(k=k, d=d, degree_bound=bound, entries=tuple(entries))
