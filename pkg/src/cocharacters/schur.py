"""Schur polynomials, multiplicity series and the Young-derivation operator.

A symmetric series f decomposes as sum_lam m_lam * S_lam; its multiplicity
series collects the coefficients as sum_lam m_lam * T^lam, a series supported
on weakly decreasing (dominant) exponent vectors.  This module converts
between the two worlds:

* ``extract_multiplicities`` reads the m_lam off a symmetric series by
  multiplying with the Vandermonde alternant and keeping the strictly
  decreasing exponents, shifted by the staircase.
* ``berele_verify`` checks a claimed multiplicity series against a symmetric
  series through the same alternant identity, without performing the
  extraction.
* ``young_derive`` is the operator Y with M(g) |-> M(g * prod 1/(1-t_i)),
  i.e. the multiplicity-series form of one application of the Young rule.

Two independent implementations of Y are provided: the signed-substitution
form (fast path) and the interlacing-sum recursion (oracle).
"""

from __future__ import annotations

from functools import cache
from itertools import islice, permutations

from .partitions import normalize, padded, weight
from .series import TruncatedSeries, mul_geometric


class MultiplicitySeries:
    """A truncated series supported on dominant exponent vectors.

    ``effective_bound`` records the total degree through which the stored
    coefficients are complete.  Extraction through the Vandermonde lowers it
    below the ambient degree bound; nothing is stored beyond it.
    """

    __slots__ = ("series", "effective_bound")

    def __init__(self, series: TruncatedSeries, effective_bound: int | None = None):
        if effective_bound is None:
            effective_bound = series.degree_bound
        if effective_bound > series.degree_bound:
            raise ValueError("effective bound cannot exceed the degree bound")
        for exps, _ in series._terms.items():
            if any(exps[i] < exps[i + 1] for i in range(len(exps) - 1)):
                raise ValueError(f"non-dominant exponent vector {exps}")
            if sum(exps) > effective_bound:
                raise ValueError(
                    f"term {exps} lies beyond the effective bound {effective_bound}"
                )
        object.__setattr__(self, "series", series)
        object.__setattr__(self, "effective_bound", effective_bound)

    def __setattr__(self, name, value):
        raise AttributeError("MultiplicitySeries is immutable")

    @classmethod
    def unit(cls, lam, var_count: int, degree_bound: int) -> "MultiplicitySeries":
        """The single term T^lam with coefficient 1."""
        lam = normalize(lam)
        if weight(lam) > degree_bound:
            raise ValueError("partition weight exceeds the degree bound")
        exps = padded(lam, var_count)
        return cls(TruncatedSeries(var_count, degree_bound, {exps: 1}))

    @property
    def var_count(self) -> int:
        return self.series.var_count

    def coefficient(self, lam) -> int:
        lam = normalize(lam)
        if weight(lam) > self.effective_bound:
            raise ValueError(
                f"weight {weight(lam)} exceeds the effective bound "
                f"{self.effective_bound}"
            )
        return self.series._terms.get(padded(lam, self.var_count), 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        """(partition, coefficient) pairs sorted graded-lexicographically."""
        return [(normalize(exps), coeff) for exps, coeff in self.series.items()]

    def table(self) -> dict[tuple[int, ...], int]:
        return dict(self.items())

    def __eq__(self, other):
        if not isinstance(other, MultiplicitySeries):
            return NotImplemented
        return (
            self.series == other.series
            and self.effective_bound == other.effective_bound
        )

    def __repr__(self):
        return (
            f"MultiplicitySeries(d={self.var_count}, "
            f"N={self.series.degree_bound}, eff={self.effective_bound}, "
            f"{len(self.series)} terms)"
        )

    def to_json_dict(self) -> dict:
        return {
            "d": self.var_count,
            "degree_bound": self.series.degree_bound,
            "effective_bound": self.effective_bound,
            "terms": [
                {"partition": list(lam), "coeff": coeff}
                for lam, coeff in self.items()
            ],
        }


def schur_polynomial(lam, var_count: int, degree_bound: int) -> TruncatedSeries:
    """The Schur polynomial of shape ``lam`` in ``var_count`` variables.

    Computed as the content generating function of semistandard tableaux,
    which keeps the arithmetic integral.  The polynomial is homogeneous of
    degree weight(lam), so the truncation is exact.
    """
    lam = normalize(lam)
    if weight(lam) > degree_bound:
        raise ValueError("partition weight exceeds the degree bound")
    if len(lam) > var_count:
        return TruncatedSeries.zero(var_count, degree_bound)
    terms: dict = {}
    for content in _semistandard_contents(lam, var_count):
        terms[content] = terms.get(content, 0) + 1
    return TruncatedSeries._raw(var_count, degree_bound, terms)


def _semistandard_contents(shape, d):
    """Yield the content vector of every semistandard filling of ``shape``.

    Entries 1..d increase weakly along rows and strictly down columns.
    """
    if not shape:
        yield (0,) * d
        return
    rows = len(shape)
    content = [0] * d

    def fill_row(r, prev_row):
        if r == rows:
            yield tuple(content)
            return
        width = shape[r]
        row = [0] * width

        def fill_cell(c):
            if c == width:
                yield from fill_row(r + 1, row)
                return
            lowest = row[c - 1] if c else 1
            if prev_row is not None:
                lowest = max(lowest, prev_row[c] + 1)
            for value in range(lowest, d + 1):
                row[c] = value
                content[value - 1] += 1
                yield from fill_cell(c + 1)
                content[value - 1] -= 1

        yield from fill_cell(0)

    yield from fill_row(0, None)


def schur_polynomial_bialternant(lam, var_count: int, degree_bound: int) -> TruncatedSeries:
    """Schur polynomial as a quotient of alternants (cross-check route).

    Expands the alternant with exponents lam + staircase and divides, factor
    by factor, by the Vandermonde product prod_{i<j} (t_i - t_j) using exact
    polynomial division.
    """
    lam = normalize(lam)
    if weight(lam) > degree_bound:
        raise ValueError("partition weight exceeds the degree bound")
    if len(lam) > var_count:
        return TruncatedSeries.zero(var_count, degree_bound)
    d = var_count
    exponents = tuple(padded(lam, d)[i] + (d - 1 - i) for i in range(d))
    poly: dict = {}
    for sign, perm in _signed_permutations(d):
        key = tuple(exponents[perm[i]] for i in range(d))
        poly[key] = poly.get(key, 0) + sign
    poly = {e: c for e, c in poly.items() if c}
    for i in range(d):
        for j in range(i + 1, d):
            poly = _divide_by_difference(poly, i, j)
    return TruncatedSeries(var_count, degree_bound, poly)


def _divide_by_difference(terms: dict, i: int, j: int) -> dict:
    """Exact quotient of a polynomial by (t_i - t_j); remainder must vanish."""
    if not terms:
        return {}
    by_degree: dict[int, dict] = {}
    for exps, coeff in terms.items():
        line = exps[:i] + (0,) + exps[i + 1 :]
        by_degree.setdefault(exps[i], {})[line] = coeff
    top = max(by_degree)
    quotient: dict = {}
    carry: dict = {}
    for m in range(top, 0, -1):
        level = dict(by_degree.get(m, {}))
        for exps, coeff in carry.items():
            shifted = exps[:j] + (exps[j] + 1,) + exps[j + 1 :]
            total = level.get(shifted, 0) + coeff
            if total:
                level[shifted] = total
            elif shifted in level:
                del level[shifted]
        for exps, coeff in level.items():
            quotient[exps[:i] + (m - 1,) + exps[i + 1 :]] = coeff
        carry = level
    remainder = dict(by_degree.get(0, {}))
    for exps, coeff in carry.items():
        shifted = exps[:j] + (exps[j] + 1,) + exps[j + 1 :]
        total = remainder.get(shifted, 0) + coeff
        if total:
            remainder[shifted] = total
        elif shifted in remainder:
            del remainder[shifted]
    assert not remainder, "polynomial is not divisible by the difference"
    return quotient


@cache
def _signed_permutations(d: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for perm in permutations(range(d)):
        inversions = sum(
            1
            for a in range(d)
            for b in range(a + 1, d)
            if perm[a] > perm[b]
        )
        out.append((-1 if inversions % 2 else 1, perm))
    return tuple(out)


def vandermonde_series(var_count: int, degree_bound: int) -> TruncatedSeries:
    """The alternant prod_{i<j} (t_i - t_j) expanded as a signed term map."""
    staircase = tuple(range(var_count - 1, -1, -1))
    terms = {}
    for sign, perm in _signed_permutations(var_count):
        terms[tuple(staircase[perm[i]] for i in range(var_count))] = sign
    return TruncatedSeries(var_count, degree_bound, terms)


def _staircase_degree(d: int) -> int:
    return d * (d - 1) // 2


def _spot_check_symmetric(f: TruncatedSeries, sample_size: int = 48) -> None:
    # Full symmetry verification would double the cost of every extraction;
    # a fixed sample of stored terms catches transposition asymmetries early
    # and berele_verify provides end-to-end assurance.
    terms = f._terms
    for exps, coeff in islice(f.items(), sample_size):
        for i in range(f.var_count - 1):
            if exps[i] == exps[i + 1]:
                continue
            swapped = list(exps)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if terms.get(tuple(swapped), 0) != coeff:
                raise ValueError(
                    f"input series is not symmetric: coefficient at {exps} "
                    f"differs from its transposition at {tuple(swapped)}"
                )


def extract_multiplicities(f: TruncatedSeries) -> MultiplicitySeries:
    """Multiplicity series of a symmetric truncated series.

    Multiplies by the Vandermonde alternant, keeps the strictly decreasing
    exponent vectors and shifts them down by the staircase.  The alternant
    raises total degrees by d(d-1)/2, so the result is complete only through
    degree_bound - d(d-1)/2; the reduced bound is recorded on the result.
    """
    d, bound = f.var_count, f.degree_bound
    shift = _staircase_degree(d)
    if shift > bound:
        raise ValueError(
            f"degree bound {bound} is below the alternant degree {shift}; "
            "nothing can be extracted"
        )
    _spot_check_symmetric(f)
    product = f * vandermonde_series(d, bound)
    effective = bound - shift
    terms: dict = {}
    for exps, coeff in product._terms.items():
        if all(exps[i] > exps[i + 1] for i in range(d - 1)):
            lam = tuple(exps[i] - (d - 1 - i) for i in range(d))
            terms[lam] = coeff
    inner = TruncatedSeries._raw(d, bound, terms)
    return MultiplicitySeries(inner, effective)


def berele_verify(f: TruncatedSeries, h: MultiplicitySeries) -> bool:
    """Check h = M(f) through the alternant identity.

    Compares f * prod_{i<j}(t_i - t_j) with the signed sum over variable
    permutations of the staircase monomial times the permuted h.  Both sides
    are complete for multiplicity weights up to
    min(f.degree_bound, h.effective_bound + d(d-1)/2) - d(d-1)/2, and the
    comparison is clipped there.
    """
    d = f.var_count
    if h.var_count != d:
        raise ValueError("variable counts differ")
    shift = _staircase_degree(d)
    weight_bound = min(f.degree_bound, h.effective_bound + shift) - shift
    if weight_bound < 0:
        raise ValueError(
            "truncation bounds leave no comparable degree range"
        )
    degree_cap = weight_bound + shift
    lhs = f * vandermonde_series(d, f.degree_bound)
    lhs_map = {e: c for e, c in lhs._terms.items() if sum(e) <= degree_cap}
    rhs_map: dict = {}
    staircase = tuple(range(d - 1, -1, -1))
    for sign, perm in _signed_permutations(d):
        for exps, coeff in h.series._terms.items():
            if sum(exps) > weight_bound:
                continue
            key = [0] * d
            for i in range(d):
                key[perm[i]] = exps[i] + staircase[i]
            key = tuple(key)
            total = rhs_map.get(key, 0) + sign * coeff
            if total:
                rhs_map[key] = total
            elif key in rhs_map:
                del rhs_map[key]
    return lhs_map == rhs_map


def pieri_product(mu, strip_size: int, max_parts: int) -> list[tuple[int, ...]]:
    """Shapes obtained from ``mu`` by adding a horizontal strip.

    Returns every partition lam of weight(mu) + strip_size with at most
    ``max_parts`` parts such that lam/mu is a horizontal strip; each appears
    once (the multiplicities of the rule are 0 or 1).  Output is in graded
    reverse-lexicographic order.
    """
    mu = normalize(mu)
    if strip_size < 0:
        raise ValueError("strip size must be >= 0")
    if len(mu) > max_parts:
        return []
    rows = padded(mu, max_parts)
    out: list[tuple[int, ...]] = []
    parts: list[int] = []

    def choose(i, extra):
        if i == max_parts:
            if extra == 0:
                out.append(normalize(parts))
            return
        low = rows[i]
        high = low + extra if i == 0 else min(rows[i - 1], low + extra)
        for value in range(high, low - 1, -1):
            parts.append(value)
            choose(i + 1, extra - (value - low))
            parts.pop()

    choose(0, strip_size)
    return out


def young_derive(h: MultiplicitySeries) -> MultiplicitySeries:
    """The operator Y: multiplicity series of g |-> that of g * prod 1/(1-t_i).

    Evaluated by the signed-substitution formula: for every subset of the
    positions 2..d, each selected position j sends the stored exponent e_j to
    e_{j-1} + 1 (the row above, plus the prefactor box), with sign (-1) per
    selected position; the signed branches are summed and the total is
    multiplied by the truncated geometric series of all variables.  On
    dominant support no branch decreases total degree, so completeness
    through the effective bound is preserved.
    """
    inner = h.series
    d = inner.var_count
    work_bound = h.effective_bound
    acc: dict = {}
    for mask in range(1 << (d - 1)):
        sign = -1 if bin(mask).count("1") % 2 else 1
        for exps, coeff in inner._terms.items():
            branch = list(exps)
            for pos in range(1, d):
                if mask >> (pos - 1) & 1:
                    branch[pos] = exps[pos - 1] + 1
            if sum(branch) <= work_bound:
                key = tuple(branch)
                total = acc.get(key, 0) + sign * coeff
                if total:
                    acc[key] = total
                elif key in acc:
                    del acc[key]
    summed = TruncatedSeries._raw(d, work_bound, acc)
    derived = mul_geometric(summed, range(d))
    for exps in derived._terms:
        assert all(
            exps[i] >= exps[i + 1] for i in range(d - 1)
        ), f"non-dominant term {exps} survived the derivation"
    result = TruncatedSeries._raw(d, inner.degree_bound, derived._terms)
    return MultiplicitySeries(result, work_bound)


def pieri_young_derive_oracle(table: dict, var_count: int, weight_bound: int) -> dict:
    """Independent Y on a finite coefficient table, by interlacing sums.

    The output coefficient at lam is the sum of input coefficients over all
    mu interlacing with lam (lam_1 >= mu_1 >= lam_2 >= ...).  Enumerates, for
    every input mu, the shapes lam of weight <= ``weight_bound`` obtained by
    adding a horizontal strip of any size within ``var_count`` rows.
    """
    out: dict = {}
    for mu, coeff in table.items():
        mu = normalize(mu)
        if len(mu) > var_count or weight(mu) > weight_bound:
            continue
        rows = padded(mu, var_count)
        budget = weight_bound - weight(mu)
        parts: list[int] = []

        def choose(i, extra_left):
            if i == var_count:
                lam = normalize(parts)
                out[lam] = out.get(lam, 0) + coeff
                return
            low = rows[i]
            high = low + extra_left if i == 0 else min(rows[i - 1], low + extra_left)
            for value in range(low, high + 1):
                parts.append(value)
                choose(i + 1, extra_left - (value - low))
                parts.pop()

        choose(0, budget)
    return {lam: c for lam, c in out.items() if c}
