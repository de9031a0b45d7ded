"""Sparse truncated multivariate power series over the integers.

A series keeps the monomials of total degree at most a fixed bound; the
bound is the engine's single approximation knob.  Every operation here maps
monomials to monomials of equal or larger total degree, so inputs whose
coefficients are complete up to the bound produce outputs that are complete
up to the same bound.
"""

from __future__ import annotations

import math
from bisect import bisect_right


class TruncatedSeries:
    """Finitely supported map from exponent vectors to nonzero integers.

    ``terms`` maps tuples of length ``var_count`` to coefficients, so
    ``{(1, 2): 7}`` stands for 7*t1*t2**2.  Zero coefficients are never
    stored; monomials above ``degree_bound`` are dropped on construction.
    Instances are immutable: arithmetic returns new series.
    """

    __slots__ = ("var_count", "degree_bound", "_terms")

    def __init__(self, var_count: int, degree_bound: int, terms=None):
        if var_count < 1:
            raise ValueError("var_count must be positive")
        if degree_bound < 0:
            raise ValueError("degree_bound must be nonnegative")
        cleaned = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != var_count:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            if coeff and sum(exps) <= degree_bound:
                cleaned[exps] = coeff
        object.__setattr__(self, "var_count", var_count)
        object.__setattr__(self, "degree_bound", degree_bound)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def _raw(cls, var_count, degree_bound, terms):
        # Trusted construction for internal hot paths: terms must already be
        # pruned, in range and of the right shape.
        obj = object.__new__(cls)
        object.__setattr__(obj, "var_count", var_count)
        object.__setattr__(obj, "degree_bound", degree_bound)
        object.__setattr__(obj, "_terms", terms)
        return obj

    @classmethod
    def zero(cls, var_count, degree_bound):
        return cls._raw(var_count, degree_bound, {})

    @classmethod
    def constant(cls, value: int, var_count, degree_bound):
        terms = {(0,) * var_count: value} if value else {}
        return cls._raw(var_count, degree_bound, terms)

    @classmethod
    def one(cls, var_count, degree_bound):
        return cls.constant(1, var_count, degree_bound)

    @classmethod
    def monomial(cls, exps, coeff, var_count, degree_bound):
        return cls(var_count, degree_bound, {tuple(exps): coeff})

    def coefficient(self, exps) -> int:
        exps = tuple(exps)
        if len(exps) != self.var_count:
            raise ValueError(f"exponent vector {exps} has wrong length")
        if sum(exps) > self.degree_bound:
            raise ValueError(
                f"degree {sum(exps)} exceeds the truncation bound "
                f"{self.degree_bound}; the coefficient is not determined"
            )
        return self._terms.get(exps, 0)

    def items(self):
        """Stored terms sorted graded-lexicographically."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.var_count == other.var_count
            and self.degree_bound == other.degree_bound
            and self._terms == other._terms
        )

    def __repr__(self):
        return (
            f"TruncatedSeries(d={self.var_count}, N={self.degree_bound}, "
            f"{len(self._terms)} terms)"
        )

    def _check_compatible(self, other):
        if self.var_count != other.var_count:
            raise ValueError(
                f"variable counts differ: {self.var_count} != {other.var_count}"
            )
        if self.degree_bound != other.degree_bound:
            raise ValueError(
                f"degree bounds differ: {self.degree_bound} != {other.degree_bound}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.constant(other, self.var_count, self.degree_bound)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = out.get(exps, 0) + coeff
            if total:
                out[exps] = total
            elif exps in out:
                del out[exps]
        return TruncatedSeries._raw(self.var_count, self.degree_bound, out)

    __radd__ = __add__

    def __neg__(self):
        out = {e: -c for e, c in self._terms.items()}
        return TruncatedSeries._raw(self.var_count, self.degree_bound, out)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TruncatedSeries.zero(self.var_count, self.degree_bound)
            out = {e: c * other for e, c in self._terms.items()}
            return TruncatedSeries._raw(self.var_count, self.degree_bound, out)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        small, big = self._terms, other._terms
        if len(small) > len(big):
            small, big = big, small
        bound = self.degree_bound
        big_sorted = sorted((sum(e), e) for e in big)
        big_degrees = [deg for deg, _ in big_sorted]
        out: dict = {}
        for ea, ca in small.items():
            budget = bound - sum(ea)
            stop = bisect_right(big_degrees, budget)
            for pos in range(stop):
                eb = big_sorted[pos][1]
                key = tuple(x + y for x, y in zip(ea, eb))
                total = out.get(key, 0) + ca * big[eb]
                if total:
                    out[key] = total
                elif key in out:
                    del out[key]
        return TruncatedSeries._raw(self.var_count, self.degree_bound, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncatedSeries.one(self.var_count, self.degree_bound)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def dump(self) -> str:
        """One term per line, ``e1 e2 ... ed : coeff``, graded-lex order."""
        return "\n".join(
            f"{' '.join(str(e) for e in exps)} : {coeff}"
            for exps, coeff in self.items()
        )


def variable_sum(var_count: int, degree_bound: int) -> TruncatedSeries:
    """The linear form t_1 + ... + t_d."""
    terms = {}
    if degree_bound >= 1:
        for i in range(var_count):
            exps = [0] * var_count
            exps[i] = 1
            terms[tuple(exps)] = 1
    return TruncatedSeries._raw(var_count, degree_bound, terms)


def geometric_product(var_indices, power: int, var_count: int, degree_bound: int) -> TruncatedSeries:
    """Truncation of prod_{i in var_indices} (1 - t_i)**(-power).

    The coefficient of the monomial with exponents a is the product of
    binomial(a_i + power - 1, power - 1) over the chosen variables.
    """
    if power < 1:
        raise ValueError("power must be >= 1")
    indices = sorted(set(var_indices))
    if indices and (indices[0] < 0 or indices[-1] >= var_count):
        raise ValueError(f"variable indices {indices} out of range")
    terms: dict = {}

    def fill(pos, budget, exps, coeff):
        if pos == len(indices):
            terms[tuple(exps)] = coeff
            return
        i = indices[pos]
        for a in range(budget + 1):
            exps[i] = a
            fill(pos + 1, budget - a, exps, coeff * math.comb(a + power - 1, power - 1))
        exps[i] = 0

    fill(0, degree_bound, [0] * var_count, 1)
    return TruncatedSeries._raw(var_count, degree_bound, terms)


def mul_geometric(series: TruncatedSeries, var_indices) -> TruncatedSeries:
    """Multiply by prod_{i in var_indices} 1/(1 - t_i), truncated.

    Equivalent to ``series * geometric_product(var_indices, 1, ...)`` but
    computed as one running sum per variable, which keeps the dense final
    products of the derivation pipeline cheap.
    """
    indices = sorted(set(var_indices))
    if indices and (indices[0] < 0 or indices[-1] >= series.var_count):
        raise ValueError(f"variable indices {indices} out of range")
    out = series
    for axis in indices:
        out = _prefix_sums_along(out, axis)
    return out


def _prefix_sums_along(series: TruncatedSeries, axis: int) -> TruncatedSeries:
    bound = series.degree_bound
    lines: dict = {}
    for exps, coeff in series._terms.items():
        key = exps[:axis] + (0,) + exps[axis + 1 :]
        lines.setdefault(key, {})[exps[axis]] = coeff
    terms: dict = {}
    for key, column in lines.items():
        rest = sum(key)
        last_stored = max(column)
        running = 0
        for a in range(min(column), bound - rest + 1):
            running += column.get(a, 0)
            if running:
                terms[key[:axis] + (a,) + key[axis + 1 :]] = running
            elif a >= last_stored:
                break
    return TruncatedSeries._raw(series.var_count, bound, terms)


def substitute_monomials(series: TruncatedSeries, images) -> TruncatedSeries:
    """Apply the ring map sending each variable to a signed monomial.

    ``images`` lists one (coefficient, exponent vector) pair per input
    variable; the exponent vectors share a common length, which becomes the
    variable count of the result.  Images of total degree zero are rejected:
    they could map discarded high-degree terms below the bound and silently
    corrupt low-degree coefficients.
    """
    images = [(int(c), tuple(e)) for c, e in images]
    if len(images) != series.var_count:
        raise ValueError(
            f"expected {series.var_count} images, got {len(images)}"
        )
    target = len(images[0][1])
    for coeff, exps in images:
        if len(exps) != target:
            raise ValueError("image exponent vectors have mixed lengths")
        if coeff == 0:
            raise ValueError("image coefficient must be nonzero")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in image {exps}")
        if sum(exps) < 1:
            raise ValueError(
                "degree-0 image would invalidate the truncation bound"
            )
    bound = series.degree_bound
    out: dict = {}
    for exps, coeff in series._terms.items():
        new = [0] * target
        value = coeff
        for power, (ic, ie) in zip(exps, images):
            if not power:
                continue
            if ic != 1:
                value *= ic**power
            for j, e in enumerate(ie):
                if e:
                    new[j] += e * power
        if sum(new) <= bound:
            key = tuple(new)
            total = out.get(key, 0) + value
            if total:
                out[key] = total
            elif key in out:
                del out[key]
    return TruncatedSeries._raw(target, bound, out)


def evaluate_diagonal(series: TruncatedSeries) -> TruncatedSeries:
    """Substitute every variable by a single variable t."""
    out: dict = {}
    for exps, coeff in series._terms.items():
        key = (sum(exps),)
        total = out.get(key, 0) + coeff
        if total:
            out[key] = total
        elif key in out:
            del out[key]
    return TruncatedSeries._raw(1, series.degree_bound, out)
