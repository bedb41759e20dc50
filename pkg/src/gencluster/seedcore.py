"""Seeds and their mutation.

A seed is (B, d, z, x, y): a skew-symmetrizable exchange matrix, a vector
of exchange degrees, per-index tuples of coefficient combinations, cluster
variables stored as exact rational functions in the *initial* variables,
and coefficient variables living in the semifield.

Mutation in direction k (directions are 1-based throughout the public API)
flips the matrix with the degree-weighted rule, reverses the k-th
coefficient tuple, and exchanges x_k and y_k through degree-d_k exchange
sums.  The sign parameter only reorients the formulas: mutation with
epsilon = -1 applies them to the reversed coefficient tuple, which is what
makes the result sign-independent and the map involutive for arbitrary
(non-palindromic) tuples.  Zero coefficient entries are simply skipped in
both the numerator sum and the tropical denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

from .exactalg import (
    Algebra,
    LaurentPolynomial,
    RationalFunction,
    embed_combination,
    embed_semifield,
)
from .semifield import (
    ContextError,
    DomainError,
    NonNegCombination,
    SemifieldContext,
    SemifieldElement,
    oplus,
    project_tilde,
)

ContextMismatch = ContextError


class NotSkewSymmetrizable(ValueError):
    """No positive integer diagonal symmetrizes the matrix."""


class BadTupleLength(ValueError):
    """A coefficient tuple does not have length d_i + 1."""


class BadBoundaryCoefficient(ValueError):
    """Strict mode requires z_{i,0} = z_{i,d_i} = 1."""


class EmptyExchangeSum(ArithmeticError):
    """Every coefficient in an exchange tuple is zero."""


def _positive_sign(v: int) -> int:
    return v if v > 0 else 0


def _find_symmetrizer(rows: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise NotSkewSymmetrizable(f"nonzero diagonal entry at {i + 1}")
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotSkewSymmetrizable(f"zero pattern not symmetric at ({i + 1},{j + 1})")
            if rows[i][j] * rows[j][i] > 0:
                raise NotSkewSymmetrizable(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) share a sign")
    ratio: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if ratio[start] is not None:
            continue
        ratio[start] = Fraction(1)
        component = [start]
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if rows[i][j] == 0:
                    continue
                expected = ratio[i] * Fraction(abs(rows[i][j]), abs(rows[j][i]))
                if ratio[j] is None:
                    ratio[j] = expected
                    component.append(j)
                    queue.append(j)
                elif ratio[j] != expected:
                    raise NotSkewSymmetrizable("inconsistent symmetrizer ratios along a cycle")
        scale = lcm(*(ratio[i].denominator for i in component))
        values = [int(ratio[i] * scale) for i in component]
        shrink = reduce(gcd, values)
        for i, v in zip(component, values):
            ratio[i] = Fraction(v, shrink)
    r = tuple(int(q) for q in ratio)
    for i in range(n):
        for j in range(n):
            if r[i] * rows[i][j] != -r[j] * rows[j][i]:
                raise NotSkewSymmetrizable("symmetrizer check failed")
    return r


@dataclass(frozen=True, slots=True)
class ExchangeMatrix:
    """Skew-symmetrizable integer matrix with its symmetrizer."""

    rows: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...] = field(compare=False, default=())

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("exchange matrix must be square")
        if not self.symmetrizer:
            object.__setattr__(self, "symmetrizer", _find_symmetrizer(self.rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExchangeMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def permuted(self, perm: Sequence[int]) -> "ExchangeMatrix":
        return ExchangeMatrix.from_rows(
            [[self.rows[perm[i]][perm[j]] for j in range(self.n)] for i in range(self.n)]
        )

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows) + "]"


ZEntry = Union[NonNegCombination, int, None, Sequence]


def _coerce_combination(context: SemifieldContext, value: ZEntry) -> NonNegCombination:
    if isinstance(value, NonNegCombination):
        if value.context != context:
            raise ContextError("coefficient combination from a different context")
        return value
    if value is None:
        return NonNegCombination.zero(context)
    if isinstance(value, int):
        return NonNegCombination.integer(context, value)
    if isinstance(value, (list, tuple)):
        terms = [(context.monomial(exps), int(mult)) for exps, mult in value]
        return NonNegCombination.from_terms(context, terms)
    raise TypeError(f"cannot interpret {value!r} as a coefficient")


@dataclass(frozen=True, slots=True)
class Seed:
    """Labeled seed; immutable, with cluster variables in initial-variable form."""

    context: SemifieldContext
    B: ExchangeMatrix
    d: tuple[int, ...]
    z: tuple[tuple[NonNegCombination, ...], ...]
    x: tuple[RationalFunction, ...]
    y: tuple[SemifieldElement, ...]
    strict: bool = field(default=True, compare=False)

    __hash__ = None  # use orbit.canonical_key for hashing

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.n, self.context.rank)

    def permuted(self, perm: Sequence[int]) -> "Seed":
        """Simultaneous relabeling: position i takes the data of perm[i]."""
        return Seed(
            self.context,
            self.B.permuted(perm),
            tuple(self.d[p] for p in perm),
            tuple(self.z[p] for p in perm),
            tuple(self.x[p] for p in perm),
            tuple(self.y[p] for p in perm),
            strict=self.strict,
        )


def initial_seed(
    B: ExchangeMatrix | Iterable[Iterable[int]],
    d: Iterable[int],
    z: Iterable[Iterable[ZEntry]] | None = None,
    context: SemifieldContext | None = None,
    y: Iterable[SemifieldElement | Iterable[int]] | None = None,
    strict: bool = True,
) -> Seed:
    """Build and validate a seed whose cluster variables are the variables.

    z entries may be combinations, nonnegative integers (meaning m copies of
    the identity; 0 is the zero), or None (also zero).  A missing z means the
    classical boundary tuples (1, ..., 1).  A missing y means identity
    coefficients.
    """
    if not isinstance(B, ExchangeMatrix):
        B = ExchangeMatrix.from_rows(B)
    d = tuple(int(v) for v in d)
    if context is None:
        context = SemifieldContext.trivial()
    if z is None:
        z = [[1] * (di + 1) for di in d]
    zt = tuple(tuple(_coerce_combination(context, v) for v in row) for row in z)
    if y is None:
        ys = tuple(context.identity() for _ in d)
    else:
        ys = tuple(
            v if isinstance(v, SemifieldElement) else context.monomial(v) for v in y
        )
    algebra = Algebra(len(d), context.rank)
    xs = tuple(RationalFunction(algebra.x_poly(i)) for i in range(len(d)))
    seed = Seed(context, B, d, zt, xs, ys, strict=strict)
    validate_seed(seed)
    return seed


def principal_seed(
    B: ExchangeMatrix | Iterable[Iterable[int]],
    d: Iterable[int],
    z: Iterable[Iterable[ZEntry]] | None = None,
    strict: bool = True,
) -> Seed:
    """Seed over the rank-n tropical semifield with y_i the i-th generator."""
    d = tuple(int(v) for v in d)
    context = SemifieldContext.tropical(len(d))
    y = [context.generator(i) for i in range(len(d))]
    return initial_seed(B, d, z, context, y, strict=strict)


def validate_seed(seed: Seed) -> None:
    n = seed.n
    if seed.B.n != n:
        raise BadTupleLength(f"matrix size {seed.B.n} does not match rank {n}")
    if len(seed.z) != n or len(seed.x) != n or len(seed.y) != n:
        raise BadTupleLength("seed components disagree on the rank")
    for i, di in enumerate(seed.d):
        if di < 1:
            raise DomainError(f"exchange degree d_{i + 1} must be >= 1")
        if len(seed.z[i]) != di + 1:
            raise BadTupleLength(
                f"coefficient tuple {i + 1} has length {len(seed.z[i])}, expected {di + 1}"
            )
        for comb in seed.z[i]:
            if comb.context != seed.context:
                raise ContextMismatch(f"coefficient tuple {i + 1} uses a different context")
        if seed.strict:
            for s in (0, di):
                comb = seed.z[i][s]
                if comb.is_zero or len(comb.terms) != 1:
                    raise BadBoundaryCoefficient(
                        f"z[{i + 1}][{s}] must be the identity in strict mode"
                    )
                elem, mult = comb.terms[0]
                if mult != 1 or not elem.is_identity:
                    raise BadBoundaryCoefficient(
                        f"z[{i + 1}][{s}] must be the identity in strict mode"
                    )
    for yi in seed.y:
        if yi.context != seed.context:
            raise ContextMismatch("y-variable from a different context")
    algebra = seed.algebra
    for xi in seed.x:
        if xi.algebra != algebra:
            raise ContextMismatch("cluster variable from a different algebra")


def _check_direction(n: int, k: int) -> int:
    if not isinstance(k, int) or not 1 <= k <= n:
        raise IndexError(f"mutation direction {k} out of range 1..{n}")
    return k - 1


def _check_sign(eps: int) -> int:
    if eps not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {eps!r}")
    return eps


def _oriented_tuple(seed: Seed, k0: int, eps: int) -> tuple[NonNegCombination, ...]:
    row = seed.z[k0]
    return row if eps == 1 else tuple(reversed(row))


def mutate_matrix(B: ExchangeMatrix, d: Sequence[int], k: int, eps: int = 1) -> ExchangeMatrix:
    """Degree-weighted matrix mutation; the result is sign-independent."""
    k0 = _check_direction(B.n, k)
    _check_sign(eps)
    dk = d[k0]
    rows = []
    for i in range(B.n):
        row = []
        for j in range(B.n):
            if i == k0 or j == k0:
                row.append(-B.rows[i][j])
            else:
                bik, bkj = B.rows[i][k0], B.rows[k0][j]
                row.append(
                    B.rows[i][j]
                    + dk * (_positive_sign(eps * bik) * bkj + bik * _positive_sign(-eps * bkj))
                )
        rows.append(tuple(row))
    return ExchangeMatrix(tuple(rows), symmetrizer=B.symmetrizer)


def mutate_z(
    z: tuple[tuple[NonNegCombination, ...], ...], d: Sequence[int], k: int
) -> tuple[tuple[NonNegCombination, ...], ...]:
    """Reverse the k-th coefficient tuple; the others are untouched."""
    k0 = _check_direction(len(z), k)
    return tuple(
        tuple(reversed(row)) if i == k0 else row for i, row in enumerate(z)
    )


def exchange_denominator_tilde(seed: Seed, k: int, eps: int = 1) -> SemifieldElement:
    """Tropical exchange sum: oplus over s of ztilde_{k,s} * y_k^(eps*s).

    Zero coefficient entries contribute nothing; if every entry is zero the
    sum is empty and EmptyExchangeSum is raised (impossible in strict mode).
    """
    k0 = _check_direction(seed.n, k)
    _check_sign(eps)
    yk = seed.y[k0]
    acc: Optional[SemifieldElement] = None
    for s, comb in enumerate(_oriented_tuple(seed, k0, eps)):
        if comb.is_zero:
            continue
        term = project_tilde(comb) * yk ** (eps * s)
        acc = term if acc is None else oplus(acc, term)
    if acc is None:
        raise EmptyExchangeSum(f"all coefficients in tuple {k} are zero")
    return acc


def hat_y(seed: Seed, k: int) -> RationalFunction:
    """y_k dressed with cluster monomials: embed(y_k) * prod_j x_j^(b_jk)."""
    k0 = _check_direction(seed.n, k)
    result = RationalFunction(embed_semifield(seed.y[k0], seed.algebra))
    for j in range(seed.n):
        e = seed.B.rows[j][k0]
        if e:
            result = result * seed.x[j] ** e
    return result


def mutate_y(seed: Seed, k: int, eps: int = 1) -> tuple[SemifieldElement, ...]:
    k0 = _check_direction(seed.n, k)
    _check_sign(eps)
    dk = seed.d[k0]
    yk = seed.y[k0]
    denom = exchange_denominator_tilde(seed, k, eps)
    out = []
    for i in range(seed.n):
        if i == k0:
            out.append(yk.inv())
            continue
        bki = seed.B.rows[k0][i]
        value = seed.y[i] * (yk ** _positive_sign(eps * bki)) ** dk * denom ** (-bki)
        out.append(value)
    return tuple(out)


def mutate_x(seed: Seed, k: int, eps: int = 1) -> tuple[RationalFunction, ...]:
    k0 = _check_direction(seed.n, k)
    _check_sign(eps)
    algebra = seed.algebra
    dk = seed.d[k0]
    denom_p = exchange_denominator_tilde(seed, k, eps)
    h = hat_y(seed, k)
    if eps == -1:
        h = h.inverse()
    mon = RationalFunction(algebra.one())
    for j in range(seed.n):
        e = _positive_sign(-eps * seed.B.rows[j][k0])
        if e:
            mon = mon * seed.x[j] ** e
    exchange_sum = algebra.zero()
    hn_pow = algebra.one()
    hd_pows = [algebra.one()]
    for _ in range(dk):
        hd_pows.append(hd_pows[-1] * h.den)
    for s, comb in enumerate(_oriented_tuple(seed, k0, eps)):
        if s:
            hn_pow = hn_pow * h.num
        if comb.is_zero:
            continue
        exchange_sum = exchange_sum + embed_combination(comb, algebra) * hn_pow * hd_pows[dk - s]
    xk = seed.x[k0]
    num = mon.num ** dk * exchange_sum * xk.den
    den = mon.den ** dk * hd_pows[dk] * xk.num * embed_semifield(denom_p, algebra)
    # the quotient is a Laurent polynomial whenever the Laurent phenomenon
    # holds, so the reduction is an exact division in practice
    new_xk = RationalFunction(num, den).reduced()
    return tuple(new_xk if i == k0 else xi for i, xi in enumerate(seed.x))


def mutate(seed: Seed, k: int, eps: int = 1) -> Seed:
    """Seed mutation in direction k; an involution, independent of the sign."""
    _check_direction(seed.n, k)
    _check_sign(eps)
    return Seed(
        seed.context,
        mutate_matrix(seed.B, seed.d, k, eps),
        seed.d,
        mutate_z(seed.z, seed.d, k),
        mutate_x(seed, k, eps),
        mutate_y(seed, k, eps),
        strict=seed.strict,
    )


def mutate_word(seed: Seed, word: Iterable[int], eps: int = 1) -> Seed:
    for k in word:
        seed = mutate(seed, k, eps)
    return seed
