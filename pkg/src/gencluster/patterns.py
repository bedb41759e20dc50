"""Principal-coefficient runs, F-polynomials, c-/g-vectors, separation checks.

A run records every seed along a mutation word.  The principal run for
given (B, d, z) lives over the rank-n tropical semifield with y_i the i-th
generator; its cluster variables, with all x set to 1, give the
F-polynomials, with the integer coefficient data baked into the
coefficients.  c-vectors are the exponent vectors of the y-variables and
g-vectors the multidegrees of the cluster variables under the grading
deg(x_j) = e_j, deg(u_j) = -(column j of the initial matrix).

The separation identities express the seeds of a run over an arbitrary
semifield through the principal data:

  x_i^t = prod_j x_j^(g_j) * F_i^t(yhat0) / embed(F_i^t restricted to P)
  y_i^t = prod_j (y_j0)^(c_j) * prod_j (F_j^t restricted to P)^(b_ji^t)

where the restriction to P replaces + by oplus and folds integer
coefficients by the semifield's m-fold sum.  Both are verified per (t, i)
and reported; nothing is patched silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .exactalg import (
    Algebra,
    LaurentPolynomial,
    RationalFunction,
    embed_semifield,
)
from .seedcore import (
    ExchangeMatrix,
    Seed,
    ZEntry,
    hat_y,
    initial_seed,
    mutate,
    validate_seed,
)
from .semifield import (
    DomainError,
    NonNegCombination,
    SemifieldContext,
    SemifieldElement,
    m_fold_sum,
    oplus,
)


class NotPolynomial(ArithmeticError):
    """A value expected to be a polynomial with positive integer coefficients is not."""


class NotHomogeneous(ArithmeticError):
    """A cluster variable is not homogeneous under the principal grading."""


class SeparationMismatch(AssertionError):
    """A separation identity failed; carries the per-case witnesses."""

    def __init__(self, message: str, mismatches: list[tuple]):
        super().__init__(message)
        self.mismatches = mismatches


@dataclass(frozen=True, slots=True)
class MutationRun:
    """All seeds along a word, indexed by prefix length t = 0..len(word)."""

    word: tuple[int, ...]
    seeds: tuple[Seed, ...]
    principal: bool = False

    def seed(self, t: int) -> Seed:
        if not 0 <= t <= len(self.word):
            raise IndexError(f"step {t} outside the recorded word of length {len(self.word)}")
        return self.seeds[t]

    @property
    def steps(self) -> range:
        return range(len(self.word) + 1)

    @property
    def n(self) -> int:
        return self.seeds[0].n


def run_general(seed: Seed, word: Iterable[int], eps: int = 1) -> MutationRun:
    """Mutate along the word, recording every intermediate seed."""
    validate_seed(seed)
    word = tuple(word)
    seeds = [seed]
    for k in word:
        seeds.append(mutate(seeds[-1], k, eps))
    return MutationRun(word, tuple(seeds), principal=False)


def transportable_multiplicity(comb: NonNegCombination) -> int:
    """The integer m for a combination m * 1 (0 for zero); DomainError otherwise."""
    if comb.is_zero:
        return 0
    if len(comb.terms) == 1 and comb.terms[0][0].is_identity:
        return comb.terms[0][1]
    raise DomainError(
        "coefficient data with non-identity semifield terms cannot be transported "
        "to the principal pattern"
    )


def integer_z_data(seed: Seed) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(transportable_multiplicity(c) for c in row) for row in seed.z)


def run_principal(
    B: ExchangeMatrix | Iterable[Iterable[int]],
    d: Iterable[int],
    z: Iterable[Iterable[ZEntry]] | None,
    word: Iterable[int],
    strict: bool = True,
) -> MutationRun:
    """Principal run: rank-n tropical coefficients with y_i = u_i.

    The coefficient data must consist of integer multiples of the identity
    (the class the trivial-semifield applications use), so that it means the
    same thing in the principal context.
    """
    d = tuple(int(v) for v in d)
    context = SemifieldContext.tropical(len(d))
    if z is None:
        z_int: Iterable[Iterable[ZEntry]] = [[1] * (di + 1) for di in d]
    else:
        rows = []
        for row in z:
            out_row: list[ZEntry] = []
            for v in row:
                if isinstance(v, NonNegCombination):
                    out_row.append(transportable_multiplicity(v))
                elif v is None:
                    out_row.append(0)
                else:
                    out_row.append(int(v))
            rows.append(out_row)
        z_int = rows
    y = [context.generator(i) for i in range(len(d))]
    seed = initial_seed(B, d, z_int, context, y, strict=strict)
    run = run_general(seed, word)
    return MutationRun(run.word, run.seeds, principal=True)


def principal_companion(seed: Seed, word: Iterable[int]) -> MutationRun:
    """The principal run sharing (B, d, z) with the given seed."""
    return run_principal(seed.B, seed.d, seed.z, word, strict=seed.strict)


def _require_principal(run: MutationRun) -> None:
    if not run.principal:
        raise DomainError("operation requires a principal-coefficient run")


def f_polynomial(run: MutationRun, t: int, i: int) -> LaurentPolynomial:
    """x_i at step t with every cluster variable set to 1.

    The result must be a polynomial in the u's with positive integer
    coefficients; anything else signals a bug and raises NotPolynomial.
    """
    _require_principal(run)
    seed = run.seed(t)
    if not 1 <= i <= seed.n:
        raise IndexError(f"index {i} out of range 1..{seed.n}")
    algebra = seed.algebra
    ones = {v: RationalFunction.constant(algebra, 1) for v in range(algebra.n)}
    value = seed.x[i - 1].substitute(ones)
    if not value.is_laurent():
        raise NotPolynomial(f"F[{t},{i}] is not a Laurent polynomial")
    poly = value.num
    for exps, c in poly.terms.items():
        if any(e != 0 for e in exps[: algebra.n]):
            raise NotPolynomial(f"F[{t},{i}] still involves cluster variables")
        if any(e < 0 for e in exps[algebra.n :]):
            raise NotPolynomial(f"F[{t},{i}] has a negative exponent")
        if not isinstance(c, int) or c <= 0:
            raise NotPolynomial(f"F[{t},{i}] has a non-positive-integer coefficient {c}")
    return poly


def f_restricted_tilde(
    F: LaurentPolynomial,
    context: SemifieldContext,
    y: Sequence[SemifieldElement],
) -> SemifieldElement:
    """Evaluate an F-polynomial in a semifield: + becomes oplus, u_j -> y_j.

    Integer coefficients are folded with the semifield's m-fold sum.  Zero
    coefficient entries never reach an F-polynomial (they are skipped when
    the exchange sums are formed), so every monomial present contributes.
    """
    if F.is_zero():
        raise DomainError("cannot restrict the zero polynomial")
    algebra = F.algebra
    if len(y) != algebra.m:
        raise DomainError(f"expected {algebra.m} semifield values, got {len(y)}")
    acc: Optional[SemifieldElement] = None
    for exps, c in sorted(F.terms.items()):
        if not isinstance(c, int) or c <= 0:
            raise NotPolynomial(f"coefficient {c} is not a positive integer")
        value = context.identity()
        for j in range(algebra.m):
            e = exps[algebra.n + j]
            if e:
                value = value * y[j] ** e
        value = m_fold_sum(c, value)
        acc = value if acc is None else oplus(acc, value)
    return acc


def c_vector(run: MutationRun, t: int, i: int) -> tuple[int, ...]:
    """Exponent vector of y_i at step t of a principal run."""
    _require_principal(run)
    seed = run.seed(t)
    if not 1 <= i <= seed.n:
        raise IndexError(f"index {i} out of range 1..{seed.n}")
    return seed.y[i - 1].exponents


def g_vector(run: MutationRun, t: int, i: int) -> tuple[int, ...]:
    """Multidegree of x_i at step t under the principal grading.

    Every monomial of the (certified Laurent) cluster variable must have the
    same degree vector; NotHomogeneous otherwise.
    """
    _require_principal(run)
    seed = run.seed(t)
    if not 1 <= i <= seed.n:
        raise IndexError(f"index {i} out of range 1..{seed.n}")
    B0 = run.seeds[0].B
    n = seed.n

    def multidegree(exps: tuple[int, ...]) -> tuple[int, ...]:
        deg = list(exps[:n])
        for j in range(n):
            e = exps[n + j]
            if e:
                for l in range(n):
                    deg[l] -= e * B0.rows[l][j]
        return tuple(deg)

    xi = seed.x[i - 1]
    degrees = {multidegree(exps) for exps in xi.num.terms}
    if len(degrees) != 1:
        raise NotHomogeneous(f"x[{t},{i}] mixes degrees {sorted(degrees)}")
    (num_deg,) = degrees
    den_degrees = {multidegree(exps) for exps in xi.den.terms}
    if len(den_degrees) != 1:
        raise NotHomogeneous(f"denominator of x[{t},{i}] mixes degrees")
    (den_deg,) = den_degrees
    return tuple(a - b for a, b in zip(num_deg, den_deg))


@dataclass(frozen=True, slots=True)
class SeparationReport:
    """Per-(t, i) outcomes of a separation check."""

    kind: str
    entries: tuple[tuple[int, int, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok, _ in self.entries)

    @property
    def mismatches(self) -> list[tuple[int, int, str]]:
        return [(t, i, detail) for t, i, ok, detail in self.entries if not ok]

    def require(self) -> None:
        if not self.ok:
            raise SeparationMismatch(
                f"{self.kind}-separation failed for {len(self.mismatches)} case(s)",
                self.mismatches,
            )

    def lines(self) -> list[str]:
        out = []
        for t, i, ok, detail in self.entries:
            status = "PASS" if ok else "FAIL"
            suffix = f" {detail}" if detail else ""
            out.append(f"{status} {self.kind}-separation t={t} i={i}{suffix}")
        return out


def _check_shared_data(general: MutationRun, principal: MutationRun) -> None:
    _require_principal(principal)
    if general.word != principal.word:
        raise DomainError("runs follow different words")
    g0, p0 = general.seeds[0], principal.seeds[0]
    if g0.B.rows != p0.B.rows or g0.d != p0.d:
        raise DomainError("runs start from different exchange data")
    if integer_z_data(g0) != integer_z_data(p0):
        raise DomainError("runs carry different coefficient data")


def _hat_y_initial(seed: Seed, j: int, convention: str) -> RationalFunction:
    if convention == "column":
        return hat_y(seed, j + 1)
    if convention == "row":  # deliberately wrong pairing, for negative controls
        result = RationalFunction(embed_semifield(seed.y[j], seed.algebra))
        for l in range(seed.n):
            e = seed.B.rows[j][l]
            if e:
                result = result * seed.x[l] ** e
        return result
    raise DomainError(f"unknown hat-y convention {convention!r}")


def _f_at(F: LaurentPolynomial, images: Sequence[RationalFunction], algebra: Algebra) -> RationalFunction:
    """Evaluate an F-polynomial at rational-function images of the u's."""
    mapping = {F.algebra.u_index(j): images[j] for j in range(F.algebra.m)}
    if not mapping:
        return RationalFunction.constant(algebra, F.constant_coefficient())
    return F.substitute(mapping)


def verify_x_separation(
    general: MutationRun,
    principal: MutationRun,
    hat_convention: str = "column",
) -> SeparationReport:
    """Check x_i^t against the principal data for every recorded (t, i)."""
    _check_shared_data(general, principal)
    g0 = general.seeds[0]
    algebra = g0.algebra
    context = g0.context
    yhat0 = [_hat_y_initial(g0, j, hat_convention) for j in range(g0.n)]
    entries = []
    for t in general.steps:
        for i in range(1, general.n + 1):
            F = f_polynomial(principal, t, i)
            g = g_vector(principal, t, i)
            x_mon = RationalFunction(algebra.monomial(tuple(g) + (0,) * algebra.m))
            numerator = _f_at(F, yhat0, algebra)
            restricted = f_restricted_tilde(F, context, g0.y)
            rhs = x_mon * numerator / RationalFunction(embed_semifield(restricted, algebra))
            lhs = general.seed(t).x[i - 1]
            ok = lhs == rhs
            detail = "" if ok else f"expected {rhs}, seed has {lhs}"
            entries.append((t, i, ok, detail))
    return SeparationReport("x", tuple(entries))


def verify_y_separation(general: MutationRun, principal: MutationRun) -> SeparationReport:
    """Check y_i^t = prod_j (y_j0)^(c_ji) * prod_j (F_j^t|_P)^(b_ji^t)."""
    _check_shared_data(general, principal)
    g0 = general.seeds[0]
    context = g0.context
    entries = []
    for t in general.steps:
        Bt = principal.seed(t).B
        restricted = [
            f_restricted_tilde(f_polynomial(principal, t, j), context, g0.y)
            for j in range(1, general.n + 1)
        ]
        for i in range(1, general.n + 1):
            c = c_vector(principal, t, i)
            rhs = context.identity()
            for j in range(general.n):
                rhs = rhs * g0.y[j] ** c[j]
            for j in range(general.n):
                rhs = rhs * restricted[j] ** Bt.rows[j][i - 1]
            lhs = general.seed(t).y[i - 1]
            ok = lhs == rhs
            detail = "" if ok else f"expected {rhs}, seed has {lhs}"
            entries.append((t, i, ok, detail))
    return SeparationReport("y", tuple(entries))
