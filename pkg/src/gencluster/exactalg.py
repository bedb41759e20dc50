"""Exact multivariate Laurent-polynomial and rational-function arithmetic.

The ambient field for cluster variables is Q(x1..xn, u1..um): n cluster
variables followed by m coefficient-monomial generators.  A monomial is an
integer exponent tuple of length n + m (negative exponents allowed), a
polynomial a map from exponent tuples to nonzero exact coefficients, and a
rational function a normalized pair of polynomials.

Normal form of a fraction: a monomial denominator is absorbed into the
numerator (monomials are units in the Laurent ring); otherwise the common
monomial content of numerator and denominator is extracted and the
denominator's leading coefficient is scaled to +1.  ``reduced()``
additionally collapses the fraction to denominator 1 when the division is
exact; mutation applies it to every new cluster variable, which is what
makes term maps canonical keys for certified variables.  The collapse is
never attempted implicitly: on a fraction that is not an exact multiple,
leading-term elimination can churn for a very long time before failing.

Equality of fractions is decided by cross-multiplication, never by
representation.  There is no general multivariate gcd: the mutation
formulas only ever divide by monomials and by factors that exact division
certifies, so none is needed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .semifield import ContextError, NonNegCombination, SemifieldElement

Coeff = Union[int, Fraction]
Exponents = tuple[int, ...]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero polynomial or inversion of zero."""


class PoleAtPoint(ZeroDivisionError):
    """Evaluation point lies on a pole."""


class NonExactDivision(ArithmeticError):
    """Polynomial division left a remainder; carries the witness."""

    def __init__(self, message: str, remainder: "LaurentPolynomial | None" = None):
        super().__init__(message)
        self.remainder = remainder


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True, slots=True)
class Algebra:
    """Variable layout: x1..xn then u1..um."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def nvars(self) -> int:
        return self.n + self.m

    def var_name(self, idx: int) -> str:
        if idx < self.n:
            return f"x{idx + 1}"
        return f"u{idx - self.n + 1}"

    def x_index(self, i: int) -> int:
        return i

    def u_index(self, j: int) -> int:
        return self.n + j

    def zero(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {})

    def one(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {(0,) * self.nvars: 1})

    def constant(self, c: Coeff) -> "LaurentPolynomial":
        c = _norm_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        if c == 0:
            return self.zero()
        return LaurentPolynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exponents: Iterable[int], coeff: Coeff = 1) -> "LaurentPolynomial":
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        if coeff == 0:
            return self.zero()
        return LaurentPolynomial(self, {exps: _norm_coeff(coeff)})

    def variable(self, idx: int) -> "LaurentPolynomial":
        if not 0 <= idx < self.nvars:
            raise ValueError(f"variable index {idx} out of range")
        exps = [0] * self.nvars
        exps[idx] = 1
        return LaurentPolynomial(self, {tuple(exps): 1})

    def x_poly(self, i: int) -> "LaurentPolynomial":
        if not 0 <= i < self.n:
            raise ValueError(f"x-index {i} out of range")
        return self.variable(i)

    def u_poly(self, j: int) -> "LaurentPolynomial":
        if not 0 <= j < self.m:
            raise ValueError(f"u-index {j} out of range")
        return self.variable(self.n + j)


class LaurentPolynomial:
    """Sparse Laurent polynomial: exponent tuple -> nonzero exact coefficient."""

    __slots__ = ("algebra", "terms", "_key")

    def __init__(self, algebra: Algebra, terms: Mapping[Exponents, Coeff]):
        cleaned: dict[Exponents, Coeff] = {}
        for exps, c in terms.items():
            c = _norm_coeff(c)
            if c != 0:
                cleaned[exps] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("LaurentPolynomial is immutable")

    def _require_same(self, other: "LaurentPolynomial") -> None:
        if other.algebra != self.algebra:
            raise ContextError("polynomials from different algebras")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        ((exps, c),) = self.terms.items()
        return c == 1 and all(e == 0 for e in exps)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def single_term(self) -> tuple[Exponents, Coeff]:
        ((exps, c),) = self.terms.items()
        return exps, c

    def lead(self) -> tuple[Exponents, Coeff]:
        """Lex-largest term; the canonical 'leading' term."""
        if not self.terms:
            raise DivisionByZero("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def content(self) -> Exponents:
        """Componentwise minimum exponent vector over the support."""
        if not self.terms:
            raise ValueError("zero polynomial has no content")
        its = iter(self.terms)
        acc = list(next(its))
        for exps in its:
            for v, e in enumerate(exps):
                if e < acc[v]:
                    acc[v] = e
        return tuple(acc)

    def constant_coefficient(self) -> Coeff:
        return self.terms.get((0,) * self.algebra.nvars, 0)

    def key(self) -> tuple:
        if self._key is None:
            k = tuple(sorted((exps, Fraction(c)) for exps, c in self.terms.items()))
            object.__setattr__(self, "_key", k)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra, self.key()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._require_same(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s == 0:
                out.pop(exps, None)
            else:
                out[exps] = s
        return LaurentPolynomial(self.algebra, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.algebra, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._require_same(other)
        if not self.terms or not other.terms:
            return self.algebra.zero()
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, Coeff] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(p + q for p, q in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPolynomial(self.algebra, out)

    def scaled(self, c: Coeff) -> "LaurentPolynomial":
        if c == 0:
            return self.algebra.zero()
        return LaurentPolynomial(self.algebra, {e: k * c for e, k in self.terms.items()})

    def shifted(self, vec: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial with exponent vector ``vec``."""
        return LaurentPolynomial(
            self.algebra,
            {tuple(e + v for e, v in zip(exps, vec)): c for exps, c in self.terms.items()},
        )

    def __pow__(self, e: int) -> "LaurentPolynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- evaluation and substitution ----------------------------------------

    def eval(self, point: Sequence[Coeff]) -> Fraction:
        if len(point) != self.algebra.nvars:
            raise ValueError("point dimension mismatch")
        vals = [Fraction(p) for p in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = Fraction(c)
            for v, e in enumerate(exps):
                if e == 0:
                    continue
                if vals[v] == 0 and e < 0:
                    raise PoleAtPoint(f"negative power of zero at variable {v}")
                term *= vals[v] ** e
            total += term
        return total

    def substitute(self, mapping: Mapping[int, "RationalFunction"]) -> "RationalFunction":
        """Replace variables by rational functions; unmapped variables stay."""
        if not mapping:
            return RationalFunction(self)
        algebra = None
        for rf in mapping.values():
            if algebra is None:
                algebra = rf.algebra
            elif rf.algebra != algebra:
                raise ContextError("substitution images from different algebras")
        if algebra is None:
            algebra = self.algebra
        if algebra != self.algebra:
            occurring = {v for exps in self.terms for v, e in enumerate(exps) if e != 0}
            if not occurring <= set(mapping):
                raise ContextError("cross-algebra substitution must cover every occurring variable")
        powers: dict[tuple[int, int], RationalFunction] = {}

        def img_power(v: int, e: int) -> "RationalFunction":
            key = (v, e)
            if key not in powers:
                powers[key] = mapping[v] ** e
            return powers[key]

        total = RationalFunction(algebra.zero())
        for exps, c in self.terms.items():
            fixed = [0] * algebra.nvars
            factor = RationalFunction(algebra.constant(c))
            for v, e in enumerate(exps):
                if e == 0:
                    continue
                if v in mapping:
                    factor = factor * img_power(v, e)
                else:
                    fixed[v] += e
            if any(fixed):
                factor = factor * RationalFunction(algebra.monomial(fixed))
            total = total + factor
        return total

    # -- rendering -----------------------------------------------------------

    def _term_str(self, exps: Exponents, c: Coeff) -> str:
        names = [self.algebra.var_name(v) for v in range(self.algebra.nvars)]
        factors = []
        for v, e in enumerate(exps):
            if e == 0:
                continue
            factors.append(names[v] if e == 1 else f"{names[v]}^{e}")
        if not factors:
            return str(c)
        body = "*".join(factors)
        if c == 1:
            return body
        if c == -1:
            return f"-{body}"
        return f"{c}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            s = self._term_str(exps, self.terms[exps])
            if parts:
                if s.startswith("-"):
                    parts.append(" - " + s[1:])
                else:
                    parts.append(" + " + s)
            else:
                parts.append(s)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


def exact_div(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient q with a = q*b exactly; NonExactDivision otherwise.

    Both operands may be Laurent; they are shifted into the polynomial cone
    first.  For an exact multiple, lex leading-term elimination never gets
    stuck, so the first monomial-divisibility failure certifies a nonzero
    remainder (carried on the exception).
    """
    a._require_same(b)
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero():
        return a.algebra.zero()
    if b.is_monomial():
        eb, cb = b.single_term()
        inv = Fraction(1) / Fraction(cb)
        return a.shifted(tuple(-e for e in eb)).scaled(inv)
    sa, sb = a.content(), b.content()
    A = a.shifted(tuple(-e for e in sa))
    B = b.shifted(tuple(-e for e in sb))
    eb, cb = B.lead()
    rem = dict(A.terms)
    quo: dict[Exponents, Coeff] = {}
    # lex-max of the remainder via a lazy heap (negated tuples turn heapq
    # into a max-heap for the lex order); stale entries are skipped on pop
    heap = [tuple(-v for v in e) for e in rem]
    heapq.heapify(heap)
    while rem:
        er = None
        while heap:
            candidate = tuple(-v for v in heapq.heappop(heap))
            if candidate in rem:
                er = candidate
                break
        te = tuple(p - q for p, q in zip(er, eb))
        if any(e < 0 for e in te):
            witness = LaurentPolynomial(a.algebra, rem).shifted(sa)
            raise NonExactDivision("division leaves a remainder", witness)
        tc = _norm_coeff(Fraction(rem[er]) / Fraction(cb))
        quo[te] = tc
        for e2, c2 in B.terms.items():
            e = tuple(p + q for p, q in zip(te, e2))
            old = rem.get(e, 0)
            s = old - tc * c2
            if s == 0:
                rem.pop(e, None)
            else:
                if old == 0:
                    heapq.heappush(heap, tuple(-v for v in e))
                rem[e] = _norm_coeff(s)
    shift = tuple(p - q for p, q in zip(sa, sb))
    return LaurentPolynomial(a.algebra, quo).shifted(shift)


class RationalFunction:
    """Quotient of Laurent polynomials in normal form."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None):
        algebra = num.algebra
        if den is None:
            den = algebra.one()
        num._require_same(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            num, den = algebra.zero(), algebra.one()
        elif den.is_monomial():
            eb, cb = den.single_term()
            num = num.shifted(tuple(-e for e in eb))
            if cb != 1:
                num = num.scaled(Fraction(1) / Fraction(cb))
            den = algebra.one()
        else:
            cn, cd = num.content(), den.content()
            common = tuple(min(p, q) for p, q in zip(cn, cd))
            if any(common):
                shift = tuple(-e for e in common)
                num, den = num.shifted(shift), den.shifted(shift)
            lc = den.lead()[1]
            if lc != 1:
                inv = Fraction(1) / Fraction(lc)
                num, den = num.scaled(inv), den.scaled(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def algebra(self) -> Algebra:
        return self.num.algebra

    @classmethod
    def variable(cls, algebra: Algebra, idx: int) -> "RationalFunction":
        return cls(algebra.variable(idx))

    @classmethod
    def constant(cls, algebra: Algebra, c: Coeff) -> "RationalFunction":
        return cls(algebra.constant(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPolynomial:
        """The function as a Laurent polynomial, or NonExactDivision."""
        if self.den.is_one():
            return self.num
        return exact_div(self.num, self.den)  # raises with the remainder witness

    def reduced(self) -> "RationalFunction":
        """Collapse to denominator 1 when the division happens to be exact.

        Call this only where exactness is expected; the attempt is the full
        division and is not cheap on fractions that fail it.
        """
        if self.den.is_one():
            return self
        try:
            return RationalFunction(exact_div(self.num, self.den))
        except NonExactDivision:
            return self

    # -- field operations ----------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num + other.num)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int) -> "RationalFunction":
        if not isinstance(e, int):
            raise ValueError("powers must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num ** e, self.den ** e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is by cross-multiplication; use canonical keys instead

    # -- evaluation and substitution ------------------------------------------

    def eval(self, point: Sequence[Coeff]) -> Fraction:
        dv = self.den.eval(point)
        if dv == 0:
            raise PoleAtPoint("denominator vanishes at the point")
        return self.num.eval(point) / dv

    def substitute(self, mapping: Mapping[int, "RationalFunction"]) -> "RationalFunction":
        num = self.num.substitute(mapping)
        den = self.den.substitute(mapping)
        if den.is_zero():
            raise DivisionByZero("substitution produced a zero denominator")
        return num / den

    # -- rendering -------------------------------------------------------------

    def __str__(self) -> str:
        if self.num.is_zero():
            return "0"
        cn = self.num.content()
        cd = self.den.content() if not self.den.is_one() else (0,) * self.algebra.nvars
        shift = tuple(-min(p, q, 0) for p, q in zip(cn, cd))
        num = self.num.shifted(shift)
        den = self.den.shifted(shift)
        ns = str(num)
        if den.is_one():
            return ns
        ds = str(den)
        if len(num.terms) > 1:
            ns = f"({ns})"
        if len(den.terms) > 1 or "*" in ds or "^" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def embed_semifield(p: SemifieldElement, algebra: Algebra) -> LaurentPolynomial:
    """Tropical monomials become u-monomials; the trivial element becomes 1."""
    if p.context.rank != algebra.m:
        raise ContextError(
            f"semifield rank {p.context.rank} does not match algebra ({algebra.m} u-variables)"
        )
    exps = (0,) * algebra.n + p.exponents
    return algebra.monomial(exps)


def embed_combination(z: NonNegCombination, algebra: Algebra) -> LaurentPolynomial:
    """Sum of multiplicity-weighted embedded terms; the zero embeds as 0."""
    total = algebra.zero()
    for elem, mult in z.terms:
        total = total + embed_semifield(elem, algebra).scaled(mult)
    return total
