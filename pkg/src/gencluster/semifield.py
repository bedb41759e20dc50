"""Trivial and tropical semifields, and nonnegative integer combinations.

A semifield here is a multiplicative abelian group carrying an extra
commutative, associative addition ``oplus`` over which multiplication
distributes.  Two kinds are provided:

* trivial: the one-element group {1}, with 1 (+) 1 = 1;
* tropical: Laurent monomials in a fixed list of generators, multiplied by
  adding exponent vectors, with ``oplus`` the componentwise minimum.

On top of the semifield sits the semiring of finite formal sums
``m_1 * p_1 + ... + m_r * p_r`` with positive integer multiplicities
(:class:`NonNegCombination`).  Unlike the semifield itself, this semiring
has a genuine zero: the empty sum.  :func:`project_tilde` folds a
combination back into the semifield by reading the formal ``+`` as
``oplus``; the zero combination has no image there and maps to ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

TRIVIAL = "trivial"
TROPICAL = "tropical"


class ContextError(ValueError):
    """Values from different semifield contexts were combined."""


class DomainError(ValueError):
    """Argument outside an operation's domain."""


@dataclass(frozen=True, slots=True)
class SemifieldContext:
    """Ambient semifield: either trivial or tropical on named generators."""

    kind: str
    generator_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in (TRIVIAL, TROPICAL):
            raise DomainError(f"unknown semifield kind {self.kind!r}")
        if self.kind == TRIVIAL and self.generator_names:
            raise DomainError("trivial semifield has no generators")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise DomainError("duplicate generator names")

    @classmethod
    def trivial(cls) -> "SemifieldContext":
        return cls(TRIVIAL)

    @classmethod
    def tropical(cls, rank: int = 0, names: Iterable[str] | None = None) -> "SemifieldContext":
        if names is None:
            names = tuple(f"u{j + 1}" for j in range(rank))
        return cls(TROPICAL, tuple(names))

    @property
    def rank(self) -> int:
        return len(self.generator_names)

    @property
    def is_trivial(self) -> bool:
        return self.kind == TRIVIAL

    def identity(self) -> "SemifieldElement":
        return SemifieldElement(self, (0,) * self.rank)

    def generator(self, j: int) -> "SemifieldElement":
        if self.is_trivial:
            raise DomainError("trivial semifield has no generators")
        exps = [0] * self.rank
        exps[j] = 1
        return SemifieldElement(self, tuple(exps))

    def monomial(self, exponents: Iterable[int]) -> "SemifieldElement":
        return SemifieldElement(self, tuple(int(e) for e in exponents))


@dataclass(frozen=True, slots=True)
class SemifieldElement:
    """Element of a semifield context.

    For a tropical context the element is the monomial with the stored
    exponent vector; for the trivial context the vector is empty and the
    element is 1.
    """

    context: SemifieldContext
    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.exponents) != self.context.rank:
            raise ContextError(
                f"exponent vector of length {len(self.exponents)} in a rank-"
                f"{self.context.rank} context"
            )

    def _require_same(self, other: "SemifieldElement") -> None:
        if not isinstance(other, SemifieldElement):
            raise TypeError(f"expected SemifieldElement, got {type(other).__name__}")
        if other.context != self.context:
            raise ContextError("semifield context mismatch")

    @property
    def is_identity(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def oplus(self, other: "SemifieldElement") -> "SemifieldElement":
        self._require_same(other)
        if self.context.is_trivial:
            return self
        exps = tuple(min(a, b) for a, b in zip(self.exponents, other.exponents))
        return SemifieldElement(self.context, exps)

    def otimes(self, other: "SemifieldElement") -> "SemifieldElement":
        self._require_same(other)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        return SemifieldElement(self.context, exps)

    __mul__ = otimes

    def inv(self) -> "SemifieldElement":
        return SemifieldElement(self.context, tuple(-e for e in self.exponents))

    def __pow__(self, exponent: int) -> "SemifieldElement":
        if not isinstance(exponent, int):
            raise TypeError("semifield exponents must be integers")
        return SemifieldElement(self.context, tuple(e * exponent for e in self.exponents))

    def sort_key(self) -> tuple[int, ...]:
        return self.exponents

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        parts = []
        for name, e in zip(self.context.generator_names, self.exponents):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)


def oplus(a: SemifieldElement, b: SemifieldElement) -> SemifieldElement:
    return a.oplus(b)


def otimes(a: SemifieldElement, b: SemifieldElement) -> SemifieldElement:
    return a.otimes(b)


def inv(a: SemifieldElement) -> SemifieldElement:
    return a.inv()


def power(a: SemifieldElement, e: int) -> SemifieldElement:
    return a ** e


def m_fold_sum(m: int, p: SemifieldElement) -> SemifieldElement:
    """m-fold ``oplus`` of p with itself: p (+) ... (+) p, m times.

    Defined through the fold so a non-idempotent semifield would slot in;
    the loop saturates as soon as adding another copy stops changing the
    value, which happens after one step for the idempotent kinds here.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"fold count must be a positive integer, got {m!r}")
    acc = p
    for _ in range(m - 1):
        nxt = acc.oplus(p)
        if nxt == acc:
            break
        acc = nxt
    return acc


@dataclass(frozen=True, slots=True)
class NonNegCombination:
    """Finite formal sum of semifield elements with positive multiplicities.

    ``terms`` is kept sorted by the elements' exponent vectors so equality
    and hashing are canonical.  The empty tuple is the zero of the semiring.
    """

    context: SemifieldContext
    terms: tuple[tuple[SemifieldElement, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for elem, mult in self.terms:
            if elem.context != self.context:
                raise ContextError("combination term from a different context")
            if not isinstance(mult, int) or mult <= 0:
                raise DomainError(f"multiplicity must be a positive integer, got {mult!r}")
            if elem.exponents in seen:
                raise DomainError("duplicate term in combination")
            seen.add(elem.exponents)
        keys = [e.exponents for e, _ in self.terms]
        if keys != sorted(keys):
            raise DomainError("combination terms must be sorted")

    @classmethod
    def zero(cls, context: SemifieldContext) -> "NonNegCombination":
        return cls(context, ())

    @classmethod
    def of(cls, element: SemifieldElement, multiplicity: int = 1) -> "NonNegCombination":
        return cls(element.context, ((element, multiplicity),))

    @classmethod
    def from_terms(
        cls,
        context: SemifieldContext,
        terms: Iterable[tuple[SemifieldElement, int]],
    ) -> "NonNegCombination":
        merged: dict[tuple[int, ...], int] = {}
        elems: dict[tuple[int, ...], SemifieldElement] = {}
        for elem, mult in terms:
            if mult == 0:
                continue
            merged[elem.exponents] = merged.get(elem.exponents, 0) + mult
            elems[elem.exponents] = elem
        out = tuple((elems[k], merged[k]) for k in sorted(merged))
        return cls(context, out)

    @classmethod
    def integer(cls, context: SemifieldContext, m: int) -> "NonNegCombination":
        """The combination m * 1; m = 0 gives the zero."""
        if m < 0:
            raise DomainError("multiplicity must be nonnegative")
        if m == 0:
            return cls.zero(context)
        return cls.of(context.identity(), m)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "NonNegCombination") -> "NonNegCombination":
        if not isinstance(other, NonNegCombination):
            return NotImplemented
        if other.context != self.context:
            raise ContextError("combination context mismatch")
        prods = (
            (p.otimes(q), mp * mq)
            for p, mp in self.terms
            for q, mq in other.terms
        )
        return NonNegCombination.from_terms(self.context, prods)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for elem, mult in self.terms:
            if mult == 1:
                parts.append(str(elem))
            elif elem.is_identity:
                parts.append(str(mult))
            else:
                parts.append(f"{mult}*{elem}")
        return " + ".join(parts)


def project_tilde(z: NonNegCombination) -> Optional[SemifieldElement]:
    """Fold a combination into the semifield, or None for the zero.

    Each term m * p contributes its m-fold oplus sum; the contributions are
    then combined with oplus.  The zero combination has no semifield image.
    """
    if z.is_zero:
        return None
    return reduce(oplus, (m_fold_sum(m, p) for p, m in z.terms))
