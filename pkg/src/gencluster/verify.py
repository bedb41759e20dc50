"""Property suites over seed corpora, plus the random corpus generator.

Five suites back the command-line ``verify`` subcommand:

* involution   -- mutating twice in one direction restores the seed, for
                  every direction and every pair of signs;
* epsilon      -- one mutation gives the same seed for both signs;
* laurent      -- cluster variables along random words stay certified
                  Laurent polynomials (exact division never fails);
* separation   -- both separation identities hold per (t, i) against the
                  matching principal run, for random initial coefficients;
* coherence    -- F-polynomials have constant term 1, c-vectors are nonzero
                  and sign-coherent, cluster variables are homogeneous.

All randomness flows through a seeded generator, so reports are
deterministic for a given budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .exactalg import NonExactDivision
from .patterns import (
    MutationRun,
    c_vector,
    f_polynomial,
    g_vector,
    principal_companion,
    run_general,
    verify_x_separation,
    verify_y_separation,
)
from .seedcore import Seed, initial_seed, mutate
from .semifield import DomainError, NonNegCombination, SemifieldContext

RNG_SEED = 20240915


@dataclass(frozen=True, slots=True)
class VerifyReport:
    suite: str
    cases: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.cases)

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(case, detail) for case, ok, detail in self.cases if not ok]

    def lines(self) -> list[str]:
        out = []
        for case, ok, detail in self.cases:
            status = "PASS" if ok else "FAIL"
            suffix = f" {detail}" if detail else ""
            out.append(f"{status} suite={self.suite} case={case}{suffix}")
        out.append(
            f"{'PASS' if self.ok else 'FAIL'} suite={self.suite} "
            f"total={len(self.cases)} failures={len(self.failures)}"
        )
        return out


# -- random corpus -----------------------------------------------------------


def random_exchange_matrix(rng: random.Random, n: int, max_entry: int = 3) -> list[list[int]]:
    """Random skew-symmetrizable matrix: b_ij = a_ij s_j, b_ji = -a_ij s_i."""
    while True:
        s = [rng.choice((1, 1, 1, 2, 3)) for _ in range(n)]
        rows = [[0] * n for _ in range(n)]
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                a = rng.randint(-2, 2)
                bij, bji = a * s[j], -a * s[i]
                if abs(bij) > max_entry or abs(bji) > max_entry:
                    ok = False
                    break
                rows[i][j], rows[j][i] = bij, bji
            if not ok:
                break
        if ok:
            return rows


def random_combination(
    rng: random.Random,
    context: SemifieldContext,
    max_terms: int = 2,
    max_mult: int = 3,
    zero_prob: float = 0.15,
) -> NonNegCombination:
    if rng.random() < zero_prob:
        return NonNegCombination.zero(context)
    count = rng.randint(1, max_terms)
    terms = []
    for _ in range(count):
        exps = tuple(rng.randint(-2, 2) for _ in range(context.rank))
        terms.append((context.monomial(exps), rng.randint(1, max_mult)))
    comb = NonNegCombination.from_terms(context, terms)
    if comb.is_zero:  # all terms merged away cannot happen, but stay safe
        return NonNegCombination.integer(context, 1)
    return comb


def random_strict_seed(
    rng: random.Random,
    n: int | None = None,
    max_entry: int = 3,
    max_degree: int = 3,
    max_rank: int = 3,
    max_terms: int = 2,
    max_mult: int = 3,
    zero_prob: float = 0.15,
    max_wildness: int | None = None,
) -> Seed:
    """Random strict seed within the corpus bounds.

    ``max_wildness`` caps d_i|b_ij| * d_j|b_ji| over all pairs, the quantity
    that governs degree growth along long mutation words (<= 3 keeps every
    rank-2 subpattern of finite or affine growth).
    """
    if n is None:
        n = rng.choice((2, 3))
    kind = rng.choice(("tropical", "tropical", "trivial"))
    if kind == "trivial":
        context = SemifieldContext.trivial()
    else:
        context = SemifieldContext.tropical(rng.randint(1, max_rank))
    while True:
        B = random_exchange_matrix(rng, n, max_entry)
        d = tuple(rng.randint(1, max_degree) for _ in range(n))
        if max_wildness is None:
            break
        if all(
            d[i] * abs(B[i][j]) * d[j] * abs(B[j][i]) <= max_wildness
            for i in range(n)
            for j in range(i + 1, n)
        ):
            break
    z = []
    for di in d:
        row: list[NonNegCombination | int] = [1]
        for _ in range(di - 1):
            row.append(random_combination(rng, context, max_terms, max_mult, zero_prob))
        row.append(1)
        z.append(row)
    y = [tuple(rng.randint(-2, 2) for _ in range(context.rank)) for _ in range(n)]
    return initial_seed(B, d, z, context, y)


def random_word(rng: random.Random, n: int, length: int, avoid_repeat: bool = True) -> list[int]:
    """Random direction word; immediate repeats are skipped by default since
    they reduce to the involution suite."""
    word = []
    for _ in range(length):
        choices = [k for k in range(1, n + 1) if not (avoid_repeat and word and k == word[-1])]
        word.append(rng.choice(choices))
    return word


def corpus(rng: random.Random, count: int, **kwargs) -> list[Seed]:
    return [random_strict_seed(rng, **kwargs) for _ in range(count)]


def word_is_tame(seed: Seed, word: Iterable[int], max_wildness: int = 3) -> bool:
    """Whether the degree-weighted pair products stay bounded along the word.

    Only the (cheap) matrix dynamics are inspected.  Bounded products keep
    every rank-2 interaction of finite or affine growth at every step, which
    is what makes long words tractable in exact arithmetic; wild quivers
    blow past any budget regardless of implementation.
    """
    from .seedcore import mutate_matrix

    B, d, n = seed.B, seed.d, seed.n

    def tame(M) -> bool:
        return all(
            d[i] * abs(M.rows[i][j]) * d[j] * abs(M.rows[j][i]) <= max_wildness
            for i in range(n)
            for j in range(i + 1, n)
        )

    if not tame(B):
        return False
    for k in word:
        B = mutate_matrix(B, d, k)
        if not tame(B):
            return False
    return True


def random_tame_run(
    rng: random.Random,
    length: int,
    attempts: int = 200,
    **seed_kwargs,
) -> tuple[Seed, list[int]]:
    """A random (seed, word) pair whose matrix dynamics stay tame throughout."""
    seed_kwargs.setdefault("max_wildness", 3)
    for _ in range(attempts):
        seed = random_strict_seed(rng, **seed_kwargs)
        word = random_word(rng, seed.n, length)
        if word_is_tame(seed, word, seed_kwargs["max_wildness"]):
            return seed, word
    raise DomainError("no tame run found within the attempt budget")


# -- suites -------------------------------------------------------------------


def suite_involution(seeds: Iterable[Seed]) -> VerifyReport:
    cases = []
    for idx, seed in enumerate(seeds):
        for k in range(1, seed.n + 1):
            for e1 in (1, -1):
                for e2 in (1, -1):
                    back = mutate(mutate(seed, k, e1), k, e2)
                    ok = back == seed
                    cases.append(
                        (f"seed{idx}:k={k}:eps=({e1:+d},{e2:+d})", ok, "" if ok else "seed not restored")
                    )
    return VerifyReport("involution", tuple(cases))


def suite_epsilon(seeds: Iterable[Seed]) -> VerifyReport:
    cases = []
    for idx, seed in enumerate(seeds):
        for k in range(1, seed.n + 1):
            ok = mutate(seed, k, 1) == mutate(seed, k, -1)
            cases.append((f"seed{idx}:k={k}", ok, "" if ok else "signs disagree"))
    return VerifyReport("epsilon", tuple(cases))


def _certify_word(seed: Seed, word: Iterable[int]) -> tuple[bool, str]:
    current = seed
    for step, k in enumerate(word):
        current = mutate(current, k)
        bad = [i for i, xi in enumerate(current.x) if not xi.is_laurent()]
        if bad:
            return False, f"x{bad[0] + 1} not Laurent after step {step + 1} of {list(word)}"
    return True, ""


def suite_laurent(
    seeds: Iterable[Seed],
    rng: random.Random,
    runs: int = 20,
    words_per_seed: int = 2,
    word_length: int = 8,
) -> VerifyReport:
    """Certify given seeds along tame words, plus random tame (seed, word) runs."""
    cases = []
    for idx, seed in enumerate(seeds):
        picked = 0
        guard = 0
        while picked < words_per_seed and guard < 200:
            guard += 1
            word = random_word(rng, seed.n, word_length)
            if not word_is_tame(seed, word):
                continue
            ok, detail = _certify_word(seed, word)
            cases.append((f"seed{idx}:word{picked}", ok, detail))
            picked += 1
        if picked < words_per_seed:
            cases.append(
                (f"seed{idx}:tame-words", True, f"only {picked} tame word(s) found; rest skipped")
            )
    for r in range(runs):
        seed, word = random_tame_run(rng, word_length)
        ok, detail = _certify_word(seed, word)
        cases.append((f"random{r}", ok, detail))
    return VerifyReport("laurent", tuple(cases))


def words_up_to(n: int, length: int, avoid_repeat: bool = True) -> list[tuple[int, ...]]:
    """All direction words of exactly the given length (no immediate repeats)."""
    words: list[tuple[int, ...]] = [()]
    for _ in range(length):
        words = [
            w + (k,)
            for w in words
            for k in range(1, n + 1)
            if not (avoid_repeat and w and k == w[-1])
        ]
    return words


def suite_separation(
    seed: Seed,
    rng: random.Random,
    budget: int = 10,
    word_length: int = 5,
    hat_convention: str = "column",
) -> VerifyReport:
    """Both separation identities on random words and random initial y."""
    cases = []
    for w in range(budget):
        word = random_word(rng, seed.n, word_length)
        y0 = [
            tuple(rng.randint(-2, 2) for _ in range(seed.context.rank))
            for _ in range(seed.n)
        ]
        trial = initial_seed(seed.B, seed.d, seed.z, seed.context, y0, strict=seed.strict)
        general = run_general(trial, word)
        principal = principal_companion(trial, word)
        rx = verify_x_separation(general, principal, hat_convention=hat_convention)
        ry = verify_y_separation(general, principal)
        ok = rx.ok and ry.ok
        detail = ""
        if not ok:
            bad = (rx.mismatches + ry.mismatches)[0]
            detail = f"word={list(word)} first mismatch (t={bad[0]}, i={bad[1]})"
        cases.append((f"word{w}", ok, detail))
    return VerifyReport("separation", tuple(cases))


def suite_coherence(seed: Seed, rng: random.Random, budget: int = 10, word_length: int = 6) -> VerifyReport:
    """Structural checks on principal runs sharing the seed's (B, d, z)."""
    cases = []
    for w in range(budget):
        word = random_word(rng, seed.n, word_length)
        try:
            run = principal_companion(seed, word)
        except DomainError as exc:
            return VerifyReport("coherence", ((f"word{w}", False, str(exc)),))
        ok, detail = _check_coherence(run)
        cases.append((f"word{w}", ok, detail))
    return VerifyReport("coherence", tuple(cases))


def _check_coherence(run: MutationRun) -> tuple[bool, str]:
    for t in run.steps:
        for i in range(1, run.n + 1):
            F = f_polynomial(run, t, i)
            if F.constant_coefficient() != 1:
                return False, f"F[{t},{i}] constant term is {F.constant_coefficient()}"
            c = c_vector(run, t, i)
            if all(e == 0 for e in c):
                return False, f"c[{t},{i}] is zero"
            if any(e > 0 for e in c) and any(e < 0 for e in c):
                return False, f"c[{t},{i}]={c} is not sign-coherent"
            g_vector(run, t, i)  # raises NotHomogeneous on failure
    return True, ""


SUITE_NAMES = ("involution", "epsilon", "laurent", "separation", "coherence")


def run_suite(name: str, seed: Seed, budget: int) -> VerifyReport:
    """Entry point used by the command line; budget scales the case count."""
    rng = random.Random(RNG_SEED)
    if name == "involution":
        seeds = [seed] + corpus(rng, budget)
        return suite_involution(seeds)
    if name == "epsilon":
        seeds = [seed] + corpus(rng, budget)
        return suite_epsilon(seeds)
    if name == "laurent":
        return suite_laurent([seed], rng, runs=max(budget, 1))
    if name == "separation":
        return suite_separation(seed, rng, budget=max(budget, 1))
    if name == "coherence":
        return suite_coherence(seed, rng, budget=max(budget, 1))
    raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
