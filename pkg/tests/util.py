"""Shared test helpers: parsing shorthands, definitional oracles over bounded
exponent boxes, hypothesis strategies, and the seeded random corpora."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import hypothesis.strategies as st

from monowit import (
    Clutter,
    Monomial,
    MonomialIdeal,
    RingContext,
    exchange_closure,
    parse_ideal_gens,
    parse_monomial,
)

_CONTEXTS: dict[int, RingContext] = {}


def ctx(n: int) -> RingContext:
    if n not in _CONTEXTS:
        _CONTEXTS[n] = RingContext(n)
    return _CONTEXTS[n]


def mono(context: RingContext, text: str) -> Monomial:
    return parse_monomial(text, context)


def ideal(context: RingContext, *gens: str) -> MonomialIdeal:
    return parse_ideal_gens(", ".join(gens), context)


def session_ideal() -> MonomialIdeal:
    """The 8-variable golden ideal used throughout the suite."""
    return ideal(
        ctx(8),
        "x1^4", "x2^7", "x3^5", "x1^3*x4^2", "x2^4*x4^2",
        "x3*x4^2", "x4^5", "x4^2*x8^2", "x1*x8^8",
    )


def six_var_ideal() -> MonomialIdeal:
    """The 6-variable golden ideal with four small witnesses for (x1, x2)."""
    return ideal(ctx(6), "x1*x3^5", "x2*x5^3", "x2*x4^4", "x1^5*x4^2", "x1*x6^8")


# ---------------------------------------------------------------------------
# definitional oracles, written on raw exponent tuples

def box_exponents(bounds):
    return itertools.product(*(range(b + 1) for b in bounds))


def box_bounds(ideal_, slack=1):
    return tuple(e + slack for e in ideal_.max_exponents())


def oracle_member(ideal_, exps) -> bool:
    """m is in I iff some minimal generator divides it, componentwise."""
    return any(
        all(ge <= me for ge, me in zip(g.exps, exps)) for g in ideal_.gens
    )


def oracle_minimal_subset(vectors):
    """Brute-force filter: keep u with no proper divisor present."""
    out = []
    for u in vectors:
        dominated = any(
            v != u and all(a <= b for a, b in zip(v, u)) for v in vectors
        )
        if not dominated:
            out.append(u)
    return set(out)


# ---------------------------------------------------------------------------
# hypothesis strategies

@st.composite
def monomials(draw, context, max_exp=3):
    exps = draw(
        st.tuples(*(st.integers(0, max_exp) for _ in range(context.n)))
    )
    return Monomial(context, exps)


@st.composite
def ideals(draw, max_n=4, max_exp=3, max_gens=5, proper=True):
    n = draw(st.integers(1, max_n))
    context = ctx(n)
    count = draw(st.integers(1, max_gens))
    gens = [draw(monomials(context, max_exp)) for _ in range(count)]
    result = MonomialIdeal(context, gens)
    if proper and (result.is_unit or result.is_zero):
        gens = [g for g in gens if not g.is_one]
        if not gens:
            gens = [context.variable(draw(st.integers(0, n - 1)))]
        result = MonomialIdeal(context, gens)
    return result


# ---------------------------------------------------------------------------
# seeded random corpora (shared by property and acceptance suites)

def _random_ideal(rng, max_n=6, max_exp=5, max_gens=8, min_n=2):
    n = rng.randint(min_n, max_n)
    context = ctx(n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        support = rng.sample(range(n), rng.randint(1, n))
        exps = [0] * n
        for v in support:
            exps[v] = rng.randint(1, max_exp)
        gens.append(Monomial(context, tuple(exps)))
    return MonomialIdeal(context, gens)


@lru_cache(maxsize=None)
def witness_corpus(count=500, seed=20260810):
    """Proper nonzero ideals with n <= 6, exponents <= 5, <= 8 generators."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        candidate = _random_ideal(rng)
        if candidate.is_zero or candidate.is_unit:
            continue
        out.append(candidate)
    return tuple(out)


@lru_cache(maxsize=None)
def box_corpus(count=100, seed=4418):
    """Small ideals (n <= 4, exponents <= 3) for exhaustive box checks."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        candidate = _random_ideal(rng, max_n=4, max_exp=3, max_gens=5, min_n=1)
        if candidate.is_zero or candidate.is_unit:
            continue
        out.append(candidate)
    return tuple(out)


@lru_cache(maxsize=None)
def tiny_corpus(count=100, seed=90210):
    """n <= 3 ideals for exhaustive witness searches."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        candidate = _random_ideal(rng, max_n=3, max_exp=4, max_gens=4, min_n=1)
        if candidate.is_zero or candidate.is_unit:
            continue
        out.append(candidate)
    return tuple(out)


@lru_cache(maxsize=None)
def borel_corpus(count=100, seed=246810):
    """Half raw random ideals, half exchange closures that force Borel type.

    Closures of high-degree seeds explode combinatorially, so closure seeds
    are kept small and oversized results are redrawn; the saturation-based
    cross-check is quadratic in the generator count.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if len(out) % 2:
            candidate = _random_ideal(rng, max_n=4, max_exp=3, max_gens=2, min_n=2)
            if candidate.is_zero or candidate.is_unit:
                continue
            candidate = exchange_closure(candidate)
            if len(candidate.gens) > 40:
                continue
        else:
            candidate = _random_ideal(rng, max_n=5, max_exp=3, max_gens=3, min_n=2)
            if candidate.is_zero or candidate.is_unit:
                continue
        out.append(candidate)
    return tuple(out)


@lru_cache(maxsize=None)
def graph_corpus(count=50, seed=777):
    """Random connected simple graphs on 2..6 vertices, as clutters."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 6)
        vertices = list(range(n))
        rng.shuffle(vertices)
        edges = set()
        for i in range(1, n):  # random spanning tree keeps it connected
            edges.add(frozenset({vertices[i], vertices[rng.randrange(i)]}))
        for u, v in itertools.combinations(range(n), 2):
            if rng.random() < 0.3:
                edges.add(frozenset({u, v}))
        out.append(Clutter(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def clutter_corpus(count=20, seed=13579):
    """Random clutters on <= 8 vertices with edges of size 1..4."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, 8)
        raw = []
        for _ in range(rng.randint(2, 7)):
            size = rng.randint(1, min(4, n))
            raw.append(frozenset(rng.sample(range(n), size)))
        # keep only the inclusion-minimal edges so the family is an antichain
        edges = [e for e in raw if not any(f < e for f in raw)]
        if not edges:
            continue
        out.append(Clutter(n, set(edges)))
    return tuple(out)
