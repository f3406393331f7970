"""Irredundant irreducible decomposition and associated primes.

A monomial ideal splits along any generator u that is not a pure variable
power: writing u = x_i^a * u' with i the lowest variable of u and u' free of
x_i, the ideal is the intersection of the two ideals obtained by replacing u
with x_i^a and with u'.  Recursing until every generator is a pure power
yields irreducible candidates; dropping the candidates that contain another
candidate leaves the unique irredundant set.  Subproblems repeat heavily, so
the recursion is memoized on canonical generator tuples, which also makes the
output independent of how the input was presented.
"""

from __future__ import annotations

from functools import lru_cache

from .rings import MonomialIdeal, PrimeSupport, RingContext, _minimize_exps

# exponent-vector tuple of an irreducible ideal, as ((var, exp), ...) sorted by var
_Powers = tuple[tuple[int, int], ...]

_split_memo: dict[tuple[tuple[int, ...], ...], frozenset[_Powers]] = {}


def _pure_power_candidates(gens: tuple[tuple[int, ...], ...]) -> frozenset[_Powers]:
    """All irreducible candidates produced by exhaustively splitting gens.

    gens must be a minimized, sorted, proper, nonzero generator tuple; the
    invariant is preserved by each split.
    """
    cached = _split_memo.get(gens)
    if cached is not None:
        return cached

    result = None
    for idx, g in enumerate(gens):
        support = [i for i, e in enumerate(g) if e]
        if len(support) > 1:
            i = support[0]
            head = tuple(e if j == i else 0 for j, e in enumerate(g))
            tail = tuple(0 if j == i else e for j, e in enumerate(g))
            rest = gens[:idx] + gens[idx + 1 :]
            left = _pure_power_candidates(_minimize_exps(rest + (head,)))
            right = _pure_power_candidates(_minimize_exps(rest + (tail,)))
            result = left | right
            break
    if result is None:
        # every generator is a pure power; minimality leaves one per variable
        pairs = []
        for g in gens:
            for v, e in enumerate(g):
                if e:
                    pairs.append((v, e))
                    break
        result = frozenset({tuple(sorted(pairs))})
    _split_memo[gens] = result
    return result


def _component_contains(outer: dict[int, int], inner: _Powers) -> bool:
    """Whether the irreducible ideal `inner` is a subset of `outer`."""
    return all(v in outer and outer[v] <= e for v, e in inner)


def _irredundant(candidates: frozenset[_Powers]) -> list[_Powers]:
    """Drop every candidate that contains another one.

    For irreducible monomial ideals this pairwise criterion coincides with
    "contains the intersection of the others": the monomial with exponent
    c_v - 1 on each support variable v of Q and a huge exponent elsewhere
    lies in every other candidate not contained in Q, but not in Q.
    """
    as_dicts = [(c, dict(c)) for c in candidates]
    keep = []
    for c, d in as_dicts:
        if not any(c2 != c and _component_contains(d, c2) for c2, _ in as_dicts):
            keep.append(c)
    keep.sort(key=lambda c: (tuple(v for v, _ in c), tuple(e for _, e in c)))
    return keep


class IrreducibleComponent:
    """An ideal generated by pure variable powers, as a var -> exponent map."""

    __slots__ = ("context", "pairs")

    def __init__(self, context: RingContext, powers):
        pairs = tuple(sorted(dict(powers).items()))
        if not pairs:
            raise ValueError("an irreducible component needs at least one variable")
        for v, e in pairs:
            if not 0 <= v < context.n:
                raise ValueError(f"variable index {v} out of range")
            if e < 1:
                raise ValueError("pure-power exponents must be positive")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("IrreducibleComponent is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, IrreducibleComponent)
            and self.pairs == other.pairs
            and self.context == other.context
        )

    def __hash__(self):
        return hash((self.context, self.pairs))

    def __repr__(self):
        return f"IrreducibleComponent({self.as_ideal()})"

    def __str__(self):
        return str(self.as_ideal())

    @property
    def powers(self) -> dict[int, int]:
        return dict(self.pairs)

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.pairs)

    def exponent(self, i: int) -> int:
        for v, e in self.pairs:
            if v == i:
                return e
        return 0

    def prime(self) -> PrimeSupport:
        return PrimeSupport(self.context, self.support())

    def as_ideal(self) -> MonomialIdeal:
        ctx = self.context
        return MonomialIdeal(
            ctx, (ctx.monomial_from_powers({v: e}) for v, e in self.pairs)
        )


class Decomposition:
    """The irredundant irreducible decomposition of a monomial ideal."""

    __slots__ = ("ideal", "components")

    def __init__(self, ideal: MonomialIdeal, components):
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "components", tuple(components))

    def __setattr__(self, name, value):
        raise AttributeError("Decomposition is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Decomposition)
            and self.ideal == other.ideal
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.ideal, self.components))

    def __repr__(self):
        comps = " ^ ".join(str(c) for c in self.components)
        return f"Decomposition({self.ideal} = {comps})"

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def primes(self) -> tuple[PrimeSupport, ...]:
        seen = sorted({c.support() for c in self.components})
        return tuple(PrimeSupport(self.ideal.context, vs) for vs in seen)

    def components_for(self, prime: PrimeSupport) -> tuple[IrreducibleComponent, ...]:
        """All components whose support is exactly the given prime."""
        matches = tuple(c for c in self.components if c.support() == prime.vars)
        if not matches:
            raise ValueError(f"{prime} is not an associated prime of {self.ideal}")
        return matches


@lru_cache(maxsize=None)
def irreducible_decomposition(ideal: MonomialIdeal) -> Decomposition:
    """The unique irredundant irreducible decomposition of a proper nonzero ideal."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no irreducible decomposition")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no irreducible decomposition")
    gens = tuple(g.exps for g in ideal.gens)
    candidates = _pure_power_candidates(gens)
    components = [
        IrreducibleComponent(ideal.context, dict(pairs))
        for pairs in _irredundant(candidates)
    ]
    return Decomposition(ideal, components)


def associated_primes(ideal: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    """The supports of the decomposition components, deduplicated and sorted."""
    return irreducible_decomposition(ideal).primes()


def clear_caches():
    """Reset memoized state (used by determinism tests)."""
    _split_memo.clear()
    irreducible_decomposition.cache_clear()
