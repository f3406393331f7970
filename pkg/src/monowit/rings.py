"""Exact arithmetic on monomials and monomial ideals.

Everything is combinatorics on exponent vectors: a monomial is a tuple of
non-negative integers over a fixed ambient ring context, a monomial ideal is
its unique minimal generating set in a canonical order, and every operation
(divisibility, lcm/gcd, membership, colon, intersection, radical) is a pure
function on those tuples.  The coefficient field is never represented.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

from .errors import ContextMismatchError


class RingContext:
    """Ambient polynomial ring: a number of variables plus display names."""

    __slots__ = ("names",)

    def __init__(self, names_or_size: Union[int, Iterable[str]]):
        if isinstance(names_or_size, int):
            if names_or_size < 1:
                raise ValueError("a ring context needs at least one variable")
            names = tuple(f"x{i + 1}" for i in range(names_or_size))
        else:
            names = tuple(names_or_size)
            if not names:
                raise ValueError("a ring context needs at least one variable")
            if len(set(names)) != len(names):
                raise ValueError("variable names must be pairwise distinct")
        object.__setattr__(self, "names", names)

    def __setattr__(self, name, value):
        raise AttributeError("RingContext is immutable")

    @property
    def n(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, RingContext) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"RingContext({list(self.names)!r})"

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    @property
    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def variable(self, i: int) -> "Monomial":
        return self.monomial_from_powers({i: 1})

    def monomial(self, exps: Iterable[int]) -> "Monomial":
        return Monomial(self, tuple(exps))

    def monomial_from_powers(self, powers: Mapping[int, int]) -> "Monomial":
        exps = [0] * self.n
        for i, e in powers.items():
            if not 0 <= i < self.n:
                raise ValueError(f"variable index {i} out of range")
            exps[i] = e
        return Monomial(self, tuple(exps))


def _require_same_context(a, b):
    if a.context != b.context:
        raise ContextMismatchError(
            f"operands live in different rings: {a.context!r} vs {b.context!r}"
        )


class Monomial:
    """A monomial x^a, stored as its exponent vector."""

    __slots__ = ("context", "exps")

    def __init__(self, context: RingContext, exps: tuple[int, ...]):
        exps = tuple(exps)
        if len(exps) != context.n:
            raise ValueError(
                f"exponent vector has length {len(exps)}, ring has {context.n} variables"
            )
        if any(e < 0 or not isinstance(e, int) for e in exps):
            raise ValueError("exponents must be non-negative integers")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.exps == other.exps
            and self.context == other.context
        )

    def __hash__(self):
        return hash((self.context, self.exps))

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        names = self.context.names
        parts = [
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(self.exps)
            if e
        ]
        return "*".join(parts) if parts else "1"

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def exponent(self, i: int) -> int:
        return self.exps[i]

    def support(self) -> tuple[int, ...]:
        """Indices of the variables dividing this monomial."""
        return tuple(i for i, e in enumerate(self.exps) if e)

    def squarefree_part(self) -> "Monomial":
        """The product of the variables in the support."""
        return Monomial(self.context, tuple(1 if e else 0 for e in self.exps))

    def divides(self, other: "Monomial") -> bool:
        _require_same_context(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        _require_same_context(self, other)
        return Monomial(self.context, tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _require_same_context(self, other)
        return Monomial(self.context, tuple(map(min, self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _require_same_context(self, other)
        return Monomial(self.context, tuple(a + b for a, b in zip(self.exps, other.exps)))


def _minimize_exps(vectors: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Keep the divisibility-minimal exponent vectors, in descending lex order.

    Scanning by total degree first means nothing seen later can divide an
    earlier survivor, so one forward pass suffices.
    """
    ordered = sorted(set(vectors), key=lambda v: (sum(v), v))
    keep: list[tuple[int, ...]] = []
    for v in ordered:
        for k in keep:
            if all(a <= b for a, b in zip(k, v)):
                break
        else:
            keep.append(v)
    return tuple(sorted(keep, reverse=True))


class MonomialIdeal:
    """A monomial ideal, held as its minimal generators in lex order.

    The constructor minimizes and sorts, so equality of ideals is structural
    equality of the stored generator tuples.  The zero ideal has no
    generators; the unit ideal is generated by 1.
    """

    __slots__ = ("context", "gens", "_hash")

    def __init__(self, context: RingContext, gens: Iterable[Monomial]):
        gens = tuple(gens)
        for g in gens:
            if g.context != context:
                raise ContextMismatchError(
                    f"generator {g!r} does not live in {context!r}"
                )
        exps = _minimize_exps(g.exps for g in gens)
        canonical = tuple(Monomial(context, v) for v in exps)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "gens", canonical)
        object.__setattr__(self, "_hash", hash((context, exps)))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.context == other.context
            and tuple(g.exps for g in self.gens) == tuple(g.exps for g in other.gens)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def __contains__(self, m: Monomial) -> bool:
        _require_same_context(self, m)
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """Whether other is a subset of this ideal."""
        _require_same_context(self, other)
        return all(g in self for g in other.gens)

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise max over the generators (all zeros for the zero ideal)."""
        out = [0] * self.context.n
        for g in self.gens:
            for i, e in enumerate(g.exps):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def colon(self, other: Union[Monomial, "MonomialIdeal"]) -> "MonomialIdeal":
        """The quotient (I : v) by a monomial, or (I : J) by a nonzero ideal."""
        if isinstance(other, Monomial):
            _require_same_context(self, other)
            v = other.exps
            quotients = (
                Monomial(self.context, tuple(max(a - b, 0) for a, b in zip(g.exps, v)))
                for g in self.gens
            )
            return MonomialIdeal(self.context, quotients)
        _require_same_context(self, other)
        if other.is_zero:
            raise ValueError("colon by the zero ideal is undefined")
        result = None
        for v in other.gens:
            q = self.colon(v)
            result = q if result is None else result.intersect(q)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _require_same_context(self, other)
        return MonomialIdeal(
            self.context,
            (u.lcm(w) for u in self.gens for w in other.gens),
        )

    __and__ = intersect

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.context, (g.squarefree_part() for g in self.gens))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g.exps)


class PrimeSupport:
    """A monomial prime ideal, stored as its (sorted, non-empty) variable set."""

    __slots__ = ("context", "vars")

    def __init__(self, context: RingContext, variables: Iterable[int]):
        vs = tuple(sorted(set(variables)))
        if not vs:
            raise ValueError("a prime support needs at least one variable")
        if vs[0] < 0 or vs[-1] >= context.n:
            raise ValueError(f"variable indices {vs} out of range for n={context.n}")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "vars", vs)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeSupport is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PrimeSupport)
            and self.vars == other.vars
            and self.context == other.context
        )

    def __hash__(self):
        return hash((self.context, self.vars))

    def __repr__(self):
        return f"PrimeSupport({self})"

    def __str__(self):
        names = self.context.names
        return "(" + ", ".join(names[i] for i in self.vars) + ")"

    def __len__(self) -> int:
        return len(self.vars)

    @property
    def is_full_support(self) -> bool:
        return len(self.vars) == self.context.n

    def complement(self) -> tuple[int, ...]:
        inside = set(self.vars)
        return tuple(i for i in range(self.context.n) if i not in inside)

    def as_ideal(self) -> MonomialIdeal:
        ctx = self.context
        return MonomialIdeal(ctx, (ctx.variable(i) for i in self.vars))
