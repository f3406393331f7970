"""Edge ideals of clutters: stable sets, vertex covers, and witness bases.

A clutter is a hypergraph whose edges form an antichain under inclusion;
simple graphs are the special case of 2-element edges.  The minimal vertex
covers are exactly the supports of the associated primes of the edge ideal,
and for the prime on a cover P the product of the complementary vertices is
already a witness: (I : t_A) = <P> for A = V \\ P.
"""

from __future__ import annotations

import itertools
from typing import FrozenSet, Iterable, Union

from .errors import TheoremViolationError
from .rings import Monomial, MonomialIdeal, PrimeSupport, RingContext

VertexSet = FrozenSet[int]

DEFAULT_ENUMERATION_LIMIT = 16


class Clutter:
    """A vertex set together with an antichain of non-empty edges."""

    __slots__ = ("context", "edges")

    def __init__(
        self,
        vertices: Union[int, Iterable[str]],
        edges: Iterable[Iterable[Union[int, str]]],
    ):
        if isinstance(vertices, int):
            if vertices < 1:
                raise ValueError("a clutter needs at least one vertex")
            context = RingContext(tuple(f"t{i + 1}" for i in range(vertices)))
        else:
            context = RingContext(vertices)
        resolved = set()
        for edge in edges:
            members = frozenset(
                v if isinstance(v, int) else context.index_of(v) for v in edge
            )
            if not members:
                raise ValueError("edges must be non-empty")
            if any(not 0 <= v < context.n for v in members):
                raise ValueError(f"edge {sorted(members)} mentions an unknown vertex")
            resolved.add(members)
        for e, f in itertools.combinations(resolved, 2):
            if e <= f or f <= e:
                raise ValueError(
                    f"edges {sorted(e)} and {sorted(f)} are nested; "
                    "a clutter's edges must form an antichain"
                )
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "edges", tuple(sorted(resolved, key=sorted)))

    def __setattr__(self, name, value):
        raise AttributeError("Clutter is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Clutter)
            and self.context == other.context
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.context, self.edges))

    def __repr__(self):
        shown = ", ".join(
            "{" + ",".join(self.context.names[v] for v in sorted(e)) + "}"
            for e in self.edges
        )
        return f"Clutter({shown})"

    @property
    def n(self) -> int:
        return self.context.n

    def vertices(self) -> VertexSet:
        return frozenset(range(self.n))

    def _check_subset(self, subset: Iterable[int]) -> VertexSet:
        out = frozenset(subset)
        if any(not 0 <= v < self.n for v in out):
            raise ValueError(f"unknown vertex in {sorted(out)}")
        return out

    def edge_ideal(self) -> MonomialIdeal:
        """The squarefree ideal with one generator per edge."""
        ctx = self.context
        return MonomialIdeal(
            ctx,
            (ctx.monomial_from_powers({v: 1 for v in e}) for e in self.edges),
        )

    def is_stable(self, subset: Iterable[int]) -> bool:
        """Whether the set contains no edge."""
        a = self._check_subset(subset)
        return not any(e <= a for e in self.edges)

    def neighbor_set(self, subset: Iterable[int]) -> VertexSet:
        """Vertices whose addition to the set makes it contain an edge."""
        a = self._check_subset(subset)
        return frozenset(
            v for v in range(self.n) if any(e <= a | {v} for e in self.edges)
        )

    def is_vertex_cover(self, subset: Iterable[int]) -> bool:
        k = self._check_subset(subset)
        return all(e & k for e in self.edges)

    def is_minimal_vertex_cover(self, subset: Iterable[int]) -> bool:
        """Whether the set meets every edge and no proper subset does."""
        k = self._check_subset(subset)
        if not self.is_vertex_cover(k):
            return False
        return all(not self.is_vertex_cover(k - {v}) for v in k)

    def _enumerate_subsets(self, limit):
        if self.n > limit:
            raise ValueError(
                f"enumeration over {self.n} vertices exceeds the limit of {limit}"
            )
        vs = range(self.n)
        for r in range(self.n + 1):
            for combo in itertools.combinations(vs, r):
                yield frozenset(combo)

    def maximal_stable_sets(self, limit: int = DEFAULT_ENUMERATION_LIMIT):
        """Every stable set not properly contained in another stable set."""
        out = []
        for a in self._enumerate_subsets(limit):
            if self.is_stable(a) and all(
                not self.is_stable(a | {v}) for v in range(self.n) if v not in a
            ):
                out.append(a)
        return tuple(sorted(out, key=sorted))

    def good_stable_sets(self, limit: int = DEFAULT_ENUMERATION_LIMIT):
        """Stable sets whose neighbor set is a minimal vertex cover.

        A stable set's neighbor set is minimal as soon as it covers, so the
        membership test is stability plus the cover check.
        """
        out = []
        for a in self._enumerate_subsets(limit):
            if self.is_stable(a) and self.is_vertex_cover(self.neighbor_set(a)):
                out.append(a)
        return tuple(sorted(out, key=sorted))

    def vertex_product(self, subset: Iterable[int]) -> Monomial:
        return self.context.monomial_from_powers(
            {v: 1 for v in self._check_subset(subset)}
        )

    def witness_base(self, prime: PrimeSupport) -> Monomial:
        """The witness t_A for the prime on a minimal vertex cover, with
        A the complementary vertex set.

        The complement of a minimal cover is a maximal stable set whose
        neighbor set is exactly the cover, so t_A alone realizes the colon;
        each of those facts is re-checked and a failure is an internal error.
        """
        if prime.context != self.context:
            raise ValueError("prime does not live in this clutter's ring")
        cover = frozenset(prime.vars)
        if not self.is_minimal_vertex_cover(cover):
            raise ValueError(
                f"{prime} is not an associated prime of the edge ideal "
                "(its variables are not a minimal vertex cover)"
            )
        a = self.vertices() - cover
        if not self.is_stable(a) or any(
            self.is_stable(a | {v}) for v in cover
        ):
            raise TheoremViolationError(
                f"complement {sorted(a)} of {prime} is not a maximal stable set"
            )
        if self.neighbor_set(a) != cover:
            raise TheoremViolationError(
                f"neighbor set of {sorted(a)} is not {prime}"
            )
        t_a = self.vertex_product(a)
        if self.edge_ideal().colon(t_a) != prime.as_ideal():
            raise TheoremViolationError(
                f"(I : {t_a}) failed to equal {prime}"
            )
        return t_a
