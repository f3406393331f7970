"""Borel-type ideals: detection, saturation, and the one-extra-variable witness.

An ideal is of Borel type when saturating by x_i and by <x_1..x_i> agree for
every i; equivalently every associated prime is a prefix <x_1..x_j>, and
equivalently every generator u satisfies the exchange test: for j < i with
x_i dividing u, some power of x_j times u/x_i^{nu_i(u)} lies back in the
ideal.  The existential power is decided at the finite bound max nu_j over
the generators, which is exact because a generator's x_j-exponent never
exceeds that bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .decompose import IrreducibleComponent, associated_primes, irreducible_decomposition
from .rings import Monomial, MonomialIdeal, PrimeSupport


@dataclass(frozen=True)
class BorelReport:
    """Detection outcome: on failure a concrete (u, i, j) violation, on
    success the associated primes, each a prefix of the variable order."""

    is_borel_type: bool
    certificate: Optional[tuple[Monomial, int, int]] = None
    primes: Optional[tuple[PrimeSupport, ...]] = None


def _require_decomposable(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise ValueError("the zero ideal is not classified")
    if ideal.is_unit:
        raise ValueError("the unit ideal is not classified")


def is_borel_type(ideal: MonomialIdeal) -> BorelReport:
    """Exchange-test detection over the minimal generators.

    Checking generators suffices: any u in the ideal is a monomial multiple
    of a generator, and the multiple carries over to the exchanged monomial.
    """
    _require_decomposable(ideal)
    floors = ideal.max_exponents()
    for u in ideal.gens:
        for i in range(ideal.context.n - 1, 0, -1):
            if u.exponent(i) == 0:
                continue
            stripped = tuple(0 if t == i else e for t, e in enumerate(u.exps))
            for j in range(i):
                probe = tuple(
                    e + floors[j] if t == j else e for t, e in enumerate(stripped)
                )
                if Monomial(ideal.context, probe) not in ideal:
                    return BorelReport(False, certificate=(u, i, j))
    return BorelReport(True, primes=associated_primes(ideal))


def saturate(ideal: MonomialIdeal, by: MonomialIdeal) -> MonomialIdeal:
    """The stable limit of repeated colon by a nonzero ideal."""
    if by.is_zero:
        raise ValueError("saturation by the zero ideal is undefined")
    current = ideal
    while True:
        quotient = current.colon(by)
        if quotient == current:
            return current
        current = quotient


def is_borel_type_by_saturation(ideal: MonomialIdeal) -> bool:
    """Definition-level detection: saturating by x_i and by <x_1..x_i> agree."""
    _require_decomposable(ideal)
    ctx = ideal.context
    for i in range(ctx.n):
        single = MonomialIdeal(ctx, [ctx.variable(i)])
        prefix = MonomialIdeal(ctx, [ctx.variable(t) for t in range(i + 1)])
        if saturate(ideal, single) != saturate(ideal, prefix):
            return False
    return True


def borel_witness(
    ideal: MonomialIdeal,
    prime: PrimeSupport,
    component: IrreducibleComponent,
    extra_exponent: Optional[int] = None,
) -> Monomial:
    """Witness for a prefix prime touching at most one variable outside it.

    For P = <x_1..x_k> with component exponents a_1..a_k the witness is
    x_1^{a_1-1} ... x_k^{a_k-1} times x_{k+1}^b, where b defaults to the max
    x_{k+1}-exponent over the generators; for k = n the extra factor is
    dropped.
    """
    report = is_borel_type(ideal)
    if not report.is_borel_type:
        raise ValueError(f"{ideal} is not of Borel type")
    k = len(prime.vars)
    if prime.vars != tuple(range(k)):
        raise ValueError(f"{prime} is not a prefix prime")
    if component.support() != prime.vars:
        raise ValueError(
            f"component {component} does not have full support on {prime}"
        )
    if component not in irreducible_decomposition(ideal).components_for(prime):
        raise ValueError(f"{component} is not a component for {prime}")
    exps = [0] * ideal.context.n
    for v, a in component.pairs:
        exps[v] = a - 1
    if k < ideal.context.n:
        floor = ideal.max_exponents()[k]
        b = floor if extra_exponent is None else extra_exponent
        if b < floor:
            raise ValueError(f"extra exponent {b} below the floor {floor}")
        exps[k] = b
    return Monomial(ideal.context, tuple(exps))


def exchange_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest ideal containing this one that is closed under moving one
    power of any variable to an earlier variable (hence of Borel type)."""
    _require_decomposable(ideal)
    ctx = ideal.context
    current = ideal
    while True:
        missing = []
        for u in current.gens:
            for i, e in enumerate(u.exps):
                if not e:
                    continue
                for j in range(i):
                    moved = list(u.exps)
                    moved[i] -= 1
                    moved[j] += 1
                    m = Monomial(ctx, tuple(moved))
                    if m not in current:
                        missing.append(m)
        if not missing:
            return current
        current = MonomialIdeal(ctx, current.gens + tuple(missing))
