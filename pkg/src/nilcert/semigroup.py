"""Numerical semigroups: membership, gaps, Frobenius number."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(int(g) for g in self.generators))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise ValueError(f"generators {gens} do not have gcd 1")
        object.__setattr__(self, "generators", gens)

    def _table(self, n: int) -> list[bool]:
        member = [False] * (n + 1)
        member[0] = True
        for k in range(1, n + 1):
            member[k] = any(g <= k and member[k - g] for g in self.generators)
        return member

    @cached_property
    def _members_below_frobenius(self) -> list[bool]:
        return self._table(max(self.frobenius_number, 0))

    def contains(self, n: int) -> bool:
        if n < 0:
            raise ValueError("semigroup membership is defined for n >= 0")
        if n > self.frobenius_number:
            return True
        return self._members_below_frobenius[n]

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    @cached_property
    def frobenius_number(self) -> int:
        """Largest gap, or -1 for the whole of N."""
        m = self.generators[0]
        member = [True]
        run, k = 1, 0
        # the first run of m consecutive members starts just after the Frobenius number
        while run < m:
            k += 1
            member.append(any(g <= k and member[k - g] for g in self.generators))
            run = run + 1 if member[k] else 0
        return k - m

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        f = self.frobenius_number
        if f < 0:
            return ()
        table = self._members_below_frobenius
        return tuple(n for n in range(1, f + 1) if not table[n])


def contains(S: NumericalSemigroup, n: int) -> bool:
    return S.contains(n)


def gaps(S: NumericalSemigroup) -> list[int]:
    return list(S.gaps)


def frobenius_number(S: NumericalSemigroup) -> int:
    return S.frobenius_number


def curve_semigroup(b0: int) -> NumericalSemigroup:
    """Value semigroup <3, 3b0+4, 3b0+5> of the singular point."""
    if b0 < 1:
        raise ValueError("b0 must be at least 1")
    return NumericalSemigroup((3, 3 * b0 + 4, 3 * b0 + 5))


def genus_delta(b0: int) -> int:
    return len(curve_semigroup(b0).gaps)
