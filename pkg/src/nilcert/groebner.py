"""Buchberger's algorithm and the ideal operations built on it.

Everything here works on :class:`Ideal` values.  An ideal keeps its
generators and lazily computes (once) its reduced Groebner basis under the
ring's order.  Elimination, quotients and kernels build auxiliary rings with
block orders and map results back by variable name.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .polyring import (
    GREVLEX,
    Polynomial,
    PolyRing,
    block_order,
    monomial_divides,
    monomial_lcm,
    monomials_of_weighted_degree,
)

log = logging.getLogger(__name__)

SATURATION_CAP = 64


class NotHomogeneousError(ValueError):
    pass


# --- dict-level kernels ------------------------------------------------------
#
# A polynomial here is a dict exps -> coeff.  ``basis`` entries are triples
# (lm, lc, terms) so the leading data is not recomputed on every division.


def _lead(f: dict, key):
    m = max(f, key=key)
    return m, f[m]


def _sub_multiple(f: dict, g: dict, shift, coeff, norm):
    """f -= coeff * x^shift * g, in place."""
    for e, c in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        v = norm(f.get(m, 0) - coeff * c)
        if v:
            f[m] = v
        else:
            f.pop(m, None)


def _reduce(f: dict, basis, key, field, full: bool = True) -> dict:
    """Remainder of ``f`` on division by ``basis``.

    With ``full=False`` only the leading term is made irreducible.
    """
    norm, inv = field.normalize, field.inv
    f = dict(f)
    rem: dict = {}
    while f:
        m, c = _lead(f, key)
        for lm, lc, g in basis:
            if monomial_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                q = c if lc == 1 else norm(c * inv(lc))
                _sub_multiple(f, g, shift, q, norm)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def _monic(f: dict, key, field) -> dict:
    _, c = _lead(f, key)
    if c == 1:
        return f
    inv = field.inv(c)
    return {e: field.normalize(a * inv) for e, a in f.items()}


def _spoly(f, g, key, field):
    (lf, cf, tf), (lg, cg, tg) = f, g
    lcm = monomial_lcm(lf, lg)
    norm, inv = field.normalize, field.inv
    out: dict = {}
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    _sub_multiple(out, tf, sf, norm(-inv(cf)), norm)
    _sub_multiple(out, tg, sg, inv(cg), norm)
    return out


def _buchberger(polys: Iterable[dict], key, field) -> list[dict]:
    """Reduced monic Groebner basis, sorted by descending leading monomial."""
    basis: list = []  # entries (lm, lc, terms), may be superseded later
    pairs: set = set()

    def add(f: dict):
        f = _monic(f, key, field)
        lm = _lead(f, key)[0]
        j = len(basis)
        basis.append((lm, 1, f))
        for i in range(j):
            pairs.add((i, j))

    for f in polys:
        if f:
            r = _reduce(f, basis, key, field, full=False)
            if r:
                add(r)

    while pairs:
        # normal strategy: smallest lcm first
        i, j = min(
            pairs,
            key=lambda p: (key(monomial_lcm(basis[p[0]][0], basis[p[1]][0])), p),
        )
        pairs.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        lcm = monomial_lcm(li, lj)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(basis[k][0], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pairs and pjk not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], key, field)
        if s:
            r = _reduce(s, basis, key, field, full=False)
            if r:
                add(r)

    # minimalize then interreduce
    minimal = []
    for idx, (lm, lc, f) in enumerate(basis):
        dominated = False
        for jdx, (lm2, _, _) in enumerate(basis):
            if jdx == idx:
                continue
            if monomial_divides(lm2, lm) and (lm2 != lm or jdx < idx):
                dominated = True
                break
        if not dominated:
            minimal.append((lm, lc, f))
    reduced = []
    for idx, (lm, lc, f) in enumerate(minimal):
        others = [b for k, b in enumerate(minimal) if k != idx]
        tail = dict(f)
        c = tail.pop(lm)
        r = _reduce(tail, others, key, field, full=True)
        r[lm] = c
        reduced.append(_monic(r, key, field))
    reduced.sort(key=lambda f: key(_lead(f, key)[0]), reverse=True)
    return reduced


# --- public types ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced monic Groebner basis of an ideal under ``ring.order``."""

    ring: PolyRing
    elements: tuple[Polynomial, ...]

    @cached_property
    def _division_data(self):
        return [(g.lm, g.lc, g.as_dict()) for g in self.elements]

    def leading_monomials(self) -> list[tuple]:
        return [g.lm for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(str(g) for g in self.elements) + "])"


class Ideal:
    """Ideal of a polynomial ring, given by generators."""

    def __init__(self, ring: PolyRing, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise ValueError(f"generator {g} is not in {ring!r}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    @cached_property
    def groebner_basis(self) -> GroebnerBasis:
        return buchberger(self)

    def __contains__(self, f) -> bool:
        return ideal_membership(f, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(self.groebner_basis)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner_basis.is_unit()

    def change_ring(self, ring: PolyRing) -> Ideal:
        return Ideal(ring, [g.change_ring(ring) for g in self.generators])

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


def buchberger(ideal: Ideal) -> GroebnerBasis:
    ring = ideal.ring
    raw = _buchberger((g.as_dict() for g in ideal.generators), ring.key, ring.field)
    return GroebnerBasis(ring, tuple(Polynomial(ring, f) for f in raw))


def normal_form(f: Polynomial, basis: GroebnerBasis | Ideal) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``basis``."""
    if isinstance(basis, Ideal):
        basis = basis.groebner_basis
    if f.ring != basis.ring:
        raise ValueError("polynomial and basis live in different rings")
    ring = f.ring
    r = _reduce(f.as_dict(), basis._division_data, ring.key, ring.field, full=True)
    return Polynomial(ring, r)


def ideal_membership(f, ideal: Ideal) -> bool:
    if isinstance(f, str):
        f = ideal.ring.parse(f)
    return normal_form(f, ideal.groebner_basis).is_zero()


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring.names != J.ring.names or I.ring.field != J.ring.field:
        raise ValueError("ideals live in different rings")
    if I.ring.order != J.ring.order:
        J = J.change_ring(I.ring)
    return I.groebner_basis.elements == J.groebner_basis.elements


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff ``J`` is a subset of ``I``."""
    J = J.change_ring(I.ring) if J.ring != I.ring else J
    return all(ideal_membership(g, I) for g in J.generators)


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    n = 0
    while name in taken:
        n += 1
        name = f"{base}{n}"
    return name


def eliminate(ideal: Ideal, keep: Sequence[str]) -> Ideal:
    """Generators of ``ideal`` intersected with the subring on ``keep``.

    The result lives in ``field[keep]`` (variables in the original ring's
    order) with grevlex.
    """
    ring = ideal.ring
    keep_set = set(keep)
    unknown = keep_set - set(ring.names)
    if unknown:
        raise ValueError(f"not ring variables: {sorted(unknown)}")
    kept = [n for n in ring.names if n in keep_set]
    dropped = [n for n in ring.names if n not in keep_set]
    target = PolyRing(kept, ring.field, GREVLEX)
    if not dropped:
        return ideal.change_ring(target)
    elim_ring = PolyRing(dropped + kept, ring.field, block_order(len(dropped)))
    gb = Ideal(elim_ring, [g.change_ring(elim_ring) for g in ideal.generators]).groebner_basis
    k = len(dropped)
    out = [g.change_ring(target) for g in gb if all(not any(e[:k]) for e, _ in g.terms())]
    return Ideal(target, out)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via a tag variable ``w``: eliminate w from w*I + (1-w)*J."""
    ring = I.ring
    w = _fresh_name("w", ring.names)
    big = PolyRing((w,) + ring.names, ring.field, ring.order)
    tw = big.var(w)
    gens = [tw * g.change_ring(big) for g in I.generators]
    gens += [(1 - tw) * g.change_ring(big) for g in J.change_ring(ring).generators]
    return eliminate(Ideal(big, gens), ring.names).change_ring(ring)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g``; raises if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring, field, key = f.ring, f.ring.field, f.ring.key
    rest = f.as_dict()
    lg, cg = g.lm, g.lc
    gd = g.as_dict()
    inv = field.inv(cg)
    quot: dict = {}
    while rest:
        m, c = _lead(rest, key)
        if not monomial_divides(lg, m):
            raise ValueError(f"{g} does not divide {f}")
        shift = tuple(a - b for a, b in zip(m, lg))
        q = field.normalize(c * inv)
        quot[shift] = q
        _sub_multiple(rest, gd, shift, q, field.normalize)
    return Polynomial(ring, quot)


def ideal_quotient(ideal: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : g*f in I}, computed as (I ∩ (f)) / f."""
    if f.is_zero():
        raise ZeroDivisionError("ideal quotient by the zero polynomial")
    ring = ideal.ring
    if ideal.is_zero():
        return Ideal(ring)
    inter = ideal_intersection(ideal, Ideal(ring, [f]))
    return Ideal(ring, [divide_exact(h, f) for h in inter.generators])


@dataclass(frozen=True)
class Saturation:
    ideal: Ideal
    k0: int
    chain: tuple = field(default=(), repr=False)

    def __iter__(self):
        # allows ``J, k0 = saturate(I, f)``
        return iter((self.ideal, self.k0))


def saturate(ideal: Ideal, f: Polynomial, cap: int = SATURATION_CAP) -> Saturation:
    """(I : f^oo) by iterated quotients.

    ``k0`` is the least k with (I : f^k) = (I : f^(k+1)); then h vanishes in
    (R/I)[1/f] iff f^k0 * h lies in I.
    """
    if f.is_zero():
        raise ZeroDivisionError("saturation by the zero polynomial")
    current = ideal
    chain = [ideal]
    for k in range(cap + 1):
        nxt = ideal_quotient(current, f)
        if ideal_contains(current, nxt):
            return Saturation(current, k, tuple(chain))
        current = Ideal(ideal.ring, nxt.groebner_basis.elements)
        chain.append(current)
    raise RuntimeError(f"saturation did not stabilize within {cap} quotient steps")


def nilpotency_order(f: Polynomial, ideal: Ideal, g: Polynomial, bound: int) -> int | None:
    """Least n <= bound with f^n = 0 in (R/I)[1/g], or ``None`` if there is none.

    A return value n certifies f^n = 0 and f^(n-1) != 0 after inverting g.
    Returns 0 when the localization is the zero ring.
    """
    if g.is_zero():
        raise ZeroDivisionError("cannot localize at zero")
    sat = saturate(ideal, g).ideal
    power = f.ring.one
    for n in range(bound + 1):
        if ideal_membership(power, sat):
            return n
        power = power * f
    return None


def ring_map_kernel(
    source: PolyRing, images: Mapping[str, Polynomial], target: PolyRing | None = None
) -> Ideal:
    """Kernel of the map ``source -> target`` sending each variable to its image.

    Built from the graph ideal (x_i - image_i) by eliminating target variables.
    """
    missing = [n for n in source.names if n not in images]
    if missing:
        raise KeyError(f"no image given for {missing}")
    if target is None:
        target = next(iter(images.values())).ring
    taken = set(target.names)
    # source names may clash with target names (e.g. x -> x)
    tags = {}
    for n in source.names:
        tags[n] = _fresh_name(n + "_", taken) if n in taken else n
        taken.add(tags[n])
    tnames = list(target.names)
    snames = [tags[n] for n in source.names]
    graph_ring = PolyRing(tnames + snames, source.field, block_order(len(tnames)))
    gens = []
    for n in source.names:
        img = images[n]
        if not isinstance(img, Polynomial):
            img = target.const(img)
        gens.append(graph_ring.var(tags[n]) - img.change_ring(graph_ring))
    ker = eliminate(Ideal(graph_ring, gens), snames)
    back = PolyRing(source.names, source.field, source.order, source.weights)
    rename = {tags[n]: back.var(n) for n in source.names}
    return Ideal(back, [g.substitute(rename, back) for g in ker.generators])


def hilbert_function(ideal: Ideal, weights: Sequence[int], n: int) -> int:
    """dim_k of the weighted-degree-n piece of R/I, by counting standard monomials."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    gb = ideal.groebner_basis
    for g in gb:
        if g.weighted_degree(weights) is None:
            raise NotHomogeneousError(f"basis element {g} is not homogeneous for {tuple(weights)}")
    lms = gb.leading_monomials()
    return sum(
        1
        for m in monomials_of_weighted_degree(weights, n)
        if not any(monomial_divides(lm, m) for lm in lms)
    )


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    return Polynomial(
        ring, _spoly((f.lm, f.lc, f.as_dict()), (g.lm, g.lc, g.as_dict()), ring.key, ring.field)
    )
