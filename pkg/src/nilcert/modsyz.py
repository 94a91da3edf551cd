"""Polynomial matrices, syzygies and module membership.

Free-module elements are tuples of polynomials.  Submodule Groebner bases
use a position-over-term order: terms are compared by position first
(position 0 largest), then by the ring's monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .groebner import Ideal
from .polyring import Polynomial, PolyRing, monomial_divides, monomial_lcm


@dataclass(frozen=True)
class PolyMatrix:
    ring: PolyRing
    rows: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(self._coerce(e) for e in r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        object.__setattr__(self, "rows", rows)

    def _coerce(self, e):
        if isinstance(e, str):
            return self.ring.parse(e)
        if isinstance(e, Polynomial):
            if e.ring != self.ring:
                raise ValueError(f"entry {e} is not in {self.ring!r}")
            return e
        return self.ring.const(e)

    @classmethod
    def zeros(cls, ring: PolyRing, nrows: int, ncols: int) -> PolyMatrix:
        return cls(ring, tuple((ring.zero,) * ncols for _ in range(nrows)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Polynomial, ...]]:
        return [self.column(j) for j in range(self.shape[1])]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.ring, tuple(self.columns()))

    def replace(self, i: int, j: int, value) -> PolyMatrix:
        rows = [list(r) for r in self.rows]
        rows[i][j] = value
        return PolyMatrix(self.ring, tuple(tuple(r) for r in rows))

    def delete_row(self, i: int) -> PolyMatrix:
        return PolyMatrix(self.ring, self.rows[:i] + self.rows[i + 1 :])

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        zero = self.ring.zero
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = zero
                for t in range(k):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(self.ring, tuple(out))

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def determinant(self) -> Polynomial:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return self.ring.one
        if n == 1:
            return self.rows[0][0]
        # cofactor expansion along the first row
        total = self.ring.zero
        for j, a in enumerate(self.rows[0]):
            if a.is_zero():
                continue
            sub = PolyMatrix(self.ring, tuple(r[:j] + r[j + 1 :] for r in self.rows[1:]))
            term = a * sub.determinant()
            total = total + term if j % 2 == 0 else total - term
        return total

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)


def maximal_minors(M: PolyMatrix) -> list[Polynomial]:
    """Maximal minors of an (n+1) x n matrix; entry i deletes row i."""
    n1, n = M.shape
    if n1 != n + 1:
        raise ValueError(f"expected an (n+1) x n matrix, got {M.shape}")
    return [M.delete_row(i).determinant() for i in range(n1)]


def compose_is_zero(B: PolyMatrix, A: PolyMatrix) -> bool:
    return (B @ A).is_zero()


# --- module Groebner bases ---------------------------------------------------
#
# A vector is a dict (pos, exps) -> coeff.


def _vec_from_tuple(v: Sequence[Polynomial]) -> dict:
    out = {}
    for pos, p in enumerate(v):
        for e, c in p.as_dict().items():
            out[(pos, e)] = c
    return out


def _vec_to_tuple(d: dict, ring: PolyRing, rank: int) -> tuple[Polynomial, ...]:
    parts: list[dict] = [{} for _ in range(rank)]
    for (pos, e), c in d.items():
        parts[pos][e] = c
    return tuple(Polynomial(ring, p) for p in parts)


def _pot_key(ring: PolyRing):
    key = ring.key
    return lambda t: (-t[0], key(t[1]))


def _vlead(f: dict, vkey):
    t = max(f, key=vkey)
    return t, f[t]


def _vsub(f: dict, g: dict, shift, coeff, norm):
    for (pos, e), c in g.items():
        t = (pos, tuple(a + b for a, b in zip(e, shift)))
        v = norm(f.get(t, 0) - coeff * c)
        if v:
            f[t] = v
        else:
            f.pop(t, None)


def _vreduce(f: dict, basis, vkey, field, full=True) -> dict:
    norm, inv = field.normalize, field.inv
    f = dict(f)
    rem: dict = {}
    while f:
        (pos, m), c = _vlead(f, vkey)
        for (bpos, lm), lc, g in basis:
            if bpos == pos and monomial_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                _vsub(f, g, shift, norm(c * inv(lc)), norm)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[(pos, m)] = c
            del f[(pos, m)]
    return rem


def _vmonic(f: dict, vkey, field) -> dict:
    _, c = _vlead(f, vkey)
    inv = field.inv(c)
    return {t: field.normalize(a * inv) for t, a in f.items()}


def module_groebner(vectors: Sequence[Sequence[Polynomial]], ring: PolyRing) -> list[dict]:
    """Reduced Groebner basis of a submodule under position-over-term."""
    field = ring.field
    vkey = _pot_key(ring)
    basis: list = []
    pairs: set = set()

    def add(f):
        f = _vmonic(f, vkey, field)
        lead, _ = _vlead(f, vkey)
        j = len(basis)
        basis.append((lead, 1, f))
        for i in range(j):
            if basis[i][0][0] == lead[0]:
                pairs.add((i, j))

    for v in vectors:
        d = _vec_from_tuple(v)
        if d:
            r = _vreduce(d, basis, vkey, field, full=False)
            if r:
                add(r)

    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (vkey((basis[p[0]][0][0], monomial_lcm(basis[p[0]][0][1], basis[p[1]][0][1]))), p),
        )
        pairs.discard((i, j))
        (pos, li), _, fi = basis[i]
        (_, lj), _, fj = basis[j]
        lcm = monomial_lcm(li, lj)
        chain = False
        for k, ((kpos, lk), _, _) in enumerate(basis):
            if k in (i, j) or kpos != pos or not monomial_divides(lk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        s: dict = {}
        _vsub(s, fi, tuple(a - b for a, b in zip(lcm, li)), field(-1), field.normalize)
        _vsub(s, fj, tuple(a - b for a, b in zip(lcm, lj)), field(1), field.normalize)
        if s:
            r = _vreduce(s, basis, vkey, field, full=False)
            if r:
                add(r)

    minimal = []
    for idx, (lead, lc, f) in enumerate(basis):
        if any(
            jdx != idx
            and lead2[0] == lead[0]
            and monomial_divides(lead2[1], lead[1])
            and (lead2 != lead or jdx < idx)
            for jdx, (lead2, _, _) in enumerate(basis)
        ):
            continue
        minimal.append((lead, lc, f))
    reduced = []
    for idx, (lead, lc, f) in enumerate(minimal):
        others = [b for k, b in enumerate(minimal) if k != idx]
        tail = dict(f)
        c = tail.pop(lead)
        r = _vreduce(tail, others, vkey, field, full=True)
        r[lead] = c
        reduced.append(r)
    reduced.sort(key=lambda f: vkey(_vlead(f, vkey)[0]), reverse=True)
    return reduced


@dataclass(frozen=True)
class SyzygyModule:
    """Submodule of ``ring^rank`` spanned by ``generators``."""

    ring: PolyRing
    rank: int
    generators: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.rank:
                raise ValueError(f"generator of length {len(g)} in a rank {self.rank} module")
            if any(not p.is_zero() for p in g):
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @cached_property
    def _basis(self):
        key = _pot_key(self.ring)
        out = []
        for f in module_groebner(self.generators, self.ring):
            lead, c = _vlead(f, key)
            out.append((lead, c, f))
        return out

    def contains(self, v: Sequence[Polynomial]) -> bool:
        if len(v) != self.rank:
            raise ValueError("vector has the wrong length")
        d = _vec_from_tuple(v)
        if not d:
            return True
        r = _vreduce(d, self._basis, _pot_key(self.ring), self.ring.field)
        return not r

    def gb_vectors(self) -> list[tuple[Polynomial, ...]]:
        return [_vec_to_tuple(f, self.ring, self.rank) for f in module_groebner(self.generators, self.ring)]


def syzygies(targets: Sequence[Polynomial]) -> SyzygyModule:
    """Module of relations (s_1..s_r) with sum s_i * f_i = 0.

    Each target f_i is tagged with a unit vector: the submodule spanned by
    (f_i, e_i) in ring^(1+r) is intersected with the positions 1..r, which
    a position-over-term basis with position 0 on top does directly.
    """
    targets = list(targets)
    if not targets:
        raise ValueError("no targets")
    ring = targets[0].ring
    r = len(targets)
    tagged = []
    for i, f in enumerate(targets):
        if f.ring != ring:
            raise ValueError("targets live in different rings")
        v = [ring.zero] * (r + 1)
        v[0] = f
        v[i + 1] = ring.one
        tagged.append(tuple(v))
    gens = []
    for f in module_groebner(tagged, ring):
        if all(pos != 0 for pos, _ in f):
            gens.append(_vec_to_tuple(f, ring, r + 1)[1:])
    return SyzygyModule(ring, r, tuple(gens))


def module_spans_equal(S1: SyzygyModule, S2: SyzygyModule) -> bool:
    if S1.rank != S2.rank:
        raise ValueError(f"rank mismatch: {S1.rank} vs {S2.rank}")
    if S1.ring != S2.ring:
        raise ValueError("modules live in different rings")
    return all(S2.contains(g) for g in S1.generators) and all(
        S1.contains(g) for g in S2.generators
    )


def column_module(M: PolyMatrix) -> SyzygyModule:
    return SyzygyModule(M.ring, M.shape[0], tuple(M.columns()))


@dataclass(frozen=True)
class ModulePresentation:
    """Module with ``ngens`` generators and relations given as matrix rows."""

    ngens: int
    relations: PolyMatrix

    def __post_init__(self):
        if self.relations.rows and self.relations.shape[1] != self.ngens:
            raise ValueError("relation rows must have one entry per generator")


def presentation_chart(P: ModulePresentation, unit_generator: int, chart_variable: str) -> Ideal:
    """Ideal of the affine chart of Proj Sym(M) where one generator is inverted.

    Generators are numbered from 1.  The chosen generator becomes 1 and the
    other becomes ``chart_variable``; the result lives in the base ring with
    ``chart_variable`` appended.
    """
    if P.ngens != 2:
        raise NotImplementedError("only two-generator presentations are supported")
    if unit_generator not in (1, 2):
        raise IndexError(f"generator index {unit_generator} out of range 1..2")
    base = P.relations.ring
    if chart_variable in base.names:
        raise ValueError(f"chart variable {chart_variable!r} is not fresh")
    ring = PolyRing(base.names + (chart_variable,), base.field, base.order)
    v = ring.var(chart_variable)
    gens = []
    for a1, a2 in P.relations.rows:
        a1, a2 = a1.change_ring(ring), a2.change_ring(ring)
        gens.append(a1 + v * a2 if unit_generator == 1 else v * a1 + a2)
    return Ideal(ring, gens)


__all__ = [
    "PolyMatrix",
    "ModulePresentation",
    "SyzygyModule",
    "maximal_minors",
    "compose_is_zero",
    "syzygies",
    "module_spans_equal",
    "column_module",
    "presentation_chart",
    "module_groebner",
]
