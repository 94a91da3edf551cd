"""Sparse multivariate polynomials over exact fields.

A polynomial is a mapping from exponent tuples to nonzero coefficients,
attached to a :class:`PolyRing` that fixes variable names, the coefficient
field and the ambient monomial order.  Values are immutable.

Example::

    >>> R = PolyRing("x y z")
    >>> x, y, z = R.gens()
    >>> print((x + y) * (x - y))
    x^2 - y^2
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

from .fields import QQ

Exps = tuple  # exponent vector of non-negative ints


def _grevlex_key(e: Exps) -> tuple:
    return (sum(e), tuple(-a for a in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``kind`` is one of ``"lex"``, ``"grevlex"``, ``"weighted"`` (weighted
    degree first, grevlex tie-break) or ``"block"`` (grevlex on the first
    ``block`` variables, then grevlex on the rest; used for elimination).
    """

    kind: str = "grevlex"
    weights: tuple | None = None
    block: int | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "weighted", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise ValueError("weighted order needs positive weights")
        if self.kind == "block" and (self.block is None or self.block < 0):
            raise ValueError("block order needs a block size")

    def keyfunc(self) -> Callable[[Exps], tuple]:
        """Return a sort key: ``m1 < m2`` in the order iff ``key(m1) < key(m2)``."""
        if self.kind == "lex":
            return tuple
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "weighted":
            w = self.weights
            return lambda e: (sum(a * b for a, b in zip(w, e)), _grevlex_key(e))
        k = self.block
        return lambda e: (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

    def __str__(self):
        if self.kind == "block":
            return f"block({self.block})"
        if self.kind == "weighted":
            return f"weighted{self.weights}"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", block=k)


class PolyRing:
    """Polynomial ring ``field[names]`` with an ambient monomial order."""

    def __init__(self, names, field=QQ, order="grevlex", weights=None):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not n for n in names) or len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct and nonempty: {names}")
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(names) or any(w <= 0 for w in weights):
                raise ValueError("weights must be positive and match the variables")
        if isinstance(order, str):
            order = MonomialOrder(order, weights=weights if order == "weighted" else None)
        if order.kind == "weighted" and len(order.weights) != len(names):
            raise ValueError("order weights do not match the variables")
        if order.kind == "block" and order.block > len(names):
            raise ValueError("block larger than the number of variables")
        self.names = names
        self.field = field
        self.order = order
        self.weights = weights
        self.nvars = len(names)
        self.key = order.keyfunc()
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order, self.weights))

    def __repr__(self):
        return f"PolyRing({' '.join(self.names)}; {self.field!r}; {self.order})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(n) for n in self.names)

    def var(self, name: str) -> Polynomial:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def const(self, c) -> Polynomial:
        c = self.field(c)
        if c == 0:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.const(1)

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def from_dict(self, terms: Mapping[Exps, object]) -> Polynomial:
        norm = self.field.normalize
        out = {}
        for e, c in terms.items():
            c = norm(self.field(c))
            if c != 0:
                out[tuple(e)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> Polynomial:
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, text: str) -> Polynomial:
        return self.parse(text)

    def with_order(self, order) -> PolyRing:
        return PolyRing(self.names, self.field, order, self.weights)

    def with_field(self, field) -> PolyRing:
        return PolyRing(self.names, field, self.order, self.weights)

    def with_names(self, names, order=None, weights=None) -> PolyRing:
        return PolyRing(names, self.field, order or GREVLEX, weights)


def _coerce(ring: PolyRing, other) -> Polynomial:
    if isinstance(other, Polynomial):
        if other.ring is not ring and other.ring != ring:
            raise ValueError(f"ring mismatch: {ring!r} vs {other.ring!r}")
        return other
    if isinstance(other, (int, Rational)):
        return ring.const(other)
    return NotImplemented


class Polynomial:
    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring: PolyRing, terms: dict):
        # terms must already be normalized with nonzero coefficients
        self.ring = ring
        self._terms = terms
        self._sorted = None

    # --- structure -------------------------------------------------------

    def terms(self) -> list[tuple[Exps, object]]:
        """Terms sorted in descending order under the ring's order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), self.ring.field(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def lm(self) -> Exps:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms()[0][0]

    @property
    def lc(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms()[0][1]

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def variables(self) -> set[str]:
        return {
            self.ring.names[i] for e in self._terms for i, a in enumerate(e) if a
        }

    def monic(self) -> Polynomial:
        if not self._terms:
            return self
        f = self.ring.field
        inv = f.inv(self.lc)
        return Polynomial(self.ring, {e: f.normalize(c * inv) for e, c in self._terms.items()})

    # --- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = norm(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Polynomial(self.ring, {e: norm(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, {e: c for e, c in ((e, norm(c)) for e, c in out.items()) if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exps: Exps, coeff) -> Polynomial:
        norm = self.ring.field.normalize
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): norm(c * coeff) for e, c in self._terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    # --- maps ------------------------------------------------------------

    def substitute(self, assignment: Mapping[str, Polynomial], target: PolyRing | None = None) -> Polynomial:
        """Image under the ring map sending each variable to ``assignment[name]``.

        Every variable that occurs in ``self`` needs an image; images must share
        one ring, which becomes the target ring.
        """
        if target is None:
            images = [v for v in assignment.values() if isinstance(v, Polynomial)]
            target = images[0].ring if images else self.ring
        imgs = []
        for i, name in enumerate(self.ring.names):
            if name in assignment:
                img = assignment[name]
                img = _coerce(target, img)
                if img is NotImplemented:
                    raise TypeError(f"bad image for {name!r}")
                imgs.append(img)
            else:
                imgs.append(None)
        result = target.zero
        powers: dict = {}
        for e, c in self._terms.items():
            term = target.const(c)
            for i, a in enumerate(e):
                if not a:
                    continue
                if imgs[i] is None:
                    raise KeyError(f"no image given for variable {self.ring.names[i]!r}")
                p = powers.get((i, a))
                if p is None:
                    p = powers[(i, a)] = imgs[i] ** a
                term = term * p
            result = result + term
        return result

    def change_ring(self, ring: PolyRing) -> Polynomial:
        """Re-express in ``ring`` by matching variable names."""
        if ring == self.ring:
            return self
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring._index.get(name))
        out = {}
        field = ring.field
        for e, c in self._terms.items():
            new = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if idx[i] is None:
                        raise ValueError(
                            f"variable {self.ring.names[i]!r} does not exist in {ring!r}"
                        )
                    new[idx[i]] = a
            c = field(c)
            if c:
                out[tuple(new)] = c
        return Polynomial(ring, out)

    def weighted_degree(self, weights: Sequence[int] | None = None) -> int | None:
        """Common weighted degree of all terms, or ``None`` when inhomogeneous."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        if weights is None:
            weights = self.ring.weights or (1,) * self.ring.nvars
        degs = {sum(w * a for w, a in zip(weights, e)) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    # --- printing --------------------------------------------------------

    def __str__(self):
        from .parsing import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def monomial_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def weighted_degree(p: Polynomial, weights: Sequence[int]) -> int | None:
    return p.weighted_degree(weights)


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial], target: PolyRing | None = None):
    return p.substitute(assignment, target)


def monomials_of_weighted_degree(weights: Sequence[int], n: int) -> Iterable[Exps]:
    """All exponent vectors with ``sum(w_i * e_i) == n``."""
    weights = tuple(weights)
    k = len(weights)

    def rec(i: int, remaining: int, prefix: list):
        if i == k - 1:
            if remaining % weights[i] == 0:
                yield tuple(prefix) + (remaining // weights[i],)
            return
        for a in range(remaining // weights[i] + 1):
            prefix.append(a)
            yield from rec(i + 1, remaining - a * weights[i], prefix)
            prefix.pop()

    if n < 0:
        return iter(())
    return rec(0, n, [])
