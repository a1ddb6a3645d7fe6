"""Exact Laurent polynomials in one variable q, and q-binomials."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping


class LaurentPoly:
    """Integer Laurent polynomial stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal iff
    their term maps are equal. Coefficients are Python ints (unbounded).
    Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, q):
        """Evaluate at a number (exact for ints/Fractions)."""
        return sum(c * q**e for e, c in self._terms.items())

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}*{var}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
q = LaurentPoly.monomial(1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def invert_q(a: LaurentPoly) -> LaurentPoly:
    """Substitute q -> 1/q."""
    return LaurentPoly({-e: c for e, c in a._terms.items()})


def eval_at_one(a: LaurentPoly) -> int:
    return sum(a._terms.values())


@lru_cache(maxsize=None)
def q_binomial(p: int, m: int) -> LaurentPoly:
    """Generating function of partitions inside a ``p x m`` box.

    This is the Gaussian binomial ``[p+m choose m]_q``. It is built from
    the Pascal recurrence ``[p,m] = [p,m-1] + q^m [p-1,m]`` so that only
    integer arithmetic is involved.
    """
    if p < 0 or m < 0:
        raise ValueError(f"q_binomial needs nonnegative arguments, got ({p}, {m})")
    if p == 0 or m == 0:
        return ONE
    return q_binomial(p, m - 1) + LaurentPoly.monomial(m) * q_binomial(p - 1, m)
