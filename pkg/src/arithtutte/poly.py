"""Sparse integer polynomials in (x, y) and dense ones in q."""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping


def _join(terms: Iterable[tuple[int, str]]) -> str:
    """Render (coefficient, monomial) pairs as ``a + b - c``; monomial '' is a constant."""
    parts = []
    for c, mono in terms:
        body = f"{abs(c)}*{mono}" if mono else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def _power(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


class BiPoly:
    """Polynomial in x and y with integer coefficients.

    Stored as ``{(i, j): c}`` for the term ``c * x^i * y^j``; zero
    coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {tuple(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a + a2, b + b2)
                out[k] = out.get(k, 0) + c * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BiPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def swap(self) -> BiPoly:
        """The polynomial with x and y exchanged."""
        return BiPoly({(b, a): c for (a, b), c in self._terms.items()})

    def __call__(self, x0: int, y0: int) -> int:
        return eval_bipoly(self, x0, y0)

    def __str__(self):
        # descending x-degree, then ascending y-degree
        keys = sorted(self._terms, key=lambda k: (-k[0], k[1]))
        return _join(
            (self._terms[k], "*".join(p for p in (_power("x", k[0]), _power("y", k[1])) if p))
            for k in keys
        )

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def eval_bipoly(p: BiPoly, x0: int, y0: int) -> int:
    return sum(c * x0 ** a * y0 ** b for (a, b), c in p.terms.items())


def shifted_powers(shift: int, scale: int, n: int) -> list[int]:
    """Coefficients of (shift + scale*q)^n, lowest degree first."""
    return [comb(n, i) * shift ** (n - i) * scale ** i for i in range(n + 1)]


class UniPoly:
    """Polynomial in q; ``coeffs[i]`` is the coefficient of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> UniPoly:
        """Multiply by q^k."""
        return UniPoly((0,) * k + self.coeffs) if self.coeffs else self

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __str__(self):
        n = len(self.coeffs)
        return _join(
            (self.coeffs[i], _power("q", i)) for i in reversed(range(n)) if self.coeffs[i]
        )

    def __repr__(self):
        return f"UniPoly({str(self)!r})"
