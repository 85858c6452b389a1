"""Dense univariate polynomials with exact integer coefficients.

A polynomial is stored as a tuple of coefficients in ascending exponent
order: index i holds the coefficient of y**i.  The representation is
canonical -- the stored leading coefficient is nonzero -- and the zero
polynomial is the empty tuple, with degree -1 standing in for "minus
infinity".  Values are immutable and safe to share between threads.

Division is restricted to monic divisors so that every intermediate value
stays an integer; a non-monic divisor raises instead of silently falling
back to rationals.  All divisors that appear in this package (cyclotomic
polynomials, y - 1, y**b - 1) are monic.

The canonical text form used by every table emitter writes terms in
descending exponent with explicit signs, suppresses coefficient 1 and
writes exponent 1 as plain "y": e.g. "y^3 - 3y^2 + 3y - 1".
"""

from __future__ import annotations

from typing import Iterable, Iterator


class IntPoly:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        return IntPoly([0] * exponent + [coefficient])

    @staticmethod
    def from_terms(terms: Iterable[tuple[int, int]]) -> IntPoly:
        """Build from (exponent, coefficient) pairs; repeats accumulate."""
        pairs = list(terms)
        cs = [0] * (max((e for e, _ in pairs), default=-1) + 1)
        for e, c in pairs:
            cs[e] += c
        return IntPoly(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder for a monic divisor; everything integral.

        Returns (q, r) with self = divisor*q + r and deg r < deg divisor.
        """
        if divisor.is_zero():
            raise ValueError("division by the zero polynomial")
        if not divisor.is_monic():
            raise ValueError("divisor must be monic for integral division")
        dd = divisor.degree
        dc = divisor.coeffs
        rem = list(self.coeffs)
        if len(rem) <= dd:
            return IntPoly(), self
        quo = [0] * (len(rem) - dd)
        for i in range(len(rem) - dd - 1, -1, -1):
            top = rem[i + dd]
            if top:
                quo[i] = top
                for j in range(dd):
                    rem[i + j] -= top * dc[j]
                rem[i + dd] = 0
        return IntPoly(quo), IntPoly(rem[:dd])

    def reduce_cyclic(self, b: int) -> IntPoly:
        """Fold exponents modulo b, i.e. reduce modulo y**b - 1."""
        if b < 1:
            raise ValueError("reduce_cyclic requires b >= 1")
        cs = self.coeffs
        if len(cs) <= b:
            return self
        return IntPoly([sum(cs[j::b]) for j in range(b)])

    def __call__(self, x: int) -> int:
        """Exact evaluation at an integer (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPoly:
        """Multiply by y**k."""
        if k < 0:
            raise ValueError("shift requires k >= 0")
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def inflate(self, k: int) -> IntPoly:
        """Substitute y -> y**k."""
        if k < 1:
            raise ValueError("inflate requires k >= 1")
        if k == 1 or self.is_zero():
            return self
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    def alternate(self) -> IntPoly:
        """Substitute y -> -y (negate odd-exponent coefficients)."""
        return IntPoly([-c if i % 2 else c for i, c in enumerate(self.coeffs)])

    def render(self) -> str:
        """Canonical text form, e.g. "y^3 - 3y^2 + 3y - 1"."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "y" if e == 1 else f"y^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"IntPoly({self.render()!r})"


ZERO = IntPoly()
ONE = IntPoly([1])
Y = IntPoly([0, 1])
Y_MINUS_1 = IntPoly([-1, 1])


def y_power_minus_1(n: int) -> IntPoly:
    """y**n - 1."""
    if n < 1:
        raise ValueError("y_power_minus_1 requires n >= 1")
    return IntPoly([-1] + [0] * (n - 1) + [1])
