"""Exact integer-coefficient polynomials in one variable.

Coefficients are plain Python ints (unbounded); index i holds the
coefficient of m**i.  JSON form keeps coefficients as decimal strings so
values beyond 64 bits survive any consumer.
"""

from __future__ import annotations

from dataclasses import dataclass


def _trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        return cls(_trim(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls.from_coeffs((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial.from_coeffs(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial.from_coeffs(
            (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial.from_coeffs(out)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, m: int) -> int:
        """Exact Horner evaluation."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def signs_alternate(self) -> bool:
        """True when coefficient k has sign (-1)**(degree-k) or is zero."""
        deg = self.degree()
        return all(c * (-1) ** (deg - k) >= 0 for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPolynomial":
        return cls.from_coeffs(int(c) for c in obj["coeffs"])


def eval_poly(p: IntPolynomial, m: int) -> int:
    if m < 0:
        raise ValueError("evaluation point must be a nonnegative integer")
    return p.evaluate(m)
