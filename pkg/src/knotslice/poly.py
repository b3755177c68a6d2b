"""Exact sparse Laurent polynomials with integer coefficients.

Two tiny classes cover everything the invariant engine needs: one- and
two-variable Laurent polynomials stored as {exponent: coefficient} maps.
Zero coefficients are never stored, so equality is structural.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Tuple


class Laurent1:
    """Laurent polynomial in one variable with int coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def term(cls, coef: int, exp: int = 0) -> "Laurent1":
        return cls({exp: coef})

    @classmethod
    def zero(cls) -> "Laurent1":
        return cls()

    @classmethod
    def one(cls) -> "Laurent1":
        return cls({0: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Laurent1") -> "Laurent1":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent1(out)

    def __neg__(self) -> "Laurent1":
        return Laurent1({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Laurent1") -> "Laurent1":
        return self + (-other)

    def __mul__(self, other: "Laurent1") -> "Laurent1":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent1(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent1) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, value: int):
        """Evaluate at an integer (or Fraction) value; value must be invertible
        if negative exponents are present."""
        total = 0
        for e, c in self.coeffs.items():
            total += c * value**e
        return total

    def reciprocal(self) -> "Laurent1":
        """Substitute t -> 1/t."""
        return Laurent1({-e: c for e, c in self.coeffs.items()})

    def to_string(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c} {var}^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Laurent1({self.to_string()})"


class Laurent2:
    """Laurent polynomial in two variables with int coefficients.

    Exponent keys are (a, b) pairs; which variables they stand for
    (t/q for Poincare polynomials, v/z for HOMFLY) is up to the caller.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Tuple[int, int], int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def term(cls, coef: int, a: int = 0, b: int = 0) -> "Laurent2":
        return cls({(a, b): coef})

    @classmethod
    def zero(cls) -> "Laurent2":
        return cls()

    @classmethod
    def one(cls) -> "Laurent2":
        return cls({(0, 0): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Laurent2") -> "Laurent2":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent2(out)

    def __neg__(self) -> "Laurent2":
        return Laurent2({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Laurent2") -> "Laurent2":
        return self + (-other)

    def __mul__(self, other: "Laurent2") -> "Laurent2":
        out: dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent2(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent2) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def scale(self, coef: int, a: int = 0, b: int = 0) -> "Laurent2":
        """Multiply by a single monomial coef * x^a y^b."""
        return Laurent2({(e0 + a, e1 + b): c * coef for (e0, e1), c in self.coeffs.items()})

    def exponents(self, var: int) -> Iterable[int]:
        return (e[var] for e in self.coeffs)

    def min_exp(self, var: int) -> int:
        return min(self.exponents(var))

    def max_exp(self, var: int) -> int:
        return max(self.exponents(var))

    def swap_var_sign(self, var: int) -> "Laurent2":
        """Substitute x -> 1/x in the chosen variable."""
        if var == 0:
            return Laurent2({(-a, b): c for (a, b), c in self.coeffs.items()})
        return Laurent2({(a, -b): c for (a, b), c in self.coeffs.items()})

    def to_string(self, vars: Tuple[str, str] = ("v", "z")) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for a, b in sorted(self.coeffs):
            c = self.coeffs[(a, b)]
            piece = f"{c}"
            if a != 0:
                piece += f" {vars[0]}^{a}"
            if b != 0:
                piece += f" {vars[1]}^{b}"
            parts.append(piece)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Laurent2({self.to_string()})"
