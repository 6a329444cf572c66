from fractions import Fraction
from numbers import Integral
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

VARIABLES = ("A", "t")


class LaurentPolynomial(BaseModel):
    """
    Exact Laurent polynomial with integer coefficients in one variable.

    Exponents are stored DOUBLED so that half-integer powers (Jones
    polynomials of links with an even number of components) stay exact:
    ``terms[3] == 2`` means ``2·t^(3/2)``. The zero polynomial has no terms.
    """

    model_config = ConfigDict(frozen=True)

    variable: str = "t"
    terms: Dict[int, int] = {}

    @field_validator("variable")
    @classmethod
    def _known_variable(cls, value: str) -> str:
        if value not in VARIABLES:
            raise ValueError(f"variable must be one of {VARIABLES}")
        return value

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, value: Dict[int, int]) -> Dict[int, int]:
        return {int(e): int(c) for e, c in value.items() if c != 0}

    # ---------- construction ----------
    @classmethod
    def _build(cls, variable: str, terms: Dict[int, int]) -> "LaurentPolynomial":
        return cls.model_construct(variable=variable, terms={e: c for e, c in terms.items() if c != 0})

    @classmethod
    def constant(cls, value: int, variable: str = "t") -> "LaurentPolynomial":
        return cls._build(variable, {0: int(value)})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, variable: str = "t") -> "LaurentPolynomial":
        """``coefficient · variable^exponent`` for an integer exponent."""
        return cls._build(variable, {2 * exponent: int(coefficient)})

    @classmethod
    def from_coefficients(cls, coefficients: Dict[int, int], variable: str = "t") -> "LaurentPolynomial":
        """Build from integer (not doubled) exponents."""
        return cls._build(variable, {2 * e: int(c) for e, c in coefficients.items()})

    # ---------- queries ----------
    def __hash__(self) -> int:
        return hash((self.variable, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    @property
    def min_exponent2(self) -> int:
        return min(self.terms)

    @property
    def max_exponent2(self) -> int:
        return max(self.terms)

    def value_at_one(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.terms.items()))

    # ---------- arithmetic ----------
    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.variable != self.variable and other.terms and self.terms:
                if not (other.is_constant() or self.is_constant()):
                    raise ValueError(f"cannot combine polynomials in {self.variable} and {other.variable}")
            return other
        if isinstance(other, Integral):
            return LaurentPolynomial.constant(int(other), self.variable)
        return NotImplemented

    def is_constant(self) -> bool:
        return all(e == 0 for e in self.terms)

    def _result_variable(self, other: "LaurentPolynomial") -> str:
        if self.is_constant() and not other.is_constant():
            return other.variable
        return self.variable

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial._build(self._result_variable(other), terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._build(self.variable, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial._build(self._result_variable(other), terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial._build(self.variable, {-e * -exponent: c ** -exponent})
        result = LaurentPolynomial.constant(1, self.variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponent2: int) -> "LaurentPolynomial":
        """Multiply by ``variable^(exponent2 / 2)``."""
        return LaurentPolynomial._build(self.variable, {e + exponent2: c for e, c in self.terms.items()})

    def reflect(self) -> "LaurentPolynomial":
        """Substitute ``variable -> variable^-1``."""
        return LaurentPolynomial._build(self.variable, {-e: c for e, c in self.terms.items()})

    def rescale(self, variable: str, factor: Fraction) -> "LaurentPolynomial":
        """Substitute ``x -> y^factor``; every rescaled doubled exponent must be an integer."""
        terms: Dict[int, int] = {}
        for e, c in self.terms.items():
            scaled = Fraction(e) * factor
            if scaled.denominator != 1:
                raise ValueError(f"exponent {Fraction(e, 2)} does not rescale by {factor} to a half-integer")
            terms[int(scaled)] = terms.get(int(scaled), 0) + c
        return LaurentPolynomial._build(variable, terms)

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Quotient of an exact division; raises ``ArithmeticError`` when a remainder is left."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial._build(self.variable, {})
        lead_e = divisor.max_exponent2
        lead_c = divisor.terms[lead_e]
        floor = self.min_exponent2 - divisor.min_exponent2
        remainder = dict(self.terms)
        quotient: Dict[int, int] = {}
        while remainder:
            top = max(remainder)
            coeff = remainder[top]
            q_e = top - lead_e
            if q_e < floor or coeff % lead_c:
                raise ArithmeticError("division is not exact")
            q_c = coeff // lead_c
            quotient[q_e] = q_c
            for e, c in divisor.terms.items():
                key = e + q_e
                value = remainder.get(key, 0) - q_c * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentPolynomial._build(self._result_variable(divisor), quotient)

    # ---------- rendering ----------
    def _power_text(self, exponent2: int) -> str:
        if exponent2 % 2:
            return f"{self.variable}^({exponent2}/2)"
        exponent = exponent2 // 2
        if exponent == 1:
            return self.variable
        return f"{self.variable}^{exponent}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in sorted(self.terms.items()):
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            elif magnitude == 1:
                body = self._power_text(e)
            else:
                body = f"{magnitude}{self._power_text(e)}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)
