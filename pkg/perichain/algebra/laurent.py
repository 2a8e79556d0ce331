"""
    Author: perichain contributors
    Date: 2026.10

    Exact arithmetic in the ring of Laurent polynomials Z[q, q^-1], the bar involution q -> q^-1 and the
    triangularity predicates used by both canonical-basis eliminations.
"""

from typing import Dict, Iterable, List, Tuple, Union


class LaurentScalar:
    """
    Immutable sparse Laurent polynomial with integer coefficients, stored as a dict {exponent: coefficient}.
    Zero coefficients are stripped eagerly, so two scalars are equal iff their dicts are equal.

    Integers are accepted wherever a LaurentScalar is expected in the arithmetic operators.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Dict[int, int] = None):
        if coeffs is None:
            coeffs = {}
        self._coeffs = {int(e): int(c) for e, c in coeffs.items() if c != 0}
        self._hash = None

    # --- constructors --- #
    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentScalar":
        return cls({exponent: coefficient})

    @classmethod
    def from_int(cls, value: int) -> "LaurentScalar":
        return cls({0: value})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "LaurentScalar":
        coeffs = {}
        for e, c in pairs:
            coeffs[e] = coeffs.get(e, 0) + c
        return cls(coeffs)

    @classmethod
    def coerce(cls, value: Union["LaurentScalar", int]) -> "LaurentScalar":
        if isinstance(value, LaurentScalar):
            return value
        if isinstance(value, int):
            return cls.from_int(value)
        raise TypeError(f"Cannot interpret {value!r} of type {type(value)} as a LaurentScalar!")

    # --- structure --- #
    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __bool__(self):
        return len(self._coeffs) > 0

    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    def degree(self) -> int:
        assert self._coeffs, "The zero polynomial has no degree!"
        return max(self._coeffs)

    def valuation(self) -> int:
        assert self._coeffs, "The zero polynomial has no valuation!"
        return min(self._coeffs)

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    # --- ring operations --- #
    def __add__(self, other):
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentScalar(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        coeffs = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(coeffs)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            # only units of Z[q, q^-1] can be inverted
            assert self.is_monomial() and abs(next(iter(self._coeffs.values()))) == 1, (
                f"{self} is not a unit, so it cannot be raised to the negative power {power}!"
            )
            (e, c), = self._coeffs.items()
            return LaurentScalar({e * power: c ** (-power)})
        result = ONE
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentScalar.from_int(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._coeffs.items())))
        return self._hash

    def shift(self, exponent: int) -> "LaurentScalar":
        """Multiplication by q^exponent."""
        return LaurentScalar({e + exponent: c for e, c in self._coeffs.items()})

    def exact_div(self, other: Union["LaurentScalar", int]) -> "LaurentScalar":
        """
        Exact division in Z[q, q^-1] by long division from the top degree.

        Raises:
            ArithmeticError: if the quotient is not a Laurent polynomial with integer coefficients.
        """
        other = LaurentScalar.coerce(other)
        assert other, "Division by the zero polynomial!"
        if not self:
            return ZERO
        lead_deg, lead_coef = other.degree(), other[other.degree()]
        lowest = self.valuation() - other.valuation()
        remainder, quotient = dict(self._coeffs), {}
        while remainder:
            top = max(remainder)
            shift = top - lead_deg
            if shift < lowest or remainder[top] % lead_coef != 0:
                raise ArithmeticError(f"{self} is not divisible by {other} in Z[q, q^-1]!")
            factor = remainder[top] // lead_coef
            quotient[shift] = factor
            for e, c in other._coeffs.items():
                remainder[e + shift] = remainder.get(e + shift, 0) - factor * c
                if remainder[e + shift] == 0:
                    remainder.pop(e + shift)
        return LaurentScalar(quotient)

    # --- bar involution and lattice predicates --- #
    def bar(self) -> "LaurentScalar":
        return LaurentScalar({-e: c for e, c in self._coeffs.items()})

    def is_bar_fixed(self) -> bool:
        return all(self._coeffs.get(-e, 0) == c for e, c in self._coeffs.items())

    def is_sub_unitriangular(self) -> bool:
        """True iff every exponent is <= -1, i.e. the scalar lies in q^-1 Z[q^-1]."""
        return all(e <= -1 for e in self._coeffs)

    def is_super_unitriangular(self) -> bool:
        """True iff every exponent is >= 1, i.e. the scalar lies in q Z[q]."""
        return all(e >= 1 for e in self._coeffs)

    def negative_part(self) -> "LaurentScalar":
        return LaurentScalar({e: c for e, c in self._coeffs.items() if e < 0})

    def positive_part(self) -> "LaurentScalar":
        return LaurentScalar({e: c for e, c in self._coeffs.items() if e > 0})

    def symmetric_completion(self) -> "LaurentScalar":
        """
        The bar-fixed r with self - r in q^-1 Z[q^-1]:
        r = a_0 + sum_{n>0} a_n (q^n + q^-n) where self = sum a_n q^n.
        """
        coeffs = {}
        for e, c in self._coeffs.items():
            if e == 0:
                coeffs[0] = coeffs.get(0, 0) + c
            elif e > 0:
                coeffs[e] = coeffs.get(e, 0) + c
                coeffs[-e] = coeffs.get(-e, 0) + c
        return LaurentScalar(coeffs)

    # --- serialization --- #
    def to_pairs(self) -> List[List[int]]:
        """Ascending list of [exponent, coefficient] pairs."""
        return [[e, c] for e, c in sorted(self._coeffs.items())]

    def to_latex(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                body = str(abs(c))
            else:
                power = "q" if e == 1 else f"q^{{{e}}}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head_body = terms[0]
        latex = ("-" if head_sign == "-" else "") + head_body
        for sign, body in terms[1:]:
            latex += f" {sign} {body}"
        return latex

    def __repr__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts)


ZERO = LaurentScalar()
ONE = LaurentScalar.from_int(1)
Q = LaurentScalar.monomial(1)
QINV = LaurentScalar.monomial(-1)
# the Hecke structure constant q - q^-1
QDIFF = Q - QINV


def q_power(exponent: int, coefficient: int = 1) -> LaurentScalar:
    return LaurentScalar.monomial(exponent, coefficient)


def neg_q_power(exponent: int) -> LaurentScalar:
    """(-q)^exponent."""
    return LaurentScalar.monomial(exponent, -1 if exponent % 2 else 1)


def bar_scalar(f: LaurentScalar) -> LaurentScalar:
    return f.bar()


def is_sub_unitriangular(f: LaurentScalar) -> bool:
    return f.is_sub_unitriangular()


def symmetric_completion(f: LaurentScalar) -> LaurentScalar:
    return f.symmetric_completion()


def q_integer(n: int) -> LaurentScalar:
    """The balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    assert n >= 0, f"Quantum integers are only used for n >= 0, but got {n}!"
    return LaurentScalar({n - 1 - 2 * k: 1 for k in range(n)})


def q_factorial(n: int) -> LaurentScalar:
    result = ONE
    for k in range(1, n + 1):
        result = result * q_integer(k)
    return result
