"""
    Author: perichain contributors
    Date: 2026.10

    Exact linear algebra over the field of fractions Q(q).

    Every solve goes through sympy's DomainMatrix over QQ.frac_field(q), and every answer that should be a Laurent
    polynomial is brought back to a LaurentScalar with an explicit integrality check.
"""

import logging
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from sympy import Poly, Symbol, cancel, fraction
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from perichain import ConventionError, SpanError
from perichain.algebra.laurent import LaurentScalar
from perichain.module.abs import SparseVector

logger = logging.getLogger(__name__)

Q_SYMBOL = Symbol("q")
FIELD = QQ.frac_field(Q_SYMBOL)


# --- conversions --- #
def to_field(f: LaurentScalar):
    f = LaurentScalar.coerce(f)
    return FIELD.from_sympy(sum((c * Q_SYMBOL ** e for e, c in f.items()), 0))


def from_field(a) -> LaurentScalar:
    """
    Converts an element of Q(q) back to a LaurentScalar.

    Raises:
        ConventionError: if the element is not an integral Laurent polynomial.
    """
    if a == FIELD.zero:
        return LaurentScalar()
    num, den = fraction(cancel(FIELD.to_sympy(a)))
    den_terms = Poly(den, Q_SYMBOL).terms()
    if len(den_terms) != 1:
        raise ConventionError(f"{FIELD.to_sympy(a)} is not a Laurent polynomial: its denominator is not a monomial!")
    (shift,), lead = den_terms[0]
    coeffs = {}
    for (exponent,), coef in Poly(num, Q_SYMBOL).terms():
        value = coef / lead
        if not value.is_integer:
            raise ConventionError(f"{FIELD.to_sympy(a)} has the non-integral coefficient {value}!")
        coeffs[exponent - shift] = int(value)
    return LaurentScalar(coeffs)


def field_bar(a):
    """The involution q -> q^-1 on Q(q)."""
    if a == FIELD.zero:
        return a
    return FIELD.from_sympy(cancel(FIELD.to_sympy(a).subs(Q_SYMBOL, 1 / Q_SYMBOL)))


# --- matrices --- #
def column_matrix(vectors: Sequence[SparseVector], keys: Sequence[Hashable]) -> DomainMatrix:
    """The matrix whose j-th column holds the coefficients of vectors[j] along keys."""
    rows = [[to_field(v.coefficient(key)) for v in vectors] for key in keys]
    return DomainMatrix(rows, (len(keys), len(vectors)), FIELD)


def joint_keys(vectors: Sequence[SparseVector]) -> List[Hashable]:
    keys = {}
    order = None
    for v in vectors:
        order = type(v).key_order
        for key in v.terms:
            keys[key] = None
    return sorted(keys, key=order) if order is not None else []


def independent_subset(vectors: Sequence[SparseVector]) -> List[int]:
    """Indices of a maximal Q(q)-linearly independent subfamily, chosen greedily from the left."""
    vectors = [v for v in vectors]
    if not vectors:
        return []
    keys = joint_keys(vectors)
    if not keys:
        return []
    _, pivots = column_matrix(vectors, keys).rref()
    return list(pivots)


def rank(vectors: Sequence[SparseVector]) -> int:
    return len(independent_subset(vectors))


class SpanSolver:
    """
    Expresses vectors in the Q(q)-span of a fixed family.

    The family is first thinned to an independent subfamily, so each solve has a unique answer.
    The answer does not depend on which subfamily was kept whenever the members are fixed by a
    semilinear involution, which is the only way transport_bar() is meant to be used.
    """

    def __init__(self, family: Sequence[SparseVector]):
        family = [v for v in family if not v.is_zero()]
        pivots = independent_subset(family)
        self.basis: List[SparseVector] = [family[j] for j in pivots]
        logger.debug(f"SpanSolver keeps {len(self.basis)} of {len(family)} family vectors.")

    def __len__(self):
        return len(self.basis)

    def express(self, target: SparseVector) -> List:
        """
        The unique coordinates of target in Q(q) along self.basis.

        Raises:
            SpanError: if target is not in the span.
        """
        if target.is_zero():
            return [FIELD.zero] * len(self.basis)
        keys = joint_keys(self.basis + [target])
        outside = [key for key in target.terms if all(key not in b for b in self.basis)]
        if outside or not self.basis:
            raise SpanError(f"The support of {target} leaves the span of the family at {outside[:3]}!")
        k = len(self.basis)
        reduced, pivots = column_matrix(self.basis + [target], keys).rref()
        if k in pivots:
            raise SpanError(f"{target} is not in the span of the family!")
        assert tuple(pivots) == tuple(range(k)), f"The kept family is not independent: pivots {pivots}!"
        entries = reduced.to_Matrix()
        return [FIELD.from_sympy(entries[j, k]) for j in range(k)]

    def combine(self, coefficients: Sequence) -> SparseVector:
        """sum_j c_j b_j for field coefficients that must combine to a Laurent vector."""
        keys = joint_keys(self.basis)
        result = {}
        for key in keys:
            total = FIELD.zero
            for coef, b in zip(coefficients, self.basis):
                if coef != FIELD.zero and key in b:
                    total += coef * to_field(b.coefficient(key))
            if total != FIELD.zero:
                result[key] = from_field(total)
        return type(self.basis[0])(result)

    def transport_bar(self, target: SparseVector) -> SparseVector:
        """sum_j bar(a_j) b_j for target = sum_j a_j b_j."""
        if target.is_zero():
            return target
        return self.combine([field_bar(a) for a in self.express(target)])


class EchelonSpan:
    """
    The reduced row echelon basis of the Q(q)-span of a family, with the keys sorted by order so that every row
    starts at its leading key and only reaches later keys. Each row keeps its coordinates along the family.

    For a family fixed by a semilinear involution iota, bar_row(key) returns iota of the row led by key, namely
    sum_j bar(m_j) b_j for the row sum_j m_j b_j.
    """

    def __init__(self, family: Sequence[SparseVector], order: Callable[[Hashable], object]):
        self.family = [v for v in family if not v.is_zero()]
        self.keys = sorted(joint_keys(self.family), key=order)
        self.rows: Dict[Hashable, Dict[Hashable, object]] = {}
        self.coordinates: Dict[Hashable, List] = {}
        self._bar_rows: Dict[Hashable, Dict[Hashable, object]] = {}
        n, k = len(self.family), len(self.keys)
        if not n or not k:
            return
        rows = [
            [to_field(v.coefficient(key)) for key in self.keys] + [FIELD.one if i == j else FIELD.zero
                                                                 for j in range(n)]
            for i, v in enumerate(self.family)
        ]
        reduced, pivots = DomainMatrix(rows, (n, k + n), FIELD).rref()
        entries = reduced.to_Matrix()
        for i, column in enumerate(pivots):
            if column >= k:
                break
            row = {}
            for col in range(column, k):
                if entries[i, col] != 0:
                    row[self.keys[col]] = FIELD.from_sympy(entries[i, col])
            lead = self.keys[column]
            self.rows[lead] = row
            self.coordinates[lead] = [FIELD.from_sympy(entries[i, k + j]) for j in range(n)]
        logger.debug(f"EchelonSpan: {len(self.rows)} leading keys out of {k} keys and {n} family vectors.")

    def __len__(self):
        return len(self.rows)

    def __contains__(self, key: Hashable) -> bool:
        return key in self.rows

    def tail(self, key: Hashable) -> List[Hashable]:
        """The keys of the row led by key other than key itself."""
        return [other for other in self.rows[key] if other != key]

    def bar_row(self, key: Hashable) -> Dict[Hashable, object]:
        if key not in self._bar_rows:
            image = {}
            for coef, b in zip(self.coordinates[key], self.family):
                if coef == FIELD.zero:
                    continue
                coef = field_bar(coef)
                for other, value in b.terms.items():
                    image[other] = image.get(other, FIELD.zero) + coef * to_field(value)
            self._bar_rows[key] = {other: value for other, value in image.items() if value != FIELD.zero}
        return self._bar_rows[key]

    def combine(self, coefficients: Dict[Hashable, LaurentScalar]) -> Dict[Hashable, object]:
        """The vector of the span whose coefficient at every leading key is given by coefficients (zero elsewhere)."""
        vector = {}
        for lead, coef in coefficients.items():
            coef = to_field(coef)
            for key, value in self.rows[lead].items():
                vector[key] = vector.get(key, FIELD.zero) + coef * value
        return {key: value for key, value in vector.items() if value != FIELD.zero}

    def residual(self, target: SparseVector) -> Dict[Hashable, object]:
        """target minus its projection along the leading keys; empty iff target lies in the span."""
        rest = {key: to_field(value) for key, value in target.terms.items()}
        for key, value in target.terms.items():
            if key not in self.rows:
                continue
            coef = to_field(value)
            for other, entry in self.rows[key].items():
                rest[other] = rest.get(other, FIELD.zero) - coef * entry
        return {key: value for key, value in rest.items() if value != FIELD.zero}

    def transport_bar(self, target: SparseVector) -> SparseVector:
        """
        sum_j bar(a_j) b_j for target = sum_j a_j b_j, exact.

        Raises:
            SpanError: if target is not in the span.
        """
        rest = self.residual(target)
        if rest:
            raise SpanError(f"The vector leaves the span of the family at {list(rest)[:3]}!")
        image = {}
        for key, value in target.terms.items():
            if key not in self.rows:
                continue
            coef = field_bar(to_field(value))
            for other, entry in self.bar_row(key).items():
                image[other] = image.get(other, FIELD.zero) + coef * entry
        return type(target)({key: from_field(value) for key, value in image.items() if value != FIELD.zero})


def solve_triangular(pivot_of: Callable[[Hashable], Optional[SparseVector]], target: SparseVector, order,
                     below: Callable[[Hashable], bool] = None,
                     max_steps: int = 100000) -> Tuple[Dict[Hashable, LaurentScalar], SparseVector]:
    """
    Writes target as a Z[q, q^-1]-combination of vectors with unit leading coefficients.

    Args:
        pivot_of: leading key -> vector whose coefficient at that key is 1 and whose other keys come earlier in
            order, or None if no such vector is available
        target: the vector to decompose
        order: sort key on basis keys; the largest remaining key is cleared first
        below: optional cut; the solve stops once the largest remaining key satisfies it, so the coordinates are
            exact for every key above the cut and the remainder only holds keys below it
        max_steps: guard against runaway descent

    Returns:
        (coordinates {leading key: coefficient}, remainder). Without a cut the remainder is zero iff the solve
        succeeded.
    """
    coordinates, remainder = {}, target
    for _ in range(max_steps):
        if remainder.is_zero():
            break
        top = max(remainder.terms, key=order)
        if below is not None and below(top):
            break
        pivot = pivot_of(top)
        if pivot is None:
            break
        coef = remainder.coefficient(top)
        coordinates[top] = coordinates.get(top, LaurentScalar()) + coef
        remainder = remainder - pivot.scale(coef)
    else:
        raise SpanError(f"The triangular solve did not finish within {max_steps} steps!")
    return coordinates, remainder
