"""
    Author: perichain contributors
    Date: 2026.10
"""

from typing import Callable, Dict, Hashable, Iterable, List, Tuple, Union

from perichain.algebra.laurent import LaurentScalar, ONE, ZERO

Scalar = Union[LaurentScalar, int]


class SparseVector:
    """
    SparseVector is the base class of every finitely supported vector in this toolkit: Hecke algebra elements over
    the basis {t_w}, periodic vectors over alcoves, tensor vectors over {u_gamma} and quotient vectors over the
    tensor basis indices. It stores a dict {basis key: LaurentScalar} without zero values and is immutable.

    Subclasses only decide what their keys are. Two hooks may be overridden:
    1. key_order() gives the sort key used by items(), so that every serialization is deterministic.
    2. key_record() turns a key into a JSON-friendly object for reports.

    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Hashable, Scalar] = None):
        self._terms = {}
        if terms is not None:
            for key, coef in terms.items():
                coef = LaurentScalar.coerce(coef)
                if coef:
                    self._terms[key] = coef
        self._hash = None

    @classmethod
    def basis(cls, key: Hashable, coef: Scalar = ONE):
        return cls({key: coef})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Hashable, Scalar]]):
        """Sum of possibly repeated (key, coefficient) pairs."""
        terms = {}
        for key, coef in pairs:
            terms[key] = terms.get(key, ZERO) + LaurentScalar.coerce(coef)
        return cls(terms)

    # --- hooks --- #
    @staticmethod
    def key_order(key):
        return key

    @staticmethod
    def key_record(key):
        return key

    # --- structure --- #
    def _new(self, terms: Dict[Hashable, LaurentScalar]):
        return type(self)(terms)

    @property
    def terms(self) -> Dict[Hashable, LaurentScalar]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Hashable, LaurentScalar]]:
        return sorted(self._terms.items(), key=lambda kv: self.key_order(kv[0]))

    def support(self) -> List[Hashable]:
        return [key for key, _ in self.items()]

    def coefficient(self, key: Hashable) -> LaurentScalar:
        return self._terms.get(key, ZERO)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return len(self._terms) > 0

    def is_zero(self) -> bool:
        return len(self._terms) == 0

    # --- linear structure --- #
    def __add__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        terms = dict(self._terms)
        for key, coef in other._terms.items():
            terms[key] = terms.get(key, ZERO) + coef
        return self._new(terms)

    def __neg__(self):
        return self._new({key: -coef for key, coef in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar):
        factor = LaurentScalar.coerce(factor)
        if not factor:
            return self._new({})
        return self._new({key: factor * coef for key, coef in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (LaurentScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentScalar, int)):
            return self.scale(other)
        return NotImplemented

    def map_keys(self, key_map: Callable[[Hashable], Hashable]):
        """Linear extension of a map on basis keys; colliding keys are summed."""
        return self._new_from_pairs((key_map(key), coef) for key, coef in self._terms.items())

    def _new_from_pairs(self, pairs: Iterable[Tuple[Hashable, LaurentScalar]]):
        terms = {}
        for key, coef in pairs:
            terms[key] = terms.get(key, ZERO) + coef
        return self._new(terms)

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # --- serialization --- #
    def to_records(self) -> List[list]:
        return [[self.key_record(key), coef.to_pairs()] for key, coef in self.items()]

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"({coef})*{key}" for key, coef in self.items())
        return f"{type(self).__name__}({body})"
