"""
    Author: perichain contributors
    Date: 2026.10

    Seeded random checks of the defining relations: the Hecke relations in the t_w basis, the weight and Serre
    relations of U on V^{(x)d}, the parabolic identities of rho_f and the commutation of the U- and H-actions.
"""

import logging
import random
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from tqdm import tqdm

from perichain.algebra.hecke import HeckeElt, nu, pi, rho, t, t_simple, unit, x_generator
from perichain.algebra.laurent import LaurentScalar, ONE, QDIFF, q_power
from perichain.lattice.rootdata import compositions
from perichain.lattice.weyl import compose, pi_power_elt, simple
from perichain.module.tensor import Generator, TensorVector, act_word, chevalley_act, hecke_right_act
from perichain.verifier.abs import Verifier

logger = logging.getLogger(__name__)

Relation = Tuple[str, HeckeElt, HeckeElt]
VectorRelation = Tuple[str, Callable[[TensorVector], TensorVector], Callable[[TensorVector], TensorVector]]


# --- random instances --- #
def random_tensor(rng: random.Random, d: int, p: int, max_terms: int = 3) -> TensorVector:
    return TensorVector.from_terms(
        (tuple(rng.randint(-p, 2 * p) for _ in range(d)), q_power(rng.randint(-2, 2), rng.choice((-1, 1))))
        for _ in range(rng.randint(1, max_terms))
    )


def random_left_factor(rng: random.Random, d: int, max_length: int = 3) -> HeckeElt:
    """t_w for w = pi^k s_{i_1} ... s_{i_r} with random k in {-1, 0, 1} and r <= max_length."""
    w = pi_power_elt(rng.randint(-1, 1), d)
    for _ in range(rng.randint(0, max_length)):
        w = compose(w, simple(rng.randint(1, d), d))
    return t(w)


# --- the Hecke relations --- #
def _cyclic_distance(i: int, j: int, d: int) -> int:
    gap = abs(i - j) % d
    return min(gap, d - gap)


@lru_cache(maxsize=None)
def hecke_relations(d: int) -> Tuple[Relation, ...]:
    """
    (name, lhs, rhs) for the quadratic, braid and far-commutation relations of t_1, ..., t_d, the Bernstein
    relations of the x_i and pi t_i pi^-1 = t_{i+1}.
    """
    assert d >= 2, f"The Hecke relations are checked for d >= 2, but got d={d}!"
    one = unit(d)
    ts = {i: t_simple(i, d) for i in range(1, d + 1)}
    xs = {i: x_generator(i, d, 1) for i in range(1, d + 1)}
    relations: List[Relation] = []
    for i in range(1, d + 1):
        relations.append((f"quadratic t{i}", ts[i] * ts[i], ts[i].scale(QDIFF) + one))
        relations.append((f"pi t{i} pi^-1", pi(d) * ts[i] * pi(d, -1), ts[i % d + 1]))
        relations.append((f"x{i} x{i}^-1", xs[i] * x_generator(i, d, -1), one))
        if d >= 3:
            j = i % d + 1
            relations.append((f"braid t{i} t{j}", ts[i] * ts[j] * ts[i], ts[j] * ts[i] * ts[j]))
        for j in range(i + 1, d + 1):
            if _cyclic_distance(i, j, d) >= 2:
                relations.append((f"commute t{i} t{j}", ts[i] * ts[j], ts[j] * ts[i]))
            relations.append((f"commute x{i} x{j}", xs[i] * xs[j], xs[j] * xs[i]))
    for i in range(1, d):
        relations.append((f"bernstein t{i} x{i} t{i}", ts[i] * xs[i] * ts[i], xs[i + 1]))
        for j in range(1, d + 1):
            if j not in (i, i + 1):
                relations.append((f"commute t{i} x{j}", ts[i] * xs[j], xs[j] * ts[i]))
    return tuple(relations)


# --- the relations of U on the tensor space --- #
def cartan_entry(a: int, b: int, p: int) -> int:
    """(beta_a : beta_b) for the simple roots of the affine root datum of gl_p."""
    return 2 * (a == b) - (a % p + 1 == b) - (a == b % p + 1)


def weight_pairing(a: int, b: int, p: int) -> int:
    """<eps_a, beta_b>."""
    return (a == b) - (a == b % p + 1)


def _zero(v: TensorVector) -> TensorVector:
    return TensorVector()


def _k_bracket(a: int, p: int) -> Callable[[TensorVector], TensorVector]:
    """v -> (k_a - k_a^-1) / (q - q^-1) v."""
    def apply(v: TensorVector) -> TensorVector:
        difference = chevalley_act(Generator("k", a), v, p) - chevalley_act(Generator("k", a, -1), v, p)
        return TensorVector({gamma: coef.exact_div(QDIFF) for gamma, coef in difference.terms.items()})
    return apply


def _word(*word: Generator, p: int, scalar: LaurentScalar = ONE) -> Callable[[TensorVector], TensorVector]:
    return lambda v: act_word(word, v, p).scale(scalar)


def _serre(kind: str, a: int, b: int, p: int) -> Callable[[TensorVector], TensorVector]:
    """v -> sum_r (-1)^r g_a^(r) g_b g_a^(N-r) v with N = 1 - (beta_a : beta_b)."""
    top = 1 - cartan_entry(a, b, p)

    def apply(v: TensorVector) -> TensorVector:
        result = TensorVector()
        for r in range(top + 1):
            word = (Generator(kind, a, r), Generator(kind, b), Generator(kind, a, top - r))
            result = result + act_word(word, v, p).scale(-1 if r % 2 else 1)
        return result
    return apply


@lru_cache(maxsize=None)
def quantum_relations(p: int) -> Tuple[VectorRelation, ...]:
    """
    (name, lhs, rhs) as maps on V^{(x)d}: l_a e_b = q^<eps_a, beta_b> e_b l_a and its f-version, the commutator of
    e_a and f_b, and the quantum Serre relations.
    """
    relations: List[VectorRelation] = []
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            ell = Generator("l", a)
            pairing = weight_pairing(a, b, p)
            relations.append((f"l{a} e{b}", _word(ell, Generator("e", b), p=p),
                              _word(Generator("e", b), ell, p=p, scalar=q_power(pairing))))
            relations.append((f"l{a} f{b}", _word(ell, Generator("f", b), p=p),
                              _word(Generator("f", b), ell, p=p, scalar=q_power(-pairing))))
            e_a, f_b = Generator("e", a), Generator("f", b)
            commutator = _word(e_a, f_b, p=p)
            relations.append((f"[e{a}, f{b}]", lambda v, c=commutator, w=_word(f_b, e_a, p=p): c(v) - w(v),
                              _k_bracket(a, p) if a == b else _zero))
            if a != b:
                relations.append((f"serre e{a} e{b}", _serre("e", a, b, p), _zero))
                relations.append((f"serre f{a} f{b}", _serre("f", a, b, p), _zero))
    return tuple(relations)


def _random_hecke_generator(rng: random.Random, d: int) -> Tuple[str, HeckeElt]:
    kind = rng.choice(("t", "x", "pi"))
    if kind == "t":
        i = rng.randint(1, d)
        return f"t{i}", t_simple(i, d)
    sign = rng.choice((1, -1))
    if kind == "x":
        i = rng.randint(1, d)
        return f"x{i}^{sign}", x_generator(i, d, sign)
    return f"pi^{sign}", pi(d, sign)


def _random_chevalley_generator(rng: random.Random, p: int) -> Generator:
    kind = rng.choice(("e", "f", "k", "l"))
    a = rng.randint(1, p)
    if kind in ("e", "f"):
        return Generator(kind, a, rng.randint(1, 2))
    return Generator(kind, a, rng.choice((1, -1)))


class RelationsVerifier(Verifier):
    """
    claim 'hecke_relations': every defining relation of H holds after multiplying both sides by a random t_w on the
        left, over `instances` draws of (d, relation, w) with 2 <= d <= max_d.
    claim 'quantum_relations': the weight, commutator and Serre relations of U hold on random vectors of V^{(x)d},
        over `instances` draws with d <= max_d and 2 <= p <= max_p.
    claim 'parabolic_identities': rho_f^2 = m_f rho_f and bar(rho_f) = q^{-2 nu_f} rho_f for every composition f of
        d <= max_d.
    claim 'bimodule_commutation': g . (v . h) = (g . v) . h for random Chevalley generators g, random generators
        h of H and random vectors v, for 2 <= d <= max_commutation_d and 2 <= p <= max_p.
    One record per claim and rank, d for the Hecke relations and p for those of U.
    """

    claim = "hecke_relations"

    def verifier_init(self, instances: int = 1000, commutation_samples: int = 20, seed: int = 0, max_d: int = 4,
                      max_p: int = 5, max_commutation_d: int = 3, show_progress: bool = False):
        """
        Args:
            instances: int = 1000
                The number of random instances of the Hecke relations and, separately, of the relations of U.
            commutation_samples: int = 20
                The number of random (g, h, v) per pair (d, p) for the commutation check.
            seed: int = 0
                The seed of random.Random.
            max_d: int = 4
            max_p: int = 5
            max_commutation_d: int = 3
        """
        assert max_d >= 2 and max_p >= 2, f"max_d and max_p must be at least 2, but got {max_d} and {max_p}!"
        self.instances = instances
        self.commutation_samples = commutation_samples
        self.seed = seed
        self.max_d = max_d
        self.max_p = max_p
        self.max_commutation_d = max_commutation_d
        self.show_progress = show_progress

    def _summarise(self, claim: str, key: str, checked: Dict[int, int], failures: Dict[int, List]) -> List[Dict]:
        return [
            self.record({key: rank, "instances": checked[rank], "seed": self.seed},
                        "mismatch" if failures[rank] else "match", dict(failures=failures[rank][:3]), claim=claim)
            for rank in sorted(checked)
        ]

    def check_hecke(self) -> List[Dict]:
        rng = random.Random(self.seed)
        checked, failures = {}, {}
        for _ in tqdm(range(self.instances), disable=not self.show_progress, desc="Hecke relations"):
            d = rng.randint(2, self.max_d)
            name, lhs, rhs = rng.choice(hecke_relations(d))
            h = random_left_factor(rng, d)
            checked[d] = checked.get(d, 0) + 1
            failures.setdefault(d, [])
            if h * lhs != h * rhs:
                failures[d].append(dict(relation=name, left_factor=h.to_records()))
        return self._summarise("hecke_relations", "d", checked, failures)

    def check_quantum(self) -> List[Dict]:
        rng = random.Random(self.seed + 1)
        checked, failures = {}, {}
        for _ in tqdm(range(self.instances), disable=not self.show_progress, desc="U relations"):
            p, d = rng.randint(2, self.max_p), rng.randint(1, self.max_d)
            name, lhs, rhs = rng.choice(quantum_relations(p))
            v = random_tensor(rng, d, p)
            checked[p] = checked.get(p, 0) + 1
            failures.setdefault(p, [])
            if lhs(v) != rhs(v):
                failures[p].append(dict(relation=name, d=d, vector=v.to_records()))
        return self._summarise("quantum_relations", "p", checked, failures)

    def check_parabolic(self) -> List[Dict]:
        report = []
        for d in range(1, self.max_d + 1):
            for parts in range(1, d + 1):
                for f in compositions(d, parts):
                    if 0 in f:
                        continue
                    element, m_f = rho(f)
                    checks = dict(square=element * element == element.scale(m_f),
                                  bar=element.bar() == element.scale(q_power(-2 * nu(f))))
                    report.append(self.record(dict(d=d, f=list(f)), "match" if all(checks.values()) else "mismatch",
                                              dict(checks=checks, m_f=repr(m_f)), claim="parabolic_identities"))
        return report

    def check_commutation(self) -> List[Dict]:
        rng = random.Random(self.seed + 2)
        report = []
        for d in range(2, self.max_commutation_d + 1):
            for p in range(2, self.max_p + 1):
                failures = []
                for _ in range(self.commutation_samples):
                    gen = _random_chevalley_generator(rng, p)
                    name, h = _random_hecke_generator(rng, d)
                    v = random_tensor(rng, d, p)
                    left = chevalley_act(gen, hecke_right_act(v, h, p), p)
                    right = hecke_right_act(chevalley_act(gen, v, p), h, p)
                    if left != right:
                        failures.append(dict(generator=repr(gen), hecke=name, vector=v.to_records()))
                instance = dict(d=d, p=p, samples=self.commutation_samples, seed=self.seed)
                report.append(self.record(instance, "mismatch" if failures else "match",
                                          dict(failures=failures[:3]), claim="bimodule_commutation"))
        return report

    def __call__(self, **kwargs) -> List[Dict]:
        report = self.check_hecke() + self.check_quantum() + self.check_parabolic() + self.check_commutation()
        logger.info(f"Relations: {len(report)} records from seed {self.seed}.")
        return report
