"""
    Author: perichain contributors
    Date: 2026.10

    Checks on the two structural facts behind the comparison maps:
    the induced-module decomposition of V^{(x)d} with u_mu . t_w = u_{mu . w} on ^eW, and the decomposition
    A = g_n(A'_+ . w) of A_c together with b(m_c) and a_mu o b = d_mu.
"""

import random
from typing import Dict, List

from tqdm import tqdm

from perichain import ConventionError
from perichain.algebra.hecke import t
from perichain.algebra.laurent import q_power
from perichain.lattice.alcove import Window, compose_alcove, decompose, in_A_c
from perichain.lattice.rootdata import (
    GlpWeight,
    HighestWeightData,
    dominant_from_tilde,
    omega_set,
    omega_small,
    parabolic_simples,
    weight_tilde,
)
from perichain.lattice.weyl import AffineWeylElt, compose, identity, length, level_p_action, simple
from perichain.module.periodic import build_m_c, m_c_from_hecke, periodic_alcove
from perichain.module.quotient import build_quotient
from perichain.module.tensor import TensorVector, hecke_right_act, tensor_to_hecke
from perichain.bridge.maps import b_of_m_c_closed_form, map_a_mu, map_a_on_induced, map_b, map_d_mu
from perichain.verifier.abs import Verifier


def elements_up_to(d: int, max_length: int) -> List[AffineWeylElt]:
    """Every element of W' of length at most max_length, found by right multiplication with simple reflections."""
    found = {identity(d)}
    frontier = [identity(d)]
    for _ in range(max_length):
        next_frontier = []
        for x in frontier:
            for i in range(1, d + 1):
                y = compose(x, simple(i, d))
                if y not in found and length(y) <= max_length:
                    found.add(y)
                    next_frontier.append(y)
        frontier = next_frontier
    return sorted(found, key=lambda x: (length(x), x.perm, x.trans))


def is_min_in_right_coset(x: AffineWeylElt, e) -> bool:
    """x in ^eW: s_i x is longer than x for every i in I_e."""
    return all(length(compose(simple(i, x.d), x)) > length(x) for i in parabolic_simples(tuple(e)))


def dominant_of_composition(e_comp):
    """The dominant mu whose composition (e_p, ..., e_1) is e_comp."""
    return dominant_from_tilde(GlpWeight(tuple(reversed(e_comp)), 0))


class InducedModuleVerifier(Verifier):
    """
    claim 'induced_module':
        tensor_to_hecke reconstructs sampled tensors, and u_mu . t_w = u_{mu . w} for every dominant mu in X_p and
        every w in ^eW up to a length bound. Any failure, finite or affine, is a mismatch.
    claim 'slab_decomposition':
        g_n(A'_+ . w) round-trips on the window, both expressions of m_c agree, b(m_c) has its closed form on the
        tensor side, and a_mu o b = d_mu on every window alcove and on m_c.
    """

    claim = "induced_module"

    def verifier_init(self, max_length: int = 6, samples: int = 20, seed: int = 0, show_progress: bool = False):
        """
        Args:
            max_length: int = 6
                The length bound of the affine elements w.
            samples: int = 20
                The number of sampled tensors for the reconstruction check.
            seed: int = 0
                The seed of the sampler.
        """
        self.max_length = max_length
        self.samples = samples
        self.seed = seed
        self.show_progress = show_progress

    # --- the induced-module decomposition --- #
    def check_reconstruction(self, data: HighestWeightData) -> Dict:
        rng = random.Random(self.seed)
        p, d = data.p, data.d
        failures = []
        for _ in range(self.samples):
            v = TensorVector.from_terms(
                (tuple(rng.randint(-p, 2 * p) for _ in range(d)), q_power(rng.randint(-2, 2), rng.choice((-1, 1))))
                for _ in range(rng.randint(1, 3))
            )
            rebuilt = TensorVector()
            for e_comp, h in tensor_to_hecke(v, p):
                rebuilt = rebuilt + hecke_right_act(TensorVector.basis(dominant_of_composition(e_comp)), h, p)
            if rebuilt != v:
                failures.append(dict(vector=v.to_records(), rebuilt=rebuilt.to_records()))
        instance = dict(p=p, d=d, part="reconstruction", samples=self.samples, seed=self.seed)
        return self.record(instance, "mismatch" if failures else "match", dict(failures=failures[:3]))

    def check_basis_action(self, data: HighestWeightData) -> List[Dict]:
        """
        u_mu . t_w = u_{mu . w} on every w in ^eW up to max_length. A failure is a mismatch whether w is finite or
        affine; for an affine w the witness keeps the scalar when the image is a multiple of u_{mu . w}.
        """
        p, d = data.p, data.d
        elements = elements_up_to(d, self.max_length)
        report = []
        for omega in tqdm(omega_set(d, p), disable=not self.show_progress, desc="u_mu . t_w"):
            mu = dominant_from_tilde(omega)
            _, e_comp = weight_tilde(mu, p)
            finite_fail, affine_fail, checked = [], [], 0
            for x in elements:
                if not is_min_in_right_coset(x, e_comp):
                    continue
                checked += 1
                image = hecke_right_act(TensorVector.basis(mu), t(x), p)
                target = level_p_action(mu, x, p)
                if image == TensorVector.basis(target):
                    continue
                failure = dict(w=x.to_record(), image=image.to_records())
                if set(image.terms) == {target}:
                    failure["scalar"] = repr(image.coefficient(target))
                (finite_fail if x.is_finite() else affine_fail).append(failure)
            status = "mismatch" if finite_fail or affine_fail else "match"
            instance = dict(p=p, d=d, mu=list(mu), part="basis_action", max_length=self.max_length)
            report.append(self.record(instance, status, dict(
                checked=checked, finite_failures=finite_fail[:3], affine_failures=affine_fail[:3],
                affine_failure_count=len(affine_fail))))
        return report

    # --- the slab decomposition and the comparison maps --- #
    def check_decomposition(self, data: HighestWeightData, win: Window) -> Dict:
        failures = []
        for A in win.alcoves(data.c):
            try:
                w, n = decompose(A, data.c)
            except ConventionError as e:
                failures.append(dict(alcove=A.to_record(), error=str(e)))
                continue
            if compose_alcove(w, n, data.c) != A or not in_A_c(A, data.c):
                failures.append(dict(alcove=A.to_record(), w=list(w), coset=list(n)))
        instance = dict(p=data.p, c=list(data.c), radius=win.radius, part="decomposition")
        return self.record(instance, "mismatch" if failures else "match", dict(failures=failures[:3]),
                           claim="slab_decomposition")

    def check_m_c(self, data: HighestWeightData) -> Dict:
        m_c, from_hecke = build_m_c(data), m_c_from_hecke(data)
        instance = dict(p=data.p, c=list(data.c), part="m_c")
        witness = dict(m_c=m_c.to_records(), from_hecke=from_hecke.to_records())
        return self.record(instance, "match" if m_c == from_hecke else "mismatch", witness, claim="slab_decomposition")

    def check_maps(self, data: HighestWeightData, win: Window) -> List[Dict]:
        space = build_quotient(data)
        m_c = build_m_c(data)
        alcoves = win.alcoves(data.c)
        report = []
        for mu_tilde in omega_small(data.d, data.p):
            closed = map_a_mu(space, mu_tilde, b_of_m_c_closed_form(data))
            direct = map_d_mu(space, mu_tilde, m_c)
            failures = []
            for A in [None] + alcoves:
                v = m_c if A is None else periodic_alcove(A)
                composite = map_a_on_induced(space, mu_tilde, map_b(v, data.c))
                if composite != map_d_mu(space, mu_tilde, v):
                    failures.append("m_c" if A is None else A.to_record())
            instance = dict(p=data.p, c=list(data.c), mu_tilde=list(mu_tilde.finite_part), radius=win.radius,
                            part="maps")
            witness = dict(b_m_c_closed_form=closed.to_records(), d_m_c=direct.to_records(),
                           a_b_failures=failures[:3], alcoves=len(alcoves))
            status = "match" if closed == direct and not failures else "mismatch"
            report.append(self.record(instance, status, witness, claim="slab_decomposition"))
        return report

    def __call__(self, data: HighestWeightData, win: Window, **kwargs) -> List[Dict]:
        report = [self.check_reconstruction(data)]
        report.extend(self.check_basis_action(data))
        report.append(self.check_decomposition(data, win))
        report.append(self.check_m_c(data))
        if data.p > data.d:
            report.extend(self.check_maps(data, win))
        return report
