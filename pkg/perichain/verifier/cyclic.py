"""
    Author: perichain contributors
    Date: 2026.10
"""

import logging
from typing import Dict, List

from perichain import SpanError
from perichain.algebra.hecke import t
from perichain.algebra.laurent import q_power
from perichain.algebra.linsolve import SpanSolver
from perichain.bridge.maps import map_a_mu
from perichain.lattice.alcove import Window
from perichain.lattice.rootdata import HighestWeightData, omega_set, omega_small
from perichain.lattice.weyl import finite, sigma_c
from perichain.module.quotient import QuotientSpace, build_quotient, cyclic_vector, weight_family, word_family
from perichain.verifier.abs import Verifier

logger = logging.getLogger(__name__)


class CyclicVectorVerifier(Verifier):
    """
    Three checks on the cyclic vector v_c of the quotient:
    1. a_lambda(q^{nu_d} rho_d bar(t_{sigma_c}) (x) 1) = v_c;
    2. every window basis vector of a small weight lies in the span of the U-words applied to v_c;
    3. for c = (d): the weights met by those words are small, and a basis index of weight mu~ exists iff mu~ is
       small, so the weight set is Omega_sm.
    Vectors outside the span of a finite family of words give 'indeterminate', never 'mismatch'.
    """

    claim = "cyclic_vector"

    def verifier_init(self, family_word_length: int = 4, family_cap: int = 400, max_power: int = 2,
                      z_radius: int = None, show_progress: bool = False):
        self.family_word_length = family_word_length
        self.family_cap = family_cap
        self.max_power = max_power
        self.z_radius = z_radius
        self.show_progress = show_progress

    def check_cyclic(self, space: QuotientSpace) -> Dict:
        data = space.data
        h = t(finite(sigma_c(data))).bar().scale(q_power(data.nu_d))
        image = map_a_mu(space, data.lambda_tilde_weight, h)
        expected = cyclic_vector(space)
        instance = dict(p=data.p, c=list(data.c), part="cyclic")
        witness = dict(image=image.to_records(), v_c=expected.to_records(), sigma_c=list(sigma_c(data)))
        return self.record(instance, "match" if image == expected else "mismatch", witness)

    def check_span(self, space: QuotientSpace, family, win: Window) -> List[Dict]:
        data = space.data
        z_radius = win.radius + self.family_word_length if self.z_radius is None else self.z_radius
        report = []
        for mu_tilde in omega_small(data.d, data.p):
            solver = SpanSolver(weight_family(space, family, mu_tilde, z_radius))
            uncovered = []
            basis = space.window_basis(mu_tilde, win.radius)
            for index in basis:
                try:
                    solver.express(space.basis_vector(index))
                except SpanError:
                    uncovered.append(index.to_record())
            instance = dict(p=data.p, c=list(data.c), mu_tilde=list(mu_tilde.finite_part), radius=win.radius,
                            part="span")
            witness = dict(basis=len(basis), family=len(solver), uncovered=uncovered[:5])
            report.append(self.record(instance, "indeterminate" if uncovered else "match", witness))
        return report

    def check_weights(self, space: QuotientSpace, family) -> Dict:
        data = space.data
        reached = sorted({space.vector_weight(vector).finite_part for _, vector in family})
        not_small = [list(w) for w in reached if any(x > 1 for x in w)]
        index_mismatch = [
            list(omega.finite_part) for omega in omega_set(data.d, data.p)
            if bool(space.indices_of_weight(omega)) != omega.is_small()
        ]
        instance = dict(p=data.p, c=list(data.c), part="weights")
        witness = dict(reached=[list(w) for w in reached], not_small=not_small, index_mismatch=index_mismatch)
        return self.record(instance, "mismatch" if not_small or index_mismatch else "match", witness)

    def __call__(self, data: HighestWeightData, win: Window, **kwargs) -> List[Dict]:
        space = build_quotient(data)
        family = word_family(space, self.family_word_length, self.family_cap, self.max_power, self.show_progress)
        logger.info(f"Word family of v_c for c={data.c}: {len(family)} vectors.")
        report = [self.check_cyclic(space)]
        report.extend(self.check_span(space, family, win))
        if len(data.c) == 1:
            report.append(self.check_weights(space, family))
        return report
