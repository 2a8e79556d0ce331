"""
    Author: perichain contributors
    Date: 2026.10

    The generic order on alcoves against the order <=_c on tensors, for d=3, p=4, c=(1,1,1) and mu=(3,2,1).
    Case a is a generic comparison that <=_c misses. Case b compares u_mu with u_{mu.w} for <=_c and A'_+ with
    A'_+ . w generically. The generic order is generated by reflections in every affine wall, so A'_+ . w lies above
    A'_+ even though it leaves the dominant chamber, while u_{mu.w} <_c u_mu holds instead of the reverse. The
    report keeps that outcome as a mismatch and records the reversed comparison in the witness.
"""

from typing import Dict, List

from perichain.lattice.alcove import Alcove, base_alcove, floors, generic_less, in_A_c, interior_point
from perichain.lattice.weyl import AffineWeylElt, finite, level_p_action, simple_perm, transposition
from perichain.module.quotient import less_c_weights
from perichain.module.tensor import affine_weight_of
from perichain.verifier.abs import Verifier

D, P, C, MU = 3, 4, (1, 1, 1), (3, 2, 1)


def factor_weights(gamma, p: int):
    """c = (1, ..., 1): every tensor factor is a single V."""
    return [affine_weight_of((m,), p) for m in gamma]


def incomparable_cases() -> Dict[str, AffineWeylElt]:
    """w = s_2 and w = s_{theta^v} tau_{-alpha_1 - 2 alpha_2}."""
    return {
        "a": finite(simple_perm(2, D)),
        "b": AffineWeylElt(transposition(0, D - 1, D), (-1, -1, 2)),
    }


class OrderComparisonVerifier(Verifier):
    """
    Case a: A'_+ . w < A'_+ generically while u_mu <_c u_{mu.w} fails.
    Case b: u_mu <_c u_{mu.w}, A'_+ < A'_+ . w failing and A'_+ . w leaving the dominant chamber.
    """

    claim = "order_incomparability"

    def __call__(self, **kwargs) -> List[Dict]:
        report = []
        base = base_alcove(D)
        for case, w in incomparable_cases().items():
            A = Alcove(w)
            gamma = level_p_action(MU, w, P)
            tensor_less = less_c_weights(factor_weights(MU, P), factor_weights(gamma, P))
            reversed_less = less_c_weights(factor_weights(gamma, P), factor_weights(MU, P))
            point = interior_point(A, P)
            dominant = all(point[j] > point[j + 1] for j in range(D - 1))
            if case == "a":
                checks = dict(generic=generic_less(A, base), not_tensor=not tensor_less, in_A_c=in_A_c(A, C))
            else:
                checks = dict(tensor=tensor_less, not_generic=not generic_less(base, A), not_dominant=not dominant)
            witness = dict(
                w=w.to_record(), mu_w=list(gamma), floors=list(floors(A)), checks=checks,
                weights=[repr(x) for x in factor_weights(gamma, P)], reversed_tensor=reversed_less,
            )
            instance = dict(d=D, p=P, c=list(C), mu=list(MU), case=case)
            report.append(self.record(instance, "match" if all(checks.values()) else "mismatch", witness))
        return report
