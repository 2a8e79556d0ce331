"""
    Author: perichain contributors
    Date: 2026.10
"""

from typing import Dict, List

from perichain.bridge.matrices import verify_aperiodic_claim
from perichain.verifier.abs import Verifier


class AperiodicVerifier(Verifier):
    """
    For p >= d and f small, some matrix of A_{f,f'} fails to be aperiodic iff f' is small and p = d; in that case
    the failures are exactly the matrices s(r), r != 0. One record per pair (f, f').
    """

    claim = "aperiodic_complement"

    def verifier_init(self, offset_bound: int = None):
        """
        Args:
            offset_bound: int = None
                The offset bound B of the enumeration. None means d * p.
        """
        self.offset_bound = offset_bound

    def __call__(self, p: int, d: int, **kwargs) -> List[Dict]:
        report = []
        for verdict in verify_aperiodic_claim(p, d, self.offset_bound):
            instance = dict(p=p, d=d, f=verdict["f"], f_prime=verdict["f_prime"])
            report.append(self.record(instance, verdict["status"], verdict["witness"]))
        return report
