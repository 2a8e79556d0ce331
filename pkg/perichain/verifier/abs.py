"""
    Author: perichain contributors
    Date: 2026.10
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List

STATUSES = ("match", "mismatch", "indeterminate")


class Verifier(ABC):
    """
    Verifier is a Callable object which is the base class for all verification suites in this toolkit.
    It checks one family of statements on a concrete instance and returns a report, i.e. a list of records
    {claim, instance, status, witness} with status in {match, mismatch, indeterminate}.

    This base class has two interface functions: verifier_init() for suite initialization and __call__() for the
    checks themselves.
    1. __call__() must be overridden by every suite.
    2. verifier_init() is not mandatory to be overridden because some suites need no configuration at all, such as
        perichain.verifier.orders.OrderComparisonVerifier.

    """

    # the claim name written into every record; overridden by each suite
    claim: str = None

    def __init__(self, **verifier_conf):
        """
        Args:
            **verifier_conf:
                The arguments used by verifier_init() for the customized initialization of your suite.
        """
        super(Verifier, self).__init__()
        self.verifier_init(**verifier_conf)

    def verifier_init(self, **verifier_conf):
        """
        Abstract interface function for customized initialization of each Verifier subclass.
        This interface function is not mandatory to be overridden by your implementation.

        Args:
            **verifier_conf:
                The arguments used for customized Verifier initialization.
                For more details, please refer to the docstring of your target Verifier subclass.

        """
        pass

    def record(self, instance: Dict[str, Any], status: str, witness: Any = None, claim: str = None) -> Dict:
        assert status in STATUSES, f"status must be one of {STATUSES}, but got {status}!"
        return dict(claim=self.claim if claim is None else claim, instance=instance, status=status,
                    witness=witness)

    @abstractmethod
    def __call__(self, **kwargs) -> List[Dict]:
        """
        This abstract interface function receives the instance to check and returns the report.

        Args:
            **kwargs:
                The instance, e.g. the HighestWeightData and the window.
                For more details, please refer to the docstring of __call__() of your target Verifier subclass.

        Returns:
            A list of records {claim, instance, status, witness}.

        """
        raise NotImplementedError


def count_statuses(report: List[Dict]) -> Dict[str, int]:
    counts = {status: 0 for status in STATUSES}
    for rec in report:
        counts[rec["status"]] += 1
    return counts
