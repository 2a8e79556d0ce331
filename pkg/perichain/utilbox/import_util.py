"""
    Author: perichain contributors
    Date: 2026.10
"""

import functools
import importlib
import os


@functools.lru_cache(maxsize=None)
def import_class(class_string: str):
    """'perichain.verifier.orders.OrderComparisonVerifier' -> the class object."""
    class_string = class_string.split(".")
    module_name = ".".join(class_string[:-1]).strip()
    class_name = class_string[-1].strip()
    return getattr(importlib.import_module(module_name), class_name)


def parse_path_args(input_path: str) -> str:
    """
    Turns a path argument into an absolute path.

    Args:
        input_path: str
            Absolute paths are returned unchanged, './'-style paths are resolved against the working directory and
            every other relative path is taken inside the toolkit root PERICHAIN_ROOT.

    Returns: str
        The absolute path.

    """
    if input_path.startswith("/"):
        return input_path
    elif input_path.startswith("."):
        return os.path.abspath(input_path)
    else:
        assert "PERICHAIN_ROOT" in os.environ.keys(), (
            "PERICHAIN_ROOT doesn't exist in your environmental variables! "
            "Please move to the toolkit root and execute create_env.sh there, or give an absolute path!"
        )
        return os.path.join(os.environ["PERICHAIN_ROOT"], input_path)
