"""
    Author: perichain contributors
    Date: 2026.10

    String-to-value converters for argparse and the YAML loader.
"""

from typing import List, Optional, Tuple

from perichain.lattice.rootdata import GlpWeight
from perichain.utilbox.regex_util import regex_glp_weight, regex_square_bracket


def str2bool(input_str: str) -> bool:
    if input_str.lower() in ["true", "ture", "yes", "1"]:
        return True
    elif input_str.lower() in ["false", "flase", "no", "0"]:
        return False
    else:
        raise ValueError(f"Cannot read {input_str} as a boolean!")


def str2none(input_str: str) -> Optional[str]:
    if input_str.lower() in ["none", "null"] or input_str == "":
        return None
    return input_str


def _cast_single_string(single_string: str):
    if single_string.lstrip("-").isdigit():
        return int(single_string)
    try:
        return str2bool(single_string)
    except ValueError:
        return single_string


def str2list(input_str: str) -> List:
    """
    Examples:
        '1,2,3' -> [1, 2, 3]
        '[1,[2,3],[4,[5,6]]]' -> [1, [2, 3], [4, [5, 6]]]

    Negative integers are kept as integers, since weights and coset vectors need them.
    """
    input_str = input_str.replace(" ", "").replace("\n", "").replace("\t", "")
    if input_str == "":
        return []
    if "[" not in input_str and "]" not in input_str:
        return [_cast_single_string(s) for s in input_str.split(",")]

    assert input_str.startswith("[") and input_str.endswith("]"), (
        "A nested list string must be surrounded by a pair of square brackets '[]'."
    )
    assert input_str.count("[") == input_str.count("]"), (
        "The number of left square brackets '[' doesn't match that of right square brackets ']'."
    )

    # register all the smallest []-surrounded sub-strings
    match_dict, match_num = {}, 0
    while True:
        regex_matches = regex_square_bracket.findall(input_str)
        if len(regex_matches) == 0:
            break
        for match in regex_matches:
            match_dict[f"match_{match_num}"] = match[1:-1]
            input_str = input_str.replace(match, f"match_{match_num}", 1)
            match_num += 1

    def recur_list_init(unproc_string: str):
        if unproc_string.startswith("match_") and "," not in unproc_string:
            inner = match_dict[unproc_string]
            return [] if inner == "" else [recur_list_init(ele) for ele in inner.split(",")]
        return _cast_single_string(unproc_string)

    return recur_list_init(input_str)


def str2tuple(input_str: str) -> Tuple[int, ...]:
    """'2,1' -> (2, 1); used for compositions, weights and coset vectors."""
    result = str2list(input_str)
    assert all(isinstance(x, int) and not isinstance(x, bool) for x in result), \
        f"{input_str} is not a comma list of integers!"
    return tuple(result)


def str2glp_weight(input_str: str) -> GlpWeight:
    """'1,1,0' -> eps_1 + eps_2; '1,1,0+2d' adds 2 delta."""
    match = regex_glp_weight.fullmatch(input_str.replace(" ", ""))
    assert match is not None, f"Cannot read {input_str} as a gl_p weight!"
    counts = tuple(int(x) for x in match.group("counts").split(","))
    delta = int(match.group("delta")) if match.group("delta") is not None else 0
    return GlpWeight(counts, delta)
