"""
    Author: perichain contributors
    Date: 2026.10
"""

import re

# return all the smallest sub-strings surrounded by a pair of angle brackets '<>', used by the '!ref' representer
# e.g.
# <exp_root> -> <exp_root>
# <exp<root> -> <root>
regex_angle_bracket = re.compile(r"<[^<>]*>")

# return the smallest sub-string surrounded by a pair of square brackets '[]'
# e.g.
# 1,[2,[3,4]] -> [3,4]
regex_square_bracket = re.compile(r"\[[^\[\]]*\]")

# a Chevalley generator string
# e.g.
# e2 -> kind=e, index=2
# f3^(2) -> kind=f, index=3, divided=2
# l1^-1 -> kind=l, index=1, plain=-1
regex_generator = re.compile(r"(?P<kind>[efkl])(?P<index>\d+)(?:\^\((?P<divided>\d+)\)|\^(?P<plain>-?\d+))?")

# a gl_p weight given by its multiplicities, with an optional delta part
# e.g.
# 1,1,0 -> counts=1,1,0
# 1,1,0+2d -> counts=1,1,0, delta=2
regex_glp_weight = re.compile(r"(?P<counts>-?\d+(?:,-?\d+)*)(?:\+(?P<delta>-?\d+)d)?")
