"""
    Author: perichain contributors
    Date: 2026.10

    Run configurations are YAML files read by ruamel.yaml. Four representers are understood:
    1. !ref <key> copies the value of another top-level key; <key> may also sit inside a longer string.
    2. !tuple (2, 1) makes a tuple of integers, e.g. a composition or a weight.
    3. !list [1, -1, 0] makes a list of integers.
    4. !str 0123 keeps a scalar as a string.
"""

import os
from typing import Dict, List

import ruamel.yaml
from ruamel.yaml.scalarfloat import ScalarFloat
from ruamel.yaml.scalarstring import PlainScalarString

from perichain.utilbox.regex_util import regex_angle_bracket


def reform_config_dict(input_config):
    """Recursively turns the ruamel.yaml scalar types into plain Python types."""
    if isinstance(input_config, Dict):
        return {str(key): reform_config_dict(value) for key, value in input_config.items()}
    elif isinstance(input_config, List):
        return [reform_config_dict(item) for item in input_config]
    if isinstance(input_config, ScalarFloat):
        return float(input_config)
    if isinstance(input_config, PlainScalarString):
        return str(input_config)
    return input_config


def _cast_item(item: str):
    return int(item) if item.lstrip("-").isdigit() else item


def _split_sequence(text: str) -> List:
    body = text.strip()[1:-1].replace(" ", "")
    return [_cast_item(i) for i in body.split(",") if i != ""]


def remove_representer(parent_node, reference: Dict, curr_key=None):
    """Recursively resolves the !-prefixed representers of a loaded configuration in place."""
    child_node = parent_node[curr_key] if curr_key is not None else parent_node

    if isinstance(child_node, Dict):
        return {key: remove_representer(child_node, reference, key) for key in list(child_node.keys())}
    elif isinstance(child_node, List):
        return [remove_representer(child_node, reference, i) for i in range(len(child_node))]

    if not hasattr(child_node, "tag") or child_node.tag.value is None:
        return child_node

    tag, value = child_node.tag.value, child_node.value
    if tag == "!ref":
        if regex_angle_bracket.fullmatch(value):
            ref_key = value[1:-1]
            assert ref_key in reference, f"The reference {value} points to a missing key!"
            assert not hasattr(reference[ref_key], "tag"), f"{ref_key} should be resolved before {value}!"
            parent_node[curr_key] = reference[ref_key]
        else:
            for ref in regex_angle_bracket.findall(value):
                value = value.replace(ref, str(reference[ref[1:-1]]))
            parent_node[curr_key] = value
    elif tag == "!tuple":
        parent_node[curr_key] = tuple(_split_sequence(value))
    elif tag == "!list":
        parent_node[curr_key] = _split_sequence(value)
    elif tag == "!str":
        parent_node[curr_key] = str(value)
    return parent_node[curr_key]


def load_yaml(yaml_file) -> Dict:
    """
    Loads a run configuration.

    Args:
        yaml_file (str or IO): the path to the YAML file or a file-like object

    Returns:
        Dict: the configuration with every representer resolved

    Raises:
        AssertionError: if the input YAML file does not exist.
    """
    if isinstance(yaml_file, str):
        assert os.path.exists(yaml_file), f"Your input .yaml file {yaml_file} doesn't exist!"
        with open(yaml_file, mode="r", encoding="utf-8") as f:
            yaml_config = reform_config_dict(ruamel.yaml.YAML().load(f))
    else:
        yaml_config = reform_config_dict(ruamel.yaml.YAML().load(yaml_file))
    if yaml_config is None:
        return {}
    return remove_representer(yaml_config, yaml_config)
