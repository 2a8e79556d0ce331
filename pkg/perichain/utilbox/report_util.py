"""
    Author: perichain contributors
    Date: 2026.10

    Serialization of canonical tables and verification reports. JSON keeps the full structure, CSV and LaTeX flatten
    every record into one row whose nested cells are JSON strings or rendered Laurent polynomials.
"""

import io
import json
from typing import Dict, List

import pandas as pd
from tabulate import tabulate

from perichain.algebra.laurent import LaurentScalar

FORMATS = ("json", "csv", "latex")


def to_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _flat_cell(value) -> str:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def terms_to_latex(terms: List[list]) -> str:
    """[[key record, [[exp, coef], ...]], ...] -> '(q^{-1}) [key] + ...' in LaTeX."""
    if not terms:
        return "0"
    parts = []
    for key, pairs in terms:
        coef = LaurentScalar.from_pairs([tuple(pair) for pair in pairs])
        parts.append(f"$({coef.to_latex()})$\\,{_flat_cell(key)}")
    return " + ".join(parts)


def rows_to_frame(rows: List[Dict]) -> pd.DataFrame:
    columns = sorted({key for row in rows for key in row})
    return pd.DataFrame([[_flat_cell(row.get(col, "")) for col in columns] for row in rows], columns=columns)


def to_csv(rows: List[Dict]) -> str:
    buffer = io.StringIO()
    rows_to_frame(rows).to_csv(buffer, index=False)
    return buffer.getvalue()


def to_latex(rows: List[Dict]) -> str:
    if not rows:
        return ""
    columns = sorted({key for row in rows for key in row})
    body = [
        [terms_to_latex(row[col]) if col == "terms" else _flat_cell(row.get(col, "")) for col in columns]
        for row in rows
    ]
    return tabulate(body, headers=columns, tablefmt="latex_raw")


def serialize(payload: Dict, fmt: str) -> str:
    """
    Args:
        payload: {'meta': ..., 'rows': [...]}
        fmt: one of json, csv and latex; the tabular formats only keep the rows
    """
    assert fmt in FORMATS, f"Unknown output format {fmt}, it must be one of {FORMATS}!"
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(payload["rows"])
    return to_latex(payload["rows"])
