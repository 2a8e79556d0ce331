"""
    Author: perichain contributors
    Date: 2026.10
"""

import os
from collections import Counter
from typing import Dict, List


def get_table_strings(contents: List[List] or List, headers: List = None, header_bold: bool = True) -> str:
    """
    Return the .md string for making a table.

    Args:
        contents: List[List] or List
            The main body of the table. Each list element corresponds to a row.
        headers: List
            The values of the table headers. If not given, an empty header row is added.
        header_bold: bool
            Controls whether the values of the header is bolded.

    Returns:
        The well-structured .md table string.

    """
    if len(contents) == 0:
        return ""
    if not isinstance(contents[0], List):
        contents = [contents]
    contents = [[str(cell) for cell in row] for row in contents]
    if headers is not None:
        assert len(headers) == len(contents[0]), "The lengths of headers and contents don't match!"

    if headers is not None:
        table_strings = "|" + "|".join([f"**{h}**" if header_bold else str(h) for h in headers]) + "|\n"
    else:
        table_strings = "|" + "|".join(["" for _ in range(len(contents[0]))]) + "|\n"
    table_strings += "|" + "".join(["---|" for _ in contents[0]]) + "\n"

    for row in contents:
        table_strings += "|" + "|".join(row) + "|\n"

    return table_strings


def get_list_strings(content_dict: Dict, header_bold: bool = True) -> str:
    """
    Return the .md string for making a list. Each key-value item corresponds to a row.
    """
    list_strings = ""
    for header, content in content_dict.items():
        list_strings += f"* {f'**{header}:**' if header_bold else f'{header}:'} {content}\n"
    return list_strings


def save_md_report(records: List[Dict], save_path: str, file_name: str = "report") -> str:
    """
    Writes a Markdown summary of verification records: the status counts followed by one table row per record
    that did not match.

    Returns:
        The path of the written file.
    """
    counts = Counter(record["status"] for record in records)
    md_report = "# Summary\n" + get_list_strings({status: counts.get(status, 0)
                                                  for status in ("match", "mismatch", "indeterminate")})
    findings = [record for record in records if record["status"] != "match"]
    if findings:
        md_report += "# Findings\n" + get_table_strings(
            [[record["claim"], record["instance"], record["status"]] for record in findings],
            headers=["claim", "instance", "status"],
        )
    os.makedirs(save_path, exist_ok=True)
    result_path = os.path.join(save_path, f"{file_name}.md")
    with open(result_path, mode="w", encoding="utf-8") as f:
        f.write(md_report)
    return result_path
