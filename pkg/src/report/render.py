# 파일: src/report/render.py
"""json / text / latex 출력기"""

from __future__ import annotations

import json
from typing import List, Union

from .schema import ReportDocument, VerifySummary, to_canonical_json

Renderable = Union[ReportDocument, VerifySummary]

FORMATS = ("json", "text", "latex")


def _aligned(matrix: List[List[str]], indent: str = "  ") -> List[str]:
    if not matrix:
        return [f"{indent}(empty)"]
    width = max(len(x) for row in matrix for x in row)
    return [indent + "[ " + "  ".join(x.rjust(width) for x in row) + " ]" for row in matrix]


def _text_document(doc: ReportDocument) -> List[str]:
    lines = [f"== {doc.section} (k={doc.k}) =="]
    if doc.matrix:
        lines.extend(_aligned(doc.matrix))
    for name, m in (doc.matrices or {}).items():
        lines.append(f"-- {name}")
        lines.extend(_aligned(m))
    for key, value in (doc.values or {}).items():
        lines.append(f"{key}: {value}")
    if doc.numeric:
        lines.append("numeric: " + json.dumps(doc.numeric, sort_keys=True))
    if doc.notes:
        lines.append(f"notes: {doc.notes}")
    for record in doc.identities:
        mark = "PASS" if record.passed else "FAIL"
        suffix = f"  ({record.detail})" if record.detail else ""
        lines.append(f"[{mark}] {record.name}  <{record.ref}>{suffix}")
    return lines


def render_text(obj: Renderable) -> str:
    if isinstance(obj, VerifySummary):
        lines = [f"verify k={obj.k_min}..{obj.k_max}: {'PASS' if obj.passed else 'FAIL'}"]
        for doc in obj.reports:
            failed = doc.failed
            lines.append(
                f"  k={doc.k}: {len(doc.identities) - len(failed)}/{len(doc.identities)} identities pass"
            )
            lines.extend(f"    [FAIL] {r.name} <{r.ref}>" for r in failed)
        lines.extend(f"  k={k}: ERROR {msg}" for k, msg in obj.errors.items())
        return "\n".join(lines) + "\n"
    return "\n".join(_text_document(obj)) + "\n"


def _latex_entry(x: str) -> str:
    if "/" in x:
        p, q = x.split("/")
        sign = "-" if p.startswith("-") else ""
        return f"{sign}\\frac{{{p.lstrip('-')}}}{{{q}}}"
    return x


def _pmatrix(matrix: List[List[str]]) -> List[str]:
    body = [" & ".join(_latex_entry(x) for x in row) + r" \\" for row in matrix]
    return [r"\begin{pmatrix}", *body, r"\end{pmatrix}"]


def render_latex(obj: Renderable) -> str:
    if isinstance(obj, VerifySummary):
        lines = [f"% verify k={obj.k_min}..{obj.k_max}: {'PASS' if obj.passed else 'FAIL'}"]
        for doc in obj.reports:
            lines.append(render_latex(doc).rstrip("\n"))
        return "\n".join(lines) + "\n"

    lines = [
        f"% {obj.section}, k={obj.k}",
        "% matrices act on column vectors from the left; row-vector displays are the transpose",
    ]
    if obj.matrix:
        lines.extend(_pmatrix(obj.matrix))
    for name, m in (obj.matrices or {}).items():
        lines.append(f"% {name}")
        lines.extend(_pmatrix(m))
    for record in obj.identities:
        lines.append(f"% [{'PASS' if record.passed else 'FAIL'}] {record.name} <{record.ref}>")
    return "\n".join(lines) + "\n"


def render(obj: Renderable, fmt: str = "json") -> str:
    if fmt == "json":
        return to_canonical_json(obj) + "\n"
    if fmt == "text":
        return render_text(obj)
    if fmt == "latex":
        return render_latex(obj)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
