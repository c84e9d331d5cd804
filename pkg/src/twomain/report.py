"""Stable report documents for the CLI.

The structured format is JSON with sorted keys; floats are rounded to 12
significant digits before serialization so identical inputs produce
byte-identical output. The text format is human-oriented and not a
compatibility surface.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .classify import ClassificationResult
from .errors import NotUnicyclic
from .graphs import (
    Multigraph, SignedGraph, associated_multigraph, b_graph, degree_profile,
    is_net_regular,
)
from .spectral import main_eigenvalues_float, two_main_check
from .structure import unicyclic_decompose


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _cert_doc(cert) -> tuple[dict | None, str | None]:
    if getattr(cert, "status", None) in ("valid", "nonintegral"):
        if cert.status == "valid":
            return {"a": cert.a, "b": cert.b, "status": "valid"}, None
        return (
            {"a": str(Fraction(cert.a)), "b": str(Fraction(cert.b)), "status": "nonintegral"},
            None,
        )
    return None, cert.reason


def _classification_doc(result: ClassificationResult | None, reason: str | None) -> dict:
    if result is None:
        return {"applicable": False, "reason": reason, "case": None,
                "family": None, "params": None}
    return {
        "applicable": True,
        "reason": None,
        "case": result.case_tag,
        "family": result.family_tag,
        "params": result.family_params,
    }


def analysis_document(g, *, classify: bool = False, float_check: bool = False,
                      tol: float = 1e-9, canon_order: int | None = None) -> dict:
    """Analysis report for a parsed graph (signed graphs are analyzed
    through their associated multigraph, which preserves the count)."""
    doc: dict = {"input_kind": g.KIND, "order": g.n}
    if isinstance(g, SignedGraph):
        doc["net_regular"] = is_net_regular(g)
        m = associated_multigraph(g)
    else:
        m = g
    prof = degree_profile(m)
    doc["degrees"] = list(prof.degrees)
    doc["s_values"] = list(prof.s_values)
    ev = two_main_check(m)
    doc["walk_rank"] = ev.walk_rank
    doc["main_count"] = ev.walk_rank
    doc["two_main"] = ev.two_main
    cert_doc, reason = _cert_doc(ev.certificate)
    doc["certificate"] = cert_doc
    doc["no_certificate_reason"] = reason
    if ev.note:
        doc["disagreement"] = ev.note

    if float_check:
        fl = main_eigenvalues_float(m, tol)
        doc["float_check"] = {
            "eigenvalues": [_round12(x) for x in fl.eigenvalues],
            "main_flags": list(fl.main_flags),
            "main_count": fl.main_count_float,
            "agrees": not fl.disagree,
            "failure": fl.failure,
        }
    else:
        doc["float_check"] = None

    if classify:
        if not ev.two_main:
            doc["classification"] = _classification_doc(None, "not two-main")
        else:
            try:
                unicyclic_decompose(b_graph(m))
            except NotUnicyclic as exc:
                doc["classification"] = _classification_doc(None, f"B-graph not unicyclic: {exc}")
            else:
                from .classify import classify_two_main

                result = classify_two_main(m, ev, canon_order)
                doc["classification"] = _classification_doc(result, None)
    else:
        doc["classification"] = None
    return doc


def record_document(rec) -> dict:
    """Stable per-class document for enumeration output."""
    cert_doc, reason = _cert_doc(rec.certificate)
    doc = {
        "order": rec.graph.n,
        "key": list(rec.key),
        "edges": [[u, v, w] for u, v, w in rec.graph.edges()],
        "walk_rank": rec.walk_rank,
        "certificate": cert_doc,
        "no_certificate_reason": reason,
    }
    if rec.classification is not None:
        doc["case"] = rec.classification.case_tag
        doc["family"] = rec.classification.family_tag
        doc["params"] = rec.classification.family_params
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_json_line(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def render_analysis_text(doc: dict) -> str:
    lines = [
        f"kind        : {doc['input_kind']}",
        f"order       : {doc['order']}",
        f"degrees     : {' '.join(map(str, doc['degrees']))}",
        f"s values    : {' '.join(map(str, doc['s_values']))}",
        f"walk rank   : {doc['walk_rank']}  (distinct main eigenvalues)",
        f"two-main    : {'yes' if doc['two_main'] else 'no'}",
    ]
    if "net_regular" in doc:
        lines.insert(2, f"net-regular : {'yes' if doc['net_regular'] else 'no'}")
    cert = doc["certificate"]
    if cert is None:
        lines.append(f"certificate : none ({doc['no_certificate_reason']})")
    else:
        lines.append(f"certificate : a={cert['a']} b={cert['b']} [{cert['status']}]")
    if doc.get("disagreement"):
        lines.append(f"WARNING     : {doc['disagreement']}")
    fl = doc.get("float_check")
    if fl:
        vals = " ".join(f"{v:.12g}" for v in fl["eigenvalues"])
        flags = " ".join("M" if f else "-" for f in fl["main_flags"])
        lines.append(f"float check : count={fl['main_count']} agrees={'yes' if fl['agrees'] else 'NO'}")
        lines.append(f"  eigenvalues: {vals}")
        lines.append(f"  main flags : {flags}")
        if fl["failure"]:
            lines.append(f"  failure    : {fl['failure']}")
    cl = doc.get("classification")
    if cl is not None:
        if not cl["applicable"]:
            lines.append(f"classify    : NOT APPLICABLE ({cl['reason']})")
        else:
            params = cl["params"] or {}
            ptxt = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
            lines.append(f"classify    : case={cl['case']} family={cl['family']} {ptxt}".rstrip())
    return "\n".join(lines) + "\n"


def render_record_text(doc: dict) -> str:
    cert = doc["certificate"]
    if cert is None:
        cert_txt = f"cert=none({doc['no_certificate_reason']})"
    else:
        cert_txt = f"(a,b)=({cert['a']},{cert['b']})"
        if cert["status"] != "valid":
            cert_txt += f"[{cert['status']}]"
    edge_txt = ",".join(f"{u}-{v}:{w}" for u, v, w in doc["edges"])
    parts = [f"n={doc['order']}", f"rank={doc['walk_rank']}", cert_txt]
    if "family" in doc:
        parts.append(f"case={doc['case']} family={doc['family']}")
        if doc["params"]:
            parts.append(" ".join(f"{k}={v}" for k, v in sorted(doc["params"].items())))
    parts.append(f"edges={edge_txt}")
    return "  ".join(parts) + "\n"
