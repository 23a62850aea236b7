"""Realization documents and their JSON, DOT and TSV encodings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .constructors import ConstructionCertificate
from .multigraph import Multigraph, check_triangular, degree_array

FORMATS = ("json", "dot", "tsv")


@dataclass
class RealizationDocument:
    n: int
    degrees: List[int]
    edges: List[Tuple[int, int, int]]
    certificate: dict
    verified: bool = False

    def __post_init__(self):
        self.edges = [tuple(int(x) for x in e) for e in self.edges]
        if any(m < 1 or u >= v for u, v, m in self.edges):
            raise ValueError("edges must be (u, v, m) with u < v and m >= 1")
        if any(a[:2] >= b[:2] for a, b in zip(self.edges, self.edges[1:])):
            raise ValueError("edges must be strictly sorted by (u, v)")

    @property
    def branch(self) -> str:
        return self.certificate.get("branch", "")

    @classmethod
    def from_realization(cls, g: Multigraph, degrees, cert: ConstructionCertificate,
                         verified: bool = True) -> "RealizationDocument":
        return cls(n=g.n, degrees=[int(x) for x in degrees], edges=g.edge_list(),
                   certificate=cert.to_dict(), verified=verified)

    def graph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "degrees": list(self.degrees),
            "edges": [list(e) for e in self.edges],
            "certificate": self.certificate,
            "verified": self.verified,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RealizationDocument":
        return cls(n=int(data["n"]), degrees=[int(x) for x in data["degrees"]],
                   edges=[tuple(e) for e in data["edges"]], certificate=data["certificate"],
                   verified=bool(data["verified"]))


def verify_document(doc: RealizationDocument) -> bool:
    """Re-run the degree and triangularity verifiers on a document's edges."""
    g = doc.graph()
    return (np.array_equal(degree_array(g), np.asarray(doc.degrees, dtype=np.int64))
            and check_triangular(g).is_triangular)


def to_json(doc: RealizationDocument) -> str:
    return json.dumps(doc.to_dict(), separators=(",", ":")) + "\n"


def from_json(text: str) -> RealizationDocument:
    return RealizationDocument.from_dict(json.loads(text))


def to_dot(doc: RealizationDocument) -> str:
    lines = ["graph G {", f"  // branch={doc.branch} verified={str(doc.verified).lower()}"]
    lines.extend(f"  v{i};" for i in range(1, doc.n + 1))
    lines.extend(f"  v{u} -- v{v} [m={m}];" for u, v, m in doc.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_tsv(doc: RealizationDocument) -> str:
    lines = [f"# n={doc.n} branch={doc.branch}"]
    lines.extend(f"{u}\t{v}\t{m}" for u, v, m in doc.edges)
    return "\n".join(lines) + "\n"


def from_tsv(text: str) -> Tuple[int, str, List[Tuple[int, int, int]]]:
    """Parse a TSV edge list back into ``(n, branch, edges)``."""
    header, *rows = [ln for ln in text.splitlines() if ln.strip()]
    fields = dict(tok.split("=", 1) for tok in header.lstrip("# ").split())
    edges = [tuple(int(x) for x in row.split("\t")) for row in rows]
    return int(fields["n"]), fields.get("branch", ""), edges


def emit(doc: RealizationDocument, fmt: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "dot":
        return to_dot(doc)
    if fmt == "tsv":
        return to_tsv(doc)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
