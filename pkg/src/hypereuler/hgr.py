"""Text formats: the `.hgr` hypergraph format and certificate serialization.

`.hgr` grammar: `%` starts a comment to end-of-line; lines empty after
comment stripping are skipped; the first content line is `p hgr <n> <m>`,
followed by exactly m lines `e <v1> <v2> ...` with 1-based vertex indices
(zero vertices per edge is allowed). Vertex labels 1..n are kept verbatim
in memory; edge ids are 0-based positions.
"""

from __future__ import annotations

from typing import List

from .core import Hypergraph
from .errors import CertificateInvalid, CountMismatch, HgrSyntaxError, IndexOutOfRange, NoCertificate
from .trails import ClosedTrail, EulerFamily


def _content_lines(text: str) -> List[tuple]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].rstrip()
        if line.strip():
            out.append((lineno, line.strip()))
    return out


def parse(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise HgrSyntaxError(1, "missing 'p hgr <n> <m>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "hgr":
        raise HgrSyntaxError(lineno, "expected 'p hgr <n> <m>'")
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise HgrSyntaxError(lineno, "vertex and edge counts must be integers")
    if n < 1 or m < 0:
        raise HgrSyntaxError(lineno, "need n >= 1 and m >= 0")
    body = lines[1:]
    if len(body) < m:
        raise CountMismatch(f"header promises {m} edge lines, found {len(body)}")
    if len(body) > m:
        extra_lineno, _ = body[m]
        raise HgrSyntaxError(extra_lineno, "unexpected content after the last edge line")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if parts[0] != "e":
            raise HgrSyntaxError(lineno, "edge lines must start with 'e'")
        try:
            vs = [int(tok) for tok in parts[1:]]
        except ValueError:
            raise HgrSyntaxError(lineno, "vertex indices must be integers")
        for v in vs:
            if not (1 <= v <= n):
                raise IndexOutOfRange(lineno, f"vertex index {v} outside 1..{n}")
        edges.append(frozenset(vs))
    return Hypergraph(frozenset(range(1, n + 1)), tuple(edges))


def emit(h: Hypergraph) -> str:
    """Render a hypergraph; vertices are relabeled to 1..n in sorted order
    (the identity when labels already are 1..n)."""
    relabel = {v: i for i, v in enumerate(sorted(h.vertices), start=1)}
    lines = [f"p hgr {h.n} {h.m}"]
    for e in h.edges:
        lines.append(" ".join(["e"] + [str(relabel[v]) for v in sorted(e)]))
    return "\n".join(lines) + "\n"


def _trail_line(t: ClosedTrail) -> str:
    toks = [str(t.anchor_vertices[0])]
    for i, eid in enumerate(t.edge_ids):
        toks.append(f"e{eid}")
        toks.append(str(t.anchor_vertices[i + 1]))
    return "T: " + " ".join(toks)


def emit_certificate(family: EulerFamily) -> str:
    """Serialize a certificate; round-trips through ``parse_certificate``."""
    if family is None:
        raise NoCertificate("no certificate to serialize for a negative outcome")
    lines = [f"FAMILY k={len(family.trails)}"]
    if family.is_tour:
        lines.append("TOUR")
    lines.extend(_trail_line(t) for t in family.trails)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> EulerFamily:
    lines = [ln for _, ln in _content_lines(text)]
    if not lines or not lines[0].startswith("FAMILY k="):
        raise CertificateInvalid("certificate must start with 'FAMILY k=<t>'")
    try:
        k = int(lines[0][len("FAMILY k=") :])
    except ValueError:
        raise CertificateInvalid("malformed trail count")
    body = lines[1:]
    if body and body[0] == "TOUR":
        body = body[1:]
    trails = []
    for line in body:
        if not line.startswith("T:"):
            raise CertificateInvalid(f"unexpected certificate line: {line!r}")
        toks = line[2:].split()
        if len(toks) % 2 == 0 or len(toks) < 5:
            raise CertificateInvalid("trail line does not alternate v e v ... v")
        vs, es = [], []
        try:
            for i, tok in enumerate(toks):
                if i % 2 == 0:
                    vs.append(int(tok))
                else:
                    if not tok.startswith("e"):
                        raise ValueError(tok)
                    es.append(int(tok[1:]))
        except ValueError:
            raise CertificateInvalid(f"malformed token in trail line: {line!r}")
        try:
            trails.append(ClosedTrail(tuple(vs), tuple(es)))
        except ValueError as exc:
            raise CertificateInvalid(str(exc))
    if len(trails) != k:
        raise CertificateInvalid(f"header promises {k} trails, found {len(trails)}")
    return EulerFamily.of(trails)
