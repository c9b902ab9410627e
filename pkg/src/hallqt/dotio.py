"""Seed graphs as DOT text, with label-aware isomorphism checks.

A window seed serializes directly, one node per vertex; a chain seed
serializes through its slots, each node labeled by the object attached
at its box's closed end.  The parser reads the same dialect back, and
comparison runs graph isomorphism respecting node kinds and labels, so
a transcription of a hand-drawn quiver can be matched against a
generated seed regardless of vertex placement or identifier choice.
"""

from __future__ import annotations

import re
from typing import Sequence

import networkx as nx
from networkx.algorithms import isomorphism

from .qcluster import ChainSeed, QuantumSeed, box_closed_end

__all__ = ["seed_graph", "chain_figure_graph", "graph_dot", "parse_dot",
           "isomorphic", "graph_diff"]


def _marker_node(label: tuple) -> tuple[str, str]:
    return "K_%d_%d" % label[1:], "K(%d,%d)" % label[1:]


def _add_arrows(g: nx.MultiDiGraph, seed: QuantumSeed,
                node: dict) -> None:
    for u, uid in node.items():
        for w, wid in node.items():
            for _ in range(max(0, seed.b[seed.idx(u)][seed.idx(w)])):
                g.add_edge(uid, wid)


def seed_graph(seed: QuantumSeed) -> nx.MultiDiGraph:
    """Quiver of a window seed with object names as node labels."""
    g = nx.MultiDiGraph()
    node: dict = {}
    for x in seed.vertices:
        if seed.is_marker(x):
            node[x], label = _marker_node(x)
            g.add_node(node[x], kind="K", label=label, frozen=True)
        else:
            node[x] = "V_%d_%d" % x
            g.add_node(node[x], kind="main",
                       label=seed.dc.name(seed.dc.happel(*x)),
                       frozen=x in seed.frozen)
    _add_arrows(g, seed, node)
    return g


def chain_figure_graph(cs: ChainSeed, slots: Sequence[int] | None = None,
                       marks: Sequence | None = None) -> nx.MultiDiGraph:
    """Quiver of a chain seed's slots, labeled by closed-end objects.

    Restricting ``slots`` or ``marks`` draws the corresponding full
    subquiver, which is how a finite picture of a stabilized infinite
    seed is cut out.
    """
    seed, chain = cs.seed, cs.chain
    seq = chain.seq
    if slots is None:
        slots = range(1, len(chain) + 1)
    if marks is None:
        marks = seed.markers()
    g = nx.MultiDiGraph()
    node: dict = {}
    for s in slots:
        k = box_closed_end(chain, s)
        sid = "S%d" % s
        node[cs.slot_vertex[s - 1]] = sid
        g.add_node(sid, kind="main",
                   label=seed.dc.name(seed.dc.happel(seq.i(k), seq.p(k))),
                   frozen=cs.slot_vertex[s - 1] in seed.frozen)
    for m in marks:
        node[m], label = _marker_node(m)
        g.add_node(node[m], kind="K", label=label, frozen=True)
    _add_arrows(g, seed, node)
    return g


def graph_dot(g: nx.MultiDiGraph) -> str:
    """Render a seed graph as deterministic DOT text."""
    lines = ["digraph seed {"]
    for n in sorted(g.nodes):
        d = g.nodes[n]
        attrs = 'label="%s"' % d["label"]
        if d["kind"] != "main":
            attrs += ", kind=%s" % d["kind"]
        if d.get("frozen"):
            attrs += ", frozen=true"
        lines.append('  "%s" [%s];' % (n, attrs))
    for u, w in sorted(g.edges(keys=False)):
        lines.append('  "%s" -> "%s";' % (u, w))
    lines.append("}")
    return "\n".join(lines) + "\n"


_ID = r'"?([\w()\[\].\-]+)"?'
_NODE_RE = re.compile(r"^%s\s*\[(.+)\]$" % _ID)
_EDGE_RE = re.compile(r"^%s\s*->\s*%s$" % (_ID, _ID))
_ATTR_RE = re.compile(r'(\w+)\s*=\s*(?:"([^"]*)"|([\w()\[\].\-]+))')


def parse_dot(text: str) -> nx.MultiDiGraph:
    """Read the DOT dialect written by :func:`graph_dot`."""
    g = nx.MultiDiGraph()
    for raw in text.splitlines():
        line = raw.strip().rstrip(";").strip()
        if not line or line.startswith(("digraph", "}", "//", "#")):
            continue
        em = _EDGE_RE.match(line)
        if em:
            g.add_edge(em.group(1), em.group(2))
            continue
        nm = _NODE_RE.match(line)
        assert nm, "unreadable line: %r" % raw
        attrs = {}
        for am in _ATTR_RE.finditer(nm.group(2)):
            attrs[am.group(1)] = (am.group(2) if am.group(2) is not None
                                  else am.group(3))
        g.add_node(nm.group(1), kind=attrs.get("kind", "main"),
                   label=attrs.get("label", nm.group(1)),
                   frozen=attrs.get("frozen") == "true")
    return g


def isomorphic(g1: nx.MultiDiGraph, g2: nx.MultiDiGraph) -> bool:
    """Directed graph isomorphism matching node kind and label."""
    nm = isomorphism.categorical_node_match(["kind", "label"], [None, None])
    return isomorphism.MultiDiGraphMatcher(g1, g2,
                                           node_match=nm).is_isomorphic()


def graph_diff(g1: nx.MultiDiGraph, g2: nx.MultiDiGraph) -> list[str]:
    """Label-level differences, as printable lines; empty when matching.

    When all labels are distinct this is equivalent to isomorphism and
    pinpoints any mismatch; with repeated labels it is only necessary,
    so :func:`isomorphic` stays the deciding check.
    """
    from collections import Counter

    out = []
    n1 = Counter((d["kind"], d["label"]) for _, d in g1.nodes(data=True))
    n2 = Counter((d["kind"], d["label"]) for _, d in g2.nodes(data=True))
    for key in sorted(set(n1) ^ set(n2) |
                      {k for k in n1 if n1[k] != n2.get(k)}):
        out.append("node %s/%s: %d vs %d"
                   % (key[0], key[1], n1.get(key, 0), n2.get(key, 0)))
    e1 = Counter((g1.nodes[u]["label"], g1.nodes[w]["label"])
                 for u, w in g1.edges(keys=False))
    e2 = Counter((g2.nodes[u]["label"], g2.nodes[w]["label"])
                 for u, w in g2.edges(keys=False))
    for key in sorted({k for k in e1 | e2 if e1.get(k, 0) != e2.get(k, 0)}):
        out.append("arrow %s -> %s: %d vs %d"
                   % (key[0], key[1], e1.get(key, 0), e2.get(key, 0)))
    return out
