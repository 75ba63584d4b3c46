"""Canonical JSON instance documents and edge-list graph files.

The on-disk instance format is a JSON object {"m", "agents", "metadata"}
with 0-based, sorted index lists and sorted keys, so serializing the same
instance always yields the same bytes. Graphs are plain text, one "u v"
edge per line, 0-based.
"""

import json

from .core import Belief, VotingInstance
from .reductions import UndirectedGraph


def instance_to_document(instance, metadata=None):
    doc = {
        "m": instance.m,
        "agents": [
            {"plus": sorted(b.plus_set), "known": sorted(b.known_set)}
            for b in instance.beliefs
        ],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def document_to_instance(doc):
    """Parse a document dict into (VotingInstance, metadata).

    Raises ValueError with a field diagnostic on malformed input; an
    offending index names the agent it belongs to.
    """
    if not isinstance(doc, dict):
        raise ValueError("instance document must be a JSON object")
    m = doc.get("m")
    if not isinstance(m, int) or m < 1:
        raise ValueError("field 'm' must be a positive integer")
    agents = doc.get("agents")
    if not isinstance(agents, list) or not agents:
        raise ValueError("field 'agents' must be a nonempty list")
    beliefs = []
    for i, entry in enumerate(agents):
        if not isinstance(entry, dict):
            raise ValueError("agent %d: entry must be an object" % i)
        for field in ("plus", "known"):
            values = entry.get(field)
            if not isinstance(values, list):
                raise ValueError("agent %d: field %r must be a list" % (i, field))
            for p in values:
                if not isinstance(p, int) or not 0 <= p < m:
                    raise ValueError(
                        "agent %d: %s index %r out of range [0, %d)"
                        % (i, field, p, m)
                    )
        beliefs.append(
            Belief(frozenset(entry["plus"]), frozenset(entry["known"]))
        )
    metadata = doc.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        raise ValueError("field 'metadata' must be an object")
    return VotingInstance(m, beliefs), metadata


def dumps_instance(instance, metadata=None):
    """Canonical serialization: sorted keys, two-space indent, newline."""
    doc = instance_to_document(instance, metadata)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads_instance(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError("invalid JSON: %s" % exc) from exc
    return document_to_instance(doc)


def parse_graph(text):
    """Edge-list text -> UndirectedGraph; vertex count is max index + 1."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError("line %d: expected 'u v', got %r" % (lineno, raw))
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError("line %d: non-integer vertex in %r" % (lineno, raw))
        if u < 0 or v < 0:
            raise ValueError("line %d: negative vertex in %r" % (lineno, raw))
        edges.append((u, v))
    if not edges:
        raise ValueError("graph file has no edges")
    count = max(max(e) for e in edges) + 1
    return UndirectedGraph(count, edges)


def format_graph(graph):
    return "".join("%d %d\n" % e for e in graph.edges)
