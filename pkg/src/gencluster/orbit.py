"""Exchange-graph exploration with canonical seed keys.

Seeds are keyed by a canonical rendering of (B, d, z, y, x) hashed with
sha256.  In "labeled" mode seeds are compared exactly; in "unlabeled" mode
the key is minimized over all simultaneous index permutations, so relabeled
seeds collapse to one node.  Breadth-first search from the initial seed
deduplicates on the key; it reports closure when no frontier remains and
flags truncation when the depth or node budget is hit.

Direction labels on edges refer to the stored representative of the source
node; in labeled mode following (node, k) twice returns to the node, while
in unlabeled mode the label is representative-relative.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import permutations

from .seedcore import Seed, mutate
from .semifield import DomainError

MAX_PERMUTATION_RANK = 8


def canonical_string(seed: Seed) -> str:
    parts = [
        "B:" + ";".join(",".join(str(v) for v in row) for row in seed.B.rows),
        "d:" + ",".join(str(v) for v in seed.d),
        "z:"
        + ";".join(
            "|".join(
                "+".join(f"{','.join(str(e) for e in elem.exponents)}:{mult}" for elem, mult in comb.terms)
                for comb in row
            )
            for row in seed.z
        ),
        "y:" + ";".join(",".join(str(e) for e in yi.exponents) for yi in seed.y),
        "x:" + ";".join(_canonical_rf(xi) for xi in seed.x),
    ]
    return "\n".join(parts)


def _canonical_rf(rf) -> str:
    def side(poly):
        return "+".join(
            f"{','.join(str(e) for e in exps)}:{coeff}"
            for exps, coeff in sorted(poly.terms.items())
        )

    return side(rf.num) + "/" + side(rf.den)


def canonical_key(seed: Seed, mode: str = "labeled") -> str:
    if mode == "labeled":
        return hashlib.sha256(canonical_string(seed).encode()).hexdigest()
    if mode == "unlabeled":
        if seed.n > MAX_PERMUTATION_RANK:
            raise DomainError(f"unlabeled keys support rank <= {MAX_PERMUTATION_RANK}")
        best = min(canonical_string(seed.permuted(p)) for p in permutations(range(seed.n)))
        return hashlib.sha256(best.encode()).hexdigest()
    raise DomainError(f"unknown canonicalization mode {mode!r}")


@dataclass(frozen=True, slots=True)
class NodeSummary:
    index: int
    depth: int
    cluster: tuple[str, ...]
    y: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class OrbitGraph:
    mode: str
    nodes: dict  # key -> NodeSummary
    edges: dict  # (key, k) -> key
    closed: bool
    truncated: bool
    max_depth: int

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        pairs = set()
        for (src, _k), dst in self.edges.items():
            pairs.add(frozenset((src, dst)) if src != dst else frozenset((src,)))
        return len(pairs)

    @property
    def distinct_clusters(self) -> int:
        return len({frozenset(summary.cluster) for summary in self.nodes.values()})


def explore(
    seed: Seed,
    max_depth: int,
    mode: str = "labeled",
    max_nodes: int = 20000,
    eps: int = 1,
) -> OrbitGraph:
    """BFS over all mutation directions, deduplicating by canonical key."""
    if max_depth < 0:
        raise DomainError("max-depth must be >= 0")
    root_key = canonical_key(seed, mode)
    nodes = {root_key: _summary(seed, 0, 0)}
    representatives = {root_key: seed}
    edges: dict[tuple[str, int], str] = {}
    if seed.n == 0:
        return OrbitGraph(mode, nodes, edges, True, False, max_depth)
    frontier = [root_key]
    depth = 0
    truncated = False
    closed = False
    while frontier:
        if depth >= max_depth:
            truncated = True
            break
        next_frontier = []
        for key in frontier:
            current = representatives[key]
            for k in range(1, seed.n + 1):
                neighbor = mutate(current, k, eps)
                nkey = canonical_key(neighbor, mode)
                if nkey not in nodes:
                    if len(nodes) >= max_nodes:
                        truncated = True
                        break
                    nodes[nkey] = _summary(neighbor, len(nodes), depth + 1)
                    representatives[nkey] = neighbor
                    next_frontier.append(nkey)
                edges[(key, k)] = nkey
            if truncated:
                break
        if truncated:
            break
        frontier = next_frontier
        depth += 1
    else:
        closed = True
    return OrbitGraph(mode, nodes, edges, closed, truncated, max_depth)


def _summary(seed: Seed, index: int, depth: int) -> NodeSummary:
    return NodeSummary(
        index,
        depth,
        tuple(str(xi) for xi in seed.x),
        tuple(str(yi) for yi in seed.y),
    )


def _ordered_nodes(graph: OrbitGraph) -> list[tuple[str, NodeSummary]]:
    return sorted(graph.nodes.items(), key=lambda kv: kv[1].index)


def to_text(graph: OrbitGraph) -> str:
    lines = [
        f"mode: {graph.mode}",
        f"nodes: {graph.node_count}",
        f"edges: {graph.edge_count}",
        f"distinct x-clusters: {graph.distinct_clusters}",
        f"closed: {str(graph.closed).lower()}",
        f"truncated: {str(graph.truncated).lower()}",
    ]
    for key, summary in _ordered_nodes(graph):
        cluster = ", ".join(summary.cluster)
        lines.append(f"n{summary.index} depth={summary.depth} key={key[:12]} cluster=[{cluster}]")
    return "\n".join(lines) + "\n"


def to_dot(graph: OrbitGraph) -> str:
    names = {key: f"n{summary.index}" for key, summary in graph.nodes.items()}
    lines = ["digraph exchange {"]
    for key, summary in _ordered_nodes(graph):
        cluster = ", ".join(summary.cluster)
        lines.append(f'  {names[key]} [label="{names[key]}: {cluster}"];')
    for (src, k), dst in sorted(graph.edges.items(), key=lambda kv: (graph.nodes[kv[0][0]].index, kv[0][1])):
        lines.append(f'  {names[src]} -> {names[dst]} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(graph: OrbitGraph) -> str:
    lines = ["source,direction,target"]
    for (src, k), dst in sorted(graph.edges.items(), key=lambda kv: (graph.nodes[kv[0][0]].index, kv[0][1])):
        lines.append(f"n{graph.nodes[src].index},{k},n{graph.nodes[dst].index}")
    return "\n".join(lines) + "\n"


def to_json(graph: OrbitGraph) -> str:
    payload = {
        "mode": graph.mode,
        "closed": graph.closed,
        "truncated": graph.truncated,
        "max_depth": graph.max_depth,
        "node_count": graph.node_count,
        "edge_count": graph.edge_count,
        "distinct_clusters": graph.distinct_clusters,
        "nodes": [
            {
                "name": f"n{summary.index}",
                "key": key,
                "depth": summary.depth,
                "cluster": list(summary.cluster),
                "y": list(summary.y),
            }
            for key, summary in _ordered_nodes(graph)
        ],
        "edges": [
            {"source": f"n{graph.nodes[src].index}", "direction": k, "target": f"n{graph.nodes[dst].index}"}
            for (src, k), dst in sorted(
                graph.edges.items(), key=lambda kv: (graph.nodes[kv[0][0]].index, kv[0][1])
            )
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
