"""Connectivity primitives over (id, u, v) edge triples.

Everything is iterative (no recursion-depth limits) and deterministic: vertex
and edge identifiers are processed in sorted order.
"""

from __future__ import annotations


def adjacency(vertex_ids, edge_triples) -> dict:
    """vertex -> sorted tuple of (edge_id, other_endpoint)."""
    adj = {v: [] for v in vertex_ids}
    for eid, u, v in edge_triples:
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    return {v: tuple(sorted(pairs)) for v, pairs in adj.items()}


def connected_components(vertex_ids, edge_triples) -> list:
    """Vertex sets of the components, sorted by their least vertex."""
    adj = adjacency(vertex_ids, edge_triples)
    seen = set()
    components = []
    for root in sorted(vertex_ids):
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        comp = {root}
        while stack:
            v = stack.pop()
            for _, w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        components.append(comp)
    return components


def biconnected_components(vertex_ids, edge_triples) -> list:
    """Blocks as (frozenset of vertices, frozenset of edge ids).

    A block with one edge is an isthmus; isolated vertices appear as blocks
    with no edges.  Parallel edges land in the same block (they form a digon).
    Results are sorted by (least vertex, least edge id) for determinism.
    """
    adj = adjacency(vertex_ids, edge_triples)
    endpoints = {eid: (u, v) for eid, u, v in edge_triples}
    disc = {}
    low = {}
    blocks = []
    counter = 0

    for root in sorted(vertex_ids):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack = []
        # frames: (vertex, entering edge id, iterator over incident pairs)
        frames = [(root, None, iter(adj[root]))]
        while frames:
            v, in_eid, it = frames[-1]
            advanced = False
            for eid, w in it:
                if eid == in_eid:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(eid)
                    frames.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
                # else: already handled from the other endpoint
            if advanced:
                continue
            frames.pop()
            if not frames:
                continue
            parent = frames[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                group = []
                while True:
                    top = edge_stack.pop()
                    group.append(top)
                    if top == in_eid:
                        break
                verts = set()
                for eid in group:
                    verts.update(endpoints[eid])
                blocks.append((frozenset(verts), frozenset(group)))
        if not adj[root]:
            blocks.append((frozenset((root,)), frozenset()))

    blocks.sort(key=lambda b: (sorted(b[0]), sorted(b[1])))
    return blocks


def bridge_edges(vertex_ids, edge_triples) -> frozenset:
    """Edge ids lying on no circle (single-edge blocks)."""
    return frozenset(
        next(iter(edges))
        for _, edges in biconnected_components(vertex_ids, edge_triples)
        if len(edges) == 1
    )
