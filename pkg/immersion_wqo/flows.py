#
# MIT License
#
# (C) Copyright 2026 immersion-wqo contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR
# OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
# ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
"""
Max-flow helpers over multidigraphs.

Parallel edges are aggregated into arc capacities for networkx; routed units
are mapped back onto concrete edge ids in edge order.
"""

from collections import Counter, defaultdict

import networkx as nx

_SOURCE = ('flow', 'source')
_SINK = ('flow', 'sink')


def capacity_graph(host, edge_ids=None, avoid=(), directed=True):
    """Return a networkx graph with one arc per (tail, head) and its multiplicity.

    Args:
        host (MultiDigraph): the digraph.
        edge_ids (iterable): restrict to these edges; all edges when None.
        avoid (iterable): vertices whose edges are dropped.
        directed (bool): build a DiGraph, else an undirected Graph.

    Returns:
        networkx.DiGraph or networkx.Graph: arcs carry a 'capacity'.
    """
    keep = None if edge_ids is None else set(edge_ids)
    avoid = set(avoid)
    graph = nx.DiGraph() if directed else nx.Graph()
    graph.add_nodes_from(v for v in host.vertices if v not in avoid)
    for edge in host.edges:
        if edge.tail == edge.head or (keep is not None and edge.id not in keep):
            continue
        if edge.tail in avoid or edge.head in avoid:
            continue
        if graph.has_edge(edge.tail, edge.head):
            graph[edge.tail][edge.head]['capacity'] += 1
        else:
            graph.add_edge(edge.tail, edge.head, capacity=1)
    return graph


def max_flow_value(host, source, sink, edge_ids=None, avoid=(), directed=True):
    """Return the maximum number of edge-disjoint paths from source to sink.

    Paths are directed unless directed is False. Vertices in avoid other
    than source and sink are deleted first.
    """
    avoid = set(avoid) - {source, sink}
    graph = capacity_graph(host, edge_ids, avoid, directed)
    if source == sink or source not in graph or sink not in graph:
        return 0
    return nx.maximum_flow_value(graph, source, sink)


def minimum_cut(host, source, sink, directed=True):
    """Return (value, source side) of the minimum cut closest to source.

    The source side is the set of vertices reachable from source in the
    residual network of a maximum flow, the unique inclusion-minimal side.
    """
    graph = capacity_graph(host, directed=directed)
    value, (reachable, _) = nx.minimum_cut(graph, source, sink)
    return value, set(reachable)


def route_units(host, sources, sinks, edge_ids=None):
    """Find edge-disjoint directed paths from a multiset of sources to sinks.

    Args:
        host (MultiDigraph): the digraph.
        sources (list): one start vertex per path, repeats allowed.
        sinks (list): one end vertex per path, repeats allowed.
        edge_ids (iterable): the edges paths may use; all edges when None.

    Returns:
        list or None: (start, end, edge id list) per path, or None when fewer
            than len(sources) edge-disjoint paths exist.
    """
    if len(sources) != len(sinks):
        return None
    sources = Counter(sources)
    sinks = Counter(sinks)
    routed = []
    for vertex in list(sources):
        trivial = min(sources[vertex], sinks.get(vertex, 0))
        for _ in range(trivial):
            routed.append((vertex, vertex, []))
        sources[vertex] -= trivial
        sinks[vertex] -= trivial
    units = sum(sources.values())
    if units == 0:
        return routed

    keep = None if edge_ids is None else set(edge_ids)
    pool = defaultdict(list)
    graph = nx.DiGraph()
    graph.add_nodes_from(host.vertices)
    for edge in host.edges:
        if edge.tail == edge.head or (keep is not None and edge.id not in keep):
            continue
        pool[(edge.tail, edge.head)].append(edge.id)
        if graph.has_edge(edge.tail, edge.head):
            graph[edge.tail][edge.head]['capacity'] += 1
        else:
            graph.add_edge(edge.tail, edge.head, capacity=1)
    for vertex, count in sources.items():
        if count:
            graph.add_edge(_SOURCE, vertex, capacity=count)
    for vertex, count in sinks.items():
        if count:
            graph.add_edge(vertex, _SINK, capacity=count)
    value, flow = nx.maximum_flow(graph, _SOURCE, _SINK)
    if value < units:
        return None

    remaining = {(u, v): amount for u, targets in flow.items()
                 for v, amount in targets.items() if amount > 0}
    for _ in range(units):
        walk = [_SOURCE]
        while walk[-1] != _SINK:
            current = walk[-1]
            step = next(v for v in graph.successors(current) if remaining.get((current, v), 0) > 0)
            remaining[(current, step)] -= 1
            if step in walk:
                del walk[walk.index(step) + 1:]
            else:
                walk.append(step)
        vertices = walk[1:-1]
        edges = [pool[(vertices[i], vertices[i + 1])].pop(0) for i in range(len(vertices) - 1)]
        routed.append((vertices[0], vertices[-1], edges))
    return routed
