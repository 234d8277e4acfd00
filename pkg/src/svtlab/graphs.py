"""Connectedness graphs on the minimal primes and the punctured-spectrum test.

Theta joins two minimal primes when their sum is not primary to the
maximal ideal; Gamma lives on the maximal-dimension primes and joins two
when their sum has height one in S/I.  Spectrum connectivity is decided
through Theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ideals import (
    CoordinatePrime,
    SquareFreeIdeal,
    dim_quotient,
    is_m_primary,
    minimal_primes,
    popcount,
    sum_ideals,
)

THETA = "theta"
GAMMA = "gamma"


@dataclass(frozen=True)
class ConnectivityGraph:
    kind: str
    vertices: tuple  # CoordinatePrime, lexicographic by variable set
    edges: frozenset  # of (i, j) index pairs, i < j

    def __post_init__(self):
        t = len(self.vertices)
        for i, j in self.edges:
            if not (0 <= i < j < t):
                raise ValueError("edge references invalid vertex indices")

    def adjacency(self) -> list:
        adj = [set() for _ in self.vertices]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


def theta_graph(I: SquareFreeIdeal) -> ConnectivityGraph:
    """Edge {i,j} iff p_i + p_j is not m-primary."""
    primes = minimal_primes(I)
    edges = set()
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            s = sum_ideals(primes[i].as_ideal(), primes[j].as_ideal())
            if not is_m_primary(s):
                edges.add((i, j))
    return ConnectivityGraph(THETA, primes, frozenset(edges))


def quotient_height(I: SquareFreeIdeal, prime_mask: int) -> int:
    """Height of the coordinate prime on prime_mask taken in S/I.

    |vars| minus the largest minimal prime of I contained in it; chains of
    coordinate primes in S/I realize exactly these lengths (see the brute
    force in the test suite).
    """
    inside = [
        p.height for p in minimal_primes(I) if p.variables & prime_mask == p.variables
    ]
    if not inside:
        raise ValueError("the prime does not contain a minimal prime of I")
    return popcount(prime_mask) - max(inside)


def gamma_graph(I: SquareFreeIdeal) -> ConnectivityGraph:
    """Hochster-Huneke graph on the maximal-dimension minimal primes."""
    dim = dim_quotient(I)
    n = I.context.n
    primes = tuple(
        p for p in minimal_primes(I) if n - p.height == dim
    )
    edges = set()
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            union = primes[i].variables | primes[j].variables
            if quotient_height(I, union) == 1:
                edges.add((i, j))
    return ConnectivityGraph(GAMMA, primes, frozenset(edges))


def is_connected(G: ConnectivityGraph) -> bool:
    """Union-find connectivity; a single vertex is connected."""
    t = len(G.vertices)
    if t == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    parent = list(range(t))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in G.edges:
        parent[find(i)] = find(j)
    return len({find(i) for i in range(t)}) == 1


def connected_ordering(G: ConnectivityGraph) -> Optional[list]:
    """A vertex order whose every prefix induces a connected subgraph.

    BFS from vertex 0 gives one whenever the graph is connected; None if it
    is not.
    """
    if not is_connected(G):
        return None
    adj = G.adjacency()
    order = [0]
    seen = {0}
    frontier = sorted(adj[0])
    while frontier:
        v = frontier.pop(0)
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        frontier.extend(sorted(adj[v] - seen))
    return order


def punctured_spectrum_connected(I: SquareFreeIdeal) -> bool:
    return is_connected(theta_graph(I))


def to_dot(G: ConnectivityGraph) -> str:
    lines = [f"graph {G.kind} {{"]
    for idx, p in enumerate(G.vertices):
        lines.append(f'  v{idx} [label="{p.label()}"];')
    for i, j in sorted(G.edges):
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
