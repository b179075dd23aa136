from typing import Callable
from typing import Generic
from typing import Hashable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple
from typing import TypeVar

import networkx as nx

from .langhelpers import memoized_property

N = TypeVar("N", bound=Hashable)


class Poset(Generic[N]):
    """A finite relation on hashable nodes, read as a partial order.

    The strict relation is kept as a networkx digraph with an edge
    ``a -> b`` whenever ``a < b``.  Cover relations come from its
    transitive reduction.  Node order is the order given at construction
    and is used for every listing, so output is deterministic.

    """

    def __init__(self, nodes: Iterable[N], strict: Iterable[Tuple[N, N]]):
        self.nodes: Tuple[N, ...] = tuple(nodes)
        self._index = {node: i for i, node in enumerate(self.nodes)}
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.nodes)
        self.graph.add_edges_from(strict)

    @classmethod
    def from_relation(
        cls, nodes: Iterable[N], leq: Callable[[N, N], bool]
    ) -> "Poset[N]":
        nodes = tuple(nodes)
        return cls(
            nodes,
            [(a, b) for a in nodes for b in nodes if a != b and leq(a, b)],
        )

    @classmethod
    def from_covers(
        cls, nodes: Iterable[N], covers: Iterable[Tuple[N, N]]
    ) -> "Poset[N]":
        nodes = tuple(nodes)
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        graph.add_edges_from(covers)
        if not nx.is_directed_acyclic_graph(graph):
            raise ValueError("cover relation has a cycle")
        return cls(nodes, nx.transitive_closure_dag(graph).edges)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, node) -> bool:
        return node in self._index

    def leq(self, a: N, b: N) -> bool:
        return a == b or self.graph.has_edge(a, b)

    def lt(self, a: N, b: N) -> bool:
        return a != b and self.graph.has_edge(a, b)

    def comparable(self, a: N, b: N) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def is_partial_order(self) -> bool:
        if not nx.is_directed_acyclic_graph(self.graph):
            return False
        closure = nx.transitive_closure_dag(self.graph)
        return closure.number_of_edges() == self.graph.number_of_edges()

    def _sorted_pairs(self, pairs) -> List[Tuple[N, N]]:
        return sorted(
            pairs, key=lambda e: (self._index[e[0]], self._index[e[1]])
        )

    @memoized_property
    def covers(self) -> List[Tuple[N, N]]:
        """Cover relations ``(smaller, larger)``."""
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ValueError("relation is not antisymmetric")
        reduced = nx.transitive_reduction(self.graph)
        return self._sorted_pairs(reduced.edges)

    def lower_covers(self, node: N) -> List[N]:
        return [a for a, b in self.covers if b == node]

    def upper_covers(self, node: N) -> List[N]:
        return [b for a, b in self.covers if a == node]

    def minimal(self) -> List[N]:
        return [n for n in self.nodes if self.graph.in_degree(n) == 0]

    def maximal(self) -> List[N]:
        return [n for n in self.nodes if self.graph.out_degree(n) == 0]

    @property
    def minimum(self) -> Optional[N]:
        found = self.minimal()
        return found[0] if len(found) == 1 else None

    @property
    def maximum(self) -> Optional[N]:
        found = self.maximal()
        return found[0] if len(found) == 1 else None

    def below(self, node: N) -> List[N]:
        """Strictly smaller nodes, in node order."""
        return [n for n in self.nodes if self.lt(n, node)]

    def relabel(self, mapping: Callable[[N], Hashable]) -> "Poset":
        return Poset(
            [mapping(n) for n in self.nodes],
            [(mapping(a), mapping(b)) for a, b in self.graph.edges],
        )
