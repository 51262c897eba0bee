"""Term co-occurrence graph and the structural statistics derived from it.

Two notions of term importance feed the weighting scheme downstream:

- eigenvector centrality on the full graph (global importance): the dominant
  eigenvector of the weighted adjacency F, computed by shifted power
  iteration. The shift (largest row sum) guarantees convergence on bipartite
  structures, where plain power iteration oscillates, and is proportional to
  the edge-weight scale, so centralities are invariant under uniform
  rescaling of weights.
- within-subgraph degree (local importance): edge counts inside the subgraph
  induced by a term cohort.

The number of latent topics is taken to be the number of communities found
by Louvain modularity maximization on the weighted graph.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import networkx as nx
import numpy as np
from scipy import sparse

from .corpus import TermSentenceMatrix, Vocabulary
from .errors import EmptyCohort, NoEdges, NonConvergenceWarning


@dataclass(frozen=True)
class CoocGraph:
    """Undirected weighted graph over vocabulary ids. adjacency[i, j] counts
    the sentences containing both term i and term j; the diagonal is zero."""

    adjacency: sparse.csr_matrix
    n_sentences: int

    @property
    def n_nodes(self) -> int:
        return self.adjacency.shape[0]

    @property
    def n_edges(self) -> int:
        return self.adjacency.nnz // 2

    def neighbors(self, term_id: int) -> np.ndarray:
        lo, hi = self.adjacency.indptr[term_id], self.adjacency.indptr[term_id + 1]
        return self.adjacency.indices[lo:hi]

    def degrees(self) -> np.ndarray:
        """Unweighted degree per node."""
        return np.diff(self.adjacency.indptr)


@dataclass(frozen=True)
class InducedSubgraph:
    """Restriction of a CoocGraph to a node subset, keeping only internal
    edges. degree_of maps each member id to its edge count inside the
    subgraph."""

    node_ids: frozenset[int]
    degree_of: dict[int, int]


def build_cooccurrence_graph(tsm: TermSentenceMatrix) -> CoocGraph:
    """Pairwise sentence-co-occurrence counts from the binary incidence
    matrix. A @ A.T counts shared sentences per term pair; the diagonal
    (each term with itself) is discarded. Edgeless graphs are permitted."""
    counts = (tsm.matrix @ tsm.matrix.T).tocsr()
    counts.setdiag(0)
    counts.eliminate_zeros()
    return CoocGraph(adjacency=counts, n_sentences=tsm.n)


def eigenvector_centrality(
    graph: CoocGraph, max_iter: int = 1000, tol: float = 1e-10
) -> np.ndarray:
    """Dominant eigenvector of the adjacency, L2-normalized, nonnegative.

    Power iteration runs on the submatrix of non-isolated nodes with a
    diagonal shift equal to the largest row sum; isolated nodes get exactly
    0. Convergence is declared when the Rayleigh residual ||Fx - lx|| / l
    drops below tol; if max_iter is exhausted first, a NonConvergenceWarning
    is emitted and the last iterate is returned.
    """
    if graph.n_edges == 0:
        raise NoEdges("centrality undefined on an edgeless graph")

    row_sums = np.asarray(graph.adjacency.sum(axis=1)).ravel()
    active = np.flatnonzero(row_sums > 0)
    sub = graph.adjacency[active][:, active]
    shift = row_sums.max()

    x = np.full(len(active), 1.0 / np.sqrt(len(active)))
    converged = False
    for _ in range(max_iter):
        fx = sub @ x
        rayleigh = float(x @ fx)
        residual = np.linalg.norm(fx - rayleigh * x)
        if rayleigh > 0 and residual / rayleigh <= tol:
            converged = True
            break
        x = fx + shift * x
        x /= np.linalg.norm(x)
    if not converged:
        warnings.warn(
            f"power iteration did not reach tol={tol} within {max_iter} iterations",
            NonConvergenceWarning,
        )

    centrality = np.zeros(graph.n_nodes)
    centrality[active] = x
    return centrality


def detect_topic_count(graph: CoocGraph, seed: int = 42) -> int:
    """Community count of the weighted graph under Louvain modularity
    maximization (resolution 1.0), clamped to [1, min(m, n)] so the result
    is always usable as a factorization rank. Isolated nodes count as
    singleton communities before clamping. Deterministic for a fixed seed."""
    g = nx.from_scipy_sparse_array(graph.adjacency)
    communities = nx.community.louvain_communities(
        g, weight="weight", resolution=1.0, threshold=1e-9, seed=seed
    )
    upper = max(1, min(graph.n_nodes, graph.n_sentences))
    return max(1, min(len(communities), upper))


def induce_subgraph(graph: CoocGraph, nodes: frozenset[int] | set[int]) -> InducedSubgraph:
    """Subgraph on the given nodes with every edge of the parent graph whose
    endpoints both lie inside. Degrees are unweighted edge counts."""
    if not nodes:
        raise EmptyCohort("cannot induce a subgraph on an empty node set")
    order = np.array(sorted(nodes), dtype=np.intp)
    if order[0] < 0 or order[-1] >= graph.n_nodes:
        raise IndexError(f"node ids out of range: {order[0]}..{order[-1]}")
    sub = graph.adjacency[order][:, order]
    inner_degrees = np.diff(sub.tocsr().indptr)
    return InducedSubgraph(
        node_ids=frozenset(int(i) for i in order),
        degree_of={int(i): int(d) for i, d in zip(order, inner_degrees)},
    )


def dump_edges(graph: CoocGraph, vocab: Vocabulary, path: str) -> None:
    """Debug dump: one `term_a<TAB>term_b<TAB>weight` line per edge, sorted."""
    coo = graph.adjacency.tocoo()
    lines = sorted(
        f"{vocab.term(int(i))}\t{vocab.term(int(j))}\t{int(w)}"
        for i, j, w in zip(coo.row, coo.col, coo.data)
        if i < j
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))
