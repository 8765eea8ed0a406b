"""Clique, biclique and cover algorithms for k-degenerate graphs."""

from .approx import (
    EXACT,
    GREEDY,
    CliqueSolver,
    VertexCoverResult,
    max_clique_approx,
    max_clique_exact,
    vertex_cover_approx,
)
from .biclique import (
    Biclique,
    common_neighbors_batch,
    greedy_independent_set,
    list_maximal_bicliques,
    ramsey_threshold,
    solve_induced_rl_biclique,
    solve_rl_biclique,
)
from .cliques import (
    MaximalCliqueReport,
    bron_kerbosch_pivot,
    count_maximal_cliques,
    iter_maximal_cliques,
    list_maximal_cliques,
)
from .fixed import count_l_cliques, list_l_cliques, list_triangles, remove_triangles
from .graph import (
    DegeneracyOrdering,
    Graph,
    GraphFormatError,
    LocalGraph,
    SubgraphFamily,
    build_family,
    degeneracy_ordering,
    induced_subgraph,
    load_graph,
    write_graph,
)
from .suffix import SuffixIndex

__version__ = "0.1.0"
