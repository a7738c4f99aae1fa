"""Finite-field graph constructions with exhaustive K_{a,b}-freeness certificates."""

from ._turan import (
    BoundsRow,
    Certificate,
    Field,
    FurediGraph,
    GraphFile,
    LemmaReport,
    Subgroup,
    TuranError,
    bounds_row,
    build_graph,
    certify_kab_free,
    count_edges,
    describe,
    expected_edge_count_g2,
    expected_vertex_count_general,
    export_graph,
    format_csv,
    format_table,
    graph_text,
    import_graph,
    is_prime,
    max_common_neighbors,
    prime_power,
    verify_lemma_AG,
    verify_lemma_L,
)

__all__ = [name for name in dir() if not name.startswith("_")]
