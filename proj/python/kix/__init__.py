"""Python bindings for the k-intersection edge-coloring toolkit."""

from _kix import (
    KixError,
    PlaneMultigraph,
    charges,
    check_lemma,
    color5,
    exhaustive_corpus,
    exists_good_coloring,
    find_configuration,
    is_good,
    lemma_ids,
    load_graph,
    parse_graph,
    print_graph,
    random_corpus,
    solve,
)

__all__ = [
    "KixError",
    "PlaneMultigraph",
    "charges",
    "check_lemma",
    "color5",
    "exhaustive_corpus",
    "exists_good_coloring",
    "find_configuration",
    "is_good",
    "lemma_ids",
    "load_graph",
    "parse_graph",
    "print_graph",
    "random_corpus",
    "solve",
]
