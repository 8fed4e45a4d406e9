"""Rainbow colorings of 2-connected graphs with at most ceil(n/2) colors,
built along a nonincreasing ear decomposition and checked by exact search."""

from .coloring import (
    ConstructionTrace,
    Stage,
    TraceStep,
    color_base_with_first_ear,
    color_chords,
    color_cycle,
    color_short_ears,
    construct_coloring,
    extend_even_ear,
    extend_odd_ear,
    lemma2_pipeline,
)
from .decomposition import Ear, EarDecomposition, ear_decomposition, find_longest_ear
from .edge_coloring import EdgeColoring
from .graph import Cycle, Graph, find_even_cycle, is_two_connected, parse_edge_list, serialize_edge_list
from .oracle import (
    Corpus,
    RcResult,
    build_corpus,
    conjecture_scan,
    exact_rc,
    find_hamiltonian_cycle,
)
from .verification import (
    RainbowReport,
    RainbowWitness,
    find_rainbow_path,
    is_noncomplete,
    is_rainbow_connected,
)

__version__ = "0.1.0"
