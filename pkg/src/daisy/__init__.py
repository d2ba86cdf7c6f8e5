"""Daisy-free hypergraph constructions and certified Turan-type bounds.

The package builds shift, residue-class, augmented blow-up, and doubling
constructions of H_k^r-free r-graphs, verifies them against brute-force
oracles, and evaluates the associated Turan number / density lower bounds
in exact rational arithmetic, with interval-certified asymptotics and
seeded Monte Carlo for the circular spacing expectations.
"""

from .asympt import (
    SpacingEstimate,
    asympt_constant,
    estimate_spacing,
    eval_F,
    eval_f,
    maximize_F,
    maximize_f,
    renyi_a,
    spacing_closed_forms,
)
from .bounds import (
    BoundReport,
    CountTable,
    binomial,
    bound_C1,
    bound_C3a,
    bound_T3,
    bound_chrom,
    bound_recurs,
    count_N,
    count_P,
    count_table,
    optimize_n,
    pi_Cinf,
    pi_blowup,
    pi_r,
    pi_r_sandwich,
)
from .coloring import chromatic_number
from .cyclic import (
    CirclePointSample,
    CyclicSubset,
    ShiftGraphSpec,
    ShiftProfile,
    augmented_blowup,
    build_shift_graph,
    circle_edge_decision,
    continuous_circle_graph,
    continuous_edge_frequency,
    diameter,
    h44_recursive_graph,
    residue_class_graph,
    sample_continuous_edge,
    shift_edge_profile,
    windowed_diameter,
)
from .hypergraph import (
    DaisyWitness,
    SimpleGraph,
    UniformHypergraph,
    blow_up,
    complete_hypergraph,
    daisy_hypergraph,
    from_edge_list_text,
    induced_edge_count,
    is_daisy_free,
    is_pair_covering,
    line_graph,
    link_graph,
    read_edge_list,
    to_edge_list_text,
    write_edge_list,
)
from .intervals import IntervalValue

__version__ = "0.1.0"
