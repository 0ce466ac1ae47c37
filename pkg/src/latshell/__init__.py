"""Finite lattice toolkit: modularity structure detection, chain-edge
labelings, Mobius numbers via decreasing chains, lattice family
constructors, and independent topological oracles."""

from .errors import (
    BadId,
    BadParams,
    BadPermutation,
    CycleDetected,
    LatshellError,
    NotACoatom,
    NotAGroup,
    NotALattice,
    NotAnMChain,
    NotASubgroup,
    NotBounded,
    NotComodernistic,
    NotComparable,
    NotCompatible,
    NotSolvable,
    TooLarge,
)
from .kernels import active_backend
from .poset import (
    Lattice,
    Poset,
    StructureSummary,
    as_lattice,
    count_linear_extensions,
    dual,
    interval,
    is_isomorphic,
    maximal_chains,
    structure_queries,
)
from .modularity import (
    ModularityReport,
    SubMChain,
    find_m_chain,
    find_sub_m_chain,
    is_comodernistic,
    is_geometric,
    is_left_modular,
    is_left_modular_coatom,
    is_modernistic,
    is_modular_element,
    is_semimodular,
    left_modular_maximal_is_modular_check,
    left_modular_mask,
    schmidt_condition3,
)
from .labeling import (
    ComodernisticLabeling,
    LabeledChain,
    SupersolvableLabeling,
    comodernistic_labeling,
    decreasing_chains,
    first_decreasing_step_complement_check,
    mobius_from_labeling,
    no_repeat_words_check,
    ss_el_labeling,
    verify_cl,
    word_of,
)
from .topology import (
    SimplicialComplex,
    euler_characteristic,
    homotopy_summary,
    is_shelling,
    mobius_brute,
    order_complex,
    verify_lex_shelling,
)
from .families import (
    SetPartition,
    SignedPartition,
    affinity_lattice,
    antichain_poset,
    boolean_lattice,
    bowtie_poset,
    chain_lattice,
    chain_poset,
    compatible_pairs,
    fig1_lattice,
    is_order_partition,
    k_equal_lattice,
    ngon_face_lattice,
    order_congruence_lattice,
    order_convexity_lattice,
    partition_lattice,
    pentagon,
    quotient,
    set_partitions,
    signed_kh_lattice,
    signed_partition_lattice,
)

__version__ = "0.1.0"
