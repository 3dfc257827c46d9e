"""Bar tableaux on shifted partitions, shifted rank, spin characters of the
symmetric group, and Schur Q-functions, all in exact arithmetic."""

from .bars import (
    BarRemoval,
    BarTableau,
    RemovalSets,
    TableauWeight,
    enumerate_bar_tableaux,
    even_boundary_free,
    legal_removals,
    lemma2_structure,
    minimal_tableaux,
    morris_coefficient,
    remove_bar,
    removal_sets,
    render_grid,
    signed_weight_sum,
    srank_bruteforce,
    srank_formula,
    tableau_from_lines,
    tableau_to_lines,
    tableau_weight,
)
from .partitions import (
    Partition,
    PartitionStatistics,
    StrictPartition,
    centralizer_order,
    classical_rank,
    format_partition,
    generate_partitions,
    parity,
    parse_partition,
    parse_strict_partition,
    statistics,
)
from .qfunctions import (
    DEFAULT_DEGREE_BOUND,
    DegreePolynomial,
    DegreeReport,
    PowerSumPolynomial,
    min_degree,
    monomial_to_powersum,
    principal_specialization,
    q_function,
    q_lambda_inductive,
    q_pair,
    schur_expansion,
    verify_degree_bounds,
)
from .spin_characters import (
    CharacterTable,
    SpinCharacterValue,
    VanishingReport,
    character,
    character_table,
    schur_special,
    schur_vanishing,
    spin_character_value,
    vanishing_corollary_check,
)

__version__ = "0.1.0"
