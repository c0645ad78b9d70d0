"""Exact Green-function systems for the dihedral reflection groups.

The package factors an exactly-known pairing matrix of fake-degree data
as P * Lambda * P^t over the rational functions in q, enumerates the
block structures for which the factorization has the right invariance
properties, and checks the results against closed formulas and a small
atlas of known cases.

Everything is exact: integer-coefficient polynomials, rational functions
over them, and cyclotomic numbers.  No floats anywhere.
"""

__version__ = "0.1.0"

from .dihedral import (  # noqa: E402
    Chi,
    ChiR,
    ChiRPrime,
    Eps,
    CharLabel,
    all_labels,
    b_invariant,
    char_table,
    families,
    format_label,
    irreps,
    parse_label,
    specials,
)
from .exactalg import IntPoly, PolyMatrix, RatFunc, matrix_solve  # noqa: E402
from .fakedegree import check_symmetry, fake_degree, omega  # noqa: E402
from .greensolver import (  # noqa: E402
    GreenSystem,
    LSDatum,
    closure_order,
    solve,
    verify_system,
)
from .springer import (  # noqa: E402
    SpringerSet,
    check_conditions,
    closed_form_system,
    d_sequence,
    enumerate_f_sequences,
    iota,
    matches_predicted_partition,
    maximal,
    maximal_f,
    predicted_partition,
    rational_smoothness,
    search,
    special_pieces,
    support_f_sequence,
)
from .sprefatlas import (  # noqa: E402
    atlas_check,
    d_sequence_formula_check,
    j_induction,
    load_fixtures,
    s_pref,
    verify_spref_via_induction,
)

__all__ = [
    "__version__",
    "Chi", "ChiR", "ChiRPrime", "Eps", "CharLabel",
    "all_labels", "b_invariant", "char_table", "families", "format_label",
    "irreps", "parse_label", "specials",
    "IntPoly", "PolyMatrix", "RatFunc", "matrix_solve",
    "check_symmetry", "fake_degree", "omega",
    "GreenSystem", "LSDatum", "closure_order", "solve", "verify_system",
    "SpringerSet", "check_conditions", "closed_form_system", "d_sequence",
    "enumerate_f_sequences", "iota", "matches_predicted_partition", "maximal",
    "maximal_f", "predicted_partition", "rational_smoothness", "search",
    "special_pieces", "support_f_sequence",
    "atlas_check", "d_sequence_formula_check", "j_induction",
    "load_fixtures", "s_pref", "verify_spref_via_induction",
]
