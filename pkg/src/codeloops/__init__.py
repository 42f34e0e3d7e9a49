"""Code loops L(phi) over doubly even binary codes: construction and exhaustive identity checks."""

__version__ = "0.1.0"

from .gf2_code import (BitWord, LinearCode, codeword_at, dot, is_doubly_even,  # noqa: E402
                       parse_generator_matrix, parse_word, random_doubly_even_code, span,
                       triple_count, weight)
from .factor_set import (FactorSet, axiom_violations, derived_congruence_check,  # noqa: E402
                         factor_set_space, is_factor_set, make_factor_table,
                         random_normalized_phi, solve_factor_set, weak_linearity)
from .loop_core import (LEFT, RIGHT, CodeLoop, LoopElement, build_loop, center,  # noqa: E402
                        divide, find_nonassociative_triple, is_nuclear_square, mul, nucleus,
                        square_of)
from .identity_catalog import (check_identity, classify, congruence_1_29,  # noqa: E402
                               discriminant_holds, discriminant_value, iff_suite)
