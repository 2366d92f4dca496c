"""Belief-state plausibility orders: representations, translations, revision.

A doxastic state is a connected preorder over propositional models.  This
package implements four ways to store one (explicit pair sets, level
sequences, lexicographic histories, natural histories), exact translations
between them, the two revision operators, and the size/class analyses that
separate the representations.
"""

from .analysis import (
    BlowupRow,
    SizeReport,
    blowup_experiment,
    class_bound_check,
    format_blowup_table,
    size_report,
)
from .errors import (
    AlphabetMismatchError,
    CapExceededError,
    DocumentError,
    DoxasticError,
    FormulaSyntaxError,
    InconsistentRevisionError,
    LengthCapExceededError,
    NotAPreorderError,
    NotNormalizedError,
    UndeclaredVariableError,
)
from .formula import (
    FALSE,
    TRUE,
    Alphabet,
    And,
    FalseConst,
    Formula,
    Iff,
    Implies,
    Model,
    Not,
    Or,
    TrueConst,
    Var,
    conjoin,
    dag_node_count,
    disjoin,
    evaluate,
    formula_from_models,
    is_consistent,
    models_of,
    node_count,
    parse,
    render,
    simplify,
    truth_bitmap,
    variables,
)
from .orders import (
    AnyOrder,
    ClassPartition,
    ExplicitOrder,
    LevelOrder,
    LexOrder,
    NaturalOrder,
    Violation,
    classes_by_stripping,
    classes_of,
    equivalent,
    kind_of,
    leq,
    leq_explicit,
    leq_level,
    leq_lex,
    leq_natural,
    member_formulas,
    validate_explicit,
)
from .revision import (
    revise_level_lexicographically,
    revise_level_naturally,
    revise_lex_history,
    revise_natural_history,
)
from .translate import (
    explicit_to_level,
    is_normalized,
    level_to_lex,
    level_to_natural,
    lex_to_level,
    natural_to_level,
    natural_to_lex,
    normalize_level,
    order_size,
    to_explicit,
)

__version__ = "0.1.0"
