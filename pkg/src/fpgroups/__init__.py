"""Finitely presented groups: words, presentations, Tietze moves, coset
enumeration, abelianization and checkable triviality certificates."""

from .abelian import AbelianInvariants, IntMatrix, abelianize, smith_normal_form
from .enumerator import CosetTable, EnumerationResult, enumerate_cosets, verify_table
from .parser import ParseError, SourceSpan, parse_presentation, parse_proof, parse_word
from .parser import serialize_presentation, serialize_proof
from .presentation import (
    EliminationError,
    Presentation,
    TietzeLog,
    TietzeMove,
    add_generator,
    add_relator,
    auto_simplify,
    eliminate_by_definition,
    eliminate_generator,
    relator_normal_form,
)
from .proofcheck import ProofScript, Report, check_script
from .surgery import GluingMatrix, log_transform_matrix
from .word import Alphabet, Word

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants", "Alphabet", "CosetTable", "EliminationError", "EnumerationResult",
    "GluingMatrix", "IntMatrix", "ParseError", "Presentation", "ProofScript", "Report",
    "SourceSpan", "TietzeLog", "TietzeMove", "Word", "abelianize", "add_generator",
    "add_relator", "auto_simplify", "check_script", "eliminate_by_definition",
    "eliminate_generator", "enumerate_cosets", "log_transform_matrix", "parse_presentation",
    "parse_proof", "parse_word", "relator_normal_form", "serialize_presentation",
    "serialize_proof", "smith_normal_form", "verify_table",
]
