"""
Braid words, the representations ρ_R^{(n)} and the character τ_R.
"""

from .words import (
    BraidWord,
    BraidWordError,
    StrandCountError,
    word,
    parse_word,
    free_reduce,
    shift_word,
    inverse_word,
    generator_letters,
    random_word,
    random_words,
)
from .character import (
    FINGERPRINT_LABEL,
    CharacterReport,
    CharacterFingerprint,
    represent,
    character,
    character_value,
    markov_defect,
    trace_defect,
    factorization_defect,
    gram_matrix,
    positivity_defect,
    rationality_check,
    character_fingerprint,
    fingerprint_distance,
)
