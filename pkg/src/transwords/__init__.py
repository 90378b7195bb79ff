"""Power-free words over small alphabets and constructive transition words."""

from .words import (
    PowerBound,
    ResourceLimit,
    Undecided,
    UnsupportedParameters,
    WordError,
    decode,
    encode,
    factors,
    in_upsilon,
    occur,
    prefixes,
    reverse,
    suffixes,
)
from .repetition import (
    ExponentReport,
    PiWitness,
    assert_concat_safe,
    find_pi_witness,
    is_power_free,
    max_factor_exponent,
    naive_is_power_free,
    naive_max_exponent,
    violates,
    word_exponent,
)
from .generators import (
    LeftInfiniteWord,
    Morphism,
    RightInfiniteWord,
    base_word_avoiding,
    factor_in,
    fixed_point,
    left_limit,
    relabel,
    theta_word,
    thue_morse,
)
from .extendability import (
    ExtendVerdict,
    NotExtendable,
    Status,
    StructuredInfiniteWord,
    enumerate_words,
    extension_stream,
    force_recurrent_letter,
    left_extendable,
    right_extendable,
)
from .gamma import GammaReport, GammaWitness, build_gamma, build_gamma_reversed, check_gamma, splice
from .transition import (
    Config,
    TransitionBuilder,
    TransitionCertificate,
    assemble_sides,
    build_transition,
    choose_h,
    choose_p,
    minimal_transition_oracle,
)

__version__ = "0.1.0"
