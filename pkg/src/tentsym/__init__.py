"""Symbolic dynamics of tent maps: itineraries, kneading sequences, the
unimodal order, the height function, and admissibility of bi-infinite
itineraries for the inverse limit, all in exact arithmetic."""

from .admissibility import (
    Kappa,
    KappaInvalid,
    KneadingType,
    PrefixVerdict,
    TypeKind,
    TypeMismatch,
    Verdict,
    backward_admissible,
    backward_admissible_prefix,
    classify,
    classify_prefix,
    forward_admissible,
    forward_admissible_prefix,
    forward_point_admissible,
    max_backward_itinerary,
    validate_kappa,
)
from .height import (
    AtLhe,
    HeightBracket,
    HeightGuardExceeded,
    c_word,
    decompose_at_height,
    height,
    height_bracket,
    k_seq,
    lhe,
    lhe_rhe,
    rhe,
    w_words,
)
from .sequences import (
    BiSeqEP,
    Ordering,
    ParseError,
    SeqEP,
    ShiftClasses,
    bd,
    bd_shift,
    canonicalize,
    distinct_shifts,
    fd,
    fd_shift,
    format_seq,
    is_shift_maximal,
    parse_seq,
    rho,
    unimodal_cmp,
)
from .tentmap import (
    DenominatorBudgetExceeded,
    Itinerary,
    KneadingResult,
    NotRealizable,
    Realization,
    SlopeOutOfRange,
    TentMap,
    itinerary,
    kneading,
    make_tent,
    point_from_forward,
    realize_backward,
)

__all__ = [
    "AtLhe",
    "BiSeqEP",
    "DenominatorBudgetExceeded",
    "HeightBracket",
    "HeightGuardExceeded",
    "Itinerary",
    "Kappa",
    "KappaInvalid",
    "KneadingResult",
    "KneadingType",
    "NotRealizable",
    "Ordering",
    "ParseError",
    "PrefixVerdict",
    "Realization",
    "SeqEP",
    "ShiftClasses",
    "SlopeOutOfRange",
    "TentMap",
    "TypeKind",
    "TypeMismatch",
    "Verdict",
    "backward_admissible",
    "backward_admissible_prefix",
    "bd",
    "bd_shift",
    "c_word",
    "canonicalize",
    "classify",
    "classify_prefix",
    "decompose_at_height",
    "distinct_shifts",
    "fd",
    "fd_shift",
    "format_seq",
    "forward_admissible",
    "forward_admissible_prefix",
    "forward_point_admissible",
    "height",
    "height_bracket",
    "is_shift_maximal",
    "itinerary",
    "k_seq",
    "kneading",
    "lhe",
    "lhe_rhe",
    "make_tent",
    "max_backward_itinerary",
    "parse_seq",
    "point_from_forward",
    "realize_backward",
    "rhe",
    "rho",
    "unimodal_cmp",
    "validate_kappa",
    "w_words",
]
