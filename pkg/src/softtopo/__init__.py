"""Finite soft topological spaces over bitmask lattices.

A soft set over a fixed (universe, parameter) signature is one integer
mask; topologies, semiopen/semiclosed structure, soft functions, axiom
checks, and the claim suite are all built on that encoding. See the
module docstrings for the individual contracts.
"""

from .analysis import (
    AXIOM_NAMES,
    AxiomCheck,
    AxiomReport,
    CoverReport,
    analyze_cover,
    axiom_report,
    check_axiom,
    find_clopen,
    find_semiseparation,
    is_semicompact,
    is_semiconnected,
    seminormal_characterization,
)
from .claims import REGISTRY, Claim, replay_witness
from .core import (
    SoftPoint,
    SoftSet,
    SpaceSignature,
    bit_cap,
    complement,
    enumerate_soft_sets,
    intersection,
    is_disjoint,
    is_subset,
    make_absolute,
    make_null,
    parse_point,
    parse_set_literal,
    parse_signature,
    point_in,
    union,
)
from .errors import (
    BitCapExceeded,
    CorpusError,
    InternalAssertionError,
    InvalidTopology,
    LiteralError,
    SignatureMismatch,
    SoftTopoError,
)
from .explorer import (
    ClaimRecord,
    Corpus,
    CorpusSpec,
    SuiteResult,
    build_corpus,
    enumerate_topologies,
    export_corpus,
    export_witnesses,
    format_suite,
    import_corpus,
    random_topology,
    replay_witness_dir,
    run_claim_suite,
)
from .maps import (
    MapClassification,
    SoftFunction,
    classify_map,
    function_to_obj,
    image,
    parse_function,
    preimage,
)
from .prng import SplitMix64, derive_seed
from .semi import (
    SemiClassification,
    classify_set,
    is_semiclosed,
    is_semiclosed_definitional,
    is_semiopen,
    is_semiopen_definitional,
    scss,
    scss_definitional,
    soss,
    soss_definitional,
    sscl,
    sscl_definitional,
    ssint,
    ssint_definitional,
)
from .topology import (
    AxiomViolation,
    SoftTopology,
    check_topology,
    discrete,
    from_subbasis,
    indiscrete,
    is_basis,
    load_space,
    parse_space,
    save_space,
    subspace,
    validate_topology,
)
from .version import VERSION as __version__

__all__ = [
    "AXIOM_NAMES",
    "AxiomCheck",
    "AxiomReport",
    "AxiomViolation",
    "BitCapExceeded",
    "Claim",
    "ClaimRecord",
    "Corpus",
    "CorpusError",
    "CorpusSpec",
    "CoverReport",
    "InternalAssertionError",
    "InvalidTopology",
    "LiteralError",
    "MapClassification",
    "REGISTRY",
    "SemiClassification",
    "SignatureMismatch",
    "SoftFunction",
    "SoftPoint",
    "SoftSet",
    "SoftTopoError",
    "SoftTopology",
    "SpaceSignature",
    "SplitMix64",
    "SuiteResult",
    "__version__",
    "analyze_cover",
    "axiom_report",
    "bit_cap",
    "build_corpus",
    "check_axiom",
    "check_topology",
    "classify_map",
    "classify_set",
    "complement",
    "derive_seed",
    "discrete",
    "enumerate_soft_sets",
    "enumerate_topologies",
    "export_corpus",
    "export_witnesses",
    "find_clopen",
    "find_semiseparation",
    "format_suite",
    "from_subbasis",
    "function_to_obj",
    "image",
    "import_corpus",
    "indiscrete",
    "intersection",
    "is_basis",
    "is_disjoint",
    "is_semiclosed",
    "is_semiclosed_definitional",
    "is_semicompact",
    "is_semiconnected",
    "is_semiopen",
    "is_semiopen_definitional",
    "is_subset",
    "load_space",
    "make_absolute",
    "make_null",
    "parse_function",
    "parse_point",
    "parse_set_literal",
    "parse_signature",
    "parse_space",
    "point_in",
    "preimage",
    "random_topology",
    "replay_witness",
    "replay_witness_dir",
    "run_claim_suite",
    "save_space",
    "scss",
    "scss_definitional",
    "seminormal_characterization",
    "soss",
    "soss_definitional",
    "sscl",
    "sscl_definitional",
    "ssint",
    "ssint_definitional",
    "subspace",
    "union",
    "validate_topology",
]
