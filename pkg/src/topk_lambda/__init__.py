"""Top-K longest intervals of exterior-power barcodes, straight from the input barcode."""
from .barcode import (
    Bar,
    Barcode,
    BarcodeError,
    ConfigurationError,
    Event,
    EventKind,
    ParseError,
    ValidationError,
    build_event_list,
    format_barcode,
    parse_barcode,
)
from .decomposition import (
    Group,
    LambdaInterval,
    RefusalError,
    anchor_of,
    anchored_length,
    brute_force_lambda,
    enumerate_decomposition,
    expand_lengths,
    weight,
)
from .engine import Emission, TopKResult, expand_identities, topk_colex, topk_grouped
from .ostree import CompressedAxis, PersistentOSTree, QueryError, UnderflowError, compress
from .sweep import SweepSnapshots, alive_deaths, run_sweep

__version__ = "0.1.0"


def topk(bc: Barcode, i: int, K: int, identities: bool = False) -> TopKResult:
    """Sweep ``bc`` and return its Top-K exterior-power lengths."""
    return topk_grouped(run_sweep(bc), i, K, identities=identities)
