"""Decide sequential Cohen-Macaulayness of graded modules F/U over k[x1..xn]."""

__version__ = "0.1.0"

from .algebra import FreeModule, Polynomial, Ring, Vector, WeightVector
from .document import Document, DocumentError, format_document, parse
from .ext import depth, ext_profile, free_resolution, is_cohen_macaulay
from .genericity import GenericityFailure, gin_revlex, is_filter_regular_sequence
from .groebner import InternalInconsistency, Submodule, buchberger, initial_module
from .hilbert import HilbertSeries, dim_mult, quotient_series
from .seqcm import adeg, peskine_test, seqcm_verdict, semicontinuity_chain

__all__ = [
    "Document", "DocumentError", "FreeModule", "GenericityFailure", "HilbertSeries",
    "InternalInconsistency", "Polynomial", "Ring", "Submodule", "Vector", "WeightVector",
    "adeg", "buchberger", "depth", "dim_mult", "ext_profile", "format_document",
    "free_resolution", "gin_revlex", "initial_module", "is_cohen_macaulay",
    "is_filter_regular_sequence", "parse", "peskine_test", "quotient_series",
    "semicontinuity_chain", "seqcm_verdict",
]
