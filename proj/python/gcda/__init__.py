"""Document listing over repetitive collections.

Thin Python layer over the C++ core: build or load a grammar-compressed
document-listing index, query it, and generate synthetic benchmark
collections.
"""

from ._gcda import (  # noqa: F401
    GcdaError,
    Index,
    build_index,
    generate,
    load_index,
    sample_patterns,
)

__all__ = [
    "GcdaError",
    "Index",
    "build_index",
    "generate",
    "load_index",
    "sample_patterns",
]
