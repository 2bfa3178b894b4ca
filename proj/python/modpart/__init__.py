"""Exact-arithmetic checks for partition type identities.

The compiled core exposes the main operations; this package re-exports them.
"""

from modpart._core import (
    __version__,
    alt_sum_type,
    build_tables,
    census,
    check_qdiff_limit,
    conjugate,
    lemma_dump,
    length_type,
    partitions_max_repeat,
    partitions_no_multiples,
    qdiff_cell,
    series_dump,
    verify_conjecture,
    verify_rr_companions,
    verify_special_cases,
)

__all__ = [
    "__version__",
    "alt_sum_type",
    "build_tables",
    "census",
    "check_qdiff_limit",
    "conjugate",
    "lemma_dump",
    "length_type",
    "partitions_max_repeat",
    "partitions_no_multiples",
    "qdiff_cell",
    "series_dump",
    "verify_conjecture",
    "verify_rr_companions",
    "verify_special_cases",
]
