"""Binary weight-class duadic codes of length 2^m - 1."""

from ._core import (
    BoundReport,
    CyclicCode,
    DistanceCertificate,
    FieldContext,
    amplified_bch_bound,
    bch_bound,
    brouwer_zimmermann,
    duadic_scan,
    dual,
    even_weight_subcode,
    exhaustive_min_weight,
    is_doubly_even_extended,
    is_self_dual_extended,
    lemma_suite,
    min_odd_weight,
    theorem_bound,
    weight_class_code,
    weight_defining_set,
)

__all__ = [
    "BoundReport",
    "CyclicCode",
    "DistanceCertificate",
    "FieldContext",
    "amplified_bch_bound",
    "bch_bound",
    "brouwer_zimmermann",
    "duadic_scan",
    "dual",
    "even_weight_subcode",
    "exhaustive_min_weight",
    "is_doubly_even_extended",
    "is_self_dual_extended",
    "lemma_suite",
    "min_odd_weight",
    "theorem_bound",
    "weight_class_code",
    "weight_defining_set",
]
