"""Knot Floer homology of dual knots in rational surgeries, from finite CFK^infinity models."""

__version__ = "0.1.0"

from .cfk import KnotComplex, builtin, genus, parse_cfk, serialize, validate  # noqa: E402
from .domains import TestDomain, domain_validate  # noqa: E402
from .gf2 import BACKEND  # noqa: E402
from .invariants import (  # noqa: E402
    HomologyReport,
    ahat_split_check,
    hf_hat_ambient,
    hfk_hat_dual,
    hfk_window,
    predicted_window,
    s3_pattern_check,
    zeta_cone_plus,
)
from .surgery import ConeSpec, TruncationParams, build_cone, large_n_model, stabilization_check  # noqa: E402

__all__ = [
    "BACKEND", "ConeSpec", "HomologyReport", "KnotComplex", "TestDomain", "TruncationParams",
    "ahat_split_check", "build_cone", "builtin", "domain_validate", "genus", "hf_hat_ambient",
    "hfk_hat_dual", "hfk_window", "large_n_model", "parse_cfk", "predicted_window",
    "s3_pattern_check", "serialize", "stabilization_check", "validate", "zeta_cone_plus",
]
