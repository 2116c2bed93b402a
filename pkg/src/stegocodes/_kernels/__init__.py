"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is the
fallback.  Set ``STEGOCODES_BACKEND=pure`` to force the fallback or
``STEGOCODES_BACKEND=native`` to insist on the extension (ImportError if it
was not built).
"""

import os

from . import pure

_requested = os.environ.get("STEGOCODES_BACKEND", "").strip().lower()

if _requested == "pure":
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]

        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise
        _impl = pure
        BACKEND = "pure"

cf_add = _impl.cf_add
cf_sub = _impl.cf_sub
min_pairwise_distance = _impl.min_pairwise_distance
min_nonzero_weight = _impl.min_nonzero_weight
universe_syndromes = _impl.universe_syndromes
syndromes_of_words = _impl.syndromes_of_words
coset_leader_search = _impl.coset_leader_search
ball_cover = _impl.ball_cover

__all__ = [
    "BACKEND",
    "cf_add",
    "cf_sub",
    "min_pairwise_distance",
    "min_nonzero_weight",
    "universe_syndromes",
    "syndromes_of_words",
    "coset_leader_search",
    "ball_cover",
]
