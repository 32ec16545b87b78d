"""Built-in example corpus with golden invariant values.

Every expected value here was computed independently (hand expansion, series
arithmetic, explicit rank computations) before the engine produced them;
run_corpus compares fresh engine output against this table.  Prefix keys
compare the leading entries of per-degree tables; scalar keys compare
directly, with None meaning "undefined for this input".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["CorpusEntry", "CORPUS"]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    poly: str
    var_names: tuple[str, ...]
    expected: dict[str, Any] = field(default_factory=dict)


_XYZ = ("x", "y", "z")

CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        name="three-cusp-quartic",
        poly="x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
        var_names=_XYZ,
        expected={
            "tau": 6,
            "st": 4,
            "ct": 4,
            "mdr": 2,
            "sat": 4,
            "a_invariant": 1,
            "regularity": 3,
            "milnor_prefix": [1, 3, 6, 7, 6, 6, 6, 6, 6],
            "sd_prefix": [0, 0, 0, 1, 0, 0, 0],
            "defects_prefix": [5, 3, 0, 0],
            "hatJ_prefix": [0, 0, 0, 4, 9, 15, 22, 30],
            "er_prefix": [0, 0, 3, 5, 6, 6, 6],
            "ci_verdict": "no integer solution",
            "ci_degrees": None,
        },
    ),
    CorpusEntry(
        name="fermat-quartic",
        poly="x^4 + y^4 + z^4",
        var_names=_XYZ,
        expected={
            "smooth": True,
            "tau": 0,
            "st": 7,
            "ct": None,
            "mdr": None,
            "sat": 7,
            "a_invariant": None,
            "regularity": 6,
            "milnor_prefix": [1, 3, 6, 7, 6, 3, 1, 0, 0],
            "er_prefix": [0, 0, 0, 0, 0, 0, 0],
            "ci_verdict": None,
        },
    ),
    CorpusEntry(
        name="coordinate-triangle",
        poly="x*y*z",
        var_names=_XYZ,
        expected={
            "tau": 3,
            "st": 1,
            "ct": 2,
            "mdr": 1,
            "sat": 0,
            "a_invariant": 0,
            "regularity": 1,
            "milnor_prefix": [1, 3, 3, 3, 3],
            "sd_prefix": [0, 0, 0, 0],
            "defects_prefix": [2, 0],
            "er_prefix": [0, 2, 3, 3, 3],
            "ci_verdict": "no integer solution",
            "ci_degrees": None,
        },
    ),
    CorpusEntry(
        name="line-plus-fermat-cubic",
        poly="x*(x^3 + y^3 + z^3)",
        var_names=_XYZ,
        expected={
            "tau": 3,
            "st": 6,
            "ct": 4,
            "mdr": 2,
            "sat": 6,
            "a_invariant": 1,
            "regularity": 5,
            "milnor_prefix": [1, 3, 6, 7, 6, 4, 3, 3, 3],
            "sd_prefix": [0, 1, 3, 4, 3, 1, 0],
            "defects_prefix": [2, 1, 0],
            "er_prefix": [0, 0, 1, 2, 3, 3, 3],
            "ci_verdict": "CI-compatible",
            "ci_degrees": [1, 3],
        },
    ),
    CorpusEntry(
        name="binomial-2-2-4",
        poly="x^2*y^2 + z^4",
        var_names=_XYZ,
        expected={
            "tau": 6,
            "st": 5,
            "ct": 3,
            "mdr": 1,
            "sat": 5,
            "a_invariant": 2,
            "regularity": 4,
            "milnor_prefix": [1, 3, 6, 7, 7, 6, 6, 6],
            "sd_prefix": [0, 0, 1, 1, 1, 0, 0],
            "defects_prefix": [5, 3, 1, 0],
            "er_prefix": [0, 1, 3, 5, 6, 6, 6],
            "ci_verdict": "CI-compatible",
            "ci_degrees": [2, 3],
        },
    ),
    CorpusEntry(
        name="binomial-1-2-3",
        poly="x*y^2 + z^3",
        var_names=_XYZ,
        expected={
            "tau": 2,
            "st": 3,
            "ct": 2,
            "mdr": 1,
            "sat": 3,
            "a_invariant": 0,
            "regularity": 2,
            "milnor_prefix": [1, 3, 3, 2, 2, 2],
            "sd_prefix": [0, 1, 1, 0],
            "defects_prefix": [1, 0],
            "er_prefix": [0, 1, 2, 2, 2],
            "ci_verdict": "CI-compatible",
            "ci_degrees": [1, 2],
        },
    ),
    CorpusEntry(
        name="binomial-2-3-5",
        poly="x^2*y^3 + z^5",
        var_names=_XYZ,
        expected={
            "tau": 12,
            "st": 7,
            "ct": 4,
            "mdr": 1,
            "sat": 7,
            "a_invariant": 4,
            "regularity": 6,
            "milnor_prefix": [1, 3, 6, 10, 12, 13, 13, 12, 12, 12],
            "sd_prefix": [0, 0, 0, 1, 1, 1, 1, 0],
            "defects_prefix": [11, 9, 6, 3, 1, 0],
            "er_prefix": [0, 1, 3, 6, 9, 11, 12, 12, 12],
            "ci_verdict": "CI-compatible",
            "ci_degrees": [3, 4],
        },
    ),
    CorpusEntry(
        name="one-node-cubic",
        poly="z*y^2 - x^3 - x^2*z",
        var_names=_XYZ,
        expected={
            "tau": 1,
            "st": 3,
            "ct": 3,
            "mdr": 2,
            "sat": 3,
            "a_invariant": -1,
            "regularity": 2,
            "milnor_prefix": [1, 3, 3, 1, 1, 1],
            "sd_prefix": [0, 2, 2, 0],
            "defects_prefix": [0, 0],
            "er_prefix": [0, 0, 1, 1, 1],
            "ci_verdict": "CI-compatible",
            "ci_degrees": [1, 1],
        },
    ),
)
