"""Newton polygons, heights and oscillatory integrals of bivariate phases.

Exact rationals cross the boundary as strings such as "7/4".
"""

import json

from ._nphk import (
    NphkError,
    eval_oscillatory,
    kp_point,
    knapp_exponent_nla,
    newton_distance,
    parse,
    verify_nla_identity,
)
from . import _nphk

__all__ = [
    "NphkError",
    "analyze",
    "eval_oscillatory",
    "fit_decay",
    "kp_point",
    "knapp_exponent_nla",
    "newton_distance",
    "parse",
    "verify_nla_identity",
]


def analyze(phi, p=("1", "6/5", "4/3", "3/2", "2")):
    """Full analysis report as a dict, same layout as `nphk analyze --json`."""
    return json.loads(_nphk.analyze_json(phi, [str(x) for x in p]))


def fit_decay(phi, lmin=64.0, lmax=16384.0, ratio=2.0, radius=1.0):
    """Decay fit of |I(lambda, 0)| over a geometric lambda grid, as a dict."""
    return json.loads(_nphk.fit_decay_json(phi, lmin, lmax, ratio, radius))
