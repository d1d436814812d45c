"""Preset integrands shared by the CLI and the experiment suites."""

from __future__ import annotations

import math

import numpy as np

from .matrix_core import Integrand
from .specfun import LN_GAMMA_INTEGRAND

EXP = Integrand(eval=math.exp, label="exp", eval_array=np.exp)
IDENTITY = Integrand(
    eval=lambda x: x, label="identity", eval_array=lambda x: np.asarray(x, dtype=np.float64)
)
CONST1 = Integrand(
    eval=lambda x: 1.0, label="const1", eval_array=lambda x: np.ones_like(x)
)
LNGAMMA = LN_GAMMA_INTEGRAND

PRESETS: dict[str, Integrand] = {
    "exp": EXP,
    "lngamma": LNGAMMA,
    "identity": IDENTITY,
    "const1": CONST1,
}


def by_name(name: str) -> Integrand:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown integrand {name!r}; choose from {sorted(PRESETS)}"
        ) from None
