"""Overgroups of subsystem subgroups in Chevalley groups.

Every function returns plain Python data decoded from the JSON reports of the
C++ core. Rings are named as on the command line: ``z4``, ``z12``, ``f2t2``,
``z8*f3t2``.
"""

import json

from . import _core
from ._core import DomainError, SandwichError, UsageError

__all__ = [
    "info",
    "lemmas",
    "root_element",
    "decompose",
    "pi_form",
    "normcheck",
    "level",
    "selftest",
    "UsageError",
    "DomainError",
    "SandwichError",
]


def info(case, l=0):
    return json.loads(_core.info(case, l))


def lemmas(case, l=0, ring="z8", seed=1):
    return json.loads(_core.lemmas(case, l, ring, seed))


def root_element(case, gen, ring="z4", l=0):
    """Matrix of a root element, ``gen`` as ``ROOT:XI`` (e.g. ``max:2``)."""
    return json.loads(_core.root_element(case, l, ring, gen))


def decompose(matrix):
    """g = v g1 u for a matrix object as written by :func:`root_element`."""
    return json.loads(_core.decompose(json.dumps(matrix)))


def pi_form(case, l=0, seed=1):
    return json.loads(_core.pi_form(case, l, seed))


def normcheck(case, l=0, ring="z4", sigma="(2),(0)", samples=50, transporter=0, seed=1):
    return json.loads(_core.normcheck(case, l, ring, sigma, samples, transporter, seed))


def level(case, gens=(), l=0, ring="z4", target=None, seed=1, budget=200, samples=50):
    return json.loads(_core.level(case, l, ring, list(gens), target, seed, budget, samples))


def selftest(seed=1):
    return json.loads(_core.selftest(seed))
