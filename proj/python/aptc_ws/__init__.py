"""Python access to the aptc verification core."""

import json

from ._core import AptcError, Model, ParseError
from . import _core

__all__ = ["AptcError", "Model", "ParseError", "check", "derive_ab", "lts", "parse"]


def parse(text):
    return Model.parse(text)


def check(model, rooted=False, **config):
    """Run every check goal; returns the run report as a dict."""
    return json.loads(_core.check_json(model, rooted, **config))


def lts(model, system, minimize=False, prune_dead=False, **config):
    return json.loads(_core.lts_json(model, system, minimize, prune_dead, **config))


def derive_ab(model, wso, **config):
    return json.loads(_core.derive_ab_json(model, wso, **config))
