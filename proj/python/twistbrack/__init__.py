"""Gerstenhaber brackets on Hochschild cochains of S(V) x| G over F_p.

Results are plain dicts mirroring the command-line JSON output.
"""

import json as _json

from ._twistbrack import Error, Session
from . import _twistbrack

__all__ = ["Error", "Session", "load", "parse", "check", "bracket", "demo_transvection", "selfcheck"]


def load(path):
    """Load and validate a session file."""
    return Session.load(str(path))


def parse(text_or_dict):
    """Validate a session given as JSON text or an already-decoded dict."""
    if not isinstance(text_or_dict, str):
        text_or_dict = _json.dumps(text_or_dict)
    return Session.parse(text_or_dict)


def check(session, name):
    """Coboundary of a named cochain; ``passed`` is true iff it is a cocycle."""
    return _json.loads(_twistbrack.check(session, name))


def bracket(session, left, right, class_compare_with=None):
    """Chain-level bracket, optionally compared in cohomology with another cochain."""
    return _json.loads(_twistbrack.bracket(session, left, right, class_compare_with))


def demo_transvection(p):
    """Claims of the transvection example over F_p."""
    return _json.loads(_twistbrack.demo_transvection(p))


def selfcheck(session, hdeg=3, ideg=3, trials=50, seed=1):
    """All invariant suites with the given bounds."""
    return _json.loads(_twistbrack.selfcheck(session, hdeg, ideg, trials, seed))
