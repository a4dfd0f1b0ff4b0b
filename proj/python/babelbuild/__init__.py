"""Python access to the babel core. Values use the same JSON shapes as the CLI."""

import json

from . import _babel
from ._babel import BabelError, PrecisionExhausted

__all__ = [
    "BabelError",
    "PrecisionExhausted",
    "suite_names",
    "run_suite",
    "lex_cmp",
    "weyl_normal_form",
    "locate",
    "dist2",
    "enclosure_contains",
    "circumcenter",
    "bruhat",
    "cartan",
    "cell",
    "building_dist",
    "render_apartment",
    "render_enclosure",
]

DEFAULT_PRECISION = (12, 6)


def _dump(x):
    return x if isinstance(x, str) else json.dumps(x)


def suite_names():
    return list(_babel.suite_names())


def run_suite(name, seed=1, samples=0, q=5, phi="A1", n=2, threads=1, precision=DEFAULT_PRECISION):
    p1, p2 = precision
    return json.loads(_babel.suite_run(name, seed, samples, q, phi, n, threads, p1, p2))


def lex_cmp(a, b):
    return _babel.lex_cmp(_dump(a), _dump(b))


def weyl_normal_form(word, phi="A1", n=2):
    return json.loads(_babel.weyl_nf(phi, n, word))


def locate(point, phi="A1", n=2):
    """Chamber translate containing the point, or None outside the apartment."""
    return json.loads(_babel.locate(phi, n, _dump(point)))


def dist2(p, q, phi="A1", n=2):
    return json.loads(_babel.dist2(phi, n, _dump(p), _dump(q)))


def enclosure_contains(omega, z, phi="A1", n=2):
    return _babel.enclosure_contains(phi, n, _dump(omega), _dump(z))


def circumcenter(points, phi="A1", n=2):
    return json.loads(_babel.circumcenter(phi, n, _dump(points)))


def bruhat(g, precision=DEFAULT_PRECISION):
    return json.loads(_babel.bruhat(_dump(g), *precision))


def cartan(g, precision=DEFAULT_PRECISION):
    return json.loads(_babel.cartan(_dump(g), *precision))


def cell(g, precision=DEFAULT_PRECISION):
    return json.loads(_babel.cell(_dump(g), *precision))


def building_dist(g, h, precision=DEFAULT_PRECISION):
    return json.loads(_babel.building_dist(_dump(g), _dump(h), *precision))


def render_apartment(phi="A1"):
    return _babel.render_apartment(phi)


def render_enclosure():
    return _babel.render_enclosure()
