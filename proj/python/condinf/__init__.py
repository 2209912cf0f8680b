"""Conditional infima on complete lattices and recovery of monotone processes.

The heavy lifting happens in the compiled `_core` extension; this wrapper
turns its JSON-string interface into plain dicts.
"""

import json as _json

try:  # installed wheel layout: condinf/_core.so
    from . import _core as _impl
except ImportError:  # development layout: _core.so on PYTHONPATH
    import _core as _impl

__version__ = _impl.__version__
ny_rhs = _impl.ny_rhs


def verify(scenario: dict, checks: list[str] | None = None) -> dict:
    """Run scenario checks; returns the report dict with an ``exit_code``."""
    return _json.loads(_impl.run_scenario(_json.dumps(scenario), checks or []))


def fuzz(suite: str, lattice: str = "all", seed: int = 1, cases: int = 100) -> dict:
    return _json.loads(_impl.run_fuzz(suite, lattice, seed, cases))


def simulate(paths: int = 100_000, seed: int = 42, step: float = 0.025,
             ely: list[float] | None = None, ny: list[str] | None = None,
             jumpy: bool = False) -> dict:
    return _json.loads(
        _impl.run_simulate(paths, seed, step, ely if ely is not None else [2.0],
                           ny or [], jumpy))


def gen_space(seed: int, outcomes: int, horizon: int) -> dict:
    return _json.loads(_impl.gen_space_json(seed, outcomes, horizon))


def cond_inf(space: dict, values: list, t: int) -> list:
    """Greatest F_t-measurable lower bound of a real-valued random element."""
    return _json.loads(_impl.cond_inf_real(_json.dumps(space), _json.dumps(values), t))


def cond_expectation(space: dict, values: list, t: int) -> list:
    return _json.loads(
        _impl.cond_expectation_real(_json.dumps(space), _json.dumps(values), t))


def martingale(space: dict, grid: list) -> bool:
    return _impl.is_martingale(_json.dumps(space), _json.dumps(grid))


def gen_martingale(seed: int, depth: int, branching: int = 2) -> list:
    return _json.loads(_impl.gen_martingale_json(seed, depth, branching))


def convex_hull(points: list) -> list | str:
    return _json.loads(_impl.hull(_json.dumps(points)))


def convex_meet(a, b):
    return _json.loads(_impl.poly_meet(_json.dumps(a), _json.dumps(b)))


def convex_join(a, b):
    return _json.loads(_impl.poly_join(_json.dumps(a), _json.dumps(b)))


def convex_contains(a, b) -> bool:
    return _impl.poly_contains(_json.dumps(a), _json.dumps(b))


def phi_convex(a) -> float:
    """dim(aff(A)) plus the Gaussian mass of A conditioned on its hull."""
    return _impl.phi_convex(_json.dumps(a))
