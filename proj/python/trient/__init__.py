"""Triangle relations and area measures of tripartite entanglement."""

import json

from ._core import (
    ArgumentError,
    MeasureKind,
    MeasureSpec,
    SearchFailed,
    SingularError,
    TrientError,
    UnsupportedError,
    ValidationError,
    bipartition_vector,
    gaussian_impurity,
    gmc,
    haar_state,
    hybrid_impurities,
    local_lambdas,
    measure_of_lambda,
    monotonicity_gap,
    parse_measure,
    qubit_measure_set,
    random_pure_cm,
    suite_names,
    triangle_area,
    triangle_area_sides,
)
from . import _core


def run_suite(name, **kwargs):
    """Run a property suite and return the parsed report."""
    return json.loads(_core.run_suite_json(name, **kwargs))


def table1():
    return json.loads(_core.table1_json())


def violations(mode, **kwargs):
    return json.loads(_core.violations_json(mode, **kwargs))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
