"""Life-line swarm protocol simulator.

Thin Python layer over the C++ core in ``lifeline._core``.
"""

import json as _json

from ._core import (  # noqa: F401
    ConfigError,
    Configuration,
    Frame,
    ModelViolation,
    Params,
    ParseError,
    Point2,
    ProtocolFault,
    RobotInfo,
    RobotState,
    __version__,
    apply_launch,
    apply_withdrawals,
    check_trace,
    config_init,
    dist,
    exists_at_base,
    frame_apply,
    frame_inverse,
    move_toward,
    no_collision_ok,
    oracle,
    path_conf_ok,
    protocol_names,
    unreachable_from_base,
    visibility_path,
)
from . import _core


def run(config, keep_trace=False):
    """Run a scenario. ``config`` is a dict or a JSON string."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return _core.run(config, keep_trace)


def fuzz(config, count=10, seed=0, jobs=1):
    """Run ``count`` seeded variations of a template scenario."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return _core.fuzz(config, count, seed, jobs)
