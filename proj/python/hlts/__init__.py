"""Exact verification and cohomology for Hom-Lie triple systems and
weighted O-operators. Thin wrapper over the C++ extension."""

import json as _json
import os as _os
from collections import namedtuple as _namedtuple

try:
    from ._core import Workspace, run as _run, complete_skew, InputError
except ImportError:  # development build: extension lives in the CMake build tree
    import importlib.util as _ilu
    import sys as _sys

    _ext_dir = _os.environ.get("HLTS_EXT_DIR")
    if not _ext_dir:
        raise
    _candidates = [f for f in _os.listdir(_ext_dir) if f.startswith("_core") and f.endswith(".so")]
    if not _candidates:
        raise
    _spec = _ilu.spec_from_file_location("hlts._core", _os.path.join(_ext_dir, _candidates[0]))
    _core = _ilu.module_from_spec(_spec)
    _sys.modules["hlts._core"] = _core
    _spec.loader.exec_module(_core)
    Workspace = _core.Workspace
    _run = _core.run
    complete_skew = _core.complete_skew
    InputError = _core.InputError

Result = _namedtuple("Result", ["exit_code", "report", "text"])


def load(path):
    """Parse a workspace JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return Workspace.from_json(fh.read())


def loads(text):
    return Workspace.from_json(text)


def run(args, workspace):
    """Run one command, e.g. run(["check", "lts", "E4"], ws).

    Returns Result(exit_code, report_dict, text).
    """
    code, machine, text = _run(list(args), workspace)
    return Result(code, _json.loads(machine), text)


__all__ = ["Workspace", "Result", "InputError", "load", "loads", "run", "complete_skew"]
