"""Exact Q*3 digit systems and their induced function family."""

try:
    from ._qstar import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _qstar import *  # noqa: F401,F403
