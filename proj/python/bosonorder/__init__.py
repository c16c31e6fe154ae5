"""Exact boson normal ordering and the combinatorics it generates."""

try:
    from ._bosonorder import *  # noqa: F401,F403
    from ._bosonorder import __version__  # noqa: F401
except ImportError:  # cmake build tree: extension is top-level
    from _bosonorder import *  # noqa: F401,F403
    from _bosonorder import __version__  # noqa: F401
