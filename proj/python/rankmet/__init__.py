"""Exact toolkit for F_{q^m}-linear rank-metric codes.

Thin wrapper around the compiled extension. Structured results are JSON
strings identical to the CLI's output; parse them with the standard json
module.
"""

try:
    from ._rankmet import *  # packaged layout (scikit-build-core install)
    from ._rankmet import __version__
except ImportError:  # in-tree builds put _rankmet.so directly on sys.path
    from _rankmet import *  # noqa: F401,F403
    from _rankmet import __version__  # noqa: F401
