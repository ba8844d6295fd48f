"""Sylow subgroup counts and solvability criteria for finite permutation groups."""

try:
    from ._sylowlab import *  # noqa: F401,F403
except ImportError:
    # In-tree test runs put the extension on sys.path instead of in the package.
    from _sylowlab import *  # noqa: F401,F403

__version__ = "0.1.0"
