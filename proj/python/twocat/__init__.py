"""Exact computations in ideal 2-categories of tree algebras and truncated polynomial 2-categories."""

from ._twocat import *  # noqa: F401,F403
from ._twocat import DocumentError, Quiver, suite_names, run_suite  # noqa: F401
