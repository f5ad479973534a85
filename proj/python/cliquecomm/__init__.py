"""Python bindings for the cliquecomm library."""

from ._cliquecomm import *  # noqa: F401,F403
from ._cliquecomm import CliqueCommError, __version__  # noqa: F401


def exact_to_float(rows):
    """Convert rows of "p/q" strings to floats."""
    out = []
    for row in rows:
        vals = []
        for s in row:
            p, q = s.split("/")
            vals.append(int(p) / int(q))
        out.append(vals)
    return out
