"""Non-additive integration and decision evaluation on finite state spaces.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._cptkit import *  # noqa: F401,F403
from ._cptkit import __version__  # noqa: F401
