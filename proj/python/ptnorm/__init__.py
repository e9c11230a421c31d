from ._ptnorm import *  # noqa: F401,F403
from ._ptnorm import __doc__  # noqa: F401
