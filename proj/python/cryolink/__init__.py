from cryolink._core import *  # noqa: F401,F403
from cryolink._core import __version__  # noqa: F401
