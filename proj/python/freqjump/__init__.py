"""Frequency-jump protocol: symplectic dynamics, QFI/QSNR, schedule
optimization, and the number-basis validation oracle."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
