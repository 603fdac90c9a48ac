"""Exact Cayley-graph spectra and quantum-chromatic certificates over Z_p^n."""

from qchrom._core import *  # noqa: F401,F403
from qchrom._core import __version__  # noqa: F401
