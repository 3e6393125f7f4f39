from . import backend
from .version import version as __version__
