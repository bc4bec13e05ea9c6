"""
fliplab

Flip graphs of planar point sets: triangulations and their edge and bistellar flips,
subdivisions and their coarsenings, links, vertex connectivity and exact regularity
decisions, together with generators for the configurations these are tested on.
"""

__version__ = "0.1.0"
__author__ = "fliplab contributors"

# Make main modules easily accessible
from . import errors
from . import geometry
from . import triangulations
from . import subdivisions
from . import flipgraphs
from . import regularity
from . import generators
from . import utils
from . import scripts

__all__ = [
    "errors",
    "flipgraphs",
    "generators",
    "geometry",
    "regularity",
    "scripts",
    "subdivisions",
    "triangulations",
    "utils",
]
