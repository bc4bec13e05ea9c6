"""
Point-set generators for experiments.

Every generator returns a PointSet in general position with integer coordinates, or
raises ConstructionFailed / ExhaustedRetries. Randomized generators take a seed.
"""

# Import all available generators

try:
    from .convex import convex_gon
except ImportError:
    convex_gon = None

try:
    from .twisted import twisted_conditions, twisted_double_gon, twisted_subdivision
except ImportError:
    twisted_conditions = twisted_double_gon = twisted_subdivision = None

try:
    from .mother import (
        CONCURRENT,
        NON_CONCURRENT,
        concurrency_determinant,
        mother_example,
        mother_triangulations,
        order_type,
    )
except ImportError:
    CONCURRENT = NON_CONCURRENT = None
    concurrency_determinant = order_type = None
    mother_example = mother_triangulations = None

try:
    from .random_sets import random_points, random_superset
except ImportError:
    random_points = random_superset = None

try:
    from .stacked import stacked_points, stacked_triangulation
except ImportError:
    stacked_points = stacked_triangulation = None

# List of available generators (only those that imported successfully)
__all__ = [
    name
    for name, value in list(locals().items())
    if value is not None and not name.startswith("_")
]

# Metadata
SUPPORTED_FAMILIES = {
    "convex": "convex_gon",
    "twisted": "twisted_double_gon",
    "mother": "mother_example",
    "random": "random_points",
    "stacked": "stacked_points",
}
