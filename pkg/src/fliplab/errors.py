"""
Exceptions raised by fliplab.

All errors derive from FlipLabError so callers (and the CLI) can catch the whole family.
Errors that point at specific input points keep the indices as attributes.
"""


class FlipLabError(Exception):
    pass


class InvalidFormatError(FlipLabError):
    pass


class DuplicatePoint(FlipLabError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"points {i} and {j} coincide")


class CollinearTriple(FlipLabError):
    def __init__(self, i, j, k):
        self.triple = tuple(sorted((i, j, k)))
        super().__init__(f"points {self.triple} are collinear")


class CoordinateOutOfRange(FlipLabError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"point {index} exceeds the coordinate bound 2^30")


class NotFlippable(FlipLabError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"{element!r} is not flippable")


class ConvexityViolation(FlipLabError):
    def __init__(self, region):
        self.region = tuple(region)
        super().__init__(f"region {self.region} is not strictly convex")


class InvalidSubdivision(FlipLabError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class CapExceeded(FlipLabError):
    def __init__(self, n, cap):
        self.n, self.cap = n, cap
        super().__init__(f"instance has n={n} points, cap is {cap}")


class Disconnected(FlipLabError):
    pass


class NotWellOriented(FlipLabError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"orientation is not well-oriented at point {point}")


class NotCompliant(FlipLabError):
    def __init__(self, region):
        self.region = tuple(region)
        super().__init__(f"height function is not linear on region {self.region}")


class ConstructionFailed(FlipLabError):
    pass


class ExhaustedRetries(FlipLabError):
    pass


class InvariantViolation(FlipLabError):
    pass
