"""Tolerance table shared by every module."""

# constructions (circle centers, pruning ties, chord clamping)
EPS_GEOM = 1e-12
# membership tests
EPS_TEST = 1e-9
# below this a chord is treated as zero length
EPS_CHORD = 1e-14
