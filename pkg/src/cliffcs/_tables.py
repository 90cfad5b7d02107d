"""Transcribed constant tables.

Each table here is checked against an independent recomputation the first
time it is used (see so6.generator_images and synthesis.ffp_table).
"""

# Integer parts of the SO(6) images of G1..G15; every image is M/√2.
GENERATOR_IMAGES = (
    ((1, 0, 0, -1, 0, 0), (0, 1, -1, 0, 0, 0), (0, 1, 1, 0, 0, 0),
     (1, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, -1), (0, 0, 0, 0, 1, 1)),
    ((1, 0, 1, 0, 0, 0), (0, 1, 0, 0, -1, 0), (-1, 0, 1, 0, 0, 0),
     (0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 0, -1, 0, 1)),
    ((1, -1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, -1),
     (0, 0, 0, 1, -1, 0), (0, 0, 0, 1, 1, 0), (0, 0, 1, 0, 0, 1)),
    ((1, 0, 1, 0, 0, 0), (0, 1, 0, 0, 0, -1), (-1, 0, 1, 0, 0, 0),
     (0, 0, 0, 1, -1, 0), (0, 0, 0, 1, 1, 0), (0, 1, 0, 0, 0, 1)),
    ((1, -1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 0, 1, 0, -1, 0),
     (0, 0, 0, 1, 0, 1), (0, 0, 1, 0, 1, 0), (0, 0, 0, -1, 0, 1)),
    ((1, -1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 0, 1, -1, 0, 0),
     (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, -1), (0, 0, 0, 0, 1, 1)),
    ((1, 0, 0, 0, 0, -1), (0, 1, -1, 0, 0, 0), (0, 1, 1, 0, 0, 0),
     (0, 0, 0, 1, -1, 0), (0, 0, 0, 1, 1, 0), (1, 0, 0, 0, 0, 1)),
    ((1, 0, 0, 0, -1, 0), (0, 1, -1, 0, 0, 0), (0, 1, 1, 0, 0, 0),
     (0, 0, 0, 1, 0, 1), (1, 0, 0, 0, 1, 0), (0, 0, 0, -1, 0, 1)),
    ((1, 0, 1, 0, 0, 0), (0, 1, 0, -1, 0, 0), (-1, 0, 1, 0, 0, 0),
     (0, 1, 0, 1, 0, 0), (0, 0, 0, 0, 1, -1), (0, 0, 0, 0, 1, 1)),
    ((1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1),
     (-1, 0, 0, 1, 0, 0), (0, -1, 0, 0, 1, 0), (0, 0, -1, 0, 0, 1)),
    ((1, 0, 0, -1, 0, 0), (0, 1, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0),
     (1, 0, 0, 1, 0, 0), (0, 0, -1, 0, 1, 0), (0, -1, 0, 0, 0, 1)),
    ((1, 0, 0, 0, 0, -1), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0),
     (0, 0, -1, 1, 0, 0), (0, -1, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1)),
    ((1, 0, 0, 0, -1, 0), (0, 1, 0, 1, 0, 0), (0, 0, 1, 0, 0, 1),
     (0, -1, 0, 1, 0, 0), (1, 0, 0, 0, 1, 0), (0, 0, -1, 0, 0, 1)),
    ((1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1), (0, 0, 1, 1, 0, 0),
     (0, 0, -1, 1, 0, 0), (-1, 0, 0, 0, 1, 0), (0, -1, 0, 0, 0, 1)),
    ((1, 0, 0, 0, 0, 1), (0, 1, 0, 1, 0, 0), (0, 0, 1, 0, 1, 0),
     (0, -1, 0, 1, 0, 0), (0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, 0, 1)),
)

# Images of the determinant-one Clifford generators ω†S⊗I, I⊗ω†S, iH⊗I,
# I⊗iH and ω†CZ, keyed by the token of the unadjusted gate.
CLIFFORD_IMAGES = {
    "S1": ((0, -1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
           (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)),
    "S2": ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
           (0, 0, 0, 0, -1, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)),
    "H1": ((0, 0, 1, 0, 0, 0), (0, -1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0),
           (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)),
    "H2": ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
           (0, 0, 0, 0, 0, 1), (0, 0, 0, 0, -1, 0), (0, 0, 0, 1, 0, 0)),
    "CZ": ((0, -1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, -1),
           (0, 0, 0, 0, -1, 0), (0, 0, 0, 1, 0, 0), (0, 0, 1, 0, 0, 0)),
}

# The two lde-0 generators used to show that Clifford images are all
# signed permutations: C1 = (ω†S)⊗I, C2 = (H⊗H)(ω†CZ)(Z⊗Z).
LDE0_GENERATOR_C2 = (
    (0, 0, 0, 0, 0, -1), (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0),
)

# Worked example: U = (1/4)·M with Gaussian-integer entries (re, im).
WORKED_EXAMPLE_INPUT = (
    ((3, 1), (-1, -1), (-2, 0), (0, 0)),
    ((1, -1), (3, -1), (0, 0), (-2, 0)),
    ((2, 0), (0, 0), (3, -1), (1, 1)),
    ((0, 0), (2, 0), (-1, 1), (3, 1)),
)

# Its SO(6) image, (1/8)·M, as printed.  Entry (4, 3) is printed as -6,
# which makes row 4 non-unit; the orthogonal completion forces -3.
WORKED_EXAMPLE_PRINTED = (
    (4, 0, 6, 2, 2, -2),
    (0, 8, 0, 0, 0, 0),
    (-6, 0, 1, 3, 3, -3),
    (2, 0, -6, 7, -1, 1),
    (2, 0, -3, -1, 7, 1),
    (-2, 0, 3, 1, 1, 7),
)
WORKED_EXAMPLE_OUTPUT = (
    (4, 0, 6, 2, 2, -2),
    (0, 8, 0, 0, 0, 0),
    (-6, 0, 1, 3, 3, -3),
    (2, 0, -3, 7, -1, 1),
    (2, 0, -3, -1, 7, 1),
    (-2, 0, 3, 1, 1, 7),
)

# First-finer-partition association, one row per generator.
FFP_TABLE = (
    (1, ("14|23|56", "14|2356", "23|1456", "56|1234")),
    (2, ("13|25|46", "13|2456", "25|1346", "46|1235")),
    (3, ("12|36|45", "12|3456", "36|1245", "45|1236")),
    (4, ("13|26|45", "26|1345")),
    (5, ("12|35|46", "35|1246")),
    (6, ("12|34|56", "34|1256")),
    (7, ("16|23|45", "16|2345")),
    (8, ("15|23|46", "15|2346")),
    (9, ("13|24|56", "24|1356")),
    (10, ("14|25|36",)),
    (11, ("14|26|35",)),
    (12, ("16|25|34",)),
    (13, ("15|24|36",)),
    (14, ("15|26|34",)),
    (15, ("16|24|35",)),
)
