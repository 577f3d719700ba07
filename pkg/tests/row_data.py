"""Reference statements about the sixteen table rows, transcribed by hand.

Roots are written as (a, b) for a*alpha_1 + b*alpha_2.  Keys are
(row, diagram index within the cell); the parameter is the preset default
unless a key says otherwise.
"""

ROOTS = {
    (1, 1): [(1, 0), (1, 1), (0, 1)],
    (3, 1): [(1, 0), (2, 1), (1, 1), (0, 1)],
    (9, 1): [(1, 0), (2, 1), (3, 2), (1, 1), (1, 2), (0, 1)],
    (9, 2): [(1, 0), (2, 1), (3, 2), (4, 3), (1, 1), (0, 1)],
    (9, 3): [(1, 0), (4, 1), (3, 1), (2, 1), (1, 1), (0, 1)],
    (10, 1): [(1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (0, 1)],
    (11, 1): [(1, 0), (3, 1), (2, 1), (3, 2), (1, 1), (0, 1)],
    (12, 1): [(1, 0), (3, 1), (2, 1), (3, 2), (4, 3), (1, 1), (1, 2), (0, 1)],
    (12, 2): [(1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (5, 2), (5, 3), (0, 1)],
    (12, 3): [(1, 0), (1, 1), (2, 1), (3, 2), (4, 3), (5, 3), (5, 4), (0, 1)],
    (12, 4): [(1, 0), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (0, 1)],
    (13, 1): [(1, 0), (3, 1), (2, 1), (5, 3), (3, 2), (4, 3), (1, 1), (0, 1)],
    (13, 2): [(1, 0), (4, 1), (3, 1), (5, 2), (2, 1), (3, 2), (1, 1), (0, 1)],
    (14, 1): [(1, 0), (3, 1), (2, 1), (5, 3), (3, 2), (4, 3), (1, 1), (0, 1)],
    (15, 1): [(1, 0), (3, 1), (5, 2), (2, 1), (3, 2), (1, 1), (1, 2), (0, 1)],
    (16, 2): [(1, 0), (5, 1), (4, 1), (7, 2), (3, 1), (8, 3),
              (5, 2), (7, 3), (2, 1), (3, 2), (1, 1), (0, 1)],
}

# number of positive roots per row (first diagram)
ROOT_COUNTS = {1: 3, 2: 3, 3: 4, 4: 4, 5: 4, 6: 4, 7: 5, 8: 5, 9: 6, 10: 6,
               11: 6, 12: 8, 13: 8, 14: 8, 15: 8, 16: 12}

# Cartan roots with their orders N_beta
CARTAN = {
    (1, 1): {(1, 0): 3, (1, 1): 3, (0, 1): 3},
    (2, 1): {(1, 0): 3},
    (2, 2): {(1, 1): 3},
    (3, 1): {(1, 0): 3, (2, 1): 3, (1, 1): 3, (0, 1): 3},
    (6, 1): {},
    (6, 2): {},
    (7, 1): {}, (7, 2): {}, (7, 3): {}, (7, 4): {}, (7, 5): {},
    (8, 1): {(1, 1): 12},
    (9, 1): {(1, 0): 18, (1, 1): 18},
    (9, 2): {(1, 1): 18, (2, 1): 18},
    (9, 3): {(1, 0): 18, (2, 1): 18},
    (10, 1): {r: 4 for r in ROOTS[(10, 1)]},
    (11, 1): {(2, 1): 8, (0, 1): 8},
    (12, 1): {(1, 1): 24, (3, 1): 24},
    (12, 2): {(2, 1): 24, (0, 1): 24},
    (12, 3): {(1, 1): 24, (5, 3): 24},
    (12, 4): {(1, 0): 24, (5, 2): 24},
    (13, 1): {(1, 0): 5, (1, 1): 10, (2, 1): 10, (3, 2): 5},
    (14, 1): {(1, 0): 20, (3, 2): 20},
    (15, 1): {(1, 0): 30, (3, 2): 30},
    (16, 2): {r: 14 for r in [(1, 0), (4, 1), (3, 1), (5, 2), (2, 1), (1, 1)]},
}

# partial statements where the full set is not given unambiguously
CARTAN_PARTIAL = {
    (13, 2): {(1, 0): 10, (3, 1): 5},
}

LIE_TYPES = {1: "A2", 2: "A1", 3: "B2", 4: "A1+A1", 5: "A1+A1", 6: "0", 7: "0",
             8: "A1", 9: "A1+A1", 10: "G2", 11: "A1+A1", 12: "A1+A1", 13: "B2",
             14: "A1+A1", 15: "A1+A1", 16: "G2"}
