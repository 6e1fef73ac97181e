"""Published reference values, kept verbatim as printed.

Some printed fractions are not in lowest terms (P_7, P_8, P_9), so compare
with :func:`fractions.Fraction` equality rather than string equality.
"""

PUBLISHED_PATH_AVERAGES = {
    2: "5/3",
    3: "19/9",
    4: "67/27",
    5: "227/81",
    6: "751/243",
    7: "2445/729",
    8: "7869/2187",
    9: "25107/6561",
    10: "78767/19683",
    11: "250793/59049",
    12: "786985/177147",
}

PUBLISHED_CYCLE_AVERAGES = {
    3: "13/7",
    4: "41/19",
    5: "121/51",
    6: "365/141",
    7: "1093/393",
    8: "3281/1107",
    9: "9841/3139",
    10: "29525/8953",
    11: "88573/25653",
    12: "265721/73789",
}

# Rows 0..4 of the centred trinomial triangle.
TRINOMIAL_TRIANGLE_ROWS = [
    [1],
    [1, 1, 1],
    [1, 2, 3, 2, 1],
    [1, 3, 6, 7, 6, 3, 1],
    [1, 4, 10, 16, 19, 16, 10, 4, 1],
]

# Rows 0..6 of T*(n, k).
IRREGULAR_TRINOMIAL_ROWS = TRINOMIAL_TRIANGLE_ROWS + [
    [1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1],
    [1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1],
]
