"""Built-in Gram matrices for the lattices used throughout the package.

Versioned data table.  The E8 convention is fixed here once and for all:
we use the *negative definite* E8 Gram matrix (the negated Cartan matrix,
Bourbaki node numbering), so that K3 Neron-Severi lattices come out with
signature (1, rho - 1).
"""

GRAM_TABLE_VERSION = "1"

HYPERBOLIC_PLANE = (
    (0, 1),
    (1, 0),
)

# Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _negative_e8():
    gram = [[0] * 8 for _ in range(8)]
    for i in range(8):
        gram[i][i] = -2
    for a, b in _E8_EDGES:
        gram[a - 1][b - 1] = 1
        gram[b - 1][a - 1] = 1
    return tuple(tuple(row) for row in gram)


E8_NEGATIVE = _negative_e8()

MINUS_FOUR = ((-4,),)


def _block_sum(*blocks):
    size = sum(len(b) for b in blocks)
    gram = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, entry in enumerate(row):
                gram[offset + i][offset + j] = entry
        offset += len(block)
    return tuple(tuple(row) for row in gram)


# Polarizing lattice of the mirror-quartic K3 surface: H + E8 + E8 + <-4>.
MIRROR_QUARTIC_POLARIZATION = _block_sum(
    HYPERBOLIC_PLANE, E8_NEGATIVE, E8_NEGATIVE, MINUS_FOUR
)

STANDARD_GRAMS = {
    "H": HYPERBOLIC_PLANE,
    "E8": E8_NEGATIVE,
    "minus4": MINUS_FOUR,
    "M2": MIRROR_QUARTIC_POLARIZATION,
}
