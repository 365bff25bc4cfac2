"""
Configuration for the Coxeter group core

Defines the catalogue of supported finite Weyl types and the enumeration caps.
Generators follow the Bourbaki labeling: s1, ..., sn, with the short simple
root last in type B and the branch node at n-2 in type D.
"""

# Supported finite types (Bourbaki labels)
SUPPORTED_TYPES = {
    "A": {
        "name": "A_n (sl_{n+1})",
        "min_rank": 1,
        "description": "Symmetric group S_{n+1}; s_i swaps positions i and i+1",
    },
    "B": {
        "name": "B_n (so_{2n+1})",
        "min_rank": 2,
        "description": "Hyperoctahedral group; the edge s_{n-1} - s_n has label 4",
    },
    "D": {
        "name": "D_n (so_{2n})",
        "min_rank": 4,
        "description": "Even-signed permutations; s_{n-2} is the branch node",
    },
}

# Largest group the enumerator is allowed to build (covers A5, B4, D5)
ENUMERATION_CAP = 50_000

# Largest group for which the full Bruhat order is stored as a bit-matrix;
# above this, comparisons fall back to the memoized subword test
BRUHAT_MATRIX_CAP = 10_000

# Coxeter matrix entry -> off-diagonal Cartan entries (a_ij for i < j, a_ji)
CARTAN_FROM_COXETER = {
    2: (0, 0),
    3: (-1, -1),
    4: (-1, -2),
    6: (-1, -3),
}
