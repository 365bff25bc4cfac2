"""
Kazhdan-Lusztig engine

KL polynomials (recursion and bar-invariance oracle), the Hecke algebra in
Soergel's normalization, cells with Lusztig's a-function, and the
Robinson-Schensted correspondence for type A.
"""
