# Coxeter Group Core
# Finite Weyl groups: elements, length, Bruhat order, descents, parabolic data
