"""Reflections, orbits and what happens when things go wrong.

A braiding matrix can be reflected at any Cartan vertex; the diagrams
reached this way form one cell of the table.  Braidings with an undefined
Cartan entry or an infinite root system are rejected with specific errors.
"""

from nichols_lie import RowPreset, from_diagram, parse_matrix_text, positive_roots, weyl_orbit
from nichols_lie.cyclo import CyclotomicField
from nichols_lie.errors import CartanUndefinedError, LiteralParseError, RootSystemNotFiniteError

q = RowPreset(16).matrix()
print("orbit of the first row 16 diagram:")
for d in weyl_orbit(q):
    print("  ", d)

print("\nmalformed input:")
try:
    parse_matrix_text("z3,z3^;1,z3")
except LiteralParseError as exc:
    print("  ", exc)

print("\nq11 = 1 with a non-trivial edge:")
try:
    positive_roots(parse_matrix_text("1,z3;1,z3"))
except CartanUndefinedError as exc:
    print("  ", exc)

print("\nan affine-type braiding never closes up:")
F = CyclotomicField(10)
z = F.root(5, 1)
try:
    positive_roots(from_diagram(z, z ** -2, z))
except RootSystemNotFiniteError as exc:
    print("  ", exc)
