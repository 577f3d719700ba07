"""Why the root-vector powers are not primitive.

For a Cartan root beta with order N, the coproduct of x_beta^N has a
component x_1^A (x) x_2^B with (A, B) = N beta.  A nonzero coefficient
there means x_beta^N is not primitive in the pre-Nichols algebra.  This
script computes those coefficients for the G2 row at q = i and compares
them with closed product formulas.
"""

from nichols_lie import RowPreset, coproduct, hyperletter, positive_roots
from nichols_lie.lieinfer import primitivity_witnesses
from nichols_lie.lyndon import word_str

q = RowPreset(10, 1, 4).matrix()
qq, q21 = q[1, 1], q[2, 1]
N = 4
t = N * (N - 1) // 2
closed = {
    (1, 1): (1 - qq ** -3) ** N * q21 ** t,
    (2, 1): (1 - qq ** -2) ** N * (1 - qq ** -3) ** N,
    (3, 1): (1 - qq ** -1) ** N * (1 - qq ** -2) ** N * (1 - qq ** -3) ** N * q21 ** (3 * t),
    (3, 2): (1 - qq ** -1) ** N * (1 - qq ** -2) ** N * (1 - qq ** -3) ** (2 * N),
}

rs = positive_roots(q)
for w in primitivity_witnesses(q, rs):
    if w.status != "found":
        print(f"{w.root}: {w.status}")
        continue
    agree = "agrees" if w.coefficient == closed[w.root] else "DIFFERS"
    print(f"{w.root}: x1^{w.left_degree[0]} (x) x2^{w.right_degree[1]} "
          f"coefficient {w.coefficient.literal():>6}  ({agree} with the product formula)")

# a smaller example, written out in full
q1 = RowPreset(1, 1, 3).matrix()
print("\ncoproduct of x_12 for the A2 braiding at a cube root of unity:")
for (left, right), c in sorted(coproduct(hyperletter("12", q1), q1).terms.items()):
    lw = "x" + word_str(left) if left else "1"
    rw = "x" + word_str(right) if right else "1"
    print(f"  {c.literal():>8}  {lw} (x) {rw}")
