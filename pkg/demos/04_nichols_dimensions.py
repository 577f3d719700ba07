"""Graded dimensions of a Nichols algebra, computed two ways.

The first way reads them off the Hilbert series, a product over the
positive roots.  The second ranks the Gram matrix of the shuffle pairing
on each graded piece of the free algebra.  Both must agree.
"""

from nichols_lie import RowPreset, hilbert_series_A, hilbert_series_B, hilbert_series_L
from nichols_lie import nichols_graded_dim, positive_roots
from nichols_lie.rootsys import nichols_dimension

for row in (1, 2):
    q = RowPreset(row, 1, 3).matrix()
    rs = positive_roots(q)
    H = hilbert_series_B(rs, 8)
    print(f"row {row}, q of order 3: total dimension {nichols_dimension(rs)}")
    # each list runs over the degrees (0, n), (1, n - 1), ..., (n, 0)
    for total in range(0, 9):
        series = [H[(a, total - a)] for a in range(total + 1)]
        gram = [nichols_graded_dim(q, (a, total - a)) for a in range(total + 1)]
        if any(series):
            print(f"  total degree {total}: series {series}  Gram ranks {gram}")
    print()

rs = positive_roots(RowPreset(10).matrix())
D = 12
same = hilbert_series_L(rs, D) == hilbert_series_B(rs, D) * hilbert_series_A(rs, D)
print(f"G2 row: distinguished pre-Nichols series factors through the Nichols one: {same}")
