"""Rebuild the rank-2 classification table one row at a time.

Every preset row is analysed at its default parameter and the computed
Lie type is set next to the expected one.  The last lines show how the
answer for the parametric rows depends on the order of q.
"""

import time

from nichols_lie import RowPreset, build_report, positive_roots
from nichols_lie.errors import ConstraintError
from nichols_lie.presets import ROWS

start = time.perf_counter()
print(f"{'row':>3}  {'roots':>5}  {'expected':<7}  computed")
for row in sorted(ROWS):
    preset = RowPreset(row)
    q = preset.matrix()
    got = build_report(q).lie_type
    mark = "" if got == preset.lie_type else "   <-- mismatch"
    print(f"{row:>3}  {len(positive_roots(q)):>5}  {preset.lie_type:<7}  {got}{mark}")
print(f"done in {time.perf_counter() - start:.2f}s\n")

print("row 3 (B2) Cartan orders as the order of q varies:")
for order in (3, 4, 5, 6, 8):
    rs = positive_roots(RowPreset(3, 1, order).matrix())
    print(f"  ord q = {order}:", dict(zip(rs.roots, rs.orders)))

print("\nparameters outside a row's range are refused:")
try:
    RowPreset(2, 1, 2)
except ConstraintError as exc:
    print("  ", exc)
