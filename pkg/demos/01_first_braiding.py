"""Walk through one braiding matrix from literals to its Lie algebra.

We start from the standard A2 braiding at a cube root of unity, list its
positive roots with the Lyndon words attached to them, and finish with the
report that names the Lie algebra spanned by the root-vector powers.
"""

from nichols_lie import build_report, cartan_matrix, diagram, parse_matrix_text, positive_roots
from nichols_lie.lyndon import word_str

q = parse_matrix_text("z3,z3^2;1,z3")
print("braiding matrix:", q.literals())
print("Dynkin diagram: ", diagram(q))
print("generalized Cartan matrix:", cartan_matrix(q))

rs = positive_roots(q)
print(f"\n{len(rs)} positive roots, in the order the reflections produce them:")
for beta, is_cartan, n in zip(rs.roots, rs.cartan_flags, rs.orders):
    tag = "Cartan" if is_cartan else "      "
    print(f"  {beta}  {tag}  N = {n}  word {word_str(rs.root_words[beta])}")

report = build_report(q)
print("\nLie type:", report.lie_type)
print("degrees of the basis:", [d for _, _, d in report.cartan_degrees])
print("generation step:", report.generation)
for w in report.witnesses:
    coeff = w.coefficient.literal() if w.coefficient is not None else "-"
    print(f"  witness for {w.root}: {w.status}, coefficient {coeff}")
