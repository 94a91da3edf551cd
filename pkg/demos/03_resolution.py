"""
A 3x2 matrix, its minors and their syzygies
===========================================

"""

from nilcert import CurveParameters, build_matrix_A, format_polynomial, maximal_minors, syzygies
from nilcert.certificate import hilbert_burch_row
from nilcert.modsyz import column_module, module_spans_equal

params = CurveParameters(2, "q")
A = build_matrix_A(params)
for row in A.rows:
    print("  ".join(format_polynomial(a).rjust(8) for a in row))

# minor i deletes row i
m1, m2, m3 = maximal_minors(A)
for name, m in zip(("m1", "m2", "m3"), (m1, m2, m3)):
    print(name, "=", format_polynomial(m))

# the signed row kills A ...
B = hilbert_burch_row(A)
print("B*A = 0:", (B @ A).is_zero())

# ... and its syzygy module is exactly the column span of A
S = syzygies(list(B.rows[0]))
print("Syz(B) = columns of A:", module_spans_equal(S, column_module(A)))
