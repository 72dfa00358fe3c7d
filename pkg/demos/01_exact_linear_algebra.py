# Exact linear algebra over the rationals
#
# Everything in dialgebra is computed with fractions.Fraction, so ranks and
# kernels are decided exactly. This script walks through the small matrix
# toolkit the derivation solver is built on.

from fractions import Fraction

from dialgebra.linalg import QMatrix, format_rational, invert, matmul, nullspace, rref


def show(vectors):
    return [tuple(format_rational(x) for x in v) for v in vectors]

m = QMatrix.from_rows([[2, 4], [1, 3]])
reduced, pivots, rank = rref(m)
print("rref of", m, "->", reduced, "pivots", pivots, "rank", rank)

# The kernel basis is canonical: one vector per free column, with that
# free variable set to 1 and the others to 0.
print("kernel of [[1,1],[0,0]]:", show(nullspace(QMatrix.from_rows([[1, 1], [0, 0]]))))
print("kernel of the zero 2x2:", show(nullspace(QMatrix.zeros(2))))

# Inverses are exact too.
shear = QMatrix.from_rows([[1, Fraction(1, 3)], [0, 1]])
print("inverse of", shear, "is", invert(shear))
print("check:", matmul(shear, invert(shear)) == QMatrix.identity(2))

# Column-major vectorization is how derivation matrices become unknowns.
d = QMatrix.from_rows([[1, 2], [3, 4]])
print("vec", d, "=", show([d.vectorize()])[0])
