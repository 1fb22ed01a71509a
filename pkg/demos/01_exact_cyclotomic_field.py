"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Every computation in this package runs over Q(zeta_N) with scalars stored
as rational coordinate vectors modulo the N-th cyclotomic polynomial, so
equality tests are exact -- there is no epsilon anywhere.
"""

from fractions import Fraction

from taftgal.field import make_field, parse_scalar, primitive_root

field = make_field(12)
print(f"working in {field}  (degree {field.degree} over Q)")

z = field.zeta
print(f"zeta_12                = {z}")
print(f"zeta_12^12             = {z ** 12}")
print(f"zeta_12^6              = {z ** 6}   (a primitive square root of 1)")

# primitive n-th roots for any n dividing the conductor
q3 = primitive_root(field, 3)
q4 = primitive_root(field, 4)
print(f"primitive cube root    = {q3},  q3^3 = {q3 ** 3}")
print(f"primitive fourth root  = {q4},  q4^2 = {q4 ** 2}")

# golden identity for zeta_12: z^4 - z^2 + 1 = 0
lhs = z ** 4 - z ** 2 + field.one
print(f"z^4 - z^2 + 1          = {lhs}  (cyclotomic relation, exactly zero)")

# rationals embed exactly; inverses are computed by the extended Euclid
# algorithm on polynomials, not by floating point
s = z ** 2 + Fraction(3, 7)
t = s.inverse()
print(f"(z^2 + 3/7)^-1         = {t}")
print(f"product with inverse   = {s * t}")

# the same syntax the command line accepts
u = parse_scalar("(2*z^2 - 1)/3", field)
print(f'parse_scalar("(2*z^2 - 1)/3") = {u}')
print(f"round trip             = {parse_scalar(str(u), field) == u}")
