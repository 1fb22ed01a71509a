"""Small quantum groups from structure constants, with every Hopf axiom
machine-checked.

build_taft(n) is the n^2-dimensional algebra generated by a grouplike g
and a skew-primitive x with g^n = 1, x^n = 0, xg = q gx; build_taft_qinv
is its partner with the inverse root and a right-handed skew-primitive y.
verify_hopf replays associativity, coassociativity, unit/counit, the
bialgebra compatibilities, and the antipode identities on raw structure
constants -- exhaustively, over Q(zeta_n).
"""

from taftgal.field import make_field
from taftgal.hopf import (
    build_H,
    build_taft,
    build_taft_qinv,
    cop,
    hopf_morphism_check,
    mutate_mult,
    taft_flip_images,
    verify_hopf,
)

n = 3
field = make_field(n)
T = build_taft(n, field)
print(f"T_q at n={n}: dimension {T.dim}, basis {T.labels[:4]} ...")

rep = verify_hopf(T)
print(f"\nverify_hopf({T.name}): passed = {rep.passed}")
for name, ok, detail in rep.checks:
    print(f"  {'ok ' if ok else 'XX '}{name:24s} {detail}")

# the partner algebra and the four-generator double
Ti = build_taft_qinv(n, field)
H = build_H(n, field)
print(f"\npartner {Ti.name}: dim {Ti.dim}, axioms pass = "
      f"{verify_hopf(Ti).passed}")
print(f"double  {H.name}: dim {H.dim}, axioms pass = "
      f"{verify_hopf(H).passed}")

# the partner is the co-opposite of T_q in disguise: g -> g, y -> x g^-1
iso = hopf_morphism_check(Ti, cop(T), taft_flip_images(Ti, T))
print(f"\nT_qinv -> cop(T_q) Hopf isomorphism: passed = {iso.passed}")
for name, ok, detail in iso.checks:
    print(f"  {'ok ' if ok else 'XX '}{name:24s} {detail}")

# the checker is not a rubber stamp: poison one structure constant and
# watch an axiom break
broken = mutate_mult(T, 1, 2, 0)
bad = verify_hopf(broken)
print(f"\nafter corrupting one product entry: passed = {bad.passed}")
for name, ok, detail in bad.checks:
    if not ok:
        print(f"  first failing axiom: {name}  ({detail})")
        break
