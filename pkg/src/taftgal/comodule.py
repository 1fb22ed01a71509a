"""Comodule algebras over a structure-constant Hopf algebra: construction
by generator extension, coinvariants, absolute H-simplicity via the
Burnside span, grouplike twists, the bar construction, the diagonal
bicomodule, Loewy filtration, and isomorphism checking.

A left coaction is a list over basis of dicts {(h, a): scalar} meaning
lambda(e_i) = sum scalar * h_h (x) e_a; a right coaction uses keys (a, h).
"""

from __future__ import annotations

import json

import numpy as np

from .core import AlgebraData, Report
from .field import Field, make_field, parse_scalar
from .hopf import HopfAlgebraData, hopf_from_json, hopf_to_json
from .linalg import (
    BadPrime,
    Echelon,
    ModSpan,
    ScalarModP,
    Subspace,
    Vec,
    find_primes,
    invert_matrix_rows,
    kernel_from_images,
    vec_add_into,
    vec_eq,
)


class ComoduleError(ValueError):
    """Coaction extension or axiom verification failed."""


class ComoduleAlgebraData(AlgebraData):
    """An algebra with a verified left and/or right coaction.

    `left` coacts through `hopf_left`, `right` through `hopf_right`."""

    def __init__(
        self,
        field: Field,
        labels,
        mult,
        unit,
        hopf_left: HopfAlgebraData | None = None,
        left=None,
        hopf_right: HopfAlgebraData | None = None,
        right=None,
        **kw,
    ):
        super().__init__(field, labels, mult, unit, **kw)
        self.hopf_left = hopf_left
        self.left = left
        self.hopf_right = hopf_right
        self.right = right
        self.verified: Report | None = None

    def coact_left(self, v: Vec) -> dict:
        out: dict = {}
        for i, c in v.items():
            for key, s in self.left[i].items():
                cur = out.get(key)
                new = c * s if cur is None else cur + c * s
                if new:
                    out[key] = new
                elif cur is not None:
                    del out[key]
        return out

    def coact_right(self, v: Vec) -> dict:
        out: dict = {}
        for i, c in v.items():
            for key, s in self.right[i].items():
                cur = out.get(key)
                new = c * s if cur is None else cur + c * s
                if new:
                    out[key] = new
                elif cur is not None:
                    del out[key]
        return out


def _mixed_mul(H: HopfAlgebraData, A: AlgebraData, t1: dict, t2: dict, h_first=True):
    """Product of H(x)A (h_first) or A(x)H tensor elements."""
    out: dict = {}
    for k1, c1 in t1.items():
        for k2, c2 in t2.items():
            if h_first:
                hterm = H.mul({k1[0]: H.field.one}, {k2[0]: H.field.one})
                aterm = A.mul({k1[1]: A.field.one}, {k2[1]: A.field.one})
                pairs = ((h, a) for h in hterm for a in aterm)
                get = lambda h, a: hterm[h] * aterm[a]
            else:
                aterm = A.mul({k1[0]: A.field.one}, {k2[0]: A.field.one})
                hterm = H.mul({k1[1]: H.field.one}, {k2[1]: H.field.one})
                pairs = ((a, h) for a in aterm for h in hterm)
                get = lambda a, h: aterm[a] * hterm[h]
            c = c1 * c2
            for key in pairs:
                s = c * get(*key)
                cur = out.get(key)
                new = s if cur is None else cur + s
                if new:
                    out[key] = new
                elif cur is not None:
                    del out[key]
    return out


def verify_comodule(A: ComoduleAlgebraData) -> Report:
    """Coaction axiom suite for each declared side, plus the bicomodule
    commutation when both sides are present."""
    rep = Report(f"verify_comodule({A.name or 'anonymous'})")
    one = A.field.one
    for side in ("left", "right"):
        co = A.left if side == "left" else A.right
        if co is None:
            continue
        H = A.hopf_left if side == "left" else A.hopf_right
        # coassociativity
        ok = True
        for i in range(A.dim):
            lhs: dict = {}
            rhs: dict = {}
            for key, s in co[i].items():
                h, a = key if side == "left" else (key[1], key[0])
                for (h1, h2), c in H.comult[h].items():
                    k = (h1, h2, a) if side == "left" else (a, h1, h2)
                    lhs[k] = lhs.get(k, A.field.zero) + s * c
                for key2, c in co[a].items():
                    if side == "left":
                        k = (h, key2[0], key2[1])
                    else:
                        k = (key2[0], key2[1], h)
                    rhs[k] = rhs.get(k, A.field.zero) + s * c
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                ok = rep.add(f"{side}-coassociativity", False, A.labels[i])
                break
        if ok:
            rep.add(f"{side}-coassociativity", True)
        # counit
        ok = True
        for i in range(A.dim):
            acc: Vec = {}
            for key, s in co[i].items():
                h, a = key if side == "left" else (key[1], key[0])
                e = H.counit[h]
                if e:
                    vec_add_into(acc, a, s * e)
            if not vec_eq(acc, {i: one}):
                ok = rep.add(f"{side}-counit", False, A.labels[i])
                break
        if ok:
            rep.add(f"{side}-counit", True)
        # algebra map (exhaustive pairs) and unit
        unit_img: dict = {}
        for i, c in A.unit.items():
            for key, s in co[i].items():
                unit_img[key] = unit_img.get(key, A.field.zero) + c * s
        unit_img = {k: v for k, v in unit_img.items() if v}
        expect = {}
        for uh, cu in H.unit.items():
            for ua, ca in A.unit.items():
                k = (uh, ua) if side == "left" else (ua, uh)
                expect[k] = cu * ca
        rep.add(f"{side}-unital", vec_eq(unit_img, expect))
        ok = True
        for i in range(A.dim):
            ci = co[i]
            for j in range(A.dim):
                prod: dict = {}
                for k, s in A.mul_basis(i, j):
                    for key, c in co[k].items():
                        cur = prod.get(key)
                        new = s * c if cur is None else cur + s * c
                        if new:
                            prod[key] = new
                        elif cur is not None:
                            del prod[key]
                direct = _mixed_mul(H, A, ci, co[j], h_first=(side == "left"))
                if not vec_eq(prod, direct):
                    ok = rep.add(
                        f"{side}-algebra-map",
                        False,
                        f"on {A.labels[i]} * {A.labels[j]}",
                    )
                    break
            if not ok:
                break
        if ok:
            rep.add(f"{side}-algebra-map", True, f"exhaustive {A.dim}^2 pairs")
    if A.left is not None and A.right is not None:
        ok = True
        for i in range(A.dim):
            lhs: dict = {}  # (h, a, h') from (lambda x id) rho
            for (a, hr), s in A.right[i].items():
                for (hl, a2), c in A.left[a].items():
                    k = (hl, a2, hr)
                    lhs[k] = lhs.get(k, A.field.zero) + s * c
            rhs: dict = {}
            for (hl, a), s in A.left[i].items():
                for (a2, hr), c in A.right[a].items():
                    k = (hl, a2, hr)
                    rhs[k] = rhs.get(k, A.field.zero) + s * c
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                ok = rep.add("bicomodule-commutation", False, A.labels[i])
                break
        if ok:
            rep.add("bicomodule-commutation", True)
    return rep


def build_comodule_algebra(
    algebra: AlgebraData,
    hopf: HopfAlgebraData,
    coaction_on_gens: dict[str, dict],
    side: str = "left",
) -> ComoduleAlgebraData:
    """Extend a coaction given on generators multiplicatively along the
    algebra's words and verify all axioms; raises ComoduleError (with the
    report attached) if anything fails."""
    assert side in ("left", "right")
    h_first = side == "left"
    unit_t = {}
    for uh, cu in hopf.unit.items():
        for ua, ca in algebra.unit.items():
            k = (uh, ua) if h_first else (ua, uh)
            unit_t[k] = cu * ca
    co = []
    for word in algebra.words:
        t = dict(unit_t)
        for gname in word:
            t = _mixed_mul(hopf, algebra, t, coaction_on_gens[gname], h_first=h_first)
        co.append(t)
    kw = dict(
        gens=algebra.gens,
        words=algebra.words,
        exps=algebra.exps,
        grading=algebra.grading,
        name=algebra.name,
        notes=algebra.notes,
    )
    if side == "left":
        A = ComoduleAlgebraData(
            algebra.field, algebra.labels, algebra.mult, algebra.unit,
            hopf_left=hopf, left=co, **kw,
        )
    else:
        A = ComoduleAlgebraData(
            algebra.field, algebra.labels, algebra.mult, algebra.unit,
            hopf_right=hopf, right=co, **kw,
        )
    rep = verify_comodule(A)
    if not rep.passed:
        err = ComoduleError(f"coaction axioms fail: {rep.failures()}")
        err.report = rep
        raise err
    A.verified = rep
    return A


def trivial_comodule(algebra: AlgebraData, hopf: HopfAlgebraData) -> ComoduleAlgebraData:
    """a |-> 1 (x) a."""
    co = []
    for i in range(len(algebra.labels)):
        t = {}
        for uh, cu in hopf.unit.items():
            t[(uh, i)] = cu
        co.append(t)
    A = ComoduleAlgebraData(
        algebra.field, algebra.labels, algebra.mult, algebra.unit,
        hopf_left=hopf, left=co,
        gens=algebra.gens, words=algebra.words, exps=algebra.exps,
        grading=algebra.grading, name=algebra.name + "(trivial coaction)",
    )
    A.verified = verify_comodule(A)
    assert A.verified.passed
    return A


def regular_comodule(H: HopfAlgebraData, sides=("left",)) -> ComoduleAlgebraData:
    """H coacting on itself by its comultiplication."""
    left = None
    right = None
    if "left" in sides:
        left = [dict(H.comult[i]) for i in range(H.dim)]
    if "right" in sides:
        right = [dict(H.comult[i]) for i in range(H.dim)]
    A = ComoduleAlgebraData(
        H.field, H.labels, H.mult, H.unit,
        hopf_left=H if left is not None else None, left=left,
        hopf_right=H if right is not None else None, right=right,
        gens=H.gens, words=H.words, exps=H.exps, grading=H.grading,
        name=H.name + "(regular)",
    )
    A.verified = verify_comodule(A)
    assert A.verified.passed, A.verified.failures()
    return A


# ---------------------------------------------------------------------------
# coinvariants


def coinvariants(A: ComoduleAlgebraData, side: str = "left"):
    """Kernel of v |-> coaction(v) - 1(x)v as a canonical Subspace,
    plus a `trivial` flag (dimension one, spanned by the unit)."""
    co = A.left if side == "left" else A.right
    H = A.hopf_left if side == "left" else A.hopf_right
    images = []
    for i in range(A.dim):
        img: Vec = {}
        for key, s in co[i].items():
            h, a = key if side == "left" else (key[1], key[0])
            img[h * A.dim + a] = s
        for uh, cu in H.unit.items():
            vec_add_into(img, uh * A.dim + i, -cu)
        images.append(img)
    combos = kernel_from_images(images, A.field)
    sub = Subspace(A.dim, combos, A.field)
    trivial = sub.dim == 1 and sub.contains(A.unit)
    return sub, trivial


# ---------------------------------------------------------------------------
# absolute H-simplicity (Burnside span)


def _operator_generators(A: ComoduleAlgebraData):
    """Matrices (as column dicts) for left/right multiplication by the
    algebra generators and the dual-action operators T_h: a |->
    delta_h(a_{-1}) a_0 for every H-basis functional delta_h."""
    one = A.field.one
    gens = list(A.gens.values()) or [
        {i: one} for i in range(A.dim)
    ]
    ops = {}
    for t, g in enumerate(gens):
        ops[f"L{t}"] = [A.mul(g, {i: one}) for i in range(A.dim)]
        ops[f"R{t}"] = [A.mul({i: one}, g) for i in range(A.dim)]
    dH = A.hopf_left.dim
    tmats = {h: [dict() for _ in range(A.dim)] for h in range(dH)}
    for i in range(A.dim):
        for (h, a), s in A.left[i].items():
            vec_add_into(tmats[h][i], a, s)
    for h in range(dH):
        ops[f"T{h}"] = tmats[h]
    return ops


def _dual_generating_set(H: HopfAlgebraData, red: ScalarModP):
    """Indices whose dual-basis functionals convolution-generate H^*
    (verified mod p); None if the candidate set falls short."""
    p = red.p
    dH = H.dim
    # convolution in H^*: (f*g)(h) = sum f(h1) g(h2); represent functionals
    # as dense mod-p vectors over the H basis
    com = []
    for i in range(dH):
        com.append([(j, k, red(s)) for (j, k), s in H.comult[i].items()])

    def conv(f, g):
        out = np.zeros(dH, dtype=np.int64)
        for i in range(dH):
            acc = 0
            for j, k, c in com[i]:
                acc += c * f[j] % p * g[k]
            out[i] = acc % p
        return out

    # candidates: a separating grouplike functional, the x/y detectors,
    # and the counit (unit of H^*)
    cands = []
    eps = np.zeros(dH, dtype=np.int64)
    for i in range(dH):
        if H.counit[i]:
            eps[i] = red(H.counit[i])
    cands.append(eps)
    sep = np.zeros(dH, dtype=np.int64)
    for t, i in enumerate(H.group.indices):
        sep[i] = t + 2
    cands.append(sep)
    if H.exps is not None and H.grading is not None:
        # degree-1 detectors per exponent slot, summed over all group parts
        # (the classical convolution generators of a Taft-type dual)
        for slot in range(len(H.exps[0])):
            det = np.zeros(dH, dtype=np.int64)
            for i, e in enumerate(H.exps):
                if e[slot] == 1 and H.grading[i] == 1:
                    det[i] = 1
            if det.any():
                cands.append(det)
    span = ModSpan(dH, p)
    queue = []
    for v in cands:
        if span.insert(v):
            queue.append(v)
    while queue and span.dim < dH:
        v = queue.pop()
        for g in cands[1:]:
            w = conv(g, v)
            if span.insert(w):
                queue.append(w)
            w = conv(v, g)
            if span.insert(w):
                queue.append(w)
    if span.dim < dH:
        return None
    return cands


def is_H_simple(A: ComoduleAlgebraData, primes=None):
    """Decide ABSOLUTE H-simplicity: the span of compositions of left/right
    multiplications and dual-action operators must be all of End(A).

    Positive answers are certified modulo a prime p = 1 (mod N) (the span
    dimension mod p is a lower bound for the exact one, and (dim A)^2 is
    the ceiling); a span that stalls below the target is re-run with a
    second prime and then in exact arithmetic before reporting False."""
    D = A.dim
    target = D * D
    field = A.field
    if primes is None:
        primes = find_primes(field.N, count=2)
    ops = _operator_generators(A)
    last = None
    for p in primes:
        try:
            red = ScalarModP(field, p)
            mats = {}
            for name, cols in ops.items():
                m = np.zeros((D, D), dtype=np.int64)
                for i, col in enumerate(cols):
                    for k, s in col.items():
                        m[k, i] = red(s)
                mats[name] = m
            dual_gens = _dual_generating_set(A.hopf_left, red)
            if dual_gens is not None:
                t_reduced = []
                for f in dual_gens:
                    m = np.zeros((D, D), dtype=np.int64)
                    for h in range(A.hopf_left.dim):
                        if f[h]:
                            m = (m + int(f[h]) * mats[f"T{h}"]) % p
                    t_reduced.append(m)
                multipliers = [
                    m for n, m in mats.items() if not n.startswith("T")
                ] + t_reduced
            else:
                multipliers = list(mats.values())
            span = ModSpan(target, p, capacity=target)
            ident = np.eye(D, dtype=np.int64)
            queue = []
            iterations = 0
            for m in [ident] + list(mats.values()):
                if span.insert(m.reshape(-1).copy()):
                    queue.append(m)
            while queue and span.dim < target:
                m = queue.pop()
                for g in multipliers:
                    iterations += 1
                    c = g @ m % p
                    if span.insert(c.reshape(-1)):
                        queue.append(c)
            cert = {
                "dim": D,
                "target": target,
                "achieved": span.dim,
                "mode": "mod-p",
                "prime": p,
                "iterations": iterations,
                "multipliers": "reduced" if dual_gens is not None else "full",
            }
            if span.dim == target:
                cert["simple"] = True
                return True, cert
            last = cert
        except BadPrime:
            continue
    # exact confirmation of the negative answer
    ech = Echelon()
    iterations = 0
    one = field.one
    ident_cols = [{i: one} for i in range(D)]

    def flat(cols):
        v: Vec = {}
        for i, col in enumerate(cols):
            for k, s in col.items():
                v[k * D + i] = s
        return v

    def compose(f, g):  # f after g, as lists of column vectors
        out = []
        for col in g:
            acc: Vec = {}
            for a, c in col.items():
                for k, s in f[a].items():
                    vec_add_into(acc, k, c * s)
            out.append(acc)
        return out

    queue = []
    for m in [ident_cols] + list(ops.values()):
        if ech.insert(flat(m)) is not None:
            queue.append(m)
    while queue and ech.dim < target:
        m = queue.pop()
        for g in ops.values():
            iterations += 1
            c = compose(g, m)
            if ech.insert(flat(c)) is not None:
                queue.append(c)
    cert = {
        "dim": D,
        "target": target,
        "achieved": ech.dim,
        "mode": "exact",
        "iterations": iterations,
        "simple": ech.dim == target,
        "mod_p_attempt": last,
    }
    return ech.dim == target, cert


# ---------------------------------------------------------------------------
# twists, bar, diag


def g_twist(A: ComoduleAlgebraData, f_exps) -> ComoduleAlgebraData:
    """Conjugate the left coaction by a grouplike f: lambda^f(a) =
    f^-1 a_{-1} f (x) a_0; the right coaction (if any) is unchanged."""
    H = A.hopf_left
    G = H.group
    f_exps = tuple(f_exps)
    try:
        G.index(f_exps)
    except KeyError:
        raise ComoduleError(f"{f_exps} is not a grouplike of {H.name}") from None
    fv = H.grouplike_vec(f_exps)
    fiv = H.grouplike_vec(G.inv_exps(f_exps))
    left = []
    for i in range(A.dim):
        t: dict = {}
        for (h, a), s in A.left[i].items():
            conj = H.mul(H.mul(fiv, {h: H.field.one}), fv)
            for h2, c in conj.items():
                key = (h2, a)
                t[key] = t.get(key, A.field.zero) + s * c
        left.append({k: v for k, v in t.items() if v})
    out = ComoduleAlgebraData(
        A.field, A.labels, A.mult, A.unit,
        hopf_left=H, left=left,
        hopf_right=A.hopf_right, right=A.right,
        gens=A.gens, words=A.words, exps=A.exps, grading=A.grading,
        name=A.name + f"^{f_exps}",
    )
    rep = verify_comodule(out)
    if not rep.passed:
        raise ComoduleError(f"g_twist broke the coaction: {rep.failures()}")
    out.verified = rep
    return out


def _op_algebra(A: ComoduleAlgebraData) -> AlgebraData:
    mult = [dict() for _ in range(A.dim)]
    for i in range(A.dim):
        for j, ents in A.mult[i].items():
            mult[j][i] = ents
    return AlgebraData(
        A.field, A.labels, mult, A.unit,
        gens=A.gens, words=None, exps=A.exps, grading=A.grading,
        name=A.name + "^op", notes=A.notes,
    )


def bar(K: ComoduleAlgebraData) -> ComoduleAlgebraData:
    """Opposite algebra with side-swapped antipode-transformed coactions:
    a left coaction lambda becomes the right coaction k_0 (x) S^-1(k_-1),
    a right coaction rho becomes the left coaction S^-1(k_1) (x) k_0."""
    opp = _op_algebra(K)
    new_left = None
    new_right = None
    hl = hr = None
    if K.right is not None:
        H = K.hopf_right
        sinv = invert_matrix_rows(H.antipode, H.dim, H.field)
        new_left = []
        for i in range(K.dim):
            t: dict = {}
            for (a, h), s in K.right[i].items():
                for h2, c in sinv[h].items():
                    key = (h2, a)
                    t[key] = t.get(key, K.field.zero) + s * c
            new_left.append({k: v for k, v in t.items() if v})
        hl = H
    if K.left is not None:
        H = K.hopf_left
        sinv = invert_matrix_rows(H.antipode, H.dim, H.field)
        new_right = []
        for i in range(K.dim):
            t: dict = {}
            for (h, a), s in K.left[i].items():
                for h2, c in sinv[h].items():
                    key = (a, h2)
                    t[key] = t.get(key, K.field.zero) + s * c
            new_right.append({k: v for k, v in t.items() if v})
        hr = H
    out = ComoduleAlgebraData(
        K.field, K.labels, opp.mult, K.unit,
        hopf_left=hl, left=new_left, hopf_right=hr, right=new_right,
        gens=K.gens, words=None, exps=K.exps, grading=K.grading,
        name="bar(" + K.name + ")",
    )
    rep = verify_comodule(out)
    if not rep.passed:
        raise ComoduleError(f"bar coaction fails: {rep.failures()}")
    out.verified = rep
    return out


def diag(H: HopfAlgebraData) -> ComoduleAlgebraData:
    """H as a left H(x)H^cop-comodule algebra via a |-> a_1 (x) a_3 (x) a_2
    (the identity object for the composition of invertible bicomodules)."""
    from .hopf import cop, tensor_hopf

    host = tensor_hopf(H, cop(H), name=f"{H.name}(x){H.name}^cop")
    dH = H.dim
    left = []
    for i in range(dH):
        t: dict = {}
        for (j, k), s in H.comult[i].items():
            for (a, b), c in H.comult[k].items():
                # legs (j, b | a): host index j*dH + b, algebra leg a
                key = (j * dH + b, a)
                t[key] = t.get(key, H.field.zero) + s * c
        left.append({k: v for k, v in t.items() if v})
    out = ComoduleAlgebraData(
        H.field, H.labels, H.mult, H.unit,
        hopf_left=host, left=left,
        gens=H.gens, words=H.words, exps=H.exps, grading=H.grading,
        name=f"diag({H.name})",
        notes={"identity_object": "neutral for the cotensor composition"},
    )
    rep = verify_comodule(out)
    if not rep.passed:
        raise ComoduleError(f"diag coaction fails: {rep.failures()}")
    out.verified = rep
    return out


# ---------------------------------------------------------------------------
# Loewy filtration / associated graded


class LoewyResult:
    def __init__(self, graded, degrees, basis_vectors, coords):
        self.graded = graded          # ComoduleAlgebraData
        self.degrees = degrees        # degree of each graded basis vector
        self.basis_vectors = basis_vectors  # filtered basis, as vectors in A
        self._coords = coords         # function Vec(A) -> Vec(graded coords)

    def project(self, v: Vec, m: int) -> Vec:
        """Class in gr_m of an element of A_m (degree-m coordinates)."""
        coords = self._coords(v)
        return {k: c for k, c in coords.items() if self.degrees[k] == m}


def loewy_graded(A: ComoduleAlgebraData) -> LoewyResult:
    """Ascending filtration A_m = lambda^-1(H_{<=m} (x) A) through the
    grading of the coacting Hopf algebra, and the associated graded
    comodule algebra."""
    H = A.hopf_left
    assert H.grading is not None, "coacting Hopf algebra must be graded"
    hdeg = H.grading
    maxdeg = max(hdeg)
    field = A.field
    # filtration subspaces via kernels of the high-degree part of lambda
    filt: list[list[Vec]] = []
    for m in range(maxdeg + 1):
        images = []
        for i in range(A.dim):
            img: Vec = {}
            for (h, a), s in A.left[i].items():
                if hdeg[h] > m:
                    img[h * A.dim + a] = s
            images.append(img)
        combos = kernel_from_images(images, field)
        filt.append(combos)
    if len(Subspace(A.dim, filt[-1], field).rows) != A.dim:
        raise ComoduleError("Loewy filtration is not exhaustive (coaction bug?)")
    # filtered basis: extend echelon level by level, recording degrees
    ech = Echelon()
    basis_vectors: list[Vec] = []
    degrees: list[int] = []
    for m, vectors in enumerate(filt):
        for v in vectors:
            if ech.insert(v) is not None:
                basis_vectors.append(dict(v))
                degrees.append(m)
    assert len(basis_vectors) == A.dim
    inv = invert_matrix_rows(basis_vectors, A.dim, field)

    def coords(v: Vec) -> Vec:
        out: Vec = {}
        for a, c in v.items():
            for k, s in inv[a].items():
                vec_add_into(out, k, c * s)
        return out

    # graded product: keep the leading-degree part, complain on overflow
    mult = [dict() for _ in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.mul(basis_vectors[i], basis_vectors[j])
            cs = coords(prod)
            d = degrees[i] + degrees[j]
            ents = []
            for k, c in cs.items():
                if degrees[k] > d:
                    raise ComoduleError(
                        "product violates the Loewy filtration "
                        f"(degree {degrees[k]} > {d})"
                    )
                if degrees[k] == d:
                    ents.append((k, c))
            if ents:
                mult[i][j] = tuple(ents)
    unit = coords(A.unit)
    assert all(degrees[k] == 0 for k in unit)
    left = []
    for i in range(A.dim):
        t: dict = {}
        src = A.coact_left(basis_vectors[i])
        for (h, a), s in src.items():
            for k, c in coords({a: s}).items():
                if hdeg[h] + degrees[k] == degrees[i]:
                    key = (h, k)
                    t[key] = t.get(key, field.zero) + c
        left.append({k: v for k, v in t.items() if v})
    labels = [f"gr{degrees[i]}[{A.labels[min(basis_vectors[i])]}]" for i in range(A.dim)]
    out = ComoduleAlgebraData(
        field, labels, mult, unit,
        hopf_left=H, left=left,
        grading=degrees, name=f"gr({A.name})",
    )
    rep = verify_comodule(out)
    if not rep.passed:
        raise ComoduleError(f"associated graded fails axioms: {rep.failures()}")
    out.verified = rep
    return LoewyResult(out, degrees, basis_vectors, coords)


# ---------------------------------------------------------------------------
# isomorphism checking


def comodule_algebra_iso_check(
    A: ComoduleAlgebraData,
    B: ComoduleAlgebraData,
    images: dict[str, Vec],
    require_bijective: bool = True,
) -> Report:
    """Extend generator images along A's words; verify algebra map,
    comodule map on each declared side, and bijectivity.  The image
    matrix is attached as report.matrix."""
    rep = Report(f"comodule iso {A.name} -> {B.name}")
    rows = A.extend_images(B.mul, B.unit, images)
    rep.matrix = rows
    ok = True
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = B.mul(rows[i], rows[j])
            rhs: Vec = {}
            for k, s in A.mul_basis(i, j):
                for t, c in rows[k].items():
                    vec_add_into(rhs, t, s * c)
            if not vec_eq(lhs, rhs):
                ok = rep.add("algebra-map", False, f"{A.labels[i]} * {A.labels[j]}")
                break
        if not ok:
            break
    if ok:
        rep.add("algebra-map", True, f"all {A.dim}^2 pairs")
    img_unit: Vec = {}
    for i, c in A.unit.items():
        for t, s in rows[i].items():
            vec_add_into(img_unit, t, c * s)
    rep.add("unital", vec_eq(img_unit, B.unit))
    for side in ("left", "right"):
        coA = A.left if side == "left" else A.right
        coB = B.left if side == "left" else B.right
        if coA is None and coB is None:
            continue
        if (coA is None) != (coB is None):
            rep.add(f"{side}-comodule-map", False, "sides do not match")
            continue
        ok = True
        for i in range(A.dim):
            lhs: dict = {}
            for key, s in coA[i].items():
                h, a = key if side == "left" else (key[1], key[0])
                for t, c in rows[a].items():
                    k = (h, t) if side == "left" else (t, h)
                    cur = lhs.get(k)
                    new = s * c if cur is None else cur + s * c
                    if new:
                        lhs[k] = new
                    elif cur is not None:
                        del lhs[k]
            rhs = (
                B.coact_left(rows[i]) if side == "left" else B.coact_right(rows[i])
            )
            if not vec_eq(lhs, rhs):
                ok = rep.add(f"{side}-comodule-map", False, A.labels[i])
                break
        if ok:
            rep.add(f"{side}-comodule-map", True)
    if require_bijective:
        ech = Echelon()
        for r in rows:
            ech.insert(r)
        rep.add(
            "bijective",
            ech.dim == A.dim == B.dim,
            f"rank {ech.dim}, dims {A.dim}/{B.dim}",
        )
    return rep


# ---------------------------------------------------------------------------
# serialization


def comodule_to_json(A: ComoduleAlgebraData) -> str:
    def vec_js(v):
        return [[k, str(s)] for k, s in sorted(v.items())]

    mult = []
    for i in range(A.dim):
        for j, ents in sorted(A.mult[i].items()):
            mult.append([i, j, [[k, str(s)] for k, s in ents]])
    data = {
        "format": "taftgal-comodule-v1",
        "name": A.name,
        "field_N": A.field.N,
        "dim": A.dim,
        "labels": A.labels,
        "mult": mult,
        "unit": vec_js(A.unit),
        "grading": A.grading,
        "notes": A.notes,
        "hopf_left": hopf_to_json(A.hopf_left) if A.hopf_left is not None else None,
        "left": [
            [[h, a, str(s)] for (h, a), s in sorted(A.left[i].items())]
            for i in range(A.dim)
        ]
        if A.left is not None
        else None,
        "hopf_right": hopf_to_json(A.hopf_right) if A.hopf_right is not None else None,
        "right": [
            [[a, h, str(s)] for (a, h), s in sorted(A.right[i].items())]
            for i in range(A.dim)
        ]
        if A.right is not None
        else None,
    }
    return json.dumps(data, indent=1, sort_keys=True)


def comodule_from_json(text: str) -> ComoduleAlgebraData:
    data = json.loads(text)
    assert data.get("format") == "taftgal-comodule-v1"
    field = make_field(data["field_N"])
    dim = data["dim"]
    mult = [dict() for _ in range(dim)]
    for i, j, ents in data["mult"]:
        mult[i][j] = tuple((int(k), parse_scalar(s, field)) for k, s in ents)
    hl = hopf_from_json(data["hopf_left"]) if data["hopf_left"] else None
    hr = hopf_from_json(data["hopf_right"]) if data["hopf_right"] else None
    left = None
    if data["left"] is not None:
        left = [
            {(int(h), int(a)): parse_scalar(s, field) for h, a, s in row}
            for row in data["left"]
        ]
    right = None
    if data["right"] is not None:
        right = [
            {(int(a), int(h)): parse_scalar(s, field) for a, h, s in row}
            for row in data["right"]
        ]
    return ComoduleAlgebraData(
        field, data["labels"], mult,
        {int(k): parse_scalar(s, field) for k, s in data["unit"]},
        hopf_left=hl, left=left, hopf_right=hr, right=right,
        grading=data["grading"], name=data["name"], notes=data.get("notes") or {},
    )
