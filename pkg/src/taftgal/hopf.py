"""Structure-constant Hopf algebras: Taft algebras T_q and T_{q^-1}, their
tensor product H, the character-deformed H_(chi1,chi2), tensor/cop
constructions, axiom verification, and morphism checking.

Basis conventions:
  * T_q: labels g^i x^a, index i*n + a, relations g^n=1, x^n=0, gx = q xg,
    Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x.
  * T_{q^-1}: labels g^i y^b; the defining relation g^-1 y = q^-1 y g^-1 is
    stored through the equivalent gy = q yg; Delta(y) = y(x)1 + g^-1(x)y.
  * H-type algebras: labels f(i,j) x^a y^b, index ((i*n+j)*n+a)*n+b,
    f(i,j) = (g^i, g^j) grouplike.
"""

from __future__ import annotations

import json

from .core import AlgebraData, Report, check_associativity, check_unit, mul2
from .field import Field, Scalar, make_field, parse_scalar, primitive_root
from .linalg import (
    Echelon,
    Vec,
    invert_matrix_rows,
    vec_add_into,
    vec_eq,
)


class HopfBuildError(ValueError):
    """Presentation data violates a precondition."""


class GrouplikeSet:
    """The designated group basis of a Hopf algebra: exponent tuples over
    fixed moduli, with the index of each group element in the basis."""

    def __init__(self, moduli: tuple, indices: list[int], exps: list[tuple]):
        self.moduli = tuple(moduli)
        self.indices = list(indices)
        self.exps = [tuple(e) for e in exps]
        self._by_exps = {e: i for e, i in zip(self.exps, self.indices)}

    def __len__(self):
        return len(self.indices)

    def index(self, exps) -> int:
        return self._by_exps[tuple(e % m for e, m in zip(exps, self.moduli))]

    def mul_exps(self, a, b) -> tuple:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def inv_exps(self, a) -> tuple:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def elements(self):
        return list(self.exps)

    def as_dict(self):
        return {"moduli": list(self.moduli), "indices": list(self.indices)}


class HopfAlgebraData(AlgebraData):
    """AlgebraData plus comult/counit/antipode tables and a designated
    grouplike set.

    comult[i] is a dict {(j, k): scalar}; counit a list of scalars;
    antipode a list of vectors."""

    def __init__(
        self,
        field: Field,
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        group: GrouplikeSet | None = None,
        **kw,
    ):
        super().__init__(field, labels, mult, unit, **kw)
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.group = group

    # -- coalgebra helpers -------------------------------------------------

    def comult_vec(self, v: Vec) -> dict:
        out: dict = {}
        for i, c in v.items():
            for jk, s in self.comult[i].items():
                cur = out.get(jk)
                new = c * s if cur is None else cur + c * s
                if new:
                    out[jk] = new
                elif cur is not None:
                    del out[jk]
        return out

    def counit_vec(self, v: Vec) -> Scalar:
        out = self.field.zero
        for i, c in v.items():
            e = self.counit[i]
            if e:
                out = out + c * e
        return out

    def antipode_vec(self, v: Vec) -> Vec:
        out: Vec = {}
        for i, c in v.items():
            for k, s in self.antipode[i].items():
                vec_add_into(out, k, c * s)
        return out

    def grouplike_vec(self, exps) -> Vec:
        return {self.group.index(exps): self.field.one}

    def equal_data(self, other: "HopfAlgebraData") -> bool:
        if (
            other.field != self.field
            or other.labels != self.labels
            or not vec_eq(other.unit, self.unit)
            or other.grading != self.grading
        ):
            return False
        for i in range(self.dim):
            rs, ro = self.mult[i], other.mult[i]
            keys = set(rs) | set(ro)
            for j in keys:
                a = {k: s for k, s in rs.get(j, ())}
                b = {k: s for k, s in ro.get(j, ())}
                if not vec_eq(a, b):
                    return False
            if not vec_eq(self.comult[i], other.comult[i]):
                return False
            if self.counit[i] != other.counit[i]:
                return False
            if not vec_eq(self.antipode[i], other.antipode[i]):
                return False
        return True


# ---------------------------------------------------------------------------
# antipode by triangular solve


def solve_antipode(H: HopfAlgebraData) -> list[Vec]:
    """Antipode from the other tables.

    Uses the convolution identity m(S(x)id)Delta = u eps: on grouplikes
    S(f) = f^-1; on a basis element e of positive degree, Delta(e) has a
    unique term e(x)f with f grouplike, which makes the identity triangular
    in the degree."""
    assert H.grading is not None, "triangular antipode solve needs a grading"
    assert H.group is not None, "triangular antipode solve needs grouplikes"
    dim = H.dim
    S: list[Vec | None] = [None] * dim
    gidx = set(H.group.indices)
    for idx, exps in zip(H.group.indices, H.group.exps):
        S[idx] = {H.group.index(H.group.inv_exps(exps)): H.field.one}
    order = sorted(range(dim), key=lambda i: H.grading[i])
    for e in order:
        if S[e] is not None:
            continue
        top = None
        for (j, k), s in H.comult[e].items():
            if j == e:
                assert top is None, f"non-unique top term in Delta of {H.labels[e]}"
                assert k in gidx, f"top companion of {H.labels[e]} not grouplike"
                top = (k, s)
        assert top is not None, f"no triangular term in Delta of {H.labels[e]}"
        f, c0 = top
        rest: Vec = {}
        for (j, k), s in H.comult[e].items():
            if j == e:
                continue
            assert S[j] is not None, "triangular order violated"
            for t, c in H.mul(S[j], {k: H.field.one}).items():
                vec_add_into(rest, t, s * c)
        f_exps = H.group.exps[H.group.indices.index(f)]
        f_inv = {H.group.index(H.group.inv_exps(f_exps)): H.field.one}
        minus = (-(c0.inverse()))
        S[e] = {t: minus * c for t, c in H.mul(rest, f_inv).items()}
    return S  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# builders


def _check_primitive(q: Scalar, n: int, field: Field):
    if q ** n != field.one:
        raise HopfBuildError(f"q^{n} != 1")
    for m in range(1, n):
        if q ** m == field.one:
            raise HopfBuildError(f"q has order {m} < {n}")


def _taft_common(n, field, q):
    if not isinstance(n, int) or n < 2:
        raise HopfBuildError(f"Taft algebra needs integer n >= 2, got {n!r}")
    if field is None:
        field = make_field(n)
    if q is None:
        q = primitive_root(field, n)
    _check_primitive(q, n, field)
    return field, q


def _taft_labels(n, letter):
    labels, exps, words, grading = [], [], [], []
    for i in range(n):
        for a in range(n):
            gpart = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            xpart = "" if a == 0 else (letter if a == 1 else f"{letter}^{a}")
            labels.append((gpart + xpart) or "1")
            exps.append((i, a))
            words.append(("g",) * i + (letter,) * a)
            grading.append(a)
    return labels, exps, words, grading


def _build_taft_like(n, field, q, letter, comult_gpow, name, notes):
    """Common construction for T_q (letter x, comult_gpow=+1: Delta(x) =
    x(x)1 + g(x)x) and T_{q^-1} (letter y, comult_gpow=-1: Delta(y) =
    y(x)1 + g^-1(x)y).  Both satisfy the same commutation gv = q vg in the
    chosen generator g."""
    field, q = _taft_common(n, field, q)
    labels, exps, words, grading = _taft_labels(n, letter)
    dim = n * n
    idx = lambda i, a: i * n + a

    def qpow(m):
        return q ** (m % n)

    mult = [dict() for _ in range(dim)]
    for i in range(n):
        for a in range(n):
            row = mult[idx(i, a)]
            for k in range(n):
                for c in range(n):
                    if a + c >= n:
                        continue
                    # v^a g^k = q^{-ka} g^k v^a
                    s = qpow(-k * a)
                    row[idx(k, c)] = (((idx((i + k) % n, a + c)), s),)
    unit = {idx(0, 0): field.one}
    gens = {"g": {idx(1, 0): field.one}, letter: {idx(0, 1): field.one}}
    alg = AlgebraData(field, labels, mult, unit, gens=gens, words=words)
    one = field.one
    # comult by multiplying generator coproducts in the tensor square
    dv = {(idx(0, 1), idx(0, 0)): one, (idx(comult_gpow % n, 0), idx(0, 1)): one}
    DV = [{(idx(0, 0), idx(0, 0)): one}]
    for _ in range(n - 1):
        DV.append(mul2(alg, alg, DV[-1], dv))
    comult = []
    for i in range(n):
        dg = {(idx(i, 0), idx(i, 0)): one}
        for a in range(n):
            comult.append(mul2(alg, alg, dg, DV[a]))
    counit = [field.one if e[1] == 0 else field.zero for e in exps]
    group = GrouplikeSet((n,), [idx(i, 0) for i in range(n)], [(i,) for i in range(n)])
    H = HopfAlgebraData(
        field,
        labels,
        mult,
        unit,
        comult,
        counit,
        [],
        group=group,
        gens=gens,
        words=words,
        exps=exps,
        grading=grading,
        name=name,
        notes=notes,
    )
    H.antipode = solve_antipode(H)
    return H


def build_taft(n: int, field: Field | None = None, q: Scalar | None = None):
    """The Taft algebra T_q of dimension n^2."""
    return _build_taft_like(n, field, q, "x", +1, f"T_q(n={n})", {})


def build_taft_qinv(n: int, field: Field | None = None, q: Scalar | None = None):
    """T_{q^-1}, presented on the generator g of T_q.

    The defining relation g^-1 y = q^-1 y g^-1 is equivalent to gy = q yg,
    which is how the structure constants are stored; the skew-primitive
    companion of y is g^-1: Delta(y) = y(x)1 + g^-1(x)y."""
    notes = {
        "generator_convention": "generator g with relations written via g; "
        "g^-1 y = q^-1 y g^-1 holds and is equivalent to g y = q y g"
    }
    return _build_taft_like(n, field, q, "y", -1, f"T_qinv(n={n})", notes)


def build_group_hopf(moduli: tuple, field: Field):
    """Group algebra of Z_{m1} x ... x Z_{mr} with Delta(g) = g(x)g."""
    exps = [()]
    for m in moduli:
        exps = [e + (i,) for e in exps for i in range(m)]
    dim = len(exps)
    by = {e: i for i, e in enumerate(exps)}
    one = field.one
    mult = [dict() for _ in range(dim)]
    for i, a in enumerate(exps):
        for j, b in enumerate(exps):
            c = tuple((x + y) % m for x, y, m in zip(a, b, moduli))
            mult[i][j] = ((by[c], one),)
    labels = ["e" + "".join(f"[{x}]" for x in e) if any(e) else "1" for e in exps]
    unit = {by[tuple(0 for _ in moduli)]: one}
    comult = [{(i, i): one} for i in range(dim)]
    counit = [one] * dim
    antipode = [{by[tuple((-x) % m for x, m in zip(e, moduli))]: one} for e in exps]
    group = GrouplikeSet(moduli, list(range(dim)), exps)
    gens = {}
    words = None
    return HopfAlgebraData(
        field,
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        group=group,
        gens=gens,
        words=words,
        exps=exps,
        grading=[0] * dim,
        name="k[" + "x".join(f"Z_{m}" for m in moduli) + "]",
    )


def build_H_chi(n, field=None, q=None, chi1=None, chi2=None, name=None):
    """The Hopf algebra on generators f(i,j), x, y with
        x^n = 0 = y^n,  x y = chi2(g,1) y x,
        f x = chi1(f) q^i x f,  f y = chi2(f) q^j y f   for f = (g^i, g^j),
    same generator coproducts as H = T_q (x) T_{q^-1}.  Trivial characters
    give H itself.

    chi1/chi2 are callables on exponent pairs returning scalars; they must
    satisfy chi1(1,g^-1) * chi2(g,1) = 1."""
    field, q = _taft_common(n, field, q)
    one = field.one
    if chi1 is None:
        chi1 = lambda e: one
    if chi2 is None:
        chi2 = lambda e: one
    c = chi1((0, n - 1)) * chi2((1, 0))
    if c != one:
        raise HopfBuildError(f"chi1(1,g^-1)*chi2(g,1) = {c} != 1")
    dim = n ** 4
    idx = lambda i, j, a, b: ((i * n + j) * n + a) * n + b
    labels, exps, words, grading = [], [], [], []
    for i in range(n):
        for j in range(n):
            for a in range(n):
                for b in range(n):
                    fpart = "" if (i, j) == (0, 0) else f"f({i},{j})"
                    xpart = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
                    ypart = "" if b == 0 else ("y" if b == 1 else f"y^{b}")
                    labels.append((fpart + xpart + ypart) or "1")
                    exps.append((i, j, a, b))
                    words.append(
                        ("g1",) * i + ("g2",) * j + ("x",) * a + ("y",) * b
                    )
                    grading.append(a + b)
    yx_swap = chi2((1, 0))  # xy = yx_swap * yx
    inv_yx = yx_swap.inverse()
    # cache the per-(f', a-or-b) move factors
    mult = [dict() for _ in range(dim)]
    chi1_cache = {}
    chi2_cache = {}
    for ii in range(n):
        for jj in range(n):
            chi1_cache[(ii, jj)] = chi1((ii, jj)).inverse() * q ** ((-ii) % n)
            chi2_cache[(ii, jj)] = chi2((ii, jj)).inverse() * q ** ((-jj) % n)
    for i in range(n):
        for j in range(n):
            for a in range(n):
                for b in range(n):
                    row = mult[idx(i, j, a, b)]
                    for ii in range(n):
                        for jj in range(n):
                            m1 = chi1_cache[(ii, jj)] ** a
                            m2 = chi2_cache[(ii, jj)] ** b
                            base = m1 * m2
                            for c2 in range(n - a):
                                s = base * inv_yx ** (b * c2)
                                for d in range(n - b):
                                    row[idx(ii, jj, c2, d)] = (
                                        (
                                            idx(
                                                (i + ii) % n,
                                                (j + jj) % n,
                                                a + c2,
                                                b + d,
                                            ),
                                            s,
                                        ),
                                    )
    unit = {idx(0, 0, 0, 0): one}
    gens = {
        "g1": {idx(1, 0, 0, 0): one},
        "g2": {idx(0, 1, 0, 0): one},
        "x": {idx(0, 0, 1, 0): one},
        "y": {idx(0, 0, 0, 1): one},
    }
    alg = AlgebraData(field, labels, mult, unit, gens=gens, words=words)
    dx = {(idx(0, 0, 1, 0), idx(0, 0, 0, 0)): one, (idx(1, 0, 0, 0), idx(0, 0, 1, 0)): one}
    dy = {
        (idx(0, 0, 0, 1), idx(0, 0, 0, 0)): one,
        (idx(0, n - 1, 0, 0), idx(0, 0, 0, 1)): one,
    }
    DX = [{(idx(0, 0, 0, 0), idx(0, 0, 0, 0)): one}]
    for _ in range(n - 1):
        DX.append(mul2(alg, alg, DX[-1], dx))
    DY = [DX[0]]
    for _ in range(n - 1):
        DY.append(mul2(alg, alg, DY[-1], dy))
    comult = [None] * dim
    for i in range(n):
        for j in range(n):
            f = idx(i, j, 0, 0)
            df = {(f, f): one}
            for a in range(n):
                dfa = mul2(alg, alg, df, DX[a])
                for b in range(n):
                    comult[idx(i, j, a, b)] = mul2(alg, alg, dfa, DY[b])
    counit = [one if e[2] == 0 and e[3] == 0 else field.zero for e in exps]
    gexps = [(i, j) for i in range(n) for j in range(n)]
    group = GrouplikeSet((n, n), [idx(i, j, 0, 0) for i, j in gexps], gexps)
    H = HopfAlgebraData(
        field,
        labels,
        mult,
        unit,
        comult,
        counit,
        [],
        group=group,
        gens=gens,
        words=words,
        exps=exps,
        grading=grading,
        name=name or f"H_chi(n={n})",
    )
    H.antipode = solve_antipode(H)
    return H


def build_H(n, field=None, q=None):
    """H = T_q (x) T_{q^-1} in closed form (trivial characters)."""
    return build_H_chi(n, field, q, None, None, name=f"H(n={n})")


def tensor_hopf(A: HopfAlgebraData, B: HopfAlgebraData, name=None):
    """Tensor product Hopf algebra with the middle-flip coproduct."""
    assert A.field == B.field
    field = A.field
    dA, dB = A.dim, B.dim
    dim = dA * dB
    ix = lambda i, j: i * dB + j

    labels = [f"{A.labels[i]}|{B.labels[j]}" for i in range(dA) for j in range(dB)]
    mult = [dict() for _ in range(dim)]
    for i in range(dA):
        rowA = A.mult[i]
        for j in range(dB):
            rowB = B.mult[j]
            row = mult[ix(i, j)]
            for k, entsA in rowA.items():
                for l, entsB in rowB.items():
                    out = []
                    for a, sa in entsA:
                        for b, sb in entsB:
                            out.append((ix(a, b), sa * sb))
                    row[ix(k, l)] = tuple(out)
    unit = {}
    for i, ci in A.unit.items():
        for j, cj in B.unit.items():
            unit[ix(i, j)] = ci * cj
    comult = []
    for i in range(dA):
        for j in range(dB):
            t = {}
            for (p, qq), s in A.comult[i].items():
                for (r, u), v in B.comult[j].items():
                    t[(ix(p, r), ix(qq, u))] = s * v
            comult.append(t)
    counit = [A.counit[i] * B.counit[j] for i in range(dA) for j in range(dB)]
    antipode = []
    for i in range(dA):
        for j in range(dB):
            v: Vec = {}
            for k, sk in A.antipode[i].items():
                for l, sl in B.antipode[j].items():
                    v[ix(k, l)] = sk * sl
            antipode.append(v)
    grading = None
    if A.grading is not None and B.grading is not None:
        grading = [A.grading[i] + B.grading[j] for i in range(dA) for j in range(dB)]
    group = None
    if A.group is not None and B.group is not None:
        moduli = A.group.moduli + B.group.moduli
        indices, exps = [], []
        for i, ea in zip(A.group.indices, A.group.exps):
            for j, eb in zip(B.group.indices, B.group.exps):
                indices.append(ix(i, j))
                exps.append(ea + eb)
        group = GrouplikeSet(moduli, indices, exps)
    gens = {}
    for gname, gv in A.gens.items():
        gens[f"a.{gname}"] = {
            ix(i, j): c * cj for i, c in gv.items() for j, cj in B.unit.items()
        }
    for gname, gv in B.gens.items():
        gens[f"b.{gname}"] = {
            ix(i, j): ci * c for i, ci in A.unit.items() for j, c in gv.items()
        }
    words = None
    if A.words is not None and B.words is not None:
        words = []
        for i in range(dA):
            wa = tuple(f"a.{w}" for w in A.words[i])
            for j in range(dB):
                words.append(wa + tuple(f"b.{w}" for w in B.words[j]))
    exps_out = None
    if A.exps is not None and B.exps is not None:
        exps_out = [A.exps[i] + B.exps[j] for i in range(dA) for j in range(dB)]
    return HopfAlgebraData(
        field,
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        group=group,
        gens=gens,
        words=words,
        exps=exps_out,
        grading=grading,
        name=name or f"{A.name}(x){B.name}",
    )


def cop(H: HopfAlgebraData) -> HopfAlgebraData:
    """Same algebra, reversed coproduct, antipode inverted."""
    comult = [{(k, j): s for (j, k), s in H.comult[i].items()} for i in range(H.dim)]
    try:
        antipode = invert_matrix_rows(H.antipode, H.dim, H.field)
    except ValueError as e:
        raise HopfBuildError(f"antipode not invertible: {e}") from e
    return HopfAlgebraData(
        H.field,
        H.labels,
        H.mult,
        H.unit,
        comult,
        H.counit,
        antipode,
        group=H.group,
        gens=H.gens,
        words=H.words,
        exps=H.exps,
        grading=H.grading,
        name=H.name + "^cop",
        notes=H.notes,
    )


def grouplikes(H: HopfAlgebraData) -> GrouplikeSet:
    """The designated group basis, after verifying it really consists of
    grouplikes forming a group under the stored exponent arithmetic."""
    g = H.group
    if g is None:
        raise HopfBuildError("no designated grouplike set")
    one = H.field.one
    for idx, exps in zip(g.indices, g.exps):
        if not vec_eq(H.comult[idx], {(idx, idx): one}):
            raise HopfBuildError(f"{H.labels[idx]} is not grouplike")
        if H.counit[idx] != one:
            raise HopfBuildError(f"counit of {H.labels[idx]} is not 1")
    for ia, ea in zip(g.indices, g.exps):
        for ib, eb in zip(g.indices, g.exps):
            prod = H.mul({ia: one}, {ib: one})
            if not vec_eq(prod, {g.index(g.mul_exps(ea, eb)): one}):
                raise HopfBuildError("grouplike products do not follow exponents")
    return g


# ---------------------------------------------------------------------------
# axiom verification


def verify_hopf(H: HopfAlgebraData, exhaustive_limit: int = 128) -> Report:
    """Full Hopf-axiom suite; every failure is a report entry."""
    rep = Report(f"verify_hopf({H.name or 'anonymous'})")
    field = H.field
    one = field.one
    dim = H.dim
    check_unit(H, rep)
    check_associativity(H, rep, exhaustive_limit)

    # coassociativity and counit, per basis element
    ok = True
    for i in range(dim):
        t = H.comult[i]
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), s in t.items():
            for (a, b), c in H.comult[j].items():
                key = (a, b, k)
                lhs[key] = lhs.get(key, field.zero) + s * c
            for (b, c2), c in H.comult[k].items():
                key = (j, b, c2)
                rhs[key] = rhs.get(key, field.zero) + s * c
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            ok = rep.add("coassociativity", False, f"fails on {H.labels[i]}")
            break
    if ok:
        rep.add("coassociativity", True)

    ok = True
    for i in range(dim):
        l: Vec = {}
        r: Vec = {}
        for (j, k), s in H.comult[i].items():
            if H.counit[j]:
                vec_add_into(l, k, s * H.counit[j])
            if H.counit[k]:
                vec_add_into(r, j, s * H.counit[k])
        if not vec_eq(l, {i: one}) or not vec_eq(r, {i: one}):
            ok = rep.add("counit", False, f"fails on {H.labels[i]}")
            break
    if ok:
        rep.add("counit", True)

    # Delta multiplicative
    du = H.comult_vec(H.unit)
    uu = {}
    for i, ci in H.unit.items():
        for j, cj in H.unit.items():
            uu[(i, j)] = ci * cj
    rep.add("comult-unital", vec_eq(du, uu))
    if dim <= exhaustive_limit or not H.gens:
        ok = True
        for i in range(dim):
            di = H.comult[i]
            for j in range(dim):
                prod: dict = {}
                for k, s in H.mul_basis(i, j):
                    for jk, c in H.comult[k].items():
                        cur = prod.get(jk)
                        new = s * c if cur is None else cur + s * c
                        if new:
                            prod[jk] = new
                        elif cur is not None:
                            del prod[jk]
                if not vec_eq(prod, mul2(H, H, di, H.comult[j])):
                    ok = rep.add(
                        "comult-algebra-map",
                        False,
                        f"Delta({H.labels[i]}*{H.labels[j]}) mismatch",
                    )
                    break
            if not ok:
                break
        if ok:
            rep.add("comult-algebra-map", True, f"exhaustive on {dim}^2 pairs")
    else:
        reach_ok, reached = H.reachability()
        rep.add(
            "comult-reachability",
            reach_ok,
            f"generators reach {reached}/{dim}",
        )
        if not reach_ok:
            return verify_hopf(H, exhaustive_limit=dim)
        ok = True
        for gname, gv in H.gens.items():
            dg = H.comult_vec(gv)
            for j in range(dim):
                lhs = H.comult_vec(H.mul(gv, {j: one}))
                if not vec_eq(lhs, mul2(H, H, dg, H.comult[j])):
                    ok = rep.add(
                        "comult-algebra-map",
                        False,
                        f"Delta({gname}*{H.labels[j]}) mismatch",
                    )
                    break
            if not ok:
                break
        if ok:
            rep.add(
                "comult-algebra-map", True, f"generator-reduced, {len(H.gens)}x{dim}"
            )

    # eps multiplicative (always exhaustive; cheap)
    ok = True
    for i in range(dim):
        ei = H.counit[i]
        for j in range(dim):
            lhs = field.zero
            for k, s in H.mul_basis(i, j):
                if H.counit[k]:
                    lhs = lhs + s * H.counit[k]
            if lhs != ei * H.counit[j]:
                ok = rep.add(
                    "counit-algebra-map", False, f"eps({H.labels[i]}*{H.labels[j]})"
                )
                break
        if not ok:
            break
    if ok:
        rep.add("counit-algebra-map", True, f"exhaustive on {dim}^2 pairs")
    rep.add("counit-unital", H.counit_vec(H.unit) == one)

    # antipode identities
    for side in ("left", "right"):
        ok = True
        for i in range(dim):
            acc: Vec = {}
            for (j, k), s in H.comult[i].items():
                if side == "left":
                    term = H.mul(H.antipode[j], {k: one})
                else:
                    term = H.mul({j: one}, H.antipode[k])
                for t, c in term.items():
                    vec_add_into(acc, t, s * c)
            target = {}
            if H.counit[i]:
                target = {t: H.counit[i] * c for t, c in H.unit.items()}
            if not vec_eq(acc, target):
                ok = rep.add(f"antipode-{side}", False, f"fails on {H.labels[i]}")
                break
        if ok:
            rep.add(f"antipode-{side}", True)

    if H.grading is not None:
        deg = H.grading
        ok = True
        for i in range(dim):
            for j, ents in H.mult[i].items():
                for k, s in ents:
                    if s and deg[k] != deg[i] + deg[j]:
                        ok = rep.add(
                            "grading-mult", False, f"{H.labels[i]}*{H.labels[j]}"
                        )
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            rep.add("grading-mult", True)
        ok = True
        for i in range(dim):
            for (j, k), s in H.comult[i].items():
                if s and deg[j] + deg[k] != deg[i]:
                    ok = rep.add("grading-comult", False, H.labels[i])
                    break
            if not ok:
                break
        if ok:
            rep.add("grading-comult", True)

    if H.group is not None:
        try:
            grouplikes(H)
            rep.add("grouplike-designation", True, f"{len(H.group)} grouplikes")
        except HopfBuildError as e:
            rep.add("grouplike-designation", False, str(e))
    return rep


# ---------------------------------------------------------------------------
# morphisms


def hopf_morphism_check(
    src: HopfAlgebraData,
    dst: HopfAlgebraData,
    images: dict[str, Vec],
    require_bijective: bool = True,
) -> Report:
    """Extend generator images along src's words and verify the result is
    a Hopf algebra morphism (multiplicative on all basis pairs -- this is
    exactly well-definedness - unital, a coalgebra map, compatible with
    the antipodes, and optionally bijective).

    The per-basis image matrix is attached as report.matrix."""
    rep = Report(f"morphism {src.name} -> {dst.name}")
    rows = src.extend_images(dst.mul, dst.unit, images)
    rep.matrix = rows

    ok = True
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = dst.mul(rows[i], rows[j])
            rhs: Vec = {}
            for k, s in src.mul_basis(i, j):
                for t, c in rows[k].items():
                    vec_add_into(rhs, t, s * c)
            if not vec_eq(lhs, rhs):
                ok = rep.add(
                    "algebra-map",
                    False,
                    f"on {src.labels[i]} * {src.labels[j]}",
                )
                break
        if not ok:
            break
    if ok:
        rep.add("algebra-map", True, f"all {src.dim}^2 pairs")

    img_unit: Vec = {}
    for i, c in src.unit.items():
        for t, s in rows[i].items():
            vec_add_into(img_unit, t, c * s)
    rep.add("unital", vec_eq(img_unit, dst.unit))

    ok = True
    for i in range(src.dim):
        lhs: dict = {}
        for (j, k), s in src.comult[i].items():
            for a, ca in rows[j].items():
                for b, cb in rows[k].items():
                    key = (a, b)
                    cur = lhs.get(key)
                    new = s * ca * cb if cur is None else cur + s * ca * cb
                    if new:
                        lhs[key] = new
                    elif cur is not None:
                        del lhs[key]
        if not vec_eq(lhs, dst.comult_vec(rows[i])):
            ok = rep.add("coalgebra-map", False, f"Delta on {src.labels[i]}")
            break
    if ok:
        rep.add("coalgebra-map", True)

    ok = all(dst.counit_vec(rows[i]) == src.counit[i] for i in range(src.dim))
    rep.add("counit-compat", ok)

    ok = True
    for i in range(src.dim):
        lhs: Vec = {}
        for k, c in src.antipode[i].items():
            for t, s in rows[k].items():
                vec_add_into(lhs, t, c * s)
        if not vec_eq(lhs, dst.antipode_vec(rows[i])):
            ok = rep.add("antipode-compat", False, f"S on {src.labels[i]}")
            break
    if ok:
        rep.add("antipode-compat", True)

    if require_bijective:
        ech = Echelon()
        for r in rows:
            ech.insert(r)
        rep.add(
            "bijective",
            ech.dim == src.dim == dst.dim,
            f"rank {ech.dim}, dims {src.dim}/{dst.dim}",
        )
    return rep


def taft_flip_images(Tqinv: HopfAlgebraData, Tq: HopfAlgebraData) -> dict[str, Vec]:
    """Generator images of the isomorphism T_{q^-1} -> T_q^cop:
    g |-> g, y |-> x g^-1 (= x g^{n-1}).  Products in T_q^cop coincide
    with products in T_q, so the images are computed there."""
    n = Tq.group.moduli[0]
    g_inv = Tq.grouplike_vec((n - 1,))
    x = Tq.gens["x"]
    return {"g": Tq.grouplike_vec((1,)), "y": Tq.mul(x, g_inv)}


def taft_flip_inverse_images(Tq: HopfAlgebraData, Tqinv: HopfAlgebraData):
    """Images of the inverse T_q^cop -> T_{q^-1}: g |-> g, x |-> y g."""
    y = Tqinv.gens["y"]
    g = Tqinv.grouplike_vec((1,))
    return {"g": g, "x": Tqinv.mul(y, g)}


def mutate_mult(H: HopfAlgebraData, i: int, j: int, k: int, delta=1) -> HopfAlgebraData:
    """Copy of H with the structure constant of e_k in e_i*e_j shifted by
    delta (used to demonstrate that verify_hopf catches corruption)."""
    field = H.field
    d = field.from_rational(delta) if not isinstance(delta, Scalar) else delta
    mult = [dict(row) for row in H.mult]
    row = {t: s for t, s in mult[i].get(j, ())}
    row[k] = row.get(k, field.zero) + d
    mult[i][j] = tuple((t, s) for t, s in row.items() if s)
    out = HopfAlgebraData(
        field,
        H.labels,
        mult,
        H.unit,
        H.comult,
        H.counit,
        H.antipode,
        group=H.group,
        gens=H.gens,
        words=H.words,
        exps=H.exps,
        grading=H.grading,
        name=H.name + f"+mut({i},{j},{k})",
    )
    return out


# ---------------------------------------------------------------------------
# serialization


def _vec_to_json(v: Vec):
    return [[k, str(s)] for k, s in sorted(v.items())]


def _vec_from_json(data, field) -> Vec:
    return {int(k): parse_scalar(s, field) for k, s in data}


def hopf_to_json(H: HopfAlgebraData) -> str:
    mult = []
    for i in range(H.dim):
        for j, ents in sorted(H.mult[i].items()):
            mult.append([i, j, [[k, str(s)] for k, s in ents]])
    data = {
        "format": "taftgal-hopf-v1",
        "name": H.name,
        "field_N": H.field.N,
        "dim": H.dim,
        "labels": H.labels,
        "exps": [list(e) for e in H.exps] if H.exps is not None else None,
        "grading": H.grading,
        "unit": _vec_to_json(H.unit),
        "mult": mult,
        "comult": [
            [[j, k, str(s)] for (j, k), s in sorted(H.comult[i].items())]
            for i in range(H.dim)
        ],
        "counit": [str(s) for s in H.counit],
        "antipode": [_vec_to_json(v) for v in H.antipode],
        "group": H.group.as_dict() if H.group is not None else None,
        "gens": {name: _vec_to_json(v) for name, v in H.gens.items()},
        "words": [list(w) for w in H.words] if H.words is not None else None,
        "notes": H.notes,
    }
    return json.dumps(data, indent=1, sort_keys=True)


def hopf_from_json(text: str) -> HopfAlgebraData:
    data = json.loads(text)
    assert data.get("format") == "taftgal-hopf-v1", "unknown serialization format"
    field = make_field(data["field_N"])
    dim = data["dim"]
    mult = [dict() for _ in range(dim)]
    for i, j, ents in data["mult"]:
        mult[i][j] = tuple((int(k), parse_scalar(s, field)) for k, s in ents)
    comult = [
        {(int(j), int(k)): parse_scalar(s, field) for j, k, s in row}
        for row in data["comult"]
    ]
    counit = [parse_scalar(s, field) for s in data["counit"]]
    antipode = [_vec_from_json(v, field) for v in data["antipode"]]
    group = None
    if data["group"] is not None:
        exps = data["exps"]
        gexps = []
        moduli = data["group"]["moduli"]
        for idx in data["group"]["indices"]:
            e = exps[idx]
            gexps.append(tuple(e[: len(moduli)]))
        group = GrouplikeSet(tuple(moduli), data["group"]["indices"], gexps)
    return HopfAlgebraData(
        field,
        data["labels"],
        mult,
        _vec_from_json(data["unit"], field),
        comult,
        counit,
        antipode,
        group=group,
        gens={n: _vec_from_json(v, field) for n, v in data["gens"].items()},
        words=[tuple(w) for w in data["words"]] if data["words"] is not None else None,
        exps=[tuple(e) for e in data["exps"]] if data["exps"] is not None else None,
        grading=data["grading"],
        name=data["name"],
        notes=data.get("notes") or {},
    )
