"""Shared machinery: structure-constant algebras, sparse products,
generator-word extension of linear maps, and check reports.

Conventions used throughout the package:
  * a vector is a dict {basis_index: Scalar}, zero values never stored;
  * mult is a list over left index i of dicts {j: ((k, scalar), ...)}
    giving e_i * e_j = sum scalar * e_k, rows with no nonzero products
    simply absent;
  * tensor-square elements are dicts {(i, j): Scalar}.
"""

from __future__ import annotations

from .field import Field, Scalar
from .linalg import Vec, vec_add_into, vec_eq


class Report:
    """Named check results; `passed` iff every check passed."""

    def __init__(self, title: str = ""):
        self.title = title
        self.checks: list[tuple[str, bool, str]] = []

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, bool(ok), detail))
        return ok

    def merge(self, other: "Report", prefix: str = ""):
        for name, ok, detail in other.checks:
            self.checks.append((prefix + name, ok, detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(n, d) for n, ok, d in self.checks if not ok]

    def as_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [
                {"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks
            ],
        }

    def __repr__(self):
        state = "ok" if self.passed else f"FAILED {self.failures()[:3]}"
        return f"Report({self.title!r}: {len(self.checks)} checks, {state})"


class AlgebraData:
    """A finite-dimensional associative unital algebra given by structure
    constants, with designated generators and a word expressing every
    basis element as a product of generators (used to extend maps)."""

    def __init__(
        self,
        field: Field,
        labels: list[str],
        mult,
        unit: Vec,
        gens: dict[str, Vec] | None = None,
        words: list[tuple[str, ...]] | None = None,
        exps: list[tuple] | None = None,
        grading: list[int] | None = None,
        name: str = "",
        notes: dict | None = None,
    ):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = mult
        self.unit = dict(unit)
        self.gens = dict(gens) if gens else {}
        self.words = list(words) if words is not None else None
        self.exps = list(exps) if exps is not None else None
        self.grading = list(grading) if grading is not None else None
        self.name = name
        self.notes = dict(notes) if notes else {}

    # -- products ----------------------------------------------------------

    def mul_basis(self, i: int, j: int):
        row = self.mult[i]
        return row.get(j, ()) if row else ()

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        mult = self.mult
        for i, cu in u.items():
            row = mult[i]
            if not row:
                continue
            for j, cv in v.items():
                ents = row.get(j)
                if ents:
                    c = cu * cv
                    for k, s in ents:
                        vec_add_into(out, k, c * s)
        return out

    def basis_vec(self, i: int) -> Vec:
        return {i: self.field.one}

    def mul_many(self, vecs) -> Vec:
        out = dict(self.unit)
        for v in vecs:
            out = self.mul(out, v)
        return out

    def pow_vec(self, v: Vec, k: int) -> Vec:
        out = dict(self.unit)
        for _ in range(k):
            out = self.mul(out, v)
        return out

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    # -- generator words ---------------------------------------------------

    def extend_images(self, target_mul, target_unit: Vec, images: dict) -> list[Vec]:
        """Per-basis images of the algebra map sending each generator name
        to images[name], extended along self.words."""
        assert self.words is not None, "algebra has no generator words"
        out = []
        for word in self.words:
            v = dict(target_unit)
            for gname in word:
                v = target_mul(v, images[gname])
            out.append(v)
        return out

    def reachability(self):
        """Right-multiplication closure of the unit under the generators.

        Returns (ok, reached_dim): ok means the closure spans everything,
        which lets axiom checks range over generators instead of all basis
        elements in the first slot."""
        from .linalg import Echelon

        ech = Echelon()
        queue = [dict(self.unit)]
        ech.insert(self.unit)
        gens = list(self.gens.values())
        while queue and ech.dim < self.dim:
            v = queue.pop()
            for g in gens:
                w = self.mul(v, g)
                if w and ech.insert(w) is not None:
                    queue.append(w)
        return ech.dim == self.dim, ech.dim


def mul2(A: AlgebraData, B: AlgebraData, t1: dict, t2: dict) -> dict:
    """Product in A (x) B of tensor-square elements {(i,j): scalar}."""
    out: dict = {}
    for (i, j), c1 in t1.items():
        rowA = A.mult[i]
        rowB = B.mult[j]
        if not rowA or not rowB:
            continue
        for (k, l), c2 in t2.items():
            entsA = rowA.get(k)
            if not entsA:
                continue
            entsB = rowB.get(l)
            if not entsB:
                continue
            c = c1 * c2
            for a, sa in entsA:
                for b, sb in entsB:
                    key = (a, b)
                    cur = out.get(key)
                    new = c * sa * sb if cur is None else cur + c * sa * sb
                    if new:
                        out[key] = new
                    elif cur is not None:
                        del out[key]
    return out


def tensor2_eq(t1: dict, t2: dict) -> bool:
    return vec_eq(t1, t2)


def vec_to_str(A: AlgebraData, v: Vec) -> str:
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        parts.append(f"({v[k]})*{A.labels[k]}")
    return " + ".join(parts)


def check_associativity(A: AlgebraData, report: Report, exhaustive_limit: int = 128):
    """Associativity; exhaustive on triples for small dims, otherwise on
    (generator, basis, basis) triples backed by a reachability certificate."""
    dim = A.dim
    one = A.field.one
    if dim <= exhaustive_limit or not A.gens:
        for i in range(dim):
            ei = {i: one}
            rows_i = [A.mul(ei, {j: one}) for j in range(dim)]
            for j in range(dim):
                vij = rows_i[j]
                for k in range(dim):
                    lhs = A.mul(vij, {k: one})
                    rhs_row = A.mul_basis(j, k)
                    rhs: Vec = {}
                    for m, s in rhs_row:
                        for t, c in rows_i[m].items():
                            vec_add_into(rhs, t, s * c)
                    if not vec_eq(lhs, rhs):
                        return report.add(
                            "associativity",
                            False,
                            f"(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})",
                        )
        return report.add("associativity", True, f"exhaustive on {dim}^3 triples")
    ok, reached = A.reachability()
    if not ok:
        report.add(
            "associativity-reachability",
            False,
            f"generators reach only {reached}/{dim}; falling back",
        )
        return check_associativity(A, report, exhaustive_limit=dim)
    report.add("associativity-reachability", True, f"unit*generators span all {dim}")
    for gname, g in A.gens.items():
        rows_g = [A.mul(g, {j: one}) for j in range(dim)]
        for j in range(dim):
            vj = rows_g[j]
            for k in range(dim):
                lhs = A.mul(vj, {k: one})
                rhs: Vec = {}
                for m, s in A.mul_basis(j, k):
                    for t, c in rows_g[m].items():
                        vec_add_into(rhs, t, s * c)
                if not vec_eq(lhs, rhs):
                    return report.add(
                        "associativity",
                        False,
                        f"({gname}*e{j})*e{k} != {gname}*(e{j}*e{k})",
                    )
    return report.add(
        "associativity", True, f"generator-reduced on {len(A.gens)}x{dim}^2 triples"
    )


def check_unit(A: AlgebraData, report: Report):
    one = A.field.one
    for i in range(A.dim):
        e = {i: one}
        if not vec_eq(A.mul(A.unit, e), e) or not vec_eq(A.mul(e, A.unit), e):
            return report.add("unit", False, f"unit fails on basis {i}")
    return report.add("unit", True)
