"""Sparse exact linear algebra over a cyclotomic field, plus mod-p
companions (numpy) used to certify large rank computations.

Vectors are dicts {index: Scalar} with no zero values stored.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .field import Field, Scalar

Vec = dict  # {int: Scalar}


# ---------------------------------------------------------------------------
# sparse vector helpers


def vec_add_into(acc: Vec, idx: int, s: Scalar):
    cur = acc.get(idx)
    if cur is None:
        if s:
            acc[idx] = s
    else:
        new = cur + s
        if new:
            acc[idx] = new
        else:
            del acc[idx]


def vec_scale(v: Vec, s: Scalar) -> Vec:
    if not s:
        return {}
    return {k: s * c for k, c in v.items()}


def vec_axpy(acc: Vec, s: Scalar, v: Vec):
    """acc += s * v in place."""
    if not s:
        return
    for k, c in v.items():
        vec_add_into(acc, k, s * c)


def vec_sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, c in b.items():
        vec_add_into(out, k, -c)
    return out


def vec_eq(a: Vec, b: Vec) -> bool:
    if len(a) != len(b):
        return False
    for k, c in a.items():
        d = b.get(k)
        if d is None or d != c:
            return False
    return True


# ---------------------------------------------------------------------------
# forward-eliminated span (pivot-normalized rows, keyed by pivot index)


class Echelon:
    """Growing span of sparse vectors; supports reduction and membership."""

    def __init__(self):
        self.rows: dict[int, Vec] = {}
        self._pivots_sorted: list[int] | None = None

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _pivots(self):
        if self._pivots_sorted is None:
            self._pivots_sorted = sorted(self.rows)
        return self._pivots_sorted

    def reduce(self, v: Vec) -> Vec:
        """Residue of v modulo the current span (v is not modified)."""
        out = dict(v)
        for p in self._pivots():
            c = out.get(p)
            if c is not None:
                row = self.rows[p]
                del out[p]
                for k, rc in row.items():
                    if k != p:
                        vec_add_into(out, k, -(c * rc))
        return out

    def insert(self, v: Vec):
        """Add v to the span; returns the new pivot index or None."""
        r = self.reduce(v)
        if not r:
            return None
        p = min(r)
        inv = r[p].inverse()
        self.rows[p] = {k: c * inv for k, c in r.items()}
        self._pivots_sorted = None
        return p

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Vec):
        """Express v in terms of the inserted rows: returns {pivot: coeff}
        with v == sum coeff * rows[pivot], or None if v is outside."""
        out = dict(v)
        coords = {}
        for p in self._pivots():
            c = out.get(p)
            if c is not None:
                coords[p] = c
                row = self.rows[p]
                for k, rc in row.items():
                    vec_add_into(out, k, -(c * rc))
        if out:
            return None
        return coords


class Subspace:
    """Canonical reduced row echelon form; equality of subspaces is
    equality of the row lists."""

    def __init__(self, ambient_dim: int, vectors, field: Field):
        self.ambient_dim = ambient_dim
        self.field = field
        ech = Echelon()
        for v in vectors:
            ech.insert(v)
        # back-substitute to full RREF
        pivots = sorted(ech.rows)
        rows = {p: dict(ech.rows[p]) for p in pivots}
        for i in range(len(pivots) - 1, -1, -1):
            p = pivots[i]
            for pp in pivots[:i]:
                row = rows[pp]
                c = row.get(p)
                if c is not None:
                    del row[p]
                    for k, rc in rows[p].items():
                        if k != p:
                            vec_add_into(row, k, -(c * rc))
        self.pivots = tuple(pivots)
        self.rows = tuple(rows[p] for p in pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Vec) -> bool:
        out = dict(v)
        for p, row in zip(self.pivots, self.rows):
            c = out.get(p)
            if c is not None:
                for k, rc in row.items():
                    vec_add_into(out, k, -(c * rc))
        return not out

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.ambient_dim == self.ambient_dim
            and other.pivots == self.pivots
            and all(vec_eq(a, b) for a, b in zip(other.rows, self.rows))
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def rank_of(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.insert(v)
    return e.dim


def kernel_from_images(images: list, field: Field) -> list:
    """Kernel of the linear map e_i -> images[i].

    Returns combo vectors {i: coeff} spanning {v : sum v_i*images[i] = 0}.
    Implemented by echelonizing (image | unit) augmented rows; rows whose
    image part dies give kernel combinations."""
    n = len(images)
    ech = Echelon()  # over the image coordinates only
    companions: dict[int, Vec] = {}  # pivot -> combo achieving that row
    out = []
    for i, img in enumerate(images):
        v = dict(img)
        combo = {i: field.one}
        # manual reduction tracking the combination
        for p in sorted(ech.rows):
            c = v.get(p)
            if c is not None:
                row = ech.rows[p]
                del v[p]
                for k, rc in row.items():
                    if k != p:
                        vec_add_into(v, k, -(c * rc))
                for k, rc in companions[p].items():
                    vec_add_into(combo, k, -(c * rc))
        if not v:
            out.append(combo)
        else:
            p = min(v)
            inv = v[p].inverse()
            ech.rows[p] = {k: c * inv for k, c in v.items()}
            ech._pivots_sorted = None
            companions[p] = {k: c * inv for k, c in combo.items()}
    return out


def invert_matrix_rows(rows: list, dim: int, field: Field) -> list:
    """Inverse of the linear map e_i -> rows[i]; raises if singular.

    Returns inv_rows with inv_rows[i] = preimage of e_i."""
    ech = Echelon()
    companions: dict[int, Vec] = {}
    for i, img in enumerate(rows):
        v = dict(img)
        combo = {i: field.one}
        for p in sorted(ech.rows):
            c = v.get(p)
            if c is not None:
                row = ech.rows[p]
                del v[p]
                for k, rc in row.items():
                    if k != p:
                        vec_add_into(v, k, -(c * rc))
                for k, rc in companions[p].items():
                    vec_add_into(combo, k, -(c * rc))
        if not v:
            raise ValueError("matrix is singular")
        p = min(v)
        inv = v[p].inverse()
        ech.rows[p] = {k: c * inv for k, c in v.items()}
        ech._pivots_sorted = None
        companions[p] = {k: c * inv for k, c in combo.items()}
    # ech rows now span the image with tracked preimages; back-substitute to
    # express each unit vector
    pivots = sorted(ech.rows)
    red = {p: dict(ech.rows[p]) for p in pivots}
    pre = {p: dict(companions[p]) for p in pivots}
    for i in range(len(pivots) - 1, -1, -1):
        p = pivots[i]
        for pp in pivots[:i]:
            c = red[pp].get(p)
            if c is not None:
                del red[pp][p]
                for k, rc in red[p].items():
                    if k != p:
                        vec_add_into(red[pp], k, -(c * rc))
                for k, rc in pre[p].items():
                    vec_add_into(pre[pp], k, -(c * rc))
    out = []
    for i in range(dim):
        if i not in pre or set(red[i]) != {i}:
            raise ValueError("matrix is singular")
        out.append(pre[i])
    return out


# ---------------------------------------------------------------------------
# mod-p machinery


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if m % d == 0:
            return m == d
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def find_primes(N: int, count: int = 3, start: int = 1 << 20) -> list[int]:
    """Primes p = 1 (mod N) just above `start`, small enough that int64
    accumulation of ~2^13 products of residues cannot overflow."""
    out = []
    p = start + (N - start % N) + 1
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p += N
    return out


class BadPrime(ArithmeticError):
    """Denominator hit the modulus; caller should retry with another prime."""


class ScalarModP:
    """Reduction Q(zeta_N) -> F_p via zeta |-> element of exact order N."""

    def __init__(self, field: Field, p: int):
        assert (p - 1) % field.N == 0, (p, field.N)
        self.field = field
        self.p = p
        self.omega = self._find_omega()
        d = field.degree
        pows = [1] * d
        for i in range(1, d):
            pows[i] = pows[i - 1] * self.omega % p
        self._pows = pows
        self._cache: dict[Scalar, int] = {}

    def _find_omega(self) -> int:
        p, N = self.p, self.field.N
        for r in range(2, 200):
            w = pow(r, (p - 1) // N, p)
            if w == 1 and N > 1:
                continue
            # verify exact order N
            ok = True
            for q in {f for f in _prime_factors(N)}:
                if pow(w, N // q, p) == 1:
                    ok = False
                    break
            if ok:
                return w
        raise RuntimeError("no generator found (should be unreachable)")

    def __call__(self, s: Scalar) -> int:
        hit = self._cache.get(s)
        if hit is not None:
            return hit
        p = self.p
        acc = 0
        for c, w in zip(s.coeffs, self._pows):
            if c:
                den = c.denominator % p
                if den == 0:
                    raise BadPrime(c)
                acc += c.numerator % p * pow(den, p - 2, p) % p * w
        out = acc % p
        self._cache[s] = out
        return out

    def vec(self, v: Vec, length: int) -> np.ndarray:
        out = np.zeros(length, dtype=np.int64)
        for k, s in v.items():
            out[k] = self(s)
        return out


def _prime_factors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


class ModSpan:
    """RREF-maintained span of int64 rows modulo p (vectorized)."""

    def __init__(self, length: int, p: int, capacity: int | None = None):
        self.length = length
        self.p = p
        self.rows = np.zeros((capacity or length, length), dtype=np.int64)
        self.pivcols = np.zeros(capacity or length, dtype=np.int64)
        self.count = 0

    @property
    def dim(self) -> int:
        return self.count

    def residue(self, v: np.ndarray) -> np.ndarray:
        if self.count == 0:
            return v % self.p
        R = self.rows[: self.count]
        piv = self.pivcols[: self.count]
        v = v % self.p
        coef = v[piv]
        if coef.any():
            v = (v - coef @ R) % self.p
        return v

    def insert(self, v: np.ndarray) -> bool:
        """Reduce v and add it if independent; True if the span grew."""
        r = self.residue(v)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        j = nz[0]
        r = r * pow(int(r[j]), self.p - 2, self.p) % self.p
        if self.count:
            R = self.rows[: self.count]
            col = R[:, j].copy()
            if col.any():
                R -= np.outer(col, r)
                R %= self.p
        if self.count >= self.rows.shape[0]:
            self.rows = np.vstack([self.rows, np.zeros_like(self.rows)])
            self.pivcols = np.concatenate([self.pivcols, np.zeros_like(self.pivcols)])
        self.rows[self.count] = r
        self.pivcols[self.count] = j
        self.count += 1
        return True
