"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Scalars are residue classes of Q[z] modulo the N-th cyclotomic polynomial
Phi_N, stored as dense tuples of `fractions.Fraction` of length deg(Phi_N).
No floating point anywhere; equality is exact equality of coefficient
vectors.  `z` denotes the class of the variable, i.e. a fixed primitive
N-th root of unity.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "Field",
    "Scalar",
    "FieldError",
    "ParseError",
    "ScalarDivisionError",
    "make_field",
    "primitive_root",
    "arith",
    "parse_scalar",
    "cyclotomic_polynomial",
]


class FieldError(ValueError):
    """Bad field construction or mixed-field arithmetic."""


class ParseError(FieldError):
    """Scalar expression does not match the grammar."""


class ScalarDivisionError(ZeroDivisionError):
    """Division by the zero scalar."""


ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomial helpers over Fraction, little-endian coefficient lists


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(num, den):
    """Exact division with remainder; den need not be monic."""
    num = list(num)
    q = [ZERO] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    while len(num) >= len(den) and _poly_trim(num):
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        _poly_trim(num)
    return _poly_trim(q), num


_cyclo_cache: dict[int, tuple] = {}


def cyclotomic_polynomial(N: int) -> tuple:
    """Phi_N as a little-endian tuple of Fractions, computed by dividing
    z^N - 1 by the cyclotomic polynomials of the proper divisors of N."""
    if N in _cyclo_cache:
        return _cyclo_cache[N]
    if N < 1:
        raise FieldError(f"cyclotomic index must be >= 1, got {N}")
    num = [ZERO] * (N + 1)
    num[0], num[N] = -ONE, ONE
    den = [ONE]
    for d in range(1, N):
        if N % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    quo, rem = _poly_divmod(num, den)
    assert not rem, f"Phi_{N} division left a remainder"
    out = tuple(quo)
    _cyclo_cache[N] = out
    return out


def _euler_phi(N: int) -> int:
    return sum(1 for k in range(1, N + 1) if gcd(k, N) == 1)


# ---------------------------------------------------------------------------


class Field:
    """Q(zeta_N) with zeta_N the class of z modulo Phi_N."""

    def __init__(self, N: int):
        if not isinstance(N, int) or N < 1:
            raise FieldError(f"conductor must be a positive integer, got {N!r}")
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.degree = len(self.modulus) - 1
        assert self.degree == _euler_phi(N)
        # reduction rows: z^k mod Phi_N for k = degree .. 2*degree-2,
        # built iteratively from z^degree = -(Phi_N - z^degree)
        d = self.degree
        rows = []
        cur = [-c for c in self.modulus[:d]]
        rows.append(tuple(cur))
        for _ in range(max(d - 2, 0)):
            shifted = [ZERO] + cur[:-1]
            top = cur[-1]
            if top:
                nxt = [shifted[i] + top * rows[0][i] for i in range(d)]
            else:
                nxt = shifted
            cur = nxt
            rows.append(tuple(cur))
        self._red = rows  # rows[k] = z^(degree+k) reduced, k = 0..degree-2
        self.zero = Scalar(self, (ZERO,) * d)
        one = [ZERO] * d
        one[0] = ONE
        self.one = Scalar(self, tuple(one))
        self._roots: dict[int, Scalar] = {}
        self._products: dict[tuple, Scalar] = {}

    def __repr__(self):
        return f"Field(Q(zeta_{self.N}), degree {self.degree})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.N == self.N

    def __hash__(self):
        return hash(("Field", self.N))

    def scalar(self, coeffs) -> Scalar:
        """Scalar from an iterable of rationals (length <= degree) with
        reduction of longer inputs."""
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            cs = self._reduce(cs)
        else:
            cs = cs + [ZERO] * (self.degree - len(cs))
        return Scalar(self, tuple(cs))

    def from_rational(self, r) -> Scalar:
        out = [ZERO] * self.degree
        out[0] = Fraction(r)
        return Scalar(self, tuple(out))

    def _reduce(self, cs):
        d = self.degree
        if len(cs) > 2 * d - 1:
            _, rem = _poly_divmod(cs, list(self.modulus))
            return list(rem) + [ZERO] * (d - len(rem))
        out = list(cs[:d]) + [ZERO] * (d - min(len(cs), d))
        for k in range(d, len(cs)):
            c = cs[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return out

    def root_of_unity(self, k: int) -> Scalar:
        """zeta_N^k (k taken mod N)."""
        k %= self.N
        hit = self._roots.get(k)
        if hit is not None:
            return hit
        cs = [ZERO] * k + [ONE]
        s = self.scalar(cs)
        self._roots[k] = s
        return s

    @property
    def zeta(self) -> Scalar:
        return self.root_of_unity(1)


class Scalar:
    """An element of Q(zeta_N); immutable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # -- basic protocol ----------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field.N != self.field.N:
                return False
            return other.coeffs == self.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.N, self.coeffs))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field.N != self.field.N:
                raise FieldError(
                    f"mixed fields: Q(zeta_{self.field.N}) vs Q(zeta_{other.field.N})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # memoized on the operand objects: structure constants are shared
        # Scalars hit millions of times per verification pass, and both
        # operands cache their hashes, so repeats cost one dict lookup
        cache = self.field._products
        key = (self, o)
        hit = cache.get(key)
        if hit is not None:
            return hit
        a, b = self.coeffs, o.coeffs
        d = self.field.degree
        if d == 1:
            result = Scalar(self.field, (a[0] * b[0],))
        else:
            conv = [ZERO] * (2 * d - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            conv[i + j] += ai * bj
            out = conv[:d]
            red = self.field._red
            for k in range(d, 2 * d - 1):
                c = conv[k]
                if c:
                    row = red[k - d]
                    for i in range(d):
                        if row[i]:
                            out[i] += c * row[i]
            result = Scalar(self.field, tuple(out))
        if len(cache) < (1 << 16):
            cache[key] = result
        return result

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ScalarDivisionError("inverse of zero in Q(zeta_N)")
        # extended Euclid: a*self + b*Phi_N = gcd = const
        a = _poly_trim(list(self.coeffs))
        m = list(self.field.modulus)
        # invariants: a = s*self mod Phi, m-track not needed beyond gcd
        s_a, s_m = [ONE], []
        while True:
            if len(a) == 1:
                c = a[0]
                inv = [x / c for x in s_a]
                return self.field.scalar(inv)
            q, r = _poly_divmod(m, a)
            r = _poly_trim(r)
            # new remainder r = m - q*a ; its cofactor: s_m - q*s_a
            qs = _poly_mul(q, s_a)
            ns = [ZERO] * max(len(s_m), len(qs))
            for i, v in enumerate(s_m):
                ns[i] += v
            for i, v in enumerate(qs):
                ns[i] -= v
            _poly_trim(ns)
            m, a = a, r
            s_m, s_a = s_a, ns
            assert a, "cyclotomic modulus shares a factor with a nonzero scalar?"

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- printing ----------------------------------------------------------

    def to_string(self) -> str:
        """Canonical form, e.g. '0', '-3/2', '1 - 1/2*z + z^2'."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Scalar({self.to_string()!r}, N={self.field.N})"


# ---------------------------------------------------------------------------
# public operations


def make_field(N: int) -> Field:
    """The cyclotomic field Q(zeta_N)."""
    return Field(N)


def primitive_root(field: Field, n: int) -> Scalar:
    """A primitive n-th root of unity in Q(zeta_N), namely zeta_N^(N/n).

    Requires n | N; raises FieldError otherwise."""
    if not isinstance(n, int) or n < 1:
        raise FieldError(f"root order must be a positive integer, got {n!r}")
    if field.N % n != 0:
        raise FieldError(f"{n} does not divide the conductor {field.N}")
    return field.root_of_unity(field.N // n)


_ARITH_OPS = {"add", "sub", "mul", "div", "pow", "eq"}


def arith(lhs: Scalar, rhs, op: str):
    """Binary arithmetic dispatch: op in add|sub|mul|div|pow|eq.

    pow expects an integer rhs; div by zero raises ScalarDivisionError;
    eq returns a bool, everything else a Scalar."""
    if op not in _ARITH_OPS:
        raise FieldError(f"unknown op {op!r}; expected one of {sorted(_ARITH_OPS)}")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    if op == "pow":
        if not isinstance(rhs, int):
            raise FieldError(f"pow exponent must be an integer, got {rhs!r}")
        return lhs ** rhs
    return lhs == rhs


# ---------------------------------------------------------------------------
# parser: rational literals, z, + - * / ^, parentheses


def _tokenize(text: str):
    toks = []
    i, L = 0, len(text)
    while i < L:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < L and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch == "z":
            toks.append(("z", None))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, None))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    toks.append(("end", None))
    return toks


class _Parser:
    def __init__(self, toks, field):
        self.toks = toks
        self.pos = 0
        self.field = field

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, got {t[0]!r}")
        return t

    def expr(self):
        v = self.term()
        while self.peek() in "+-":
            op = self.next()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in "*/":
            op = self.next()[0]
            w = self.unary()
            v = v * w if op == "*" else v / w
        return v

    def unary(self):
        sign = 1
        while self.peek() in "+-":
            if self.next()[0] == "-":
                sign = -sign
        v = self.power()
        return v if sign == 1 else -v

    def power(self):
        v = self.atom()
        if self.peek() == "^":
            self.next()
            neg = False
            while self.peek() in "+-":
                if self.next()[0] == "-":
                    neg = not neg
            k = self.expect("int")[1]
            v = v ** (-k if neg else k)
        return v

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return self.field.from_rational(val)
        if kind == "z":
            return self.field.zeta
        if kind == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {kind!r}")


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse an expression in rational literals, z, + - * / ^ and parens."""
    p = _Parser(_tokenize(text), field)
    v = p.expr()
    p.expect("end")
    return v
