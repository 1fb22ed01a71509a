"""Small hand-built algebras and comodules shared between test modules,
mostly non-simple counterexamples with known operator-span dimensions."""

from __future__ import annotations

from taftgal.comodule import ComoduleAlgebraData, trivial_comodule
from taftgal.core import AlgebraData
from taftgal.hopf import build_group_hopf


def truncated_poly(field, m: int) -> AlgebraData:
    """k[t]/(t^m)."""
    one = field.one
    mult = [dict() for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i + j < m:
                mult[i][j] = ((i + j, one),)
    labels = ["1"] + [f"t^{i}" if i > 1 else "t" for i in range(1, m)]
    return AlgebraData(
        field, labels, mult, {0: one},
        gens={"t": {1: one}}, words=[("t",) * i for i in range(m)],
        name=f"k[t]/t^{m}",
    )


def upper_triangular2(field) -> AlgebraData:
    """Upper triangular 2x2 matrices, basis (e11, e12, e22)."""
    one = field.one
    mult = [dict() for _ in range(3)]
    mult[0][0] = ((0, one),)   # e11 e11 = e11
    mult[0][1] = ((1, one),)   # e11 e12 = e12
    mult[1][2] = ((1, one),)   # e12 e22 = e12
    mult[2][2] = ((2, one),)   # e22 e22 = e22
    return AlgebraData(
        field, ["e11", "e12", "e22"], mult, {0: one, 2: one},
        gens={"a": {0: one}, "b": {1: one}, "c": {2: one}},
        words=[("a",), ("b",), ("c",)],
        name="upper-triangular 2x2",
    )


def costable_ideal_counterexamples(field):
    """(name, comodule, expected exact operator-span dimension) triples;
    every entry has a costable ideal, so none is H-simple."""
    Z2 = build_group_hopf((2,), field)
    out = [
        ("k[t]/t^2 trivial", trivial_comodule(truncated_poly(field, 2), Z2), 2),
        ("k[t]/t^3 trivial", trivial_comodule(truncated_poly(field, 3), Z2), 3),
        ("upper-tri 2x2 trivial", trivial_comodule(upper_triangular2(field), Z2), 5),
        ("kZ2 trivial", trivial_comodule(Z2, Z2), 2),
    ]
    return out
