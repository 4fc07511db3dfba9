"""Twisted group algebra of the extended affine Weyl group, level zero.

Scalars are rational functions in the characters e^beta of the finite
torus.  The null root acts as 1, so a group element twists scalars through
the finite part of its translation normal form: translations act trivially
and s_0 acts as the reflection in the highest root.

Products follow (f x)(g y) = f x(g) [xy].  Divided difference operators
are the two-term elements

    D_i = (1 - e^{alpha_i})^{-1} [s_i] + (1 - (1 - e^{alpha_i})^{-1}) [e],

with e^{alpha_0} = e^{-theta} at level zero.  They satisfy D_i^2 = D_i and
the braid relations, so D_x is well defined for x with a reduced word, and
extends to the whole group by D_{sigma x} = [sigma] D_x.
"""
from __future__ import annotations

from typing import Iterable

from .affine import (
    ExtAffineWeylElement,
    affine_from_word,
    affine_nodes,
    affine_simple_reflection,
    affine_simple_root,
    ext_identity,
    sigma_decompose,
    theta_pairings,
)
from .errors import NonReducedWordError
from .laurent import LaurentPoly, RationalFunction
from .rootsys import RootSystem

Scalar = RationalFunction


def level_zero_action(x: ExtAffineWeylElement, f):
    """Act on a LaurentPoly or RationalFunction by the finite part of x."""
    return f.act_exponents(x.u.m)


def simple_character(rs: RootSystem, i: int) -> LaurentPoly:
    """e^{alpha_i} for affine i, evaluated at level zero."""
    return LaurentPoly.monomial(affine_simple_root(rs, i).finite)


def _as_scalar(rs: RootSystem, value) -> Scalar | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFunction(value)
    if isinstance(value, int):
        return RationalFunction(LaurentPoly.constant(rs.rank, value))
    return None


class GroupAlgebraElement:
    """Finite sum of scalar multiples of extended affine Weyl elements."""

    __slots__ = ("rs", "coeffs")

    def __init__(
        self,
        rs: RootSystem,
        coeffs: dict[ExtAffineWeylElement, Scalar] | None = None,
    ):
        self.rs = rs
        clean: dict[ExtAffineWeylElement, Scalar] = {}
        if coeffs:
            for x, f in coeffs.items():
                if not f.is_zero():
                    clean[x] = f
        self.coeffs = clean

    @classmethod
    def zero(cls, rs: RootSystem) -> "GroupAlgebraElement":
        return cls(rs)

    @classmethod
    def basis(cls, x: ExtAffineWeylElement, coeff=1) -> "GroupAlgebraElement":
        f = _as_scalar(x.rs, coeff)
        return cls(x.rs, {x: f})

    @classmethod
    def one(cls, rs: RootSystem) -> "GroupAlgebraElement":
        return cls.basis(ext_identity(rs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> tuple[ExtAffineWeylElement, ...]:
        return tuple(self.coeffs)

    def coefficient(self, x: ExtAffineWeylElement) -> Scalar:
        return self.coeffs.get(x, RationalFunction.zero(self.rs.rank))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self.rs is not other.rs:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(f == other.coeffs[x] for x, f in self.coeffs.items())

    __hash__ = None

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        out = dict(self.coeffs)
        for x, f in other.coeffs.items():
            g = out.get(x)
            out[x] = f if g is None else g + f
        return GroupAlgebraElement(self.rs, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.rs, {x: -f for x, f in self.coeffs.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "GroupAlgebraElement":
        scalar = _as_scalar(self.rs, other)
        if scalar is not None:
            # right multiplication: x picks up x(g)
            return GroupAlgebraElement(
                self.rs,
                {x: f * level_zero_action(x, scalar) for x, f in self.coeffs.items()},
            )
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        out: dict[ExtAffineWeylElement, Scalar] = {}
        for x, f in self.coeffs.items():
            for y, g in other.coeffs.items():
                key = x * y
                term = f * level_zero_action(x, g)
                acc = out.get(key)
                out[key] = term if acc is None else acc + term
        return GroupAlgebraElement(self.rs, out)

    def __rmul__(self, other) -> "GroupAlgebraElement":
        scalar = _as_scalar(self.rs, other)
        if scalar is None:
            return NotImplemented
        return GroupAlgebraElement(
            self.rs, {x: scalar * f for x, f in self.coeffs.items()}
        )

    def act_on(self, scalar) -> Scalar:
        """Apply as an operator on scalars: sum of f_x * x(g)."""
        g = _as_scalar(self.rs, scalar)
        if g is None:
            raise TypeError(f"cannot act on {scalar!r}")
        out = RationalFunction.zero(self.rs.rank)
        for x, f in self.coeffs.items():
            out = out + f * level_zero_action(x, g)
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for x in sorted(self.coeffs, key=lambda e: (e.ext_length(), repr(e))):
            parts.append(f"({self.coeffs[x]})*[{x!r}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self})"


def demazure(rs: RootSystem, i: int) -> GroupAlgebraElement:
    """The divided difference operator D_i as a group algebra element."""
    if i not in affine_nodes(rs):
        raise ValueError(f"node {i} outside the affine index set")
    one = RationalFunction.one(rs.rank)
    c = RationalFunction(
        LaurentPoly.one(rs.rank), LaurentPoly.one(rs.rank) - simple_character(rs, i)
    )
    si = affine_simple_reflection(rs, i)
    return GroupAlgebraElement(rs, {si: c, ext_identity(rs): one - c})


def demazure_of_word(rs: RootSystem, word: Iterable[int]) -> GroupAlgebraElement:
    """Product D_{i_1} ... D_{i_k}; the word must be reduced."""
    word = tuple(word)
    if affine_from_word(rs, word).ext_length() != len(word):
        raise NonReducedWordError(f"word {word} is not reduced")
    out = GroupAlgebraElement.one(rs)
    for i in word:
        out = out * demazure(rs, i)
    return out


def demazure_of_ext(x: ExtAffineWeylElement) -> GroupAlgebraElement:
    """D_x for any extended element, via x = sigma * (reduced word part)."""
    sigma, word = sigma_decompose(x)
    head = GroupAlgebraElement.basis(sigma.element)
    return head * demazure_of_word(x.rs, word)


def braid_order(rs: RootSystem, i: int, j: int) -> int:
    """Order of s_i s_j in the affine Weyl group, from the affine Cartan matrix."""
    if i == j:
        return 1
    n = _affine_pairing(rs, i, j) * _affine_pairing(rs, j, i)
    try:
        return {0: 2, 1: 3, 2: 4, 3: 6}[n]
    except KeyError:
        raise ValueError(f"nodes {i},{j} generate an infinite dihedral group")


def _affine_pairing(rs: RootSystem, i: int, j: int) -> int:
    """<alpha_i^vee, alpha_j> over the affine node set."""
    if i == j:
        return 2
    if i == 0:
        return -theta_pairings(rs)[j - 1]
    if j == 0:
        return -rs.pair_coroot_root(i, rs.highest_root)
    return rs.cartan[i - 1][j - 1]


def verify_braid_relation(rs: RootSystem, i: int, j: int) -> bool:
    """D_i D_j D_i ... = D_j D_i D_j ... with braid_order(i, j) factors."""
    m = braid_order(rs, i, j)
    lhs = GroupAlgebraElement.one(rs)
    rhs = GroupAlgebraElement.one(rs)
    for k in range(m):
        lhs = lhs * demazure(rs, i if k % 2 == 0 else j)
        rhs = rhs * demazure(rs, j if k % 2 == 0 else i)
    return lhs == rhs
