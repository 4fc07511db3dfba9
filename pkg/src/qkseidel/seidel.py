"""Seidel elements and the combinatorics feeding the product formula.

For a special (cominuscule) node i the Seidel element is v[i] = w_o * w_{P_i},
the minimal representative of w_o modulo the parabolic omitting i.  Together
with the length-zero element pi_i and the Grassmannian factor of the minuscule
antidominant translation it forms a SeidelDatum, whose defining identities are
checked eagerly at construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .affine import (
    ExtAffineWeylElement,
    SigmaElement,
    from_finite,
    is_grassmannian,
    pi,
    translation,
)
from .errors import VerificationError
from .rootsys import (
    Coweight,
    Root,
    RootSystem,
    WeylElement,
    longest_element,
    special_nodes,
)

__all__ = [
    "SeidelDatum",
    "gamma",
    "one_line",
    "quantum_exponent",
    "seidel_datum",
    "seidel_element",
    "special_nodes",
    "verify_group_lemma",
    "verify_key_lemma",
]

_DATUM_CACHE: dict[tuple[int, int], "SeidelDatum"] = {}


def seidel_element(rs: RootSystem, i: int) -> WeylElement:
    """v[i] = w_o * w_{P_i} for a special node i."""
    if i not in special_nodes(rs):
        raise ValueError("node %d is not special in %r" % (i, rs))
    return longest_element(rs) * longest_element(rs, set(rs.nodes) - {i})


def gamma(rs: RootSystem, w: WeylElement) -> Coweight:
    """The antidominant coweight -sum of fundamental coweights over Des(w)."""
    des = set(w.descent_set())
    return tuple(-1 if j in des else 0 for j in rs.nodes)


def quantum_exponent(rs: RootSystem, i: int, w: WeylElement) -> tuple[int, ...]:
    """omega_i^vee - w^{-1}(omega_i^vee) in simple-coroot coordinates.

    The difference always lies in the coroot lattice; nonnegativity of the
    coordinates is part of the certified statement, so a violation raises.
    """
    fund = rs.fundamental_coweight(i)
    diff = tuple(a - b for a, b in zip(fund, w.inverse().act_coweight(fund)))
    coords = rs.coweight_to_coroots(diff)
    if coords is None:
        raise VerificationError("exponent %r escapes the coroot lattice" % (diff,))
    if any(c < 0 for c in coords):
        raise VerificationError("exponent %r has a negative coordinate" % (coords,))
    return coords


@dataclass(frozen=True)
class SeidelDatum:
    """The (v[i], pi_i, kappa_i) package attached to a special node."""

    node: int
    element: WeylElement              # v[i], finite
    sigma: SigmaElement               # pi_i, length zero
    grassmannian_part: ExtAffineWeylElement  # kappa_i, in the affine Weyl group


def seidel_datum(rs: RootSystem, i: int) -> SeidelDatum:
    """Builds the datum for node i and certifies its defining identities."""
    key = (id(rs), i)
    if key in _DATUM_CACHE:
        return _DATUM_CACHE[key]
    v = seidel_element(rs, i)
    p = pi(rs, i)
    minus_omega = tuple(-c for c in rs.fundamental_coweight(i))
    t_min = translation(rs, minus_omega)
    kappa = p.element * t_min

    if rs.coweight_to_coroots(kappa.lam) is None or not is_grassmannian(kappa):
        raise VerificationError("kappa for node %d is not affine Grassmannian" % i)
    if from_finite(v) * t_min != p.inverse().element:
        raise VerificationError("v[%d] t_{-omega^vee} differs from pi^{-1}" % i)
    if p.element * from_finite(v.inverse()) * p.inverse().element != kappa:
        raise VerificationError("pi v[%d]^{-1} pi^{-1} differs from kappa" % i)
    expected_inv = {
        beta for beta in rs.positive_roots if beta[i - 1] == 1
    }
    if set(v.inversions()) != expected_inv:
        raise VerificationError("Inv(v[%d]) is not the omega-pairing-1 set" % i)

    datum = SeidelDatum(i, v, p, kappa)
    _DATUM_CACHE[key] = datum
    return datum


@dataclass(frozen=True)
class KeyLemmaReport:
    ok: bool
    node: int
    w_word: tuple[int, ...]
    lhs: Coweight
    rhs: Coweight

    def __bool__(self) -> bool:
        return self.ok


def verify_key_lemma(rs: RootSystem, i: int, w: WeylElement) -> KeyLemmaReport:
    """gamma(v[i] w) = gamma(w) - w^{-1}(omega_i^vee)."""
    v = seidel_element(rs, i)
    lhs = gamma(rs, v * w)
    pulled = w.inverse().act_coweight(rs.fundamental_coweight(i))
    rhs = tuple(a - b for a, b in zip(gamma(rs, w), pulled))
    return KeyLemmaReport(lhs == rhs, i, w.reduced_word(), lhs, rhs)


def verify_group_lemma(rs: RootSystem, i: int, w: WeylElement) -> bool:
    """pi_i^{-1} w t_{gamma_w} = (v[i] w) t_{gamma_{v[i] w}} in the extended group."""
    v = seidel_element(rs, i)
    lhs = pi(rs, i).inverse().element * from_finite(w) * translation(rs, gamma(rs, w))
    rhs = from_finite(v * w) * translation(rs, gamma(rs, v * w))
    return lhs == rhs


# -- display sugar ------------------------------------------------------------


def one_line(w: WeylElement) -> tuple[int, ...]:
    """(Signed) one-line notation for classical types.

    Type A on rank+1 letters; B/C/D on rank letters with sign flips.  Entry j
    is the signed image of e_j.  Display only: the canonical form stays the
    root-lattice matrix.
    """
    rs = w.rs
    n = rs.rank
    if rs.type_label == "A":
        size = n + 1

        def gen(i: int, img: list[int]) -> list[int]:
            out = list(img)
            out[i - 1], out[i] = out[i], out[i - 1]
            return out

    elif rs.type_label in ("B", "C", "D"):
        size = n

        def gen(i: int, img: list[int]) -> list[int]:
            out = list(img)
            if i < n:
                out[i - 1], out[i] = out[i], out[i - 1]
            elif rs.type_label in ("B", "C"):
                out[n - 1] = -out[n - 1]
            else:
                out[n - 2], out[n - 1] = -out[n - 1], -out[n - 2]
            return out

    else:
        raise ValueError("one-line notation is defined for classical types only")

    # Entry j is the signed image w(e_j); products compose right to left, so
    # the word is folded from its last letter.  With this reading the string's
    # descent positions are exactly the right descent set.
    images = list(range(1, size + 1))
    for letter in reversed(w.reduced_word()):
        base = gen(letter, list(range(1, size + 1)))

        def apply(x: int) -> int:
            return base[x - 1] if x > 0 else -base[-x - 1]

        images = [apply(x) for x in images]
    return tuple(images)
