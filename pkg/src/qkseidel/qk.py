"""Quantum K-theory of G/B and G/P as free modules on Schubert symbols.

QKElement is a finite sum of terms Q^d O^w with Laurent coefficients; for a
parabolic base the Schubert index runs over the minimal coset representatives
W^P.  The only ring operation exposed is the Seidel product, which is a
closed-form permutation of the basis up to a Q-monomial:

    O^{v_i} . (v_i^L O^w) = Q^{omega_i^vee - w^{-1} omega_i^vee} O^{v_i w}.

Each (i, w) instance is certified in the Peterson engine before the closed
form is used; a registry caches certificates and exhaustive sweep marks so
repeated products stay cheap.  The parabolic product is computed twice, via
the pushforward and via the direct formula, and the routes must agree.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedProductError, VerificationError
from .laurent import LaurentPoly
from .peterson import verify_seidel_theorem
from .rootsys import RootSystem, WeylElement
from .seidel import quantum_exponent, seidel_element

QExponent = tuple[int, ...]


@dataclass(frozen=True)
class ParabolicData:
    """A parabolic subset with its coset combinatorics precomputed."""

    rs: RootSystem
    subset: frozenset[int]
    minimal_reps: tuple[WeylElement, ...]
    subgroup_order: int

    def __contains__(self, w: WeylElement) -> bool:
        return all(j not in self.subset for j in w.descent_set())


def parabolic_data(rs: RootSystem, subset) -> ParabolicData:
    nodes = frozenset(subset)
    if not nodes <= set(rs.nodes):
        raise ValueError(f"parabolic subset {sorted(nodes)} outside the index set")
    group = rs.weyl_group()
    reps = tuple(w for w in group if all(j not in nodes for j in w.descent_set()))
    # W_P by the mirror filter: all descents inside the subset span
    order = sum(1 for w in group if set(_support(w)) <= nodes)
    if order * len(reps) != len(group):
        raise VerificationError(
            f"coset count mismatch for subset {sorted(nodes)}: "
            f"{order} * {len(reps)} != {len(group)}"
        )
    return ParabolicData(rs, nodes, reps, order)


def _support(w: WeylElement) -> tuple[int, ...]:
    return tuple(sorted(set(w.reduced_word())))


def minrep_w(w: WeylElement, p: ParabolicData) -> WeylElement:
    """The minimal-length representative of w W_P, by stripping right descents in I_P."""
    rs = p.rs
    while True:
        des = [j for j in w.descent_set() if j in p.subset]
        if not des:
            return w
        w = w * rs.simple_reflection(des[0])


def minrep_beta(beta: QExponent, p: ParabolicData) -> QExponent:
    """Project a coroot-basis exponent by deleting the I_P coordinates."""
    if len(beta) != p.rs.rank:
        raise ValueError(f"exponent {beta} has wrong arity")
    return tuple(0 if j in p.subset else b for j, b in zip(p.rs.nodes, beta))


class QKElement:
    """Finite sum of Q^d O^w terms over a fixed base."""

    __slots__ = ("rs", "base", "terms")

    def __init__(
        self,
        rs: RootSystem,
        terms: dict[tuple[QExponent, WeylElement], LaurentPoly] | None = None,
        base: frozenset[int] = frozenset(),
    ):
        self.rs = rs
        self.base = frozenset(base)
        clean: dict[tuple[QExponent, WeylElement], LaurentPoly] = {}
        if terms:
            for (d, w), f in terms.items():
                if f.is_zero():
                    continue
                if len(d) != rs.rank or any(c < 0 for c in d):
                    raise ValueError(f"invalid exponent {d}")
                if any(j in self.base for j in w.descent_set()):
                    raise ValueError(
                        f"index {w.reduced_word()} is not minimal for base {sorted(self.base)}"
                    )
                clean[(tuple(d), w)] = f
        self.terms = clean

    @classmethod
    def schubert(
        cls, rs: RootSystem, w: WeylElement, base: frozenset[int] = frozenset()
    ) -> "QKElement":
        return cls(rs, {((0,) * rs.rank, w): LaurentPoly.one(rs.rank)}, base)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[tuple[QExponent, WeylElement], ...]:
        return tuple(self.terms)

    def coefficient(self, d: QExponent, w: WeylElement) -> LaurentPoly:
        return self.terms.get((tuple(d), w), LaurentPoly.zero(self.rs.rank))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QKElement):
            return NotImplemented
        return self.rs is other.rs and self.base == other.base and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "QKElement") -> "QKElement":
        if not isinstance(other, QKElement):
            return NotImplemented
        if self.base != other.base:
            raise ValueError("cannot add classes over different bases")
        out = dict(self.terms)
        for key, f in other.terms.items():
            g = out.get(key)
            out[key] = f if g is None else g + f
        return QKElement(self.rs, out, self.base)

    def __neg__(self) -> "QKElement":
        return QKElement(self.rs, {k: -f for k, f in self.terms.items()}, self.base)

    def __sub__(self, other: "QKElement") -> "QKElement":
        if not isinstance(other, QKElement):
            return NotImplemented
        return self + (-other)

    def scale(self, f: LaurentPoly | int) -> "QKElement":
        if isinstance(f, int):
            f = LaurentPoly.constant(self.rs.rank, f)
        return QKElement(self.rs, {k: f * g for k, g in self.terms.items()}, self.base)

    def shift_q(self, d: QExponent) -> "QKElement":
        """Multiply by the Q-monomial Q^d."""
        if len(d) != self.rs.rank or any(c < 0 for c in d):
            raise ValueError(f"invalid exponent {d}")
        return QKElement(
            self.rs,
            {(tuple(a + b for a, b in zip(q, d)), w): f for (q, w), f in self.terms.items()},
            self.base,
        )

    def __mul__(self, other):
        raise UnsupportedProductError(
            "general quantum products are not defined here; use seidel_product"
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def qstr(d: QExponent) -> str:
            parts = [f"Q{j + 1}" + (f"^{c}" if c > 1 else "") for j, c in enumerate(d) if c]
            return "*".join(parts)

        bits = []
        for (d, w), f in sorted(
            self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].length(), kv[0][1].m)
        ):
            word = "*".join(f"s{j}" for j in w.reduced_word()) or "e"
            mono = qstr(d)
            head = f"{mono}*" if mono else ""
            bits.append(f"({f})*{head}O[{word}]")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"QKElement({self})"


def left_action(i: int, xi: QKElement) -> QKElement:
    """The W-action generator s_i^L; Q-monomials are untouched."""
    rs = xi.rs
    if i not in rs.nodes:
        raise ValueError(f"node {i} outside the finite index set")
    si = rs.simple_reflection(i)
    alpha = LaurentPoly.monomial(rs.simple_root(i))
    one = LaurentPoly.one(rs.rank)
    out: dict[tuple[QExponent, WeylElement], LaurentPoly] = {}

    def bump(key, f: LaurentPoly) -> None:
        g = out.get(key)
        h = f if g is None else g + f
        if h.is_zero():
            out.pop(key, None)
        else:
            out[key] = h

    for (d, w), f in xi.terms.items():
        sf = f.act_exponents(si.m)
        sw = si * w
        if sw.length() < w.length():
            bump((d, w), sf * alpha)
            bump((d, sw), sf * (one - alpha))
        else:
            bump((d, w), sf)
    return QKElement(rs, out, xi.base)


def left_action_w(u: WeylElement, xi: QKElement) -> QKElement:
    for i in reversed(u.reduced_word()):
        xi = left_action(i, xi)
    return xi


class VerificationRegistry:
    """Certificates for theorem instances, so closed-form products are backed."""

    def __init__(self):
        self._instances: set[tuple[str, int, int, tuple[int, ...]]] = set()
        self._swept: set[tuple[str, int]] = set()

    def record(self, report) -> None:
        if not report.passed:
            raise VerificationError("refusing to record a failed verification")
        self._instances.add(
            (report.type_label, report.rank, report.node, report.word)
        )

    def mark_swept(self, type_label: str, rank: int) -> None:
        self._swept.add((type_label, rank))

    def covers(self, rs: RootSystem, i: int, w: WeylElement) -> bool:
        if (rs.type_label, rs.rank) in self._swept:
            return True
        return (rs.type_label, rs.rank, i, w.reduced_word()) in self._instances


DEFAULT_REGISTRY = VerificationRegistry()


def seidel_product(
    rs: RootSystem,
    i: int,
    w: WeylElement,
    registry: VerificationRegistry | None = None,
) -> QKElement:
    """O^{v_i} . (v_i^L O^w) over G/B, certified before the closed form is used."""
    reg = DEFAULT_REGISTRY if registry is None else registry
    if not reg.covers(rs, i, w):
        report = verify_seidel_theorem(rs, i, w)
        if not report.passed:
            raise VerificationError(
                f"theorem instance failed for node {i}, word {w.reduced_word()}: "
                f"{report.checks}"
            )
        reg.record(report)
    d = quantum_exponent(rs, i, w)
    return QKElement.schubert(rs, seidel_element(rs, i) * w).shift_q(d)


def pushforward(xi: QKElement, p: ParabolicData) -> QKElement:
    """Project a class over G/B to G/P term by term; coefficients pass through."""
    if xi.base:
        raise ValueError("pushforward starts from the full flag variety base")
    if any(c < 0 for (d, _w) in xi.terms for c in d):
        raise ValueError("negative exponents do not push forward")
    out: dict[tuple[QExponent, WeylElement], LaurentPoly] = {}
    for (d, w), f in xi.terms.items():
        key = (minrep_beta(d, p), minrep_w(w, p))
        g = out.get(key)
        h = f if g is None else g + f
        if h.is_zero():
            out.pop(key, None)
        else:
            out[key] = h
    return QKElement(xi.rs, out, p.subset)


def seidel_product_parabolic(
    rs: RootSystem,
    i: int,
    w: WeylElement,
    p: ParabolicData,
    registry: VerificationRegistry | None = None,
) -> QKElement:
    """The parabolic product, computed via pushforward and by direct formula.

    The two routes must agree; a mismatch is a verification failure, not a
    silent preference for one of them.
    """
    if w not in p:
        raise ValueError(f"index {w.reduced_word()} is not minimal for the base")
    via_push = pushforward(seidel_product(rs, i, w, registry), p)
    d = minrep_beta(quantum_exponent(rs, i, w), p)
    if any(c < 0 for c in d):
        raise VerificationError(f"parabolic exponent {d} left the positive cone")
    direct = QKElement.schubert(rs, minrep_w(seidel_element(rs, i) * w, p), p.subset).shift_q(d)
    if via_push != direct:
        raise VerificationError(
            f"pushforward and direct routes disagree for node {i}, "
            f"word {w.reduced_word()}, base {sorted(p.subset)}"
        )
    return direct


def verify_standard_lemma(p: ParabolicData) -> bool:
    """w in W^P with s_i w > w outside W^P forces s_i w = w s_j for some j in I_P."""
    rs = p.rs
    for w in p.minimal_reps:
        for i in rs.nodes:
            sw = rs.simple_reflection(i) * w
            if sw.length() > w.length() and sw not in p:
                if not any(sw == w * rs.simple_reflection(j) for j in p.subset):
                    return False
    return True


def verify_minrep_biconditional(p: ParabolicData) -> bool:
    """s_i minrep(w) lies in W^P exactly when it equals minrep(s_i w)."""
    rs = p.rs
    for w in rs.weyl_group():
        m = minrep_w(w, p)
        for i in rs.nodes:
            sm = rs.simple_reflection(i) * m
            if (sm in p) != (sm == minrep_w(rs.simple_reflection(i) * w, p)):
                return False
    return True


def verify_pushforward_commutes(p: ParabolicData) -> bool:
    """pushforward(s_i^L O^w) = s_i^L pushforward(O^w), plus the two coset lemmas."""
    rs = p.rs
    if not verify_standard_lemma(p):
        return False
    if not verify_minrep_biconditional(p):
        return False
    for w in rs.weyl_group():
        xi = QKElement.schubert(rs, w)
        for i in rs.nodes:
            lhs = pushforward(left_action(i, xi), p)
            rhs = left_action(i, pushforward(xi, p))
            if lhs != rhs:
                return False
    return True
