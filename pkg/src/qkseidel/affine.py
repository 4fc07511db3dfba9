"""Extended affine Weyl group: translations, affine reflections, length-zero elements.

Elements are kept in the normal form t_lambda * u with lambda in the coweight
lattice (fundamental-coweight coordinates) and u finite.  An affine root
alpha + n*delta is a (finite root, level) pair; the extra affine node is 0 and
its simple root is -theta + delta.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

from .rootsys import (
    Coweight,
    Matrix,
    Root,
    RootSystem,
    WeylElement,
    longest_element,
    root_is_positive,
    special_nodes,
)


class AffineRoot(NamedTuple):
    finite: Root
    level: int


def affine_root_is_positive(a: AffineRoot) -> bool:
    return a.level > 0 or (a.level == 0 and root_is_positive(a.finite))


_EXT_INTERN: dict[RootSystem, dict] = {}
_S_THETA: dict[RootSystem, WeylElement] = {}
_SIGMA_GROUP: dict[RootSystem, tuple] = {}


class ExtAffineWeylElement:
    """Element t_lambda * u of the extended affine Weyl group.

    Interned per root system, so equal elements share length and Grassmannian
    caches.  The Sigma part is implicit: it is trivial exactly when lambda lies
    in the coroot lattice.
    """

    __slots__ = ("rs", "lam", "u", "_length", "_grass", "_hash")

    def __init__(self, rs: RootSystem, lam: Coweight, u: WeylElement):
        self.rs = rs
        self.lam = lam
        self.u = u
        self._length: Optional[int] = None
        self._grass: Optional[bool] = None
        self._hash = hash((lam, u.m))

    def __repr__(self) -> str:
        return "t%r*%r" % (self.lam, self.u)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtAffineWeylElement)
            and self.lam == other.lam
            and self.u == other.u
        )

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "ExtAffineWeylElement") -> "ExtAffineWeylElement":
        lam = tuple(a + b for a, b in zip(self.lam, self.u.act_coweight(other.lam)))
        return _intern(self.rs, lam, self.u * other.u)

    def inverse(self) -> "ExtAffineWeylElement":
        uinv = self.u.inverse()
        lam = tuple(-c for c in uinv.act_coweight(self.lam))
        return _intern(self.rs, lam, uinv)

    @property
    def is_identity(self) -> bool:
        return self.u.is_identity and not any(self.lam)

    def act(self, a: AffineRoot) -> AffineRoot:
        """(t_lam u)(alpha + n delta) = u(alpha) + (n - <lam, u(alpha)>) delta."""
        beta = self.u.act_root(a.finite)
        return AffineRoot(beta, a.level - self.rs.pairing(self.lam, beta))

    def ext_length(self) -> int:
        """Number of positive affine roots sent negative.

        Enumerated over levels up to max |<lam, alpha>| + 1; beyond that bound
        the level shift cannot flip the sign.  Length-zero (Sigma) parts drop
        out automatically since they permute the positive affine roots.
        """
        if self._length is None:
            rs = self.rs
            bound = max(
                (abs(rs.pairing(self.lam, beta)) for beta in rs.positive_roots),
                default=0,
            ) + 1
            count = 0
            for beta in rs.positive_roots:
                neg = tuple(-c for c in beta)
                for n in range(0, bound + 1):
                    if not affine_root_is_positive(self.act(AffineRoot(beta, n))):
                        count += 1
                for n in range(1, bound + 1):
                    if not affine_root_is_positive(self.act(AffineRoot(neg, n))):
                        count += 1
            self._length = count
        return self._length

    def is_grassmannian(self) -> bool:
        """x(alpha_j) positive for every finite node j."""
        if self._grass is None:
            self._grass = all(
                affine_root_is_positive(self.act(AffineRoot(self.rs.simple_root(j), 0)))
                for j in self.rs.nodes
            )
        return self._grass

    def finite_translation_split(self) -> tuple[WeylElement, Coweight]:
        """Write x = w * t_beta; returns (w, beta) with beta = u^{-1}(lambda)."""
        return self.u, self.u.inverse().act_coweight(self.lam)


def _intern(rs: RootSystem, lam: Coweight, u: WeylElement) -> ExtAffineWeylElement:
    cache = _EXT_INTERN.setdefault(rs, {})
    key = (lam, u.m)
    x = cache.get(key)
    if x is None:
        x = ExtAffineWeylElement(rs, lam, u)
        cache[key] = x
    return x


def ext_identity(rs: RootSystem) -> ExtAffineWeylElement:
    return _intern(rs, (0,) * rs.rank, rs.identity_weyl())


def from_finite(w: WeylElement) -> ExtAffineWeylElement:
    return _intern(w.rs, (0,) * w.rs.rank, w)


def translation(rs: RootSystem, lam: Coweight) -> ExtAffineWeylElement:
    return _intern(rs, tuple(lam), rs.identity_weyl())


def theta_pairings(rs: RootSystem) -> Coweight:
    """theta^vee in fundamental-coweight coordinates, i.e. (<theta^vee, alpha_k>)_k."""
    return rs.coroots_to_coweight(rs.highest_root_coroot)


def s_theta(rs: RootSystem) -> WeylElement:
    """Reflection in the highest root."""
    w = _S_THETA.get(rs)
    if w is None:
        theta = rs.highest_root
        tp = theta_pairings(rs)
        n = rs.rank
        m = tuple(
            tuple((1 if r == k else 0) - tp[k] * theta[r] for k in range(n))
            for r in range(n)
        )
        w = rs._weyl(m, m)
        _S_THETA[rs] = w
    return w


def affine_simple_reflection(rs: RootSystem, i: int) -> ExtAffineWeylElement:
    """s_i for finite i; s_0 = t_{theta^vee} s_theta."""
    if i == 0:
        return _intern(rs, theta_pairings(rs), s_theta(rs))
    return from_finite(rs.simple_reflection(i))


def affine_simple_root(rs: RootSystem, i: int) -> AffineRoot:
    """alpha_i at level 0 for finite i; alpha_0 = -theta + delta."""
    if i == 0:
        return AffineRoot(tuple(-c for c in rs.highest_root), 1)
    return AffineRoot(rs.simple_root(i), 0)


def affine_nodes(rs: RootSystem) -> tuple[int, ...]:
    return (0,) + rs.nodes


def affine_from_word(rs: RootSystem, word: Iterable[int]) -> ExtAffineWeylElement:
    x = ext_identity(rs)
    for i in word:
        if i != 0 and i not in rs.nodes:
            raise ValueError("node %r outside the affine index set" % (i,))
        x = x * affine_simple_reflection(rs, i)
    return x


def ext_product(x: ExtAffineWeylElement, y: ExtAffineWeylElement) -> ExtAffineWeylElement:
    return x * y


def ext_inverse(x: ExtAffineWeylElement) -> ExtAffineWeylElement:
    return x.inverse()


def act_on_affine_root(x: ExtAffineWeylElement, a: AffineRoot) -> AffineRoot:
    return x.act(a)


def ext_length(x: ExtAffineWeylElement) -> int:
    return x.ext_length()


def is_grassmannian(x: ExtAffineWeylElement) -> bool:
    return x.is_grassmannian()


def affine_reduced_word(y: ExtAffineWeylElement) -> tuple[int, ...]:
    """Lexicographically least reduced word of a Sigma-free element.

    Greedy left-descent stripping over the affine index set; left descents are
    the i with y^{-1}(alpha_i) negative.
    """
    rs = y.rs
    if rs.coweight_to_coroots(y.lam) is None:
        raise ValueError("element has a nontrivial Sigma part, no word exists")
    word = []
    while not y.is_identity:
        yinv = y.inverse()
        for i in affine_nodes(rs):
            if not affine_root_is_positive(yinv.act(affine_simple_root(rs, i))):
                word.append(i)
                y = affine_simple_reflection(rs, i) * y
                break
        else:  # pragma: no cover - every nonidentity element has a descent
            raise AssertionError("no left descent found")
    return tuple(word)


# -- the length-zero subgroup Sigma -----------------------------------------


class SigmaElement:
    """Length-zero element of the extended affine Weyl group.

    Each class of P^vee/Q^vee contains exactly one such element; the stored
    representative coweight is zero or a minuscule fundamental coweight.  The
    node action is the induced automorphism of the affine Dynkin diagram.
    """

    __slots__ = ("element", "node", "action")

    def __init__(self, element: ExtAffineWeylElement, node: Optional[int]):
        assert element.ext_length() == 0
        self.element = element
        self.node = node
        rs = element.rs
        simples = {affine_simple_root(rs, j): j for j in affine_nodes(rs)}
        self.action = tuple(
            simples[element.act(affine_simple_root(rs, j))] for j in affine_nodes(rs)
        )

    def __repr__(self) -> str:
        return "Sigma[node=%s]" % (self.node,)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SigmaElement) and self.element == other.element

    def __hash__(self) -> int:
        return hash(self.element)

    def __mul__(self, other: "SigmaElement") -> "SigmaElement":
        return _sigma_lookup(self.element.rs, self.element * other.element)

    def inverse(self) -> "SigmaElement":
        return _sigma_lookup(self.element.rs, self.element.inverse())

    @property
    def is_identity(self) -> bool:
        return self.element.is_identity


def sigma_elements(rs: RootSystem) -> tuple[SigmaElement, ...]:
    """All of Sigma: the identity plus one element per special node."""
    group = _SIGMA_GROUP.get(rs)
    if group is None:
        members = [SigmaElement(ext_identity(rs), None)]
        for i in special_nodes(rs):
            members.append(SigmaElement(_pi_element(rs, i), i))
        group = tuple(members)
        _SIGMA_GROUP[rs] = group
    return group


def _pi_element(rs: RootSystem, i: int) -> ExtAffineWeylElement:
    # t_{omega_i^vee} times (longest of the parabolic without i) * (longest of W)
    u = longest_element(rs, set(rs.nodes) - {i}) * longest_element(rs)
    return translation(rs, rs.fundamental_coweight(i)) * from_finite(u)


def _sigma_lookup(rs: RootSystem, element: ExtAffineWeylElement) -> SigmaElement:
    for s in sigma_elements(rs):
        if s.element == element:
            return s
    raise ValueError("element %r is not length zero" % (element,))


def pi(rs: RootSystem, i: int) -> SigmaElement:
    """The Sigma element whose node action sends 0 to the special node i."""
    if i not in special_nodes(rs):
        raise ValueError("node %d is not special in %r" % (i, rs))
    for s in sigma_elements(rs):
        if s.node == i:
            assert s.action[0] == i
            return s
    raise AssertionError  # pragma: no cover


def sigma_identity(rs: RootSystem) -> SigmaElement:
    return sigma_elements(rs)[0]


def coweight_class_rep(rs: RootSystem, lam: Coweight) -> Coweight:
    """Representative (zero or minuscule) of lambda mod the coroot lattice."""
    zero = (0,) * rs.rank
    for rep in [zero] + [rs.fundamental_coweight(i) for i in special_nodes(rs)]:
        if rs.coweight_to_coroots(tuple(a - b for a, b in zip(lam, rep))) is not None:
            return rep
    raise AssertionError("no class representative found for %r" % (lam,))


def sigma_decompose(x: ExtAffineWeylElement) -> tuple[SigmaElement, tuple[int, ...]]:
    """x = sigma * y with y in the affine Weyl group; returns (sigma, word of y)."""
    rs = x.rs
    rep = coweight_class_rep(rs, x.lam)
    sigma = next(
        s
        for s in sigma_elements(rs)
        if coweight_class_rep(rs, s.element.lam) == rep
    )
    y = sigma.element.inverse() * x
    return sigma, affine_reduced_word(y)


def sigma_finite_part(sigma: SigmaElement) -> tuple[Coweight, WeylElement]:
    """The (gamma_sigma, u_sigma) of sigma = t_{gamma_sigma} u_sigma."""
    return sigma.element.lam, sigma.element.u
