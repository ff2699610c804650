"""Brieskorn homology spheres as Seifert data and star-shaped plumbings.

Conventions.  For a pairwise coprime triple (a1, a2, a3) with each index
>= 2 the Seifert data is normalized on the negative-definite side: writing
a = a1*a2*a3, each arm residue beta_i is the unique solution of

    (a / alpha_i) * beta_i = -1  (mod alpha_i),   0 < beta_i < alpha_i,

and the central weight b = (-1 - sum beta_i * a/alpha_i) / a is an integer.
This pins the Euler number e = b + sum beta_i/alpha_i to exactly -1/a (the
homology-sphere condition).  Arm i of the star plumbing is the negative
continued fraction chain of -alpha_i/beta_i, attached to the center at the
chain's first term.  The orientation convention is fixed once and for all;
the Rohlin invariant mod 2 does not depend on it.

The signature of the Milnor fiber is computed by counting lattice points:
over 1 <= i < a1, 1 <= j < a2, 1 <= k < a3, reduce
s = i/a1 + j/a2 + k/a3 into (0, 2) mod 2; points with s in (0, 1) count +1,
points with s in (1, 2) count -1 (s is never an integer by coprimality).
``brieskorn_signature`` is the direct triple loop and serves as the oracle;
``brieskorn_signature_fast`` counts the same points per (i, j) pair with
exact integer window arithmetic and must agree everywhere.

For an all-odd triple the Milnor fiber is spin and sigma/8 mod 2 is the
Rohlin invariant; this is one of the two independent routes to mu (the
other goes through the plumbing mu-bar in the lattice module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import bezout, neg_cont_frac
from .errors import DomainError, ParityError
from .graphs import PlumbingGraph

__all__ = [
    "BrieskornTriple",
    "SeifertData",
    "brieskorn_seifert",
    "star_plumbing",
    "all_odd",
    "brieskorn_signature",
    "brieskorn_signature_fast",
    "rohlin_from_signature",
]


@dataclass(frozen=True)
class BrieskornTriple:
    """Pairwise coprime multiplicities, each >= 2, stored sorted ascending."""

    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        a1, a2, a3 = sorted((int(self.a1), int(self.a2), int(self.a3)))
        if a1 < 2:
            raise DomainError(f"indices must be >= 2, got {a1}")
        if gcd(a1, a2) != 1 or gcd(a1, a3) != 1 or gcd(a2, a3) != 1:
            raise DomainError(f"indices ({a1}, {a2}, {a3}) are not pairwise coprime")
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "a3", a3)

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    @property
    def product(self) -> int:
        return self.a1 * self.a2 * self.a3


@dataclass(frozen=True)
class SeifertData:
    """Central weight b plus (alpha, beta) arm pairs, 0 < beta < alpha."""

    b: int
    arms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arms = tuple((int(a), int(b)) for a, b in self.arms)
        for alpha, beta in arms:
            if alpha < 2 or not 0 < beta < alpha:
                raise DomainError(f"bad arm ({alpha}, {beta})")
            if gcd(alpha, beta) != 1:
                raise DomainError(f"arm ({alpha}, {beta}) not coprime")
        object.__setattr__(self, "b", int(self.b))
        object.__setattr__(self, "arms", arms)

    def euler_number(self) -> Fraction:
        return self.b + sum(Fraction(beta, alpha) for alpha, beta in self.arms)


def all_odd(t: BrieskornTriple) -> bool:
    """True iff all three indices are odd, the criterion under which the
    circle-action involution (multiplication by -1) is free."""
    return all(a % 2 == 1 for a in t.indices)


def brieskorn_seifert(t: BrieskornTriple) -> SeifertData:
    """Seifert data of the Brieskorn sphere with e = -1/(a1*a2*a3)."""
    a = t.product
    arms = []
    acc = 0
    for alpha in t.indices:
        co = a // alpha
        g, u, _ = bezout(co, alpha)  # u inverts co mod alpha (g = 1 by coprimality)
        assert g == 1
        beta = (-u) % alpha
        assert 0 < beta < alpha and (co * beta) % alpha == alpha - 1
        arms.append((alpha, beta))
        acc += beta * co
    b, rem = divmod(-1 - acc, a)
    assert rem == 0, "central weight must be integral"
    data = SeifertData(b=b, arms=tuple(arms))
    assert data.euler_number() == Fraction(-1, a)
    return data


def star_plumbing(s: SeifertData) -> PlumbingGraph:
    """Star-shaped plumbing tree of the Seifert data: central vertex ``c``
    of weight b; arm i is the chain neg_cont_frac(-alpha_i/beta_i) with its
    first term adjacent to the center.  Arm vertices are named by an arm
    letter (u, v, w, ...) plus a 1-based position, zero-padded so sorted id
    order walks each chain outward."""
    letters = "uvwxyz"
    if len(s.arms) > len(letters):
        raise DomainError("more than six arms are not supported")
    weights = {"c": s.b}
    edges = []
    for letter, (alpha, beta) in zip(letters, s.arms):
        chain = neg_cont_frac(Fraction(-alpha, beta))
        width = len(str(len(chain)))
        prev = "c"
        for pos, w in enumerate(chain, start=1):
            vid = f"{letter}{pos:0{width}d}"
            weights[vid] = w
            edges.append((prev, vid))
            prev = vid
    return PlumbingGraph.build(weights, edges)


def brieskorn_signature(t: BrieskornTriple) -> int:
    """Milnor-fiber signature by direct enumeration of all
    (a1-1)(a2-1)(a3-1) lattice points.  O(a1*a2*a3); the unimpeachable
    oracle the fast variant is tested against."""
    a1, a2, a3 = t.indices
    n = t.product
    two_n = 2 * n
    bc = a2 * a3
    ac = a1 * a3
    ab = a1 * a2
    k_terms = [k * ab for k in range(1, a3)]
    pos = neg = 0
    for i in range(1, a1):
        x = i * bc
        for j in range(1, a2):
            y = x + j * ac
            for kt in k_terms:
                s = (y + kt) % two_n
                assert s != 0 and s != n  # never integral, by coprimality
                if s < n:
                    pos += 1
                else:
                    neg += 1
    return pos - neg


def brieskorn_signature_fast(t: BrieskornTriple) -> int:
    """Same signature in O(a1*a2): for each (i, j) the +1 points are the
    integers k in (0, a3*(m-u)/m) or (a3*(2m-u)/m, a3) with m = a1*a2 and
    u = i*a2 + j*a1; the window endpoints are never integers, so exact
    floor counts suffice."""
    a1, a2, a3 = t.indices
    m = a1 * a2
    total = (a1 - 1) * (a2 - 1) * (a3 - 1)
    pos = 0
    for i in range(1, a1):
        base = i * a2
        for j in range(1, a2):
            u = base + j * a1  # s = u/m + k/a3 with u/m in (0, 2)
            # k in [1, a3-1] with s in (0, 1): k < a3*(m-u)/m
            hi = (a3 * (m - u) - 1) // m
            if hi > 0:
                pos += min(hi, a3 - 1)
            # k in [1, a3-1] with s in (2, 3): k > a3*(2m-u)/m
            lo = a3 * (2 * m - u) // m + 1
            if lo <= a3 - 1:
                pos += a3 - lo
    return 2 * pos - total


def rohlin_from_signature(t: BrieskornTriple) -> int:
    """Rohlin invariant (sigma/8 mod 2) from the lattice-count signature.

    Only valid for all-odd triples (spin Milnor fiber); the divisibility
    sigma = 0 (mod 8) is checked rather than assumed.  Uses the fast
    counting variant, which the tests hold equal to the brute force.
    """
    if not all_odd(t):
        raise DomainError(
            f"signature route to the Rohlin invariant needs all indices odd, got {t.indices}"
        )
    sig = brieskorn_signature_fast(t)
    if sig % 8:
        raise ParityError(f"signature {sig} of {t.indices} is not divisible by 8")
    return (sig // 8) % 2
