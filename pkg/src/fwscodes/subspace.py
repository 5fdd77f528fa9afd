"""F_q-subspaces of F_{q^n} in canonical reduced row echelon form.

A subspace is stored as the tuple of its RREF basis rows, each row being the
code of a field element (codes double as F_q-coordinate vectors).  Because
the RREF of a row space is unique, equality and hashing are on that tuple.
"""

from __future__ import annotations

import itertools
import random
from math import gcd
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import GuardError
from .gf_tower import FieldTower
from .ntheory import divisors

PRODUCT_SET_GUARD = 1 << 22


@dataclass(frozen=True, eq=False)
class Subspace:
    tower: FieldTower = field(repr=False)
    basis: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis and self.tower == other.tower

    def __hash__(self) -> int:
        return hash(self.basis)

    def __len__(self) -> int:
        return self.tower.q ** self.k

    def __contains__(self, a: int) -> bool:
        return linalg.reduce(self.tower, a, self.basis) == 0

    def __iter__(self) -> Iterator[int]:
        return iter_elements(self)

    def matrix(self) -> list[list[int]]:
        """Basis rows as F_q coordinate lists of length n."""
        return [self.tower.coeffs(b) for b in self.basis]

    def is_zero(self) -> bool:
        return not self.basis


def _same_tower(*spaces: Subspace) -> FieldTower:
    tower = spaces[0].tower
    for S in spaces[1:]:
        if S.tower != tower:
            raise ValueError("subspaces live in different towers")
    return tower


def span_of(tower: FieldTower, elems: Iterable[int]) -> Subspace:
    """F_q-span of the given elements."""
    elems = [tower.check(a) for a in elems]
    return Subspace(tower, linalg.rref(tower, elems))


def from_matrix(tower: FieldTower, rows: Sequence[Sequence[int]]) -> Subspace:
    """Row space of a matrix of F_q codes (defensively re-canonicalized)."""
    return span_of(tower, [tower.from_coeffs(list(r)) for r in rows])


def zero_subspace(tower: FieldTower) -> Subspace:
    return Subspace(tower, ())


def full_space(tower: FieldTower) -> Subspace:
    return span_of(tower, [tower.q**j for j in range(tower.n)])


def subfield_subspace(tower: FieldTower, t: int) -> Subspace:
    """F_{q^t} as an F_q-subspace."""
    return Subspace(tower, tower.subfield(t).basis)


def iter_elements(S: Subspace) -> Iterator[int]:
    """All q^k elements of S (0 first)."""
    tower = S.tower
    vec = linalg.vectors(tower)
    for coeffs in itertools.product(range(tower.q), repeat=S.k):
        v = 0
        for c, b in zip(coeffs, S.basis):
            if c:
                v = vec.add(v, vec.scale(c, b))
        yield v


def iter_lines(S: Subspace) -> Iterator[int]:
    """One normalized element per 1-dim subspace of S (first nonzero coefficient 1)."""
    tower = S.tower
    vec = linalg.vectors(tower)
    q, k = tower.q, S.k
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            v = S.basis[lead]
            for c, b in zip(tail, S.basis[lead + 1 :]):
                if c:
                    v = vec.add(v, vec.scale(c, b))
            yield v


def random_subspace(tower: FieldTower, k: int, rng: random.Random) -> Subspace:
    if not 0 <= k <= tower.n:
        raise ValueError("dimension out of range")
    rows: list[int] = []
    while len(rows) < k:
        a = rng.randrange(1, tower.Q)
        if linalg.rank(tower, rows + [a]) > len(rows):
            rows.append(a)
    return span_of(tower, rows)


# basic operations -----------------------------------------------------------


def shift(alpha: int, S: Subspace) -> Subspace:
    """alpha * S."""
    if alpha == 0:
        raise ValueError("shift by zero")
    if alpha == 1:
        return S
    tower = S.tower
    mul = tower.mul
    return Subspace(tower, linalg.rref(tower, [mul(alpha, b) for b in S.basis]))


def sum_subspaces(S: Subspace, T: Subspace) -> Subspace:
    tower = _same_tower(S, T)
    return Subspace(tower, linalg.rref(tower, S.basis + T.basis))


def intersect(S: Subspace, T: Subspace) -> Subspace:
    """S ∩ T via the kernel of (x, y) -> sum x_i s_i - sum y_j t_j."""
    tower = _same_tower(S, T)
    if not S.basis or not T.basis:
        return zero_subspace(tower)
    vec = linalg.vectors(tower)
    images = list(S.basis) + [tower.neg(t) for t in T.basis]
    ker = linalg.kernel_of_images(tower, images, tower.n)
    elems = []
    for x in ker:
        v = 0
        for i, b in enumerate(S.basis):
            c = vec.digit(x, i)
            if c:
                v = vec.add(v, vec.scale(c, b))
        elems.append(v)
    return Subspace(tower, linalg.rref(tower, elems))


def intersect_zassenhaus(S: Subspace, T: Subspace) -> Subspace:
    """S ∩ T via the Zassenhaus sum/intersection algorithm."""
    tower = _same_tower(S, T)
    _, cap = linalg.zassenhaus(tower, S.basis, T.basis, tower.n)
    return Subspace(tower, cap)


def intersection_dim(S: Subspace, T: Subspace) -> int:
    """dim(S ∩ T) = dim S + dim T - dim(S + T)."""
    tower = S.tower
    return S.k + T.k - linalg.rank(tower, S.basis + T.basis)


def shift_intersection_dim(S: Subspace, alpha: int) -> int:
    """dim(S ∩ alpha S) without canonicalizing alpha S."""
    tower = S.tower
    mul = tower.mul
    return 2 * S.k - linalg.rank(tower, S.basis + tuple(mul(alpha, b) for b in S.basis))


def _trace_table(tower: FieldTower) -> list[int]:
    tab = tower.__dict__.get("_trace_of_basis")
    if tab is None:
        tab = [tower.trace(tower.q**j) for j in range(tower.n)]
        object.__setattr__(tower, "_trace_of_basis", tab)
    return tab


def trace_form(tower: FieldTower, a: int, b: int) -> int:
    """Tr(a*b) computed from the F_q-coordinates of a*b."""
    vec = linalg.vectors(tower)
    ab = tower.mul(a, b)
    tab = _trace_table(tower)
    acc = 0
    for j in range(tower.n):
        c = vec.digit(ab, j)
        if c:
            acc = tower.add(acc, tower.mul(c, tab[j]))
    return acc


def gram_matrix(tower: FieldTower) -> list[list[int]]:
    """G_ij = Tr(x^i x^j) over the standard basis."""
    n, q = tower.n, tower.q
    return [[trace_form(tower, q**i, q**j) for j in range(n)] for i in range(n)]


def dual(S: Subspace) -> Subspace:
    """Trace dual {a : Tr(a b) = 0 for all b in S}."""
    tower = S.tower
    if not S.basis:
        return full_space(tower)
    vec = linalg.vectors(tower)
    k = S.k
    images = []
    for j in range(tower.n):
        xj = tower.q**j
        row = [trace_form(tower, xj, b) for b in S.basis]
        images.append(vec.pack(row) if k else 0)
    ker = linalg.kernel_of_images(tower, images, k)
    return Subspace(tower, linalg.rref(tower, ker))


def apply_frobenius(S: Subspace, i: int) -> Subspace:
    tower = S.tower
    return Subspace(tower, linalg.rref(tower, [tower.frobenius(b, i) for b in S.basis]))


def mul_span(S: Subspace, T: Subspace) -> Subspace:
    """F_q-span of all products s*t."""
    tower = _same_tower(S, T)
    mul = tower.mul
    return Subspace(tower, linalg.rref(tower, [mul(a, b) for a in S.basis for b in T.basis]))


# stabilizers and invariants -------------------------------------------------


def _require_nonzero(S: Subspace, what: str) -> None:
    if not S.basis:
        raise ValueError(f"{what} is undefined for the zero subspace")


def is_stable_under(S: Subspace, gamma: int) -> bool:
    """gamma * S == S, checked by reducing gamma * b against S."""
    tower = S.tower
    return all(linalg.reduce(tower, tower.mul(gamma, b), S.basis) == 0 for b in S.basis)


def stabilizer_degree(S: Subspace) -> int:
    """s with H(S) = F_{q^s}: largest s | gcd(k, n) with gamma_s S = S."""
    _require_nonzero(S, "stabilizer")
    tower = S.tower
    for s in reversed(divisors(gcd(S.k, tower.n))):
        if s == 1 or is_stable_under(S, tower.subfield(s).gamma):
            return s
    return 1


def ft_span(S: Subspace, t: int) -> Subspace:
    """<S>_{F_{q^t}}, by closing S under multiplication by gamma_t."""
    tower = S.tower
    tower._require_divisor(t)
    if t == 1 or not S.basis:
        return S
    gamma = tower.subfield(t).gamma
    W = S
    while True:
        grown = Subspace(tower, linalg.rref(tower, W.basis + tuple(tower.mul(gamma, b) for b in W.basis)))
        if grown.k == W.k:
            return W
        W = grown


def ft_span_dim(S: Subspace, t: int) -> int:
    """delta_t(S)."""
    return ft_span(S, t).k // t


def max_ft_subspace(S: Subspace, t: int) -> Subspace:
    """Largest F_{q^t}-subspace inside S, by W <- W ∩ gamma_t W to a fixed point."""
    tower = S.tower
    tower._require_divisor(t)
    if t == 1:
        return S
    gamma = tower.subfield(t).gamma
    W = S
    while W.basis:
        nxt = intersect_zassenhaus(W, shift(gamma, W))
        if nxt.k == W.k:
            return W
        W = nxt
    return W


def h_t(S: Subspace, t: int) -> int:
    return max_ft_subspace(S, t).k // t


def m_of(S: Subspace) -> int:
    """m(S): least divisor t of n with delta_t(S) = 1."""
    _require_nonzero(S, "m")
    for t in S.tower.divisors:
        if ft_span_dim(S, t) == 1:
            return t
    return S.tower.n  # unreachable: delta_n = 1


def is_generic(S: Subspace) -> bool:
    return m_of(S) == S.tower.n


def product_set(S: Subspace, T: Subspace, guard: int = PRODUCT_SET_GUARD) -> set[int]:
    tower = _same_tower(S, T)
    if len(S) * len(T) > guard:
        raise GuardError(f"product set |S|*|T| = {len(S) * len(T)} exceeds {guard}")
    mul = tower.mul
    Tel = list(iter_elements(T))
    return {mul(a, b) for a in iter_elements(S) for b in Tel}


def product_set_stabilizer(S: Subspace, T: Subspace, guard: int = PRODUCT_SET_GUARD) -> int:
    """Largest s | n with gamma_s * P ⊆ P for the product set P = {s t}."""
    tower = S.tower
    P = product_set(S, T, guard)
    mul = tower.mul
    for s in reversed(tower.divisors):
        if s == 1:
            return 1
        gamma = tower.subfield(s).gamma
        if all(mul(gamma, x) in P for x in P):
            return s
    return 1


def span_stabilizer(S: Subspace, T: Subspace) -> int:
    """Stabilizer degree of <ST> (the linear-span reading of H(ST))."""
    return stabilizer_degree(mul_span(S, T))


@dataclass(frozen=True)
class InvariantReport:
    k: int
    stab_degree: int
    m: int
    delta: dict
    h: dict
    generic: bool

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "stab_degree": self.stab_degree,
            "m": self.m,
            "delta": {str(t): v for t, v in self.delta.items()},
            "h": {str(t): v for t, v in self.h.items()},
            "generic": self.generic,
        }


def invariant_report(S: Subspace) -> InvariantReport:
    _require_nonzero(S, "invariant report")
    divs = S.tower.divisors
    delta = {t: ft_span_dim(S, t) for t in divs}
    m = next(t for t in divs if delta[t] == 1)
    return InvariantReport(
        k=S.k,
        stab_degree=stabilizer_degree(S),
        m=m,
        delta=delta,
        h={t: h_t(S, t) for t in divs},
        generic=m == S.tower.n,
    )
