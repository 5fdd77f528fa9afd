"""The two FWS families, their closed-form predictors, and the rational
representation mu = p(lam)/q(lam) that drives the shift-intersection counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg, poly
from .gf_tower import FieldTower
from .orbit_code import WeightDistribution
from .subspace import (
    Subspace,
    intersect,
    is_stable_under,
    shift,
    span_of,
    sum_subspaces,
)


def poly_basis(tower: FieldTower, lam: int, k: int, b: int = 1) -> list[int]:
    """b, b*lam, ..., b*lam^(k-1)."""
    out, x = [], b
    for _ in range(k):
        out.append(x)
        x = tower.mul(x, lam)
    return out


@dataclass(frozen=True)
class Family1Spec:
    tower: FieldTower
    lam: int
    k: int
    b: int = 1

    @property
    def t(self) -> int:
        return self.tower.degree_over(self.lam, 1)


@dataclass(frozen=True)
class Family2Spec:
    tower: FieldTower
    lam: int
    l: int
    b: int = 1

    @property
    def t2(self) -> int:
        return self.tower.degree_over(self.lam, 2)


def family1(spec: Family1Spec) -> Subspace:
    """b * <1, lam, ..., lam^(k-1)>_{F_q}."""
    tower = spec.tower
    if tower.in_subfield(spec.lam, 1):
        raise ValueError("lambda must lie outside F_q")
    if spec.b == 0 or spec.k < 1:
        raise ValueError("need b != 0 and k >= 1")
    S = span_of(tower, poly_basis(tower, spec.lam, spec.k, spec.b))
    if S.k != spec.k:
        raise ValueError(f"polynomial basis collapses: dim {S.k} < k = {spec.k}")
    return S


def family2(spec: Family2Spec) -> Subspace:
    """b * (<1, ..., lam^(l-1)>_{F_{q^2}} + lam^l F_q)."""
    tower = spec.tower
    if tower.n % 2:
        raise ValueError("family 2 needs n even")
    if tower.in_subfield(spec.lam, 2):
        raise ValueError("lambda must lie outside F_{q^2}")
    if spec.l < 1:
        raise ValueError("family 2 needs l >= 1")
    if spec.b == 0:
        raise ValueError("need b != 0")
    if spec.l >= spec.t2:
        raise ValueError(f"l = {spec.l} must be below [F_q2(lambda):F_q2] = {spec.t2}")
    gamma = tower.subfield(2).gamma
    powers = poly_basis(tower, spec.lam, spec.l + 1)
    gens = []
    for x in powers[:-1]:
        gens += [x, tower.mul(gamma, x)]
    S = span_of(tower, gens + [powers[-1]])
    if S.k != 2 * spec.l + 1:
        raise ValueError(f"family 2 collapses: dim {S.k} != {2 * spec.l + 1}")
    return shift(spec.b, S)


def polynomial_basis_dual(tower: FieldTower, lam: int, l: int) -> Subspace:
    """delta^{-1} <1, ..., lam^(n-l-1)> with delta = f'(lam), f the minimal polynomial of a generator lam."""
    f = tower.min_poly(lam, 1)
    if f.degree != tower.n:
        raise ValueError("lambda must generate F_{q^n} over F_q")
    dinv = tower.inv(f.derivative_at_root)
    return span_of(tower, poly_basis(tower, lam, tower.n - l, dinv))


# closed forms -----------------------------------------------------------------


def predicted_weights_family1(q: int, n: int, t: int, k: int) -> WeightDistribution:
    if n % t:
        raise ValueError("t must divide n")
    if not 1 < k < t:
        raise ValueError("need 1 < k < t")
    omega = [0] * k
    if 2 * k <= t:
        for i in range(1, k):
            omega[i - 1] = (q + 1) * q ** (2 * i - 1)
        omega[k - 1] = (q**n - q ** (2 * k - 1)) // (q - 1)
    else:
        for i in range(1, t - k):
            omega[i - 1] = (q + 1) * q ** (2 * i - 1)
        omega[t - k - 1] = (q**t - q ** (2 * (t - k) - 1)) // (q - 1)
        omega[k - 1] = (q**n - q**t) // (q - 1)
    return WeightDistribution(k, tuple(omega), (q**n - 1) // (q - 1), 1)


def fws_condition_family1(q: int, n: int, t: int, k: int) -> bool:
    return 2 * k <= t + 1 if t < n else 2 * k <= n


def fws_condition_family2(q: int, n: int, t2: int, l: int) -> bool:
    return 2 * l + 1 <= t2


# rational representation ------------------------------------------------------


@dataclass(frozen=True)
class RationalRep:
    """mu * q(lam) = p(lam); coefficients are element codes, lowest degree first."""

    p_coeffs: tuple[int, ...]
    q_coeffs: tuple[int, ...]
    max_deg: int

    @property
    def deg_p(self) -> int:
        return len(self.p_coeffs) - 1

    @property
    def deg_q(self) -> int:
        return len(self.q_coeffs) - 1


def _normalize(tower: FieldTower, p: list[int], qq: list[int]) -> tuple[list[int], list[int]]:
    dp, dq = poly.deg(p), poly.deg(qq)
    lead = p[dp] if dp >= dq else qq[dq]
    c = tower.inv(lead)
    return poly.scale(tower, c, p), poly.scale(tower, c, qq)


def rational_representation(
    tower: FieldTower, mu: int, lam: int, k: int, base_t: int = 1
) -> Optional[RationalRep]:
    """Least max-degree coprime (p, q) over F_{q^base_t} with mu = p(lam)/q(lam), max_deg <= k - 1."""
    if mu == 0:
        raise ValueError("mu must be nonzero")
    sub = tower.subfield(base_t)
    betas = sub.basis
    t = base_t
    vec = linalg.vectors(tower)
    lam_pows = poly_basis(tower, lam, k)
    for d in range(k):
        p_imgs = [tower.neg(tower.mul(beta, lam_pows[i])) for i in range(d + 1) for beta in betas]
        q_imgs = [tower.mul(mu, tower.mul(beta, lam_pows[i])) for i in range(d + 1) for beta in betas]
        ker = linalg.kernel_of_images(tower, p_imgs + q_imgs, tower.n)
        for x in ker:
            cs = vec.unpack(x, 2 * (d + 1) * t)
            p, qq = [], []
            for i in range(d + 1):
                pi = qi = 0
                for j, beta in enumerate(betas):
                    a, b = cs[i * t + j], cs[(d + 1) * t + i * t + j]
                    if a:
                        pi = tower.add(pi, tower.mul(a, beta))
                    if b:
                        qi = tower.add(qi, tower.mul(b, beta))
                p.append(pi)
                qq.append(qi)
            p, qq = poly.trim(p), poly.trim(qq)
            if not qq or poly.evaluate(tower, qq, lam) == 0:
                continue
            p, qq = _normalize(tower, p, qq)
            return RationalRep(tuple(p), tuple(qq), max(poly.deg(p), poly.deg(qq)))
    return None


def predicted_mu_dim_family1(rep: Optional[RationalRep], k: int, t: int, mu_in_subfield: bool) -> int:
    """dim(S ∩ mu S) for S = <1, ..., lam^(k-1)>, 2k <= t, from the rational representation."""
    if not mu_in_subfield or rep is None:
        return 0
    return k - rep.max_deg


def predict_family1_mu_dim(tower: FieldTower, lam: int, k: int, mu: int) -> int:
    """Both regimes; for 2k > t pass to the dual of S inside F_{q^t}, of dimension t - k."""
    t = tower.degree_over(lam, 1)
    inside = tower.in_subfield(mu, t)
    if 2 * k <= t:
        rep = rational_representation(tower, mu, lam, k) if inside else None
        return predicted_mu_dim_family1(rep, k, t, inside)
    if not inside:
        return 0
    kd = t - k
    rep = rational_representation(tower, mu, lam, kd)
    return 2 * k - t + predicted_mu_dim_family1(rep, kd, t, True)


def beta_from_rep(rep: RationalRep) -> int:
    """Leading denominator coefficient beta_r once the degree-r numerator is monic."""
    if rep.deg_p == rep.deg_q:
        return rep.q_coeffs[-1]
    return 0  # the lower-degree side sits in the denominator after inverting mu if needed


@dataclass(frozen=True)
class MuCase:
    case: str  # "fixed" | "i" | "ii" | "iii" | "boundary" | "zero"
    r: Optional[int]
    predicted_dim: int


def family2_mu_case(spec: Family2Spec, mu: int) -> MuCase:
    """Predicted dim(S ∩ mu S) for the family-2 subspace."""
    tower, l = spec.tower, spec.l
    t2 = spec.t2
    if 2 * l >= t2:
        raise ValueError(f"the case analysis needs 2l < [F_q2(lambda):F_q2] = {t2}")
    if mu == 0:
        raise ValueError("mu must be nonzero")
    if tower.in_subfield(mu, 1):
        return MuCase("fixed", 0, 2 * l + 1)
    if tower.in_subfield(mu, 2):
        return MuCase("i", 0, 2 * l)
    if not tower.in_subfield(mu, 2 * t2):
        return MuCase("zero", None, 0)
    rep = rational_representation(tower, mu, spec.lam, l + 1, base_t=2)
    if rep is None:
        return MuCase("zero", None, 0)
    r = rep.max_deg
    in_fq = tower.in_subfield(beta_from_rep(rep), 1)
    dim = 2 * (l - r) + (1 if in_fq else 0)
    if r == l:
        return MuCase("boundary", r, dim)
    return MuCase("iii" if in_fq else "ii", r, dim)


# F_{q^2} trichotomy -----------------------------------------------------------


@dataclass(frozen=True)
class Trichotomy:
    case: str  # "I" | "II" | "III"
    dim_sbar: int
    dim_s: int
    dim_y: int


def shift_trichotomy(Sbar: Subspace, b: int, mu: int) -> Trichotomy:
    """Classify mu against S = Sbar + b F_q inside Y = Sbar + b F_{q^2}."""
    tower = Sbar.tower
    if tower.n % 2:
        raise ValueError("needs n even")
    gamma = tower.subfield(2).gamma
    if not is_stable_under(Sbar, gamma):
        raise ValueError("Sbar must be an F_{q^2}-subspace")
    bline = span_of(tower, [b, tower.mul(gamma, b)])
    if intersect(Sbar, bline).k:
        raise ValueError("need b F_{q^2} ∩ Sbar = 0")
    S = sum_subspaces(Sbar, span_of(tower, [b]))
    Y = sum_subspaces(Sbar, bline)
    cap_sbar = intersect(Sbar, shift(mu, Sbar)).k
    cap_s = intersect(S, shift(mu, S))
    cap_y = intersect(Y, shift(mu, Y)).k
    ds = cap_s.k
    if cap_sbar == ds == cap_y:
        case = "I"
    elif cap_y == cap_sbar + 2 and ds in (cap_sbar, cap_sbar + 1):
        case = "II"
    elif ds == cap_sbar + 2 == cap_y - 2 and not is_stable_under(cap_s, gamma):
        case = "III"
    else:
        raise ArithmeticError(f"no trichotomy case fits dims ({cap_sbar}, {ds}, {cap_y})")
    return Trichotomy(case, cap_sbar, ds, cap_y)


# zero weights -----------------------------------------------------------------


def zero_weight_predictions(t: int, m: int, l: int, stab_degree_of_Y: int) -> set[int]:
    """Indices i with omega_2i = 0 forced for S = Sbar + b<1, ..., lam^(m-1)>, k = t*l + m."""
    if not 0 < m < t or l < 1:
        raise ValueError("need 0 < m < t and l >= 1")
    if stab_degree_of_Y % t:
        raise ValueError("H(Y) must contain F_{q^t}")
    k = t * l + m
    s = stab_degree_of_Y
    zeros: set[int] = set()
    if m < t - 1 and s == t:
        zeros.add(m + 1)
    if 2 * m > t + 1:
        zeros.update(k - j for j in range(1, 2 * m - t))
    if s > t:
        zeros.update(k - j for j in range(1, 2 * m))
    if (t, m) == (3, 2) and s == 3:
        zeros.add(2)
    return zeros
