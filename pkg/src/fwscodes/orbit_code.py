"""One-orbit cyclic subspace codes and their distance distributions."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import linalg
from .subspace import Subspace, intersection_dim, shift, stabilizer_degree


def distance(S: Subspace, T: Subspace) -> int:
    """Subspace distance 2k - 2 dim(S ∩ T)."""
    if S.k != T.k:
        raise ValueError(f"dimension mismatch: {S.k} vs {T.k}")
    return 2 * (S.k - intersection_dim(S, T))


@dataclass(frozen=True)
class OrbitCode:
    rep: Subspace
    stab_degree: int
    orbit_size: int

    @property
    def k(self) -> int:
        return self.rep.k

    @property
    def tower(self):
        return self.rep.tower

    def codewords(self) -> Iterator[Subspace]:
        """shift(xi^j, rep) for j = 0 .. orbit_size - 1, all distinct."""
        tower = self.tower
        alpha = 1
        for _ in range(self.orbit_size):
            yield shift(alpha, self.rep)
            alpha = tower.mul(alpha, tower.xi)


def orbit(S: Subspace) -> OrbitCode:
    if not S.basis:
        raise ValueError("the zero subspace has no orbit code")
    s = stabilizer_degree(S)
    tower = S.tower
    return OrbitCode(S, s, (tower.Q - 1) // (tower.q**s - 1))


@dataclass(frozen=True)
class WeightDistribution:
    """omega[i - 1] = number of codewords at distance 2i from the representative."""

    k: int
    omega: tuple[int, ...]
    orbit_size: int | None = None
    stab_degree: int | None = None

    def __getitem__(self, distance: int) -> int:
        """omega_d for an even distance d."""
        if distance % 2 or not 2 <= distance <= 2 * self.k:
            raise KeyError(distance)
        return self.omega[distance // 2 - 1]

    def as_dict(self) -> dict:
        return {2 * (i + 1): c for i, c in enumerate(self.omega)}

    def total(self) -> int:
        return sum(self.omega)


def _tally(rep_basis: tuple[int, ...], tower, j_lo: int, j_hi: int) -> list[int]:
    """Counts of dim(S ∩ xi^j S) over j in [j_lo, j_hi), indexed by dimension."""
    k = len(rep_basis)
    counts = [0] * (k + 1)
    mul = tower.mul
    base = linalg.echelon(tower, rep_basis)
    alpha = tower.xi_pow(j_lo)
    for _ in range(j_lo, j_hi):
        piv = linalg.extend(tower, dict(base), [mul(alpha, b) for b in rep_basis])
        counts[2 * k - len(piv)] += 1
        alpha = mul(alpha, tower.xi)
    return counts


def _tally_job(args) -> list[int]:
    return _tally(*args)


def weight_distribution(C: OrbitCode, jobs: int = 1) -> WeightDistribution:
    """Exhaustive scan of d(S, xi^j S) over the non-identity codewords."""
    rep, tower, k = C.rep, C.tower, C.k
    N = C.orbit_size
    if jobs > 1 and N > 256:
        step = -(-(N - 1) // jobs)
        chunks = [(rep.basis, tower, lo, min(lo + step, N)) for lo in range(1, N, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_tally_job, chunks))
        counts = [sum(col) for col in zip(*parts)]
    else:
        counts = _tally(rep.basis, tower, 1, N)
    # dim(S ∩ alpha S) = k - i  <=>  distance 2i
    omega = tuple(counts[k - i] for i in range(1, k + 1))
    return WeightDistribution(k, omega, N, C.stab_degree)


def min_distance(C: OrbitCode, wd: WeightDistribution | None = None) -> int:
    if C.orbit_size < 2:
        raise ValueError("a one-codeword orbit has no minimum distance")
    wd = wd or weight_distribution(C)
    return next(2 * (i + 1) for i, c in enumerate(wd.omega) if c)


def is_r_fws_distribution(wd: WeightDistribution, r: int) -> bool:
    """Top r distances absent, every smaller distance present."""
    if not 0 <= r <= wd.k:
        raise ValueError("r must lie in 0..k")
    cut = wd.k - r
    return all(c > 0 for c in wd.omega[:cut]) and all(c == 0 for c in wd.omega[cut:])


def is_fws_distribution(wd: WeightDistribution) -> bool:
    return is_r_fws_distribution(wd, 0)


def is_fws(C: OrbitCode, wd: WeightDistribution | None = None) -> bool:
    return is_fws_distribution(wd or weight_distribution(C))


def is_r_fws(C: OrbitCode, r: int, wd: WeightDistribution | None = None) -> bool:
    return is_r_fws_distribution(wd or weight_distribution(C), r)
