"""Exhaustive enumeration and the theorem-checking batteries.

Every battery either returns a report or raises ``Falsification`` carrying a
serializable counterexample.  Nothing here is allowed to log-and-continue past
a failed assertion.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import linalg
from .constructions import (
    Family1Spec,
    Family2Spec,
    family1,
    family2,
    family2_mu_case,
    fws_condition_family1,
    fws_condition_family2,
    poly_basis,
    predict_family1_mu_dim,
    predicted_weights_family1,
    zero_weight_predictions,
)
from .errors import Falsification, GuardError
from .gf_tower import FieldTower, iter_frobenius_classes, tower_for
from .ntheory import gaussian_binomial
from .orbit_code import (
    OrbitCode,
    WeightDistribution,
    is_fws_distribution,
    orbit,
    weight_distribution,
)
from .subspace import (
    InvariantReport,
    Subspace,
    apply_frobenius,
    ft_span,
    intersect,
    intersection_dim,
    invariant_report,
    iter_lines,
    max_ft_subspace,
    mul_span,
    product_set_stabilizer,
    random_subspace,
    shift,
    shift_intersection_dim,
    span_of,
    span_stabilizer,
    stabilizer_degree,
    subfield_subspace,
    sum_subspaces,
)

DEFAULT_CAP = 10**5


# enumeration ------------------------------------------------------------------


def iter_subspaces(tower: FieldTower, k: int) -> Iterator[Subspace]:
    """Every k-dim subspace once, via RREF pivot patterns (pivot = lowest index)."""
    n, q = tower.n, tower.q
    vec = linalg.vectors(tower)
    for pivots in itertools.combinations(range(n), k):
        pset = set(pivots)
        free = [[j for j in range(p + 1, n) if j not in pset] for p in pivots]
        slots = [(r, j) for r, fr in enumerate(free) for j in fr]
        for values in itertools.product(range(q), repeat=len(slots)):
            rows = [vec.shift_up(1, p) for p in pivots]
            for (r, j), c in zip(slots, values):
                if c:
                    rows[r] = vec.add(rows[r], vec.shift_up(c, j))
            yield Subspace(tower, tuple(rows))


def orbit_shifts(S: Subspace, orbit_size: int) -> Iterator[tuple[int, Subspace]]:
    """(j, xi^j S) for j < orbit_size."""
    tower = S.tower
    alpha = 1
    for j in range(orbit_size):
        yield j, shift(alpha, S)
        alpha = tower.mul(alpha, tower.xi)


def canonical_rep(S: Subspace) -> tuple[Subspace, int]:
    """(least basis tuple over the orbit, exponent j with xi^j S equal to it)."""
    C = orbit(S)
    best, best_j = None, 0
    for j, T in orbit_shifts(S, C.orbit_size):
        if best is None or T.basis < best.basis:
            best, best_j = T, j
    return best, best_j


@dataclass
class OrbitEntry:
    rep: Subspace
    orbit_size: int
    stab_degree: int
    wd: WeightDistribution
    invariants: InvariantReport

    @property
    def code(self) -> OrbitCode:
        return OrbitCode(self.rep, self.stab_degree, self.orbit_size)


@dataclass
class OrbitCatalog:
    tower: FieldTower
    k: int
    orbits: list[OrbitEntry]
    total: int

    @property
    def params(self) -> dict:
        return {"q": self.tower.q, "n": self.tower.n, "k": self.k}


def enumerate_orbits(tower: FieldTower, k: int, cap: int = DEFAULT_CAP) -> OrbitCatalog:
    total = gaussian_binomial(tower.n, k, tower.q)
    if total > cap:
        raise GuardError(f"[{tower.n} choose {k}]_{tower.q} = {total} exceeds the cap {cap}")
    seen: set[tuple[int, ...]] = set()
    entries = []
    for S in iter_subspaces(tower, k):
        if S.basis in seen:
            continue
        C = orbit(S)
        members = [T for _, T in orbit_shifts(S, C.orbit_size)]
        seen.update(T.basis for T in members)
        rep = min(members, key=lambda T: T.basis)
        Crep = OrbitCode(rep, C.stab_degree, C.orbit_size)
        entries.append(OrbitEntry(rep, C.orbit_size, C.stab_degree, weight_distribution(Crep), invariant_report(rep)))
    entries.sort(key=lambda e: e.rep.basis)
    counted = sum(e.orbit_size for e in entries)
    if counted != total or len(seen) != total:
        raise Falsification(
            "orbit sizes do not add up to the Gaussian binomial",
            {"counted": counted, "distinct": len(seen), "expected": total},
        )
    return OrbitCatalog(tower, k, entries, total)


# decompositions ---------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """Structural witness.  kind is "form1", "form2", "critical_pair" or "none"."""

    kind: str
    lam: Optional[int] = None
    b: Optional[int] = None
    alpha: Optional[int] = None
    l: Optional[int] = None
    t: Optional[int] = None
    ell: Optional[int] = None
    m: Optional[int] = None
    sbar: tuple[int, ...] = ()
    case: Optional[str] = None
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.kind != "none"

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        for name in ("case", "lam", "b", "alpha", "l", "t", "ell", "m"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.sbar:
            out["sbar"] = list(self.sbar)
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        return out


def _common_preimage(S: Subspace, lam: int, r: int) -> Subspace:
    """{b : b lam^i in S for all i < r} = ∩ lam^{-i} S."""
    tower = S.tower
    inv = tower.inv(lam)
    B, cur = S, S
    for _ in range(1, r):
        cur = shift(inv, cur)
        B = intersect(B, cur)
    return B


def _complement_basis(B: Subspace, W: Subspace) -> list[int]:
    """Rows of B extending a basis of W (W ⊆ B)."""
    tower = B.tower
    piv = linalg.echelon(tower, W.basis)
    out = []
    for v in B.basis:
        before = len(piv)
        linalg.extend(tower, piv, [v])
        if len(piv) > before:
            out.append(v)
    return out


def decompose_with_witness(S: Subspace, lam: int) -> Decomposition:
    """Decompose S given lam with dim(S ∩ lam S) = k - 1 (equivalently S<1, lam> critical)."""
    tower = S.tower
    k = S.k
    t = tower.degree_over(lam, 1)
    if k < t:
        B = _common_preimage(S, lam, k)
        for b in iter_lines(B):
            if span_of(tower, poly_basis(tower, lam, k, b)) == S:
                return Decomposition("critical_pair", lam=lam, b=b, t=t, ell=0, m=k, case="i")
        return Decomposition("none", lam=lam, t=t, diagnostic="no b with S = b<1, ..., lam^(k-1)>")
    if k >= t + 1:
        Sbar = max_ft_subspace(S, t)
        ell = Sbar.k // t
        m = k - t * ell
        if not (ell > 0 and 0 < m < t):
            return Decomposition("none", lam=lam, t=t, ell=ell, m=m, diagnostic="h_t does not fit k = t*ell + m")
        Kbasis = tower.subfield(t).basis
        B = _common_preimage(S, lam, m)
        comp = _complement_basis(B, Sbar)
        if comp:
            for b in iter_lines(span_of(tower, comp)):
                if intersect(Sbar, span_of(tower, [tower.mul(b, x) for x in Kbasis])).k:
                    continue
                if sum_subspaces(Sbar, span_of(tower, poly_basis(tower, lam, m, b))) == S:
                    return Decomposition(
                        "critical_pair", lam=lam, b=b, t=t, ell=ell, m=m, sbar=Sbar.basis, case="ii"
                    )
        return Decomposition("none", lam=lam, t=t, ell=ell, m=m, diagnostic="no b completes Sbar")
    return Decomposition("none", lam=lam, t=t, diagnostic="k = [F_q(lam):F_q] admits no critical pair")


def distance_two_witnesses(S: Subspace) -> Iterator[int]:
    C = orbit(S)
    tower = S.tower
    alpha = tower.xi
    for _ in range(1, C.orbit_size):
        if shift_intersection_dim(S, alpha) == S.k - 1:
            yield alpha
        alpha = tower.mul(alpha, tower.xi)


def critical_pair_decomposition(S: Subspace) -> Decomposition:
    """First successful decomposition over the distance-2 witnesses in scan order."""
    first_fail = None
    found = False
    for lam in distance_two_witnesses(S):
        found = True
        d = decompose_with_witness(S, lam)
        if d:
            return d
        first_fail = first_fail or d
    if not found:
        raise ValueError("omega_2 = 0: no distance-2 witness exists")
    return first_fail


class FamilyIndex:
    """Canonical orbit representatives of every Form1 / Form2 subspace of dimension k."""

    def __init__(self, tower: FieldTower, k: int):
        self.tower, self.k = tower, k
        self.reps: dict[tuple[int, ...], tuple[Decomposition, int]] = {}
        self._build()

    def _add(self, S: Subspace, dec: Decomposition) -> None:
        rep, j = canonical_rep(S)
        self.reps.setdefault(rep.basis, (dec, j))

    def _build(self) -> None:
        tower, k, q, n = self.tower, self.k, self.tower.q, self.tower.n
        for lam in tower.nonzero():
            if tower.in_subfield(lam, 1):
                continue
            t = tower.degree_over(lam, 1)
            if k < t and fws_condition_family1(q, n, t, k):
                self._add(family1(Family1Spec(tower, lam, k)), Decomposition("form1", lam=lam, t=t))
        if n % 2 == 0 and k % 2 == 1:
            l = k // 2
            for lam in tower.nonzero():
                if tower.in_subfield(lam, 2):
                    continue
                t2 = tower.degree_over(lam, 2)
                if l >= 1 and fws_condition_family2(q, n, t2, l):
                    self._add(family2(Family2Spec(tower, lam, l)), Decomposition("form2", lam=lam, l=l, t=t2))

    def match(self, S: Subspace) -> Decomposition:
        rep, jS = canonical_rep(S)
        hit = self.reps.get(rep.basis)
        if hit is None:
            return Decomposition("none")
        dec, jF = hit
        # xi^jS S = rep = xi^jF F, so S = xi^(jF - jS) F
        b = self.tower.xi_pow(jF - jS)
        return Decomposition(dec.kind, lam=dec.lam, l=dec.l, t=dec.t, b=b, alpha=self.tower.inv(b))


_INDEX_CACHE: dict = {}


def family_index(tower: FieldTower, k: int) -> FamilyIndex:
    key = (tower.key, k)
    if key not in _INDEX_CACHE:
        _INDEX_CACHE[key] = FamilyIndex(tower, k)
    return _INDEX_CACHE[key]


def match_main_theorem(S: Subspace) -> Decomposition:
    """Form1 / Form2 membership of the orbit of S (b scales the family member onto S)."""
    return family_index(S.tower, S.k).match(S)


def classify_fws(tower: FieldTower, k: int, cap: int = DEFAULT_CAP, strict: bool = True) -> dict:
    """FWS orbits versus Form1 ∪ Form2 orbits over the whole Grassmannian."""
    cat = enumerate_orbits(tower, k, cap)
    index = family_index(tower, k)
    n = tower.n
    fws, form1, form2, mismatches, checks = [], [], [], [], []
    for e in cat.orbits:
        codes = list(e.rep.basis)
        is_f = e.orbit_size > 1 and is_fws_distribution(e.wd)
        dec = index.match(e.rep)
        if is_f:
            fws.append(codes)
        if dec.kind == "form1":
            form1.append(codes)
        elif dec.kind == "form2":
            form2.append(codes)
        if is_f != bool(dec):
            mismatches.append({"rep": codes, "fws": is_f, "match": dec.as_dict(), "omega": list(e.wd.omega)})
        if is_f:
            m = e.invariants.m
            bound_ok = 2 * k <= m + 1 if m < n else 2 * k <= n
            cp = critical_pair_decomposition(e.rep)
            if e.wd.omega[0] == 0 or not bound_ok or not cp:
                checks.append({"rep": codes, "m": m, "bound_ok": bound_ok, "decomposition": cp.as_dict()})
    report = {
        "params": cat.params,
        "orbit_count": len(cat.orbits),
        "subspace_count": cat.total,
        "fws": fws,
        "form1": form1,
        "form2": form2,
        "mismatches": mismatches,
        "failed_checks": checks,
    }
    if strict and (mismatches or checks):
        raise Falsification("FWS classification mismatch", report)
    return report


# batteries --------------------------------------------------------------------

THM_WEIGHT_TOWERS = [(2, 1, 4), (2, 1, 5), (2, 1, 6), (3, 1, 4), (2, 2, 4)]


def thm_weights_battery(towers: Sequence[tuple[int, int, int]] = THM_WEIGHT_TOWERS, jobs: int = 1) -> dict:
    """Brute-force family-1 distributions against the closed form, every lam and k."""
    rows = []
    for key in towers:
        tower = tower_for(*key)
        checked = 0
        for lam in tower.nonzero():
            if tower.in_subfield(lam, 1):
                continue
            t = tower.degree_over(lam, 1)
            for k in range(2, t):
                S = family1(Family1Spec(tower, lam, k))
                got = weight_distribution(orbit(S), jobs=jobs)
                want = predicted_weights_family1(tower.q, tower.n, t, k)
                if got.omega != want.omega:
                    raise Falsification(
                        "family-1 distribution differs from the closed form",
                        {"tower": list(key), "lambda": lam, "k": k, "got": list(got.omega), "want": list(want.omega)},
                    )
                checked += 1
        rows.append({"tower": list(key), "instances": checked})
    return {"battery": "thm-weights", "towers": rows, "ok": True}


MAIN_THEOREM_RUNS = [((2, 1, 4), 2), ((2, 1, 6), 2), ((2, 1, 6), 3)]


def main_theorem_battery(runs=MAIN_THEOREM_RUNS, cap: int = DEFAULT_CAP) -> dict:
    out = []
    for key, k in runs:
        rep = classify_fws(tower_for(*key), k, cap)
        out.append({
            "params": rep["params"],
            "orbit_count": rep["orbit_count"],
            "fws": len(rep["fws"]),
            "form1": len(rep["form1"]),
            "form2": len(rep["form2"]),
            "mismatches": len(rep["mismatches"]),
        })
    return {"battery": "main-theorem", "runs": out, "ok": True}


def _least_outside(tower: FieldTower, t: int, inside: Optional[int] = None) -> int:
    """Least code outside F_{q^t} (and inside F_{q^inside} when given)."""
    for a in tower.nonzero():
        if tower.in_subfield(a, t):
            continue
        if inside is None or tower.in_subfield(a, inside):
            return a
    raise ValueError("no such element")


@dataclass(frozen=True)
class ZeroWeightInstance:
    label: str
    tower: tuple[int, int, int]
    t: int
    m: int
    b_inside: Optional[int] = None
    expect: tuple[int, ...] = ()


ZERO_WEIGHT_INSTANCES = [
    ZeroWeightInstance("i", (2, 1, 9), t=3, m=1, expect=(2,)),
    ZeroWeightInstance("ii", (2, 1, 8), t=4, m=3, expect=(6,)),
    ZeroWeightInstance("iii", (2, 1, 8), t=2, m=1, b_inside=4, expect=(2,)),
    ZeroWeightInstance("iv", (2, 1, 9), t=3, m=2, expect=(2,)),
]


def build_zero_weight_instance(inst: ZeroWeightInstance) -> tuple[Subspace, Subspace, int, int]:
    """S = F_{q^t} + b<1, ..., lam^(m-1)> with lam = gamma_t; returns (S, Sbar, b, lam)."""
    tower = tower_for(*inst.tower)
    Sbar = subfield_subspace(tower, inst.t)
    lam = tower.subfield(inst.t).gamma
    b = _least_outside(tower, inst.t, inst.b_inside)
    S = sum_subspaces(Sbar, span_of(tower, poly_basis(tower, lam, inst.m, b)))
    return S, Sbar, b, lam


def zero_weight_battery(instances: Sequence[ZeroWeightInstance] = ZERO_WEIGHT_INSTANCES, jobs: int = 1) -> dict:
    rows = []
    for inst in instances:
        S, Sbar, b, lam = build_zero_weight_instance(inst)
        t, m = inst.t, inst.m
        l = Sbar.k // t
        k = t * l + m
        if S.k != k or max_ft_subspace(S, t) != Sbar:
            raise Falsification("instance does not have the intended shape", {"label": inst.label, "basis": list(S.basis)})
        sY = stabilizer_degree(ft_span(S, t))
        zeros = zero_weight_predictions(t, m, l, sY)
        wd = weight_distribution(orbit(S), jobs=jobs)
        payload = {
            "label": inst.label,
            "tower": list(inst.tower),
            "t": t, "m": m, "l": l, "k": k, "b": b, "lambda": lam,
            "stab_degree_Y": sY,
            "predicted_zero_distances": sorted(2 * i for i in zeros),
            "omega": {str(2 * (i + 1)): c for i, c in enumerate(wd.omega)},
        }
        if not set(inst.expect) <= zeros:
            raise Falsification("instance does not trigger the intended case", payload)
        bad = [2 * i for i in sorted(zeros) if wd.omega[i - 1] != 0]
        if bad:
            payload["nonzero_at"] = bad
            raise Falsification("a predicted zero weight is positive", payload)
        rows.append(payload)
    return {"battery": "zero-weights", "instances": rows, "ok": True}


KNESER_TOWERS = [(2, 1, 6), (3, 1, 4)]


def _random_critical_subspace(tower: FieldTower, rng: random.Random) -> tuple[Subspace, int]:
    """A planted S with S<1, lam> critical, plus its lam."""
    n = tower.n
    while True:
        lam = rng.randrange(2, tower.Q)
        if not tower.in_subfield(lam, 1):
            break
    t = tower.degree_over(lam, 1)
    b = rng.randrange(1, tower.Q)
    options = [("i", 0, m) for m in range(1, t)]
    options += [("ii", ell, m) for ell in range(1, n // t + 1) for m in range(1, t) if t * ell + m <= n - 2]
    _, ell, m = rng.choice(options)
    if ell == 0:
        return span_of(tower, poly_basis(tower, lam, m, b)), lam
    K = tower.subfield(t).basis
    while True:
        gens = [rng.randrange(1, tower.Q) for _ in range(ell)]
        Sbar = span_of(tower, [tower.mul(g, x) for g in gens for x in K])
        bK = span_of(tower, [tower.mul(b, x) for x in K])
        if Sbar.k == t * ell and not intersect(Sbar, bK).k:
            break
        b = rng.randrange(1, tower.Q)
    return sum_subspaces(Sbar, span_of(tower, poly_basis(tower, lam, m, b))), lam


def kneser_battery(trials: int = 1000, towers: Sequence[tuple[int, int, int]] = KNESER_TOWERS, seed: int = 0) -> dict:
    """dim<ST> >= dim S + dim T - dim H(<ST>) on seeded pairs; decompose dim-2 critical pairs.

    H is the stabilizer field of the span <ST>.  The stabilizer of the bare
    product set is also computed; pairs where the bound fails for it are
    counted in ``set_reading_violations`` but are not failures.
    """
    rows = []
    for key in towers:
        tower = tower_for(*key)
        rng = random.Random(f"kneser:{seed}:{key}")
        n = tower.n
        stats = {"pairs": 0, "equality": 0, "critical_dim2": 0, "decomposed": 0, "set_reading_violations": 0}
        for trial in range(trials):
            if trial % 4 == 3:
                S, lam = _random_critical_subspace(tower, rng)
                c = rng.randrange(1, tower.Q)
                T = span_of(tower, [c, tower.mul(c, lam)])
            else:
                S = random_subspace(tower, rng.randrange(1, n + 1), rng)
                T = random_subspace(tower, rng.randrange(1, n + 1), rng)
            D = mul_span(S, T).k
            h = span_stabilizer(S, T)
            h_set = product_set_stabilizer(S, T)
            stats["pairs"] += 1
            pair = {"tower": list(key), "S": list(S.basis), "T": list(T.basis), "dim_ST": D, "h": h, "h_set": h_set}
            if D < S.k + T.k - h:
                raise Falsification("linear Kneser bound violated", pair)
            # the stabilizer of the bare product set can be smaller than that of its span
            stats["set_reading_violations"] += D < S.k + T.k - h_set
            if D == S.k + T.k - h:
                stats["equality"] += 1
            if T.k == 2 and D == S.k + 1 and S.k + 2 <= n:
                stats["critical_dim2"] += 1
                t1, t2 = T.basis
                dec = decompose_with_witness(S, tower.div(t2, t1))
                if not dec:
                    pair["decomposition"] = dec.as_dict()
                    raise Falsification("critical pair does not decompose", pair)
                stats["decomposed"] += 1
        rows.append({"tower": list(key), **stats})
    return {"battery": "kneser", "seed": seed, "trials": trials, "towers": rows, "ok": True}


INVARIANT_TOWERS = [(2, 1, 4), (2, 1, 5), (2, 1, 6), (3, 1, 4), (2, 2, 4), (2, 1, 8)]


def check_invariants(S: Subspace, rng: random.Random) -> dict:
    """Per-subspace invariant suite; returns stats or raises Falsification."""
    tower = S.tower
    n, k = tower.n, S.k
    C = orbit(S)
    wd = weight_distribution(C)
    rep = invariant_report(S)
    ctx = {"tower": [tower.p, tower.e, n], "S": list(S.basis)}

    def fail(msg, **extra):
        raise Falsification(msg, {**ctx, **extra})

    if wd.total() != C.orbit_size - 1:
        fail("omega does not sum to orbit_size - 1", omega=list(wd.omega))
    s = C.stab_degree
    if rep.stab_degree != s or n % s or k % s:
        fail("stabilizer degree does not divide gcd(k, n)", s=s)
    for i, c in enumerate(wd.omega, start=1):
        if c and (k - i) % s:
            fail("congruence k = i mod s violated", i=i, s=s)
    for t in tower.divisors:
        if not t * rep.h[t] <= k <= t * rep.delta[t]:
            fail("t*h_t <= k <= t*delta_t violated", t=t)
    # isometry invariance
    alpha = rng.randrange(1, tower.Q)
    i = rng.randrange(tower.n)
    S2 = apply_frobenius(shift(alpha, S), i)
    rep2 = invariant_report(S2)
    if (rep2.stab_degree, rep2.m, rep2.delta, rep2.h) != (rep.stab_degree, rep.m, rep.delta, rep.h):
        fail("invariants change under a Frobenius isometry", alpha=alpha, i=i)
    wd2 = weight_distribution(orbit(S2))
    if wd2.omega != wd.omega:
        fail("distribution changes under a Frobenius isometry", alpha=alpha, i=i)
    # Grassmann
    T = random_subspace(tower, rng.randrange(0, n + 1), rng)
    cap = intersect(S, T).k
    if cap + sum_subspaces(S, T).k != k + T.k or cap != intersection_dim(S, T):
        fail("Grassmann identity violated", T=list(T.basis))
    # necessity bounds
    m = rep.m
    if m < n and k >= 2 and wd.omega[k - 2] and not 2 * k <= m + 1:
        fail("omega_{2k-2} > 0 with m < n but k > (m+1)/2", m=m)
    if m == n and wd.omega[k - 1] and not 2 * k <= n:
        fail("omega_{2k} > 0 with m = n but k > n/2", m=m)
    fws = C.orbit_size > 1 and is_fws_distribution(wd)
    if fws and not (2 * k <= m + 1 if m < n else 2 * k <= n):
        fail("FWS code breaks the necessity bound", m=m)
    return {"fws": fws}


def invariant_battery(count: int = 500, towers=INVARIANT_TOWERS, seed: int = 0) -> dict:
    rng = random.Random(f"invariants:{seed}")
    fws = 0
    per_tower = {str(list(t)): 0 for t in towers}
    for r in range(count):
        key = towers[r % len(towers)]
        tower = tower_for(*key)
        S = random_subspace(tower, rng.randrange(1, tower.n + 1), rng)
        fws += check_invariants(S, rng)["fws"]
        per_tower[str(list(key))] += 1
    return {"battery": "invariants", "seed": seed, "subspaces": count, "fws_instances": fws, "per_tower": per_tower, "ok": True}


def mu_sweep(tower: FieldTower) -> dict:
    """Every prediction against the brute-force dim(S ∩ mu S), all mu != 0.

    One lam per Frobenius class: lam -> lam^q maps S to an isometric copy.
    """
    stats = {"family1_checks": 0, "family2_checks": 0}
    for lam in iter_frobenius_classes(tower):
        if tower.in_subfield(lam, 1):
            continue
        t = tower.degree_over(lam, 1)
        for k in range(2, t):
            S = family1(Family1Spec(tower, lam, k))
            for mu in tower.nonzero():
                got = shift_intersection_dim(S, mu)
                want = predict_family1_mu_dim(tower, lam, k, mu)
                if got != want:
                    raise Falsification("family-1 mu prediction wrong", {"lambda": lam, "k": k, "mu": mu, "got": got, "want": want})
                stats["family1_checks"] += 1
    if tower.n % 2 == 0:
        for lam in iter_frobenius_classes(tower):
            if tower.in_subfield(lam, 2):
                continue
            t2 = tower.degree_over(lam, 2)
            for l in range(1, (t2 + 1) // 2):
                spec = Family2Spec(tower, lam, l)
                S = family2(spec)
                for mu in tower.nonzero():
                    got = shift_intersection_dim(S, mu)
                    case = family2_mu_case(spec, mu)
                    if got != case.predicted_dim:
                        raise Falsification(
                            "family-2 mu prediction wrong",
                            {"lambda": lam, "l": l, "mu": mu, "got": got, "case": case.case, "want": case.predicted_dim},
                        )
                    stats["family2_checks"] += 1
    return {"tower": [tower.p, tower.e, tower.n], **stats}
