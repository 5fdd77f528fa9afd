"""JSON / CSV wire formats and human-friendly element parsing."""

from __future__ import annotations

import json
import re
from typing import Any, Optional

from .constructions import Family1Spec, Family2Spec, family1, family2
from .gf_tower import DEFAULT_GUARD_BITS, FieldTower
from .orbit_code import WeightDistribution
from .subspace import Subspace, from_matrix

_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([a-z])(?:\^(\d+))?)?$")


def parse_poly(text: str, var: Optional[str] = None) -> list[int]:
    """'x^3+x+1' -> [1, 1, 0, 1]; coefficients are integer codes, '2*x^2' or '2x^2'."""
    s = text.replace(" ", "").lower()
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        mt = _TERM.match(term)
        if not term or not mt or (mt.group(1) is None and mt.group(2) is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        c = int(mt.group(1)) if mt.group(1) is not None else 1
        if mt.group(2) is None:
            d = 0
        else:
            if var is not None and mt.group(2) != var:
                raise ValueError(f"unexpected variable {mt.group(2)!r} in {text!r}")
            d = int(mt.group(3)) if mt.group(3) is not None else 1
        if d in coeffs:
            raise ValueError(f"repeated degree {d} in {text!r}")
        coeffs[d] = c
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return out


def parse_element(tower: FieldTower, text: str | int) -> int:
    """An element given as an integer code or as a polynomial in x."""
    if isinstance(text, int):
        return tower.check(text)
    s = str(text).strip()
    if re.fullmatch(r"\d+", s):
        return tower.check(int(s))
    cs = parse_poly(s, "x")
    if len(cs) > tower.n:
        raise ValueError(f"{text!r} has degree >= n = {tower.n}")
    return tower.from_coeffs(cs)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# towers -----------------------------------------------------------------------


def tower_to_json(tower: FieldTower) -> dict:
    return tower.descriptor()


def tower_from_json(d: dict, guard_bits: Optional[int] = DEFAULT_GUARD_BITS) -> FieldTower:
    return FieldTower.from_descriptor(d, guard_bits=guard_bits)


# subspaces --------------------------------------------------------------------


def subspace_to_json(S: Subspace) -> dict:
    return {"tower": tower_to_json(S.tower), "basis": S.matrix()}


def subspace_from_json(d: dict, tower: Optional[FieldTower] = None, guard_bits: Optional[int] = DEFAULT_GUARD_BITS) -> Subspace:
    """Read a subspace; rows are re-canonicalized.  An explicit tower must agree with the embedded one."""
    embedded = d.get("tower")
    if isinstance(embedded, dict):
        t2 = tower_from_json(embedded, guard_bits)
        if tower is not None and t2 != tower:
            raise ValueError("subspace file was written for a different tower")
        tower = t2
    if tower is None:
        raise ValueError("no tower given for the subspace")
    rows = d.get("basis", [])
    out_rows = []
    for r in rows:
        if isinstance(r, int):
            out_rows.append(tower.coeffs(tower.check(r)))
        else:
            if len(r) != tower.n:
                raise ValueError(f"basis rows must have length n = {tower.n}")
            out_rows.append([int(c) for c in r])
    return from_matrix(tower, out_rows)


# distributions ----------------------------------------------------------------


def distribution_to_json(wd: WeightDistribution) -> dict:
    return {
        "k": wd.k,
        "orbit_size": wd.orbit_size,
        "stab_degree": wd.stab_degree,
        "omega": {str(d): c for d, c in wd.as_dict().items()},
    }


def distribution_from_json(d: dict) -> WeightDistribution:
    k = int(d["k"])
    om = d["omega"]
    omega = tuple(int(om.get(str(2 * i), 0)) for i in range(1, k + 1))
    return WeightDistribution(k, omega, d.get("orbit_size"), d.get("stab_degree"))


def distribution_csv(wd: WeightDistribution) -> str:
    lines = ["distance,count"]
    lines += [f"{d},{c}" for d, c in wd.as_dict().items()]
    return "\n".join(lines) + "\n"


# family specs -----------------------------------------------------------------


def family_spec_to_json(spec: Family1Spec | Family2Spec) -> dict:
    if isinstance(spec, Family1Spec):
        out = {"family": 1, "lambda": spec.lam, "k": spec.k}
        if spec.b != 1:
            out["b"] = spec.b
        return out
    out = {"family": 2, "lambda": spec.lam, "l": spec.l}
    if spec.b != 1:
        out["b"] = spec.b
    return out


def family_spec_from_json(tower: FieldTower, d: dict) -> Family1Spec | Family2Spec:
    fam = int(d["family"])
    lam = parse_element(tower, d["lambda"])
    if fam == 1:
        return Family1Spec(tower, lam, int(d["k"]), parse_element(tower, d.get("b", 1)))
    if fam == 2:
        return Family2Spec(tower, lam, int(d["l"]), parse_element(tower, d.get("b", 1)))
    raise ValueError(f"unknown family {fam}")


def build_family(spec: Family1Spec | Family2Spec) -> Subspace:
    return family1(spec) if isinstance(spec, Family1Spec) else family2(spec)
