"""Dense univariate polynomials over a finite field.

A polynomial is a list of coefficient codes, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  The field argument ``F`` is
any object exposing ``add``, ``sub``, ``mul``, ``inv`` on integer codes, with
0 and 1 as the neutral elements.
"""

from __future__ import annotations

from typing import Sequence

Poly = list[int]


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: Sequence[int]) -> int:
    """Degree, with deg(0) = -1."""
    return len(trim(a)) - 1


def add(F, a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out)


def sub(F, a: Sequence[int], b: Sequence[int]) -> Poly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.sub(out[i], c)
    return trim(out)


def scale(F, c: int, a: Sequence[int]) -> Poly:
    return trim(F.mul(c, x) for x in a)


def mul(F, a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(F, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    qt = [0] * max(0, len(r) - db)
    while len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c = F.mul(r[-1], lead_inv)
        qt[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
        r = trim(r)
    return trim(qt), r


def mod(F, a: Sequence[int], b: Sequence[int]) -> Poly:
    return divmod_(F, a, b)[1]


def monic(F, a: Sequence[int]) -> Poly:
    a = trim(a)
    if not a:
        return a
    return scale(F, F.inv(a[-1]), a)


def gcd(F, a: Sequence[int], b: Sequence[int]) -> Poly:
    """Monic gcd (the gcd of two zero polynomials is 0)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def powmod(F, a: Sequence[int], e: int, m: Sequence[int]) -> Poly:
    result: Poly = [1]
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return result


def derivative(F, a: Sequence[int]) -> Poly:
    out = []
    for i in range(1, len(a)):
        c = 0
        for _ in range(i % F.p):  # i * a_i in characteristic p
            c = F.add(c, a[i])
        out.append(c)
    return trim(out)


def evaluate(F, a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_irreducible(F, f: Sequence[int]) -> bool:
    """Ben-Or test: gcd(f, x^(s^i) - x) = 1 for i <= deg f / 2, s = |F|."""
    f = trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    cur = x
    for _ in range(d // 2):
        cur = powmod(F, cur, F.size, f)
        if deg(gcd(F, f, sub(F, cur, x))) > 0:
            return False
    return True


def least_irreducible(F, d: int) -> Poly:
    """Monic irreducible of degree d with the smallest code sum(c_i * |F|^i)."""
    s = F.size
    for code in range(s**d):
        coeffs = []
        c = code
        for _ in range(d):
            c, r = divmod(c, s)
            coeffs.append(r)
        f = coeffs + [1]
        if is_irreducible(F, f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {d}")  # unreachable


def to_str(a: Sequence[int], var: str = "x") -> str:
    a = trim(a)
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)
