"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic; elements are decoded into
nested coefficient lists and multiplied by schoolbook polynomial products.
"""

from __future__ import annotations

import itertools


class NaiveTower:
    """F_{q^n} = F_q[x]/(h), F_q = F_p[y]/(g), element codes base p then base q."""

    def __init__(self, p: int, g, h):
        self.p = p
        self.g = list(g)
        self.h = list(h)
        self.e = len(self.g) - 1
        self.n = len(self.h) - 1
        self.q = p**self.e
        self.Q = self.q**self.n

    # F_q as lists over F_p
    def _q_dec(self, c: int) -> list[int]:
        return [(c // self.p**i) % self.p for i in range(self.e)]

    def _q_enc(self, cs) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(cs))

    def _polymod(self, a: list[int], m: list[int], mul, sub, inv_lead) -> list[int]:
        a = list(a)
        d = len(m) - 1
        while len(a) > d:
            c = a.pop()
            if c:
                f = mul(c, inv_lead)
                for i in range(d):
                    a[len(a) - d + i] = sub(a[len(a) - d + i], mul(f, m[i]))
        return a + [0] * (d - len(a))

    def qmul(self, a: int, b: int) -> int:
        p = self.p
        x, y = self._q_dec(a), self._q_dec(b)
        prod = [0] * (2 * self.e)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % p
        red = self._polymod(prod, self.g, lambda s, t: s * t % p, lambda s, t: (s - t) % p, 1)
        return self._q_enc(red)

    def qadd(self, a: int, b: int) -> int:
        return self._q_enc((u + v) % self.p for u, v in zip(self._q_dec(a), self._q_dec(b)))

    def qneg(self, a: int) -> int:
        return self._q_enc((-u) % self.p for u in self._q_dec(a))

    def qsub(self, a: int, b: int) -> int:
        return self.qadd(a, self.qneg(b))

    # F_{q^n}
    def dec(self, a: int) -> list[int]:
        return [(a // self.q**i) % self.q for i in range(self.n)]

    def enc(self, cs) -> int:
        return sum(int(c) * self.q**i for i, c in enumerate(cs))

    def add(self, a: int, b: int) -> int:
        return self.enc(self.qadd(u, v) for u, v in zip(self.dec(a), self.dec(b)))

    def neg(self, a: int) -> int:
        return self.enc(self.qneg(u) for u in self.dec(a))

    def mul(self, a: int, b: int) -> int:
        x, y = self.dec(a), self.dec(b)
        prod = [0] * (2 * self.n)
        for i, u in enumerate(x):
            if not u:
                continue
            for j, v in enumerate(y):
                if v:
                    prod[i + j] = self.qadd(prod[i + j], self.qmul(u, v))
        red = self._polymod(prod, self.h, self.qmul, self.qsub, 1)
        return self.enc(red)

    def pow(self, a: int, k: int) -> int:
        out = 1
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def inv(self, a: int) -> int:
        for b in range(1, self.Q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def scalar(self, c: int, a: int) -> int:
        """c in F_q (code < q) times a."""
        return self.enc(self.qmul(c, u) for u in self.dec(a))

    def trace(self, a: int) -> int:
        out, x = 0, a
        for _ in range(self.n):
            out = self.add(out, x)
            x = self.pow(x, self.q)
        return out


def is_irreducible_bruteforce(p: int, f: list[int]) -> bool:
    """No monic factor of degree 1..deg/2 over F_p, by exhaustive trial division."""
    d = len(f) - 1
    for dd in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=dd):
            g = list(tail) + [1]
            r = list(f)
            while len(r) - 1 >= dd:
                c = r[-1]
                shift = len(r) - 1 - dd
                for i, gi in enumerate(g):
                    r[shift + i] = (r[shift + i] - c * gi) % p
                r.pop()
            if not any(r):
                return False
    return True


# subspaces as explicit element sets -----------------------------------------


def span_set(T: NaiveTower, gens) -> frozenset[int]:
    out = {0}
    for g in gens:
        new = set()
        for c in range(T.q):
            cg = T.scalar(c, g)
            for s in out:
                new.add(T.add(s, cg))
        out = new
    return frozenset(out)


def dim_of(T: NaiveTower, elems: frozenset[int]) -> int:
    size, d = len(elems), 0
    while size > 1:
        size //= T.q
        d += 1
    return d


def shift_set(T: NaiveTower, alpha: int, S: frozenset[int]) -> frozenset[int]:
    return frozenset(T.mul(alpha, s) for s in S)


def dual_set(T: NaiveTower, S: frozenset[int]) -> frozenset[int]:
    return frozenset(a for a in range(T.Q) if all(T.trace(T.mul(a, s)) == 0 for s in S))


def weight_distribution_full(T: NaiveTower, S: frozenset[int]) -> tuple[int, ...]:
    """Scan every alpha in F^*; each codeword is hit (q^s - 1) times."""
    k = dim_of(T, S)
    hits = [0] * (k + 1)
    stab = 0
    for alpha in range(1, T.Q):
        d = dim_of(T, S & shift_set(T, alpha, S))
        hits[d] += 1
        if d == k:
            stab += 1
    # omega_{2i} counts codewords at intersection dim k - i
    return tuple(hits[k - i] // stab for i in range(1, k + 1))


def gram_rank(T: NaiveTower) -> int:
    """Rank over F_p of the trace Gram matrix in the monomial basis (e = 1 only)."""
    assert T.e == 1
    p, n = T.p, T.n
    basis = [T.q**i for i in range(n)]
    M = [[T.trace(T.mul(a, b)) for b in basis] for a in basis]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        r += 1
    return r

