"""Row reduction over F_q on packed integer vectors.

A vector of length L over F_q is stored as the integer sum(c_j * q^j).  For
L <= n this is exactly the code of an F_{q^n} element, so the basis rows of
a subspace are just element codes.  Longer vectors (used by the kernel and
Zassenhaus routines) are handled chunk-wise, one F_{q^n}-sized chunk at a
time.  Pivots are the lowest-index nonzero coordinates, so "leftmost" in the
RREF means lowest power of x.

In characteristic 2 addition is XOR for every q; for q = 2 scaling is
trivial and the hot loops below collapse to bit tricks.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class FqVectors:
    """Vector operations on packed F_q-vectors of arbitrary length."""

    def __init__(self, tower):
        self.tower = tower
        self.q = tower.q
        self.e = tower.e
        self.p = tower.p
        self.Q = tower.Q
        self.binary = tower.q == 2
        self.char2 = tower.p == 2
        self.mask = tower.q - 1

    def shift_up(self, v: int, L: int) -> int:
        """Multiply by q^L (move coordinates up by L places)."""
        if self.char2:
            return v << (self.e * L)
        return v * self.q**L

    def split(self, v: int, L: int) -> tuple[int, int]:
        """(coordinates below L, coordinates from L on, shifted down)."""
        if self.char2:
            b = self.e * L
            return v & ((1 << b) - 1), v >> b
        hi, lo = divmod(v, self.q**L)
        return lo, hi

    def _chunked(self, f, u: int, v: int) -> int:
        Q = self.Q
        out, place = 0, 1
        while u or v:
            u, a = divmod(u, Q)
            v, b = divmod(v, Q)
            out += f(a, b) * place
            place *= Q
        return out

    def add(self, u: int, v: int) -> int:
        if self.char2:
            return u ^ v
        if u < self.Q and v < self.Q:
            return self.tower.add(u, v)
        return self._chunked(self.tower.add, u, v)

    def sub(self, u: int, v: int) -> int:
        if self.char2:
            return u ^ v
        if u < self.Q and v < self.Q:
            return self.tower.sub(u, v)
        return self._chunked(self.tower.sub, u, v)

    def scale(self, c: int, v: int) -> int:
        if c == 1:
            return v
        if c == 0:
            return 0
        mul = self.tower.mul
        if v < self.Q:
            return mul(c, v)
        return self._chunked(lambda a, _b: mul(c, a), v, 0)

    def digit(self, v: int, j: int) -> int:
        if self.char2:
            return (v >> (self.e * j)) & self.mask
        return (v // self.q**j) % self.q

    def pivot(self, v: int) -> tuple[int, int]:
        """(index, value) of the lowest nonzero coordinate of v != 0."""
        if self.char2:
            b = (v & -v).bit_length() - 1
            j = b // self.e
            return j, (v >> (j * self.e)) & self.mask
        j, q = 0, self.q
        while v % q == 0:
            v //= q
            j += 1
        return j, v % q

    def unpack(self, v: int, L: int) -> list[int]:
        return [self.digit(v, j) for j in range(L)]

    def pack(self, cs: Sequence[int]) -> int:
        v = 0
        for j in range(len(cs) - 1, -1, -1):
            v = self.shift_up(v, 1) + cs[j]
        return v


def vectors(tower) -> FqVectors:
    vec = tower.__dict__.get("_vectors")
    if vec is None:
        vec = FqVectors(tower)
        object.__setattr__(tower, "_vectors", vec)
    return vec


def echelon(tower, rows: Iterable[int]) -> dict[int, int]:
    """Map pivot index -> normalized row, rows in (non-reduced) echelon form."""
    return extend(tower, {}, rows)


def extend(tower, piv: dict[int, int], rows: Iterable[int]) -> dict[int, int]:
    """Insert rows into the echelon dict ``piv`` in place and return it."""
    vec = vectors(tower)
    if vec.binary:
        for v in rows:
            while v:
                b = (v & -v).bit_length() - 1
                r = piv.get(b)
                if r is None:
                    piv[b] = v
                    break
                v ^= r
        return piv
    for v in rows:
        while v:
            j, d = vec.pivot(v)
            r = piv.get(j)
            if r is None:
                if d != 1:
                    v = vec.scale(tower.inv(d), v)
                piv[j] = v
                break
            v = vec.sub(v, vec.scale(d, r))
    return piv


def rank(tower, rows: Iterable[int]) -> int:
    return len(echelon(tower, rows))


def _back_substitute(tower, piv: dict[int, int]) -> list[int]:
    vec = vectors(tower)
    cols = sorted(piv)
    rows = [piv[c] for c in cols]
    for idx in range(len(cols) - 1, -1, -1):
        c, r = cols[idx], rows[idx]
        for jdx in range(idx):
            d = vec.digit(rows[jdx], c)
            if d:
                rows[jdx] = vec.sub(rows[jdx], vec.scale(d, r))
    return rows


def rref(tower, rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form, rows ordered by ascending pivot."""
    return tuple(_back_substitute(tower, echelon(tower, rows)))


def reduce(tower, v: int, basis_rref: Sequence[int]) -> int:
    """Remainder of v against an RREF basis (0 iff v lies in the span)."""
    vec = vectors(tower)
    for r in basis_rref:
        j, _ = vec.pivot(r)
        d = vec.digit(v, j)
        if d:
            v = vec.sub(v, vec.scale(d, r))
    return v


def kernel_of_images(tower, images: Sequence[int], L: int) -> list[int]:
    """RREF basis of {x in F_q^r : sum x_i * images[i] = 0}, as packed length-r vectors.

    images are packed vectors of length <= L.
    """
    vec = vectors(tower)
    aug = [vec.add(img, vec.shift_up(vec.shift_up(1, i), L)) for i, img in enumerate(images)]
    piv = echelon(tower, aug)
    ker = [vec.split(row, L)[1] for j, row in piv.items() if j >= L]
    return list(rref(tower, ker))


def zassenhaus(tower, A: Sequence[int], B: Sequence[int], L: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(basis of A + B, basis of A ∩ B), both in RREF, for length-L row sets."""
    vec = vectors(tower)
    rows = [vec.add(a, vec.shift_up(a, L)) for a in A] + list(B)
    piv = echelon(tower, rows)
    sum_rows, cap_rows = [], []
    for j, row in piv.items():
        lo, hi = vec.split(row, L)
        if j < L:
            sum_rows.append(lo)
        else:
            cap_rows.append(hi)
    return rref(tower, sum_rows), rref(tower, cap_rows)


def solve_kernel_coeffs(tower, images: Sequence[int], L: int) -> list[list[int]]:
    """Kernel basis as explicit F_q coordinate lists."""
    vec = vectors(tower)
    r = len(images)
    return [vec.unpack(k, r) for k in kernel_of_images(tower, images, L)]
