"""Exact arithmetic in a two-level finite field tower F_p < F_q < F_{q^n}.

Elements are plain integers ("codes").  An element of F_q = F_p[y]/(g) is
coded as sum(c_i * p^i) over its coefficients c_i of y^i; an element of
F_{q^n} = F_q[x]/(h) as sum(code(a_j) * q^j) over its coefficients a_j of
x^j.  With this encoding F_q sits inside F_{q^n} as the codes 0..q-1, the
code 1 is the identity, and the code of an element doubles as its
coordinate vector over the standard F_q-basis 1, x, ..., x^{n-1}.  That last
fact is what every F_q-linear algebra routine in the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import poly
from .errors import GuardError
from .ntheory import divisors, is_prime, prime_factors

DEFAULT_GUARD_BITS = 20
TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 1 << 10


def _padd(a: int, b: int, p: int) -> int:
    out, place = 0, 1
    while a or b:
        a, x = divmod(a, p)
        b, y = divmod(b, p)
        out += ((x + y) % p) * place
        place *= p
    return out


def _pneg(a: int, p: int) -> int:
    out, place = 0, 1
    while a:
        a, x = divmod(a, p)
        out += ((p - x) % p) * place
        place *= p
    return out


class PrimeField:
    """F_p with codes 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.size = p
        self.degree = 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


class ExtensionField:
    """base[x]/(modulus) with base-|base| digit codes.

    Multiplication goes through exp/log tables once ``install_tables`` has
    been called with a primitive element (only done for small fields), and
    through schoolbook polynomial arithmetic otherwise.
    """

    def __init__(self, base, modulus: Sequence[int]):
        self.base = base
        self.modulus = list(modulus)
        self.degree = len(modulus) - 1
        self.p = base.p
        self.size = base.size**self.degree
        self.order = self.size - 1
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        p = self.p
        if p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        elif self.size <= ADD_TABLE_LIMIT:
            size = self.size
            table = [[_padd(a, b, p) for b in range(size)] for a in range(size)]
            negs = [_pneg(a, p) for a in range(size)]
            self.add = lambda a, b: table[a][b]
            self.neg = negs.__getitem__
            self.sub = lambda a, b: table[a][negs[b]]
        else:
            self.add = lambda a, b: _padd(a, b, p)
            self.neg = lambda a: _pneg(a, p)
            self.sub = lambda a, b: _padd(a, _pneg(b, p), p)

    # coefficient views --------------------------------------------------
    def coeffs(self, a: int) -> list[int]:
        s = self.base.size
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, s)
            out.append(r)
        return out

    def from_coeffs(self, cs: Sequence[int]) -> int:
        s = self.base.size
        code = 0
        for c in reversed(cs):
            code = code * s + c
        return code

    # multiplication -----------------------------------------------------
    def _mul_poly(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        B = self.base
        prod = poly.mul(B, self.coeffs(a), self.coeffs(b))
        d = self.degree
        m = self.modulus
        for i in range(len(prod) - 1, d - 1, -1):
            c = prod[i]
            if c:
                for j in range(d):
                    if m[j]:
                        prod[i - d + j] = B.sub(prod[i - d + j], B.mul(c, m[j]))
                prod[i] = 0
        return self.from_coeffs(prod[:d] + [0] * (d - len(prod[:d])))

    def mul(self, a: int, b: int) -> int:
        if self._exp is None:
            return self._mul_poly(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if k == 0 else 0
        k %= self.order
        if self._exp is not None:
            return self._exp[self._log[a] * k % self.order]
        result, base = 1, a
        while k:
            if k & 1:
                result = self._mul_poly(result, base)
            k >>= 1
            if k:
                base = self._mul_poly(base, base)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.order - self._log[a]) % self.order]
        return self.pow(a, self.order - 1)

    def install_tables(self, gen: int) -> None:
        """Precompute exp/log tables for the primitive element ``gen``."""
        order = self.order
        exp = [0] * (2 * order)
        log = [0] * self.size
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, gen)
        exp[order : 2 * order] = exp[:order]
        self._exp, self._log = exp, log


def _is_primitive(F, a: int, factors: Sequence[int]) -> bool:
    if a == 0:
        return False
    return all(F.pow(a, F.order // r) != 1 for r in factors)


def primitive_element(F) -> int:
    """Least code generating the multiplicative group of F."""
    factors = prime_factors(F.order)
    for a in range(1, F.size):
        if _is_primitive(F, a, factors):
            return a
    raise ValueError("field has no primitive element")  # unreachable


@dataclass(frozen=True)
class SubfieldHandle:
    """F_{q^t} inside F_{q^n}: an F_q-basis (RREF row codes) and a generator."""

    t: int
    basis: tuple[int, ...]
    gamma: int


@dataclass(frozen=True)
class MinPoly:
    """Minimal polynomial over F_{q^t}; coefficients are F_{q^n} codes, low first."""

    coeffs: tuple[int, ...]
    t: int
    derivative_at_root: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


class FieldTower:
    """The tower F_p < F_q = F_{p^e} < F_{q^n}, immutable once built."""

    def __init__(
        self,
        p: int,
        e: int,
        n: int,
        g: Sequence[int] | None = None,
        h: Sequence[int] | None = None,
        xi: int | None = None,
        guard_bits: int | None = DEFAULT_GUARD_BITS,
    ):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1 or n < 1:
            raise ValueError("e and n must be positive")
        Q = p ** (e * n)
        if guard_bits is not None and Q > 1 << guard_bits:
            raise GuardError(f"q^n = {Q} exceeds the guard 2^{guard_bits}")
        Fp = PrimeField(p)
        if g is None:
            g = poly.least_irreducible(Fp, e)
        else:
            g = [int(c) % p for c in g]
            if len(g) != e + 1 or g[-1] != 1:
                raise ValueError(f"g must be monic of degree {e}")
            if not poly.is_irreducible(Fp, g):
                raise ValueError(f"g = {poly.to_str(g, 'y')} is reducible over F_{p}")
        Fq = ExtensionField(Fp, g)
        q = Fq.size
        if q <= TABLE_LIMIT and q > 2:
            Fq.install_tables(primitive_element(Fq))
        if h is None:
            h = poly.least_irreducible(Fq, n)
        else:
            h = [int(c) for c in h]
            if len(h) != n + 1 or h[-1] != 1 or any(not 0 <= c < q for c in h):
                raise ValueError(f"h must be monic of degree {n} with F_q codes")
            if not poly.is_irreducible(Fq, h):
                raise ValueError(f"h = {poly.to_str(h)} is reducible over F_{q}")
        F = ExtensionField(Fq, h)
        if xi is None:
            xi = primitive_element(F)
        elif not _is_primitive(F, xi, prime_factors(F.order)):
            raise ValueError(f"xi = {xi} is not a primitive element")
        if Q <= TABLE_LIMIT:
            F.install_tables(xi)

        self.p, self.e, self.n, self.q, self.Q = p, e, n, q, Q
        self.g = tuple(g)
        self.h = tuple(h)
        self.xi = xi
        self.divisors = tuple(divisors(n))
        self.Fp, self.Fq, self.F = Fp, Fq, F
        self.guard_bits = guard_bits
        # hot-path bindings
        self.add = F.add
        self.sub = F.sub
        self.neg = F.neg
        self.mul = F.mul
        self.pow = F.pow
        self._subfields: dict[int, SubfieldHandle] = {}
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False):
            raise AttributeError("FieldTower is immutable")
        super().__setattr__(name, value)

    def __getstate__(self):
        return {
            "p": self.p, "e": self.e, "n": self.n, "g": self.g, "h": self.h,
            "xi": self.xi, "guard_bits": self.guard_bits,
        }

    def __setstate__(self, state):
        self.__init__(**state)

    @property
    def key(self) -> tuple:
        return (self.p, self.e, self.n, self.g, self.h, self.xi)

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, FieldTower) and self.key == other.key)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e}, n={self.n}, h={poly.to_str(self.h)}, xi={self.xi})"

    # scalar arithmetic --------------------------------------------------
    def inv(self, a: int) -> int:
        return self.F.inv(a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.F.inv(b))

    def coeffs(self, a: int) -> list[int]:
        """F_q-coordinates of ``a`` over 1, x, ..., x^{n-1}."""
        return self.F.coeffs(a)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.n or any(not 0 <= c < self.q for c in cs):
            raise ValueError("coefficients must be at most n F_q codes")
        return self.F.from_coeffs(cs)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.Q:
            raise ValueError(f"{a!r} is not an element code of F_{self.Q}")
        return a

    def elements(self) -> range:
        return range(self.Q)

    def nonzero(self) -> range:
        return range(1, self.Q)

    def xi_pow(self, j: int) -> int:
        return self.pow(self.xi, j)

    # Galois structure ---------------------------------------------------
    def _require_divisor(self, t: int) -> None:
        if t not in self.divisors:
            raise ValueError(f"{t} does not divide n = {self.n}")

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); i is taken mod n."""
        i %= self.n
        if a == 0 or i == 0:
            return a
        return self.pow(a, self.q**i)

    def trace_rel(self, a: int, t: int) -> int:
        """Relative trace F_{q^n} -> F_{q^t}: sum of a^(q^(t*i)) for i < n/t."""
        self._require_divisor(t)
        acc, x = 0, a
        for _ in range(self.n // t):
            acc = self.add(acc, x)
            x = self.frobenius(x, t)
        return acc

    def trace(self, a: int) -> int:
        """Tr_{F_{q^n}/F_q}(a), an F_q code."""
        return self.trace_rel(a, 1)

    def in_subfield(self, a: int, t: int) -> bool:
        return self.frobenius(a, t) == a

    def degree_over(self, a: int, t: int = 1) -> int:
        """[F_{q^t}(a) : F_{q^t}]."""
        self._require_divisor(t)
        s, x = 1, self.frobenius(a, t)
        while x != a:
            x = self.frobenius(x, t)
            s += 1
        return s

    def conjugates(self, a: int, t: int = 1) -> list[int]:
        out = [a]
        x = self.frobenius(a, t)
        while x != a:
            out.append(x)
            x = self.frobenius(x, t)
        return out

    def min_poly(self, a: int, t: int = 1) -> MinPoly:
        """Minimal polynomial of ``a`` over F_{q^t}, as the product of (x - c)
        over the F_{q^t}-conjugates c of a, plus f'(a)."""
        self._require_divisor(t)
        f: list[int] = [1]
        for c in self.conjugates(a, t):
            f = poly.mul(self, f, [self.neg(c), 1])
        df = poly.derivative(self, f)
        return MinPoly(tuple(f), t, poly.evaluate(self, df, a))

    def subfield(self, t: int) -> SubfieldHandle:
        """F_{q^t} as the kernel of a -> a^(q^t) - a, with generator xi^((Q-1)/(q^t-1))."""
        self._require_divisor(t)
        if t not in self._subfields:
            from .linalg import kernel_of_images

            images = [self.sub(self.frobenius(self.q**j, t), self.q**j) for j in range(self.n)]
            ker = kernel_of_images(self, images, self.n)
            gamma = self.pow(self.xi, (self.Q - 1) // (self.q**t - 1))
            self._subfields[t] = SubfieldHandle(t, tuple(ker), gamma)
        return self._subfields[t]

    def subfield_elements(self, t: int) -> list[int]:
        gamma = self.subfield(t).gamma
        out, x = [0], 1
        for _ in range(self.q**t - 1):
            out.append(x)
            x = self.mul(x, gamma)
        return out

    # wire format --------------------------------------------------------
    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "n": self.n,
            "g": list(self.g),
            "h": list(self.h),
            "xi": self.xi,
        }

    @classmethod
    def from_descriptor(cls, d: dict, guard_bits: int | None = DEFAULT_GUARD_BITS) -> "FieldTower":
        p, e = int(d["p"]), int(d["e"])
        h = d.get("h")
        if h is not None:
            # tolerate coefficients written as F_p vectors instead of F_q codes
            h = [sum(int(c) * p**i for i, c in enumerate(x)) if isinstance(x, list) else int(x) for x in h]
        return cls(p, e, int(d["n"]), g=d.get("g"), h=h, xi=d.get("xi"), guard_bits=guard_bits)


def build_tower(
    p: int,
    e: int,
    n: int,
    g_opt: Sequence[int] | None = None,
    h_opt: Sequence[int] | None = None,
    guard_bits: int | None = DEFAULT_GUARD_BITS,
) -> FieldTower:
    """Build the tower; absent polynomials default to the least-code irreducible."""
    return FieldTower(p, e, n, g=g_opt, h=h_opt, guard_bits=guard_bits)


_TOWER_CACHE: dict[tuple, FieldTower] = {}


def tower_for(p: int, e: int, n: int) -> FieldTower:
    """Memoized default tower; towers are immutable so sharing is safe."""
    key = (p, e, n)
    if key not in _TOWER_CACHE:
        _TOWER_CACHE[key] = build_tower(p, e, n)
    return _TOWER_CACHE[key]


def iter_frobenius_classes(tower: FieldTower, t: int = 1) -> Iterator[int]:
    """Least code of each Frobenius orbit (over F_{q^t}) in ascending order."""
    seen = set()
    for a in tower.elements():
        if a in seen:
            continue
        cls = tower.conjugates(a, t)
        seen.update(cls)
        yield a
