"""Arithmetic in the finite field F_q with q = p^k.

Elements are represented as integers in [0, q): the integer's base-p digits
are the coefficients of the residue polynomial in the generator g, so for
k = 1 an element is just its residue mod p, and for k > 1 the element
c_0 + c_1 g + ... + c_{k-1} g^{k-1} is encoded as sum(c_i * p**i).

The field object carries the defining modulus (a monic irreducible of degree
k over F_p, stored as an ascending coefficient tuple) and, for k > 1,
discrete log/exp tables with respect to a primitive element used by the
external "g^j" string format.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Shipped defining moduli for q <= 16, k > 1.  Chosen so that the class of g
# is a multiplicative generator (required by the "g^j" coefficient format).
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),        # g^2 + g + 1
    (2, 3): (1, 1, 0, 1),     # g^3 + g + 1
    (2, 4): (1, 1, 0, 0, 1),  # g^4 + g + 1
    (3, 2): (2, 1, 1),        # g^2 + g + 2
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(n % p)
        n //= p
    return out


def _undigits(ds, p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


@dataclass(frozen=True)
class FqField:
    """The finite field F_q, q = p^k, as F_p[g]/(modulus)."""

    p: int
    k: int = 1
    modulus: tuple[int, ...] = ()
    # caches, filled in __post_init__
    _exp: tuple[int, ...] = field(default=(), repr=False, compare=False)
    _log: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.k == 1:
            object.__setattr__(self, "modulus", (0, 1))
            return
        mod = self.modulus
        if not mod:
            try:
                mod = DEFAULT_MODULI[(self.p, self.k)]
            except KeyError:
                raise ValueError(
                    f"no default modulus for q = {self.p}^{self.k}; supply one"
                ) from None
            object.__setattr__(self, "modulus", mod)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if any(c % self.p != c for c in mod):
            raise ValueError("modulus coefficients must be reduced mod p")
        if not self._modulus_irreducible(mod):
            raise ValueError("modulus is reducible over F_p")
        self._build_tables()

    # -- construction helpers -------------------------------------------

    def _modulus_irreducible(self, mod) -> bool:
        # Trial division by all monic F_p-polynomials of degree <= k/2.
        p, k = self.p, self.k
        for deg in range(1, k // 2 + 1):
            for code in range(p**deg):
                cand = _digits(code, p, deg) + [1]
                if self._fp_poly_rem(list(mod), cand) == []:
                    return False
        return True

    def _fp_poly_rem(self, a: list[int], b: list[int]) -> list[int]:
        p = self.p
        a = a[:]
        binv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            if a[-1] == 0:
                a.pop()
                continue
            f = a[-1] * binv % p
            off = len(a) - len(b)
            for i, c in enumerate(b):
                a[off + i] = (a[off + i] - f * c) % p
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    def _build_tables(self):
        g = self.p  # the element g itself
        seen = {}
        exp = []
        x = 1
        for j in range(self.q - 1):
            exp.append(x)
            seen[x] = j
            x = self.mul(x, g)
        if len(seen) != self.q - 1:
            raise ValueError("modulus root is not a primitive element")
        log = [0] * self.q
        for j, v in enumerate(exp):
            log[v] = j
        object.__setattr__(self, "_exp", tuple(exp))
        object.__setattr__(self, "_log", tuple(log))

    # -- basic queries ---------------------------------------------------

    @property
    def q(self) -> int:
        return self.p**self.k

    def elements(self):
        return range(self.q)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of F_{self.q}")
        return a

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        da, db = _digits(a, p, self.k), _digits(b, p, self.k)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        return _undigits([(-d) % p for d in _digits(a, p, self.k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = _digits(a, p, k), _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = self._fp_poly_rem(prod, list(self.modulus))
        return _undigits(rem + [0] * (k - len(rem)), p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, b = 1, a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.pow(a, self.q - 2)

    # -- generator encoding (external "g^j" format) ----------------------

    def gen_power(self, j: int) -> int:
        """The element g^j, g the fixed multiplicative generator."""
        if self.k == 1:
            raise ValueError("prime field has no generator symbol g")
        return self._exp[j % (self.q - 1)]

    def gen_log(self, a: int) -> int:
        """j with a = g^j, for nonzero a."""
        if self.k == 1:
            raise ValueError("prime field has no generator symbol g")
        if a == 0:
            raise ValueError("0 is not a power of g")
        return self._log[a]
