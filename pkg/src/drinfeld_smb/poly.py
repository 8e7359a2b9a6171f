"""The polynomial ring A = F_q[t] with exact arithmetic.

Polynomials are tuples of F_q element codes in ascending power order with no
trailing zeros; the zero polynomial is the empty tuple and its degree is the
distinguished marker NEG_INF.  All operations are pure functions taking the
coefficient field first.

Products with one large dense operand use Kronecker substitution through
Python big-int multiplication when the field is prime (the only place large
degrees arise in this package); everything else is schoolbook over the
support.  q-power maps use the characteristic-p identity
(sum c_j t^j)^{q^i} = sum c_j t^{j q^i}.
"""

from __future__ import annotations

import re

from .fq import FqField

NEG_INF = float("-inf")

ZERO: tuple[int, ...] = ()
ONE: tuple[int, ...] = (1,)
T: tuple[int, ...] = (0, 1)


def poly(coeffs) -> tuple[int, ...]:
    """Normalize a coefficient sequence (strip trailing zeros)."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(a):
    return len(a) - 1 if a else NEG_INF


def is_monic(a) -> bool:
    return bool(a) and a[-1] == 1


def constant(F: FqField, c: int) -> tuple[int, ...]:
    return (F.check(c),) if c else ZERO


def add(F: FqField, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly(out)


def neg(F: FqField, a):
    return tuple(F.neg(c) for c in a)


def sub(F: FqField, a, b):
    return add(F, a, neg(F, b))


def scalar_mul(F: FqField, c: int, a):
    if c == 0:
        return ZERO
    return poly(F.mul(c, x) for x in a)


def _mul_schoolbook(F: FqField, a, b):
    # iterate over the support of the smaller operand
    na = sum(1 for c in a if c)
    nb = sum(1 for c in b if c)
    if nb < na:
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = F.add(out[i + j], F.mul(ca, cb))
    return poly(out)


def _mul_kronecker(p: int, a, b):
    # pack coefficients into big-int slots wide enough for the convolution
    n = min(len(a), len(b))
    bits = ((p - 1) * (p - 1) * n).bit_length() + 1
    mask = (1 << bits) - 1
    za = 0
    for c in reversed(a):
        za = (za << bits) | c
    zb = 0
    for c in reversed(b):
        zb = (zb << bits) | c
    zc = za * zb
    out = []
    while zc:
        out.append((zc & mask) % p)
        zc >>= bits
    return poly(out)


def mul(F: FqField, a, b):
    if not a or not b:
        return ZERO
    na = sum(1 for c in a if c)
    nb = sum(1 for c in b if c)
    if F.k == 1 and min(na, nb) > 32:
        return _mul_kronecker(F.p, a, b)
    return _mul_schoolbook(F, a, b)


def divrem(F: FqField, a, b):
    """Quotient and remainder with deg(rem) < deg(b)."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv_lead = F.inv(b[-1])
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        f = F.mul(a[-1], inv_lead)
        off = len(a) - len(b)
        quot[off] = f
        for i, c in enumerate(b):
            a[off + i] = F.sub(a[off + i], F.mul(f, c))
        a.pop()
    return poly(quot), poly(a)


def rem(F: FqField, a, b):
    return divrem(F, a, b)[1]


def gcd(F: FqField, a, b):
    """Monic gcd."""
    while b:
        a, b = b, rem(F, a, b)
    if a and a[-1] != 1:
        a = scalar_mul(F, F.inv(a[-1]), a)
    return a


def pow_(F: FqField, a, e: int):
    if e < 0:
        raise ValueError("negative polynomial power")
    r = ONE
    b = a
    while e:
        if e & 1:
            r = mul(F, r, b)
        b = mul(F, b, b)
        e >>= 1
    return r


def frobenius_pow(F: FqField, a, i: int):
    """a^(q^i), computed by exponent spreading (c^q = c for c in F_q)."""
    if i == 0 or not a:
        return a
    step = F.q**i
    out = [0] * ((len(a) - 1) * step + 1)
    for j, c in enumerate(a):
        if c:
            out[j * step] = c
    return tuple(out)


def ord_at(F: FqField, a, u) -> int:
    """Multiplicity of the irreducible u in nonzero a."""
    if not a:
        raise ValueError("ord of zero polynomial")
    n = 0
    while True:
        q_, r_ = divrem(F, a, u)
        if r_:
            return n
        a = q_
        n += 1


def monic_polys(F: FqField, deg: int):
    """All monic polynomials of exactly the given degree."""
    q = F.q
    for code in range(q**deg):
        coeffs = []
        c = code
        for _ in range(deg):
            coeffs.append(c % q)
            c //= q
        yield tuple(coeffs) + (1,)


def is_irreducible(F: FqField, a) -> bool:
    """Trial division by all monic polynomials of degree <= deg(a)/2."""
    if not a:
        raise ValueError("zero polynomial")
    d = len(a) - 1
    if d == 0:
        return False  # units are not irreducible
    for e in range(1, d // 2 + 1):
        for b in monic_polys(F, e):
            if not rem(F, a, b):
                return False
    return True


def irreducibles(F: FqField, max_deg: int):
    for e in range(1, max_deg + 1):
        for a in monic_polys(F, e):
            if is_irreducible(F, a):
                yield a


def factor(F: FqField, a):
    """(unit, {monic irreducible: multiplicity}) by trial division."""
    if not a:
        raise ValueError("zero polynomial")
    unit = a[-1]
    a = scalar_mul(F, F.inv(unit), a)
    out: dict[tuple[int, ...], int] = {}
    # increasing-degree trial division: once degrees < d are exhausted, any
    # monic degree-d divisor of the remainder is automatically irreducible
    d = 1
    while len(a) > 1:
        if 2 * d > len(a) - 1:
            out[a] = out.get(a, 0) + 1  # what is left is irreducible
            break
        for u in monic_polys(F, d):
            q_, r_ = divrem(F, a, u)
            while not r_:
                out[u] = out.get(u, 0) + 1
                a = q_
                if len(a) == 1:
                    break
                q_, r_ = divrem(F, a, u)
            if len(a) == 1:
                break
        d += 1
    return unit, out


# -- string format ------------------------------------------------------

_TERM = re.compile(
    r"^(?:(?P<coef>\d+|g(?:\^(?P<gexp>\d+))?)\*?)?"
    r"(?P<var>t(?:\^(?P<texp>\d+))?)?$"
)


def parse_poly(F: FqField, s: str) -> tuple[int, ...]:
    """Parse "t^3+t+1", "2*t^2+1", "g^2*t+g" into a polynomial."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return ZERO
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    coeffs: dict[int, int] = {}
    for term in terms:
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        m = _TERM.match(term)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"bad polynomial term {term!r}")
        cstr = m.group("coef")
        if cstr is None:
            c = 1
        elif cstr.startswith("g"):
            j = int(m.group("gexp") or 1)
            c = F.gen_power(j)
        else:
            v = int(cstr)
            if F.k == 1:
                c = v % F.p
            else:
                if v >= F.p:
                    raise ValueError(
                        f"coefficient {v} not reduced; use g^j for F_{F.q}"
                    )
                c = v
        if sign < 0:
            c = F.neg(c)
        e = 0
        if m.group("var"):
            e = int(m.group("texp") or 1)
        coeffs[e] = F.add(coeffs.get(e, 0), c)
    if not coeffs:
        return ZERO
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return poly(out)


def _coef_str(F: FqField, c: int) -> str:
    if F.k == 1:
        return str(c)
    j = F.gen_log(c)
    if j == 0:
        return "1"
    return "g" if j == 1 else f"g^{j}"


def format_poly(F: FqField, a) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if not c:
            continue
        cs = _coef_str(F, c)
        if e == 0:
            parts.append(cs)
        else:
            var = "t" if e == 1 else f"t^{e}"
            parts.append(var if cs == "1" else f"{cs}*{var}")
    return "+".join(parts)
