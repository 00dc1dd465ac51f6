"""Arithmetic in F_q with q = p^m, p an odd prime, in polynomial basis.

Elements are vectors of m base-p digits (ascending degree) modulo a monic
irreducible polynomial. For the small fields used throughout, full add/mul
lookup tables are built lazily so that the algebra product loop runs on
plain integer representations.

NOT FOR PRODUCTION USE: word-size parameters, variable-time arithmetic.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional, Sequence, Tuple

from .errors import ParameterError

# Full q x q add/mul tables are built only when q is at most this.
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check; fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n by trial division."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


# --- polynomial helpers over F_p, coefficients ascending degree ---

def _trim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    binv = pow(b[-1], -1, p)
    db = len(b) - 1
    quo = [0] * max(0, len(a) - db)
    while len(_trim(a)) - 1 >= db and _trim(a):
        a = list(_trim(a))
        da = len(a) - 1
        if da < db:
            break
        coef = (a[-1] * binv) % p
        quo[da - db] = coef
        for i in range(len(b)):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
    return _trim(quo), _trim(a)


def _poly_mod(a, f, p):
    return _poly_divmod(a, f, p)[1]


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(a, e, f, p):
    result = (1,)
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_invmod(a, f, p):
    """Inverse of a modulo f via extended Euclid."""
    r0, r1 = _trim(f), _poly_mod(a, f, p)
    s0, s1 = (), (1,)
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    c = pow(r0[0], -1, p)
    return _trim([x * c % p for x in s0])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Check a monic polynomial over F_p for irreducibility.

    A reducible degree-m polynomial has an irreducible factor of degree
    k <= m/2, which divides x^{p^k} - x; so it suffices that
    gcd(x^{p^k} - x, f) is constant for k = 1..m//2.
    """
    f = _trim(modulus)
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = (0, 1)
    cur = x
    for _ in range(m // 2):
        cur = _poly_powmod(cur, p, f, p)  # now x^{p^k} mod f
        g = _poly_gcd(_poly_sub(cur, x, p), f, p)
        if len(g) > 1:
            return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lowest (by value of the low-coefficient vector) monic irreducible of degree m."""
    if m == 1:
        return (0, 1)
    for r in range(p ** m):
        digits = []
        v = r
        for _ in range(m):
            digits.append(v % p)
            v //= p
        f = tuple(digits) + (1,)
        if is_irreducible(f, p):
            return f
    raise ParameterError(f"no irreducible polynomial of degree {m} over F_{p}")


class FieldParams:
    """The field F_{p^m} with a fixed monic irreducible modulus polynomial.

    Instances own lazily built add/mul/neg/inv tables (indexed by integer
    representations rep = sum digit_i * p^i) when q <= TABLE_LIMIT.
    """

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p) or p == 2:
            raise ParameterError(f"p={p} must be an odd prime")
        if m < 1:
            raise ParameterError(f"m={m} must be >= 1")
        if modulus is None:
            modulus = find_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[m] != 1:
            raise ParameterError("modulus must be monic of degree m")
        if not is_irreducible(modulus, p):
            raise ParameterError("modulus is not irreducible over F_p")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p ** m
        self._elements: Optional[list["FieldElement"]] = None
        self._mul: Optional[list[list[int]]] = None
        self._add: Optional[list[list[int]]] = None
        self._neg: Optional[list[int]] = None
        self._inv: Optional[list[Optional[int]]] = None

    def __eq__(self, other):
        return (isinstance(other, FieldParams)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"FieldParams(p={self.p})"
        return f"FieldParams(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # --- digits <-> integer representation ---

    def digits_of(self, rep: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(rep % self.p)
            rep //= self.p
        return tuple(out)

    def rep_of(self, digits: Sequence[int]) -> int:
        rep = 0
        for d in reversed(digits):
            rep = rep * self.p + d
        return rep

    # --- element constructors ---

    def elem(self, digits) -> "FieldElement":
        """Element from an integer (for m=1, or a rep) or a digit sequence."""
        if isinstance(digits, FieldElement):
            if digits.field != self:
                raise ValueError("element belongs to a different field")
            return digits
        if isinstance(digits, int):
            return self.from_rep(digits % self.q)
        ds = tuple(int(d) % self.p for d in digits)
        if len(ds) != self.m:
            raise ValueError(f"expected {self.m} digits, got {len(ds)}")
        return self.from_rep(self.rep_of(ds))

    def from_rep(self, rep: int) -> "FieldElement":
        if not 0 <= rep < self.q:
            raise ValueError(f"rep {rep} out of range for q={self.q}")
        cache = self._element_cache()
        if cache is not None:
            return cache[rep]
        return FieldElement(self, rep)

    def zero(self) -> "FieldElement":
        return self.from_rep(0)

    def one(self) -> "FieldElement":
        return self.from_rep(1)

    def _element_cache(self):
        if self.q > TABLE_LIMIT:
            return None
        if self._elements is None:
            self._elements = [FieldElement(self, r) for r in range(self.q)]
        return self._elements

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements, in rep order (requires tabulable q)."""
        for r in range(self.q):
            yield self.from_rep(r)

    def units(self) -> Iterator["FieldElement"]:
        for r in range(1, self.q):
            yield self.from_rep(r)

    # --- arithmetic on integer representations ---

    def _build_tables(self):
        q, p = self.q, self.p
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        neg = [0] * q
        digs = [self.digits_of(r) for r in range(q)]
        f = self.modulus
        for a in range(q):
            da = digs[a]
            neg[a] = self.rep_of([(-d) % p for d in da])
            for b in range(a, q):
                db = digs[b]
                s = self.rep_of([(x + y) % p for x, y in zip(da, db)])
                add[a][b] = add[b][a] = s
                if a == 0 or b == 0:
                    continue
                prod = _poly_mod(_poly_mul(da, db, p), f, p)
                r = self.rep_of(prod + (0,) * (self.m - len(prod)))
                mul[a][b] = mul[b][a] = r
        inv: list[Optional[int]] = [None] * q
        for a in range(1, q):
            if inv[a] is None:
                for b in range(1, q):
                    if mul[a][b] == 1:
                        inv[a] = b
                        inv[b] = a
                        break
        self._add, self._mul, self._neg, self._inv = add, mul, neg, inv

    @property
    def add_table(self):
        if self._add is None and self.q <= TABLE_LIMIT:
            self._build_tables()
        return self._add

    @property
    def mul_table(self):
        if self._mul is None and self.q <= TABLE_LIMIT:
            self._build_tables()
        return self._mul

    def add_rep(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self._add[a][b]
        if self.m == 1:
            return (a + b) % self.p
        return self.rep_of([(x + y) % self.p
                            for x, y in zip(self.digits_of(a), self.digits_of(b))])

    def neg_rep(self, a: int) -> int:
        if self.add_table is not None:
            return self._neg[a]
        if self.m == 1:
            return (-a) % self.p
        return self.rep_of([(-d) % self.p for d in self.digits_of(a)])

    def sub_rep(self, a: int, b: int) -> int:
        return self.add_rep(a, self.neg_rep(b))

    def mul_rep(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self._mul[a][b]
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mod(_poly_mul(self.digits_of(a), self.digits_of(b), self.p),
                         self.modulus, self.p)
        return self.rep_of(prod + (0,) * (self.m - len(prod)))

    def inv_rep(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.mul_table is not None:
            return self._inv[a]
        if self.m == 1:
            return pow(a, -1, self.p)
        invd = _poly_invmod(self.digits_of(a), self.modulus, self.p)
        return self.rep_of(invd + (0,) * (self.m - len(invd)))

    def pow_rep(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv_rep(a), -e
        if self.m == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul_rep(result, a)
            a = self.mul_rep(a, a)
            e >>= 1
        return result

    def random_element(self, rng: random.Random) -> "FieldElement":
        """Uniform element via independent uniform digits."""
        return self.elem([rng.randrange(self.p) for _ in range(self.m)])

    def random_unit(self, rng: random.Random) -> "FieldElement":
        while True:
            a = self.random_element(rng)
            if a.rep != 0:
                return a


class FieldElement:
    """An element of F_{p^m}: immutable, canonical digits, cached rep."""

    __slots__ = ("field", "rep")

    def __init__(self, field: FieldParams, rep: int):
        self.field = field
        self.rep = rep

    @property
    def digits(self) -> tuple[int, ...]:
        return self.field.digits_of(self.rep)

    def is_zero(self) -> bool:
        return self.rep == 0

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return self.field.from_rep(self.field.add_rep(self.rep, other.rep))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self.field.from_rep(self.field.sub_rep(self.rep, other.rep))

    def __neg__(self) -> "FieldElement":
        return self.field.from_rep(self.field.neg_rep(self.rep))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return self.field.from_rep(self.field.mul_rep(self.rep, other.rep))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self.field.from_rep(
            self.field.mul_rep(self.rep, self.field.inv_rep(other.rep)))

    def __pow__(self, e: int) -> "FieldElement":
        return self.field.from_rep(self.field.pow_rep(self.rep, e))

    def inverse(self) -> "FieldElement":
        return self.field.from_rep(self.field.inv_rep(self.rep))

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.rep == other.rep and self.field == other.field)

    def __hash__(self):
        return hash((self.rep, self.field.p, self.field.m))

    def __repr__(self):
        if self.field.m == 1:
            return f"F{self.field.p}({self.rep})"
        return f"F{self.field.p}^{self.field.m}({list(self.digits)})"


def field_arith(a: FieldElement, b, op: str) -> FieldElement:
    """Dispatch wrapper over the element operators (add/sub/mul/inv/pow)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        if b < 0:
            raise ValueError("pow exponent must be non-negative")
        return a ** b
    raise ValueError(f"unknown op {op!r}")


def is_square(a: FieldElement, params: Optional[FieldParams] = None) -> bool:
    """Generalized Euler criterion: a is a square iff a^((q-1)/2) = 1."""
    field = params or a.field
    if a.rep == 0:
        raise ValueError("is_square is defined on nonzero elements only")
    return field.pow_rep(a.rep, (field.q - 1) // 2) == 1


def get_lambda(params: FieldParams, rng: random.Random) -> FieldElement:
    """Uniform random non-square of F_q*, by rejection sampling."""
    if params.p == 2:
        raise ParameterError("no non-square exists in characteristic 2")
    while True:
        a = params.random_unit(rng)
        if not is_square(a, params):
            return a


def mult_order(a: FieldElement, params: Optional[FieldParams] = None) -> int:
    """Multiplicative order of a nonzero element; divides q - 1."""
    field = params or a.field
    if a.rep == 0:
        raise ValueError("mult_order is defined on nonzero elements only")
    order = field.q - 1
    for prime, exp in factorize(field.q - 1):
        order //= prime ** exp
        t = field.pow_rep(a.rep, order)
        while t != 1:
            t = field.pow_rep(t, prime)
            order *= prime
    return order
