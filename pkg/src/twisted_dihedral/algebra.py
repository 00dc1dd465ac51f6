"""Elements and arithmetic of the twisted dihedral group algebra.

An algebra element is a vector of 2n field coefficients: coeffs[i] for
i < n multiplies the rotation basis vector for x^i, coeffs[n+i] multiplies
the reflection basis vector for x^i y. The product is twisted by the
cocycle that takes the value lambda exactly on reflection pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .cocycle import Cocycle
from .errors import ParameterError
from .field import FieldElement, FieldParams, is_square
from .group import DihedralGroup


class AlgebraParams:
    """Field, group, and the twisting non-square lambda, bundled."""

    def __init__(self, field: FieldParams, group: DihedralGroup,
                 lam: FieldElement):
        if lam.field != field:
            raise ParameterError("lambda must live in the given field")
        if lam.is_zero() or is_square(lam, field):
            raise ParameterError("lambda must be a non-square in F_q*")
        self.field = field
        self.group = group
        self.lam = lam
        self.cocycle = Cocycle.alpha(lam, group.n)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def dim(self) -> int:
        return self.group.order

    def element(self, coeffs) -> "AlgebraElement":
        """Element from a sequence of field elements, digit tuples, or reps."""
        elems = tuple(self.field.elem(c) for c in coeffs)
        if len(elems) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(elems)}")
        return AlgebraElement(self, elems)

    def from_reps(self, reps: Sequence[int]) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.field.from_rep(r) for r in reps))

    def zero(self) -> "AlgebraElement":
        return self.from_reps([0] * self.dim)

    def one(self) -> "AlgebraElement":
        return self.from_reps([1] + [0] * (self.dim - 1))

    def basis(self, k: int) -> "AlgebraElement":
        reps = [0] * self.dim
        reps[k] = 1
        return self.from_reps(reps)

    def __eq__(self, other):
        return (isinstance(other, AlgebraParams)
                and self.field == other.field
                and self.group == other.group
                and self.lam == other.lam)

    def __hash__(self):
        return hash((self.field, self.group, self.lam.rep))

    def __repr__(self):
        return (f"AlgebraParams(p={self.field.p}, m={self.field.m}, "
                f"n={self.n}, lambda={self.lam!r})")


class AlgebraElement:
    """Immutable vector of 2n field coefficients."""

    __slots__ = ("params", "coeffs")

    def __init__(self, params: AlgebraParams, coeffs: tuple[FieldElement, ...]):
        self.params = params
        self.coeffs = coeffs

    def reps(self) -> tuple[int, ...]:
        return tuple(c.rep for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c.rep == 0 for c in self.coeffs)

    def rotation_part(self) -> "AlgebraElement":
        n = self.params.n
        zero = self.params.field.zero()
        return AlgebraElement(self.params, self.coeffs[:n] + (zero,) * n)

    def reflection_part(self) -> "AlgebraElement":
        n = self.params.n
        zero = self.params.field.zero()
        return AlgebraElement(self.params, (zero,) * n + self.coeffs[n:])

    def in_rotation_subalgebra(self) -> bool:
        return all(c.rep == 0 for c in self.coeffs[self.params.n:])

    def in_reflection_subspace(self) -> bool:
        return all(c.rep == 0 for c in self.coeffs[:self.params.n])

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return alg_add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return alg_add(self, -other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.params, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return alg_product(self, other, self.params)

    def scale(self, c: FieldElement) -> "AlgebraElement":
        """Coefficient-wise multiplication by a field scalar."""
        return AlgebraElement(self.params, tuple(c * x for x in self.coeffs))

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.params == other.params
                and self.reps() == other.reps())

    def __hash__(self):
        return hash(self.reps())

    def __repr__(self):
        return f"AlgebraElement({list(self.reps())})"


@dataclass(frozen=True)
class SecretPair:
    """A secret (a, gamma): a rotation-supported, gamma in the reversible subspace.

    Both components must be nonzero; zero components produce a zero public
    key and a trivially known shared key, so the samplers resample on zero.
    """

    a: AlgebraElement
    gamma: AlgebraElement

    def __post_init__(self):
        if not self.a.in_rotation_subalgebra():
            raise ValueError("secret 'a' must be supported on the rotation part")
        if not in_gamma(self.gamma):
            raise ValueError("secret 'gamma' must lie in the reversible subspace")
        if self.a.is_zero() or self.gamma.is_zero():
            raise ValueError("secret components must be nonzero")


def _check_same_params(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.params != b.params or len(a.coeffs) != len(b.coeffs):
        raise ValueError("algebra elements have mismatched parameters")


def alg_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_same_params(a, b)
    return AlgebraElement(a.params, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def alg_product(a: AlgebraElement, b: AlgebraElement,
                params: Optional[AlgebraParams] = None) -> AlgebraElement:
    """Schoolbook twisted product: c[table[i][j]] += a[i] b[j] alpha(i, j)."""
    params = params or a.params
    _check_same_params(a, b)
    field = params.field
    n = params.n
    table = params.group.table
    out = [0] * params.dim

    mul_t = field.mul_table
    if mul_t is not None:
        add_t = field.add_table
        mul_lam = mul_t[params.lam.rep]
        breps = b.reps()
        for i, ai in enumerate(a.reps()):
            if ai == 0:
                continue
            row_m = mul_t[ai]
            row_t = table[i]
            refl = i >= n
            for j, bj in enumerate(breps):
                if bj == 0:
                    continue
                v = row_m[bj]
                if refl and j >= n:
                    v = mul_lam[v]
                k = row_t[j]
                out[k] = add_t[out[k]][v]
        return params.from_reps(out)

    # fallback for fields too large to tabulate
    lam = params.lam.rep
    for i, ai in enumerate(a.reps()):
        if ai == 0:
            continue
        for j, bj in enumerate(b.reps()):
            if bj == 0:
                continue
            v = field.mul_rep(ai, bj)
            if i >= n and j >= n:
                v = field.mul_rep(v, lam)
            k = table[i][j]
            out[k] = field.add_rep(out[k], v)
    return params.from_reps(out)


def adjunct(a: AlgebraElement, params: Optional[AlgebraParams] = None) -> AlgebraElement:
    """c[inverse(i)] = a[i] * alpha(i, inverse(i)): 2n multiplications."""
    params = params or a.params
    field = params.field
    group = params.group
    n = params.n
    lam = params.lam.rep
    out = [0] * params.dim
    for i, ai in enumerate(a.reps()):
        j = group.inverse(i)
        # alpha(i, i^-1) is lambda exactly when i is a reflection (then i^-1 = i)
        out[j] = field.mul_rep(ai, lam) if i >= n else ai
    return params.from_reps(out)


def phi(a: AlgebraElement) -> AlgebraElement:
    """Transport reflection coefficients to the rotation slots."""
    if not a.in_reflection_subspace():
        raise ValueError("phi expects an element of the reflection subspace")
    n = a.params.n
    zero = a.params.field.zero()
    return AlgebraElement(a.params, a.coeffs[n:] + (zero,) * n)

def phi_inv(a: AlgebraElement) -> AlgebraElement:
    """Inverse of phi: rotation coefficients moved to the reflection slots."""
    if not a.in_rotation_subalgebra():
        raise ValueError("phi_inv expects an element of the rotation subalgebra")
    n = a.params.n
    zero = a.params.field.zero()
    return AlgebraElement(a.params, (zero,) * n + a.coeffs[:n])


def in_gamma(a: AlgebraElement) -> bool:
    """Membership in the reversible subspace: reflection-supported, a_i = a_{n-i}."""
    n = a.params.n
    if not a.in_reflection_subspace():
        return False
    reps = a.reps()
    return all(reps[n + i] == reps[n + (n - i) % n] for i in range(1, n))


def sample_gamma(params: AlgebraParams, rng: random.Random) -> AlgebraElement:
    """Uniform element of the reversible subspace (free coefficients mirrored)."""
    field = params.field
    n = params.n
    coeffs = [field.zero()] * params.dim
    coeffs[n] = field.random_element(rng)
    for i in range(1, n // 2 + 1):
        v = field.random_element(rng)
        coeffs[n + i] = v
        coeffs[n + (n - i) % n] = v
    return AlgebraElement(params, tuple(coeffs))


def sample_subspace(which: str, params: AlgebraParams,
                    rng: random.Random) -> AlgebraElement:
    """Uniform sample from C_n / C_n*y / the full algebra / the public-h shape."""
    field = params.field
    n = params.n
    zero = field.zero()
    if which == "C_n":
        return AlgebraElement(params, tuple(
            field.random_element(rng) for _ in range(n)) + (zero,) * n)
    if which == "C_n_y":
        return AlgebraElement(params, (zero,) * n + tuple(
            field.random_element(rng) for _ in range(n)))
    if which == "full":
        return AlgebraElement(params, tuple(
            field.random_element(rng) for _ in range(2 * n)))
    if which == "h_element":
        while True:
            h1 = sample_subspace("C_n", params, rng)
            if not h1.is_zero():
                break
        while True:
            h2 = sample_subspace("C_n_y", params, rng)
            if not h2.is_zero():
                break
        return h1 + h2
    raise ValueError(f"unknown subspace {which!r}")


def sample_secret_pair(params: AlgebraParams, rng: random.Random) -> SecretPair:
    """Uniform nonzero (a, gamma) secret pair."""
    while True:
        a = sample_subspace("C_n", params, rng)
        if not a.is_zero():
            break
    while True:
        g = sample_gamma(params, rng)
        if not g.is_zero():
            break
    return SecretPair(a, g)


def iter_gamma(params: AlgebraParams) -> Iterator[AlgebraElement]:
    """Enumerate the whole reversible subspace, q^ceil((n+1)/2) elements."""
    field = params.field
    n = params.n
    q = field.q
    free = n // 2 + 1
    for counter in range(q ** free):
        reps = [0] * params.dim
        v = counter
        for slot in range(free):
            d = v % q
            v //= q
            reps[n + slot] = d
            if slot:
                reps[n + (n - slot) % n] = d
        yield params.from_reps(reps)


def index_h(a: AlgebraElement, params: Optional[AlgebraParams] = None) -> int:
    """Base-q positional encoding of the coefficient vector; a bijection."""
    params = params or a.params
    q = params.field.q
    out = 0
    for rep in reversed(a.reps()):
        out = out * q + rep
    return out


def index_h_inv(value: int, params: AlgebraParams) -> AlgebraElement:
    q = params.field.q
    if not 0 <= value < q ** params.dim:
        raise ValueError("index out of range")
    reps = []
    for _ in range(params.dim):
        reps.append(value % q)
        value //= q
    return params.from_reps(reps)


def digit_width_bytes(p: int) -> int:
    """Bytes per base-p digit in the canonical serialization."""
    bits = (p - 1).bit_length()
    return (bits + 7) // 8


def serialize_field_elements(elems: Sequence[FieldElement]) -> bytes:
    """Canonical fixed-width bytes: digits ascending, big-endian per digit."""
    out = bytearray()
    for e in elems:
        width = digit_width_bytes(e.field.p)
        for d in e.digits:
            out += d.to_bytes(width, "big")
    return bytes(out)


def rep_serialize(x) -> bytes:
    """Canonical injective byte encoding of an algebra element (or a pair)."""
    if isinstance(x, AlgebraElement):
        return serialize_field_elements(x.coeffs)
    if isinstance(x, (tuple, list)) and x and isinstance(x[0], FieldElement):
        return serialize_field_elements(x)
    # duck-typed two-component ciphertext
    if hasattr(x, "c1") and hasattr(x, "c2"):
        return rep_serialize(x.c1) + rep_serialize(x.c2)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def rep_deserialize(data: bytes, params: AlgebraParams) -> AlgebraElement:
    field = params.field
    width = digit_width_bytes(field.p)
    expect = params.dim * field.m * width
    if len(data) != expect:
        raise ValueError(f"expected {expect} bytes, got {len(data)}")
    coeffs = []
    pos = 0
    for _ in range(params.dim):
        digits = []
        for _ in range(field.m):
            d = int.from_bytes(data[pos:pos + width], "big")
            if d >= field.p:
                raise ValueError("digit out of range in serialized element")
            digits.append(d)
            pos += width
        coeffs.append(field.elem(digits))
    return AlgebraElement(params, tuple(coeffs))
