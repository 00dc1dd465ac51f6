"""The two-message key exchange over the twisted dihedral group algebra.

Public parameters fix (p, m, n), a non-square lambda, and a public element
h whose rotation and reflection parts are both nonzero. A party's public
key is a*h*gamma; the shared key is a*peer_pk*adjunct(gamma).
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .algebra import (AlgebraElement, AlgebraParams, SecretPair, adjunct,
                      sample_secret_pair, sample_subspace)
from .errors import ParameterError
from .field import FieldParams, get_lambda, is_square
from .group import DihedralGroup


class PublicParams:
    """Validated shared parameters: the algebra plus the public element h."""

    def __init__(self, algebra: AlgebraParams, h: AlgebraElement):
        # the protocol needs a non-semisimple algebra, hence p | 2n; the
        # bare algebra is meaningful (and enumerable) without it
        if (2 * algebra.n) % algebra.field.p != 0:
            raise ParameterError(
                f"p={algebra.field.p} must divide the group order "
                f"2n={2 * algebra.n}")
        validate_h(h)
        self.algebra = algebra
        self.h = h

    def __eq__(self, other):
        return (isinstance(other, PublicParams)
                and self.algebra == other.algebra and self.h == other.h)

    def __repr__(self):
        return f"PublicParams({self.algebra!r})"


def validate_h(h: AlgebraElement) -> None:
    if h.rotation_part().is_zero():
        raise ParameterError("public element h has a zero rotation part")
    if h.reflection_part().is_zero():
        raise ParameterError("public element h has a zero reflection part")


def setup_public_params(p: int, m: int, n: int, rng: random.Random,
                        modulus: Optional[Sequence[int]] = None) -> PublicParams:
    """Generate fresh public parameters for (p, m, n).

    Requires p odd prime with p | 2n (so the algebra is not semisimple and
    the known Maschke-style decomposition attack does not apply).
    """
    if n < 3:
        raise ParameterError(f"n={n} must be >= 3")
    field = FieldParams(p, m, modulus)
    if (2 * n) % p != 0:
        raise ParameterError(f"p={p} must divide 2n={2 * n}")
    group = DihedralGroup(n)
    lam = get_lambda(field, rng)
    algebra = AlgebraParams(field, group, lam)
    h = sample_subspace("h_element", algebra, rng)
    return PublicParams(algebra, h)


def derive_public(secret: SecretPair, pp: PublicParams) -> AlgebraElement:
    """pk = a * h * gamma."""
    return (secret.a * pp.h) * secret.gamma


def derive_shared(secret: SecretPair, peer_pk: AlgebraElement,
                  pp: PublicParams) -> AlgebraElement:
    """k = a * peer_pk * adjunct(gamma). Erase the secret afterwards."""
    return (secret.a * peer_pk) * adjunct(secret.gamma, pp.algebra)


class Session:
    """Single-owner protocol session; the secret is erased on completion."""

    def __init__(self, role: str, session_id: bytes, pp: PublicParams,
                 rng: random.Random):
        if role not in ("initiator", "responder"):
            raise ValueError("role must be 'initiator' or 'responder'")
        self.role = role
        self.session_id = session_id
        self.pp = pp
        self._secret: Optional[SecretPair] = sample_secret_pair(pp.algebra, rng)
        self.public_key = derive_public(self._secret, pp)
        self.key: Optional[AlgebraElement] = None

    @property
    def secret(self) -> SecretPair:
        if self._secret is None:
            raise RuntimeError("secret has been erased")
        return self._secret

    def complete(self, peer_pk: AlgebraElement) -> AlgebraElement:
        """Derive the session key and erase the secret pair."""
        if self._secret is None:
            raise RuntimeError("session already completed")
        self.key = derive_shared(self._secret, peer_pk, self.pp)
        self._secret = None
        return self.key
