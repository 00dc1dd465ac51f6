"""Desk-scale cryptanalysis of the product-decomposition problem.

Implements the attack-game harness (decomposition / computational /
decisional product games) and two concrete solvers: partitioned exhaustive
search over the index bijection, and a meet-in-the-middle space-time
trade-off that splits the rotation space into a direct sum of a low-degree
and a high-degree slice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from .algebra import (AlgebraElement, AlgebraParams, SecretPair, adjunct,
                      index_h, index_h_inv, iter_gamma)
from .errors import CapacityError
from .kex import PublicParams, derive_public, derive_shared

DEFAULT_MAX_CANDIDATES = 10 ** 7
DEFAULT_MAX_TABLE_ENTRIES = 10 ** 6


@dataclass(frozen=True)
class DpdInstance:
    """A decomposition challenge: public parameters and pk = a*h*gamma."""

    pp: PublicParams
    pk: AlgebraElement


@dataclass
class MitmTable:
    """Offline table: index_h(a1*h*gamma) -> [(a1, gamma), ...]."""

    t: int
    buckets: dict[int, list[tuple[AlgebraElement, AlgebraElement]]]
    entries: int


@dataclass(frozen=True)
class AttackResult:
    pair: Optional[SecretPair]
    candidates_tested: int


def dpd_verify(candidate: SecretPair, inst: DpdInstance) -> bool:
    """True iff the candidate reproduces the challenge public key."""
    return derive_public(candidate, inst.pp) == inst.pk


def key_recovery_check(candidate: SecretPair, peer_pk: AlgebraElement,
                       real_key: AlgebraElement, pp: PublicParams) -> bool:
    """A DPD solution suffices: candidate * peer_pk yields the shared key."""
    return derive_shared(candidate, peer_pk, pp) == real_key


def _rotation_count(pp: PublicParams) -> int:
    return pp.algebra.field.q ** pp.algebra.n


def exhaustive_dpd(inst: DpdInstance, partition_index: int = 0,
                   partition_count: int = 1,
                   max_candidates: int = DEFAULT_MAX_CANDIDATES) -> AttackResult:
    """Scan one contiguous index slice of the rotation space against all gamma.

    The rotation space is addressed through the index bijection as the
    integer range [0, q^n); partition_count tasks may each take one slice.
    """
    algebra = inst.pp.algebra
    total = _rotation_count(inst.pp)
    if not 0 <= partition_index < partition_count:
        raise ValueError("partition_index out of range")
    lo = total * partition_index // partition_count
    hi = total * (partition_index + 1) // partition_count
    gamma_count = algebra.field.q ** (algebra.n // 2 + 1)
    if (hi - lo) * gamma_count > max_candidates:
        raise CapacityError(
            f"{(hi - lo) * gamma_count} candidates exceed the bound {max_candidates}")

    gammas = list(iter_gamma(algebra))
    tested = 0
    for idx in range(lo, hi):
        a = index_h_inv(idx, algebra)
        ah = a * inst.pp.h
        for gamma in gammas:
            tested += 1
            if ah * gamma == inst.pk:
                if a.is_zero() or gamma.is_zero():
                    continue  # cannot form a valid secret pair
                return AttackResult(SecretPair(a, gamma), tested)
    return AttackResult(None, tested)


def _rotation_slice(algebra: AlgebraParams, start: int, width: int):
    """All rotation elements supported on x^start .. x^(start+width-1)."""
    q = algebra.field.q
    for counter in range(q ** width):
        reps = [0] * algebra.dim
        v = counter
        for slot in range(width):
            reps[start + slot] = v % q
            v //= q
        yield algebra.from_reps(reps)


def mitm_offline(pp: PublicParams, t: int,
                 max_entries: int = DEFAULT_MAX_TABLE_ENTRIES) -> MitmTable:
    """Precompute index_h(a1*h*gamma) for every low-slice a1 and gamma."""
    algebra = pp.algebra
    if not 0 <= t <= algebra.n:
        raise ValueError("t must be in [0, n]")
    q = algebra.field.q
    total = q ** t * q ** (algebra.n // 2 + 1)
    if total > max_entries:
        raise CapacityError(f"{total} table entries exceed the bound {max_entries}")
    buckets: dict[int, list] = {}
    entries = 0
    gammas = list(iter_gamma(algebra))
    for a1 in _rotation_slice(algebra, 0, t):
        a1h = a1 * pp.h
        for gamma in gammas:
            key = index_h(a1h * gamma, algebra)
            buckets.setdefault(key, []).append((a1, gamma))
            entries += 1
    return MitmTable(t=t, buckets=buckets, entries=entries)


def mitm_online(table: MitmTable, inst: DpdInstance, t: int) -> AttackResult:
    """Scan the complementary high slice for a colliding (a2, gamma).

    A collision with matching gamma gives a1*h*gamma = pk - a2*h*gamma, so
    (a1 + a2, gamma) solves the instance.
    """
    if t != table.t:
        raise ValueError("table was built for a different t")
    algebra = inst.pp.algebra
    tested = 0
    gammas = list(iter_gamma(algebra))
    for a2 in _rotation_slice(algebra, t, algebra.n - t):
        a2h = a2 * inst.pp.h
        for gamma in gammas:
            tested += 1
            residual = inst.pk - a2h * gamma
            for a1, gamma1 in table.buckets.get(index_h(residual, algebra), ()):
                if gamma1 == gamma:
                    a = a1 + a2
                    if a.is_zero() or gamma.is_zero():
                        continue
                    return AttackResult(SecretPair(a, gamma), tested)
    return AttackResult(None, tested)


# --- attack-game harness ---

@dataclass(frozen=True)
class Challenge:
    """What the challenger hands out, plus hidden state for instrumentation.

    Honest adversaries must only read the public fields; the trailing
    secret fields exist so tests can wire an oracle adversary and assert
    the challenger's structure.
    """

    pp: PublicParams
    pk1: AlgebraElement
    pk2: Optional[AlgebraElement] = None
    k: Optional[AlgebraElement] = None
    b: Optional[int] = None
    secret1: Optional[SecretPair] = None
    secret2: Optional[SecretPair] = None
    secret3: Optional[SecretPair] = None


@dataclass(frozen=True)
class GameOutcome:
    game: str
    trials: int
    successes: int
    advantage: float


def dpd_challenge(pp: PublicParams, rng: random.Random) -> Challenge:
    from .algebra import sample_secret_pair
    s = sample_secret_pair(pp.algebra, rng)
    return Challenge(pp=pp, pk1=derive_public(s, pp), secret1=s)


def cdp_challenge(pp: PublicParams, rng: random.Random) -> Challenge:
    from .algebra import sample_secret_pair
    s1 = sample_secret_pair(pp.algebra, rng)
    s2 = sample_secret_pair(pp.algebra, rng)
    pk1 = derive_public(s1, pp)
    pk2 = derive_public(s2, pp)
    k = derive_shared(s2, pk1, pp)
    return Challenge(pp=pp, pk1=pk1, pk2=pk2, k=k, secret1=s1, secret2=s2)


def ddp_challenge(pp: PublicParams, rng: random.Random, b: int) -> Challenge:
    from .algebra import sample_secret_pair
    s1 = sample_secret_pair(pp.algebra, rng)
    s2 = sample_secret_pair(pp.algebra, rng)
    s3 = sample_secret_pair(pp.algebra, rng)
    pk1 = derive_public(s1, pp)
    pk2 = derive_public(s2, pp)
    k0 = derive_shared(s2, pk1, pp)
    k1 = derive_public(s3, pp)
    return Challenge(pp=pp, pk1=pk1, pk2=pk2, k=(k0 if b == 0 else k1), b=b,
                     secret1=s1, secret2=s2, secret3=s3)


def run_attack_game(game: str, adversary: Callable, pp: PublicParams,
                    rng: random.Random, trials: int = 100) -> GameOutcome:
    """Run the named game repeatedly and report the empirical advantage.

    The adversary receives a Challenge. For the decomposition game it must
    return a SecretPair or None; for the computational game an algebra
    element; for the decisional game a bit.
    """
    if game == "DPD":
        wins = 0
        for _ in range(trials):
            ch = dpd_challenge(pp, rng)
            out = adversary(ch)
            if out is not None and derive_public(out, pp) == ch.pk1:
                wins += 1
        return GameOutcome("DPD", trials, wins, wins / trials)
    if game == "CDP":
        wins = 0
        for _ in range(trials):
            ch = cdp_challenge(pp, rng)
            if adversary(ch) == ch.k:
                wins += 1
        return GameOutcome("CDP", trials, wins, wins / trials)
    if game == "DDP":
        ones = [0, 0]
        counts = [0, 0]
        for _ in range(trials):
            b = rng.randrange(2)
            ch = ddp_challenge(pp, rng, b)
            counts[b] += 1
            if adversary(ch) == 1:
                ones[b] += 1
        freq0 = ones[0] / counts[0] if counts[0] else 0.0
        freq1 = ones[1] / counts[1] if counts[1] else 0.0
        correct = ones[1] + (counts[0] - ones[0])
        return GameOutcome("DDP", trials, correct, abs(freq0 - freq1))
    raise ValueError(f"unknown game {game!r}")
