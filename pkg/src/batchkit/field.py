"""Exact arithmetic in prime fields F_q for small prime q."""

from __future__ import annotations

import operator
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_q; elements are canonical residues in [0, q-1].

    All operations validate their inputs and return canonical residues.
    Instances are immutable and safe to share across threads.
    """

    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not is_prime(self.q):
            raise ValueError(f"modulus must be a prime integer, got {self.q!r}")

    def check(self, a) -> int:
        """Validate that `a` is a canonical residue and return it as int."""
        a = operator.index(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not a canonical residue mod {self.q}")
        return a

    def add(self, a, b) -> int:
        return (self.check(a) + self.check(b)) % self.q

    def sub(self, a, b) -> int:
        return (self.check(a) - self.check(b)) % self.q

    def mul(self, a, b) -> int:
        return (self.check(a) * self.check(b)) % self.q

    def neg(self, a) -> int:
        return (-self.check(a)) % self.q

    def inv(self, a) -> int:
        a = self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in F_{self.q}")
        return pow(a, -1, self.q)

    def arith(self, op: str, a, b) -> int:
        """Dispatch one of {'add', 'sub', 'mul'} by name."""
        if op not in ("add", "sub", "mul"):
            raise ValueError(f"unknown field operation {op!r}")
        return getattr(self, op)(a, b)

    def elements(self) -> range:
        return range(self.q)


GF2 = PrimeField(2)
