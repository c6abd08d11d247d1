"""Self-contained deterministic PRNG used by every instance generator.

The generator is xorshift64* with the canonical shift triple (12, 25, 27)
and multiplier 0x2545F4914F6CDD1D.  The full update rule, so that any other
implementation can reproduce instance streams bit for bit:

    x ^= x >> 12
    x ^= (x << 25) mod 2^64
    x ^= x >> 27
    output = (x * 0x2545F4914F6CDD1D) mod 2^64

A zero seed would freeze the shift register, so seed 0 is replaced by the
constant 0x9E3779B97F4A7C15 (otherwise the state is the seed itself, reduced
mod 2^64).  Bounded draws use the fixed-point product

    below(n) = (next_u64() * n) >> 64

and Bernoulli draws compare the next raw word against
floor(p * 2^64), where p is an IEEE-754 double.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_MULTIPLIER = 0x2545F4914F6CDD1D
_ZERO_SEED_FILL = 0x9E3779B97F4A7C15


class Xorshift64Star:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = (seed & _MASK64) or _ZERO_SEED_FILL

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * _MULTIPLIER) & _MASK64

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("below() requires a positive bound")
        return (self.next_u64() * n) >> 64

    def chance(self, prob: float) -> bool:
        """True with probability prob; always consumes one word."""
        if not 0.0 <= prob <= 1.0:
            raise ValueError("probability must lie in [0, 1]")
        return self.next_u64() < int(prob * 2.0**64)
