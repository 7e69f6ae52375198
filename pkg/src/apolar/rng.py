"""Deterministic, portable pseudo-random streams.

The generator is SplitMix64, chosen for its tiny, fully specified integer
state transition: all arithmetic is modulo 2**64, so the output sequence is
bit-exact on every platform and Python version.

Output contract (normative, relied on by the sampling reports):

* ``mix(z)`` is the SplitMix64 finalizer: ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
  z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31`` (mod 2**64).
* A stream with state ``s`` emits ``mix(s + (i+1) * GAMMA)`` as its i-th
  64-bit output, where ``GAMMA = 0x9E3779B97F4A7C15``.
* Substream ``t`` of seed ``S`` starts from state ``mix(S ^ mix(t + 1))``;
  trials indexed by counter therefore draw from disjoint-by-construction
  streams and can run in any order or in parallel without changing results.
* ``below(n)`` is ``next_u64() % n`` (the tiny modulo bias is irrelevant for
  the small ranges used here and keeps the contract one line).
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, state: int):
        self._state = state & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & _MASK
        return mix(self._state)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % n

    def coin(self) -> bool:
        return bool(self.next_u64() & 1)

    def nonzero_int(self, bound: int = 9) -> int:
        """Uniform draw from [-bound, -1] union [1, bound]."""
        v = self.below(2 * bound)
        return v - bound if v < bound else v - bound + 1


def substream(seed: int, counter: int) -> SplitMix64:
    """Independent stream for the given trial counter; see module contract."""
    return SplitMix64(mix((seed & _MASK) ^ mix(counter + 1)))
