"""Portable seeded generator for the CLI demos.

64-bit linear congruential generator (Knuth's MMIX constants):

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

The initial state is ``seed mod 2**64``, and the generator advances once
before each draw.  ``below(n)`` returns ``(state >> 32) % n``, using the
high 32 bits only.  Any implementation following these three lines
reproduces the demos draw for draw.
"""

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class LCG64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state

    def below(self, n: int) -> int:
        if not 1 <= n <= 1 << 32:
            raise ValueError("n must be in [1, 2^32]")
        return (self.next_u64() >> 32) % n
