"""SplitMix64, a tiny portable 64-bit generator.

state += 0x9E3779B97F4A7C15; z = state;
z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
output z ^ (z >> 31)   (all arithmetic mod 2^64)

Bounded draws use rejection: values >= 2^64 - (2^64 mod m) are discarded and
the accepted value is reduced mod m, so ``below(m)`` is exactly uniform.
"""

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, m):
        limit = (1 << 64) - (1 << 64) % m
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m
