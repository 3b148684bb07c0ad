"""Deterministic pseudo-random stream (splitmix64).

Array initialisation must be reproducible from the session seed alone, on
any platform, so we avoid the stdlib Mersenne twister and pin the exact
integer recurrence here.
"""

MASK = (1 << 64) - 1


def splitmix64(seed: int):
    """Infinite stream of 64-bit values."""
    x = seed & MASK
    while True:
        x = (x + 0x9E3779B97F4A7C15) & MASK
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        yield z ^ (z >> 31)


def draw_cell_values(seed: int, n: int, offset: int = 0) -> list[int]:
    """n values in 0..100, skipping the first `offset` draws of the stream."""
    g = splitmix64(seed)
    for _ in range(offset):
        next(g)
    return [next(g) % 101 for _ in range(n)]
