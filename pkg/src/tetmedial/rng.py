"""SplitMix64, reimplemented so sweeps reproduce bit-for-bit anywhere.

Reference: Steele, Lea & Flood, "Fast splittable pseudorandom number
generators" (OOPSLA 2014); constants as in Vigna's public-domain
``splitmix64.c``. State is a plain ``int`` threaded explicitly through
every call.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB
_TO_UNIT = 1.0 / (1 << 53)

RngState = int


def seed_state(seed: int) -> RngState:
    return seed & _MASK


def next_u64(state: RngState) -> tuple[int, RngState]:
    state = (state + _GOLDEN) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * _MUL1) & _MASK
    z = ((z ^ (z >> 27)) * _MUL2) & _MASK
    return z ^ (z >> 31), state


def next_unit(state: RngState) -> tuple[float, RngState]:
    """Uniform double in [0, 1) from the top 53 bits."""
    value, state = next_u64(state)
    return (value >> 11) * _TO_UNIT, state


def uniform(state: RngState, low: float, high: float) -> tuple[float, RngState]:
    u, state = next_unit(state)
    return low + (high - low) * u, state


def uniform_block(state: RngState, count: int, low: float, high: float) -> tuple[list[float], RngState]:
    """``count`` successive :func:`uniform` draws, inlined for speed."""
    width = (high - low) * _TO_UNIT
    out = []
    for _ in range(count):
        state = (state + _GOLDEN) & _MASK
        z = ((state ^ (state >> 30)) * _MUL1) & _MASK
        z = ((z ^ (z >> 27)) * _MUL2) & _MASK
        out.append(low + width * ((z ^ (z >> 31)) >> 11))
    return out, state
