"""Words in a free group.

A letter is a nonzero int: ``g + 1`` stands for generator ``g`` and
``-(g + 1)`` for its inverse.  A word is a tuple of letters.  Keeping the
encoding this flat makes inversion and rewriting cheap and uniform.
"""

from collections import Counter
from typing import Iterable, Sequence, Tuple

Word = Tuple[int, ...]


def letter(gen: int, sign: int = 1) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return sign * (gen + 1)


def generator_of(x: int) -> int:
    return abs(x) - 1


def sign_of(x: int) -> int:
    return 1 if x > 0 else -1


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Iterable[int]) -> Word:
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Iterable[int]) -> Word:
    """Freely reduce, then strip letters that cancel around the cycle."""
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def is_freely_reduced(w: Sequence[int]) -> bool:
    return all(w[k] != -w[k + 1] for k in range(len(w) - 1))


def is_cyclically_reduced(w: Sequence[int]) -> bool:
    return is_freely_reduced(w) and (len(w) < 2 or w[0] != -w[-1])


def rotations(w: Sequence[int]):
    w = tuple(w)
    for k in range(len(w)):
        yield w[k:] + w[:k]


def cyclic_key(w: Sequence[int]) -> Word:
    """Canonical representative of the cyclic word of ``w`` up to inversion.

    Two relators with the same key define the same normal closure, so one
    of them is redundant.
    """
    w = cyclic_reduce(w)
    if not w:
        return ()
    return min(min(rotations(w)), min(rotations(inverse(w))))


def exponent_sums(w: Sequence[int], ngens: int) -> list:
    sums = [0] * ngens
    for x in w:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


def occurrences(w: Sequence[int]) -> Counter:
    """Number of occurrences of each generator, ignoring sign."""
    return Counter(abs(x) - 1 for x in w)


def power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        return tuple(inverse(w)) * (-k)
    return tuple(w) * k


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """``u v u^-1 v^-1``."""
    return tuple(u) + tuple(v) + inverse(u) + inverse(v)
