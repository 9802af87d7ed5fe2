"""The binomial coefficient convention shared by every closed-form formula."""

from math import comb


def binom(n: int, k: int) -> int:
    """``C(n, k)`` extended to all integers.

    * ``k < 0``: 0
    * ``k == 0``: 1, for every ``n`` including negative ``n``
    * ``0 <= n < k``: 0
    * ``n < 0 < k``: the falling-factorial value ``(-1)^k C(k - n - 1, k)``
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)
