"""Excedance statistics on colored permutations.

Three statistics are computed for an element pi of Z_r wr S_n:

* ``exc``: the number of letters x of the extended alphabet with
  pi(x) > x in the letter order (higher colors first, values ascending
  within a color).  This is the colored excedance number.
* ``exc_A``: the number of positions i in 1..n-1 whose window letter
  exceeds the uncolored letter i, i.e. c_i = 0 and tau(i) > i.  This is
  the excedance number of the underlying permutation restricted to
  color-0 positions.
* ``csum``: the color sum c_1 + ... + c_n.

They satisfy the decomposition identity

    exc(pi) = r * exc_A(pi) + csum(pi)

which ``summarize`` verifies on every element it touches: exc is found by
the direct scan of all r*n letters, the other two from their own
definitions, and the identity is asserted to hold.
"""

from __future__ import annotations

from .perm import ColoredLetter, ColoredPermutation, apply_extended, iter_alphabet


def csum(p: ColoredPermutation) -> int:
    """Sum of the window colors."""
    return sum(p.colors)


def exc_A(p: ColoredPermutation) -> tuple[frozenset[int], int]:
    """Excedance positions of the underlying permutation, and their number.

    Position i in 1..n-1 counts when the window letter tau(i)^{c_i} is
    greater than the uncolored letter i, which in the letter order means
    c_i = 0 and tau(i) > i.  Position n can never count and is excluded.
    """
    positions = frozenset(
        i + 1
        for i in range(p.n - 1)
        if p.colors[i] == 0 and p.values[i] > i + 1
    )
    return positions, len(positions)


def exc(p: ColoredPermutation) -> tuple[frozenset[ColoredLetter], int]:
    """Excedance letters of the extended alphabet, and their number.

    A letter x counts when pi(x) > x.  The scan applies p to each of the
    r*n letters; this is the defining computation, not a shortcut.
    """
    letters = frozenset(
        x for x in iter_alphabet(p.params) if apply_extended(p, x) > x
    )
    return letters, len(letters)


class StatSummary:
    """All three statistics of one element, cross-checked.

    ``exc_set`` and ``exc_A_set`` are computed on first access.
    """

    __slots__ = ("perm", "exc", "exc_A", "csum", "_exc_set", "_exc_A_set")

    def __init__(self, perm, exc, exc_A, csum):
        self.perm = perm
        self.exc = exc
        self.exc_A = exc_A
        self.csum = csum
        self._exc_set = None
        self._exc_A_set = None

    @property
    def exc_set(self) -> frozenset[ColoredLetter]:
        if self._exc_set is None:
            self._exc_set = exc(self.perm)[0]
        return self._exc_set

    @property
    def exc_A_set(self) -> frozenset[int]:
        if self._exc_A_set is None:
            self._exc_A_set = exc_A(self.perm)[0]
        return self._exc_A_set

    def __repr__(self):
        return (
            f"StatSummary({self.perm}, exc={self.exc}, "
            f"exc_A={self.exc_A}, csum={self.csum})"
        )


def summarize(p: ColoredPermutation) -> StatSummary:
    """Compute exc, exc_A and csum of p and assert their consistency.

    The three are computed independently (exc by the full letter scan)
    and must satisfy exc = r*exc_A + csum as well as the range bounds
    exc <= r*n - 1, exc_A <= n - 1, csum <= (r-1)*n.  A violation is an
    implementation bug, not bad input.
    """
    r, n = p.r, p.n
    values = p.values
    colors = p.colors

    # Direct scan: letter v^b maps to tau(v)^{(c_v+b) mod r}, and the image
    # is larger iff its color is smaller, or equal with a larger value.
    n_exc = 0
    for b in range(r):
        for i in range(n):
            c = colors[i] + b
            if c >= r:
                c -= r
            if c < b or (c == b and values[i] > i + 1):
                n_exc += 1

    n_exc_A = 0
    for i in range(n - 1):
        if colors[i] == 0 and values[i] > i + 1:
            n_exc_A += 1

    n_csum = sum(colors)

    if n_exc != r * n_exc_A + n_csum:
        raise AssertionError(
            f"exc = r*exc_A + csum violated for {p}: "
            f"{n_exc} != {r}*{n_exc_A} + {n_csum}"
        )
    if not (n_exc <= r * n - 1 and n_exc_A <= n - 1 and n_csum <= (r - 1) * n):
        raise AssertionError(f"statistic out of range for {p}")
    return StatSummary(p, n_exc, n_exc_A, n_csum)
