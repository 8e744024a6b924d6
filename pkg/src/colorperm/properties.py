"""Structural properties: the complementing involution and sequence shape.

The involution reverses the window while complementing values, sending
position i < n to position n - i with color negated and the last position
to itself with color c mapped to r - 1 - c.  It exchanges exc with
r*n - 1 - exc, which forces the distribution of exc to be palindromic.

Sequence checks (palindrome, log-concavity, unimodality) work on any
list of nonnegative counts and return a PropertyVerdict carrying a
counterexample when they fail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import ColoredPermutation, GroupParams, enumerate_group, format_window
from .stats import summarize


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of one property check, with a counterexample on failure."""

    name: str
    passed: bool
    r: int | None = None
    n: int | None = None
    counterexample: str | None = None

    def to_json_obj(self) -> dict:
        obj = {
            "property": self.name,
            "r": self.r,
            "n": self.n,
            "pass": self.passed,
        }
        if self.counterexample is not None:
            obj["counterexample"] = self.counterexample
        return obj


def symmetry_map(p: ColoredPermutation) -> ColoredPermutation:
    """The involution complementing exc to r*n - 1 - exc.

    For source positions i = 1..n-1 with window letter j^b, the image
    window has letter (n+1-j)^((r-b) mod r) at position n-i; the last
    position keeps its place and maps j^b to (n+1-j)^(r-1-b).
    """
    r, n = p.r, p.n
    values = [0] * n
    colors = [0] * n
    for i in range(1, n):
        j = p.values[i - 1]
        b = p.colors[i - 1]
        values[n - i - 1] = n + 1 - j
        colors[n - i - 1] = (r - b) % r
    j = p.values[n - 1]
    b = p.colors[n - 1]
    values[n - 1] = n + 1 - j
    colors[n - 1] = r - 1 - b
    return ColoredPermutation._from_trusted(r, tuple(values), tuple(colors))


def check_exc_complement(r: int, n: int) -> PropertyVerdict:
    """Verify exc(image) = r*n - 1 - exc(p) for every element of Z_r wr S_n."""
    target = r * n - 1
    for p in enumerate_group(GroupParams(r, n)):
        q = symmetry_map(p)
        e_p = summarize(p).exc
        e_q = summarize(q).exc
        if e_p + e_q != target:
            return PropertyVerdict(
                name="exc_complement",
                passed=False,
                r=r,
                n=n,
                counterexample=(
                    f"{format_window(p)} -> {format_window(q)}: "
                    f"exc {e_p} + {e_q} != {target}"
                ),
            )
    return PropertyVerdict(name="exc_complement", passed=True, r=r, n=n)


def check_involution(r: int, n: int) -> PropertyVerdict:
    """Verify the map squares to the identity on all of Z_r wr S_n."""
    for p in enumerate_group(GroupParams(r, n)):
        q = symmetry_map(symmetry_map(p))
        if q != p:
            return PropertyVerdict(
                name="symmetry_involution",
                passed=False,
                r=r,
                n=n,
                counterexample=(
                    f"{format_window(p)} maps twice to {format_window(q)}"
                ),
            )
    return PropertyVerdict(name="symmetry_involution", passed=True, r=r, n=n)


def check_symmetry_dist(
    row: list[int], r: int | None = None, n: int | None = None
) -> PropertyVerdict:
    """Verify a distribution row is palindromic.

    When r and n are supplied, the row must have length r*n (the exc
    distribution); a length mismatch is a usage error, not a failure.
    """
    if r is not None and n is not None and len(row) != r * n:
        raise ValueError(f"expected a row of length {r * n}, got {len(row)}")
    length = len(row)
    for k in range(length // 2):
        if row[k] != row[length - 1 - k]:
            return PropertyVerdict(
                name="exc_distribution_palindrome",
                passed=False,
                r=r,
                n=n,
                counterexample=(
                    f"k={k}: {row[k]} != {row[length - 1 - k]} at mirror position"
                ),
            )
    return PropertyVerdict(
        name="exc_distribution_palindrome", passed=True, r=r, n=n
    )


def is_log_concave(
    row: list[int], r: int | None = None, n: int | None = None
) -> PropertyVerdict:
    """Check row[k]^2 >= row[k-1]*row[k+1] at every internal index."""
    for k in range(1, len(row) - 1):
        if row[k] * row[k] < row[k - 1] * row[k + 1]:
            return PropertyVerdict(
                name="log_concave",
                passed=False,
                r=r,
                n=n,
                counterexample=(
                    f"k={k}: {row[k]}^2 < {row[k - 1]} * {row[k + 1]}"
                ),
            )
    return PropertyVerdict(name="log_concave", passed=True, r=r, n=n)


def is_unimodal(
    row: list[int], r: int | None = None, n: int | None = None
) -> PropertyVerdict:
    """Check the row rises (weakly) to a peak and then falls (weakly)."""
    k = 0
    while k + 1 < len(row) and row[k] <= row[k + 1]:
        k += 1
    while k + 1 < len(row) and row[k] >= row[k + 1]:
        k += 1
    if k + 1 < len(row):
        return PropertyVerdict(
            name="unimodal",
            passed=False,
            r=r,
            n=n,
            counterexample=f"rises again at k={k}: {row[k]} < {row[k + 1]}",
        )
    return PropertyVerdict(name="unimodal", passed=True, r=r, n=n)
