"""Run-length types of weight vectors and their Poincare polynomials.

A composition {i_1, ..., i_s} of n records the block sizes of equal entries
in a weakly increasing weight vector.  Compositions of a fixed n are
partially ordered by refinement: c' >= c when the blocks of c are obtained
by merging consecutive blocks of c'.  The unique maximal type is all ones,
the unique minimal one is {n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from math import prod


@dataclass(frozen=True)
class Composition:
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("composition must have at least one part")
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "{" + ",".join(str(p) for p in self.parts) + "}"


def compositions(n: int):
    """All compositions of n, ordered by their binary break masks."""
    if n < 1:
        raise ValueError("n must be positive")
    for mask in range(1 << (n - 1)):
        parts = []
        size = 1
        for bit in range(n - 1):
            if mask >> bit & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield Composition(tuple(parts))


def type_of(values) -> Composition:
    """Run-length type of a weakly increasing integer vector."""
    values = tuple(values)
    if not values:
        raise ValueError("type of an empty vector is undefined")
    if any(a > b for a, b in zip(values, values[1:])):
        raise ValueError(f"vector must be weakly increasing, got {values}")
    return Composition(tuple(sum(1 for _ in run) for _, run in groupby(values)))


def leq(lo: Composition, hi: Composition) -> bool:
    """True iff lo <= hi, i.e. hi refines lo.

    Each part of lo must be a sum of consecutive parts of hi, in order.
    """
    if lo.n != hi.n:
        raise ValueError(f"compositions of different n: {lo} vs {hi}")
    hi_iter = iter(hi.parts)
    for target in lo.parts:
        acc = 0
        while acc < target:
            acc += next(hi_iter)
        if acc != target:
            return False
    return True


def canonical_A(comp: Composition) -> tuple:
    """Smallest weight vector of the given type: i_1 twos, i_2 threes, ..."""
    out = []
    for block, size in enumerate(comp.parts, start=2):
        out.extend([block] * size)
    return tuple(out)


@dataclass(frozen=True)
class PoincarePolynomial:
    """Polynomial in q with support on even powers; coeff j is the q^{2j} term."""

    even_coeffs: tuple

    def __post_init__(self):
        if not self.even_coeffs:
            raise ValueError("a polynomial needs at least the constant term")
        for c in self.even_coeffs:
            if not isinstance(c, int) or c < 0:
                raise ValueError("coefficients must be nonnegative integers")
        if len(self.even_coeffs) > 1 and self.even_coeffs[-1] == 0:
            raise ValueError("trailing zero coefficients are not canonical")
        object.__setattr__(self, "even_coeffs", tuple(self.even_coeffs))

    @property
    def degree(self) -> int:
        return 2 * (len(self.even_coeffs) - 1)

    def coefficient(self, power: int) -> int:
        if power % 2 or power < 0:
            return 0
        j = power // 2
        return self.even_coeffs[j] if j < len(self.even_coeffs) else 0

    def evaluate(self, x: int) -> int:
        return sum(c * x ** (2 * j) for j, c in enumerate(self.even_coeffs))

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        a, b = self.even_coeffs, other.even_coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return PoincarePolynomial(tuple(out))

    def __str__(self):
        terms = []
        for j, c in enumerate(self.even_coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}q^{2 * j}")
        return " + ".join(terms) or "0"


def poincare(comp: Composition) -> PoincarePolynomial:
    """Closed-form Poincare polynomial: product over parts of 1 + q^2 + ... + q^{2i}."""
    result = PoincarePolynomial((1,))
    for part in comp.parts:
        result = result * PoincarePolynomial((1,) * (part + 1))
    return result


def poincare_recursive_single(n: int) -> PoincarePolynomial:
    """One-part Poincare polynomial via the orbit-cell recursion.

    P(n) = q^{2n} + q^{2n-2} + P(n-2), with P(0) = 1 and P(1) = 1 + q^2:
    each recursion step adds one open cell of dimension n and one of
    dimension n - 1 over the boundary copy two steps down.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    if n == 0:
        return PoincarePolynomial((1,))
    if n == 1:
        return PoincarePolynomial((1, 1))
    prev = poincare_recursive_single(n - 2)
    coeffs = list(prev.even_coeffs) + [0] * (n + 1 - len(prev.even_coeffs))
    coeffs[n] += 1
    coeffs[n - 1] += 1
    return PoincarePolynomial(tuple(coeffs))


def poincare_value_at_one(comp: Composition) -> int:
    return prod(p + 1 for p in comp.parts)
