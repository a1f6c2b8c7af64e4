"""Fusion modules for the sl2 current algebra, built inside wedge models.

For a weakly increasing weight vector A = (a_1 <= ... <= a_n) the fusion
module is realized as the span of the cyclic vector

    (top wedge of shape m_1) (x) ... (x) (top wedge of shape m_{a_n - 1}),
    m_j = #{alpha : a_alpha >= j + 1},

under the raising currents e_0, ..., e_{n-1}.  Its dimension is the product
of the entries of A, and the basis is bigraded by (h-weight, energy); the
energy grading is normalized so the cyclic vector sits at 0.

The closure is a breadth-first span computation: every vector admitted to
the basis is itself hit with each generator until nothing new appears.  All
generated vectors are bigrade-homogeneous, and reduction against rows whose
pivots share the bigrade keeps every stored row homogeneous, so the
character can be read off the pivot monomials.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .fock import E, WedgeState, apply_current, bigrade, factor_groups, top_wedge
from .linalg import SpanBasis

DEFAULT_DIMENSION_CAP = 100_000


class DimensionCapError(RuntimeError):
    """Raised when a span closure would exceed the configured dimension cap."""


def _check_weights(weights, allow_empty=False):
    weights = tuple(weights)
    if not weights and not allow_empty:
        raise ValueError("weight vector must be nonempty")
    for a in weights:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"weights must be positive integers, got {a!r}")
    if any(a > b for a, b in zip(weights, weights[1:])):
        raise ValueError(f"weights must be weakly increasing, got {weights}")
    return weights


def factor_shapes(weights) -> tuple:
    """Wedge degrees of the tensor factors hosting the module for `weights`.

    Entry j (for j = 1 .. max(weights) - 1) counts the weights >= j + 1;
    zero counts are dropped.  Weights equal to 1 contribute no factor.
    """
    weights = _check_weights(weights, allow_empty=True)
    if not weights:
        return ()
    shapes = []
    for j in range(1, weights[-1]):
        m = sum(1 for a in weights if a >= j + 1)
        if m:
            shapes.append(m)
    return tuple(shapes)


@dataclass
class FusionModule:
    """A built fusion module: cyclic vector, span basis and bigraded character."""

    weights: tuple
    shapes: tuple
    cyclic: WedgeState
    basis: SpanBasis
    character: dict  # (h-weight, energy) -> multiplicity
    energy_offset: int  # raw t-degree of the cyclic vector

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    def weight_range(self) -> tuple:
        weights = [w for w, _ in self.character]
        return min(weights), max(weights)

    def max_energy(self) -> int:
        return max(t for _, t in self.character)

    def highest_weight_vectors(self) -> int:
        top = self.weight_range()[1]
        return sum(m for (w, _), m in self.character.items() if w == top)


def _close_under(seeds, operators, cap) -> SpanBasis:
    # Work with the reduced rows, not the raw operator images: words in the
    # generators have term counts and coefficients that grow with the word
    # length, while the residuals stay no bigger than their grade stratum.
    basis = SpanBasis()
    queue = deque()
    for seed in seeds:
        row = basis.insert_reduced(seed.coeffs) if seed.coeffs else None
        if row is not None:
            queue.append(WedgeState(seed.shapes, row))
    while queue:
        state = queue.popleft()
        for op in operators:
            image = op(state)
            if not image.coeffs:
                continue
            row = basis.insert_reduced(image.coeffs)
            if row is not None:
                if basis.dimension > cap:
                    raise DimensionCapError(
                        f"span dimension exceeded the cap of {cap}")
                queue.append(WedgeState(image.shapes, row))
    return basis


def _character_from_basis(basis, cyclic) -> tuple:
    offset = bigrade(next(iter(cyclic.coeffs)))[1]
    char = Counter()
    for pivot in basis.pivots():
        w, t = bigrade(pivot)
        char[(w, t - offset)] += 1
    return dict(char), offset


@lru_cache(maxsize=None)
def _build_module_cached(weights, cap):
    shapes = factor_shapes(weights)
    cyclic = top_wedge(shapes)
    n = len(weights)
    operators = [
        (lambda s, j=j: apply_current(E, j, s)) for j in range(n)
    ]
    basis = _close_under([cyclic], operators, cap)
    character, offset = _character_from_basis(basis, cyclic)
    return FusionModule(weights, shapes, cyclic, basis, character, offset)


def build_module(weights, cap=DEFAULT_DIMENSION_CAP) -> FusionModule:
    """Close the cyclic vector under e_0 .. e_{n-1} and return the module.

    The result is cached per (weights, cap) and must be treated as read-only.
    The empty weight vector yields the one-dimensional trivial module.
    """
    weights = _check_weights(weights, allow_empty=True)
    # preflight on the expected size; the closure re-checks as it grows
    if math.prod(weights) > cap:
        raise DimensionCapError(
            f"module on {weights} would exceed the cap of {cap}")
    return _build_module_cached(weights, cap)


def character(weights, cap=DEFAULT_DIMENSION_CAP) -> dict:
    """Bigraded character {(h-weight, energy): multiplicity}."""
    return dict(build_module(weights, cap).character)


@lru_cache(maxsize=None)
def _character_peeled(weights):
    # Peel the smallest weight: the span decomposes against the kernel of
    # the surjection that shuffles (a_1, a_2) to (a_1 - 1, a_2 + 1).  The
    # kernel is the module on (a_2 - a_1 + 1, rest) (or on `rest` alone for
    # equal neighbours), raised in energy by one deepest-mode application
    # per factor below level a_1; its h-weights need no shift.
    if not weights:
        return {(0, 0): 1}
    if len(weights) == 1:
        m = weights[0]
        return {(-m + 1 + 2 * k, 0): 1 for k in range(m)}
    a1, a2, rest = weights[0], weights[1], weights[2:]
    shapes = factor_shapes(weights)
    energy_shift = sum(shapes[j] - 1 for j in range(a1 - 1))
    quotient = tuple(sorted(a for a in (a1 - 1, a2 + 1) + rest if a > 1))
    kernel = ((a2 - a1 + 1,) + rest) if a1 < a2 else rest
    char = Counter(_character_peeled(quotient))
    for (w, t), mult in _character_peeled(kernel).items():
        char[(w, t + energy_shift)] += mult
    return dict(char)


def character_recursive(weights, cap=DEFAULT_DIMENSION_CAP) -> dict:
    """Bigraded character by peeling, without any span computation.

    Splitting off the kernel of the adjacent-pair shuffle at the first
    position expresses the character through two smaller modules; iterating
    bottoms out in single-weight strings.  Far cheaper than build_module
    for long weight vectors, and an independent oracle for the builder.
    """
    weights = _check_weights(weights, allow_empty=True)
    if math.prod(weights) > cap:
        raise DimensionCapError(
            f"character of {weights} would exceed the cap of {cap}")
    return dict(_character_peeled(tuple(a for a in weights if a > 1)))


def dimension(weights, cap=DEFAULT_DIMENSION_CAP) -> int:
    return build_module(weights, cap).dimension


@dataclass(frozen=True)
class RelationCheck:
    power: int
    required_vanishing: int  # coefficients of z^k for k < this must vanish
    ok: bool
    first_violation: int | None


@dataclass(frozen=True)
class RelationReport:
    truncation: int
    max_power: int
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def check_relations(truncation: int, max_power: int) -> RelationReport:
    """Verify the defining current relations on a single top wedge.

    The generating series e(z) = e_{n-1} + z e_{n-2} + ... + z^{n-1} e_0 is
    raised to the i-th power on the top wedge of shape (n,); the coefficient
    of z^k must vanish for every k < n (i - 1), i.e. the i-th power is
    divisible by z^{n (i - 1)}.
    """
    n = truncation
    if not isinstance(n, int) or n < 1:
        raise ValueError("truncation must be a positive integer")
    if max_power < 1:
        raise ValueError("max power must be at least 1")
    series = {0: top_wedge((n,))}
    checks = []
    for i in range(1, max_power + 1):
        out = {}
        for deg, state in series.items():
            for k in range(n):
                image = apply_current(E, n - 1 - k, state)
                if image.coeffs:
                    key = deg + k
                    out[key] = out[key] + image if key in out else image
        series = {k: s for k, s in out.items() if s.coeffs}
        required = n * (i - 1)
        violation = None
        for k in sorted(series):
            if k < required:
                violation = k
                break
        checks.append(RelationCheck(i, required, violation is None, violation))
    return RelationReport(n, max_power, tuple(checks))


def monomial_basis(truncation: int) -> list:
    """Sorted raising-mode words (i_1 <= ... <= i_k <= n - k), k = 0 .. n.

    Applied to the top wedge of shape (n,) these give a basis; there are
    binomial(n, k) words of each length k and 2^n in total.
    """
    n = truncation
    if not isinstance(n, int) or n < 1:
        raise ValueError("truncation must be a positive integer")
    words = []
    for k in range(n + 1):
        words.extend(combinations_with_replacement(range(n - k + 1), k))
    return words


def apply_monomial(modes, state: WedgeState) -> WedgeState:
    for j in modes:
        state = apply_current(E, j, state)
    return state


@dataclass
class SubmoduleS:
    """Kernel of the weight-shuffling surjection at a chosen adjacent pair.

    For neighbours a_i < a_{i+1} the submodule is generated inside the
    parent's own wedge model: the generating vector lowers the extremal
    charge by two (top wedge -> its image under the factor's deepest raising
    mode) in every factor below level a_i, and the span is closed under the
    global raising currents together with one extra raising current acting
    only on the factors at levels >= a_i.  Those high levels host the tail
    `adoubleprime` of the tensor-product description, whose first block
    `aprime` (entries i, i+1 removed) names the abstract submodule.  For
    equal neighbours the submodule is the fusion module on `aprime`.
    """

    parent: tuple
    index: int
    case: str  # "general" or "equal"
    aprime: tuple
    adoubleprime: tuple | None
    basis: SpanBasis

    @property
    def dimension(self) -> int:
        return self.basis.dimension


def build_submodule(weights, index: int, cap=DEFAULT_DIMENSION_CAP) -> SubmoduleS:
    weights = _check_weights(weights)
    n = len(weights)
    if not isinstance(index, int) or not 1 <= index <= n - 1:
        raise ValueError(f"index must lie in 1..{n - 1}, got {index!r}")
    if math.prod(weights) > cap:
        raise DimensionCapError(
            f"submodule inside {weights} would exceed the cap of {cap}")
    left, right = weights[index - 1], weights[index]
    aprime = weights[:index - 1] + weights[index + 1:]
    if left == right:
        module = build_module(aprime, cap)
        return SubmoduleS(weights, index, "equal", aprime, None, module.basis)
    adouble = tuple(a - left + 1 for a in weights[index:])
    shapes = factor_shapes(weights)
    generator = top_wedge(shapes)
    # Factors at levels 1 .. a_i - 1 (positions below a_i - 1) get their
    # extremal charge lowered by two.  Levels below a_i all count at least
    # n - i + 1 weights while level a_i counts exactly n - i, so the split
    # never cuts through a block of equal truncations.
    pos = 0
    for m, count in factor_groups(shapes):
        if pos < left - 1:
            assert pos + count <= left - 1, "level split cut a block of equal factors"
            for _ in range(count):
                generator = apply_current(
                    E, m - 1, generator, factors=range(pos, pos + count))
        pos += count
    high = tuple(pos for pos in range(len(shapes)) if pos >= left - 1)
    operators = [
        (lambda s, j=j: apply_current(E, j, s)) for j in range(n)
    ]
    extra_mode = n - index - 1
    operators.append(
        lambda s: apply_current(E, extra_mode, s, factors=high))
    basis = _close_under([generator], operators, cap)
    return SubmoduleS(weights, index, "general", aprime, adouble, basis)


def quotient_weights(weights, index: int) -> tuple:
    """Weights of the quotient in the short exact sequence at `index`."""
    weights = _check_weights(weights)
    n = len(weights)
    if not 1 <= index <= n - 1:
        raise ValueError(f"index must lie in 1..{n - 1}, got {index!r}")
    entries = list(weights)
    entries[index - 1] -= 1
    entries[index] += 1
    if entries[index - 1] <= 0:
        raise ValueError("quotient weight would vanish; weights must exceed 1 here")
    return tuple(sorted(entries))


@dataclass(frozen=True)
class ExactSequenceResult:
    weights: tuple
    index: int
    quotient: tuple
    dim_module: int
    dim_submodule: int
    dim_quotient: int
    holds: bool


def exact_sequence_check(weights, index: int, cap=DEFAULT_DIMENSION_CAP) -> ExactSequenceResult:
    """Check dim(submodule) + dim(quotient) = dim(module) at `index`.

    The quotient dimension is the product of its entries; the other two are
    computed by span closures.
    """
    sub = build_submodule(weights, index, cap)
    module = build_module(weights, cap)
    quotient = quotient_weights(weights, index)
    dim_quotient = math.prod(quotient)
    holds = sub.dimension + dim_quotient == module.dimension
    return ExactSequenceResult(tuple(weights), index, quotient,
                               module.dimension, sub.dimension, dim_quotient, holds)
