"""Level-k sl2 fusion ring and affine-limit bookkeeping.

The fusion ring at level k has basis [0], [1], ..., [k] indexed by
highest weights; the product truncates the classical Clebsch-Gordan
range at the level wall:

    [a] . [b] = sum of [c],  c = |a-b|, |a-b|+2, ..., min(a+b, 2k-a-b).

Products of the basis classes for a weakly increasing weight list B are
taken at level b_n + 1.  The coefficients of [0] .. [b_n] are the limit
multiplicities of the section spaces over the growing Schubert chain whose
direct limit realizes the generalized affine Grassmannian; the coefficient
of [b_n + 1] sits outside that range and is reported with a flag instead of
being dropped or reinterpreted.

Character stabilization is measured from the top end: energies are counted
downward from each module's maximal energy (the direct-limit embeddings
identify the top cells) while h-weights are kept absolute, which is the
combination observed to stabilize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fusion import DEFAULT_DIMENSION_CAP, character_recursive


def _check_level(k: int) -> int:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"level must be a nonnegative integer, got {k!r}")
    return k


def _check_weight(k: int, a: int) -> int:
    if not isinstance(a, int) or not 0 <= a <= k:
        raise ValueError(f"weight must lie in 0..{k}, got {a!r}")
    return a


@dataclass(frozen=True)
class FusionRingElement:
    """Element of the level-k fusion ring in the basis [0] .. [k]."""

    level: int
    coeffs: tuple  # length level + 1, nonnegative integers

    def __post_init__(self):
        _check_level(self.level)
        if len(self.coeffs) != self.level + 1:
            raise ValueError("coefficient vector must have length level + 1")
        if any(not isinstance(c, int) or c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative integers")

    @staticmethod
    def basis(level: int, a: int) -> "FusionRingElement":
        _check_weight(_check_level(level), a)
        coeffs = [0] * (level + 1)
        coeffs[a] = 1
        return FusionRingElement(level, tuple(coeffs))

    @staticmethod
    def unit(level: int) -> "FusionRingElement":
        return FusionRingElement.basis(level, 0)

    def __add__(self, other: "FusionRingElement") -> "FusionRingElement":
        if self.level != other.level:
            raise ValueError("cannot add elements of different levels")
        return FusionRingElement(
            self.level, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "FusionRingElement") -> "FusionRingElement":
        if self.level != other.level:
            raise ValueError("cannot multiply elements of different levels")
        k = self.level
        out = [0] * (k + 1)
        for a, ca in enumerate(self.coeffs):
            if not ca:
                continue
            for b, cb in enumerate(other.coeffs):
                if not cb:
                    continue
                for c in _fusion_range(k, a, b):
                    out[c] += ca * cb
        return FusionRingElement(k, tuple(out))

    def classical_dimension(self) -> int:
        """Total dimension when each [c] is read as the (c+1)-dim sl2 module."""
        return sum(m * (c + 1) for c, m in enumerate(self.coeffs))

    def support(self) -> tuple:
        return tuple(c for c, m in enumerate(self.coeffs) if m)

    def __repr__(self):
        terms = [
            (f"{m}[{c}]" if m != 1 else f"[{c}]")
            for c, m in enumerate(self.coeffs) if m
        ]
        body = " + ".join(terms) if terms else "0"
        return f"FusionRingElement(level={self.level}, {body})"


def _fusion_range(k: int, a: int, b: int):
    return range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2)


def fuse(k: int, a: int, b: int) -> FusionRingElement:
    """Product [a] . [b] in the level-k fusion ring."""
    _check_level(k)
    _check_weight(k, a)
    _check_weight(k, b)
    coeffs = [0] * (k + 1)
    for c in _fusion_range(k, a, b):
        coeffs[c] += 1
    return FusionRingElement(k, tuple(coeffs))


def product_chain(k: int, weights) -> FusionRingElement:
    """Left fold of the fusion product over a list of basis weights."""
    weights = list(weights)
    if not weights:
        return FusionRingElement.unit(_check_level(k))
    out = FusionRingElement.basis(k, weights[0])
    for w in weights[1:]:
        out = out * FusionRingElement.basis(k, w)
    return out


def _check_bundle_weights(bundle):
    bundle = tuple(bundle)
    if not bundle:
        raise ValueError("bundle weight vector must be nonempty")
    for b in bundle:
        if not isinstance(b, int) or b < 0:
            raise ValueError(f"bundle weights must be nonnegative integers, got {b!r}")
    if any(x > y for x, y in zip(bundle, bundle[1:])):
        raise ValueError(f"bundle weights must be weakly increasing, got {bundle}")
    return bundle


@dataclass(frozen=True)
class LimitDecomposition:
    """Multiplicities of the level-(b_n+1) product [b_1] ... [b_n].

    `multiplicities[j]` is the coefficient of [j] for j = 0 .. b_n; the
    coefficient of [b_n + 1] lies outside the decomposition range and is
    carried separately with `boundary_nonzero` set when it appears.
    """

    bundle: tuple
    level: int
    multiplicities: tuple
    boundary_coefficient: int
    boundary_nonzero: bool


def limit_multiplicities(bundle) -> LimitDecomposition:
    bundle = _check_bundle_weights(bundle)
    top = bundle[-1]
    level = top + 1
    product = product_chain(level, bundle)
    mults = product.coeffs[:top + 1]
    boundary = product.coeffs[top + 1]
    return LimitDecomposition(bundle, level, tuple(mults), boundary, boundary != 0)


def classical_limit_check(bundle) -> bool:
    """At level >= sum(b_i) fusion reproduces the classical tensor count."""
    bundle = _check_bundle_weights(bundle)
    k = sum(bundle)
    product = product_chain(k, bundle)
    return product.classical_dimension() == math.prod(b + 1 for b in bundle)


def grassmannian_weights(bundle, steps: int) -> tuple:
    """Module weights (b_1+1, ..., b_n+1) extended by 2*steps copies of b_n+1."""
    bundle = _check_bundle_weights(bundle)
    if not isinstance(steps, int) or steps < 0:
        raise ValueError("steps must be a nonnegative integer")
    grown = tuple(b + 1 for b in bundle) + (bundle[-1] + 1,) * (2 * steps)
    return grown


def grassmannian_section_dims(bundle, steps: int) -> int:
    """Section dimension over the 2*steps-extended Schubert variety."""
    bundle = _check_bundle_weights(bundle)
    base = math.prod(b + 1 for b in bundle)
    return base * (bundle[-1] + 1) ** (2 * steps)


@dataclass(frozen=True)
class StabilizationReport:
    """Top-anchored character strata along the growing Schubert chain.

    `tables[i]` maps each co-energy d <= deg_max (distance below the module's
    maximal energy) to a {h-weight: multiplicity} dict for the i-th module.
    `stable_from` is the least i with tables[i] == tables[i+1] == ... (None
    when the last two tables still differ); `dims` and `expected_dims` track
    the closed-form section count.
    """

    bundle: tuple
    deg_max: int
    tables: tuple
    dims: tuple
    expected_dims: tuple
    stable_from: int | None

    @property
    def dims_match(self) -> bool:
        return self.dims == self.expected_dims


def character_stabilization(bundle, i_max: int, deg_max: int,
                            cap=DEFAULT_DIMENSION_CAP) -> StabilizationReport:
    """Track the top end of the section-space characters as the chain grows.

    Characters come from the peeling recursion, so long extensions stay
    cheap; the cap still bounds the total dimension handled.
    """
    bundle = _check_bundle_weights(bundle)
    if not isinstance(i_max, int) or i_max < 0:
        raise ValueError("i_max must be a nonnegative integer")
    if not isinstance(deg_max, int) or deg_max < 0:
        raise ValueError("deg_max must be a nonnegative integer")
    tables = []
    dims = []
    for i in range(i_max + 1):
        char = character_recursive(grassmannian_weights(bundle, i), cap)
        top_energy = max(t for _, t in char)
        table = {}
        for (w, t), mult in char.items():
            d = top_energy - t
            if d <= deg_max:
                stratum = table.setdefault(d, {})
                stratum[w] = stratum.get(w, 0) + mult
        tables.append(table)
        dims.append(sum(char.values()))
    stable_from = None
    for i in range(i_max, 0, -1):
        if tables[i] != tables[i - 1]:
            break
        stable_from = i - 1
    expected = tuple(grassmannian_section_dims(bundle, i) for i in range(i_max + 1))
    return StabilizationReport(bundle, deg_max, tuple(tables), tuple(dims),
                               expected, stable_from)
