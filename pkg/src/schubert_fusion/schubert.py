"""Schubert-variety invariants, line-bundle calculus, and the flag model.

Varieties are handled through computable shadows: the label of a variety is
the type (a composition), and the geometric statements exercised here are
the ones with exact numerical content — isomorphism by type, existence of
equivariant surjections, factorization of Poincare polynomials along bundle
projections, the lattice of line bundles with their curve degrees and
section counts, coordinate-ring Hilbert data, and the chain-of-subspaces
model with its unimodular group action over Q[t]/t^n.

The flag model lives in the 2n-dimensional space C^2 (x) C[t]/t^n with
basis v_0 .. v_{n-1}, u_0 .. u_{n-1} (coordinates 0 .. n-1 and n .. 2n-1).
A chain W_1 >= ... >= W_s belongs to the variety of its composition when it
is t-stable with the prescribed codimension profile and each step absorbs
the matching power of t.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .linalg import SpanBasis, rational
from .types import Composition, PoincarePolynomial, leq, poincare, type_of
from .types import canonical_A

__all__ = [
    "SchubertLabel", "BundleSplit", "FlagChain", "GroupElement",
    "isomorphic", "morphism_exists", "bundle_split", "line_bundle_exists",
    "curve_degrees", "sections_dim", "picard_rank", "coordinate_ring_dims",
    "canonical_flag", "flag_conditions", "flag_membership", "group_act",
    "identity_element", "exp_raising", "exp_lowering", "random_group_element",
]


@dataclass(frozen=True)
class SchubertLabel:
    """A Schubert variety named by its type."""

    composition: Composition

    @property
    def n(self) -> int:
        return self.composition.n

    @property
    def s(self) -> int:
        return self.composition.s

    @property
    def canonical_weights(self) -> tuple:
        return canonical_A(self.composition)

    def __str__(self):
        return f"Sh{self.composition}"


def _check_weight_vector(weights, minimum=1, name="weights"):
    weights = tuple(weights)
    if not weights:
        raise ValueError(f"{name} must be nonempty")
    for a in weights:
        if not isinstance(a, int) or a < minimum:
            raise ValueError(f"{name} entries must be integers >= {minimum}, got {a!r}")
    if any(a > b for a, b in zip(weights, weights[1:])):
        raise ValueError(f"{name} must be weakly increasing, got {weights}")
    return weights


def isomorphic(weights_a, weights_b) -> bool:
    """Varieties agree exactly when the weight vectors have the same type."""
    weights_a = _check_weight_vector(weights_a, minimum=2)
    weights_b = _check_weight_vector(weights_b, minimum=2)
    return type_of(weights_a) == type_of(weights_b)


def morphism_exists(source: Composition, target: Composition) -> bool:
    """Equivariant surjection from the `source` variety onto the `target` one.

    Exists exactly when the source type dominates the target in the
    refinement order.
    """
    if source.n != target.n:
        raise ValueError("types must have the same underlying n")
    return leq(target, source)


@dataclass(frozen=True)
class BundleSplit:
    """Fibration of a Schubert variety over a smaller one."""

    fiber: Composition
    base: Composition
    identity_holds: bool  # Poincare polynomial factors as fiber * base


def bundle_split(composition: Composition, cut: int) -> BundleSplit:
    """Split off the first `cut` parts as the fiber type.

    The numerical shadow of the fibration is the factorization of the
    Poincare polynomial, which is checked exactly.
    """
    parts = composition.parts
    if not isinstance(cut, int) or not 1 <= cut <= len(parts) - 1:
        raise ValueError(f"cut must lie in 1..{len(parts) - 1}, got {cut!r}")
    fiber = Composition(parts[:cut])
    base = Composition(parts[cut:])
    identity = poincare(composition) == poincare(fiber) * poincare(base)
    return BundleSplit(fiber, base, identity)


def _check_bundle(bundle):
    bundle = tuple(bundle)
    if not bundle:
        raise ValueError("bundle weight vector must be nonempty")
    for b in bundle:
        if not isinstance(b, int):
            raise ValueError(f"bundle weights must be integers, got {b!r}")
    if any(x > y for x, y in zip(bundle, bundle[1:])):
        raise ValueError(f"bundle weights must be weakly increasing, got {bundle}")
    return bundle


def line_bundle_exists(bundle, composition: Composition) -> bool:
    """The bundle with degree data `bundle` exists on the variety of the type.

    Existence is governed by the refinement order: the bundle's type must be
    dominated by the variety's type.
    """
    bundle = _check_bundle(bundle)
    if len(bundle) != composition.n:
        raise ValueError("bundle length must equal the type's n")
    return leq(type_of(bundle), composition)


def curve_degrees(bundle) -> tuple:
    """Restriction degrees to the coordinate curves, outermost first.

    Entry j (j = 0 .. n-1) is b_1 + ... + b_{n-j}.
    """
    bundle = _check_bundle(bundle)
    n = len(bundle)
    return tuple(sum(bundle[:n - j]) for j in range(n))


def sections_dim(bundle, composition: Composition) -> int:
    """Dimension of the space of global sections, by the fusion-module count.

    Equals the product of (b_i + 1); independent of which variety carries
    the bundle, as long as it exists there.
    """
    bundle = _check_bundle(bundle)
    if any(b < 0 for b in bundle):
        raise ValueError("sections require nonnegative bundle weights")
    if not line_bundle_exists(bundle, composition):
        raise ValueError(f"bundle {bundle} does not exist on type {composition}")
    return math.prod(b + 1 for b in bundle)


def picard_rank(composition: Composition) -> int:
    """Rank of the lattice of line bundles: one generator per block."""
    return composition.s


def coordinate_ring_dims(weights, i_max: int) -> tuple:
    """Graded dimensions of the coordinate ring of the affine cone.

    The i-th graded piece is dual to the fusion module on
    (i(a_1 - 1) + 1, ..., i(a_n - 1) + 1), of dimension prod(i(a_j - 1) + 1).
    """
    weights = _check_weight_vector(weights)
    if not isinstance(i_max, int) or i_max < 0:
        raise ValueError("i_max must be a nonnegative integer")
    return tuple(
        math.prod(i * (a - 1) + 1 for a in weights) for i in range(i_max + 1)
    )


# ---------------------------------------------------------------------------
# Flag-chain model over C^2 (x) C[t]/t^n


def _unit_vector(coord):
    return {coord: rational(1)}


def _shift_vector(vec, power, n):
    """Multiply by t^power: v_m -> v_{m+power}, u_m -> u_{m+power}, drop at n."""
    out = {}
    for coord, val in vec.items():
        kind_base = 0 if coord < n else n
        mode = coord - kind_base
        if mode + power < n:
            out[kind_base + mode + power] = val
    return out


@dataclass(frozen=True)
class FlagChain:
    """Nested chain of subspaces of C^2 (x) C[t]/t^n, largest first."""

    truncation: int
    subspaces: tuple  # of SpanBasis

    def dimensions(self) -> tuple:
        return tuple(w.dimension for w in self.subspaces)


def canonical_flag(composition: Composition) -> FlagChain:
    """The distinguished point: W_alpha = <all v_i; u_j for j >= tail sum>.

    The alpha-th subspace keeps the u-modes at or above the sum of the last
    alpha parts; the final one is the pure v-span.
    """
    n = composition.n
    parts = composition.parts
    subspaces = []
    threshold = 0
    for alpha in range(1, composition.s + 1):
        threshold += parts[composition.s - alpha]  # add i_{s-alpha+1}
        basis = SpanBasis()
        for m in range(n):
            basis.insert(_unit_vector(m))
        for j in range(threshold, n):
            basis.insert(_unit_vector(n + j))
        subspaces.append(basis)
    return FlagChain(n, tuple(subspaces))


def _contains_all(space: SpanBasis, vectors) -> bool:
    return all(space.contains(vec) for vec in vectors)


def flag_conditions(chain: FlagChain, composition: Composition) -> dict:
    """Named membership conditions for a chain against a type.

    ``profile``: the subspace count is s and the codimension steps are
    i_s, i_{s-1}, ..., i_1 starting from the full space.
    ``nested``: each subspace contains the next.
    ``t_stable``: t W_alpha <= W_alpha for every alpha.
    ``t_power_steps``: t^{i_{s-alpha}} W_alpha <= W_{alpha+1}, where W_0 is
    the full space.
    """
    n = composition.n
    if chain.truncation != n:
        raise ValueError("chain truncation must equal the type's n")
    parts = composition.parts
    s = composition.s
    spaces = chain.subspaces
    conditions = {}

    expected_dims = []
    dim = 2 * n
    for alpha in range(1, s + 1):
        dim -= parts[s - alpha]
        expected_dims.append(dim)
    conditions["profile"] = (
        len(spaces) == s and chain.dimensions() == tuple(expected_dims)
    )

    conditions["nested"] = all(
        _contains_all(spaces[alpha], spaces[alpha + 1].row_vectors())
        for alpha in range(len(spaces) - 1)
    )

    conditions["t_stable"] = all(
        _contains_all(space, (_shift_vector(row, 1, n) for row in space.row_vectors()))
        for space in spaces
    )

    steps_ok = True
    for alpha in range(min(len(spaces), s)):
        power = parts[s - alpha - 1]  # i_{s - alpha}
        if alpha == 0:
            generators = [_unit_vector(c) for c in range(2 * n)]
        else:
            generators = spaces[alpha - 1].row_vectors()
        target = spaces[alpha]
        shifted = (_shift_vector(g, power, n) for g in generators)
        if not _contains_all(target, (v for v in shifted if v)):
            steps_ok = False
            break
    conditions["t_power_steps"] = steps_ok
    return conditions


def flag_membership(chain: FlagChain, composition: Composition) -> bool:
    return all(flag_conditions(chain, composition).values())


# ---------------------------------------------------------------------------
# Unimodular group over Q[t]/t^n


def _poly_mul(p, q, n):
    out = [0] * n
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if i + j >= n:
                break
            out[i + j] = out[i + j] + a * b
    return tuple(out)


def _poly_add(p, q):
    return tuple(a + b for a, b in zip(p, q))


@dataclass(frozen=True)
class GroupElement:
    """2x2 matrix over Q[t]/t^n with determinant 1, acting on the flag space.

    Rows are (vv, vu) and (uv, uu): the image of a pure v-vector has
    v-component vv and u-component uv, matching e.v = u for the raising
    generator.
    """

    truncation: int
    vv: tuple
    vu: tuple
    uv: tuple
    uu: tuple

    def __post_init__(self):
        n = self.truncation
        for entry in (self.vv, self.vu, self.uv, self.uu):
            if len(entry) != n:
                raise ValueError("matrix entries must be length-n coefficient tuples")
        det = tuple(
            a - b for a, b in zip(
                _poly_mul(self.vv, self.uu, n), _poly_mul(self.vu, self.uv, n))
        )
        if det != (1,) + (0,) * (n - 1):
            raise ValueError("group element must have determinant 1")

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if self.truncation != other.truncation:
            raise ValueError("cannot compose elements over different truncations")
        n = self.truncation
        return GroupElement(
            n,
            _poly_add(_poly_mul(self.vv, other.vv, n), _poly_mul(self.vu, other.uv, n)),
            _poly_add(_poly_mul(self.vv, other.vu, n), _poly_mul(self.vu, other.uu, n)),
            _poly_add(_poly_mul(self.uv, other.vv, n), _poly_mul(self.uu, other.uv, n)),
            _poly_add(_poly_mul(self.uv, other.vu, n), _poly_mul(self.uu, other.uu, n)),
        )

    def apply(self, vec, n):
        """Image of a coordinate vector over v_0..v_{n-1}, u_0..u_{n-1}."""
        out = {}
        for coord, val in vec.items():
            if coord < n:
                mode, pairs = coord, ((0, self.vv), (n, self.uv))
            else:
                mode, pairs = coord - n, ((0, self.vu), (n, self.uu))
            for base, poly in pairs:
                for k, coeff in enumerate(poly):
                    if not coeff or mode + k >= n:
                        continue
                    target = base + mode + k
                    acc = out.get(target, 0) + val * coeff
                    if acc:
                        out[target] = acc
                    else:
                        out.pop(target, None)
        return out


def identity_element(n: int) -> GroupElement:
    one = (1,) + (0,) * (n - 1)
    zero = (0,) * n
    return GroupElement(n, one, zero, zero, one)


def _one_param(n, mode, z, lowering):
    """exp(z x t^mode) for the nilpotent raising or lowering generator."""
    if not 0 <= mode < n:
        raise ValueError(f"mode must lie in 0..{n - 1}")
    one = (1,) + (0,) * (n - 1)
    zero = (0,) * n
    ztm = tuple(z if k == mode else 0 for k in range(n))
    if lowering:
        return GroupElement(n, one, ztm, zero, one)
    return GroupElement(n, one, zero, ztm, one)


def exp_raising(n: int, mode: int, z) -> GroupElement:
    return _one_param(n, mode, z, lowering=False)


def exp_lowering(n: int, mode: int, z) -> GroupElement:
    return _one_param(n, mode, z, lowering=True)


def random_group_element(n: int, rng: random.Random, length: int = 4) -> GroupElement:
    """Product of `length` random one-parameter elements with rational z."""
    g = identity_element(n)
    for _ in range(length):
        z = rational(rng.randint(-6, 6), rng.randint(1, 4))
        mode = rng.randrange(n)
        factor = exp_lowering(n, mode, z) if rng.random() < 0.5 else exp_raising(n, mode, z)
        g = g @ factor
    return g


def group_act(element: GroupElement, chain: FlagChain) -> FlagChain:
    """Transform every subspace of the chain by the group element."""
    n = chain.truncation
    if element.truncation != n:
        raise ValueError("group element truncation must match the chain")
    new_spaces = []
    for space in chain.subspaces:
        basis = SpanBasis()
        for row in space.row_vectors():
            image = element.apply(row, n)
            if image:
                basis.insert(image)
        new_spaces.append(basis)
    return FlagChain(n, tuple(new_spaces))
