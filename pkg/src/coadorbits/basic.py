"""Type-A basic subsets: basic sums, decomposition, derived sets, dimensions.

A basic subset of the type-A positive roots is a set D with alpha - beta
never a positive root for alpha, beta in D; equivalently the positions
(i, j) form a partial injection (no two share a first index, no two share a
second). Every functional lies in exactly one basic sum O_D(phi), and that
sum is a single coadjoint orbit precisely when D has no derived roots.

The decomposition of an arbitrary functional proceeds through invariants of
the coadjoint moves on the strictly-upper matrix of coefficients: the ranks
of all top-right corner blocks recover the positions of D by inclusion-
exclusion, and the maximal minor of each corner block recovers the product
of phi over the pivots it contains. Both families are constant on the whole
basic sum, not just on single orbits, which is what makes the algorithm
total; the generative round-trip suites in the oracle module certify it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .functionals import Functional, Rational, functional
from .linalg import det, rank
from .orbits import singular_set
from .roots import (
    DIFF,
    PositiveRoot,
    RootSystemKind,
    diff,
    get_system,
    parse_root,
    root_from_weight,
)


class WrongKindError(ValueError):
    """Operation restricted to type-A functionals."""


class NotBasicError(ValueError):
    """The given roots do not form a basic subset."""


class DecompositionError(RuntimeError):
    """decomposition-unverified: the rank/minor invariants were inconsistent.

    This cannot happen for genuine functionals; it is surfaced loudly rather
    than silently returning a wrong pair.
    """


def _require_type_a(system) -> None:
    if system.kind is not RootSystemKind.A:
        raise WrongKindError(f"type A only, got kind {system.kind.value}")


# ---------------------------------------------------------------------------
# Basic subsets
# ---------------------------------------------------------------------------

def is_basic(roots: Iterable[PositiveRoot]) -> bool:
    """Whether alpha - beta is never a positive root over the given diff roots."""
    roots = list(roots)
    for r in roots:
        if r.tag != DIFF:
            raise WrongKindError(f"basic subsets contain only difference roots, got {r}")
    for a, b in itertools.permutations(roots, 2):
        w = a.weight()
        for k, v in b.weight().items():
            w[k] = w.get(k, 0) - v
        if root_from_weight(w) is not None:
            return False
    return True


@dataclass(frozen=True)
class BasicSubset:
    """A basic subset of the type-A roots with parameter n."""

    n: int
    roots: tuple[PositiveRoot, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root: PositiveRoot) -> bool:
        return root in self.roots

    def __str__(self) -> str:
        return "{" + ", ".join(str(r) for r in self.roots) + "}"


def basic_subset(n: int, roots: Iterable[PositiveRoot]) -> BasicSubset:
    """Validated constructor; raises NotBasicError when the condition fails."""
    system = get_system(RootSystemKind.A, n)
    roots = tuple(sorted(set(roots), key=PositiveRoot.sort_key))
    for r in roots:
        system.check_member(r)
    if not is_basic(roots):
        raise NotBasicError(f"{[str(r) for r in roots]} is not basic")
    return BasicSubset(n, roots)


@dataclass(frozen=True)
class BasicMap:
    """A map phi from the roots of a basic subset to nonzero rationals."""

    subset: BasicSubset
    phi: dict[PositiveRoot, Fraction]

    def value(self, root: PositiveRoot) -> Fraction:
        return self.phi[root]


def basic_map(subset: BasicSubset, phi: Mapping[PositiveRoot, Rational]) -> BasicMap:
    if set(phi) != set(subset.roots):
        raise ValueError("phi must be defined exactly on the subset")
    vals = {}
    for root, v in phi.items():
        fv = Fraction(v)
        if fv == 0:
            raise ValueError(f"phi({root}) must be nonzero")
        vals[root] = fv
    return BasicMap(subset, vals)


def basic_point(bmap: BasicMap) -> Functional:
    """The distinguished point sum phi(alpha) e*_alpha of the basic sum."""
    system = get_system(RootSystemKind.A, bmap.subset.n)
    return functional(system, dict(bmap.phi))


def support(f: Functional) -> tuple[PositiveRoot, ...]:
    """Roots where the (type A) functional is nonzero, in canonical order."""
    _require_type_a(f.system)
    return f.nonzero_roots()


def singular_union(subset: BasicSubset) -> tuple[PositiveRoot, ...]:
    """Union of the singular sets of the subset's roots, in canonical order."""
    system = get_system(RootSystemKind.A, subset.n)
    union: set[PositiveRoot] = set()
    for alpha in subset.roots:
        union.update(singular_set(system.kind, subset.n, alpha).singular)
    return tuple(r for r in system.roots if r in union)


def s_of(subset: BasicSubset) -> int:
    """s(D): the number of D-singular roots, the dimension of the basic sum."""
    return len(singular_union(subset))


def enumerate_basic_subsets(n: int) -> Iterator[BasicSubset]:
    """Every basic subset exactly once (these are the partial injections i -> j, i < j)."""
    get_system(RootSystemKind.A, n)

    def rec(i: int, used: frozenset[int], acc: tuple[PositiveRoot, ...]) -> Iterator[BasicSubset]:
        if i == n:
            yield BasicSubset(n, tuple(sorted(acc, key=PositiveRoot.sort_key)))
            return
        yield from rec(i + 1, used, acc)
        for j in range(i + 1, n + 1):
            if j not in used:
                yield from rec(i + 1, used | {j}, acc + (diff(i, j),))

    yield from rec(1, frozenset(), ())


# ---------------------------------------------------------------------------
# Chains, special pairs, derived roots
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    """Indices i_1 < ... < i_r denoting the roots e_{i_t} - e_{i_{t+1}}."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.indices) < 2:
            raise ValueError("a chain needs at least two indices")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("chain indices must strictly increase")

    def roots(self) -> tuple[PositiveRoot, ...]:
        return tuple(diff(a, b) for a, b in zip(self.indices, self.indices[1:]))


def _successor_map(subset: BasicSubset) -> dict[int, int]:
    return {r.i: r.j for r in subset.roots}


def chains_in(subset: BasicSubset) -> list[Chain]:
    """All chains contained in the subset: contiguous segments of its paths."""
    nxt = _successor_map(subset)
    chains = []
    for root in subset.roots:
        indices = [root.i, root.j]
        chains.append(Chain(tuple(indices)))
        while indices[-1] in nxt:
            indices.append(nxt[indices[-1]])
            chains.append(Chain(tuple(indices)))
    return chains


def _is_special_pair(subset: BasicSubset, c: Chain, cp: Chain) -> bool:
    if len(c.indices) != len(cp.indices):
        return False
    merged = [x for pair in zip(c.indices, cp.indices) for x in pair]
    if any(a >= b for a, b in zip(merged, merged[1:])):
        return False  # chains must intertwine strictly
    prev = {r.j: r.i for r in subset.roots}
    # A root of D ending at the start of cp must itself start after c does.
    j0 = prev.get(cp.indices[0])
    if j0 is not None and not c.indices[0] < j0:
        return False
    # A root of D extending c forward must land before cp ends.
    nxt = _successor_map(subset)
    i_next = nxt.get(c.indices[-1])
    if i_next is not None and not i_next < cp.indices[-1]:
        return False
    return True


def derived_set(subset: BasicSubset) -> frozenset[PositiveRoot]:
    """All derived roots e_{i_1} - e_{j_1} over special pairs of chains in D."""
    chains = chains_in(subset)
    out: set[PositiveRoot] = set()
    for c in chains:
        for cp in chains:
            if _is_special_pair(subset, c, cp):
                out.add(diff(c.indices[0], cp.indices[0]))
    return frozenset(out)


def is_single_orbit(subset: BasicSubset) -> bool:
    """Whether the basic sum over the subset is one coadjoint orbit."""
    return not derived_set(subset)


# ---------------------------------------------------------------------------
# Decomposition of arbitrary functionals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionResult:
    subset: BasicSubset
    map: BasicMap


def decompose(f: Functional) -> DecompositionResult:
    """The unique (D, phi) with f in the basic sum O_D(phi).

    Positions come from the double differences of top-right corner ranks of
    the coefficient matrix; each phi value comes from the maximal corner
    minor divided by the phi of the other pivots that corner contains.
    """
    _require_type_a(f.system)
    n = f.system.n
    F = [
        [f.value(diff(i, j)) if i < j else Fraction(0) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]

    rank_cache: dict[tuple[int, int], int] = {}

    def corner_rank(a: int, b: int) -> int:
        # rank of rows 1..a against columns b..n
        if a < 1 or b > n:
            return 0
        key = (a, b)
        if key not in rank_cache:
            rank_cache[key] = rank([row[b - 1:] for row in F[:a]])
        return rank_cache[key]

    pivots: list[tuple[int, int]] = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            d2 = (
                corner_rank(a, b)
                - corner_rank(a - 1, b)
                - corner_rank(a, b + 1)
                + corner_rank(a - 1, b + 1)
            )
            if d2 == 1:
                pivots.append((a, b))
            elif d2 != 0:
                raise DecompositionError(f"corner-rank double difference {d2} at {(a, b)}")

    pivots.sort()
    phi: dict[tuple[int, int], Fraction] = {}
    for a, b in pivots:
        corner = sorted((r, c) for r, c in pivots if r <= a and c >= b)
        rows = [r for r, _ in corner]
        col_seq = [c for _, c in corner]
        cols = sorted(col_seq)
        minor = det([[F[r - 1][c - 1] for c in cols] for r in rows])
        inversions = sum(
            1
            for t in range(len(col_seq))
            for u in range(t + 1, len(col_seq))
            if col_seq[t] > col_seq[u]
        )
        sign = -1 if inversions % 2 else 1
        value = sign * minor
        for r, c in corner:
            if (r, c) != (a, b):
                value /= phi[(r, c)]
        if value == 0:
            raise DecompositionError(f"vanishing pivot minor at {(a, b)}")
        phi[(a, b)] = value

    subset = basic_subset(n, [diff(a, b) for a, b in pivots])
    bmap = basic_map(subset, {diff(a, b): v for (a, b), v in phi.items()})
    return DecompositionResult(subset, bmap)


# ---------------------------------------------------------------------------
# Achievable orbit dimensions
# ---------------------------------------------------------------------------

def max_weyl_index(n: int) -> int:
    """Largest m with an orbit of dimension 2m: (n-2)n/4 for even n, (n-1)^2/4 for odd."""
    get_system(RootSystemKind.A, n)
    return (n - 2) * n // 4 if n % 2 == 0 else (n - 1) ** 2 // 4


def max_dimension(n: int) -> int:
    return 2 * max_weyl_index(n)


def achievable_dimensions(n: int) -> list[int]:
    """All coadjoint-orbit dimensions in type A with parameter n: 0, 2, ..., 2M."""
    return list(range(0, max_dimension(n) + 1, 2))


def witness_basic_subsets(n: int) -> list[tuple[int, BasicSubset]]:
    """For each achievable 2m, a derived-root-free basic subset with s = 2m.

    Small m come from single roots widening outward from the middle of the
    index range; larger m append e_1 - e_n to a witness for the index range
    2..n-1 shifted inward.
    """
    get_system(RootSystemKind.A, n)
    if n == 2:
        return [(0, basic_subset(2, [diff(1, 2)]))]
    top = max_weyl_index(n)
    out: list[tuple[int, BasicSubset]] = []
    for m in range(0, n - 1):
        if n % 2 == 0:
            i = n // 2 - m // 2
            j = n // 2 + 1 + (m + 1) // 2
        else:
            i = (n + 1) // 2 - (m + 1) // 2
            j = (n + 1) // 2 + 1 + m // 2
        out.append((m, basic_subset(n, [diff(i, j)])))
    if top > n - 2:
        inner = dict(witness_basic_subsets(n - 2))
        for m in range(n - 1, top + 1):
            shifted = [diff(r.i + 1, r.j + 1) for r in inner[m - (n - 2)].roots]
            out.append((m, basic_subset(n, shifted + [diff(1, n)])))
    return out


def max_singular_witness(n: int) -> BasicSubset:
    """The nested family e_1 - e_n, e_2 - e_{n-1}, ... with the largest s(D)."""
    get_system(RootSystemKind.A, n)
    return basic_subset(n, [diff(k, n + 1 - k) for k in range(1, n // 2 + 1)])


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def basic_map_to_json(bmap: BasicMap) -> dict:
    return {
        "n": bmap.subset.n,
        "roots": [str(r) for r in bmap.subset.roots],
        "phi": {str(r): str(v) for r, v in sorted(
            bmap.phi.items(), key=lambda item: item[0].sort_key())},
    }


def basic_map_from_json(data: Mapping) -> BasicMap:
    n = int(data["n"])
    subset = basic_subset(n, [parse_root(s) for s in data["roots"]])
    phi = {parse_root(name): Fraction(v) for name, v in data["phi"].items()}
    return basic_map(subset, phi)


def iter_scan_records(n: int) -> Iterator[dict]:
    """One JSON-ready record per basic subset: s(D), derived roots, orbit flag."""
    for subset in enumerate_basic_subsets(n):
        derived = derived_set(subset)
        yield {
            "n": n,
            "roots": [str(r) for r in subset.roots],
            "s": s_of(subset),
            "derived": sorted(str(r) for r in derived),
            "single_orbit": not derived,
        }
