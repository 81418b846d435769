"""Brute-force verification harness.

Every closed form shipped by the package has an independent check here:
randomized orbit sampling through literal group words, exhaustive scans over
small parameters, and an empirical certification of the sign convention used
in the quadratic tails of sum-root charts. All arithmetic is exact and every
suite is deterministic under a fixed seed, so any failure is replayable from
the serialized counterexample alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .basic import (
    achievable_dimensions,
    basic_map,
    basic_point,
    decompose,
    derived_set,
    enumerate_basic_subsets,
    max_dimension,
    s_of,
)
from .functionals import (
    Functional,
    GroupWord,
    coadjoint_apply,
    e_star,
    functional,
    functional_to_json,
    group_word,
    orbit_dimension,
    word_to_json,
)
from .orbits import SIGN_RULES, contains, orbit_chart, singular_set, singular_size_formula
from .roots import DIFF, PositiveRoot, RootSystemKind, get_system

DEFAULT_SEED = 314159

_NONZERO_INTS = (-3, -2, -1, 1, 2, 3)

SUITE_NAMES = (
    "chart-soundness",
    "dimension-formulas",
    "decompose-roundtrip",
    "single-orbit-scan",
    "two-dim-support",
    "achievable-dims",
)


class UnknownSuiteError(ValueError):
    """No verification suite with that name."""


class AmbiguousSignConventionError(RuntimeError):
    """Zero or several sign rules survived certification; nothing is guessed."""


@dataclass(frozen=True)
class OracleReport:
    check_name: str
    parameters: dict
    trials: int
    failures: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check_name": self.check_name,
            "parameters": self.parameters,
            "trials": self.trials,
            "failures": self.failures,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class SignConvention:
    """Certified sign rule per kind for the sum-root chart tails."""

    rules: dict[str, str]

    def rule_for(self, kind: RootSystemKind | str) -> str:
        key = kind.value if isinstance(kind, RootSystemKind) else kind
        return self.rules[key]


@dataclass
class SuiteConfig:
    """Knobs shared by the suites; None picks each suite's stated default."""

    kinds: tuple[RootSystemKind, ...] | None = None
    max_n: int | None = None
    trials: int | None = None
    seed: int = DEFAULT_SEED
    scalar: Fraction = Fraction(1)


# ---------------------------------------------------------------------------
# Randomized sampling
# ---------------------------------------------------------------------------

def random_word(system, rng: random.Random, length: int) -> GroupWord:
    """Uniform roots, exact integer parameters in {-3..3} minus zero."""
    letters = [
        (system.roots[rng.randrange(len(system.roots))], Fraction(rng.choice(_NONZERO_INTS)))
        for _ in range(length)
    ]
    return group_word(letters)


def default_word_length(system) -> int:
    # Long enough to reach generic orbit points without letting numerators
    # grow past desk scale.
    return 2 * len(system.roots)


def random_orbit_point(
    kind: RootSystemKind | str,
    n: int,
    alpha: PositiveRoot,
    c=1,
    seed=DEFAULT_SEED,
    word_length: int | None = None,
) -> tuple[Functional, GroupWord]:
    """A deterministic random point of the orbit through c * e*_alpha, with its word."""
    system = get_system(kind, n)
    system.check_member(alpha)
    c = Fraction(c)
    if c == 0:
        raise ValueError("need a nonzero scalar")
    rng = random.Random(seed)
    length = default_word_length(system) if word_length is None else word_length
    word = random_word(system, rng, length)
    return coadjoint_apply(word, e_star(system, alpha, c)), word


def random_functional(system, rng: random.Random, force_root: PositiveRoot | None = None) -> Functional:
    """Sparse random functional with small integer values (half density)."""
    values = {}
    for root in system.roots:
        if rng.randrange(2):
            values[root] = Fraction(rng.choice(_NONZERO_INTS))
    if force_root is not None:
        values[force_root] = Fraction(rng.choice(_NONZERO_INTS))
    return functional(system, values)


def _random_phi(subset, rng: random.Random):
    return {
        root: Fraction(rng.choice(_NONZERO_INTS), rng.choice((1, 2, 3)))
        for root in subset.roots
    }


# ---------------------------------------------------------------------------
# Sign-convention certification
# ---------------------------------------------------------------------------

def resolve_sign_conventions(
    n_max: int = 4, trials: int = 50, seed=DEFAULT_SEED
) -> SignConvention:
    """Certify the tail sign rule empirically, per kind.

    Every candidate rule is tested against sampled orbit points of every
    sum root with n <= n_max; the unique rule with zero failures wins. With
    n_max < 4 some candidates coincide on every exercised term and the
    ambiguity is surfaced as an error rather than resolved by fiat.
    """
    if n_max < 3:
        raise ValueError("certification needs n_max >= 3")
    rules: dict[str, str] = {}
    for kind in (RootSystemKind.B, RootSystemKind.D):
        survivors = []
        for rule_name in sorted(SIGN_RULES):
            if _sign_rule_survives(kind, rule_name, n_max, trials, seed):
                survivors.append(rule_name)
        if len(survivors) != 1:
            raise AmbiguousSignConventionError(
                f"kind {kind.value}: surviving rules {survivors} (need exactly one); "
                f"raise n_max to separate them"
            )
        rules[kind.value] = survivors[0]
    return SignConvention(rules)


def _sign_rule_survives(kind, rule_name, n_max, trials, seed) -> bool:
    for n in range(3, n_max + 1):
        system = get_system(kind, n)
        for alpha in system.roots:
            if alpha.tag != "sum":
                continue
            chart = orbit_chart(kind, n, alpha, 1, sign_rule=rule_name)
            for t in range(trials):
                stamp = f"{seed}:signs:{kind.value}:{n}:{alpha}:{t}"
                point, _ = random_orbit_point(kind, n, alpha, 1, seed=stamp)
                if not contains(chart, point):
                    return False
    return True


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def run_suite(name: str, config: SuiteConfig | None = None) -> OracleReport:
    config = config or SuiteConfig()
    try:
        runner = _SUITES[name]
    except KeyError:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}"
        ) from None
    return runner(config)


def _failure(stamp: str, detail: str, **extra) -> dict:
    record = {"seed": stamp, "detail": detail}
    record.update(extra)
    return record


def _suite_chart_soundness(cfg: SuiteConfig) -> OracleReport:
    kinds = cfg.kinds or tuple(RootSystemKind)
    max_n = cfg.max_n or 4
    trials = cfg.trials or 100
    c = Fraction(cfg.scalar)
    failures = []
    total = 0
    for kind in kinds:
        for n in range(2, max_n + 1):
            system = get_system(kind, n)
            for alpha in system.roots:
                chart = orbit_chart(kind, n, alpha, c)
                for t in range(trials):
                    stamp = f"{cfg.seed}:chart-soundness:{kind.value}:{n}:{alpha}:{t}"
                    point, word = random_orbit_point(kind, n, alpha, c, seed=stamp)
                    total += 1
                    if not contains(chart, point):
                        failures.append(_failure(
                            stamp, f"orbit point escapes the {alpha} chart",
                            kind=kind.value, n=n, alpha=str(alpha),
                            word=word_to_json(word),
                            functional=functional_to_json(point),
                        ))
    return OracleReport(
        "chart-soundness",
        {"kinds": [k.value for k in kinds], "max_n": max_n,
         "trials_per_alpha": trials, "c": str(c), "seed": cfg.seed},
        total,
        failures,
    )


def _suite_dimension_formulas(cfg: SuiteConfig) -> OracleReport:
    kinds = cfg.kinds or tuple(RootSystemKind)
    max_n = cfg.max_n or 6
    scalars = (Fraction(1), Fraction(2), Fraction(-3, 5))
    failures = []
    total = 0
    for kind in kinds:
        for n in range(2, max_n + 1):
            system = get_system(kind, n)
            for alpha in system.roots:
                expected = len(singular_set(kind, n, alpha).singular)
                if expected != singular_size_formula(kind, n, alpha):
                    failures.append(_failure(
                        "-", "singular set size disagrees with the closed form",
                        kind=kind.value, n=n, alpha=str(alpha)))
                for c in scalars:
                    total += 1
                    got = orbit_dimension(e_star(system, alpha, c))
                    if got != expected:
                        failures.append(_failure(
                            "-", f"rank {got} != |S(alpha)| {expected}",
                            kind=kind.value, n=n, alpha=str(alpha), c=str(c)))
    return OracleReport(
        "dimension-formulas",
        {"kinds": [k.value for k in kinds], "max_n": max_n, "seed": cfg.seed},
        total,
        failures,
    )


def _suite_decompose_roundtrip(cfg: SuiteConfig) -> OracleReport:
    max_n = cfg.max_n or 6
    trials = cfg.trials or 200
    failures = []
    total = 0
    for n in range(2, max_n + 1):
        system = get_system(RootSystemKind.A, n)
        subsets = list(enumerate_basic_subsets(n))
        for t in range(trials):
            stamp = f"{cfg.seed}:decompose:{n}:{t}"
            rng = random.Random(stamp)
            subset = subsets[rng.randrange(len(subsets))]
            phi = _random_phi(subset, rng)
            start = basic_point(basic_map(subset, phi)) if phi else functional(system, {})
            word = random_word(system, rng, default_word_length(system))
            moved = coadjoint_apply(word, start)
            total += 1
            result = decompose(moved)
            if result.subset != subset or result.map.phi != phi:
                failures.append(_failure(
                    stamp, "decomposition did not recover (D, phi)",
                    n=n,
                    expected_roots=[str(r) for r in subset.roots],
                    got_roots=[str(r) for r in result.subset.roots],
                    word=word_to_json(word),
                    functional=functional_to_json(moved),
                ))
    return OracleReport(
        "decompose-roundtrip",
        {"max_n": max_n, "trials_per_n": trials, "seed": cfg.seed},
        total,
        failures,
    )


def _suite_single_orbit_scan(cfg: SuiteConfig) -> OracleReport:
    max_n = cfg.max_n or 5
    random_phis = cfg.trials if cfg.trials is not None else 20
    failures = []
    total = 0
    for n in range(2, max_n + 1):
        for subset in enumerate_basic_subsets(n):
            s = s_of(subset)
            single = not derived_set(subset)
            phis = [{root: Fraction(1) for root in subset.roots}]
            for t in range(random_phis if subset.roots else 0):
                rng = random.Random(f"{cfg.seed}:single-orbit:{n}:{subset}:{t}")
                phis.append(_random_phi(subset, rng))
            for phi in phis:
                total += 1
                dim = orbit_dimension(basic_point(basic_map(subset, phi)))
                ok = (dim == s) if single else (dim < s)
                if not ok:
                    failures.append(_failure(
                        "-", f"dimension {dim} vs s(D)={s}, derived-free={single}",
                        n=n, roots=[str(r) for r in subset.roots],
                        phi={str(r): str(v) for r, v in phi.items()}))
    return OracleReport(
        "single-orbit-scan",
        {"max_n": max_n, "random_phis": random_phis, "seed": cfg.seed},
        total,
        failures,
    )


def _suite_two_dim_support(cfg: SuiteConfig) -> OracleReport:
    max_n = cfg.max_n or 6
    trials = cfg.trials or 100
    failures = []
    total = 0
    for n in range(4, max_n + 1):
        system = get_system(RootSystemKind.A, n)
        far = [r for r in system.roots if r.tag == DIFF and r.j - r.i > 2]
        for t in range(trials):
            stamp = f"{cfg.seed}:two-dim:{n}:{t}"
            rng = random.Random(stamp)
            forced = far[rng.randrange(len(far))]
            f = random_functional(system, rng, force_root=forced)
            total += 1
            dim = orbit_dimension(f)
            if dim < 4:
                failures.append(_failure(
                    stamp, f"far-supported functional has orbit dimension {dim} < 4",
                    n=n, forced=str(forced), functional=functional_to_json(f)))
    return OracleReport(
        "two-dim-support",
        {"max_n": max_n, "trials_per_n": trials, "seed": cfg.seed},
        total,
        failures,
    )


def _suite_achievable_dims(cfg: SuiteConfig) -> OracleReport:
    max_n = cfg.max_n or 8
    failures = []
    total = 0
    results = {}
    for n in range(2, max_n + 1):
        reachable = set()
        overall_max = 0
        for subset in enumerate_basic_subsets(n):
            s = s_of(subset)
            overall_max = max(overall_max, s)
            if not derived_set(subset):
                reachable.add(s)
        total += 1
        expected = achievable_dimensions(n)
        results[str(n)] = sorted(reachable)
        if sorted(reachable) != expected:
            failures.append(_failure(
                "-", "scanned dimension set disagrees with the closed form",
                n=n, scanned=sorted(reachable), expected=expected))
        if overall_max != max_dimension(n):
            failures.append(_failure(
                "-", f"max s(D) {overall_max} != {max_dimension(n)}", n=n))
    return OracleReport(
        "achievable-dims",
        {"max_n": max_n, "seed": cfg.seed, "scanned": results},
        total,
        failures,
    )


_SUITES = {
    "chart-soundness": _suite_chart_soundness,
    "dimension-formulas": _suite_dimension_formulas,
    "decompose-roundtrip": _suite_decompose_roundtrip,
    "single-orbit-scan": _suite_single_orbit_scan,
    "two-dim-support": _suite_two_dim_support,
    "achievable-dims": _suite_achievable_dims,
}
