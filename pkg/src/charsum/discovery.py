"""Search for constant-ratio pairs and fit closed forms to the sums.

``ratio_test`` decides by cross-multiplication whether A(mu0)(n)/B(mu0')(n+2)
is the same exact rational across a finite evidence window (a window is
evidence, not proof).  ``search_pairs`` sweeps all candidate pairs with a
weight gap of 2 and flags those matching the odd-parts-plus-power-run
construction.  ``fit_closed_form`` recovers the rational function R with
family(n) = C(2n, n) * R(n) by incremental-degree interpolation with exact
rational arithmetic and held-out validation.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .charsums import sum_A, sum_B
from .partition import (
    Partition,
    companion_mu_prime,
    enumerate_partitions,
    format_partition,
    theorem_form_of,
)

MIN_RATIO_WINDOW = 3  # n_hi - n_lo must be at least this
DEFAULT_SEARCH_WINDOW = 12
MAX_FIT_SHIFTS = 10


class FitError(ValueError):
    """No validated rational fit within the degree cap."""


@dataclass(frozen=True)
class TheoremPair:
    """A pair with constant A/B ratio over the inclusive window [n_lo, n_hi]."""

    mu0: Partition
    mu0_prime: Partition
    ratio: Fraction
    n_lo: int
    n_hi: int
    theorem_predicted: bool

    def to_json_dict(self) -> dict:
        return {
            "mu0": format_partition(self.mu0),
            "mu0_prime": format_partition(self.mu0_prime),
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "evidence_n": [self.n_lo, self.n_hi],
            "theorem_predicted": self.theorem_predicted,
        }


def ratio_test(
    mu0: Partition, mu0p: Partition, n_lo: int, n_hi: int
) -> Optional[Fraction]:
    """The constant value of A(mu0)(n)/B(mu0p)(n+2) on [n_lo, n_hi], if any.

    Ratios are compared by cross-multiplication against the first sample
    that is not (0, 0), so zeros never divide.  Returns None when the ratio
    varies, when B vanishes while A does not, or when both sequences are
    identically zero (no information).
    """
    if mu0p.weight() != mu0.weight() + 2:
        raise ValueError(
            f"|mu0_prime| must be |mu0|+2, got {mu0p.weight()} vs {mu0.weight()}"
        )
    if any(p == 1 for p in mu0) or any(p == 1 for p in mu0p):
        raise ValueError("partitions must have smallest part >= 2")
    if n_lo < mu0.weight():
        raise ValueError(f"n_lo={n_lo} is below |mu0|={mu0.weight()}")
    if n_hi - n_lo < MIN_RATIO_WINDOW:
        raise ValueError(f"evidence window needs n_hi - n_lo >= {MIN_RATIO_WINDOW}")

    a_ref = b_ref = None
    for n in range(n_lo, n_hi + 1):
        a = sum_A(mu0, n)
        b = sum_B(mu0p, n + 2)
        if a_ref is None:
            if (a, b) == (0, 0):
                continue
            if b == 0:
                return None  # A nonzero against zero B: no finite constant
            a_ref, b_ref = a, b
        elif a * b_ref != b * a_ref:
            return None
    if a_ref is None:
        return None
    return Fraction(a_ref, b_ref)


def _candidate_pairs(K: int, window: int):
    for w in range(K + 1):
        for mu0 in enumerate_partitions(w, min_part=2):
            for mu0p in enumerate_partitions(w + 2, min_part=2):
                yield mu0, mu0p, w, w + window


def _eval_candidate(args: tuple[tuple[int, ...], tuple[int, ...], int, int]):
    mu0_parts, mu0p_parts, n_lo, n_hi = args
    ratio = ratio_test(Partition(mu0_parts), Partition(mu0p_parts), n_lo, n_hi)
    return None if ratio is None else (ratio.numerator, ratio.denominator)


def search_pairs(
    K: int, window: int = DEFAULT_SEARCH_WINDOW, jobs: int = 1
) -> list[TheoremPair]:
    """All constant-ratio pairs with |mu0| <= K and |mu0'| = |mu0| + 2.

    Every mu0 with smallest part >= 2 (the empty partition included) is
    tested against every same-constraint mu0' of weight |mu0| + 2 over
    n in [|mu0|, |mu0| + window].  Output order is deterministic: weight
    ascending, then the lexicographic-descending enumeration order for mu0
    and mu0'.  Candidates are independent, so jobs > 1 evaluates them in a
    process pool; results merge in candidate order regardless.
    """
    if K < 2:
        raise ValueError("K must be >= 2")
    if window < 4:
        raise ValueError("window must be >= 4")
    candidates = list(_candidate_pairs(K, window))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            ratios = list(
                pool.map(
                    _eval_candidate,
                    [(m.parts, mp.parts, lo, hi) for m, mp, lo, hi in candidates],
                    chunksize=8,
                )
            )
        ratios = [None if r is None else Fraction(*r) for r in ratios]
    else:
        ratios = [ratio_test(m, mp, lo, hi) for m, mp, lo, hi in candidates]

    pairs = []
    for (mu0, mu0p, n_lo, n_hi), ratio in zip(candidates, ratios):
        if ratio is None:
            continue
        form = theorem_form_of(mu0)
        predicted = form is not None and companion_mu_prime(form) == mu0p
        pairs.append(TheoremPair(mu0, mu0p, ratio, n_lo, n_hi, predicted))
    return pairs


# ---------------------------------------------------------------------------
# Rational-function fitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalFn:
    """Ratio of polynomials in n, exact rational coefficients (low to high).

    Reduced to lowest terms with a monic denominator.
    """

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]

    def __call__(self, n: int) -> Fraction:
        num = _qp_eval(self.numerator, n)
        den = _qp_eval(self.denominator, n)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at n={n}")
        return num / den

    def to_json_dict(self) -> dict:
        def fmt(cs):
            return [f"{c.numerator}/{c.denominator}" for c in cs]

        return {"numerator": fmt(self.numerator), "denominator": fmt(self.denominator)}


def _qp_trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _qp_eval(cs: tuple[Fraction, ...], n: int) -> Fraction:
    total = Fraction(0)
    for c in reversed(cs):
        total = total * n + c
    return total


def _qp_divmod(a: tuple[Fraction, ...], b: tuple[Fraction, ...]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        f = rem[k + len(b) - 1] / lead
        quot[k] = f
        if f:
            for i, c in enumerate(b):
                rem[k + i] -= f * c
    return _qp_trim(quot), _qp_trim(rem)


def _qp_gcd(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    while b:
        _, r = _qp_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def _reduce_rational(num, den) -> RationalFn:
    g = _qp_gcd(num, den)
    if len(g) > 1 or (g and g[0] != 1):
        num, _ = _qp_divmod(num, g)
        den, _ = _qp_divmod(den, g)
    lead = den[-1]
    num = tuple(c / lead for c in num)
    den = tuple(c / lead for c in den)
    return RationalFn(num, den)


def _nullspace_vector(rows: list[list[Fraction]]) -> Optional[list[Fraction]]:
    """One nonzero kernel vector of the matrix, or None if the kernel is 0."""
    ncols = len(rows[0])
    m = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        m[r] = [c / inv for c in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [c - f * d for c, d in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f0 = free[0]
    vec = [Fraction(0)] * ncols
    vec[f0] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        vec[col] = -m[row_idx][f0]
    return vec


def _family_fn(family: str) -> Callable[[Partition, int], int]:
    if family == "A":
        return sum_A
    if family == "B":
        return sum_B
    raise ValueError(f"family must be 'A' or 'B', got {family!r}")


def fit_closed_form(
    mu0: Partition,
    family: str,
    n_lo: Optional[int] = None,
    degree_cap: Optional[int] = None,
) -> RationalFn:
    """Find R with family(mu0)(n) = C(2n, n) * R(n), exactly, for all n.

    For each degree d = 0, 1, 2, ... a candidate numerator/denominator pair
    of degree <= d is interpolated from 2d+2 consecutive samples starting at
    n_lo, then validated on d+4 fresh held-out samples; the first validated
    candidate is returned in reduced monic-denominator form.  Degenerate
    sample windows (denominator vanishing at a sample point) shift right by
    one, at most MAX_FIT_SHIFTS times per degree.
    """
    if any(p == 1 for p in mu0):
        raise ValueError("mu0 must have smallest part >= 2")
    value = _family_fn(family)
    if n_lo is None:
        n_lo = mu0.weight()
    if n_lo < mu0.weight():
        raise ValueError(f"n_lo={n_lo} is below |mu0|={mu0.weight()}")
    if degree_cap is None:
        degree_cap = 2 * mu0.weight() + 4

    cache: dict[int, Fraction] = {}

    def target(n: int) -> Fraction:
        if n not in cache:
            cache[n] = Fraction(value(mu0, n), comb(2 * n, n))
        return cache[n]

    for d in range(degree_cap + 1):
        for shift in range(MAX_FIT_SHIFTS + 1):
            start = n_lo + shift
            train = [start + i for i in range(2 * d + 2)]
            rows = []
            for n in train:
                y = target(n)
                powers = [Fraction(n) ** k for k in range(d + 1)]
                rows.append(powers + [-y * p for p in powers])
            vec = _nullspace_vector(rows)
            if vec is None:
                break  # genuinely no fit at this degree; raise the degree
            num = _qp_trim(list(vec[: d + 1]))
            den = _qp_trim(list(vec[d + 1 :]))
            if not den or any(_qp_eval(den, n) == 0 for n in train):
                continue  # degenerate window; shift right and retry
            holdout = [train[-1] + 1 + i for i in range(d + 4)]
            if any(_qp_eval(den, n) == 0 for n in holdout):
                continue
            if all(
                target(n) * _qp_eval(den, n) == _qp_eval(num, n) for n in holdout
            ):
                return _reduce_rational(num, den)
            break  # candidate interpolates but fails held-out: wrong degree
    raise FitError(
        f"no validated rational fit for family {family}, mu0={format_partition(mu0) or 'empty'}"
        f" up to degree cap {degree_cap}"
    )
