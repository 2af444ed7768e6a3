"""Sums of squared characters over two-rowed and hook shapes.

Both families admit exact constant-term expressions.  With mu0 = (a_1,...,a_r)
(smallest part >= 2) and n >= |mu0|:

  two-rowed  A(mu0)(n) = -1/2 * [x^(n+1)] (1-x)^2 (1+x)^(2(n-sum a)) prod (1+x^{a_i})^2
  hook       B(mu0)(n) =        [x^(n-1)] (1+x)^(2n-2-2 sum a) prod (x^{a_i}-(-1)^{a_i})(1-(-1)^{a_i} x^{a_i})

When 2n-2-2*sum(a) < 0 (exactly the n = |mu0| edge) the binomial factor is
read as a formal power series; the generalized binomial coefficients keep
everything in integers.  The signed expressions are evaluated literally and
the results asserted to be non-negative integers, so a transcription slip in
a sign or the halving surfaces as a hard error instead of a wrong value.

``verify_theorem`` checks 2*A(mu0)(n) = B(mu0')(n+2) over an n-range for a
partition in theorem form, mu0' its companion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import char_mn, padded_class
from .partition import (
    Partition,
    companion_mu_prime,
    format_partition,
    make_partition,
    theorem_form_of,
    theorem_form_reason,
)
from .polyring import ONE_MINUS_X, IntPoly, binomial_coeff


class InternalConsistencyError(RuntimeError):
    """A value violated an identity the math guarantees (implementation bug)."""


def _check_args(mu0: Partition, n: int) -> None:
    if any(p == 1 for p in mu0):
        raise ValueError("mu0 must have smallest part >= 2")
    if n < mu0.weight():
        raise ValueError(f"n={n} is below |mu0|={mu0.weight()}")


def _series_coeff(small: IntPoly, e: int, target: int) -> int:
    """[x^target] (1+x)^e * small(x), expanding (1+x)^e as a binomial series.

    ``small`` has non-negative exponents only, so series terms beyond
    x^target can never contribute: the truncation order is exact.
    """
    total = 0
    for k, c in enumerate(small.coeffs):
        if c and target - k >= 0:
            total += c * binomial_coeff(e, target - k)
    return total


def sum_A(mu0: Partition, n: int) -> int:
    """Sum of squared characters over all two-rowed shapes of n."""
    _check_args(mu0, n)
    small = ONE_MINUS_X * ONE_MINUS_X
    for a in mu0.parts:
        f = IntPoly([1] + [0] * (a - 1) + [1])
        small = small * f * f
    c = _series_coeff(small, 2 * (n - mu0.weight()), n + 1)
    value, rem = divmod(-c, 2)
    if rem != 0:
        raise InternalConsistencyError(
            f"two-rowed coefficient {c} for mu0={mu0!r}, n={n} is odd"
        )
    if value < 0:
        raise InternalConsistencyError(
            f"two-rowed sum came out negative ({value}) for mu0={mu0!r}, n={n}"
        )
    return value


def sum_B(mu0: Partition, n: int) -> int:
    """Sum of squared characters over all hook shapes of n."""
    _check_args(mu0, n)
    small = IntPoly((1,))
    for a in mu0.parts:
        s = 1 if a % 2 == 0 else -1  # (-1)^a
        small = small * IntPoly([-s] + [0] * (a - 1) + [1])
        small = small * IntPoly([1] + [0] * (a - 1) + [-s])
    value = _series_coeff(small, 2 * n - 2 - 2 * mu0.weight(), n - 1)
    if value < 0:
        raise InternalConsistencyError(
            f"hook sum came out negative ({value}) for mu0={mu0!r}, n={n}"
        )
    return value


def sum_A_bruteforce(mu0: Partition, n: int) -> int:
    """A by definition: squared border-strip characters over (n-j, j)."""
    _check_args(mu0, n)
    cls = padded_class(mu0, n)
    total = 0
    for j in range(n // 2 + 1):
        shape = make_partition([p for p in (n - j, j) if p > 0])
        total += char_mn(shape, cls) ** 2
    return total


def sum_B_bruteforce(mu0: Partition, n: int) -> int:
    """B by definition: squared border-strip characters over (j, 1^(n-j))."""
    _check_args(mu0, n)
    cls = padded_class(mu0, n)
    total = 0
    for j in range(1, n + 1):
        shape = make_partition([j] + [1] * (n - j))
        total += char_mn(shape, cls) ** 2
    return total


@dataclass(frozen=True)
class VerificationReport:
    """Per-n evidence for 2*A(mu0)(n) = B(mu0')(n+2) over [n_lo, n_hi]."""

    mu0: Partition
    mu0_prime: Partition
    n_lo: int
    n_hi: int
    rows: tuple[tuple[int, int, int], ...]  # (n, A(n), B(n+2))
    all_hold: bool

    def to_json_dict(self) -> dict:
        return {
            "mu0": format_partition(self.mu0),
            "mu0_prime": format_partition(self.mu0_prime),
            "rows": [
                {"n": n, "A": str(a), "B": str(b), "holds": 2 * a == b}
                for n, a, b in self.rows
            ],
            "all_hold": self.all_hold,
        }


def verify_theorem(mu0: Partition, n_lo: int, n_hi: int) -> VerificationReport:
    """Check 2*A(mu0)(n) = B(mu0')(n+2) exactly for every n in [n_lo, n_hi]."""
    form = theorem_form_of(mu0)
    if form is None:
        raise ValueError(f"not theorem form: {theorem_form_reason(mu0)}")
    if not mu0.weight() <= n_lo <= n_hi:
        raise ValueError(f"need |mu0| <= n_lo <= n_hi, got {mu0.weight()}, {n_lo}, {n_hi}")
    mu0p = companion_mu_prime(form)
    rows = []
    all_hold = True
    for n in range(n_lo, n_hi + 1):
        a = sum_A(mu0, n)
        b = sum_B(mu0p, n + 2)
        rows.append((n, a, b))
        if 2 * a != b:
            all_hold = False
    return VerificationReport(mu0, mu0p, n_lo, n_hi, tuple(rows), all_hold)
