"""Closed-form determinant bounds for zero-one matrices with row sum k.

All values are returned as :class:`LogMagnitude`.  Quantities that are
naturally rational (Ryser's lambda, the generalized mu, harmonic numbers) stay
as :class:`fractions.Fraction` until the final logarithm.

Notation: ``m`` rows, ``n`` columns, ``k`` ones per row.  ``R(m, n, k)`` is
the set of such zero-one matrices, ``R(n, k)`` the square case.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from scipy.optimize import bisect

from .logmag import LogMagnitude

UPPER = "upper"
LOWER = "lower"
CONJECTURAL = "conjectural-upper"


def _xlog(coef: float | Fraction, base: float | int | Fraction) -> float:
    """``coef * ln(base)`` with the convention ``0 * ln(0) = 0``."""
    if coef == 0:
        return 0.0
    if base <= 0:
        raise ValueError(f"log of nonpositive base {base}")
    if isinstance(base, Fraction):
        return float(coef) * (math.log(base.numerator) - math.log(base.denominator))
    return float(coef) * math.log(base)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundParams:
    k: int
    n: Optional[int] = None
    m: Optional[int] = None
    q: Optional[int] = None
    delta: Optional[float] = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.n is not None and not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")
        if self.m is not None:
            if self.m < 1:
                raise ValueError("m must be positive")
            if self.n is None:
                raise ValueError("m given without n")
        if self.q is not None and not 1 <= self.q <= self.k:
            raise ValueError("q must lie in [1, k]")
        if self.delta is not None and not 0 <= self.delta < 1:
            raise ValueError("delta must lie in [0, 1)")

    @property
    def rows(self) -> Optional[int]:
        return self.n if self.m is None else self.m


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: BoundParams
    value: LogMagnitude
    kind: str = UPPER
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        if self.value.is_zero:
            log10, mant, exp = None, 0.0, 0
        else:
            log10 = round(self.value.log10, 12)
            m_txt, e_txt = self.value.format(5).split("e")
            mant, exp = float(m_txt), int(e_txt)
        return {
            "name": self.name,
            "params": asdict(self.params),
            "log10_value": log10,
            "mantissa": mant,
            "exponent": exp,
            "kind": self.kind,
            "detail": self.detail,
        }


# -- classical bounds ---------------------------------------------------------

def hadamard_bound(n: int, k: int) -> LogMagnitude:
    """k^(n/2): every row has norm sqrt(k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return LogMagnitude.power(k, Fraction(n, 2))


def ryser_bound(n: int, k: int) -> tuple[Fraction, LogMagnitude]:
    """Ryser's bound k (k - lambda)^((n-1)/2) with lambda = k(k-1)/(n-1).

    Applies to any n x n zero-one matrix with kn ones.  Returns ``(lambda, value)``.
    """
    if n < 2:
        raise ValueError("Ryser's bound needs n >= 2")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    lam = Fraction(k * (k - 1), n - 1)
    value = LogMagnitude.of(k) * LogMagnitude.power(k - lam, Fraction(n - 1, 2))
    return lam, value


def ryser_gen_bound(m: int, n: int, k: int) -> tuple[Fraction, LogMagnitude]:
    """Volume bound k sqrt(m/n) (k - mu)^((m-1)/2) for A in R(m, n, k).

    mu = k/(m-1) * (mk/n - 1).  When mk <= n the rows can be orthogonal, mu is
    clamped to 0 and Hadamard's k^(m/2) is returned instead.

    At m = n this is Ryser's bound with mu = k(k-1)/(n-1).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if m * k <= n:
        return Fraction(0), hadamard_bound(m, k)
    mu = Fraction(k, m - 1) * (Fraction(m * k, n) - 1)
    value = (
        LogMagnitude.of(k)
        * LogMagnitude.power(Fraction(m, n), 0.5)
        * LogMagnitude.power(k - mu, Fraction(m - 1, 2))
    )
    return mu, value


# -- rows in pairs and in groups of q -----------------------------------------

def c_pair(k: int) -> LogMagnitude:
    """Per-row growth constant of the pair bound; c_pair(k)^n bounds R(n, k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return LogMagnitude.one()
    ln = _xlog(Fraction(k - 1, 4 * k), k * k - 1) + _xlog(Fraction(1, 2 * k), k)
    return LogMagnitude(ln)


def pair_bound(m: int, n: int, k: int) -> LogMagnitude:
    """sqrt(k^2-1)^(m/2 - n/(2k)) * k^(n/(2k)), peeling off overlapping row pairs."""
    if k == 1:
        return hadamard_bound(m, 1)
    ln = _xlog(Fraction(m, 4) - Fraction(n, 4 * k), k * k - 1) + _xlog(Fraction(n, 2 * k), k)
    return LogMagnitude(ln)


def _ln_c_q(q: int, k: int) -> float:
    shrink = 1 - Fraction(q - 1, k)
    return (
        _xlog(Fraction(1, 2 * q) * shrink, q + k - 1)
        + _xlog(Fraction(q - 1, 2 * q) * shrink, k - 1)
        + _xlog(Fraction(q - 1, 2 * k), k)
    )


def c_q(q: int, k: int) -> LogMagnitude:
    """Growth constant when rows are removed q at a time (q=1 is Hadamard, q=2 the pair bound)."""
    if not 1 <= q <= k:
        raise ValueError(f"q={q} outside [1, {k}]")
    return LogMagnitude(_ln_c_q(q, k))


def q_row_bound(m: int, n: int, k: int, q: int) -> LogMagnitude:
    if not 1 <= q <= k:
        raise ValueError(f"q={q} outside [1, {k}]")
    groups = Fraction(m, q) - Fraction(n * (q - 1), k * q)
    ln = (
        _xlog(groups / 2, q + k - 1)
        + _xlog(groups * (q - 1) / 2, k - 1)
        + _xlog(Fraction(n * (q - 1), 2 * k), k)
    )
    return LogMagnitude(ln)


def optimal_q(k: int) -> tuple[int, LogMagnitude]:
    """The q in 1..k minimising c_q(q, k); ties go to the smaller q."""
    if k < 1:
        raise ValueError("k must be >= 1")
    best_q, best = 1, _ln_c_q(1, k)
    for q in range(2, k + 1):
        v = _ln_c_q(q, k)
        if v < best:
            best_q, best = q, v
    return best_q, LogMagnitude(best)


def s_star_residual(s: float) -> float:
    return s**3 + s - math.log1p(s) * (s + 1)


def s_star(tolerance: float = 1e-12) -> float:
    """Positive root of s^3 + s - (s+1) ln(1+s); the limit of optimal_q(k)/k."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    return bisect(s_star_residual, 1e-6, 1.0, xtol=tolerance)


# -- greedy removal -------------------------------------------------------------

def harmonic(j: int) -> Fraction:
    if j < 0:
        raise ValueError("j must be >= 0")
    return sum((Fraction(1, i) for i in range(1, j + 1)), Fraction(0))


def alpha(k: int) -> LogMagnitude:
    """Constant prefactor sqrt((2k-1)!/(k-1)!) (k-1)^((k^2-k)/4) of the greedy bound."""
    if k < 2:
        raise ValueError("alpha needs k >= 2")
    ln = 0.5 * math.log(math.factorial(2 * k - 1) // math.factorial(k - 1))
    ln += _xlog(Fraction(k * k - k, 4), k - 1)
    return LogMagnitude(ln)


def beta(k: int) -> LogMagnitude:
    """Per-row growth rate of the greedy bound."""
    if k < 2:
        raise ValueError("beta needs k >= 2")
    h = harmonic(k)
    ln = _xlog(h / (2 * k), k + k / h - 1) + _xlog((1 - h / k) / 2, k - 1)
    return LogMagnitude(ln)


def greedy_closed_bound(m: int, n: int, k: int) -> LogMagnitude:
    """Closed-form bound on the greedy removal product for R(m, n, k).

    Square matrices use alpha_k * beta_k^n.  Otherwise, with r = ceil(mk/n),
    the product is bounded through the first r-1 removal sizes (Jensen on the
    (i+k-1) factors) plus a separate factor for the a_r groups of size r.
    """
    if not 1 <= m <= n or not 1 <= k <= n:
        raise ValueError("need 1 <= m <= n and 1 <= k <= n")
    if k == 1:
        return LogMagnitude.one()
    if m == n:
        return alpha(k) * beta(k) ** n
    r = _ceil_div(m * k, n)
    h = harmonic(r - 1)
    ln = 0.5 * math.log(math.factorial(r + k - 2) // math.factorial(k - 1))
    ln += _xlog(Fraction(r * r - 3 * r + 2, 4), k - 1)
    if r > 1:
        ln += _xlog(n * h / (2 * k), k + (r - 1) / h - 1)
    ln += _xlog(Fraction(n, 2 * k) * (r - h - 1), k - 1)
    last_groups = (Fraction(n * n, k * k * m) + 1) / 2
    ln += _xlog(last_groups, r + k - 1) + _xlog(last_groups * (r - 1), k - 1)
    return LogMagnitude(ln)


# -- the S_{n,a,k} family ------------------------------------------------------

def det_S_formula(n: int, a, k):
    """det of the n x n matrix with k on the diagonal and a off it: (a(n-1)+k)(k-a)^(n-1).

    Exact for int/Fraction arguments; float arguments give a LogMagnitude
    (and must produce a nonnegative value).
    """
    if isinstance(a, float) or isinstance(k, float):
        first = a * (n - 1) + k
        second = k - a
        if first < 0 or (second < 0 and (n - 1) % 2):
            raise ValueError("value is negative; not representable as a LogMagnitude")
        return LogMagnitude.of(first) * LogMagnitude.power(abs(second), n - 1)
    return (a * (n - 1) + k) * (k - a) ** (n - 1)


# -- lower bounds from designs ----------------------------------------------------

def design_lower_bound(k: int) -> LogMagnitude:
    """Growth rate k^(1/v) (k-1)^(1/2 - 1/(2v)), v = k^2-k+1, of stacked projective planes.

    Only realised when k-1 is a prime power; the formula is evaluated for any k.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    v = k * k - k + 1
    return LogMagnitude(_xlog(Fraction(1, v), k) + _xlog(Fraction(1, 2) - Fraction(1, 2 * v), k - 1))


def design_growth_rate(det: int, size: int) -> LogMagnitude:
    """|det|^(1/size): growth rate of block-diagonal copies of one design."""
    return LogMagnitude.power(abs(det), Fraction(1, size))


def biplane_lower_bound() -> LogMagnitude:
    """Rate 1215^(1/11) from the (11, 5, 2) biplane."""
    return design_growth_rate(1215, 11)


# -- other bounds -------------------------------------------------------------------

def perturbed_bound(k: int, delta: float) -> LogMagnitude:
    """Growth constant for rows with k nonzeros, each within [1-delta, 1+delta]."""
    if not 0 <= delta < 1:
        raise ValueError("delta must lie in [0, 1)")
    if k < 2:
        raise ValueError("k must be >= 2")
    hi = 1 + delta
    lo = 1 - delta
    ln = 0.25 * (1 - 1 / k) * math.log(k * k * hi * hi - lo * lo)
    ln += math.log(k * hi * hi) / (2 * k)
    return LogMagnitude(ln)


def conjectured_dtilde(k_tilde: float) -> LogMagnitude:
    """Conjectural growth rate for T(n, k~) with real k~ > 1.

    With k = floor(k~) and gamma = k~ - k this is c_pair(k)^(1-gamma) *
    c_pair(k+1)^gamma, i.e. rows of weight k and k+1 mixed in proportion.
    Not a proven bound.
    """
    if k_tilde <= 1:
        raise ValueError("k~ must exceed 1")
    k = math.floor(k_tilde)
    gamma = k_tilde - k
    if gamma == 0:
        return c_pair(k)
    return c_pair(k) ** (1 - gamma) * c_pair(k + 1) ** gamma


def rows_at_most_two_bound(n: int) -> LogMagnitude:
    """2^(n/3) for square matrices with at most two ones per row (cited result)."""
    return LogMagnitude.power(2, Fraction(n, 3))


def t2_bound(n: int) -> LogMagnitude:
    """6^(n/6) for n x n zero-one matrices with 2n ones (cited result)."""
    return LogMagnitude.power(6, Fraction(n, 6))


def compare_beats_ryser(n: int, k: int) -> bool:
    """True when c_pair(k)^n is strictly below Ryser's bound at this finite (n, k)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return c_pair(k) ** n < ryser_bound(n, k)[1]
