"""Exact integer sequences: closed forms, recurrences, generating functions.

Every sequence with several derivations exposes one function per derivation
(`q_closed`, `q_recurrence`, `q_egf`, `q_appendix`, ...); the derivations are
independent code paths and the test suite requires them to agree exactly.
All arithmetic is exact (int / Fraction); nothing here rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import ConsistencyError


def binomial(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"binomial needs 0 <= k <= n, got ({n}, {k})")
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks, by the standard
    recurrence."""
    if not 0 <= k <= n:
        raise ValueError(f"stirling2 needs 0 <= k <= n, got ({n}, {k})")
    return _stirling2(n, k)


def stirling2_explicit(n: int, k: int) -> int:
    """The same number by the alternating sum (1/k!) sum (-1)^(k-i) C(k,i) i^n."""
    if not 0 <= k <= n:
        raise ValueError(f"stirling2 needs 0 <= k <= n, got ({n}, {k})")
    total = sum((-1) ** (k - i) * math.comb(k, i) * i**n for i in range(k + 1))
    q, r = divmod(total, math.factorial(k))
    if r:
        raise ConsistencyError(f"alternating sum for stirling2({n},{k}) not divisible")
    return q


@dataclass(frozen=True)
class PowerSeries:
    """A truncated power series with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("series needs at least the constant term")

    @property
    def order(self) -> int:
        """Number of retained coefficients (degrees 0 .. order-1)."""
        return len(self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        m = min(self.order, other.order)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs[:m], other.coeffs[:m])))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        m = min(self.order, other.order)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs[:m], other.coeffs[:m])))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        m = min(self.order, other.order)
        out = [Fraction(0)] * m
        for i, a in enumerate(self.coeffs[:m]):
            if a:
                for j in range(m - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))

    def reciprocal(self) -> "PowerSeries":
        """Multiplicative inverse up to the truncation order (constant term
        must be nonzero); solved coefficient by coefficient."""
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("series with zero constant term has no reciprocal")
        inv = [Fraction(1) / a[0]]
        for m in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, min(m, self.order - 1) + 1):
                acc += a[i] * inv[m - i]
            inv.append(-acc / a[0])
        return PowerSeries(tuple(inv))


def _egf_int_coefficient(series: PowerSeries, n: int) -> int:
    value = series.coeffs[n] * math.factorial(n)
    if value.denominator != 1:
        raise ConsistencyError(f"coefficient {n} times n! is not an integer: {value}")
    return value.numerator


def rational_gf_term(numerator: tuple[int, ...], denominator: tuple[int, ...], n: int) -> int:
    """Coefficient n of numerator/denominator as an ordinary power series.

    Uses the linear recurrence the denominator induces; coefficients are the
    published ones, exact division asserted at every step.
    """
    if denominator[0] == 0:
        raise ValueError("denominator needs a nonzero constant term")
    seq: list[Fraction] = []
    for m in range(n + 1):
        acc = Fraction(numerator[m] if m < len(numerator) else 0)
        for j in range(1, min(m, len(denominator) - 1) + 1):
            acc -= denominator[j] * seq[m - j]
        seq.append(acc / denominator[0])
    value = seq[n]
    if value.denominator != 1:
        raise ConsistencyError(f"series coefficient {n} is not an integer: {value}")
    return value.numerator


# --- ordered Bell numbers: weak orderings / ordered partitions ---------------


def ordered_bell_formula(n: int) -> int:
    """p(n) = sum_k S(n,k) k!."""
    return sum(stirling2(n, k) * math.factorial(k) for k in range(n + 1))


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    """p(n) by the binomial recurrence, p(0) = 1."""
    if n == 0:
        return 1
    return sum(math.comb(n, k) * ordered_bell(k) for k in range(n))


def _series_two_minus_exp(order: int) -> PowerSeries:
    coeffs = [Fraction(2) - Fraction(1)]
    coeffs += [Fraction(-1, math.factorial(k)) for k in range(1, order)]
    return PowerSeries(tuple(coeffs))


def ordered_bell_egf(n: int) -> int:
    """p(n) = n! times coefficient n of 1 / (2 - e^z)."""
    return _egf_int_coefficient(_series_two_minus_exp(n + 1).reciprocal(), n)


# --- q: associative quasitrivial operations ----------------------------------


def q_closed(n: int) -> int:
    """The double-sum closed form
    q(n) = sum_i 2^i sum_k (-1)^k C(n,k) S(n-k,i) (i+k)!."""
    total = 0
    for i in range(n + 1):
        inner = 0
        for k in range(n - i + 1):
            inner += (-1) ** k * math.comb(n, k) * stirling2(n - k, i) * math.factorial(i + k)
        total += 2**i * inner
    return total if n else 1


@lru_cache(maxsize=None)
def q_recurrence(n: int) -> int:
    """q(n+1) = (n+1) q(n) + 2 sum_{k<n} C(n+1,k) q(k), q(0) = 1."""
    if n == 0:
        return 1
    m = n - 1
    return (m + 1) * q_recurrence(m) + 2 * sum(
        math.comb(m + 1, k) * q_recurrence(k) for k in range(m)
    )


def _series_q_denominator(order: int) -> PowerSeries:
    # z + 3 - 2 e^z, coefficient by coefficient
    coeffs = [Fraction(1)]
    if order > 1:
        coeffs.append(Fraction(-1))
    coeffs += [Fraction(-2, math.factorial(k)) for k in range(2, order)]
    return PowerSeries(tuple(coeffs))


def q_egf(n: int) -> int:
    """q(n) = n! times coefficient n of 1 / (z + 3 - 2 e^z)."""
    return _egf_int_coefficient(_series_q_denominator(n + 1).reciprocal(), n)


def q_appendix(n: int) -> int:
    """The permuted double sum
    q(n) = sum_i (-2)^i sum_{k>=i} (-1)^k C(n,k-i) S(n-k+i,i) k!."""
    if n == 0:
        return 1
    total = 0
    for i in range(n + 1):
        inner = 0
        for k in range(i, n + 1):
            inner += (-1) ** k * math.comb(n, k - i) * stirling2(n - k + i, i) * math.factorial(k)
        total += (-2) ** i * inner
    return total


def q_neutral(n: int) -> int:
    """Operations with a neutral element: n q(n-1); zero at n = 0."""
    return n * q_recurrence(n - 1) if n >= 1 else 0


def q_annihilator(n: int) -> int:
    """Operations with an annihilator: also n q(n-1)."""
    return q_neutral(n)


def q_both(n: int) -> int:
    """Operations with distinct neutral and annihilator: n(n-1) q(n-2)."""
    return n * (n - 1) * q_recurrence(n - 2) if n >= 2 else 0


# --- u: weakly single-peaked weak orderings ----------------------------------

U_GF = ((0, 1), (1, -3, 1, 1))  # z / (z^3 + z^2 - 3z + 1)
U_E_GF = ((0, -1), (-1, 2, 1))  # -z / (z^2 + 2z - 1)
V_GF = ((0, 1, 1), (1, -3, 0, 2))  # z(z+1) / (2z^3 - 3z + 1)
V_E_GF = ((0, -1), (-1, 2, 2))  # -z / (2z^2 + 2z - 1)


def _second_order(n: int, c1: int, c0: int, const: int, s0: int, s1: int) -> int:
    if n == 0:
        return s0
    a, b = s0, s1
    for _ in range(n - 1):
        a, b = b, c1 * b + c0 * a + const
    return b


def _exact_shifted_div(total: int, shift: int, divisor: int, label: str) -> int:
    q, r = divmod(total - shift, divisor)
    if r:
        raise ConsistencyError(f"{label}: {total} - {shift} not divisible by {divisor}")
    return q


def u_recurrence(n: int) -> int:
    """u(n+2) = 2u(n+1) + u(n) + 1, u(0) = 0, u(1) = 1."""
    return _second_order(n, 2, 1, 1, 0, 1)


def u_closed(n: int) -> int:
    """2u(n) + 1 = sum_k C(n+1, 2k) 2^k (the integer form of the radical
    expression)."""
    total = sum(math.comb(n + 1, 2 * k) * 2**k for k in range(n // 2 + 2))
    return _exact_shifted_div(total, 1, 2, "u closed form")


def u_gf(n: int) -> int:
    return rational_gf_term(*U_GF, n)


def u_e_recurrence(n: int) -> int:
    """u_e(n+2) = 2u_e(n+1) + u_e(n): the Pell numbers."""
    return _second_order(n, 2, 1, 0, 0, 1)


def u_e_closed(n: int) -> int:
    """u_e(n) = sum_k C(n, 2k+1) 2^k."""
    return sum(math.comb(n, 2 * k + 1) * 2**k for k in range((n + 1) // 2))


def u_e_gf(n: int) -> int:
    return rational_gf_term(*U_E_GF, n)


def u_a(n: int) -> int:
    """u_a(n) = 2 u(n-1); zero at n = 0."""
    return 2 * u_recurrence(n - 1) if n >= 1 else 0


def u_ea(n: int) -> int:
    """u_ea(n) = 2 u_e(n-1); zero at n = 0."""
    return 2 * u_e_recurrence(n - 1) if n >= 1 else 0


# --- v: associative quasitrivial order-preserving operations -----------------


def v_recurrence(n: int) -> int:
    """v(n+2) = 2v(n+1) + 2v(n) + 2, v(0) = 0, v(1) = 1."""
    return _second_order(n, 2, 2, 2, 0, 1)


def v_closed(n: int) -> int:
    """3v(n) + 2 = sum_k 3^k (2 C(n,2k) + 3 C(n,2k+1))."""
    total = sum(
        3**k * (2 * math.comb(n, 2 * k) + 3 * math.comb(n, 2 * k + 1))
        for k in range(n // 2 + 1)
    )
    return _exact_shifted_div(total, 2, 3, "v closed form")


def v_gf(n: int) -> int:
    return rational_gf_term(*V_GF, n)


def v_e_recurrence(n: int) -> int:
    """v_e(n+2) = 2v_e(n+1) + 2v_e(n), v_e(0) = 0, v_e(1) = 1."""
    return _second_order(n, 2, 2, 0, 0, 1)


def v_e_closed(n: int) -> int:
    """v_e(n) = sum_k C(n, 2k+1) 3^k."""
    return sum(math.comb(n, 2 * k + 1) * 3**k for k in range((n + 1) // 2))


def v_e_gf(n: int) -> int:
    return rational_gf_term(*V_E_GF, n)


def v_a(n: int) -> int:
    """v_a(n) = 2 v(n-1); zero at n = 0."""
    return 2 * v_recurrence(n - 1) if n >= 1 else 0


def v_ea(n: int) -> int:
    """v_ea(n) = 2 v_e(n-1); zero at n = 0."""
    return 2 * v_e_recurrence(n - 1) if n >= 1 else 0


# --- direct theorem counts ----------------------------------------------------


def single_peaked_count(n: int) -> int:
    """Single-peaked total orderings (equivalently: commutative associative
    quasitrivial order-preserving operations): 2^(n-1)."""
    if n < 1:
        raise ValueError("single_peaked_count needs n >= 1")
    return 2 ** (n - 1)


def commutative_count(n: int) -> int:
    """Commutative associative quasitrivial operations: n!."""
    if n < 1:
        raise ValueError("commutative_count needs n >= 1")
    return math.factorial(n)


# --- records and registries ----------------------------------------------------


@dataclass(frozen=True)
class UCounts:
    u: int
    u_e: int
    u_a: int
    u_ea: int


@dataclass(frozen=True)
class VCounts:
    v: int
    v_e: int
    v_a: int
    v_ea: int


def u_family(n: int) -> UCounts:
    """All four u-sequences at once; the three derivations of u and u_e are
    evaluated and must agree."""
    u_vals = {u_recurrence(n), u_closed(n), u_gf(n)}
    ue_vals = {u_e_recurrence(n), u_e_closed(n), u_e_gf(n)}
    if len(u_vals) != 1 or len(ue_vals) != 1:
        raise ConsistencyError(f"u-family derivations disagree at n={n}")
    return UCounts(u_vals.pop(), ue_vals.pop(), u_a(n), u_ea(n))


def v_family(n: int) -> VCounts:
    u_vals = {v_recurrence(n), v_closed(n), v_gf(n)}
    ue_vals = {v_e_recurrence(n), v_e_closed(n), v_e_gf(n)}
    if len(u_vals) != 1 or len(ue_vals) != 1:
        raise ConsistencyError(f"v-family derivations disagree at n={n}")
    return VCounts(u_vals.pop(), ue_vals.pop(), v_a(n), v_ea(n))


@dataclass(frozen=True)
class SingularityProbe:
    """Diagnostic only: the positive zero of x + 3 - 2 e^x and the growth
    ratios q(n+1) / ((n+1) q(n)).  Whether the ratios converge to 1/root is a
    conjecture and is never asserted anywhere in this package."""

    root: float
    inverse_root: float
    ratios: tuple[float, ...]


def singularity_probe(max_n: int = 30) -> SingularityProbe:
    if max_n < 2:
        raise ValueError("need max_n >= 2")

    def g(x: float) -> float:
        return x + 3.0 - 2.0 * math.exp(x)

    lo, hi = 0.0, 1.0
    mid = 0.5
    for _ in range(200):
        mid = (lo + hi) / 2.0
        value = g(mid)
        if abs(value) <= 1e-12 or hi - lo < 1e-15:
            break
        if value > 0:
            lo = mid
        else:
            hi = mid
    ratios = tuple(
        float(Fraction(q_recurrence(n + 1), (n + 1) * q_recurrence(n)))
        for n in range(1, max_n)
    )
    return SingularityProbe(root=mid, inverse_root=1.0 / mid, ratios=ratios)


# Per-sequence derivation registry (pure-arithmetic methods only; the
# enumeration and brute-force methods are wired up by the CLI layer).
METHODS: dict[str, dict[str, Callable[[int], int]]] = {
    "q": {
        "closed": q_closed,
        "recurrence": q_recurrence,
        "egf": q_egf,
        "appendix": q_appendix,
    },
    "q_e": {"closed": q_neutral},
    "q_a": {"closed": q_annihilator},
    "q_ea": {"closed": q_both},
    "p": {
        "closed": ordered_bell_formula,
        "recurrence": ordered_bell,
        "egf": ordered_bell_egf,
    },
    "u": {"closed": u_closed, "recurrence": u_recurrence, "gf": u_gf},
    "u_e": {"closed": u_e_closed, "recurrence": u_e_recurrence, "gf": u_e_gf},
    "u_a": {"closed": u_a},
    "u_ea": {"closed": u_ea},
    "v": {"closed": v_closed, "recurrence": v_recurrence, "gf": v_gf},
    "v_e": {"closed": v_e_closed, "recurrence": v_e_recurrence, "gf": v_e_gf},
    "v_a": {"closed": v_a},
    "v_ea": {"closed": v_ea},
    "sp": {"closed": single_peaked_count},
    "comm": {"closed": commutative_count},
}

SEQUENCE_NAMES = tuple(METHODS)

# OEIS cross-references for the sequences that have them ("shifted" means the
# OEIS entry starts one index earlier than our n).
OEIS_IDS = {
    "q": "A292932",
    "q_e": "A292933",
    "q_a": "A292933",
    "q_ea": "A292934",
    "p": "A000670",
    "u": "A048739 (shifted)",
    "u_e": "A000129",
    "u_a": "A293004",
    "u_ea": "A163271 (shifted)",
    "v": "A293005",
    "v_e": "A002605",
    "v_a": "A293006",
    "v_ea": "A293007",
}


def sequence_value(name: str, n: int, method: str | None = None) -> int:
    """One sequence term by one named derivation (default: the canonical
    first-registered one)."""
    try:
        methods = METHODS[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}") from None
    if method is None:
        method = next(iter(methods))
    try:
        fn = methods[method]
    except KeyError:
        raise ValueError(f"sequence {name!r} has no method {method!r}") from None
    return fn(n)


@dataclass(frozen=True)
class SequenceEntry:
    name: str
    n: int
    value: int
    method: str


class SequenceTable:
    """Values of one named sequence with the derivation that produced each;
    recording a disagreeing value raises immediately."""

    def __init__(self, name: str):
        self.name = name
        self.entries: list[SequenceEntry] = []
        self._by_n: dict[int, int] = {}

    def record(self, n: int, value: int, method: str) -> None:
        if n in self._by_n and self._by_n[n] != value:
            raise ConsistencyError(
                f"{self.name}({n}): {method} gives {value}, "
                f"earlier method gave {self._by_n[n]}"
            )
        self._by_n.setdefault(n, value)
        self.entries.append(SequenceEntry(self.name, n, value, method))

    def value(self, n: int) -> int:
        return self._by_n[n]
