"""Exact counting oracle, closed-form counts, and analytic bounds.

Families of words over {0, .., q-1}:

* LPA (letter ``A``): no length-l window has any period below p.
* PA  (letter ``B``): no length-l window has period exactly p.
* RLL (letter ``R``): no run of k consecutive zeros.

``count_brute`` enumerates the whole space in lexicographic chunks and
filters with vectorized window masks; it is the oracle every closed form
is tested against.  The formulas and bounds use exact integer/rational
arithmetic, rounding analytic expressions outward so a bound is never
accidentally tightened by floating-point noise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import BudgetExceededError
from .periodicity import Word, _dtype_for

__all__ = [
    "Family",
    "CountQuery",
    "CountReport",
    "DEFAULT_BUDGET",
    "all_words",
    "count_brute",
    "mobius",
    "pa_count_whole",
    "lpa_count_whole",
    "lpa_count_near_whole",
    "lpa_count_lower",
    "lpa_count_upper",
    "rll_count_upper",
    "pa_count_via_rll",
    "min_window_feasible",
    "build_report",
]

DEFAULT_BUDGET = 1 << 24
_CHUNK_ROWS = 1 << 16


class Family(str, enum.Enum):
    LPA = "A"
    PA = "B"
    RLL = "R"


@dataclass(frozen=True)
class CountQuery:
    """One counting request; which fields matter depends on the family."""

    family: Family
    q: int
    n: int
    l: int | None = None
    p: int | None = None
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        if self.n < 1:
            raise ValueError(f"word length must be positive, got {self.n}")
        if self.family is Family.RLL:
            if self.k is None or self.k < 1:
                raise ValueError("RLL counts need a run length k >= 1")
        else:
            if self.l is None or self.l < 2:
                raise ValueError("window counts need a window length l >= 2")
            if self.p is None:
                raise ValueError("window counts need a period p")
            if self.family is Family.PA and not 1 <= self.p < self.l:
                raise ValueError(
                    f"PA period must lie in [1, {self.l - 1}], got {self.p}"
                )
            if self.family is Family.LPA and not 2 <= self.p <= self.l:
                raise ValueError(
                    f"LPA period target must lie in [2, {self.l}], got {self.p}"
                )


def _lex_chunks(q: int, n: int) -> Iterator[np.ndarray]:
    """Yield all q**n words as uint8/uint16 matrices, lexicographically."""
    dtype = _dtype_for(q)
    total = q**n
    for start in range(0, total, _CHUNK_ROWS):
        stop = min(start + _CHUNK_ROWS, total)
        idx = np.arange(start, stop, dtype=np.int64)
        rows = np.empty((stop - start, n), dtype=dtype)
        for col in range(n - 1, -1, -1):
            idx, rem = np.divmod(idx, q)
            rows[:, col] = rem.astype(dtype)
        yield rows


def all_words(q: int, n: int) -> Iterator[Word]:
    """All words of length n in lexicographic order.  Caller minds the cost."""
    if n == 0:
        yield Word([], q)
        return
    for rows in _lex_chunks(q, n):
        for row in rows:
            arr = row.copy()
            arr.setflags(write=False)
            yield Word._trusted(arr, q)


def _any_full_window(mask: np.ndarray, width: int) -> np.ndarray:
    """Per row: does any run of ``width`` consecutive True cells exist?"""
    rows, t = mask.shape
    if width > t:
        return np.zeros(rows, dtype=bool)
    counts = mask.cumsum(axis=1, dtype=np.int32)
    sums = counts[:, width - 1 :].copy()
    sums[:, 1:] -= counts[:, : t - width]
    return (sums == width).any(axis=1)


def _pa_bad_rows(rows: np.ndarray, l: int, p: int) -> np.ndarray:
    n = rows.shape[1]
    if l > n:
        return np.zeros(rows.shape[0], dtype=bool)
    eq = rows[:, : n - p] == rows[:, p:]
    return _any_full_window(eq, l - p)


@lru_cache(maxsize=None)
def _count_cached(family: Family, q: int, n: int, l: int | None, p: int | None, k: int | None) -> int:
    total = 0
    for rows in _lex_chunks(q, n):
        if family is Family.PA:
            bad = _pa_bad_rows(rows, l, p)
        elif family is Family.LPA:
            bad = np.zeros(rows.shape[0], dtype=bool)
            for pp in range(1, min(p, l)):
                bad |= _pa_bad_rows(rows, l, pp)
        else:
            bad = _any_full_window(rows == 0, k)
        total += int(rows.shape[0] - np.count_nonzero(bad))
    return total


def count_brute(query: CountQuery, budget: int = DEFAULT_BUDGET) -> int:
    """Exact family size by full enumeration; refuses past ``budget`` words."""
    cost = query.q**query.n
    if cost > budget:
        raise BudgetExceededError(
            f"enumerating {query.q}**{query.n} = {cost} words exceeds the "
            f"budget of {budget}",
            cost=cost,
            budget=budget,
        )
    return _count_cached(query.family, query.q, query.n, query.l, query.p, query.k)


def mobius(d: int) -> int:
    """Moebius function by trial division."""
    if d < 1:
        raise ValueError(f"argument must be positive, got {d}")
    result = 1
    m = d
    f = 2
    while f * f <= m:
        if m % f == 0:
            m //= f
            if m % f == 0:
                return 0
            result = -result
        f += 1
    if m > 1:
        result = -result
    return result


def pa_count_whole(q: int, n: int, p: int) -> int:
    """Words of length n that do not have period p: q**n - q**p."""
    if not 1 <= p <= n - 1:
        raise ValueError(f"period must lie in [1, {n - 1}], got {p}")
    return q**n - q**p


def lpa_count_whole(q: int, n: int, p: int) -> int:
    """Words of length n with no period below p (whole word as the window).

    Moebius inclusion-exclusion over the lattice of short periods; valid
    for n >= 2p - 4.
    """
    if p < 2:
        raise ValueError(f"period target must be at least 2, got {p}")
    if n < 2 * p - 4:
        raise ValueError(
            f"closed form needs n >= 2p - 4 = {2 * p - 4}, got {n}"
        )
    if n < 1:
        raise ValueError(f"word length must be positive, got {n}")
    acc = 0
    for d in range(1, p):
        acc += mobius(d) * (q ** ((p - 1) // d) - 1)
    scaled = q * acc
    if scaled % (q - 1):
        raise AssertionError("short-period count is not divisible as expected")
    return q**n - scaled // (q - 1)


def lpa_count_near_whole(q: int, n: int, l: int, p: int) -> int:
    """LPA count for words slightly longer than one window.

    Exact for l <= n <= 2l - 2p + 4 with n < 2l (and l >= 2p - 4): every
    invalid word then contains one dominating short-period stretch, which
    scales the single-window complement by q**(n-l) * (1 + (n-l)(1 - 1/q)).
    The extra n < 2l clause only bites for p = 2, where the nominal range
    would otherwise admit two disjoint offending windows (e.g. 0000 1111
    at n = 8, l = 4) that the single-stretch argument counts twice.
    """
    top = min(2 * l - 2 * p + 4, 2 * l - 1)
    if not l <= n <= top:
        raise ValueError(
            f"extension applies only for {l} <= n <= {top}, got {n}"
        )
    complement = q**l - lpa_count_whole(q, l, p)
    extra = n - l
    scaled = complement * q**extra * (q + extra * (q - 1))
    if scaled % q:
        raise AssertionError("scaled complement is not divisible as expected")
    return q**n - scaled // q


def lpa_count_lower(q: int, n: int, l: int, p: int) -> int:
    """Existence lower bound: floor of q**n * (1 - n / ((q-1) q**(l-p)))."""
    if l <= p:
        raise ValueError("window length must exceed the period target")
    value = Fraction(q**n) * (1 - Fraction(n, (q - 1) * q ** (l - p)))
    return math.floor(value)


def rll_count_upper(q: int, n: int, k: int) -> int:
    """Analytic ceiling on the number of words with no k-run of zeros.

    q**(n - c (n - 2k) / q**k) with c = (q-1)^2 / (2 q^2 ln q), rounded
    up (with a hair of extra slack so float error can only loosen it).
    Requires n >= 2k.
    """
    if k < 1:
        raise ValueError(f"run length must be at least 1, got {k}")
    if n < 2 * k:
        raise ValueError(f"analytic bound needs n >= 2k = {2 * k}, got {n}")
    c = (q - 1) ** 2 / (2 * q * q * math.log(q))
    t = c * (n - 2 * k) * math.exp(-k * math.log(q))
    # Split off the integer part so the fractional power never underflows.
    t_int = math.floor(t)
    factor = Fraction(math.exp(-(t - t_int) * math.log(q)))
    slack = 1 + Fraction(1, 1 << 40)
    return math.ceil(q ** (n - t_int) * factor * slack)


def lpa_count_upper(
    q: int, n: int, l: int, p: int, budget: int = DEFAULT_BUDGET
) -> int | None:
    """Tightest available upper bound on the LPA count.

    Every LPA word embeds a zero-run-limited word once periods are divided
    out, so q**(p-1) times the matching RLL count dominates.  Uses the
    exact RLL count when enumeration fits the budget, the analytic ceiling
    when it applies, and returns None otherwise.
    """
    if p < 2 or l < p:
        raise ValueError("bound needs p >= 2 and l >= p")
    m = n - p + 1
    k = l - p + 1
    if m < k:
        raise ValueError("bound needs n >= l")
    if q**m <= budget:
        exact_rll = count_brute(CountQuery(Family.RLL, q, m, k=k), budget)
        return q ** (p - 1) * exact_rll
    if m >= 2 * k:
        return q ** (p - 1) * rll_count_upper(q, m, k)
    return None


def pa_count_via_rll(q: int, n: int, l: int, p: int, budget: int = DEFAULT_BUDGET) -> int:
    """PA count through the zero-run identity: q**p * |RLL(n-p, l-p)|.

    Dividing out the period-p structure maps PA words bijectively onto
    zero-run-limited difference words, so this is exact, not a bound.
    """
    if not 1 <= p < l or l > n:
        raise ValueError("identity needs 1 <= p < l <= n")
    rll = count_brute(CountQuery(Family.RLL, q, n - p, k=l - p), budget)
    return q**p * rll


def min_window_feasible(q: int, n: int, p: int) -> int:
    """Smallest window length not excluded by the counting lower bound.

    Solves l >= log_q(n - 2l + p) + p - 3.5 by integer search, comparing
    q**(2(l-p)+7) against (n - 2l + p)^2 so no floating logs are needed.
    A window below this cannot support a single-redundancy code; the gap
    to the constructive window from ``derive_params`` stays small.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if p < 1 or n < 1:
        raise ValueError("n and p must be positive")
    l = 2
    while True:
        m = n - 2 * l + p
        if m < 1:
            return l
        e = 2 * (l - p) + 7
        if e >= 0:
            if q**e >= m * m:
                return l
        l += 1


@dataclass(frozen=True)
class CountReport:
    """Everything known about one count: oracle value, closed form, bounds."""

    query: CountQuery
    exact: int | None = None
    formula: int | None = None
    lower_bound: int | None = None
    upper_bound: int | None = None
    provenance: dict[str, str] = field(default_factory=dict)

    def violations(self) -> list[str]:
        """Internal inconsistencies; non-empty means the numbers contradict."""
        problems = []
        if self.exact is not None and self.formula is not None:
            if self.exact != self.formula:
                problems.append(
                    f"formula value {self.formula} != enumerated value {self.exact}"
                )
        if self.exact is not None and self.lower_bound is not None:
            if self.lower_bound > self.exact:
                problems.append(
                    f"lower bound {self.lower_bound} exceeds enumerated value {self.exact}"
                )
        if self.exact is not None and self.upper_bound is not None:
            if self.exact > self.upper_bound:
                problems.append(
                    f"enumerated value {self.exact} exceeds upper bound {self.upper_bound}"
                )
        return problems


def _formula_for(query: CountQuery, budget: int) -> tuple[int | None, str]:
    q, n, l, p = query.q, query.n, query.l, query.p
    if query.family is Family.PA:
        if n == l:
            return pa_count_whole(q, n, p), "whole-word power difference"
        if l < n:
            return pa_count_via_rll(q, n, l, p, budget), "zero-run identity"
        return None, "no closed form for windows longer than the word"
    if query.family is Family.LPA:
        if n == l and n >= 2 * p - 4:
            return lpa_count_whole(q, n, p), "Moebius inclusion-exclusion"
        if l <= n <= min(2 * l - 2 * p + 4, 2 * l - 1) and l >= 2 * p - 4:
            return lpa_count_near_whole(q, n, l, p), "near-whole-word extension"
        return None, "length outside every closed-form regime"
    return None, "zero-run counts have no closed form here"


def build_report(
    query: CountQuery,
    *,
    include_exact: bool = True,
    include_formula: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> CountReport:
    """Assemble a CountReport; enumeration may raise BudgetExceededError."""
    provenance: dict[str, str] = {}
    exact = None
    if include_exact:
        exact = count_brute(query, budget)
        provenance["exact"] = "chunked lexicographic enumeration"
    formula = None
    if include_formula:
        formula, label = _formula_for(query, budget)
        provenance["formula"] = label
    lower = upper = None
    if query.family is Family.LPA and query.l > query.p:
        lower = lpa_count_lower(query.q, query.n, query.l, query.p)
        provenance["lower_bound"] = "existence bound, floored"
        if query.n >= query.l:
            upper = lpa_count_upper(query.q, query.n, query.l, query.p, budget)
            if upper is not None:
                m = query.n - query.p + 1
                provenance["upper_bound"] = (
                    "exact zero-run relaxation"
                    if query.q**m <= budget
                    else "analytic zero-run relaxation, ceiled"
                )
    return CountReport(
        query=query,
        exact=exact,
        formula=formula,
        lower_bound=lower,
        upper_bound=upper,
        provenance=provenance,
    )
