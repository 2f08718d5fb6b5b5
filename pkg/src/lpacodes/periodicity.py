"""Symbol words and window-periodicity predicates.

Building blocks shared by every other module: an immutable word type over
the alphabet {0, .., q-1}, period tests, sliding-window period-avoidance
predicates, and the search for the first window whose least period falls
below a target.

Two code paths exist on purpose.  ``is_pa`` / ``is_lpa`` check windows
directly against the definition and serve as reference predicates, while
``first_violation`` locates offending windows through shift-comparison
masks in O(len(w) * p) and is what the codec calls in its hot loop.  The
test suite holds the two paths against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Word",
    "WindowViolation",
    "has_period",
    "least_period_below",
    "is_pa",
    "is_lpa",
    "is_rll",
    "difference",
    "first_violation",
    "extension_symbol",
]

# Below this many symbols a plain Python scan beats array dispatch.
_VECTOR_THRESHOLD = 256


def _dtype_for(q: int):
    if q <= 256:
        return np.uint8
    if q <= 65536:
        return np.uint16
    return np.int64


class Word:
    """Immutable sequence of symbols drawn from {0, .., q-1}.

    Symbols live in a read-only numpy array so large words can be scanned
    with vector operations while small ones stay cheap to slice.  Words
    compare and hash by (alphabet, content).
    """

    __slots__ = ("_symbols", "_q", "_hash")

    def __init__(self, symbols, q: int):
        if q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {q}")
        if isinstance(symbols, str):
            symbols = _parse_symbol_text(symbols, q)
        elif not isinstance(symbols, (np.ndarray, list, tuple)):
            symbols = list(symbols)
        arr = np.asarray(symbols, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("symbols must form a one-dimensional sequence")
        if arr.size and (int(arr.min()) < 0 or int(arr.max()) >= q):
            raise ValueError(f"symbols must lie in [0, {q - 1}]")
        out = arr.astype(_dtype_for(q))
        out.setflags(write=False)
        self._symbols = out
        self._q = q
        self._hash = None

    @classmethod
    def _trusted(cls, arr: np.ndarray, q: int) -> "Word":
        """Wrap an already-validated array without copying or checking."""
        obj = object.__new__(cls)
        if arr.flags.writeable:
            arr.setflags(write=False)
        obj._symbols = arr
        obj._q = q
        obj._hash = None
        return obj

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], q: int) -> "Word":
        return cls(symbols, q)

    @classmethod
    def from_text(cls, text: str, q: int) -> "Word":
        """Parse ``text`` as one word: contiguous digits for q <= 10,
        comma-separated integers otherwise."""
        return cls(_parse_symbol_text(text, q), q)

    @property
    def symbols(self) -> np.ndarray:
        """Read-only array view of the symbols."""
        return self._symbols

    @property
    def q(self) -> int:
        return self._q

    def to_list(self) -> list[int]:
        return self._symbols.tolist()

    def to_text(self) -> str:
        if self._q <= 10:
            return "".join(map(str, self._symbols.tolist()))
        return ",".join(map(str, self._symbols.tolist()))

    def reversed(self) -> "Word":
        return Word._trusted(np.ascontiguousarray(self._symbols[::-1]), self._q)

    def __len__(self) -> int:
        return int(self._symbols.shape[0])

    def __iter__(self) -> Iterator[int]:
        return iter(self._symbols.tolist())

    def __getitem__(self, key):
        if isinstance(key, slice):
            if key.step not in (None, 1):
                raise ValueError("strided word slices are not supported")
            return Word._trusted(self._symbols[key], self._q)
        return int(self._symbols[key])

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other._q != self._q:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word._trusted(np.concatenate([self._symbols, other._symbols]), self._q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._q == other._q and np.array_equal(self._symbols, other._symbols)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._q, self._symbols.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r}, q={self._q})"

    def __str__(self) -> str:
        return self.to_text()


def _parse_symbol_text(text: str, q: int) -> list[int]:
    text = text.strip()
    if not text:
        return []
    if "," in text or q > 10:
        return [int(tok) for tok in text.split(",")]
    return [int(ch) for ch in text]


@dataclass(frozen=True)
class WindowViolation:
    """Location of the first window whose least period is below target.

    ``index`` is the zero-based start of the offending window and
    ``least_period`` its smallest period; no smaller period exists for
    that window.
    """

    index: int
    least_period: int


def has_period(w: Word, p: int) -> bool:
    """True iff every symbol of ``w`` equals the symbol ``p`` positions later."""
    if not 1 <= p <= len(w) - 1:
        raise ValueError(f"period must lie in [1, {len(w) - 1}], got {p}")
    arr = w.symbols
    return bool((arr[:-p] == arr[p:]).all())


def _least_period_below_list(syms: list[int], p: int) -> int | None:
    n = len(syms)
    for pp in range(1, min(p, n)):
        if all(syms[i] == syms[i + pp] for i in range(n - pp)):
            return pp
    return None


def least_period_below(w: Word, p: int) -> int | None:
    """Smallest period of ``w`` that is < ``p``, or None if there is none."""
    if p < 2:
        raise ValueError(f"period threshold must be at least 2, got {p}")
    if len(w) < 2:
        raise ValueError("word must have at least 2 symbols")
    return _least_period_below_list(w.to_list(), p)


def is_pa(w: Word, l: int, p: int) -> bool:
    """True iff no length-``l`` window of ``w`` has period exactly ``p``.

    Direct definition-level scan; vacuously true when the word is shorter
    than one window.
    """
    if l < 2:
        raise ValueError(f"window length must be at least 2, got {l}")
    if not 1 <= p < l:
        raise ValueError(f"period must lie in [1, {l - 1}], got {p}")
    n = len(w)
    if n < l:
        return True
    syms = w.to_list()
    span = l - p
    for j in range(n - l + 1):
        if all(syms[j + i] == syms[j + i + p] for i in range(span)):
            return False
    return True


def is_lpa(w: Word, l: int, p: int) -> bool:
    """True iff no length-``l`` window of ``w`` has any period below ``p``."""
    if l < 2:
        raise ValueError(f"window length must be at least 2, got {l}")
    if p < 2:
        raise ValueError(f"period threshold must be at least 2, got {p}")
    return all(is_pa(w, l, pp) for pp in range(1, min(p, l)))


def is_rll(w: Word, k: int) -> bool:
    """True iff ``w`` contains no run of ``k`` consecutive zero symbols."""
    if k < 1:
        raise ValueError(f"run length must be at least 1, got {k}")
    run = 0
    for s in w.symbols.tolist():
        if s == 0:
            run += 1
            if run >= k:
                return False
        else:
            run = 0
    return True


def difference(w: Word, p: int) -> Word:
    """Symbol-wise difference between ``w`` and its shift by ``p``, mod q.

    Entry i equals (w[i] - w[i+p]) mod q; the result has len(w) - p
    symbols.  A window of ``w`` has period ``p`` exactly when the matching
    stretch of this word is all zero.
    """
    if not 1 <= p < len(w):
        raise ValueError(f"shift must lie in [1, {len(w) - 1}], got {p}")
    arr = w.symbols.astype(np.int64)
    out = (arr[:-p] - arr[p:]) % w.q
    return Word._trusted(out.astype(_dtype_for(w.q)), w.q)


def first_violation(w: Word, l: int, p: int) -> WindowViolation | None:
    """Earliest length-``l`` window of ``w`` with some period below ``p``.

    Returns None when every window is clean (including words shorter than
    one window).  Ties are broken toward the smallest window index and
    then the smallest period, so ``least_period`` really is the least
    period of the reported window.  Runs in O(len(w) * p).
    """
    if l < 2:
        raise ValueError(f"window length must be at least 2, got {l}")
    if p < 2:
        raise ValueError(f"period threshold must be at least 2, got {p}")
    n = len(w)
    if n < l:
        return None
    if n <= _VECTOR_THRESHOLD:
        return _first_violation_scan(w, l, p)
    return _first_violation_vector(w, l, p)


def _first_violation_scan(w: Word, l: int, p: int) -> WindowViolation | None:
    syms = w.symbols.tolist()
    n = len(syms)
    best_index = None
    best_period = 0
    for period in range(1, min(p, l)):
        need = l - period  # consecutive shift-matches certifying one window
        run = 0
        found = None
        for i in range(n - period):
            if syms[i] == syms[i + period]:
                run += 1
                if run >= need:
                    found = i - need + 1
                    break
            else:
                run = 0
        if found is not None and (best_index is None or found < best_index):
            best_index = found
            best_period = period
            if best_index == 0:
                break
    if best_index is None:
        return None
    return WindowViolation(best_index, best_period)


def _first_violation_vector(w: Word, l: int, p: int) -> WindowViolation | None:
    arr = w.symbols
    best_index = None
    best_period = 0
    for period in range(1, min(p, l)):
        eq = arr[:-period] == arr[period:]
        need = l - period
        if eq.shape[0] < need:
            continue
        pos = _first_true_run(eq, need)
        if pos is None:
            continue
        if best_index is None or pos < best_index:
            best_index = pos
            best_period = period
            if best_index == 0:
                break
    if best_index is None:
        return None
    return WindowViolation(best_index, best_period)


_MAX_TILE_CANDIDATES = 4096


def _first_true_run(eq: np.ndarray, need: int) -> int | None:
    """Index of the leftmost run of ``need`` consecutive True, or None.

    Any qualifying run covers at least one aligned tile of ``need // 2``
    entries, so tiles are AND-reduced in one pass and only the (rare)
    all-True tiles are resolved exactly.  Degenerate or tile-dense inputs
    fall back to a windowed-count scan.
    """
    m = eq.shape[0]
    if m < need:
        return None
    if need == 1:
        pos = int(eq.argmax())
        return pos if eq[pos] else None
    tile = need // 2
    tiles = m // tile
    full = np.flatnonzero(eq[: tiles * tile].reshape(tiles, tile).all(axis=1))
    if full.size > _MAX_TILE_CANDIDATES:
        return _first_true_run_dense(eq, need)
    for t in full.tolist():
        ts = t * tile
        lo = max(0, ts + tile - need)
        window = eq[lo : min(m, ts + need)].tolist()
        run = 0
        for j, flag in enumerate(window):
            if flag:
                run += 1
                if run >= need:
                    return lo + j - need + 1
            else:
                run = 0
    return None


def _first_true_run_dense(eq: np.ndarray, need: int) -> int | None:
    m = eq.shape[0]
    counts = np.cumsum(eq, dtype=np.int32)
    sums = counts[need - 1 :].copy()
    sums[1:] -= counts[: m - need]
    hits = sums == need
    pos = int(hits.argmax())
    return pos if hits[pos] else None


def extension_symbol(w: Word) -> int:
    """Smallest symbol ``a`` such that ``w + a`` has no period below
    len(w)//2 + 2.

    Such a symbol always exists; running out of candidates would signal a
    defect, not an input problem.
    """
    if len(w) == 0:
        raise ValueError("cannot extend an empty word")
    bound = len(w) // 2 + 2
    syms = w.to_list()
    syms.append(0)
    for a in range(w.q):
        syms[-1] = a
        if _least_period_below_list(syms, bound) is None:
            return a
    raise AssertionError(
        "no symbol extends the word without a short period; this contradicts "
        "the extension guarantee and indicates a defect"
    )
