"""Core domain types: alphabets, instances, and the Hamming-distance objective."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import FormatError


@dataclass(frozen=True)
class Alphabet:
    """Ordered collection of distinct single-character symbols.

    The symbol order is the canonical tie-break order used wherever a
    deterministic choice among symbols is needed.
    """

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must not be empty")
        if any(not isinstance(s, str) or len(s) != 1 for s in self.symbols):
            raise ValueError("alphabet symbols must be single characters")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"alphabet has duplicate symbols: {''.join(self.symbols)!r}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def from_string(cls, chars: str) -> "Alphabet":
        """Alphabet whose order is the order of ``chars``."""
        return cls(tuple(chars))

    @classmethod
    def inferred(cls, strings: Iterable[str]) -> "Alphabet":
        """Lexicographically ordered alphabet of every character present."""
        seen: set[str] = set()
        for s in strings:
            seen.update(s)
        if not seen:
            raise ValueError("cannot infer an alphabet from empty input")
        return cls(tuple(sorted(seen)))

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(
                f"symbol {symbol!r} not in alphabet {''.join(self.symbols)!r}"
            ) from None

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Instance:
    """A set of equal-length strings over a shared alphabet."""

    alphabet: Alphabet
    strings: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.strings:
            raise ValueError("instance needs at least one string")
        n = len(self.strings[0])
        if n == 0:
            raise ValueError("instance strings must be nonempty")
        codes = np.empty((len(self.strings), n), dtype=np.int16)
        for i, s in enumerate(self.strings):
            if len(s) != n:
                raise ValueError(
                    f"string {i} has length {len(s)}, expected {n}"
                )
            for j, ch in enumerate(s):
                codes[i, j] = self.alphabet.index(ch)
        codes.flags.writeable = False
        object.__setattr__(self, "_codes", codes)

    @property
    def m(self) -> int:
        return len(self.strings)

    @property
    def n(self) -> int:
        return len(self.strings[0])

    @property
    def codes(self) -> np.ndarray:
        """Read-only (m, n) matrix of alphabet indices."""
        return self._codes  # type: ignore[attr-defined]


@dataclass(frozen=True)
class CenterString:
    """A candidate center with its per-string distances and their maximum."""

    chars: str
    distances: tuple[int, ...]
    objective: int

    def __post_init__(self) -> None:
        if self.objective != max(self.distances):
            raise ValueError("objective must equal the maximum distance")


def hamming_distance(s: Sequence[str] | str, t: Sequence[str] | str) -> int:
    """Number of positions where two equal-length strings disagree."""
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} vs {len(t)}")
    return sum(a != b for a, b in zip(s, t))


def objective(t: str, inst: Instance) -> CenterString:
    """Evaluate candidate center ``t``: per-string distances and their max."""
    if len(t) != inst.n:
        raise ValueError(f"center has length {len(t)}, expected {inst.n}")
    t_codes = np.fromiter(
        (inst.alphabet.index(c) for c in t), dtype=np.int16, count=inst.n
    )
    dists = (inst.codes != t_codes[None, :]).sum(axis=1)
    return CenterString(
        chars=str(t),
        distances=tuple(int(d) for d in dists),
        objective=int(dists.max()),
    )


def validate_instance(
    raw: Sequence[str], alphabet: Alphabet | None = None
) -> Instance:
    """Build a well-formed Instance from raw strings.

    The alphabet is inferred as the sorted set of characters present unless
    an explicit one is supplied.
    """
    rows = [str(s) for s in raw]
    if not rows:
        raise FormatError("no strings given")
    n = len(rows[0])
    for i, s in enumerate(rows):
        if len(s) != n:
            raise FormatError(f"string {i + 1} has length {len(s)}, expected {n}")
    if alphabet is None:
        try:
            alphabet = Alphabet.inferred(rows)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    try:
        return Instance(alphabet, tuple(rows))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
