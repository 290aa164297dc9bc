"""Binary block codes and channel parameters."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ValidationError

DEFAULT_JOINT_CEILING = 20
DEFAULT_TIE_CEILING = 24
ENUM_CEILING_ENV = "PVLAB_ENUM_CEILING"


def resolve_ceiling(ceiling: int | None, default: int) -> int:
    """Explicit argument wins, then the PVLAB_ENUM_CEILING variable, then default."""
    if ceiling is not None:
        return int(ceiling)
    env = os.environ.get(ENUM_CEILING_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"{ENUM_CEILING_ENV} must be an integer, got {env!r}") from None
    return default


def hamming(a: int, b: int) -> int:
    return (a ^ b).bit_count()


@dataclass(frozen=True)
class BlockCode:
    """M >= 2 distinct words of n bits, stored as ints (bit 0 = last position)."""

    n: int
    words: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"blocklength must be >= 1, got {self.n}")
        if len(self.words) < 2:
            raise ValidationError("a code needs at least 2 codewords")
        if len(set(self.words)) != len(self.words):
            raise ValidationError("codewords must be distinct")
        for w in self.words:
            if not 0 <= w < (1 << self.n):
                raise ValidationError(f"word {w} does not fit in {self.n} bits")

    @property
    def m(self) -> int:
        return len(self.words)

    def word_str(self, i: int) -> str:
        return format(self.words[i], f"0{self.n}b")

    def labels(self) -> tuple[str, ...]:
        return tuple(self.word_str(i) for i in range(self.m))

    def pair_distances(self) -> dict[tuple[int, int], int]:
        """Hamming distance for each unordered pair i < j."""
        out = {}
        for i in range(self.m):
            for j in range(i + 1, self.m):
                out[(i, j)] = hamming(self.words[i], self.words[j])
        return out

    @classmethod
    def from_strings(cls, words: list[str]) -> "BlockCode":
        if not words:
            raise ValidationError("empty codeword list")
        n = len(words[0])
        ints = []
        for w in words:
            if len(w) != n or any(ch not in "01" for ch in w):
                raise ValidationError(f"bad codeword {w!r}")
            ints.append(int(w, 2))
        return cls(n, tuple(ints))


def parse_code_text(text: str) -> BlockCode:
    """One codeword per line; blank lines and '#' comments are skipped."""
    n: int | None = None
    first_line = 0
    words: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if any(ch not in "01" for ch in line):
            raise ParseError(f"codeword {line!r} has characters outside 0/1", line=lineno)
        if n is None:
            n, first_line = len(line), lineno
        elif len(line) != n:
            raise ParseError(
                f"codeword {line!r} has length {len(line)}, expected {n} "
                f"(set by line {first_line})",
                line=lineno,
            )
        w = int(line, 2)
        if w in seen:
            raise ParseError(f"duplicate codeword {line!r}", line=lineno)
        seen.add(w)
        words.append(w)
    if n is None:
        raise ParseError("code file holds no codewords")
    if len(words) < 2:
        raise ParseError("a code needs at least 2 codewords")
    return BlockCode(n, tuple(words))


def parse_code_file(path: str) -> BlockCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_text(fh.read())


def code_lines(code: BlockCode) -> str:
    return "\n".join(code.labels()) + "\n"


@dataclass(frozen=True)
class BscParams:
    """Crossover probability of the memoryless binary symmetric flip channel.

    Restricted to 0 < p < 1/2: p = 1/2 erases all information and p > 1/2
    is the p < 1/2 channel with relabeled outputs, so weight-based tie
    arguments silently flip direction there.
    """

    p: Fraction

    def __post_init__(self) -> None:
        p = Fraction(self.p)
        object.__setattr__(self, "p", p)
        if not Fraction(0) < p < Fraction(1, 2):
            raise ValidationError(f"crossover probability must satisfy 0 < p < 1/2, got {p}")

    @property
    def q(self) -> Fraction:
        return 1 - self.p
