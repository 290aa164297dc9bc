"""Finite joint distributions over labelled alphabets, with exact masses.

A JointDistribution fixes two label tuples and a sparse map of positive
rational masses summing to exactly 1. Conditional columns, marginals and the
tilted (power-normalized) conditional all stay in exact arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateEntry,
    MassNotNormalized,
    ParseError,
    ValidationError,
    ZeroMarginal,
)
from .rationals import format_rational, parse_rational

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PosteriorColumn:
    """Conditional law of the hypothesis index given one observation value.

    entries lists only hypotheses with positive conditional mass, in index
    order. argmax_set keeps every index attaining max_value; ties are
    preserved, never broken.
    """

    y_index: int
    entries: tuple[tuple[int, Fraction], ...]
    max_value: Fraction
    argmax_set: frozenset[int]

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.entries)


def _check_labels(labels: Sequence[str], axis: str) -> tuple[str, ...]:
    out = tuple(labels)
    if not out:
        raise ValidationError(f"{axis}-alphabet is empty")
    seen: set[str] = set()
    for lab in out:
        if not isinstance(lab, str) or not lab:
            raise ValidationError(f"{axis}-alphabet labels must be nonempty strings")
        if lab in seen:
            raise ValidationError(f"{axis}-alphabet label {lab!r} repeats")
        seen.add(lab)
    return out


class JointDistribution:
    """Joint law of a hypothesis X and an observation Y. Treat as immutable.

    mass maps (x_index, y_index) to a positive Fraction; absent pairs carry
    zero. Marginals and the per-column layout are precomputed on build.
    """

    def __init__(
        self,
        x_alphabet: Sequence[str],
        y_alphabet: Sequence[str],
        mass: Mapping[tuple[int, int], Fraction],
    ):
        self.x_alphabet = _check_labels(x_alphabet, "x")
        self.y_alphabet = _check_labels(y_alphabet, "y")
        nx, ny = len(self.x_alphabet), len(self.y_alphabet)

        cleaned: dict[tuple[int, int], Fraction] = {}
        total = ZERO
        for (xi, yi), value in mass.items():
            if not (0 <= xi < nx and 0 <= yi < ny):
                raise ValidationError(f"mass entry ({xi}, {yi}) outside the alphabets")
            v = Fraction(value)
            if v < 0:
                raise ValidationError(f"negative mass {v} at ({xi}, {yi})")
            total += v
            if v > 0:
                cleaned[(xi, yi)] = v
        if total != 1:
            raise MassNotNormalized(total)

        self.mass: dict[tuple[int, int], Fraction] = dict(sorted(cleaned.items()))

        x_marg = [ZERO] * nx
        y_marg = [ZERO] * ny
        by_y: dict[int, list[tuple[int, Fraction]]] = {}
        for (xi, yi), v in self.mass.items():
            x_marg[xi] += v
            y_marg[yi] += v
            by_y.setdefault(yi, []).append((xi, v))
        self.x_marginal = tuple(x_marg)
        self.y_marginal = tuple(y_marg)
        self._by_y = {yi: tuple(sorted(col)) for yi, col in by_y.items()}
        self.support = frozenset(i for i, v in enumerate(self.x_marginal) if v > 0)

    @property
    def support_size(self) -> int:
        return len(self.support)

    def x_index(self, label: str) -> int:
        try:
            return self.x_alphabet.index(label)
        except ValueError:
            raise ValidationError(f"unknown x label {label!r}") from None

    def y_index(self, label: str) -> int:
        try:
            return self.y_alphabet.index(label)
        except ValueError:
            raise ValidationError(f"unknown y label {label!r}") from None

    def columns(self) -> Iterator[tuple[int, tuple[tuple[int, Fraction], ...]]]:
        """Positive-marginal observation columns in index order."""
        for yi in sorted(self._by_y):
            yield yi, self._by_y[yi]

    def column(self, y_index: int) -> tuple[tuple[int, Fraction], ...]:
        if not 0 <= y_index < len(self.y_alphabet):
            raise ValidationError(f"y index {y_index} out of range")
        if y_index not in self._by_y:
            raise ZeroMarginal(self.y_alphabet[y_index])
        return self._by_y[y_index]

    def atoms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        yield from self.mass.items()


def build_joint(entries: Iterable[tuple[str, str, Fraction | str | int]]) -> JointDistribution:
    """Assemble a joint law from (x label, y label, mass) triples.

    Labels enter the alphabets in first-appearance order; repeating a pair
    raises DuplicateEntry, a total differing from 1 raises MassNotNormalized.
    """
    x_labels: list[str] = []
    y_labels: list[str] = []
    x_pos: dict[str, int] = {}
    y_pos: dict[str, int] = {}
    mass: dict[tuple[int, int], Fraction] = {}
    for x_lab, y_lab, raw in entries:
        if x_lab not in x_pos:
            x_pos[x_lab] = len(x_labels)
            x_labels.append(x_lab)
        if y_lab not in y_pos:
            y_pos[y_lab] = len(y_labels)
            y_labels.append(y_lab)
        key = (x_pos[x_lab], y_pos[y_lab])
        if key in mass:
            raise DuplicateEntry(x_lab, y_lab)
        value = parse_rational(raw) if isinstance(raw, str) else Fraction(raw)
        if value < 0 or value > 1:
            raise ValidationError(f"mass for ({x_lab!r}, {y_lab!r}) outside [0, 1]: {value}")
        mass[key] = value
    return JointDistribution(x_labels, y_labels, mass)


def posterior(joint: JointDistribution, y_index: int) -> PosteriorColumn:
    """Exact conditional law of X given the y_index-th observation."""
    col = joint.column(y_index)
    p_y = joint.y_marginal[y_index]
    entries = tuple((xi, v / p_y) for xi, v in col)
    mx = max(v for _, v in entries)
    arg = frozenset(xi for xi, v in entries if v == mx)
    return PosteriorColumn(y_index, entries, mx, arg)


def tilted_posterior(joint: JointDistribution, theta: int, y_index: int) -> PosteriorColumn:
    """Power-tilted conditional: each conditional mass raised to theta, renormalized.

    theta = 1 returns the plain conditional. Raising to a power preserves
    order, so the argmax set never changes with theta; what changes is how
    much of the column the leaders absorb.
    """
    if not isinstance(theta, int) or theta < 1:
        raise ValidationError(f"tilt exponent must be an integer >= 1, got {theta!r}")
    col = joint.column(y_index)
    powers = [(xi, v ** theta) for xi, v in col]
    norm = sum(v for _, v in powers)
    entries = tuple((xi, v / norm) for xi, v in powers)
    mx = max(v for _, v in entries)
    arg = frozenset(xi for xi, v in entries if v == mx)
    return PosteriorColumn(y_index, entries, mx, arg)


def information_density(joint: JointDistribution, x_index: int, y_index: int) -> Fraction:
    """Ratio P(x, y) / (P(x) P(y)) in the linear domain.

    Equals 1 everywhere under independence and 1/P(y) on the diagonal of a
    noiseless channel.
    """
    if not 0 <= x_index < len(joint.x_alphabet):
        raise ValidationError(f"x index {x_index} out of range")
    if not 0 <= y_index < len(joint.y_alphabet):
        raise ValidationError(f"y index {y_index} out of range")
    p_x = joint.x_marginal[x_index]
    p_y = joint.y_marginal[y_index]
    if p_x == 0:
        raise ZeroMarginal(joint.x_alphabet[x_index], axis="x")
    if p_y == 0:
        raise ZeroMarginal(joint.y_alphabet[y_index])
    return joint.mass.get((x_index, y_index), ZERO) / (p_x * p_y)


# --- text format -----------------------------------------------------------
#
# {"x_alphabet": [...], "y_alphabet": [...],
#  "mass": [["x", "y", "3/32"], ...]}        entries are exact literals

def joint_to_json_obj(joint: JointDistribution) -> dict:
    return {
        "x_alphabet": list(joint.x_alphabet),
        "y_alphabet": list(joint.y_alphabet),
        "mass": [
            [joint.x_alphabet[xi], joint.y_alphabet[yi], format_rational(v)]
            for (xi, yi), v in joint.atoms()
        ],
    }


def joint_from_json_obj(obj: object) -> JointDistribution:
    if not isinstance(obj, dict):
        raise ParseError("distribution file must hold a JSON object")
    for key in ("x_alphabet", "y_alphabet", "mass"):
        if key not in obj:
            raise ParseError(f"distribution object lacks {key!r}")
    xs, ys, rows = obj["x_alphabet"], obj["y_alphabet"], obj["mass"]
    if not isinstance(xs, list) or not isinstance(ys, list) or not isinstance(rows, list):
        raise ParseError("x_alphabet, y_alphabet and mass must be JSON arrays")
    x_labels = _check_labels([str(s) for s in xs], "x")
    y_labels = _check_labels([str(s) for s in ys], "y")
    x_pos = {lab: i for i, lab in enumerate(x_labels)}
    y_pos = {lab: i for i, lab in enumerate(y_labels)}
    mass: dict[tuple[int, int], Fraction] = {}
    for k, row in enumerate(rows):
        if not (isinstance(row, list) and len(row) == 3):
            raise ParseError(f"mass entry {k} is not a [x, y, value] triple")
        x_lab, y_lab, raw = str(row[0]), str(row[1]), str(row[2])
        if x_lab not in x_pos:
            raise ParseError(f"mass entry {k} names unknown x label {x_lab!r}")
        if y_lab not in y_pos:
            raise ParseError(f"mass entry {k} names unknown y label {y_lab!r}")
        key = (x_pos[x_lab], y_pos[y_lab])
        if key in mass:
            raise DuplicateEntry(x_lab, y_lab)
        mass[key] = parse_rational(raw)
    return JointDistribution(x_labels, y_labels, mass)


def load_distribution(path: str) -> JointDistribution:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {path}: {exc}", line=exc.lineno) from None
    return joint_from_json_obj(obj)


def dump_distribution(joint: JointDistribution, path: str) -> None:
    text = json.dumps(joint_to_json_obj(joint), indent=2) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
