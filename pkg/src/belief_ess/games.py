"""Symmetric two-strategy normal-form games, with Hawk-Dove as a named
constructor and a TOML definition-file loader.

Payoff convention: payoffs[i][j] is the row player's payoff when the row
player uses strategy i against a column player using strategy j. This is the
only convention used anywhere in the library.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class GameError(ValueError):
    """Base class for game construction and file-format errors."""


class NonPositiveParameter(GameError):
    """Hawk-Dove resource value and injury cost must both be positive."""


class IndexOutOfRange(GameError, IndexError):
    """Strategy index outside {0, 1}."""


class UnknownLabel(GameError):
    """Strategy label not present in the game."""


class GameFileError(GameError):
    """Malformed or inconsistent game definition file."""


@dataclass(frozen=True)
class HawkDoveParams:
    """Contested resource value and expected injury cost of an escalated fight."""

    resource_value: float
    injury_cost: float

    def __post_init__(self) -> None:
        if not (self.resource_value > 0 and self.injury_cost > 0):
            raise NonPositiveParameter(
                f"resource value and injury cost must be > 0, got "
                f"V={self.resource_value}, C={self.injury_cost}"
            )


PayoffMatrix = tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class SymmetricGame2:
    """A symmetric game with two pure strategies and a 2x2 payoff matrix."""

    labels: tuple[str, str]
    payoffs: PayoffMatrix
    hawk_dove: HawkDoveParams | None = None

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if len(labels) != 2 or labels[0] == labels[1]:
            raise GameError(f"need two distinct strategy labels, got {labels}")
        rows = tuple(tuple(float(x) for x in row) for row in self.payoffs)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise GameError("payoffs must be a 2x2 matrix")
        if any(not math.isfinite(x) for row in rows for x in row):
            raise GameError(f"payoff entries must be finite, got {rows}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "payoffs", rows)

    def payoff(self, row: int, col: int) -> float:
        """Row player's payoff for pure strategy `row` against pure `col`."""
        if row not in (0, 1) or col not in (0, 1):
            raise IndexOutOfRange(f"strategy indices must be 0 or 1, got ({row}, {col})")
        return self.payoffs[row][col]

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown strategy label {label!r}; game has {self.labels}") from None


def hawk_dove(params: HawkDoveParams) -> SymmetricGame2:
    """Hawk-Dove contest over a resource V with fight injury cost C.

    Two Hawks fight and expect (V - C) / 2 each; a Hawk takes the whole
    resource V from a Dove, which gets 0; two Doves split it for V / 2 each.
    Row and column order is (Hawk, Dove).
    """
    v, c = params.resource_value, params.injury_cost
    matrix = (((v - c) / 2, v), (0.0, v / 2))
    return SymmetricGame2(labels=("H", "D"), payoffs=matrix, hawk_dove=params)


def load_game(path: Union[str, Path]) -> SymmetricGame2:
    """Load a game definition from a TOML file.

    Exactly one of `payoffs` or `hawk_dove` must be present:

        labels = ["H", "D"]
        payoffs = [[-1.0, 2.0], [0.0, 1.0]]

    or

        hawk_dove = {V = 2.0, C = 4.0}

    `labels` is required with `payoffs` and optional (default ["H", "D"])
    with `hawk_dove`.
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise GameFileError(f"cannot read game file {path}: {exc}") from exc
    try:
        doc = tomllib.loads(raw.decode("utf-8"))
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
        raise GameFileError(f"{path}: {exc}") from exc

    known = {"labels", "payoffs", "hawk_dove"}
    unknown = set(doc) - known
    if unknown:
        raise GameFileError(f"{path}: unknown keys {sorted(unknown)}")
    has_payoffs = "payoffs" in doc
    has_hd = "hawk_dove" in doc
    if has_payoffs == has_hd:
        raise GameFileError(f"{path}: exactly one of 'payoffs' or 'hawk_dove' must be present")

    if has_hd:
        hd = doc["hawk_dove"]
        if not isinstance(hd, dict) or set(hd) != {"V", "C"}:
            raise GameFileError(f"{path}: 'hawk_dove' must be a table with keys V and C")
        try:
            params = HawkDoveParams(float(hd["V"]), float(hd["C"]))
        except (TypeError, ValueError, NonPositiveParameter) as exc:
            raise GameFileError(f"{path}: bad hawk_dove parameters: {exc}") from exc
        game = hawk_dove(params)
        if "labels" in doc:
            game = SymmetricGame2(_parse_labels(doc["labels"], path), game.payoffs, params)
        return game

    if "labels" not in doc:
        raise GameFileError(f"{path}: 'labels' is required alongside 'payoffs'")
    labels = _parse_labels(doc["labels"], path)
    payoffs = doc["payoffs"]
    if (
        not isinstance(payoffs, list)
        or len(payoffs) != 2
        or any(not isinstance(r, list) or len(r) != 2 for r in payoffs)
    ):
        raise GameFileError(f"{path}: 'payoffs' must be a 2x2 array of reals")
    try:
        matrix = tuple(tuple(float(x) for x in row) for row in payoffs)
        return SymmetricGame2(labels, matrix)  # type: ignore[arg-type]
    except (TypeError, ValueError, GameError) as exc:
        raise GameFileError(f"{path}: bad payoff matrix: {exc}") from exc


def _parse_labels(value: object, path: Path) -> tuple[str, str]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or any(not isinstance(x, str) for x in value)
    ):
        raise GameFileError(f"{path}: 'labels' must be a list of two strings")
    return (value[0], value[1])
