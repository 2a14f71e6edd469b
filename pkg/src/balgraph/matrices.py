"""Dense 0/1 matrices, stored as one int bitmask per row (bit j = column j)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["ZeroOneMatrix", "MatrixError"]


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class ZeroOneMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise MatrixError(f"bad dimensions {self.rows}x{self.cols}")
        if len(self.bits) != self.rows:
            raise MatrixError(f"expected {self.rows} rows, got {len(self.bits)}")
        full = (1 << self.cols) - 1
        for i, row in enumerate(self.bits):
            if row & ~full:
                raise MatrixError(f"row {i} has bits beyond column {self.cols - 1}")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "ZeroOneMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        bits = []
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise MatrixError(f"ragged row {i}")
            mask = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise MatrixError(f"entry ({i},{j}) is {e!r}, not 0/1")
                mask |= e << j
            bits.append(mask)
        return cls(rows=rows, cols=cols, bits=tuple(bits))

    @classmethod
    def from_ones(
        cls, rows: int, cols: int, ones: Iterable[tuple[int, int]]
    ) -> "ZeroOneMatrix":
        """Build from the positions of the 1 entries."""
        masks = [0] * rows
        for i, j in ones:
            if not (0 <= i < rows and 0 <= j < cols):
                raise MatrixError(f"entry ({i},{j}) outside {rows}x{cols}")
            masks[i] |= 1 << j
        return cls(rows=rows, cols=cols, bits=tuple(masks))

    def entry(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1

    def row_sum(self, i: int) -> int:
        return self.bits[i].bit_count()

    def col_sum(self, j: int) -> int:
        return sum((row >> j) & 1 for row in self.bits)

    def column_bits(self, j: int) -> int:
        """Column j as a bitmask over row indices."""
        mask = 0
        for i, row in enumerate(self.bits):
            mask |= ((row >> j) & 1) << i
        return mask

    def transpose(self) -> "ZeroOneMatrix":
        return ZeroOneMatrix(
            rows=self.cols,
            cols=self.rows,
            bits=tuple(self.column_bits(j) for j in range(self.cols)),
        )

    def to_text(self) -> str:
        """Dense text grid: one line per row of 0/1 characters."""
        return "\n".join(
            "".join(str((row >> j) & 1) for j in range(self.cols)) for row in self.bits
        )

    @classmethod
    def from_text(cls, text: str) -> "ZeroOneMatrix":
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        entries: list[list[int]] = []
        for line in lines:
            if set(line) - {"0", "1"}:
                raise MatrixError(f"bad matrix line {line!r}")
            entries.append([int(ch) for ch in line])
        if not entries:
            return cls(rows=0, cols=0, bits=())
        return cls.from_entries(entries)


def ones(masks: Iterable[int]) -> int:
    """Total popcount of an iterable of bitmasks."""
    return sum(m.bit_count() for m in masks)
