"""Reading numbers from plain or CSV text, and splitting them into chunks."""
from __future__ import annotations

import csv
import io
import re
import sys
from dataclasses import dataclass
from typing import BinaryIO, Iterator, List, NamedTuple, Optional, Sequence, TextIO, Union

from .errors import InvalidArgumentError, ParseError

# decimal or scientific literals only: float() would also take nan, inf and 1_0
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")


@dataclass(frozen=True)
class ParseConfig:
    format: str = "plain"
    column: Optional[int] = None
    delimiter: str = ","
    on_bad_token: str = "error"

    def __post_init__(self):
        if self.format not in ("plain", "csv"):
            raise InvalidArgumentError(f"unknown format {self.format!r}")
        if (self.column is not None) != (self.format == "csv"):
            raise InvalidArgumentError("a column is given exactly when format is csv")
        if self.column is not None and self.column < 0:
            raise InvalidArgumentError(f"column must be >= 0, got {self.column}")
        if len(self.delimiter) != 1:
            raise InvalidArgumentError("delimiter must be a single character")
        if self.on_bad_token not in ("error", "skip"):
            raise InvalidArgumentError(f"unknown on_bad_token {self.on_bad_token!r}")


class Parsed(NamedTuple):
    values: List[float]
    bad_tokens: int


def parse_number(token: str) -> Optional[float]:
    """Return the float for a finite decimal literal, else ``None``."""
    token = token.strip()
    if not _NUMBER.match(token):
        return None
    value = float(token)
    # literals like 1e999 overflow to inf
    return value if value - value == 0.0 else None


def _text(source: Union[BinaryIO, TextIO]) -> TextIO:
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8", newline="")


def _plain(lines: TextIO) -> Iterator[tuple[int, str, Optional[float]]]:
    for lineno, line in enumerate(lines, start=1):
        for token in line.split():
            yield lineno, token, parse_number(token)


def _csv(lines: TextIO, config: ParseConfig) -> Iterator[tuple[int, str, Optional[float]]]:
    reader = csv.reader(lines, delimiter=config.delimiter)
    first = True
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        lineno = reader.line_num
        if config.column >= len(row):
            token, value = config.delimiter.join(row), None
        else:
            token = row[config.column]
            value = parse_number(token)
        if first:
            first = False
            if value is None:
                continue  # header row
        yield lineno, token, value


def iter_values(source: Union[BinaryIO, TextIO], config: ParseConfig = ParseConfig(),
                bad: Optional[list] = None) -> Iterator[float]:
    """Yield values from ``source`` in input order.

    Bad tokens raise :class:`ParseError` or, with ``on_bad_token="skip"``, are
    dropped and appended to ``bad`` as ``(line, token)`` when ``bad`` is given.
    """
    lines = _text(source)
    skip = config.on_bad_token == "skip"
    tokens = _csv(lines, config) if config.format == "csv" else _plain(lines)
    for lineno, token, value in tokens:
        if value is None:
            if not skip:
                raise ParseError(lineno, token)
            if bad is not None:
                bad.append((lineno, token))
            continue
        yield value


def parse_stream(source: Union[BinaryIO, TextIO],
                 config: ParseConfig = ParseConfig()) -> Parsed:
    bad: list = []
    values = list(iter_values(source, config, bad))
    return Parsed(values, len(bad))


def open_source(path: str) -> BinaryIO:
    """Open ``path`` for reading bytes; ``"-"`` means standard input."""
    if path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def chunk(values: Sequence[float], chunk_size: int) -> list[Sequence[float]]:
    """Split ``values`` into consecutive runs of ``chunk_size`` (the last may be short)."""
    if isinstance(chunk_size, bool) or not isinstance(chunk_size, int) or chunk_size < 1:
        raise InvalidArgumentError(f"chunk_size must be a positive integer, got {chunk_size!r}")
    return [values[i:i + chunk_size] for i in range(0, len(values), chunk_size)]


def chunk_size_for(count: int, chunks: int) -> int:
    """Chunk size that splits ``count`` values into at most ``chunks`` pieces."""
    if chunks < 1:
        raise InvalidArgumentError(f"chunks must be >= 1, got {chunks}")
    return max(1, -(-count // chunks))
