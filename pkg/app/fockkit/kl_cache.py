"""Memo table for Kazhdan-Lusztig columns, optionally persisted to a text file.

File format, one entry per line::

    klv1-size <table> <m> <w-word> <size>
    klv1 <table> <m> <v-word> <w-word> <coeffs>

Words are dot-separated simple-reflection indices (``-`` for the identity),
coefficients are comma-separated in ascending powers of q. Each column is
written whole, preceded by its size line; entries missing from a column are
zero.
"""

import logging
import threading
from pathlib import Path

from .affine_weyl import AffinePermutation
from .errors import CacheError

logger = logging.getLogger(__name__)

CACHE_VERSION = "klv1"
SIZE_TAG = CACHE_VERSION + "-size"

Column = dict[AffinePermutation, tuple[int, ...]]
Key = tuple[str, int, AffinePermutation]


def format_word(word: tuple[int, ...]) -> str:
    return ".".join(str(i) for i in word) if word else "-"


def parse_word(text: str) -> tuple[int, ...]:
    if text == "-":
        return ()
    return tuple(int(i) for i in text.split("."))


def _element(text: str, m: int) -> AffinePermutation | None:
    try:
        word = parse_word(text)
    except ValueError:
        return None
    if m < 1 or any(i < 0 or i >= m for i in word):
        return None
    return AffinePermutation.from_word(word, m)


class KLCache:
    """Columns keyed by (table, m, w); thread-safe single-writer insertion."""

    def __init__(self, path: Path | None = None) -> None:
        self.path = path
        self._columns: dict[Key, Column] = {}
        self._lock = threading.Lock()
        self._hits = 0
        if path is not None and path.exists():
            self._load(path)

    def _load(self, path: Path) -> None:
        pending: dict[Key, Column] = {}
        sizes: dict[Key, set[int]] = {}
        skipped = 0
        try:
            with path.open(encoding="utf-8") as handle:
                for line in handle:
                    fields = line.split()
                    size = self._parse_size(fields)
                    if size is not None:
                        sizes.setdefault(size[0], set()).add(size[1])
                        continue
                    entry = self._parse_entry(fields)
                    if entry is None:
                        skipped += 1
                        continue
                    key, v, coeffs = entry
                    pending.setdefault(key, {})[v] = coeffs
        except OSError as exc:
            raise CacheError(f"cannot read cache file {path}: {exc}") from exc
        for key, column in pending.items():
            declared = sizes.get(key, set())
            if declared != {len(column)} or column.get(key[2]) != (1,):
                raise CacheError(
                    f"cache file {path}: column {key[0]} m={key[1]} "
                    f"w={format_word(key[2].reduced_word())} has {len(column)} entries, "
                    f"declared {sorted(declared)}; delete the file to rebuild it"
                )
            self._columns[key] = column
        if skipped:
            logger.warning("KL cache %s: skipped %d unreadable lines", path, skipped)
        logger.debug("KL cache %s: loaded %d columns", path, len(self._columns))

    @staticmethod
    def _parse_size(fields: list[str]) -> tuple[Key, int] | None:
        if len(fields) != 5 or fields[0] != SIZE_TAG:
            return None
        try:
            m, size = int(fields[2]), int(fields[4])
        except ValueError:
            return None
        w = _element(fields[3], m)
        if w is None:
            return None
        return (fields[1], m, w), size

    @staticmethod
    def _parse_entry(
        fields: list[str],
    ) -> tuple[Key, AffinePermutation, tuple[int, ...]] | None:
        if len(fields) != 6 or fields[0] != CACHE_VERSION:
            return None
        try:
            m = int(fields[2])
            coeffs = tuple(int(c) for c in fields[5].split(","))
        except ValueError:
            return None
        v, w = _element(fields[3], m), _element(fields[4], m)
        if v is None or w is None:
            return None
        return (fields[1], m, w), v, coeffs

    def get(self, table: str, m: int, w: AffinePermutation) -> Column | None:
        column = self._columns.get((table, m, w))
        if column is not None:
            self._hits += 1
        return column

    def put(self, table: str, m: int, w: AffinePermutation, column: Column) -> None:
        key = (table, m, w)
        with self._lock:
            if key in self._columns:
                return
            self._columns[key] = column
            if self.path is not None:
                self._append(table, m, w, column)

    def _append(self, table: str, m: int, w: AffinePermutation, column: Column) -> None:
        w_word = format_word(w.reduced_word())
        lines = [f"{SIZE_TAG} {table} {m} {w_word} {len(column)}\n"]
        lines.extend(
            f"{CACHE_VERSION} {table} {m} {format_word(v.reduced_word())} {w_word} "
            + ",".join(str(c) for c in coeffs)
            + "\n"
            for v, coeffs in sorted(column.items(), key=lambda item: item[0].window)
        )
        try:
            with self.path.open("a", encoding="utf-8") as handle:  # type: ignore[union-attr]
                handle.write("".join(lines))
        except OSError as exc:
            raise CacheError(f"cannot write cache file {self.path}: {exc}") from exc

    @property
    def hits(self) -> int:
        return self._hits

    def __len__(self) -> int:
        return len(self._columns)
