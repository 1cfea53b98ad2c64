"""On-disk form of a :class:`~degseq.core.MemoCache`.

::

    degseq-cache v1 nonincreasing
    2,2,2,2<TAB>3
    2,1,1<TAB>1

Records are sorted, so saving the same cache twice gives identical bytes.
"""

from __future__ import annotations

import os
from pathlib import Path

from degseq.core import MemoCache, is_canonical

FORMAT = "degseq-cache"
VERSION = "v1"
ORDER = "nonincreasing"
HEADER = f"{FORMAT} {VERSION} {ORDER}"


class CacheFormatError(ValueError):
    def __init__(self, path, lineno: int, message: str) -> None:
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


def dumps(cache: MemoCache) -> str:
    lines = [HEADER]
    for key in sorted(cache.entries):
        lines.append(",".join(map(str, key)) + "\t" + str(cache.entries[key]))
    return "\n".join(lines) + "\n"


def save(cache: MemoCache, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps(cache), encoding="utf-8", newline="\n")


def loads(text: str, path: str = "<string>") -> MemoCache:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CacheFormatError(path, 1, "missing header")
    header = lines[0].split()
    if len(header) != 3 or header[0] != FORMAT:
        raise CacheFormatError(path, 1, f"not a {FORMAT} file: {lines[0]!r}")
    if header[1] != VERSION:
        raise CacheFormatError(path, 1, f"unsupported version {header[1]!r}, expected {VERSION}")
    if header[2] != ORDER:
        raise CacheFormatError(path, 1, f"unsupported order tag {header[2]!r}, expected {ORDER}")

    cache = MemoCache()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split("\t")
        if len(parts) != 2:
            raise CacheFormatError(path, lineno, f"expected 'sequence<TAB>count', got {line!r}")
        seq_text, count_text = parts
        try:
            key = tuple(int(t) for t in seq_text.split(",")) if seq_text else ()
        except ValueError:
            raise CacheFormatError(path, lineno, f"bad sequence {seq_text!r}") from None
        if not is_canonical(key):
            raise CacheFormatError(path, lineno, f"sequence {seq_text!r} is not non-increasing and positive")
        if not count_text.isdigit() or not count_text.isascii():
            raise CacheFormatError(path, lineno, f"bad count {count_text!r}")
        if key in cache.entries:
            raise CacheFormatError(path, lineno, f"duplicate sequence {seq_text!r}")
        cache.entries[key] = int(count_text)
    return cache


def load(path: str | os.PathLike) -> MemoCache:
    return loads(Path(path).read_text(encoding="utf-8"), str(path))
