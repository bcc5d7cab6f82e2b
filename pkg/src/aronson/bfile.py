"""OEIS b-file reading and writing.

A b-file is plain ASCII: optional ``#`` comment lines, then one
``index value`` pair per line with consecutive indices.
"""

from __future__ import annotations

import io
import os
from typing import IO, Iterable

from .core import AronsonError, GeneratedSequence, Provenance


class BFileError(AronsonError):
    pass


def format_bfile(seq: GeneratedSequence, comments: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    write_bfile(seq, buf, comments)
    return buf.getvalue()


def write_bfile(seq: GeneratedSequence, dest: str | os.PathLike | IO[str],
                comments: Iterable[str] = ()) -> None:
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="ascii", newline="\n") as fh:
            write_bfile(seq, fh, comments)
        return
    for line in comments:
        dest.write(f"# {line}\n" if line else "#\n")
    dest.writelines(f"{n} {v}\n" for n, v in seq.items())


def parse_bfile(text: str, name: str = "bfile", monotone: bool | None = None) -> GeneratedSequence:
    indices, values = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"{name}:{lineno}: expected 'index value', got {raw!r}")
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"{name}:{lineno}: non-integer field in {raw!r}") from None
        if indices and n != indices[-1] + 1:
            raise BFileError(f"{name}:{lineno}: index {n} does not follow {indices[-1]}")
        indices.append(n)
        values.append(v)
    if not indices:
        raise BFileError(f"{name}: no data lines")
    if monotone is None:
        monotone = all(u < v for u, v in zip(values, values[1:]))
    return GeneratedSequence(indices[0], tuple(values), Provenance(name, {}, monotone))


def read_bfile(path: str | os.PathLike, monotone: bool | None = None) -> GeneratedSequence:
    with open(path, encoding="ascii") as fh:
        return parse_bfile(fh.read(), name=os.path.basename(os.fspath(path)), monotone=monotone)
