"""Line-oriented lattice files.

::

    # Id(Z_12) under ideal multiplication
    lattice Id(Z12)
    elements: (0) (6) (4) (3) (2) (1)
    covers:
    (0) < (6)
    ...
    mult-default: meet
    mult:
    (6) * (6) = (0)
    s: (1) (4)

``elements`` fixes the index order. ``mult`` lines give products of
unordered pairs; pairs left out fall back to the meet when the
``mult-default: meet`` header is present and are an error otherwise.
Labels are whitespace-free tokens.
"""

from dataclasses import dataclass
import re
import sys

import numpy as np

from .errors import FormatError
from .lattice import build_lattice
from .mult import classify_multiplication

_COVER = re.compile(r"^(\S+)\s*<\s*(\S+)$")
_MULT = re.compile(r"^(\S+)\s*\*\s*(\S+)\s*=\s*(\S+)$")


@dataclass(frozen=True)
class LatticeFile:
    host: object  # MultLattice
    s: tuple | None = None  # labels from the optional ``s:`` line


def _items(rest):
    return [x.strip() for x in rest.split(",") if x.strip()]


def parse(text):
    """Parse lattice-file text into a :class:`LatticeFile`."""
    name = None
    labels = None
    covers = []
    mult = []
    default = None
    s = None
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        key = head.strip() if sep else None
        if line.startswith("lattice ") or line == "lattice":
            name = line[len("lattice"):].strip()
            section = None
        elif key == "elements":
            labels = rest.split()
            if len(set(labels)) != len(labels):
                raise FormatError(f"line {lineno}: repeated element label")
            section = None
        elif key == "covers":
            section = "covers"
            covers += [(lineno, item) for item in _items(rest)]
        elif key == "mult":
            section = "mult"
            mult += [(lineno, item) for item in _items(rest)]
        elif key == "mult-default":
            if rest.strip() != "meet":
                raise FormatError(f"line {lineno}: only 'mult-default: meet' is supported")
            default = "meet"
            section = None
        elif key == "s":
            s = tuple(rest.split())
            section = None
        elif section == "covers":
            covers.append((lineno, line))
        elif section == "mult":
            mult.append((lineno, line))
        else:
            raise FormatError(f"line {lineno}: cannot parse {raw.strip()!r}")

    if labels is None:
        raise FormatError("missing 'elements:' line")
    index = {lab: k for k, lab in enumerate(labels)}

    def lookup(lineno, lab):
        if lab not in index:
            raise FormatError(f"line {lineno}: unknown element {lab!r}")
        return lab

    pairs = []
    for lineno, item in covers:
        m = _COVER.match(item)
        if not m:
            raise FormatError(f"line {lineno}: expected 'a < b', got {item!r}")
        pairs.append((lookup(lineno, m.group(1)), lookup(lineno, m.group(2))))
    L = build_lattice(labels, pairs, name=name or "")

    n = len(labels)
    T = np.full((n, n), -1, dtype=np.int64)
    for lineno, item in mult:
        m = _MULT.match(item)
        if not m:
            raise FormatError(f"line {lineno}: expected 'a * b = c', got {item!r}")
        a, b, c = (index[lookup(lineno, g)] for g in m.groups())
        if T[a, b] not in (-1, c):
            raise FormatError(f"line {lineno}: conflicting product for {labels[a]} * {labels[b]}")
        T[a, b] = T[b, a] = c
    missing = T < 0
    if missing.any():
        if default != "meet":
            a, b = (int(v) for v in np.argwhere(missing)[0])
            raise FormatError(
                f"no product given for {labels[a]} * {labels[b]} and no 'mult-default: meet' header"
            )
        T[missing] = L.meet_table[missing]
    host = classify_multiplication(L, T)
    if s is not None:
        for lab in s:
            lookup("s", lab)
    return LatticeFile(host, s)


def dump(M, s=None):
    """Serialize a MultLattice. Products that equal the meet are left implicit."""
    L = M.lattice
    lines = [f"lattice {L.name}" if L.name else "lattice"]
    lines.append("elements: " + " ".join(L.labels))
    lines.append("covers:")
    lines += [f"{L.label(a)} < {L.label(b)}" for a, b in L.covers()]
    lines.append("mult-default: meet")
    diff = [
        (a, b)
        for a in range(L.n)
        for b in range(a, L.n)
        if M.table[a, b] != L.meet_table[a, b]
    ]
    if diff:
        lines.append("mult:")
        lines += [f"{L.label(a)} * {L.label(b)} = {L.label(int(M.table[a, b]))}" for a, b in diff]
    if s:
        lines.append("s: " + " ".join(s))
    return "\n".join(lines) + "\n"


def read_text(path):
    """File contents, with ``-`` meaning standard input."""
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load(path):
    return parse(read_text(path))
