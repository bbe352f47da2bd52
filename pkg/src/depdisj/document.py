"""Line-oriented constraint documents.

::

    # comment
    group d
      phi phi phi' phi'
      psi psi' psi psi'
    end

Each line between ``group <name>`` and ``end`` is one disjunction; its
whitespace-separated tokens are the disjuncts.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import DependencyGroup, check_token
from .errors import DuplicateGroup, EmptyGroup, InvalidToken, ParseError, RaggedGroup

__all__ = ["Document", "parse_document", "serialize_document"]


@dataclass(frozen=True)
class Document:
    groups: tuple = ()
    # first line of each group, for error messages; not part of equality
    lines: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        names = set()
        for g in self.groups:
            if g.name in names:
                raise DuplicateGroup(f"duplicate group name {g.name!r}")
            names.add(g.name)


def _tokens(line: str):
    """(column, token) pairs of a line with its comment stripped; columns are 1-based."""
    body = line.split("#", 1)[0]
    out = []
    pos = 0
    for tok in body.split():
        pos = body.index(tok, pos)
        out.append((pos + 1, tok))
        pos += len(tok)
    return out


def parse_document(text: str) -> Document:
    groups = []
    starts = []
    names = {}
    current = None  # (name, start line, [(line, atoms)])

    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]
        if current is None:
            if head != "group":
                raise ParseError(f"expected 'group', found {head!r}", lineno, col)
            if len(toks) != 2:
                where = toks[2][0] if len(toks) > 2 else col + len(head)
                raise ParseError("'group' takes exactly one name", lineno, where)
            name = toks[1][1]
            try:
                check_token(name, "group name")
            except InvalidToken as exc:
                raise ParseError(str(exc), lineno, toks[1][0]) from None
            if name in names:
                raise DuplicateGroup(
                    f"group {name!r} already defined on line {names[name]}", lineno, toks[1][0]
                )
            names[name] = lineno
            current = (name, lineno, [])
        elif head == "end" and len(toks) == 1:
            name, start, rows = current
            groups.append(_build_group(name, start, rows))
            starts.append(start)
            current = None
        elif head == "group" and len(toks) == 2:
            raise ParseError(f"group {current[0]!r} is missing 'end'", lineno, col)
        else:
            current[2].append((lineno, [t for _, t in toks]))

    if current is not None:
        raise ParseError(f"group {current[0]!r} is missing 'end' at end of input", current[1])
    return Document(tuple(groups), tuple(starts))


def _build_group(name, start, rows):
    if not rows:
        raise EmptyGroup(f"line {start}: group {name!r} has no disjunctions", group=name, line=start)
    width = len(rows[0][1])
    for lineno, atoms in rows:
        if len(atoms) != width:
            raise RaggedGroup(
                f"line {lineno}: group {name!r} has a disjunction of {len(atoms)} disjuncts,"
                f" expected {width}",
                group=name,
                line=lineno,
            )
    return DependencyGroup(name, [atoms for _, atoms in rows])


def serialize_document(doc: Document) -> str:
    blocks = []
    for g in doc.groups:
        lines = [f"group {g.name}"]
        lines.extend("  " + " ".join(d) for d in g.disjunctions)
        lines.append("end")
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)
