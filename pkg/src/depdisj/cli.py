"""``modularize`` command line tool."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from math import prod

from .document import Document, parse_document, serialize_document
from .encode import encode_group
from .errors import ModularizeError, VerificationError
from .kernels import BACKEND
from .modularize import DEFAULT_MAX_GROUP_SIZE, is_prime, modularize_group
from .oracle import combined_solutions, group_solutions

log = logging.getLogger("depdisj")

# beyond these sizes the verification oracle gets slow
VERIFY_MAX_DISJUNCTIONS = 5
VERIFY_MAX_WIDTH = 8


@dataclass(frozen=True)
class GroupStats:
    name: str
    width: int
    rows: int
    part_widths: tuple
    part_sizes: tuple

    def __post_init__(self):
        if prod(self.part_widths) != self.rows:
            raise AssertionError(
                f"group {self.name}: widths {self.part_widths} do not multiply to {self.rows} rows"
            )

    @property
    def rows_after(self) -> int:
        return sum(self.part_widths)

    @property
    def interaction_ratio(self) -> float:
        return self.width / self.rows_after

    @property
    def note(self) -> str:
        if len(self.part_widths) > 1:
            return "split"
        return "prime, modular" if is_prime(self.rows) else "modular"

    def format(self) -> str:
        product = " × ".join(map(str, self.part_widths))
        rows = f"rows {self.rows} = {product}" if len(self.part_widths) > 1 else f"rows {self.rows}"
        return (
            f"{self.name}: width {self.width} -> {' + '.join(map(str, self.part_widths))};"
            f" disjunctions {sum(self.part_sizes)} -> {' + '.join(map(str, self.part_sizes))};"
            f" {rows}; ratio {self.interaction_ratio:.2f} ({self.note})"
        )


def group_stats(original, parts) -> GroupStats:
    return GroupStats(
        name=original.name,
        width=original.width,
        rows=len(encode_group(original).cases),
        part_widths=tuple(p.width for p in parts),
        part_sizes=tuple(len(p) for p in parts),
    )


def verify_group(original, parts) -> None:
    if len(original) > VERIFY_MAX_DISJUNCTIONS or original.width > VERIFY_MAX_WIDTH:
        log.warning(
            "verifying group %r (%d disjunctions, width %d) may be slow",
            original.name, len(original), original.width,
        )
    if combined_solutions(parts) != group_solutions(original):
        raise VerificationError(f"group {original.name!r}: modularized groups change the solution set")


def modularize_document(doc: Document, *, verify=False, max_group_size=DEFAULT_MAX_GROUP_SIZE):
    """Modularize every group; returns the new document and per-group stats."""
    groups = []
    report = []
    for g in doc.groups:
        parts = modularize_group(g, max_group_size=max_group_size)
        if verify:
            verify_group(g, parts)
        report.append(group_stats(g, parts))
        groups.extend(parts)
    return Document(tuple(groups)), report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="modularize",
        description="Split groups of dependent disjunctions into independent subgroups.",
    )
    p.add_argument("input", nargs="?", default="-", help="input document ('-' for stdin)")
    p.add_argument("-o", "--output", default="-", help="output document ('-' for stdout)")
    p.add_argument("--stats", action="store_true", help="write per-group statistics to stderr")
    p.add_argument("--verify", action="store_true", help="check every result against the brute-force oracle")
    p.add_argument(
        "--max-group-size",
        type=int,
        default=DEFAULT_MAX_GROUP_SIZE,
        metavar="K",
        help=f"largest group to search for splits (default {DEFAULT_MAX_GROUP_SIZE})",
    )
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(format="modularize: %(levelname)s: %(message)s")
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse_document(text)
        out, report = modularize_document(doc, verify=args.verify, max_group_size=args.max_group_size)
    except ModularizeError as exc:
        print(f"modularize: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"modularize: error: {exc}", file=sys.stderr)
        return 1

    text = serialize_document(out)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.stats:
        print(f"# backend: {BACKEND}", file=sys.stderr)
        for row in report:
            print(row.format(), file=sys.stderr)
    return 0


def main() -> None:
    sys.exit(run())
