"""Pure-Python split scanner; the fallback for the compiled ``_cscan``."""

from operator import itemgetter


class Scanner:
    """Counts distinct projections of a fixed row matrix.

    ``codes`` holds one sequence of column codes per row.  Column subsets are
    bit masks over column positions.  ``confinements`` counts projections
    computed so far.
    """

    def __init__(self, codes, ncols):
        self.rows = [tuple(r) for r in codes]
        self.ncols = ncols
        self.full = (1 << ncols) - 1
        self.confinements = 0

    def count(self, mask):
        self.confinements += 1
        cols = [c for c in range(self.ncols) if mask >> c & 1]
        if not cols:
            return 1
        return len(set(map(itemgetter(*cols), self.rows)))

    def scan(self, masks, total):
        """Index of the first mask whose split is independent, else -1."""
        full = self.full
        for i, mask in enumerate(masks):
            left = self.count(mask)
            if total % left:
                continue
            if left * self.count(full ^ mask) == total:
                return i
        return -1
