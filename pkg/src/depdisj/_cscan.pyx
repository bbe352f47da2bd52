# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled split scanner.

Distinct projected rows are counted by refining a row partition one column
at a time: each row's class id is combined with its code in the next column
and relabelled densely through an open-addressing table.  Class ids never
exceed the row count, so keys fit in 64 bits.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef inline uint64_t _mix(int64_t key) nogil:
    cdef uint64_t h = <uint64_t>key * 0x9E3779B97F4A7C15ULL
    return h ^ (h >> 29)


cdef class Scanner:
    cdef int nrows
    cdef public int ncols
    cdef int64_t *codes
    cdef int64_t *card
    cdef int64_t *ids
    cdef int64_t *tab_keys
    cdef int64_t *tab_vals
    cdef uint64_t tab_mask
    cdef public long confinements

    def __cinit__(self, codes, int ncols):
        cdef int nrows
        cdef int r, c
        cdef int64_t v
        cdef uint64_t size = 4
        rows = [tuple(row) for row in codes]
        nrows = len(rows)
        if ncols > 64:
            raise ValueError("compiled scanner supports at most 64 columns")
        self.nrows = nrows
        self.ncols = ncols
        self.confinements = 0
        while size < <uint64_t>(2 * nrows):
            size <<= 1
        self.tab_mask = size - 1
        self.codes = <int64_t *>malloc(max(1, nrows * ncols) * sizeof(int64_t))
        self.card = <int64_t *>malloc(max(1, ncols) * sizeof(int64_t))
        self.ids = <int64_t *>malloc(max(1, nrows) * sizeof(int64_t))
        self.tab_keys = <int64_t *>malloc(size * sizeof(int64_t))
        self.tab_vals = <int64_t *>malloc(size * sizeof(int64_t))
        if not (self.codes and self.card and self.ids and self.tab_keys and self.tab_vals):
            raise MemoryError()
        for c in range(ncols):
            self.card[c] = 1
        for r in range(nrows):
            vals = rows[r]
            for c in range(ncols):
                v = vals[c]
                if v < 0:
                    raise ValueError("column codes must be non-negative")
                self.codes[c * nrows + r] = v
                if v + 1 > self.card[c]:
                    self.card[c] = v + 1

    def __dealloc__(self):
        free(self.codes)
        free(self.card)
        free(self.ids)
        free(self.tab_keys)
        free(self.tab_vals)

    cdef int64_t _count(self, uint64_t mask) nogil:
        cdef int r, c
        cdef int nrows = self.nrows
        cdef int64_t ncls = 1
        cdef int64_t kc, key, nxt
        cdef uint64_t slot
        cdef int64_t *col
        for r in range(nrows):
            self.ids[r] = 0
        for c in range(self.ncols):
            if not (mask >> c) & 1:
                continue
            if ncls == nrows:
                break
            kc = self.card[c]
            if kc == 1:
                continue
            col = self.codes + c * nrows
            memset(self.tab_keys, 0xFF, (self.tab_mask + 1) * sizeof(int64_t))
            nxt = 0
            for r in range(nrows):
                key = self.ids[r] * kc + col[r]
                slot = _mix(key) & self.tab_mask
                while self.tab_keys[slot] != -1 and self.tab_keys[slot] != key:
                    slot = (slot + 1) & self.tab_mask
                if self.tab_keys[slot] == -1:
                    self.tab_keys[slot] = key
                    self.tab_vals[slot] = nxt
                    nxt += 1
                self.ids[r] = self.tab_vals[slot]
            ncls = nxt
        return ncls

    def count(self, uint64_t mask):
        self.confinements += 1
        return self._count(mask)

    def scan(self, masks, int64_t total):
        """Index of the first mask whose split is independent, else -1."""
        cdef uint64_t full = (<uint64_t>1 << self.ncols) - 1 if self.ncols < 64 else <uint64_t>-1
        cdef uint64_t mask
        cdef int64_t left
        cdef Py_ssize_t i
        for i in range(len(masks)):
            mask = masks[i]
            self.confinements += 1
            left = self._count(mask)
            if total % left:
                continue
            self.confinements += 1
            if left * self._count(full ^ mask) == total:
                return i
        return -1
