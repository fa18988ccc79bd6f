"""Exact sparse row reduction over the rationals.

Vectors are dicts mapping hashable keys to nonzero ``Fraction`` values.
Pivots are chosen by minimal sort key, so every reduction is deterministic
and results are reproducible bit-for-bit.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


class RowSpace:
    """Incrementally maintained row-echelon span of sparse vectors.

    ``sort_key`` maps a coordinate key to something orderable; it defaults
    to the key itself.  Stored rows are scaled so the pivot entry is 1.
    """

    def __init__(self, sort_key=None):
        self._key = sort_key if sort_key is not None else (lambda k: k)
        self.rows = {}  # pivot key -> row (dict), row[pivot] == 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Eliminate stored pivots from ``vec`` until its leading key is free.

        Returns the residual dict; an empty residual means membership.
        """
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            pivot = min(vec, key=self._key)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            c = vec.pop(pivot)
            for k, v in row.items():
                if k == pivot:
                    continue
                new = vec.get(k, _ZERO) - c * v
                if new:
                    vec[k] = new
                else:
                    vec.pop(k, None)
        return vec

    def full_reduce(self, vec):
        """Like ``reduce`` but eliminates every reducible key, not just the head."""
        vec = {k: v for k, v in vec.items() if v}
        done = []
        while vec:
            pivot = min(vec, key=self._key)
            c = vec.pop(pivot)
            row = self.rows.get(pivot)
            if row is None:
                done.append((pivot, c))
                continue
            for k, v in row.items():
                if k == pivot:
                    continue
                new = vec.get(k, _ZERO) - c * v
                if new:
                    vec[k] = new
                else:
                    vec.pop(k, None)
        return dict(done)

    def insert(self, vec):
        """Add ``vec`` to the span.  Returns the stored row, or None if dependent."""
        res = self.reduce(vec)
        if not res:
            return None
        pivot = min(res, key=self._key)
        c = res[pivot]
        row = {k: v / c for k, v in res.items()}
        self.rows[pivot] = row
        return row

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def reduced_basis(self):
        """Fully back-substituted canonical basis, sorted by pivot key."""
        pivots = sorted(self.rows, key=self._key)
        reduced = {}
        for p in reversed(pivots):
            row = dict(self.rows[p])
            hits = [q for q in row if q != p and q in self.rows]
            for q in sorted(hits, key=self._key):
                c = row.pop(q, _ZERO)
                if not c:
                    continue
                for k, v in reduced[q].items():
                    if k == q:
                        continue
                    new = row.get(k, _ZERO) - c * v
                    if new:
                        row[k] = new
                    else:
                        row.pop(k, None)
            reduced[p] = row
        return [reduced[p] for p in pivots]


def kernel_basis(vectors, sort_key=None):
    """Basis of ``{c : sum_i c_i * vectors[i] == 0}`` over the rationals.

    ``vectors`` is a sequence of sparse dicts.  Returns a list of dicts
    mapping the index i to the coefficient c_i, row-reduced and
    deterministic.
    """
    base = sort_key if sort_key is not None else (lambda k: k)

    def aug_key(k):
        tag, payload = k
        return (0, base(payload)) if tag == 0 else (1, payload)

    space = RowSpace(aug_key)
    kernels = []
    for i, vec in enumerate(vectors):
        aug = {(0, k): v for k, v in vec.items() if v}
        aug[(1, i)] = Fraction(1)
        stored = space.insert(aug)
        if stored is not None and min(stored, key=aug_key)[0] == 1:
            # All coordinate keys were eliminated: the coefficient part is a
            # kernel vector (pivot normalized to 1 already).
            kernels.append({k[1]: v for k, v in stored.items()})
    return kernels
