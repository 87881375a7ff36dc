"""Sparse exact linear algebra over a coefficient field.

Vectors are dicts {index: nonzero scalar}.  A matrix is a list of sparse
columns plus an explicit row count.  Pivots are always taken at the
smallest available index, so every derived basis (row echelon, kernel,
image, complement) is deterministic and, for a fixed span, canonical.
"""


def vec_add_scaled(u, v, c, field):
    """Return u + c*v as a fresh sparse dict."""
    out = dict(u)
    for j, x in v.items():
        s = field.add(out.get(j, field.zero), field.mul(c, x))
        if field.is_zero(s):
            out.pop(j, None)
        else:
            out[j] = s
    return out


def vec_scale(v, c, field):
    if field.is_zero(c):
        return {}
    return {j: field.mul(c, x) for j, x in v.items()}


class Echelon:
    """Incremental row-echelon span; rows are kept with lead coefficient 1.

    Stored rows only ever have support at indices >= their lead, so
    reduction scans strictly left to right and terminates.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}  # lead index -> row

    def reduce(self, v):
        out = dict(v)
        while out:
            j = min(out)
            row = self.rows.get(j)
            if row is None:
                return out
            out = vec_add_scaled(out, row, self.field.neg(out[j]), self.field)
        return out

    def add(self, v):
        """Insert v if independent; return its lead index, else None."""
        r = self.reduce(v)
        if not r:
            return None
        j = min(r)
        self.rows[j] = vec_scale(r, self.field.inv(r[j]), self.field)
        return j

    def contains(self, v):
        return not self.reduce(v)

    @property
    def rank(self):
        return len(self.rows)


def rref(vectors, field):
    """Canonical reduced row echelon basis of span(vectors).

    Returns (pivots, rows): pivots sorted ascending, rows a dict
    pivot -> row with lead coefficient 1 and zeros at all other pivots.
    """
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    pivots = sorted(ech.rows)
    reduced = {}
    for j in reversed(pivots):
        row = ech.rows[j]
        for k in sorted(row):
            if k != j and k in reduced:
                row = vec_add_scaled(row, reduced[k], field.neg(row[k]), field)
        reduced[j] = row
    return pivots, reduced


def transpose(cols, nrows):
    rows = {}
    for j, col in enumerate(cols):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    return [rows.get(i, {}) for i in range(nrows)]


class SolveResult:
    __slots__ = ("rank", "kernel", "image", "complement")

    def __init__(self, rank, kernel, image, complement):
        self.rank = rank
        self.kernel = kernel
        self.image = image
        self.complement = complement


def solve_cols(cols, nrows, field):
    """Rank, kernel basis, image basis, and image complement of a matrix.

    The kernel basis is in canonical (RREF-derived) form; the image basis
    is the pivot columns of the original matrix; the complement is a set
    of standard basis vectors of the codomain that extends the image to
    the full codomain.
    """
    pivots, red = rref(transpose(cols, nrows), field)
    pivset = set(pivots)
    kernel = []
    for f in range(len(cols)):
        if f in pivset:
            continue
        v = {f: field.one}
        for p in pivots:
            c = red[p].get(f)
            if c is not None:
                v[p] = field.neg(c)
        kernel.append(v)
    image = [dict(cols[p]) for p in pivots]
    ech = Echelon(field)
    for col in cols:
        ech.add(col)
    complement = [{i: field.one} for i in range(nrows) if i not in ech.rows]
    assert len(pivots) + len(kernel) == len(cols)
    return SolveResult(len(pivots), kernel, image, complement)


def to_dense(v, n):
    return [v.get(i, 0) for i in range(n)]


def from_dense(row, field):
    out = {}
    for i, c in enumerate(row):
        x = c if not isinstance(c, int) else field.from_int(c)
        if not field.is_zero(x):
            out[i] = x
    return out
