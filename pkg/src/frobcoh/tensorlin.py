"""Exact linear maps between tensor powers of a d-dimensional space.

A ``LinMap`` of arity m -> n is a d^n x d^m matrix.  The basis of A^{(x)k}
is ordered lexicographically with the leftmost tensor factor most
significant, so ``e_a (x) e_b`` has index ``a*d + b``.

Entries are kept sparse (row -> {col: value}, zeros dropped).  The padded
structure maps that dominate the cochain formulas, such as ``mu (x) | (x) |``,
are almost entirely zero, and sparse storage is what keeps the degree-3
chain checks on 4- and 6-dimensional algebras tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import ArityMismatch, FieldMismatch


class LinMap:
    __slots__ = ("field", "dim", "dom_arity", "cod_arity", "rows")

    def __init__(self, field, dim, dom_arity, cod_arity, rows=None):
        self.field = field
        self.dim = dim
        self.dom_arity = dom_arity
        self.cod_arity = cod_arity
        self.rows = rows if rows is not None else {}

    # -- construction --------------------------------------------------

    @classmethod
    def zero(cls, field, dim, dom_arity, cod_arity):
        return cls(field, dim, dom_arity, cod_arity, {})

    @classmethod
    def identity(cls, field, dim, arity=1):
        one = field.one
        return cls(field, dim, arity, arity, {i: {i: one} for i in range(dim ** arity)})

    @classmethod
    def from_dense(cls, field, dim, dom_arity, cod_arity, matrix):
        nrows, ncols = dim ** cod_arity, dim ** dom_arity
        if len(matrix) != nrows or any(len(r) != ncols for r in matrix):
            raise ArityMismatch("matrix shape does not match arities %d->%d on d=%d"
                                % (dom_arity, cod_arity, dim))
        rows = {}
        for i, r in enumerate(matrix):
            row = {j: field(v) for j, v in enumerate(r) if v}
            if row:
                rows[i] = row
        return cls(field, dim, dom_arity, cod_arity, rows)

    @classmethod
    def from_columns(cls, field, dim, dom_arity, cod_arity, columns):
        """``columns[j]`` is the image of basis vector j (dense or {index: value})."""
        rows = {}
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if v:
                    rows.setdefault(i, {})[j] = field(v)
        return cls(field, dim, dom_arity, cod_arity, rows)

    @classmethod
    def from_flat(cls, field, dim, dom_arity, cod_arity, flat):
        """Inverse of ``flatten``: row-major coordinates (dense or {index: value})."""
        ncols = dim ** dom_arity
        rows = {}
        items = flat.items() if isinstance(flat, dict) else enumerate(flat)
        for k, v in items:
            if v:
                r, c = divmod(k, ncols)
                rows.setdefault(r, {})[c] = field(v)
        return cls(field, dim, dom_arity, cod_arity, rows)

    # -- shape -----------------------------------------------------------

    @property
    def nrows(self):
        return self.dim ** self.cod_arity

    @property
    def ncols(self):
        return self.dim ** self.dom_arity

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __repr__(self):
        return "LinMap(%s, d=%d, %d->%d, nnz=%d)" % (
            self.field, self.dim, self.dom_arity, self.cod_arity, self.nnz())

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    # -- access ------------------------------------------------------------

    def entry(self, r, c):
        row = self.rows.get(r)
        if row is None:
            return self.field.zero
        v = row.get(c)
        return self.field.zero if v is None else v

    def to_dense(self):
        z = self.field.zero
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def column(self, c):
        z = self.field.zero
        col = [z] * self.nrows
        for r, row in self.rows.items():
            v = row.get(c)
            if v is not None:
                col[r] = v
        return col

    def apply(self, vec):
        """Image of a dense coordinate vector."""
        if len(vec) != self.ncols:
            raise ArityMismatch("vector length %d, expected %d" % (len(vec), self.ncols))
        z = self.field.zero
        out = [z] * self.nrows
        for r, row in self.rows.items():
            acc = z
            for c, v in row.items():
                x = vec[c]
                if x:
                    acc = acc + v * x
            out[r] = acc
        return out

    def flatten(self):
        """Row-major coordinate vector of length nrows * ncols."""
        z = self.field.zero
        ncols = self.ncols
        out = [z] * (self.nrows * ncols)
        for r, row in self.rows.items():
            base = r * ncols
            for c, v in row.items():
                out[base + c] = v
        return out

    def sparse_flat(self):
        ncols = self.ncols
        return {r * ncols + c: v for r, row in self.rows.items() for c, v in row.items()}

    def is_zero(self):
        return not self.rows

    # -- arithmetic --------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, LinMap):
            raise TypeError("expected LinMap, got %r" % (other,))
        if other.field != self.field:
            raise FieldMismatch("%s vs %s" % (self.field, other.field))
        if other.dim != self.dim:
            raise ArityMismatch("dimension %d vs %d" % (self.dim, other.dim))

    def _check_shape(self, other):
        self._check_same(other)
        if (self.dom_arity, self.cod_arity) != (other.dom_arity, other.cod_arity):
            raise ArityMismatch("arity %d->%d vs %d->%d" % (
                self.dom_arity, self.cod_arity, other.dom_arity, other.cod_arity))

    def __add__(self, other):
        self._check_shape(other)
        rows = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            target = rows.setdefault(r, {})
            for c, v in row.items():
                s = target[c] + v if c in target else v
                if s:
                    target[c] = s
                else:
                    target.pop(c, None)
            if not target:
                del rows[r]
        return LinMap(self.field, self.dim, self.dom_arity, self.cod_arity, rows)

    def __neg__(self):
        return LinMap(self.field, self.dim, self.dom_arity, self.cod_arity,
                      {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return LinMap.zero(self.field, self.dim, self.dom_arity, self.cod_arity)
        return LinMap(self.field, self.dim, self.dom_arity, self.cod_arity,
                      {r: {k: c * v for k, v in row.items()} for r, row in self.rows.items()})

    def __rmul__(self, c):
        if isinstance(c, LinMap):
            return NotImplemented
        return self.scale(c)

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.dom_arity == other.dom_arity and self.cod_arity == other.cod_arity
                and self.rows == other.rows)

    __hash__ = None

    def first_difference(self, other):
        """First (row, col, self_value, other_value) where the maps differ, or None."""
        self._check_shape(other)
        for r in sorted(set(self.rows) | set(other.rows)):
            a, b = self.rows.get(r, {}), other.rows.get(r, {})
            for c in sorted(set(a) | set(b)):
                x, y = self.entry(r, c), other.entry(r, c)
                if x != y:
                    return r, c, x, y
        return None

    def transpose(self):
        rows = {}
        for r, row in self.rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return LinMap(self.field, self.dim, self.cod_arity, self.dom_arity, rows)


def compose(g, f):
    """g after f, i.e. the matrix product g.f."""
    g._check_same(f)
    if f.cod_arity != g.dom_arity:
        raise ArityMismatch("cannot compose %d->%d after %d->%d" % (
            g.dom_arity, g.cod_arity, f.dom_arity, f.cod_arity))
    frows = f.rows
    out = {}
    for r, grow in g.rows.items():
        acc = {}
        for k, a in grow.items():
            frow = frows.get(k)
            if not frow:
                continue
            for c, b in frow.items():
                if c in acc:
                    acc[c] = acc[c] + a * b
                else:
                    acc[c] = a * b
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            out[r] = acc
    return LinMap(g.field, g.dim, f.dom_arity, g.cod_arity, out)


def chain(*maps):
    """Compose right to left: chain(h, g, f) = h.g.f."""
    return reduce(compose, maps)


def _tensor2(f, g):
    f._check_same(g)
    gR, gC = g.nrows, g.ncols
    out = {}
    grows = g.rows
    for r1, row1 in f.rows.items():
        for r2, row2 in grows.items():
            row = {}
            for c1, a in row1.items():
                base = c1 * gC
                for c2, b in row2.items():
                    row[base + c2] = a * b
            out[r1 * gR + r2] = row
    return LinMap(f.field, f.dim, f.dom_arity + g.dom_arity, f.cod_arity + g.cod_arity, out)


def tensor(*maps):
    """Kronecker product, left factor most significant; arities add."""
    return reduce(_tensor2, maps)


def identity(field, dim, arity=1):
    return LinMap.identity(field, dim, arity)


def transposition(field, dim):
    """The flip e_a (x) e_b -> e_b (x) e_a."""
    one = field.one
    rows = {b * dim + a: {a * dim + b: one} for a in range(dim) for b in range(dim)}
    return LinMap(field, dim, 2, 2, rows)


def basis_index(dim, indices):
    k = 0
    for a in indices:
        k = k * dim + a
    return k


def basis_tuple(dim, index, arity):
    out = []
    for _ in range(arity):
        index, a = divmod(index, dim)
        out.append(a)
    return tuple(reversed(out))


# -- elimination ------------------------------------------------------------

def rref(field, rows, ncols):
    """Reduced row echelon form of sparse rows ({col: value}).

    Returns ``{pivot_col: row}`` with every row normalised to a leading 1
    and zero in every other pivot column.
    """
    pivots = {}
    for src in rows:
        row = {c: v for c, v in src.items() if v}
        hit = [c for c in row if c in pivots]
        for pc in hit:
            a = row.get(pc)
            if not a:
                continue
            for c, v in pivots[pc].items():
                s = row[c] - a * v if c in row else -a * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
        if not row:
            continue
        p = min(row)
        inv = field.one / row[p]
        row = {c: v * inv for c, v in row.items()}
        for pc, prow in pivots.items():
            a = prow.get(p)
            if a:
                for c, v in row.items():
                    s = prow[c] - a * v if c in prow else -a * v
                    if s:
                        prow[c] = s
                    else:
                        prow.pop(c, None)
        pivots[p] = row
        if any(c >= ncols for c in row):
            raise ArityMismatch("row entry beyond %d columns" % ncols)
    return dict(sorted(pivots.items()))


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^n held by its reduced row echelon basis."""

    field: object
    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        rows = []
        for v in vectors:
            items = v.items() if isinstance(v, dict) else enumerate(v)
            rows.append({i: field(x) for i, x in items if x})
        piv = rref(field, rows, ambient_dim)
        z = field.zero
        basis = []
        for row in piv.values():
            vec = [z] * ambient_dim
            for c, v in row.items():
                vec[c] = v
            basis.append(tuple(vec))
        return cls(field, ambient_dim, tuple(basis))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __contains__(self, vec):
        return Subspace.span(self.field, self.ambient_dim, list(self.basis) + [vec]).dim == self.dim

    def contains(self, vec):
        return vec in self

    def combination(self, coeffs):
        z = self.field.zero
        out = [z] * self.ambient_dim
        for c, b in zip(coeffs, self.basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        out[i] = out[i] + c * x
        return out


@dataclass(frozen=True)
class AffineSolution:
    particular: tuple
    homogeneous: Subspace


def matrix_rank(field, rows, ncols):
    rows = rows.values() if isinstance(rows, dict) else rows
    return len(rref(field, rows, ncols))


def matrix_kernel(field, rows, ncols):
    """Null space of the matrix whose rows are the given sparse rows."""
    rows = rows.values() if isinstance(rows, dict) else rows
    piv = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    one = field.one
    vectors = []
    for j in free:
        v = {j: one}
        for p, row in piv.items():
            x = row.get(j)
            if x:
                v[p] = -x
        vectors.append(v)
    return Subspace.span(field, ncols, vectors)


def kernel(f):
    return matrix_kernel(f.field, f.rows, f.ncols)


def rank(f):
    return matrix_rank(f.field, f.rows, f.ncols)


def solve_affine(field, constraints, unknowns):
    """Solve rows . x = rhs.

    ``constraints`` is a list of ``(row, rhs)`` where ``row`` is a dense
    sequence, a ``{col: value}`` dict or a 1-row LinMap.  Returns an
    ``AffineSolution`` or None when the system is infeasible.
    """
    rows = []
    for row, rhs in constraints:
        if isinstance(row, LinMap):
            if row.nrows != 1:
                raise ArityMismatch("constraint map must have a single row")
            row = row.rows.get(0, {})
        items = row.items() if isinstance(row, dict) else enumerate(row)
        r = {i: field(v) for i, v in items if v}
        if any(i >= unknowns for i in r):
            raise ArityMismatch("constraint wider than %d unknowns" % unknowns)
        rhs = field(rhs)
        if rhs:
            r[unknowns] = rhs
        rows.append(r)
    piv = rref(field, rows, unknowns + 1)
    if unknowns in piv:
        return None
    z = field.zero
    particular = [z] * unknowns
    for p, row in piv.items():
        particular[p] = row.get(unknowns, z)
    homog = matrix_kernel(field, [{c: v for c, v in row.items() if c < unknowns} for row in rows], unknowns)
    return AffineSolution(tuple(particular), homog)


def invert(f):
    """Exact inverse of a square LinMap, or None if singular."""
    if f.nrows != f.ncols:
        return None
    n = f.ncols
    one = f.field.one
    rows = []
    for r in range(n):
        row = dict(f.rows.get(r, {}))
        row[n + r] = one
        rows.append(row)
    piv = rref(f.field, rows, 2 * n)
    if list(piv)[:n] != list(range(n)) or len(piv) < n:
        return None
    out = {}
    for p in range(n):
        row = {c - n: v for c, v in piv[p].items() if c >= n}
        if row:
            out[p] = row
    return LinMap(f.field, f.dim, f.cod_arity, f.dom_arity, out)
