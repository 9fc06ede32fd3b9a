"""Type-A semisimple Lie algebras in exact arithmetic.

sl(n) is realized concretely as traceless n x n matrices over Fraction.
The ordered basis is H_1..H_{n-1} (= E_ii - E_{i+1,i+1}) followed by the
root vectors E_alpha = E_ij, roots sorted lexicographically on their
coordinate vectors with positive roots first.  The invariant form is the
trace form, so <E_alpha, E_{-alpha}> = 1 without rescaling.  All bracket
and form data is tabulated once, by actual matrix commutators, and is
immutable afterwards.
"""

from fractions import Fraction

from .linalg import ZERO, ONE, invert, nullspace, rref, solve, transpose

MAX_RANK = 6


class CybkitError(Exception):
    """Base class for all library errors."""


class UnsupportedSeriesError(CybkitError):
    pass


class StructuralError(CybkitError):
    """Dimension/ambient mismatch between objects."""


class DomainError(CybkitError):
    """Input outside an operation's mathematical domain."""


class LieElement:
    """Sparse element of a Lie algebra: map basis index -> Fraction."""

    __slots__ = ("coords",)

    def __init__(self, coords=None):
        self.coords = {}
        if coords:
            for i, v in coords.items():
                v = Fraction(v)
                if v != 0:
                    self.coords[i] = v

    def __add__(self, other):
        out = dict(self.coords)
        for i, v in other.coords.items():
            w = out.get(i, ZERO) + v
            if w == 0:
                out.pop(i, None)
            else:
                out[i] = w
        res = LieElement()
        res.coords = out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        res = LieElement()
        res.coords = {i: -v for i, v in self.coords.items()}
        return res

    def scale(self, c):
        c = Fraction(c)
        res = LieElement()
        if c != 0:
            res.coords = {i: c * v for i, v in self.coords.items()}
        return res

    def is_zero(self):
        return not self.coords

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def to_vector(self, dim):
        v = [ZERO] * dim
        for i, c in self.coords.items():
            v[i] = c
        return v

    @staticmethod
    def from_vector(vec):
        return LieElement({i: v for i, v in enumerate(vec) if v != 0})

    @staticmethod
    def basis(i):
        return LieElement({i: ONE})

    def __repr__(self):
        return "LieElement(%r)" % (self.coords,)


class LieAlgebra:
    """sl(n) with tabulated bracket, trace form, and root decomposition."""

    def __init__(self, series, rank, form_scale=ONE):
        if series != "A":
            raise UnsupportedSeriesError("unsupported series: %r" % (series,))
        if not 1 <= rank <= MAX_RANK:
            raise DomainError("rank must be between 1 and %d" % MAX_RANK)
        self.series = series
        self.rank = rank
        self.n = rank + 1
        self.dim = self.n * self.n - 1
        self.form_scale = Fraction(form_scale)

        n = self.n
        pos = sorted(_root_vec(i, j, n) for i in range(n) for j in range(n)
                     if i < j)
        neg = sorted(tuple(-x for x in r) for r in pos)
        self.roots = pos + neg
        self.positive_roots = pos
        self.cartan_indices = tuple(range(rank))
        self.root_index = {r: rank + t for t, r in enumerate(self.roots)}

        self.basis_matrices = []
        for k in range(rank):
            m = [[ZERO] * n for _ in range(n)]
            m[k][k] = ONE
            m[k + 1][k + 1] = -ONE
            self.basis_matrices.append(m)
        for r in self.roots:
            i, j = self._root_pair(r)
            m = [[ZERO] * n for _ in range(n)]
            m[i][j] = ONE
            self.basis_matrices.append(m)

        self._bracket_table = {}
        for a in range(self.dim):
            for b in range(self.dim):
                comm = _mat_comm(self.basis_matrices[a], self.basis_matrices[b])
                self._bracket_table[(a, b)] = self.element_from_matrix(comm)

        self.gram = [[self.form_scale * _mat_trace_prod(x, y)
                      for y in self.basis_matrices]
                     for x in self.basis_matrices]

    def _root_pair(self, root):
        i = root.index(1)
        j = root.index(-1)
        return i, j

    # -- roots ------------------------------------------------------------

    def is_root(self, root):
        return tuple(root) in self.root_index

    def root_basis_index(self, root):
        try:
            return self.root_index[tuple(root)]
        except KeyError:
            raise DomainError("not a root: %r" % (root,))

    def root_of_index(self, idx):
        if idx < self.rank:
            raise DomainError("index %d is a Cartan index" % idx)
        return self.roots[idx - self.rank]

    def root_value(self, root, h):
        """alpha(h) for h supported on the Cartan, via diagonal entries."""
        diag = self._cartan_diagonal(h)
        i, j = self._root_pair(tuple(root))
        return diag[i] - diag[j]

    def _cartan_diagonal(self, h):
        diag = [ZERO] * self.n
        for k, c in h.coords.items():
            if k >= self.rank:
                raise DomainError("element not supported on the Cartan")
            diag[k] += c
            diag[k + 1] -= c
        return diag

    def root_to_simple(self, root):
        """Coordinates of a root in the simple-root basis (partial sums)."""
        acc = 0
        out = []
        for v in root[:-1]:
            acc += v
            out.append(acc)
        return tuple(out)

    def simple_to_root(self, coords):
        if len(coords) != self.rank:
            raise DomainError("expected %d simple-root coordinates" % self.rank)
        prev = 0
        vec = []
        for c in coords:
            vec.append(c - prev)
            prev = c
        vec.append(-prev)
        root = tuple(vec)
        if root not in self.root_index:
            raise DomainError("not a root: simple coords %r" % (coords,))
        return root

    # -- elements and matrices ---------------------------------------------

    def element_from_matrix(self, mat):
        n = self.n
        if sum(mat[i][i] for i in range(n)) != 0:
            raise DomainError("matrix is not traceless")
        coords = {}
        acc = ZERO
        for k in range(self.rank):
            acc += mat[k][k]
            if acc != 0:
                coords[k] = acc
        for t, r in enumerate(self.roots):
            i, j = self._root_pair(r)
            if mat[i][j] != 0:
                coords[self.rank + t] = mat[i][j]
        return LieElement(coords)

    def matrix_from_element(self, x):
        n = self.n
        m = [[ZERO] * n for _ in range(n)]
        for k, c in x.coords.items():
            bm = self.basis_matrices[k]
            for i in range(n):
                for j in range(n):
                    if bm[i][j] != 0:
                        m[i][j] += c * bm[i][j]
        return m

    def root_vector(self, root):
        return LieElement.basis(self.root_basis_index(root))

    def cartan_element_from_diagonal(self, diag):
        if len(diag) != self.n or sum(diag) != 0:
            raise DomainError("diagonal must have length n and sum 0")
        coords = {}
        acc = ZERO
        for k in range(self.rank):
            acc += Fraction(diag[k])
            if acc != 0:
                coords[k] = acc
        return LieElement(coords)

    # -- bracket and form ---------------------------------------------------

    def bracket_basis(self, i, j):
        return self._bracket_table[(i, j)]

    def bracket(self, x, y):
        self._check_element(x)
        self._check_element(y)
        out = LieElement()
        for i, a in x.coords.items():
            for j, b in y.coords.items():
                out = out + self._bracket_table[(i, j)].scale(a * b)
        return out

    def form(self, x, y):
        self._check_element(x)
        self._check_element(y)
        total = ZERO
        for i, a in x.coords.items():
            gi = self.gram[i]
            for j, b in y.coords.items():
                total += a * b * gi[j]
        return total

    def structure_constant(self, alpha, beta):
        alpha = tuple(alpha)
        beta = tuple(beta)
        gamma = tuple(a + b for a, b in zip(alpha, beta))
        if not (self.is_root(alpha) and self.is_root(beta)):
            raise DomainError("arguments must be roots")
        if not self.is_root(gamma):
            raise DomainError("sum of roots is not a root: %r + %r" % (alpha, beta))
        br = self.bracket(self.root_vector(alpha), self.root_vector(beta))
        return br.coords.get(self.root_basis_index(gamma), ZERO)

    def _check_element(self, x):
        for i in x.coords:
            if not 0 <= i < self.dim:
                raise StructuralError("basis index %d out of range for %s" %
                                      (i, self.name))

    @property
    def name(self):
        return "%s%d" % (self.series, self.rank)

    def __repr__(self):
        return "LieAlgebra(%s, dim=%d)" % (self.name, self.dim)


def _root_vec(i, j, n):
    v = [0] * n
    v[i] = 1
    v[j] = -1
    return tuple(v)


def _mat_comm(a, b):
    n = len(a)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k] != 0:
                f = a[i][k]
                for j in range(n):
                    out[i][j] += f * b[k][j]
            if b[i][k] != 0:
                f = b[i][k]
                for j in range(n):
                    out[i][j] -= f * a[k][j]
    return out


def _mat_trace_prod(a, b):
    n = len(a)
    return sum(a[i][k] * b[k][i] for i in range(n) for k in range(n))


_ALGEBRA_CACHE = {}


def build_algebra(series, rank, form_scale=ONE):
    """Construct (and cache) the type-A algebra of the given rank."""
    key = (series, rank, Fraction(form_scale))
    if key not in _ALGEBRA_CACHE:
        _ALGEBRA_CACHE[key] = LieAlgebra(series, rank, form_scale)
    return _ALGEBRA_CACHE[key]


def bracket(g, x, y):
    return g.bracket(x, y)


def form(g, x, y):
    return g.form(x, y)


def structure_constant(g, alpha, beta):
    return g.structure_constant(alpha, beta)


class Subspace:
    """Subspace of an ambient vector space, stored as canonical RREF rows.

    Two subspaces are equal iff their stored matrices are identical.
    """

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim, rows=(), _canonical=False):
        self.ambient_dim = ambient_dim
        if _canonical:
            self.rows = [list(r) for r in rows]
            self.pivots = [next(i for i, v in enumerate(r) if v != 0)
                           for r in self.rows]
        else:
            for r in rows:
                if len(r) != ambient_dim:
                    raise StructuralError("row length %d != ambient %d" %
                                          (len(r), ambient_dim))
            self.rows, self.pivots = rref(rows)

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vec):
        return self.coords_of(vec) is not None

    def coords_of(self, vec):
        """Coefficients of vec over the RREF rows, or None if outside."""
        if len(vec) != self.ambient_dim:
            raise StructuralError("vector length mismatch")
        coeffs = [vec[p] for p in self.pivots]
        residual = list(vec)
        for c, row in zip(coeffs, self.rows):
            if c != 0:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(v != 0 for v in residual):
            return None
        return coeffs

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim,
                     tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)


def span(ambient_dim, vectors):
    return Subspace(ambient_dim, list(vectors))


def span_elements(g, elements):
    return span(g.dim, [x.to_vector(g.dim) for x in elements])


def subspace_sum(s, t):
    _check_ambient(s, t)
    return Subspace(s.ambient_dim, s.rows + t.rows)


def subspace_intersect(s, t):
    _check_ambient(s, t)
    if not s.rows or not t.rows:
        return Subspace(s.ambient_dim)
    # a.S = b.T  <=>  (a, b) in the kernel of [S^T | -T^T]
    cols = len(s.rows) + len(t.rows)
    sys_rows = []
    for c in range(s.ambient_dim):
        row = [s.rows[i][c] for i in range(len(s.rows))]
        row += [-t.rows[j][c] for j in range(len(t.rows))]
        sys_rows.append(row)
    vectors = []
    for k in nullspace(sys_rows, cols):
        vec = [ZERO] * s.ambient_dim
        for i, a in enumerate(k[:len(s.rows)]):
            if a != 0:
                for c in range(s.ambient_dim):
                    vec[c] += a * s.rows[i][c]
        vectors.append(vec)
    return Subspace(s.ambient_dim, vectors)


def perp(g, s):
    """Orthogonal complement of s in g under the invariant form."""
    if s.ambient_dim != g.dim:
        raise StructuralError("subspace ambient does not match algebra")
    rows = []
    for r in s.rows:
        rows.append([sum(r[j] * g.gram[j][k] for j in range(g.dim))
                     for k in range(g.dim)])
    return Subspace(g.dim, nullspace(rows, g.dim))


def is_subalgebra(g, s):
    if s.ambient_dim != g.dim:
        raise StructuralError("subspace ambient does not match algebra")
    elems = [LieElement.from_vector(r) for r in s.rows]
    for i, x in enumerate(elems):
        for y in elems[i:]:
            if not s.contains(g.bracket(x, y).to_vector(g.dim)):
                return False
    return True


def is_direct_sum_of_ambient(s, t):
    _check_ambient(s, t)
    if s.dim + t.dim != s.ambient_dim:
        return False
    return subspace_sum(s, t).dim == s.ambient_dim


def _check_ambient(s, t):
    if s.ambient_dim != t.ambient_dim:
        raise StructuralError("ambient dimension mismatch")
