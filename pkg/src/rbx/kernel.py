"""Exact scalars (rationals and prime fields) and dense matrix/tensor ops.

Conventions used throughout the toolkit:

* scalars are `fractions.Fraction` over the rationals or `GFElement` over a
  prime field -- arithmetic never rounds, equality is structural;
* vectors are plain tuples of scalars;
* a linear map is a square `Matrix` whose column j is the image of basis
  vector j, so map composition is matrix multiplication and applying a map
  to a vector is `m.apply(v)`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class GFElement:
    """Residue in GF(p).  Interoperates with int, never with Fraction."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldError(f"mixing GF({self.p}) with GF({other.p})")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GFElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GFElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GFElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else GFElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GFElement(-self.val, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.val)

    def __repr__(self):
        return str(self.val)


class Rationals:
    """Handle for the rational field; scalars are `fractions.Fraction`."""

    char = 0
    modulus = None

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of(self, num, den=1):
        return Fraction(num, den)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def parse(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    def elements(self):
        raise FieldError("the rational field is infinite")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """Handle for GF(p), p prime."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        self.modulus = p
        self.char = p

    def zero(self):
        return GFElement(0, self.modulus)

    def one(self):
        return GFElement(1, self.modulus)

    def of(self, num, den=1):
        x = GFElement(num, self.modulus)
        return x if den == 1 else x / GFElement(den, self.modulus)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.modulus:
                raise FieldError(f"GF({x.p}) element in GF({self.modulus}) context")
            return x
        if isinstance(x, int):
            return GFElement(x, self.modulus)
        raise FieldError(f"cannot coerce {x!r} into GF({self.modulus})")

    def parse(self, text: str):
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.of(int(num), int(den))
            return self.of(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad GF({self.modulus}) literal {text!r}") from exc

    def elements(self):
        return tuple(GFElement(i, self.modulus) for i in range(self.modulus))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return f"GF {self.modulus}"


def field_make(spec: str):
    """Build a field handle from a spec string: "rationals"/"Q" or "prime p"/"GF p"."""
    text = spec.strip()
    low = text.lower()
    if low in ("rationals", "q", "qq"):
        return Rationals()
    for prefix in ("prime", "gf"):
        if low.startswith(prefix):
            tail = low[len(prefix):].strip().lstrip("(").rstrip(")").strip()
            try:
                p = int(tail)
            except ValueError as exc:
                raise FieldError(f"bad field spec {spec!r}") from exc
            return PrimeField(p)
    raise FieldError(f"bad field spec {spec!r}")


# ---------------------------------------------------------------------------
# vectors (plain tuples)

def vzero(field, n):
    z = field.zero()
    return (z,) * n


def bv(field, n, i):
    """Basis vector e_i."""
    z, o = field.zero(), field.one()
    return tuple(o if k == i else z for k in range(n))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def vec_is_zero(u):
    return not any(u)


# ---------------------------------------------------------------------------
# matrices

class Matrix:
    """Dense matrix over one field, row-major immutable storage."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        entries = tuple(field.coerce(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(field, len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_cols(cls, field, cols):
        return cls.from_rows(field, cols).transpose()

    @classmethod
    def zero(cls, field, n, m=None):
        m = n if m is None else m
        return cls(field, n, m, [field.zero()] * (n * m))

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def apply(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix application")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = self.field.zero()
            for j, x in enumerate(v):
                if x:
                    acc = acc + self.entries[base + j] * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        z = self.field.zero()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i * self.cols + k]
                    if a:
                        acc = acc + a * other.entries[k * other.cols + j]
                out.append(acc)
        return Matrix(self.field, self.rows, other.cols, out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        return Matrix(self.field, self.rows, self.cols, [c * a for a in self.entries])

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [self.entries[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def is_zero(self):
        return not any(self.entries)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        work = [list(self.row(i)) for i in range(n)]
        result = self.field.one()
        for c in range(n):
            pivot = next((r for r in range(c, n) if work[r][c]), None)
            if pivot is None:
                return self.field.zero()
            if pivot != c:
                work[c], work[pivot] = work[pivot], work[c]
                result = -result
            pv = work[c][c]
            result = result * pv
            for r in range(c + 1, n):
                f = work[r][c] / pv
                if f:
                    work[r] = [a - f * b for a, b in zip(work[r], work[c])]
        return result

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        work = [list(self.row(i)) + list(bv(self.field, n, i)) for i in range(n)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if work[r][c]), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            work[c], work[pivot] = work[pivot], work[c]
            pv = work[c][c]
            work[c] = [a / pv for a in work[c]]
            for r in range(n):
                if r != c and work[r][c]:
                    f = work[r][c]
                    work[r] = [a - f * b for a, b in zip(work[r], work[c])]
        return Matrix.from_rows(self.field, [row[n:] for row in work])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        rows = [" ".join(str(x) for x in self.row(i)) for i in range(self.rows)]
        return "[" + "; ".join(rows) + "]"


def det(m: Matrix):
    return m.det()


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.rows, b.rows
    out = Matrix.zero(a.field, n + m, n + m)
    ent = list(out.entries)
    for i in range(n):
        for j in range(n):
            ent[i * (n + m) + j] = a[i, j]
    for i in range(m):
        for j in range(m):
            ent[(n + i) * (n + m) + (n + j)] = b[i, j]
    return Matrix(a.field, n + m, n + m, ent)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; with row-major vec(f), kron(a, I) represents f -> a @ f."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    ent = []
    for i in range(rows):
        ai, bi = divmod(i, b.rows)
        for j in range(cols):
            aj, bj = divmod(j, b.cols)
            ent.append(a[ai, aj] * b[bi, bj])
    return Matrix(a.field, rows, cols, ent)


# ---------------------------------------------------------------------------
# tensors

class Tensor2:
    """Element of V (x) V on a chosen basis; entry (i, j) weights e_i (x) e_j."""

    __slots__ = ("field", "dim", "entries")

    def __init__(self, field, dim, entries):
        entries = tuple(field.coerce(x) for x in entries)
        if len(entries) != dim * dim:
            raise ValueError("tensor entry count mismatch")
        self.field = field
        self.dim = dim
        self.entries = entries

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, [field.zero()] * (dim * dim))

    @classmethod
    def from_grid(cls, field, grid):
        return cls(field, len(grid), [x for row in grid for x in row])

    @classmethod
    def from_terms(cls, field, dim, terms):
        """terms: iterable of (i, j, coeff)."""
        ent = [field.zero()] * (dim * dim)
        for i, j, c in terms:
            ent[i * dim + j] = ent[i * dim + j] + field.coerce(c)
        return cls(field, dim, ent)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.dim + j]

    def __add__(self, other):
        if not isinstance(other, Tensor2) or other.dim != self.dim:
            return NotImplemented
        return Tensor2(self.field, self.dim, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Tensor2(self.field, self.dim, [-a for a in self.entries])

    def scale(self, c):
        return Tensor2(self.field, self.dim, [c * a for a in self.entries])

    def flip(self):
        d = self.dim
        return Tensor2(self.field, d, [self.entries[j * d + i] for i in range(d) for j in range(d)])

    def is_zero(self):
        return not any(self.entries)

    def is_antisymmetric(self):
        return self.flip() == -self

    def is_symmetric(self):
        return self.flip() == self

    def as_map(self) -> Matrix:
        """Read the grid as a map from the dual space: e_i* maps to sum_j t[i][j] e_j."""
        return Matrix(self.field, self.dim, self.dim, self.entries).transpose()

    def __eq__(self, other):
        return (isinstance(other, Tensor2) and self.dim == other.dim
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash((self.dim, self.entries))

    def __repr__(self):
        terms = [f"[{i},{j}]={self[i, j]}" for i in range(self.dim)
                 for j in range(self.dim) if self[i, j]]
        return "Tensor2(" + (", ".join(terms) or "0") + ")"


class Tensor3:
    """Element of V (x) V (x) V; entry (i, j, k) weights e_i (x) e_j (x) e_k."""

    __slots__ = ("field", "dim", "entries")

    def __init__(self, field, dim, entries):
        entries = tuple(field.coerce(x) for x in entries)
        if len(entries) != dim ** 3:
            raise ValueError("tensor entry count mismatch")
        self.field = field
        self.dim = dim
        self.entries = entries

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, [field.zero()] * dim ** 3)

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.entries[(i * self.dim + j) * self.dim + k]

    def __add__(self, other):
        if not isinstance(other, Tensor3) or other.dim != self.dim:
            return NotImplemented
        return Tensor3(self.field, self.dim, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Tensor3(self.field, self.dim, [-a for a in self.entries])

    def permute(self, sigma):
        """Entry (i0,i1,i2) of the result is entry (i_sigma[0], i_sigma[1], i_sigma[2])."""
        d = self.dim
        out = []
        for i0 in range(d):
            for i1 in range(d):
                for i2 in range(d):
                    idx = (i0, i1, i2)
                    src = (idx[sigma[0]], idx[sigma[1]], idx[sigma[2]])
                    out.append(self[src])
        return Tensor3(self.field, d, out)

    def is_zero(self):
        return not any(self.entries)

    def __eq__(self, other):
        return (isinstance(other, Tensor3) and self.dim == other.dim
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash((self.dim, self.entries))

    def __repr__(self):
        d = self.dim
        terms = [f"[{i},{j},{k}]={self[i, j, k]}" for i in range(d) for j in range(d)
                 for k in range(d) if self[i, j, k]]
        return "Tensor3(" + (", ".join(terms) or "0") + ")"


def flip(t: Tensor2) -> Tensor2:
    """Swap the two tensor legs: entry (i, j) moves to (j, i)."""
    return t.flip()


def leg_apply(t: Tensor2, m: Matrix, leg: int) -> Tensor2:
    """Apply a map to one tensor leg: leg 1 gives (m (x) id)t, leg 2 gives (id (x) m)t."""
    if m.rows != m.cols or m.rows != t.dim:
        raise ValueError("dimension mismatch in leg application")
    d = t.dim
    grid = Matrix(t.field, d, d, t.entries)
    if leg == 1:
        out = m @ grid
    elif leg == 2:
        out = grid @ m.transpose()
    else:
        raise ValueError("leg must be 1 or 2")
    return Tensor2(t.field, d, out.entries)


def leg_apply3(t: Tensor3, m: Matrix, leg: int) -> Tensor3:
    if m.rows != m.cols or m.rows != t.dim:
        raise ValueError("dimension mismatch in leg application")
    if leg not in (1, 2, 3):
        raise ValueError("leg must be 1, 2 or 3")
    d = t.dim
    z = t.field.zero()
    out = [z] * d ** 3
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x = t[i, j, k]
                if not x:
                    continue
                src = (i, j, k)[leg - 1]
                for target in range(d):
                    c = m[target, src]
                    if c:
                        pos = [i, j, k]
                        pos[leg - 1] = target
                        flat = (pos[0] * d + pos[1]) * d + pos[2]
                        out[flat] = out[flat] + c * x
    return Tensor3(t.field, d, out)
