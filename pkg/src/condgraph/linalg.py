"""Exact linear algebra over the integers and rationals.

Everything that decides conduction is computed here without floating point:
determinants, ranks and nullities use fraction-free (Bareiss) elimination over
Python ints, kernel bases and inverses use `fractions.Fraction`, and integer
characteristic polynomials plus adjugates come from the Faddeev-LeVerrier
recurrence, whose divisions are exact for integer matrices.

Floating point is quarantined to :func:`float_spectrum`, which exists only for
spectrum-shaped cross-checks (documented tolerance 1e-9 for the eigensolver,
1e-6 against exact characteristic polynomial roots).

Matrices are plain lists of rows; rows are lists of ints (or Fractions where
stated).  That matches the scale of the problem: dense, symmetric, order <= 64.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np


class SingularMatrixError(ValueError):
    """Inversion was requested for a singular matrix; carries its nullity."""

    def __init__(self, nullity: int):
        super().__init__(f"matrix is singular (nullity {nullity})")
        self.nullity = nullity


# ---------------------------------------------------------------------------
# fraction-free elimination
# ---------------------------------------------------------------------------

def det(a) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Intermediate values are minors of the input, so they stay modest for the
    +-1 matrices seen here; all divisions are exact.
    """
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for c in range(n):
        p = None
        for r in range(c, n):
            if m[r][c]:
                p = r
                break
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        pivot = m[c][c]
        for r in range(c + 1, n):
            mrc = m[r][c]
            row_r = m[r]
            row_c = m[c]
            for j in range(c + 1, n):
                row_r[j] = (pivot * row_r[j] - mrc * row_c[j]) // prev
            row_r[c] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def rank(a) -> int:
    """Rank of an integer matrix, fraction-free with column skipping."""
    if not a:
        return 0
    m = [list(row) for row in a]
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (pivot * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
    return r


def nullity(a) -> int:
    """Dimension of the kernel of a square integer matrix (exact)."""
    n = len(a)
    return n - rank(a)


def kernel_basis(a) -> list[list[int]]:
    """Exact kernel basis of a square integer matrix.

    Fraction-free row echelon first; rationals only enter the short
    back-substitution per basis vector.  Returned vectors are primitive
    integer vectors (content 1, first nonzero entry positive); the list is
    empty when the matrix is nonsingular.
    """
    n = len(a)
    m = [list(row) for row in a]
    pivots = []  # (row, col)
    prev = 1
    r = 0
    for c in range(n):
        if r == n:
            break
        p = None
        for i in range(r, n):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, n):
                row_i[j] = (pivot * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for row, col in reversed(pivots):
            if col > free:
                continue  # those pivot variables vanish in this vector
            acc = Fraction(m[row][free])
            for _, c2 in pivots:
                if col < c2 <= free:
                    acc += m[row][c2] * vec[c2]
            vec[col] = -acc / m[row][col]
        basis.append(_primitive(vec))
    return basis


def _primitive(vec: list[Fraction]) -> list[int]:
    from math import gcd, lcm

    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


def inverse(a) -> list[list[Fraction]]:
    """Exact inverse of a square integer (or rational) matrix.

    Raises :class:`SingularMatrixError` carrying the nullity when singular.
    """
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        p = None
        for r in range(c, n):
            if m[r][c]:
                p = r
                break
        if p is None:
            raise SingularMatrixError(nullity(a))
        if p != c:
            m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


# ---------------------------------------------------------------------------
# integer characteristic polynomial and adjugate (Faddeev-LeVerrier)
# ---------------------------------------------------------------------------

def char_poly_and_adjugate(a) -> tuple["IntPolynomial", list[list[int]]]:
    """det(E*I - A) as an integer polynomial, plus adj(A), in one pass.

    The recurrence M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k has
    exact integer divisions for integer input; the final auxiliary matrix is
    (-1)^(n-1) adj(A).  The left factor never changes, so for the sparse 0/1
    adjacency matrices that dominate here each product row is a plain sum of
    neighbour rows.
    """
    n = len(a)
    if n == 0:
        return IntPolynomial([1]), []
    nz = [[(j, x) for j, x in enumerate(row) if x] for row in a]
    plain = all(w == 1 for row in nz for _, w in row)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[int(i == j) for j in range(n)] for i in range(n)]  # M_1 = I
    am = None
    for k in range(1, n + 1):
        am = []
        for row_nz in nz:
            acc = None
            if plain:
                for j, _ in row_nz:
                    src = m[j]
                    acc = list(src) if acc is None \
                        else [x + y for x, y in zip(acc, src)]
            else:
                for j, w in row_nz:
                    src = m[j]
                    term = src if w == 1 else [w * y for y in src]
                    acc = list(term) if acc is None \
                        else [x + y for x, y in zip(acc, term)]
            am.append([0] * n if acc is None else acc)
        tr = sum(am[i][i] for i in range(n))
        q, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = q
        if k < n:
            m = am
            for i in range(n):
                m[i][i] += q
    # m still holds the n-th auxiliary matrix; the last product is discarded
    adj = [row[:] for row in m] if (n - 1) % 2 == 0 \
        else [[-x for x in row] for row in m]
    return IntPolynomial(coeffs), adj


def char_poly(a) -> "IntPolynomial":
    return char_poly_and_adjugate(a)[0]


def adjugate(a) -> list[list[int]]:
    """Transpose of the cofactor matrix; satisfies A adj(A) = det(A) I."""
    return char_poly_and_adjugate(a)[1]


def _mat_mul_int(a, b):
    n = len(a)
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * x for x in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by E^k (k >= 0) or divide exactly by E^-k (k < 0)."""
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError("not divisible by that power of E")
        return IntPolynomial(self.coeffs[-k:])

    def trailing_zero_count(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no zero-root multiplicity")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def sqrt(self) -> "IntPolynomial | None":
        """Exact integer-polynomial square root, or None if not a square.

        The root is normalised to a positive lowest nonzero coefficient.
        """
        if self.is_zero():
            return IntPolynomial([])
        t = self.trailing_zero_count()
        if t % 2:
            return None
        q = list(self.coeffs[t:])
        if len(q) % 2 == 0:  # even number of coeffs -> odd degree
            return None
        if q[0] < 0:
            return None
        r0 = isqrt(q[0])
        if r0 * r0 != q[0]:
            return None
        d = (len(q) - 1) // 2
        r = [0] * (d + 1)
        r[0] = r0
        for k in range(1, d + 1):
            acc = q[k] - sum(r[i] * r[k - i] for i in range(1, k))
            num, rem = divmod(acc, 2 * r0)
            if rem:
                return None
            r[k] = num
        root = IntPolynomial(r)
        if root * root != IntPolynomial(q):
            return None
        return root.shift(t // 2)

    def __repr__(self):
        if self.is_zero():
            return "IntPolynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "E" if mag == 1 else f"{mag}*E"
            else:
                body = f"E^{i}" if mag == 1 else f"{mag}*E^{i}"
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        s = s[2:] if s.startswith("+ ") else "-" + s[2:]
        return f"IntPolynomial({s})"


def zero_root_multiplicity(p: IntPolynomial) -> int:
    """Multiplicity of the root 0: index of the lowest nonzero coefficient."""
    return p.trailing_zero_count()


# ---------------------------------------------------------------------------
# floating spectrum (cross-checks only)
# ---------------------------------------------------------------------------

def float_spectrum(a) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending, via LAPACK."""
    if not a:
        return []
    w = np.linalg.eigvalsh(np.array(a, dtype=float))
    return [float(x) for x in w[::-1]]
