"""Skew-symmetric pencil analysis.

A pencil is a pair (A, B) of skew-symmetric matrices over Q, studied up to
simultaneous congruence.  This module provides the characteristic polynomial
det(t*B - A), the recursion operator P = B^-1 A, and the exact splitting of
the space into generalized eigenspaces Ker f(P)^n, one per irreducible factor
f of the characteristic polynomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DegenerateB, InputError, PreconditionError
from .exactalg import (
    QQ_FIELD,
    UNIVARIATE_T,
    MatrixF,
    RatFunc,
    _den_key,
    factor_rational,
    poly_from_str,
    poly_to_str,
    rat_str,
    rational,
)


class SkewPencil:
    """A pair of skew-symmetric n x n matrices over Q."""

    __slots__ = ("n", "A", "B")

    def __init__(self, A: MatrixF, B: MatrixF):
        if A.rows != A.cols or B.rows != B.cols or A.rows != B.rows:
            raise InputError("pencil matrices must be square and of equal size")
        for name, M in (("A", A), ("B", B)):
            for i in range(M.rows):
                for j in range(i, M.cols):
                    if M[i, j] != -M[j, i]:
                        raise InputError(
                            "matrix %s is not skew-symmetric at entry (%d, %d)" % (name, i, j))
        self.n = A.rows
        self.A = A
        self.B = B

    @classmethod
    def from_rows(cls, A_rows, B_rows):
        return cls(MatrixF.from_rows(QQ_FIELD, A_rows), MatrixF.from_rows(QQ_FIELD, B_rows))

    def congruent(self, C: MatrixF) -> "SkewPencil":
        """The congruence-transformed pencil (C^T A C, C^T B C)."""
        Ct = C.transpose()
        return SkewPencil(Ct * self.A * C, Ct * self.B * C)

    def swap(self) -> "SkewPencil":
        return SkewPencil(self.B, self.A)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "A": [[rat_str(x) for x in row] for row in self.A.data],
            "B": [[rat_str(x) for x in row] for row in self.B.data],
        }

    @classmethod
    def from_json(cls, obj) -> "SkewPencil":
        try:
            n = int(obj["n"])
            A_rows = obj["A"]
            B_rows = obj["B"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("pencil JSON must have fields n, A, B") from exc
        if len(A_rows) != n or len(B_rows) != n:
            raise InputError("pencil JSON: matrix size does not match n=%d" % n)
        A = MatrixF.from_rows(QQ_FIELD, [[rational(x) for x in row] for row in A_rows])
        B = MatrixF.from_rows(QQ_FIELD, [[rational(x) for x in row] for row in B_rows])
        return cls(A, B)

    @classmethod
    def load(cls, path) -> "SkewPencil":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __eq__(self, other):
        return isinstance(other, SkewPencil) and self.A == other.A and self.B == other.B

    __hash__ = None

    def __repr__(self):
        return "SkewPencil(n=%d)" % self.n


# ---------------------------------------------------------------------------
# eigenvalue classes

@dataclass(frozen=True)
class EigenvalueClass:
    """Finite rational eigenvalue, eigenvalue at infinity, or an irreducible
    factor of degree >= 2 (a conjugate pair when the discriminant is negative)."""

    kind: str                 # "finite" | "infinity" | "factor"
    value: object = None      # rational, for kind == "finite"
    factor: object = None     # monic irreducible PolyElement in t, degree >= 2

    @classmethod
    def finite(cls, value):
        return cls("finite", value=rational(value))

    @classmethod
    def infinity(cls):
        return cls("infinity")

    @classmethod
    def from_factor(cls, f):
        if f.degree() == 1:
            # monic t - lambda
            lam = -f.coeff(1) if f.ring.ngens else None
            coeffs = dict(f.terms())
            lam = -coeffs.get((0,), f.ring.domain.zero)
            return cls.finite(lam)
        return cls("factor", factor=f)

    @property
    def degree(self) -> int:
        return self.factor.degree() if self.kind == "factor" else 1

    def quadratic_data(self):
        """(alpha, beta_squared, discriminant) for a degree-2 factor t^2 - p t + q."""
        if self.kind != "factor" or self.factor.degree() != 2:
            raise PreconditionError("quadratic data requested for a non-quadratic class")
        coeffs = dict(self.factor.terms())
        zero = self.factor.ring.domain.zero
        p = -coeffs.get((1,), zero)
        q = coeffs.get((0,), zero)
        alpha = p / 2
        beta2 = q - alpha * alpha
        disc = p * p - 4 * q
        return alpha, beta2, disc

    def sort_key(self):
        if self.kind == "finite":
            from .exactalg import as_fraction
            return (0, as_fraction(self.value), ())
        if self.kind == "factor":
            return (1, 0, (self.factor.degree(),) + tuple(
                (m, str(c)) for m, c in sorted(self.factor.terms())))
        return (2, 0, ())

    def label(self) -> str:
        if self.kind == "finite":
            return rat_str(self.value)
        if self.kind == "infinity":
            return "inf"
        return poly_to_str(self.factor)

    @classmethod
    def from_label(cls, s: str):
        s = s.strip()
        if s == "inf":
            return cls.infinity()
        try:
            return cls.finite(rational(s))
        except InputError:
            pass
        f = poly_from_str(UNIVARIATE_T.ring, s)
        return cls.from_factor(f)

    def __repr__(self):
        return "EigenvalueClass(%s)" % self.label()


class Subspace:
    """A subspace of Q^n given by an independent-column basis matrix."""

    __slots__ = ("n", "basis", "_rref")

    def __init__(self, basis: MatrixF, check=True):
        self.n = basis.rows
        self.basis = basis
        self._rref = None
        if check and basis.cols and basis.rank() != basis.cols:
            raise InputError("subspace basis columns are not independent")

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, vec) -> bool:
        return self.basis.solve(vec) is not None

    def contains_columns(self, M: MatrixF) -> bool:
        return self.basis.solve_matrix(M) is not None

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.n)


# ---------------------------------------------------------------------------
# operations

def char_poly(p: SkewPencil):
    """det(t*B - A) as a polynomial in t, monic-normalized when B is invertible.

    Degenerate B is reported as-is (degree deficiency or the zero polynomial);
    the zero polynomial signals a singular pencil (Kronecker blocks present).
    """
    ff = UNIVARIATE_T
    t = ff.gen("t")
    tv = t.n
    ring = ff.ring
    entries = []
    for i in range(p.n):
        row = []
        for j in range(p.n):
            poly = tv * ring.ground_new(p.B[i, j]) - ring.ground_new(p.A[i, j])
            row.append(RatFunc(ff, poly, ()))
        entries.append(row)
    d = MatrixF(ff, entries).det() if p.n else ff.one
    if isinstance(d, RatFunc):
        if d.den != ring.one:
            raise PreconditionError("determinant of a polynomial matrix must be polynomial")
        dp = d.num
    else:
        dp = ring.ground_new(d)
    if dp and dp.degree() == p.n:
        lc = dp.LC
        if lc != ring.domain.one:
            dp = dp * (ring.domain.one / lc)
    return dp


def recursion_operator(p: SkewPencil) -> MatrixF:
    """P = B^-1 A; self-adjoint with respect to B, i.e. (B P)^T = -(B P)."""
    if p.B.det() == QQ_FIELD.zero:
        raise DegenerateB("the form B is degenerate")
    return p.B.inv() * p.A


def poly_at_matrix(poly, M: MatrixF) -> MatrixF:
    """Evaluate a univariate polynomial over Q at a square matrix (Horner)."""
    n = M.rows
    deg = poly.degree() if poly else 0
    coeffs = dict(poly.terms())
    zero = M.field.zero
    out = MatrixF.zeros(M.field, n, n)
    for d in range(deg, -1, -1):
        c = coeffs.get((d,))
        out = out * M if d != deg else out
        if c is not None:
            cc = M.field.coerce(c) if not isinstance(c, type(zero)) else c
            out = out + MatrixF.identity(M.field, n) * cc
    return out


def matrix_power(M: MatrixF, k: int) -> MatrixF:
    out = MatrixF.identity(M.field, M.rows)
    base = M
    while k:
        if k & 1:
            out = out * base
        base = base * base if k > 1 else base
        k >>= 1
    return out


def eigen_split(p: SkewPencil):
    """Split V into generalized eigenspaces Ker f(P)^n, one per irreducible
    factor f of the characteristic polynomial.

    Returns [(EigenvalueClass, Subspace, restricted SkewPencil)], in canonical
    order: finite eigenvalues ascending, then irreducible factors by graded-lex,
    then infinity (never produced here since B is required invertible).
    The components are pairwise B-orthogonal and B restricts non-degenerately.
    """
    P = recursion_operator(p)
    chi = char_poly(p)
    factors = factor_rational(chi)
    comps = []
    for f, _mult in factors:
        F = poly_at_matrix(f, P)
        K = matrix_power(F, p.n).nullspace()
        basis = MatrixF.from_columns(QQ_FIELD, K, nrows=p.n)
        W = Subspace(basis, check=False)
        Bt = basis.transpose()
        restricted = SkewPencil(Bt * p.A * basis, Bt * p.B * basis)
        comps.append((EigenvalueClass.from_factor(f), W, restricted))
    comps.sort(key=lambda c: c[0].sort_key())
    total = sum(c[1].dim for c in comps)
    if total != p.n:
        raise PreconditionError("eigenspace dimensions sum to %d, expected %d" % (total, p.n))
    return comps
