"""Exact arithmetic substrate.

Scalars are arbitrary-precision rationals (sympy's QQ domain, gmpy2-backed
when available).  Multivariate polynomials come from sympy's sparse
polynomial rings with graded-lex order; rational functions are our own
``RatFunc`` wrapper that keeps the denominator in *factored* form so that
arithmetic cancels by trial division instead of a multivariate gcd per
operation.  ``MatrixF`` is a small immutable matrix over any of the field
adapters defined here (rationals, Gaussian rationals, rational functions).

No floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ, Poly, Symbol, sympify
from sympy.polys.rings import ring as _sympy_ring

from .errors import DegreeTooLarge, InputError, PreconditionError

# ---------------------------------------------------------------------------
# rationals

#: One element of the rational field, e.g. ``rational("3/2")``.
Rational = type(QQ.zero)

_ZERO = QQ.zero
_ONE = QQ.one


def rational(x):
    """Coerce an int, string "p/q", Fraction, or QQ element to a QQ element."""
    if isinstance(x, float):
        raise InputError("floating point is not allowed in exact arithmetic: %r" % (x,))
    if isinstance(x, str):
        try:
            f = Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("bad rational literal %r" % (x,)) from exc
        return QQ(f.numerator, f.denominator)
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    try:
        return QQ.convert(x)
    except Exception as exc:
        raise InputError("cannot coerce %r to a rational" % (x,)) from exc


def rat_str(r) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(r)


def as_fraction(r) -> Fraction:
    return Fraction(int(QQ.numer(r)), int(QQ.denom(r)))


def sqrt_rational(r):
    """Exact square root of a rational, or None if r is not a perfect square."""
    from math import isqrt

    p, q = int(QQ.numer(r)), int(QQ.denom(r))
    if p < 0:
        return None
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp != p or sq * sq != q:
        return None
    return QQ(sp, sq)


class RationalField:
    """Field adapter for QQ used by MatrixF."""

    name = "QQ"

    def __init__(self):
        self.zero = _ZERO
        self.one = _ONE

    def coerce(self, x):
        if isinstance(x, GaussianRational):
            if x.im:
                raise InputError("nonreal Gaussian rational in a rational context")
            return x.re
        return rational(x)

    def __repr__(self):
        return "RationalField()"


QQ_FIELD = RationalField()


# ---------------------------------------------------------------------------
# Gaussian rationals Q(i), used to realize quadratic eigenvalue classes

class GaussianRational:
    """Element a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=_ZERO):
        self.re = re
        self.im = im

    @staticmethod
    def _wrap(x):
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(rational(x))

    def __add__(self, other):
        o = self._wrap(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k):
        if k < 0:
            return GaussianRational(_ONE) / self ** (-k)
        out = GaussianRational(_ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        try:
            o = self._wrap(other)
        except InputError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return "(%s%s%s*i)" % (self.re, "+" if self.im > 0 else "-", abs(self.im))


class GaussianRationalField:
    name = "QQ(i)"

    def __init__(self):
        self.zero = GaussianRational(_ZERO)
        self.one = GaussianRational(_ONE)
        self.i = GaussianRational(_ZERO, _ONE)

    def coerce(self, x):
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(rational(x))

    def __repr__(self):
        return "GaussianRationalField()"


QI_FIELD = GaussianRationalField()


# ---------------------------------------------------------------------------
# polynomial string grammar (see docs/polynomial-grammar.md)

def poly_to_str(p) -> str:
    """Render a polynomial in the `coef*var^k*...` grammar, graded-lex order."""
    ring = p.ring
    if not p:
        return "0"
    parts = []
    for monom, coef in p.terms():
        factors = []
        for name, e in zip(ring.symbols, monom):
            if e == 1:
                factors.append(str(name))
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        body = "*".join(factors)
        c = coef if coef > 0 else -coef
        piece = str(c)
        if body:
            piece = body if c == _ONE else "%s*%s" % (piece, body)
        if not parts:
            parts.append(piece if coef > 0 else "-" + piece)
        else:
            parts.append(("+ " if coef > 0 else "- ") + piece)
    return " ".join(parts)


def poly_from_str(ring, s: str):
    """Parse the grammar above (also accepts ** for powers) into `ring`."""
    allowed = {str(name): Symbol(str(name)) for name in ring.symbols}
    try:
        expr = sympify(s, locals=dict(allowed), convert_xor=True, rational=True)
    except Exception as exc:
        raise InputError("cannot parse polynomial %r" % (s,)) from exc
    bad = {str(f) for f in expr.free_symbols} - set(allowed)
    if bad:
        raise InputError("unknown variables %s in %r" % (sorted(bad), s))
    try:
        return ring.from_expr(expr)
    except Exception as exc:
        raise InputError("%r is not a polynomial over Q" % (s,)) from exc


# ---------------------------------------------------------------------------
# rational functions with factored denominators

def _reduce(num, dens):
    """Divide out den factors from num where possible; drop spent factors."""
    if not num:
        return num, ()
    out = []
    for f, e in dens:
        while e > 0:
            q, r = num.div(f)
            if r:
                break
            num, e = q, e - 1
        if e > 0:
            out.append((f, e))
    return num, tuple(out)


def _den_key(f):
    # deterministic ordering key for monic den factors
    return tuple((m, (int(QQ.numer(c)), int(QQ.denom(c)))) for m, c in f.terms())


def _merge_dens(d1, d2):
    m = {}
    for f, e in d1:
        m[f] = m.get(f, 0) + e
    for f, e in d2:
        m[f] = m.get(f, 0) + e
    return tuple(sorted(m.items(), key=lambda fe: _den_key(fe[0])))


class RatFunc:
    """A rational function num / prod(f_i^e_i) with monic den factors.

    Equality, zero tests, arithmetic, differentiation, and point evaluation
    are exact.  The reduced (num, den) pair with a monic denominator is
    available through :attr:`num` / :attr:`den`.
    """

    __slots__ = ("ff", "n", "d", "_dp", "_nd")

    def __init__(self, ff, n, d):
        self.ff = ff
        self.n = n
        self.d = d
        self._dp = None
        self._nd = None

    # -- canonical reduced form ------------------------------------------

    @property
    def den_poly(self):
        if self._dp is None:
            p = self.ff.ring.one
            for f, e in self.d:
                p = p * f ** e
            self._dp = p
        return self._dp

    def _reduced(self):
        if self._nd is None:
            n, D = self.n, self.den_poly
            if not n:
                self._nd = (n, self.ff.ring.one)
            else:
                g = n.gcd(D)
                n, D = n.quo(g), D.quo(g)
                lc = D.LC
                if lc != _ONE:
                    inv = _ONE / lc
                    n, D = n * inv, D * inv
                self._nd = (n, D)
        return self._nd

    @property
    def num(self):
        """Numerator of the fully reduced form (den monic, gcd(num, den) = 1)."""
        return self._reduced()[0]

    @property
    def den(self):
        """Monic denominator of the fully reduced form."""
        return self._reduced()[1]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.ff is not self.ff:
                raise PreconditionError("rational functions from different fields")
            return other
        return self.ff.coerce(other)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.d == o.d:
            n, d = _reduce(self.n + o.n, self.d)
            return RatFunc(self.ff, n, d)
        lcm = {}
        for f, e in self.d:
            lcm[f] = e
        for f, e in o.d:
            lcm[f] = max(lcm.get(f, 0), e)
        def scale(num, dens):
            have = dict(dens)
            for f, e in lcm.items():
                missing = e - have.get(f, 0)
                if missing:
                    num = num * f ** missing
            return num
        n = scale(self.n, self.d) + scale(o.n, o.d)
        d = tuple(sorted(lcm.items(), key=lambda fe: _den_key(fe[0])))
        n, d = _reduce(n, d)
        return RatFunc(self.ff, n, d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(self.ff, -self.n, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.n or not o.n:
            return self.ff.zero
        n = self.n * o.n
        if not self.d and not o.d:
            return RatFunc(self.ff, n, ())
        n, d = _reduce(n, _merge_dens(self.d, o.d))
        return RatFunc(self.ff, n, d)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.n:
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = self.n.LC
        nm = self.n * (_ONE / lc) if lc != _ONE else self.n
        num = self.den_poly * (_ONE / lc)
        if nm == self.ff.ring.one:
            return RatFunc(self.ff, num, ())
        n, d = _reduce(num, ((nm, 1),))
        return RatFunc(self.ff, n, d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, k):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = self.ff.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates ------------------------------------------------------

    def __bool__(self):
        return bool(self.n)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (InputError, PreconditionError):
            return NotImplemented
        if o is NotImplemented:
            return NotImplemented
        if self.d == o.d:
            return self.n == o.n
        return self.n * o.den_poly == o.n * self.den_poly

    __hash__ = None

    @property
    def is_polynomial(self):
        return not self.d

    # -- calculus --------------------------------------------------------

    def diff(self, gen):
        """Exact partial derivative with respect to a ring generator."""
        np = self.n.diff(gen)
        if not self.d:
            return RatFunc(self.ff, np, ())
        ring = self.ff.ring
        prod_all = ring.one
        for f, _ in self.d:
            prod_all = prod_all * f
        total = np * prod_all
        for i, (f, e) in enumerate(self.d):
            fp = f.diff(gen)
            if not fp:
                continue
            rest = ring.one
            for j, (g, _) in enumerate(self.d):
                if j != i:
                    rest = rest * g
            total = total - self.n * (QQ(e) * fp) * rest
        d = tuple((f, e + 1) for f, e in self.d)
        n, d = _reduce(total, d)
        return RatFunc(self.ff, n, d)

    def evaluate(self, point):
        """Evaluate at {name: rational}; raises PoleAtPoint on a zero denominator."""
        from .errors import PoleAtPoint

        pairs = [(g, point[str(s)]) for g, s in zip(self.ff.gens_raw, self.ff.ring.symbols)]
        den = _ONE
        for f, e in self.d:
            v = f.evaluate(pairs) if f.ring.ngens else f.LC
            if not v:
                raise PoleAtPoint("denominator %s vanishes at the point" % poly_to_str(f))
            den *= v ** e
        num = self.n.evaluate(pairs) if self.n else _ZERO
        return num / den

    def __repr__(self):
        if not self.d:
            return poly_to_str(self.n)
        return "(%s)/(%s)" % (poly_to_str(self.n), poly_to_str(self.den_poly))

    to_str = __repr__


class FunctionField:
    """Rational-function field QQ(names) with graded-lex order; one per name tuple."""

    _cache = {}

    def __new__(cls, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError("duplicate variable names: %r" % (names,))
        inst = cls._cache.get(names)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(names)
            cls._cache[names] = inst
        return inst

    def _init(self, names):
        self.names = names
        self.name = "QQ(%s)" % ",".join(names)
        out = _sympy_ring(list(names), QQ, order="grlex")
        self.ring = out[0]
        self.gens_raw = tuple(out[1:])
        self._by_name = dict(zip(names, self.gens_raw))
        self.zero = RatFunc(self, self.ring.zero, ())
        self.one = RatFunc(self, self.ring.one, ())

    def gen(self, name):
        return RatFunc(self, self._by_name[name], ())

    def gen_raw(self, name):
        return self._by_name[name]

    def from_poly(self, p):
        return RatFunc(self, p, ())

    def const(self, x):
        return RatFunc(self, self.ring.ground_new(rational(x)), ())

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.ff is not self:
                raise PreconditionError("rational function from a different field")
            return x
        if type(x) is type(self.ring.zero) and getattr(x, "ring", None) == self.ring:
            return RatFunc(self, x, ())
        if isinstance(x, str):
            return self.from_string(x)
        if isinstance(x, float):
            raise InputError("floating point is not allowed: %r" % (x,))
        return self.const(x)

    def frac(self, num, den):
        """Build num/den with full cancellation and a monic denominator."""
        num = num if not isinstance(num, (int, str)) else poly_from_str(self.ring, str(num))
        den = den if not isinstance(den, (int, str)) else poly_from_str(self.ring, str(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = num.gcd(den)
        num, den = num.quo(g), den.quo(g)
        lc = den.LC
        if lc != _ONE:
            inv = _ONE / lc
            num, den = num * inv, den * inv
        if den == self.ring.one:
            return RatFunc(self, num, ())
        return RatFunc(self, num, ((den, 1),))

    def from_string(self, s):
        """Parse "poly" or "poly / poly" in the documented grammar."""
        depth = 0
        split = None
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                # a coefficient slash like 1/2 is glued to digits on both sides
                left = s[:i].rstrip()
                right = s[i + 1:].lstrip()
                if left and right and (left[-1].isdigit() and right[0].isdigit()):
                    continue
                split = i
                break
        if split is None:
            return RatFunc(self, poly_from_str(self.ring, s), ())
        num = poly_from_str(self.ring, s[:split])
        den = poly_from_str(self.ring, s[split + 1:])
        return self.frac(num, den)

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------------------
# matrices over a field adapter

class MatrixF:
    """Immutable dense matrix over one of the field adapters.

    Entries must support +, -, *, / and truthiness (zero is falsy), which
    holds for rationals, Gaussian rationals, and RatFunc alike.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = tuple(tuple(row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise InputError("ragged matrix rows")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, [[field.coerce(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r, c):
        z = field.zero
        return cls(field, [[z] * c for _ in range(r)])

    @classmethod
    def from_columns(cls, field, cols, nrows=None):
        if not cols:
            return cls(field, [[] for _ in range(nrows or 0)])
        n = len(cols[0])
        return cls(field, [[col[i] for col in cols] for i in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, row_idx, col_idx):
        return MatrixF(self.field, [[self.data[i][j] for j in col_idx] for i in row_idx])

    def map(self, fn):
        return MatrixF(self.field, [[fn(x) for x in row] for row in self.data])

    # -- algebra -----------------------------------------------------------

    def __add__(self, other):
        return MatrixF(self.field, [[a + b for a, b in zip(r1, r2)]
                                    for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        return MatrixF(self.field, [[a - b for a, b in zip(r1, r2)]
                                    for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return MatrixF(self.field, [[-a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, MatrixF):
            if self.cols != other.rows:
                raise PreconditionError("matrix shape mismatch: %dx%d * %dx%d"
                                        % (self.rows, self.cols, other.rows, other.cols))
            ot = list(zip(*other.data))
            z = self.field.zero
            out = []
            for row in self.data:
                orow = []
                for colv in ot:
                    acc = z
                    for a, b in zip(row, colv):
                        if a and b:
                            acc = acc + a * b
                    orow.append(acc)
                out.append(orow)
            return MatrixF(self.field, out)
        c = self.field.coerce(other)
        return self.map(lambda x: x * c)

    def __rmul__(self, other):
        c = self.field.coerce(other)
        return self.map(lambda x: c * x)

    def transpose(self):
        return MatrixF(self.field, list(zip(*self.data))) if self.rows else self

    @property
    def T(self):
        return self.transpose()

    def hstack(self, other):
        return MatrixF(self.field, [list(r1) + list(r2) for r1, r2 in zip(self.data, other.data)])

    def apply(self, vec):
        """Matrix times a plain list vector."""
        z = self.field.zero
        out = []
        for row in self.data:
            acc = z
            for a, b in zip(row, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, MatrixF):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and all(
            a == b for r1, r2 in zip(self.data, other.data) for a, b in zip(r1, r2))

    __hash__ = None

    @property
    def is_zero_matrix(self):
        return not any(any(row) for row in self.data)

    def is_skew(self):
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i, self.cols):
                if self.data[i][j] != -self.data[j][i]:
                    return False
        return True

    # -- elimination kernels -------------------------------------------------

    def _echelon(self, keep_transform=False):
        """Row echelon form; returns (rows, pivots, transform rows or None)."""
        m = [list(r) for r in self.data]
        t = [[self.field.one if i == j else self.field.zero for j in range(self.rows)]
             for i in range(self.rows)] if keep_transform else None
        pivots = []
        prow = 0
        for col in range(self.cols):
            sel = None
            for i in range(prow, self.rows):
                if m[i][col]:
                    sel = i
                    break
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            if t is not None:
                t[prow], t[sel] = t[sel], t[prow]
            inv = self.field.one / m[prow][col]
            m[prow] = [x * inv for x in m[prow]]
            if t is not None:
                t[prow] = [x * inv for x in t[prow]]
            for i in range(self.rows):
                if i != prow and m[i][col]:
                    c = m[i][col]
                    m[i] = [a - c * b for a, b in zip(m[i], m[prow])]
                    if t is not None:
                        t[i] = [a - c * b for a, b in zip(t[i], t[prow])]
            pivots.append(col)
            prow += 1
            if prow == self.rows:
                break
        return m, pivots, t

    def rref(self):
        m, pivots, _ = self._echelon()
        return MatrixF(self.field, m) if m else self, tuple(pivots)

    def rank(self):
        _, pivots, _ = self._echelon()
        return len(pivots)

    def nullspace(self):
        """Deterministic basis of the right null space, as column vectors."""
        m, pivots, _ = self._echelon()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        z, o = self.field.zero, self.field.one
        for fj in free:
            v = [z] * self.cols
            v[fj] = o
            for prow, pcol in enumerate(pivots):
                v[pcol] = -m[prow][fj]
            basis.append(v)
        return basis

    def solve(self, b):
        """One exact solution of self * x = b, or None if inconsistent."""
        if isinstance(b, MatrixF):
            b = b.col(0)
        aug = MatrixF(self.field, [list(row) + [bv] for row, bv in zip(self.data, b)])
        m, pivots, _ = aug._echelon()
        if self.cols in pivots:
            return None
        x = [self.field.zero] * self.cols
        for prow, pcol in enumerate(pivots):
            x[pcol] = m[prow][self.cols]
        return x

    def solve_matrix(self, B):
        """Solve self * X = B for all columns at once; None if any inconsistent."""
        aug = self.hstack(B)
        m, pivots, _ = aug._echelon()
        pivots = [p for p in pivots if p < self.cols]
        # consistency: no pivot may fall in the appended block
        for i in range(len(pivots), self.rows):
            if any(m[i][self.cols:]):
                return None
        cols = []
        for k in range(B.cols):
            x = [self.field.zero] * self.cols
            for prow, pcol in enumerate(pivots):
                x[pcol] = m[prow][self.cols + k]
            cols.append(x)
        return MatrixF.from_columns(self.field, cols)

    def inv(self):
        if self.rows != self.cols:
            raise PreconditionError("inverse of a non-square matrix")
        m, pivots, t = self._echelon(keep_transform=True)
        if len(pivots) != self.rows:
            raise PreconditionError("matrix is singular")
        return MatrixF(self.field, t)

    def det(self):
        if self.rows != self.cols:
            raise PreconditionError("determinant of a non-square matrix")
        m = [list(r) for r in self.data]
        n = self.rows
        det = self.field.one
        for col in range(n):
            sel = None
            for i in range(col, n):
                if m[i][col]:
                    sel = i
                    break
            if sel is None:
                return self.field.zero
            if sel != col:
                m[col], m[sel] = m[sel], m[col]
                det = -det
            piv = m[col][col]
            det = det * piv
            inv = self.field.one / piv
            for i in range(col + 1, n):
                if m[i][col]:
                    c = m[i][col] * inv
                    m[i] = [a - c * b for a, b in zip(m[i], m[col])]
        return det

    def __repr__(self):
        return "MatrixF(%dx%d over %s)" % (self.rows, self.cols, self.field.name)

    def pretty(self):
        cells = [[str(x) for x in row] for row in self.data]
        w = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in row) + "]" for row in cells)


# ---------------------------------------------------------------------------
# module-level operations used throughout

def mat_rank(M: MatrixF) -> int:
    """Exact rank via Gaussian elimination over the entry field."""
    return M.rank()


def solve_linear(M: MatrixF, b):
    """One exact solution of M x = b, or None when the system is inconsistent."""
    return M.solve(b)


def factor_rational(p):
    """Factor a univariate polynomial over Q into monic irreducibles.

    Returns [(factor, multiplicity), ...] sorted by degree then terms; the
    product of factors^multiplicities times the leading coefficient rebuilds
    the input exactly.  Degrees above 32 are refused.
    """
    ring = p.ring
    if ring.ngens != 1:
        raise PreconditionError("factor_rational expects a univariate polynomial")
    if not p:
        raise PreconditionError("factor_rational expects a nonzero polynomial")
    deg = p.degree()
    if deg > 32:
        raise DegreeTooLarge("degree %d exceeds the supported bound 32" % deg)
    if deg == 0:
        return []
    x = Symbol(str(ring.symbols[0]))
    sp = Poly(p.as_expr(), x, domain="QQ")
    _, factors = sp.factor_list()
    out = []
    for f, mult in factors:
        fr = ring.from_expr(f.as_expr())
        lc = fr.LC
        if lc != _ONE:
            fr = fr * (_ONE / lc)
        out.append((fr, int(mult)))
    out.sort(key=lambda fm: (fm[0].degree(), _den_key(fm[0])))
    # reconstruction check is cheap and guards against conversion slips
    rebuilt = ring.ground_new(p.LC)
    for f, m in out:
        rebuilt = rebuilt * f ** m
    if rebuilt != p:
        raise PreconditionError("factorization reconstruction failed")
    return out


UNIVARIATE_T = FunctionField(("t",))


def univariate(name="t"):
    """The shared univariate polynomial ring QQ[name]."""
    return FunctionField((name,)).ring
