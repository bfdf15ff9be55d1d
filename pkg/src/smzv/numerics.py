"""High-precision numerics: working-precision reals, Bernoulli numbers,
integer zeta values, repeated-block zeta families via Newton's identities,
and tail-extrapolated evaluation of truncated sums at large cutoffs.

Large-cutoff Schur values are never summed over fillings directly; they are
routed through reductions that are exact at every truncation (ribbon
decomposition, determinant expansion), so only ordinary one-dimensional
chain sums are evaluated in floating point.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2

from . import exact_engine
from .shapes import SmzvError, Tableau, is_ribbon


class NotAdmissible(SmzvError, ValueError):
    """A corner entry below 2 makes the untruncated series diverge."""


class NoReductionAvailable(SmzvError, ValueError):
    """The shape is neither a ribbon nor diagonal-constant, so no
    large-cutoff reduction applies."""


def _bits(dps: int) -> int:
    return int(dps * 3.3219281) + 16


class _ctx:
    """Temporarily switch the thread-local gmpy2 precision."""

    def __init__(self, dps):
        self.bits = _bits(dps)

    def __enter__(self):
        self.old = gmpy2.get_context()
        gmpy2.set_context(gmpy2.context(precision=self.bits))

    def __exit__(self, *a):
        gmpy2.set_context(self.old)


class HPReal:
    """A real number carried at an explicit working precision in decimal digits.

    Arithmetic runs at the smaller precision of the two operands, which is
    also the precision recorded on the result; exact operands (int, Fraction)
    adopt the other side's precision.
    """

    __slots__ = ("x", "dps")

    def __init__(self, value, dps: int):
        if dps < 1:
            raise ValueError("precision must be at least 1 digit")
        self.dps = int(dps)
        with _ctx(self.dps):
            if isinstance(value, Fraction):
                value = gmpy2.mpq(value.numerator, value.denominator)
            self.x = gmpy2.mpfr(value)

    @classmethod
    def _raw(cls, x, dps):
        obj = object.__new__(cls)
        obj.x = x
        obj.dps = dps
        return obj

    @classmethod
    def pi(cls, dps: int) -> "HPReal":
        return cls._raw(gmpy2.const_pi(_bits(dps)), dps)

    def _coerce(self, other):
        if isinstance(other, HPReal):
            return other
        if isinstance(other, (int, Fraction)):
            return HPReal(other, self.dps)
        if isinstance(other, PiPolynomial):
            return other.to_hp(self.dps)
        return None

    def _binop(self, other, fn):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        dps = min(self.dps, o.dps)
        with _ctx(dps):
            return HPReal._raw(fn(self.x, o.x), dps)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        with _ctx(self.dps):
            return HPReal._raw(self.x ** n, self.dps)

    def __neg__(self):
        return HPReal._raw(-self.x, self.dps)

    def __abs__(self):
        return HPReal._raw(abs(self.x), self.dps)

    def _cmp_val(self, other):
        o = self._coerce(other)
        return o.x if o is not None else other

    def __lt__(self, other):
        return self.x < self._cmp_val(other)

    def __le__(self, other):
        return self.x <= self._cmp_val(other)

    def __gt__(self, other):
        return self.x > self._cmp_val(other)

    def __ge__(self, other):
        return self.x >= self._cmp_val(other)

    def __eq__(self, other):
        if isinstance(other, (HPReal, int, Fraction)):
            return self.x == self._cmp_val(other)
        return NotImplemented

    def __float__(self):
        return float(self.x)

    def __repr__(self):
        return f"HPReal({self.str_digits(min(self.dps, 30))}, dps={self.dps})"

    def str_digits(self, digits: int | None = None) -> str:
        digits = digits or self.dps
        with _ctx(digits):
            return gmpy2.mpfr(self.x).__format__(f".{digits}g")


@dataclass(frozen=True)
class PiPolynomial:
    """An exact multiple of a power of pi: coeff * pi**exponent."""

    coeff: Fraction
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("pi exponent must be nonnegative")

    def __mul__(self, other):
        if isinstance(other, PiPolynomial):
            return PiPolynomial(self.coeff * other.coeff, self.exponent + other.exponent)
        if isinstance(other, (int, Fraction)):
            return PiPolynomial(self.coeff * other, self.exponent)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiPolynomial(Fraction(other))
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.exponent != other.exponent:
            raise ValueError(
                f"cannot add pi^{self.exponent} and pi^{other.exponent} exactly; "
                "evaluate to HPReal first")
        return PiPolynomial(self.coeff + other.coeff, self.exponent)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return other + (-1) * self

    def __neg__(self):
        return PiPolynomial(-self.coeff, self.exponent)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not exact here")
        return PiPolynomial(self.coeff ** n, self.exponent * n)

    def to_hp(self, dps: int) -> HPReal:
        return HPReal(self.coeff, dps) * HPReal.pi(dps) ** self.exponent

    def __repr__(self):
        if self.exponent == 0:
            return f"({self.coeff})"
        return f"({self.coeff})*pi^{self.exponent}"


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    if n % 2 == 1:
        return Fraction(-1, 2) if n == 1 else Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += math.comb(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


class ZetaCache:
    """Memo of integer zeta values keyed by (s, precision).

    Reads are lock-free; fills are serialized so a value is computed once.
    """

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, s: int, dps: int):
        key = (s, dps)
        val = self._data.get(key)
        if val is None:
            with self._lock:
                val = self._data.get(key)
                if val is None:
                    val = _zeta_int_uncached(s, dps)
                    self._data[key] = val
        return val


_zeta_cache = ZetaCache()


def zeta_even_exact(s: int) -> PiPolynomial:
    """zeta(s) for even s >= 2 as an exact rational multiple of pi**s."""
    if s < 2 or s % 2:
        raise ValueError(f"need even s >= 2, got {s}")
    coeff = Fraction((-1) ** (s // 2 + 1)) * bernoulli(s) * Fraction(2 ** (s - 1), math.factorial(s))
    return PiPolynomial(coeff, s)


def zeta_odd(s: int, dps: int, cutoff: int | None = None) -> HPReal:
    """zeta(s) for odd s >= 3 by Euler-Maclaurin summation.

    cutoff overrides the internally chosen summation cutoff; two runs with
    different cutoffs agreeing to the working precision is the standard
    self-check.
    """
    if s < 3 or s % 2 == 0:
        raise ValueError(f"need odd s >= 3, got {s}")
    n0 = cutoff if cutoff is not None else max(16, dps + 6)
    guard = dps + 10
    with _ctx(guard):
        total = gmpy2.mpfr(0)
        for m in range(1, n0 + 1):
            total += 1 / gmpy2.mpfr(m ** s)
        nf = gmpy2.mpfr(n0)
        total += nf ** (1 - s) / (s - 1)
        total -= nf ** (-s) / 2
        tol = gmpy2.mpfr(10) ** (-(dps + 8))
        poch = gmpy2.mpfr(s)          # s*(s+1)*...*(s+2k-2)
        npow = nf ** (-s - 1)
        k = 1
        while True:
            b = bernoulli(2 * k)
            term = gmpy2.mpfr(b.numerator) / b.denominator / math.factorial(2 * k) * poch * npow
            total += term
            if abs(term) < tol * abs(total):
                break
            k += 1
            if 2 * k > 6 * n0:
                raise ArithmeticError("Euler-Maclaurin corrections did not converge")
            poch *= (s + 2 * k - 3) * (s + 2 * k - 2)
            npow /= nf * nf
    with _ctx(dps):
        return HPReal._raw(gmpy2.mpfr(total), dps)


def _zeta_int_uncached(s: int, dps: int):
    if s < 2:
        raise ValueError(f"zeta here needs integer s >= 2, got {s}")
    if s % 2 == 0:
        return zeta_even_exact(s)
    return zeta_odd(s, dps)


def zeta_int(s: int, dps: int = 50):
    """zeta(s) for integer s >= 2: an exact PiPolynomial for even s, an
    HPReal for odd s."""
    return _zeta_cache.get(s, dps)


def repeated_zeta(s: int, n: int, dps: int = 50):
    """(zeta({s}^n), zeta_star({s}^n)) from Newton's identities.

    The two families are the elementary and complete homogeneous symmetric
    functions of {1/m^s}, built from the power sums zeta(sk).  Exact
    PiPolynomials for even s, HPReal otherwise.
    """
    if s < 2 or n < 0:
        raise ValueError(f"need s >= 2 and n >= 0, got s={s}, n={n}")
    es, hs = _newton_lists(s, n, dps if s % 2 else None)
    return es[n], hs[n]


@lru_cache(maxsize=None)
def _newton_lists(s: int, n: int, dps):
    if s % 2 == 0:
        one = PiPolynomial(Fraction(1))
        p = [None] + [zeta_even_exact(s * k) for k in range(1, n + 1)]
    else:
        one = Fraction(1)  # promoted on first multiply
        p = [None] + [zeta_int(s * k, dps) for k in range(1, n + 1)]
    es, hs = [one], [one]
    for m in range(1, n + 1):
        e = p[1] * es[m - 1] * Fraction(0)  # ring zero
        h = e
        sign = 1
        for k in range(1, m + 1):
            e = e + sign * (p[k] * es[m - k])
            h = h + p[k] * hs[m - k]
            sign = -sign
        es.append(Fraction(1, m) * e)
        hs.append(Fraction(1, m) * h)
    return es, hs


@dataclass
class TailEstimate:
    """An extrapolated limit with a heuristic (non-rigorous) error bound.

    The value extrapolates the leading 1/M tail term from runs at cutoffs
    M and 2M; the bound is the distance to the same extrapolation done one
    octave lower, so it shrinks as the cutoff grows.
    """
    value: HPReal
    error_bound: HPReal
    cutoff: int

    @property
    def cutoffs(self) -> tuple[int, int]:
        return (self.cutoff, 2 * self.cutoff)


def _chain_value_f(index: tuple[int, ...], M: int, strict: bool):
    """Truncated chain sum at the ambient gmpy2 precision (raw mpfr)."""
    r = len(index)
    s = [gmpy2.mpfr(1)] + [gmpy2.mpfr(0)] * r
    exps = sorted(set(index))
    rng = range(r, 0, -1) if strict else range(1, r + 1)
    for m in range(1, M):
        inv = 1 / gmpy2.mpfr(m)
        powers = {}
        q = inv
        e_prev = 1
        for e in exps:
            q = q * inv ** (e - e_prev) if e != e_prev else q
            powers[e] = q
            e_prev = e
        for i in rng:
            s[i] += s[i - 1] * powers[index[i - 1]]
    return s[r]


def _chain_prefixes_f(index: tuple[int, ...], M: int, strict: bool):
    """All prefix values of the chain sum in one pass (raw mpfr list)."""
    r = len(index)
    s = [gmpy2.mpfr(1)] + [gmpy2.mpfr(0)] * r
    rng = range(r, 0, -1) if strict else range(1, r + 1)
    for m in range(1, M):
        inv = 1 / gmpy2.mpfr(m)
        powers = {1: inv}
        for e in set(index):
            if e not in powers:
                powers[e] = inv ** e
        for i in rng:
            s[i] += s[i - 1] * powers[index[i - 1]]
    return s


def _leaf_value_f(kind: str, index, M: int, cache: dict):
    key = (kind, index, M)
    v = cache.get(key)
    if v is None:
        v = _chain_value_f(index, M, strict=(kind == "mzv"))
        cache[key] = v
    return v


def _richardson(z_half, z1, z2):
    # logarithmic tail factors leave a residual of the same size as the
    # octave shift, so the shift is doubled to stay a (heuristic) bound
    value = 2 * z2 - z1
    prev = 2 * z1 - z_half
    return value, 2 * abs(value - prev)


def mzv_numeric(index, M: int = 100_000, dps: int = 50) -> TailEstimate:
    """Numeric multiple zeta value with tail extrapolation.

    Runs the truncated sum at cutoffs M and 2M, extrapolates the 1/M term,
    and reports the shift against the (M/2, M) extrapolation as the bound.
    """
    index = tuple(index)
    if not index:
        raise exact_engine.EmptyIndex("multiple zeta index must be nonempty")
    if index[-1] < 2:
        raise NotAdmissible(f"index {index} has last entry < 2; series diverges")
    cache: dict = {}
    with _ctx(dps):
        zs = [_leaf_value_f("mzv", index, m, cache) for m in (M // 2, M, 2 * M)]
        value, bound = _richardson(*zs)
    return TailEstimate(HPReal._raw(value, dps), HPReal._raw(bound, dps), M)


def smzv_numeric(t: Tableau, M: int = 100_000, dps: int = 50) -> TailEstimate:
    """Numeric Schur multiple zeta value via exact-at-truncation reductions.

    Ribbons go through the harmonic-product decomposition; diagonal-constant
    tableaux through the determinant expansion.  Each route is evaluated at
    cutoffs M/2, M and 2M and extrapolated; the bound is heuristic.
    """
    if t.is_empty:
        one = HPReal(1, dps)
        return TailEstimate(one, HPReal(0, dps), M)
    if not t.admissible():
        raise NotAdmissible(f"{t!r} has a corner entry < 2; series diverges")
    cache: dict = {}
    cutoffs = (M // 2, M, 2 * M)
    with _ctx(dps):
        if is_ribbon(t.shape):
            expr = exact_engine.ribbon_decompose(t)
            zs = [expr.eval(lambda k, i, m=m: _leaf_value_f(k, i, m, cache))
                  for m in cutoffs]
        elif t.diagonal_constant():
            variant = exact_engine.ROWS if t.shape.height <= t.shape.width else exact_engine.COLS
            mat = exact_engine.jt_leaf_matrix(t, variant)
            zs = [_jt_det_f(mat, m, cache) for m in cutoffs]
        else:
            raise NoReductionAvailable(
                f"{t.shape!r} is neither a ribbon nor diagonal-constant")
        value, bound = _richardson(*zs)
    return TailEstimate(HPReal._raw(value, dps), HPReal._raw(bound, dps), M)


def _jt_det_f(mat, M: int, cache: dict):
    """Evaluate a leaf-descriptor matrix at cutoff M and take its determinant.

    Entries in one column share their index spine, so each column costs one
    chain-prefix pass regardless of the matrix size.
    """
    n = len(mat)
    cols = []
    for j in range(n):
        entries = [(mat[i][j]) for i in range(n)]
        spine = max((idx for kind, idx in entries if kind != "const"),
                    key=len, default=None)
        col = [None] * n
        if spine is not None:
            kind = next(k for k, idx in entries if k != "const")
            key = (kind, spine, M, "prefixes")
            pref = cache.get(key)
            if pref is None:
                pref = _chain_prefixes_f(spine, M, strict=(kind == "mzv"))
                cache[key] = pref
        for i, (kind, payload) in enumerate(entries):
            if kind == "const":
                col[i] = gmpy2.mpfr(int(payload))
            else:
                assert payload == spine[:len(payload)]
                col[i] = pref[len(payload)]
        cols.append(col)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    return _det_f(rows)


def _det_f(m):
    n = len(m)
    m = [row[:] for row in m]
    det = gmpy2.mpfr(1)
    for k in range(n):
        piv, pval = k, abs(m[k][k])
        for i in range(k + 1, n):
            if abs(m[i][k]) > pval:
                piv, pval = i, abs(m[i][k])
        if pval == 0:
            return gmpy2.mpfr(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                for j in range(k + 1, n):
                    m[i][j] -= f * m[k][j]
    return det


def det_float(matrix) -> HPReal:
    """Determinant of a square HPReal matrix by pivoted elimination."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise exact_engine.NonSquare(
                f"matrix is {n} rows but a row has {len(row)} entries")
    if n == 0:
        return HPReal(1, 50)
    dps = min(x.dps if isinstance(x, HPReal) else 50 for row in matrix for x in row)
    with _ctx(dps):
        raw = [[x.x if isinstance(x, HPReal) else gmpy2.mpfr(x) for x in row]
               for row in matrix]
        return HPReal._raw(_det_f(raw), dps)
