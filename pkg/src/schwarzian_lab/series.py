"""
Truncated complex power series.

A :class:`ComplexSeries` holds the Taylor coefficients ``c_0 .. c_N`` of an
analytic function about the origin, truncated at degree ``N`` (its
``order``). Coefficients beyond ``N`` are unknown, not zero, so every binary
operation returns a series whose order is the minimum of the operand orders.

    >>> z = ComplexSeries.variable(8)
    >>> g = 1 / (1 - z)                   # geometric series
    >>> g.coeffs[:4].real
    array([1., 1., 1., 1.])
    >>> (g * (1 - z)).coeffs.real
    array([1., 0., 0., 0., 0., 0., 0., 0., 0.])

Storage is a dense read-only ``numpy.complex128`` array; instances are
immutable and safe to share between threads.
"""
from __future__ import annotations

from numbers import Number

import numpy as np

from .errors import (
    CompositionAtNonOrigin,
    DivisionByNonUnit,
    EvalRadiusExceeded,
    LogOfZeroConstant,
    ParseError,
)

DEFAULT_ORDER = 512
# beyond this radius truncated series are not trusted; use closed forms instead
R_MAX = 0.999

_ORIGIN_TOL = 1e-14


class ComplexSeries:
    __slots__ = ("_c",)
    # make numpy scalars defer to our operators instead of broadcasting
    __array_ufunc__ = None

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise ValueError("a series needs at least one coefficient")
        c.flags.writeable = False
        self._c = c

    # construction helpers

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def variable(cls, order=DEFAULT_ORDER):
        """The identity function ``z``."""
        c = np.zeros(order + 1, dtype=np.complex128)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def polynomial(cls, coeffs, order=DEFAULT_ORDER):
        """Zero-pad (or truncate) a coefficient list to the given order."""
        c = np.zeros(order + 1, dtype=np.complex128)
        src = np.asarray(coeffs, dtype=np.complex128)[: order + 1]
        c[: src.size] = src
        return cls(c)

    @classmethod
    def geometric(cls, ratio=1.0, order=DEFAULT_ORDER):
        """``1 / (1 - ratio*z)``."""
        return cls(np.power(complex(ratio), np.arange(order + 1)))

    @property
    def coeffs(self):
        return self._c

    @property
    def order(self):
        return self._c.size - 1

    def __len__(self):
        return self._c.size

    def __getitem__(self, n):
        return self._c[n]

    def __repr__(self):
        head = ", ".join(f"{v:.6g}" for v in self._c[:4])
        more = ", ..." if self._c.size > 4 else ""
        return f"ComplexSeries([{head}{more}], order={self.order})"

    def truncate(self, order):
        if order > self.order:
            raise ValueError("truncate cannot raise the order")
        return ComplexSeries(self._c[: order + 1])

    def allclose(self, other, atol=1e-12, rtol=0.0):
        n = min(self.order, other.order) + 1
        return bool(np.allclose(self._c[:n], other._c[:n], atol=atol, rtol=rtol))

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, ComplexSeries):
            return other
        if isinstance(other, (Number, np.number)):
            return ComplexSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return ComplexSeries(-self._c)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (Number, np.number)):
            return ComplexSeries(self._c * other)
        if isinstance(other, ComplexSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Number, np.number)):
            if other == 0:
                raise DivisionByNonUnit("division by the zero scalar")
            return ComplexSeries(self._c / other)
        if isinstance(other, ComplexSeries):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __pow__(self, k):
        if not isinstance(k, (int, np.integer)) or k < 0:
            return power(self, k)
        out = ComplexSeries.constant(1.0, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self):
        return derivative(self)

    def integrate(self):
        return integrate(self)

    def __call__(self, z, **kw):
        return eval_series(self, z, **kw)

    # text record

    def to_text(self):
        """Serialize as ``order N`` followed by one ``n re im`` line per coefficient."""
        lines = [f"order {self.order}"]
        for n, c in enumerate(self._c):
            lines.append(f"{n} {float(c.real)!r} {float(c.imag)!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln.strip() for ln in text.splitlines()]
        while lines and not lines[-1]:
            lines.pop()
        if not lines:
            raise ParseError("empty series record")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "order":
            raise ParseError(f"line 1: expected 'order N', got {lines[0]!r}")
        try:
            order = int(head[1])
        except ValueError:
            raise ParseError(f"line 1: bad order {head[1]!r}") from None
        if order < 0:
            raise ParseError("order must be nonnegative")
        c = np.zeros(order + 1, dtype=np.complex128)
        seen = set()
        for lineno, ln in enumerate(lines[1:], start=2):
            parts = ln.split()
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'n re im', got {ln!r}")
            try:
                n = int(parts[0])
                re, im = float(parts[1]), float(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: cannot parse {ln!r}") from None
            if not 0 <= n <= order:
                raise ParseError(f"line {lineno}: index {n} outside 0..{order}")
            if n in seen:
                raise ParseError(f"line {lineno}: duplicate index {n}")
            seen.add(n)
            c[n] = complex(re, im)
        return cls(c)


def _common(a, b):
    n = min(a.order, b.order) + 1
    return a.coeffs[:n], b.coeffs[:n]


def add(a, b):
    x, y = _common(a, b)
    return ComplexSeries(x + y)


def mul(a, b):
    """Cauchy product truncated to the smaller order."""
    x, y = _common(a, b)
    return ComplexSeries(np.convolve(x, y)[: x.size])


def div(a, b):
    """Series quotient ``a / b``; requires ``b_0 != 0``."""
    x, y = _common(a, b)
    if y[0] == 0:
        raise DivisionByNonUnit("divisor has zero constant term")
    n = x.size
    q = np.zeros(n, dtype=np.complex128)
    inv0 = 1.0 / y[0]
    q[0] = x[0] * inv0
    for k in range(1, n):
        # y[1:k+1] . q[k-1::-1] is the part of (q*y)_k already determined
        q[k] = (x[k] - np.dot(y[1 : k + 1], q[k - 1 :: -1])) * inv0
    return ComplexSeries(q)


def reciprocal(b):
    return div(ComplexSeries.constant(1.0, b.order), b)


def compose(outer, inner):
    """``outer(inner(z))``; the inner series must vanish at the origin."""
    if abs(inner.coeffs[0]) > _ORIGIN_TOL:
        raise CompositionAtNonOrigin(
            f"inner series has constant term {inner.coeffs[0]!r}"
        )
    n = min(outer.order, inner.order) + 1
    w = np.array(inner.coeffs[:n])
    w[0] = 0.0
    oc = outer.coeffs
    acc = np.zeros(n, dtype=np.complex128)
    # Horner; the k-th power of w starts at z^k so high outer terms past n drop out
    for k in range(n - 1, -1, -1):
        acc = np.convolve(acc, w)[:n]
        acc[0] += oc[k]
    return ComplexSeries(acc)


def derivative(s):
    c = s.coeffs
    if c.size == 1:
        return ComplexSeries([0.0])
    return ComplexSeries(c[1:] * np.arange(1, c.size))


def integrate(s, constant=0.0):
    c = s.coeffs
    out = np.empty(c.size + 1, dtype=np.complex128)
    out[0] = constant
    out[1:] = c / np.arange(1, c.size + 1)
    return ComplexSeries(out)


def exp_series(s):
    """``exp(s)`` via the recurrence ``k e_k = sum_j j s_j e_{k-j}``."""
    c = s.coeffs
    n = c.size
    e = np.zeros(n, dtype=np.complex128)
    e[0] = np.exp(c[0])
    jc = np.arange(n) * c
    for k in range(1, n):
        e[k] = np.dot(jc[1 : k + 1], e[k - 1 :: -1]) / k
    return ComplexSeries(e)


def log_series(s):
    """Principal-branch ``log(s)``; ``s_0`` must be nonzero."""
    c0 = s.coeffs[0]
    if c0 == 0:
        raise LogOfZeroConstant("log of a series with zero constant term")
    if s.order == 0:
        return ComplexSeries([np.log(c0)])
    return integrate(div(derivative(s), s.truncate(s.order - 1)), constant=np.log(c0))


def power(s, exponent):
    """``s**exponent`` as ``exp(exponent * log s)`` on the principal branch."""
    return exp_series(log_series(s) * complex(exponent))


def truncation_error(s, z):
    """Heuristic tail estimate ``|c_N| |z|^N / (1 - |z|)``."""
    r = np.abs(np.asarray(z))
    with np.errstate(divide="ignore"):
        return np.abs(s.coeffs[-1]) * r**s.order / (1.0 - r)


def eval_series(s, z, *, r_max=R_MAX, with_error=False):
    """Horner evaluation of the truncated polynomial at ``z`` (scalar or array).

    Raises :class:`EvalRadiusExceeded` if any ``|z| > r_max``. With
    ``with_error=True`` returns ``(value, tail_estimate)``.
    """
    zz = np.asarray(z, dtype=np.complex128)
    if zz.size and np.max(np.abs(zz)) > r_max * (1 + 1e-15):
        raise EvalRadiusExceeded(
            f"|z|={np.max(np.abs(zz)):.6g} exceeds evaluation cap {r_max}"
        )
    c = s.coeffs
    acc = np.full(zz.shape, c[-1], dtype=np.complex128)
    for ck in c[-2::-1]:
        acc = acc * zz + ck
    val = acc if zz.ndim else complex(acc)
    if with_error:
        err = truncation_error(s, zz)
        return val, (err if zz.ndim else float(err))
    return val


def binomial_series(exponent, order=DEFAULT_ORDER):
    """Coefficients of ``(1 - z)**(-exponent)`` by the rising-factorial recurrence.

    Independent of :func:`power`; used as a cross-check.
    """
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = 1.0
    for n in range(1, order + 1):
        c[n] = c[n - 1] * (exponent + n - 1) / n
    return ComplexSeries(c)


def safe_radius(s, tol=1e-10, r_max=R_MAX):
    """Largest radius (capped at ``r_max``) at which the tail heuristic stays below ``tol``."""
    cn = abs(s.coeffs[-1])
    if cn == 0:
        return r_max
    lo, hi = 0.0, r_max
    if truncation_error(s, hi) <= tol:
        return hi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if truncation_error(s, mid) <= tol:
            lo = mid
        else:
            hi = mid
    return lo


__all__ = [
    "ComplexSeries",
    "DEFAULT_ORDER",
    "R_MAX",
    "add",
    "mul",
    "div",
    "reciprocal",
    "compose",
    "derivative",
    "integrate",
    "exp_series",
    "log_series",
    "power",
    "eval_series",
    "truncation_error",
    "binomial_series",
    "safe_radius",
]
