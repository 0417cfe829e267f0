"""Classical and generalized Bernoulli numbers and polynomials, exactly.

The generalized family consists of the coefficients of
``(t/(e^t - 1))**a * e**(t*x)``: for each n the value ``B_n^(a)(x)`` is a
monic degree-n polynomial in x whose coefficients are polynomials in the
order parameter ``a``.  The order stays symbolic throughout; classical
values are the ``a = 1`` specialization.

Symbolic computation uses the power-of-series recurrence: writing
``f(t) = t/(e^t - 1) = sum f_k t^k`` and ``f**a = sum c_n t^n``,

    c_0 = 1,    n*c_n = sum_{k=1..n} ((a+1)*k - n) * f_k * c_{n-k},

which keeps every c_n inside QQ[a] with no series division.  The numbers
are then ``n! * c_n`` and the polynomials follow from the Appell binomial
expansion.  A fully independent route for integer orders (repeated
truncated series multiplication) is provided as an oracle.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .poly import Poly, alpha_shifted, alpha_substituted, binomial, poly_a

_classical_lock = threading.Lock()
_classical: list[Fraction] = [Fraction(1)]


def classical_bernoulli_numbers(n_max: int) -> list[Fraction]:
    """[B_0 .. B_n_max] via B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if len(_classical) <= n_max:
        with _classical_lock:
            while len(_classical) <= n_max:
                n = len(_classical)
                acc = sum(binomial(n + 1, k) * _classical[k] for k in range(n))
                _classical.append(Fraction(-1, n + 1) * acc)
    return list(_classical[: n_max + 1])


def bernoulli_numbers_binomial_solve(n_max: int) -> list[Fraction]:
    """Independent route: forward solve of sum_k C(n,k) B_k = B_n + [n == 1]."""
    out: list[Fraction] = []
    for m in range(n_max + 1):
        acc = sum(binomial(m + 1, k) * out[k] for k in range(m))
        delta = 1 if m == 0 else 0
        out.append(Fraction(delta - acc, m + 1))
    return out


def classical_bernoulli_poly(n: int) -> Poly:
    """B_n(x) over QQ, from the binomial expansion of classical numbers."""
    nums = classical_bernoulli_numbers(n)
    return Poly("x", tuple(binomial(n, j) * nums[n - j] for j in range(n + 1)))


class GenBernTable:
    """Grow-on-demand cache of symbolic generalized Bernoulli data.

    Entry n holds the number B_n^(a) (a polynomial in ``a``) and the
    polynomial B_n^(a)(x) (monic of degree n in ``x``).  One table serves
    every order because entries are symbolic.  Growth is serialized by a
    lock; grown entries are immutable, so readers need no coordination.
    """

    def __init__(self):
        self._lock = threading.Lock()
        one = poly_a(1)
        self._coeffs: list[Poly] = [one]
        self._numbers: list[Poly] = [one]
        self._polys: list[Poly] = [Poly("x", (one,))]
        self._offset_cache: dict[tuple[int, int], Poly] = {}

    def grow(self, n_max: int) -> None:
        if len(self._numbers) > n_max:
            return
        with self._lock:
            classical = classical_bernoulli_numbers(n_max)
            series = [b / math.factorial(k) for k, b in enumerate(classical)]
            while len(self._coeffs) <= n_max:
                n = len(self._coeffs)
                acc = poly_a()
                for k in range(1, n + 1):
                    if not series[k]:
                        continue
                    # (a+1)*k - n  ==  k*a + (k - n)
                    factor = poly_a(k - n, k)
                    acc = acc + factor * (self._coeffs[n - k] * series[k])
                c_n = acc * Fraction(1, n)
                self._coeffs.append(c_n)
                number = c_n * math.factorial(n)
                self._numbers.append(number)
                self._polys.append(
                    Poly("x", tuple(binomial(n, j) * self._numbers[n - j] for j in range(n + 1)))
                )

    def number(self, n: int) -> Poly:
        """B_n^(a) as a polynomial in a."""
        self.grow(n)
        return self._numbers[n]

    def poly(self, n: int) -> Poly:
        """B_n^(a)(x) as an element of QQ[a][x]."""
        self.grow(n)
        return self._polys[n]

    def numbers(self, n_max: int) -> list[Poly]:
        self.grow(n_max)
        return list(self._numbers[: n_max + 1])

    def number_at(self, n: int, alpha) -> Fraction:
        return self.number(n).eval(Fraction(alpha))

    def poly_at(self, n: int, alpha) -> Poly:
        """B_n^(alpha)(x) over QQ for a fixed rational order."""
        return alpha_substituted(self.poly(n), Fraction(alpha))

    def value_at(self, n: int, alpha, x) -> Fraction:
        """B_n^(alpha)(x) fully evaluated at rational order and argument."""
        return self.poly_at(n, alpha).eval(Fraction(x))

    def poly_shifted(self, n: int, c) -> Poly:
        """B_n^(a)(x + c) via the binomial addition formula."""
        c = Fraction(c)
        out = Poly("x")
        for k in range(n + 1):
            out = out + self.poly(k) * (binomial(n, k) * c ** (n - k))
        return out

    def poly_reflected(self, n: int, c) -> Poly:
        """B_n^(a)(a + c - x) represented inside QQ[a][x].

        The reflection rule B_n^(a)(a - u) = (-1)^n B_n^(a)(u) with
        u = x - c turns the a-dependent argument into the plain shift
        (-1)^n * B_n^(a)(x - c).
        """
        base = self.poly_shifted(n, -Fraction(c))
        return base if n % 2 == 0 else -base

    def offset_poly(self, n: int, offset: int) -> Poly:
        """B_n^(a + offset)(x), cached per (n, offset)."""
        if offset == 0:
            return self.poly(n)
        key = (n, offset)
        hit = self._offset_cache.get(key)
        if hit is None:
            hit = alpha_shifted(self.poly(n), offset)
            self._offset_cache[key] = hit
        return hit


DEFAULT_TABLE = GenBernTable()


def gen_bernoulli_numbers_symbolic(n_max: int, table: GenBernTable | None = None) -> list[Poly]:
    """[B_0^(a) .. B_n_max^(a)] as exact polynomials in a."""
    return (table or DEFAULT_TABLE).numbers(n_max)


def gen_bernoulli_poly(n: int, table: GenBernTable | None = None) -> Poly:
    """B_n^(a)(x): monic of degree n in x, coefficients in QQ[a]."""
    return (table or DEFAULT_TABLE).poly(n)


def gen_bern_poly_shifted(n: int, c, table: GenBernTable | None = None) -> Poly:
    """B_n^(a)(x + c) for rational c."""
    return (table or DEFAULT_TABLE).poly_shifted(n, c)


def gen_bern_poly_reflected(n: int, c, table: GenBernTable | None = None) -> Poly:
    """B_n^(a)(a + c - x) as (-1)^n B_n^(a)(x - c)."""
    return (table or DEFAULT_TABLE).poly_reflected(n, c)


class OmegaOperator:
    """Linear operator on QQ[a][x] sending x^n to B_n^(a + offset)(x).

    ``offset`` selects the symbolic order: offset 0 applies the operator
    at order a, offset -1 at order a - 1, and so on.  Coefficients of the
    input (rational or in QQ[a]) multiply through linearly.  The backing
    table grows automatically to cover the input degree.
    """

    def __init__(self, offset: int = 0, table: GenBernTable | None = None):
        self.offset = offset
        self.table = table or DEFAULT_TABLE

    def __call__(self, p) -> Poly:
        if not isinstance(p, Poly) or p.var == "a":
            return Poly("x", (p,))
        out = Poly("x")
        for k, c in enumerate(p.coeffs):
            if not c:
                continue
            out = out + self.table.offset_poly(k, self.offset) * c
        return out

    def __repr__(self) -> str:
        return f"OmegaOperator(offset={self.offset})"


def omega_apply(operator: OmegaOperator, p) -> Poly:
    """Functional form of :class:`OmegaOperator` application."""
    return operator(p)


def _series_mul(a: list[Fraction], b: list[Fraction], n_max: int) -> list[Fraction]:
    out = [Fraction(0)] * (n_max + 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(min(len(b), n_max + 1 - i)):
            if b[j]:
                out[i + j] += ca * b[j]
    return out


def integer_alpha_oracle(n_max: int, a: int) -> list[Fraction]:
    """[B_0^(a) .. B_n_max^(a)] for integer a >= 0, by a completely
    independent route: the truncated exponential generating series of the
    classical numbers raised to the a-th power by repeated multiplication.
    """
    if a < 0:
        raise ValueError("order must be >= 0")
    base = [b / math.factorial(k) for k, b in enumerate(classical_bernoulli_numbers(n_max))]
    acc = [Fraction(0)] * (n_max + 1)
    acc[0] = Fraction(1)
    for _ in range(a):
        acc = _series_mul(acc, base, n_max)
    return [acc[n] * math.factorial(n) for n in range(n_max + 1)]
