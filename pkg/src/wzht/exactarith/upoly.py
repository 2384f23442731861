"""Dense univariate polynomials over an exact field.

Coefficients are any objects with field arithmetic and truthiness for zero
(``RatFunc`` for Q(other variables), or QQ ground elements).  Used where a
computation runs in one variable with the remaining ones as parameters.
"""

from __future__ import annotations


class UPoly:
    __slots__ = ("c", "zero", "one")

    def __init__(self, coeffs, zero, one):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.c = c
        self.zero = zero
        self.one = one

    def _new(self, coeffs):
        return UPoly(coeffs, self.zero, self.one)

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else self.zero

    def __bool__(self):
        return bool(self.c)

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else self.zero

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        return self._new(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other):
        n = max(len(self.c), len(other.c))
        return self._new(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self):
        return self._new(-x for x in self.c)

    def __mul__(self, other):
        if not self.c or not other.c:
            return self._new([])
        out = [self.zero] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(other.c):
                if b:
                    out[i + j] = out[i + j] + a * b
        return self._new(out)

    def scale(self, a):
        return self._new(x * a for x in self.c)

    def deriv(self):
        return self._new(self.c[i] * i for i in range(1, len(self.c)))

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.c)
        dq = len(r) - len(other.c)
        if dq < 0:
            return self._new([]), self
        q = [self.zero] * (dq + 1)
        inv = self.one / other.lc
        for i in range(dq, -1, -1):
            a = r[i + len(other.c) - 1]
            if not a:
                continue
            a = a * inv
            q[i] = a
            for j, b in enumerate(other.c):
                if b:
                    r[i + j] = r[i + j] - a * b
        return self._new(q), self._new(r[: len(other.c) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exquo(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.c:
            return self
        return self.scale(self.one / self.lc)

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def ext_euclid(self, other):
        """(s, t, g) with s*self + t*other = g = gcd, g monic."""
        r0, r1 = self, other
        s0, s1 = self._new([self.one]), self._new([])
        t0, t1 = self._new([]), self._new([self.one])
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return s0, t0, r0
        inv = self.one / r0.lc
        return s0.scale(inv), t0.scale(inv), r0.scale(inv)

    def solve_bezout(self, b, c):
        """(s, t) with s*self + t*b = c and deg s < deg b; requires gcd | c."""
        s, t, g = self.ext_euclid(b)
        q, r = c.divmod(g)
        if r:
            raise ArithmeticError("c not in the ideal (a, b)")
        s = s * q
        t = t * q
        if b.deg >= 1 and s.deg >= b.deg:
            qq_, s = s.divmod(b)
            t = t + qq_ * self
        return s, t

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return len(self.c) == len(other.c) and all(a == b for a, b in zip(self.c, other.c))

    def __repr__(self):
        return f"UPoly({self.c!r})"
