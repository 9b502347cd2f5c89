"""Exact arithmetic in the rational-function field Q(r, s).

Every scalar in this package is an element of Q(r, s), stored as a reduced
fraction of bivariate polynomials with nonnegative integer exponents and
arbitrary-precision rational coefficients.  Negative powers of the two
deformation parameters (r^-3, s^-3, ...) therefore live in the denominator.
There is no floating point anywhere; equality of scalars is structural
equality of canonical forms, which makes every identity check in the rest
of the package exact and decidable.

Canonical form of a fraction:

* gcd(numerator, denominator) = 1, where the gcd is computed by a
  primitive-part subresultant remainder sequence in r over Q[s];
* the denominator's leading coefficient (lexicographic order, r before s)
  is 1;
* the zero polynomial is the empty term mapping.

Working in the formal field Q(r, s) silently enforces the standing
multiplicative-independence hypothesis on the parameters: a monomial
r^m s^n equals 1 only for m = n = 0.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["BiPoly", "RatFunc", "q_int", "q_factorial", "RF_ZERO", "RF_ONE", "RF_R", "RF_S"]

_F0 = Fraction(0)
_F1 = Fraction(1)

_GCD_CACHE = {}


# ---------------------------------------------------------------------------
# univariate helpers over Q[s]; a polynomial is a dict {exponent: Fraction}
# ---------------------------------------------------------------------------

def _u_trim(u):
    return {e: c for e, c in u.items() if c}


def _u_add(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, _F0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _u_scale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}

def _u_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e, _F0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _u_deg(a):
    return max(a) if a else -1


def _u_divmod(a, b):
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    a = dict(a)
    q = {}
    db = _u_deg(b)
    lb = b[db]
    while a and _u_deg(a) >= db:
        da = _u_deg(a)
        c = a[da] / lb
        q[da - db] = c
        for e, v in b.items():
            ee = da - db + e
            w = a.get(ee, _F0) - c * v
            if w:
                a[ee] = w
            else:
                a.pop(ee, None)
    return q, a


def _u_gcd(a, b):
    """Monic gcd in Q[s]."""
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if not a:
        return {}
    lc = a[_u_deg(a)]
    return {e: c / lc for e, c in a.items()}


def _u_divexact(a, b):
    q, r = _u_divmod(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------

class BiPoly:
    """A polynomial in r and s over Q, as a sparse map (m, n) -> coefficient.

    Exponents are nonnegative; no stored coefficient is zero; the zero
    polynomial is the empty mapping.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (m, n), c in terms.items():
                if m < 0 or n < 0:
                    raise ValueError("BiPoly exponents must be nonnegative")
                c = Fraction(c)
                if c:
                    clean[(m, n)] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return BiPoly()

    @staticmethod
    def const(c):
        c = Fraction(c)
        return BiPoly({(0, 0): c}) if c else BiPoly()

    @staticmethod
    def mono(c, m, n):
        c = Fraction(c)
        return BiPoly({(m, n): c}) if c else BiPoly()

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): _F1}

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or self.terms.keys() == {(0, 0)}

    # -- structure ---------------------------------------------------------

    def leading(self):
        """Leading (exponent, coefficient) in lex order with r before s."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms)
        return key, self.terms[key]

    def min_exponents(self):
        ms = min(m for m, _ in self.terms)
        ns = min(n for _, n in self.terms)
        return ms, ns

    def shift(self, dm, dn):
        """Multiply by r^dm s^dn (negative shifts must divide exactly)."""
        if self.is_zero():
            return self
        return BiPoly({(m + dm, n + dn): c for (m, n), c in self.terms.items()})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, _F0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        p = BiPoly.__new__(BiPoly)
        p.terms = out
        p._hash = None
        return p

    def __neg__(self):
        p = BiPoly.__new__(BiPoly)
        p.terms = {k: -c for k, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return BiPoly()
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (ma, na), ca in a.items():
            for (mb, nb), cb in b.items():
                k = (ma + mb, na + nb)
                v = out.get(k, _F0) + ca * cb
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        p = BiPoly.__new__(BiPoly)
        p.terms = out
        p._hash = None
        return p

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return BiPoly()
        p = BiPoly.__new__(BiPoly)
        p.terms = {k: v * c for k, v in self.terms.items()}
        p._hash = None
        return p

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a BiPoly")
        out = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- division and gcd ----------------------------------------------------

    def divexact(self, other):
        """Exact multivariate division; raises if the division is inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if other.is_monomial():
            (mb, nb), cb = other.leading()
            out = {}
            for (m, n), c in self.terms.items():
                if m < mb or n < nb:
                    raise ArithmeticError("inexact division by monomial")
                out[(m - mb, n - nb)] = c / cb
            return BiPoly(out)
        rem = dict(self.terms)
        (lb, cb) = max(other.terms), None
        cb = other.terms[lb]
        quo = {}
        while rem:
            la = max(rem)
            dm, dn = la[0] - lb[0], la[1] - lb[1]
            if dm < 0 or dn < 0:
                raise ArithmeticError("inexact bivariate division")
            c = rem[la] / cb
            quo[(dm, dn)] = c
            for (m, n), v in other.terms.items():
                k = (m + dm, n + dn)
                w = rem.get(k, _F0) - c * v
                if w:
                    rem[k] = w
                else:
                    rem.pop(k, None)
        return BiPoly(quo)

    def _r_coeffs(self):
        """View as a univariate polynomial in r over Q[s]: {m: {n: c}}."""
        out = {}
        for (m, n), c in self.terms.items():
            out.setdefault(m, {})[n] = c
        return out

    @staticmethod
    def _from_r_coeffs(rc):
        terms = {}
        for m, u in rc.items():
            for n, c in u.items():
                if c:
                    terms[(m, n)] = c
        return BiPoly(terms)

    @staticmethod
    def gcd(a, b):
        """Monic gcd, via a primitive remainder sequence in r over Q[s]."""
        if a.is_zero():
            return b._monic() if not b.is_zero() else b
        if b.is_zero():
            return a._monic()
        # pull out the common monomial factor first
        ma, na = a.min_exponents()
        mb, nb = b.min_exponents()
        gm, gn = min(ma, mb), min(na, nb)
        a = a.shift(-ma, -na)
        b = b.shift(-mb, -nb)
        if a.is_constant() or b.is_constant():
            return BiPoly.mono(1, gm, gn)
        key = (a, b) if hash(a) <= hash(b) else (b, a)
        hit = _GCD_CACHE.get(key)
        if hit is not None:
            return hit.shift(gm, gn)
        core = BiPoly._gcd_core(a, b)
        if len(_GCD_CACHE) > 200000:
            _GCD_CACHE.clear()
        _GCD_CACHE[key] = core
        return core.shift(gm, gn)

    @staticmethod
    def _gcd_core(a, b):
        ra, rb = a._r_coeffs(), b._r_coeffs()
        conta = {}
        for u in ra.values():
            conta = _u_gcd(conta, u)
        contb = {}
        for u in rb.values():
            contb = _u_gcd(contb, u)
        contg = _u_gcd(conta, contb)
        prima = {m: _u_divexact(u, conta) for m, u in ra.items()}
        primb = {m: _u_divexact(u, contb) for m, u in rb.items()}
        prim = BiPoly._prim_prs(prima, primb)
        g = BiPoly._from_r_coeffs({0: contg}) * BiPoly._from_r_coeffs(prim)
        return g._monic()

    @staticmethod
    def _prim_prs(f, g):
        """Primitive PRS gcd of two r-primitive polynomials over Q[s]."""
        if max(f) < max(g):
            f, g = g, f
        while True:
            rem = BiPoly._pseudo_rem(f, g)
            if not rem:
                return BiPoly._primitive_r(g)
            if max(rem) == 0:
                return {0: {0: _F1}}
            f, g = g, BiPoly._primitive_r(rem)

    @staticmethod
    def _primitive_r(f):
        cont = {}
        for u in f.values():
            cont = _u_gcd(cont, u)
        return {m: _u_divexact(u, cont) for m, u in f.items()}

    @staticmethod
    def _pseudo_rem(f, g):
        """Pseudo-remainder of f by g with respect to r, over Q[s]."""
        df, dg = max(f), max(g)
        lg = g[dg]
        rem = {m: dict(u) for m, u in f.items()}
        while rem and max(rem) >= dg:
            dr = max(rem)
            lr = rem[dr]
            # rem <- lg * rem - lr * r^(dr-dg) * g
            new = {}
            for m, u in rem.items():
                if m == dr:
                    continue
                new[m] = _u_mul(u, lg)
            for m, u in g.items():
                if m == dg:
                    continue
                k = m + dr - dg
                v = _u_add(new.get(k, {}), _u_scale(_u_mul(u, lr), Fraction(-1)))
                if v:
                    new[k] = v
                else:
                    new.pop(k, None)
            rem = {m: u for m, u in new.items() if u}
        return rem

    def _monic(self):
        if self.is_zero():
            return self
        _, lc = self.leading()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    # -- evaluation and printing -------------------------------------------

    def eval_at(self, r0, s0):
        r0, s0 = Fraction(r0), Fraction(s0)
        total = _F0
        for (m, n), c in self.terms.items():
            total += c * r0**m * s0**n
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n) in sorted(self.terms, reverse=True):
            c = self.terms[(m, n)]
            factors = []
            if m:
                factors.append("r" if m == 1 else f"r^{m}")
            if n:
                factors.append("s" if n == 1 else f"s^{n}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(c)) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BiPoly({self})"


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """An element of Q(r, s) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, BiPoly):
            num = BiPoly.const(num)
        if den is None:
            den = _BP_ONE
        elif not isinstance(den, BiPoly):
            den = BiPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(r, s)")
        num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _raw(num, den):
        """Wrap already-canonical data without re-reducing."""
        rf = RatFunc.__new__(RatFunc)
        rf.num = num
        rf.den = den
        rf._hash = None
        return rf

    # -- constructors --------------------------------------------------------

    @staticmethod
    def const(c):
        c = Fraction(c)
        return RatFunc._raw(BiPoly.const(c), _BP_ONE)

    @staticmethod
    def monomial(c, m, n):
        """c * r^m * s^n with integer (possibly negative) exponents."""
        c = Fraction(c)
        if not c:
            return RF_ZERO
        num = BiPoly.mono(c, max(m, 0), max(n, 0))
        den = BiPoly.mono(1, max(-m, 0), max(-n, 0))
        return RatFunc._raw(num, den)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_rational(self):
        return self.num.is_constant() and self.den.is_one()

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"not a rational constant: {self}")
        return self.num.terms.get((0, 0), _F0)

    def is_laurent_monomial(self):
        return self.num.is_monomial() and self.den.is_monomial()

    def laurent_exponents(self):
        """(coefficient, r-exponent, s-exponent) for a monomial fraction."""
        (mn, nn), c = self.num.leading()
        (md, nd), cd = self.den.leading()
        return c / cd, mn - md, nn - nd

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        # reduced inputs let most sums skip the generic gcd: if one
        # denominator is 1 (or they are coprime) the sum is already reduced
        if d1.is_one():
            if d2.is_one():
                return RatFunc._raw_or_zero(n1 + n2, d1)
            return RatFunc._raw_or_zero(n1 * d2 + n2, d2)
        if d2.is_one():
            return RatFunc._raw_or_zero(n2 * d1 + n1, d1)
        if d1 == d2:
            return RatFunc(n1 + n2, d1)
        g = BiPoly.gcd(d1, d2)
        if g.is_one():
            return RatFunc._raw_or_zero(n1 * d2 + n2 * d1, d1 * d2)
        q1 = d1.divexact(g)
        q2 = d2.divexact(g)
        t = n1 * q2 + n2 * q1
        if t.is_zero():
            return RF_ZERO
        h = BiPoly.gcd(t, g)
        if h.is_one():
            return RatFunc._raw_or_zero(t, q1 * d2)
        return RatFunc._raw_or_zero(t.divexact(h), q1 * d2.divexact(h))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if other.is_laurent_monomial():
            return self._mul_laurent(*other.laurent_exponents())
        if self.is_laurent_monomial():
            return other._mul_laurent(*self.laurent_exponents())
        return RatFunc._cross(self.num, self.den, other.num, other.den)

    __rmul__ = __mul__

    def _mul_laurent(self, c, a, b):
        """Multiply by the monomial c r^a s^b without any gcd work."""
        num = self.num.scale(c)
        den = self.den
        if a > 0:
            num = num.shift(a, 0)
        elif a < 0:
            den = den.shift(-a, 0)
        if b > 0:
            num = num.shift(0, b)
        elif b < 0:
            den = den.shift(0, -b)
        nm, nn = num.min_exponents()
        dm, dn = den.min_exponents()
        cm, cn = min(nm, dm), min(nn, dn)
        if cm or cn:
            num = num.shift(-cm, -cn)
            den = den.shift(-cm, -cn)
        return RatFunc._raw(num, den)

    @staticmethod
    def _cross(n1, d1, n2, d2):
        """(n1/d1) * (n2/d2) for reduced inputs, by cross-cancellation.

        After removing gcd(n1, d2) and gcd(n2, d1) the four parts are
        pairwise coprime, so no further reduction is needed (Q[r, s] is a
        unique-factorization domain).
        """
        g1 = BiPoly.gcd(n1, d2)
        if not g1.is_one():
            n1 = n1.divexact(g1)
            d2 = d2.divexact(g1)
        g2 = BiPoly.gcd(n2, d1)
        if not g2.is_one():
            n2 = n2.divexact(g2)
            d1 = d1.divexact(g2)
        num = n1 * n2
        den = d1 * d2
        _, lc = den.leading()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        return RatFunc._raw(num, den)

    @staticmethod
    def _raw_or_zero(num, den):
        if num.is_zero():
            return RF_ZERO
        _, lc = den.leading()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(r, s)")
        if self.num.is_zero():
            return RF_ZERO
        return RatFunc._cross(self.num, self.den, other.den, other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(r, s)")
        num, den = self.den, self.num
        _, lc = den.leading()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        return RatFunc._raw(num, den)

    def __pow__(self, k):
        if k == 0:
            return RF_ONE
        if k < 0:
            return self.inverse() ** (-k)
        # powers of a reduced fraction stay reduced, and of a monic
        # denominator stay monic
        return RatFunc._raw(self.num**k, self.den**k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return (isinstance(other, RatFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation ----------------------------------------------------------

    def eval_at(self, r0, s0):
        """Exact rational value at (r0, s0); the point must avoid the poles."""
        d = self.den.eval_at(r0, s0)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at ({r0}, {s0})")
        return self.num.eval_at(r0, s0) / d

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if self.num.is_zero():
            return "0"
        if self.is_laurent_monomial():
            c, m, n = self.laurent_exponents()
            factors = []
            if m:
                factors.append("r" if m == 1 else f"r^{m}")
            if n:
                factors.append("s" if n == 1 else f"s^{n}")
            if not factors:
                return str(c)
            body = "*".join(factors)
            if c == 1:
                return body
            if c == -1:
                return "-" + body
            return f"{c}*{body}"
        num = str(self.num) if len(self.num.terms) == 1 else f"({self.num})"
        if self.den.is_one():
            return num
        den = str(self.den)
        if len(self.den.terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({self})"


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(r, s)")


def _reduce(num, den):
    if num.is_zero():
        return num, _BP_ONE
    if den.is_monomial():
        (md, nd), cd = den.leading()
        mn, nn = num.min_exponents()
        dm, dn = min(md, mn), min(nd, nn)
        num = num.shift(-dm, -dn)
        den = BiPoly.mono(1, md - dm, nd - dn)
        if cd != 1:
            num = num.scale(1 / cd)
        return num, den
    g = BiPoly.gcd(num, den)
    if not g.is_one():
        num = num.divexact(g)
        den = den.divexact(g)
    _, lc = den.leading()
    if lc != 1:
        num = num.scale(1 / lc)
        den = den.scale(1 / lc)
    return num, den


_BP_ONE = BiPoly.const(1)

RF_ZERO = RatFunc.const(0)
RF_ONE = RatFunc.const(1)
RF_R = RatFunc.monomial(1, 1, 0)
RF_S = RatFunc.monomial(1, 0, 1)


# ---------------------------------------------------------------------------
# q-integers and q-factorials
# ---------------------------------------------------------------------------

def q_int(n, q):
    """The q-integer 1 + q + ... + q^(n-1); requires n >= 1."""
    if n < 1:
        raise ValueError("q_int requires n >= 1")
    total = RF_ONE
    p = RF_ONE
    for _ in range(n - 1):
        p = p * q
        total = total + p
    return total


def q_factorial(n, q):
    """The q-factorial [1]_q [2]_q ... [n]_q, with the empty product 1."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    total = RF_ONE
    for k in range(1, n + 1):
        total = total * q_int(k, q)
    return total
