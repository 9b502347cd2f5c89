"""Quantum torus arithmetic, centers, and derivation decomposition.

The torus on T_1 .. T_n is determined by scalars q[i][j] with
T_i T_j = q_{ij} T_j T_i; elements are finite maps from integer exponent
vectors to scalars, multiplied through the bicharacter obtained by sorting
concatenated monomials into ascending order:

    T^a * T^b = chi(a, b) T^(a+b),   chi(a, b) = prod_{i > j} q_{ij}^(a_i b_j).

(The factor collects on the left while each generator of the first monomial
moves right past the lower-indexed generators of the second; this is the
one fixed convention used package-wide.)

Because every q_{ij} here is a monomial in r and s, and r^m s^n = 1 forces
m = n = 0, centrality of T^gamma is a system of integer linear equations in
gamma: two per generator (the r- and s-exponents of the commutation scalar
must vanish).  ``center_kernel`` extracts those forms and returns an exact
basis of the solution lattice.

A derivation D of the torus splits as ad_g + theta with theta diagonal
(theta(T_i) = mu_i T_i); when the center is trivial the split is unique
once g is normalized with zero constant term, and ``derivation_decompose``
recovers (g, mu) from the six values D(T_i), verifying consistency exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfield import RatFunc, RF_ONE, RF_ZERO

__all__ = ["CommutationMatrix", "TorusElement", "centrality_forms",
           "center_kernel", "integer_kernel", "derivation_decompose",
           "DecompositionFailure"]


class DecompositionFailure(ValueError):
    """The supplied values do not come from any ad_g + diagonal derivation."""


class CommutationMatrix:
    """Scalars q_{ij} with T_i T_j = q_{ij} T_j T_i (q_{ii} = 1)."""

    def __init__(self, n, q):
        self.n = n
        self.q = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                v = q[(i, j)]
                self.q[(i, j)] = v if isinstance(v, RatFunc) else RatFunc.const(v)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if not (self.q[(i, j)] * self.q[(j, i)]).is_one():
                    raise ValueError(f"q[{i},{j}] * q[{j},{i}] != 1")
        # integer exponent tables when every q is a monomial r^a s^b with
        # coefficient 1: lets the bicharacter run on machine integers
        self._exp = {}
        for key, v in self.q.items():
            if not v.is_laurent_monomial():
                self._exp = None
                break
            c, a, b = v.laurent_exponents()
            if c != 1:
                self._exp = None
                break
            self._exp[key] = (a, b)

    @staticmethod
    def from_lambda(lam, n):
        """Matrix of the torus X_j X_i = lambda_{j,i} X_i X_j (all corrections 0)."""
        q = {}
        for j in range(2, n + 1):
            for i in range(1, j):
                q[(j, i)] = lam[(j, i)]
                q[(i, j)] = lam[(j, i)].inverse()
        return CommutationMatrix(n, q)

    @staticmethod
    def from_pairs(n, pairs):
        """Matrix from {(i, j): q_ij} for i < j; unlisted pairs commute."""
        q = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = pairs.get((i, j))
                v = RF_ONE if v is None else (v if isinstance(v, RatFunc)
                                              else RatFunc.const(v))
                q[(i, j)] = v
                q[(j, i)] = v.inverse()
        return CommutationMatrix(n, q)

    def chi(self, a, b):
        """Normal-ordering scalar with T^a T^b = chi(a, b) T^(a+b)."""
        if self._exp is not None:
            er = es = 0
            for i in range(2, self.n + 1):
                ai = a[i - 1]
                if not ai:
                    continue
                for j in range(1, i):
                    bj = b[j - 1]
                    if bj:
                        xr, xs = self._exp[(i, j)]
                        er += xr * ai * bj
                        es += xs * ai * bj
            if not er and not es:
                return RF_ONE
            return RatFunc.monomial(1, er, es)
        out = RF_ONE
        for i in range(1, self.n + 1):
            ai = a[i - 1]
            if not ai:
                continue
            for j in range(1, i):
                bj = b[j - 1]
                if bj:
                    out = out * self.q[(i, j)] ** (ai * bj)
        return out

    def commutation_scalar(self, gamma, i):
        """The scalar c with T^gamma T_i = c T_i T^gamma."""
        if self._exp is not None:
            er = es = 0
            for k in range(1, self.n + 1):
                g = gamma[k - 1]
                if not g or k == i:
                    continue
                xr, xs = self._exp[(k, i)] if k > i else self._exp[(i, k)]
                if k > i:
                    er += xr * g
                    es += xs * g
                else:
                    er -= xr * g
                    es -= xs * g
            if not er and not es:
                return RF_ONE
            return RatFunc.monomial(1, er, es)
        out = RF_ONE
        for k in range(1, self.n + 1):
            g = gamma[k - 1]
            if not g or k == i:
                continue
            out = out * self.q[(k, i)] ** g if k > i else out * self.q[(i, k)] ** (-g)
        return out

    def zero(self):
        return TorusElement(self, {})

    def one(self):
        return TorusElement(self, {(0,) * self.n: RF_ONE})

    def scalar(self, c):
        c = c if isinstance(c, RatFunc) else RatFunc.const(c)
        return TorusElement(self, {(0,) * self.n: c} if not c.is_zero() else {})

    def gen(self, i, power=1):
        exp = [0] * self.n
        exp[i - 1] = power
        return TorusElement(self, {tuple(exp): RF_ONE})

    def monomial(self, exp, coeff=RF_ONE):
        coeff = coeff if isinstance(coeff, RatFunc) else RatFunc.const(coeff)
        if coeff.is_zero():
            return self.zero()
        return TorusElement(self, {tuple(exp): coeff})

    def element(self, terms):
        out = {}
        for exp, c in terms.items():
            c = c if isinstance(c, RatFunc) else RatFunc.const(c)
            if not c.is_zero():
                out[tuple(exp)] = c
        return TorusElement(self, out)


class TorusElement:
    """A Laurent combination of torus monomials over one commutation matrix."""

    __slots__ = ("matrix", "terms")

    def __init__(self, matrix, terms):
        self.matrix = matrix
        self.terms = {exp: c for exp, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.matrix.n, RF_ZERO)

    def drop_constant(self):
        out = dict(self.terms)
        out.pop((0,) * self.matrix.n, None)
        return TorusElement(self.matrix, out)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = self.matrix.scalar(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = v
        return TorusElement(self.matrix, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.matrix, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = self.matrix.scalar(other)
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, RatFunc) else RatFunc.const(c)
        if c.is_zero():
            return self.matrix.zero()
        return TorusElement(self.matrix, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        m = self.matrix
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(a, b))
                c = ca * cb * m.chi(a, b)
                v = out.get(exp)
                v = c if v is None else v + c
                if v.is_zero():
                    out.pop(exp, None)
                else:
                    out[exp] = v
        return TorusElement(m, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def inverse(self):
        """Inverse of a single monomial."""
        if len(self.terms) != 1:
            raise ValueError("only torus monomials can be inverted")
        exp, c = next(iter(self.terms.items()))
        neg = tuple(-e for e in exp)
        scal = self.matrix.chi(exp, neg)
        return TorusElement(self.matrix, {neg: (c * scal).inverse()})

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.matrix.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        return (isinstance(other, TorusElement) and self.matrix is other.matrix
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.matrix), frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                (f"T{k}" if e == 1 else f"T{k}^{e}")
                for k, e in enumerate(exp, start=1) if e) or "1"
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            body = cs if mono == "1" else (mono if cs == "1" else f"{cs} * {mono}")
            parts.append((("-" if neg else "") if not parts
                          else ("- " if neg else "+ ")) + body)
        return " ".join(parts)

    def __repr__(self):
        return f"TorusElement({self})"


# ---------------------------------------------------------------------------
# the center
# ---------------------------------------------------------------------------

def centrality_forms(matrix):
    """Integer linear forms whose joint kernel is the central lattice.

    For each generator i the scalar with T_i T^gamma = c T^gamma T_i is a
    monomial r^(f.gamma) s^(g.gamma); the returned list holds, per
    generator, the pair of coefficient vectors (f, g).
    """
    n = matrix.n
    out = []
    for i in range(1, n + 1):
        fr = [0] * n
        fs = [0] * n
        for k in range(1, n + 1):
            if k == i:
                continue
            q = matrix.q[(i, k)]
            if not q.is_laurent_monomial():
                raise ValueError(f"q[{i},{k}] is not a monomial in r, s")
            c, a, b = q.laurent_exponents()
            if c != 1:
                raise ValueError(f"q[{i},{k}] has a nontrivial coefficient")
            fr[k - 1] = a
            fs[k - 1] = b
        out.append((i, tuple(fr), tuple(fs)))
    return out


def integer_kernel(rows, n):
    """Basis of the lattice {x in Z^n : row . x = 0 for every row}.

    Row-reduces the transpose augmented by an identity with unimodular
    operations; the identity parts of the rows whose system part vanishes
    form the kernel basis.
    """
    m = len(rows)
    work = [[rows[j][i] for j in range(m)] + [1 if t == i else 0
                                              for t in range(n)]
            for i in range(n)]
    pivot_row = 0
    for col in range(m):
        while True:
            nonzero = [t for t in range(pivot_row, n) if work[t][col]]
            if not nonzero:
                break
            t = min(nonzero, key=lambda t: abs(work[t][col]))
            work[pivot_row], work[t] = work[t], work[pivot_row]
            done = True
            for t in range(pivot_row + 1, n):
                if work[t][col]:
                    f = work[t][col] // work[pivot_row][col]
                    work[t] = [a - f * b for a, b in zip(work[t], work[pivot_row])]
                    if work[t][col]:
                        done = False
            if done:
                pivot_row += 1
                break
        if pivot_row >= n:
            break
    basis = []
    for t in range(n):
        if all(work[t][c] == 0 for c in range(m)):
            vec = tuple(work[t][m:])
            if any(vec):
                basis.append(vec)
    return basis


def center_kernel(matrix):
    """Exact basis of {gamma in Z^n : T^gamma is central}."""
    rows = []
    for _, fr, fs in centrality_forms(matrix):
        rows.append(list(fr))
        rows.append(list(fs))
    return integer_kernel(rows, matrix.n)


# ---------------------------------------------------------------------------
# derivations of the torus
# ---------------------------------------------------------------------------

def derivation_decompose(matrix, values):
    """Split D into ad_g + diagonal from the values D(T_i).

    ``values`` maps 1-based generator indices to TorusElements.  Returns
    (g, mu): g with zero constant term and mu a dict {i: RatFunc} with the
    diagonal eigenvalues.  Raises :class:`DecompositionFailure`, naming the
    offending generator and monomial, if no such pair reproduces the input.
    """
    n = matrix.n
    zero_exp = (0,) * n
    mu = {}
    candidates = {}
    for i in range(1, n + 1):
        ei = [0] * n
        ei[i - 1] = 1
        for exp, c in values[i].terms.items():
            gamma = tuple(e - u for e, u in zip(exp, ei))
            if gamma == zero_exp:
                mu[i] = c
            else:
                candidates.setdefault(gamma, {})[i] = None
    g_terms = {}
    for gamma in candidates:
        factors = {}
        for i in range(1, n + 1):
            c = matrix.commutation_scalar(gamma, i)
            chi = matrix.chi(gamma, tuple(1 if k == i else 0
                                          for k in range(1, n + 1)))
            # ad_{T^gamma}(T_i) = (1 - c^-1) chi T^(gamma + e_i)
            factors[i] = (RF_ONE - c.inverse()) * chi
        solved = None
        for i in range(1, n + 1):
            if factors[i].is_zero():
                continue
            ei = [0] * n
            ei[i - 1] = 1
            target = tuple(g + e for g, e in zip(gamma, ei))
            coeff = values[i].terms.get(target, RF_ZERO)
            cand = coeff / factors[i]
            if solved is None:
                solved = cand
            elif solved != cand:
                raise DecompositionFailure(
                    f"inconsistent coefficient for T^{gamma} at generator {i}")
        if solved is None:
            raise DecompositionFailure(
                f"T^{gamma} is central; its contribution cannot come from "
                f"an inner derivation")
        if not solved.is_zero():
            g_terms[gamma] = solved
    g = TorusElement(matrix, g_terms)
    for i in range(1, n + 1):
        mu.setdefault(i, RF_ZERO)
        ti = matrix.gen(i)
        rebuilt = g.commutator(ti) + ti.scale(mu[i])
        if rebuilt != values[i]:
            diff = rebuilt - values[i]
            exp = next(iter(diff.terms))
            raise DecompositionFailure(
                f"values are not a torus derivation: generator {i} "
                f"disagrees at monomial {exp}")
    return g, mu
