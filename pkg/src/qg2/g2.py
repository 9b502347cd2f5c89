"""The concrete G2 instance: constants, straightening tables, consistency checks.

The algebra is generated by e_1 and e_2 subject to two quantum Serre
relations; the six root vectors X_1 .. X_6 defined from them satisfy the
fifteen straightening relations stored in :data:`LAMBDA_TABLE` /
:data:`P_TABLE`, which turn the algebra into an iterated Ore extension.
Everything here is ordinary data plus residual checks tying the two
presentations together: the Serre relations and the root-vector
definitions must reduce to zero in the straightened algebra.
"""

from __future__ import annotations

from .ratfield import RatFunc, RF_ONE
from .ore import OrePresentation, OreElement, Word

__all__ = [
    "xi", "eta", "zeta", "Q_ELL", "GENERATOR_NAMES",
    "LAMBDA_TABLE", "P_TABLE",
    "build_presentation", "presentation", "descending_presentation",
    "serre_relation_words", "serre_residual",
    "root_vector_words", "root_vector_residual",
    "bidegree", "D5_SCALARS", "D6_SCALARS",
]


def _m(c, a, b):
    """Scalar c * r^a * s^b."""
    return RatFunc.monomial(c, a, b)


R = _m(1, 1, 0)
S = _m(1, 0, 1)

#: xi = r^2 - s^2 + r s
xi = R**2 - S**2 + R * S
#: eta = r^2 - s^2 - r s
eta = R**2 - S**2 - R * S
#: zeta = (r^3 - s^3) / (r + s)
zeta = (R**3 - S**3) / (R + S)

#: q-scaling constants of the sigma/delta commutations, by level index.
Q_ELL = {
    3: _m(1, -1, 1),
    4: _m(1, -3, 3),
    5: _m(1, -1, 1),
    6: _m(1, -3, 3),
}

GENERATOR_NAMES = ("X1", "X2", "X3", "X4", "X5", "X6")

#: lambda[(j, i)] with X_j X_i = lambda X_i X_j + P[(j, i)].
LAMBDA_TABLE = {
    (2, 1): _m(1, -3, 0),
    (3, 1): _m(1, -2, -1),
    (3, 2): _m(1, -3, 0),
    (4, 1): _m(1, -3, -3),
    (4, 2): _m(1, -6, -3),
    (4, 3): _m(1, -3, 0),
    (5, 1): _m(1, -1, -2),
    (5, 2): _m(1, -3, -3),
    (5, 3): _m(1, -2, -1),
    (5, 4): _m(1, -3, 0),
    (6, 1): _m(1, 0, -3),
    (6, 2): _m(1, -3, -6),
    (6, 3): _m(1, -3, -3),
    (6, 4): _m(1, -6, -3),
    (6, 5): _m(1, -3, 0),
}

# Correction terms as word combinations (scalar, ((generator, power), ...)).
# The (6, 2) entry is deliberately left unordered (X5 before X3, as the
# relation lists it); the presentation constructor straightens it.
P_TABLE = {
    (3, 1): [(-_m(1, -2, -1), ((2, 1),))],
    (4, 1): [(-_m(1, -2, -3) * zeta, ((3, 2),))],
    (4, 2): [(-_m(1, -3, -3) * zeta * (R - S), ((3, 3),))],
    (5, 1): [(-_m(1, -1, -2), ((3, 1),))],
    (5, 2): [(-_m(1, -2, -3) * zeta, ((3, 2),))],
    (5, 3): [(-_m(1, -2, -1), ((4, 1),))],
    (6, 1): [(-_m(1, 0, -3), ((5, 1),))],
    (6, 2): [(-_m(1, -1, -5) * (R**3 - S**3), ((5, 1), (3, 1))),
             (-_m(1, -2, -6) * eta, ((4, 1),))],
    (6, 3): [(-_m(1, -2, -3) * (R**2 - S**2), ((5, 2),))],
    (6, 4): [(-_m(1, -3, -3) * (R - S) * (R**2 - S**2), ((5, 3),))],
}


def build_presentation(invertible=()):
    """The six-generator presentation of the algebra, freshly constructed."""
    return OrePresentation(GENERATOR_NAMES, LAMBDA_TABLE, P_TABLE,
                           invertible=invertible)


_CACHE = {}


def presentation(invertible=()):
    """Cached presentation with the requested invertible generator set."""
    key = frozenset(invertible)
    alg = _CACHE.get(key)
    if alg is None:
        base = _CACHE.get(frozenset())
        if base is None:
            base = build_presentation()
            _CACHE[frozenset()] = base
        alg = base if not key else base.with_invertible(key)
        _CACHE[key] = alg
    return alg


# ---------------------------------------------------------------------------
# the defining relations, as words in e_1 = X_1 and e_2 = X_6
# ---------------------------------------------------------------------------

E1, E2 = 1, 6


def serre_relation_words(which):
    """The quantum Serre relation of e_2-degree 2 (which=1) or e_1-degree 4."""
    if which == 1:
        return [
            Word(RF_ONE, ((E2, 2), (E1, 1))),
            Word(-(_m(1, -3, 0) + _m(1, 0, -3)), ((E2, 1), (E1, 1), (E2, 1))),
            Word(_m(1, -3, -3), ((E1, 1), (E2, 2))),
        ]
    if which == 2:
        c1 = (R + S) * (R**2 + S**2)
        c2 = R * S * (R**2 + S**2) * (R**2 + R * S + S**2)
        c3 = _m(1, 3, 3) * (R + S) * (R**2 + S**2)
        c4 = _m(1, 6, 6)
        return [
            Word(RF_ONE, ((E1, 4), (E2, 1))),
            Word(-c1, ((E1, 3), (E2, 1), (E1, 1))),
            Word(c2, ((E1, 2), (E2, 1), (E1, 2))),
            Word(-c3, ((E1, 1), (E2, 1), (E1, 3))),
            Word(c4, ((E2, 1), (E1, 4))),
        ]
    raise ValueError("which must be 1 or 2")


def serre_residual(which, alg=None):
    """Normal form of the chosen Serre relation; zero iff the presentations agree."""
    from .ore import straighten
    alg = alg or presentation()
    return straighten(alg, serre_relation_words(which))


def root_vector_words(i):
    """Defining combination for the root vector X_i, i in {2, 3, 4, 5}."""
    if i == 2:
        return [Word(RF_ONE, ((1, 1), (3, 1))), Word(-_m(1, 2, 1), ((3, 1), (1, 1)))]
    if i == 3:
        return [Word(RF_ONE, ((1, 1), (5, 1))), Word(-_m(1, 1, 2), ((5, 1), (1, 1)))]
    if i == 4:
        return [Word(RF_ONE, ((3, 1), (5, 1))), Word(-_m(1, 2, 1), ((5, 1), (3, 1)))]
    if i == 5:
        return [Word(RF_ONE, ((1, 1), (6, 1))), Word(-_m(1, 0, 3), ((6, 1), (1, 1)))]
    raise ValueError("root vector index must be in {2, 3, 4, 5}")


def root_vector_residual(i, alg=None):
    """Normal form of (defining combination) - X_i; expected zero."""
    from .ore import straighten
    alg = alg or presentation()
    return straighten(alg, root_vector_words(i)) - alg.gen(i)


# ---------------------------------------------------------------------------
# gradings and diagonal derivation data
# ---------------------------------------------------------------------------

#: (e_1-degree, e_2-degree) of each root vector.
BIDEGREES = {1: (1, 0), 2: (3, 1), 3: (2, 1), 4: (3, 2), 5: (1, 1), 6: (0, 1)}


def bidegree(i):
    return BIDEGREES[i]


#: Eigenvalues of the two distinguished diagonal derivations on X_1 .. X_6.
D5_SCALARS = (1, 3, 2, 3, 1, 0)
D6_SCALARS = (-1, -2, -1, -1, 0, 1)


# ---------------------------------------------------------------------------
# descending display basis
# ---------------------------------------------------------------------------

_DESC_CACHE = {}


def descending_presentation(alg):
    """The same algebra presented on the reversed generator order.

    Writing X'_k := X_{n+1-k}, each relation X_i X_j = lambda^-1 X_j X_i
    - lambda^-1 P_{j,i} (i < j) becomes a straightening rule for the primed
    generators, whose corrections are re-expressed in the descending basis.
    Used to print elements in the X6-first PBW basis.
    """
    key = id(alg)
    hit = _DESC_CACHE.get(key)
    if hit is not None:
        return hit
    n = alg.n
    names = tuple(reversed(alg.names))

    def prime(k):
        return n + 1 - k

    lam = {}
    p = {}
    for (j, i), v in alg.lam.items():
        jp, ip = prime(i), prime(j)       # jp > ip
        lam[(jp, ip)] = v.inverse()
        combo = []
        for exp, c in alg.p[(j, i)].items():
            # the ascending monomial X_1^{e_1}..X_n^{e_n} reads, in primed
            # letters, as the descending word X'_n^{e_1} .. X'_1^{e_n}
            factors = tuple((prime(k), e)
                            for k, e in enumerate(exp, start=1) if e)
            combo.append((-v.inverse() * c, factors))
        if combo:
            p[(jp, ip)] = combo
    inv = frozenset(prime(k) for k in alg.invertible)
    out = OrePresentation(names, lam, p, invertible=inv)
    _DESC_CACHE[key] = out
    return out


def to_descending(elem):
    """Re-express an element in the descending (X6-first) PBW basis."""
    from .ore import straighten
    alg = elem.alg
    desc = descending_presentation(alg)
    n = alg.n
    words = []
    for exp, c in elem.terms.items():
        factors = tuple((n + 1 - k, e)
                        for k, e in enumerate(exp, start=1) if e)
        words.append(Word(c, factors))
    if not words:
        return desc.zero()
    return straighten(desc, words)
