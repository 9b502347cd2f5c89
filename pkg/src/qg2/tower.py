"""Deleting derivations: walk the algebra down to its quantum torus.

Starting from the level-7 presentation (the algebra itself), each step
inverts the top generator that still carries a nonzero derivation and
performs the change of variables

    new_i = sum_n (1 - q)^(-n) / [n]!_q * (delta^n sigma^(-n))(old_i) * old_top^(-n)

for the generators below it; generators at or above the top are kept.  The
series is finite because every delta here is locally nilpotent, and the
step *verifies* rather than assumes the inherited presentation: the new
generators must satisfy the same lambda table with the top row of
corrections deleted.  After the steps at levels 6, 5, 4, 3 (and the
recorded identity step at level 2) all corrections vanish and the lambda
table is the commutation matrix of a quantum torus.

Levels are numbered as in the tower G^7 ⊃ ... ⊃ G^1: level l uses the
variables produced after deleting everything above l, localized at the
generators with index >= l; level 1 is the full quantum torus.  The
``convert`` method transports elements between levels, performing exact
membership checks on the way up (an element of the torus lies in G^(l+1)
exactly when, rewritten in level-(l+1) variables, the exponent of the
level-l variable is nonnegative).
"""

from __future__ import annotations

from .ratfield import RatFunc, RF_ONE, q_factorial
from .ore import (OrePresentation, OreElement, OreError,
                  local_nilpotency_check, check_sigma_delta_commutation)
from . import g2

__all__ = ["TowerError", "NotInLevelError", "TowerStep", "Tower",
           "build_tower", "substitute", "LEVEL_LETTERS"]

LEVEL_LETTERS = {7: "X", 6: "Y", 5: "Z", 4: "U", 3: "T", 2: "T", 1: "T"}


class TowerError(OreError):
    """A deleting-derivations step failed to verify."""


class NotInLevelError(OreError):
    """Membership transport failed: the element does not lie in the level."""

    def __init__(self, level, detail):
        super().__init__(f"not a member of G^{level}: {detail}")
        self.level = level


def substitute(elem, images, target):
    """Evaluate an element under generator -> element images, in ``target``.

    ``images`` maps 1-based generator indices of ``elem``'s presentation to
    elements of ``target``.  Negative source exponents require the image to
    be an invertible monomial.
    """
    out = target.zero()
    cache = {}
    for exp, c in elem.terms.items():
        term = target.scalar(c)
        for k, e in enumerate(exp, start=1):
            if not e:
                continue
            key = (k, e)
            powed = cache.get(key)
            if powed is None:
                powed = images[k] ** e
                cache[key] = powed
            term = term * powed
        out = out + term
    return out


class TowerStep:
    """One deleting-derivations step, from level ``ell + 1`` down to ``ell``.

    Attributes
    ----------
    ell:
        The generator index whose derivation is deleted.
    working:
        The source presentation localized at generators ell..n.
    target:
        The new presentation (level ``ell``), localized at ell..n.
    forward:
        New generator i as an element over ``working``.
    inverse:
        Old generator i as an element over ``target``.
    nilpotency:
        Nilpotency index of delta_ell on each old generator below ell.
    q:
        The scalar with sigma_ell . delta_ell = q delta_ell . sigma_ell,
        derived from the tables (1 for an identity step).
    """

    def __init__(self, source, ell, new_names):
        n = source.n
        self.ell = ell
        working = source.with_invertible(set(range(ell, n + 1)))
        self.working = working
        self.nilpotency = local_nilpotency_check(working, ell)
        self.q = self._derive_q(working, ell)
        self.forward = self._forward_maps(working, ell)
        self.target = self._build_target(working, ell, new_names)
        self._verify_relations()
        self.inverse = self._inverse_maps()
        self._verify_roundtrip()

    # -- construction ---------------------------------------------------------

    @staticmethod
    def _derive_q(alg, ell):
        for i in range(1, ell):
            d = alg.delta(ell, alg.gen(i))
            if d.is_zero():
                continue
            lhs = alg.sigma(ell, d)
            rhs = alg.delta(ell, alg.sigma(ell, alg.gen(i)))
            exp, c = next(iter(lhs.terms.items()))
            rc = rhs.terms.get(exp)
            if rc is None:
                raise TowerError(f"sigma_{ell} delta_{ell} and delta_{ell} "
                                 f"sigma_{ell} have different supports")
            q = c / rc
            probes = [alg.gen(k) for k in range(1, ell)]
            if not check_sigma_delta_commutation(alg, ell, q, probes):
                raise TowerError(
                    f"sigma_{ell} delta_{ell} is not a scalar multiple of "
                    f"delta_{ell} sigma_{ell}")
            if q.is_one():
                raise TowerError(f"q_{ell} = 1: the change-of-variable series "
                                 f"is undefined")
            return q
        return RF_ONE

    def _forward_maps(self, alg, ell):
        out = {}
        xinv = alg.gen(ell, -1)
        for i in range(1, alg.n + 1):
            if i >= ell:
                out[i] = alg.gen(i)
                continue
            # sigma_ell is diagonal on X_i, so delta^n sigma^-n (X_i)
            # is lambda_{ell,i}^-n  times delta^n(X_i)
            lam_inv = alg.lam[(ell, i)].inverse()
            total = alg.gen(i)
            d = alg.gen(i)
            lam_pow = RF_ONE
            inv_pow = alg.one()
            for n in range(1, self.nilpotency[i]):
                d = alg.delta(ell, d)
                lam_pow = lam_pow * lam_inv
                inv_pow = inv_pow * xinv
                coeff = ((RF_ONE - self.q) ** (-n)) / q_factorial(n, self.q) * lam_pow
                total = total + (d * inv_pow).scale(coeff)
            out[i] = total
        return out

    def _build_target(self, alg, ell, new_names):
        lam = dict(alg.lam)
        p = {}
        for (j, i), terms in alg.p.items():
            if j < ell and terms:
                p[(j, i)] = dict(terms)
        return OrePresentation(new_names, lam, p,
                               invertible=set(range(ell, alg.n + 1)))

    def _verify_relations(self):
        """The new generators must satisfy the inherited presentation."""
        alg, tgt = self.working, self.target
        for j in range(2, alg.n + 1):
            for i in range(1, j):
                lhs = self.forward[j] * self.forward[i]
                rhs = (self.forward[i] * self.forward[j]).scale(tgt.lam[(j, i)])
                pnew = tgt.element(tgt.p[(j, i)])
                rhs = rhs + substitute(pnew, self.forward, alg)
                if lhs != rhs:
                    raise TowerError(
                        f"deleting delta_{self.ell}: relation ({j},{i}) "
                        f"fails for the new variables")

    def _inverse_maps(self):
        tgt = self.target
        inv = {}
        for i in range(tgt.n, 0, -1):
            if i >= self.ell:
                inv[i] = tgt.gen(i)
                continue
            corr = self.forward[i] - self.working.gen(i)
            inv[i] = tgt.gen(i) - substitute(corr, inv, tgt)
        return inv

    def _verify_roundtrip(self):
        for i in range(1, self.target.n + 1):
            back = substitute(self.forward[i], self.inverse, self.target)
            if back != self.target.gen(i):
                raise TowerError(f"forward then inverse does not fix "
                                 f"generator {i} at level {self.ell}")
            forth = substitute(self.inverse[i], self.forward, self.working)
            if forth != self.working.gen(i):
                raise TowerError(f"inverse then forward does not fix "
                                 f"generator {i} at level {self.ell}")


class Tower:
    """The full tower from the algebra down to its quantum torus."""

    def __init__(self, base=None):
        base = base or g2.presentation()
        n = base.n
        self.base = base
        self.levels = {7: base}
        self.steps = {}
        current = base
        for ell in range(n, 1, -1):
            names = tuple(f"{LEVEL_LETTERS[ell]}{k}" for k in range(1, n + 1))
            step = TowerStep(current, ell, names)
            self.steps[ell] = step
            self.levels[ell] = step.target
            current = step.target
        self.levels[1] = current.with_invertible(set(range(1, n + 1)))
        self._check_terminal()
        self._embedding = None
        self._matrix = None
        self._reps = None
        self._rep_pows = {}

    def _check_terminal(self):
        term = self.levels[1]
        for (j, i), terms in term.p.items():
            if terms:
                raise TowerError(f"terminal presentation still has a "
                                 f"correction at ({j},{i})")
        for key, lam in term.lam.items():
            if self.base.lam[key] != lam:
                raise TowerError(f"lambda{key} changed along the tower")

    # -- level plumbing --------------------------------------------------------

    def level(self, l):
        if l not in self.levels:
            raise ValueError(f"level must be in 1..7, got {l}")
        return self.levels[l]

    def rehost(self, elem, l):
        """Reinterpret an element over the canonical level-``l`` presentation."""
        alg = self.level(l)
        if elem.alg is alg:
            return elem
        if not elem.alg.same_tables(alg):
            raise TowerError("element does not belong to this level's presentation")
        return alg.element(elem.terms)

    def _min_exponent(self, elem, k):
        if not elem.terms:
            return 0
        return min(exp[k - 1] for exp in elem.terms)

    def convert(self, elem, from_level, to_level):
        """Transport an element along the tower; exact membership checks upward."""
        if not (1 <= from_level <= 7 and 1 <= to_level <= 7):
            raise ValueError("levels must lie in 1..7")
        elem = self.rehost(elem, from_level)
        if to_level == 1 and from_level > 3:
            # the embedding is a homomorphism, so dropping all the way to
            # the torus is a direct evaluation over cached representatives
            te = self.torus_eval(elem, from_level)
            return self.levels[1].element(te.terms)
        l = from_level
        while l > to_level:
            l -= 1
            if l >= 2:
                step = self.steps[l]
                elem = substitute(self.rehost(elem, l + 1, ), step.inverse,
                                  step.target)
            else:
                elem = self.rehost(elem, 1)
        while l < to_level:
            if l <= 2:
                bad = self._min_exponent(elem, l)
                if bad < 0:
                    raise NotInLevelError(
                        l + 1, f"negative exponent {bad} on generator {l}")
                elem = self.level(l + 1).element(elem.terms)
            else:
                step = self.steps[l]
                moved = substitute(self.rehost(elem, l), step.forward,
                                   step.working)
                bad = self._min_exponent(moved, l)
                if bad < 0:
                    name = step.working.names[l - 1]
                    raise NotInLevelError(
                        l + 1, f"negative exponent {bad} on {name}")
                elem = self.level(l + 1).element(moved.terms)
            l += 1
        return elem

    # -- the torus end -----------------------------------------------------------

    def torus_matrix(self):
        if self._matrix is None:
            from .torus import CommutationMatrix
            self._matrix = CommutationMatrix.from_lambda(self.levels[1].lam,
                                                         self.base.n)
        return self._matrix

    def torus_rep(self, level):
        """Torus representatives of each level's generators: {i: TorusElement}.

        Built from the torus monomials upward through the inverse maps and
        cross-checked against the forward maps, so the tables are the exact
        images of every generator under the embedding into the torus.
        """
        if self._reps is None:
            from .torus import TorusElement
            matrix = self.torus_matrix()
            n = self.base.n
            reps = {1: {i: matrix.gen(i) for i in range(1, n + 1)}}
            reps[2] = reps[1]
            reps[3] = reps[1]
            for ell in (3, 4, 5, 6):
                step = self.steps[ell]
                upper = {i: self._torus_subst(step.inverse[i], reps[ell], matrix)
                         for i in range(1, n + 1)}
                for i in range(1, n + 1):
                    again = self._torus_subst(step.forward[i], upper, matrix)
                    if again != reps[ell][i]:
                        raise TowerError(
                            f"torus representatives inconsistent at level {ell}")
                reps[ell + 1] = upper
            self._reps = reps
        return self._reps[level]

    @staticmethod
    def _torus_subst(elem, images, matrix):
        total = matrix.zero()
        for exp, c in elem.terms.items():
            term = matrix.scalar(c)
            for k, e in enumerate(exp, start=1):
                if e:
                    term = term * images[k] ** e
            total = total + term
        return total

    def torus_pow(self, level, k, e):
        """Cached power of a generator's torus representative."""
        key = (level, k, e)
        hit = self._rep_pows.get(key)
        if hit is None:
            hit = self.torus_rep(level)[k] ** e
            self._rep_pows[key] = hit
        return hit

    def torus_eval(self, elem, level):
        """Image of an element in the torus, via the cached representatives."""
        matrix = self.torus_matrix()
        total = matrix.zero()
        for exp, c in elem.terms.items():
            term = matrix.scalar(c)
            for k, e in enumerate(exp, start=1):
                if e:
                    term = term * self.torus_pow(level, k, e)
            total = total + term
        return total

    def embedding(self):
        """Torus representatives of the level-7 generators, as a dict."""
        if self._embedding is None:
            self._embedding = dict(self.torus_rep(7))
        return self._embedding

    # -- comparison against the printed closed forms -----------------------------

    def closed_form_report(self):
        """Compare every computed change-of-variable map with its transcription.

        Returns one report per identity of the forward (Lemma 2.7) and
        inverse (Corollary 2.8) lists; mismatches are reported with both
        sides in normal form and never silently reconciled.
        """
        from . import expr
        from .identities import FORWARD_TEXT, INVERSE_TEXT, KNOWN_MISMATCHES
        from .report import make_report
        reports = []
        for ell in (6, 5, 4, 3, 2):
            step = self.steps[ell]
            part = 7 - ell
            gm = {nm: k for k, nm in enumerate(step.working.names, start=1)}
            for i in range(1, self.base.n + 1):
                text = FORWARD_TEXT[ell][i]
                fx = expr.eval_element(expr.parse(text), step.working, gm)
                cid = f"lemma-2.7({part})/{step.target.names[i - 1]}"
                reports.append(make_report(
                    cid, step.forward[i] == fx, step.forward[i].to_str(),
                    text, f"Lemma 2.7({part})", KNOWN_MISMATCHES))
        for ell in (6, 5, 4, 3):
            step = self.steps[ell]
            part = 7 - ell
            gm = {nm: k for k, nm in enumerate(step.target.names, start=1)}
            for i in range(1, self.base.n + 1):
                text = INVERSE_TEXT[ell][i]
                fx = expr.eval_element(expr.parse(text), step.target, gm)
                cid = f"corollary-2.8({part})/{step.working.names[i - 1]}"
                reports.append(make_report(
                    cid, step.inverse[i] == fx, step.inverse[i].to_str(),
                    text, f"Corollary 2.8({part})", KNOWN_MISMATCHES))
        return reports

    # -- deterministic dump -------------------------------------------------------

    def dump_text(self):
        """Per-level tables and change-of-variable maps, diff-stable."""
        lines = []

        def dump_alg(title, alg):
            lines.append(f"== {title}")
            inv = ", ".join(alg.names[i - 1] for i in sorted(alg.invertible))
            lines.append(f"generators: {', '.join(alg.names)}")
            lines.append(f"invertible: {inv if inv else '(none)'}")
            for j in range(2, alg.n + 1):
                for i in range(1, j):
                    p = alg.element(alg.p[(j, i)])
                    rel = (f"{alg.names[j-1]}*{alg.names[i-1]} = "
                           f"{alg.lam[(j, i)]} * {alg.names[i-1]}*{alg.names[j-1]}")
                    if not p.is_zero():
                        rel += f" + {p.to_str()}"
                    lines.append(f"  {rel}")

        dump_alg("level 7 (the algebra)", self.base)
        for ell in (6, 5, 4, 3, 2):
            step = self.steps[ell]
            lines.append(f"== step: delete derivation {ell} "
                         f"(q = {step.q})")
            for i in range(1, self.base.n + 1):
                lines.append(f"  {step.target.names[i-1]} = "
                             f"{step.forward[i].to_str()}")
            for i in range(1, self.base.n + 1):
                lines.append(f"  {step.working.names[i-1]} = "
                             f"{step.inverse[i].to_str()}")
            dump_alg(f"level {ell}", step.target)
        lines.append("== terminal torus relations")
        term = self.levels[1]
        for j in range(2, term.n + 1):
            for i in range(1, j):
                q = term.lam[(j, i)].inverse()
                lines.append(f"  T{i}*T{j} = {q} * T{j}*T{i}")
        return "\n".join(lines) + "\n"
