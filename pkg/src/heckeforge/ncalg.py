"""Normal-form arithmetic in Drinfeld-presented algebras and in the
generators-and-relations algebra H*(r,n).

Elements are stored as sum of c * v^mu gbar with the group element on the
right and the variables sorted.  Multiplication rewrites words into this
normal form: group elements are pushed rightward one variable at a time
(in H* via a bubble-sort word of simple reflections and the defining
relations; in a Drinfeld presentation via the representation), and variable
words are sorted by adjacent transpositions, each swap inserting the
degree-0 commutator correction of the presentation.  Termination follows
from the lexicographic descent in (polynomial degree, inversion count).
Confluence is not assumed; it is certified by small-degree associativity
checks, which fail for families violating the PBW conditions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .cyclo import cyclo, one, root_of_unity, zero
from .group import (
    GroupElement,
    RepKind,
    diag,
    from_cycles,
    group_order,
    identity,
    monomial_image,
    multiply,
    transposition,
    xi,
)
from .hecke import SkewFormFamily


class NCElement:
    """Sum of c * v^mu gbar in a fixed presentation."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms: dict):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def filtration_degree(self) -> int:
        return max((sum(mu) for mu, _ in self.terms), default=-1)

    def group_part_only(self) -> bool:
        return all(not any(mu) for mu, _ in self.terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return NCElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "NCElement":
        c = cyclo(c)
        if c.is_zero():
            return NCElement(self.algebra, {})
        return NCElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCElement):
            self._check(other)
            return self.algebra.multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, NCElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        z = zero()
        return all(self.terms.get(k, z) == other.terms.get(k, z) for k in keys)

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different presentations")

    def __repr__(self):
        bits = []
        for (mu, g), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]), kv[0][0], kv[0][1].sort_key())):
            mono = "".join(f"v{i+1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(mu) if k)
            bits.append(f"({c})" + (f" {mono}" if mono else "") + (f" [{g!r}]" if not g.is_identity() else ""))
        return " + ".join(bits) or "0"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": c.to_json(), "exps": list(mu), "g": g.to_json()}
                for (mu, g), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]), kv[0][0], kv[0][1].sort_key()))
            ]
        }


def commutator(x: NCElement, y: NCElement) -> NCElement:
    return x * y - y * x


def filtration_degree(x: NCElement) -> int:
    return x.filtration_degree()


def _word_of(mu):
    out = []
    for i, k in enumerate(mu):
        out.extend([i + 1] * k)
    return out


def _exps_of(word, n):
    mu = [0] * n
    for k in word:
        mu[k - 1] += 1
    return tuple(mu)


class _AlgebraBase:
    def element(self, terms: dict) -> NCElement:
        return NCElement(self, terms)

    def term(self, exps, g: GroupElement, coeff=1) -> NCElement:
        return NCElement(self, {(tuple(exps), g): cyclo(coeff)})

    def one(self) -> NCElement:
        return self.term((0,) * self.n, identity(self.r, self.n))

    def var(self, k: int) -> NCElement:
        e = [0] * self.n
        e[k - 1] = 1
        return self.term(e, identity(self.r, self.n))

    def group(self, g: GroupElement) -> NCElement:
        return self.term((0,) * self.n, g)

    def multiply(self, x: NCElement, y: NCElement) -> NCElement:
        out: dict = {}
        for (mu, g), c1 in x.terms.items():
            for (nu, h), c2 in y.terms.items():
                for key, c in self._term_product(mu, g, nu, h).items():
                    val = c * c1 * c2
                    cur = out.get(key)
                    s = val if cur is None else cur + val
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
        return NCElement(self, out)


def _bubble_word(perm):
    """Indices w with perm = s_{w[0]} o s_{w[1]} o ... (rightmost applied
    first), from bubble-sorting the one-line notation."""
    L = list(perm)
    collected = []
    changed = True
    while changed:
        changed = False
        for i in range(len(L) - 1):
            if L[i] > L[i + 1]:
                L[i], L[i + 1] = L[i + 1], L[i]
                collected.append(i + 1)
                changed = True
    return list(reversed(collected))


class HStarAlgebra(_AlgebraBase):
    """The algebra generated by CG(r,1,n) and commuting variables v_1..v_n
    with xibar_i v_k = v_k xibar_i and
    sbar_i v_{i+1} = v_i sbar_i + sum_a xibar_i^a xibar_{i+1}^{-a}."""

    def __init__(self, r: int, n: int):
        self.r = r
        self.n = n
        self._move_cache: dict = {}
        self._gm_cache: dict = {}

    def group_move(self, g: GroupElement, k: int) -> dict:
        """Normal form of gbar v_k as a term dict; the polynomial part is the
        single term v_{sigma(k)} gbar, every correction has degree 0."""
        key = (g, k)
        cached = self._gm_cache.get(key)
        if cached is not None:
            return cached
        r, n = self.r, self.n
        word = _bubble_word(g.perm)
        sigma = from_cycles(r, n, [])  # identity; tails accumulate the suffix
        # terms: (variable index or 0, tail group element) -> coeff
        terms: dict = {(k, identity(r, n)): one()}
        for i in reversed(word):
            s_i = transposition(r, n, i, i + 1)
            new: dict = {}

            def add(key2, c):
                cur = new.get(key2)
                s = c if cur is None else cur + c
                if s.is_zero():
                    new.pop(key2, None)
                else:
                    new[key2] = s

            for (vk, tail), c in terms.items():
                if vk == 0:
                    add((0, multiply(s_i, tail)), c)
                    continue
                if vk == i:  # sbar_i v_i = v_{i+1} sbar_i - sum_a ...
                    add((i + 1, multiply(s_i, tail)), c)
                    corr_sign = -1
                elif vk == i + 1:  # sbar_i v_{i+1} = v_i sbar_i + sum_a ...
                    add((i, multiply(s_i, tail)), c)
                    corr_sign = 1
                else:
                    add((vk, multiply(s_i, tail)), c)
                    continue
                for a in range(r):
                    d = diag(r, n, [a if t == i - 1 else (-a) % r if t == i else 0 for t in range(n)])
                    add((0, multiply(d, tail)), c * corr_sign)
            terms = new
        D = diag(r, n, g.exps)
        out: dict = {}
        for (vk, tail), c in terms.items():
            mu = (0,) * n if vk == 0 else tuple(1 if t == vk - 1 else 0 for t in range(n))
            key2 = (mu, multiply(D, tail))
            cur = out.get(key2)
            s = c if cur is None else cur + c
            if not s.is_zero():
                out[key2] = s
            elif key2 in out:
                del out[key2]
        # shape invariant: one main term v_{sigma(k)}, degree-0 corrections
        mains = [mu for (mu, _t) in out if any(mu)]
        assert mains == [tuple(1 if t == g.perm[k - 1] - 1 else 0 for t in range(n))], (g, k)
        self._gm_cache[key] = out
        return out

    def _move_through(self, g: GroupElement, nu) -> dict:
        """Normal form of gbar v^nu: dict (exps, group) -> coeff."""
        if not any(nu):
            return {((0,) * self.n, g): one()}
        key = (g, nu)
        cached = self._move_cache.get(key)
        if cached is not None:
            return cached
        k = next(i for i, x in enumerate(nu) if x) + 1
        rest = tuple(x - 1 if i == k - 1 else x for i, x in enumerate(nu))
        out: dict = {}
        for (lam, g1), c in self.group_move(g, k).items():
            for (kappa, g2), c2 in self._move_through(g1, rest).items():
                key2 = (tuple(a + b for a, b in zip(lam, kappa)), g2)
                val = c * c2
                cur = out.get(key2)
                s = val if cur is None else cur + val
                if s.is_zero():
                    out.pop(key2, None)
                else:
                    out[key2] = s
        self._move_cache[key] = out
        return out

    def _term_product(self, mu, g, nu, h) -> dict:
        out: dict = {}
        for (kappa, g2), c in self._move_through(g, nu).items():
            key = (tuple(a + b for a, b in zip(mu, kappa)), multiply(g2, h))
            cur = out.get(key)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return out


class DrinfeldAlgebra(_AlgebraBase):
    """T(V)#G modulo vw - wv = sum_g a_g(v,w) gbar, for a skew-form family.

    Arithmetic is only trustworthy for families passing pbw_check; for bad
    families the rewriting is still deterministic but associativity fails,
    which pbw_dimension_check detects.
    """

    def __init__(self, family: SkewFormFamily):
        self.family = family
        self.r = family.r
        self.n = family.n
        self.rep = family.repkind

    def group_move(self, g: GroupElement, k: int) -> dict:
        """Normal form of gbar v_k: the single term rho(g)(v_k) gbar."""
        e = [0] * self.n
        e[k - 1] = 1
        img, zexp = monomial_image(tuple(e), g, self.rep)
        c = root_of_unity(self.r, zexp) if zexp else one()
        return {(img, g): c}

    def _term_product(self, mu, g, nu, h) -> dict:
        # push gbar through v^nu letter by letter, keeping the image order:
        # the images v_{pi(s)} need not be sorted, and re-sorting them is
        # precisely where bracket corrections enter
        pi, tvals = _mono_data(g, self.rep)
        letters = _word_of(nu)
        mapped = [pi[s - 1] for s in letters]
        zexp = sum(tvals[s - 1] for s in letters) % self.r
        coeff = root_of_unity(self.r, zexp) if zexp else one()
        word = _word_of(mu) + mapped
        tail = multiply(g, h)
        out: dict = {}
        stack = [(coeff, word, tail)]
        while stack:
            c, w, t = stack.pop()
            i = next((x for x in range(len(w) - 1) if w[x] > w[x + 1]), None)
            if i is None:
                key = (_exps_of(w, self.n), t)
                cur = out.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
                continue
            k_, m_ = w[i], w[i + 1]
            swapped = w[:i] + [m_, k_] + w[i + 2:]
            stack.append((c, swapped, t))
            prefix, suffix = w[:i], w[i + 2:]
            for gp, A in self.family.support.items():
                aval = A.matrix[k_ - 1][m_ - 1]
                if aval.is_zero():
                    continue
                pi, tvals = _mono_data(gp, self.rep)
                mapped = [pi[s2 - 1] for s2 in suffix]
                zexp2 = sum(tvals[s2 - 1] for s2 in suffix) % self.r
                c2 = c * aval
                if zexp2:
                    c2 = c2 * root_of_unity(self.r, zexp2)
                stack.append((c2, prefix + mapped, multiply(gp, t)))
        return out


def _mono_data(g: GroupElement, rep: RepKind):
    from .group import monomial_action

    return monomial_action(g, rep)


# -- H* specific constructions -------------------------------------------------


def tilde_generator(k: int, algebra: HStarAlgebra) -> NCElement:
    """vtilde_k = v_k + (1/2) sum_{j != k} sum_a (-1)^{[j<k]}
    (xi_k^a xi_j^{-a} (k,j))bar, in normal form."""
    r, n = algebra.r, algebra.n
    out = algebra.var(k)
    half = Fraction(1, 2)
    for j in range(1, n + 1):
        if j == k:
            continue
        sign = -1 if j < k else 1
        for a in range(r):
            d = diag(r, n, [a if t == k - 1 else (-a) % r if t == j - 1 else 0 for t in range(n)])
            gkj = multiply(d, transposition(r, n, k, j))
            out = out + algebra.group(gkj).scale(half * sign)
    return out


def _xi_sum(algebra: HStarAlgebra, i: int, j: int, perm=None) -> NCElement:
    """sum_a (xi_i^a xi_j^{-a} perm)bar."""
    r, n = algebra.r, algebra.n
    out = algebra.element({})
    for a in range(r):
        d = diag(r, n, [a if t == i - 1 else (-a) % r if t == j - 1 else 0 for t in range(n)])
        g = d if perm is None else multiply(d, perm)
        out = out + algebra.group(g)
    return out


def verify_reln4(j: int, k: int, m: int, r: int, n: int, algebra: HStarAlgebra | None = None) -> bool:
    """Check the normal form of (j,k)bar v_m against the four displayed cases."""
    if not 1 <= j < k <= n:
        raise ValueError("need j < k")
    alg = algebra or HStarAlgebra(r, n)
    lhs = alg.group(transposition(r, n, j, k)) * alg.var(m)
    tjk = alg.group(transposition(r, n, j, k))
    if m < j or k < m:
        rhs = alg.var(m) * tjk
    elif j < m < k:
        rhs = (
            alg.var(m) * tjk
            + _xi_sum(alg, m, k, from_cycles(r, n, [(j, m, k)]))
            - _xi_sum(alg, j, m, from_cycles(r, n, [(j, k, m)]))
        )
    elif m == j:
        rhs = alg.var(k) * tjk - _xi_sum(alg, j, k)
        for i in range(j + 1, k):
            rhs = rhs - _xi_sum(alg, i, k, from_cycles(r, n, [(j, i, k)]))
    else:  # m == k
        rhs = alg.var(j) * tjk + _xi_sum(alg, j, k)
        for i in range(j + 1, k):
            rhs = rhs + _xi_sum(alg, i, j, from_cycles(r, n, [(k, i, j)]))
    return lhs == rhs


def _terms_equal_across(x: NCElement, y) -> bool:
    """Equality of term maps, ignoring which presentation owns them."""
    xt, yt = x.terms, y.terms if isinstance(y, NCElement) else y
    keys = set(xt) | set(yt)
    z = zero()
    return all(xt.get(k2, z) == yt.get(k2, z) for k2 in keys)


@dataclass
class IsoReport:
    r: int
    n: int
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "checks": dict(self.checks), "ok": self.ok}


def verify_iso(r: int, n: int) -> IsoReport:
    """Mechanical verification that the tilde generators of H*(r,n) satisfy
    the relations of the Drinfeld-presented deformation supported on the
    class of (1,2,3): the xibar and sbar exchange relations, the bracket
    relation with coefficient 1/4, and the 4/3-scaling match with the
    commutator sum of the preset family (the relation-level form of the
    generator map v_k -> (2/sqrt 3) vtilde_k, keeping all scalars in Q(zeta_r))."""
    if n < 3:
        raise ValueError("the bracket relation needs n >= 3")
    from .hecke import build_preset, commutator_sum

    alg = HStarAlgebra(r, n)
    tildes = {k: tilde_generator(k, alg) for k in range(1, n + 1)}
    family = build_preset("a_r1n", r, n)
    drin = DrinfeldAlgebra(family)
    checks = {}

    ok = True
    for i in range(1, n + 1):
        xbar = alg.group(xi(r, n, i))
        for k in range(1, n + 1):
            if not (xbar * tildes[k]) == (tildes[k] * xbar):
                ok = False
    checks["xi_commutes"] = ok

    ok = True
    for i in range(1, n):
        sbar = alg.group(transposition(r, n, i, i + 1))
        for k in range(1, n + 1):
            if k in (i, i + 1):
                continue
            if not (sbar * tildes[k]) == (tildes[k] * sbar):
                ok = False
    checks["s_commutes_off_support"] = ok

    ok = True
    for i in range(1, n):
        sbar = alg.group(transposition(r, n, i, i + 1))
        if not (sbar * tildes[i]) == (tildes[i + 1] * sbar):
            ok = False
    checks["s_intertwines"] = ok

    ok = True
    quarter = Fraction(1, 4)
    for m_ in range(1, n + 1):
        for k_ in range(m_ + 1, n + 1):
            lhs = tildes[m_] * tildes[k_] - tildes[k_] * tildes[m_]
            rhs = alg.element({})
            for i in range(1, n + 1):
                if i in (m_, k_):
                    continue
                for a in range(r):
                    for b in range(r):
                        d = diag(
                            r,
                            n,
                            [
                                a if t == m_ - 1 else b if t == k_ - 1 else (-a - b) % r if t == i - 1 else 0
                                for t in range(n)
                            ],
                        )
                        plus = multiply(d, from_cycles(r, n, [(m_, k_, i)]))
                        minus = multiply(d, from_cycles(r, n, [(m_, i, k_)]))
                        rhs = rhs + alg.group(plus).scale(quarter) - alg.group(minus).scale(quarter)
            if not lhs == rhs:
                ok = False
            # the 4/3-scaled bracket must match the Drinfeld commutator sum
            scaled = lhs.scale(Fraction(4, 3))
            target = commutator_sum(family, m_, k_)
            if not _terms_equal_across(scaled, target):
                ok = False
            drin_comm = commutator(drin.var(m_), drin.var(k_))
            if not _terms_equal_across(scaled, drin_comm.terms):
                ok = False
    checks["tilde_bracket"] = ok
    return IsoReport(r, n, checks)


# -- PBW dimension / associativity surrogate ------------------------------------


@dataclass
class PBWDimensionReport:
    count: int
    expected: int
    associative: bool
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.count == self.expected and self.associative


def pbw_dimension_check(
    algebra, N: int, n_triples: int = 100, seed: int = 0
) -> PBWDimensionReport:
    """Count normal-form basis elements of filtration degree <= N against
    C(n+N, n) |G|, and re-multiply sampled triples to confirm the normal
    forms compose associatively (the confluence surrogate)."""
    r, n = algebra.r, algebra.n
    p = getattr(getattr(algebra, "family", None), "p", 1)
    count = 0
    for mu in product(range(N + 1), repeat=n):
        if sum(mu) <= N:
            count += group_order(r, p, n)
    expected = comb(n + N, n) * group_order(r, p, n)
    rng = random.Random(seed)
    from .group import elements

    G = elements(r, p, n)
    witness = None
    associative = True

    def check(x, y, z):
        nonlocal witness, associative
        if not ((x * y) * z) == (x * (y * z)):
            associative = False
            if witness is None:
                witness = (x, y, z)

    # all variable triples first: these expose Jacobi failures directly
    for i, j, k in product(range(1, n + 1), repeat=3):
        if not associative:
            break
        check(algebra.var(i), algebra.var(j), algebra.var(k))
    trials = 0
    while associative and trials < n_triples:
        trials += 1

        def rand_term():
            mu = [0] * n
            for _ in range(rng.randrange(3)):
                mu[rng.randrange(n)] += 1
            return algebra.term(mu, rng.choice(G), Fraction(rng.randrange(1, 4)))

        check(rand_term(), rand_term(), rand_term())
    return PBWDimensionReport(count, expected, associative, witness)
