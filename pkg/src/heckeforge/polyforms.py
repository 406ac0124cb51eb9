"""Exact multivariate polynomials and polynomial differential forms with
G-actions: the algebra S(V) (x) Lambda(V*).

A PolyForm maps strictly increasing wedge index sets x_S to polynomials.
Group elements act on polynomials by substitution and on wedge factors by
the contragredient action, with the sign of the permutation that re-sorts
the wedge indices.  The Reynolds projector (1/|H|) sum chi(h)^{-1} h cuts
out a chi-semi-invariant subspace; bases are returned echelon-canonical so
repeated runs agree byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .cyclo import (
    CycloMatrix,
    CycloNum,
    as_root_exponent,
    cyclo,
    echelon_rows,
    one,
    root_of_unity,
    zero,
)
from .group import GroupElement, RepKind, monomial_action, multiply


class Polynomial:
    """Exact polynomial in n variables: a map exponent vector -> CycloNum."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n, {})

    @staticmethod
    def constant(n: int, c) -> "Polynomial":
        return Polynomial(n, {(0,) * n: cyclo(c)})

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        e = [0] * n
        e[i - 1] = 1
        return Polynomial(n, {tuple(e): one()})

    @staticmethod
    def monomial(n: int, exps, c=1) -> "Polynomial":
        return Polynomial(n, {tuple(exps): cyclo(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Polynomial(self.n, out)

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    prod = c1 * c2
                    out[key] = out[key] + prod if key in out else prod
            return Polynomial(self.n, out)
        c = cyclo(other)
        return Polynomial(self.n, {e: v * c for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self - other).is_zero()

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def __repr__(self):
        return format_polynomial(self) or "0"


def format_polynomial(f: Polynomial) -> str:
    bits = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        mono = "*".join(
            f"v{i+1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
        )
        cs = str(c)
        if mono:
            bits.append(f"({cs}) * {mono}" if ("+" in cs or "-" in cs[1:]) else f"{cs} * {mono}")
        else:
            bits.append(f"({cs})" if "+" in cs or "-" in cs[1:] else cs)
    return " + ".join(bits)


class PolyForm:
    """Element of S(V) (x) Lambda(V*): wedge index set -> Polynomial."""

    __slots__ = ("n", "components")

    def __init__(self, n: int, components: dict):
        comps = {}
        for S, p in components.items():
            S = tuple(S)
            if list(S) != sorted(set(S)):
                raise ValueError("wedge index sets must be strictly increasing")
            if not p.is_zero():
                comps[S] = p
        self.n = n
        self.components = comps

    @staticmethod
    def zero(n: int) -> "PolyForm":
        return PolyForm(n, {})

    @staticmethod
    def from_polynomial(p: Polynomial) -> "PolyForm":
        return PolyForm(p.n, {(): p})

    def is_zero(self) -> bool:
        return not self.components

    def poly_degree(self) -> int:
        """Degree of the polynomial of highest degree over all components."""
        return max((p.degree() for p in self.components.values()), default=-1)

    def form_degrees(self) -> set[int]:
        return {len(S) for S in self.components}

    def __add__(self, other):
        out = dict(self.components)
        for S, p in other.components.items():
            out[S] = out[S] + p if S in out else p
        return PolyForm(self.n, out)

    def __neg__(self):
        return PolyForm(self.n, {S: -p for S, p in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyForm":
        return PolyForm(self.n, {S: p * c for S, p in self.components.items()})

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        bits = []
        for S in sorted(self.components):
            poly = format_polynomial(self.components[S])
            if S:
                wedge = "^".join(f"x{i}" for i in S)
                bits.append(f"({poly}) ^ {wedge}")
            else:
                bits.append(poly)
        return " + ".join(bits) or "0"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "components": [
                {
                    "wedge": list(S),
                    "terms": [
                        {"exps": list(e), "coeff": c.to_json()}
                        for e, c in sorted(p.terms.items(), reverse=True)
                    ],
                }
                for S, p in sorted(self.components.items())
            ],
        }


def _sort_with_sign(indices):
    """(sorted tuple, sign); sign 0 when an index repeats."""
    lst = list(indices)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b:
            return tuple(lst), 0
    return tuple(lst), sign


# -- group actions -----------------------------------------------------------


def act_poly(g: GroupElement, f: Polynomial, rep: RepKind) -> Polynomial:
    """Substitution action: v_i |-> g(v_i)."""
    pi, t = monomial_action(g, rep)
    out: dict = {}
    for e, c in f.terms.items():
        img = [0] * f.n
        zexp = 0
        for i, k in enumerate(e):
            if k:
                img[pi[i] - 1] = k
                zexp += t[i] * k
        key = tuple(img)
        val = c * root_of_unity(g.r, zexp) if zexp % g.r else c
        out[key] = out[key] + val if key in out else val
    return Polynomial(f.n, out)


def act_form(g: GroupElement, w: PolyForm, rep: RepKind) -> PolyForm:
    """Action on S(V) (x) Lambda(V*): substitution on the polynomial part,
    contragredient action with sorting sign on the wedge part."""
    pi, t = monomial_action(g, rep)
    out = PolyForm.zero(w.n)
    for S, p in w.components.items():
        imgS, sign = _sort_with_sign(pi[i - 1] for i in S)
        if sign == 0:
            continue
        zexp = -sum(t[i - 1] for i in S)
        coeff = root_of_unity(g.r, zexp) * sign if zexp % g.r else cyclo(sign)
        out = out + PolyForm(w.n, {imgS: act_poly(g, p, rep) * coeff})
    return out


# -- classical invariant theory ----------------------------------------------


def elementary_symmetric(k: int, polys) -> Polynomial:
    polys = list(polys)
    if not 1 <= k <= len(polys):
        raise ValueError("k out of range")
    n = polys[0].n
    out = Polynomial.zero(n)
    for combo in combinations(polys, k):
        prod = Polynomial.constant(n, 1)
        for f in combo:
            prod = prod * f
        out = out + prod
    return out


def invariant_ring_generators(r: int, p: int, m: int) -> list[Polynomial]:
    """Basic invariants of G(r,p,m): e_1..e_{m-1} in the r-th powers of the
    variables, then (v_1...v_m)^{r/p}."""
    if r % p:
        raise ValueError("p must divide r")
    powers = [Polynomial.monomial(m, tuple(r if j == i else 0 for j in range(m))) for i in range(m)]
    gens = [elementary_symmetric(k, powers) for k in range(1, m)]
    gens.append(Polynomial.monomial(m, (r // p,) * m))
    return gens


def basic_derivations(r: int, p: int, m: int) -> list[PolyForm]:
    """theta_j = sum_i v_i^{(j-1)r+1} (x) x_i for j < m, with the alternative
    last derivation sum_i (v_1..v^_i..v_m)^{r-1} (x) x_i when p = r."""
    if r % p:
        raise ValueError("p must divide r")
    out = []
    for j in range(1, m):
        e = (j - 1) * r + 1
        out.append(
            PolyForm(
                m,
                {
                    (i,): Polynomial.monomial(m, tuple(e if t == i - 1 else 0 for t in range(m)))
                    for i in range(1, m + 1)
                },
            )
        )
    if p != r:
        e = (m - 1) * r + 1
        last = {
            (i,): Polynomial.monomial(m, tuple(e if t == i - 1 else 0 for t in range(m)))
            for i in range(1, m + 1)
        }
    else:
        last = {
            (i,): Polynomial.monomial(m, tuple(0 if t == i - 1 else r - 1 for t in range(m)))
            for i in range(1, m + 1)
        }
    out.append(PolyForm(m, last))
    return out


def symmetric_group_derivations(m: int) -> list[PolyForm]:
    """Corrected basic derivations for the permutation action of S_m:
    theta_j = sum_i v_i^{j-1} (x) x_i, degrees 0..m-1."""
    out = []
    for j in range(1, m + 1):
        out.append(
            PolyForm(
                m,
                {
                    (i,): Polynomial.monomial(m, tuple(j - 1 if t == i - 1 else 0 for t in range(m)))
                    for i in range(1, m + 1)
                },
            )
        )
    return out


def _poly_matrix_determinant(rows: list[list[Polynomial]]) -> Polynomial:
    m = len(rows)
    n = rows[0][0].n
    if m == 1:
        return rows[0][0]
    out = Polynomial.zero(n)
    for j in range(m):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[rows[i][t] for t in range(m) if t != j] for i in range(1, m)]
        term = entry * _poly_matrix_determinant(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def reflection_arrangement_polynomial(group_elements, rep: RepKind) -> Polynomial:
    """Q = product of the (deduplicated) linear forms cutting out the moved
    lines of the reflections in the listed group, computed in S(V)."""
    elems = list(group_elements)
    n = elems[0].n
    lines = {}
    for g in elems:
        M = CycloMatrix(
            [
                [
                    matrix_entry(g, i, j, rep) - (one(g.r) if i == j else zero(g.r))
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )
        basis = M.column_space_basis()
        if len(basis) != 1:
            continue
        # canonical generator of the moved line, keyed hashably for dedup
        key = tuple((e.order, e.coeffs) for e in basis[0])
        lines[key] = basis[0]
    Q = Polynomial.constant(n, 1)
    for vec in lines.values():
        form = Polynomial(n, {})
        for i, c in enumerate(vec):
            if not c.is_zero():
                form = form + Polynomial.monomial(n, tuple(1 if t == i else 0 for t in range(n)), c)
        Q = Q * form
    return Q


def matrix_entry(g: GroupElement, i: int, j: int, rep: RepKind) -> CycloNum:
    pi, t = monomial_action(g, rep)
    if pi[j] - 1 == i:
        return root_of_unity(g.r, t[j])
    return zero(g.r)


def solomon_check(thetas: list[PolyForm], group_elements, rep: RepKind) -> dict:
    """Check the hypotheses of Solomon's theorem for a derivation family:
    each theta fixed by the whole listed group, and the coefficient-matrix
    determinant equal to a nonzero scalar times the arrangement polynomial Q."""
    elems = list(group_elements)
    n = thetas[0].n
    invariant = all(act_form(g, th, rep) == th for g in elems for th in thetas)
    rows = [
        [th.components.get((i,), Polynomial.zero(n)) for i in range(1, n + 1)]
        for th in thetas
    ]
    det = _poly_matrix_determinant(rows)
    Q = reflection_arrangement_polynomial(elems, rep)
    if det.is_zero():
        determinant_is_q = False
    else:
        key = next(iter(sorted(Q.terms, reverse=True)))
        if key not in det.terms:
            determinant_is_q = False
        else:
            c = det.terms[key] / Q.terms[key]
            determinant_is_q = (not c.is_zero()) and det == Q * c
    return {"invariant": invariant, "determinant_is_Q": determinant_is_q}


# -- characters and the Reynolds projector -----------------------------------


class CharacterError(ValueError):
    pass


@dataclass(frozen=True)
class CharacterTable:
    """A linear character of a listed subgroup: element -> CycloNum."""

    subgroup: tuple[GroupElement, ...]
    values: dict

    def __call__(self, h: GroupElement) -> CycloNum:
        return self.values[h]

    def check_multiplicative(self, limit: int = 60):
        """Verify value(gh) = value(g) value(h); exhaustive for small
        subgroups, on a deterministic sample of pairs otherwise."""
        els = self.subgroup
        if len(els) <= limit:
            pairs = [(g, h) for g in els for h in els]
        else:
            step = max(1, len(els) // limit)
            sample = els[::step]
            pairs = [(g, h) for g in sample for h in sample[:4]]
        for g, h in pairs:
            if self.values[multiply(g, h)] != self.values[g] * self.values[h]:
                raise CharacterError("character is not multiplicative on the subgroup")


def trivial_character(subgroup) -> CharacterTable:
    els = tuple(subgroup)
    return CharacterTable(els, {h: one() for h in els})


def _pivot_rows(vectors, n):
    """Row indices making the n x m matrix of column vectors invertible."""
    W = CycloMatrix([[vectors[j][i] for j in range(len(vectors))] for i in range(n)])
    pivots = W.transpose()._rref()[1]
    return W, list(pivots)


def subspace_pivot_data(subspace, n):
    """Precomputed (W, pivot rows, inverse of the pivot block) for repeated
    restrictions to one subspace."""
    vectors = [tuple(cyclo(x) for x in v) for v in subspace]
    m = len(vectors)
    W, pivots = _pivot_rows(vectors, n)
    if len(pivots) != m:
        raise ValueError("subspace basis is linearly dependent")
    WR_inv = CycloMatrix([[W.entries[i][j] for j in range(m)] for i in pivots]).inverse()
    return W, pivots, WR_inv


def restriction_matrix(g: GroupElement, rep: RepKind, subspace, pivot_data=None):
    """Matrix C of g on the span of the subspace vectors: g.w_j = sum C[i][j] w_i.

    Raises ValueError if the subspace is not g-stable.
    """
    n = g.n
    m = len(subspace)
    if pivot_data is None:
        pivot_data = subspace_pivot_data(subspace, n)
    W, pivots, WR_inv = pivot_data
    pi, t = monomial_action(g, rep)
    # image matrix U = M_g W, using the monomial structure of M_g
    pi_inv = [0] * n
    for i in range(n):
        pi_inv[pi[i] - 1] = i
    U = [
        [W.entries[pi_inv[a]][j] * root_of_unity(g.r, t[pi_inv[a]]) for j in range(m)]
        for a in range(n)
    ]
    C = WR_inv * CycloMatrix([U[i] for i in pivots])
    # stability check on the non-pivot rows (pivot rows hold by construction)
    pivset = set(pivots)
    for a in range(n):
        if a in pivset:
            continue
        for j in range(m):
            s = zero()
            for i2 in range(m):
                s = s + W.entries[a][i2] * C.entries[i2][j]
            if s != U[a][j]:
                raise ValueError("subspace is not stable under the group element")
    return C


def _monomial_profile(C: CycloMatrix, field_order: int):
    """(pi, texp) if C is monomial with root-of-unity entries, else None.
    C maps u_j to zeta^{texp[j]} u_{pi[j]} (0-based)."""
    m = C.rows
    pi = [None] * m
    texp = [None] * m
    for j in range(m):
        nz = [i for i in range(m) if not C.entries[i][j].is_zero()]
        if len(nz) != 1:
            return None
        t = as_root_exponent(C.entries[nz[0]][j], field_order)
        if t is None:
            return None
        pi[j] = nz[0]
        texp[j] = t
    return tuple(pi), tuple(texp)


def _monomials_of_degree(m: int, d: int):
    """Exponent tuples of total degree d in m symbols, lexicographically
    descending (v_1^d first)."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + (k,), remaining - k, slots - 1)

    if m == 0:
        return [()] if d == 0 else []
    rec((), d, m)
    return out


def reynolds_apply(subgroup, chi: CharacterTable, rep: RepKind, form: PolyForm) -> PolyForm:
    """The projector (1/|H|) sum_h chi(h)^{-1} h applied to an ambient form."""
    els = list(subgroup)
    acc = PolyForm.zero(form.n)
    for h in els:
        acc = acc + act_form(h, form, rep).scale(chi(h).invert())
    return acc.scale(Fraction(1, len(els)))


def reynolds_semiinvariant_basis(
    subgroup,
    chi: CharacterTable,
    rep: RepKind,
    poly_degree: int,
    form_degree: int,
    subspace=None,
    complement=None,
) -> list[PolyForm]:
    """Echelon-canonical basis of the chi-semi-invariants of polynomial
    degree exactly `poly_degree` and form degree `form_degree`, inside the
    span of monomial-times-wedge elements built on the given subspace
    (polynomial variables from the subspace basis, wedge factors from its
    duals).  `subspace=None` means the ambient coordinate space.

    The projector is summed orbit-by-orbit when every subgroup element acts
    monomially (with root-of-unity scalars) on the subspace; a dense
    fallback handles arbitrary actions.
    """
    elems = list(subgroup)
    if not elems:
        raise ValueError("empty subgroup")
    chi.check_multiplicative()
    r = elems[0].r
    n = elems[0].n
    ambient = subspace is None
    if ambient:
        m = n
        vectors = None
        pivot_data = None
    else:
        vectors = [tuple(cyclo(x) for x in v) for v in subspace]
        m = len(vectors)
        pivot_data = subspace_pivot_data(vectors, n)

    if form_degree < 0 or form_degree > m or poly_degree < 0:
        return []

    monos = _monomials_of_degree(m, poly_degree)
    wedges = list(combinations(range(m), form_degree))
    basis = [(mu, S) for mu in monos for S in wedges]
    if not basis:
        return []
    index = {b: i for i, b in enumerate(basis)}

    # restriction matrices first, so the common field order F is final before
    # any root-of-unity exponent is taken relative to it
    F = lcm(2, r)
    for v in chi.values.values():
        F = lcm(F, v.order)
    mats = []
    if not ambient:
        for h in elems:
            C = restriction_matrix(h, rep, vectors, pivot_data)
            F = lcm(F, C.order)
            mats.append(C)

    fast_actions = []
    use_dense = False
    for pos, h in enumerate(elems):
        if ambient:
            pi_raw, t_raw = monomial_action(h, rep)
            profile = (tuple(p - 1 for p in pi_raw), tuple(t * (F // r) for t in t_raw))
        else:
            profile = _monomial_profile(mats[pos], F)
        ce = as_root_exponent(chi(h), F)
        if profile is None or ce is None:
            use_dense = True
            break
        fast_actions.append((profile[0], profile[1], ce))

    if use_dense:
        rows = _reynolds_dense(elems, chi, rep, vectors, pivot_data, basis, index, m)
    else:
        rows = _reynolds_orbits(fast_actions, F, basis, index, len(elems))

    rows = echelon_rows(rows)
    return [
        _assemble_polyform(row, basis, n, m, vectors, complement, form_degree, ambient)
        for row in rows
    ]


def _reynolds_orbits(actions, F, basis, index, order):
    """Projector images of one representative per monomial orbit.

    Each (pi, texp, chi_e) sends (mu, S) to zeta_F^e (mu', S') with a single
    integer exponent e, so coefficient sums are accumulated as counters per
    exponent class and materialized into cyclotomic numbers once."""
    visited = [False] * len(basis)
    out = []
    half = F // 2
    zeta_cache = [root_of_unity(F, e) for e in range(F)]
    inv_order = Fraction(1, order)
    for start, (mu, S) in enumerate(basis):
        if visited[start]:
            continue
        counts: dict = {}
        for pi, texp, chi_e in actions:
            img_mu = [0] * len(mu)
            e = -chi_e
            for j, k in enumerate(mu):
                if k:
                    img_mu[pi[j]] = k
                    e += texp[j] * k
            imgS, sign = _sort_with_sign(pi[j] for j in S)
            for j in S:
                e -= texp[j]
            if sign < 0:
                e += half
            key = (tuple(img_mu), imgS)
            slot = counts.setdefault(key, [0] * F)
            slot[e % F] += 1
        vec = {}
        for key, slot in counts.items():
            idx = index[key]
            visited[idx] = True
            coeff = zero(F)
            for e, cnt in enumerate(slot):
                if cnt:
                    coeff = coeff + zeta_cache[e] * cnt
            if not coeff.is_zero():
                vec[idx] = coeff * inv_order
        if vec:
            out.append(vec)
    return out


def _reynolds_dense(elems, chi, rep, vectors, pivot_data, basis, index, m):
    """Projector images of every basis element under arbitrary subspace actions."""
    order = len(elems)
    mats = []
    for h in elems:
        if vectors is None:
            C = CycloMatrix(
                [[matrix_entry(h, i, j, rep) for j in range(m)] for i in range(m)]
            )
        else:
            C = restriction_matrix(h, rep, vectors, pivot_data)
        D = C.inverse().transpose()  # contragredient action on the duals
        mats.append((C, D, chi(h).invert()))
    out = []
    for mu, S in basis:
        acc: dict = {}
        for C, D, cval in mats:
            # polynomial image: product over variables of (column j of C)^mu_j
            polys = {(0,) * m: one()}
            for j, k in enumerate(mu):
                for _ in range(k):
                    new: dict = {}
                    for e, c in polys.items():
                        for i in range(m):
                            cij = C.entries[i][j]
                            if cij.is_zero():
                                continue
                            key = tuple(x + (1 if t == i else 0) for t, x in enumerate(e))
                            val = c * cij
                            new[key] = new[key] + val if key in new else val
                    polys = new
            # wedge image: expand columns of D over k-subsets
            for T in combinations(range(m), len(S)):
                sub = CycloMatrix([[D.entries[a][b] for b in S] for a in T]) if S else None
                dt = sub.determinant() if S else one()
                if dt.is_zero():
                    continue
                for e, c in polys.items():
                    key = index.get((e, T))
                    if key is None:
                        continue
                    val = c * dt * cval
                    acc[key] = acc[key] + val if key in acc else val
        vec = {k: v * Fraction(1, order) for k, v in acc.items() if not v.is_zero()}
        if vec:
            out.append(vec)
    return out


def _assemble_polyform(row, basis, n, m, vectors, complement, form_degree, ambient):
    """Convert a sparse row over the (monomial, wedge) basis into an ambient
    PolyForm, substituting subspace vectors and expanding subspace duals."""
    if ambient:
        comps: dict = {}
        for idx, c in row.items():
            mu, S = basis[idx]
            wedge = tuple(i + 1 for i in S)
            p = Polynomial.monomial(n, mu, c)
            comps[wedge] = comps[wedge] + p if wedge in comps else p
        return PolyForm(n, comps)

    # powers of the subspace vectors as ambient polynomials, cached
    subs_polys = []
    for v in vectors:
        f = Polynomial(n, {})
        for i, c in enumerate(v):
            if not c.is_zero():
                f = f + Polynomial.monomial(n, tuple(1 if t == i else 0 for t in range(n)), c)
        subs_polys.append(f)
    pow_cache: dict = {}

    def vec_power(j, k):
        key = (j, k)
        if key not in pow_cache:
            pow_cache[key] = subs_polys[j] ** k
        return pow_cache[key]

    dual_rows = None
    if form_degree > 0:
        if m == n:
            B = CycloMatrix([[vectors[j][i] for j in range(m)] for i in range(n)])
        else:
            if complement is None:
                raise ValueError(
                    "a complement basis is required to express subspace duals "
                    "in ambient coordinates"
                )
            cols = list(vectors) + [tuple(cyclo(x) for x in v) for v in complement]
            if len(cols) != n:
                raise ValueError("subspace plus complement must span the ambient space")
            B = CycloMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
        dual_rows = B.inverse().entries[:m]  # row j = ambient covector of u_j-dual

    out = PolyForm.zero(n)
    for idx, c in row.items():
        mu, S = basis[idx]
        p = Polynomial.constant(n, c)
        for j, k in enumerate(mu):
            if k:
                p = p * vec_power(j, k)
        if not S:
            out = out + PolyForm(n, {(): p})
            continue
        for T in combinations(range(n), form_degree):
            sub = CycloMatrix([[dual_rows[a][b] for b in T] for a in S])
            dt = sub.determinant()
            if dt.is_zero():
                continue
            wedge = tuple(i + 1 for i in T)
            out = out + PolyForm(n, {wedge: p * dt})
    return out
