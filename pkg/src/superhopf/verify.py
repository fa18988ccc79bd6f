"""Certificate-producing checks for Hopf axioms, adjoint actions, normality,
biproduct decompositions, and growth-adjacent identities.

Every check returns a :class:`CertificateReport`; a report is deterministic
given its inputs, parameters, and seed, and failures carry explicit
witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import ONE, ZERO, AlgebraPresentation, Element, monomial_key
from .errors import AlgebraError, DegreeBudgetError
from .hopf import BosonizedAlgebra, HopfStructureMaps
from .growth import FiltrationClosure
from .linalg import RowSpace, kernel_basis

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class CertificateReport:
    check_name: str
    status: str
    inputs: str = ""
    witnesses: list = field(default_factory=list)  # (input, expected, actual)
    parameters: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def add_witness(self, item, expected, actual):
        self.witnesses.append((str(item), str(expected), str(actual)))
        self.status = FAIL


def render_reports(reports: Sequence[CertificateReport]) -> str:
    """Line-oriented report: one CHECK header per check, indented witnesses."""
    lines = []
    for rep in reports:
        lines.append(f"CHECK {rep.check_name} {rep.status.upper()}")
        if rep.inputs:
            lines.append(f"    inputs: {rep.inputs}")
        for item, expected, actual in rep.witnesses:
            lines.append(f"    witness: {item} expected {expected} got {actual}")
        if rep.parameters:
            params = " ".join(f"{k}={rep.parameters[k]}" for k in sorted(rep.parameters))
            lines.append(f"    params: {params}")
    return "\n".join(lines) + "\n"


def render_summary(reports: Sequence[CertificateReport], extra=None) -> str:
    """Machine-readable key-value summary, merged by check name."""
    lines = []
    for k in sorted((extra or {})):
        lines.append(f"{k}={(extra or {})[k]}")
    for rep in sorted(reports, key=lambda r: r.check_name):
        lines.append(f"check.{rep.check_name}={rep.status.upper()}")
    return "\n".join(lines) + "\n"


# -- sampling -------------------------------------------------------------------


def random_element(pres: AlgebraPresentation, rng: random.Random,
                   max_degree: int, max_terms: int = 3,
                   monomials=None) -> Element:
    """A nonzero element with 1..max_terms monomials of degree <= max_degree.

    Coefficients are nonzero integers in [-3, 3]; monomials are uniform over
    the degree-bounded normal basis.  Deterministic given the rng state.
    """
    if monomials is None:
        monomials = pres.enumerate_monomials(max_degree)
    n_terms = rng.randint(1, max_terms)
    out = {}
    for _ in range(n_terms):
        m = monomials[rng.randrange(len(monomials))]
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        new = out.get(m, ZERO) + c
        if new:
            out[m] = new
        else:
            out.pop(m, None)
    if not out:
        m = monomials[rng.randrange(len(monomials))]
        out[m] = ONE
    return Element(pres, out)


def random_dense_element(pres: AlgebraPresentation, rng: random.Random,
                         max_degree: int, monomials=None) -> Element:
    """A generic element: every monomial of the bounded basis gets a
    coefficient drawn from the integers in [-3, 3]; resampled if zero."""
    if monomials is None:
        monomials = pres.enumerate_monomials(max_degree)
    while True:
        out = {}
        for m in monomials:
            c = rng.randint(-3, 3)
            if c:
                out[m] = Fraction(c)
        if out:
            return Element(pres, out)


def degree_bounded_monomial_elements(pres: AlgebraPresentation, max_degree: int):
    return [pres.monomial_element(m) for m in pres.enumerate_monomials(max_degree)]


# -- Hopf axioms ------------------------------------------------------------------


def check_coassociativity(H: HopfStructureMaps, test_set: Iterable[Element],
                          parameters=None) -> CertificateReport:
    """(Delta (x) id) Delta == (id (x) Delta) Delta on the test set."""
    rep = CertificateReport("coassociativity", PASS, parameters=dict(parameters or {}))
    count = 0
    for a in test_set:
        count += 1
        d = H.coproduct(a)
        left = d.apply_tensor_map(H.delta_monomial, 0)
        right = d.apply_tensor_map(H.delta_monomial, 1)
        if left != right:
            rep.add_witness(a, "(Delta(x)id)Delta = (id(x)Delta)Delta",
                            f"{left} vs {right}")
    rep.parameters["elements"] = count
    return rep


def check_counit(H: HopfStructureMaps, test_set: Iterable[Element],
                 parameters=None) -> CertificateReport:
    """(eps (x) id) Delta == id == (id (x) eps) Delta on the test set."""
    rep = CertificateReport("counit", PASS, parameters=dict(parameters or {}))
    count = 0
    for a in test_set:
        count += 1
        d = H.coproduct(a)
        left = d.contract_scalar(H.counit_monomial, 0).as_element()
        right = d.contract_scalar(H.counit_monomial, 1).as_element()
        if left != a:
            rep.add_witness(a, a, left)
        if right != a:
            rep.add_witness(a, a, right)
    rep.parameters["elements"] = count
    return rep


def check_antipode(H: HopfStructureMaps, test_set: Iterable[Element],
                   parameters=None) -> CertificateReport:
    """m(S (x) id) Delta == eps(.) 1 == m(id (x) S) Delta on the test set."""
    rep = CertificateReport("antipode", PASS, parameters=dict(parameters or {}))
    count = 0
    one = H.carrier.one()
    for a in test_set:
        count += 1
        d = H.coproduct(a)
        target = H.counit(a) * one
        left = d.apply_element_map(H.antipode_monomial, 0).fold_mul()
        right = d.apply_element_map(H.antipode_monomial, 1).fold_mul()
        if left != target:
            rep.add_witness(a, target, left)
        if right != target:
            rep.add_witness(a, target, right)
    rep.parameters["elements"] = count
    return rep


def check_bialgebra(H: HopfStructureMaps, pair_set, parameters=None) -> CertificateReport:
    """Delta(ab) == Delta(a) Delta(b) with the mode-appropriate tensor product."""
    rep = CertificateReport("bialgebra", PASS, parameters=dict(parameters or {}))
    count = 0
    for a, b in pair_set:
        count += 1
        left = H.coproduct(a * b)
        right = H.coproduct(a).tensor_mul(H.coproduct(b), H.mode)
        if left != right:
            rep.add_witness(f"({a}, {b})", left, right)
    rep.parameters["pairs"] = count
    return rep


def hopf_axiom_suite(H: HopfStructureMaps, monomial_degree: int = 3,
                     n_random: int = 100, random_degree: int = 4,
                     seed: int = 0, prefix: str = "") -> list:
    """The four Hopf-axiom checks on a standard test set.

    Test set: all generators, all monomials of degree <= monomial_degree,
    and n_random seeded random elements of degree <= random_degree.  The
    bialgebra check runs on generator pairs, monomial pairs of total degree
    <= random_degree, and consecutive random pairs.
    """
    pres = H.carrier
    rng = random.Random(seed)
    gens = [pres.gen(g.name) for g in pres.generators]
    monomials = degree_bounded_monomial_elements(pres, monomial_degree)
    basis = pres.enumerate_monomials(random_degree)
    randoms = [random_element(pres, rng, random_degree, monomials=basis)
               for _ in range(n_random)]
    test_set = gens + monomials + randoms
    pairs = [(a, b) for a in gens for b in gens]
    by_degree = [pres.monomial_element(m) for m in basis]
    pairs += [(a, b) for a in by_degree for b in by_degree
              if a.degree() + b.degree() <= random_degree]
    pairs += list(zip(randoms, randoms[1:]))
    params = {"monomialDegree": monomial_degree, "randomElements": n_random,
              "randomDegree": random_degree, "seed": seed, "algebra": pres.name}
    reports = [
        check_coassociativity(H, test_set, params),
        check_counit(H, test_set, params),
        check_antipode(H, test_set, params),
        check_bialgebra(H, pairs, params),
    ]
    if prefix:
        for rep in reports:
            rep.check_name = f"{prefix}.{rep.check_name}"
    return reports


# -- adjoint actions -----------------------------------------------------------------


def adjoint_left(H: HopfStructureMaps, a: Element, b: Element) -> Element:
    """(ad_l a)(b) = sum a1 * b * S(a2)."""
    out = H.carrier.zero()
    for (m1, m2), c in H.coproduct(a).items():
        out = out + c * (H.carrier.monomial_element(m1) * b
                         * H.antipode_monomial(m2))
    return out


def adjoint_right(H: HopfStructureMaps, a: Element, b: Element) -> Element:
    """(ad_r a)(b) = sum S(a1) * b * a2."""
    out = H.carrier.zero()
    for (m1, m2), c in H.coproduct(a).items():
        out = out + c * (H.antipode_monomial(m1) * b
                         * H.carrier.monomial_element(m2))
    return out


def check_ad_equals_bracket(g, B: BosonizedAlgebra) -> CertificateReport:
    """The left adjoint action restricted to Lie generators is the bracket."""
    rep = CertificateReport("ad-equals-bracket", PASS,
                            parameters={"algebra": B.carrier.name})
    pres = B.carrier
    for i in range(g.n):
        for j in range(g.n):
            a = pres.gen(g.basis[i].name)
            b = pres.gen(g.basis[j].name)
            ad = adjoint_left(B.hopf, a, b)
            bracket = pres.zero()
            for k, c in enumerate(g.table[i][j]):
                if c:
                    bracket = bracket + c * pres.gen(g.basis[k].name)
            if ad != bracket:
                rep.add_witness(f"({g.basis[i].name},{g.basis[j].name})", bracket, ad)
    rep.parameters["pairs"] = g.n * g.n
    return rep


# -- spanned subalgebras and normality --------------------------------------------------


class SpannedSubalgebra:
    """A subalgebra given by generating elements, with degree-bounded bases.

    The cache at level n spans all products of generators whose weights sum
    to at most n (each generator has weight 1 unless overridden; weight 0
    generators are closed within a level).  Bases are row-reduced with
    deterministic pivoting, so membership tests are exact and reproducible.
    """

    def __init__(self, parent: AlgebraPresentation, gens: Sequence[Element],
                 cached_degree: int, weights=None):
        self.parent = parent
        self.gens = list(gens)
        self.cached_degree = cached_degree
        self._closure = FiltrationClosure(parent, self.gens, weights=weights)
        self._closure.extend_to(cached_degree)

    @property
    def space(self) -> RowSpace:
        return self._closure.space

    def dim_at(self, level: int) -> int:
        return self._closure.dims[level]

    def basis_up_to(self, level: int):
        return self._closure.basis_up_to(level)

    def contains(self, a: Element) -> bool:
        return self.space.contains(a.coeffs)


def is_normal(B: BosonizedAlgebra, A: SpannedSubalgebra,
              degree_bound: int) -> CertificateReport:
    """Stability of A under both adjoint actions of every generator.

    Needs A cached to degree_bound + 2 (generator degree 1 plus the degree
    the antipode can add before normalization).
    """
    margin = 2
    if A.cached_degree < degree_bound + margin:
        raise DegreeBudgetError(
            f"subalgebra cache reaches degree {A.cached_degree}, "
            f"need {degree_bound + margin}")
    rep = CertificateReport("normality", PASS,
                            inputs=f"sub=<{', '.join(str(g) for g in A.gens)}>",
                            parameters={"degreeBound": degree_bound,
                                        "algebra": B.carrier.name})
    pres = B.carrier
    checked = 0
    for gen in pres.generators:
        h = pres.gen(gen.name)
        for a in A.basis_up_to(degree_bound):
            checked += 1
            la = adjoint_left(B.hopf, h, a)
            if not A.contains(la):
                rep.add_witness(f"ad_l({gen.name})({a})", "membership", la)
            ra = adjoint_right(B.hopf, h, a)
            if not A.contains(ra):
                rep.add_witness(f"ad_r({gen.name})({a})", "membership", ra)
    rep.parameters["actionsChecked"] = 2 * checked
    return rep


# -- grouplikes and skew primitives --------------------------------------------------


def check_grouplike(H: HopfStructureMaps, candidate: Element) -> bool:
    """Delta(c) == c (x) c and eps(c) == 1."""
    return (H.coproduct(candidate) == candidate.outer(candidate)
            and H.counit(candidate) == 1)


def find_skew_primitives(B: BosonizedAlgebra, grouplike: Element,
                         degree_bound: int):
    """Basis of {p : Delta(p) = p (x) 1 + g (x) p} within degree <= bound.

    Solved as an exact linear system over the normal monomials of bounded
    degree; returns a row-reduced list of elements.
    """
    H = B.hopf
    if not check_grouplike(H, grouplike):
        raise AlgebraError(f"{grouplike} is not grouplike")
    pres = B.carrier
    one = pres.one()
    monomials = pres.enumerate_monomials(degree_bound)
    columns = []
    for m in monomials:
        e = pres.monomial_element(m)
        defect = H.coproduct(e) - e.outer(one) - grouplike.outer(e)
        columns.append(dict(defect.coeffs))
    solutions = kernel_basis(columns, sort_key=lambda key: tuple(monomial_key(m) for m in key))
    space = RowSpace(monomial_key)
    for combo in solutions:
        vec = {}
        for idx, c in combo.items():
            m = monomials[idx]
            new = vec.get(m, ZERO) + c
            if new:
                vec[m] = new
            else:
                vec.pop(m, None)
        space.insert(vec)
    return [Element(pres, row) for row in space.reduced_basis()]


# -- biproduct decomposition -----------------------------------------------------------


def _intersection_with_u(B: BosonizedAlgebra, basis_elements):
    """Basis of span(basis_elements) with zero t-part, via an exact kernel."""
    t_index = B.t_index
    columns = []
    for e in basis_elements:
        columns.append({m: c for m, c in e.items() if m[t_index]})
    combos = kernel_basis(columns, sort_key=monomial_key)
    space = RowSpace(monomial_key)
    for combo in combos:
        vec = {}
        for idx, c in combo.items():
            for m, v in basis_elements[idx].items():
                new = vec.get(m, ZERO) + c * v
                if new:
                    vec[m] = new
                else:
                    vec.pop(m, None)
        space.insert(vec)
    return [Element(B.carrier, row) for row in space.reduced_basis()]


def biproduct_decomposition(B: BosonizedAlgebra, A: SpannedSubalgebra,
                            degree_bound: int) -> CertificateReport:
    """Certify A = (A `intersect` U) # K degreewise.

    The subalgebra is re-spanned with the grouplike t given filtration
    weight zero, which is the grading under which the group algebra factor
    exactly doubles each level.  Checks: the t-free part is closed under
    multiplication, under the coproduct (tensor-factor marginals stay in
    the part), and under the super antipode; and dim A_n equals twice the
    t-free dimension at every cached level.
    """
    pres = B.carrier
    t = B.t()
    rep = CertificateReport("biproduct", PASS,
                            inputs=f"sub=<{', '.join(str(g) for g in A.gens)}>",
                            parameters={"degreeBound": degree_bound,
                                        "algebra": pres.name})
    if not A.contains(t):
        raise AlgebraError("biproduct decomposition needs t in the subalgebra")
    weights = [0 if g == t else 1 for g in A.gens]
    graded = SpannedSubalgebra(pres, A.gens, degree_bound, weights=weights)

    inner_per_level = []
    for n in range(degree_bound + 1):
        level_basis = graded.basis_up_to(n)
        inner = _intersection_with_u(B, level_basis)
        inner_per_level.append(inner)
        if len(level_basis) != 2 * len(inner):
            rep.add_witness(f"dim A_{n}", f"2*dim(A cap U)_{n} = {2 * len(inner)}",
                            len(level_basis))
    inner = inner_per_level[degree_bound]
    inner_space = RowSpace(monomial_key)
    for e in inner:
        inner_space.insert(e.coeffs)

    # multiplicative closure of the t-free part
    for a in inner:
        for b in inner:
            if a.degree() + b.degree() > degree_bound:
                continue
            prod = a * b
            if not inner_space.contains(prod.coeffs):
                rep.add_witness(f"({a})*({b})", "in A cap U", prod)

    # closure under the super coproduct of the plain enveloping part (the
    # t-free part is a subcoalgebra of U, not of the smash product, whose
    # coproduct puts t-letters in the left legs); membership of a tensor in
    # span (x) span is equivalent to both marginal families lying in span
    for a in inner:
        d = B.u_maps.coproduct(B.restrict_to_u(a))
        left, right = {}, {}
        for (m1, m2), c in d.items():
            lm = left.setdefault(m2, {})
            lm[m1] = lm.get(m1, ZERO) + c
            rm = right.setdefault(m1, {})
            rm[m2] = rm.get(m2, ZERO) + c
        for m2 in sorted(left, key=monomial_key):
            marginal = B.include_from_u(Element(B.u_maps.carrier, left[m2]))
            if not inner_space.contains(marginal.coeffs):
                rep.add_witness(f"Delta_U({a}) left marginal at {m2}",
                                "in A cap U", marginal)
        for m1 in sorted(right, key=monomial_key):
            marginal = B.include_from_u(Element(B.u_maps.carrier, right[m1]))
            if not inner_space.contains(marginal.coeffs):
                rep.add_witness(f"Delta_U({a}) right marginal at {m1}",
                                "in A cap U", marginal)

    # antipode closure, using the super antipode of the plain enveloping part
    for a in inner:
        restricted = B.restrict_to_u(a)
        s_u = B.include_from_u(B.u_maps.antipode(restricted))
        if not inner_space.contains(s_u.coeffs):
            rep.add_witness(f"S_U({a})", "in A cap U", s_u)

    # the t-free part consists of coinvariants
    for a in inner:
        if not B.is_coinvariant(a):
            rep.add_witness(a, "coinvariant", "not coinvariant")

    rep.parameters["innerDimension"] = len(inner)
    return rep


# -- identities from the eigenvector calculus ------------------------------------------


def check_shift_identity(B: BosonizedAlgebra, w: Element, n_max: int,
                         h: Optional[Element] = None) -> CertificateReport:
    """For an ad(h)-eigenvector w of eigenvalue +-1: h^n w == w (h +- 1)^n."""
    pres = B.carrier
    if h is None:
        h = pres.gen("y")
    commutator = h * w - w * h
    eigenvalue = None
    for lam in (ONE, -ONE):
        if commutator == lam * w:
            eigenvalue = lam
            break
    if eigenvalue is None:
        raise AlgebraError(f"{w} is not an ad({h})-eigenvector of eigenvalue +-1")
    rep = CertificateReport("shift-identity", PASS,
                            inputs=f"w={w} eigenvalue={eigenvalue}",
                            parameters={"nMax": n_max, "algebra": pres.name})
    shifted = h + eigenvalue * pres.one()
    for n in range(n_max + 1):
        left = h ** n * w
        right = w * shifted ** n
        if left != right:
            rep.add_witness(f"n={n}", right, left)
    return rep


def check_sign_commuting_squares(B: BosonizedAlgebra, W: Sequence[Element],
                                 degree_bound: int) -> CertificateReport:
    """ab == +-ba for pairs from W plus t, and squares central up to the bound.

    The realized sign is recorded per pair (the grouplike t commutes or
    anticommutes by parity, so no single Koszul formula covers every pair).
    """
    pres = B.carrier
    for a in W:
        if a.parity() is None:
            raise AlgebraError(f"{a} is not parity-homogeneous")
    rep = CertificateReport("sign-commuting-squares", PASS,
                            parameters={"degreeBound": degree_bound,
                                        "algebra": pres.name})
    group = list(W) + [B.t()]
    signs = []
    for i, a in enumerate(group):
        for b in group[i:]:
            ab, ba = a * b, b * a
            if ab == ba:
                signs.append((a, b, "+"))
            elif ab == -ba:
                signs.append((a, b, "-"))
            else:
                rep.add_witness(f"({a},{b})", "ab = +-ba", ab - ba)
    rep.parameters["pairSigns"] = "; ".join(f"({a},{b}):{s}" for a, b, s in signs)
    cache = SpannedSubalgebra(pres, group, degree_bound)
    for a in group:
        sq = a * a
        for b in cache.basis_up_to(degree_bound):
            if sq * b != b * sq:
                rep.add_witness(f"[{a}^2, {b}]", pres.zero(), sq * b - b * sq)
    return rep


# -- nilpotency and zero divisors ---------------------------------------------------


def check_nilpotent_ideal(P: AlgebraPresentation, ideal_gens: Sequence[Element],
                          power: int, degree_bound: int) -> CertificateReport:
    """Products of `power` spanning elements of the two-sided ideal all vanish.

    The spanning set is the degree-bounded closure of the generators under
    one-sided multiplication by the algebra generators.
    """
    rep = CertificateReport("nilpotency", PASS,
                            inputs=f"ideal=<{', '.join(str(g) for g in ideal_gens)}>",
                            parameters={"power": power, "degreeBound": degree_bound,
                                        "algebra": P.name})
    seeds = [g for g in ideal_gens if not g.is_zero]
    for g in seeds:
        if g.degree() > degree_bound:
            raise DegreeBudgetError(
                f"ideal generator {g} exceeds the degree bound {degree_bound}")
    space = RowSpace(monomial_key)
    basis = []
    frontier = []
    for g in seeds:
        if space.insert(g.coeffs) is not None:
            basis.append(g)
            frontier.append(g)
    algebra_gens = [P.gen(g.name) for g in P.generators]
    while frontier:
        new_frontier = []
        for e in frontier:
            for g in algebra_gens:
                for prod in (e * g, g * e):
                    if prod.is_zero or prod.degree() > degree_bound:
                        continue
                    if space.insert(prod.coeffs) is not None:
                        stored = prod
                        basis.append(stored)
                        new_frontier.append(stored)
        frontier = new_frontier
    rep.parameters["spanDimension"] = len(basis)

    def products(depth, acc, label):
        if depth == 0:
            if not acc.is_zero:
                rep.add_witness(label, P.zero(), acc)
            return
        for i, e in enumerate(basis):
            if rep.witnesses and len(rep.witnesses) >= 5:
                return  # enough witnesses to be useful
            products(depth - 1, acc * e, f"{label}*[{i}]" if label else f"[{i}]")

    products(power, P.one(), "")
    return rep


def zero_divisor_scan(P: AlgebraPresentation, degree_bound: int, samples: int,
                      seed: int, max_terms: Optional[int] = None) -> CertificateReport:
    """Multiply seeded random nonzero pairs; report any zero product.

    By default the factors are dense generic elements, for which a vanishing
    product is a genuine finding (sparse near-monomial factors would merely
    rediscover the nilpotent generators; pass ``max_terms`` to sample those
    deliberately).  A clean scan is inconclusive: it cannot prove primality.
    """
    rng = random.Random(seed)
    monomials = P.enumerate_monomials(degree_bound)
    found = []
    for _ in range(samples):
        if max_terms is None:
            a = random_dense_element(P, rng, degree_bound, monomials=monomials)
            b = random_dense_element(P, rng, degree_bound, monomials=monomials)
        else:
            a = random_element(P, rng, degree_bound, max_terms=max_terms,
                               monomials=monomials)
            b = random_element(P, rng, degree_bound, max_terms=max_terms,
                               monomials=monomials)
        if (a * b).is_zero:
            found.append((a, b))
    status = FAIL if found else INCONCLUSIVE
    rep = CertificateReport("zero-divisors", status,
                            parameters={"degreeBound": degree_bound,
                                        "samples": samples, "seed": seed,
                                        "sampling": "dense" if max_terms is None
                                                    else f"sparse<={max_terms}",
                                        "found": len(found), "algebra": P.name})
    for a, b in found[:5]:
        rep.witnesses.append((f"({a})*({b})", "nonzero product", "0"))
    return rep


# -- expectation wrappers (used by the CLI suites) ---------------------------------------


def expect(report: CertificateReport, expected_status: str,
           name: Optional[str] = None) -> CertificateReport:
    """Meta-certificate: the wrapped check finished with the expected status."""
    ok = report.status == expected_status
    meta = CertificateReport(name or f"{report.check_name}.expected-{expected_status}",
                             PASS if ok else FAIL,
                             inputs=report.inputs,
                             parameters=dict(report.parameters))
    meta.parameters["innerStatus"] = report.status
    meta.parameters["expectedStatus"] = expected_status
    if not ok:
        meta.witnesses.append((report.check_name, expected_status, report.status))
    elif report.witnesses:
        # keep the inner witnesses for visibility (e.g. the expected-failure witness)
        meta.witnesses = [(i, e, a) for i, e, a in report.witnesses]
    return meta
