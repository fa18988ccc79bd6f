"""Finitely presented graded algebras with straightening to PBW normal form.

A presentation fixes an ordered generator alphabet.  Words are rewritten by
replacing descending adjacent pairs and capped powers until the word is
sorted with all exponents below their caps; when the rule system is locally
confluent (see :func:`check_overlaps`) this sorted word is the unique
normal form and the normal monomials are a linear basis.

Elements and tensor elements are exact sparse rational combinations of
normal-form monomials.  Everything is immutable after construction and all
operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import NonTerminationError, PresentationError

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

SUPER = "super"
ORDINARY = "ordinary"

DEFAULT_STEP_BUDGET = 10**7


@dataclass(frozen=True)
class Generator:
    """One letter of the alphabet.

    ``pbw_index`` is the position in the normal order, ``exp_cap`` the
    exponent at which a power rule fires (2 for odd generators and for
    involutive grouplikes), ``z_degree`` an optional integer grading.
    """

    name: str
    parity: int
    pbw_index: int
    z_degree: Optional[int] = None
    exp_cap: Optional[int] = None


def monomial_key(m):
    """Canonical sort key: total degree, then exponent vector."""
    return (sum(m), m)


def tensor_key(key):
    return tuple(monomial_key(m) for m in key)


class AlgebraPresentation:
    """Ordered generators plus straightening rules.

    ``swap_rules`` maps a descending pair ``(hi, lo)`` (``hi > lo`` in PBW
    position) to the normal form of ``g_hi * g_lo`` given as a mapping
    ``monomial -> coefficient``.  ``power_rules`` maps a capped generator
    index to the normal form of ``g ** cap``.  ``mode`` selects Koszul
    signs (``"super"``) or none (``"ordinary"``) in tensor arithmetic.
    """

    def __init__(self, generators: Sequence[Generator], swap_rules, power_rules,
                 mode: str = SUPER, name: str = ""):
        self.generators = tuple(generators)
        self.mode = mode
        self.name = name or "algebra"
        self.n = len(self.generators)
        self._validate_generators()
        self._by_name = {g.name: g.pbw_index for g in self.generators}
        self._parities = tuple(g.parity for g in self.generators)
        self._caps = {g.pbw_index: g.exp_cap for g in self.generators
                      if g.exp_cap is not None}
        self.swap_rules = {k: dict(v) for k, v in swap_rules.items()}
        self.power_rules = {k: dict(v) for k, v in power_rules.items()}
        self._validate_rules()
        # rule right-hand sides pre-expanded to letter words for splicing
        self._swap_rhs = {k: self._expand_rhs(v) for k, v in self.swap_rules.items()}
        self._power_rhs = {k: self._expand_rhs(v) for k, v in self.power_rules.items()}
        self._mul_cache = {}

    # -- construction checks -------------------------------------------------

    def _validate_generators(self):
        if self.mode not in (SUPER, ORDINARY):
            raise PresentationError(f"unknown extension mode {self.mode!r}")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be unique")
        if sorted(g.pbw_index for g in self.generators) != list(range(self.n)):
            raise PresentationError("pbw indices must be a permutation of 0..n-1")
        if [g.pbw_index for g in self.generators] != list(range(self.n)):
            raise PresentationError("generators must be listed in pbw order")
        for g in self.generators:
            if g.parity not in (0, 1):
                raise PresentationError(f"bad parity for {g.name}")
            if g.exp_cap is not None and g.exp_cap < 1:
                raise PresentationError(f"bad exponent cap for {g.name}")

    def _validate_rules(self):
        for hi in range(self.n):
            for lo in range(hi):
                if (hi, lo) not in self.swap_rules:
                    raise PresentationError(
                        f"missing swap rule for {self.gen_name(hi)}*{self.gen_name(lo)}")
        for (hi, lo), rhs in self.swap_rules.items():
            if not (0 <= lo < hi < self.n):
                raise PresentationError(f"bad swap rule key {(hi, lo)}")
            self._validate_rhs(rhs, lhs_degree=2,
                               lhs_parity=(self._parities[hi] + self._parities[lo]) % 2,
                               what=f"{self.gen_name(hi)}*{self.gen_name(lo)}")
        for idx, cap in self._caps.items():
            if idx not in self.power_rules:
                raise PresentationError(
                    f"capped generator {self.gen_name(idx)} lacks a power rule")
        for idx, rhs in self.power_rules.items():
            cap = self._caps.get(idx)
            if cap is None:
                raise PresentationError(
                    f"power rule for uncapped generator {self.gen_name(idx)}")
            self._validate_rhs(rhs, lhs_degree=cap,
                               lhs_parity=(cap * self._parities[idx]) % 2,
                               what=f"{self.gen_name(idx)}^{cap}")

    def _validate_rhs(self, rhs, lhs_degree, lhs_parity, what):
        for m, c in rhs.items():
            if not c:
                raise PresentationError(f"zero coefficient stored in rule {what}")
            if not self.is_normal_monomial(m):
                raise PresentationError(f"rule {what} has a non-normal monomial")
            if sum(m) > lhs_degree:
                raise PresentationError(
                    f"rule {what} raises filtration degree; rewriting may not terminate")
            if self.monomial_parity(m) != lhs_parity:
                raise PresentationError(f"rule {what} is not parity-homogeneous")

    def _expand_rhs(self, rhs):
        return tuple((c, self.monomial_letters(m)) for m, c in sorted(rhs.items()))

    # -- basic queries --------------------------------------------------------

    def gen_name(self, idx: int) -> str:
        return self.generators[idx].name

    def gen_index(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r} in {self.name}") from None

    def unit_monomial(self):
        return (0,) * self.n

    def monomial(self, **exps) -> tuple:
        m = [0] * self.n
        for name, e in exps.items():
            m[self.gen_index(name)] = e
        return tuple(m)

    def monomial_letters(self, m) -> tuple:
        letters = []
        for idx, e in enumerate(m):
            letters.extend([idx] * e)
        return tuple(letters)

    def monomial_parity(self, m) -> int:
        return sum(e * p for e, p in zip(m, self._parities)) % 2

    def monomial_z_degree(self, m) -> int:
        total = 0
        for idx, e in enumerate(m):
            if not e:
                continue
            z = self.generators[idx].z_degree
            if z is None:
                raise PresentationError(
                    f"generator {self.gen_name(idx)} has no z-degree")
            total += e * z
        return total

    def has_z_degrees(self) -> bool:
        return all(g.z_degree is not None for g in self.generators)

    def is_normal_monomial(self, m) -> bool:
        if len(m) != self.n or any(e < 0 for e in m):
            return False
        return all(m[idx] < cap for idx, cap in self._caps.items())

    # -- element constructors --------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial(): ONE})

    def scalar(self, c) -> "Element":
        c = Fraction(c)
        return Element(self, {self.unit_monomial(): c} if c else {})

    def gen(self, name: str) -> "Element":
        m = [0] * self.n
        m[self.gen_index(name)] = 1
        return Element(self, {tuple(m): ONE})

    def element(self, coeffs: Mapping) -> "Element":
        out = {}
        for m, c in coeffs.items():
            m = tuple(m)
            if not self.is_normal_monomial(m):
                raise PresentationError(f"{m} is not a normal monomial of {self.name}")
            c = Fraction(c)
            if c:
                out[m] = c
        return Element(self, out)

    def monomial_element(self, m) -> "Element":
        return Element(self, {tuple(m): ONE})

    def enumerate_monomials(self, max_degree: int, z_degree: Optional[int] = None):
        """All normal monomials of filtration degree <= max_degree, sorted."""
        out = []

        def rec(idx, remaining, acc):
            if idx == self.n:
                out.append(tuple(acc))
                return
            cap = self._caps.get(idx)
            top = remaining if cap is None else min(remaining, cap - 1)
            for e in range(top + 1):
                acc.append(e)
                rec(idx + 1, remaining - e, acc)
                acc.pop()

        rec(0, max_degree, [])
        if z_degree is not None:
            out = [m for m in out if self.monomial_z_degree(m) == z_degree]
        out.sort(key=monomial_key)
        return out

    # -- rewriting --------------------------------------------------------------

    def normalize(self, word: Iterable, coeff=ONE,
                  max_steps: int = DEFAULT_STEP_BUDGET) -> "Element":
        """Normal form of ``coeff * (product of the listed generators)``.

        ``word`` may contain generator names or pbw indices; the empty word
        is the identity.  Raises :class:`NonTerminationError` if the step
        budget is exhausted.
        """
        letters = tuple(self.gen_index(w) if isinstance(w, str) else int(w)
                        for w in word)
        for idx in letters:
            if not 0 <= idx < self.n:
                raise PresentationError(f"generator index {idx} out of range")
        out = {}
        budget = [max_steps]
        self._normalize_word(Fraction(coeff), letters, out, budget)
        return Element(self, out)

    def _first_redex(self, w):
        caps = self._caps
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if a > b:
                return p, 2, self._swap_rhs[(a, b)]
            if a == b:
                cap = caps.get(a)
                if cap is not None and p + cap <= len(w) \
                        and all(w[p + k] == a for k in range(cap)):
                    return p, cap, self._power_rhs[a]
        return None

    def _normalize_word(self, coeff, word, out, budget):
        if not coeff:
            return
        stack = [(coeff, tuple(word))]
        while stack:
            c, w = stack.pop()
            budget[0] -= 1
            if budget[0] < 0:
                raise NonTerminationError(
                    f"rewrite step budget exhausted in {self.name}")
            redex = self._first_redex(w)
            if redex is None:
                m = [0] * self.n
                for idx in w:
                    m[idx] += 1
                m = tuple(m)
                new = out.get(m, ZERO) + c
                if new:
                    out[m] = new
                else:
                    out.pop(m, None)
                continue
            p, span, rhs = redex
            prefix, suffix = w[:p], w[p + span:]
            for rc, letters in rhs:
                stack.append((c * rc, prefix + letters + suffix))

    def mul_monomials(self, m1, m2, max_steps: int = DEFAULT_STEP_BUDGET):
        """Normal form of the product of two normal monomials, as a raw dict."""
        key = (m1, m2)
        cached = self._mul_cache.get(key)
        if cached is None:
            out = {}
            word = self.monomial_letters(m1) + self.monomial_letters(m2)
            self._normalize_word(ONE, word, out, [max_steps])
            cached = out
            self._mul_cache[key] = cached
        return cached

    def _require_same(self, other):
        if self is not other:
            raise PresentationError(
                f"presentation mismatch: {self.name} vs {other.name}")

    def tensor_one(self, legs: int = 2) -> "TensorElement":
        return TensorElement(self, legs, {(self.unit_monomial(),) * legs: ONE})


def _format_coeff_monomial(pres, m, c):
    if not any(m):
        return str(c)
    parts = []
    for idx, e in enumerate(m):
        if not e:
            continue
        name = pres.gen_name(idx)
        parts.append(name if e == 1 else f"{name}^{e}")
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def _format_terms(pres, items, fmt_one):
    """Render sorted (key, coeff) pairs with +/- joining."""
    if not items:
        return "0"
    pieces = []
    for i, (k, c) in enumerate(items):
        if i == 0:
            pieces.append(fmt_one(k, c))
        elif c < 0:
            pieces.append(" - " + fmt_one(k, -c))
        else:
            pieces.append(" + " + fmt_one(k, c))
    return "".join(pieces)


class Element:
    """A finite rational combination of normal-form monomials.

    Treated as immutable; supports +, -, * (by scalars and elements) and
    ** with a non-negative integer.  Equality is exact map equality.
    """

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: AlgebraPresentation, coeffs):
        self.alg = alg
        self.coeffs = coeffs

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((sum(m) for m in self.coeffs), default=0)

    def parity(self) -> Optional[int]:
        parities = {self.alg.monomial_parity(m) for m in self.coeffs}
        if len(parities) == 1:
            return parities.pop()
        return None

    def z_degree(self) -> Optional[int]:
        degrees = {self.alg.monomial_z_degree(m) for m in self.coeffs}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def items(self):
        return self.coeffs.items()

    def coefficient(self, m) -> Fraction:
        return self.coeffs.get(tuple(m), ZERO)

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self.alg._require_same(other.alg)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            new = out.get(m, ZERO) + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        return Element(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.alg, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self.alg._require_same(other.alg)
            out = {}
            for m1, c1 in self.coeffs.items():
                for m2, c2 in other.coeffs.items():
                    c12 = c1 * c2
                    for m, c in self.alg.mul_monomials(m1, m2).items():
                        new = out.get(m, ZERO) + c12 * c
                        if new:
                            out[m] = new
                        else:
                            out.pop(m, None)
            return Element(self.alg, out)
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        return NotImplemented

    def _scaled(self, c: Fraction):
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {m: c * v for m, v in self.coeffs.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.alg.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg is other.alg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.alg), frozenset(self.coeffs.items())))

    def outer(self, other: "Element") -> "TensorElement":
        """The simple tensor self (x) other."""
        self.alg._require_same(other.alg)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                out[(m1, m2)] = c1 * c2
        return TensorElement(self.alg, 2, out)

    def __str__(self):
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)
        return _format_terms(self.alg, items,
                             lambda m, c: _format_coeff_monomial(self.alg, m, c))

    def __repr__(self):
        return f"<{self.alg.name}: {self}>"


class TensorElement:
    """A sparse combination of tuples of normal monomials (tensor legs)."""

    __slots__ = ("alg", "legs", "coeffs")

    def __init__(self, alg: AlgebraPresentation, legs: int, coeffs):
        self.alg = alg
        self.legs = legs
        self.coeffs = coeffs

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self.alg._require_same(other.alg)
        if self.legs != other.legs:
            raise PresentationError("tensor leg count mismatch")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            new = out.get(k, ZERO) + c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return TensorElement(self.alg, self.legs, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.alg, self.legs,
                             {k: -c for k, c in self.coeffs.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return TensorElement(self.alg, self.legs, {})
            return TensorElement(self.alg, self.legs,
                                 {k: c * v for k, v in self.coeffs.items()})
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return self.tensor_mul(other, self.alg.mode)
        if isinstance(other, (int, Fraction)):
            return self.__rmul__(other)
        return NotImplemented

    def tensor_mul(self, other: "TensorElement", mode: Optional[str] = None):
        """Componentwise product; Koszul signs if ``mode == "super"``.

        In super mode the sign for one pair of terms is
        ``prod_{i<j} (-1)^{p(other_i) p(self_j)}``, i.e. the factors of the
        right operand pass the later legs of the left operand.
        """
        self.alg._require_same(other.alg)
        if self.legs != other.legs:
            raise PresentationError("tensor leg count mismatch")
        if mode is None:
            mode = self.alg.mode
        alg = self.alg
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                c = c1 * c2
                if mode == SUPER:
                    exp = 0
                    for i in range(self.legs):
                        pi = alg.monomial_parity(k2[i])
                        if pi:
                            for j in range(i + 1, self.legs):
                                exp += alg.monomial_parity(k1[j])
                    if exp % 2:
                        c = -c
                factors = [alg.mul_monomials(k1[i], k2[i]) for i in range(self.legs)]
                _accumulate_outer(out, factors, c)
        return TensorElement(alg, self.legs, out)

    def apply_element_map(self, fn, leg: int) -> "TensorElement":
        """Apply a linear, parity-even map (monomial -> Element) to one leg."""
        out = {}
        for k, c in self.coeffs.items():
            image = fn(k[leg])
            for m, cm in image.coeffs.items():
                key = k[:leg] + (m,) + k[leg + 1:]
                new = out.get(key, ZERO) + c * cm
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return TensorElement(self.alg, self.legs, out)

    def apply_tensor_map(self, fn, leg: int) -> "TensorElement":
        """Apply a map (monomial -> TensorElement) to one leg, splicing legs."""
        out = {}
        extra = None
        for k, c in self.coeffs.items():
            image = fn(k[leg])
            extra = image.legs
            for ms, cm in image.coeffs.items():
                key = k[:leg] + ms + k[leg + 1:]
                new = out.get(key, ZERO) + c * cm
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        if extra is None:
            extra = 2  # zero tensor: leg count of the image is conventional
        return TensorElement(self.alg, self.legs - 1 + extra, out)

    def contract_scalar(self, fn, leg: int) -> "TensorElement":
        """Apply a map (monomial -> Fraction) to one leg and drop the leg."""
        out = {}
        for k, c in self.coeffs.items():
            s = fn(k[leg])
            if not s:
                continue
            key = k[:leg] + k[leg + 1:]
            new = out.get(key, ZERO) + c * s
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return TensorElement(self.alg, self.legs - 1, out)

    def as_element(self) -> Element:
        if self.legs != 1:
            raise PresentationError("as_element needs exactly one leg")
        return Element(self.alg, {k[0]: c for k, c in self.coeffs.items()})

    def fold_mul(self) -> Element:
        """Multiply all legs together (the multiplication map of the algebra)."""
        out = {}
        budget = [DEFAULT_STEP_BUDGET]
        for k, c in self.coeffs.items():
            word = ()
            for m in k:
                word += self.alg.monomial_letters(m)
            self.alg._normalize_word(c, word, out, budget)
        return Element(self.alg, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.alg is other.alg and self.legs == other.legs
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.alg), self.legs, frozenset(self.coeffs.items())))

    def __str__(self):
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

        def fmt(key, c):
            body = "(x)".join(
                _format_coeff_monomial(self.alg, m, ONE) if any(m) else "1"
                for m in key)
            if c == 1:
                return body
            if c == -1:
                return f"-{body}"
            return f"{c}*{body}"

        return _format_terms(self.alg, items, fmt)

    def __repr__(self):
        return f"<{self.alg.name} tensor: {self}>"


def _accumulate_outer(out, factors, coeff):
    """Add coeff * (outer product of per-leg raw dicts) into ``out``."""
    keys = [()]
    vals = [coeff]
    for factor in factors:
        new_keys, new_vals = [], []
        for k, v in zip(keys, vals):
            for m, c in factor.items():
                new_keys.append(k + (m,))
                new_vals.append(v * c)
        keys, vals = new_keys, new_vals
        if not keys:
            return
    for k, v in zip(keys, vals):
        new = out.get(k, ZERO) + v
        if new:
            out[k] = new
        else:
            out.pop(k, None)


# -- local confluence ------------------------------------------------------------


@dataclass
class Discrepancy:
    word: tuple
    left_first: Element
    right_first: Element


@dataclass
class ConfluenceReport:
    presentation_name: str
    overlaps_checked: int
    discrepancies: list = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return not self.discrepancies


def check_overlaps(pres: AlgebraPresentation, degree_bound: int = 12,
                   max_steps: int = DEFAULT_STEP_BUDGET) -> ConfluenceReport:
    """Resolve every overlap ambiguity of the rule system both ways.

    Overlap words are built from pairs of rule left-hand sides sharing a
    boundary (descending triples, and cap overlaps such as g^cap*g and
    g*g^cap).  An empty discrepancy list certifies local confluence, hence
    unique normal forms and a PBW basis for a terminating system.
    """
    if degree_bound < 3:
        raise ValueError("degree_bound must be at least 3")
    lhs = []
    for (hi, lo), _ in sorted(pres.swap_rules.items()):
        lhs.append(((hi, lo), pres._swap_rhs[(hi, lo)]))
    for idx in sorted(pres.power_rules):
        cap = pres._caps[idx]
        lhs.append(((idx,) * cap, pres._power_rhs[idx]))

    def reduce_with_first(word, pos, span, rhs):
        out = {}
        budget = [max_steps]
        prefix, suffix = word[:pos], word[pos + span:]
        for rc, letters in rhs:
            pres._normalize_word(rc, prefix + letters + suffix, out, budget)
        return Element(pres, out)

    report = ConfluenceReport(pres.name, 0)
    for w1, rhs1 in lhs:
        for w2, rhs2 in lhs:
            for k in range(1, min(len(w1), len(w2))):
                if w1[len(w1) - k:] != w2[:k]:
                    continue
                word = w1 + w2[k:]
                if len(word) > degree_bound:
                    continue
                report.overlaps_checked += 1
                left = reduce_with_first(word, 0, len(w1), rhs1)
                right = reduce_with_first(word, len(w1) - k, len(w2), rhs2)
                if left != right:
                    names = tuple(pres.gen_name(i) for i in word)
                    report.discrepancies.append(Discrepancy(names, left, right))
    return report
