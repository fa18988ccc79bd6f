"""Finite-dimensional Lie superalgebras given by structure constants.

Basis vectors carry a parity and an optional integer grading.  Structure
constants are stored densely (the shipped algebras have at most five basis
elements).  Vectors are dense tuples of rationals in basis coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Generator
from .errors import AlgebraError, ParseError, UnsupportedFieldError
from .exprs import parse_linear_combination
from .linalg import RowSpace, kernel_basis

ZERO = Fraction(0)
ONE = Fraction(1)


def _to_vec(n, coords):
    vec = [ZERO] * n
    for k, v in coords.items():
        vec[k] = Fraction(v)
    return tuple(vec)


class LieSuperAlgebra:
    """Basis symbols with parities plus a table of brackets.

    ``brackets`` maps ``(i, j)`` to the coordinates of ``[b_i, b_j]`` as a
    mapping ``k -> coefficient``.  When only one orientation of a pair is
    supplied the other is filled in by super antisymmetry; pairs missing in
    both orientations default to zero.
    """

    def __init__(self, basis: Sequence[Generator], brackets, name: str = ""):
        self.basis = tuple(basis)
        self.name = name or "liesuper"
        self.n = len(self.basis)
        if [g.pbw_index for g in self.basis] != list(range(self.n)):
            raise AlgebraError("basis must be listed in pbw order")
        names = [g.name for g in self.basis]
        if len(set(names)) != len(names):
            raise AlgebraError("basis names must be unique")
        self._by_name = {g.name: g.pbw_index for g in self.basis}
        table = [[None] * self.n for _ in range(self.n)]
        for (i, j), coords in brackets.items():
            table[i][j] = _to_vec(self.n, coords)
        for i in range(self.n):
            for j in range(self.n):
                if table[i][j] is not None:
                    continue
                opposite = table[j][i]
                if opposite is not None and i != j:
                    sign = -ONE if (self.parity(i) * self.parity(j)) % 2 == 0 else ONE
                    table[i][j] = tuple(sign * c for c in opposite)
                else:
                    table[i][j] = (ZERO,) * self.n
        self.table = tuple(tuple(row) for row in table)

    # -- queries ---------------------------------------------------------------

    def parity(self, i: int) -> int:
        return self.basis[i].parity

    def index(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise AlgebraError(f"unknown basis name {name!r} in {self.name}") from None

    def basis_vector(self, name: str):
        vec = [ZERO] * self.n
        vec[self.index(name)] = ONE
        return tuple(vec)

    def vector_parity(self, vec) -> Optional[int]:
        parities = {self.parity(i) for i, c in enumerate(vec) if c}
        if len(parities) == 1:
            return parities.pop()
        if not parities:
            return 0
        return None

    def vector_z_degree(self, vec) -> Optional[int]:
        degrees = set()
        for i, c in enumerate(vec):
            if not c:
                continue
            z = self.basis[i].z_degree
            if z is None:
                return None
            degrees.add(z)
        if len(degrees) == 1:
            return degrees.pop()
        if not degrees:
            return 0
        return None

    def bracket(self, v, w):
        """[v, w] for dense coordinate vectors, extended bilinearly."""
        out = [ZERO] * self.n
        for i, a in enumerate(v):
            if not a:
                continue
            for j, b in enumerate(w):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def format_vector(self, vec) -> str:
        parts = []
        for i, c in enumerate(vec):
            if not c:
                continue
            name = self.basis[i].name
            if c == 1:
                term = name
            elif c == -1:
                term = f"-{name}"
            else:
                term = f"{c}*{name}"
            parts.append(term)
        if not parts:
            return "0"
        text = parts[0]
        for term in parts[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text

    # -- validation --------------------------------------------------------------

    def validate(self) -> "ValidationReport":
        """Check super antisymmetry, the super Jacobi identity, and gradings."""
        report = ValidationReport()
        n = self.n
        for i in range(n):
            for j in range(n):
                br = self.table[i][j]
                target = (self.parity(i) + self.parity(j)) % 2
                for k, c in enumerate(br):
                    if c and self.parity(k) != target:
                        report.violations.append(
                            f"parity: [{self.basis[i].name},{self.basis[j].name}] "
                            f"has a component of wrong parity ({self.basis[k].name})")
                zi, zj = self.basis[i].z_degree, self.basis[j].z_degree
                if zi is not None and zj is not None:
                    for k, c in enumerate(br):
                        zk = self.basis[k].z_degree
                        if c and zk is not None and zk != zi + zj:
                            report.violations.append(
                                f"z-grading: [{self.basis[i].name},{self.basis[j].name}] "
                                f"is not homogeneous of degree {zi + zj}")
                sign = ONE if (self.parity(i) * self.parity(j)) % 2 else -ONE
                mirrored = tuple(sign * c for c in self.table[j][i])
                if br != mirrored:
                    report.violations.append(
                        f"antisymmetry fails on ({self.basis[i].name},{self.basis[j].name})")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    # graded Leibniz: [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]
                    a = self.unit(i)
                    b = self.unit(j)
                    c = self.unit(k)
                    lhs = self.bracket(a, self.bracket(b, c))
                    rhs1 = self.bracket(self.bracket(a, b), c)
                    rhs2 = self.bracket(b, self.bracket(a, c))
                    sign = -ONE if (self.parity(i) * self.parity(j)) % 2 else ONE
                    rhs = tuple(x + sign * y for x, y in zip(rhs1, rhs2))
                    if lhs != rhs:
                        report.violations.append(
                            "jacobi fails on "
                            f"({self.basis[i].name},{self.basis[j].name},{self.basis[k].name})")
        return report

    def unit(self, i: int):
        vec = [ZERO] * self.n
        vec[i] = ONE
        return tuple(vec)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# -- the built-in example -----------------------------------------------------------


def _mat_mul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def pl11() -> LieSuperAlgebra:
    """The 2x2 matrix superalgebra with diagonal even part.

    Basis (in pbw order): x = identity, y = upper-left unit, u = upper-right
    unit (odd), v = lower-left unit (odd).  Brackets are computed from the
    matrix super-commutator AB - (-1)^{p(A)p(B)} BA.
    """
    F = Fraction
    mats = {
        "x": ((F(1), F(0)), (F(0), F(1))),
        "y": ((F(1), F(0)), (F(0), F(0))),
        "u": ((F(0), F(1)), (F(0), F(0))),
        "v": ((F(0), F(0)), (F(1), F(0))),
    }
    parities = {"x": 0, "y": 0, "u": 1, "v": 1}
    z_degrees = {"x": 2, "y": 0, "u": 1, "v": 1}
    order = ["x", "y", "u", "v"]
    basis = [Generator(name, parities[name], idx, z_degree=z_degrees[name])
             for idx, name in enumerate(order)]

    def decompose(M):
        # [[a,b],[c,d]] = d*x + (a-d)*y + b*u + c*v
        (a, b), (c, d) = M
        return {0: d, 1: a - d, 2: b, 3: c}

    brackets = {}
    for i, ni in enumerate(order):
        for j, nj in enumerate(order):
            A, B = mats[ni], mats[nj]
            AB = _mat_mul(A, B)
            BA = _mat_mul(B, A)
            sign = -1 if (parities[ni] * parities[nj]) % 2 else 1
            if sign == 1:
                comm = tuple(tuple(AB[r][s] - BA[r][s] for s in range(2)) for r in range(2))
            else:
                comm = tuple(tuple(AB[r][s] + BA[r][s] for s in range(2)) for r in range(2))
            brackets[(i, j)] = decompose(comm)
    return LieSuperAlgebra(basis, brackets, name="pl11")


# -- subspaces ------------------------------------------------------------------------


class SubSuperSpace:
    """A graded subspace stored as a fully reduced row-echelon basis.

    Spanning vectors must be parity-homogeneous; since homogeneous vectors
    of different parity have disjoint coordinate support, row reduction
    keeps the basis graded.
    """

    def __init__(self, parent: LieSuperAlgebra, vectors):
        self.parent = parent
        space = RowSpace()
        for vec in vectors:
            if parent.vector_parity(vec) is None:
                raise AlgebraError(
                    f"spanning vector {parent.format_vector(vec)} is not homogeneous")
            space.insert(_sparse(vec))
        self._space = space
        self.vectors = tuple(_dense(row, parent.n) for row in space.reduced_basis())

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, vec) -> bool:
        return self._space.contains(_sparse(vec))

    def express(self, vec):
        """Coordinates of ``vec`` in the stored basis, or None if outside."""
        residual = list(vec)
        coords = []
        for basis_vec in self.vectors:
            pivot = next(i for i, c in enumerate(basis_vec) if c)
            c = residual[pivot]
            coords.append(c)
            if c:
                for i, b in enumerate(basis_vec):
                    residual[i] -= c * b
        if any(residual):
            return None
        return tuple(coords)


def _sparse(vec):
    return {i: c for i, c in enumerate(vec) if c}


def _dense(row, n):
    vec = [ZERO] * n
    for k, v in row.items():
        vec[k] = v
    return tuple(vec)


def subalgebra_generated(g: LieSuperAlgebra, seeds) -> SubSuperSpace:
    """Smallest bracket-closed graded subspace containing the seeds."""
    sub = SubSuperSpace(g, seeds)
    while True:
        extra = []
        for v in sub.vectors:
            for w in sub.vectors:
                br = g.bracket(v, w)
                if any(br) and not sub.contains(br):
                    extra.append(br)
        if not extra:
            return sub
        sub = SubSuperSpace(g, list(sub.vectors) + extra)


@dataclass
class IdealCheck:
    is_ideal: bool
    witness: Optional[tuple] = None  # (basis vector, subspace vector, bracket)


def is_ideal(g: LieSuperAlgebra, s: SubSuperSpace) -> IdealCheck:
    """True iff [g, s] is contained in s; returns a witness pair otherwise."""
    for i in range(g.n):
        e = g.unit(i)
        for v in s.vectors:
            br = g.bracket(e, v)
            if not s.contains(br):
                return IdealCheck(False, (e, v, br))
    return IdealCheck(True)


def ad_eigen(g: LieSuperAlgebra, h, s: SubSuperSpace):
    """Exact rational eigenpairs of ad(h) restricted to s.

    Raises :class:`AlgebraError` when ad(h) fails to preserve s, and
    :class:`UnsupportedFieldError` when the characteristic polynomial has
    an irrational root.  Returns pairs (eigenvalue, vector in parent
    coordinates) sorted by decreasing eigenvalue.
    """
    dim = s.dim
    cols = []
    for v in s.vectors:
        img = g.bracket(h, v)
        coords = s.express(img)
        if coords is None:
            raise AlgebraError(
                f"ad({g.format_vector(h)}) does not preserve the subspace "
                f"(image {g.format_vector(img)})")
        cols.append(coords)
    # matrix of ad(h) in the subspace basis: M[i][j] = coefficient of basis
    # vector i in the image of basis vector j
    M = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    roots = _rational_roots(_char_poly(M))
    pairs = []
    for lam in sorted(set(roots), reverse=True):
        shifted = [{i: M[i][j] - (lam if i == j else ZERO)
                    for i in range(dim) if M[i][j] - (lam if i == j else ZERO)}
                   for j in range(dim)]
        for coeffs in kernel_basis(shifted):
            vec = [ZERO] * g.n
            for j, c in coeffs.items():
                for i, b in enumerate(s.vectors[j]):
                    vec[i] += c * b
            pairs.append((lam, tuple(vec)))
    return pairs


def _char_poly(M):
    """Coefficients [c_0, ..., c_n] of det(lam*I - M), Faddeev-LeVerrier."""
    n = len(M)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = [row[:] for row in M]
    for k in range(1, n + 1):
        trace = sum(Mk[i][i] for i in range(n))
        c = -trace / k
        coeffs[n - k] = c
        if k == n:
            break
        for i in range(n):
            Mk[i][i] += c
        Mk = [[sum(M[i][r] * Mk[r][j] for r in range(n)) for j in range(n)]
              for i in range(n)]
    return coeffs


def _rational_roots(coeffs):
    """All roots with multiplicity; raises if any root is irrational."""
    poly = list(coeffs)
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    roots = []
    while len(poly) > 1:
        if not poly[0]:
            roots.append(ZERO)
            poly = poly[1:]
            continue
        scale = 1
        for c in poly:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        ints = [int(c * scale) for c in poly]
        lead, const = abs(ints[-1]), abs(ints[0])
        found = None
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if not _eval_poly(poly, cand):
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise UnsupportedFieldError(
                "characteristic polynomial has an irrational root")
        roots.append(found)
        poly = _deflate(poly, found)
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _eval_poly(poly, x):
    acc = ZERO
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _deflate(poly, root):
    """Synthetic division by (lam - root); assumes root is exact."""
    out = [ZERO] * (len(poly) - 1)
    carry = ZERO
    for k in range(len(poly) - 1, 0, -1):
        carry = poly[k] + carry * root
        out[k - 1] = carry
    return out


def as_standalone(s: SubSuperSpace, names=None) -> LieSuperAlgebra:
    """Reinterpret a bracket-closed subspace as a Lie superalgebra.

    Basis vectors that coincide with parent basis vectors keep their names;
    other vectors get synthetic names unless ``names`` is supplied.
    """
    parent = s.parent
    basis = []
    for idx, vec in enumerate(s.vectors):
        support = [i for i, c in enumerate(vec) if c]
        if names is not None:
            name = names[idx]
        elif len(support) == 1 and vec[support[0]] == 1:
            name = parent.basis[support[0]].name
        else:
            name = f"e{idx}"
        parity = parent.vector_parity(vec)
        z = parent.vector_z_degree(vec)
        basis.append(Generator(name, parity, idx, z_degree=z))
    brackets = {}
    for i, v in enumerate(s.vectors):
        for j, w in enumerate(s.vectors):
            br = parent.bracket(v, w)
            coords = s.express(br)
            if coords is None:
                raise AlgebraError("subspace is not closed under the bracket")
            brackets[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return LieSuperAlgebra(basis, brackets, name=f"sub({parent.name})")


def upper_triangular_subalgebra(g: Optional[LieSuperAlgebra] = None) -> LieSuperAlgebra:
    """The subalgebra of pl11 spanned by y and u (upper triangular matrices)."""
    if g is None:
        g = pl11()
    sub = subalgebra_generated(g, [g.basis_vector("y"), g.basis_vector("u")])
    return as_standalone(sub)


# -- definition files ----------------------------------------------------------------


def load_algebra_file(path) -> LieSuperAlgebra:
    """Read a structured-text algebra definition.

    Format: a ``[generators]`` section with lines ``name parity [zdegree]``
    followed by a ``[brackets]`` section with lines ``a b = <expr>`` where
    the expression is linear in the basis names.  Omitted brackets default
    to zero (the reversed orientation of a stated bracket is filled in by
    super antisymmetry).  ``#`` starts a comment.
    """
    basis = []
    brackets = {}
    section = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("["):
                section = line.strip("[]").strip().lower()
                if section not in ("generators", "brackets"):
                    raise ParseError(f"unknown section {section!r}", lineno)
                continue
            if section == "generators":
                parts = line.split()
                if len(parts) not in (2, 3):
                    raise ParseError(f"bad generator line {line!r}", lineno)
                name, parity = parts[0], parts[1]
                if parity not in ("0", "1"):
                    raise ParseError(f"parity must be 0 or 1, got {parity!r}", lineno)
                z = int(parts[2]) if len(parts) == 3 else None
                basis.append(Generator(name, int(parity), len(basis), z_degree=z))
            elif section == "brackets":
                if "=" not in line:
                    raise ParseError(f"bracket line needs '=': {line!r}", lineno)
                lhs, rhs = line.split("=", 1)
                names = lhs.split()
                if len(names) != 2:
                    raise ParseError(f"bracket left side needs two names: {lhs!r}",
                                     lineno)
                index = {g.name: g.pbw_index for g in basis}
                try:
                    i, j = index[names[0]], index[names[1]]
                except KeyError as exc:
                    raise ParseError(f"unknown basis name {exc.args[0]!r}", lineno)
                combo = parse_linear_combination(rhs.strip(), [g.name for g in basis])
                brackets[(i, j)] = {index[k]: v for k, v in combo.items()}
            else:
                raise ParseError("content before any section header", lineno)
    if not basis:
        raise ParseError("no generators defined", 0)
    return LieSuperAlgebra(basis, brackets, name="file-algebra")
