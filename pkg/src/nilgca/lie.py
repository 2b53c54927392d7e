"""Lie algebras from structure-equation tuples and their Chevalley-Eilenberg
complex.

Sign conventions, fixed once for the whole package:
  d omega(X, Y) = -omega([X, Y])    and    e^{ij}(e_i, e_j) = 1,
so the tuple "0,0,0,12" (de4 = e12) has [e1, e2] = -e4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .exterior import Exterior, derivation_matrix, lex_basis
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    kernel,
    rref,
    vadd,
    vector,
    vis_real,
    vis_zero,
    vscale,
    vunit,
    vzero,
)
from .notation import format_structure_tuple, parse_structure_tuple
from .scalars import ONE, ZERO, scalar


class NotALieAlgebraError(ValueError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, violations):
        self.violations = violations
        triples = ", ".join(str(v[:3]) for v in violations[:3])
        super().__init__("Jacobi identity fails on triples: %s" % triples)


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact rational structure constants.

    Brackets are stored for i < j only; [e_j, e_i] = -[e_i, e_j] holds by
    convention.  The Jacobi identity is checked at construction unless
    explicitly disabled (the override exists for experiments and tests).
    """

    __slots__ = ("dim", "name", "_table", "_de_cache")

    def __init__(self, dim: int, table: Dict[Tuple[int, int], Vector], name: str = "",
                 require_jacobi: bool = True):
        cleaned = {}
        for (i, j), value in table.items():
            if not 0 <= i < j < dim:
                raise ValueError("bracket key (%d, %d) must satisfy 0 <= i < j < dim" % (i, j))
            value = vector(value)
            if len(value) != dim:
                raise ValueError("bracket value has wrong length")
            if not vis_real(value):
                raise ValueError("structure constants must be rational (real)")
            if not vis_zero(value):
                cleaned[(i, j)] = value
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_table", cleaned)
        object.__setattr__(self, "_de_cache", {})
        if require_jacobi:
            violations = self.check_jacobi()
            if violations:
                raise NotALieAlgebraError(violations)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    # -- construction ---------------------------------------------------------

    @staticmethod
    def from_tuple(text: str, name: str = "", require_jacobi: bool = True) -> "LieAlgebra":
        forms = parse_structure_tuple(text)
        n = len(forms)
        table: Dict[Tuple[int, int], list] = {}
        for j, form in enumerate(forms):
            for (a, b), c in form.items():
                row = table.setdefault((a, b), [ZERO] * n)
                row[j] = row[j] - c  # de^j(e_a, e_b) = -e^j([e_a, e_b])
        return LieAlgebra(n, {k: tuple(v) for k, v in table.items()}, name=name,
                          require_jacobi=require_jacobi)

    @staticmethod
    def abelian(dim: int, name: str = "") -> "LieAlgebra":
        return LieAlgebra(dim, {}, name=name)

    def to_tuple(self) -> str:
        return format_structure_tuple([self.de(j) for j in range(self.dim)])

    # -- brackets ---------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return vzero(self.dim)
        if i < j:
            return self._table.get((i, j), vzero(self.dim))
        value = self._table.get((j, i))
        return vzero(self.dim) if value is None else vscale(-ONE, value)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = vzero(self.dim)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero() or i == j:
                    continue
                out = vadd(out, vscale(xi * yj, self.bracket_basis(i, j)))
        return out

    def check_jacobi(self) -> List[Tuple[int, int, int, Vector]]:
        """Violating triples (i, j, k, residual) of the cyclic Jacobi sum."""
        violations = []
        for i, j, k in combinations(range(self.dim), 3):
            total = self.bracket(self.bracket_basis(i, j), vunit(self.dim, k))
            total = vadd(total, self.bracket(self.bracket_basis(j, k), vunit(self.dim, i)))
            total = vadd(total, self.bracket(self.bracket_basis(k, i), vunit(self.dim, j)))
            if not vis_zero(total):
                violations.append((i, j, k, total))
        return violations

    # -- Chevalley-Eilenberg complex ---------------------------------------------

    def de(self, j: int) -> Exterior:
        """The 2-form d e^j, derived from the brackets."""
        cached = self._de_cache.get(j)
        if cached is not None:
            return cached
        table = {}
        for (a, b), value in self._table.items():
            if value[j]:
                table[(a, b)] = -value[j]
        form = Exterior(self.dim, 2, table)
        self._de_cache[j] = form
        return form

    def d(self, form: Exterior) -> Exterior:
        """CE differential as an odd derivation on forms."""
        if form.dim != self.dim:
            raise ValueError("form lives on a different algebra")
        out = Exterior.zero(self.dim, form.degree + 1)
        for idx, c in form.items():
            for pos, i in enumerate(idx):
                front = idx[:pos]
                back = idx[pos + 1:]
                term = Exterior.monomial(self.dim, front) if front else Exterior.unit(self.dim)
                term = term.wedge(self.de(i))
                if back:
                    term = term.wedge(Exterior.monomial(self.dim, back))
                if pos % 2:
                    term = -term
                out = out + term.scale(c)
        return out

    def ce_differential(self, k: int) -> Matrix:
        """Matrix of d: Lambda^k g* -> Lambda^{k+1} g* in lexicographic bases."""
        if not 0 <= k <= self.dim:
            raise ValueError("degree out of range")
        return derivation_matrix(self.dim, k, [self.de(j) for j in range(self.dim)])

    def ce_cohomology(self, k: int) -> "CohomologyResult":
        if not 0 <= k <= self.dim:
            raise ValueError("degree out of range")
        ker = kernel(self.ce_differential(k))
        if k == 0:
            image = Subspace.zero(len(lex_basis(self.dim, 0)))
        else:
            prev = self.ce_differential(k - 1)
            image = Subspace.from_vectors(
                prev.rows, [prev.col(j) for j in range(prev.cols)]
            )
        return _quotient(ker, image, self.dim, k)

    def betti(self) -> List[int]:
        return [self.ce_cohomology(k).dim for k in range(self.dim + 1)]

    # -- structure ------------------------------------------------------------------

    def lower_central_series(self) -> "LcsResult":
        chain = [Subspace.full(self.dim)]
        while True:
            current = chain[-1]
            if current.dim == 0:
                break
            generators = []
            for i in range(self.dim):
                for row in current.basis.entries:
                    generators.append(self.bracket(vunit(self.dim, i), row))
            nxt = Subspace.from_vectors(self.dim, generators)
            if nxt == current:
                return LcsResult(tuple(chain), False, None)
            chain.append(nxt)
        return LcsResult(tuple(chain), True, len(chain) - 1)

    def is_nilpotent(self) -> bool:
        return self.lower_central_series().nilpotent

    def center(self) -> Subspace:
        rows = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                row.extend(self.bracket_basis(i, j))
            rows.append(row)
        return kernel(Matrix(rows).transpose()) if rows else Subspace.full(self.dim)

    # -- misc -------------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self._table.items()))))

    def __str__(self):
        label = self.name or "LieAlgebra"
        return "%s(%s)" % (label, self.to_tuple())

    __repr__ = __str__


@dataclass(frozen=True)
class LcsResult:
    chain: tuple
    nilpotent: bool
    step: Optional[int]


@dataclass(frozen=True)
class CohomologyResult:
    dim: int
    representatives: tuple  # Exterior forms

    def as_json(self, degree: int, namer=None):
        from .exterior import format_exterior

        namer = namer or (lambda i: "E%d" % (i + 1))
        return {
            "degree": degree,
            "dim": self.dim,
            "representatives": [format_exterior(r, namer) for r in self.representatives],
        }


def _quotient(ker: Subspace, image: Subspace, dim: int, k: int) -> CohomologyResult:
    """Representatives: kernel vectors extending the image, in RREF order."""
    if not ker.contains_subspace(image):
        raise ArithmeticError("image is not contained in kernel; d^2 != 0")
    reps = []
    span = image
    for row in ker.basis.entries:
        if not span.contains(row):
            reps.append(Exterior.from_coords(dim, k, row))
            span = span + Subspace.from_vectors(span.ambient, [row])
    return CohomologyResult(ker.dim - image.dim, tuple(reps))


def interior(x: Vector, form: Exterior) -> Exterior:
    """Interior product iota_X of a coordinate vector against a form."""
    return form.contract(x)


def basis_change(algebra: LieAlgebra, new_vectors: List[Vector],
                 name: str = "") -> LieAlgebra:
    """The same bracket expressed on a new basis f_p = new_vectors[p]."""
    n = algebra.dim
    p_matrix = Matrix(new_vectors).transpose()  # columns are the new vectors
    if rref(p_matrix).rank != n:
        raise ValueError("new basis is singular")
    from .linalg import inverse

    p_inv = inverse(p_matrix)
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            br = algebra.bracket(new_vectors[i], new_vectors[j])
            table[(i, j)] = p_inv.apply(br)
    return LieAlgebra(n, table, name=name)


def is_bracket_isomorphism(src: LieAlgebra, dst: LieAlgebra, images: List[Vector]) -> bool:
    """Does e_i -> images[i] carry src brackets to dst brackets?"""
    n = src.dim
    if dst.dim != n or len(images) != n:
        return False
    if rref(Matrix(images)).rank != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            lhs = dst.bracket(images[i], images[j])
            rhs = vzero(n)
            for k, c in enumerate(src.bracket_basis(i, j)):
                if not c.is_zero():
                    rhs = vadd(rhs, vscale(c, images[k]))
            if lhs != rhs:
                return False
    return True
