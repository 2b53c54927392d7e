"""The double G = g x| g* with its pairing and invariant Courant bracket.

Elements are length-2n coordinate vectors: the first n slots are the
vector part (basis e_i), the last n the coform part (basis e^i).  On
invariant sections the bracket reduces to
    [[X + a, Y + b]] = [X, Y] + iota_X db - iota_Y da,
and the pairing is <X + a, Y + b> = (b(X) + a(Y)) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .exterior import Exterior, format_exterior
from .lie import LieAlgebra
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    vadd,
    vconj,
    vector,
    vis_zero,
    vunit,
    vzero,
)
from .notation import format_double_name, parse_double_element
from .scalars import GaussianRational, HALF, ONE, ZERO


class PreconditionError(ValueError):
    """An operation was called outside its stated precondition."""


class CourantDouble:
    """g + g* for a fixed Lie algebra, with bracket and pairing."""

    __slots__ = ("algebra", "n", "dim", "_table")

    def __init__(self, algebra: LieAlgebra):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "n", algebra.dim)
        object.__setattr__(self, "dim", 2 * algebra.dim)
        object.__setattr__(self, "_table", None)

    def __setattr__(self, name, value):
        raise AttributeError("CourantDouble is immutable")

    # -- elements ----------------------------------------------------------------

    def split(self, u: Vector) -> Tuple[Vector, Vector]:
        if len(u) != self.dim:
            raise DimensionError("element has wrong length")
        return u[: self.n], u[self.n:]

    def join(self, x: Vector, alpha: Vector) -> Vector:
        return tuple(x) + tuple(alpha)

    def vector_element(self, x) -> Vector:
        return self.join(vector(x), vzero(self.n))

    def coform_element(self, alpha) -> Vector:
        return self.join(vzero(self.n), vector(alpha))

    def basis_element(self, slot: int) -> Vector:
        return vunit(self.dim, slot)

    def parse(self, text: str) -> Vector:
        element = parse_double_element(text, self.n)
        out = [ZERO] * self.dim
        for (slot,), c in element.items():
            out[slot] = c
        return tuple(out)

    def format(self, u: Vector) -> str:
        element = Exterior(self.dim, 1, {(i,): c for i, c in enumerate(u)})
        return format_exterior(element, lambda s: format_double_name(self.n, s))

    # -- pairing and bracket --------------------------------------------------------

    def pairing(self, u: Vector, v: Vector) -> GaussianRational:
        x, alpha = self.split(u)
        y, beta = self.split(v)
        total = ZERO
        for i in range(self.n):
            total = total + beta[i] * x[i] + alpha[i] * y[i]
        return HALF * total

    def bracket(self, u: Vector, v: Vector) -> Vector:
        # bilinear in the cached basis-pair table
        table = self._bracket_table()
        out = [ZERO] * self.dim
        for p, up in enumerate(u):
            if up.is_zero():
                continue
            row = table[p]
            for q, vq in enumerate(v):
                if vq.is_zero():
                    continue
                cell = row[q]
                if cell is None:
                    continue
                factor = up * vq
                for i, c in cell:
                    out[i] = out[i] + factor * c
        return tuple(out)

    def _bracket_table(self):
        if self._table is None:
            table = []
            for p in range(self.dim):
                row = []
                for q in range(self.dim):
                    value = self._bracket_raw(vunit(self.dim, p), vunit(self.dim, q))
                    cell = [(i, c) for i, c in enumerate(value) if not c.is_zero()]
                    row.append(cell or None)
                table.append(row)
            object.__setattr__(self, "_table", table)
        return self._table

    def _bracket_raw(self, u: Vector, v: Vector) -> Vector:
        x, alpha = self.split(u)
        y, beta = self.split(v)
        vec_part = self.algebra.bracket(x, y)
        d_beta = self._d_of_coform(beta)
        d_alpha = self._d_of_coform(alpha)
        form_part = d_beta.contract(x) - d_alpha.contract(y)
        coform = [ZERO] * self.n
        for (i,), c in form_part.items():
            coform[i] = c
        return self.join(vec_part, tuple(coform))

    def _d_of_coform(self, alpha: Vector) -> Exterior:
        out = Exterior.zero(self.n, 2)
        for j, c in enumerate(alpha):
            if not c.is_zero():
                out = out + self.algebra.de(j).scale(c)
        return out

    def conjugate_element(self, u: Vector) -> Vector:
        return vconj(u)

    def jacobiator(self, u: Vector, v: Vector, w: Vector) -> Vector:
        total = self.bracket(self.bracket(u, v), w)
        total = vadd(total, self.bracket(self.bracket(v, w), u))
        total = vadd(total, self.bracket(self.bracket(w, u), v))
        return total

    # -- canonical subspaces -----------------------------------------------------------

    def g_subspace(self) -> "DoubleSubspace":
        return DoubleSubspace(self, Subspace.from_vectors(
            self.dim, [vunit(self.dim, i) for i in range(self.n)]))

    def g_star_subspace(self) -> "DoubleSubspace":
        return DoubleSubspace(self, Subspace.from_vectors(
            self.dim, [vunit(self.dim, i) for i in range(self.n, self.dim)]))

    def subspace(self, elements: Iterable) -> "DoubleSubspace":
        rows = []
        for e in elements:
            rows.append(self.parse(e) if isinstance(e, str) else vector(e))
        return DoubleSubspace(self, Subspace.from_vectors(self.dim, rows))


_PREDICATE_KEYS = ("is_isotropic", "is_max_isotropic", "is_subalgebra",
                   "is_ideal", "is_abelian")


class DoubleSubspace:
    """A subspace of the double, with cached structure predicates."""

    __slots__ = ("double", "space", "_cache")

    def __init__(self, double: CourantDouble, space: Subspace):
        if space.ambient != double.dim:
            raise DimensionError("subspace ambient differs from the double")
        object.__setattr__(self, "double", double)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("DoubleSubspace is immutable")

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_vectors(self) -> List[Vector]:
        return list(self.space.basis.entries)

    def __eq__(self, other):
        if not isinstance(other, DoubleSubspace):
            return NotImplemented
        return self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def contains(self, u: Vector) -> bool:
        return self.space.contains(u)

    def conjugate(self) -> "DoubleSubspace":
        return DoubleSubspace(self.double, self.space.conjugate())

    def is_real(self) -> bool:
        return self.space.is_real()

    def complexify_is_noop(self) -> bool:
        return True  # scalars are already Gaussian rationals

    # -- predicates -------------------------------------------------------------------

    def predicates(self, recompute: bool = False) -> dict:
        if recompute or not self._cache:
            basis = self.basis_vectors()
            d = self.double
            isotropic = all(
                d.pairing(basis[i], basis[j]).is_zero()
                for i in range(len(basis))
                for j in range(i, len(basis))
            )
            brackets = {}
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    brackets[(i, j)] = d.bracket(basis[i], basis[j])
            subalgebra = all(self.space.contains(b) for b in brackets.values())
            abelian = all(vis_zero(b) for b in brackets.values())
            ideal = all(
                self.space.contains(d.bracket(d.basis_element(s), row))
                for s in range(d.dim)
                for row in basis
            )
            fresh = {
                "is_isotropic": isotropic,
                "is_max_isotropic": isotropic and self.dim == d.n,
                "is_subalgebra": subalgebra,
                "is_ideal": ideal,
                "is_abelian": abelian,
            }
            if self._cache and self._cache != fresh:
                raise ArithmeticError("predicate cache diverged from recomputation")
            self._cache.update(fresh)
        return dict(self._cache)

    @property
    def is_isotropic(self) -> bool:
        return self.predicates()["is_isotropic"]

    @property
    def is_max_isotropic(self) -> bool:
        return self.predicates()["is_max_isotropic"]

    @property
    def is_subalgebra(self) -> bool:
        return self.predicates()["is_subalgebra"]

    @property
    def is_ideal(self) -> bool:
        return self.predicates()["is_ideal"]

    @property
    def is_abelian(self) -> bool:
        return self.predicates()["is_abelian"]

    def orthogonal(self) -> "DoubleSubspace":
        """Pairing-orthogonal complement; dim + dim-orthogonal = 2n."""
        d = self.double
        rows = []
        for row in self.basis_vectors():
            x, alpha = d.split(row)
            # <row, v> as a linear functional of v = (y, beta): (beta(x) + alpha(y))/2
            rows.append(tuple(alpha) + tuple(x))
        if not rows:
            return DoubleSubspace(d, Subspace.full(d.dim))
        from .linalg import kernel

        return DoubleSubspace(d, kernel(Matrix(rows, cols=d.dim)))

    def __str__(self):
        names = [self.double.format(v) for v in self.basis_vectors()]
        return "span{%s}" % ", ".join(names)

    __repr__ = __str__


class NotClosedError(PreconditionError):
    def __init__(self, pair, offending):
        self.pair = pair
        self.offending = offending
        super().__init__("subspace is not closed under the bracket on basis pair %s" % (pair,))


def closure_failure(s: DoubleSubspace) -> Optional[Tuple[Tuple[int, int], Vector]]:
    basis = s.basis_vectors()
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            b = s.double.bracket(basis[i], basis[j])
            if not s.space.contains(b):
                return (i, j), b
    return None


def jacobi_on_isotropic(s: DoubleSubspace):
    """Cyclic Jacobi sums on a closed maximally isotropic subspace.

    Returns None when every basis triple sums to zero, otherwise the
    first counterexample (i, j, k, residual).  Raises on a violated
    precondition, reporting the failing pair.
    """
    if not s.is_max_isotropic:
        raise PreconditionError("subspace is not maximally isotropic")
    failure = closure_failure(s)
    if failure is not None:
        raise NotClosedError(*failure)
    basis = s.basis_vectors()
    for i, j, k in combinations(range(len(basis)), 3):
        residual = s.double.jacobiator(basis[i], basis[j], basis[k])
        if not vis_zero(residual):
            return (i, j, k, residual)
    return None


class DegeneratePairingError(ValueError):
    pass


def dual_identification(k_space: DoubleSubspace, a_space: DoubleSubspace) -> Matrix:
    """Matrix of the pairing-induced isomorphism A -> K*.

    Entry (i, j) is 2<a_i, k_j>, normalized so that (A, K) = (g, g*)
    gives the identity (dual bases).  Raises when the pairing between
    the two spaces is degenerate, which signals A and K are not
    complementary maximal isotropics.
    """
    d = a_space.double
    if k_space.double is not d and k_space.double.algebra != d.algebra:
        raise DimensionError("subspaces over different doubles")
    if not (a_space.is_max_isotropic and k_space.is_max_isotropic):
        raise PreconditionError("both subspaces must be maximally isotropic")
    a_basis = a_space.basis_vectors()
    k_basis = k_space.basis_vectors()
    m = Matrix([
        [d.pairing(a, k) * 2 for k in k_basis] for a in a_basis
    ], cols=len(k_basis))
    from .linalg import det

    if m.rows != m.cols or det(m).is_zero():
        raise DegeneratePairingError("pairing between the subspaces is degenerate")
    return m
