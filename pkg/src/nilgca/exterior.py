"""Alternating tensors with exact coefficients.

One combinatorial container serves forms on g*, polyvectors on g, and
multivectors over an eigenspace basis: coefficients are indexed by
strictly increasing index tuples, with the convention that the basis
wedge evaluates to 1 on its own index sequence (e^{ij}(e_i, e_j) = 1).
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

from .linalg import DimensionError, Matrix, Vector, vis_zero
from .scalars import GaussianRational, ONE, ZERO, scalar


def _sort_with_sign(indices):
    """Sort an index tuple, tracking the permutation sign; None if repeated."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return None, 0
    return tuple(idx), sign


class Exterior:
    """Homogeneous alternating tensor of fixed degree over `dim` slots."""

    __slots__ = ("dim", "degree", "coeff")

    def __init__(self, dim: int, degree: int, coeff=None):
        if degree < 0:
            raise DimensionError("negative degree")
        cleaned = {}
        for indices, value in (coeff or {}).items():
            value = scalar(value)
            if value.is_zero():
                continue
            sorted_idx, sign = _sort_with_sign(tuple(indices))
            if sign == 0:
                continue
            if any(not 0 <= i < dim for i in sorted_idx):
                raise DimensionError("index out of range")
            if len(sorted_idx) != degree:
                raise DimensionError("mixed degrees in coefficient table")
            value = value if sign > 0 else -value
            if sorted_idx in cleaned:
                total = cleaned[sorted_idx] + value
                if total.is_zero():
                    del cleaned[sorted_idx]
                else:
                    cleaned[sorted_idx] = total
            else:
                cleaned[sorted_idx] = value
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeff", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Exterior is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(dim: int, degree: int) -> "Exterior":
        return Exterior(dim, degree, {})

    @staticmethod
    def unit(dim: int) -> "Exterior":
        return Exterior(dim, 0, {(): ONE})

    @staticmethod
    def monomial(dim: int, indices, coeff=ONE) -> "Exterior":
        return Exterior(dim, len(tuple(indices)), {tuple(indices): coeff})

    @staticmethod
    def from_vector_coords(coords: Vector) -> "Exterior":
        return Exterior(len(coords), 1, {(i,): c for i, c in enumerate(coords)})

    # -- ring / module operations ----------------------------------------------

    def __add__(self, other: "Exterior") -> "Exterior":
        self._compatible(other)
        merged = dict(self.coeff)
        for k, v in other.coeff.items():
            merged[k] = merged.get(k, ZERO) + v
        return Exterior(self.dim, self.degree, merged)

    def __sub__(self, other: "Exterior") -> "Exterior":
        return self + (-other)

    def __neg__(self) -> "Exterior":
        return Exterior(self.dim, self.degree, {k: -v for k, v in self.coeff.items()})

    def scale(self, c) -> "Exterior":
        c = scalar(c)
        return Exterior(self.dim, self.degree, {k: c * v for k, v in self.coeff.items()})

    def wedge(self, other: "Exterior") -> "Exterior":
        if self.dim != other.dim:
            raise DimensionError("wedge of tensors over different spaces")
        out = {}
        for idx_a, ca in self.coeff.items():
            for idx_b, cb in other.coeff.items():
                merged, sign = _sort_with_sign(idx_a + idx_b)
                if sign == 0:
                    continue
                value = ca * cb if sign > 0 else -(ca * cb)
                out[merged] = out.get(merged, ZERO) + value
        return Exterior(self.dim, self.degree + other.degree, out)

    def conjugate(self) -> "Exterior":
        return Exterior(
            self.dim, self.degree, {k: v.conjugate() for k, v in self.coeff.items()}
        )

    # -- queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeff

    def get(self, indices) -> GaussianRational:
        sorted_idx, sign = _sort_with_sign(tuple(indices))
        if sign == 0:
            return ZERO
        value = self.coeff.get(sorted_idx, ZERO)
        return value if sign > 0 else -value

    def items(self):
        return sorted(self.coeff.items())

    def __eq__(self, other):
        if not isinstance(other, Exterior):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.coeff == other.coeff
        )

    def __hash__(self):
        return hash((self.dim, self.degree, tuple(sorted(self.coeff.items()))))

    def _compatible(self, other: "Exterior"):
        if self.dim != other.dim or self.degree != other.degree:
            raise DimensionError("exterior tensors of different shape")

    # -- coordinates over the lexicographic wedge basis -------------------------

    def to_coords(self) -> Vector:
        return tuple(
            self.coeff.get(idx, ZERO) for idx in combinations(range(self.dim), self.degree)
        )

    @staticmethod
    def from_coords(dim: int, degree: int, coords: Vector) -> "Exterior":
        table = {}
        for idx, c in zip(combinations(range(dim), degree), coords, strict=True):
            table[idx] = c
        return Exterior(dim, degree, table)

    # -- multilinear operations ---------------------------------------------------

    def contract(self, coords: Vector) -> "Exterior":
        """Interior product: pair the first slot against coordinate weights.

        For a form and a vector X this is iota_X with e^{ij}(e_i,e_j) = 1;
        the same code contracts a polyvector against a covector.
        """
        if len(coords) != self.dim:
            raise DimensionError("contraction weight length mismatch")
        if self.degree == 0:
            raise DimensionError("cannot contract a degree-0 tensor")
        out = {}
        for idx, c in self.coeff.items():
            for pos, i in enumerate(idx):
                w = coords[i]
                if w.is_zero():
                    continue
                rest = idx[:pos] + idx[pos + 1:]
                value = w * c
                if pos % 2:
                    value = -value
                out[rest] = out.get(rest, ZERO) + value
        return Exterior(self.dim, self.degree - 1, out)

    def evaluate(self, arguments: Iterable[Vector]) -> GaussianRational:
        """Full evaluation on `degree` coordinate vectors (det convention)."""
        args = list(arguments)
        if len(args) != self.degree:
            raise DimensionError("wrong number of arguments")
        result = self
        for arg in args:
            if result.degree == 0:
                break
            result = result.contract(arg)
        if result.degree != 0:
            raise DimensionError("evaluation did not reach degree 0")
        return result.coeff.get((), ZERO)

    def transform(self, matrix: Matrix) -> "Exterior":
        """Re-express under the substitution slot_j -> sum_p matrix[j][p] slot'_p."""
        if matrix.rows != self.dim:
            raise DimensionError("transform matrix has wrong row count")
        new_dim = matrix.cols
        k = self.degree
        out = {}
        for idx, c in self.coeff.items():
            rows = [matrix.row(i) for i in idx]
            for target in combinations(range(new_dim), k):
                minor = Matrix([[row[j] for j in target] for row in rows])
                d = _det_small(minor)
                if d.is_zero():
                    continue
                out[target] = out.get(target, ZERO) + c * d
        return Exterior(new_dim, k, out)

    def map_coefficients(self, fn: Callable[[GaussianRational], GaussianRational]) -> "Exterior":
        return Exterior(self.dim, self.degree, {k: fn(v) for k, v in self.coeff.items()})

    def __str__(self):
        return format_exterior(self, lambda i: "x%d" % (i + 1))

    __repr__ = __str__


def _det_small(m: Matrix) -> GaussianRational:
    n = m.rows
    if n == 0:
        return ONE
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    from .linalg import det

    return det(m)


def format_exterior(x: Exterior, namer: Callable[[int], str], joiner: str = "^") -> str:
    """Formal sum like "e1^e2 - 1/2*e3^e4"; coefficient 1 is omitted."""
    if x.is_zero():
        return "0"
    parts = []
    for idx, c in x.items():
        mono = joiner.join(namer(i) for i in idx) if idx else ""
        if not mono:
            text = str(c)
        elif c == ONE:
            text = mono
        elif c == -ONE:
            text = "-" + mono
        else:
            coeff_text = str(c)
            if ("+" in coeff_text[1:]) or ("-" in coeff_text[1:]):
                coeff_text = "(" + coeff_text + ")"
            text = coeff_text + "*" + mono
        parts.append(text)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def lex_basis(dim: int, degree: int):
    return list(combinations(range(dim), degree))


def exterior_subspace_coords(elements: Iterable[Exterior]):
    """Coordinate rows of exterior elements, for Subspace construction."""
    return [e.to_coords() for e in elements]


def derivation_matrix(dim: int, degree: int, images: list) -> Matrix:
    """Matrix of the odd derivation sending slot i to images[i] (degree +r).

    Columns run over the lexicographic degree-`degree` wedge basis; the
    extension rule is D(a ^ b) = Da ^ b + (-1)^{|a|} a ^ Db.
    """
    if not images:
        raise DimensionError("no generator images")
    shift = images[0].degree - 1
    target_degree = degree + shift
    cols = []
    for idx in combinations(range(dim), degree):
        total = Exterior.zero(dim, target_degree)
        for pos, i in enumerate(idx):
            rest_front = idx[:pos]
            rest_back = idx[pos + 1:]
            term = Exterior.monomial(dim, rest_front) if rest_front else Exterior.unit(dim)
            term = term.wedge(images[i])
            if rest_back:
                term = term.wedge(Exterior.monomial(dim, rest_back))
            if pos % 2:
                term = -term
            total = total + term
        cols.append(total.to_coords())
    if not cols:
        return Matrix.zeros(len(lex_basis(dim, target_degree)), 0)
    return Matrix(cols).transpose()
