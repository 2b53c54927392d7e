"""Generalized complex structures on the double g + g*.

A structure is a real 2n x 2n matrix with block form [[J, Pi], [B, -J^T]]
(B a two-form, Pi a bivector, both stored as antisymmetric Gram matrices
B_ij = B(e_i, e_j), Pi^ij = Pi(e^i, e^j)), squaring to -1 and preserving
the pairing.  Integrability — closure of the (+i)-eigenspace under the
Courant bracket — is a separate verdict, so almost structures are
first-class values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .double import CourantDouble, DoubleSubspace, PreconditionError
from .exterior import Exterior
from .lie import LieAlgebra
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    inverse,
    kernel,
    rref,
    vadd,
    vector,
    vis_zero,
    vscale,
    vsub,
    vunit,
    vzero,
)
from .scalars import GaussianRational, HALF, I, ONE, ZERO, scalar


class NotAlmostGcsError(ValueError):
    """The candidate map fails one of the almost-structure identities."""

    def __init__(self, failing_identity: str):
        self.failing_identity = failing_identity
        super().__init__("not an almost generalized complex structure: %s" % failing_identity)


def _as_gram(n: int, data, kind: str) -> Matrix:
    """Accept an antisymmetric Gram matrix or a degree-2 Exterior."""
    if isinstance(data, Exterior):
        if data.dim != n or data.degree != 2:
            raise DimensionError("%s tensor has wrong shape" % kind)
        rows = [[data.get((i, j)) for j in range(n)] for i in range(n)]
        return Matrix(rows, cols=n)
    m = data if isinstance(data, Matrix) else Matrix(data, cols=n)
    if m.rows != n or m.cols != n:
        raise DimensionError("%s matrix must be %d x %d" % (kind, n, n))
    if not m.is_antisymmetric():
        raise NotAlmostGcsError("%s block is not antisymmetric" % kind)
    return m


def gram_to_exterior(gram: Matrix) -> Exterior:
    n = gram.rows
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            table[(i, j)] = gram[i, j]
    return Exterior(n, 2, table)


class Gcs:
    """A (possibly almost) generalized complex structure with cached eigenspace."""

    __slots__ = ("double", "matrix", "j_block", "pi_gram", "b_gram", "_ell")

    def __init__(self, double: CourantDouble, matrix: Matrix):
        n = double.n
        if matrix.rows != 2 * n or matrix.cols != 2 * n:
            raise DimensionError("structure matrix must be 2n x 2n")
        if not matrix.is_real():
            raise NotAlmostGcsError("matrix has non-real entries")
        j_block = matrix.submatrix(range(n), range(n))
        pi_block = matrix.submatrix(range(n), range(n, 2 * n))
        b_block = matrix.submatrix(range(n, 2 * n), range(n))
        lower_right = matrix.submatrix(range(n, 2 * n), range(n, 2 * n))
        if lower_right != -j_block.transpose():
            raise NotAlmostGcsError("lower-right block is not -J^T")
        if not pi_block.is_antisymmetric():
            raise NotAlmostGcsError("bivector block is not antisymmetric")
        if not b_block.is_antisymmetric():
            raise NotAlmostGcsError("two-form block is not antisymmetric")
        square = matrix @ matrix
        if square != -Matrix.identity(2 * n):
            raise NotAlmostGcsError("J o J != -1")
        # <Ju, Jv> = <u, v> on all basis pairs
        for p in range(2 * n):
            jp = matrix.col(p)
            for q in range(p, 2 * n):
                jq = matrix.col(q)
                if double.pairing(jp, jq) != double.pairing(
                    vunit(2 * n, p), vunit(2 * n, q)
                ):
                    raise NotAlmostGcsError("pairing is not preserved")
        object.__setattr__(self, "double", double)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "j_block", j_block)
        # blocks act by Pi(alpha) = Pi_block alpha, B(X) = B_block X
        object.__setattr__(self, "pi_gram", pi_block.transpose())
        object.__setattr__(self, "b_gram", b_block.transpose())
        ell = self._compute_eigenspace()
        object.__setattr__(self, "_ell", ell)

    def __setattr__(self, name, value):
        raise AttributeError("Gcs is immutable")

    # -- constructors --------------------------------------------------------------

    @staticmethod
    def from_components(algebra_or_double, j, b, pi) -> "Gcs":
        """Assemble [[J, Pi], [B, -J^T]] from an endomorphism and Gram data."""
        double = _as_double(algebra_or_double)
        n = double.n
        j = j if isinstance(j, Matrix) else Matrix(j, cols=n)
        if j.rows != n or j.cols != n:
            raise DimensionError("J block must be n x n")
        b_gram = _as_gram(n, b, "two-form")
        pi_gram = _as_gram(n, pi, "bivector")
        rows = []
        pi_block = pi_gram.transpose()
        b_block = b_gram.transpose()
        for i in range(n):
            rows.append(tuple(j.row(i)) + tuple(pi_block.row(i)))
        neg_jt = -j.transpose()
        for i in range(n):
            rows.append(tuple(b_block.row(i)) + tuple(neg_jt.row(i)))
        return Gcs(double, Matrix(rows, cols=2 * n))

    @staticmethod
    def from_symplectic(algebra_or_double, omega) -> "Gcs":
        """J = 0, B = Omega, Pi = Omega^{-1}; requires Omega nondegenerate."""
        double = _as_double(algebra_or_double)
        n = double.n
        omega_gram = _as_gram(n, omega, "symplectic form")
        b_block = omega_gram.transpose()
        try:
            pi_block = -inverse(b_block)
        except ZeroDivisionError:
            raise PreconditionError("symplectic form is degenerate")
        return Gcs.from_components(
            double, Matrix.zeros(n, n), omega_gram, pi_block.transpose()
        )

    @staticmethod
    def from_complex(algebra_or_double, j) -> "Gcs":
        double = _as_double(algebra_or_double)
        n = double.n
        if isinstance(j, ClassicalComplexStructure):
            j = j.j
        j = j if isinstance(j, Matrix) else Matrix(j, cols=n)
        return Gcs.from_components(double, j, Matrix.zeros(n, n), Matrix.zeros(n, n))

    @staticmethod
    def from_holomorphic_poisson(algebra_or_double, cx: "ClassicalComplexStructure",
                                 lam: Exterior) -> "Gcs":
        """Deform a classical structure by a (2,0)-bivector.

        The bivector block is Pi = 2i(conj(lam) - lam), which is the real
        bivector whose (+i)-eigenspace comes out as {U, w + conj(lam)w}.
        """
        double = _as_double(algebra_or_double)
        n = double.n
        if lam.dim != n or lam.degree != 2:
            raise DimensionError("bivector has wrong shape")
        if not cx.is_pure_bivector(lam):
            raise PreconditionError("bivector is not of type (2,0) for this J")
        pi = (lam.conjugate() - lam).scale(I * 2)
        pi_gram = Matrix(
            [[pi.get((i, j)) for j in range(n)] for i in range(n)], cols=n
        )
        return Gcs.from_components(double, cx.j, Matrix.zeros(n, n), pi_gram)

    # -- core queries ------------------------------------------------------------------

    def apply(self, u: Vector) -> Vector:
        return self.matrix.apply(u)

    def _compute_eigenspace(self) -> DoubleSubspace:
        m = self.matrix - Matrix.identity(2 * self.double.n).scale(I)
        return DoubleSubspace(self.double, kernel(m))

    def eigenspace(self) -> DoubleSubspace:
        """The (+i)-eigenspace, in canonical RREF; cached at construction."""
        return self._ell

    def eigenspace_conjugate(self) -> DoubleSubspace:
        return self._ell.conjugate()

    def validate_eigenspace(self):
        ell = self._ell
        n = self.double.n
        if ell.dim != n:
            raise NotAlmostGcsError("eigenspace has wrong dimension")
        if not ell.is_isotropic:
            raise NotAlmostGcsError("eigenspace is not isotropic")
        if ell.space.intersect(ell.space.conjugate()).dim != 0:
            raise NotAlmostGcsError("eigenspace meets its conjugate")

    def is_integrable(self) -> "IntegrabilityResult":
        ell = self._ell
        basis = ell.basis_vectors()
        conj = ell.space.conjugate()
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                br = self.double.bracket(basis[i], basis[j])
                if not ell.space.contains(br):
                    # split off the conjugate-side component as the witness
                    offending = _project_onto(conj, ell.space, br)
                    return IntegrabilityResult(False, (i, j), offending)
        return IntegrabilityResult(True, None, None)

    def gcs_type(self) -> int:
        n = self.double.n
        vec_cols = [row[:n] for row in self._ell.basis_vectors()]
        if not vec_cols:
            return n
        return n - rref(Matrix(vec_cols, cols=n)).rank

    def preserves_pairing(self) -> bool:
        return True  # validated at construction

    def __eq__(self, other):
        if not isinstance(other, Gcs):
            return NotImplemented
        return self.double.algebra == other.double.algebra and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


@dataclass(frozen=True)
class IntegrabilityResult:
    ok: bool
    failing_pair: Optional[Tuple[int, int]]
    offending: Optional[Vector]

    def __bool__(self):
        return self.ok


def _as_double(algebra_or_double) -> CourantDouble:
    if isinstance(algebra_or_double, CourantDouble):
        return algebra_or_double
    if isinstance(algebra_or_double, LieAlgebra):
        return CourantDouble(algebra_or_double)
    raise TypeError("expected a LieAlgebra or CourantDouble")


def _project_onto(target: Subspace, along: Subspace, v: Vector) -> Vector:
    """Component of v in `target` along the complement `along`."""
    ambient = target.ambient
    rows = list(target.basis.entries) + list(along.basis.entries)
    m = Matrix(rows, cols=ambient).transpose()
    from .linalg import solve_affine

    sol = solve_affine(m, v)
    if not sol.feasible:
        raise ArithmeticError("vector is outside the direct sum")
    coeffs = sol.particular[: target.dim]
    out = vzero(ambient)
    for c, row in zip(coeffs, target.basis.entries):
        out = vadd(out, vscale(c, row))
    return out


# ---------------------------------------------------------------------------
# classical complex structures
# ---------------------------------------------------------------------------

def nijenhuis(algebra: LieAlgebra, j: Matrix, x: Vector, y: Vector) -> Vector:
    """[JX,JY] - [X,Y] - J[JX,Y] - J[X,JY], exactly."""
    jx, jy = j.apply(x), j.apply(y)
    out = algebra.bracket(jx, jy)
    out = vsub(out, algebra.bracket(x, y))
    out = vsub(out, j.apply(algebra.bracket(jx, y)))
    out = vsub(out, j.apply(algebra.bracket(x, jy)))
    return out


class ClassicalComplexStructure:
    """An integrable complex structure J on g, with its canonical frame.

    The frame pairs basis vectors greedily: scan e_1, e_2, ... and keep
    e_k whenever it is independent of the span of the pairs chosen so
    far; the (1,0)-frame is T_j = (v_j - i J v_j) / 2 with dual coframe
    w^j.  For J e_1 = e_2 etc. this reproduces the usual T_j, w^j.
    """

    __slots__ = ("algebra", "j", "frame_vectors", "t_frame", "omega_frame",
                 "frame_matrix", "frame_inverse")

    def __init__(self, algebra: LieAlgebra, j, require_integrable: bool = True):
        n = algebra.dim
        j = j if isinstance(j, Matrix) else Matrix(j, cols=n)
        if j.rows != n or j.cols != n:
            raise DimensionError("J must be n x n")
        if not j.is_real():
            raise ValueError("J must be a real endomorphism")
        if j @ j != -Matrix.identity(n):
            raise NotAlmostGcsError("J o J != -1")
        if require_integrable:
            for a in range(n):
                for b in range(a + 1, n):
                    if not vis_zero(nijenhuis(algebra, j, vunit(n, a), vunit(n, b))):
                        raise NotAlmostGcsError(
                            "Nijenhuis tensor does not vanish on (e%d, e%d)" % (a + 1, b + 1)
                        )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "j", j)
        self._build_frame()

    def __setattr__(self, name, value):
        raise AttributeError("ClassicalComplexStructure is immutable")

    def _build_frame(self):
        n = self.algebra.dim
        chosen: List[Vector] = []
        span = Subspace.zero(n)
        for k in range(n):
            v = vunit(n, k)
            if span.contains(v):
                continue
            jv = self.j.apply(v)
            chosen.append(v)
            span = span + Subspace.from_vectors(n, [v, jv])
        if 2 * len(chosen) != n:
            raise NotAlmostGcsError("J does not pair the space into complex lines")
        t_frame = []
        basis_vectors = []
        for v in chosen:
            jv = self.j.apply(v)
            t_frame.append(vscale(HALF, vsub(v, vscale(I, jv))))
            basis_vectors.append((v, jv))
        # frame_matrix columns: v_1, Jv_1, v_2, Jv_2, ...
        cols = []
        for v, jv in basis_vectors:
            cols.append(v)
            cols.append(jv)
        frame_matrix = Matrix(cols, cols=n).transpose()
        frame_inverse = inverse(frame_matrix)
        # w^j = (v_j)* + i (Jv_j)* where starred rows are the dual basis
        omega_frame = []
        for idx in range(len(chosen)):
            dual_v = frame_inverse.row(2 * idx)
            dual_jv = frame_inverse.row(2 * idx + 1)
            omega_frame.append(vadd(dual_v, vscale(I, dual_jv)))
        object.__setattr__(self, "frame_vectors", tuple(chosen))
        object.__setattr__(self, "t_frame", tuple(t_frame))
        object.__setattr__(self, "omega_frame", tuple(omega_frame))
        object.__setattr__(self, "frame_matrix", frame_matrix)
        object.__setattr__(self, "frame_inverse", frame_inverse)

    @property
    def m(self) -> int:
        return len(self.t_frame)

    # -- type decompositions ---------------------------------------------------------

    def vector_components(self, x: Vector) -> Tuple[Vector, Vector]:
        """Coefficients of x over (T_1..T_m, conj T_1..conj T_m)."""
        n = self.algebra.dim
        cols = [t for t in self.t_frame] + [tuple(c.conjugate() for c in t) for t in self.t_frame]
        m = Matrix(cols, cols=n).transpose()
        from .linalg import solve_affine

        sol = solve_affine(m, x)
        if not sol.feasible:
            raise ArithmeticError("frame decomposition failed")
        return sol.particular[: self.m], sol.particular[self.m:]

    def vector_10_part(self, x: Vector) -> Vector:
        """(1,0)-component of x, as a coordinate vector on g_C."""
        plus, _ = self.vector_components(x)
        out = vzero(self.algebra.dim)
        for c, t in zip(plus, self.t_frame):
            out = vadd(out, vscale(c, t))
        return out

    def coform_components(self, alpha: Vector) -> Tuple[Vector, Vector]:
        """Coefficients of a 1-form over (w^1..w^m, conj w^1..conj w^m)."""
        n = self.algebra.dim
        rows = [w for w in self.omega_frame] + [
            tuple(c.conjugate() for c in w) for w in self.omega_frame
        ]
        m = Matrix(rows, cols=n).transpose()
        from .linalg import solve_affine

        sol = solve_affine(m, alpha)
        if not sol.feasible:
            raise ArithmeticError("coframe decomposition failed")
        return sol.particular[: self.m], sol.particular[self.m:]

    def is_pure_bivector(self, lam: Exterior) -> bool:
        """Type (2,0): contraction with every (0,1)-coform vanishes."""
        for w in self.omega_frame:
            wbar = tuple(c.conjugate() for c in w)
            if not lam.contract(wbar).is_zero():
                return False
        return True

    def exterior_to_frame(self, x: Exterior, conjugate_slots: bool = False) -> Exterior:
        """Re-express a polyvector (slots = g_C) over (T_1..T_m, Tbar_1..m)."""
        n = self.algebra.dim
        # e_k = sum_p R[k][p] * frame_p with frame = (T_1..T_m, Tbar_1..Tbar_m)
        cols = list(self.t_frame) + [tuple(c.conjugate() for c in t) for t in self.t_frame]
        frame = Matrix(cols, cols=n).transpose()
        r = inverse(frame)
        return x.transform(r.transpose())

    def coform_exterior_to_frame(self, x: Exterior) -> Exterior:
        """Re-express a form (slots = g*_C) over (w^1..w^m, wbar^1..wbar^m)."""
        n = self.algebra.dim
        rows = [w for w in self.omega_frame] + [
            tuple(c.conjugate() for c in w) for w in self.omega_frame
        ]
        frame = Matrix(rows, cols=n)  # rows are the frame coforms
        return x.transform(inverse(frame))

    def is_abelian(self) -> bool:
        """[JX, JY] = [X, Y] on basis pairs; cross-checked against the
        statement that the (1,0)-algebra is abelian (both must agree)."""
        n = self.algebra.dim
        direct = True
        for a in range(n):
            for b in range(a + 1, n):
                x, y = vunit(n, a), vunit(n, b)
                lhs = self.algebra.bracket(self.j.apply(x), self.j.apply(y))
                if lhs != self.algebra.bracket(x, y):
                    direct = False
                    break
            if not direct:
                break
        eigen = all(
            vis_zero(self.algebra.bracket(t1, t2))
            for i, t1 in enumerate(self.t_frame)
            for t2 in self.t_frame[i + 1:]
        )
        if direct != eigen:
            raise ArithmeticError(
                "abelian test mismatch between the direct identity and the eigenspace route"
            )
        return direct


@dataclass(frozen=True)
class AscendingBasis:
    coframe: tuple  # (1,0)-coforms as coordinate vectors on g*_C
    abelian: bool


def find_ascending_basis(cx: ClassicalComplexStructure) -> Optional[AscendingBasis]:
    """Greedy filtration of the (1,0)-coframe.

    Chooses w^1, w^2, ... so that each d w^j lies in the span of
    w^k ^ conj(w^l) and w^k ^ w^l over previously chosen elements,
    extending by RREF rows in lexicographic order; returns None when the
    filtration stalls before exhausting the (1,0)-coframe.
    """
    algebra = cx.algebra
    n = algebra.dim
    m = cx.m
    base = list(cx.omega_frame)
    lam2 = n * (n - 1) // 2

    chosen: List[Vector] = []  # coefficient vectors over the base coframe
    while len(chosen) < m:
        allowed = _allowed_span(cx, chosen)
        residues = []
        for k in range(m):
            dk = algebra.d(Exterior(n, 1, {(i,): c for i, c in enumerate(base[k])}))
            residues.append(allowed.reduce(dk.to_coords()))
        condition = Matrix(residues, cols=lam2).transpose()
        candidates = kernel(condition)  # subspace of C^m
        current = Subspace.from_vectors(m, chosen)
        extended = False
        for row in candidates.basis.entries:
            if not current.contains(row):
                chosen.append(row)
                current = current + Subspace.from_vectors(m, [row])
                extended = True
        if not extended:
            return None
    coframe = []
    for coeffs in chosen:
        w = vzero(n)
        for c, b in zip(coeffs, base):
            w = vadd(w, vscale(c, b))
        coframe.append(w)
    # abelian flag: every d w^j has no (2,0)-component in the chosen coframe
    abelian = True
    for w in coframe:
        dw = algebra.d(Exterior(n, 1, {(i,): c for i, c in enumerate(w)}))
        in_frame = cx.coform_exterior_to_frame(dw)
        for (a, b), c in in_frame.items():
            if a < m and b < m and not c.is_zero():
                abelian = False
    return AscendingBasis(tuple(coframe), abelian)


def _allowed_span(cx: ClassicalComplexStructure, chosen: List[Vector]) -> Subspace:
    """Span of w_k ^ conj(w_l) and w_k ^ w_l over the chosen coframe part."""
    algebra = cx.algebra
    n = algebra.dim
    base = list(cx.omega_frame)
    ws = []
    for coeffs in chosen:
        w = vzero(n)
        for c, b in zip(coeffs, base):
            w = vadd(w, vscale(c, b))
        ws.append(w)
    gens = []
    for a in range(len(ws)):
        wa = Exterior(n, 1, {(i,): c for i, c in enumerate(ws[a])})
        for b in range(len(ws)):
            wb_bar = Exterior(n, 1, {(i,): c.conjugate() for i, c in enumerate(ws[b])})
            gens.append(wa.wedge(wb_bar).to_coords())
            if b > a:
                wb = Exterior(n, 1, {(i,): c for i, c in enumerate(ws[b])})
                gens.append(wa.wedge(wb).to_coords())
    return Subspace.from_vectors(n * (n - 1) // 2, gens)
