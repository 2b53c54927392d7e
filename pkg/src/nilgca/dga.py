"""The invariant differential Gerstenhaber algebra of a generalized
complex structure: algebroid differential, Schouten bracket, cohomology,
holomorphic-Poisson tests, and Maurer-Cartan deformations.

Normalization, fixed once: with {L_p} a basis of the (+i)-eigenspace and
{L^r} its dual under twice the pairing (2<L^r, conj L_s> = delta_rs),

    delta L_p = sum_{r<s} <L_p, [[conj L_r, conj L_s]]> L^r ^ L^s,

extended as an odd derivation.  On a classical complex structure this
makes delta equal exactly one half of the delbar operator computed from
the frame expansion delbar T = sum_k [[Tbar_k, T]]^{1,0} ^ wbar^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .double import CourantDouble, DoubleSubspace, PreconditionError
from .exterior import Exterior, derivation_matrix, format_exterior, lex_basis
from .gcs import ClassicalComplexStructure, Gcs
from .lie import LieAlgebra, _quotient
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    inverse,
    kernel,
    vadd,
    vector,
    vis_zero,
    vscale,
    vunit,
    vzero,
)
from .scalars import GaussianRational, HALF, I, ONE, ZERO, scalar


class NotIntegrableError(PreconditionError):
    """Cohomology of a non-integrable structure was requested."""


class NotClosedBracketError(PreconditionError):
    """The eigenspace is not closed, so the Schouten bracket is undefined."""


class DgaPresentation:
    """Bracket constants and per-degree differential matrices on Lambda* ell."""

    __slots__ = ("gcs", "basis", "n", "_full_inverse_t", "bracket_constants",
                 "closed", "delta_images", "_delta_matrices", "_names")

    def __init__(self, gcs: Gcs, basis: Optional[Sequence[Vector]] = None,
                 names: Optional[Sequence[str]] = None):
        double = gcs.double
        ell = gcs.eigenspace()
        n = double.n
        if basis is None:
            basis = ell.basis_vectors()
        else:
            basis = [vector(b) for b in basis]
            span = Subspace.from_vectors(double.dim, basis)
            if len(basis) != n or span != ell.space:
                raise PreconditionError("given basis does not span the eigenspace")
        object.__setattr__(self, "gcs", gcs)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_names", tuple(names) if names else None)

        conj_basis = [tuple(c.conjugate() for c in b) for b in basis]
        # coordinates over (basis, conj basis): v = sum c_p row_p
        q = Matrix(list(basis) + conj_basis, cols=double.dim)
        object.__setattr__(self, "_full_inverse_t", inverse(q.transpose()))

        # pairing-duality matrix D_pq = 2 <L_p, conj L_q>
        d = Matrix(
            [[double.pairing(basis[p], conj_basis[q]) * 2 for q in range(n)]
             for p in range(n)],
            cols=n,
        )
        d_inv = inverse(d)

        # conjugate-side brackets and the degree-1 differential
        delta_images = []
        pair_brackets = {}
        for r in range(n):
            for s in range(r + 1, n):
                pair_brackets[(r, s)] = double.bracket(conj_basis[r], conj_basis[s])
        for p in range(n):
            total = Exterior.zero(n, 2)
            for (r, s), br in pair_brackets.items():
                c = double.pairing(basis[p], br)
                if c.is_zero():
                    continue
                dual_r = Exterior(n, 1, {(q,): d_inv[r, q] for q in range(n)})
                dual_s = Exterior(n, 1, {(q,): d_inv[s, q] for q in range(n)})
                total = total + dual_r.wedge(dual_s).scale(c)
            delta_images.append(total)
        object.__setattr__(self, "delta_images", tuple(delta_images))
        object.__setattr__(self, "_delta_matrices", {})

        # bracket structure constants on the eigenspace, when closed
        constants = {}
        closed = True
        for a in range(n):
            for b in range(a + 1, n):
                br = double.bracket(basis[a], basis[b])
                coords = self._full_inverse_t.apply(br)
                ell_part, conj_part = coords[:n], coords[n:]
                if not vis_zero(conj_part):
                    closed = False
                    constants[(a, b)] = None
                else:
                    constants[(a, b)] = Exterior(
                        n, 1, {(q,): c for q, c in enumerate(ell_part)}
                    )
        object.__setattr__(self, "closed", closed)
        object.__setattr__(self, "bracket_constants", constants)

    def __setattr__(self, name, value):
        raise AttributeError("DgaPresentation is immutable")

    # -- naming ------------------------------------------------------------------

    def name(self, slot: int) -> str:
        if self._names is not None:
            return self._names[slot]
        return "L%d" % (slot + 1)

    def format(self, x: Exterior) -> str:
        return format_exterior(x, self.name)

    # -- coordinates --------------------------------------------------------------

    def to_ambient(self, x: Exterior) -> Exterior:
        if x.dim != self.n:
            raise DimensionError("multivector has wrong slot count")
        return x.transform(Matrix(list(self.basis), cols=self.gcs.double.dim))

    def from_ambient(self, y: Exterior) -> Exterior:
        if y.dim != self.gcs.double.dim:
            raise DimensionError("ambient tensor has wrong slot count")
        full = y.transform(self._full_inverse_t.transpose())
        table = {}
        for idx, c in full.items():
            if any(i >= self.n for i in idx):
                raise PreconditionError("tensor does not lie in the eigenspace algebra")
            table[idx] = c
        return Exterior(self.n, y.degree, table)

    def element(self, text: str) -> Exterior:
        """Parse "L1^L3 - 1/2*L2^L4" against this presentation's basis."""
        from .notation import parse_expression

        def resolve(symbol: str) -> Exterior:
            if self._names is not None and symbol in self._names:
                return Exterior.monomial(self.n, (self._names.index(symbol),))
            if symbol.startswith("L"):
                slot = int(symbol[1:]) - 1
                if 0 <= slot < self.n:
                    return Exterior.monomial(self.n, (slot,))
            raise ValueError("unknown eigenspace symbol %r" % symbol)

        return parse_expression(text, resolve)

    # -- the differential -----------------------------------------------------------

    def delta_matrix(self, k: int) -> Matrix:
        if not 0 <= k <= self.n:
            raise DimensionError("degree out of range")
        cached = self._delta_matrices.get(k)
        if cached is None:
            cached = derivation_matrix(self.n, k, list(self.delta_images))
            self._delta_matrices[k] = cached
        return cached

    def delta(self, x: Exterior) -> Exterior:
        m = self.delta_matrix(x.degree)
        return Exterior.from_coords(self.n, x.degree + 1, m.apply(x.to_coords()))

    def squares_to_zero(self) -> bool:
        for k in range(self.n - 1):
            if not (self.delta_matrix(k + 1) @ self.delta_matrix(k)).is_zero():
                return False
        return True

    def cohomology(self, k: int):
        if not self.squares_to_zero():
            raise NotIntegrableError("delta-bar does not square to zero")
        ker = kernel(self.delta_matrix(k))
        if k == 0:
            image = Subspace.zero(len(lex_basis(self.n, 0)))
        else:
            prev = self.delta_matrix(k - 1)
            image = Subspace.from_vectors(prev.rows, [prev.col(j) for j in range(prev.cols)])
        return _quotient(ker, image, self.n, k)

    # -- the Schouten bracket ----------------------------------------------------------

    def _base_bracket(self, p: int, q: int) -> Exterior:
        if p == q:
            return Exterior.zero(self.n, 1)
        key = (p, q) if p < q else (q, p)
        value = self.bracket_constants[key]
        if value is None:
            raise NotClosedBracketError(
                "eigenspace is not closed under the bracket on pair %s" % (key,)
            )
        return value if p < q else -value

    def schouten(self, a: Exterior, b: Exterior) -> Exterior:
        if a.dim != self.n or b.dim != self.n:
            raise DimensionError("multivector has wrong slot count")
        return _graded_bracket(self.n, self._base_bracket, a, b)

    # -- deformation ----------------------------------------------------------------------

    def ad_matrix(self, gamma: Exterior, k: int) -> Matrix:
        """Matrix of [[gamma, .]] : Lambda^k -> Lambda^{k + |gamma| - 1}."""
        target = k + gamma.degree - 1
        cols = []
        for idx in combinations(range(self.n), k):
            image = self.schouten(gamma, Exterior.monomial(self.n, idx))
            cols.append(image.to_coords())
        if not cols:
            return Matrix.zeros(len(lex_basis(self.n, target)), 0)
        return Matrix(cols, cols=len(lex_basis(self.n, target))).transpose()

    def mc_defect(self, gamma: Exterior) -> Exterior:
        if gamma.degree != 2:
            raise DimensionError("deformations are degree-2 multivectors")
        return self.delta(gamma) + self.schouten(gamma, gamma).scale(HALF)

    def maurer_cartan_check(self, gamma: Exterior) -> bool:
        return self.mc_defect(gamma).is_zero()

    def deformed(self, gamma: Exterior) -> "DeformedPresentation":
        matrices = {}
        for k in range(self.n + 1):
            matrices[k] = self.delta_matrix(k) + self.ad_matrix(gamma, k)
        return DeformedPresentation(self, gamma, matrices)

    # -- equality -----------------------------------------------------------------------------

    def delta_matrices(self) -> Dict[int, Matrix]:
        return {k: self.delta_matrix(k) for k in range(self.n + 1)}

    def same_presentation(self, other) -> bool:
        return (
            self.n == other.n
            and self.delta_matrices() == other.delta_matrices()
            and _bracket_tables_equal(self.bracket_constants, other.bracket_constants)
        )


@dataclass(frozen=True)
class DeformedPresentation:
    """The same exterior algebra with differential delta + ad_Gamma."""

    base: DgaPresentation
    gamma: Exterior
    matrices: Dict[int, Matrix]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def bracket_constants(self):
        return self.base.bracket_constants

    def delta_matrix(self, k: int) -> Matrix:
        return self.matrices[k]

    def delta_matrices(self) -> Dict[int, Matrix]:
        return dict(self.matrices)

    def delta(self, x: Exterior) -> Exterior:
        m = self.matrices[x.degree]
        return Exterior.from_coords(self.n, x.degree + 1, m.apply(x.to_coords()))

    def squares_to_zero(self) -> bool:
        for k in range(self.n - 1):
            if not (self.matrices[k + 1] @ self.matrices[k]).is_zero():
                return False
        return True

    def square_witness(self) -> Optional[Tuple[int, Exterior]]:
        """A basis multivector whose image under delta_Gamma^2 is nonzero."""
        for k in range(self.n - 1):
            square = self.matrices[k + 1] @ self.matrices[k]
            if square.is_zero():
                continue
            for j, idx in enumerate(combinations(range(self.n), k)):
                if not vis_zero(square.col(j)):
                    return k, Exterior.monomial(self.n, idx)
        return None

    def same_presentation(self, other) -> bool:
        return (
            self.n == other.n
            and self.delta_matrices() == other.delta_matrices()
            and _bracket_tables_equal(self.bracket_constants, other.bracket_constants)
        )


def _bracket_tables_equal(left, right) -> bool:
    return left == right


def _graded_bracket(dim: int, base: Callable[[int, int], Exterior],
                    a: Exterior, b: Exterior) -> Exterior:
    """Biderivation extension of a degree-(1,1) bracket.

    [[a, b1 ^ rest]] = [[a, b1]] ^ rest + (-1)^{|a|-1} b1 ^ [[a, rest]],
    [[a, b]] = -(-1)^{(|a|-1)(|b|-1)} [[b, a]].
    """
    ka, kb = a.degree, b.degree
    if ka == 0 or kb == 0:
        return Exterior.zero(dim, max(ka + kb - 1, 0))
    out = Exterior.zero(dim, ka + kb - 1)
    if ka == 1 and kb == 1:
        for (p,), ca in a.items():
            for (q,), cb in b.items():
                out = out + base(p, q).scale(ca * cb)
        return out
    if kb > 1:
        for idx, cb in b.items():
            first = Exterior.monomial(dim, (idx[0],))
            rest = Exterior.monomial(dim, idx[1:])
            term = _graded_bracket(dim, base, a, first).wedge(rest)
            tail = first.wedge(_graded_bracket(dim, base, a, rest))
            if (ka - 1) % 2:
                tail = -tail
            out = out + (term + tail).scale(cb)
        return out
    # kb == 1, ka > 1: graded antisymmetry with |b| - 1 = 0
    return -_graded_bracket(dim, base, b, a)


# ---------------------------------------------------------------------------
# ambient (mixed) Schouten bracket on the double
# ---------------------------------------------------------------------------

def ambient_schouten(double: CourantDouble, a: Exterior, b: Exterior) -> Exterior:
    """Graded Leibniz extension of the Courant bracket on Lambda*(g + g*)_C.

    Well-defined on the subalgebras where it is used (closed isotropic
    eigenspaces, classical frames); the extension rule matches the
    eigenspace Schouten bracket.
    """
    dim = double.dim
    if a.dim != dim or b.dim != dim:
        raise DimensionError("ambient tensors expected")

    def base(p: int, q: int) -> Exterior:
        br = double.bracket(vunit(dim, p), vunit(dim, q))
        return Exterior(dim, 1, {(i,): c for i, c in enumerate(br)})

    return _graded_bracket(dim, base, a, b)


def vector_to_ambient(double: CourantDouble, x: Vector,
                      coform: Optional[Vector] = None) -> Exterior:
    u = double.join(x, coform if coform is not None else vzero(double.n))
    return Exterior.from_vector_coords(u)


def polyvector_to_ambient(double: CourantDouble, x: Exterior) -> Exterior:
    """Embed a polyvector on g (slots = n) into the double (slots = 2n)."""
    if x.dim != double.n:
        raise DimensionError("polyvector has wrong slot count")
    return Exterior(double.dim, x.degree, dict(x.coeff))


def coform_to_ambient(double: CourantDouble, alpha: Exterior) -> Exterior:
    """Embed a form on g* (slots = n) into the double (slots = 2n)."""
    if alpha.dim != double.n:
        raise DimensionError("form has wrong slot count")
    return Exterior(
        double.dim, alpha.degree,
        {tuple(i + double.n for i in idx): c for idx, c in alpha.items()},
    )


# ---------------------------------------------------------------------------
# classical structures: the delbar comparison
# ---------------------------------------------------------------------------

class ClassicalDga:
    """DGA of a classical complex structure, presented on the frame
    (T_1..T_m, wbar^1..wbar^m); slot j < m is T_{j+1}, slot m+k is wbar^{k+1}.
    """

    __slots__ = ("cx", "double", "gcs", "presentation", "m")

    def __init__(self, cx: ClassicalComplexStructure,
                 double: Optional[CourantDouble] = None):
        double = double or CourantDouble(cx.algebra)
        gcs = Gcs.from_complex(double, cx)
        m = cx.m
        basis = []
        names = []
        for j, t in enumerate(cx.t_frame):
            basis.append(double.join(t, vzero(double.n)))
            names.append("T%d" % (j + 1))
        for k, w in enumerate(cx.omega_frame):
            wbar = tuple(c.conjugate() for c in w)
            basis.append(double.join(vzero(double.n), wbar))
            names.append("W%d" % (k + 1))
        presentation = DgaPresentation(gcs, basis=basis, names=names)
        object.__setattr__(self, "cx", cx)
        object.__setattr__(self, "double", double)
        object.__setattr__(self, "gcs", gcs)
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("ClassicalDga is immutable")

    # -- independent delbar computation (frame expansion) ----------------------------

    def delbar_t(self, j: int) -> Exterior:
        """delbar T_{j+1} = sum_k [[Tbar_k, T_{j+1}]]^{1,0} ^ wbar^k."""
        cx, dbl, m = self.cx, self.double, self.m
        n2 = 2 * m
        out = Exterior.zero(n2, 2)
        for k in range(m):
            tbar = tuple(c.conjugate() for c in cx.t_frame[k])
            br = cx.algebra.bracket(tbar, cx.t_frame[j])
            part = cx.vector_10_part(br)
            if vis_zero(part):
                continue
            plus, _ = cx.vector_components(part)
            t_part = Exterior(n2, 1, {(q,): c for q, c in enumerate(plus)})
            wbar_k = Exterior.monomial(n2, (m + k,))
            out = out + t_part.wedge(wbar_k)
        return out

    def delbar_wbar(self, k: int) -> Exterior:
        """delbar wbar^{k+1} = (1/2) sum_j [[Tbar_j, wbar^{k+1}]]^{0,1} ^ wbar^j.

        Same bracket-projection shape as the vector formula; under this
        package's sign conventions it equals MINUS the (0,2)-component of
        d wbar (checked by dolbeault_02_part and tested), and it is the
        unique coform extension satisfying delta = (1/2) delbar.
        """
        cx, dbl, m = self.cx, self.double, self.m
        n2 = 2 * m
        wbar = tuple(c.conjugate() for c in cx.omega_frame[k])
        out = Exterior.zero(n2, 2)
        for j in range(m):
            tbar = tuple(c.conjugate() for c in cx.t_frame[j])
            br = dbl.bracket(dbl.join(tbar, vzero(dbl.n)), dbl.join(vzero(dbl.n), wbar))
            _, coform = dbl.split(br)
            plus, minus = cx.coform_components(coform)
            if vis_zero(minus):
                continue
            w_part = Exterior(n2, 1, {(m + q,): c for q, c in enumerate(minus)})
            wbar_j = Exterior.monomial(n2, (m + j,))
            out = out + w_part.wedge(wbar_j)
        return out.scale(HALF)

    def dolbeault_02_part(self, k: int) -> Exterior:
        """(0,2)-component of d wbar^{k+1} over the frame wedge slots."""
        cx, m = self.cx, self.m
        n = cx.algebra.dim
        wbar = tuple(c.conjugate() for c in cx.omega_frame[k])
        form = Exterior(n, 1, {(i,): c for i, c in enumerate(wbar)})
        d_form = cx.algebra.d(form)
        in_frame = cx.coform_exterior_to_frame(d_form)
        table = {}
        for (a, b), c in in_frame.items():
            if a >= m and b >= m:
                table[(a, b)] = c  # frame slots m.. are the wbar's, as in the DGA
        return Exterior(2 * m, 2, table)

    def delbar_images(self) -> List[Exterior]:
        return [self.delbar_t(j) for j in range(self.m)] + [
            self.delbar_wbar(k) for k in range(self.m)
        ]

    def delbar_matrix(self, k: int) -> Matrix:
        return derivation_matrix(2 * self.m, k, self.delbar_images())

    def delbar(self, x: Exterior) -> Exterior:
        m = self.delbar_matrix(x.degree)
        return Exterior.from_coords(2 * self.m, x.degree + 1, m.apply(x.to_coords()))

    def check_half_delbar(self) -> bool:
        """delta = (1/2) delbar in every degree, exactly."""
        for k in range(2 * self.m):
            if self.presentation.delta_matrix(k) != self.delbar_matrix(k).scale(HALF):
                return False
        return True

    # -- bivector plumbing ---------------------------------------------------------------

    def bivector_to_presentation(self, lam: Exterior) -> Exterior:
        """A (2,0)-bivector on g (slots = n) as a degree-2 multivector here."""
        in_frame = self.cx.exterior_to_frame(lam)
        table = {}
        for idx, c in in_frame.items():
            if any(i >= self.m for i in idx):
                raise PreconditionError("bivector is not of type (2,0)")
            table[idx] = c
        return Exterior(2 * self.m, 2, table)


@dataclass(frozen=True)
class HolomorphicPoissonReport:
    holomorphic_via_delta: bool
    holomorphic_via_bracket: bool
    square_bracket_vanishes: bool

    @property
    def ok(self) -> bool:
        return self.holomorphic_via_delta and self.square_bracket_vanishes

    def consistent(self) -> bool:
        return self.holomorphic_via_delta == self.holomorphic_via_bracket


def is_holomorphic_poisson(dga: ClassicalDga, lam: Exterior) -> HolomorphicPoissonReport:
    """delbar Lambda = 0, tested two independent ways, plus [[Lambda, Lambda]] = 0.

    Route one: the algebroid differential of the presentation kills the
    bivector.  Route two: for every (0,1)-frame vector, the (2,0)-component
    of its bracket with the bivector vanishes.
    """
    cx = dga.cx
    gamma = dga.bivector_to_presentation(lam)
    via_delta = dga.presentation.delta(gamma).is_zero()

    dbl = dga.double
    lam_ambient = polyvector_to_ambient(dbl, lam)
    via_bracket = True
    for t in cx.t_frame:
        tbar = tuple(c.conjugate() for c in t)
        br = ambient_schouten(dbl, vector_to_ambient(dbl, tbar), lam_ambient)
        # results are polyvectors; project onto the (2,0)-part
        g_poly = Exterior(cx.algebra.dim, 2,
                          {idx: c for idx, c in br.items() if all(i < dbl.n for i in idx)})
        in_frame = cx.exterior_to_frame(g_poly)
        for idx, c in in_frame.items():
            if all(i < cx.m for i in idx) and not c.is_zero():
                via_bracket = False
    square = dga.presentation.schouten(gamma, gamma)
    report = HolomorphicPoissonReport(via_delta, via_bracket, square.is_zero())
    if not report.consistent():
        raise ArithmeticError("the two delbar routes disagree")
    return report


@dataclass(frozen=True)
class PoissonKernelReport:
    delta_closed: bool
    classical_side: Tuple[bool, ...]

    @property
    def consistent(self) -> bool:
        return self.delta_closed == all(self.classical_side)


def holomorphic_poisson_presentation(dga: ClassicalDga, lam: Exterior) -> DgaPresentation:
    """Presentation of the deformed structure on the frame {T_j, wbar^k + conj(lam) wbar^k}."""
    cx, dbl = dga.cx, dga.double
    gcs = Gcs.from_holomorphic_poisson(dbl, cx, lam)
    lam_bar = lam.conjugate()
    basis = []
    names = []
    for j, t in enumerate(cx.t_frame):
        basis.append(dbl.join(t, vzero(dbl.n)))
        names.append("T%d" % (j + 1))
    for k, w in enumerate(cx.omega_frame):
        wbar = tuple(c.conjugate() for c in w)
        graph = lam_bar.contract(wbar)  # conj(lam) applied to the coform
        vec = tuple(graph.get((i,)) for i in range(dbl.n))
        basis.append(dbl.join(vec, wbar))
        names.append("W%d" % (k + 1))
    return DgaPresentation(gcs, basis=basis, names=names)


def poisson_vector_kernel_test(dga: ClassicalDga, lam: Exterior, u: Vector) -> PoissonKernelReport:
    """delta u = 0 in the deformed DGA  iff  delbar u = 0 and L_u Lambda = 0."""
    cx, dbl = dga.cx, dga.double
    hp = holomorphic_poisson_presentation(dga, lam)
    plus, minus = cx.vector_components(u)
    if not vis_zero(minus):
        raise PreconditionError("expected a (1,0)-vector")
    element = Exterior(2 * cx.m, 1, {(j,): c for j, c in enumerate(plus)})
    delta_closed = hp.delta(element).is_zero()

    # classical side: delbar u = 0 and the Lie derivative of the bivector
    delbar_u = Exterior.zero(2 * cx.m, 2)
    for j, c in enumerate(plus):
        if not c.is_zero():
            delbar_u = delbar_u + dga.delbar_t(j).scale(c)
    lie_der = ambient_schouten(
        dbl, vector_to_ambient(dbl, u), polyvector_to_ambient(dbl, lam)
    )
    report = PoissonKernelReport(
        delta_closed, (delbar_u.is_zero(), lie_der.is_zero())
    )
    if not report.consistent:
        raise ArithmeticError("vector kernel lemma failed")
    return report


def poisson_coform_kernel_test(dga: ClassicalDga, lam: Exterior,
                               wbar: Vector) -> PoissonKernelReport:
    """delta(wbar + conj(lam) wbar) = 0  iff  [[Lambda, wbar]] = 0 and delbar wbar = 0."""
    cx, dbl = dga.cx, dga.double
    hp = holomorphic_poisson_presentation(dga, lam)
    plus, minus = cx.coform_components(wbar)
    if not vis_zero(plus):
        raise PreconditionError("expected a (0,1)-form")
    element = Exterior(2 * cx.m, 1, {(cx.m + k,): c for k, c in enumerate(minus)})
    delta_closed = hp.delta(element).is_zero()

    delbar_w = Exterior.zero(2 * cx.m, 2)
    for k, c in enumerate(minus):
        if not c.is_zero():
            delbar_w = delbar_w + dga.delbar_wbar(k).scale(c)
    bracket = ambient_schouten(
        dbl,
        polyvector_to_ambient(dbl, lam),
        Exterior(dbl.dim, 1, {(dbl.n + i,): c for i, c in enumerate(wbar)}),
    )
    report = PoissonKernelReport(
        delta_closed, (bracket.is_zero(), delbar_w.is_zero())
    )
    if not report.consistent:
        raise ArithmeticError("coform kernel lemma failed")
    return report


# ---------------------------------------------------------------------------
# symplectic comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymplecticIsoReport:
    differential_ok: bool
    bracket_ok: bool
    cohomology_ok: bool
    betti: Tuple[int, ...]
    dga_dims: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.differential_ok and self.bracket_ok and self.cohomology_ok


def symplectic_dga_iso_check(algebra: LieAlgebra, omega: Exterior,
                             max_wedge_degree: int = 2) -> SymplecticIsoReport:
    """Verify the form-side model of the symplectic DGA.

    On the frame a_p = e_p - i Omega(e_p), the projection
    phi(a_p) = -i Omega(e_p) intertwines exactly with fixed constants:
        phi(delta x) = -(1/4) d(phi x)          (all degrees),
        phi([[a, b]]) = i * Omega([O^{-1} phi a, O^{-1} phi b]),
    and the DGA cohomology dimensions equal the Betti numbers.  The
    constants are forced by the delta = (1/2) delbar normalization.
    """
    n = algebra.dim
    double = CourantDouble(algebra)
    gcs = Gcs.from_symplectic(double, omega)
    omega_block = Matrix(
        [[omega.get((i, j)) for j in range(n)] for i in range(n)], cols=n
    ).transpose()  # maps X to Omega(X) = iota_X Omega
    basis = []
    for p in range(n):
        x = vunit(n, p)
        basis.append(double.join(x, vscale(-I, omega_block.apply(x))))
    pres = DgaPresentation(gcs, basis=basis)

    phi = Matrix([vscale(-I, omega_block.apply(vunit(n, p))) for p in range(n)], cols=n)

    def phi_map(x: Exterior) -> Exterior:
        return x.transform(phi)

    quarter = scalar(-1) / scalar(4)
    differential_ok = True
    for k in range(min(max_wedge_degree, n - 1) + 1):
        for idx in combinations(range(n), k):
            x = Exterior.monomial(n, idx)
            lhs = phi_map(pres.delta(x))
            rhs = algebra.d(phi_map(x)).scale(quarter)
            if lhs != rhs:
                differential_ok = False

    omega_inv = inverse(omega_block)
    bracket_ok = True
    for p in range(n):
        for q in range(p + 1, n):
            a = Exterior.monomial(n, (p,))
            b = Exterior.monomial(n, (q,))
            lhs = phi_map(pres.schouten(a, b))
            mu = tuple(phi_map(a).get((i,)) for i in range(n))
            nu = tuple(phi_map(b).get((i,)) for i in range(n))
            lie = algebra.bracket(omega_inv.apply(mu), omega_inv.apply(nu))
            rhs_vec = vscale(I, omega_block.apply(lie))
            rhs = Exterior(n, 1, {(i,): c for i, c in enumerate(rhs_vec)})
            if lhs != rhs:
                bracket_ok = False

    betti = tuple(algebra.betti())
    dga_dims = tuple(pres.cohomology(k).dim for k in range(n + 1))
    return SymplecticIsoReport(
        differential_ok, bracket_ok, betti == dga_dims, betti, dga_dims
    )
