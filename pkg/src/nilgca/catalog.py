"""Bundled corpus: structure-equation tuples, stored structures on them,
and the expected verdicts the engine must regenerate.

Structures are stored in the JSON shapes accepted by the CLI:
  {"J": [[...]], "B": [[...]], "Pi": [[...]]}   component matrices
  {"symplectic": "E1^E3 + E2^E6 + E4^E5"}       closed nondegenerate 2-form
  {"complex": {"J": [[...]]}}                   classical structure
  {"complex": {"J": ...}, "poisson": "T2^T3"}   deformation by a (2,0)-bivector
Matrix entries are rational strings; expressions use e/E (and T for the
canonical (1,0)-frame of the classical structure).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .double import CourantDouble, DoubleSubspace
from .exterior import Exterior
from .gcs import ClassicalComplexStructure, Gcs, find_ascending_basis
from .lie import LieAlgebra, is_bracket_isomorphism
from .linalg import Matrix, vector
from .notation import parse_expression
from .scalars import scalar
from .semiabelian import (
    SEMI_ABELIAN,
    check_semi_abelian,
    search_semi_abelian,
    semi_abelian_report,
    symplectic_semi_abelian,
)


# ---------------------------------------------------------------------------
# JSON <-> structures
# ---------------------------------------------------------------------------

def matrix_from_json(n: int, rows) -> Matrix:
    return Matrix([[scalar(x) for x in row] for row in rows], cols=n)


def matrix_to_json(m: Matrix):
    return [[str(x) for x in row] for row in m.entries]


def form_from_text(n: int, text: str) -> Exterior:
    """A form on g*: symbols E<k> for the coframe."""

    def resolve(symbol: str) -> Exterior:
        if symbol.startswith("E"):
            k = int(symbol[1:]) - 1
            if 0 <= k < n:
                return Exterior.monomial(n, (k,))
        raise ValueError("expected coframe symbols E1..E%d, got %r" % (n, symbol))

    return parse_expression(text, resolve)


def bivector_from_text(n: int, text: str,
                       cx: Optional[ClassicalComplexStructure] = None) -> Exterior:
    """A polyvector on g: symbols e<k>, or T<j> for the (1,0)-frame of cx."""

    def resolve(symbol: str) -> Exterior:
        if symbol.startswith("e"):
            k = int(symbol[1:]) - 1
            if 0 <= k < n:
                return Exterior.monomial(n, (k,))
        if symbol.startswith("T") and cx is not None:
            j = int(symbol[1:]) - 1
            if 0 <= j < cx.m:
                return Exterior.from_vector_coords(cx.t_frame[j])
        raise ValueError("unknown vector symbol %r" % symbol)

    return parse_expression(text, resolve)


@dataclass(frozen=True)
class BuiltStructure:
    gcs: Gcs
    classical: Optional[ClassicalComplexStructure] = None
    poisson: Optional[Exterior] = None
    symplectic: Optional[Exterior] = None


def build_structure(algebra: LieAlgebra, doc: dict,
                    double: Optional[CourantDouble] = None) -> BuiltStructure:
    double = double or CourantDouble(algebra)
    n = algebra.dim
    if "symplectic" in doc:
        omega = doc["symplectic"]
        if isinstance(omega, str):
            omega = form_from_text(n, omega)
        else:
            omega = Exterior(n, 2, {
                (i, j): scalar(c)
                for i, row in enumerate(omega) for j, c in enumerate(row)
                if i < j
            })
        return BuiltStructure(Gcs.from_symplectic(double, omega), symplectic=omega)
    if "complex" in doc:
        j = matrix_from_json(n, doc["complex"]["J"])
        cx = ClassicalComplexStructure(algebra, j)
        if "poisson" in doc:
            lam = bivector_from_text(n, doc["poisson"], cx)
            return BuiltStructure(
                Gcs.from_holomorphic_poisson(double, cx, lam),
                classical=cx, poisson=lam,
            )
        return BuiltStructure(Gcs.from_complex(double, cx), classical=cx)
    j = matrix_from_json(n, doc["J"])
    b = doc["B"]
    pi = doc["Pi"]
    b = form_from_text(n, b) if isinstance(b, str) else matrix_from_json(n, b)
    pi = bivector_from_text(n, pi) if isinstance(pi, str) else matrix_from_json(n, pi)
    return BuiltStructure(Gcs.from_components(double, j, b, pi))


# ---------------------------------------------------------------------------
# catalog entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StoredStructure:
    label: str
    doc: dict
    expected: dict
    pair: Optional[Tuple[Tuple[str, ...], Tuple[str, ...]]] = None  # (A, K) elements


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    tuple_text: str
    structures: Tuple[StoredStructure, ...] = ()
    step: Optional[int] = None
    isomorphic_to: Optional[Tuple[str, Tuple[str, ...]]] = None  # (name, vector images)

    def algebra(self) -> LieAlgebra:
        return LieAlgebra.from_tuple(self.tuple_text, name=self.name)


def _j_matrix(n: int, pairs) -> List[List[int]]:
    """J with J(e_a) = e_b, J(e_b) = -e_a for each (a, b), 1-based."""
    m = [[0] * n for _ in range(n)]
    for a, b in pairs:
        m[b - 1][a - 1] = 1
        m[a - 1][b - 1] = -1
    return m


def _rot_block(n: int, pairs) -> List[List[int]]:
    """Degenerate rotation block: J on listed pairs, zero elsewhere."""
    return _j_matrix(n, pairs)


def heisenberg_product_entry(m: int, n: int) -> CatalogEntry:
    """R^{2m+1} + h_{2n+1}: zeros everywhere, the last entry 12+34+...

    The abelian structure pairs (1,2), ..., (2n-1,2n) and the trailing
    coordinates pairwise; (m, n) = (0, 1) reproduces "0,0,0,12".
    """
    dim = 2 * m + 2 * n + 2
    last = "+".join("%d%d" % (2 * k - 1, 2 * k) if 2 * k <= 9 else
                    "[%d][%d]" % (2 * k - 1, 2 * k) for k in range(1, n + 1))
    text = ",".join(["0"] * (dim - 1) + [last])
    pairs = [(2 * k - 1, 2 * k) for k in range(1, n + 1)]
    pairs += [(2 * n + 2 * j - 1, 2 * n + 2 * j) for j in range(1, m + 2)]
    structure = StoredStructure(
        label="abelian-complex",
        doc={"complex": {"J": _j_matrix(dim, pairs)}},
        expected={
            "integrable": True,
            "type": dim // 2,
            "abelian_complex": True,
            "search": SEMI_ABELIAN,
        },
        pair=(
            tuple("e%d" % k for k in range(1, dim + 1)),
            tuple("E%d" % k for k in range(1, dim + 1)),
        ),
    )
    return CatalogEntry(
        name="r%dh%d" % (2 * m + 1, 2 * n + 1),
        tuple_text=text,
        structures=(structure,),
        step=2,
    )


def catalog() -> List[CatalogEntry]:
    entries: List[CatalogEntry] = []

    # 4-dimensional algebras -------------------------------------------------
    entries.append(CatalogEntry(
        name="abelian4",
        tuple_text="0,0,0,0",
        step=1,
        structures=(
            StoredStructure(
                label="abelian-complex",
                doc={"complex": {"J": _j_matrix(4, [(1, 2), (3, 4)])}},
                expected={"integrable": True, "type": 2,
                          "abelian_complex": True, "search": SEMI_ABELIAN},
                pair=(("e1", "e2", "e3", "e4"), ("E1", "E2", "E3", "E4")),
            ),
            StoredStructure(
                label="symplectic-standard",
                doc={"symplectic": "E1^E2 + E3^E4"},
                expected={"integrable": True, "type": 0,
                          "search": SEMI_ABELIAN, "symplectic_search": SEMI_ABELIAN},
            ),
        ),
    ))

    entries.append(CatalogEntry(
        name="rh3",
        tuple_text="0,0,0,12",
        step=2,
        structures=(
            StoredStructure(
                label="kodaira-complex",
                doc={"complex": {"J": _j_matrix(4, [(1, 2), (3, 4)])}},
                expected={"integrable": True, "type": 2,
                          "abelian_complex": True, "search": SEMI_ABELIAN},
                pair=(("e1", "e2", "e3", "e4"), ("E1", "E2", "E3", "E4")),
            ),
            StoredStructure(
                label="type1-B34",
                doc={"J": _rot_block(4, [(1, 2)]),
                     "B": "E3^E4", "Pi": "e3^e4"},
                expected={"integrable": True, "type": 1, "search": SEMI_ABELIAN},
                pair=(("e1", "e2", "e4", "E3"), ("E1", "E2", "E4", "e3")),
            ),
            StoredStructure(
                label="symplectic-e14-e23",
                doc={"symplectic": "E1^E4 + E2^E3"},
                expected={"integrable": True, "type": 0,
                          "search": SEMI_ABELIAN, "symplectic_search": SEMI_ABELIAN},
            ),
        ),
    ))

    entries.append(CatalogEntry(
        name="n4",
        tuple_text="0,0,12,13",
        step=3,
        structures=(
            StoredStructure(
                label="type1-B34",
                doc={"J": _rot_block(4, [(1, 2)]),
                     "B": "E3^E4", "Pi": "e3^e4"},
                expected={"integrable": True, "type": 1, "search": "IMPOSSIBLE"},
            ),
            StoredStructure(
                label="symplectic-e23-e14",
                doc={"symplectic": "E2^E3 + E1^E4"},
                expected={"integrable": True, "type": 0,
                          "search": "IMPOSSIBLE", "symplectic_search": "IMPOSSIBLE"},
            ),
        ),
    ))

    # 6-dimensional 2-step algebras -------------------------------------------
    entries.append(heisenberg_product_entry(1, 1))   # r3h3 = (0,0,0,0,0,12)
    rh5 = heisenberg_product_entry(0, 2)             # rh5 = (0,0,0,0,0,12+34)
    entries.append(CatalogEntry(
        name=rh5.name,
        tuple_text=rh5.tuple_text,
        step=2,
        structures=rh5.structures + (
            StoredStructure(
                label="type2-B56",
                doc={"J": _rot_block(6, [(1, 2), (3, 4)]),
                     "B": "E5^E6", "Pi": "e5^e6"},
                expected={"integrable": True, "type": 2, "search": SEMI_ABELIAN},
                pair=(("e1", "e2", "e3", "e4", "e6", "E5"),
                      ("E1", "E2", "E3", "E4", "E6", "e5")),
            ),
        ),
    ))

    entries.append(CatalogEntry(
        name="h3h3",
        tuple_text="0,0,0,0,12,34",
        step=2,
        structures=(
            StoredStructure(
                label="abelian-complex",
                doc={"complex": {"J": _j_matrix(6, [(1, 2), (3, 4), (5, 6)])}},
                expected={"integrable": True, "type": 3,
                          "abelian_complex": True, "search": SEMI_ABELIAN},
                pair=(tuple("e%d" % k for k in range(1, 7)),
                      tuple("E%d" % k for k in range(1, 7))),
            ),
        ),
    ))

    entries.append(CatalogEntry(
        name="twostep-13+42",
        tuple_text="0,0,0,0,13+42,14+23",
        step=2,
        structures=(
            StoredStructure(
                label="abelian-complex",
                doc={"complex": {"J": _j_matrix(6, [(2, 1), (3, 4), (5, 6)])}},
                expected={"integrable": True, "type": 3,
                          "abelian_complex": True, "search": SEMI_ABELIAN},
                pair=(tuple("e%d" % k for k in range(1, 7)),
                      tuple("E%d" % k for k in range(1, 7))),
            ),
        ),
    ))

    entries.append(CatalogEntry(
        name="twostep-12-14+23",
        tuple_text="0,0,0,0,12,14+23",
        step=2,
        structures=(
            StoredStructure(
                label="abelian-complex",
                doc={"complex": {"J": _j_matrix(6, [(1, 2), (4, 3), (5, 6)])}},
                expected={"integrable": True, "type": 3,
                          "abelian_complex": True, "search": SEMI_ABELIAN},
                pair=(tuple("e%d" % k for k in range(1, 7)),
                      tuple("E%d" % k for k in range(1, 7))),
            ),
        ),
    ))

    # 3-step pair: original and re-based presentations ------------------------
    entries.append(CatalogEntry(
        name="threestep",
        tuple_text="0,0,0,12,14+23,13+42",
        step=3,
        isomorphic_to=("threestep-rebased",
                       ("e1", "e2", "e3", "-e4", "-e6", "e5")),
    ))
    entries.append(CatalogEntry(
        name="threestep-rebased",
        tuple_text="0,0,0,-12,31+42,41-32",
        step=3,
        structures=(
            StoredStructure(
                label="abelian-complex",
                doc={"complex": {"J": _j_matrix(6, [(1, 2), (3, 4), (5, 6)])}},
                expected={"integrable": True, "type": 3,
                          "abelian_complex": True, "search": SEMI_ABELIAN},
                pair=(tuple("e%d" % k for k in range(1, 7)),
                      tuple("E%d" % k for k in range(1, 7))),
            ),
            StoredStructure(
                label="holomorphic-poisson-T2T3",
                doc={"complex": {"J": _j_matrix(6, [(1, 2), (3, 4), (5, 6)])},
                     "poisson": "T2^T3"},
                # the deformed pair: A = g stays admissible (the underlying
                # structure is abelian) and K is the real span of the
                # deformed coform frame wbar + conj(lam) wbar
                expected={"integrable": True},
                pair=(("e1", "e2", "e3", "e4", "e5", "e6"),
                      ("E1", "E2", "e5 + 2*E3", "e6 - 2*E4",
                       "e3 - 2*E5", "e4 + 2*E6")),
            ),
        ),
    ))

    # symplectic example ------------------------------------------------------
    entries.append(CatalogEntry(
        name="symplectic-6d",
        tuple_text="0,0,0,0,12,14+25",
        step=3,
        structures=(
            StoredStructure(
                label="symplectic-e13-e26-e45",
                doc={"symplectic": "E1^E3 + E2^E6 + E4^E5"},
                expected={"integrable": True, "type": 0,
                          "search": SEMI_ABELIAN, "symplectic_search": SEMI_ABELIAN},
            ),
        ),
    ))

    # nilpotent, non-abelian example -------------------------------------------
    entries.append(CatalogEntry(
        name="nilpotent-nonabelian",
        tuple_text="0,0,0,0,12,13",
        step=2,
        structures=(
            StoredStructure(
                label="nilpotent-complex",
                doc={"complex": {"J": _j_matrix(6, [(1, 4), (2, 3), (5, 6)])}},
                expected={"integrable": True, "type": 3,
                          "abelian_complex": False, "nilpotent_complex": True,
                          "search": SEMI_ABELIAN},
                pair=(("e2", "e3", "E1", "E4", "E5", "E6"),
                      ("e1", "e4", "e5", "e6", "E2", "E3")),
            ),
            StoredStructure(
                label="holomorphic-poisson-T2T3",
                doc={"complex": {"J": _j_matrix(6, [(1, 4), (2, 3), (5, 6)])},
                     "poisson": "T2^T3"},
                expected={"integrable": True, "search": SEMI_ABELIAN},
            ),
        ),
    ))

    return entries


def entry_by_name(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError("no catalog entry named %r" % name)


# ---------------------------------------------------------------------------
# regeneration of expected verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureOutcome:
    entry: str
    label: str
    actual: dict
    expected: dict

    @property
    def ok(self) -> bool:
        return all(self.actual.get(k) == v for k, v in self.expected.items())


def evaluate_structure(entry: CatalogEntry, stored: StoredStructure,
                       algebra: Optional[LieAlgebra] = None,
                       run_search: bool = True) -> StructureOutcome:
    algebra = algebra or entry.algebra()
    double = CourantDouble(algebra)
    built = build_structure(algebra, stored.doc, double)
    gcs = built.gcs
    actual: dict = {
        "integrable": gcs.is_integrable().ok,
        "type": gcs.gcs_type(),
    }
    if built.classical is not None:
        actual["abelian_complex"] = built.classical.is_abelian()
        if "nilpotent_complex" in stored.expected:
            actual["nilpotent_complex"] = find_ascending_basis(built.classical) is not None
    if stored.pair is not None:
        a_space = double.subspace(stored.pair[0])
        k_space = double.subspace(stored.pair[1])
        check = check_semi_abelian(gcs, a_space, k_space)
        actual["pair_semi_abelian"] = check.ok
        if check.ok:
            semi_abelian_report(gcs, a_space, k_space)
    if run_search and "search" in stored.expected:
        actual["search"] = search_semi_abelian(gcs).status
    if run_search and "symplectic_search" in stored.expected:
        actual["symplectic_search"] = symplectic_semi_abelian(
            algebra, built.symplectic
        ).status
    expected = dict(stored.expected)
    if stored.pair is not None:
        expected["pair_semi_abelian"] = True
    if "type" not in expected:
        actual.pop("type", None)
    return StructureOutcome(entry.name, stored.label, actual, expected)


def verify_entry(entry: CatalogEntry, run_search: bool = True) -> List[StructureOutcome]:
    algebra = entry.algebra()  # parse + Jacobi both exercised here
    outcomes = []
    if entry.step is not None:
        lcs = algebra.lower_central_series()
        outcomes.append(StructureOutcome(
            entry.name, "nilpotency-step",
            {"nilpotent": lcs.nilpotent, "step": lcs.step},
            {"nilpotent": True, "step": entry.step},
        ))
    if entry.isomorphic_to is not None:
        other_name, image_texts = entry.isomorphic_to
        other = entry_by_name(other_name).algebra()
        double = CourantDouble(other)
        images = [double.split(double.parse(t))[0] for t in image_texts]
        ok = is_bracket_isomorphism(other, algebra, images)
        outcomes.append(StructureOutcome(
            entry.name, "basis-change-isomorphism",
            {"isomorphic": ok}, {"isomorphic": True},
        ))
    roundtrip = LieAlgebra.from_tuple(algebra.to_tuple())
    outcomes.append(StructureOutcome(
        entry.name, "tuple-roundtrip",
        {"roundtrip": roundtrip == algebra}, {"roundtrip": True},
    ))
    for stored in entry.structures:
        outcomes.append(evaluate_structure(entry, stored, algebra, run_search))
    return outcomes
