"""The two built-in surface configurations and their expected invariants.

Both fixtures live on blowups of the plane and carry a bidouble-cover
structure whose minimal model is a general-type surface with K^2 = 7.

``inoue``: six points, branch lists built from three (-1)-curves Gamma_i,
members of three pencils F_i of 0-curves, and four nodal curves Z_1, Z_2,
Z_3, Z. The square roots L_i are not part of the input data; they are
derived here by halving (the lattice is torsion free, so the half is
unique when it exists).

``dp1``: eight points (a degree-one weak del Pezzo made singular along six
nodal curves C_j, C_j'), with branch lists built from a fiber F_b, curves
Gamma and E, and two branch components B_2, B_3 of higher degree. The
roots are stored explicitly.

Every number in the expectation tables below was recomputed by hand from
the coefficient vectors before being frozen; the test suite re-derives
the same values through independent code paths.
"""

from __future__ import annotations

from .covers import CoverData, FixtureExpectations, derive_roots, make_cover, run_verification
from .curves import CurveConfiguration, FiberDecomposition, NamedCurve
from .lattice import SurfaceLattice

FIXTURE_NAMES = ("dp1", "inoue")

# The inoue roots are derived, not stored: halving the complementary
# branch sums is the only way to produce them, and the tests pin the
# resulting coefficient vectors.
INOUE_ROOTS_DERIVED = True


class FixtureError(KeyError):
    pass


# ---------------------------------------------------------------------------
# inoue: blowup of the plane in six points
# ---------------------------------------------------------------------------

_INOUE_LATTICE = SurfaceLattice("inoue", ("E1", "E2", "E3", "E1'", "E2'", "E3'"))

_INOUE_CURVES = (
    # basis order: L, E1, E2, E3, E1', E2', E3'
    ("E1", (0, 1, 0, 0, 0, 0, 0), "minus_one"),
    ("E2", (0, 0, 1, 0, 0, 0, 0), "minus_one"),
    ("E3", (0, 0, 0, 1, 0, 0, 0), "minus_one"),
    ("E1'", (0, 0, 0, 0, 1, 0, 0), "minus_one"),
    ("E2'", (0, 0, 0, 0, 0, 1, 0), "minus_one"),
    ("E3'", (0, 0, 0, 0, 0, 0, 1), "minus_one"),
    ("Gamma1", (1, -1, 0, 0, -1, 0, 0), "minus_one"),
    ("Gamma2", (1, 0, -1, 0, 0, -1, 0), "minus_one"),
    ("Gamma3", (1, 0, 0, -1, 0, 0, -1), "minus_one"),
    ("F1", (2, 0, -1, -1, 0, -1, -1), "fiber"),
    ("F2", (2, -1, 0, -1, -1, 0, -1), "fiber"),
    ("F3", (2, -1, -1, 0, -1, -1, 0), "fiber"),
    ("F1'", (2, 0, -1, -1, 0, -1, -1), "fiber"),
    ("Z1", (1, -1, 0, 0, 0, -1, -1), "nodal"),
    ("Z2", (1, 0, -1, 0, -1, 0, -1), "nodal"),
    ("Z3", (1, 0, 0, -1, -1, -1, 0), "nodal"),
    ("Z", (1, -1, -1, -1, 0, 0, 0), "nodal"),
)

_INOUE_DELTA = (
    ("Gamma1", "F2", "Z1", "Z3"),
    ("Gamma2", "F3"),
    ("Gamma3", "F1", "F1'", "Z2", "Z"),
)

_INOUE_EXPECT = FixtureExpectations(
    d_class=(5, -1, -2, -2, -1, -2, -2),
    d_sq=7,
    d_kw=-5,
    m_sq=0,
    db=(7, 5, 5),
    bb=(5, 9, 7),
    b_sq=(-1, -1, -1),
    l=(2, 0, 2),
    k_v_sq=-1,
    blowdown=8,
    k_s_sq=7,
    sum_llk=-6,
    chi_ov=1,
    dims=(7, 1, 0, 0),
    case_k=(7, 5, 5),
    case_m_reported=(5, 9, 7),
    case_l=(2, 0, 2),
    k_sigma_sq=3,
    table={
        ("F1", "F1"): 0,
        ("F1", "F1'"): 0,
        ("F2", "F2"): 0,
        ("F3", "F3"): 0,
        ("Gamma1", "F2"): 0,
        ("Gamma2", "F3"): 0,
        ("Gamma3", "F1"): 0,
    },
    fibers=(
        FiberDecomposition("F2", (("Gamma1", 1), ("Gamma3", 1))),
        FiberDecomposition("F2", (("Z1", 1), ("E2'", 2), ("Z3", 1))),
        FiberDecomposition("F2", (("Z2", 1), ("E2", 2), ("Z", 1))),
    ),
    d_dot={"F1": 2, "F1'": 2, "F2": 4, "F3": 4},
    m_dot={"F1": 0, "F1'": 0},
    swap_basis={"E1": "E1'", "E1'": "E1", "E2": "E2'", "E2'": "E2"},
    swap_rows=(
        ("Z1", "Z2"),
        ("Z2", "Z1"),
        ("Z3", "Z"),
        ("Z", "Z3"),
        ("Gamma1", "Gamma1"),
        ("Gamma2", "Gamma2"),
        ("Gamma3", "Gamma3"),
        ("F1", "F1"),
        ("F2", "F2"),
        ("F3", "F3"),
    ),
    d_description="class of D = 2K_W + B_1 + B_2 + B_3 (equal to -K_W + F1')",
)


# ---------------------------------------------------------------------------
# dp1: blowup of the plane in eight points
# ---------------------------------------------------------------------------

_DP1_LATTICE = SurfaceLattice(
    "dp1", ("E0", "E1", "E1'", "E2", "E2'", "E3", "E3'", "E")
)

_DP1_CURVES = (
    # basis order: L, E0, E1, E1', E2, E2', E3, E3', E
    ("C1", (1, -1, -1, -1, 0, 0, 0, 0, 0), "nodal"),
    ("C2", (1, -1, 0, 0, -1, -1, 0, 0, 0), "nodal"),
    ("C3", (1, -1, 0, 0, 0, 0, -1, -1, 0), "nodal"),
    ("C1'", (0, 0, 1, -1, 0, 0, 0, 0, 0), "nodal"),
    ("C2'", (0, 0, 0, 0, 1, -1, 0, 0, 0), "nodal"),
    ("C3'", (0, 0, 0, 0, 0, 0, 1, -1, 0), "nodal"),
    ("E1'", (0, 0, 0, 1, 0, 0, 0, 0, 0), "minus_one"),
    ("E2'", (0, 0, 0, 0, 0, 1, 0, 0, 0), "minus_one"),
    ("E3'", (0, 0, 0, 0, 0, 0, 0, 1, 0), "minus_one"),
    ("Fb", (1, -1, 0, 0, 0, 0, 0, 0, 0), "fiber"),
    ("Gamma", (1, -1, 0, 0, 0, 0, 0, 0, -1), "minus_one"),
    ("E", (0, 0, 0, 0, 0, 0, 0, 0, 1), "minus_one"),
    ("B2", (5, -1, -2, -2, -2, -2, -2, -2, -1), "branch_component"),
    ("B3", (6, -2, -2, -2, -2, -2, -2, -2, -3), "branch_component"),
    ("Lambda", (3, -1, -1, -1, -1, -1, -1, 0, -2), "minus_one"),
)

_DP1_DELTA = (
    ("Fb", "Gamma", "C1", "C1'", "C2", "C2'"),
    ("B2", "C3", "C3'"),
    ("B3",),
)

_DP1_ROOTS = (
    (6, -2, -2, -2, -2, -2, -2, -3, -2),
    (5, -3, -1, -2, -1, -2, -1, -1, -2),
    (5, -3, -1, -2, -1, -2, -1, -2, -1),
)

_DP1_EXPECT = FixtureExpectations(
    d_class=(7, -3, -2, -2, -2, -2, -2, -2, -3),
    d_sq=7,
    d_kw=-3,
    m_sq=2,
    db=(5, 5, 3),
    bb=(7, 5, 1),
    b_sq=(-1, -1, -1),
    l=(4, 2, 0),
    k_v_sq=-5,
    blowdown=12,
    k_s_sq=7,
    sum_llk=-6,
    chi_ov=1,
    dims=(6, 1, 1, 0),
    case_k=(5, 5, 3),
    case_m_reported=(7, 5, 1),
    case_l=(4, 2, 0),
    k_sigma_sq=1,
    table={
        ("Lambda", "Lambda"): -1,
        ("Lambda", "Fb"): 2,
        ("Lambda", "C1"): 0,
        ("Lambda", "C1'"): 0,
        ("Lambda", "C2"): 0,
        ("Lambda", "C2'"): 0,
        ("Lambda", "C3"): 1,
        ("Lambda", "C3'"): 1,
        ("B2", "Gamma"): 3,
        ("B2", "B3"): 1,
        ("B2", "E"): 1,
        ("B3", "Gamma"): 1,
        ("B3", "E"): 3,
        ("Gamma", "E"): 1,
        ("Fb", "Fb"): 0,
    },
    fibers=(
        FiberDecomposition("Fb", (("C1", 1), ("E1'", 2), ("C1'", 1))),
        FiberDecomposition("Fb", (("C2", 1), ("E2'", 2), ("C2'", 1))),
        FiberDecomposition("Fb", (("C3", 1), ("E3'", 2), ("C3'", 1))),
        FiberDecomposition("Fb", (("Gamma", 1), ("E", 1))),
    ),
    d_dot={"Fb": 4},
    m_dot={},
    swap_basis=None,
    swap_rows=(),
    d_description="class of D = 2K_W + B_1 + B_2 + B_3 (equal to -2K_W + Gamma)",
)


# ---------------------------------------------------------------------------
# public access
# ---------------------------------------------------------------------------


def _build_config(lattice: SurfaceLattice, rows) -> CurveConfiguration:
    return CurveConfiguration(
        lattice,
        tuple(NamedCurve(name, lattice.divisor(coeffs), role) for name, coeffs, role in rows),
    )


def fixture(name: str) -> tuple[CurveConfiguration, CoverData]:
    if name == "inoue":
        config = _build_config(_INOUE_LATTICE, _INOUE_CURVES)
        return config, make_cover(config, _INOUE_DELTA, derive_roots(config, _INOUE_DELTA))
    if name == "dp1":
        config = _build_config(_DP1_LATTICE, _DP1_CURVES)
        roots = tuple(config.lattice.divisor(v) for v in _DP1_ROOTS)
        return config, make_cover(config, _DP1_DELTA, roots)
    raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def expectations(name: str) -> FixtureExpectations:
    if name == "inoue":
        return _INOUE_EXPECT
    if name == "dp1":
        return _DP1_EXPECT
    raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def verify_fixture(name: str):
    _, cover = fixture(name)
    return run_verification(cover, expectations(name), title=f"fixture verification: {name}")
