"""Bidouble-cover building data and the verification engine for fixtures.

A smooth bidouble cover of a rational surface W is pinned down by three
branch divisors Delta_1, Delta_2, Delta_3 and three classes L_1, L_2, L_3
subject to the congruences

    2 L_i = Delta_{i+1} + Delta_{i+2},
    L_i + Delta_i = L_{i+1} + L_{i+2}      (indices mod 3).

Here each Delta_i is given as a list of named curves on W; its nodal-role
members form the part N_i contracted to nodes downstairs, and the rest is
the honest branch part B_i. All derived invariants of the cover (the
polarization D = 2K_W + B_1 + B_2 + B_3, the adjoint M = K_W + D, squares,
Euler characteristics, character-space dimensions) are exact integers.

Verification never throws on bad data; discrepancies become failing
certificate rows so a mutated input produces a readable diff.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import classifier
from .certificates import Certificate, CheckRow, check, recorded
from .curves import (
    CurveConfiguration,
    FiberDecomposition,
    verify_fiber_decomposition,
    verify_intersection_table,
)
from .lattice import DivisorClass, SurfaceLattice, format_class, halve


class CoverError(ValueError):
    pass


def permute_basis(cls: DivisorClass, mapping: dict[str, str]) -> DivisorClass:
    """Push a class through a permutation of exceptional basis names."""
    lattice = cls.lattice
    names = lattice.basis_names
    for src, dst in mapping.items():
        if src not in names or dst not in names:
            raise CoverError(f"permutation names {src!r} -> {dst!r} not in basis")
    new = [0] * lattice.rank
    for i, name in enumerate(names):
        target = mapping.get(name, name)
        new[names.index(target)] = cls.coeffs[i]
    return lattice.divisor(new)


# ---------------------------------------------------------------------------
# cover data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverData:
    """Branch lists and square-root classes of one bidouble cover.

    ``roots`` entries may be None when no integral half of the matching
    Delta sum exists; verification reports that as a failing row instead
    of refusing to build the object, so mutated data stays inspectable.
    """

    config: CurveConfiguration
    delta: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]
    roots: tuple[DivisorClass | None, DivisorClass | None, DivisorClass | None]

    def __post_init__(self) -> None:
        if len(self.delta) != 3 or len(self.roots) != 3:
            raise CoverError("a bidouble cover needs exactly three branch lists and roots")
        for names in self.delta:
            for name in names:
                self.config.curve(name)  # raises on unknown names
        for root in self.roots:
            if root is not None and root.lattice != self.config.lattice:
                raise CoverError("root class lives on a different lattice")

    @property
    def surface(self) -> SurfaceLattice:
        return self.config.lattice

    def delta_class(self, i: int) -> DivisorClass:
        total = self.surface.zero()
        for name in self.delta[i]:
            total = total + self.config.cls(name)
        return total

    def nodal_names(self, i: int) -> tuple[str, ...]:
        return tuple(n for n in self.delta[i] if self.config.curve(n).role == "nodal")

    def branch_class(self, i: int) -> DivisorClass:
        """Class of B_i: the non-nodal part of Delta_i."""
        total = self.surface.zero()
        for name in self.delta[i]:
            if self.config.curve(name).role != "nodal":
                total = total + self.config.cls(name)
        return total

    def l(self) -> tuple[int, int, int]:
        return tuple(len(self.nodal_names(i)) for i in range(3))  # type: ignore[return-value]


def derive_roots(
    config: CurveConfiguration, delta: tuple[tuple[str, ...], ...]
) -> tuple[DivisorClass | None, ...]:
    """Halve the complementary Delta sums; None where indivisible."""
    cover = CoverData(config, tuple(tuple(d) for d in delta), (None, None, None))
    return tuple(
        halve(cover.delta_class((i + 1) % 3) + cover.delta_class((i + 2) % 3))
        for i in range(3)
    )


def make_cover(
    config: CurveConfiguration,
    delta: tuple[tuple[str, ...], ...],
    roots: tuple[DivisorClass | None, ...] | None = None,
) -> CoverData:
    delta_t = tuple(tuple(d) for d in delta)
    if roots is None:
        roots = derive_roots(config, delta_t)
    return CoverData(config, delta_t, tuple(roots))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# building data verification
# ---------------------------------------------------------------------------


def _congruence_row(row_id: str, description: str, ref: str, left, right) -> CheckRow:
    if left is None:
        return CheckRow(row_id, description + " (root unavailable)", ref, "unavailable",
                        right.coeffs, "fail")
    row = check(row_id, description, ref, left.coeffs, right.coeffs)
    if row.status == "fail":
        residual = right - left
        row = CheckRow(
            row.row_id,
            f"{description} (residual {format_class(residual)})",
            row.ref,
            row.computed,
            row.expected,
            row.status,
        )
    return row


def building_data_rows(cover: CoverData) -> list[CheckRow]:
    rows: list[CheckRow] = []
    all_names = [n for names in cover.delta for n in names]
    duplicates = sorted({n for n in all_names if all_names.count(n) > 1})
    rows.append(
        check(
            "building/distinct-names",
            "branch component names are pairwise distinct across the three lists",
            "branch components",
            duplicates,
            [],
        )
    )
    deltas = [cover.delta_class(i) for i in range(3)]
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        pair_sum = deltas[j] + deltas[k]
        rows.append(
            check(
                f"building/halvable-{i + 1}",
                f"Delta_{j + 1} + Delta_{k + 1} is divisible by 2 in the lattice",
                "integral square root",
                all(c % 2 == 0 for c in pair_sum.coeffs),
                True,
            )
        )
        root = cover.roots[i]
        doubled = None if root is None else 2 * root
        rows.append(
            _congruence_row(
                f"building/double-{i + 1}",
                f"2 L_{i + 1} = Delta_{j + 1} + Delta_{k + 1}",
                "building data congruence",
                doubled,
                pair_sum,
            )
        )
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        left = None if cover.roots[i] is None else cover.roots[i] + deltas[i]
        if cover.roots[j] is None or cover.roots[k] is None:
            right = None
        else:
            right = cover.roots[j] + cover.roots[k]
        if right is None:
            rows.append(
                CheckRow(
                    f"building/mixed-{i + 1}",
                    f"L_{i + 1} + Delta_{i + 1} = L_{j + 1} + L_{k + 1} (root unavailable)",
                    "building data congruence",
                    "unavailable",
                    "unavailable",
                    "fail",
                )
            )
        else:
            rows.append(
                _congruence_row(
                    f"building/mixed-{i + 1}",
                    f"L_{i + 1} + Delta_{i + 1} = L_{j + 1} + L_{k + 1}",
                    "building data congruence",
                    left,
                    right,
                )
            )
    if all(r is not None for r in cover.roots):
        total_roots = cover.roots[0] + cover.roots[1] + cover.roots[2]
        rows.append(
            check(
                "building/closure",
                "L_1 + L_2 + L_3 = Delta_1 + Delta_2 + Delta_3",
                "building data congruence",
                total_roots.coeffs,
                (deltas[0] + deltas[1] + deltas[2]).coeffs,
            )
        )
    return rows


def verify_building_data(cover: CoverData) -> Certificate:
    return Certificate(
        title=f"building data: {cover.surface.label}",
        rows=tuple(building_data_rows(cover)),
    )


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverInvariants:
    d: DivisorClass
    m: DivisorClass
    d_sq: int
    d_kw: int
    m_sq: int
    db: tuple[int, int, int]
    bb: tuple[int, int, int]
    b_sq: tuple[int, int, int]
    l: tuple[int, int, int]
    k_v_sq: int
    blowdown: int
    k_s_sq: int
    sum_llk: int
    chi_ov: int
    dims: tuple[int, int, int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "D": list(self.d.coeffs),
            "M": list(self.m.coeffs),
            "D2": self.d_sq,
            "DKW": self.d_kw,
            "M2": self.m_sq,
            "DB": list(self.db),
            "BB": list(self.bb),
            "B2": list(self.b_sq),
            "l": list(self.l),
            "KV2": self.k_v_sq,
            "blowdown": self.blowdown,
            "KS2": self.k_s_sq,
            "sumLLK": self.sum_llk,
            "chiOV": self.chi_ov,
            "dims": None if self.dims is None else list(self.dims),
        }


def compute_invariants(cover: CoverData) -> CoverInvariants:
    """All derived numbers of the cover; assumes nothing beyond name validity."""
    w = cover.surface
    kw = w.canonical_class()
    b = [cover.branch_class(i) for i in range(3)]
    d = 2 * kw + b[0] + b[1] + b[2]
    m = kw + d
    db = tuple(d.dot(bi) for bi in b)
    bb = (b[0].dot(b[1]), b[0].dot(b[2]), b[1].dot(b[2]))  # (B1B2, B1B3, B2B3)
    b_sq = tuple(bi.dot(bi) for bi in b)
    l = cover.l()
    total_delta = cover.delta_class(0) + cover.delta_class(1) + cover.delta_class(2)
    canonical_upstairs = 2 * kw + total_delta
    k_v_sq = canonical_upstairs.dot(canonical_upstairs)
    blowdown = 2 * sum(l)
    k_s_sq = k_v_sq + blowdown
    sum_llk = 0
    for root in cover.roots:
        if root is None:
            raise CoverError("cover has an underivable root; verify building data first")
        sum_llk += root.dot(root + kw)
    if sum_llk % 2:
        raise CoverError("character formula needs an even value of sum L_i(L_i+K)")
    chi_ov = 4 + sum_llk // 2
    try:
        dims = classifier.eigenspace_dims(k_s_sq, db)  # type: ignore[arg-type]
    except classifier.ClassifierError:
        dims = None
    return CoverInvariants(
        d=d,
        m=m,
        d_sq=d.dot(d),
        d_kw=d.dot(kw),
        m_sq=m.dot(m),
        db=db,  # type: ignore[arg-type]
        bb=bb,
        b_sq=b_sq,  # type: ignore[arg-type]
        l=l,
        k_v_sq=k_v_sq,
        blowdown=blowdown,
        k_s_sq=k_s_sq,
        sum_llk=sum_llk,
        chi_ov=chi_ov,
        dims=dims,
    )


def cover_invariants(cover: CoverData) -> CoverInvariants:
    """Invariants of verified building data; refuses when the data is broken."""
    certificate = verify_building_data(cover)
    if certificate.overall != "pass":
        failing = ", ".join(r.row_id for r in certificate.failures())
        raise CoverError(f"building data invalid ({failing}); invariants refused")
    return compute_invariants(cover)


# ---------------------------------------------------------------------------
# fixture-level expectations and the aggregated certificate
# ---------------------------------------------------------------------------


@dataclass
class FixtureExpectations:
    """Frozen expected values for one fixture, compared row by row."""

    d_class: tuple[int, ...]
    d_sq: int
    d_kw: int
    m_sq: int
    db: tuple[int, int, int]
    bb: tuple[int, int, int]
    b_sq: tuple[int, int, int]
    l: tuple[int, int, int]
    k_v_sq: int
    blowdown: int
    k_s_sq: int
    sum_llk: int
    chi_ov: int
    dims: tuple[int, int, int, int]
    case_k: tuple[int, int, int]
    case_m_reported: tuple[int, int, int]
    case_l: tuple[int, int, int]
    k_sigma_sq: int
    table: dict[tuple[str, str], int] = field(default_factory=dict)
    fibers: tuple[FiberDecomposition, ...] = ()
    d_dot: dict[str, int] = field(default_factory=dict)
    m_dot: dict[str, int] = field(default_factory=dict)
    swap_basis: dict[str, str] | None = None
    swap_rows: tuple[tuple[str, str], ...] = ()
    d_description: str = "class of D = 2K_W + B_1 + B_2 + B_3"


def _invariant_rows(inv: CoverInvariants, expect: FixtureExpectations) -> list[CheckRow]:
    ref = "intersection number"
    rows = [
        check("invariant/D", expect.d_description, ref,
              inv.d.coeffs, expect.d_class),
        check("invariant/D2", "D^2", ref, inv.d_sq, expect.d_sq),
        check("invariant/DKW", "D.K_W", ref, inv.d_kw, expect.d_kw),
        check("invariant/M2", "M^2 with M = K_W + D", ref, inv.m_sq, expect.m_sq),
        check("invariant/DB", "(D.B_1, D.B_2, D.B_3)", ref, inv.db, expect.db),
        check("invariant/BB", "(B_1B_2, B_1B_3, B_2B_3)", ref, inv.bb, expect.bb),
        check("invariant/B2", "(B_1^2, B_2^2, B_3^2)", ref, inv.b_sq, expect.b_sq),
        check("invariant/l", "nodal counts (l_1, l_2, l_3)", "nodal bookkeeping",
              inv.l, expect.l),
        check("invariant/KV2", "K^2 of the smooth cover", ref, inv.k_v_sq, expect.k_v_sq),
        check("invariant/KV2-identity", "K_V^2 = D^2 - 2(l_1+l_2+l_3)", ref,
              inv.k_v_sq, inv.d_sq - 2 * sum(inv.l)),
        check("invariant/blowdown", "number of contracted (-1)-curves, 2(l_1+l_2+l_3)",
              "nodal bookkeeping", inv.blowdown, expect.blowdown),
        check("invariant/KS2", "K^2 of the minimal model", ref, inv.k_s_sq, expect.k_s_sq),
        check("invariant/sumLLK", "sum of L_i(L_i + K_W)", ref, inv.sum_llk, expect.sum_llk),
        check("invariant/chiOV", "chi(O) of the cover, 4 + (1/2) sum L_i(L_i+K_W)",
              "double cover Euler characteristic", inv.chi_ov, expect.chi_ov),
        check("invariant/dims", "character subspace dimensions (inv, 1, 2, 3)",
              "character dimensions", inv.dims, expect.dims),
    ]
    return rows


def _case_rows(inv: CoverInvariants, expect: FixtureExpectations) -> list[CheckRow]:
    rows = [
        check("case/k", "fixture (D.B_i) matches the classified k-triple",
              "classification table", inv.db, expect.case_k),
        check("case/m", "fixture (B_1B_2, B_1B_3, B_2B_3) matches the reported m-triple",
              "classification table", inv.bb, expect.case_m_reported),
        check("case/l", "fixture nodal counts match the classified l-triple",
              "classification table", inv.l, expect.case_l),
    ]
    matches = [
        case
        for case in classifier.classify(expect.k_s_sq)
        if case.k == expect.case_k and case.m_reported == expect.case_m_reported
    ]
    if len(matches) == 1:
        case = matches[0]
        rows.append(
            check("case/table", "classifier emits exactly this case with matching l and K_Sigma^2",
                  "classification table",
                  (case.k, case.m_reported, case.l, case.k_sigma_sq),
                  (expect.case_k, expect.case_m_reported, expect.case_l, expect.k_sigma_sq)),
        )
        rows.append(recorded("case/status", "status of the matching case in the table",
                             "classification table", case.status))
    else:
        rows.append(
            CheckRow("case/table", "classifier emits exactly one matching case",
                     "classification table", len(matches), 1, "fail")
        )
    return rows


def run_verification(
    cover: CoverData,
    expect: FixtureExpectations | None,
    title: str,
) -> Certificate:
    """Aggregate certificate: building data, tables, fibers, invariants, cross-checks."""
    config = cover.config
    rows: list[CheckRow] = list(building_data_rows(cover))

    nodal = config.by_role("nodal")
    for a_i in range(len(nodal)):
        for b_i in range(a_i + 1, len(nodal)):
            a, b = nodal[a_i], nodal[b_i]
            rows.append(
                check(f"disjoint/{a.name}.{b.name}",
                      f"nodal curves {a.name} and {b.name} are disjoint",
                      "nodal disjointness", a.cls.dot(b.cls), 0)
            )

    building_ok = not any(r.status == "fail" for r in rows)
    if not building_ok:
        rows.append(
            recorded("invariant/skipped", "invariant rows skipped: building data failed",
                     "building data congruence", "skipped")
        )
        return Certificate(title=title, rows=tuple(rows))

    inv = compute_invariants(cover)

    for i in range(3):
        bi = cover.branch_class(i)
        for curve in nodal:
            rows.append(
                check(f"branch-nodal/B{i + 1}.{curve.name}",
                      f"branch part B_{i + 1} avoids the nodal curve {curve.name}",
                      "nodal disjointness", bi.dot(curve.cls), 0)
            )
    for curve in nodal:
        rows.append(
            check(f"polarization-nodal/D.{curve.name}",
                  f"D avoids the nodal curve {curve.name}",
                  "nodal disjointness", inv.d.dot(curve.cls), 0)
        )

    if expect is None:
        rows.append(recorded("invariant/values", "computed invariants of the cover",
                             "intersection number", inv.to_json_dict()))
        return Certificate(title=title, rows=tuple(rows))

    for t in verify_intersection_table(config, expect.table):
        rows.append(
            check(f"table/{t.first}.{t.second}",
                  f"{t.first}.{t.second}", "intersection number",
                  t.computed, t.expected)
        )

    for idx, decomposition in enumerate(expect.fibers, start=1):
        problems = verify_fiber_decomposition(config, decomposition)
        label = " + ".join(
            n if mult == 1 else f"{mult}{n}" for n, mult in decomposition.components
        )
        rows.append(
            check(f"fiber/{decomposition.fiber}/{idx}",
                  f"{label} is a member of |{decomposition.fiber}|",
                  "fiber decomposition",
                  problems if problems else "ok", "ok")
        )

    rows.extend(_invariant_rows(inv, expect))

    for name in sorted(expect.d_dot):
        rows.append(
            check(f"pencil/D.{name}", f"D.{name}", "genus-2 pencil input",
                  inv.d.dot(config.cls(name)), expect.d_dot[name])
        )
    for name in sorted(expect.m_dot):
        rows.append(
            check(f"adjoint/M.{name}", f"M.{name}", "intersection number",
                  inv.m.dot(config.cls(name)), expect.m_dot[name])
        )

    rows.extend(_case_rows(inv, expect))

    if expect.swap_basis is not None:
        for src, dst in expect.swap_rows:
            image = permute_basis(config.cls(src), expect.swap_basis)
            rows.append(
                check(f"swap/{src}",
                      f"the plane involution sends {src} to {dst}",
                      "involution symmetry", image.coeffs, config.cls(dst).coeffs)
            )

    rows.append(recorded("axiom/nef-D", "D is nef and big on the base", "nef divisor input",
                         "imported, not derived"))
    if expect.d_dot:
        rows.append(recorded("axiom/pencil-degree",
                             "every genus-2 pencil member meets D in at least 2",
                             "genus-2 pencil input", "imported, not derived"))

    return Certificate(title=title, rows=tuple(rows))
