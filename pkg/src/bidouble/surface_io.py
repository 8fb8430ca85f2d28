"""Reading and writing surface descriptions as JSON documents.

The document format mirrors the in-memory objects: a lattice (ordered
basis names, first of square +1 and the rest of square -1), named curve
classes with roles, and an optional cover block with the three branch
lists and, optionally, the three root classes. When the roots are
omitted they are derived by halving the complementary branch sums; an
absent integral half is left as a gap for the verifier to report.

Anything structurally wrong with a document (unknown curve names, bad
roles, wrong vector lengths, a non-Lorentzian signature) raises
``SurfaceFileError``: a file must parse to valid objects before any
verification starts, and the command line maps these errors to the
input-error exit code rather than a failed check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .covers import CoverData, derive_roots, make_cover
from .curves import ConfigurationError, CurveConfiguration, NamedCurve, ROLES
from .lattice import LatticeError, SurfaceLattice

_TOP_KEYS = {"label", "basis", "signature", "curves", "cover"}
_CURVE_KEYS = {"name", "class", "role"}
_COVER_KEYS = {"delta", "roots"}


class SurfaceFileError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceFile:
    label: str
    config: CurveConfiguration
    cover: CoverData | None


def _int_vector(value, rank: int, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or len(value) != rank:
        raise SurfaceFileError(f"{what} must be a list of {rank} integers")
    out = []
    for entry in value:
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise SurfaceFileError(f"{what} must contain integers only, got {entry!r}")
        out.append(entry)
    return tuple(out)


def surface_from_dict(data) -> SurfaceFile:
    if not isinstance(data, dict):
        raise SurfaceFileError("surface document must be an object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise SurfaceFileError(f"unknown top-level keys: {sorted(unknown)}")
    label = data.get("label")
    if not isinstance(label, str) or not label:
        raise SurfaceFileError("'label' must be a non-empty string")
    basis = data.get("basis")
    if (
        not isinstance(basis, list)
        or not basis
        or any(not isinstance(b, str) for b in basis)
    ):
        raise SurfaceFileError("'basis' must be a non-empty list of names")
    if basis[0] != "L":
        raise SurfaceFileError("the first basis name must be 'L' (the +1 vector)")
    rank = len(basis)
    signature = data.get("signature")
    if signature is not None and list(signature) != [1] + [-1] * (rank - 1):
        raise SurfaceFileError("only the signature (+1, -1, ..., -1) is supported")
    try:
        lattice = SurfaceLattice(label, tuple(basis[1:]))
    except LatticeError as exc:
        raise SurfaceFileError(str(exc)) from exc

    curves_data = data.get("curves", [])
    if not isinstance(curves_data, list):
        raise SurfaceFileError("'curves' must be a list")
    named = []
    for entry in curves_data:
        if not isinstance(entry, dict) or set(entry) - _CURVE_KEYS:
            raise SurfaceFileError(f"bad curve entry: {entry!r}")
        name = entry.get("name")
        role = entry.get("role")
        if not isinstance(name, str) or not name:
            raise SurfaceFileError("curve entries need a non-empty 'name'")
        if role not in ROLES:
            raise SurfaceFileError(f"curve {name!r} has unknown role {role!r}")
        coeffs = _int_vector(entry.get("class"), rank, f"class of curve {name!r}")
        named.append(NamedCurve(name, lattice.divisor(coeffs), role))
    try:
        config = CurveConfiguration(lattice, tuple(named))
    except ConfigurationError as exc:
        raise SurfaceFileError(str(exc)) from exc

    cover = None
    cover_data = data.get("cover")
    if cover_data is not None:
        if not isinstance(cover_data, dict) or set(cover_data) - _COVER_KEYS:
            raise SurfaceFileError("'cover' must be an object with 'delta' and optional 'roots'")
        delta = cover_data.get("delta")
        if (
            not isinstance(delta, list)
            or len(delta) != 3
            or any(not isinstance(part, list) for part in delta)
        ):
            raise SurfaceFileError("'cover.delta' must be three lists of curve names")
        delta_t = tuple(tuple(str(n) for n in part) for part in delta)
        roots_data = cover_data.get("roots")
        if roots_data is None:
            try:
                roots = derive_roots(config, delta_t)
            except ValueError as exc:
                raise SurfaceFileError(str(exc)) from exc
        else:
            if not isinstance(roots_data, list) or len(roots_data) != 3:
                raise SurfaceFileError("'cover.roots' must be three coefficient vectors")
            roots = tuple(
                None
                if v is None
                else lattice.divisor(_int_vector(v, rank, f"root {i + 1}"))
                for i, v in enumerate(roots_data)
            )
        try:
            cover = make_cover(config, delta_t, roots)
        except ValueError as exc:
            raise SurfaceFileError(str(exc)) from exc
    return SurfaceFile(label=label, config=config, cover=cover)


def surface_to_dict(surface: SurfaceFile) -> dict:
    lattice = surface.config.lattice
    doc: dict = {
        "label": surface.label,
        "basis": list(lattice.basis_names),
        "signature": [1] + [-1] * lattice.n,
        "curves": [
            {"name": c.name, "class": list(c.cls.coeffs), "role": c.role}
            for c in surface.config.curves
        ],
    }
    if surface.cover is not None:
        roots = [
            None if r is None else list(r.coeffs) for r in surface.cover.roots
        ]
        doc["cover"] = {
            "delta": [list(part) for part in surface.cover.delta],
            "roots": roots,
        }
    return doc


def load_surface(path: str | Path) -> SurfaceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SurfaceFileError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SurfaceFileError(f"invalid JSON in {path}: {exc}") from exc
    return surface_from_dict(data)


def save_surface(surface: SurfaceFile, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(surface_to_dict(surface), sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )
