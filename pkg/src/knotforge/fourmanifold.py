"""Intersection-form arithmetic for fold-map existence and genus invariants.

Covers: exact signature by rational congruence diagonalization, the
characteristic-vector test standing in for w2, the five fold-map existence
conditions on a closed 4-manifold, total defects (d, h) of the boundary
framing induced by a handlebody with singular surfaces inside, coset tests
against the lattice generated by (0,4) and (-1,2), the admissible values
of sum(k_i^2) forced by a canonical boundary framing, and the sg^k genus
invariant as an order statistic over a catalog of candidate maps.

All arithmetic is exact (integers and Fractions); no floats anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

__all__ = [
    "IntersectionForm",
    "ManifoldData",
    "SurfaceComponent",
    "SurfaceConfig",
    "TotalDefect",
    "MapCatalog",
    "signature",
    "self_intersection",
    "is_characteristic",
    "build_sigma_class",
    "saeki_check",
    "total_defect",
    "homology_sphere_coset_check",
    "canonical_sphere_constraint",
    "sg_k",
    "sg_plain",
    "parse_block_form",
    "load_manifold_config",
    "load_catalog_config",
]


# -- intersection forms ------------------------------------------------------

class IntersectionForm:
    """A symmetric integer matrix over a basis of H_2 mod torsion."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("intersection form must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("intersection form must be symmetric")
        self.matrix = rows

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, IntersectionForm):
            return NotImplemented
        return self.matrix == other.matrix

    def __repr__(self):
        return f"IntersectionForm({list(map(list, self.matrix))})"


def parse_block_form(text: str) -> IntersectionForm:
    """Parse block notation like "<-1> + H + 3<-1> + 8<1>" into a matrix.

    "<d>" is a 1x1 block (d), "H" the hyperbolic 2x2 block [[0,1],[1,0]],
    and an integer prefix repeats a block.
    """
    blocks: list[list[list[int]]] = []
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise ValueError("empty block term")
        m = re.fullmatch(r"(\d*)\s*(H|<\s*(-?\d+)\s*>)", term)
        if not m:
            raise ValueError(f"unrecognized block term: {term!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if m.group(2) == "H":
            block = [[0, 1], [1, 0]]
        else:
            block = [[int(m.group(3))]]
        blocks.extend(block for _ in range(count))
    size = sum(len(b) for b in blocks)
    mat = [[0] * size for _ in range(size)]
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                mat[at + i][at + j] = x
        at += len(b)
    return IntersectionForm(mat)


def signature(f: IntersectionForm) -> int:
    """Positive minus negative diagonal entries after exact congruence reduction."""
    n = f.rank
    a = [[Fraction(x) for x in row] for row in f.matrix]
    sig = 0
    for i in range(n):
        if a[i][i] == 0:
            # find a row to repair the pivot: prefer a nonzero a[j][i]
            pivot_row = next((j for j in range(i + 1, n) if a[j][i] != 0), None)
            if pivot_row is None:
                continue  # zero row/column from i on in this column: contributes 0
            # adding (or, if that cancels, subtracting) the repair row keeps
            # the form congruent and makes the pivot 2c +- d nonzero
            eps = 1 if 2 * a[pivot_row][i] + a[pivot_row][pivot_row] != 0 else -1
            for k in range(i, n):
                a[i][k] += eps * a[pivot_row][k]
            for k in range(i, n):
                a[k][i] += eps * a[k][pivot_row]
        pivot = a[i][i]
        sig += 1 if pivot > 0 else -1
        for j in range(i + 1, n):
            factor = a[j][i] / pivot
            if factor == 0:
                continue
            for k in range(i, n):
                a[j][k] -= factor * a[i][k]
            for k in range(i, n):
                a[k][j] -= factor * a[k][i]
    return sig


def _check_dims(cls, f: IntersectionForm):
    cls = tuple(int(x) for x in cls)
    if len(cls) != f.rank:
        raise ValueError(
            f"class has {len(cls)} coordinates, form has rank {f.rank}")
    return cls


def self_intersection(cls, f: IntersectionForm) -> int:
    """cls^T Q cls."""
    cls = _check_dims(cls, f)
    return sum(cls[i] * f.matrix[i][j] * cls[j]
               for i in range(f.rank) for j in range(f.rank))


def is_characteristic(cls, f: IntersectionForm) -> bool:
    """x . v == v . v (mod 2) for every basis vector v."""
    cls = _check_dims(cls, f)
    for i in range(f.rank):
        pairing = sum(cls[j] * f.matrix[j][i] for j in range(f.rank))
        if (pairing - f.matrix[i][i]) % 2 != 0:
            return False
    return True


def build_sigma_class(n: int, m: int, j: int):
    """The characteristic surface class on <-1> + H + n<-1> + m<1> + j<-1>.

    Sigma = e + 2a + 2k*b + sum f_i + sum g_i + sum h_i with
    4k = sigma = -1 - n + m - j; its self-intersection is 12k = 3*sigma.
    Returns (cls, form, k); raises when the signature is not divisible by 4
    (the caller must blow up, i.e. increment j, first).
    """
    if min(n, m, j) < 0:
        raise ValueError("block counts must be non-negative")
    sig = -1 - n + m - j
    if sig % 4 != 0:
        raise ValueError(
            f"signature {sig} not divisible by 4; blow up (increment j) first")
    k = sig // 4
    parts = "<-1> + H"
    if n:
        parts += f" + {n}<-1>"
    if m:
        parts += f" + {m}<1>"
    if j:
        parts += f" + {j}<-1>"
    form = parse_block_form(parts)
    cls = (1, 2, 2 * k) + (1,) * (n + m + j)
    if signature(form) != sig:
        raise AssertionError("block form signature mismatch")
    if self_intersection(cls, form) != 3 * sig:
        raise AssertionError("surface class self-intersection is not 3*sigma")
    if not is_characteristic(cls, form):
        raise AssertionError("surface class is not characteristic")
    return cls, form, k


# -- manifold and surface data ----------------------------------------------

BOUNDARY_KINDS = ("closed", "homology-sphere-boundary", "other-boundary")


@dataclass(frozen=True)
class ManifoldData:
    form: IntersectionForm
    euler: int
    boundary_kind: str
    mu_coset: int | None = None

    def __post_init__(self):
        if self.boundary_kind not in BOUNDARY_KINDS:
            raise ValueError(f"unknown boundary kind {self.boundary_kind!r}")
        if self.mu_coset not in (None, 0, 2):
            raise ValueError("mu_coset must be 0, 2, or absent")


@dataclass(frozen=True)
class SurfaceComponent:
    genus: int
    orientable: bool = True
    kind: str = "indefinite"
    cls: tuple = ()
    k_multiple: int | None = None

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.kind not in ("definite", "indefinite"):
            raise ValueError(f"unknown singularity kind {self.kind!r}")
        object.__setattr__(self, "cls", tuple(int(x) for x in self.cls))

    def euler_char(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    def homology_class(self, f: IntersectionForm) -> tuple:
        if self.k_multiple is not None:
            if f.rank != 1:
                raise ValueError("k_multiple shorthand needs a rank-1 form")
            return (self.k_multiple,)
        return _check_dims(self.cls, f)

    def self_int(self, f: IntersectionForm) -> int:
        return self_intersection(self.homology_class(f), f)


@dataclass(frozen=True)
class SurfaceConfig:
    components: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def euler_char(self) -> int:
        return sum(c.euler_char() for c in self.components)

    def total_self_int(self, f: IntersectionForm) -> int:
        """Sum of component self-intersections (disjointly embedded pieces)."""
        return sum(c.self_int(f) for c in self.components)

    def total_class(self, f: IntersectionForm) -> tuple:
        total = [0] * f.rank
        for c in self.components:
            for i, x in enumerate(c.homology_class(f)):
                total[i] += x
        return tuple(total)


@dataclass(frozen=True)
class TotalDefect:
    d: int
    h: int


@dataclass(frozen=True)
class MapCatalog:
    maps: tuple = ()
    admissible_classes: frozenset = frozenset()
    allowed_singularities: frozenset = frozenset(("definite", "indefinite"))

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        object.__setattr__(self, "admissible_classes",
                           frozenset(tuple(int(x) for x in c)
                                     for c in self.admissible_classes))
        object.__setattr__(self, "allowed_singularities",
                           frozenset(self.allowed_singularities))


# -- fold-map existence (closed case) ---------------------------------------

def saeki_check(m: ManifoldData, f0: SurfaceConfig, f1: SurfaceConfig) -> dict:
    """The five existence conditions for a fold map with singular set F0 u F1.

    (1) euler(X) = euler(F0) - euler(F1); (2) [F0 u F1] is characteristic
    (the w2 test for torsion-free input); (3) F0 orientable; (4) every F1
    component has zero self-intersection; (5) F0 . F0 = 3 sigma(X).
    """
    if m.boundary_kind != "closed":
        raise ValueError("fold-map existence test needs a closed manifold")
    if not f0.components and not f1.components:
        raise ValueError("the singular surface F0 u F1 must be nonempty")
    form = m.form
    sig = signature(form)
    total = tuple(a + b for a, b in zip(
        f0.total_class(form), f1.total_class(form)))
    conditions = {
        "euler": m.euler == f0.euler_char() - f1.euler_char(),
        "w2_characteristic": is_characteristic(total, form),
        "f0_orientable": all(c.orientable for c in f0.components),
        "f1_null_self_intersection": all(
            c.self_int(form) == 0 for c in f1.components),
        "f0_self_int_is_3_signature": f0.total_self_int(form) == 3 * sig,
    }
    return {
        "conditions": conditions,
        "signature": sig,
        "verdict": all(conditions.values()),
    }


# -- boundary framing defects ------------------------------------------------

def total_defect(m: ManifoldData, sigma0: SurfaceConfig,
                 sigma1: SurfaceConfig) -> TotalDefect:
    """(d, h) of the induced boundary framing.

    d = euler(X) - euler(Sigma0) + euler(Sigma1) and
    h = Sigma0 . Sigma0 - 3 sigma(X); empty configurations contribute 0.
    """
    if m.boundary_kind == "closed":
        raise ValueError("total defect is defined for manifolds with boundary")
    for c in sigma0.components + sigma1.components:
        if not c.orientable:
            raise ValueError("defect formulas assume closed oriented components")
    d = m.euler - sigma0.euler_char() + sigma1.euler_char()
    h = sigma0.total_self_int(m.form) - 3 * signature(m.form)
    return TotalDefect(d=d, h=h)


_LATTICE_GENS = ((0, 4), (-1, 2))


def _in_coset(t: TotalDefect, mu: int) -> bool:
    # solve (d, h - mu) = s*(-1, 2) + r*(0, 4) over the integers
    s = -t.d
    return (t.h - mu - 2 * s) % 4 == 0


def homology_sphere_coset_check(t: TotalDefect, mu_coset: int | None = None) -> bool:
    """Whether (d, h) is an allowed defect over a homology sphere.

    Allowed defects have even d and lie in the lattice generated by (0,4)
    and (-1,2) translated by (0, mu); with mu unknown both translates
    (mu = 0 and mu = 2) are accepted.
    """
    if t.d % 2 != 0:
        return False
    cosets = (mu_coset,) if mu_coset is not None else (0, 2)
    return any(_in_coset(t, mu) for mu in cosets)


def canonical_sphere_constraint(p: int) -> dict:
    """Admissible values of sum(k_i^2) for sphere configs with framing p.

    A canonical boundary framing forces the defect h = -3p + p*s into
    {-2, 0, 2}; returns {s: h} for the integer solutions s >= 1.
    """
    if p == 0:
        raise ValueError("framing must be nonzero")
    out: dict[int, int] = {}
    for target in (-2, 0, 2):
        if target % p == 0:
            s = 3 + target // p
            if s >= 1:
                out[s] = target
    return dict(sorted(out.items()))


# -- genus invariants --------------------------------------------------------

def _admissible_genera(cat: MapCatalog, config: SurfaceConfig) -> list[int]:
    out = []
    for c in config.components:
        if c.kind not in cat.allowed_singularities:
            continue
        key = tuple(c.cls) if c.k_multiple is None else (c.k_multiple,)
        if key not in cat.admissible_classes:
            continue
        out.append(c.genus)
    return sorted(out)


def sg_k(cat: MapCatalog, k: int):
    """k-th smallest admissible genus per map, minimized over the catalog.

    Equals the min over maps of the min over k-element admissible subsets
    of the subset's max genus; infinity when no map has k admissible
    components (the minimum of the empty set).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    best = inf
    for config in cat.maps:
        genera = _admissible_genera(cat, config)
        if len(genera) >= k:
            best = min(best, genera[k - 1])
    return best


def sg_plain(cat: MapCatalog):
    """Min over maps of the largest admissible genus; infinity for none."""
    best = inf
    for config in cat.maps:
        genera = _admissible_genera(cat, config)
        if genera:
            best = min(best, genera[-1])
    return best


# -- JSON configuration ------------------------------------------------------

def _form_from_json(obj) -> IntersectionForm:
    if isinstance(obj, str):
        return parse_block_form(obj)
    return IntersectionForm(obj)


def _component_from_json(obj) -> SurfaceComponent:
    return SurfaceComponent(
        genus=obj["genus"],
        orientable=obj.get("orientable", True),
        kind=obj.get("kind", "indefinite"),
        cls=obj.get("cls", ()),
        k_multiple=obj.get("k_multiple"),
    )


def _config_from_json(obj) -> SurfaceConfig:
    return SurfaceConfig(tuple(_component_from_json(c)
                               for c in obj.get("components", ())))


def load_manifold_config(path: str) -> dict:
    """Load {"manifold": ..., surface configs ...} from a JSON file.

    Returns a dict with keys "manifold" (ManifoldData) and every surface
    configuration present among "f0", "f1", "sigma0", "sigma1".
    """
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    mobj = raw["manifold"]
    out = {
        "manifold": ManifoldData(
            form=_form_from_json(mobj["form"]),
            euler=mobj["euler"],
            boundary_kind=mobj["boundary_kind"],
            mu_coset=mobj.get("mu_coset"),
        )
    }
    for key in ("f0", "f1", "sigma0", "sigma1"):
        if key in raw:
            out[key] = _config_from_json(raw[key])
    return out


def _catalog_from_json(raw) -> MapCatalog:
    return MapCatalog(
        maps=tuple(_config_from_json(c) for c in raw.get("maps", ())),
        admissible_classes=raw.get("admissible_classes", ()),
        allowed_singularities=raw.get(
            "allowed_singularities", ("definite", "indefinite")),
    )


def load_catalog_config(path: str) -> dict[str, MapCatalog]:
    """Load named map catalogs from JSON.

    A file may hold several catalogs under a "catalogs" mapping (one per
    manifold in a comparison) or a single anonymous catalog at top level.
    """
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if "catalogs" in raw:
        return {name: _catalog_from_json(c) for name, c in raw["catalogs"].items()}
    return {"catalog": _catalog_from_json(raw)}
