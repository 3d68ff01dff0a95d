"""The twist family L_n: closed forms, table anchors, and cross-checks.

L_0 is the 5_2 knot; inserting n full twists at a fixed band site gives
L_1 = 9_45 and L_2 = 11n63, while the oriented band smoothing is the
2-component link J_0 = L7n2.  Closed forms:

    nabla(L_n) = 1 + 2z^2 - n z^4
    V(L_n)     = (1 + t^-2 + ... + t^(-2(n-1))) * Vt + t^(-2n) V(L_0)

with Vt = t^-1 (t^(1/2) - t^(-1/2)) V(J_0).  The verifier recomputes the
anchors with the skein engine and compares exactly.
"""

from __future__ import annotations

import os
from fractions import Fraction
from importlib import resources

from .diagram import PDDiagram, parse_pd
from .laurent import LaurentPoly
from . import skein
from .invariants import ohtsuki_lambda2

__all__ = [
    "KnotTable",
    "load_table",
    "conway_family",
    "jones_family",
    "tilde_v",
    "lambda2_family",
    "verify_family",
    "V_L0",
    "TILDE_V",
]

DATA_ENV_VAR = "KNOTFORGE_DATA"
TABLE_FILENAME = "knot_table.txt"

# V(L_0) and the increment polynomial Vt, as published
V_L0 = LaurentPoly.from_exponents(
    {-1: 1, -2: -1, -3: 2, -4: -1, -5: 1, -6: -1})
TILDE_V = LaurentPoly.from_exponents(
    {-1: 2, -2: -3, -3: 3, -4: -3, -5: 2, -6: -2, -7: 1})

_T2_INV = LaurentPoly.monomial(1, -2)
_T_INV = LaurentPoly.monomial(1, -1)
_DELTA = LaurentPoly.from_exponents({Fraction(1, 2): 1, Fraction(-1, 2): -1})

# expected component count per entry name (knot vs. link)
_EXPECTED_COMPONENTS = {
    "unknot": 1, "trefoil": 1, "hopf+": 2,
    "5_2": 1, "9_45": 1, "11n63": 1, "L7n2": 2,
}


class KnotTable:
    """Named PD diagrams loaded from a stanza-format data file."""

    def __init__(self, entries: dict[str, str]):
        self.entries = dict(entries)
        self._cache: dict[str, PDDiagram] = {}
        for name, text in self.entries.items():
            d = parse_pd(text)
            expected = _EXPECTED_COMPONENTS.get(name)
            if expected is not None and d.component_count() != expected:
                raise ValueError(
                    f"table entry {name!r} has {d.component_count()} components, "
                    f"expected {expected}")
            self._cache[name] = d

    def names(self) -> list[str]:
        return sorted(self.entries)

    def diagram(self, name: str) -> PDDiagram:
        if name not in self._cache:
            raise KeyError(f"no table entry named {name!r}")
        return self._cache[name]


def _parse_table_text(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    current: str | None = None
    lines: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            if current is not None:
                entries[current] = " ".join(lines)
            current = line.split(":", 1)[1].strip()
            lines = []
        elif current is None:
            raise ValueError(f"table data before first 'name:' stanza: {line!r}")
        else:
            lines.append(line)
    if current is not None:
        entries[current] = " ".join(lines)
    return entries


def load_table(path: str | None = None) -> KnotTable:
    """Load the knot table from a path, $KNOTFORGE_DATA, or package data."""
    if path is None:
        data_dir = os.environ.get(DATA_ENV_VAR)
        if data_dir:
            path = os.path.join(data_dir, TABLE_FILENAME)
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = (resources.files("knotforge") / "data" / TABLE_FILENAME).read_text()
    return KnotTable(_parse_table_text(text))


def conway_family(n: int) -> LaurentPoly:
    """Closed-form Conway polynomial 1 + 2z^2 - n z^4 of L_n."""
    if n < 0:
        raise ValueError("family index must be non-negative")
    return LaurentPoly.from_exponents({0: 1, 2: 2, 4: -n})


def jones_family(n: int) -> LaurentPoly:
    """Closed-form Jones polynomial of L_n."""
    if n < 0:
        raise ValueError("family index must be non-negative")
    partial = LaurentPoly.zero()
    for k in range(n):
        partial = partial + LaurentPoly.monomial(1, -2 * k)
    return partial * TILDE_V + LaurentPoly.monomial(1, -2 * n) * V_L0


def _anchored_jones(table: KnotTable, name: str, expected: LaurentPoly,
                    budget: int = skein.DEFAULT_CROSSING_BUDGET):
    """Jones value of a table diagram, mirroring once if chirality is flipped.

    Returns (value, mirrored).  Published tables disagree on chirality
    conventions, so a diagram whose Jones value is the t <-> 1/t image of
    the expected one is accepted after mirroring (and flagged).
    """
    d = table.diagram(name)
    value = skein.jones(d, budget=budget)
    if value == expected:
        return value, False
    mirrored = skein.jones(d.mirror(), budget=budget)
    if mirrored == expected:
        return mirrored, True
    return value, False


def tilde_v(table: KnotTable | None = None) -> LaurentPoly:
    """Vt computed from the L7n2 diagram; asserts the published 7-term value."""
    table = table if table is not None else load_table()
    v_j0, _ = _anchored_jones(table, "L7n2", _to_jones_j0_expected())
    computed = _T_INV * _DELTA * v_j0
    if computed != TILDE_V:
        raise AssertionError(
            "Vt from the table diagram does not match the published polynomial "
            "(convention bug): " + computed.render())
    return computed


def _to_jones_j0_expected() -> LaurentPoly:
    # V(J_0) = t * Vt / (t^(1/2) - t^(-1/2)); expanded once here to keep
    # the mirror-retry comparison exact
    return LaurentPoly.from_exponents({
        Fraction(-1, 2): 2, Fraction(-3, 2): -1, Fraction(-5, 2): 2,
        Fraction(-7, 2): -1, Fraction(-9, 2): 1, Fraction(-11, 2): -1})


def lambda2_family(n: int) -> Fraction:
    """lambda2 of (-1)-surgery on L_n from the closed-form moments; 72n + 270."""
    if n < 0:
        raise ValueError("family index must be non-negative")
    value = ohtsuki_lambda2(Fraction(-12), Fraction(36 * n + 108), Fraction(-n))
    expected = Fraction(72 * n + 270)
    if value != expected:
        raise AssertionError(f"lambda2 closed form broke: {value} != {expected}")
    return value


def verify_family(n_max: int, table: KnotTable | None = None) -> dict:
    """Recompute the family anchors and closed forms; report per-check results."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    table = table if table is not None else load_table()
    checks: list[dict] = []

    def check(name: str, ok: bool, detail: str = ""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    anchors = {0: "5_2", 1: "9_45", 2: "11n63"}
    for n, entry in anchors.items():
        try:
            d = table.diagram(entry)
            nabla = skein.conway(d)
            expected_v = jones_family(n)
            vee, mirrored = _anchored_jones(table, entry, expected_v)
            if nabla != conway_family(n):
                nabla_m = skein.conway(d.mirror())
                if nabla_m == conway_family(n):
                    nabla = nabla_m
            check(f"conway[{entry}]", nabla == conway_family(n),
                  nabla.render("z"))
            check(f"jones[{entry}]", vee == expected_v,
                  vee.render() + (" (mirrored)" if mirrored else ""))
        except Exception as exc:  # noqa: BLE001 - report, do not raise
            check(f"anchor[{entry}]", False, f"{type(exc).__name__}: {exc}")

    try:
        vt = tilde_v(table)
        check("tilde_v", vt == TILDE_V, vt.render())
        moments = tuple(vt.moment(i) for i in range(4))
        check("tilde_v moments", moments == (0, 2, -4, -28),
              str(tuple(map(str, moments))))
    except Exception as exc:  # noqa: BLE001
        check("tilde_v", False, f"{type(exc).__name__}: {exc}")

    for n in range(n_max + 1):
        v = jones_family(n)
        ok = (v.moment(2) == -12 and v.moment(3) == 36 * n + 108
              and lambda2_family(n) == 72 * n + 270)
        check(f"closed_form[n={n}]", ok,
              f"v2={v.moment(2)} v3={v.moment(3)} lambda2={lambda2_family(n)}")

    return {
        "passing": all(c["pass"] for c in checks),
        "n_max": n_max,
        "checks": checks,
    }
