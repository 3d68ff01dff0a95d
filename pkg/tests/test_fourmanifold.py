"""Intersection forms, fold-map conditions, defects, and genus invariants."""

import itertools
import random
from math import inf

import pytest

from knotforge.fourmanifold import (
    IntersectionForm,
    ManifoldData,
    MapCatalog,
    SurfaceComponent,
    SurfaceConfig,
    TotalDefect,
    build_sigma_class,
    canonical_sphere_constraint,
    homology_sphere_coset_check,
    is_characteristic,
    parse_block_form,
    saeki_check,
    self_intersection,
    sg_k,
    sg_plain,
    signature,
    total_defect,
)


class TestParseBlockForm:
    def test_single_block(self):
        assert parse_block_form("<-1>").matrix == ((-1,),)

    def test_hyperbolic(self):
        assert parse_block_form("H").matrix == ((0, 1), (1, 0))

    def test_repeated_blocks(self):
        f = parse_block_form("<-1> + H + 3<-1> + 8<1>")
        assert f.rank == 1 + 2 + 3 + 8

    def test_malformed(self):
        for bad in ("<1> + Q", "", "2", "<1> + "):
            with pytest.raises(ValueError):
                parse_block_form(bad)


class TestSignature:
    def test_negative_definite_one(self):
        assert signature(parse_block_form("<-1>")) == -1

    def test_paper_block_sum(self):
        assert signature(parse_block_form("<-1> + H + 3<-1> + 8<1>")) == 4

    def test_empty_form(self):
        assert signature(IntersectionForm(())) == 0

    def test_hyperbolic_is_zero(self):
        assert signature(parse_block_form("H")) == 0
        assert signature(parse_block_form("4H")) == 0

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            IntersectionForm(((0, 1), (2, 0)))

    def test_against_numpy_eigenvalue_signs(self):
        numpy = pytest.importorskip("numpy")
        rng = random.Random(2024)
        for _ in range(120):
            n = rng.randrange(1, 9)
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randrange(-4, 5)
            eigs = numpy.linalg.eigvalsh(numpy.array(m, dtype=float))
            # integer symmetric matrices this small have nonzero eigenvalues
            # far from the float noise floor; guard the oracle's validity
            nonzero = [e for e in eigs if abs(e) > 1e-7]
            assert all(abs(e) > 1e-4 or abs(e) < 1e-9 for e in eigs)
            expected = sum(1 for e in nonzero if e > 0) \
                - sum(1 for e in nonzero if e < 0)
            assert signature(IntersectionForm(m)) == expected


class TestCharacteristic:
    def test_generator_of_minus_one(self):
        f = parse_block_form("<-1>")
        assert self_intersection((1,), f) == -1
        assert is_characteristic((1,), f)

    def test_zero_class_in_even_form(self):
        f = parse_block_form("H")
        assert is_characteristic((0, 0), f)
        assert not is_characteristic((1, 0), f)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            self_intersection((1, 0), parse_block_form("<-1>"))


class TestBuildSigmaClass:
    def test_3_8_0(self):
        cls, form, k = build_sigma_class(3, 8, 0)
        assert k == 1
        assert self_intersection(cls, form) == 12
        assert is_characteristic(cls, form)

    def test_0_1_0(self):
        cls, form, k = build_sigma_class(0, 1, 0)
        assert k == 0
        assert self_intersection(cls, form) == 0

    def test_0_0_0_rejected(self):
        with pytest.raises(ValueError, match="divisible by 4"):
            build_sigma_class(0, 0, 0)

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            build_sigma_class(-1, 0, 0)

    def test_sweep(self):
        # acceptance criterion 10: every admissible (n, m, j) in range gives
        # a characteristic class of self-intersection 3*sigma
        checked = 0
        for n in range(7):
            for m in range(7):
                for j in range(4):
                    sig = -1 - n + m - j
                    if sig % 4 != 0:
                        with pytest.raises(ValueError):
                            build_sigma_class(n, m, j)
                        continue
                    cls, form, k = build_sigma_class(n, m, j)
                    assert 4 * k == sig == signature(form)
                    assert self_intersection(cls, form) == 3 * sig
                    assert is_characteristic(cls, form)
                    checked += 1
        assert checked > 0


# -- fold-map existence -------------------------------------------------------

def double_config(g: int):
    """The double-manifold configuration: form <-1>+<1>, chi 4, F0 two
    genus-g surfaces of self-intersection -1 and +1, F1 one genus-(1+2g)
    null-homologous surface."""
    m = ManifoldData(form=parse_block_form("<-1> + <1>"), euler=4,
                     boundary_kind="closed")
    f0 = SurfaceConfig((
        SurfaceComponent(genus=g, cls=(1, 0)),
        SurfaceComponent(genus=g, cls=(0, 1)),
    ))
    f1 = SurfaceConfig((SurfaceComponent(genus=1 + 2 * g, cls=(0, 0)),))
    return m, f0, f1


class TestSaeki:
    @pytest.mark.parametrize("g", [0, 1, 2, 3])
    def test_double_passes_all_five(self, g):
        m, f0, f1 = double_config(g)
        rep = saeki_check(m, f0, f1)
        assert rep["verdict"], rep["conditions"]
        assert rep["signature"] == 0
        assert all(rep["conditions"].values())

    def test_corrupt_euler_only(self):
        m, f0, f1 = double_config(1)
        bad = ManifoldData(form=m.form, euler=5, boundary_kind="closed")
        conds = saeki_check(bad, f0, f1)["conditions"]
        assert [k for k, ok in conds.items() if not ok] == ["euler"]

    def test_corrupt_w2_only(self):
        m, f0, f1 = double_config(1)
        # an extra (1,1) torus in F1: self-int -1+1 = 0 and chi 0, so only
        # the characteristic test sees it
        f1_bad = SurfaceConfig(f1.components
                               + (SurfaceComponent(genus=1, cls=(1, 1)),))
        conds = saeki_check(m, f0, f1_bad)["conditions"]
        assert [k for k, ok in conds.items() if not ok] == ["w2_characteristic"]

    def test_corrupt_orientability_only(self):
        g = 1
        m, f0, f1 = double_config(g)
        # non-orientable genus 2g has the same Euler characteristic 2-2g
        f0_bad = SurfaceConfig((
            SurfaceComponent(genus=2 * g, orientable=False, cls=(1, 0)),
            f0.components[1],
        ))
        conds = saeki_check(m, f0_bad, f1)["conditions"]
        assert [k for k, ok in conds.items() if not ok] == ["f0_orientable"]

    def test_corrupt_f1_self_int_only(self):
        m, f0, f1 = double_config(1)
        # cls (0,2) has self-int 4 but the same mod-2 class as (0,0)
        f1_bad = SurfaceConfig((
            SurfaceComponent(genus=f1.components[0].genus, cls=(0, 2)),))
        conds = saeki_check(m, f0, f1_bad)["conditions"]
        assert [k for k, ok in conds.items() if not ok] \
            == ["f1_null_self_intersection"]

    def test_corrupt_f0_self_int_only(self):
        m, f0, f1 = double_config(1)
        # cls (0,3) keeps parity but moves F0.F0 from 0 to 8
        f0_bad = SurfaceConfig((
            f0.components[0],
            SurfaceComponent(genus=1, cls=(0, 3)),
        ))
        conds = saeki_check(m, f0_bad, f1)["conditions"]
        assert [k for k, ok in conds.items() if not ok] \
            == ["f0_self_int_is_3_signature"]

    def test_empty_singular_set_rejected(self):
        m, _, _ = double_config(0)
        with pytest.raises(ValueError):
            saeki_check(m, SurfaceConfig(), SurfaceConfig())

    def test_non_closed_rejected(self):
        _, f0, f1 = double_config(0)
        m = ManifoldData(form=parse_block_form("<-1> + <1>"), euler=4,
                         boundary_kind="other-boundary")
        with pytest.raises(ValueError):
            saeki_check(m, f0, f1)


# -- defects ------------------------------------------------------------------

def handle_manifold(p: int) -> ManifoldData:
    kind = "homology-sphere-boundary" if abs(p) == 1 else "other-boundary"
    return ManifoldData(form=parse_block_form(f"<{p}>"), euler=2,
                        boundary_kind=kind)


class TestTotalDefect:
    def test_prop44_configuration(self):
        m = handle_manifold(-1)
        sigma0 = SurfaceConfig((SurfaceComponent(genus=0, kind="definite",
                                                 k_multiple=1),))
        sigma1 = SurfaceConfig((SurfaceComponent(genus=1, cls=(0,)),))
        assert total_defect(m, sigma0, sigma1) == TotalDefect(d=0, h=2)

    def test_sphere_without_tori(self):
        m = handle_manifold(-1)
        sigma0 = SurfaceConfig((SurfaceComponent(genus=0, k_multiple=1),))
        assert total_defect(m, sigma0, SurfaceConfig()) == TotalDefect(0, 2)

    def test_closed_rejected(self):
        m = ManifoldData(form=parse_block_form("<-1>"), euler=2,
                         boundary_kind="closed")
        with pytest.raises(ValueError):
            total_defect(m, SurfaceConfig(), SurfaceConfig())

    def test_non_orientable_rejected(self):
        m = handle_manifold(-1)
        bad = SurfaceConfig((SurfaceComponent(genus=1, orientable=False,
                                              k_multiple=1),))
        with pytest.raises(ValueError):
            total_defect(m, bad, SurfaceConfig())

    def test_randomized_sweep_against_closed_form(self):
        # 500 cases: sphere configurations with multiples k_i and torus
        # Sigma^1 components over a (+/-1)-framed handle, where the two
        # defect formulas provably coincide (sigma(<p>) = p)
        rng = random.Random(99)
        for _ in range(500):
            p = rng.choice((1, -1))
            m = handle_manifold(p)
            ks = [rng.randrange(-4, 5) for _ in range(rng.randrange(1, 9))]
            spheres = SurfaceConfig(tuple(
                SurfaceComponent(genus=0, kind="definite", k_multiple=k)
                for k in ks))
            tori = SurfaceConfig(tuple(
                SurfaceComponent(genus=1, cls=(0,))
                for _ in range(rng.randrange(5))))
            td = total_defect(m, spheres, tori)
            chi0 = 2 * len(ks)
            expected = TotalDefect(d=0 + 2 - chi0,
                                   h=-3 * p + p * sum(k * k for k in ks))
            assert td == expected
            assert td.d % 2 == 0


class TestCosetCheck:
    def test_accepts_canonical_defects(self):
        assert homology_sphere_coset_check(TotalDefect(0, 2))
        assert homology_sphere_coset_check(TotalDefect(0, 0))

    def test_rejects_odd_degree(self):
        assert not homology_sphere_coset_check(TotalDefect(1, 2))

    def test_rejects_odd_h(self):
        assert not homology_sphere_coset_check(TotalDefect(2, 5))
        assert not homology_sphere_coset_check(TotalDefect(0, 3))

    def test_specified_mu(self):
        # (0, 2) lies in the mu=2 translate, not in mu=0
        assert homology_sphere_coset_check(TotalDefect(0, 2), mu_coset=2)
        assert not homology_sphere_coset_check(TotalDefect(0, 2), mu_coset=0)

    def test_lattice_points_accepted(self):
        rng = random.Random(5)
        for _ in range(200):
            s, r = rng.randrange(-6, 7), rng.randrange(-6, 7)
            mu = rng.choice((0, 2))
            # an honest lattice point: s*(-1,2) + r*(0,4) + (0,mu)
            point = TotalDefect(d=-s, h=2 * s + 4 * r + mu)
            if point.d % 2 == 0:
                assert homology_sphere_coset_check(point, mu)
                assert homology_sphere_coset_check(point)  # union of cosets


class TestCanonicalSphereConstraint:
    def test_minus_one(self):
        assert canonical_sphere_constraint(-1) == {1: 2, 3: 0, 5: -2}
        assert set(canonical_sphere_constraint(-1)) == {1, 3, 5}

    def test_minus_two(self):
        assert set(canonical_sphere_constraint(-2)) == {2, 3, 4}

    def test_seven(self):
        assert canonical_sphere_constraint(7) == {3: 0}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            canonical_sphere_constraint(0)

    def test_brute_force_over_s(self):
        for p in (-5, -3, -2, -1, 1, 2, 3, 4, 7):
            expected = {s: -3 * p + p * s for s in range(1, 101)
                        if -3 * p + p * s in (-2, 0, 2)}
            assert canonical_sphere_constraint(p) == expected


# -- genus invariants ---------------------------------------------------------

def catalog_of_genera(*maps, classes=((1,),), sings=("indefinite",)):
    """Catalog whose maps have the given admissible genus lists."""
    return MapCatalog(
        maps=tuple(
            SurfaceConfig(tuple(SurfaceComponent(genus=g, cls=(1,))
                                for g in genera))
            for genera in maps),
        admissible_classes=classes,
        allowed_singularities=sings,
    )


def brute_force_sg_k(cat: MapCatalog, k: int):
    best = inf
    for config in cat.maps:
        admissible = [c.genus for c in config.components
                      if c.kind in cat.allowed_singularities
                      and tuple(c.cls) in cat.admissible_classes]
        for subset in itertools.combinations(admissible, k):
            best = min(best, max(subset))
    return best


class TestSgExamples:
    def test_order_statistics(self):
        cat = catalog_of_genera([0, 2, 1])
        assert sg_k(cat, 1) == 0
        assert sg_k(cat, 2) == 1
        assert sg_k(cat, 3) == 2
        assert sg_k(cat, 4) == inf

    def test_empty_catalog(self):
        cat = MapCatalog()
        for k in (1, 2, 5):
            assert sg_k(cat, k) == inf
        assert sg_plain(cat) == inf

    def test_slice_side_k2_infinite(self):
        cat = catalog_of_genera([0], [0], [0])
        assert sg_k(cat, 1) == 0
        assert sg_k(cat, 2) == inf

    def test_sg_plain(self):
        assert sg_plain(catalog_of_genera([0, 2, 1])) == 2
        assert sg_plain(catalog_of_genera([3], [1, 1])) == 1

    def test_k_below_one_rejected(self):
        with pytest.raises(ValueError):
            sg_k(MapCatalog(), 0)

    def test_filters_by_class_and_singularity(self):
        cat = MapCatalog(
            maps=(SurfaceConfig((
                SurfaceComponent(genus=0, cls=(2,)),            # wrong class
                SurfaceComponent(genus=1, cls=(1,), kind="definite"),  # wrong kind
                SurfaceComponent(genus=3, cls=(1,)),
            )),),
            admissible_classes=((1,),),
            allowed_singularities=("indefinite",),
        )
        assert sg_k(cat, 1) == 3
        assert sg_k(cat, 2) == inf


class TestSgRandomized:
    def _random_catalog(self, rng):
        class_pool = [(1,), (-1,), (0,), (2,)]
        classes = rng.sample(class_pool, rng.randrange(1, 4))
        sings = rng.choice((("indefinite",), ("definite",),
                            ("definite", "indefinite")))
        maps = []
        for _ in range(rng.randrange(4)):
            comps = tuple(
                SurfaceComponent(genus=rng.randrange(7),
                                 kind=rng.choice(("definite", "indefinite")),
                                 cls=rng.choice(class_pool))
                for _ in range(rng.randrange(13)))
            maps.append(SurfaceConfig(comps))
        return MapCatalog(maps=tuple(maps), admissible_classes=classes,
                          allowed_singularities=sings)

    def test_1000_catalogs_match_brute_force(self):
        rng = random.Random(7)
        for _ in range(1000):
            cat = self._random_catalog(rng)
            for k in range(1, 14):
                assert sg_k(cat, k) == brute_force_sg_k(cat, k)

    def test_monotonicity(self):
        rng = random.Random(21)
        for _ in range(300):
            cat = self._random_catalog(rng)
            values = [sg_k(cat, k) for k in range(1, 14)]
            assert values == sorted(values)

    def test_sg_plain_is_last_order_statistic_per_map(self):
        rng = random.Random(33)
        for _ in range(200):
            cat = self._random_catalog(rng)
            expected = inf
            for config in cat.maps:
                genera = [c.genus for c in config.components
                          if c.kind in cat.allowed_singularities
                          and tuple(c.cls) in cat.admissible_classes]
                if genera:
                    expected = min(expected, max(genera))
            assert sg_plain(cat) == expected
