"""Group/form machinery, orbit counting, and the two computation routes."""

import math

import pytest

from modgal.galois_action import galois_permutation, orbit_partition
from modgal.pointed import (
    FiniteAbelianGroup,
    QuadraticFormSpec,
    build_pointed,
    canonical_form,
    closed_form_counts,
    cyclic_subgroup_count,
    enumerate_quadratic_forms,
    generator_partition,
    gram_steps,
    orbit_form_independence_check,
    pointed_orbit_partition,
)


class TestGroup:
    def test_chain_enforced(self):
        with pytest.raises(ValueError):
            FiniteAbelianGroup((6, 4))

    def test_factors_at_least_two(self):
        with pytest.raises(ValueError):
            FiniteAbelianGroup((1, 4))

    def test_trivial(self):
        g = FiniteAbelianGroup(())
        assert g.order == 1 and g.exponent == 1 and g.elements() == [()]

    def test_from_orders_canonicalizes(self):
        g = FiniteAbelianGroup.from_orders([6, 4])
        assert g.invariant_factors == (2, 12)
        assert FiniteAbelianGroup.from_orders([30, 2, 30]).invariant_factors == (2, 30, 30)

    def test_element_orders(self):
        g = FiniteAbelianGroup((2, 4))
        assert g.element_order((0, 0)) == 1
        assert g.element_order((1, 2)) == 2
        assert g.element_order((1, 1)) == 4


class TestForms:
    def test_gram_well_definedness(self):
        g = FiniteAbelianGroup((3, 6))
        M, steps = gram_steps(g)
        assert M == 12
        # a Gram entry of 2 on the order-3 generator would not be well
        # defined: steps force multiples of 4 there
        assert steps[0][0] == 4
        with pytest.raises(ValueError):
            QuadraticFormSpec(g, ((2, 0), (0, 1)))

    def test_symmetry_required(self):
        g = FiniteAbelianGroup((4, 4))
        with pytest.raises(ValueError):
            QuadraticFormSpec(g, ((1, 2), (3, 1)))

    def test_even_under_negation(self):
        g = FiniteAbelianGroup((5,))
        q = canonical_form(g)
        for x in range(5):
            assert q.q_exponent((x,)) == q.q_exponent(((-x) % 5,))

    def test_canonical_nondegenerate_everywhere(self):
        for facs in [(), (2,), (7,), (2, 2), (3, 6), (4, 8), (2, 2, 2), (12,)]:
            assert canonical_form(FiniteAbelianGroup(facs)).is_nondegenerate()

    def test_z3_has_two_forms(self):
        forms = list(enumerate_quadratic_forms(FiniteAbelianGroup((3,))))
        assert sorted(f.gram[0][0] for f in forms) == [1, 2]

    def test_degenerate_detected(self):
        g = FiniteAbelianGroup((4,))
        q = QuadraticFormSpec(g, ((2,),))
        assert not q.is_nondegenerate()


class TestBuild:
    def test_semion(self):
        g = FiniteAbelianGroup((2,))
        data = build_pointed(g, QuadraticFormSpec(g, ((1,),)))
        assert data.conductor == 4
        assert data.t_exponents == (0, 1)
        assert data.s[0] == (1, 1) and data.s[1][1] == -1
        assert data.validate().ok

    def test_trivial_group(self):
        data = build_pointed(FiniteAbelianGroup(()))
        assert data.rank == 1 and data.validate().ok

    def test_degenerate_rejected(self):
        g = FiniteAbelianGroup((4,))
        with pytest.raises(ValueError):
            build_pointed(g, QuadraticFormSpec(g, ((2,),)))

    def test_all_fixL_groups_validate(self):
        for facs in [(3,), (4,), (2, 2), (5,), (6,), (2, 4)]:
            data = build_pointed(FiniteAbelianGroup(facs))
            assert data.validate().ok, facs

    def test_scalar_action(self):
        from modgal.cyclotomic import units_mod

        g = FiniteAbelianGroup((7,))
        data = build_pointed(g)
        for k in units_mod(data.conductor):
            assert galois_permutation(data, k) == tuple(
                (k * h) % 7 for h in range(7)
            )


class TestCounting:
    @pytest.mark.parametrize(
        "facs,count",
        [
            ((2, 30, 30), 280),
            ((2, 6, 150), 120),
            ((2, 10, 90), 168),
            ((2, 2, 450), 72),
            ((30, 60), 210),
            ((6, 300), 90),
            ((10, 180), 126),
            ((2, 900), 54),
            ((15, 120), 140),
            ((3, 600), 60),
            ((5, 360), 84),
            ((1800,), 36),
        ],
    )
    def test_rank_1800_table(self, facs, count):
        assert cyclic_subgroup_count(FiniteAbelianGroup(facs)) == count

    def test_trivial(self):
        assert cyclic_subgroup_count(FiniteAbelianGroup(())) == 1

    def test_cyclic_is_divisor_count(self):
        for n in [2, 6, 12, 60, 64]:
            assert cyclic_subgroup_count(FiniteAbelianGroup((n,))) == len(
                [d for d in range(1, n + 1) if n % d == 0]
            )

    def test_elementary_abelian_closed_form(self):
        for p, n in [(2, 2), (3, 2), (5, 2), (2, 3)]:
            g = FiniteAbelianGroup((p,) * n)
            assert cyclic_subgroup_count(g) == closed_form_counts(
                "elementary_abelian", p=p, n=n
            )

    def test_closed_form_guards(self):
        with pytest.raises(ValueError):
            closed_form_counts("product_cyclic", p=3, n=1)
        with pytest.raises(ValueError):
            closed_form_counts("elementary_abelian", p=4, n=1)
        with pytest.raises(ValueError):
            closed_form_counts("nope", p=5, n=1)
        assert closed_form_counts("cyclic_divisors", n=12) == 6
        assert closed_form_counts("product_cyclic", p=5, n=1) == 3
        assert closed_form_counts("product_elementary_abelian", p=5, n=2) == 13


class TestOrbitRoutes:
    def test_fast_matches_generic_small_groups(self):
        # every group of order <= 10, every enumerated form: the exponent
        # route and the generic cyclotomic route give the same partition
        chains = [
            (),
            (2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4),
            (2, 2, 2), (9,), (3, 3), (10,),
        ]
        for facs in chains:
            g = FiniteAbelianGroup(facs)
            for form in enumerate_quadratic_forms(g, max_forms=8):
                fast = pointed_orbit_partition(g, form)
                generic = orbit_partition(build_pointed(g, form)).orbits
                assert fast == generic, (facs, form.gram)

    def test_z5_partition(self):
        g = FiniteAbelianGroup((5,))
        assert pointed_orbit_partition(g, canonical_form(g)) == ((0,), (1, 2, 3, 4))

    def test_generator_partition_against_counts(self):
        for facs in [(2, 30), (12,), (2, 2, 4), (9, 9)]:
            g = FiniteAbelianGroup(facs)
            assert len(generator_partition(g)) == cyclic_subgroup_count(g)


class TestFormIndependence:
    def test_z2z2_trivial_action(self):
        report = orbit_form_independence_check(FiniteAbelianGroup((2, 2)))
        assert report.ok
        assert report.partition == ((0,), (1,), (2,), (3,))
        assert report.forms_checked > 1

    def test_z3_both_forms(self):
        report = orbit_form_independence_check(FiniteAbelianGroup((3,)))
        assert report.ok and report.forms_checked == 2
        assert report.partition == ((0,), (1, 2))

    def test_trivial_group(self):
        report = orbit_form_independence_check(FiniteAbelianGroup(()))
        assert report.ok and report.partition == ((0,),)

    def test_order_bound(self):
        with pytest.raises(ValueError):
            orbit_form_independence_check(FiniteAbelianGroup((64,)), max_order=32)
