"""Lattice enumeration, centralizers, and the structural theorems."""

import pytest

from modgal.cyclotomic import CycNum
from modgal.families import fixture
from modgal.galois_action import orbit_partition
from modgal.modular_data import deligne_product
from modgal.pointed import FiniteAbelianGroup, build_pointed
from modgal.subcategories import (
    FusionSubcategory,
    adjoint_part,
    all_subcategories,
    centralizer,
    check_orbit_lower_bound,
    check_theorem_galois_closure,
    counting2_degree_check,
    generated_subcategory,
    is_galois_closed,
    is_integral,
    is_symmetric,
    orbitwise_pseudoinvertible,
    pointed_part,
    pseudoinvertibles,
    two_orbit_diagnosis,
)


def members(sub):
    return sub.sorted_members


class TestGeneratedSubcategory:
    def test_empty_seed(self, fixture_catalog):
        data = fixture_catalog["ising"]
        assert members(generated_subcategory(data, set())) == (0,)

    def test_full_seed(self, fixture_catalog):
        data = fixture_catalog["ising"]
        assert members(generated_subcategory(data, {0, 1, 2})) == (0, 1, 2)

    def test_ising_fermion_generates_pointed(self, fixture_catalog):
        # index 2 squares to the unit
        data = fixture_catalog["ising"]
        assert members(generated_subcategory(data, {2})) == (0, 2)

    def test_closure_operator_laws(self, fixture_catalog):
        data = fixture_catalog["fib_x_fib"]
        for seed in [set(), {1}, {2}, {1, 3}]:
            closed = generated_subcategory(data, seed)
            assert seed <= closed.members  # extensive
            again = generated_subcategory(data, closed.members)
            assert again.members == closed.members  # idempotent
        small = generated_subcategory(data, {2}).members
        big = generated_subcategory(data, {2, 3}).members
        assert small <= big  # monotone


class TestLattice:
    @pytest.mark.parametrize(
        "name,count",
        [
            ("fibonacci", 2),
            ("fib_x_fib", 4),
            ("pointed_z5", 2),
            ("pointed_z3", 2),
            ("ising", 3),
            ("so5_3half_ad", 2),
            ("sl2_12_A0", 2),
            ("pointed_z4", 3),
        ],
    )
    def test_counts(self, name, count, fixture_catalog):
        assert len(all_subcategories(fixture_catalog[name])) == count

    def test_bound(self, fixture_catalog):
        with pytest.raises(ValueError):
            all_subcategories(fixture_catalog["so5_3half_ad"], max_rank=4)


class TestCentralizer:
    def test_whole_and_trivial(self, fixture_catalog):
        for name in ["fibonacci", "ising", "so5_3half_ad"]:
            data = fixture_catalog[name]
            whole = FusionSubcategory(data, frozenset(range(data.rank)))
            triv = FusionSubcategory(data, frozenset({0}))
            assert centralizer(data, whole).members == {0}
            assert centralizer(data, triv).members == set(range(data.rank))

    def test_double_centralizer(self, fixture_catalog):
        for name, data in fixture_catalog.items():
            for sub in all_subcategories(data):
                cc = centralizer(data, centralizer(data, sub))
                assert cc.members == sub.members, name

    def test_reverses_inclusion(self, fixture_catalog):
        data = fixture_catalog["fib_x_fib"]
        subs = all_subcategories(data)
        for a in subs:
            for b in subs:
                if a.members <= b.members:
                    assert (
                        centralizer(data, b).members <= centralizer(data, a).members
                    )

    def test_dimension_identity(self, fixture_catalog):
        # dim(D) * dim(C_C(D)) = dim(C) on modular fixtures
        for name, data in fixture_catalog.items():
            for sub in all_subcategories(data):
                cent = centralizer(data, sub)
                assert sub.dim() * cent.dim() == data.global_dim, name


class TestPointedAdjoint:
    def test_pointed_data_extremes(self, fixture_catalog):
        data = fixture_catalog["pointed_z5"]
        assert pointed_part(data).rank == data.rank
        assert members(adjoint_part(data)) == (0,)

    def test_fibonacci_trivial_pointed(self, fixture_catalog):
        assert members(pointed_part(fixture_catalog["fibonacci"])) == (0,)

    def test_ising_ranks(self, fixture_catalog):
        data = fixture_catalog["ising"]
        assert pointed_part(data).rank == 2
        assert centralizer(data, pointed_part(data)).members == adjoint_part(data).members

    def test_unit_orbit_inside_adjoint(self, fixture_catalog):
        for name, data in fixture_catalog.items():
            orbit0 = set(orbit_partition(data).orbit_of(0))
            assert orbit0 <= adjoint_part(data).members, name


class TestPredicates:
    def test_trivial_subcategory(self, fixture_catalog):
        data = fixture_catalog["fibonacci"]
        triv = FusionSubcategory(data, frozenset({0}))
        assert is_integral(data, triv)
        assert is_symmetric(data, triv)
        # closure of the trivial subcategory needs the unit orbit to be a
        # fixed point, which holds for pointed data but not transitive data
        assert not is_galois_closed(triv, orbit_partition(data))
        pointed = fixture_catalog["pointed_z4"]
        triv_p = FusionSubcategory(pointed, frozenset({0}))
        assert is_galois_closed(triv_p, orbit_partition(pointed))

    def test_fib_factor_not_closed(self, fixture_catalog):
        data = fixture_catalog["fib_x_fib"]
        factor = generated_subcategory(data, {2})
        part = orbit_partition(data)
        assert not is_galois_closed(factor, part)
        assert not is_integral(data, centralizer(data, factor))

    def test_ising_pointed_integral(self, fixture_catalog):
        data = fixture_catalog["ising"]
        assert is_integral(data, pointed_part(data))


class TestClosureTheorem:
    def test_all_fixtures(self, fixture_catalog):
        for name, data in fixture_catalog.items():
            report = check_theorem_galois_closure(data)
            assert report.ok, (name, report.failures)

    def test_integral_fixture_all_closed(self, fixture_catalog):
        data = fixture_catalog["pointed_z4"]
        part = orbit_partition(data)
        for sub in all_subcategories(data):
            assert is_galois_closed(sub, part)

    def test_large_products_too(self, fixture_catalog):
        prod = deligne_product(
            fixture_catalog["fibonacci"], fixture_catalog["pointed_z3"]
        )
        assert check_theorem_galois_closure(prod).ok


class TestOrbitBound:
    def test_pointed_z4_equality(self, fixture_catalog):
        report = check_orbit_lower_bound(fixture_catalog["pointed_z4"])
        assert report.bound == 3 and report.orbit_count == 3

    def test_fibonacci(self, fixture_catalog):
        report = check_orbit_lower_bound(fixture_catalog["fibonacci"])
        assert report.bound == 1 and report.orbit_count == 1

    def test_elementary_abelian_25(self):
        data = build_pointed(FiniteAbelianGroup((5, 5)))
        report = check_orbit_lower_bound(data)
        assert report.bound == 3
        assert report.orbit_count == 7


class TestPseudoinvertible:
    def test_pointed_everything(self, fixture_catalog):
        data = fixture_catalog["pointed_z5"]
        assert pseudoinvertibles(data) == frozenset(range(5))
        assert orbitwise_pseudoinvertible(data)[0]

    def test_fibonacci(self, fixture_catalog):
        data = fixture_catalog["fibonacci"]
        assert pseudoinvertibles(data) == frozenset({0})
        assert orbitwise_pseudoinvertible(data)[0]

    def test_so5_fails(self, fixture_catalog):
        data = fixture_catalog["so5_3half_ad"]
        assert pseudoinvertibles(data) == frozenset({0, 1, 2})
        ok, _ = orbitwise_pseudoinvertible(data)
        assert not ok


class TestCounting2:
    def test_whole_and_trivial(self, fixture_catalog):
        for name in ["fibonacci", "ising", "fib_x_fib", "so5_3half_ad"]:
            data = fixture_catalog[name]
            whole = FusionSubcategory(data, frozenset(range(data.rank)))
            triv = FusionSubcategory(data, frozenset({0}))
            assert counting2_degree_check(data, whole).ok, name
            report = counting2_degree_check(data, triv)
            assert report.ok and report.entries[0][1] == 1, name

    def test_fib_factor_degrees(self, fixture_catalog):
        data = fixture_catalog["fib_x_fib"]
        factor = generated_subcategory(data, {2})
        report = counting2_degree_check(data, factor)
        assert report.ok
        by_index = {e[0]: e for e in report.entries}
        # the nontrivial factor object: orbit size 2, meets the factor once
        x = max(factor.members)
        assert by_index[x][1] == 1 and by_index[x][2] == 2 and by_index[x][3] == 2

    def test_every_enumerated_subcategory(self, fixture_catalog):
        for name, data in fixture_catalog.items():
            for sub in all_subcategories(data):
                assert counting2_degree_check(data, sub).ok, name


class TestTwoOrbitDiagnosis:
    @pytest.mark.parametrize(
        "name,clause",
        [
            ("ising", "ising_x_transitive"),
            ("fib_x_fib", "fib_x_fib"),
            ("fib_x_fib_conj", "fib_x_fib"),
            ("so5_3half_ad", "simple"),
            ("sl2_12_A0", "simple"),
            ("pointed_z5", "pointed_prime_x_transitive"),
            ("pointed_z3", "pointed_prime_x_transitive"),
        ],
    )
    def test_clauses(self, name, clause, fixture_catalog):
        assert two_orbit_diagnosis(fixture_catalog[name]).clause == clause

    def test_requires_two_orbits(self, fixture_catalog):
        with pytest.raises(ValueError):
            two_orbit_diagnosis(fixture_catalog["fibonacci"])
