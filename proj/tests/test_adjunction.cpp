#include <moncat/adjunction.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "support/testutil.hpp"

using moncat::AbMor;
using moncat::FinAb;
using moncat::FinSet;
using moncat::FinSetMor;
using moncat::FinSetObj;
using moncat::FreeAbelianAdjunction;
using moncat::IntMatrix;
using moncat::MonoidMorphism;
using moncat::MonoidObject;
using moncat::PresentedAbGroup;
using moncat::Word;
using moncat::check_lift_naturality;
using moncat::check_monoid;
using moncat::check_monoid_morphism;
using moncat::cyclic_ring;
using moncat::enumerate_monoid_morphisms;
using moncat::enumerate_ring_morphisms;
using moncat::hom_bijection_check;
using moncat::lift_relation_columns;
using moncat::lift_relation_pairs;
using moncat::monoid_equal;
using moncat::monoid_from_table;
using moncat::monoid_morphism_from_table;
using moncat::monoid_ring;
using moncat::monoid_ring_direct;
using moncat::product_ring;
using moncat::ring_counit;
using moncat::transpose_to_monoid;
using moncat::transpose_to_ring;
using moncat::underlying_multiplicative_monoid;
using moncat::word_index;

namespace {

const std::vector<int> kAddMod2{0, 1, 1, 0};
const std::vector<int> kAddMod4{0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2};
const std::vector<int> kAbsorbing2{0, 1, 1, 1};  // e, a with a*a = a

}  // namespace

TEST_CASE("adjunction law battery") {
    const FreeAbelianAdjunction adj;
    const auto z2 = PresentedAbGroup::cyclic(2);
    const auto z4 = PresentedAbGroup::cyclic(4);
    const auto z6 = PresentedAbGroup::cyclic(6);
    const auto klein = PresentedAbGroup(2, IntMatrix::from_rows({{2, 0}, {0, 2}}));
    const std::vector<PresentedAbGroup> groups{z4, z6, klein};
    const std::vector<AbMor> group_mors{
        AbMor(z4, z2, IntMatrix::from_rows({{1}})),
        AbMor(z2, z4, IntMatrix::from_rows({{2}})),
        AbMor(z4, z4, IntMatrix::from_rows({{3}})),
        AbMor(klein, z2, IntMatrix::from_rows({{1, 1}})),
    };
    const FinSetObj two(2), three(3);
    const std::vector<FinSetMor> set_mors{
        FinSetMor(two, three, {2, 0}),
        FinSetMor(three, two, {1, 1, 0}),
        FinSetMor(two, two, {1, 0}),
    };
    const auto report = check_adjunction_laws(adj, groups, group_mors, set_mors);
    INFO(report.summary());
    REQUIRE(report.ok());
}

TEST_CASE("underlying set functor needs a finite group") {
    const FreeAbelianAdjunction adj;
    REQUIRE_THROWS_AS(adj.right_on_object(PresentedAbGroup::free_group(1)), std::domain_error);
    REQUIRE(adj.right_on_object(PresentedAbGroup::cyclic(5)).size == 5);
}

TEST_CASE("multiplicative monoid of a finite ring") {
    const auto m6 = underlying_multiplicative_monoid(cyclic_ring(6));
    REQUIRE(m6.carrier.size == 6);
    REQUIRE(m6.unit.table[0] == 1);
    REQUIRE(m6.mult.table[2 * 6 + 5] == 4);  // 2*5 = 10 = 4 mod 6
    REQUIRE(m6.mult.table[3 * 6 + 2] == 0);
    REQUIRE(check_monoid(m6).ok());

    // the multiplicative monoid of Z/2 x Z/3 has the same idempotent count
    // as (Z/6, *) by the Chinese remainder theorem
    const auto crt = underlying_multiplicative_monoid(product_ring(2, 3));
    REQUIRE(check_monoid(crt).ok());
    int crt_idem = 0, z6_idem = 0;
    for (int x = 0; x < 6; ++x) {
        crt_idem += crt.mult.table[x * 6 + x] == x;
        z6_idem += m6.mult.table[x * 6 + x] == x;
    }
    REQUIRE(crt_idem == 4);
    REQUIRE(z6_idem == 4);
}

TEST_CASE("monoid ring of the order-2 group") {
    const auto c2 = monoid_from_table(kAddMod2, 0);
    const auto lift = monoid_ring(c2);
    INFO(lift.verification.summary());
    REQUIRE(lift.verification.ok());
    REQUIRE(lift.ring.carrier.free_rank() == 2);
    REQUIRE(lift.ring.carrier.torsion().empty());
    REQUIRE(monoid_equal<FinAb>(lift.ring, monoid_ring_direct(c2)));

    // [g][g] = [1]
    REQUIRE(lift.ring.mult.matrix().col(3) == IntMatrix::identity(2).col(0));

    SECTION("projection reduces words to the one-letter basis") {
        const auto& p = lift.projection.matrix();
        REQUIRE(p.col(word_index(lift.algebra, Word{1})) == IntMatrix::identity(2).col(1));
        REQUIRE(p.col(word_index(lift.algebra, Word{1, 1, 1})) == IntMatrix::identity(2).col(1));
        REQUIRE(p.col(word_index(lift.algebra, Word{1, 1})) == IntMatrix::identity(2).col(0));
        REQUIRE(p.col(word_index(lift.algebra, Word{})) == lift.ring.unit.matrix());
    }

    SECTION("defining pairs fall inside the imposed relation lattice") {
        const auto pairs = lift_relation_pairs(c2, lift.algebra);
        const auto presented = PresentedAbGroup(lift.algebra.total.gens(),
                                                lift_relation_columns(c2, lift.algebra));
        const IntMatrix mult_diff = pairs.mult_lhs.matrix() - pairs.mult_rhs.matrix();
        for (std::size_t j = 0; j < mult_diff.cols(); ++j)
            REQUIRE(presented.contains_in_lattice(mult_diff.col(j)));
        const IntMatrix unit_diff = pairs.unit_lhs.matrix() - pairs.unit_rhs.matrix();
        REQUIRE(presented.contains_in_lattice(unit_diff.col(0)));
    }
}

TEST_CASE("monoid ring matches the direct construction on small catalogs") {
    for (int order = 1; order <= 3; ++order)
        for (const auto& table : oracles::monoid_tables_up_to_iso(order)) {
            const auto d = monoid_from_table(table, 0);
            const auto lift = monoid_ring(d);
            REQUIRE(lift.verification.ok());
            REQUIRE(monoid_equal<FinAb>(lift.ring, monoid_ring_direct(d)));
        }
}

TEST_CASE("monoid ring of the trivial monoid is the integers") {
    const auto lift = monoid_ring(monoid_from_table({0}, 0));
    REQUIRE(lift.ring.carrier.free_rank() == 1);
    REQUIRE(lift.ring.mult.matrix() == IntMatrix::identity(1));
    REQUIRE(lift.ring.unit.matrix() == IntMatrix::identity(1));
}

TEST_CASE("monoid ring rejects bad inputs") {
    const auto c2 = monoid_from_table(kAddMod2, 0);
    REQUIRE_THROWS_AS(monoid_ring(c2, 2), std::invalid_argument);
    // associativity fails for this table, so the lift must refuse it
    const auto broken = monoid_from_table({0, 1, 2, 1, 2, 2, 2, 1, 0}, 0);
    REQUIRE_THROWS_AS(monoid_ring(broken), std::invalid_argument);
}

TEST_CASE("ring counit evaluates basis vectors to their elements") {
    const auto sigma = ring_counit(cyclic_ring(6));
    INFO(check_monoid_morphism<FinAb>(sigma).summary());
    REQUIRE(check_monoid_morphism<FinAb>(sigma).ok());
    REQUIRE(sigma.map.matrix().col(5) == IntMatrix::from_rows({{5}}));
    REQUIRE(sigma.map.matrix().col(0) == IntMatrix::from_rows({{0}}));
}

TEST_CASE("counit factors through the lift of the multiplicative monoid") {
    const FreeAbelianAdjunction adj;
    const auto a = cyclic_ring(4);
    const auto rbar = underlying_multiplicative_monoid(a);
    const auto lift = monoid_ring(rbar);
    const auto sigma = ring_counit(a);

    // the word-presented lift agrees with the direct presentation the
    // counit is defined on
    REQUIRE(monoid_equal<FinAb>(lift.ring, sigma.dom));

    const AbMor degree_one =
        FinAb::compose(sigma.map, FinAb::compose(lift.projection, lift.algebra.inject[1]));
    REQUIRE(FinAb::mor_equal(degree_one, adj.counit(a.carrier)));
    const AbMor degree_zero =
        FinAb::compose(sigma.map, FinAb::compose(lift.projection, lift.algebra.inject[0]));
    REQUIRE(FinAb::mor_equal(degree_zero, a.unit));
}

TEST_CASE("lifted morphisms are natural") {
    const auto c2 = monoid_from_table(kAddMod2, 0);
    const auto c4 = monoid_from_table(kAddMod4, 0);
    const auto trivial = monoid_from_table({0}, 0);
    const auto lift_c2 = monoid_ring(c2);
    const auto lift_c4 = monoid_ring(c4);
    const auto lift_trivial = monoid_ring(trivial);

    const auto parity = monoid_morphism_from_table(c4, c2, {0, 1, 0, 1});
    const auto embed = monoid_morphism_from_table(trivial, c2, {0});

    for (const auto* h : {&parity}) {
        const auto report = check_lift_naturality(*h, lift_c4, lift_c2);
        INFO(report.summary());
        REQUIRE(report.ok());
    }
    const auto report = check_lift_naturality(embed, lift_trivial, lift_c2);
    INFO(report.summary());
    REQUIRE(report.ok());
}

TEST_CASE("hom bijection for the order-2 group against small rings") {
    const auto c2 = monoid_from_table(kAddMod2, 0);

    auto against_z6 = hom_bijection_check(c2, cyclic_ring(6));
    INFO(against_z6.verification.summary());
    REQUIRE(against_z6.verification.ok());
    REQUIRE(against_z6.monoid_side.size() == 2);  // g -> 1 or 5

    auto against_z12 = hom_bijection_check(c2, cyclic_ring(12));
    REQUIRE(against_z12.verification.ok());
    REQUIRE(against_z12.monoid_side.size() == 4);  // square roots of 1 mod 12
}

TEST_CASE("hom bijection counts idempotents for the absorbing monoid") {
    const auto d = monoid_from_table(kAbsorbing2, 0);
    const auto report = hom_bijection_check(d, cyclic_ring(6));
    INFO(report.verification.summary());
    REQUIRE(report.verification.ok());
    REQUIRE(report.ring_side.size() == 4);  // a -> 0, 1, 3, or 4
}

TEST_CASE("hom bijection for the trivial monoid") {
    const auto report = hom_bijection_check(monoid_from_table({0}, 0), product_ring(2, 2));
    REQUIRE(report.verification.ok());
    REQUIRE(report.monoid_side.size() == 1);
}

TEST_CASE("ring morphism enumeration demands a free domain carrier") {
    const auto a = cyclic_ring(4);
    REQUIRE_THROWS_AS(enumerate_ring_morphisms(a, a), std::invalid_argument);
}

TEST_CASE("transposes are mutually inverse on a concrete instance") {
    const auto c2 = monoid_from_table(kAddMod2, 0);
    const auto a = cyclic_ring(6);
    const auto lift = monoid_ring(c2);
    const auto rbar = underlying_multiplicative_monoid(a);
    const auto h = monoid_morphism_from_table(c2, rbar, {1, 5});
    REQUIRE(check_monoid_morphism<FinSet>(h).ok());

    const auto f = transpose_to_ring(h, lift, a);
    REQUIRE(check_monoid_morphism<FinAb>(f).ok());
    REQUIRE(f.map.matrix().col(1) == IntMatrix::from_rows({{5}}));
    const auto back = transpose_to_monoid(f, c2, a);
    REQUIRE(FinSet::mor_equal(back.map, h.map));
}
