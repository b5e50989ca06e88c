#pragma once

#include <moncat/free_monoid.hpp>
#include <moncat/monoid.hpp>
#include <moncat/smith.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncat {

// ---------------------------------------------------------------------------
// the free-forgetful adjunction between finite sets and abelian groups

/// Free abelian group functor together with its (partial) right adjoint.
/// The free side is total; the underlying-set side is realized only on
/// finite groups, where elements are indexed by the carrier's element
/// coding. The two monoidal comparison maps pair elements by Kronecker
/// products of coordinates.
struct FreeAbelianAdjunction {
    PresentedAbGroup left_on_object(const FinSetObj& s) const {
        return PresentedAbGroup::free_group(static_cast<std::size_t>(s.size));
    }

    AbMor left_on_morphism(const FinSetMor& f) const {
        IntMatrix m(static_cast<std::size_t>(f.cod.size), static_cast<std::size_t>(f.dom.size));
        for (int x = 0; x < f.dom.size; ++x)
            m.at(static_cast<std::size_t>(f(x)), static_cast<std::size_t>(x)) = 1;
        return AbMor(left_on_object(f.dom), left_on_object(f.cod), std::move(m));
    }

    FinSetObj right_on_object(const PresentedAbGroup& g) const {
        if (!g.is_finite())
            throw std::domain_error(
                "FreeAbelianAdjunction: underlying set of an infinite group");
        return FinSetObj(static_cast<int>(g.order_index()));
    }

    FinSetMor right_on_morphism(const AbMor& f) const {
        const FinSetObj dom = right_on_object(f.dom());
        const FinSetObj cod = right_on_object(f.cod());
        std::vector<int> table(static_cast<std::size_t>(dom.size));
        for (int x = 0; x < dom.size; ++x)
            table[static_cast<std::size_t>(x)] = static_cast<int>(f.cod().element_index(
                f(f.dom().element_coords(static_cast<std::size_t>(x)))));
        return FinSetMor(dom, cod, std::move(table));
    }

    /// Monoidal comparison RA x RB -> R(A (x) B), (a, b) |-> a (x) b.
    FinSetMor monoidal_product(const PresentedAbGroup& a, const PresentedAbGroup& b) const {
        const PresentedAbGroup t = FinAb::tensor(a, b);
        const FinSetObj ra = right_on_object(a), rb = right_on_object(b);
        std::vector<int> table;
        table.reserve(static_cast<std::size_t>(ra.size) * static_cast<std::size_t>(rb.size));
        for (int x = 0; x < ra.size; ++x)
            for (int y = 0; y < rb.size; ++y)
                table.push_back(static_cast<int>(t.element_index(IntMatrix::kronecker(
                    a.element_coords(static_cast<std::size_t>(x)),
                    b.element_coords(static_cast<std::size_t>(y))))));
        return FinSetMor(FinSet::tensor(ra, rb), right_on_object(t), std::move(table));
    }

    /// Opmonoidal comparison L(S x T) -> LS (x) LT, the mate of
    /// monoidal_product: a basis pair goes to the Kronecker product of the
    /// two basis vectors.
    AbMor opdistributor(const FinSetObj& s, const FinSetObj& t) const {
        const PresentedAbGroup ls = left_on_object(s), lt = left_on_object(t);
        const PresentedAbGroup cod = FinAb::tensor(ls, lt);
        IntMatrix m(cod.gens(), static_cast<std::size_t>(s.size) * static_cast<std::size_t>(t.size));
        for (int x = 0; x < s.size; ++x)
            for (int y = 0; y < t.size; ++y)
                m.set_col(static_cast<std::size_t>(x * t.size + y),
                          IntMatrix::kronecker(unit_element(s, x), unit_element(t, y)));
        return AbMor(left_on_object(FinSet::tensor(s, t)), cod, std::move(m));
    }

    /// Opmonoidal unit: the free group on a point is the tensor unit itself.
    AbMor opunit() const {
        return AbMor(PresentedAbGroup::free_group(1), PresentedAbGroup::free_group(1),
                     IntMatrix::identity(1));
    }

    /// Adjunction unit on elements: x in S goes to the x-th basis vector of
    /// LS. (LS is infinite, so the unit exists only elementwise.)
    IntMatrix unit_element(const FinSetObj& s, int x) const {
        IntMatrix e(static_cast<std::size_t>(s.size), 1);
        e.at(static_cast<std::size_t>(x), 0) = 1;
        return e;
    }

    /// Adjunction counit LRA -> A on a finite group: the basis vector
    /// indexed by x goes to the coordinates of the element it names.
    AbMor counit(const PresentedAbGroup& g) const {
        const FinSetObj rg = right_on_object(g);
        IntMatrix m(g.gens(), static_cast<std::size_t>(rg.size));
        for (int x = 0; x < rg.size; ++x)
            m.set_col(static_cast<std::size_t>(x), g.element_coords(static_cast<std::size_t>(x)));
        return AbMor(left_on_object(rg), g, std::move(m));
    }
};

/// Law battery for the adjunction on supplied samples: functoriality of
/// both actions, the unit/counit triangle on finite groups (elementwise,
/// since the free side is infinite), naturality of unit, counit, and the
/// monoidal comparison, and the mate equation tying the two comparisons
/// together. Group samples must be finite.
inline CheckReport check_adjunction_laws(const FreeAbelianAdjunction& adj,
                                         const std::vector<PresentedAbGroup>& groups,
                                         const std::vector<AbMor>& group_mors,
                                         const std::vector<FinSetMor>& set_mors) {
    CheckReport report;

    bool left_id = true, left_comp = true;
    for (const auto& f : set_mors) {
        left_id = left_id &&
                  FinAb::mor_equal(adj.left_on_morphism(FinSet::identity(f.dom)),
                                   FinAb::identity(adj.left_on_object(f.dom)));
        for (const auto& g : set_mors)
            if (FinSet::obj_equal(g.cod, f.dom))
                left_comp = left_comp &&
                            FinAb::mor_equal(adj.left_on_morphism(FinSet::compose(f, g)),
                                             FinAb::compose(adj.left_on_morphism(f),
                                                            adj.left_on_morphism(g)));
    }
    report.add("free functor preserves identities", left_id);
    report.add("free functor preserves composition", left_comp);

    bool right_id = true, right_comp = true;
    for (const auto& g : groups)
        right_id = right_id && FinSet::mor_equal(adj.right_on_morphism(FinAb::identity(g)),
                                                 FinSet::identity(adj.right_on_object(g)));
    for (const auto& f : group_mors)
        for (const auto& g : group_mors)
            if (FinAb::obj_equal(g.cod(), f.dom()))
                right_comp = right_comp &&
                             FinSet::mor_equal(adj.right_on_morphism(FinAb::compose(f, g)),
                                               FinSet::compose(adj.right_on_morphism(f),
                                                               adj.right_on_morphism(g)));
    report.add("underlying-set functor preserves identities", right_id);
    report.add("underlying-set functor preserves composition", right_comp);

    bool triangle = true;
    for (const auto& g : groups) {
        const AbMor lambda = adj.counit(g);
        const std::size_t order = g.order_index();
        for (std::size_t x = 0; x < order; ++x)
            triangle = triangle && g.element_index(lambda.matrix().col(x)) == x;
    }
    report.add("counit splits the unit on every finite sample", triangle);

    bool counit_nat = true;
    for (const auto& f : group_mors)
        counit_nat = counit_nat &&
                     FinAb::mor_equal(
                         FinAb::compose(f, adj.counit(f.dom())),
                         FinAb::compose(adj.counit(f.cod()),
                                        adj.left_on_morphism(adj.right_on_morphism(f))));
    report.add("counit is natural", counit_nat);

    bool unit_nat = true;
    for (const auto& f : set_mors) {
        const AbMor lf = adj.left_on_morphism(f);
        for (int x = 0; x < f.dom.size; ++x)
            unit_nat = unit_nat &&
                       lf.matrix().col(static_cast<std::size_t>(x)) ==
                           adj.unit_element(f.cod, f(x));
    }
    report.add("unit is natural", unit_nat);

    bool product_nat = true;
    for (const auto& f : group_mors)
        for (const auto& g : group_mors) {
            const auto lhs = FinSet::compose(adj.right_on_morphism(FinAb::tensor_mor(f, g)),
                                             adj.monoidal_product(f.dom(), g.dom()));
            const auto rhs =
                FinSet::compose(adj.monoidal_product(f.cod(), g.cod()),
                                FinSet::tensor_mor(adj.right_on_morphism(f),
                                                   adj.right_on_morphism(g)));
            product_nat = product_nat && FinSet::mor_equal(lhs, rhs);
        }
    report.add("monoidal comparison is natural", product_nat);

    bool mate = true;
    for (const auto& a : groups)
        for (const auto& b : groups) {
            const PresentedAbGroup t = FinAb::tensor(a, b);
            const AbMor theta =
                FinAb::compose(FinAb::tensor_mor(adj.counit(a), adj.counit(b)),
                               adj.opdistributor(adj.right_on_object(a), adj.right_on_object(b)));
            const FinSetMor phi = adj.monoidal_product(a, b);
            for (std::size_t p = 0; p < phi.table.size(); ++p)
                mate = mate && t.element_index(theta.matrix().col(p)) ==
                                   static_cast<std::size_t>(phi.table[p]);
        }
    report.add("opmonoidal comparison is the mate of the monoidal one", mate);

    report.add("free functor sends the point to the tensor unit",
               FinAb::is_unit_presentation(adj.left_on_object(FinSetObj(1))));
    return report;
}

/// Multiplicative monoid of a finite ring, with elements indexed by the
/// carrier's element coding. Multiplication routes through the monoidal
/// comparison; the unit is the element named by the ring's unit map.
inline MonoidObject<FinSet> underlying_multiplicative_monoid(const MonoidObject<FinAb>& a) {
    const FreeAbelianAdjunction adj;
    const FinSetMor mult = FinSet::compose(adj.right_on_morphism(a.mult),
                                           adj.monoidal_product(a.carrier, a.carrier));
    const int one = static_cast<int>(a.carrier.element_index(a.unit.matrix()));
    return monoid_from_table(mult.table, one);
}

// ---------------------------------------------------------------------------
// monoid rings

/// Monoid ring built directly from the multiplication table: free carrier
/// on the elements, basis-to-basis multiplication. This is the reference
/// object the truncated-presentation construction must reproduce.
inline MonoidObject<FinAb> monoid_ring_direct(const MonoidObject<FinSet>& d) {
    const auto laws = check_monoid(d);
    if (!laws.ok())
        throw std::invalid_argument("monoid_ring_direct: not a monoid:\n" + laws.summary());
    const std::size_t n = static_cast<std::size_t>(d.carrier.size);
    IntMatrix mult(n, n * n);
    for (std::size_t p = 0; p < n * n; ++p)
        mult.at(static_cast<std::size_t>(d.mult.table[p]), p) = 1;
    IntMatrix unit(n, 1);
    unit.at(static_cast<std::size_t>(d.unit.table[0]), 0) = 1;
    return ring_from(PresentedAbGroup::free_group(n), mult, unit);
}

/// The two parallel pairs presenting the monoid ring on the truncated
/// tensor algebra over Z^D: one identifies the empty word with the
/// one-letter word at the monoid unit, the other identifies each two-letter
/// word with the one-letter word at the product. The degree-2 component is
/// literally LD (x) LD, so the two-letter side is that component's
/// injection.
struct LiftRelationPairs {
    AbMor unit_lhs, unit_rhs;
    AbMor mult_lhs, mult_rhs;
};

inline LiftRelationPairs lift_relation_pairs(const MonoidObject<FinSet>& d,
                                             const TruncatedTensorAlgebra& t) {
    if (t.bound < 2)
        throw std::invalid_argument("lift_relation_pairs: truncation must cover degree 2");
    const FreeAbelianAdjunction adj;
    return {t.inject[0], FinAb::compose(t.inject[1], adj.left_on_morphism(d.unit)),
            t.inject[2], FinAb::compose(t.inject[1], adj.left_on_morphism(d.mult))};
}

/// Difference columns spanning the relation lattice of the monoid-ring
/// presentation at the algebra's truncation: every two-sided word-context
/// translate of the defining pairs that stays within the degree bound.
/// Multiplication relations come first, then unit relations; within each
/// family, contexts run in canonical word order.
inline IntMatrix lift_relation_columns(const MonoidObject<FinSet>& d,
                                       const TruncatedTensorAlgebra& t) {
    if (t.bound < 2)
        throw std::invalid_argument("lift_relation_columns: truncation must cover degree 2");
    const int n = d.carrier.size;
    std::vector<std::pair<std::size_t, std::size_t>> cols;
    const auto push = [&](const Word& longer, const Word& shorter) {
        cols.emplace_back(word_index(t, longer), word_index(t, shorter));
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = d.mult.table[static_cast<std::size_t>(x * n + y)];
            for (const Word& s : words_up_to(n, t.bound - 2))
                for (const Word& u : words_up_to(n, t.bound - 2 - static_cast<int>(s.size())))
                    push(concat(concat(s, Word{x, y}), u), concat(concat(s, Word{xy}), u));
        }
    const int e = d.unit.table[0];
    for (const Word& s : words_up_to(n, t.bound - 1))
        for (const Word& u : words_up_to(n, t.bound - 1 - static_cast<int>(s.size())))
            push(concat(concat(s, Word{e}), u), concat(s, u));

    IntMatrix m(t.total.gens(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        m.at(cols[j].first, j) = 1;
        m.at(cols[j].second, j) = -1;
    }
    return m;
}

namespace detail {

struct LiftStage {
    TruncatedTensorAlgebra algebra;
    PresentedAbGroup presentation;
    IntMatrix reduced;     // |D| x algebra gens: word classes in the one-letter basis
    IntMatrix mult_table;  // |D| x |D|^2
    IntMatrix unit_column;
    std::string invariants;
};

inline LiftStage lift_stage(const MonoidObject<FinSet>& d, int bound) {
    const std::size_t n = static_cast<std::size_t>(d.carrier.size);
    LiftStage st;
    st.algebra = truncated_tensor_algebra(PresentedAbGroup::free_group(n), bound);
    st.presentation =
        PresentedAbGroup(st.algebra.total.gens(), lift_relation_columns(d, st.algebra));
    st.invariants = st.presentation.invariant_string();
    if (st.presentation.free_rank() != n || !st.presentation.torsion().empty())
        throw std::runtime_error(
            "monoid_ring: truncated quotient is not free on the monoid elements (" +
            st.invariants + ")");

    // Coordinates of the free quotient: the rows of U below the relation
    // rank. Re-expressing them in the basis of one-letter word classes
    // makes the element named d literally the d-th basis vector.
    const auto snf = smith_normal_form(st.presentation.canonical_relations());
    const std::size_t w = st.algebra.total.gens();
    IntMatrix free_coords(n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) free_coords.at(i, j) = snf.U.at(snf.rank + i, j);
    IntMatrix degree_one(n, n);
    for (std::size_t x = 0; x < n; ++x)
        degree_one.set_col(x, free_coords.col(st.algebra.offset(1) + x));
    auto in_letter_basis = SnfSolver(degree_one).solve_matrix(free_coords);
    if (!in_letter_basis)
        throw std::runtime_error("monoid_ring: one-letter words do not span the quotient");
    st.reduced = std::move(*in_letter_basis);

    st.mult_table = IntMatrix(n, n * n);
    for (int x = 0; x < static_cast<int>(n); ++x)
        for (int y = 0; y < static_cast<int>(n); ++y)
            st.mult_table.set_col(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y),
                                  st.reduced.col(word_index(st.algebra, Word{x, y})));
    st.unit_column = st.reduced.col(word_index(st.algebra, Word{}));
    return st;
}

}  // namespace detail

/// Monoid ring presented by word generators and degree-reducing relations on
/// the truncated tensor algebra, then reduced to the basis of one-letter
/// words. `projection` sends each word class to its expression in that
/// basis; the d-th basis vector of `ring` is the class of the one-letter
/// word d.
struct MonoidRingLift {
    MonoidObject<FinSet> base;
    MonoidObject<FinAb> ring;
    TruncatedTensorAlgebra algebra;
    AbMor projection;
    int truncation = 0;
    CheckReport verification;
};

/// Computes the quotient at the requested truncation and at the one below
/// and demands they agree. The defining relations shorten words, so
/// agreement at consecutive degrees pins the ring down; disagreement, a
/// non-free quotient, or failing ring laws all throw.
inline MonoidRingLift monoid_ring(const MonoidObject<FinSet>& d, int truncation = 3) {
    if (truncation < 3)
        throw std::invalid_argument("monoid_ring: truncation must be at least 3");
    const auto laws = check_monoid(d);
    if (!laws.ok()) throw std::invalid_argument("monoid_ring: not a monoid:\n" + laws.summary());

    const auto lo = detail::lift_stage(d, truncation - 1);
    auto hi = detail::lift_stage(d, truncation);

    CheckReport verification;
    verification.add("invariant factors agree across consecutive truncations",
                     lo.invariants == hi.invariants, lo.invariants + " vs " + hi.invariants);
    verification.add("multiplication tables agree across consecutive truncations",
                     lo.mult_table == hi.mult_table);
    verification.add("units agree across consecutive truncations",
                     lo.unit_column == hi.unit_column);
    if (!verification.ok())
        throw std::runtime_error("monoid_ring: presentation did not stabilize:\n" +
                                 verification.summary());

    const std::size_t n = static_cast<std::size_t>(d.carrier.size);
    auto ring = ring_from(PresentedAbGroup::free_group(n), hi.mult_table, hi.unit_column);
    AbMor projection(hi.algebra.total, ring.carrier, std::move(hi.reduced));

    verification.merge(check_monoid(ring));
    verification.add("projection is onto", FinAb::is_epi(projection));
    verification.add("projection kills the imposed relations",
                     (projection.matrix() * lift_relation_columns(d, hi.algebra)).is_zero());
    if (!verification.ok())
        throw std::logic_error("monoid_ring: induced ring failed verification:\n" +
                               verification.summary());

    return {d, std::move(ring), std::move(hi.algebra), std::move(projection), truncation,
            std::move(verification)};
}

/// Functorial action on lifts: a monoid morphism h induces the ring
/// morphism sending the basis vector [x] to [h(x)].
inline MonoidMorphism<FinAb> lift_morphism(const MonoidMorphism<FinSet>& h,
                                           const MonoidRingLift& dom,
                                           const MonoidRingLift& cod) {
    if (!monoid_equal<FinSet>(h.dom, dom.base) || !monoid_equal<FinSet>(h.cod, cod.base))
        throw std::invalid_argument("lift_morphism: lifts do not match the morphism's ends");
    const auto laws = check_monoid_morphism<FinSet>(h);
    if (!laws.ok())
        throw std::invalid_argument("lift_morphism: not a monoid morphism:\n" + laws.summary());
    const FreeAbelianAdjunction adj;
    const AbMor raw = adj.left_on_morphism(h.map);
    return {dom.ring, cod.ring, AbMor(dom.ring.carrier, cod.ring.carrier, raw.matrix())};
}

/// Naturality battery for a lifted morphism: it satisfies the ring-morphism
/// laws, commutes with the two projections through the algebra action, and
/// is compatible with both defining relation pairs.
inline CheckReport check_lift_naturality(const MonoidMorphism<FinSet>& h,
                                         const MonoidRingLift& dom,
                                         const MonoidRingLift& cod) {
    if (dom.truncation != cod.truncation)
        throw std::invalid_argument("check_lift_naturality: truncations differ");
    const FreeAbelianAdjunction adj;
    const auto lifted = lift_morphism(h, dom, cod);
    CheckReport report = check_monoid_morphism<FinAb>(lifted);

    const AbMor algebra_action =
        truncated_monad_on_morphism(adj.left_on_morphism(h.map), dom.truncation);
    detail::add_equation<FinAb>(report, "lift commutes with the word projections",
                                FinAb::compose(cod.projection, algebra_action),
                                FinAb::compose(lifted.map, dom.projection));

    const auto dom_pairs = lift_relation_pairs(dom.base, dom.algebra);
    const auto cod_pairs = lift_relation_pairs(cod.base, cod.algebra);
    const AbMor paired = adj.left_on_morphism(FinSet::tensor_mor(h.map, h.map));
    detail::add_equation<FinAb>(report, "unit relation, empty-word side is preserved",
                                FinAb::compose(algebra_action, dom_pairs.unit_lhs),
                                cod_pairs.unit_lhs);
    detail::add_equation<FinAb>(report, "unit relation, one-letter side is preserved",
                                FinAb::compose(algebra_action, dom_pairs.unit_rhs),
                                cod_pairs.unit_rhs);
    detail::add_equation<FinAb>(report, "product relation, two-letter side is preserved",
                                FinAb::compose(algebra_action, dom_pairs.mult_lhs),
                                FinAb::compose(cod_pairs.mult_lhs, paired));
    detail::add_equation<FinAb>(report, "product relation, one-letter side is preserved",
                                FinAb::compose(algebra_action, dom_pairs.mult_rhs),
                                FinAb::compose(cod_pairs.mult_rhs, paired));
    return report;
}

// ---------------------------------------------------------------------------
// the hom-set bijection against finite rings

/// Ring morphism out of the monoid ring of a finite ring's multiplicative
/// monoid, sending each basis vector [a] back to the element a.
inline MonoidMorphism<FinAb> ring_counit(const MonoidObject<FinAb>& a) {
    const FreeAbelianAdjunction adj;
    const auto rbar = underlying_multiplicative_monoid(a);
    auto dom_ring = monoid_ring_direct(rbar);
    AbMor map(dom_ring.carrier, a.carrier, adj.counit(a.carrier).matrix());
    return {std::move(dom_ring), a, std::move(map)};
}

/// Transpose of a monoid morphism into a finite ring's multiplicative
/// monoid: extend linearly over the lift's one-letter basis and evaluate,
/// i.e. compose the counit with the lifted morphism.
inline MonoidMorphism<FinAb> transpose_to_ring(const MonoidMorphism<FinSet>& h,
                                               const MonoidRingLift& lift,
                                               const MonoidObject<FinAb>& a) {
    const std::size_t n = static_cast<std::size_t>(h.dom.carrier.size);
    const auto sigma = ring_counit(a);
    IntMatrix basis_map(sigma.dom.carrier.gens(), n);
    for (std::size_t x = 0; x < n; ++x)
        basis_map.at(static_cast<std::size_t>(h.map.table[x]), x) = 1;
    const AbMor along_basis(lift.ring.carrier, sigma.dom.carrier, std::move(basis_map));
    return {lift.ring, a, FinAb::compose(sigma.map, along_basis)};
}

/// Transpose of a ring morphism out of the lift: restrict to the one-letter
/// basis and read off the named elements.
inline MonoidMorphism<FinSet> transpose_to_monoid(const MonoidMorphism<FinAb>& f,
                                                  const MonoidObject<FinSet>& d,
                                                  const MonoidObject<FinAb>& a) {
    const auto rbar = underlying_multiplicative_monoid(a);
    std::vector<int> table(static_cast<std::size_t>(d.carrier.size));
    for (int x = 0; x < d.carrier.size; ++x)
        table[static_cast<std::size_t>(x)] = static_cast<int>(
            a.carrier.element_index(f.map.matrix().col(static_cast<std::size_t>(x))));
    return {d, rbar, FinSetMor(d.carrier, rbar.carrier, std::move(table))};
}

/// All monoid morphisms between two finite monoids, by exhausting tables.
/// Intended for small instances; the candidate space is |cod|^|dom|.
inline std::vector<MonoidMorphism<FinSet>> enumerate_monoid_morphisms(
    const MonoidObject<FinSet>& dom, const MonoidObject<FinSet>& cod) {
    std::vector<MonoidMorphism<FinSet>> out;
    std::vector<int> table(static_cast<std::size_t>(dom.carrier.size), 0);
    while (true) {
        MonoidMorphism<FinSet> h{dom, cod, FinSetMor(dom.carrier, cod.carrier, table)};
        if (check_monoid_morphism<FinSet>(h).ok()) out.push_back(std::move(h));
        std::size_t i = 0;
        while (i < table.size() && ++table[i] == cod.carrier.size) table[i++] = 0;
        if (i == table.size()) break;
    }
    return out;
}

/// All ring morphisms from a free-carrier ring (such as a lift) into a
/// finite ring. Candidates are element tuples for the generator images;
/// each surviving candidate is validated through the morphism-law matrix
/// equations, not through element tables.
inline std::vector<MonoidMorphism<FinAb>> enumerate_ring_morphisms(
    const MonoidObject<FinAb>& dom, const MonoidObject<FinAb>& cod) {
    if (dom.carrier.canonical_relations().cols() != 0)
        throw std::invalid_argument("enumerate_ring_morphisms: domain carrier must be free");
    const std::size_t n = dom.carrier.gens();
    const std::size_t order = cod.carrier.order_index();
    std::vector<MonoidMorphism<FinAb>> out;
    std::vector<std::size_t> tuple(n, 0);
    while (true) {
        IntMatrix m(cod.carrier.gens(), n);
        for (std::size_t x = 0; x < n; ++x) m.set_col(x, cod.carrier.element_coords(tuple[x]));
        MonoidMorphism<FinAb> f{dom, cod, AbMor(dom.carrier, cod.carrier, std::move(m))};
        // cheap unit pre-test before the full law battery
        if (FinAb::mor_equal(FinAb::compose(f.map, dom.unit), cod.unit) &&
            check_monoid_morphism<FinAb>(f).ok())
            out.push_back(std::move(f));
        std::size_t i = 0;
        while (i < n && ++tuple[i] == order) tuple[i++] = 0;
        if (i == n) break;
    }
    return out;
}

/// Two-sided enumeration of the hom bijection between monoid morphisms
/// D -> (A, *, 1) and ring morphisms Z[D] -> A, with transposes checked to
/// be mutually inverse and to land inside the enumerated lists.
struct HomBijectionReport {
    std::vector<MonoidMorphism<FinSet>> monoid_side;
    std::vector<MonoidMorphism<FinAb>> ring_side;
    CheckReport verification;
};

inline HomBijectionReport hom_bijection_check(const MonoidRingLift& lift,
                                              const MonoidObject<FinAb>& a) {
    const auto& d = lift.base;
    const auto rbar = underlying_multiplicative_monoid(a);

    HomBijectionReport report;
    report.monoid_side = enumerate_monoid_morphisms(d, rbar);
    report.ring_side = enumerate_ring_morphisms(lift.ring, a);
    report.verification.add(
        "enumerated morphism counts agree",
        report.monoid_side.size() == report.ring_side.size(),
        std::to_string(report.monoid_side.size()) + " vs " +
            std::to_string(report.ring_side.size()));

    const auto ring_position = [&](const MonoidMorphism<FinAb>& f) {
        for (std::size_t i = 0; i < report.ring_side.size(); ++i)
            if (FinAb::mor_equal(report.ring_side[i].map, f.map)) return i;
        return report.ring_side.size();
    };
    const auto monoid_position = [&](const MonoidMorphism<FinSet>& h) {
        for (std::size_t i = 0; i < report.monoid_side.size(); ++i)
            if (FinSet::mor_equal(report.monoid_side[i].map, h.map)) return i;
        return report.monoid_side.size();
    };

    bool forward_lands = true, forward_round = true;
    for (const auto& h : report.monoid_side) {
        const auto f = transpose_to_ring(h, lift, a);
        forward_lands = forward_lands && ring_position(f) < report.ring_side.size();
        const auto back = transpose_to_monoid(f, d, a);
        forward_round = forward_round && FinSet::mor_equal(back.map, h.map);
    }
    report.verification.add("transposed monoid morphisms are enumerated ring morphisms",
                            forward_lands);
    report.verification.add("monoid -> ring -> monoid round trip is the identity",
                            forward_round);

    bool backward_lands = true, backward_round = true;
    for (const auto& f : report.ring_side) {
        const auto h = transpose_to_monoid(f, d, a);
        backward_lands = backward_lands && monoid_position(h) < report.monoid_side.size();
        const auto again = transpose_to_ring(h, lift, a);
        backward_round = backward_round && FinAb::mor_equal(again.map, f.map);
    }
    report.verification.add("transposed ring morphisms are enumerated monoid morphisms",
                            backward_lands);
    report.verification.add("ring -> monoid -> ring round trip is the identity",
                            backward_round);
    return report;
}

inline HomBijectionReport hom_bijection_check(const MonoidObject<FinSet>& d,
                                              const MonoidObject<FinAb>& a,
                                              int truncation = 3) {
    return hom_bijection_check(monoid_ring(d, truncation), a);
}

}  // namespace moncat
