#pragma once

#include <moncat/core.hpp>
#include <moncat/finab.hpp>
#include <moncat/finset.hpp>

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncat {

/// Monoid internal to a monoidal backend: a carrier object with a
/// multiplication `mult : carrier (x) carrier -> carrier` and a unit
/// `unit : I -> carrier`. Laws are not enforced by the type; `check_monoid`
/// reports them.
template <CategoryBackend B>
struct MonoidObject {
    typename B::Obj carrier;
    typename B::Mor mult;
    typename B::Mor unit;
};

template <CategoryBackend B>
struct MonoidMorphism {
    MonoidObject<B> dom, cod;
    typename B::Mor map;
};

template <CategoryBackend B>
bool monoid_equal(const MonoidObject<B>& m, const MonoidObject<B>& n) {
    return B::obj_equal(m.carrier, n.carrier) && B::mor_equal(m.mult, n.mult) &&
           B::mor_equal(m.unit, n.unit);
}

namespace detail {

template <CategoryBackend B>
void add_equation(CheckReport& report, const std::string& law, const typename B::Mor& lhs,
                  const typename B::Mor& rhs) {
    const auto witness = B::first_disagreement(lhs, rhs);
    report.add(law, !witness.has_value(), witness.value_or(""));
}

}  // namespace detail

template <CategoryBackend B>
CheckReport check_monoid(const MonoidObject<B>& m) {
    CheckReport report;
    const auto& a = m.carrier;
    const auto aa = B::tensor(a, a);
    report.add("multiplication has domain A (x) A and codomain A",
               B::obj_equal(B::dom(m.mult), aa) && B::obj_equal(B::cod(m.mult), a));
    report.add("unit has domain I and codomain A",
               B::obj_equal(B::dom(m.unit), B::unit()) && B::obj_equal(B::cod(m.unit), a));
    if (!report.ok()) return report;

    const auto id_a = B::identity(a);
    detail::add_equation<B>(report, "associativity",
                            B::compose(m.mult, B::tensor_mor(m.mult, id_a)),
                            B::compose(m.mult, B::tensor_mor(id_a, m.mult)));
    detail::add_equation<B>(report, "left unit",
                            B::compose(m.mult, B::tensor_mor(m.unit, id_a)), id_a);
    detail::add_equation<B>(report, "right unit",
                            B::compose(m.mult, B::tensor_mor(id_a, m.unit)), id_a);
    return report;
}

template <CategoryBackend B>
CheckReport check_monoid_morphism(const MonoidMorphism<B>& h) {
    CheckReport report;
    report.add("map has the morphism's stated endpoints",
               B::obj_equal(B::dom(h.map), h.dom.carrier) &&
                   B::obj_equal(B::cod(h.map), h.cod.carrier));
    if (!report.ok()) return report;
    detail::add_equation<B>(report, "compatible with multiplication",
                            B::compose(h.map, h.dom.mult),
                            B::compose(h.cod.mult, B::tensor_mor(h.map, h.map)));
    detail::add_equation<B>(report, "preserves the unit", B::compose(h.map, h.dom.unit),
                            h.cod.unit);
    return report;
}

template <CategoryBackend B>
MonoidMorphism<B> monoid_identity(const MonoidObject<B>& m) {
    return {m, m, B::identity(m.carrier)};
}

template <CategoryBackend B>
MonoidMorphism<B> monoid_compose(const MonoidMorphism<B>& after, const MonoidMorphism<B>& before) {
    if (!monoid_equal<B>(after.dom, before.cod))
        throw std::invalid_argument("monoid_compose: middle monoids differ");
    return {before.dom, after.cod, B::compose(after.map, before.map)};
}

/// Two-sided translate of a morphism alpha : X -> A along a monoid structure
/// on A: the map A (x) X (x) A -> A sending (a, x, a') to a * alpha(x) * a'.
template <CategoryBackend B>
typename B::Mor translate(const MonoidObject<B>& m, const typename B::Mor& alpha) {
    if (!B::obj_equal(B::cod(alpha), m.carrier))
        throw std::invalid_argument("translate: morphism does not land in the carrier");
    const auto id_a = B::identity(m.carrier);
    const auto framed = B::tensor_mor(B::tensor_mor(id_a, alpha), id_a);
    return B::compose(m.mult, B::compose(B::tensor_mor(m.mult, id_a), framed));
}

/// X -> A (x) X (x) A inserting the unit on both sides; composing a translate
/// with it recovers the translated morphism.
template <CategoryBackend B>
typename B::Mor unit_frame(const MonoidObject<B>& m, const typename B::Obj& x) {
    const auto id_x = B::identity(x);
    return B::tensor_mor(B::tensor_mor(m.unit, id_x), m.unit);
}

/// The two defining identities of translates: framing with units recovers
/// alpha, and monoid morphisms carry translates to translates.
template <CategoryBackend B>
CheckReport check_translate_identities(const MonoidMorphism<B>& tau, const typename B::Mor& alpha) {
    CheckReport report;
    const auto lam = translate<B>(tau.dom, alpha);
    detail::add_equation<B>(report, "translate framed by units recovers the morphism",
                            B::compose(lam, unit_frame<B>(tau.dom, B::dom(alpha))), alpha);
    const auto mapped = translate<B>(tau.cod, B::compose(tau.map, alpha));
    const auto frame = B::tensor_mor(B::tensor_mor(tau.map, B::identity(B::dom(alpha))), tau.map);
    detail::add_equation<B>(report, "morphisms commute with translation",
                            B::compose(tau.map, lam), B::compose(mapped, frame));
    return report;
}

/// For a monoid morphism tau, equalizing the translates of alpha and beta is
/// the same as equalizing alpha and beta themselves.
template <CategoryBackend B>
CheckReport check_translate_equivalence(const MonoidMorphism<B>& tau, const typename B::Mor& alpha,
                                        const typename B::Mor& beta) {
    CheckReport report;
    const auto la = translate<B>(tau.dom, alpha);
    const auto lb = translate<B>(tau.dom, beta);
    const bool translates = B::mor_equal(B::compose(tau.map, la), B::compose(tau.map, lb));
    const bool plain = B::mor_equal(B::compose(tau.map, alpha), B::compose(tau.map, beta));
    report.add("tau equalizes the translates iff it equalizes the pair", translates == plain,
               translates ? "translates equalized, pair " + std::string(plain ? "too" : "not")
                          : "translates not equalized, pair " + std::string(plain ? "is" : "not"));
    return report;
}

/// The forward half of the equivalence holds for any morphism out of the
/// carrier, monoid structure or not: framing with units turns an equalized
/// pair of translates into an equalized pair.
template <CategoryBackend B>
CheckReport check_translate_collapse(const MonoidObject<B>& m, const typename B::Mor& tau,
                                     const typename B::Mor& alpha, const typename B::Mor& beta) {
    CheckReport report;
    const auto la = translate<B>(m, alpha);
    const auto lb = translate<B>(m, beta);
    const bool translates = B::mor_equal(B::compose(tau, la), B::compose(tau, lb));
    const bool plain = B::mor_equal(B::compose(tau, alpha), B::compose(tau, beta));
    report.add("equalized translates collapse to the pair", !translates || plain);
    return report;
}

template <CategoryBackend B>
struct MonoidQuotientResult {
    MonoidObject<B> quotient;
    MonoidMorphism<B> projection;
    CoequalizerResult<B> translates;  // carrier-level quotient, with its factor
    CheckReport verification;
};

/// Quotient of a monoid by an arbitrary parallel pair alpha, beta : X -> A of
/// carrier morphisms. The carrier coequalizes the two-sided translates of the
/// pair, which makes its kernel a two-sided congruence whether or not the
/// pair respects the monoid structure; the multiplication then descends in
/// two stages, first past A (x) pi and then past pi (x) Q. The result carries
/// a verification transcript for the quotient's laws and the projection.
template <CategoryBackend B>
MonoidQuotientResult<B> quotient_by_translates(const MonoidObject<B>& d,
                                               const typename B::Mor& alpha,
                                               const typename B::Mor& beta) {
    if (!B::obj_equal(B::dom(alpha), B::dom(beta)) ||
        !B::obj_equal(B::cod(alpha), d.carrier) || !B::obj_equal(B::cod(beta), d.carrier))
        throw std::invalid_argument("quotient_by_translates: pair is not parallel into A");

    const auto cq = B::coequalizer(translate<B>(d, alpha), translate<B>(d, beta));
    const auto& pi = cq.projection;
    const auto id_d = B::identity(d.carrier);
    const auto id_q = B::identity(cq.quotient);

    const auto half = B::factor_through_epi(B::tensor_mor(id_d, pi), B::compose(pi, d.mult));
    if (!half)
        throw std::logic_error(
            "quotient_by_translates: multiplication does not descend on the right");
    const auto mult = B::factor_through_epi(B::tensor_mor(pi, id_q), *half);
    if (!mult)
        throw std::logic_error(
            "quotient_by_translates: multiplication does not descend on the left");

    MonoidQuotientResult<B> result;
    result.quotient = MonoidObject<B>{cq.quotient, *mult, B::compose(pi, d.unit)};
    result.projection = MonoidMorphism<B>{d, result.quotient, pi};
    result.translates = cq;
    result.verification.merge(check_monoid<B>(result.quotient));
    result.verification.merge(check_monoid_morphism<B>(result.projection));
    if (!result.verification.ok())
        throw std::logic_error("quotient_by_translates: induced structure failed verification:\n" +
                               result.verification.summary());
    return result;
}

template <CategoryBackend B>
struct MonoidCoequalizerResult {
    MonoidObject<B> quotient;
    MonoidMorphism<B> projection;
    CoequalizerResult<B> carrier;
    CheckReport verification;
    std::function<MonoidMorphism<B>(const MonoidMorphism<B>&)> factor;
};

/// Coequalizer of a parallel pair of monoid morphisms, as the quotient by
/// their translates together with the monoid-level universal property.
template <CategoryBackend B>
MonoidCoequalizerResult<B> monoid_coequalizer(const MonoidMorphism<B>& f,
                                              const MonoidMorphism<B>& g) {
    if (!monoid_equal<B>(f.dom, g.dom) || !monoid_equal<B>(f.cod, g.cod))
        throw std::invalid_argument("monoid_coequalizer: pair is not parallel");
    if (!check_monoid_morphism<B>(f).ok() || !check_monoid_morphism<B>(g).ok())
        throw std::invalid_argument("monoid_coequalizer: inputs are not monoid morphisms");

    auto q = quotient_by_translates<B>(f.cod, f.map, g.map);
    MonoidCoequalizerResult<B> result;
    result.quotient = q.quotient;
    result.projection = q.projection;
    result.carrier = q.translates;
    result.verification = q.verification;

    const auto quotient = std::make_shared<MonoidObject<B>>(result.quotient);
    const auto carrier_factor = result.carrier.factor;
    const auto fmap = f.map, gmap = g.map;
    result.factor = [quotient, carrier_factor, fmap, gmap](const MonoidMorphism<B>& h) {
        if (!B::mor_equal(B::compose(h.map, fmap), B::compose(h.map, gmap)))
            throw std::invalid_argument(
                "monoid coequalizer factorization: morphism does not coequalize the pair");
        MonoidMorphism<B> u{*quotient, h.cod, carrier_factor(h.map)};
        const auto report = check_monoid_morphism<B>(u);
        if (!report.ok())
            throw std::logic_error("monoid coequalizer factorization is not a monoid morphism:\n" +
                                   report.summary());
        return u;
    };
    return result;
}

template <CategoryBackend B>
struct MonoidMultipleCoequalizerResult {
    MonoidObject<B> quotient;
    MonoidMorphism<B> projection;
    std::vector<MonoidCoequalizerResult<B>> stages;
    std::function<MonoidMorphism<B>(const MonoidMorphism<B>&)> factor;
};

/// Joint coequalizer of finitely many parallel pairs of monoid morphisms,
/// by iterated single coequalizers pushed forward along the projection so far.
template <CategoryBackend B>
MonoidMultipleCoequalizerResult<B> monoid_multiple_coequalizer(
    const MonoidObject<B>& a,
    const std::vector<std::pair<MonoidMorphism<B>, MonoidMorphism<B>>>& pairs) {
    for (const auto& [f, g] : pairs)
        if (!monoid_equal<B>(f.cod, a) || !monoid_equal<B>(g.cod, a) ||
            !monoid_equal<B>(f.dom, g.dom))
            throw std::invalid_argument("monoid_multiple_coequalizer: pair is not parallel into A");

    MonoidMultipleCoequalizerResult<B> result;
    result.quotient = a;
    result.projection = monoid_identity<B>(a);
    for (const auto& [f, g] : pairs) {
        auto stage = monoid_coequalizer<B>(monoid_compose<B>(result.projection, f),
                                           monoid_compose<B>(result.projection, g));
        result.projection = monoid_compose<B>(stage.projection, result.projection);
        result.quotient = stage.quotient;
        result.stages.push_back(std::move(stage));
    }
    const auto stages = std::make_shared<std::vector<MonoidCoequalizerResult<B>>>(result.stages);
    result.factor = [stages](const MonoidMorphism<B>& h) {
        MonoidMorphism<B> u = h;
        for (const auto& stage : *stages) u = stage.factor(u);
        return u;
    };
    return result;
}

template <CategoryBackend B>
bool same_canonical_quotient(const typename B::Mor& p, const typename B::Mor& q) {
    return B::quotient_key(p) == B::quotient_key(q);
}

// ---------------------------------------------------------------------------
// concrete constructors

/// Finite monoid from a row-major multiplication table; unit_index names the
/// identity element. The table is shape-checked here and law-checked on
/// demand via check_monoid.
inline MonoidObject<FinSet> monoid_from_table(const std::vector<int>& table, int unit_index) {
    int n = 0;
    while (n * n < static_cast<int>(table.size())) ++n;
    if (n * n != static_cast<int>(table.size()))
        throw std::invalid_argument("monoid_from_table: table is not square");
    if (n == 0) throw std::invalid_argument("monoid_from_table: a monoid cannot be empty");
    if (unit_index < 0 || unit_index >= n)
        throw std::invalid_argument("monoid_from_table: unit index out of range");
    const FinSetObj a(n);
    return {a, FinSetMor(FinSet::tensor(a, a), a, table),
            FinSetMor(FinSet::unit(), a, {unit_index})};
}

inline MonoidMorphism<FinSet> monoid_morphism_from_table(const MonoidObject<FinSet>& dom,
                                                         const MonoidObject<FinSet>& cod,
                                                         const std::vector<int>& table) {
    return {dom, cod, FinSetMor(dom.carrier, cod.carrier, table)};
}

/// Ring structure on a presented abelian group: `mult` gives the products of
/// pairs of generators (columns in row-major pair order) and `unit_column`
/// the multiplicative identity.
inline MonoidObject<FinAb> ring_from(const PresentedAbGroup& group, const IntMatrix& mult,
                                     const IntMatrix& unit_column) {
    return {group, AbMor(FinAb::tensor(group, group), group, mult),
            AbMor(FinAb::unit(), group, unit_column)};
}

/// Z/k with its usual multiplication.
inline MonoidObject<FinAb> cyclic_ring(int k) {
    return ring_from(PresentedAbGroup::cyclic(k), IntMatrix::identity(1),
                     IntMatrix::identity(1));
}

/// Z/a x Z/b with componentwise multiplication; the unit is (1, 1).
inline MonoidObject<FinAb> product_ring(int a, int b) {
    const PresentedAbGroup g(2, IntMatrix::from_rows({{a, 0}, {0, b}}));
    const auto mult = IntMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 1}});
    return ring_from(g, mult, IntMatrix::column({Int(1), Int(1)}));
}

/// Upper triangular 2x2 matrices over Z/2 on the matrix units e11, e12, e22;
/// the smallest noncommutative ring presented here.
inline MonoidObject<FinAb> triangular_ring() {
    const PresentedAbGroup g(3, IntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    IntMatrix mult(3, 9);
    const auto set_product = [&](int i, int j, int out) {
        if (out >= 0) mult.at(out, i * 3 + j) = 1;
    };
    // e_ab * e_cd = e_ad when b = c, else 0
    set_product(0, 0, 0);   // e11 e11 = e11
    set_product(0, 1, 1);   // e11 e12 = e12
    set_product(0, 2, -1);  // e11 e22 = 0
    set_product(1, 0, -1);
    set_product(1, 1, -1);
    set_product(1, 2, 1);   // e12 e22 = e12
    set_product(2, 0, -1);
    set_product(2, 1, -1);
    set_product(2, 2, 2);   // e22 e22 = e22
    return ring_from(g, mult, IntMatrix::column({Int(1), Int(0), Int(1)}));
}

}  // namespace moncat
