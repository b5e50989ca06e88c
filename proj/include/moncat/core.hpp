#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncat {

/// Outcome of one verified law, with a witness describing the failure point
/// (an input index or generator) when the law does not hold.
struct Check {
    std::string law;
    bool ok = true;
    std::string witness;
};

struct CheckReport {
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }

    void add(std::string law, bool passed, std::string witness = "") {
        checks.push_back({std::move(law), passed, std::move(witness)});
    }

    void merge(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    std::string summary() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.ok ? "pass" : "FAIL") << "  " << c.law;
            if (!c.ok && !c.witness.empty()) os << "  [" << c.witness << "]";
            os << '\n';
        }
        return os.str();
    }
};

/// A coequalizer together with the pair it coequalizes and its universal
/// property as a callable: factor(h) is the unique u with u . projection = h,
/// defined whenever h . left = h . right (and throwing otherwise).
template <class B>
struct CoequalizerResult {
    typename B::Mor left, right;
    typename B::Obj quotient;
    typename B::Mor projection;
    std::function<typename B::Mor(const typename B::Mor&)> factor;
};

template <class B>
struct MultipleCoequalizerResult {
    typename B::Obj quotient;
    typename B::Mor projection;
    std::vector<CoequalizerResult<B>> stages;
    std::function<typename B::Mor(const typename B::Mor&)> factor;
};

template <class B>
struct Coproduct {
    typename B::Obj obj;
    typename B::Mor inj_left, inj_right;
};

template <class B>
struct ImageFactorization {
    typename B::Obj image;
    typename B::Mor epi;   // source ->> image
    typename B::Mor mono;  // image >-> target
};

template <class B>
struct ReflexivePair {
    typename B::Mor fbar, gbar;  // C + D -> D with components (f, id) and (g, id)
    typename B::Mor section;     // right injection; both composites give id_D
    Coproduct<B> sum;
};

/// Capability contract for a strict monoidal category with computable
/// coequalizers. Objects and morphisms are immutable values; `compose(f, g)`
/// is f after g; tensoring is strictly associative and strictly unital at the
/// level of object handles.
template <class B>
concept CategoryBackend =
    std::semiregular<typename B::Obj> && std::semiregular<typename B::Mor> &&
    requires(const typename B::Obj& x, const typename B::Mor& f, const typename B::Mor& g,
             const CoequalizerResult<B>& cq, std::size_t n) {
        { B::unit() } -> std::same_as<typename B::Obj>;
        { B::obj_equal(x, x) } -> std::same_as<bool>;
        { B::dom(f) } -> std::same_as<typename B::Obj>;
        { B::cod(f) } -> std::same_as<typename B::Obj>;
        { B::identity(x) } -> std::same_as<typename B::Mor>;
        { B::compose(f, g) } -> std::same_as<typename B::Mor>;
        { B::tensor(x, x) } -> std::same_as<typename B::Obj>;
        { B::tensor_mor(f, g) } -> std::same_as<typename B::Mor>;
        { B::mor_equal(f, g) } -> std::same_as<bool>;
        { B::is_epi(f) } -> std::same_as<bool>;
        { B::coequalizer(f, g) } -> std::same_as<CoequalizerResult<B>>;
        { B::factor_through_epi(f, g) } -> std::same_as<std::optional<typename B::Mor>>;
        { B::first_disagreement(f, g) } -> std::same_as<std::optional<std::string>>;
        { B::quotient_key(f) } -> std::same_as<std::string>;
        { B::preservation_targets(cq, n) } -> std::same_as<std::vector<typename B::Mor>>;
    };

template <class B>
concept HasCoproducts = CategoryBackend<B> &&
    requires(const typename B::Obj& x, const typename B::Mor& f, const typename B::Mor& g) {
        { B::coproduct(x, x) } -> std::same_as<Coproduct<B>>;
        { B::copair(f, g) } -> std::same_as<typename B::Mor>;
    };

template <class B>
concept HasImageFactorization = CategoryBackend<B> && requires(const typename B::Mor& f) {
    { B::image_factorization(f) } -> std::same_as<ImageFactorization<B>>;
};

/// Joint coequalizer of a finite family of parallel pairs into A, computed by
/// iterated coequalizers: each stage coequalizes the next pair pushed forward
/// along the projection so far, and the factorizations compose stage by stage.
/// An empty family yields A with the identity projection.
template <CategoryBackend B>
MultipleCoequalizerResult<B> multiple_coequalizer(
    const typename B::Obj& a,
    const std::vector<std::pair<typename B::Mor, typename B::Mor>>& pairs) {
    using Mor = typename B::Mor;
    for (const auto& [f, g] : pairs) {
        if (!B::obj_equal(B::dom(f), B::dom(g)) || !B::obj_equal(B::cod(f), a) ||
            !B::obj_equal(B::cod(g), a))
            throw std::invalid_argument("multiple_coequalizer: pair is not parallel into A");
    }

    MultipleCoequalizerResult<B> result;
    result.quotient = a;
    result.projection = B::identity(a);
    for (const auto& [f, g] : pairs) {
        CoequalizerResult<B> stage =
            B::coequalizer(B::compose(result.projection, f), B::compose(result.projection, g));
        result.projection = B::compose(stage.projection, result.projection);
        result.quotient = stage.quotient;
        result.stages.push_back(std::move(stage));
    }
    auto stages = std::make_shared<std::vector<CoequalizerResult<B>>>(result.stages);
    result.factor = [stages](const Mor& h) {
        Mor u = h;
        for (const auto& stage : *stages) u = stage.factor(u);
        return u;
    };
    return result;
}

/// Completes f, g : C -> D to the reflexive pair C + D -> D whose components
/// are (f, id) and (g, id); the right injection splits both.
template <HasCoproducts B>
ReflexivePair<B> reflexive_pair(const typename B::Mor& f, const typename B::Mor& g) {
    if (!B::obj_equal(B::dom(f), B::dom(g)) || !B::obj_equal(B::cod(f), B::cod(g)))
        throw std::invalid_argument("reflexive_pair: morphisms are not parallel");
    const typename B::Obj d = B::cod(f);
    ReflexivePair<B> r{B::copair(f, B::identity(d)), B::copair(g, B::identity(d)),
                       typename B::Mor{}, B::coproduct(B::dom(f), d)};
    r.section = r.sum.inj_right;
    return r;
}

struct PreservationReport {
    bool ok = true;
    std::string detail;
};

namespace detail {

template <CategoryBackend B>
void check_preservation_side(const typename B::Obj& c, const CoequalizerResult<B>& coeq,
                             bool left_side, std::size_t target_budget,
                             PreservationReport& report) {
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.detail += (left_side ? "[C(x)-] " : "[-(x)C] ") + msg + "\n";
    };
    const typename B::Mor idc = B::identity(c);
    auto side = [&](const typename B::Mor& m) {
        return left_side ? B::tensor_mor(idc, m) : B::tensor_mor(m, idc);
    };
    const typename B::Mor f2 = side(coeq.left);
    const typename B::Mor g2 = side(coeq.right);
    const typename B::Mor p = side(coeq.projection);

    if (!B::mor_equal(B::compose(p, f2), B::compose(p, g2))) {
        fail("tensored projection does not coequalize the tensored pair");
        return;
    }
    if (!B::is_epi(p)) {
        fail("tensored projection is not epi");
        return;
    }

    CoequalizerResult<B> canonical = B::coequalizer(f2, g2);
    typename B::Mor u = canonical.factor(p);
    auto v = B::factor_through_epi(p, canonical.projection);
    if (!v) {
        fail("canonical projection does not factor through the tensored projection");
        return;
    }
    if (!B::mor_equal(B::compose(u, *v), B::identity(B::cod(p))) ||
        !B::mor_equal(B::compose(*v, u), B::identity(canonical.quotient))) {
        fail("comparison with the canonical coequalizer is not invertible");
        return;
    }

    std::size_t idx = 0;
    for (const auto& h : B::preservation_targets(canonical, target_budget)) {
        auto uh = B::factor_through_epi(p, h);
        if (!uh || !B::mor_equal(B::compose(*uh, p), h)) {
            fail("target " + std::to_string(idx) +
                 " admits no factorization through the tensored projection");
            return;
        }
        ++idx;
    }
}

}  // namespace detail

/// Verifies that C (x) - and - (x) C carry the given coequalizer to a
/// coequalizer of the tensored pair: the tensored projection must coequalize,
/// be epi, compare invertibly against the canonically computed coequalizer,
/// and factor every sampled compatible target through itself.
template <CategoryBackend B>
PreservationReport check_tensor_preserves_coequalizer(const typename B::Obj& c,
                                                      const CoequalizerResult<B>& coeq,
                                                      std::size_t target_budget = 32) {
    PreservationReport report;
    detail::check_preservation_side<B>(c, coeq, true, target_budget, report);
    detail::check_preservation_side<B>(c, coeq, false, target_budget, report);
    return report;
}

}  // namespace moncat
