#pragma once

#include <moncat/core.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moncat {

/// Finite set in skeletal form: the object is its cardinality. Labels are
/// optional display decoration and never participate in equality or any
/// construction's semantics.
struct FinSetObj {
    int size = 0;
    std::vector<std::string> labels;

    FinSetObj() = default;
    explicit FinSetObj(int n) : size(n) {
        if (n < 0) throw std::invalid_argument("FinSetObj: negative size");
    }
    FinSetObj(int n, std::vector<std::string> ls) : size(n), labels(std::move(ls)) {
        if (n < 0) throw std::invalid_argument("FinSetObj: negative size");
        if (!labels.empty() && static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("FinSetObj: label count differs from size");
    }
};

/// Map of finite sets as a value table: element i of the domain goes to
/// table[i] in the codomain.
struct FinSetMor {
    FinSetObj dom, cod;
    std::vector<int> table;

    FinSetMor() = default;
    FinSetMor(FinSetObj d, FinSetObj c, std::vector<int> t)
        : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
        if (static_cast<int>(table.size()) != dom.size)
            throw std::invalid_argument("FinSetMor: table length differs from domain size");
        for (int v : table)
            if (v < 0 || v >= cod.size)
                throw std::invalid_argument("FinSetMor: table value outside codomain");
    }

    int operator()(int x) const { return table.at(static_cast<std::size_t>(x)); }
};

/// Cartesian monoidal backend on finite sets. Tensor is the product with
/// row-major flattening (i, j) |-> i * |Y| + j; any singleton factor is
/// absorbed, which makes the structure strictly associative and unital on
/// object handles. Coequalizers are set quotients with classes numbered in
/// order of smallest member.
struct FinSet {
    using Obj = FinSetObj;
    using Mor = FinSetMor;

    static Obj unit() { return FinSetObj(1); }

    static bool obj_equal(const Obj& x, const Obj& y) { return x.size == y.size; }

    static Obj dom(const Mor& f) { return f.dom; }
    static Obj cod(const Mor& f) { return f.cod; }

    static Mor identity(const Obj& x) {
        std::vector<int> t(static_cast<std::size_t>(x.size));
        std::iota(t.begin(), t.end(), 0);
        return Mor(x, x, std::move(t));
    }

    static Mor compose(const Mor& after, const Mor& before) {
        if (!obj_equal(before.cod, after.dom))
            throw std::invalid_argument("FinSet::compose: middle objects differ");
        std::vector<int> t(before.table.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] = after.table[static_cast<std::size_t>(before.table[i])];
        return Mor(before.dom, after.cod, std::move(t));
    }

    static Obj tensor(const Obj& x, const Obj& y) {
        if (x.size == 1) return y;
        if (y.size == 1) return x;
        Obj p(x.size * y.size);
        if (!x.labels.empty() && !y.labels.empty()) {
            p.labels.reserve(p.size);
            for (const auto& lx : x.labels)
                for (const auto& ly : y.labels) p.labels.push_back(lx + "," + ly);
        }
        return p;
    }

    static Mor tensor_mor(const Mor& f, const Mor& g) {
        const Obj d = tensor(f.dom, g.dom);
        const Obj c = tensor(f.cod, g.cod);
        std::vector<int> t;
        t.reserve(static_cast<std::size_t>(f.dom.size) * static_cast<std::size_t>(g.dom.size));
        for (int i = 0; i < f.dom.size; ++i)
            for (int j = 0; j < g.dom.size; ++j)
                t.push_back(f.table[static_cast<std::size_t>(i)] * g.cod.size +
                            g.table[static_cast<std::size_t>(j)]);
        return Mor(d, c, std::move(t));
    }

    static bool mor_equal(const Mor& f, const Mor& g) {
        return f.dom.size == g.dom.size && f.cod.size == g.cod.size && f.table == g.table;
    }

    static std::optional<std::string> first_disagreement(const Mor& f, const Mor& g) {
        if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
            return "domain or codomain sizes differ";
        for (std::size_t i = 0; i < f.table.size(); ++i)
            if (f.table[i] != g.table[i])
                return "input " + std::to_string(i) + ": " + std::to_string(f.table[i]) +
                       " vs " + std::to_string(g.table[i]);
        return std::nullopt;
    }

    static bool is_epi(const Mor& f) {
        std::vector<bool> hit(static_cast<std::size_t>(f.cod.size));
        for (int v : f.table) hit[static_cast<std::size_t>(v)] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    static CoequalizerResult<FinSet> coequalizer(const Mor& f, const Mor& g) {
        if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
            throw std::invalid_argument("FinSet::coequalizer: pair is not parallel");
        const int n = f.cod.size;
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a) {
                parent[static_cast<std::size_t>(a)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
                a = parent[static_cast<std::size_t>(a)];
            }
            return a;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a == b) return;
            if (a > b) std::swap(a, b);  // smaller index becomes the root
            parent[static_cast<std::size_t>(b)] = a;
        };
        for (int x = 0; x < f.dom.size; ++x)
            unite(f.table[static_cast<std::size_t>(x)], g.table[static_cast<std::size_t>(x)]);

        // Classes indexed in order of smallest member; roots are minimal.
        std::vector<int> pi(static_cast<std::size_t>(n), -1);
        int classes = 0;
        for (int a = 0; a < n; ++a) {
            int r = find(a);
            if (pi[static_cast<std::size_t>(r)] < 0) pi[static_cast<std::size_t>(r)] = classes++;
            pi[static_cast<std::size_t>(a)] = pi[static_cast<std::size_t>(r)];
        }
        Obj q(classes);
        Mor proj(f.cod, q, pi);

        CoequalizerResult<FinSet> result{f, g, q, proj, nullptr};
        result.factor = [f, g, proj](const Mor& h) {
            if (!mor_equal(compose(h, f), compose(h, g)))
                throw std::invalid_argument(
                    "coequalizer factorization: morphism does not coequalize the pair");
            auto u = factor_through_epi(proj, h);
            if (!u) throw std::logic_error("coequalizer factorization failed on a valid input");
            return *u;
        };
        return result;
    }

    /// For an epi p and any h constant on p's fibers, the unique u with
    /// u . p = h. Returns nullopt when p is not surjective or h is not
    /// constant on some fiber.
    static std::optional<Mor> factor_through_epi(const Mor& p, const Mor& h) {
        if (p.dom.size != h.dom.size) return std::nullopt;
        std::vector<int> u(static_cast<std::size_t>(p.cod.size), -1);
        for (int a = 0; a < p.dom.size; ++a) {
            int& slot = u[static_cast<std::size_t>(p.table[static_cast<std::size_t>(a)])];
            const int value = h.table[static_cast<std::size_t>(a)];
            if (slot < 0)
                slot = value;
            else if (slot != value)
                return std::nullopt;  // h splits a fiber of p
        }
        for (int v : u)
            if (v < 0) return std::nullopt;  // p misses part of its codomain
        return Mor(p.cod, h.cod, std::move(u));
    }

    static std::string quotient_key(const Mor& projection) {
        std::string key = "finset:" + std::to_string(projection.cod.size) + ":";
        for (int v : projection.table) key += std::to_string(v) + ",";
        return key;
    }

    static Coproduct<FinSet> coproduct(const Obj& x, const Obj& y) {
        Obj s(x.size + y.size);
        if (!x.labels.empty() && !y.labels.empty()) {
            s.labels = x.labels;
            s.labels.insert(s.labels.end(), y.labels.begin(), y.labels.end());
        }
        std::vector<int> l(static_cast<std::size_t>(x.size)), r(static_cast<std::size_t>(y.size));
        std::iota(l.begin(), l.end(), 0);
        std::iota(r.begin(), r.end(), x.size);
        return {s, Mor(x, s, std::move(l)), Mor(y, s, std::move(r))};
    }

    static Mor copair(const Mor& f, const Mor& g) {
        if (f.cod.size != g.cod.size)
            throw std::invalid_argument("FinSet::copair: codomains differ");
        std::vector<int> t = f.table;
        t.insert(t.end(), g.table.begin(), g.table.end());
        return Mor(FinSetObj(f.dom.size + g.dom.size), f.cod, std::move(t));
    }

    /// Surjection-injection factorization; image elements are numbered in
    /// order of first occurrence along the domain.
    static ImageFactorization<FinSet> image_factorization(const Mor& f) {
        std::vector<int> index_of(static_cast<std::size_t>(f.cod.size), -1);
        std::vector<int> epi(f.table.size());
        std::vector<int> mono;
        for (std::size_t a = 0; a < f.table.size(); ++a) {
            const int v = f.table[a];
            if (index_of[static_cast<std::size_t>(v)] < 0) {
                index_of[static_cast<std::size_t>(v)] = static_cast<int>(mono.size());
                mono.push_back(v);
            }
            epi[a] = index_of[static_cast<std::size_t>(v)];
        }
        Obj image(static_cast<int>(mono.size()));
        return {image, Mor(f.dom, image, std::move(epi)), Mor(image, f.cod, std::move(mono))};
    }

    /// Compatible test targets for the universal-property battery: morphisms
    /// out of the coequalized object of the form w . projection, for maps w
    /// into sets of size up to 3 (all of them when they fit the budget,
    /// otherwise an evenly strided selection).
    static std::vector<Mor> preservation_targets(const CoequalizerResult<FinSet>& canonical,
                                                 std::size_t budget) {
        std::vector<Mor> out;
        const int q = canonical.quotient.size;
        const std::size_t per_size = std::max<std::size_t>(1, budget / 3);
        for (int z = 1; z <= 3; ++z) {
            // count = z^q, saturating well above any useful budget
            std::uint64_t count = 1;
            for (int i = 0; i < q && count < (std::uint64_t{1} << 40); ++i)
                count *= static_cast<std::uint64_t>(z);
            const std::uint64_t take = std::min<std::uint64_t>(count, per_size);
            const std::uint64_t stride = count / take;
            for (std::uint64_t k = 0; k < take; ++k) {
                std::uint64_t code = k * stride;
                std::vector<int> w(static_cast<std::size_t>(q));
                for (int i = 0; i < q; ++i) {
                    w[static_cast<std::size_t>(i)] = static_cast<int>(code % z);
                    code /= static_cast<std::uint64_t>(z);
                }
                out.push_back(
                    compose(Mor(canonical.quotient, FinSetObj(z), std::move(w)),
                            canonical.projection));
            }
        }
        return out;
    }
};

static_assert(CategoryBackend<FinSet>);
static_assert(HasCoproducts<FinSet>);
static_assert(HasImageFactorization<FinSet>);

}  // namespace moncat
