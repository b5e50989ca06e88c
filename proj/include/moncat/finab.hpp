#pragma once

#include <moncat/core.hpp>
#include <moncat/smith.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncat {

/// Finitely presented abelian group: the cokernel of its relation matrix,
/// whose columns are relations among `gens` generators. The presentation is
/// the identity of the object; isomorphic groups with different presentations
/// are different handles. Normal-form data (Smith decomposition of the
/// relation lattice, invariant factors, Hermite canonical basis, element
/// coding for finite groups) is computed once on demand and shared.
class PresentedAbGroup {
public:
    PresentedAbGroup() : PresentedAbGroup(0, IntMatrix(0, 0)) {}
    PresentedAbGroup(std::size_t gens, IntMatrix relations)
        : gens_(gens), relations_(std::move(relations)), cell_(std::make_shared<Cell>()) {
        if (relations_.rows() != gens_)
            throw std::invalid_argument("PresentedAbGroup: relation rows differ from generators");
    }

    static PresentedAbGroup free_group(std::size_t rank) {
        return PresentedAbGroup(rank, IntMatrix(rank, 0));
    }

    static PresentedAbGroup cyclic(const Int& n) {
        IntMatrix r(1, 1);
        r.at(0, 0) = n;
        return PresentedAbGroup(1, std::move(r));
    }

    std::size_t gens() const { return gens_; }
    const IntMatrix& relations() const { return relations_; }

    /// Two presentations are the same object exactly when they have the same
    /// generators and the same relation lattice. Every construction in the
    /// backend factors through that data, so rebracketed tensors -- whose raw
    /// relation columns differ only by a permutation -- compare equal.
    bool operator==(const PresentedAbGroup& o) const {
        if (gens_ != o.gens_) return false;
        if (relations_ == o.relations_) return true;
        return canonical_relations() == o.canonical_relations();
    }
    bool operator!=(const PresentedAbGroup& o) const { return !(*this == o); }

    /// Solver over the relation lattice; membership of a column vector means
    /// the corresponding generator combination is zero in the group.
    const SnfSolver& lattice() const { return normal().lattice; }

    bool contains_in_lattice(const IntMatrix& col) const { return lattice().contains(col); }

    /// Invariant factors > 1, ascending (divisibility chain).
    const std::vector<Int>& torsion() const { return normal().torsion; }
    std::size_t free_rank() const { return normal().free_rank; }
    bool is_finite() const { return normal().free_rank == 0; }
    const Int& order() const {
        if (!is_finite()) throw std::logic_error("PresentedAbGroup: order of an infinite group");
        return normal().order;
    }
    std::size_t order_index() const { return static_cast<std::size_t>(order()); }

    bool isomorphic_to(const PresentedAbGroup& o) const {
        return free_rank() == o.free_rank() && torsion() == o.torsion();
    }

    /// Canonical basis of the relation lattice; equal exactly when two
    /// presentations on the same generators present the same quotient.
    const IntMatrix& canonical_relations() const { return normal().hermite; }

    std::string invariant_string() const {
        std::string s = "free_rank=" + std::to_string(free_rank()) + " torsion=[";
        for (std::size_t i = 0; i < torsion().size(); ++i)
            s += (i ? "," : "") + torsion()[i].str();
        return s + "]";
    }

    // --- element coding, finite groups only -------------------------------
    // Elements are indexed in mixed radix over the Smith coordinates with
    // modulus > 1; index 0 is the zero element.

    IntMatrix element_coords(std::size_t index) const {
        const Normal& n = require_finite();
        IntMatrix y(gens_, 1);
        for (std::size_t c : n.mixed_coords) {
            const std::size_t m = static_cast<std::size_t>(n.moduli[c]);
            y.at(c, 0) = static_cast<long long>(index % m);
            index /= m;
        }
        return n.lattice.form().U_inv * y;
    }

    std::size_t element_index(const IntMatrix& coords) const {
        const Normal& n = require_finite();
        if (coords.rows() != gens_ || coords.cols() != 1)
            throw std::invalid_argument("element_index: bad coordinate shape");
        IntMatrix y = n.lattice.form().U * coords;
        std::size_t index = 0, weight = 1;
        for (std::size_t c : n.mixed_coords) {
            const Int& m = n.moduli[c];
            Int digit = y.at(c, 0) % m;
            if (digit < 0) digit += m;
            index += static_cast<std::size_t>(digit) * weight;
            weight *= static_cast<std::size_t>(m);
        }
        return index;
    }

private:
    struct Normal {
        SnfSolver lattice;
        std::vector<Int> moduli;  // per Smith coordinate: diagonal entry, or 0 when free
        std::vector<Int> torsion;
        std::size_t free_rank = 0;
        Int order = 1;
        IntMatrix hermite;
        std::vector<std::size_t> mixed_coords;

        explicit Normal(const IntMatrix& relations)
            : lattice(hermite_column_form(relations)), hermite(lattice.matrix()) {
            const auto& f = lattice.form();
            const std::size_t g = relations.rows();
            const std::size_t bound = std::min(g, hermite.cols());
            moduli.resize(g);
            for (std::size_t i = 0; i < g; ++i)
                moduli[i] = i < bound ? f.S.at(i, i) : Int(0);
            for (std::size_t i = 0; i < g; ++i) {
                if (moduli[i] == 0) {
                    ++free_rank;
                } else {
                    order *= moduli[i];
                    if (moduli[i] > 1) {
                        torsion.push_back(moduli[i]);
                        mixed_coords.push_back(i);
                    }
                }
            }
        }
    };

    struct Cell {
        std::once_flag flag;
        std::unique_ptr<Normal> data;
    };

    const Normal& normal() const {
        std::call_once(cell_->flag, [this] { cell_->data = std::make_unique<Normal>(relations_); });
        return *cell_->data;
    }

    const Normal& require_finite() const {
        const Normal& n = normal();
        if (n.free_rank != 0)
            throw std::logic_error("PresentedAbGroup: element coding needs a finite group");
        return n;
    }

    std::size_t gens_;
    IntMatrix relations_;
    std::shared_ptr<Cell> cell_;
};

/// Morphism of presented groups, as its action on generators. Construction
/// verifies well-definedness: the matrix must carry every domain relation
/// into the codomain's relation lattice.
class AbMor {
public:
    AbMor() = default;
    AbMor(PresentedAbGroup dom, PresentedAbGroup cod, IntMatrix matrix)
        : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != cod_.gens() || matrix_.cols() != dom_.gens())
            throw std::invalid_argument("AbMor: matrix shape does not match presentations");
        const IntMatrix mapped = matrix_ * dom_.relations();
        for (std::size_t j = 0; j < mapped.cols(); ++j)
            if (!cod_.contains_in_lattice(mapped.col(j)))
                throw std::invalid_argument(
                    "AbMor: not well defined, domain relation " + std::to_string(j) +
                    " is not carried into the codomain's relation lattice");
    }

    const PresentedAbGroup& dom() const { return dom_; }
    const PresentedAbGroup& cod() const { return cod_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntMatrix operator()(const IntMatrix& coords) const { return matrix_ * coords; }

private:
    PresentedAbGroup dom_, cod_;
    IntMatrix matrix_;
};

/// Monoidal backend on finitely presented abelian groups. Tensor is the
/// Kronecker construction with relation columns [R_A (x) I | I (x) R_B]; the
/// canonical free rank-one presentation of Z is the strict unit and is
/// absorbed eagerly, making the structure strictly associative and unital on
/// presentation handles. Coequalizers juxtapose difference columns onto the
/// target's presentation, so projections act as the identity on generators.
struct FinAb {
    using Obj = PresentedAbGroup;
    using Mor = AbMor;

    static Obj unit() { return PresentedAbGroup(1, IntMatrix(1, 0)); }

    static bool is_unit_presentation(const Obj& x) {
        return x.gens() == 1 && x.canonical_relations().cols() == 0;
    }

    static bool obj_equal(const Obj& x, const Obj& y) { return x == y; }

    static Obj dom(const Mor& f) { return f.dom(); }
    static Obj cod(const Mor& f) { return f.cod(); }

    static Mor identity(const Obj& x) {
        return Mor(x, x, IntMatrix::identity(x.gens()));
    }

    static Mor compose(const Mor& after, const Mor& before) {
        if (!obj_equal(before.cod(), after.dom()))
            throw std::invalid_argument("FinAb::compose: middle presentations differ");
        return Mor(before.dom(), after.cod(), after.matrix() * before.matrix());
    }

    static Obj tensor(const Obj& x, const Obj& y) {
        if (is_unit_presentation(x)) return y;
        if (is_unit_presentation(y)) return x;
        const IntMatrix left = IntMatrix::kronecker(x.relations(), IntMatrix::identity(y.gens()));
        const IntMatrix right = IntMatrix::kronecker(IntMatrix::identity(x.gens()), y.relations());
        return Obj(x.gens() * y.gens(), left.hstack(right));
    }

    static Mor tensor_mor(const Mor& f, const Mor& g) {
        return Mor(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                   IntMatrix::kronecker(f.matrix(), g.matrix()));
    }

    static bool mor_equal(const Mor& f, const Mor& g) {
        if (!obj_equal(f.dom(), g.dom()) || !obj_equal(f.cod(), g.cod())) return false;
        const IntMatrix d = f.matrix() - g.matrix();
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!f.cod().contains_in_lattice(d.col(j))) return false;
        return true;
    }

    static std::optional<std::string> first_disagreement(const Mor& f, const Mor& g) {
        if (!obj_equal(f.dom(), g.dom()) || !obj_equal(f.cod(), g.cod()))
            return "domain or codomain presentations differ";
        const IntMatrix d = f.matrix() - g.matrix();
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!f.cod().contains_in_lattice(d.col(j)))
                return "generator " + std::to_string(j) + ": images differ by " +
                       d.col(j).transpose().to_string() + " outside the relation lattice";
        return std::nullopt;
    }

    static bool is_epi(const Mor& f) {
        // Surjective exactly when the cokernel of [matrix | relations] is zero.
        SmithNormalForm s = smith_normal_form(f.matrix().hstack(f.cod().relations()));
        if (s.rank != f.cod().gens()) return false;
        for (const Int& d : s.invariant_factors())
            if (d != 1) return false;
        return true;
    }

    static CoequalizerResult<FinAb> coequalizer(const Mor& f, const Mor& g) {
        if (!obj_equal(f.dom(), g.dom()) || !obj_equal(f.cod(), g.cod()))
            throw std::invalid_argument("FinAb::coequalizer: pair is not parallel");
        const Obj& a = f.cod();
        Obj q(a.gens(), a.relations().hstack(f.matrix() - g.matrix()));
        Mor proj(a, q, IntMatrix::identity(a.gens()));

        CoequalizerResult<FinAb> result{f, g, q, proj, nullptr};
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

    /// For an epi p and a morphism h that kills p's kernel, the unique u with
    /// u . p = h. When p acts as the identity on generators the matrix of h is
    /// reused directly; otherwise u is found by solving U * P = H modulo the
    /// codomain's relation lattice, columnwise in vectorized form.
    static std::optional<Mor> factor_through_epi(const Mor& p, const Mor& h) {
        if (!obj_equal(p.dom(), h.dom())) return std::nullopt;
        const std::size_t ga = p.dom().gens(), ge = p.cod().gens(), gz = h.cod().gens();
        if (p.matrix() == IntMatrix::identity(ga)) {
            try {
                return Mor(p.cod(), h.cod(), h.matrix());
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        }
        // Solve for U jointly: U * p.matrix() = h.matrix() and U carries the
        // relations of p's codomain into Z's lattice, both modulo relation
        // columns of Z. Column-major vectorization turns this into one exact
        // linear system, so a solution exists iff the factorization does.
        const IntMatrix& rz = h.cod().relations();
        const IntMatrix lhs = p.matrix().hstack(p.cod().relations());
        const IntMatrix system =
            IntMatrix::kronecker(lhs.transpose(), IntMatrix::identity(gz))
                .hstack(IntMatrix::kronecker(IntMatrix::identity(lhs.cols()), rz));
        IntMatrix rhs(lhs.cols() * gz, 1);
        for (std::size_t j = 0; j < ga; ++j)
            for (std::size_t i = 0; i < gz; ++i) rhs.at(j * gz + i, 0) = h.matrix().at(i, j);
        auto solution = SnfSolver(system).solve(rhs);
        if (!solution) return std::nullopt;
        IntMatrix u(gz, ge);
        for (std::size_t j = 0; j < ge; ++j)
            for (std::size_t i = 0; i < gz; ++i) u.at(i, j) = solution->at(j * gz + i, 0);
        Mor out(p.cod(), h.cod(), std::move(u));
        if (!mor_equal(compose(out, p), h)) return std::nullopt;
        return out;
    }

    static std::string quotient_key(const Mor& projection) {
        return "finab:" + std::to_string(projection.cod().gens()) + ":" +
               projection.cod().canonical_relations().to_string();
    }

    static Coproduct<FinAb> coproduct(const Obj& x, const Obj& y) {
        Obj s(x.gens() + y.gens(), IntMatrix::block_diag(x.relations(), y.relations()));
        IntMatrix li(s.gens(), x.gens()), ri(s.gens(), y.gens());
        for (std::size_t i = 0; i < x.gens(); ++i) li.at(i, i) = 1;
        for (std::size_t i = 0; i < y.gens(); ++i) ri.at(x.gens() + i, i) = 1;
        return {s, Mor(x, s, std::move(li)), Mor(y, s, std::move(ri))};
    }

    static Mor copair(const Mor& f, const Mor& g) {
        if (!obj_equal(f.cod(), g.cod()))
            throw std::invalid_argument("FinAb::copair: codomains differ");
        const Obj s = coproduct(f.dom(), g.dom()).obj;
        return Mor(s, f.cod(), f.matrix().hstack(g.matrix()));
    }

    /// Columns generating { x : f(x) = 0 } in domain coordinates.
    static IntMatrix kernel_generators(const Mor& f) {
        const IntMatrix stacked = f.matrix().hstack(f.cod().relations());
        const IntMatrix full = kernel_basis(stacked);
        IntMatrix top(f.dom().gens(), full.cols());
        for (std::size_t i = 0; i < top.rows(); ++i)
            for (std::size_t j = 0; j < full.cols(); ++j) top.at(i, j) = full.at(i, j);
        return top;
    }

    /// Image subgroup presented on the domain's generators: the relation
    /// lattice of the image is the full preimage of the codomain's lattice,
    /// so the surjection part acts as the identity on generators.
    static ImageFactorization<FinAb> image_factorization(const Mor& f) {
        const IntMatrix k = kernel_generators(f);
        Obj image(f.dom().gens(), k);
        return {image, Mor(f.dom(), image, IntMatrix::identity(f.dom().gens())),
                Mor(image, f.cod(), f.matrix())};
    }

    /// Compatible test targets h = w . projection for a fixed battery of
    /// target groups, with deterministic pseudo-random w kept only when well
    /// defined; the zero morphism into Z is always present.
    static std::vector<Mor> preservation_targets(const CoequalizerResult<FinAb>& canonical,
                                                 std::size_t budget) {
        std::vector<Obj> targets{free_group(1), PresentedAbGroup::cyclic(2),
                                 PresentedAbGroup::cyclic(4), PresentedAbGroup::cyclic(6),
                                 direct_sum_obj(free_group(1), PresentedAbGroup::cyclic(2))};
        std::vector<Mor> out;
        const std::size_t gq = canonical.quotient.gens();
        out.push_back(compose(Mor(canonical.quotient, free_group(1), IntMatrix(1, gq)),
                              canonical.projection));
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        auto next_entry = [&state]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<long long>((state >> 33) % 5) - 2;
        };
        const std::size_t per_target = std::max<std::size_t>(1, budget / targets.size());
        for (const Obj& z : targets) {
            std::size_t kept = 0;
            for (std::size_t attempt = 0; attempt < 4 * per_target && kept < per_target;
                 ++attempt) {
                IntMatrix w(z.gens(), gq);
                for (std::size_t i = 0; i < w.rows(); ++i)
                    for (std::size_t j = 0; j < w.cols(); ++j) w.at(i, j) = next_entry();
                try {
                    out.push_back(
                        compose(Mor(canonical.quotient, z, std::move(w)), canonical.projection));
                    ++kept;
                } catch (const std::invalid_argument&) {
                }
            }
        }
        return out;
    }

private:
    static Obj free_group(std::size_t rank) { return PresentedAbGroup::free_group(rank); }
    static Obj direct_sum_obj(const Obj& x, const Obj& y) {
        return Obj(x.gens() + y.gens(), IntMatrix::block_diag(x.relations(), y.relations()));
    }
};

/// Binary biproduct of presented groups (the coproduct in this category).
inline Coproduct<FinAb> direct_sum(const PresentedAbGroup& x, const PresentedAbGroup& y) {
    return FinAb::coproduct(x, y);
}

static_assert(CategoryBackend<FinAb>);
static_assert(HasCoproducts<FinAb>);
static_assert(HasImageFactorization<FinAb>);

}  // namespace moncat
