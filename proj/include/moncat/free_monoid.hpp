#pragma once

#include <moncat/monoid.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace moncat {

// ---------------------------------------------------------------------------
// free monoids on a finite alphabet, element level

/// A word over the alphabet {0 .. letters-1}; the empty word is the unit.
using Word = std::vector<int>;

/// The insertion of generators: a letter as a one-letter word.
inline Word letter_word(int s) { return Word{s}; }

inline Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

/// All words of length <= max_len, ordered by length and lexicographically
/// within a length. This ordering is the canonical generator numbering used
/// everywhere words index a presentation.
inline std::vector<Word> words_up_to(int letters, int max_len) {
    if (letters < 0 || max_len < 0) throw std::invalid_argument("words_up_to: negative bound");
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int s = 0; s < letters; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

/// Homomorphic extension of a letter assignment alpha : S -> |M| to words,
/// the unique monoid morphism from the free monoid on S agreeing with alpha
/// on one-letter words.
class WordEvaluator {
public:
    WordEvaluator(MonoidObject<FinSet> m, FinSetMor alpha)
        : monoid_(std::move(m)), alpha_(std::move(alpha)) {
        if (!FinSet::obj_equal(alpha_.cod, monoid_.carrier))
            throw std::invalid_argument("WordEvaluator: assignment does not land in the monoid");
    }

    int letters() const { return alpha_.dom.size; }

    int operator()(const Word& w) const {
        const int n = monoid_.carrier.size;
        int acc = monoid_.unit.table.at(0);
        for (int s : w)
            acc = monoid_.mult.table.at(static_cast<std::size_t>(acc * n + alpha_(s)));
        return acc;
    }

private:
    MonoidObject<FinSet> monoid_;
    FinSetMor alpha_;
};

/// The two laws pinning the extension down: it restricts to alpha on letters
/// and it is multiplicative on sampled pairs of words.
inline CheckReport check_extension_laws(const MonoidObject<FinSet>& m, const FinSetMor& alpha,
                                        int sample_len = 3) {
    WordEvaluator ext(m, alpha);
    CheckReport report;
    bool restricts = true;
    for (int s = 0; s < alpha.dom.size; ++s)
        restricts = restricts && ext(letter_word(s)) == alpha(s);
    report.add("extension restricted to letters is the assignment", restricts);

    const int n = m.carrier.size;
    bool multiplicative = ext(Word{}) == m.unit.table.at(0);
    for (const auto& u : words_up_to(alpha.dom.size, sample_len))
        for (const auto& v : words_up_to(alpha.dom.size, sample_len))
            multiplicative =
                multiplicative &&
                ext(concat(u, v)) ==
                    m.mult.table.at(static_cast<std::size_t>(ext(u) * n + ext(v)));
    report.add("extension is a monoid morphism on sampled words", multiplicative);
    return report;
}

// ---------------------------------------------------------------------------
// degreewise-truncated tensor algebra over presented abelian groups

/// The degree <= N part of the tensor algebra on a presented group: the
/// components G^(x)k for k = 0..N together with their direct sum and the
/// canonical injections and projections. Strict tensoring makes
/// components[j] (x) components[k] literally components[j+k], so graded
/// multiplication needs no structure maps below the truncation bound.
struct TruncatedTensorAlgebra {
    PresentedAbGroup base;
    int bound = 0;
    std::vector<PresentedAbGroup> components;
    PresentedAbGroup total;
    std::vector<AbMor> inject;
    std::vector<AbMor> project;

    std::size_t offset(int k) const {
        std::size_t o = 0;
        for (int j = 0; j < k; ++j) o += components[static_cast<std::size_t>(j)].gens();
        return o;
    }
};

/// Index of the basis element named by a word: when the base is free on the
/// alphabet, the degree-k component's generators are the length-k words in
/// iterated row-major Kronecker order, i.e. the word read as a base-n number.
inline std::size_t word_index(const TruncatedTensorAlgebra& t, const Word& w) {
    if (static_cast<int>(w.size()) > t.bound)
        throw std::invalid_argument("word_index: word exceeds the truncation bound");
    const std::size_t n = t.base.gens();
    std::size_t digits = 0;
    for (int s : w) digits = digits * n + static_cast<std::size_t>(s);
    return t.offset(static_cast<int>(w.size())) + digits;
}

inline TruncatedTensorAlgebra truncated_tensor_algebra(const PresentedAbGroup& g, int bound) {
    if (bound < 0) throw std::invalid_argument("truncated_tensor_algebra: negative bound");
    TruncatedTensorAlgebra t;
    t.base = g;
    t.bound = bound;
    t.components.push_back(FinAb::unit());
    for (int k = 1; k <= bound; ++k)
        t.components.push_back(FinAb::tensor(t.components.back(), g));

    t.total = t.components.front();
    for (int k = 1; k <= bound; ++k)
        t.total = direct_sum(t.total, t.components[static_cast<std::size_t>(k)]).obj;

    std::size_t offset = 0;
    for (const auto& comp : t.components) {
        IntMatrix in(t.total.gens(), comp.gens());
        IntMatrix out(comp.gens(), t.total.gens());
        for (std::size_t i = 0; i < comp.gens(); ++i) {
            in.at(offset + i, i) = 1;
            out.at(i, offset + i) = 1;
        }
        t.inject.emplace_back(comp, t.total, std::move(in));
        t.project.emplace_back(t.total, comp, std::move(out));
        offset += comp.gens();
    }
    return t;
}

/// Functorial action on the truncated algebra: the direct sum of the
/// Kronecker powers of f.
inline AbMor truncated_monad_on_morphism(const AbMor& f, int bound) {
    const auto dom = truncated_tensor_algebra(f.dom(), bound);
    const auto cod = truncated_tensor_algebra(f.cod(), bound);
    IntMatrix m(cod.total.gens(), dom.total.gens());
    IntMatrix power = IntMatrix::identity(1);
    std::size_t row = 0, col = 0;
    for (int k = 0; k <= bound; ++k) {
        if (k > 0) power = IntMatrix::kronecker(power, f.matrix());
        for (std::size_t i = 0; i < power.rows(); ++i)
            for (std::size_t j = 0; j < power.cols(); ++j) m.at(row + i, col + j) = power.at(i, j);
        row += cod.components[static_cast<std::size_t>(k)].gens();
        col += dom.components[static_cast<std::size_t>(k)].gens();
    }
    return AbMor(dom.total, cod.total, std::move(m));
}

/// k-fold multiplication A^(x)k -> A of a ring; the 0-fold case is the unit.
inline AbMor multiplication_power(const MonoidObject<FinAb>& ring, int k) {
    if (k < 0) throw std::invalid_argument("multiplication_power: negative arity");
    if (k == 0) return ring.unit;
    AbMor m = FinAb::identity(ring.carrier);
    for (int j = 2; j <= k; ++j)
        m = FinAb::compose(ring.mult, FinAb::tensor_mor(m, FinAb::identity(ring.carrier)));
    return m;
}

/// The algebra map T_N G -> A induced by alpha : G -> A: degree k evaluates
/// as the k-fold product of alpha's images.
inline AbMor truncated_extension(const MonoidObject<FinAb>& ring, const AbMor& alpha, int bound) {
    if (!FinAb::obj_equal(alpha.cod(), ring.carrier))
        throw std::invalid_argument("truncated_extension: assignment does not land in the ring");
    const auto t = truncated_tensor_algebra(alpha.dom(), bound);
    IntMatrix m(ring.carrier.gens(), t.total.gens());
    IntMatrix alpha_power = IntMatrix::identity(1);
    std::size_t col = 0;
    for (int k = 0; k <= bound; ++k) {
        if (k > 0) alpha_power = IntMatrix::kronecker(alpha_power, alpha.matrix());
        const IntMatrix block = multiplication_power(ring, k).matrix() * alpha_power;
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) m.at(i, col + j) = block.at(i, j);
        col += t.components[static_cast<std::size_t>(k)].gens();
    }
    return AbMor(t.total, ring.carrier, std::move(m));
}

}  // namespace moncat
