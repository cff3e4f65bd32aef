#include "ncmops/fock.hpp"

#include <stdexcept>

namespace ncmops {

namespace {

Word prepend(int letter, const Word& u) {
    std::vector<int> letters{letter};
    letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    return Word(u.alphabet(), std::move(letters));
}

void require_level(const FockData& data, int level, const char* who) {
    if (level > data.depth)
        throw BoundError(std::string(who) + " needs level " + std::to_string(level) + ", data depth is " +
                         std::to_string(data.depth));
}

}  // namespace

const Rat& FockData::weight(const Word& u) const {
    if (u.length() < 1) throw std::invalid_argument("weight: the vacuum carries no weight");
    require_level(*this, u.length(), "weight");
    auto it = weights[static_cast<std::size_t>(u.length()) - 1].find(u);
    if (it == weights[static_cast<std::size_t>(u.length()) - 1].end())
        throw std::logic_error("incomplete weight map at word '" + word_string(u) + "'");
    return it->second;
}

const RatMatrix& FockData::preservation_at(int letter, int level) const {
    if (letter < 1 || letter > d) throw std::invalid_argument("preservation_at: letter out of range");
    if (level < 0) throw std::invalid_argument("preservation_at: negative level");
    require_level(*this, level, "preservation_at");
    return preservation[static_cast<std::size_t>(letter) - 1][static_cast<std::size_t>(level)];
}

FockVector::FockVector(int alphabet) : alphabet_(alphabet) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

int FockVector::max_level() const { return entries_.empty() ? 0 : entries_.rbegin()->first.length(); }

Rat FockVector::coefficient(const Word& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? Rat(0) : it->second;
}

void FockVector::add_term(const Word& w, const Rat& c) {
    if (w.alphabet() != alphabet_) throw std::invalid_argument("add_term: mixed alphabets");
    if (c == 0) return;
    auto [it, inserted] = entries_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
    if (rhs.alphabet_ != alphabet_) throw std::invalid_argument("vector sum: mixed alphabets");
    for (const auto& [w, c] : rhs.entries_) add_term(w, c);
    return *this;
}

FockVector& FockVector::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [w, c] : entries_) c *= scalar;
    return *this;
}

FockVector vacuum(int alphabet) {
    FockVector v(alphabet);
    v.add_term(Word(alphabet), Rat(1));
    return v;
}

FockVector basis_vector(const Word& u) {
    FockVector v(u.alphabet());
    v.add_term(u, Rat(1));
    return v;
}

Rat kernel_coeff(const FockData& data, const Word& u) {
    require_level(data, u.length(), "kernel_coeff");
    Rat k(1);
    for (int j = 0; j < u.length() && k != 0; ++j) k *= data.weight(u.suffix_from(j));
    return k;
}

Rat c_inner(const FockData& data, const FockVector& a, const FockVector& b) {
    if (a.alphabet() != data.d || b.alphabet() != data.d)
        throw std::invalid_argument("c_inner: mixed alphabets");
    require_level(data, std::max(a.max_level(), b.max_level()), "c_inner");
    Rat value(0);
    for (const auto& [w, ca] : a.entries()) {
        const Rat cb = b.coefficient(w);
        if (cb == 0) continue;
        value += ca * cb * kernel_coeff(data, w);
    }
    return value;
}

FockVector apply_creation(int letter, const FockVector& v) {
    if (letter < 1 || letter > v.alphabet()) throw std::invalid_argument("apply_creation: letter out of range");
    FockVector out(v.alphabet());
    for (const auto& [u, c] : v.entries()) out.add_term(prepend(letter, u), c);
    return out;
}

FockVector apply_annihilation_tilde(const FockData& data, int letter, const FockVector& v) {
    if (letter < 1 || letter > data.d)
        throw std::invalid_argument("apply_annihilation_tilde: letter out of range");
    if (v.alphabet() != data.d) throw std::invalid_argument("apply_annihilation_tilde: mixed alphabets");
    require_level(data, v.max_level(), "apply_annihilation_tilde");
    FockVector out(data.d);
    for (const auto& [u, c] : v.entries()) {
        if (u.empty() || u.letter(0) != letter) continue;
        const Rat& weight = data.weight(u);
        if (weight != 0) out.add_term(u.suffix_from(1), c * weight);
    }
    return out;
}

FockVector apply_preservation(const FockData& data, int letter, const FockVector& v) {
    if (letter < 1 || letter > data.d) throw std::invalid_argument("apply_preservation: letter out of range");
    if (v.alphabet() != data.d) throw std::invalid_argument("apply_preservation: mixed alphabets");
    require_level(data, v.max_level(), "apply_preservation");
    FockVector out(data.d);
    std::map<int, std::vector<Word>> levels;
    for (const auto& [u, c] : v.entries()) {
        const int k = u.length();
        const RatMatrix& t = data.preservation_at(letter, k);
        auto [it, inserted] = levels.emplace(k, std::vector<Word>());
        if (inserted) it->second = words_of_length(data.d, k);
        const std::size_t column = level_index(u);
        for (std::size_t row = 0; row < t.rows(); ++row) {
            const Rat& entry = t.at(row, column);
            if (entry != 0) out.add_term(it->second[row], c * entry);
        }
    }
    return out;
}

FockVector apply_X(const FockData& data, int letter, const FockVector& v) {
    if (v.max_level() > data.depth - 1 && !v.is_zero())
        throw BoundError("apply_X needs support within level " + std::to_string(data.depth - 1) +
                         ", vector reaches " + std::to_string(v.max_level()));
    FockVector out = apply_creation(letter, v);
    out += apply_preservation(data, letter, v);
    out += apply_annihilation_tilde(data, letter, v);
    return out;
}

Rat fock_moment(const FockData& data, const Word& u) {
    if (u.alphabet() != data.d) throw std::invalid_argument("fock_moment: mixed alphabets");
    const int m = u.length();
    if (m > 2 * data.depth + 1)
        throw BoundError("moment of degree " + std::to_string(m) + " needs depth " +
                         std::to_string((m + 1) / 2) + ", data depth is " + std::to_string(data.depth));
    // Apply the letters right to left, discarding words that can no longer
    // come back to the vacuum in the remaining steps; the walk then never
    // leaves the stored levels.
    std::map<Word, Rat> current{{Word(data.d), Rat(1)}};
    std::map<int, std::vector<Word>> levels;
    auto add = [](std::map<Word, Rat>& into, const Word& w, const Rat& c) {
        auto [it, inserted] = into.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) into.erase(it);
        }
    };
    for (int t = 1; t <= m; ++t) {
        const int letter = u.letter(static_cast<std::size_t>(m - t));
        const int keep = m - t;
        std::map<Word, Rat> next;
        for (const auto& [w, c] : current) {
            const int k = w.length();
            if (k + 1 <= keep) add(next, prepend(letter, w), c);
            if (k <= keep) {
                const RatMatrix& matrix = data.preservation_at(letter, k);
                auto [it, inserted] = levels.emplace(k, std::vector<Word>());
                if (inserted) it->second = words_of_length(data.d, k);
                const std::size_t column = level_index(w);
                for (std::size_t row = 0; row < matrix.rows(); ++row) {
                    const Rat& entry = matrix.at(row, column);
                    if (entry != 0) add(next, it->second[row], c * entry);
                }
            }
            if (k >= 1 && w.letter(0) == letter) {
                const Rat& weight = data.weight(w);
                if (weight != 0) add(next, w.suffix_from(1), c * weight);
            }
        }
        current = std::move(next);
    }
    auto it = current.find(Word(data.d));
    return it == current.end() ? Rat(0) : it->second;
}

FockCheckReport validate_fock_data(const FockData& data) {
    FockCheckReport report;
    auto fail = [&](std::string why) {
        report.ok = false;
        report.violation = std::move(why);
        return report;
    };
    if (data.d < 1) return fail("alphabet size must be >= 1");
    if (data.depth < 0) return fail("depth must be >= 0");
    if (data.weights.size() != static_cast<std::size_t>(data.depth))
        return fail("expected one weight map per level 1.." + std::to_string(data.depth));
    for (int k = 1; k <= data.depth; ++k) {
        const auto& level = data.weights[static_cast<std::size_t>(k) - 1];
        const std::vector<Word> words = words_of_length(data.d, k);
        if (level.size() != words.size())
            return fail("weight map at level " + std::to_string(k) + " has " + std::to_string(level.size()) +
                        " entries, expected " + std::to_string(words.size()));
        for (const Word& w : words) {
            auto it = level.find(w);
            if (it == level.end()) return fail("missing weight for word '" + word_string(w) + "'");
            if (it->second < 0)
                return fail("negative weight " + fraction_string(it->second) + " at word '" + word_string(w) +
                            "'");
        }
    }
    if (data.preservation.size() != static_cast<std::size_t>(data.d))
        return fail("expected one preservation family per letter 1.." + std::to_string(data.d));
    for (int i = 1; i <= data.d; ++i) {
        const auto& family = data.preservation[static_cast<std::size_t>(i) - 1];
        if (family.size() != static_cast<std::size_t>(data.depth) + 1)
            return fail("letter " + std::to_string(i) + " needs matrices for levels 0.." +
                        std::to_string(data.depth));
        std::size_t dim = 1;
        for (int k = 0; k <= data.depth; ++k) {
            const RatMatrix& matrix = family[static_cast<std::size_t>(k)];
            if (matrix.rows() != dim || matrix.cols() != dim)
                return fail("preservation matrix for letter " + std::to_string(i) + " at level " +
                            std::to_string(k) + " is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected " + std::to_string(dim));
            dim *= static_cast<std::size_t>(data.d);
        }
    }
    // Transpose compatibility with the kernel, elementwise per letter/level.
    for (int k = 0; k <= data.depth; ++k) {
        const std::vector<Word> words = words_of_length(data.d, k);
        std::vector<Rat> kernels;
        kernels.reserve(words.size());
        for (const Word& w : words) kernels.push_back(kernel_coeff(data, w));
        for (int i = 1; i <= data.d; ++i) {
            const RatMatrix& t = data.preservation_at(i, k);
            for (std::size_t a = 0; a < words.size(); ++a) {
                for (std::size_t b = a + 1; b < words.size(); ++b) {
                    if (t.at(a, b) * kernels[a] != kernels[b] * t.at(b, a))
                        return fail("transpose compatibility fails for letter " + std::to_string(i) +
                                    " at level " + std::to_string(k) + ", words ('" + word_string(words[a]) +
                                    "', '" + word_string(words[b]) + "')");
                }
            }
        }
    }
    // Symmetry of each X on basis pairs within depth - 1; follows from the
    // invariants above, so a failure here means an internal inconsistency.
    if (data.depth == 0) return report;
    const std::vector<Word> domain = enumerate_words(data.d, data.depth - 1);
    for (int i = 1; i <= data.d; ++i) {
        std::vector<FockVector> images;
        images.reserve(domain.size());
        for (const Word& w : domain) images.push_back(apply_X(data, i, basis_vector(w)));
        for (std::size_t a = 0; a < domain.size(); ++a) {
            for (std::size_t b = a + 1; b < domain.size(); ++b) {
                if (c_inner(data, images[a], basis_vector(domain[b])) !=
                    c_inner(data, basis_vector(domain[a]), images[b]))
                    return fail("X_" + std::to_string(i) + " is not symmetric on the pair ('" +
                                word_string(domain[a]) + "', '" + word_string(domain[b]) + "')");
            }
        }
    }
    return report;
}

std::vector<Word> kernel_subspace(const FockData& data, int k) {
    if (k < 0) throw std::invalid_argument("kernel_subspace: negative level");
    require_level(data, k, "kernel_subspace");
    std::vector<Word> degenerate;
    for (const Word& w : words_of_length(data.d, k))
        if (kernel_coeff(data, w) == 0) degenerate.push_back(w);
    return degenerate;
}

namespace {

FockVector apply_polynomial(const FockData& data, const NcPolynomial& p, const FockVector& v) {
    FockVector out(data.d);
    for (const auto& [w, c] : p.terms()) {
        FockVector image = v;
        for (int t = w.length() - 1; t >= 0; --t) image = apply_X(data, w.letter(static_cast<std::size_t>(t)), image);
        image *= c;
        out += image;
    }
    return out;
}

}  // namespace

MonicFamily mops_vectors(const FockData& data, int n) {
    if (n < 0) throw std::invalid_argument("mops_vectors: negative degree");
    require_level(data, n, "mops_vectors");
    MonicFamily family{data.d, n, {}, {}};
    family.polynomials.emplace(Word(data.d), NcPolynomial::constant(data.d, Rat(1)));
    family.norm_sq.emplace(Word(data.d), Rat(1));
    for (int m = 1; m <= n; ++m) {
        const std::vector<Word> level = words_of_length(data.d, m - 1);
        for (const Word& u : words_of_length(data.d, m)) {
            const int letter = u.letter(0);
            const Word rest = u.suffix_from(1);
            NcPolynomial p = NcPolynomial::monomial(Word(data.d, {letter})) * family.poly(rest);
            const RatMatrix& t = data.preservation_at(letter, m - 1);
            const std::size_t column = level_index(rest);
            for (std::size_t row = 0; row < t.rows(); ++row) {
                const Rat& entry = t.at(row, column);
                if (entry != 0) p -= entry * family.poly(level[row]);
            }
            if (!rest.empty() && rest.letter(0) == letter) {
                const Rat& weight = data.weight(rest);
                if (weight != 0) p -= weight * family.poly(rest.suffix_from(1));
            }
            family.norm_sq.emplace(u, kernel_coeff(data, u));
            family.polynomials.emplace(u, std::move(p));
        }
    }
    // The defining property: each member sends the vacuum to its basis
    // tensor. A failure cannot come from user input, only from a bug.
    for (const auto& [u, p] : family.polynomials) {
        if (apply_polynomial(data, p, vacuum(data.d)) != basis_vector(u))
            throw Error("mops_vectors: member '" + word_string(u) + "' does not map the vacuum to its tensor");
    }
    return family;
}

FockData extract_fock_data(const State& s, const MonicFamily& family, int depth) {
    if (depth < 0) throw std::invalid_argument("extract_fock_data: negative depth");
    if (family.degree_bound < depth)
        throw std::invalid_argument("extract_fock_data: family bound " + std::to_string(family.degree_bound) +
                                    " below requested depth " + std::to_string(depth));
    if (family.d != s.alphabet()) throw std::invalid_argument("extract_fock_data: mixed alphabets");
    if (2 * depth + 1 > s.bound())
        throw BoundError("extract_fock_data at depth " + std::to_string(depth) + " needs moments of degree " +
                         std::to_string(2 * depth + 1) + ", state bound is " + std::to_string(s.bound()));
    // Re-verify orthogonality across equal degrees (as in extract_recursion).
    for (int m = 1; m <= depth; ++m) {
        const std::vector<Word> level = words_of_length(family.d, m);
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                Rat value = inner(s, family.poly(level[a]), family.poly(level[b]));
                if (value != 0)
                    throw NotOrthogonalError({level[a], level[b], value},
                                             "extract_fock_data: family not orthogonal at ('" +
                                                 word_string(level[a]) + "', '" + word_string(level[b]) +
                                                 "'), inner product " + fraction_string(value));
            }
        }
    }

    FockData data{family.d, depth, {}, {}};
    // Weights level by level, tracking the kernel coefficients as we go; for
    // an orthogonal family the kernel coefficient of u equals its squared
    // seminorm, which keeps the construction consistent on degeneracies.
    std::map<Word, Rat> kernels{{Word(family.d), Rat(1)}};
    for (int k = 1; k <= depth; ++k) {
        std::map<Word, Rat> level;
        for (const Word& u : words_of_length(family.d, k)) {
            const Rat& kernel_suffix = kernels.at(u.suffix_from(1));
            const Rat& norm = family.norm(u);
            Rat weight(0);
            if (kernel_suffix != 0) {
                weight = norm / kernel_suffix;
                if (weight < 0)
                    throw Error("extract_fock_data: negative weight at word '" + word_string(u) + "'");
            } else if (norm != 0) {
                throw Error("extract_fock_data: word '" + word_string(u) +
                            "' has nonzero seminorm over a degenerate suffix");
            }
            kernels.emplace(u, weight * kernel_suffix);
            level.emplace(u, std::move(weight));
        }
        data.weights.push_back(std::move(level));
    }
    for (int i = 1; i <= family.d; ++i) {
        const NcPolynomial xi = NcPolynomial::monomial(Word(family.d, {i}));
        std::vector<RatMatrix> matrices;
        for (int k = 0; k <= depth; ++k) {
            const std::vector<Word> level = words_of_length(family.d, k);
            RatMatrix t(level.size(), level.size());
            for (std::size_t column = 0; column < level.size(); ++column) {
                const NcPolynomial shifted = xi * family.poly(level[column]);
                for (std::size_t row = 0; row < level.size(); ++row) {
                    const Rat& kernel = kernels.at(level[row]);
                    if (kernel != 0) t.at(row, column) = inner(s, family.poly(level[row]), shifted) / kernel;
                }
            }
            matrices.push_back(std::move(t));
        }
        data.preservation.push_back(std::move(matrices));
    }
    const FockCheckReport report = validate_fock_data(data);
    if (!report.ok) throw Error("extract_fock_data: extracted data invalid: " + report.violation);
    return data;
}

FockState::FockState(FockData data) : data_(std::move(data)) {
    const FockCheckReport report = validate_fock_data(data_);
    if (!report.ok) throw ParseError("invalid Fock data: " + report.violation);
}

Rat FockState::moment(const Word& w) const {
    if (w.alphabet() != data_.d) throw std::invalid_argument("moment: mixed alphabets");
    if (w.length() > bound())
        throw BoundError("moment of degree " + std::to_string(w.length()) + " beyond state bound " +
                         std::to_string(bound()));
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    Rat value = fock_moment(data_, w);
    cache_.emplace(w, value);
    return value;
}

}  // namespace ncmops
