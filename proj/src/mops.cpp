#include "ncmops/mops.hpp"

#include <stdexcept>

namespace ncmops {

namespace {

// <x_u, p> = phi(x_{rev u} p), computed without materializing the product.
Rat inner_monomial(const State& s, const Word& u, const NcPolynomial& p) {
    const Word row = u.reversed();
    Rat value(0);
    for (const auto& [w, c] : p.terms()) value += c * s.moment(concat(row, w));
    return value;
}

void require_degree_budget(const State& s, int degree, const char* who) {
    if (degree < 0) throw std::invalid_argument(std::string(who) + ": negative degree");
    if (2 * degree > s.bound())
        throw BoundError(std::string(who) + " at degree " + std::to_string(degree) +
                         " needs moments of degree " + std::to_string(2 * degree) + ", state bound is " +
                         std::to_string(s.bound()));
}

std::string pair_text(const Word& u, const Word& w) {
    return "('" + word_string(u) + "', '" + word_string(w) + "')";
}

// Throws when the family is not orthogonal across equal-degree pairs up to
// `degree`; scan order matches the relation checkers (degree ascending,
// pairs lexicographic).
void require_orthogonal(const State& s, const MonicFamily& family, int degree, const char* who) {
    for (int m = 1; m <= degree; ++m) {
        const std::vector<Word> level = words_of_length(family.d, m);
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                Rat value = inner(s, family.poly(level[a]), family.poly(level[b]));
                if (value != 0)
                    throw NotOrthogonalError(
                        {level[a], level[b], value},
                        std::string(who) + ": family not orthogonal at " + pair_text(level[a], level[b]) +
                            ", inner product " + fraction_string(value));
            }
        }
    }
}

}  // namespace

const NcPolynomial& MonicFamily::poly(const Word& u) const {
    auto it = polynomials.find(u);
    if (it == polynomials.end())
        throw std::invalid_argument("family has no member for word '" + word_string(u) + "'");
    return it->second;
}

const Rat& MonicFamily::norm(const Word& u) const {
    auto it = norm_sq.find(u);
    if (it == norm_sq.end())
        throw std::invalid_argument("family has no squared norm for word '" + word_string(u) + "'");
    return it->second;
}

MonicFamily gram_schmidt(const State& s, int degree) {
    require_degree_budget(s, degree, "gram_schmidt");
    MonicFamily family{s.alphabet(), degree, {}, {}};
    for (const Word& u : enumerate_words(s.alphabet(), degree)) {
        NcPolynomial p = NcPolynomial::monomial(u);
        // polynomials is degree-lex ordered, so lower degrees come first.
        for (const auto& [v, pv] : family.polynomials) {
            if (v.length() >= u.length()) break;
            const Rat& nv = family.norm_sq.at(v);
            if (nv == 0) continue;
            const Rat c = inner_monomial(s, u, pv) / nv;
            if (c != 0) p -= c * pv;
        }
        family.norm_sq.emplace(u, seminorm_sq(s, p));
        family.polynomials.emplace(u, std::move(p));
    }
    return family;
}

MopsResult has_mops(const State& s, int degree) {
    MopsResult result;
    result.family = gram_schmidt(s, degree);
    for (int m = 1; m <= degree && result.has_mops; ++m) {
        const std::vector<Word> level = words_of_length(s.alphabet(), m);
        for (std::size_t a = 0; a < level.size() && result.has_mops; ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                Rat value = inner(s, result.family.poly(level[a]), result.family.poly(level[b]));
                if (value != 0) {
                    result.has_mops = false;
                    result.witness = OrthogonalityWitness{level[a], level[b], value};
                    break;
                }
            }
        }
    }
    return result;
}

RelationResult check_relation0(const State& s, int degree) {
    require_degree_budget(s, degree, "check_relation0");
    const MonicFamily family = gram_schmidt(s, degree);
    RelationResult result;
    for (int m = 1; m <= degree; ++m) {
        // The members of strictly lower degree with nonzero squared norm,
        // shared by every pair at this level.
        std::vector<const NcPolynomial*> lower;
        std::vector<const Rat*> lower_norm;
        for (const auto& [v, pv] : family.polynomials) {
            if (v.length() >= m) break;
            const Rat& nv = family.norm_sq.at(v);
            if (nv == 0) continue;
            lower.push_back(&pv);
            lower_norm.push_back(&nv);
        }
        const std::vector<Word> level = words_of_length(s.alphabet(), m);
        // projections[a][t] = <x_{level[a]}, P_{lower[t]}>
        std::vector<std::vector<Rat>> projections(level.size());
        for (std::size_t a = 0; a < level.size(); ++a) {
            projections[a].reserve(lower.size());
            for (const NcPolynomial* pv : lower) projections[a].push_back(inner_monomial(s, level[a], *pv));
        }
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const Rat lhs = s.moment(concat(level[a].reversed(), level[b]));
                Rat rhs(0);
                for (std::size_t t = 0; t < lower.size(); ++t)
                    rhs += projections[a][t] * projections[b][t] / *lower_norm[t];
                if (lhs != rhs) {
                    result.holds = false;
                    result.witness = RelationWitness{level[a], level[b], lhs, rhs};
                    return result;
                }
            }
        }
    }
    return result;
}

RecursionCoefficients extract_recursion(const State& s, const MonicFamily& family, int depth) {
    require_degree_budget(s, depth, "extract_recursion");
    if (family.degree_bound < depth)
        throw std::invalid_argument("extract_recursion: family bound " + std::to_string(family.degree_bound) +
                                    " below requested depth " + std::to_string(depth));
    if (family.d != s.alphabet()) throw std::invalid_argument("extract_recursion: mixed alphabets");
    require_orthogonal(s, family, depth, "extract_recursion");

    RecursionCoefficients coeffs{family.d, depth, {}, {}};

    for (int m = 1; m <= depth; ++m) {
        for (const Word& u : words_of_length(family.d, m)) {
            const Rat& num = family.norm(u);
            const Rat& den = family.norm(u.suffix_from(1));
            if (den == 0) {
                if (num != 0)
                    throw Error("extract_recursion: '" + word_string(u) +
                                "' has nonzero seminorm over a null suffix");
                coeffs.C.emplace(u, Rat(0));
                continue;
            }
            Rat c = num / den;
            if (c < 0)
                throw Error("extract_recursion: negative weight " + fraction_string(c) + " at '" +
                            word_string(u) + "'");
            coeffs.C.emplace(u, std::move(c));
        }
    }

    for (int i = 1; i <= family.d; ++i) {
        const NcPolynomial xi = NcPolynomial::monomial(Word(family.d, {i}));
        for (int m = 0; m < depth; ++m) {
            const std::vector<Word> level = words_of_length(family.d, m);
            for (const Word& u : level) {
                const NcPolynomial shifted = xi * family.poly(u);
                for (const Word& w : level) {
                    const Rat& nw = family.norm(w);
                    Rat b = nw == 0 ? Rat(0) : inner(s, family.poly(w), shifted) / nw;
                    coeffs.B.emplace(std::make_tuple(i, w, u), std::move(b));
                }
                // Against strictly lower degrees, x_i P_u may only contain
                // the designated suffix member, with weight C_u exactly.
                for (const auto& [v, pv] : family.polynomials) {
                    if (v.length() >= m) break;
                    const Rat& nv = family.norm_sq.at(v);
                    if (nv == 0) continue;
                    const Rat coefficient = inner(s, pv, shifted) / nv;
                    Rat expected(0);
                    if (!u.empty() && u.letter(0) == i && v == u.suffix_from(1)) expected = coeffs.C.at(u);
                    if (coefficient != expected)
                        throw Error("extract_recursion: line (" + std::to_string(i) + ", '" + word_string(u) +
                                    "') has component " + fraction_string(coefficient) + " along '" +
                                    word_string(v) + "', expected " + fraction_string(expected));
                }
            }
        }
    }

    // Weighted symmetry: B_{i,w,u} K_w = K_u B_{i,u,w} with K the product of
    // the weights over all suffixes.
    auto kernel = [&coeffs](const Word& w) {
        Rat k(1);
        for (int j = 0; j < w.length(); ++j) k *= coeffs.C.at(w.suffix_from(j));
        return k;
    };
    for (int m = 1; m < depth; ++m) {
        const std::vector<Word> level = words_of_length(family.d, m);
        std::vector<Rat> kernels;
        kernels.reserve(level.size());
        for (const Word& w : level) kernels.push_back(kernel(w));
        for (int i = 1; i <= family.d; ++i) {
            for (std::size_t a = 0; a < level.size(); ++a) {
                for (std::size_t b = a + 1; b < level.size(); ++b) {
                    const Rat lhs = coeffs.B.at({i, level[a], level[b]}) * kernels[a];
                    const Rat rhs = coeffs.B.at({i, level[b], level[a]}) * kernels[b];
                    if (lhs != rhs)
                        throw Error("extract_recursion: weighted symmetry fails for letter " +
                                    std::to_string(i) + " at " + pair_text(level[a], level[b]));
                }
            }
        }
    }
    return coeffs;
}

bool verify_recursion(const MonicFamily& family, const RecursionCoefficients& coeffs, const State& s) {
    if (coeffs.d != family.d || family.d != s.alphabet())
        throw std::invalid_argument("verify_recursion: mixed alphabets");
    if (coeffs.depth > family.degree_bound)
        throw std::invalid_argument("verify_recursion: family bound below coefficient depth");
    require_degree_budget(s, coeffs.depth, "verify_recursion");

    auto b_coefficient = [&coeffs](int i, const Word& w, const Word& u) {
        auto it = coeffs.B.find(std::make_tuple(i, w, u));
        return it == coeffs.B.end() ? Rat(0) : it->second;
    };
    auto c_coefficient = [&coeffs](const Word& u) {
        auto it = coeffs.C.find(u);
        return it == coeffs.C.end() ? Rat(0) : it->second;
    };

    for (int i = 1; i <= coeffs.d; ++i) {
        const NcPolynomial xi = NcPolynomial::monomial(Word(coeffs.d, {i}));
        for (int m = 0; m < coeffs.depth; ++m) {
            for (const Word& u : words_of_length(coeffs.d, m)) {
                NcPolynomial defect = xi * family.poly(u);
                std::vector<int> lifted{i};
                lifted.insert(lifted.end(), u.letters().begin(), u.letters().end());
                defect -= family.poly(Word(coeffs.d, lifted));
                for (const Word& w : words_of_length(coeffs.d, m)) {
                    const Rat b = b_coefficient(i, w, u);
                    if (b != 0) defect -= b * family.poly(w);
                }
                if (!u.empty() && u.letter(0) == i) {
                    const Rat c = c_coefficient(u);
                    if (c != 0) defect -= c * family.poly(u.suffix_from(1));
                }
                if (seminorm_sq(s, defect) != 0) return false;
            }
        }
    }
    return true;
}

}  // namespace ncmops
