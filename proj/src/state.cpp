#include "ncmops/state.hpp"

#include <stdexcept>

#include "ncmops/errors.hpp"

namespace ncmops {

TableState::TableState(MomentTable table) : table_(std::move(table)) {}

Rat TableState::moment(const Word& w) const {
    if (w.alphabet() != table_.d) throw std::invalid_argument("moment: mixed alphabets");
    if (w.length() > table_.max_degree)
        throw BoundError("moment of degree " + std::to_string(w.length()) + " beyond table bound " +
                         std::to_string(table_.max_degree));
    auto it = table_.moments.find(w);
    if (it == table_.moments.end())
        throw std::logic_error("incomplete moment table queried at word '" + word_string(w) + "'");
    return it->second;
}

Rat apply(const State& s, const NcPolynomial& p) {
    if (p.alphabet() != s.alphabet()) throw std::invalid_argument("apply: mixed alphabets");
    if (auto deg = p.degree(); deg && *deg > s.bound())
        throw BoundError("polynomial degree " + std::to_string(*deg) + " beyond state bound " +
                         std::to_string(s.bound()));
    Rat value(0);
    for (const auto& [w, c] : p.terms()) value += c * s.moment(w);
    return value;
}

Rat inner(const State& s, const NcPolynomial& p, const NcPolynomial& q) {
    return apply(s, p.star() * q);
}

Rat seminorm_sq(const State& s, const NcPolynomial& p) { return inner(s, p, p); }

RatMatrix gram_matrix(const State& s, int degree) {
    if (degree < 0) throw std::invalid_argument("gram_matrix: negative degree");
    if (2 * degree > s.bound())
        throw BoundError("Gram matrix at degree " + std::to_string(degree) + " needs moments of degree " +
                         std::to_string(2 * degree));
    const std::vector<Word> words = enumerate_words(s.alphabet(), degree);
    RatMatrix g(words.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word row = words[i].reversed();
        for (std::size_t j = i; j < words.size(); ++j) {
            Rat value = s.moment(concat(row, words[j]));
            g.at(i, j) = value;
            g.at(j, i) = value;
        }
    }
    return g;
}

StateCheckReport check_state(const MomentTable& table) {
    StateCheckReport report;
    auto fail = [&](std::string why) {
        report.ok = false;
        report.violation = std::move(why);
        return report;
    };
    if (table.d < 1) return fail("alphabet size must be >= 1");
    if (table.max_degree < 0) return fail("max_degree must be >= 0");
    if (table.max_degree % 2 != 0) return fail("max_degree must be even");

    const std::vector<Word> words = enumerate_words(table.d, table.max_degree);
    for (const Word& w : words) {
        if (!table.moments.count(w)) {
            report.word = w;
            return fail("missing moment for word '" + word_string(w) + "'");
        }
    }
    if (table.moments.size() != words.size()) return fail("moment table has extra entries");

    const Rat unit = table.moments.at(Word(table.d));
    if (unit != 1) return fail("moment of the empty word is " + fraction_string(unit) + ", expected 1/1");

    for (const Word& w : words) {
        const Rat& value = table.moments.at(w);
        const Rat& mirrored = table.moments.at(w.reversed());
        if (value != mirrored) {
            report.word = w;
            return fail("moment of '" + word_string(w) + "' (" + fraction_string(value) +
                        ") differs from its reversal (" + fraction_string(mirrored) + ")");
        }
    }

    const TableState s(table);
    const int half = table.max_degree / 2;
    const PsdReport psd = check_psd(gram_matrix(s, half));
    if (!psd.psd) {
        const std::vector<Word> basis = enumerate_words(table.d, half);
        NcPolynomial witness(table.d);
        for (std::size_t i = 0; i < basis.size(); ++i) witness.add_term(basis[i], (*psd.certificate)[i]);
        report.certificate = witness;
        return fail("Gram matrix at degree " + std::to_string(half) +
                    " is not positive semidefinite: phi(p* p) = " + fraction_string(seminorm_sq(s, witness)) +
                    " for p = " + witness.to_string());
    }
    return report;
}

bool is_faithful_up_to(const State& s, int degree) {
    return check_psd(gram_matrix(s, degree)).positive_definite;
}

MomentTable table_from_state(const State& s, int max_degree) {
    if (max_degree < 0 || max_degree % 2 != 0)
        throw std::invalid_argument("table_from_state: max_degree must be even and >= 0");
    if (max_degree > s.bound())
        throw BoundError("table to degree " + std::to_string(max_degree) + " beyond state bound " +
                         std::to_string(s.bound()));
    MomentTable table{s.alphabet(), max_degree, {}};
    for (const Word& w : enumerate_words(s.alphabet(), max_degree)) table.moments.emplace(w, s.moment(w));
    return table;
}

}  // namespace ncmops
