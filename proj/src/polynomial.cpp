#include "ncmops/polynomial.hpp"

#include <stdexcept>

namespace ncmops {

NcPolynomial::NcPolynomial(int alphabet) : alphabet_(alphabet) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

NcPolynomial NcPolynomial::constant(int alphabet, const Rat& value) {
    NcPolynomial p(alphabet);
    p.add_term(Word(alphabet), value);
    return p;
}

NcPolynomial NcPolynomial::monomial(const Word& w, const Rat& coefficient) {
    NcPolynomial p(w.alphabet());
    p.add_term(w, coefficient);
    return p;
}

std::optional<int> NcPolynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.length();  // map is degree-lex ordered
}

Rat NcPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NcPolynomial::add_term(const Word& w, const Rat& c) {
    if (w.alphabet() != alphabet_) throw std::invalid_argument("add_term: mixed alphabets");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NcPolynomial NcPolynomial::star() const {
    NcPolynomial out(alphabet_);
    for (const auto& [w, c] : terms_) out.add_term(w.reversed(), c);
    return out;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& rhs) {
    if (rhs.alphabet_ != alphabet_) throw std::invalid_argument("polynomial sum: mixed alphabets");
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& rhs) {
    if (rhs.alphabet_ != alphabet_) throw std::invalid_argument("polynomial sum: mixed alphabets");
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scalar;
    return *this;
}

NcPolynomial operator*(const NcPolynomial& lhs, const NcPolynomial& rhs) {
    if (lhs.alphabet_ != rhs.alphabet_) throw std::invalid_argument("polynomial product: mixed alphabets");
    NcPolynomial out(lhs.alphabet_);
    for (const auto& [wl, cl] : lhs.terms_)
        for (const auto& [wr, cr] : rhs.terms_) out.add_term(concat(wl, wr), cl * cr);
    return out;
}

std::string NcPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += fraction_string(c) + "*[" + word_string(w) + "]";
    }
    return out;
}

}  // namespace ncmops
