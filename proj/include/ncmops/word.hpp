#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ncmops {

// A word over the alphabet {1..d}: the multi-index of one non-commutative
// monomial x_{u(1)} ... x_{u(k)}. The empty word indexes the unit monomial.
// Words carry their alphabet size so mixed-alphabet operations can be
// rejected early.
class Word {
public:
    explicit Word(int alphabet);                   // the empty word
    Word(int alphabet, std::vector<int> letters);  // every letter in 1..alphabet

    int alphabet() const { return alphabet_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(std::size_t pos) const { return letters_[pos]; }  // 0-based

    Word reversed() const;
    // The suffix starting at 0-based position pos (pos == length gives the
    // empty word).
    Word suffix_from(int pos) const;

    // Degree-lex: shorter words first, equal lengths lexicographically.
    // Alphabets compare first so heterogeneous containers stay coherent.
    std::strong_ordering operator<=>(const Word& other) const;
    bool operator==(const Word& other) const = default;

private:
    int alphabet_;
    std::vector<int> letters_;
};

Word concat(const Word& left, const Word& right);

// All words of length <= max_length, in degree-lex order.
std::vector<Word> enumerate_words(int alphabet, int max_length);

// All words of exactly the given length, in lexicographic order.
std::vector<Word> words_of_length(int alphabet, int length);

// |enumerate_words(alphabet, max_length)|; saturates at 2^62 instead of
// overflowing so callers can test it against a ceiling.
unsigned long long count_words_up_to(int alphabet, int max_length);

// Position of w within words_of_length(w.alphabet(), w.length()).
std::size_t level_index(const Word& w);

// Compact form: letters concatenated ("121") for alphabets up to 9,
// comma-separated ("10,2") beyond; the empty word serializes as "".
std::string word_string(const Word& w);
Word parse_word(int alphabet, const std::string& text);

}  // namespace ncmops
