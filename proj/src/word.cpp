#include "ncmops/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncmops/errors.hpp"

namespace ncmops {

namespace {

void require_alphabet(int alphabet) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

}  // namespace

Word::Word(int alphabet) : alphabet_(alphabet) { require_alphabet(alphabet); }

Word::Word(int alphabet, std::vector<int> letters) : alphabet_(alphabet), letters_(std::move(letters)) {
    require_alphabet(alphabet);
    for (int l : letters_)
        if (l < 1 || l > alphabet_) throw std::invalid_argument("word letter out of range");
}

Word Word::reversed() const {
    std::vector<int> r(letters_.rbegin(), letters_.rend());
    return Word(alphabet_, std::move(r));
}

Word Word::suffix_from(int pos) const {
    if (pos < 0 || pos > length()) throw std::invalid_argument("suffix position out of range");
    return Word(alphabet_, std::vector<int>(letters_.begin() + pos, letters_.end()));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = alphabet_ <=> other.alphabet_; c != 0) return c;
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return letters_ <=> other.letters_;
}

Word concat(const Word& left, const Word& right) {
    if (left.alphabet() != right.alphabet())
        throw std::invalid_argument("concat: mixed alphabets");
    std::vector<int> letters = left.letters();
    letters.insert(letters.end(), right.letters().begin(), right.letters().end());
    return Word(left.alphabet(), std::move(letters));
}

std::vector<Word> words_of_length(int alphabet, int length) {
    require_alphabet(alphabet);
    if (length < 0) throw std::invalid_argument("word length must be >= 0");
    std::vector<Word> level{Word(alphabet)};
    for (int k = 0; k < length; ++k) {
        std::vector<Word> next;
        next.reserve(level.size() * static_cast<std::size_t>(alphabet));
        for (const Word& w : level) {
            for (int i = 1; i <= alphabet; ++i) {
                std::vector<int> letters = w.letters();
                letters.push_back(i);
                next.emplace_back(alphabet, std::move(letters));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Word> enumerate_words(int alphabet, int max_length) {
    require_alphabet(alphabet);
    if (max_length < 0) throw std::invalid_argument("max length must be >= 0");
    std::vector<Word> all;
    for (int k = 0; k <= max_length; ++k) {
        std::vector<Word> level = words_of_length(alphabet, k);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

unsigned long long count_words_up_to(int alphabet, int max_length) {
    require_alphabet(alphabet);
    constexpr unsigned long long cap = 1ull << 62;
    unsigned long long total = 0, level = 1;
    for (int k = 0; k <= max_length; ++k) {
        total += level;
        if (total >= cap) return cap;
        if (level >= cap / static_cast<unsigned long long>(alphabet))
            level = cap;
        else
            level *= static_cast<unsigned long long>(alphabet);
    }
    return total;
}

std::size_t level_index(const Word& w) {
    std::size_t index = 0;
    for (int l : w.letters()) index = index * static_cast<std::size_t>(w.alphabet()) + static_cast<std::size_t>(l - 1);
    return index;
}

std::string word_string(const Word& w) {
    std::string out;
    const bool compact = w.alphabet() <= 9;
    for (int i = 0; i < w.length(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(w.letter(static_cast<std::size_t>(i)));
    }
    return out;
}

Word parse_word(int alphabet, const std::string& text) {
    require_alphabet(alphabet);
    std::vector<int> letters;
    if (alphabet <= 9) {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad word literal: '" + text + "'");
            letters.push_back(c - '0');
        }
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            const std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
            if (piece.empty()) throw ParseError("bad word literal: '" + text + "'");
            int value = 0;
            for (char c : piece) {
                if (c < '0' || c > '9') throw ParseError("bad word literal: '" + text + "'");
                value = value * 10 + (c - '0');
                if (value > alphabet) break;
            }
            letters.push_back(value);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    for (int l : letters)
        if (l < 1 || l > alphabet) throw ParseError("word letter out of range in '" + text + "'");
    return Word(alphabet, std::move(letters));
}

}  // namespace ncmops
