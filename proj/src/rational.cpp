#include "ncmops/rational.hpp"

#include <stdexcept>

#include "ncmops/errors.hpp"

namespace ncmops {

Rat make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_integer = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = allow_sign && (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_integer(num, true) || !is_integer(den, false))
        throw ParseError("bad rational literal: '" + text + "'");
    const std::string unsigned_num = num[0] == '+' ? num.substr(1) : num;
    Rat r;
    if (r.set_str(unsigned_num + "/" + den, 10) != 0 || r.get_den() == 0)
        throw ParseError("bad rational literal: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string fraction_string(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ncmops
