#include "unipart/rational.hpp"

#include "unipart/errors.hpp"

#include <cctype>

namespace unipart {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        fail(errc::bad_input, "malformed rational: \"" + text + "\"");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Int n(num), d(den);
    if (d == 0) fail(errc::bad_input, "zero denominator: \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_int(const Int& value) {
    return value.get_str();
}

} // namespace unipart
