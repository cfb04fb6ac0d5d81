#include "x0/types.hpp"

#include <regex>

namespace x0 {

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int parse_int(const std::string& s) {
    static const std::regex re(R"(^\s*[+-]?\d+\s*$)");
    if (!std::regex_match(s, re)) throw std::invalid_argument("not an integer: " + s);
    std::string t = s;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Int(t);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

Int floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Rat frac(const Rat& r) { return r - Rat(floor(r)); }

}  // namespace x0
