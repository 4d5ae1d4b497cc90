#include "edmcp/rational.hpp"

#include <stdexcept>

namespace edmcp {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string s(text);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (num.front() == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::pair<Integer, Integer> square_free_split(const Integer& x) {
    if (x < 0) throw std::invalid_argument("square_free_split: negative input");
    Integer rest = x;
    Integer root = 1;
    Integer free = 1;
    if (rest == 0) return {0, 0};
    for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        int mult = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++mult;
        }
        for (int k = 0; k < mult / 2; ++k) root *= p;
        if (mult % 2 == 1) free *= p;
    }
    free *= rest;
    return {root, free};
}

std::uint64_t isqrt(std::uint64_t a) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    Integer r;
    mpz_sqrt(r.get_mpz_t(), Integer(static_cast<unsigned long>(a)).get_mpz_t());
    return r.get_ui();
}

namespace {

bool squares_into(std::uint64_t a, int parts, std::vector<std::uint64_t>& out) {
    if (a == 0) return true;
    if (parts == 0) return false;
    std::uint64_t top = isqrt(a);
    // A sum of `parts` squares each at most s^2 cannot exceed parts * s^2.
    for (std::uint64_t s = top; s >= 1; --s) {
        if (static_cast<unsigned __int128>(s) * s * static_cast<unsigned>(parts) < a) break;
        out.push_back(s);
        if (squares_into(a - s * s, parts - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::uint64_t> sum_of_squares(std::uint64_t a) {
    std::vector<std::uint64_t> out;
    if (!squares_into(a, 4, out)) throw std::logic_error("four-square decomposition failed");
    return out;
}

}  // namespace edmcp
