#include "mopwalk/rational.hpp"

#include <cctype>

#include "mopwalk/errors.hpp"

namespace mopwalk {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw InvalidParams("empty rational string");
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!ok_int(num) || !ok_int(den))
        throw InvalidParams("not a rational \"num/den\" string: '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw InvalidParams("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rising(const Rational& x, std::uint64_t n) {
    Rational p(1);
    Rational t = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        p *= t;
        t += 1;
    }
    return p;
}

Rational factorial_q(std::uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial_q(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace mopwalk
