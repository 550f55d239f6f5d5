#ifndef EDGECASCADE_RATIONAL_HPP
#define EDGECASCADE_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace edgecascade {

// All exact scalar arithmetic runs on canonical GMP rationals:
// gcd(|num|, den)) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const std::string& num, const std::string& den = "1") {
    Rational q(mpz_class(num), mpz_class(den));
    q.canonicalize();
    return q;
}

// Canonical "num/den" rendering; integers print without the "/1".
inline std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat(s);
    return rat(s.substr(0, slash), s.substr(slash + 1));
}

inline double rat_double(const Rational& q) { return q.get_d(); }

// Small deterministic xorshift generator for property tests.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // Uniform-ish rational with small numerator/denominator.
    Rational small_rational(int span = 9) {
        long n = static_cast<long>(next() % (2 * span + 1)) - span;
        long d = static_cast<long>(next() % span) + 1;
        return rat(n, d);
    }
    int small_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace edgecascade

#endif
