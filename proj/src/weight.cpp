#include "mka/weight.hpp"

#include "mka/error.hpp"

#include <cctype>
#include <ostream>

namespace mka {

Weight::Weight(long num, long den) {
    if (den == 0) raise("InvalidWeight", "zero denominator");
    if (num < 0 || den < 0) raise("InvalidWeight", "weights are non-negative");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Weight::Weight(const mpq_class& v) : v_(v) {
    v_.canonicalize();
    if (v_ < 0) raise("InvalidWeight", "weights are non-negative");
}

Weight Weight::parse(const std::string& text) {
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits(num) || !digits(den))
        raise("InvalidWeight", "expected INT or INT/INT, got '" + text + "'");
    mpq_class v{mpz_class(num), mpz_class(den)};
    if (v.get_den() == 0) raise("InvalidWeight", "zero denominator in '" + text + "'");
    v.canonicalize();
    return Weight(v);
}

Weight Weight::operator/(const Weight& o) const {
    if (o.is_zero()) raise("InvalidWeight", "division by zero weight");
    return Weight(mpq_class(v_ / o.v_));
}

std::string Weight::str() const {
    return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

std::string Weight::decimal(int digits) const {
    if (v_ == 0) return "0";
    // Find e with 10^(e-1) <= v < 10^e, then round v * 10^(digits-e) half up.
    int e = 0;
    mpq_class v = v_;
    while (v >= 1) { v /= 10; ++e; }
    while (v < mpq_class(1, 10)) { v *= 10; --e; }
    mpq_class scaled = v_;
    for (int i = 0; i < digits - e; ++i) scaled *= 10;
    for (int i = 0; i < e - digits; ++i) scaled /= 10;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    if (2 * r >= scaled.get_den()) q += 1;
    std::string ds = q.get_str();
    // Rounding can add a digit (e.g. 0.99995 -> 1000... at 4 digits).
    if (static_cast<int>(ds.size()) > digits) { ds.pop_back(); ++e; }
    // Place the decimal point: value = 0.ds * 10^e.
    std::string out;
    if (e <= 0) {
        out = "0." + std::string(-e, '0') + ds;
    } else if (e >= static_cast<int>(ds.size())) {
        out = ds + std::string(e - ds.size(), '0');
    } else {
        out = ds.substr(0, e) + "." + ds.substr(e);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

} // namespace mka
