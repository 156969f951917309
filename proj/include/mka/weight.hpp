#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace mka {

/// Non-negative exact rational, kept canonical (lowest terms, positive
/// denominator). The arithmetic the automata need: +, *, /, comparisons.
class Weight {
public:
    Weight() : v_(0) {}
    Weight(long num, long den = 1);
    explicit Weight(const mpq_class& v);

    static Weight zero() { return Weight(); }
    static Weight one() { return Weight(1); }

    /// Parse "p", "p/q" (decimal digits, q > 0). Throws InvalidWeight.
    static Weight parse(const std::string& text);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Weight operator+(const Weight& o) const { return Weight(mpq_class(v_ + o.v_)); }
    Weight operator*(const Weight& o) const { return Weight(mpq_class(v_ * o.v_)); }
    Weight operator/(const Weight& o) const;
    Weight& operator+=(const Weight& o) { v_ += o.v_; return *this; }

    bool operator==(const Weight& o) const { return v_ == o.v_; }
    bool operator!=(const Weight& o) const { return v_ != o.v_; }
    bool operator<(const Weight& o) const { return v_ < o.v_; }
    bool operator<=(const Weight& o) const { return v_ <= o.v_; }
    bool operator>(const Weight& o) const { return v_ > o.v_; }
    bool operator>=(const Weight& o) const { return v_ >= o.v_; }

    /// "p/q", or just "p" for integers.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    /// Decimal rendering with `digits` significant digits, round half up
    /// (e.g. 23/48 with 10 digits -> "0.4791666667"). Value must be >= 0.
    std::string decimal(int digits = 10) const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

} // namespace mka
