#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace steiner {

/// Error type for all precondition and input failures in this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation refuses to run because its estimated cost
/// exceeds the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t estimate, std::uint64_t limit)
      : Error(what), estimate(estimate), limit(limit) {}
  std::uint64_t estimate;
  std::uint64_t limit;
};

/// Exact rational number with int64 numerator/denominator, always reduced,
/// denominator > 0. Comparisons cross-multiply in 128-bit, so no overflow
/// for any value this library produces.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  static Rational integer(std::int64_t v) { return Rational(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational operator*(const Rational& o) const {
    // Reduce cross factors first so intermediates stay in range.
    const std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
  }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }

  /// Renders "num/den", or just "num" when the value is integral.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "NUM/DEN" or a bare integer. Floating-point literals are
  /// rejected; callers that want exactness must say what they mean.
  static Rational parse(const std::string& text) {
    const auto bad = [&] { return Error("Rational: cannot parse '" + text + "' (want NUM/DEN)"); };
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw bad();
        return Rational(v, 1);
      }
      const std::int64_t n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw bad();
      const std::int64_t d = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw bad();
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace steiner
