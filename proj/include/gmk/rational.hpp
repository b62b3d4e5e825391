#ifndef GMK_RATIONAL_HPP
#define GMK_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gmk {

// Exact rational in [0,1], kept in lowest terms with positive denominator.
// All Goedel truth values in the toolkit are of this type; no floating
// point is used anywhere.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  explicit Rational(std::int64_t num) : Rational(num, 1) {}
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num < 0 || num > den) throw std::invalid_argument("Rational: value outside [0,1]");
    num_ = num;
    den_ = den;
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }
  bool is_crisp() const { return is_zero() || is_one(); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    // values stay tiny (chain denominators), so the product fits easily
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q", "0", "1" or a bare integer numerator.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        std::int64_t n = std::stoll(s);
        return Rational(n, 1);
      }
      std::int64_t n = std::stoll(s.substr(0, slash));
      std::int64_t d = std::stoll(s.substr(slash + 1));
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

private:
  std::int64_t num_;
  std::int64_t den_;
};

// Goedel connectives on [0,1]: min, max and the residuum of min.
inline Rational godel_and(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational godel_or(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational godel_implies(const Rational& a, const Rational& b) {
  return a <= b ? Rational::one() : b;
}
inline Rational godel_not(const Rational& a) { return godel_implies(a, Rational::zero()); }

} // namespace gmk

#endif
