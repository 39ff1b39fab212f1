#ifndef TRASDIM_ORDINAL_HPP
#define TRASDIM_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace trasdim {

// Ordinal below w^w in Cantor normal form, plus a distinguished infinity
// marker used when an ordinal bound does not exist.
//
// The coefficient vector (c_0, c_1, ..., c_k) denotes
//   w^k * c_k + ... + w * c_1 + c_0.
// Canonical form: no trailing zero coefficients; the zero ordinal has an
// empty vector. Values are immutable.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  // Builds from coefficients indexed by power of w; canonicalizes.
  static Ordinal from_coefficients(std::vector<std::uint64_t> coeffs);
  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();  // w
  static Ordinal infinity();

  bool is_infinity() const { return infinite_; }
  bool is_zero() const { return !infinite_ && coeffs_.empty(); }
  // True when the value is a natural number (possibly zero).
  bool is_nat() const { return !infinite_ && coeffs_.size() <= 1; }
  std::uint64_t as_nat() const;  // requires is_nat()

  // Largest power of w with a nonzero coefficient; -1 for zero.
  // Requires a finite-form value.
  int degree() const;
  std::uint64_t coeff(int power) const;  // 0 beyond degree
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

  // Value with the constant term removed: w^k*c_k + ... + w*c_1.
  Ordinal limit_part() const;

  std::strong_ordering compare(const Ordinal& other) const;
  bool operator==(const Ordinal& other) const = default;
  bool operator<(const Ordinal& o) const { return compare(o) == std::strong_ordering::less; }
  bool operator<=(const Ordinal& o) const { return compare(o) != std::strong_ordering::greater; }
  bool operator>(const Ordinal& o) const { return compare(o) == std::strong_ordering::greater; }
  bool operator>=(const Ordinal& o) const { return compare(o) != std::strong_ordering::less; }

  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coeffs_;
  bool infinite_ = false;
};

// Ordinal addition in Cantor normal form: terms of the left operand below
// the leading power of the right operand are absorbed. Errors on infinity.
Ordinal add(const Ordinal& a, const Ordinal& b);

// Parses the rendering produced by Ordinal::to_string, e.g.
// "w^2*1 + w*3 + 4", "w", "w^3", "0", "INF". Each power may appear once.
// Throws std::invalid_argument on malformed input.
Ordinal parse_ordinal(const std::string& text);

}  // namespace trasdim

#endif
