#include "trasdim/ordinal.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace trasdim {

Ordinal Ordinal::from_coefficients(std::vector<std::uint64_t> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  Ordinal o;
  o.coeffs_ = std::move(coeffs);
  return o;
}

Ordinal Ordinal::nat(std::uint64_t n) { return from_coefficients({n}); }

Ordinal Ordinal::omega() { return from_coefficients({0, 1}); }

Ordinal Ordinal::infinity() {
  Ordinal o;
  o.infinite_ = true;
  return o;
}

std::uint64_t Ordinal::as_nat() const {
  if (!is_nat()) throw std::logic_error("ordinal is not a natural number");
  return coeffs_.empty() ? 0 : coeffs_[0];
}

int Ordinal::degree() const {
  if (infinite_) throw std::logic_error("infinity has no degree");
  return static_cast<int>(coeffs_.size()) - 1;
}

std::uint64_t Ordinal::coeff(int power) const {
  if (infinite_) throw std::logic_error("infinity has no coefficients");
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Ordinal Ordinal::limit_part() const {
  if (infinite_) throw std::logic_error("infinity has no limit part");
  if (coeffs_.empty()) return Ordinal();
  std::vector<std::uint64_t> c = coeffs_;
  c[0] = 0;
  return from_coefficients(std::move(c));
}

std::strong_ordering Ordinal::compare(const Ordinal& other) const {
  if (infinite_ && other.infinite_) return std::strong_ordering::equal;
  if (infinite_) return std::strong_ordering::greater;
  if (other.infinite_) return std::strong_ordering::less;
  if (coeffs_.size() != other.coeffs_.size())
    return coeffs_.size() <=> other.coeffs_.size();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != other.coeffs_[i]) return coeffs_[i] <=> other.coeffs_[i];
  }
  return std::strong_ordering::equal;
}

std::string Ordinal::to_string() const {
  if (infinite_) return "INF";
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeffs_[0];
    } else if (i == 1) {
      out << "w*" << coeffs_[1];
    } else {
      out << "w^" << i << "*" << coeffs_[i];
    }
  }
  return out.str();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (a.is_infinity() || b.is_infinity())
    throw std::invalid_argument("ordinal addition is undefined for INF");
  if (b.is_zero()) return a;
  const int j = b.degree();
  std::vector<std::uint64_t> out(b.coefficients());
  const std::uint64_t aj = a.coeff(j);
  if (out[static_cast<std::size_t>(j)] >
      std::numeric_limits<std::uint64_t>::max() - aj)
    throw std::overflow_error("ordinal coefficient overflow");
  out[static_cast<std::size_t>(j)] += aj;
  for (int i = j + 1; i <= a.degree(); ++i)
    out.push_back(a.coeff(i));
  return Ordinal::from_coefficients(std::move(out));
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t at = 0;
  void skip_ws() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
  }
  bool done() {
    skip_ws();
    return at >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (at < s.size() && s[at] == c) {
      ++at;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    if (at >= s.size() || !std::isdigit(static_cast<unsigned char>(s[at])))
      throw std::invalid_argument("expected number at position " +
                                  std::to_string(at) + " in ordinal literal");
    std::uint64_t v = 0;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(s[at] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw std::invalid_argument("ordinal coefficient overflow");
      v = v * 10 + digit;
      ++at;
    }
    return v;
  }
};

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  if (text.compare(cur.at, 3, "INF") == 0) {
    cur.at += 3;
    if (!cur.done()) throw std::invalid_argument("trailing input after INF");
    return Ordinal::infinity();
  }
  std::vector<std::uint64_t> coeffs;
  std::vector<bool> seen;
  bool any = false;
  do {
    cur.skip_ws();
    std::size_t power = 0;
    std::uint64_t value = 0;
    if (cur.at < text.size() && text[cur.at] == 'w') {
      ++cur.at;
      power = 1;
      if (cur.eat('^')) power = static_cast<std::size_t>(cur.number());
      if (power == 0) throw std::invalid_argument("w^0 is not a valid term");
      value = cur.eat('*') ? cur.number() : 1;
    } else {
      value = cur.number();
    }
    if (coeffs.size() <= power) {
      coeffs.resize(power + 1, 0);
      seen.resize(power + 1, false);
    }
    if (seen[power])
      throw std::invalid_argument("duplicate power w^" + std::to_string(power) +
                                  " in ordinal literal");
    seen[power] = true;
    coeffs[power] = value;
    any = true;
  } while (cur.eat('+'));
  if (!cur.done())
    throw std::invalid_argument("trailing input at position " +
                                std::to_string(cur.at) + " in ordinal literal");
  if (!any) throw std::invalid_argument("empty ordinal literal");
  return Ordinal::from_coefficients(std::move(coeffs));
}

}  // namespace trasdim
