#include "trasdim/profile.hpp"

#include <stdexcept>

namespace trasdim {

MonotoneFn MonotoneFn::constant(int c) {
  if (c < 1) throw std::invalid_argument("round function values must be positive");
  MonotoneFn f;
  f.kind_ = Kind::Const;
  f.a_ = 0;
  f.b_ = c;
  return f;
}

MonotoneFn MonotoneFn::affine(int a, int b) {
  if (a < 0) throw std::invalid_argument("affine round function must be non-decreasing");
  if (a + b < 1)
    throw std::invalid_argument("round function values must be positive at x=1");
  MonotoneFn f;
  f.kind_ = Kind::Affine;
  f.a_ = a;
  f.b_ = b;
  return f;
}

MonotoneFn MonotoneFn::lookup(std::vector<int> values) {
  if (values.empty()) throw std::invalid_argument("lookup table must be nonempty");
  int prev = 0;
  for (int v : values) {
    if (v < 1) throw std::invalid_argument("round function values must be positive");
    if (v < prev)
      throw std::invalid_argument("lookup round function must be non-decreasing");
    prev = v;
  }
  MonotoneFn f;
  f.kind_ = Kind::Lookup;
  f.values_ = std::move(values);
  return f;
}

int MonotoneFn::operator()(int x) const {
  switch (kind_) {
    case Kind::Const:
      return b_;
    case Kind::Affine: {
      if (x < 1) throw std::out_of_range("round function argument must be positive");
      const long long v = static_cast<long long>(a_) * x + b_;
      if (v < 1) throw std::out_of_range("round function value must be positive");
      return static_cast<int>(v);
    }
    case Kind::Lookup: {
      if (x < 1) throw std::out_of_range("round function argument must be positive");
      if (x > static_cast<int>(values_.size()))
        throw std::out_of_range("round function argument beyond lookup domain");
      return values_[static_cast<std::size_t>(x - 1)];
    }
  }
  throw std::logic_error("unreachable");
}

int MonotoneFn::domain_max() const {
  return kind_ == Kind::Lookup ? static_cast<int>(values_.size()) : 0;
}

std::string MonotoneFn::to_string() const {
  switch (kind_) {
    case Kind::Const:
      return "const " + std::to_string(b_);
    case Kind::Affine:
      return std::to_string(a_) + "*x + " + std::to_string(b_);
    case Kind::Lookup: {
      std::string out = "table [";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
      }
      return out + "]";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace trasdim
