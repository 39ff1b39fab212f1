#ifndef TRASDIM_PROFILE_HPP
#define TRASDIM_PROFILE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace trasdim {

// Non-decreasing function from positive integers to positive integers, in
// one of three shapes:
//   Const   x -> c
//   Affine  x -> a*x + b           (a >= 0)
//   Lookup  x -> values[x-1] on {1..N}; the table must be total on the
//                queried domain and queries outside it are rejected.
// Monotonicity and positivity are validated at construction.
class MonotoneFn {
 public:
  static MonotoneFn constant(int c);
  static MonotoneFn affine(int a, int b);
  static MonotoneFn lookup(std::vector<int> values);

  int operator()(int x) const;
  // Largest x the function can be evaluated at; 0 means unbounded.
  int domain_max() const;

  enum class Kind { Const, Affine, Lookup };
  Kind kind() const { return kind_; }
  int const_value() const { return b_; }
  int affine_a() const { return a_; }
  int affine_b() const { return b_; }
  const std::vector<int>& lookup_values() const { return values_; }

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Const;
  int a_ = 0;
  int b_ = 1;
  std::vector<int> values_;
};

// Integral asymptotic-dimension profile (alpha_0, alpha_1, ..., alpha_m):
// a constant first entry and non-decreasing later entries. An instance
// prescribes, for scales r_0 <= r_1 <= ... <= r_m, a decomposition into
// alpha_0 classes handled at scale r_0 plus alpha_i(r_{i-1}) classes handled
// at scale r_i for each i >= 1.
struct APDProfile {
  int alpha0 = 1;
  std::vector<MonotoneFn> alphas;  // alpha_1..alpha_m

  int arity() const { return static_cast<int>(alphas.size()) + 1; }
};

}  // namespace trasdim

#endif
