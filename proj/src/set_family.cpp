#include "trasdim/set_family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace trasdim {

namespace {

std::uint64_t ground_mask(int truncation) {
  return truncation >= 64 ? ~0ull : ((1ull << truncation) - 1);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

FinSet FinSet::from_bits(std::uint64_t bits) {
  FinSet s;
  s.bits_ = bits;
  return s;
}

FinSet FinSet::of(std::initializer_list<int> labels) {
  return from_labels(std::vector<int>(labels));
}

FinSet FinSet::from_labels(const std::vector<int>& labels) {
  std::uint64_t bits = 0;
  for (int l : labels) {
    require(l >= 1 && l <= 64, "label out of range: " + std::to_string(l));
    bits |= 1ull << (l - 1);
  }
  return from_bits(bits);
}

FinSet FinSet::interval(int lo, int hi) {
  std::uint64_t bits = 0;
  for (int l = std::max(lo, 1); l <= hi; ++l) bits |= 1ull << (l - 1);
  return from_bits(bits);
}

int FinSet::size() const { return std::popcount(bits_); }

bool FinSet::contains(int label) const {
  return label >= 1 && label <= 64 && (bits_ >> (label - 1)) & 1;
}

int FinSet::min_label() const {
  if (empty()) throw std::logic_error("min of empty set");
  return std::countr_zero(bits_) + 1;
}

int FinSet::max_label() const {
  if (empty()) throw std::logic_error("max of empty set");
  return 64 - std::countl_zero(bits_);
}

std::vector<int> FinSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b;) {
    const int i = std::countr_zero(b);
    out.push_back(i + 1);
    b &= b - 1;
  }
  return out;
}

std::string FinSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int l : labels()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(l);
  }
  return out + "}";
}

bool GroundSet::contains(FinSet s) const {
  return (s.bits() & ~ground_mask(truncation)) == 0;
}

SetFamily SetFamily::explicit_family(GroundSet ground, std::vector<FinSet> members) {
  require(ground.truncation >= 1 && ground.truncation <= 64,
          "ground truncation must be in 1..64");
  std::vector<std::uint64_t> bits;
  bits.reserve(members.size());
  for (FinSet m : members) {
    require(!m.empty(), "family members must be nonempty");
    require(ground.contains(m), "family member " + m.to_string() + " outside ground set");
    bits.push_back(m.bits());
  }
  std::sort(bits.begin(), bits.end());
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  SetFamily f;
  f.ground_ = ground;
  f.members_ = std::move(bits);
  return f;
}

SetFamily SetFamily::oracle_family(GroundSet ground, std::string name, OracleFn fn,
                                   std::map<std::string, std::int64_t> params) {
  require(ground.truncation >= 1 && ground.truncation <= 64,
          "ground truncation must be in 1..64");
  require(static_cast<bool>(fn), "oracle function must be set");
  SetFamily f;
  f.ground_ = ground;
  f.oracle_ = std::move(fn);
  f.oracle_name_ = std::move(name);
  f.oracle_params_ = std::move(params);
  return f;
}

const std::vector<std::uint64_t>& SetFamily::member_bits() const {
  if (!members_) throw std::logic_error("oracle family has no explicit member list");
  return *members_;
}

std::size_t SetFamily::size() const { return member_bits().size(); }

bool SetFamily::contains(FinSet s) const {
  if (s.empty()) return false;
  if (members_) {
    if (!ground_.contains(s)) return false;
    return std::binary_search(members_->begin(), members_->end(), s.bits());
  }
  require(ground_.contains(s),
          "oracle family evaluated outside ground set: " + s.to_string());
  return oracle_(s);
}

FinSet SetFamily::support() const {
  std::uint64_t bits = 0;
  for (std::uint64_t m : member_bits()) bits |= m;
  return FinSet::from_bits(bits);
}

SetFamily derive(const SetFamily& f, FinSet sigma) {
  require(f.ground().contains(sigma), "sigma outside ground set");
  if (sigma.empty()) return f;
  if (f.is_explicit()) {
    std::vector<FinSet> out;
    for (std::uint64_t m : f.member_bits()) {
      if ((m & sigma.bits()) != sigma.bits()) continue;
      const std::uint64_t tau = m & ~sigma.bits();
      if (tau) out.push_back(FinSet::from_bits(tau));
    }
    return SetFamily::explicit_family(f.ground(), std::move(out));
  }
  return SetFamily::oracle_family(
      f.ground(), f.oracle_name() + "^" + sigma.to_string(),
      [f, sigma](FinSet tau) {
        return tau.disjoint_with(sigma) && f.contains(tau.united(sigma));
      },
      f.oracle_params());
}

namespace {

using Members = std::vector<std::uint64_t>;

// Members containing every label of sigma, with sigma removed and empty
// results dropped. Input and output are sorted and unique.
Members derive_members(const Members& members, std::uint64_t sigma) {
  Members out;
  for (std::uint64_t m : members) {
    if ((m & sigma) != sigma) continue;
    const std::uint64_t tau = m & ~sigma;
    if (tau) out.push_back(tau);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t support_bits(const Members& members) {
  std::uint64_t bits = 0;
  for (std::uint64_t m : members) bits |= m;
  return bits;
}

// Memoized on the canonical sorted member list: derived families repeat
// heavily across branches of the recursion.
int ord_impl(const Members& members, std::map<Members, int>& memo) {
  if (members.empty()) return 0;
  if (auto it = memo.find(members); it != memo.end()) return it->second;
  int best = 0;
  for (std::uint64_t s = support_bits(members); s;) {
    const std::uint64_t a = s & (~s + 1);
    s &= s - 1;
    best = std::max(best, ord_impl(derive_members(members, a), memo));
  }
  const int value = 1 + best;
  memo.emplace(members, value);
  return value;
}

void for_each_subset_of_size(const std::vector<int>& labels, int k,
                             const std::function<bool(std::uint64_t)>& visit_returns_stop) {
  const int n = static_cast<int>(labels.size());
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= 1ull << (labels[static_cast<std::size_t>(i)] - 1);
    if (visit_returns_stop(bits)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Ord(members) < alpha for finite-form alpha > 0, by peeling the constant
// term: Ord G < limit + p0 iff Ord G^sigma < limit for all |sigma| = p0, and
// Ord G < p0 (natural) iff every derivation by p0-1 labels is empty. A
// nonzero limit part always dominates the finite rank of an explicit family.
bool strict_less(const Members& members, const Ordinal& alpha) {
  if (!alpha.limit_part().is_zero()) return true;
  const std::uint64_t m = alpha.coeff(0);
  if (m == 0) return false;  // nothing is < 0
  if (m == 1) return members.empty();
  bool ok = true;
  const std::vector<int> sup = FinSet::from_bits(support_bits(members)).labels();
  for_each_subset_of_size(sup, static_cast<int>(m) - 1, [&](std::uint64_t sigma) {
    if (!derive_members(members, sigma).empty()) {
      ok = false;
      return true;
    }
    return false;
  });
  return ok;
}

}  // namespace

int ord(const SetFamily& f) {
  if (!f.is_explicit())
    throw std::invalid_argument("ord requires an explicit family; use ord_bounds");
  std::map<Members, int> memo;
  return ord_impl(f.member_bits(), memo);
}

OrdResult ord_bounds(const SetFamily& f) {
  const SetFamily mat = materialize(f);
  OrdResult r;
  r.value = Ordinal::nat(static_cast<std::uint64_t>(ord(mat)));
  r.exact = f.is_explicit();
  r.truncation = f.ground().truncation;
  return r;
}

SetFamily materialize(const SetFamily& f) {
  if (f.is_explicit()) return f;
  const int t = f.ground().truncation;
  require(t <= 20, "oracle materialization capped at truncation 20");
  std::vector<FinSet> members;
  for (std::uint64_t bits = 1; bits < (1ull << t); ++bits) {
    const FinSet s = FinSet::from_bits(bits);
    if (f.contains(s)) members.push_back(s);
  }
  return SetFamily::explicit_family(f.ground(), std::move(members));
}

SetFamily inclusive_closure(const SetFamily& f) {
  const SetFamily mat = materialize(f);
  std::set<std::uint64_t> closed;
  for (std::uint64_t m : mat.member_bits()) {
    for (std::uint64_t s = m;; s = (s - 1) & m) {
      if (s) closed.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<FinSet> members;
  members.reserve(closed.size());
  for (std::uint64_t b : closed) members.push_back(FinSet::from_bits(b));
  return SetFamily::explicit_family(mat.ground(), std::move(members));
}

bool is_inclusive(const SetFamily& f) {
  const SetFamily mat = materialize(f);
  const auto& members = mat.member_bits();
  for (std::uint64_t m : members) {
    if (std::popcount(m) < 2) continue;
    for (std::uint64_t b = m; b;) {
      const std::uint64_t a = b & (~b + 1);
      b &= b - 1;
      if (!std::binary_search(members.begin(), members.end(), m & ~a)) return false;
    }
  }
  return true;
}

namespace {

bool chain_dfs(const SetFamily& f, std::uint64_t current, int remaining,
               std::vector<int>& labels, std::set<std::uint64_t>& visited) {
  if (remaining == 0) return true;
  const int t = f.ground().truncation;
  for (int a = 1; a <= t; ++a) {
    const std::uint64_t bit = 1ull << (a - 1);
    if (current & bit) continue;
    const std::uint64_t next = current | bit;
    if (!f.contains(FinSet::from_bits(next))) continue;
    if (!visited.insert(next).second) continue;
    labels.push_back(a);
    if (chain_dfs(f, next, remaining - 1, labels, visited)) return true;
    labels.pop_back();
  }
  return false;
}

}  // namespace

ChainWitness chain_witness(const SetFamily& f, int k) {
  require(k >= 0, "chain length must be nonnegative");
  const SetFamily mat = materialize(f);
  require(is_inclusive(mat), "chain_witness requires an inclusive family");
  ChainWitness w;
  if (k == 0) {
    w.found = true;
    return w;
  }
  std::set<std::uint64_t> visited;
  w.found = chain_dfs(mat, 0, k, w.labels, visited);
  if (!w.found) w.labels.clear();
  return w;
}

SetFamily map_family(const SetFamily& f, const std::vector<int>& phi) {
  if (!f.is_explicit())
    throw std::invalid_argument("map_family requires an explicit family");
  const int t = f.ground().truncation;
  require(static_cast<int>(phi.size()) == t,
          "relabeling must have one entry per ground label");
  std::set<int> images;
  int new_t = 1;
  for (int img : phi) {
    require(img >= 1 && img <= 64, "relabeling image out of range");
    require(images.insert(img).second, "relabeling is not injective");
    new_t = std::max(new_t, img);
  }
  std::vector<FinSet> members;
  members.reserve(f.size());
  for (std::uint64_t m : f.member_bits()) {
    std::uint64_t img = 0;
    for (std::uint64_t b = m; b;) {
      const int i = std::countr_zero(b);
      b &= b - 1;
      img |= 1ull << (phi[static_cast<std::size_t>(i)] - 1);
    }
    members.push_back(FinSet::from_bits(img));
  }
  return SetFamily::explicit_family(GroundSet{new_t}, std::move(members));
}

OrdLessReport ord_less_than(const SetFamily& f, const Ordinal& alpha, int p) {
  require(!alpha.is_infinity(), "alpha must be a finite-form ordinal");
  require(!alpha.is_zero(), "alpha must be positive");
  require(p >= 0, "p must be nonnegative");
  const SetFamily mat = materialize(f);
  const auto& members = mat.member_bits();

  OrdLessReport report;
  report.truncation = f.ground().truncation;
  if (!f.is_explicit())
    report.truncated_ord = ord(mat);

  bool ok = true;
  std::optional<FinSet> refuting;
  if (p == 0) {
    ok = strict_less(members, alpha);
    if (!ok) refuting = FinSet();
  } else {
    const std::vector<int> sup = FinSet::from_bits(support_bits(members)).labels();
    for_each_subset_of_size(sup, p, [&](std::uint64_t sigma) {
      if (!strict_less(derive_members(members, sigma), alpha)) {
        ok = false;
        refuting = FinSet::from_bits(sigma);
        return true;
      }
      return false;
    });
  }

  if (!ok) {
    report.status = TriState::Refuted;
    report.refuting_sigma = refuting;
  } else {
    report.status = f.is_explicit() ? TriState::Verified : TriState::Unknown;
  }
  return report;
}

SetFamily builtin_oracle(const std::string& name,
                         const std::map<std::string, std::int64_t>& params, int truncation) {
  if (name == "card_le_min") {
    return SetFamily::oracle_family(
        GroundSet{truncation}, name,
        [](FinSet s) { return s.size() <= s.min_label(); });
  }
  if (name == "card_le_const_k") {
    const auto it = params.find("k");
    require(it != params.end(), "oracle card_le_const_k requires param k");
    const std::int64_t k = it->second;
    return SetFamily::oracle_family(
        GroundSet{truncation}, name,
        [k](FinSet s) { return s.size() <= k; }, params);
  }
  throw std::invalid_argument("unknown oracle family: " + name);
}

}  // namespace trasdim
