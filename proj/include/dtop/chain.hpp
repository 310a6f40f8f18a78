#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace dtop {

using Integer = boost::multiprecision::cpp_int;

enum class Sign { minus, plus };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::minus ? Sign::plus : Sign::minus;
}

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::plus : Sign::minus;
}

/// The tensor sign rule: + for even n, - for odd n.
constexpr Sign epsilon(int n) noexcept {
  return n % 2 == 0 ? Sign::plus : Sign::minus;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::minus ? '-' : '+'; }

/// A generator of a graded complex is addressed by its dimension and its
/// position among the generators of that dimension.
struct GenId {
  int dim = 0;
  std::size_t index = 0;

  friend bool operator==(const GenId&, const GenId&) = default;
  friend auto operator<=>(const GenId&, const GenId&) = default;
};

/// Integer formal sum of generators of a single dimension. Zero coefficients
/// are never stored.
class Chain {
 public:
  using Terms = std::map<std::size_t, Integer>;

  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}

  static Chain single(int dim, std::size_t generator, Integer coeff = 1);

  int dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }

  Integer coeff(std::size_t generator) const;
  bool non_negative() const;
  /// Sum of all coefficients.
  Integer augmentation() const;

  void add(std::size_t generator, const Integer& coeff);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Integer& k);

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& k, Chain a) { return a *= k; }
  friend Chain operator-(Chain a) { return a *= -1; }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int dim_ = 0;
  Terms terms_;
};

/// Unique decomposition c = pos - neg with pos, neg non-negative and of
/// disjoint support. Returned as (pos, neg).
std::pair<Chain, Chain> pos_neg_parts(const Chain& c);

/// Debug rendering "2*g3 - g5" using generator indices.
std::string to_string(const Chain& c);

}  // namespace dtop
