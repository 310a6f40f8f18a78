#include "dtop/chain.hpp"

#include <sstream>

#include "dtop/error.hpp"

namespace dtop {

Chain Chain::single(int dim, std::size_t generator, Integer coeff) {
  Chain c(dim);
  c.add(generator, coeff);
  return c;
}

Integer Chain::coeff(std::size_t generator) const {
  auto it = terms_.find(generator);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool Chain::non_negative() const {
  for (const auto& [g, k] : terms_) {
    if (k < 0) return false;
  }
  return true;
}

Integer Chain::augmentation() const {
  Integer sum = 0;
  for (const auto& [g, k] : terms_) sum += k;
  return sum;
}

void Chain::add(std::size_t generator, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(generator, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.empty()) return *this;
  if (empty()) dim_ = other.dim_;
  if (other.dim_ != dim_) {
    throw Error("dimension-mismatch", "adding chains of dimension " +
                                          std::to_string(dim_) + " and " +
                                          std::to_string(other.dim_));
  }
  for (const auto& [g, k] : other.terms_) add(g, k);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.empty()) return *this;
  if (empty()) dim_ = other.dim_;
  if (other.dim_ != dim_) {
    throw Error("dimension-mismatch", "subtracting chains of dimension " +
                                          std::to_string(dim_) + " and " +
                                          std::to_string(other.dim_));
  }
  for (const auto& [g, k] : other.terms_) add(g, -k);
  return *this;
}

Chain& Chain::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= k;
  return *this;
}

std::pair<Chain, Chain> pos_neg_parts(const Chain& c) {
  Chain pos(c.dim());
  Chain neg(c.dim());
  for (const auto& [g, k] : c.terms()) {
    if (k > 0) {
      pos.add(g, k);
    } else {
      neg.add(g, -k);
    }
  }
  return {std::move(pos), std::move(neg)};
}

std::string to_string(const Chain& c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, k] : c.terms()) {
    Integer mag = k < 0 ? Integer(-k) : k;
    if (first) {
      if (k < 0) out << "-";
    } else {
      out << (k < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << "*";
    out << "g" << g;
    first = false;
  }
  return out.str();
}

}  // namespace dtop
