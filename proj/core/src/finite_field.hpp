#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nacoh::detail {

// GF(p^k) for the small fields needed to realize the catalog's linear groups.
// Elements are encoded as integers 0..q-1 whose base-p digits are the
// coefficients of a polynomial in a primitive root x; 0 and 1 are the
// additive and multiplicative identities.
class FiniteField {
 public:
  FiniteField(std::size_t characteristic, std::size_t degree)
      : p_(characteristic), k_(degree), q_(1) {
    for (std::size_t i = 0; i < k_; ++i) q_ *= p_;
    build_addition();
    find_primitive_modulus();
  }

  std::size_t size() const noexcept { return q_; }
  std::size_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  int pow(int a, std::size_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
  }
  // Additive basis 1, x, ..., x^{k-1}.
  std::vector<int> additive_basis() const {
    std::vector<int> basis;
    int value = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      basis.push_back(value);
      value *= static_cast<int>(p_);
    }
    return basis;
  }

 private:
  void build_addition() {
    add_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    for (std::size_t a = 0; a < q_; ++a) {
      for (std::size_t b = 0; b < q_; ++b) {
        std::size_t x = a, y = b, out = 0, place = 1;
        for (std::size_t i = 0; i < k_; ++i) {
          out += ((x % p_ + y % p_) % p_) * place;
          x /= p_;
          y /= p_;
          place *= p_;
        }
        add_[a * q_ + b] = static_cast<int>(out);
        if (out == 0) neg_[a] = static_cast<int>(b);
      }
    }
  }

  // Multiplies an encoded polynomial by x modulo x^k - (tail), where tail is
  // the encoded low-degree part of the reduction.
  int times_x(int value, int tail) const {
    const auto top = static_cast<std::size_t>(value) / (q_ / p_);
    const auto shifted = static_cast<int>((static_cast<std::size_t>(value) % (q_ / p_)) * p_);
    int result = shifted;
    for (std::size_t i = 0; i < top; ++i) result = add(result, tail);
    return result;
  }

  // Searches reduction tails until x has multiplicative order q-1, which
  // certifies both irreducibility and primitivity of the modulus.
  void find_primitive_modulus() {
    for (std::size_t tail = 1; tail < q_; ++tail) {
      std::vector<int> powers;
      powers.reserve(q_ - 1);
      int value = 1;
      bool ok = true;
      for (std::size_t e = 0; e < q_ - 1; ++e) {
        if (e > 0 && value == 1) {
          ok = false;
          break;
        }
        powers.push_back(value);
        value = (k_ == 1) ? static_cast<int>((static_cast<std::size_t>(value) * tail) % p_)
                          : times_x(value, static_cast<int>(tail));
        if (value == 0) {
          ok = false;
          break;
        }
      }
      if (!ok || value != 1) continue;
      exp_ = std::move(powers);
      log_.assign(q_, 0);
      for (std::size_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = static_cast<int>(e);
      return;
    }
    throw std::logic_error("no primitive modulus found");
  }

  std::size_t p_, k_, q_;
  std::vector<int> add_, neg_, exp_, log_;
};

}  // namespace nacoh::detail
