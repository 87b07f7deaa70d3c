#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "garside/simple_braid.hpp"

namespace garside {

/// A braid in left canonical form: Delta^inf * f_1 * ... * f_l with every
/// factor a proper simple (neither identity nor Delta) and every adjacent
/// pair left-weighted. Instances are only produced already normalized.
class Braid {
 public:
  explicit Braid(StrandCount n);

  static Braid delta_power(StrandCount n, long long k);
  static Braid from_simple(const SimpleBraid& s);
  /// Product of the given simples, normalized.
  static Braid from_simples(StrandCount n, std::span<const SimpleBraid> simples);

  int strands() const { return n_; }
  long long inf() const { return inf_; }
  long long sup() const { return inf_ + static_cast<long long>(factors_.size()); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<SimpleBraid>& factors() const { return factors_; }
  const SimpleBraid& factor(int i) const { return factors_.at(i); }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  /// Positive and of infimum 0 or more.
  bool is_positive() const { return inf_ >= 0; }

  friend bool operator==(const Braid&, const Braid&) = default;
  friend std::strong_ordering operator<=>(const Braid& a, const Braid& b);

 private:
  friend class NormalFormBuilder;
  int n_;
  long long inf_ = 0;
  std::vector<SimpleBraid> factors_;
};

struct BraidHash {
  std::size_t operator()(const Braid& b) const noexcept;
};

/// Incremental left canonical form: the value accumulated so far is always
/// held normalized, and right multiplication by a simple is a single
/// right-to-left sweep of local left-weighting.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(StrandCount n);
  explicit NormalFormBuilder(Braid start);

  NormalFormBuilder& append(const SimpleBraid& s);
  NormalFormBuilder& append_delta(long long power);
  NormalFormBuilder& append(const Braid& b);
  NormalFormBuilder& append_letter(int signed_letter);

  Braid build() const;

 private:
  Braid value_;
};

/// Left canonical form of a signed word (i = sigma_i, -i = sigma_i^{-1}).
/// Throws LetterOutOfRange for |letter| outside [1, n-1] or zero.
Braid normal_form(StrandCount n, std::span<const int> word);

Braid multiply(const Braid& x, const Braid& y);
Braid inverse(const Braid& x);
Braid power(const Braid& x, int exponent);
/// Conjugation by Delta: applies tau to every factor.
Braid tau_braid(const Braid& x);
/// c^{-1} x c.
Braid conjugate(const Braid& x, const Braid& c);
Braid conjugate(const Braid& x, const SimpleBraid& c);

/// Rigid: at least one factor and the wrap-around pair
/// (f_l, tau^inf(f_1)) is left-weighted.
bool is_rigid(const Braid& x);

/// A signed word representing x (Delta powers expanded as half-twist words).
SignedWord to_word(const Braid& x);

/// For a braid with inf >= 0: S of its positive value, i.e. the set of i
/// with sigma_i a prefix.
IndexSet starting_set(const Braid& x);

}  // namespace garside
