#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

/// Largest strand count supported by the fixed-capacity permutation storage.
inline constexpr int kMaxStrands = 32;

class NotReduced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LetterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of strands of a braid group. Core operations need at least two.
struct StrandCount {
  int value;

  constexpr explicit StrandCount(int n) : value(n) {}
  constexpr operator int() const { return value; }
};

void require_strands(int n);

/// A positive word: generator indices i, each letter standing for sigma_i.
using PositiveWord = std::vector<int>;

/// A signed word: i stands for sigma_i, -i for its inverse.
using SignedWord = std::vector<int>;

/// Subset of the generator indices {1, ..., n-1}, stored as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<int> members);

  static IndexSet from_mask(std::uint32_t mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  void insert(int i) { mask_ |= (1u << i); }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool includes(const IndexSet& other) const { return (other.mask_ & ~mask_) == 0; }
  IndexSet intersect(const IndexSet& other) const { return from_mask(mask_ & other.mask_); }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> members() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::uint32_t mask_ = 0;
};

std::string to_string(const IndexSet& s);

/// A permutation braid on n strands, stored as its permutation: strand i
/// (1-based) ends at position image(i). Letters compose left to right.
class SimpleBraid {
 public:
  SimpleBraid() = default;

  static SimpleBraid identity(StrandCount n);
  static SimpleBraid delta(StrandCount n);
  static SimpleBraid generator(StrandCount n, int i);
  /// Images given 1-based; throws std::invalid_argument unless a bijection.
  static SimpleBraid from_images(std::span<const int> images);

  int strands() const { return n_; }
  int image(int strand) const { return perm_[strand - 1] + 1; }
  int preimage(int position) const;
  std::vector<int> images() const;

  bool is_identity() const;
  bool is_delta() const;
  int length() const;  // inversion count

  /// Strands i, i+1 cross (sigma_i is a prefix).
  bool starts_with(int i) const { return perm_[i - 1] > perm_[i]; }
  bool ends_with(int i) const;
  IndexSet starting_set() const;
  IndexSet finishing_set() const;

  /// Canonical reduced word: repeatedly strips the smallest starting letter.
  PositiveWord word() const;

  /// Permutation of s * sigma_i, without checking that it stays simple.
  SimpleBraid times_generator(int i) const;
  /// Strand currently at 1-based position p.
  int strand_at(int position) const { return preimage(position); }

  /// Raw access for kernels: 0-based images.
  std::uint8_t raw(int i) const { return perm_[i]; }

  friend bool operator==(const SimpleBraid& a, const SimpleBraid& b);
  friend std::strong_ordering operator<=>(const SimpleBraid& a, const SimpleBraid& b);

 private:
  friend struct SimplePermOps;
  std::array<std::uint8_t, kMaxStrands> perm_{};
  std::uint8_t n_ = 0;
};

struct SimpleBraidHash {
  std::size_t operator()(const SimpleBraid& s) const noexcept;
};

/// Builds the permutation braid of a reduced positive word. Throws NotReduced
/// when some pair of strands crosses twice.
SimpleBraid simple_from_word(StrandCount n, std::span<const int> word);

struct BoundarySets {
  IndexSet starting;
  IndexSet finishing;
};

BoundarySets boundary_sets(const SimpleBraid& s);

/// a is a prefix of b in the positive monoid.
bool is_prefix(const SimpleBraid& a, const SimpleBraid& b);
/// a is a suffix of b.
bool is_suffix(const SimpleBraid& a, const SimpleBraid& b);

SimpleBraid meet(const SimpleBraid& a, const SimpleBraid& b);
SimpleBraid suffix_meet(const SimpleBraid& a, const SimpleBraid& b);
SimpleBraid join(const SimpleBraid& a, const SimpleBraid& b);

/// d(s) = s^{-1} Delta, so that s * d(s) = Delta.
SimpleBraid right_complement(const SimpleBraid& s);
/// Delta s^{-1}, so that left_complement(s) * s = Delta.
SimpleBraid left_complement(const SimpleBraid& s);
/// Conjugation by Delta: pi -> w0 pi w0.
SimpleBraid tau(const SimpleBraid& s);
SimpleBraid tau_power(const SimpleBraid& s, long long k);

/// Product a*b when it is again a permutation braid (lengths add).
bool product_is_simple(const SimpleBraid& a, const SimpleBraid& b);
/// Throws std::logic_error if the product is not simple.
SimpleBraid simple_product(const SimpleBraid& a, const SimpleBraid& b);
/// a^{-1} b for a prefix a of b.
SimpleBraid left_quotient(const SimpleBraid& a, const SimpleBraid& b);
/// a b^{-1} for a suffix b of a.
SimpleBraid right_quotient(const SimpleBraid& a, const SimpleBraid& b);

struct WeightedPair {
  SimpleBraid first;
  SimpleBraid second;
};

/// Rewrites u*v so that F(first) contains S(second), preserving the product.
WeightedPair left_weight_pair(const SimpleBraid& u, const SimpleBraid& v);
bool is_left_weighted(const SimpleBraid& u, const SimpleBraid& v);

/// Every permutation braid on n strands, in lexicographic order of images.
std::vector<SimpleBraid> all_simples(StrandCount n);

}  // namespace garside
