#include "garside/braid.hpp"

#include <cassert>
#include <stdexcept>

namespace garside {

Braid::Braid(StrandCount n) : n_(n) { require_strands(n); }

Braid Braid::delta_power(StrandCount n, long long k) {
  Braid b(n);
  b.inf_ = k;
  return b;
}

Braid Braid::from_simple(const SimpleBraid& s) {
  return NormalFormBuilder(StrandCount(s.strands())).append(s).build();
}

Braid Braid::from_simples(StrandCount n, std::span<const SimpleBraid> simples) {
  NormalFormBuilder builder(n);
  for (const auto& s : simples) builder.append(s);
  return builder.build();
}

std::strong_ordering operator<=>(const Braid& a, const Braid& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.inf_ <=> b.inf_; c != 0) return c;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                b.factors_.begin(), b.factors_.end());
}

std::size_t BraidHash::operator()(const Braid& b) const noexcept {
  std::size_t h = static_cast<std::size_t>(b.strands()) * 0x9e3779b97f4a7c15ull ^
                  static_cast<std::size_t>(b.inf());
  SimpleBraidHash sh;
  for (const auto& f : b.factors()) h = (h ^ sh(f)) * 0x100000001b3ull;
  return h;
}

NormalFormBuilder::NormalFormBuilder(StrandCount n) : value_(n) {}

NormalFormBuilder::NormalFormBuilder(Braid start) : value_(std::move(start)) {}

NormalFormBuilder& NormalFormBuilder::append_delta(long long power) {
  value_.inf_ += power;
  if (power % 2 != 0) {
    for (auto& f : value_.factors_) f = tau(f);
  }
  return *this;
}

NormalFormBuilder& NormalFormBuilder::append(const SimpleBraid& s) {
  if (s.strands() != value_.n_) throw std::invalid_argument("strand counts differ");
  if (s.is_identity()) return *this;
  if (s.is_delta()) return append_delta(1);

  auto& f = value_.factors_;
  f.push_back(s);
  for (std::size_t j = f.size() - 1; j > 0; --j) {
    WeightedPair p = left_weight_pair(f[j - 1], f[j]);
    if (p.first == f[j - 1]) break;
    f[j - 1] = p.first;
    f[j] = p.second;
  }
  while (!f.empty() && f.back().is_identity()) f.pop_back();
  std::size_t deltas = 0;
  while (deltas < f.size() && f[deltas].is_delta()) ++deltas;
  if (deltas > 0) {
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(deltas));
    value_.inf_ += static_cast<long long>(deltas);
  }
#ifndef NDEBUG
  for (std::size_t j = 0; j < f.size(); ++j) {
    assert(!f[j].is_identity() && !f[j].is_delta());
    if (j + 1 < f.size()) assert(is_left_weighted(f[j], f[j + 1]));
  }
#endif
  return *this;
}

NormalFormBuilder& NormalFormBuilder::append(const Braid& b) {
  if (b.strands() != value_.n_) throw std::invalid_argument("strand counts differ");
  append_delta(b.inf());
  for (const auto& f : b.factors()) append(f);
  return *this;
}

NormalFormBuilder& NormalFormBuilder::append_letter(int letter) {
  const int n = value_.n_;
  if (letter == 0 || letter >= n || -letter >= n) {
    throw LetterOutOfRange("letter " + std::to_string(letter) + " out of range for " +
                           std::to_string(n) + " strands");
  }
  if (letter > 0) return append(SimpleBraid::generator(StrandCount(n), letter));
  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1})
  append_delta(-1);
  return append(left_complement(SimpleBraid::generator(StrandCount(n), -letter)));
}

Braid NormalFormBuilder::build() const { return value_; }

Braid normal_form(StrandCount n, std::span<const int> word) {
  NormalFormBuilder builder(n);
  for (int letter : word) builder.append_letter(letter);
  return builder.build();
}

Braid multiply(const Braid& x, const Braid& y) {
  return NormalFormBuilder(x).append(y).build();
}

Braid inverse(const Braid& x) {
  // (Delta^k x_1 ... x_l)^{-1} = d(x_l) Delta^{-1} ... d(x_1) Delta^{-1} Delta^{-k}
  NormalFormBuilder builder(StrandCount(x.strands()));
  const auto& f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    builder.append(right_complement(*it));
    builder.append_delta(-1);
  }
  builder.append_delta(-x.inf());
  return builder.build();
}

Braid power(const Braid& x, int exponent) {
  const Braid base = exponent < 0 ? inverse(x) : x;
  NormalFormBuilder builder(StrandCount(x.strands()));
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) builder.append(base);
  return builder.build();
}

Braid tau_braid(const Braid& x) {
  return NormalFormBuilder(StrandCount(x.strands()))
      .append_delta(-1)
      .append(x)
      .append_delta(1)
      .build();
}

Braid conjugate(const Braid& x, const Braid& c) {
  return NormalFormBuilder(inverse(c)).append(x).append(c).build();
}

Braid conjugate(const Braid& x, const SimpleBraid& c) {
  // c^{-1} = d(c) Delta^{-1}
  NormalFormBuilder builder(StrandCount(x.strands()));
  builder.append(right_complement(c));
  builder.append_delta(-1);
  builder.append(x);
  builder.append(c);
  return builder.build();
}

bool is_rigid(const Braid& x) {
  if (x.canonical_length() == 0) return false;
  const SimpleBraid first = tau_power(x.factors().front(), x.inf());
  return is_left_weighted(x.factors().back(), first);
}

SignedWord to_word(const Braid& x) {
  const int n = x.strands();
  const PositiveWord delta_word = SimpleBraid::delta(StrandCount(n)).word();
  SignedWord w;
  const long long k = x.inf();
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
    if (k > 0) {
      w.insert(w.end(), delta_word.begin(), delta_word.end());
    } else {
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) w.push_back(-*it);
    }
  }
  for (const auto& f : x.factors()) {
    const PositiveWord fw = f.word();
    w.insert(w.end(), fw.begin(), fw.end());
  }
  return w;
}

IndexSet starting_set(const Braid& x) {
  if (x.inf() < 0) throw std::invalid_argument("starting set requires a positive braid");
  if (x.inf() > 0) return SimpleBraid::delta(StrandCount(x.strands())).starting_set();
  if (x.factors().empty()) return {};
  return x.factors().front().starting_set();
}

}  // namespace garside
