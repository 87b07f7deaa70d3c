#pragma once

// Independent reference computations for the tests. Nothing here calls the
// lattice, normal form or conjugacy routines under test except where noted.

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"
#include "garside/simple_braid.hpp"

namespace oracle {

using garside::Braid;
using garside::SimpleBraid;
using garside::StrandCount;

using Perm = std::vector<int>;  // 0-based images

inline Perm perm_of(const SimpleBraid& s) {
  Perm p(s.strands());
  for (int i = 0; i < s.strands(); ++i) p[i] = s.raw(i);
  return p;
}

inline int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

// Left-to-right product: strand i goes to a[i], then to b[a[i]].
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

/// a is a left divisor of b: b = a c with lengths adding.
inline bool divides_left(const Perm& a, const Perm& b) {
  return inversions(a) + inversions(compose(invert(a), b)) == inversions(b);
}

inline bool divides_right(const Perm& a, const Perm& b) {
  return inversions(compose(b, invert(a))) + inversions(a) == inversions(b);
}

inline Perm transposition(int n, int i) {  // sigma_i, 1-based index
  Perm p(n);
  for (int j = 0; j < n; ++j) p[j] = j;
  std::swap(p[i - 1], p[i]);
  return p;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// The unique maximal common left divisor, found by scanning all of S_n.
inline Perm brute_meet(const Perm& a, const Perm& b, const std::vector<Perm>& all) {
  const Perm* best = nullptr;
  for (const auto& c : all) {
    if (divides_left(c, a) && divides_left(c, b) &&
        (!best || inversions(c) > inversions(*best))) {
      best = &c;
    }
  }
  return *best;
}

inline Perm brute_join(const Perm& a, const Perm& b, const std::vector<Perm>& all) {
  const Perm* best = nullptr;
  for (const auto& c : all) {
    if (divides_left(a, c) && divides_left(b, c) &&
        (!best || inversions(c) < inversions(*best))) {
      best = &c;
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Words in the free group on x_1..x_n, and the Artin action of the braid group
// on them. The action is faithful, so two braid words are equal exactly when
// their automorphisms agree.

using FreeWord = std::vector<int>;  // j for x_j, -j for its inverse

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

using Automorphism = std::vector<FreeWord>;  // image of x_1..x_n

inline Automorphism identity_automorphism(int n) {
  Automorphism a(n);
  for (int j = 0; j < n; ++j) a[j] = {j + 1};
  return a;
}

inline FreeWord substitute(const FreeWord& w, const Automorphism& images) {
  FreeWord out;
  for (int letter : w) {
    const FreeWord& img = images[std::abs(letter) - 1];
    if (letter > 0) {
      for (int l : img) push_reduced(out, l);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return out;
}

inline Automorphism letter_automorphism(int n, int letter) {
  Automorphism a = identity_automorphism(n);
  const int i = std::abs(letter);
  if (letter > 0) {
    a[i - 1] = {i, i + 1, -i};
    a[i] = {i};
  } else {
    a[i - 1] = {i + 1};
    a[i] = {-(i + 1), i, i + 1};
  }
  return a;
}

/// Automorphism of a signed braid word; returns false if an image exceeds
/// max_length letters.
inline bool artin_action(int n, const std::vector<int>& word, Automorphism& out,
                         std::size_t max_length = 200000) {
  out = identity_automorphism(n);
  for (int letter : word) {
    const Automorphism step = letter_automorphism(n, letter);
    for (auto& img : out) {
      img = substitute(img, step);
      if (img.size() > max_length) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Positive words: the class of all positive words equal to a given one, by
// closing under the Artin relations (which preserve length). Two positive
// words are equal in the group exactly when their classes coincide.

using Word = std::vector<int>;

inline std::vector<Word> relation_neighbours(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::abs(w[i] - w[i + 1]) > 1) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      Word v = w;
      v[i] = v[i + 2] = w[i + 1];
      v[i + 1] = w[i];
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline std::set<Word> positive_class(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word v = queue.front();
    queue.pop_front();
    for (auto& u : relation_neighbours(v)) {
      if (seen.insert(u).second) queue.push_back(std::move(u));
    }
  }
  return seen;
}

/// Largest k such that the k-fold half twist left-divides the positive word.
inline int positive_inf(int n, const Word& w) {
  Word delta;
  for (int i = n - 1; i >= 1; --i)
    for (int j = 1; j <= i; ++j) delta.push_back(j);
  const std::set<Word> cls = positive_class(w);
  int k = 0;
  while (true) {
    const std::size_t len = delta.size() * static_cast<std::size_t>(k + 1);
    if (len > w.size()) return k;
    const bool found = std::any_of(cls.begin(), cls.end(), [&](const Word& v) {
      for (std::size_t i = 0; i < len; ++i)
        if (v[i] != delta[i % delta.size()]) return false;
      return true;
    });
    if (!found) return k;
    ++k;
  }
}

// ---------------------------------------------------------------------------
// Super summit bounds by closing the conjugacy class under conjugation by
// every simple element and by Delta, restarting from any element that beats the
// current bounds. Uses the library's conjugate() for the group arithmetic only.

struct SummitBounds {
  long long inf_s;
  long long sup_s;
};

inline SummitBounds brute_summit(const Braid& x, std::size_t max_nodes = 200000) {
  const int n = x.strands();
  const auto simples = garside::all_simples(StrandCount(n));
  long long lo = x.inf(), hi = x.sup();
  Braid start = x;
  while (true) {
    std::set<Braid> seen{start};
    std::deque<Braid> queue{start};
    bool improved = false;
    while (!queue.empty() && !improved) {
      const Braid y = queue.front();
      queue.pop_front();
      for (const auto& s : simples) {
        Braid z = garside::conjugate(y, s);
        if (z.inf() > lo || z.sup() < hi) {
          lo = std::max(lo, z.inf());
          hi = std::min(hi, z.sup());
          start = z;
          improved = true;
          break;
        }
        if (z.inf() == lo && z.sup() == hi && seen.insert(z).second) {
          if (seen.size() > max_nodes) return {lo, hi};
          queue.push_back(std::move(z));
        }
      }
    }
    if (!improved) return {lo, hi};
  }
}

// ---------------------------------------------------------------------------

// Random Artin relation rewrite applied in place; returns false if none applies.
inline bool rewrite_once(std::vector<int>& word, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, int>> moves;  // (index, kind)
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == -word[i + 1]) moves.push_back({i, 2});
    if (std::abs(std::abs(word[i]) - std::abs(word[i + 1])) > 1) moves.push_back({i, 0});
    if (i + 2 < word.size() && word[i] == word[i + 2] && word[i] * word[i + 1] > 0 &&
        std::abs(std::abs(word[i]) - std::abs(word[i + 1])) == 1) {
      moves.push_back({i, 1});
    }
  }
  if (moves.empty()) return false;
  const auto [i, kind] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  if (kind == 0) {
    std::swap(word[i], word[i + 1]);
  } else if (kind == 1) {
    const int a = word[i], b = word[i + 1];
    word[i] = word[i + 2] = b;
    word[i + 1] = a;
  } else {
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
               word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
  return true;
}

inline std::vector<int> random_word(std::mt19937_64& rng, int n, int length, bool positive = false) {
  std::uniform_int_distribution<int> letter(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w(length);
  for (auto& l : w) l = (positive || sign(rng)) ? letter(rng) : -letter(rng);
  return w;
}

}  // namespace oracle
