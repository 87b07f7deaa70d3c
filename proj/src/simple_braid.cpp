#include "garside/simple_braid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace garside {

void require_strands(int n) {
  if (n < 2 || n > kMaxStrands) {
    throw std::invalid_argument("strand count " + std::to_string(n) + " outside [2, " +
                                std::to_string(kMaxStrands) + "]");
  }
}

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int i : members) insert(i);
}

int IndexSet::size() const { return std::popcount(mask_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string to_string(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s.members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

struct SimplePermOps {
  static SimpleBraid blank(int n) {
    SimpleBraid s;
    s.n_ = static_cast<std::uint8_t>(n);
    return s;
  }
  static std::uint8_t* data(SimpleBraid& s) { return s.perm_.data(); }
  static const std::uint8_t* data(const SimpleBraid& s) { return s.perm_.data(); }

  static SimpleBraid inverse(const SimpleBraid& s) {
    SimpleBraid r = blank(s.n_);
    for (int i = 0; i < s.n_; ++i) r.perm_[s.perm_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }
  // Strand j runs through a and then through b.
  static SimpleBraid compose(const SimpleBraid& a, const SimpleBraid& b) {
    SimpleBraid r = blank(a.n_);
    for (int i = 0; i < a.n_; ++i) r.perm_[i] = b.perm_[a.perm_[i]];
    return r;
  }
};

namespace {

void check_same(const SimpleBraid& a, const SimpleBraid& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand counts differ");
}

}  // namespace

SimpleBraid SimpleBraid::identity(StrandCount n) {
  require_strands(n);
  SimpleBraid s = SimplePermOps::blank(n);
  for (int i = 0; i < n; ++i) s.perm_[i] = static_cast<std::uint8_t>(i);
  return s;
}

SimpleBraid SimpleBraid::delta(StrandCount n) {
  require_strands(n);
  SimpleBraid s = SimplePermOps::blank(n);
  for (int i = 0; i < n; ++i) s.perm_[i] = static_cast<std::uint8_t>(n - 1 - i);
  return s;
}

SimpleBraid SimpleBraid::generator(StrandCount n, int i) {
  if (i < 1 || i >= n) {
    throw LetterOutOfRange("generator " + std::to_string(i) + " out of range for " +
                           std::to_string(int(n)) + " strands");
  }
  SimpleBraid s = identity(n);
  std::swap(s.perm_[i - 1], s.perm_[i]);
  return s;
}

SimpleBraid SimpleBraid::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require_strands(n);
  SimpleBraid s = SimplePermOps::blank(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("images do not form a permutation");
    seen[v - 1] = true;
    s.perm_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return s;
}

int SimpleBraid::preimage(int position) const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] == position - 1) return i + 1;
  }
  throw std::out_of_range("position out of range");
}

std::vector<int> SimpleBraid::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = perm_[i] + 1;
  return out;
}

SimpleBraid SimpleBraid::times_generator(int i) const {
  SimpleBraid r = *this;
  for (int s = 0; s < n_; ++s) {
    if (r.perm_[s] == i - 1) {
      r.perm_[s] = static_cast<std::uint8_t>(i);
    } else if (r.perm_[s] == i) {
      r.perm_[s] = static_cast<std::uint8_t>(i - 1);
    }
  }
  return r;
}

bool SimpleBraid::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

bool SimpleBraid::is_delta() const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != n_ - 1 - i) return false;
  }
  return true;
}

int SimpleBraid::length() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) count += perm_[i] > perm_[j];
  }
  return count;
}

bool SimpleBraid::ends_with(int i) const {
  // Strands ending at positions i and i+1 have crossed.
  int left = -1, right = -1;
  for (int s = 0; s < n_; ++s) {
    if (perm_[s] == i - 1) left = s;
    if (perm_[s] == i) right = s;
  }
  return left > right;
}

IndexSet SimpleBraid::starting_set() const {
  std::uint32_t mask = 0;
  for (int i = 1; i < n_; ++i) {
    if (perm_[i - 1] > perm_[i]) mask |= 1u << i;
  }
  return IndexSet::from_mask(mask);
}

IndexSet SimpleBraid::finishing_set() const {
  return SimplePermOps::inverse(*this).starting_set();
}

PositiveWord SimpleBraid::word() const {
  PositiveWord w;
  SimpleBraid cur = *this;
  int i = 1;
  while (i < n_) {
    if (cur.perm_[i - 1] > cur.perm_[i]) {
      w.push_back(i);
      std::swap(cur.perm_[i - 1], cur.perm_[i]);
      i = 1;
    } else {
      ++i;
    }
  }
  return w;
}

bool operator==(const SimpleBraid& a, const SimpleBraid& b) {
  return a.n_ == b.n_ && std::equal(a.perm_.begin(), a.perm_.begin() + a.n_, b.perm_.begin());
}

std::strong_ordering operator<=>(const SimpleBraid& a, const SimpleBraid& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.perm_.begin(), a.perm_.begin() + a.n_,
                                                b.perm_.begin(), b.perm_.begin() + b.n_);
}

std::size_t SimpleBraidHash::operator()(const SimpleBraid& s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < s.strands(); ++i) {
    h ^= s.raw(i);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

SimpleBraid simple_from_word(StrandCount n, std::span<const int> word) {
  require_strands(n);
  // strand_at[p] = strand currently occupying position p
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int letter : word) {
    if (letter < 1 || letter >= n) {
      throw LetterOutOfRange("letter " + std::to_string(letter) + " out of range");
    }
    if (strand_at[letter - 1] > strand_at[letter]) {
      throw NotReduced("strands " + std::to_string(strand_at[letter] + 1) + " and " +
                       std::to_string(strand_at[letter - 1] + 1) + " cross twice");
    }
    std::swap(strand_at[letter - 1], strand_at[letter]);
  }
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[strand_at[p]] = p + 1;
  return SimpleBraid::from_images(images);
}

BoundarySets boundary_sets(const SimpleBraid& s) {
  return {s.starting_set(), s.finishing_set()};
}

bool is_prefix(const SimpleBraid& a, const SimpleBraid& b) {
  check_same(a, b);
  const int n = a.strands();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a.raw(i) > a.raw(j) && b.raw(i) < b.raw(j)) return false;
    }
  }
  return true;
}

bool is_suffix(const SimpleBraid& a, const SimpleBraid& b) {
  return is_prefix(SimplePermOps::inverse(a), SimplePermOps::inverse(b));
}

SimpleBraid meet(const SimpleBraid& a, const SimpleBraid& b) {
  check_same(a, b);
  const int n = a.strands();
  SimpleBraid x = a, y = b;
  std::uint8_t* px = SimplePermOps::data(x);
  std::uint8_t* py = SimplePermOps::data(y);
  // Inverse of the accumulated meet; appending sigma_{i+1} swaps its entries i, i+1.
  SimpleBraid acc_inv = SimpleBraid::identity(StrandCount(n));
  std::uint8_t* pm = SimplePermOps::data(acc_inv);
  int i = 0;
  while (i + 1 < n) {
    if (px[i] > px[i + 1] && py[i] > py[i + 1]) {
      std::swap(px[i], px[i + 1]);
      std::swap(py[i], py[i + 1]);
      std::swap(pm[i], pm[i + 1]);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return SimplePermOps::inverse(acc_inv);
}

SimpleBraid suffix_meet(const SimpleBraid& a, const SimpleBraid& b) {
  return SimplePermOps::inverse(meet(SimplePermOps::inverse(a), SimplePermOps::inverse(b)));
}

SimpleBraid join(const SimpleBraid& a, const SimpleBraid& b) {
  return left_complement(suffix_meet(right_complement(a), right_complement(b)));
}

SimpleBraid right_complement(const SimpleBraid& s) {
  const int n = s.strands();
  const SimpleBraid inv = SimplePermOps::inverse(s);
  SimpleBraid r = SimplePermOps::blank(n);
  std::uint8_t* pr = SimplePermOps::data(r);
  for (int j = 0; j < n; ++j) pr[j] = static_cast<std::uint8_t>(n - 1 - inv.raw(j));
  return r;
}

SimpleBraid left_complement(const SimpleBraid& s) {
  const int n = s.strands();
  const SimpleBraid inv = SimplePermOps::inverse(s);
  SimpleBraid r = SimplePermOps::blank(n);
  std::uint8_t* pr = SimplePermOps::data(r);
  for (int j = 0; j < n; ++j) pr[j] = inv.raw(n - 1 - j);
  return r;
}

SimpleBraid tau(const SimpleBraid& s) {
  const int n = s.strands();
  SimpleBraid r = SimplePermOps::blank(n);
  std::uint8_t* pr = SimplePermOps::data(r);
  for (int j = 0; j < n; ++j) pr[j] = static_cast<std::uint8_t>(n - 1 - s.raw(n - 1 - j));
  return r;
}

SimpleBraid tau_power(const SimpleBraid& s, long long k) { return (k % 2 == 0) ? s : tau(s); }

bool product_is_simple(const SimpleBraid& a, const SimpleBraid& b) {
  check_same(a, b);
  // No pair of strands crossed by a may be crossed again by b.
  const int n = a.strands();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a.raw(i) > a.raw(j) && b.raw(a.raw(i)) < b.raw(a.raw(j))) return false;
    }
  }
  return true;
}

SimpleBraid simple_product(const SimpleBraid& a, const SimpleBraid& b) {
  if (!product_is_simple(a, b)) throw std::logic_error("product is not a permutation braid");
  return SimplePermOps::compose(a, b);
}

SimpleBraid left_quotient(const SimpleBraid& a, const SimpleBraid& b) {
  check_same(a, b);
  return SimplePermOps::compose(SimplePermOps::inverse(a), b);
}

SimpleBraid right_quotient(const SimpleBraid& a, const SimpleBraid& b) {
  check_same(a, b);
  return SimplePermOps::compose(a, SimplePermOps::inverse(b));
}

WeightedPair left_weight_pair(const SimpleBraid& u, const SimpleBraid& v) {
  check_same(u, v);
  const SimpleBraid w = meet(right_complement(u), v);
  if (w.is_identity()) return {u, v};
  return {SimplePermOps::compose(u, w), left_quotient(w, v)};
}

bool is_left_weighted(const SimpleBraid& u, const SimpleBraid& v) {
  return u.finishing_set().includes(v.starting_set());
}

std::vector<SimpleBraid> all_simples(StrandCount n) {
  require_strands(n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<SimpleBraid> out;
  do {
    out.push_back(SimpleBraid::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace garside
