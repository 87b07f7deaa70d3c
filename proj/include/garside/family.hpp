#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/braid.hpp"
#include "garside/invariant_sets.hpp"

namespace garside {

class BadMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class BadBoundaryColumns : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotM0 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class BadSlot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotTerminal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Entries a_1..a_p, each 0 or 1.
using BitRow = std::vector<int>;
using BitMatrix = std::vector<BitRow>;

enum class Side { kPlain, kTau };

/// A validated binary matrix A with optional vertical-strand slot b. The braid
/// it stands for is alpha(A, b) on the plain side and tau(alpha(A, b)) on the
/// tau side; the matrix itself always satisfies the class conditions.
class FamilyElement {
 public:
  const BitMatrix& rows() const { return rows_; }
  const BitRow& row(int r) const { return rows_.at(r); }
  std::optional<int> slot() const { return b_; }
  Side side() const { return side_; }
  int k() const { return static_cast<int>(rows_.size()); }
  int p() const { return static_cast<int>(rows_.front().size()); }
  int strands() const { return 2 * p() + 2 + (b_ ? 1 : 0); }
  int column(int j) const;  // value of a constant column, -1 if not constant

  FamilyElement with_side(Side s) const;
  FamilyElement with_rows(BitMatrix rows) const;

  friend bool operator==(const FamilyElement&, const FamilyElement&) = default;
  friend auto operator<=>(const FamilyElement&, const FamilyElement&) = default;

 private:
  friend FamilyElement make_element(BitMatrix, std::optional<int>, bool);
  BitMatrix rows_;
  std::optional<int> b_;
  Side side_ = Side::kPlain;
};

/// Smallest s >= 1 with the s-fold row rotation fixing A.
int cycling_order(const BitMatrix& a);

bool is_constant_column(const BitMatrix& a, int j);  // 1-based column

/// Validates membership in the class with first column 0 and last column 1;
/// with require_m0 also the restricted class: n >= 10, k >= 2, interior columns
/// 2..p-3 constant, columns p-2 and p-1 non-constant, full cycling order, and
/// slot b = p-2 when present.
FamilyElement make_element(BitMatrix a, std::optional<int> b = std::nullopt,
                           bool require_m0 = false);

bool is_m0(const FamilyElement& e);

/// Random element of the class with first column 0 and last column 1: middle
/// entries uniform, and for odd n a uniform slot in 0..p.
FamilyElement sample_element(std::mt19937_64& rng, int k, int n);
/// Random restricted-class element (n >= 10, k >= 2), redrawn until the
/// cycling order is k.
FamilyElement sample_m0_element(std::mt19937_64& rng, int k, int n);

/// Transposing indices {2k : a_k = 1} and {2k+1 : a_k = 0}.
std::vector<int> transposing_indices(const BitRow& a);

/// Permutation of the reduced labels {1, 2, 4, ..., 2p, 2p+1}.
class ReducedCycle {
 public:
  explicit ReducedCycle(int p) : p_(p), next_(2 * p + 2, 0) {}

  int p() const { return p_; }
  std::vector<int> labels() const;
  int operator()(int label) const { return next_.at(label); }
  int inverse(int label) const;
  void set(int label, int image) { next_.at(label) = image; }
  /// Orbit of start, starting with start.
  std::vector<int> cycle_from(int start) const;
  bool is_single_cycle() const;

 private:
  int p_;
  std::vector<int> next_;
};

ReducedCycle theta(const BitRow& a);

/// The permutation braid alpha(a), or alpha(a, b) with a vertical strand at
/// slot 2b+2.
SimpleBraid alpha_row(const BitRow& a, std::optional<int> b = std::nullopt);

/// Row factors of the element, with tau applied on the tau side.
std::vector<SimpleBraid> alpha_factors(const FamilyElement& e);
/// The braid of the element. Throws std::logic_error unless the row factors are
/// already its left canonical form.
Braid alpha(const FamilyElement& e);

enum class Transform { kCycle, kTau, kHat, kCheck };

/// kCycle moves the first row to the bottom; kTau reverses and negates the
/// columns (b -> p-b); kHat and kCheck fill the interior columns with ones or
/// zeros and need the restricted class.
FamilyElement transform(const FamilyElement& e, Transform kind);
/// Inverse row rotation: the last row moves to the top.
FamilyElement uncycle(const FamilyElement& e);

bool is_terminal(const FamilyElement& e);
bool is_initial(const FamilyElement& e);

/// Positive word of the switching conjugator with index i: i = 1 gives
/// s3 s2 s4 s3 s1, i >= 2 gives s_{2i+1} s_{2i} s_{2i+2} s_{2i+1}.
PositiveWord switching_word(int i);

struct Switching {
  int index;  // as in switching_word
  SimpleBraid conjugator;
  FamilyElement target;
};

std::vector<Switching> switchings(const FamilyElement& e);

/// Interior columns 2..p-3 of a restricted-class element, as bits.
std::vector<int> interior_columns(const FamilyElement& e);

/// Switchings turn `from` into `to` (both as interior column vectors).
bool switching_reachable(const std::vector<int>& from, const std::vector<int>& to);

/// A switching path from the initial element hat(e) to e. seed 0 takes the
/// lowest admissible index at each step; other seeds pick uniformly among the
/// admissible ones.
std::vector<Switching> switching_path(const FamilyElement& e, std::uint64_t seed = 0);

/// Product of the switching conjugators of switching_path(e, seed).
Braid rho_path(const FamilyElement& e, std::uint64_t seed = 0);

/// The closed form for the terminal element: the concatenation over
/// top = p-4, ..., 1 of the switching words with indices 1..top.
PositiveWord rho_check_word(int p);

struct Initializer {
  SimpleBraid conjugator;
  FamilyElement target;
  bool below_disjointness_bound;  // n < 14
};

/// For a terminal element: rho = d(rho_A alpha(A_k)) and target tau(c^{-1}(hat A))
/// on the opposite side.
Initializer initializer(const FamilyElement& e);

/// Structure of a closed-form rigid conjugacy graph.
struct FamilyGraphStats {
  std::size_t nodes = 0;
  std::size_t plain_nodes = 0;
  std::size_t tau_nodes = 0;
  std::size_t aliased_elements = 0;  // further matrices naming an existing node
  std::size_t cycling_edges = 0;
  std::size_t switching_edges = 0;
  std::size_t initializing_edges = 0;
  std::vector<std::size_t> lattice_sizes;  // components of the switching subgraph, sorted
  bool lattices_alternate = false;         // every initializing edge changes side
  bool strongly_connected = false;
};

struct FamilyGraph {
  ConjugacyGraph graph;
  std::vector<FamilyElement> elements;  // parallel to graph.nodes()
  FamilyGraphStats stats;
};

/// Closure of {alpha(e)} under cycling, switchings and initializers, every
/// edge identity verified. Throws std::logic_error on a failed verification.
FamilyGraph family_rigid_graph(const FamilyElement& e, Execution exec = Execution::kSerial);

/// k * 2^(p-3).
std::size_t predicted_rigid_set_size(int k, int p);

/// Decodes a braid with inf 0 whose factors are rows of a restricted-class
/// element, on either side.
std::optional<FamilyElement> parse_family_braid(const Braid& x);

/// A forced prefix: whenever every hypothesis word is a prefix of the
/// relevant product, the forced word is a prefix of the conjugator.
struct ForcedPrefix {
  std::string clause;
  std::vector<PositiveWord> hypotheses;
  PositiveWord forced;
};

/// Forced prefixes for a row and seed generator. Cut-head: seed in S(alpha(a))
/// or a boundary index 1, 2p+1; the product is beta^{-1} alpha(a) gamma with
/// sigma_seed a prefix of gamma and the forced word constrains beta. Add-tail:
/// the product is alpha(a) gamma, seed an odd index, forced word constrains
/// gamma. With a slot b only the seeds 2b+1, 2b+2 are covered.
std::vector<ForcedPrefix> forced_prefixes(const BitRow& a, std::optional<int> b, int seed,
                                          ConjugatorKind mode);

struct ForcedPrefixCheck {
  bool holds = true;
  bool vacuous = false;       // no conjugator satisfies the hypotheses
  std::size_t witnesses = 0;  // conjugators examined
};

/// Exhaustive check of one forced prefix over all admissible conjugators.
ForcedPrefixCheck check_forced_prefix(const BitRow& a, std::optional<int> b, int seed,
                                      ConjugatorKind mode, const ForcedPrefix& fp);

std::string to_string(const BitRow& row);

}  // namespace garside
