#include "garside/family.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace garside {

namespace {

void validate_row(const BitRow& a) {
  if (a.size() < 2) throw BadMatrix("rows need at least two entries");
  for (int v : a) {
    if (v != 0 && v != 1) throw BadMatrix("matrix entries must be 0 or 1");
  }
}

int p_of(const BitRow& a) { return static_cast<int>(a.size()); }

BitMatrix rotate_rows(const BitMatrix& a, int s) {
  const int k = static_cast<int>(a.size());
  BitMatrix out(a.size());
  for (int r = 0; r < k; ++r) out[r] = a[(r + s) % k];
  return out;
}

}  // namespace

std::string to_string(const BitRow& row) {
  std::string s;
  for (int v : row) s.push_back(static_cast<char>('0' + v));
  return s;
}

int FamilyElement::column(int j) const {
  return is_constant_column(rows_, j) ? rows_.front().at(j - 1) : -1;
}

FamilyElement FamilyElement::with_side(Side s) const {
  FamilyElement e = *this;
  e.side_ = s;
  return e;
}

FamilyElement FamilyElement::with_rows(BitMatrix rows) const {
  FamilyElement e = *this;
  e.rows_ = std::move(rows);
  return e;
}

int cycling_order(const BitMatrix& a) {
  const int k = static_cast<int>(a.size());
  for (int s = 1; s < k; ++s) {
    if (rotate_rows(a, s) == a) return s;
  }
  return k;
}

bool is_constant_column(const BitMatrix& a, int j) {
  return std::all_of(a.begin(), a.end(),
                     [&](const BitRow& r) { return r.at(j - 1) == a.front().at(j - 1); });
}

FamilyElement make_element(BitMatrix a, std::optional<int> b, bool require_m0) {
  if (a.empty()) throw BadMatrix("matrix has no rows");
  for (const auto& r : a) {
    validate_row(r);
    if (r.size() != a.front().size()) throw BadMatrix("rows differ in length");
  }
  const int p = p_of(a.front());
  const int k = static_cast<int>(a.size());
  if (b && (*b < 0 || *b > p)) throw BadSlot("slot b must lie in 0..p");
  const int n = 2 * p + 2 + (b ? 1 : 0);
  require_strands(n);
  for (const auto& r : a) {
    if (r.front() != 0 || r.back() != 1) {
      throw BadBoundaryColumns("first column must be 0 and last column 1");
    }
  }
  if (require_m0) {
    if (n < 10) throw NotM0("restricted class needs n >= 10");
    if (k < 2) throw NotM0("restricted class needs k >= 2");
    for (int j = 2; j <= p - 3; ++j) {
      if (!is_constant_column(a, j)) throw NotM0("column " + std::to_string(j) + " is not constant");
    }
    if (is_constant_column(a, p - 2) || is_constant_column(a, p - 1)) {
      throw NotM0("columns p-2 and p-1 must not be constant");
    }
    if (cycling_order(a) != k) throw NotM0("cycling order of the rows is below k");
    if (b && *b != p - 2) throw BadSlot("restricted class fixes the slot at p-2");
  }
  FamilyElement e;
  e.rows_ = std::move(a);
  e.b_ = b;
  return e;
}

bool is_m0(const FamilyElement& e) {
  try {
    make_element(e.rows(), e.slot(), true);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

FamilyElement sample_element(std::mt19937_64& rng, int k, int n) {
  if (k < 1 || n < 6) throw BadMatrix("sampling needs k >= 1 and n >= 6");
  const int p = (n - 2) / 2;
  std::bernoulli_distribution coin;
  BitMatrix a(k, BitRow(p, 0));
  for (auto& r : a) {
    for (int j = 1; j + 1 < p; ++j) r[j] = coin(rng);
    r[p - 1] = 1;
  }
  std::optional<int> b;
  if (n % 2) b = std::uniform_int_distribution<int>(0, p)(rng);
  return make_element(std::move(a), b);
}

FamilyElement sample_m0_element(std::mt19937_64& rng, int k, int n) {
  if (k < 2 || n < 10) throw NotM0("restricted class needs n >= 10 and k >= 2");
  const int p = (n - 2) / 2;
  std::bernoulli_distribution coin;
  while (true) {
    BitMatrix a(k, BitRow(p, 0));
    for (int j = 2; j <= p - 3; ++j) {
      const int v = coin(rng);
      for (auto& r : a) r[j - 1] = v;
    }
    for (auto& r : a) {
      r[p - 3] = coin(rng);
      r[p - 2] = coin(rng);
      r[p - 1] = 1;
    }
    if (is_constant_column(a, p - 2) || is_constant_column(a, p - 1) || cycling_order(a) != k) continue;
    return make_element(std::move(a), n % 2 ? std::optional<int>(p - 2) : std::nullopt, true);
  }
}

std::vector<int> transposing_indices(const BitRow& a) {
  validate_row(a);
  std::vector<int> t;
  for (int k = 1; k <= p_of(a); ++k) t.push_back(a[k - 1] == 1 ? 2 * k : 2 * k + 1);
  return t;
}

std::vector<int> ReducedCycle::labels() const {
  std::vector<int> out{1};
  for (int j = 1; j <= p_; ++j) out.push_back(2 * j);
  out.push_back(2 * p_ + 1);
  return out;
}

int ReducedCycle::inverse(int label) const {
  for (int l : labels()) {
    if (next_[l] == label) return l;
  }
  throw std::logic_error("label has no preimage");
}

std::vector<int> ReducedCycle::cycle_from(int start) const {
  std::vector<int> out{start};
  for (int l = next_.at(start); l != start && out.size() <= next_.size(); l = next_.at(l)) {
    out.push_back(l);
  }
  return out;
}

bool ReducedCycle::is_single_cycle() const {
  const auto ls = labels();
  const auto orbit = cycle_from(1);
  if (orbit.size() != ls.size()) return false;
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  return sorted == ls && next_.at(orbit.back()) == 1;
}

ReducedCycle theta(const BitRow& a) {
  validate_row(a);
  const int p = p_of(a);
  auto bit = [&](int j) { return a[j - 1]; };
  ReducedCycle t(p);
  auto first_zero_after = [&](int i) {
    for (int j = i + 1; j <= p; ++j)
      if (bit(j) == 0) return 2 * j;
    return 2 * p + 1;
  };
  auto last_one_before = [&](int i) {
    for (int j = i - 1; j >= 1; --j)
      if (bit(j) == 1) return 2 * j;
    return 1;
  };
  t.set(1, first_zero_after(0));
  t.set(2 * p + 1, last_one_before(p + 1));
  for (int i = 1; i <= p; ++i) t.set(2 * i, bit(i) == 0 ? first_zero_after(i) : last_one_before(i));
  return t;
}

SimpleBraid alpha_row(const BitRow& a, std::optional<int> b) {
  validate_row(a);
  const int p = p_of(a);
  const int n = 2 * p + 2;
  auto bit = [&](int j) { return a[j - 1]; };
  std::vector<int> pi(n + 1, 0);  // 1-based
  for (int k = 1; k <= p; ++k) {
    if (bit(k) == 1) {
      pi[2 * k] = 2 * k + 1;
    } else {
      pi[2 * k + 1] = 2 * k;
    }
  }
  auto strand_of_label = [&](int l) {
    if (l == 1) return 1;
    if (l == 2 * p + 1) return 2 * p + 2;
    const int j = l / 2;
    return bit(j) == 0 ? 2 * j : 2 * j + 1;
  };
  auto position_of_label = [&](int l) {
    if (l == 1) return 1;
    if (l == 2 * p + 1) return 2 * p + 2;
    const int j = l / 2;
    return bit(j) == 0 ? 2 * j + 1 : 2 * j;
  };
  const ReducedCycle t = theta(a);
  for (int l : t.labels()) pi[strand_of_label(l)] = position_of_label(t(l));

  std::vector<int> images;
  if (!b) {
    images.assign(pi.begin() + 1, pi.end());
  } else {
    if (*b < 0 || *b > p) throw BadSlot("slot b must lie in 0..p");
    const int v = 2 * *b + 2;
    auto shift = [&](int x) { return x < v ? x : x + 1; };
    images.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) images[shift(i) - 1] = shift(pi[i]);
    images[v - 1] = v;
  }
  return SimpleBraid::from_images(images);
}

std::vector<SimpleBraid> alpha_factors(const FamilyElement& e) {
  std::vector<SimpleBraid> out;
  for (const auto& r : e.rows()) {
    const SimpleBraid s = alpha_row(r, e.slot());
    out.push_back(e.side() == Side::kTau ? tau(s) : s);
  }
  return out;
}

Braid alpha(const FamilyElement& e) {
  const auto factors = alpha_factors(e);
  Braid x = Braid::from_simples(StrandCount(e.strands()), factors);
  if (x.inf() != 0 || x.factors() != factors) {
    throw std::logic_error("row factors are not left-weighted as written");
  }
  return x;
}

FamilyElement transform(const FamilyElement& e, Transform kind) {
  const int p = e.p();
  switch (kind) {
    case Transform::kCycle:
      return e.with_rows(rotate_rows(e.rows(), 1));
    case Transform::kTau: {
      BitMatrix rows = e.rows();
      for (auto& r : rows) {
        std::reverse(r.begin(), r.end());
        for (auto& v : r) v = 1 - v;
      }
      std::optional<int> b = e.slot();
      if (b) b = p - *b;
      FamilyElement out = make_element(std::move(rows), b);
      return out.with_side(e.side());
    }
    case Transform::kHat:
    case Transform::kCheck: {
      if (!is_m0(e)) throw NotM0("hat and check need the restricted class");
      BitMatrix rows = e.rows();
      for (auto& r : rows)
        for (int j = 2; j <= p - 3; ++j) r[j - 1] = kind == Transform::kHat ? 1 : 0;
      return e.with_rows(std::move(rows));
    }
  }
  throw std::logic_error("unknown transform");
}

FamilyElement uncycle(const FamilyElement& e) { return e.with_rows(rotate_rows(e.rows(), e.k() - 1)); }

bool is_terminal(const FamilyElement& e) { return e == transform(e, Transform::kCheck); }
bool is_initial(const FamilyElement& e) { return e == transform(e, Transform::kHat); }

PositiveWord switching_word(int i) {
  if (i == 1) return {3, 2, 4, 3, 1};
  if (i < 2) throw std::invalid_argument("switching index must be positive");
  return {2 * i + 1, 2 * i, 2 * i + 2, 2 * i + 1};
}

std::vector<int> interior_columns(const FamilyElement& e) {
  std::vector<int> cols;
  for (int j = 2; j <= e.p() - 3; ++j) cols.push_back(e.row(0)[j - 1]);
  return cols;
}

namespace {

// Admissible switching indices on an interior column vector (position t holds
// column t+2).
std::vector<int> switch_indices(const std::vector<int>& cols) {
  std::vector<int> out;
  if (!cols.empty() && cols[0] == 1) out.push_back(1);
  for (std::size_t t = 0; t + 1 < cols.size(); ++t) {
    if (cols[t] == 0 && cols[t + 1] == 1) out.push_back(static_cast<int>(t) + 2);
  }
  return out;
}

std::vector<int> apply_switch(std::vector<int> cols, int i) {
  if (i == 1) {
    cols[0] = 0;
  } else {
    std::swap(cols[i - 2], cols[i - 1]);
  }
  return cols;
}

FamilyElement with_interior(const FamilyElement& e, const std::vector<int>& cols) {
  BitMatrix rows = e.rows();
  for (auto& r : rows)
    for (std::size_t t = 0; t < cols.size(); ++t) r[t + 1] = cols[t];
  return e.with_rows(std::move(rows));
}

SimpleBraid side_simple(const FamilyElement& e, const SimpleBraid& s) {
  return e.side() == Side::kTau ? tau(s) : s;
}

}  // namespace

std::vector<Switching> switchings(const FamilyElement& e) {
  if (!is_m0(e)) throw NotM0("switchings need the restricted class");
  const StrandCount n(e.strands());
  const auto cols = interior_columns(e);
  std::vector<Switching> out;
  for (int i : switch_indices(cols)) {
    out.push_back({i, side_simple(e, simple_from_word(n, switching_word(i))),
                   with_interior(e, apply_switch(cols, i))});
  }
  return out;
}

bool switching_reachable(const std::vector<int>& from, const std::vector<int>& to) {
  if (from.size() != to.size()) return false;
  std::vector<std::size_t> p, q;
  for (std::size_t t = 0; t < from.size(); ++t) {
    if (from[t]) p.push_back(t);
    if (to[t]) q.push_back(t);
  }
  if (q.size() > p.size()) return false;
  const std::size_t shift = p.size() - q.size();
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] > p[shift + j]) return false;
  }
  return true;
}

std::vector<Switching> switching_path(const FamilyElement& e, std::uint64_t seed) {
  if (!is_m0(e)) throw NotM0("switching paths need the restricted class");
  std::mt19937_64 rng(seed);
  const auto target = interior_columns(e);
  FamilyElement cur = transform(e, Transform::kHat);
  std::vector<Switching> path;
  while (interior_columns(cur) != target) {
    std::vector<Switching> admissible;
    for (auto& s : switchings(cur)) {
      if (switching_reachable(interior_columns(s.target), target)) admissible.push_back(std::move(s));
    }
    if (admissible.empty()) throw std::logic_error("no switching reaches the target");
    const std::size_t pick =
        seed == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, admissible.size() - 1)(rng);
    path.push_back(admissible[pick]);
    cur = admissible[pick].target;
  }
  return path;
}

Braid rho_path(const FamilyElement& e, std::uint64_t seed) {
  NormalFormBuilder builder{StrandCount(e.strands())};
  for (const auto& s : switching_path(e, seed)) builder.append(s.conjugator);
  return builder.build();
}

PositiveWord rho_check_word(int p) {
  PositiveWord w;
  for (int top = p - 4; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) {
      const auto sw = switching_word(i);
      w.insert(w.end(), sw.begin(), sw.end());
    }
  }
  return w;
}

Initializer initializer(const FamilyElement& e) {
  if (!is_m0(e)) throw NotM0("initializers need the restricted class");
  if (!is_terminal(e)) throw NotTerminal("initializer needs a terminal element");
  const StrandCount n(e.strands());
  const FamilyElement plain = e.with_side(Side::kPlain);
  const Braid prod = NormalFormBuilder(rho_path(plain))
                         .append(alpha_row(plain.rows().back(), plain.slot()))
                         .build();
  if (prod.inf() != 0 || prod.canonical_length() > 1) {
    throw std::logic_error("rho_A alpha(A_k) is not a permutation braid");
  }
  const SimpleBraid top = prod.canonical_length() == 0 ? SimpleBraid::identity(n) : prod.factor(0);
  const SimpleBraid rho = right_complement(top);
  FamilyElement target = uncycle(transform(e, Transform::kHat));
  target = target.with_side(e.side() == Side::kPlain ? Side::kTau : Side::kPlain);
  return {side_simple(e, rho), target, e.strands() < 14};
}

std::size_t predicted_rigid_set_size(int k, int p) {
  return static_cast<std::size_t>(k) << (p - 3);
}

FamilyGraph family_rigid_graph(const FamilyElement& e, Execution exec) {
  if (!is_m0(e)) throw NotM0("closed-form graph needs the restricted class");
  struct Edge {
    std::size_t source, target;
    SimpleBraid conjugator;
    EdgeMove move;
  };
  // Keyed by braid: below 14 strands a plain and a tau-side matrix can name
  // the same braid.
  std::map<Braid, std::size_t> index;
  std::vector<FamilyElement> elements;
  std::vector<Braid> braids;
  std::vector<Edge> edges;
  std::set<FamilyElement> aliases;
  auto add = [&](const FamilyElement& f) {
    Braid x = alpha(f);
    auto [it, inserted] = index.try_emplace(x, elements.size());
    if (inserted) {
      elements.push_back(f);
      braids.push_back(std::move(x));
    } else if (!(elements[it->second] == f)) {
      aliases.insert(f);
    }
    return std::pair{it->second, inserted};
  };
  add(e);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const FamilyElement node = elements[v];
    std::vector<std::pair<SimpleBraid, std::pair<FamilyElement, EdgeMove>>> out;
    out.push_back({alpha_factors(node).front(), {transform(node, Transform::kCycle), EdgeMove::kCycling}});
    for (auto& s : switchings(node)) out.push_back({s.conjugator, {s.target, EdgeMove::kSwitching}});
    if (is_terminal(node)) {
      Initializer init = initializer(node);
      out.push_back({init.conjugator, {init.target, EdgeMove::kInitializing}});
    }
    for (auto& [c, tm] : out) {
      auto [t, inserted] = add(tm.first);
      edges.push_back({v, t, c, tm.second});
      if (inserted) queue.push_back(t);
    }
  }

  FamilyGraph fg;
  ConjugacyGraph& g = fg.graph;
  for (const auto& b : braids) g.add_node(b);
  if (!aliases.empty() && e.strands() >= 14) {
    throw std::logic_error("distinct family elements share a braid");
  }
  for (const auto& ed : edges) {
    g.add_edge(braids[ed.source], braids[ed.target], ed.conjugator,
               ed.move == EdgeMove::kCycling ? ConjugatorKind::kCutHead : ConjugatorKind::kAddTail,
               ed.move);
  }
  g.canonicalize();
  const GraphCheck check = verify_graph(g, exec);
  if (!check.ok()) {
    throw std::logic_error("closed-form graph failed verification: " +
                           std::to_string(check.bad_edges) + " edges, " +
                           std::to_string(check.bad_nodes) + " nodes");
  }
  fg.elements.resize(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) fg.elements[*g.find(braids[i])] = elements[i];

  FamilyGraphStats& st = fg.stats;
  st.nodes = g.size();
  st.aliased_elements = aliases.size();
  for (const auto& el : fg.elements) (el.side() == Side::kPlain ? st.plain_nodes : st.tau_nodes)++;
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  st.lattices_alternate = true;
  for (const auto& ed : g.edges()) {
    switch (ed.move) {
      case EdgeMove::kCycling:
        ++st.cycling_edges;
        break;
      case EdgeMove::kSwitching:
        ++st.switching_edges;
        parent[root(ed.source)] = root(ed.target);
        break;
      case EdgeMove::kInitializing:
        ++st.initializing_edges;
        if (fg.elements[ed.source].side() == fg.elements[ed.target].side()) st.lattices_alternate = false;
        break;
      case EdgeMove::kUnspecified:
        break;
    }
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < g.size(); ++i) ++sizes[root(i)];
  for (const auto& [r, s] : sizes) st.lattice_sizes.push_back(s);
  std::sort(st.lattice_sizes.begin(), st.lattice_sizes.end());
  st.strongly_connected = strongly_connected(g);
  return fg;
}

namespace {

std::optional<std::pair<BitRow, std::optional<int>>> decode_row(const SimpleBraid& f,
                                                                std::optional<int> b) {
  const int n = f.strands();
  std::vector<int> img = f.images();
  if (b) {
    const int v = 2 * *b + 2;
    if (v > n || img[v - 1] != v) return std::nullopt;
    std::vector<int> reduced;
    for (int i = 1; i <= n; ++i) {
      if (i == v) continue;
      const int x = img[i - 1];
      reduced.push_back(x < v ? x : x - 1);
    }
    img = std::move(reduced);
  }
  const int m = static_cast<int>(img.size());
  if (m % 2 != 0 || m < 6) return std::nullopt;
  const int p = (m - 2) / 2;
  BitRow a(p);
  for (int k = 1; k <= p; ++k) {
    if (img[2 * k - 1] == 2 * k + 1) {
      a[k - 1] = 1;
    } else if (img[2 * k] == 2 * k) {
      a[k - 1] = 0;
    } else {
      return std::nullopt;
    }
  }
  if (alpha_row(a, b) != f) return std::nullopt;
  return std::pair{a, b};
}

std::optional<FamilyElement> parse_side(const std::vector<SimpleBraid>& factors, int n) {
  std::vector<std::optional<int>> slots;
  if (n % 2 == 0) {
    slots.push_back(std::nullopt);
  } else {
    for (int b = 0; 2 * b + 2 <= n; ++b) slots.push_back(b);
  }
  for (const auto& b : slots) {
    BitMatrix rows;
    bool ok = true;
    for (const auto& f : factors) {
      auto r = decode_row(f, b);
      if (!r) {
        ok = false;
        break;
      }
      rows.push_back(r->first);
    }
    if (!ok) continue;
    try {
      return make_element(std::move(rows), b, true);
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyElement> parse_family_braid(const Braid& x) {
  if (x.inf() != 0 || x.canonical_length() == 0) return std::nullopt;
  if (auto e = parse_side(x.factors(), x.strands())) return e;
  std::vector<SimpleBraid> mirrored;
  for (const auto& f : x.factors()) mirrored.push_back(tau(f));
  if (auto e = parse_side(mirrored, x.strands())) return e->with_side(Side::kTau);
  return std::nullopt;
}

namespace {

PositiveWord run(int from, int to) {  // from, from +-1, ..., to
  PositiveWord w;
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    w.push_back(i);
    if (i == to) break;
  }
  return w;
}

PositiveWord concat(PositiveWord a, const PositiveWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<ForcedPrefix> forced_prefixes(const BitRow& a, std::optional<int> b, int seed,
                                          ConjugatorKind mode) {
  validate_row(a);
  const int p = p_of(a);
  auto bit = [&](int j) { return a[j - 1]; };
  const ReducedCycle th = theta(a);
  std::vector<ForcedPrefix> out;

  if (mode == ConjugatorKind::kCutHead) {
    if (b) throw std::invalid_argument("cut-head forced prefixes cover even strand counts only");
    if (bit(1) != 0 || bit(p) != 1) {
      throw std::invalid_argument("cut-head forced prefixes need a_1 = 0 and a_p = 1");
    }
    const std::vector<PositiveWord> hyp{{seed}};
    if (seed == 1) {
      out.push_back({"cut-head left boundary", hyp, run(th.inverse(1), 3)});
    } else if (seed == 2 * p + 1) {
      out.push_back({"cut-head right boundary", hyp, run(th.inverse(2 * p + 1), 2 * p - 1)});
    } else if (seed % 2 == 0 && seed >= 2 && seed <= 2 * p) {
      out.push_back({"cut-head pair", hyp, {seed, th.inverse(seed)}});
    } else {
      throw std::invalid_argument("seed is not a cut-head seed");
    }
    return out;
  }

  if (b) {
    const int s = *b;
    if (s < 1 || s > p - 1) throw BadSlot("slot must lie in 1..p-1");
    const std::vector<PositiveWord> hyp{{seed}};
    if (seed == 2 * s + 1) {
      if (bit(s) == 0) {
        out.push_back({"slot low zero", hyp, {2 * s + 1, 2 * s}});
      } else {
        out.push_back({"slot low one", hyp, concat({2 * s + 1}, run(2 * s - 1, th(2 * s)))});
      }
    } else if (seed == 2 * s + 2) {
      if (bit(s + 1) == 0) {
        out.push_back({"slot high zero", hyp, concat({2 * s + 2}, run(2 * s + 4, th(2 * s + 2) + 1))});
      } else {
        out.push_back({"slot high one", hyp, {2 * s + 2, 2 * s + 3}});
      }
    } else {
      throw std::invalid_argument("odd forced prefixes cover the seeds 2b+1 and 2b+2");
    }
    return out;
  }

  if (seed % 2 == 0 || seed < 3 || seed > 2 * p - 1) {
    throw std::invalid_argument("add-tail seed must be 2i+1 with 1 <= i <= p-1");
  }
  const int i = (seed - 1) / 2;
  const PositiveWord s{seed};
  if (bit(i) == 0 && bit(i + 1) == 1) {
    out.push_back({"add-tail switch", {s}, {2 * i + 1, 2 * i, 2 * i + 2, 2 * i + 1}});
  }
  if (bit(i + 1) == 0) {
    out.push_back({"add-tail ascending run", {s}, concat(s, run(2 * i + 3, th(2 * i + 2)))});
    for (int j = i + 2; j <= p; ++j) {
      if (bit(j) == 0) {
        out.push_back({"add-tail next seed", {s, run(2 * i + 3, 2 * j - 1)}, {2 * j + 1}});
        break;
      }
    }
  }
  if (bit(i) == 1) {
    out.push_back({"add-tail descending run", {s}, concat(s, run(2 * i - 1, th(2 * i)))});
    for (int j = i - 1; j >= 1; --j) {
      if (bit(j) == 1) {
        out.push_back({"add-tail previous seed", {s, run(2 * i - 1, 2 * j + 1)}, {2 * j - 1}});
        break;
      }
    }
  }
  return out;
}

ForcedPrefixCheck check_forced_prefix(const BitRow& a, std::optional<int> b, int /*seed*/,
                                      ConjugatorKind mode, const ForcedPrefix& fp) {
  const SimpleBraid x = alpha_row(a, b);
  const StrandCount n(x.strands());
  ForcedPrefixCheck result;
  SimpleBraid forced;
  SimpleBraid hyp = SimpleBraid::identity(n);
  try {
    forced = simple_from_word(n, fp.forced);
    for (const auto& h : fp.hypotheses) hyp = join(hyp, simple_from_word(n, h));
  } catch (const std::invalid_argument&) {
    result.holds = false;  // forced word is not a permutation braid word
    return result;
  }

  if (mode == ConjugatorKind::kAddTail) {
    // Admissible gamma are exactly those with x*gamma above join(x, hyp); the
    // least one is x^{-1} join(x, hyp).
    const SimpleBraid least = left_quotient(x, join(x, hyp));
    result.witnesses = 1;
    result.holds = is_prefix(forced, least);
    return result;
  }

  // Cut-head: beta ranges over prefixes of x such that beta^{-1} x gamma is a
  // permutation braid for some gamma above hyp.
  for (const auto& beta : all_prefixes(x)) {
    const SimpleBraid rest = left_quotient(beta, x);
    if (!product_is_simple(rest, hyp)) continue;
    ++result.witnesses;
    if (!is_prefix(forced, beta)) {
      result.holds = false;
      return result;
    }
  }
  result.vacuous = result.witnesses == 0;
  return result;
}

}  // namespace garside
