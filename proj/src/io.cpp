#include "garside/io.hpp"

#include <charconv>
#include <sstream>

namespace garside {

namespace {

int parse_int(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

SignedWord parse_word(std::string_view text) {
  SignedWord w;
  for (auto t : tokens(text)) {
    if (t == ".") continue;
    if (t.starts_with("D")) throw ParseError("Delta powers need a strand count");
    w.push_back(parse_int(t));
  }
  return w;
}

Braid parse_braid(StrandCount n, std::string_view text) {
  NormalFormBuilder builder(n);
  for (auto t : tokens(text)) {
    if (t == ".") continue;
    if (t == "D" || t == "Delta") {
      builder.append_delta(1);
    } else if (t.starts_with("D^")) {
      builder.append_delta(parse_int(t.substr(2)));
    } else {
      builder.append_letter(parse_int(t));
    }
  }
  return builder.build();
}

std::string word_to_string(const std::vector<int>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word[i]);
  }
  return s;
}

std::string to_text(const Braid& x) {
  std::string s = "D^" + std::to_string(x.inf());
  for (const auto& f : x.factors()) s += " . " + word_to_string(f.word());
  return s;
}

nlohmann::json to_json(const Braid& x) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : x.factors()) factors.push_back(f.word());
  return {{"n", x.strands()}, {"inf", x.inf()}, {"factors", factors}};
}

Braid braid_from_json(const nlohmann::json& j) {
  try {
    const StrandCount n(j.at("n").get<int>());
    NormalFormBuilder builder(n);
    builder.append_delta(j.at("inf").get<long long>());
    for (const auto& f : j.at("factors")) {
      builder.append(simple_from_word(n, f.get<std::vector<int>>()));
    }
    return builder.build();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad braid JSON: ") + e.what());
  }
}

ParsedMatrix parse_matrix(std::string_view text) {
  ParsedMatrix m;
  std::string line;
  auto flush = [&]() {
    BitRow row;
    std::optional<int> bar;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        row.push_back(ch - '0');
      } else if (ch == '|') {
        if (bar) throw ParseError("more than one '|' in a row");
        bar = static_cast<int>(row.size());
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw ParseError(std::string("unexpected character '") + ch + "' in matrix");
      }
    }
    line.clear();
    if (row.empty()) {
      if (bar) throw ParseError("'|' on an empty row");
      return;
    }
    if (!m.rows.empty() && bar != m.b) throw ParseError("rows disagree on the '|' position");
    if (m.rows.empty()) m.b = bar;
    m.rows.push_back(std::move(row));
  };
  for (char ch : text) {
    if (ch == '\n' || ch == ',' || ch == ';') {
      flush();
    } else {
      line.push_back(ch);
    }
  }
  flush();
  if (m.rows.empty()) throw ParseError("matrix has no rows");
  return m;
}

std::string matrix_to_text(const FamilyElement& e) {
  std::string s;
  for (const auto& r : e.rows()) {
    for (int j = 0; j < e.p(); ++j) {
      if (e.slot() && *e.slot() == j) s += '|';
      s += static_cast<char>('0' + r[j]);
    }
    if (e.slot() && *e.slot() == e.p()) s += '|';
    s += '\n';
  }
  return s;
}

nlohmann::json to_json(const FamilyElement& e) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : e.rows()) rows.push_back(to_string(r));
  nlohmann::json j = {{"rows", rows}, {"side", e.side() == Side::kPlain ? "plain" : "tau"}};
  j["b"] = e.slot() ? nlohmann::json(*e.slot()) : nlohmann::json(nullptr);
  return j;
}

ParsedMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    ParsedMatrix m;
    for (const auto& r : j.at("rows")) {
      BitRow row;
      for (char ch : r.get<std::string>()) {
        if (ch != '0' && ch != '1') throw ParseError("matrix rows must be 0/1 strings");
        row.push_back(ch - '0');
      }
      m.rows.push_back(std::move(row));
    }
    if (j.contains("b") && !j.at("b").is_null()) m.b = j.at("b").get<int>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ConjugacyGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& b : g.nodes()) nodes.push_back(to_json(b));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    nlohmann::json je = {{"src", e.source},
                         {"dst", e.target},
                         {"conj", e.conjugator.word()},
                         {"kind", to_string(e.kind)}};
    if (e.move != EdgeMove::kUnspecified) je["move"] = to_string(e.move);
    edges.push_back(std::move(je));
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

std::string to_dot(const ConjugacyGraph& g) {
  std::ostringstream out;
  out << "digraph rigid_set {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  n" << i << " [label=\"" << to_text(g.nodes()[i]) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\"" << word_to_string(e.conjugator.word())
        << "\", style=" << (e.kind == ConjugatorKind::kCutHead ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_string(const StandardCurve& c) {
  return "{" + std::to_string(c.lo) + ".." + std::to_string(c.hi) + "}";
}

}  // namespace garside
