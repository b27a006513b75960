#include "klazar/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace klazar {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string("json: ") + what + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("json: missing field \"") + key + "\"");
  }
  return j.at(key);
}

void tree_lists(const Json& j, std::vector<std::vector<Label>>& lists, std::vector<int>& seen) {
  const int v = as_int(field(j, "label"), "label");
  if (v < 0) throw std::invalid_argument("json: negative label");
  if (v >= static_cast<int>(lists.size())) {
    lists.resize(v + 1);
    seen.resize(v + 1, 0);
  }
  if (seen[v]++) throw std::invalid_argument("json: label " + std::to_string(v) + " used twice");
  const Json& kids = field(j, "children");
  if (!kids.is_array()) throw std::invalid_argument("json: children must be an array");
  for (const Json& c : kids) {
    lists[v].push_back(as_int(field(c, "label"), "label"));
    tree_lists(c, lists, seen);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// writers

Json to_json(const IncreasingTree& t) {
  std::function<Json(Label)> node = [&](Label v) {
    Json kids = Json::array();
    for (Label c : t.children(v)) kids.push_back(node(c));
    return Json{{"label", v}, {"children", kids}};
  };
  return node(0);
}

Json to_json(const NodeMarkedKlazarTree& t) {
  Json j = to_json(t.tree);
  j["marked"] = t.marked;
  return j;
}

Json to_json(const PerfectMatching& m) {
  Json pairs = Json::array();
  for (auto [a, b] : m.pairs()) pairs.push_back({a, b});
  return Json{{"n", m.size()}, {"pairs", pairs}};
}

Json to_json(DotRef d) { return Json{{"row", d.row == Row::Top ? "top" : "bot"}, {"pos", d.pos}}; }

Json to_json(const std::vector<CodeEntry>& c) {
  Json out = Json::array();
  for (auto e : c) out.push_back({std::string(1, e.letter), e.index});
  return out;
}

Json to_json(const TrapezoidalWord& w) { return Json(w); }

Json to_json(const StirlingMatching& s) {
  Json edges = Json::array();
  for (auto [a, b] : s.edges) edges.push_back({a, b});
  return Json{{"cols", s.cols}, {"edges", edges}};
}

Json to_json(const PowerMatching& p) {
  Json edges = Json::array();
  for (auto [a, b] : p.edges) edges.push_back({a, b});
  return Json{{"cols", p.bottom}, {"top", p.top}, {"edges", edges}};
}

Json to_json(const OrderedShape& s) {
  return Json{{"edges", s.edges()}, {"dyck", s.dyck_word()}, {"shape", s.to_string()}};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exponents", {e[0], e[1]}}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return terms;
}

Json to_json(const TruncatedEgf& f) {
  static const char* names[] = {"y", "z"};
  Json markers = Json::array();
  for (int i = 0; i < f.markers(); ++i) markers.push_back(names[i]);
  Json coeffs = Json::array();
  for (const auto& p : f.coefficients()) coeffs.push_back(to_json(p));
  return Json{{"order", f.order()}, {"markers", markers}, {"coeffs", coeffs}};
}

Json to_json(const CountTable& t) {
  Json entries = Json::array();
  for (const auto& [idx, v] : t.entries()) entries.push_back({{"index", idx}, {"value", v.get_str()}});
  return Json{{"dimension", t.dimension()}, {"entries", entries}};
}

// ---------------------------------------------------------------------------
// readers

IncreasingTree tree_from_json(const Json& j) {
  std::vector<std::vector<Label>> lists;
  std::vector<int> seen;
  if (as_int(field(j, "label"), "label") != 0) throw std::invalid_argument("json: root label must be 0");
  tree_lists(j, lists, seen);
  return IncreasingTree::from_child_lists(std::move(lists));
}

NodeMarkedKlazarTree marked_tree_from_json(const Json& j) {
  NodeMarkedKlazarTree t{tree_from_json(j), {}};
  if (j.contains("marked")) {
    const Json& marks = j.at("marked");
    if (!marks.is_array()) throw std::invalid_argument("json: marked must be an array");
    for (const Json& m : marks) t.marked.push_back(as_int(m, "mark"));
    std::sort(t.marked.begin(), t.marked.end());
  }
  return t;
}

PerfectMatching matching_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw std::invalid_argument("json: pairs must be an array");
  std::vector<std::pair<int, int>> p;
  for (const Json& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("json: each pair must have two entries");
    p.emplace_back(as_int(pr[0], "pair entry"), as_int(pr[1], "pair entry"));
  }
  return PerfectMatching::from_pairs(n, p);
}

std::vector<CodeEntry> code_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: a code is an array of [letter, index] pairs");
  std::vector<CodeEntry> c;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || e[0].get<std::string>().size() != 1) {
      throw std::invalid_argument("json: code entries look like [\"R\", 0]");
    }
    c.push_back({e[0].get<std::string>()[0], as_int(e[1], "code index")});
  }
  return c;
}

TrapezoidalWord word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: a word is an integer array");
  TrapezoidalWord w;
  for (const Json& a : j) w.push_back(as_int(a, "word entry"));
  return w;
}

IncreasingTree read_tree(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return tree_from_json(parse_json(text));
  return IncreasingTree::parse(text);
}

NodeMarkedKlazarTree read_marked_tree(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return marked_tree_from_json(parse_json(text));
  // "tree marks..." e.g. "0(1(2(3))) 1 2"
  std::string s(text);
  auto split = s.find_first_of(" \t");
  NodeMarkedKlazarTree t{IncreasingTree::parse(s.substr(0, split)), {}};
  if (split != std::string::npos) {
    std::istringstream in(s.substr(split));
    int v;
    while (in >> v) t.marked.push_back(v);
    if (!in.eof()) throw std::invalid_argument("marked tree notation: marks must be integers");
  }
  std::sort(t.marked.begin(), t.marked.end());
  return t;
}

PerfectMatching read_matching(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) == "{{") {
    // set notation {{1,4},{2,3}}
    std::string s(text);
    for (char& ch : s) {
      if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
    }
    std::istringstream in(s);
    std::vector<std::pair<int, int>> pairs;
    int a, b;
    while (in >> a) {
      if (!(in >> b)) throw std::invalid_argument("matching notation: odd number of entries");
      pairs.emplace_back(a, b);
    }
    if (!in.eof()) throw std::invalid_argument("matching notation: entries must be integers");
    return PerfectMatching::from_pairs(static_cast<int>(pairs.size()), pairs);
  }
  if (!text.empty() && text.front() == '{') return matching_from_json(parse_json(text));
  return PerfectMatching::parse(text);
}

std::vector<CodeEntry> read_code(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') return code_from_json(parse_json(text));
  return parse_code(text);
}

TrapezoidalWord read_word(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') return word_from_json(parse_json(text));
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  TrapezoidalWord w;
  int a;
  while (in >> a) w.push_back(a);
  if (!in.eof()) throw std::invalid_argument("word notation: entries must be integers");
  return w;
}

}  // namespace klazar
