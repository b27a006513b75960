#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

#include "klazar/bijections.hpp"
#include "klazar/json_io.hpp"
#include "klazar/render.hpp"
#include "klazar/verify.hpp"

using namespace klazar;

namespace {

constexpr int kEnumerationGuard = 7;
constexpr int kFormulaGuard = 30;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void guard(int n, int bound, bool force) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (n > bound && !force) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the default bound " + std::to_string(bound) +
                     "; pass --force to run anyway");
  }
}

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::string word_text(const TrapezoidalWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

std::string marked_text(const NodeMarkedKlazarTree& t) {
  std::string s = t.tree.to_string();
  for (Label v : t.marked) s += " " + std::to_string(v);
  return s;
}

// An emitted object: canonical JSON plus its text notation.
struct Out {
  Json json;
  std::string text;
};

Out out(const IncreasingTree& t) { return {to_json(t), t.to_string()}; }
Out out(const NodeMarkedKlazarTree& t) { return {to_json(t), marked_text(t)}; }
Out out(const PerfectMatching& m) { return {to_json(m), m.to_string()}; }
Out out(const std::vector<CodeEntry>& c) { return {to_json(c), code_to_string(c)}; }
Out out(const TrapezoidalWord& w) { return {to_json(w), word_text(w)}; }
Out out(const OrderedShape& s) { return {to_json(s), s.to_string()}; }

void print(const Out& o, const std::string& format) {
  if (format == "text") {
    std::cout << o.text << '\n';
  } else {
    std::cout << o.json.dump() << '\n';
  }
}

bool looks_like_code(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '[') continue;
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '"';
  }
  return false;
}

bool is_tree_code(const std::vector<CodeEntry>& c) {
  return c.empty() || c.front().letter == 'R' || c.front().letter == 'L';
}

bool looks_like_tree(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '0') return true;
    break;
  }
  return text.find("\"label\"") != std::string::npos;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const std::string& kind, int n, const std::string& format, bool force) {
  guard(n, kEnumerationGuard, force);
  std::vector<Out> items;
  long count = 0;
  auto emit = [&](const Out& o) {
    ++count;
    if (format == "json") {
      items.push_back(o);
    } else {
      print(o, format);
    }
  };
  if (kind == "trees") {
    for_each_increasing_tree(n, [&](const IncreasingTree& t) { emit(out(t)); });
  } else if (kind == "klazar-trees") {
    for (const auto& t : enumerate_klazar_trees(n)) emit(out(t));
  } else if (kind == "matchings") {
    for_each_matching(n, [&](const PerfectMatching& m) { emit(out(m)); });
  } else if (kind == "no-upline-matchings") {
    for (const auto& m : enumerate_no_upline_matchings(n)) emit(out(m));
  } else if (kind == "shapes") {
    for (const auto& s : enumerate_shapes(n)) emit(out(s));
  } else if (kind == "words") {
    for_each_word(n, [&](const TrapezoidalWord& w) { emit(out(w)); });
  } else if (kind == "tree-codes") {
    for (const auto& c : enumerate_tree_codes(n)) emit(out(c));
  } else if (kind == "match-codes") {
    for (const auto& c : enumerate_matching_codes(n)) emit(out(c));
  } else {
    throw UsageError("unknown kind \"" + kind + "\"");
  }
  if (format == "json") {
    Json objects = Json::array();
    for (auto& o : items) objects.push_back(std::move(o.json));
    std::cout << Json{{"kind", kind}, {"n", n}, {"objects", objects}, {"count", count}}.dump() << '\n';
  } else if (format == "text") {
    std::cout << "count " << count << '\n';
  } else {
    std::cout << Json{{"count", count}}.dump() << '\n';
  }
  return 0;
}

int cmd_map(const std::string& bijection, const std::string& format) {
  const std::string input = read_stdin();
  Out result;
  if (bijection == "phi") {
    auto t = read_marked_tree(input);
    t.validate();
    result = out(mark_violators(t));
  } else if (bijection == "phi-inv") {
    result = out(unmark_violators(read_tree(input)));
  } else if (bijection == "sigma") {
    result = out(involuted_tree_code(read_tree(input)));
  } else if (bijection == "sigma-inv") {
    result = out(tree_from_involuted_code(read_code(input)));
  } else if (bijection == "tau") {
    result = out(upline_tracking_matching(read_code(input)));
  } else if (bijection == "tau-inv") {
    result = out(upline_tracking_code(read_matching(input)));
  } else if (bijection == "tau-variant") {
    result = out(downline_tracking_matching(read_code(input)));
  } else if (bijection == "Phi") {
    result = out(tree_to_matching_recursive(read_tree(input)));
  } else if (bijection == "Phi-explicit") {
    result = out(tree_to_matching(read_tree(input)));
  } else if (bijection == "tree-code") {
    result = out(tree_to_code(read_tree(input)));
  } else if (bijection == "code-tree") {
    result = out(code_to_tree(read_code(input)));
  } else if (bijection == "match-code") {
    result = out(matching_to_code(read_matching(input)));
  } else if (bijection == "code-match") {
    result = out(code_to_matching(read_code(input)));
  } else if (bijection == "code-corr") {
    auto c = read_code(input);
    result = is_tree_code(c) ? out(treecode_to_matchcode(c)) : out(matchcode_to_treecode(c));
  } else if (bijection == "trapezoidal") {
    if (looks_like_code(input)) {
      result = out(code_to_trapezoidal(read_code(input)));
    } else {
      result = out(trapezoidal_to_code(read_word(input)));
    }
  } else {
    throw UsageError("unknown bijection \"" + bijection + "\"");
  }
  print(result, format);
  return 0;
}

int cmd_stats(const std::string& kind, int n, const std::string& stat, const std::string& format, bool force) {
  guard(n, kEnumerationGuard, force);
  std::map<std::vector<int>, long> tally;
  auto bad_stat = [&] { throw UsageError("statistic \"" + stat + "\" does not apply to " + kind); };

  if (kind == "trees" || kind == "klazar-trees") {
    auto tree_value = [&](const IncreasingTree& t) -> std::vector<int> {
      if (stat == "kv") return {static_cast<int>(klazar_violators(t).size())};
      auto s = tree_stats(t);
      if (stat == "bad") return {static_cast<int>(s.bad.size())};
      if (stat == "reverse-bad") return {static_cast<int>(s.reverse_bad.size())};
      if (stat == "leaves") return {s.leaves};
      if (stat == "non-dt-leaves") return {s.non_dt_leaves};
      bad_stat();
      return {};
    };
    if (kind == "trees") {
      for_each_increasing_tree(n, [&](const IncreasingTree& t) { ++tally[tree_value(t)]; });
    } else {
      for (const auto& t : enumerate_klazar_trees(n)) ++tally[tree_value(t)];
    }
  } else if (kind == "matchings" || kind == "no-upline-matchings") {
    auto value = [&](const PerfectMatching& m) -> std::vector<int> {
      if (stat == "uplines") return {upline_count(m)};
      if (stat == "verticals") return {vertical_count(m)};
      if (stat == "odd-to-even") return {weak_downline_count(m)};
      if (stat == "joint-upline-downline-vertical") return {upline_count(m), weak_downline_count(m), vertical_count(m)};
      bad_stat();
      return {};
    };
    if (kind == "matchings") {
      for_each_matching(n, [&](const PerfectMatching& m) { ++tally[value(m)]; });
    } else {
      for (const auto& m : enumerate_no_upline_matchings(n)) ++tally[value(m)];
    }
  } else if (kind == "words") {
    for_each_word(n, [&](const TrapezoidalWord& w) {
      auto [e, o] = word_parity_stats(w);
      if (stat == "even-odd-multiplicity") {
        ++tally[{e}];
      } else if (stat == "odd-odd-multiplicity") {
        ++tally[{o}];
      } else if (stat == "joint-parity") {
        ++tally[{e, o}];
      } else {
        bad_stat();
      }
    });
  } else {
    throw UsageError("unknown kind \"" + kind + "\"");
  }

  long total = 0;
  for (const auto& [k, v] : tally) total += v;
  if (format == "text") {
    for (const auto& [k, v] : tally) {
      for (std::size_t i = 0; i < k.size(); ++i) std::cout << (i ? "," : "") << k[i];
      std::cout << '\t' << v << '\n';
    }
    std::cout << "total\t" << total << '\n';
  } else {
    Json dist = Json::array();
    for (const auto& [k, v] : tally) dist.push_back({{"value", k.size() == 1 ? Json(k[0]) : Json(k)}, {"count", v}});
    std::cout << Json{{"kind", kind}, {"n", n}, {"stat", stat}, {"distribution", dist}, {"total", total}}.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& check, int max_n, bool max_n_given, const std::string& format, bool force) {
  std::vector<std::string> names;
  if (check == "all") {
    for (const auto& c : verification_checks()) names.push_back(c.name);
  } else {
    try {
      check_info(check);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    names.push_back(check);
  }
  bool all_passed = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const auto& info = check_info(name);
    const int size = max_n_given ? max_n : info.default_max_n;
    guard(size, info.guard_max_n, force);
    auto report = run_check(name, size);
    all_passed = all_passed && report.passed;
    if (format == "text") {
      std::cout << report.to_text();
      std::cout.flush();
    } else if (format == "jsonl" || check != "all") {
      std::cout << report.to_json().dump() << '\n';
    } else {
      reports.push_back(report.to_json());
    }
  }
  if (format == "json" && check == "all") std::cout << reports.dump() << '\n';
  return all_passed ? 0 : 1;
}

int cmd_table(const std::string& which, int n, const std::string& format, bool force) {
  guard(n, kFormulaGuard, force);
  if (which == "a-nl") {
    const auto f = gf_Fstarstar(n);
    Json rows = Json::array();
    for (int m = 1; m <= n; ++m) {
      Json row = Json::array();
      for (int l = 1; l <= m; ++l) {
        const Rational c = f[m].coefficient(l, 0);
        row.push_back(c.get_num().get_str());
        if (format == "text") std::cout << (l > 1 ? "\t" : "") << c.get_num();
      }
      if (format == "text") std::cout << '\n';
      rows.push_back(row);
    }
    if (format != "text") {
      std::cout << Json{{"which", which}, {"n_range", {1, n}}, {"l_range", {1, n}}, {"rows", rows}}.dump() << '\n';
    }
  } else if (which == "a-nij") {
    const auto table = refined_tree_counts(n);
    if (format == "text") {
      for (const auto& [idx, v] : table.entries()) {
        if (idx[0] >= 1) std::cout << idx[0] << '\t' << idx[1] << '\t' << idx[2] << '\t' << v << '\n';
      }
    } else {
      Json j = to_json(table);
      j["which"] = which;
      std::cout << j.dump() << '\n';
    }
  } else if (which == "w12") {
    const auto w = w12_sequence(n);
    Json values = Json::array();
    for (int m = 0; m <= n; ++m) {
      values.push_back(w[m].get_str());
      if (format == "text") std::cout << (m ? " " : "") << w[m];
    }
    if (format == "text") {
      std::cout << '\n';
    } else {
      std::cout << Json{{"which", which}, {"n_range", {0, n}}, {"values", values}}.dump() << '\n';
    }
  } else if (which == "no-upline") {
    Json rows = Json::array();
    for (int m = 0; m <= n; ++m) {
      Json row = Json::array();
      for (int k = 0; 2 * k <= m; ++k) {
        row.push_back(no_upline_refined(m, k).get_str());
        if (format == "text") std::cout << (k ? "\t" : "") << no_upline_refined(m, k);
      }
      if (format == "text") std::cout << '\n';
      rows.push_back(row);
    }
    if (format != "text") {
      std::cout << Json{{"which", which}, {"n_range", {0, n}}, {"k_range", {0, n / 2}}, {"rows", rows}}.dump() << '\n';
    }
  } else if (which == "eq4-terms") {
    auto [a, b, c] = eq4_terms(n);
    if (format == "text") {
      std::cout << a << ' ' << b << ' ' << c << '\n';
    } else {
      std::cout << Json{{"which", which}, {"n", n}, {"terms", {a.get_str(), b.get_str(), c.get_str()}}}.dump() << '\n';
    }
  } else {
    throw UsageError("unknown table \"" + which + "\"");
  }
  return 0;
}

int cmd_series(const std::string& which, int order, const std::string& format, bool force) {
  guard(order, kFormulaGuard, force);
  const auto& names = gf_names();
  if (std::find(names.begin(), names.end(), which) == names.end()) throw UsageError("unknown series \"" + which + "\"");
  const auto f = gf_by_name(which, order);
  if (format == "text") {
    for (int m = 0; m <= order; ++m) std::cout << m << '\t' << f[m].to_string() << '\n';
  } else {
    std::cout << to_json(f).dump() << '\n';
  }
  return 0;
}

int cmd_draw(const std::string& kind, const std::string& format) {
  const std::string input = read_stdin();
  const bool tree = kind == "tree" || (kind.empty() && looks_like_tree(input));
  if (!kind.empty() && kind != "tree" && kind != "matching") throw UsageError("draw --kind is tree or matching");
  if (tree) {
    auto t = read_tree(input);
    std::cout << (format == "svg" ? tree_svg(t) : tree_ascii(t));
  } else {
    auto m = read_matching(input);
    std::cout << (format == "svg" ? matching_svg(m) : matching_ascii(m));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"klazar: increasing trees, perfect matchings and their bijections"};
  app.require_subcommand(1);

  int n = 3, max_n = 0;
  std::string kind, stat, check, which, bijection, format;
  bool force = false;

  auto* enumerate = app.add_subcommand("enumerate", "list every object of a kind and size");
  enumerate->add_option("--kind", kind)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--format", format, "jsonl (default), json or text")->check(CLI::IsMember({"json", "jsonl", "text"}));
  enumerate->add_flag("--force", force);

  auto* map = app.add_subcommand("map", "send an object on standard input through a bijection");
  map->add_option("bijection", bijection)->required();
  map->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* stats = app.add_subcommand("stats", "distribution of a statistic by enumeration");
  stats->add_option("--kind", kind)->required();
  stats->add_option("--n", n)->required();
  stats->add_option("--stat", stat)->required();
  stats->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  stats->add_flag("--force", force);

  auto* verify = app.add_subcommand("verify", "run a verification check (or all)");
  verify->add_option("--check", check)->required();
  auto* max_opt = verify->add_option("--max-n", max_n);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "jsonl", "text"}));
  verify->add_flag("--force", force);

  auto* table = app.add_subcommand("table", "emit a counting table");
  table->add_option("--which", which)->required();
  table->add_option("--n", n)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  table->add_flag("--force", force);

  auto* series = app.add_subcommand("series", "emit a truncated generating function");
  series->add_option("--which", which)->required();
  series->add_option("--n,--order", n)->required();
  series->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  series->add_flag("--force", force);

  auto* draw = app.add_subcommand("draw", "render a tree or matching from standard input");
  draw->add_option("--kind", kind);
  draw->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(kind, n, format.empty() ? "jsonl" : format, force);
    if (*map) return cmd_map(bijection, format.empty() ? "json" : format);
    if (*stats) return cmd_stats(kind, n, stat, format.empty() ? "json" : format, force);
    if (*verify) return cmd_verify(check, max_n, max_opt->count() > 0, format.empty() ? "json" : format, force);
    if (*table) return cmd_table(which, n, format.empty() ? "text" : format, force);
    if (*series) return cmd_series(which, n, format.empty() ? "json" : format, force);
    if (*draw) return cmd_draw(kind, format.empty() ? "ascii" : format);
  } catch (const UsageError& e) {
    std::cerr << "klazar: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "klazar: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "klazar: invalid input: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
