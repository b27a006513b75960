#include "klazar/render.hpp"

#include <functional>
#include <sstream>
#include <vector>

namespace klazar {

std::string tree_ascii(const IncreasingTree& t) {
  std::ostringstream out;
  std::function<void(Label, int)> walk = [&](Label v, int depth) {
    out << std::string(2 * depth, ' ') << v;
    if (is_klazar_violator(t, v)) out << " *";
    out << '\n';
    for (Label c : t.children(v)) walk(c, depth + 1);
  };
  walk(0, 0);
  return out.str();
}

std::string tree_svg(const IncreasingTree& t) {
  constexpr int dx = 40, dy = 50, margin = 20;
  std::vector<double> x(t.vertex_count());
  std::vector<int> depth(t.vertex_count());
  int next_leaf = 0, max_depth = 0;
  std::function<void(Label, int)> place = [&](Label v, int d) {
    depth[v] = d;
    max_depth = std::max(max_depth, d);
    auto kids = t.children(v);
    if (kids.empty()) {
      x[v] = next_leaf++;
      return;
    }
    for (Label c : kids) place(c, d + 1);
    x[v] = (x[kids.front()] + x[kids.back()]) / 2;
  };
  place(0, 0);
  auto px = [&](Label v) { return margin + x[v] * dx; };
  auto py = [&](Label v) { return margin + depth[v] * dy; };
  const int width = 2 * margin + std::max(0, next_leaf - 1) * dx;
  const int height = 2 * margin + max_depth * dy;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (Label v = 1; v <= t.max_label(); ++v) {
    Label p = t.parent(v);
    out << "  <line x1=\"" << px(p) << "\" y1=\"" << py(p) << "\" x2=\"" << px(v) << "\" y2=\"" << py(v)
        << "\" stroke=\"black\"/>\n";
  }
  for (Label v = 0; v <= t.max_label(); ++v) {
    const bool kv = is_klazar_violator(t, v);
    out << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"9\" fill=\"white\" stroke=\""
        << (kv ? "red" : "black") << "\"" << (kv ? " class=\"violator\"" : "") << "/>\n";
    out << "  <text x=\"" << px(v) << "\" y=\"" << py(v) + 4 << "\" font-size=\"11\" text-anchor=\"middle\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string matching_ascii(const PerfectMatching& m) {
  const int n = m.size();
  std::ostringstream out;
  std::string top = "top ", mid = "    ", bot = "bot ";
  for (int c = 1; c <= n; ++c) {
    top += " o";
    mid += m.partner(2 * c - 1) == 2 * c ? " |" : "  ";
    bot += " o";
  }
  out << top << '\n' << mid << '\n' << bot << '\n';
  auto name = [](int v) { return DotRef::of_value(v).to_string(); };
  for (auto [a, b] : m.pairs()) {
    const bool arc = a % 2 == b % 2;
    const char* kind = arc ? "arc" : (a % 2 == 0 ? "upline" : (b == a + 1 ? "vertical" : "downline"));
    out << a << ' ' << b << "  " << name(a) << " - " << name(b) << "  " << kind << '\n';
  }
  return out.str();
}

std::string matching_svg(const PerfectMatching& m) {
  constexpr int dx = 40, margin = 30, top_y = 30, bot_y = 90;
  const int n = m.size();
  auto cx = [&](int pos) { return margin + (pos - 1) * dx; };
  auto at = [&](int v) {
    DotRef d = DotRef::of_value(v);
    return std::pair<int, int>{cx(d.pos), d.row == Row::Top ? top_y : bot_y};
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + std::max(0, n - 1) * dx
      << "\" height=\"" << bot_y + margin << "\">\n";
  for (auto [a, b] : m.pairs()) {
    auto [x1, y1] = at(a);
    auto [x2, y2] = at(b);
    if (a % 2 == b % 2) {
      const int bulge = a % 2 ? -20 : 20;
      out << "  <path d=\"M " << x1 << ' ' << y1 << " Q " << (x1 + x2) / 2 << ' ' << y1 + bulge << ' ' << x2 << ' '
          << y2 << "\" fill=\"none\" stroke=\"black\" class=\"arc\"/>\n";
    } else if (a % 2 == 0) {
      out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"red\" stroke-dasharray=\"4 2\" class=\"upline\"/>\n";
    } else {
      out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"black\" class=\"downline\"/>\n";
    }
  }
  for (int v = 1; v <= 2 * n; ++v) {
    auto [x, y] = at(v);
    out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"black\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << (v % 2 ? y - 10 : y + 18) << "\" font-size=\"10\" text-anchor=\"middle\">"
        << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace klazar
