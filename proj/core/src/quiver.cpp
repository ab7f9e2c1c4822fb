#include "koszul/quiver.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

int Quiver::add_vertex(const std::string& name) {
  if (find_vertex(name)) throw Error("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return vertex_count() - 1;
}

int Quiver::add_arrow(const std::string& name, int source, int target) {
  if (find_arrow(name)) throw Error("duplicate arrow '" + name + "'");
  if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
    throw Error("arrow '" + name + "' has an undeclared endpoint");
  arrows_.push_back({name, source, target});
  return arrow_count() - 1;
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].name == name) return i;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.vertices_ = vertices_;
  for (const auto& a : arrows_) q.arrows_.push_back({a.name, a.target, a.source});
  return q;
}

bool Quiver::operator==(const Quiver& o) const {
  return vertices_ == o.vertices_ && arrows_ == o.arrows_;
}

std::string path_to_string(const Quiver& q, const PathWord& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_name(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

PathWord concat(const PathWord& u, const PathWord& v) {
  if (v.target != u.source) throw Error("concatenating non-composable paths");
  PathWord w{v.source, u.target, u.arrows};
  w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
  return w;
}

PathWord opposite_path(const PathWord& p) {
  PathWord w{p.target, p.source, p.arrows};
  std::reverse(w.arrows.begin(), w.arrows.end());
  return w;
}

std::vector<PathWord> paths_between(const Quiver& q, int x, int z, int n) {
  if (n == 0) {
    if (x == z) return {PathWord{x, x, {}}};
    return {};
  }
  std::vector<PathWord> out;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (ar.target != z) continue;
    for (auto& tail : paths_between(q, x, ar.source, n - 1)) {
      PathWord w{x, z, {a}};
      w.arrows.insert(w.arrows.end(), tail.arrows.begin(), tail.arrows.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

WellDirected is_well_directed(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> succ(static_cast<std::size_t>(n), -1), pred(static_cast<std::size_t>(n), -1);
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) return {};
    auto& s = succ[static_cast<std::size_t>(a.source)];
    auto& p = pred[static_cast<std::size_t>(a.target)];
    if ((s != -1 && s != a.target) || (p != -1 && p != a.source)) return {};
    s = a.target;
    p = a.source;
  }
  WellDirected w;
  for (int v = 0; v < n; ++v) {
    if (pred[static_cast<std::size_t>(v)] != -1) continue;
    for (int u = v; u != -1; u = succ[static_cast<std::size_t>(u)]) {
      w.order.push_back(u);
    }
  }
  // Vertices never reached lie on a cycle.
  if (static_cast<int>(w.order.size()) != n) return {};
  w.ok = true;
  return w;
}

}  // namespace koszul
