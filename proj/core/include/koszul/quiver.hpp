#pragma once

#include <optional>
#include <string>
#include <vector>

namespace koszul {

struct Arrow {
  std::string name;
  int source;
  int target;
};

class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int source, int target);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_arrow(const std::string& name) const;

  // Same vertices; every arrow reversed, keeping its name and index.
  Quiver opposite() const;

  bool operator==(const Quiver&) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

inline bool operator==(const Arrow& a, const Arrow& b) {
  return a.name == b.name && a.source == b.source && a.target == b.target;
}

// A path written left to right as in "b*a": the rightmost arrow is applied
// first. An empty word is the trivial path at `source` (== target).
struct PathWord {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const PathWord&) const = default;
  auto operator<=>(const PathWord&) const = default;
};

std::string path_to_string(const Quiver& q, const PathWord& p);
// Concatenation u*v (v first). Requires target(v) == source(u).
PathWord concat(const PathWord& u, const PathWord& v);
// The same path read in the opposite quiver.
PathWord opposite_path(const PathWord& p);

// All paths of length n from x to z, ordered lexicographically by the
// declaration indices of the written arrows.
std::vector<PathWord> paths_between(const Quiver& q, int x, int z, int n);

struct WellDirected {
  bool ok = false;
  std::vector<int> order;
};

// Total vertex order in which every arrow runs from a vertex to its
// immediate successor.
WellDirected is_well_directed(const Quiver& q);

}  // namespace koszul
