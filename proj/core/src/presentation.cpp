#include "koszul/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

QuadraticPresentation::QuadraticPresentation(std::string name, Quiver q, FieldSpec f)
    : name_(std::move(name)), quiver_(std::move(q)), field_(f) {
  for (int x = 0; x < quiver_.vertex_count(); ++x)
    for (int z = 0; z < quiver_.vertex_count(); ++z) {
      RelationBlock b;
      b.source = x;
      b.target = z;
      b.paths = paths_between(quiver_, x, z, 2);
      b.relations = Subspace(field_, b.paths.size());
      blocks_.emplace(std::make_pair(x, z), std::move(b));
    }
}

const RelationBlock& QuadraticPresentation::block(int x, int z) const {
  auto it = blocks_.find({x, z});
  if (it == blocks_.end()) throw Error("no relation block for vertex pair");
  return it->second;
}

void QuadraticPresentation::add_relation(int x, int z, const Vec& v) {
  auto& b = blocks_.at({x, z});
  if (v.size() != b.paths.size()) throw Error("relation vector has wrong length");
  Matrix rows = vstack(b.relations.basis(), Matrix::row_vector(field_, v));
  b.relations = Subspace::span(rows);
}

void QuadraticPresentation::set_relations(int x, int z, Subspace s) {
  auto& b = blocks_.at({x, z});
  if (s.ambient_dim() != b.paths.size()) throw Error("relation subspace has wrong ambient");
  b.relations = std::move(s);
}

std::size_t QuadraticPresentation::relation_count() const {
  std::size_t n = 0;
  for (const auto& [k, b] : blocks_) n += b.relations.dim();
  return n;
}

bool QuadraticPresentation::same_algebra(const QuadraticPresentation& o) const {
  if (!(quiver_ == o.quiver_) || !(field_ == o.field_)) return false;
  for (const auto& [k, b] : blocks_)
    if (!(b.relations == o.block(k.first, k.second).relations)) return false;
  return true;
}

bool RawPresentation::is_quadratic() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RawRelation& r) { return r.length == 2; });
}

QuadraticPresentation to_quadratic(const RawPresentation& raw) {
  QuadraticPresentation p(raw.name, raw.quiver, raw.field);
  for (const auto& r : raw.relations) {
    if (r.length != 2) throw NotQuadratic(r.term_text.empty() ? "?" : r.term_text.front(), r.line, r.column);
    const auto& b = p.block(r.source, r.target);
    Vec v(b.paths.size(), raw.field.zero());
    for (std::size_t i = 0; i < r.paths.size(); ++i) {
      auto it = std::find(b.paths.begin(), b.paths.end(), r.paths[i]);
      v[static_cast<std::size_t>(it - b.paths.begin())] += r.coefficients[i];
    }
    p.add_relation(r.source, r.target, v);
  }
  return p;
}

QuadraticPresentation associated_quadratic(const RawPresentation& raw) {
  QuadraticPresentation p(raw.name, raw.quiver, raw.field);
  const Quiver& q = raw.quiver;
  auto add = [&](int x, int z, const std::vector<std::pair<PathWord, Scalar>>& terms) {
    const auto& b = p.block(x, z);
    Vec v(b.paths.size(), raw.field.zero());
    for (const auto& [w, c] : terms) {
      auto it = std::find(b.paths.begin(), b.paths.end(), w);
      v[static_cast<std::size_t>(it - b.paths.begin())] += c;
    }
    p.add_relation(x, z, v);
  };
  for (const auto& r : raw.relations) {
    if (r.length == 2) {
      std::vector<std::pair<PathWord, Scalar>> t;
      for (std::size_t i = 0; i < r.paths.size(); ++i) t.emplace_back(r.paths[i], r.coefficients[i]);
      add(r.source, r.target, t);
    } else if (r.length == 1) {
      // A linear relation contributes arrow * r and r * arrow.
      for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        PathWord pa{ar.source, ar.target, {a}};
        if (ar.source == r.target) {
          std::vector<std::pair<PathWord, Scalar>> t;
          for (std::size_t i = 0; i < r.paths.size(); ++i) t.emplace_back(concat(pa, r.paths[i]), r.coefficients[i]);
          add(r.source, ar.target, t);
        }
        if (ar.target == r.source) {
          std::vector<std::pair<PathWord, Scalar>> t;
          for (std::size_t i = 0; i < r.paths.size(); ++i) t.emplace_back(concat(r.paths[i], pa), r.coefficients[i]);
          add(ar.source, r.target, t);
        }
      }
    }
  }
  return p;
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p) {
  std::string name = p.name();
  if (!name.empty() && name.back() == '!')
    name.pop_back();
  else
    name += "!";
  QuadraticPresentation d(name, p.quiver().opposite(), p.field());
  for (const auto& [key, b] : p.blocks()) {
    if (b.paths.empty()) continue;
    Subspace ann = annihilator(b.relations);
    const auto& db = d.block(b.target, b.source);
    // Coordinate k of the original block is the reversed word in the dual.
    std::vector<std::size_t> perm(b.paths.size());
    for (std::size_t k = 0; k < b.paths.size(); ++k) {
      auto it = std::find(db.paths.begin(), db.paths.end(), opposite_path(b.paths[k]));
      perm[k] = static_cast<std::size_t>(it - db.paths.begin());
    }
    Matrix rows(p.field(), ann.dim(), b.paths.size());
    for (std::size_t i = 0; i < ann.dim(); ++i)
      for (std::size_t k = 0; k < b.paths.size(); ++k) rows(i, perm[k]) = ann.basis()(i, k);
    d.set_relations(b.target, b.source, Subspace::span(rows));
  }
  return d;
}

std::string to_dsl(const QuadraticPresentation& p) {
  std::ostringstream os;
  const Quiver& q = p.quiver();
  os << "algebra " << (p.name().empty() ? "A" : p.name()) << " over ";
  if (p.field().is_rational())
    os << "Q\n";
  else
    os << "GF " << p.field().characteristic() << "\n";
  os << "vertices";
  for (const auto& v : q.vertices()) os << " " << v;
  os << "\n";
  for (const auto& a : q.arrows())
    os << "arrow " << a.name << " : " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << "\n";
  for (const auto& [key, b] : p.blocks()) {
    const Matrix& m = b.relations.basis();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << "relation";
      bool first = true;
      for (std::size_t k = 0; k < m.cols(); ++k) {
        Scalar c = m(i, k);
        if (c.is_zero()) continue;
        std::string coef;
        bool negative = false;
        if (p.field().is_rational() && sgn(c.to_rational()) < 0) {
          negative = true;
          c = -c;
        }
        if (!c.is_one()) coef = c.str() + " ";
        if (first)
          os << (negative ? " -" : " ") << coef;
        else
          os << (negative ? " - " : " + ") << coef;
        os << path_to_string(q, b.paths[k]);
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

QuadraticPresentation change_field(const QuadraticPresentation& p, FieldSpec f) {
  QuadraticPresentation out(p.name(), p.quiver(), f);
  for (const auto& [key, b] : p.blocks()) {
    const Matrix& m = b.relations.basis();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vec v = m.row(i);
      for (auto& s : v) s = s.in_field(f);
      out.add_relation(key.first, key.second, v);
    }
  }
  return out;
}

}  // namespace koszul
