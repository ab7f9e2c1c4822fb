#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/matrix.hpp"
#include "koszul/quiver.hpp"

namespace koszul {

// Relations of one (source, target) block: a subspace of the span of the
// length-2 paths x -> z, in the order given by paths_between.
struct RelationBlock {
  int source = 0;
  int target = 0;
  std::vector<PathWord> paths;
  Subspace relations;
};

class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;
  QuadraticPresentation(std::string name, Quiver q, FieldSpec f);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const Quiver& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }

  const RelationBlock& block(int x, int z) const;
  const std::map<std::pair<int, int>, RelationBlock>& blocks() const { return blocks_; }
  // Adds `v` (coordinates over block(x,z).paths) to the relation space.
  void add_relation(int x, int z, const Vec& v);
  void set_relations(int x, int z, Subspace s);
  std::size_t relation_count() const;

  // Same quiver, field and relation subspaces (names are ignored).
  bool same_algebra(const QuadraticPresentation& o) const;

 private:
  std::string name_;
  Quiver quiver_;
  FieldSpec field_;
  std::map<std::pair<int, int>, RelationBlock> blocks_;
};

// A homogeneous relation of arbitrary length, restricted to one block.
struct RawRelation {
  int length = 0;
  int source = 0;
  int target = 0;
  std::vector<PathWord> paths;
  Vec coefficients;
  std::vector<std::string> term_text;
  int line = 0;
  int column = 0;
};

// Presentation as parsed: relations may have any length >= 1.
struct RawPresentation {
  std::string name;
  Quiver quiver;
  FieldSpec field;
  std::vector<RawRelation> relations;
  std::vector<std::string> warnings;

  bool is_quadratic() const;
};

// Parses the presentation DSL. Relations mixing blocks are split (with a
// warning); inhomogeneous relations are errors.
RawPresentation parse_raw_presentation(const std::string& text);
// As above, but rejects relation terms of length != 2 with NotQuadratic.
QuadraticPresentation parse_presentation(const std::string& text,
                                         std::vector<std::string>* warnings = nullptr);
QuadraticPresentation to_quadratic(const RawPresentation& raw);

// The degree-2 part of the ideal generated by the raw relations.
QuadraticPresentation associated_quadratic(const RawPresentation& raw);

// Opposite quiver, relations the annihilator of each block under the
// dual-path pairing.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);

// Renders the presentation in the DSL; parse_presentation(to_dsl(p)) is p.
std::string to_dsl(const QuadraticPresentation& p);

// Replaces the field, reducing rational coefficients modulo p.
QuadraticPresentation change_field(const QuadraticPresentation& p, FieldSpec f);

}  // namespace koszul
