#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

// Names of the built-in example algebras, in listing order.
const std::vector<std::string>& corpus_names();
// DSL text for a corpus algebra, or nullopt for an unknown name.
std::optional<std::string> corpus_source(const std::string& name);
QuadraticPresentation corpus_presentation(const std::string& name);

// Path algebra of 1 -> 2 -> 3 without relations.
QuadraticPresentation path_algebra_a3();

}  // namespace koszul
