#include "koszul/io.hpp"

#include <iomanip>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(std::move(r));
  }
  return rows;
}

Scalar parse_scalar(const Json& v, const FieldSpec& f) {
  if (v.is_string()) return f.parse(v.get<std::string>());
  if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  throw ParseError("module file: scalars must be strings or integers");
}

int vertex_ref(const Json& v, const Quiver& q) {
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= q.vertex_count()) throw ParseError("module file: vertex index out of range");
    return i;
  }
  auto f = q.find_vertex(v.get<std::string>());
  if (!f) throw ParseError("module file: unknown vertex '" + v.get<std::string>() + "'");
  return *f;
}

int arrow_ref(const std::string& name, const Quiver& q) {
  if (auto f = q.find_arrow(name)) return *f;
  bool digits = !name.empty() && name.find_first_not_of("0123456789") == std::string::npos;
  if (digits && std::stoi(name) < q.arrow_count()) return std::stoi(name);
  throw ParseError("module file: unknown arrow '" + name + "'");
}

// Runs of equal generators as (vertex, shift, multiplicity).
Json generator_runs(const std::vector<Generator>& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.size();) {
    std::size_t j = i;
    while (j < g.size() && g[j] == g[i]) ++j;
    out.push_back({g[i].vertex, g[i].shift, j - i});
    i = j;
  }
  return out;
}

std::string verdict_word(Verdict v) { return to_string(v); }

}  // namespace

Json module_to_json(const GradedModule& m) {
  const Quiver& q = m.algebra().quiver();
  Json j;
  j["schema"] = kSchemaVersion;
  j["algebra"] = m.algebra().presentation().name();
  j["dims"] = Json::array();
  for (int n = m.min_degree(); n <= m.max_degree(); ++n)
    for (int x = 0; x < q.vertex_count(); ++x)
      if (m.dim(x, n)) j["dims"].push_back({q.vertex_name(x), n, m.dim(x, n)});
  j["action"] = Json::object();
  for (int a = 0; a < q.arrow_count(); ++a) {
    Json blocks = Json::array();
    for (int n = m.min_degree(); n <= m.max_degree(); ++n) {
      Matrix act = m.action(a, n);
      if (act.empty() || act.is_zero()) continue;
      blocks.push_back({n, matrix_rows(act)});
    }
    if (!blocks.empty()) j["action"][q.arrow(a).name] = std::move(blocks);
  }
  return j;
}

GradedModule module_from_json(const Json& j, const AlgebraPtr& a) {
  const Quiver& q = a->quiver();
  const FieldSpec& f = a->field();
  GradedModule m(a);
  try {
    for (const auto& d : j.at("dims")) m.set_dim(vertex_ref(d.at(0), q), d.at(1).get<int>(), d.at(2).get<std::size_t>());
    if (j.contains("action"))
      for (const auto& [name, blocks] : j.at("action").items()) {
        int ar = arrow_ref(name, q);
        for (const auto& b : blocks) {
          int n = b.at(0).get<int>();
          const Json& rows = b.at(1);
          Matrix mat(f, m.dim(q.arrow(ar).target, n + 1), m.dim(q.arrow(ar).source, n));
          if (rows.size() != mat.rows()) throw ParseError("module file: arrow '" + name + "' degree " + std::to_string(n) + " has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(mat.rows()));
          for (std::size_t r = 0; r < mat.rows(); ++r) {
            if (rows[r].size() != mat.cols()) throw ParseError("module file: arrow '" + name + "' has a row of the wrong length");
            for (std::size_t c = 0; c < mat.cols(); ++c) mat(r, c) = parse_scalar(rows[r][c], f);
          }
          m.set_action(ar, n, std::move(mat));
        }
      }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("module file: ") + e.what());
  }
  if (!m.satisfies_relations()) throw ParseError("module file: the action does not satisfy the relations");
  return m;
}

Json presentation_to_json(const QuadraticPresentation& p) {
  const Quiver& q = p.quiver();
  Json j;
  j["schema"] = kSchemaVersion;
  j["name"] = p.name();
  j["field"] = p.field().name();
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows()) j["arrows"].push_back({a.name, q.vertex_name(a.source), q.vertex_name(a.target)});
  j["relations"] = Json::array();
  for (const auto& [k, b] : p.blocks()) {
    if (!b.relations.dim()) continue;
    Json paths = Json::array();
    for (const auto& w : b.paths) paths.push_back(path_to_string(q, w));
    j["relations"].push_back({{"source", q.vertex_name(b.source)},
                              {"target", q.vertex_name(b.target)},
                              {"paths", paths},
                              {"rows", matrix_rows(b.relations.basis())}});
  }
  j["relation_count"] = p.relation_count();
  j["dsl"] = to_dsl(p);
  return j;
}

Json complex_to_json(const SymbolicComplex& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["algebra"] = c.algebra().presentation().name();
  j["terms"] = Json::array();
  j["differentials"] = Json::array();
  for (int p = c.lo(); p <= c.hi(); ++p) j["terms"].push_back({p, generator_runs(c.term(p))});
  for (int p = c.lo(); p < c.hi(); ++p) {
    SymbolicMatrix d = c.diff(p);
    Json entries = Json::array();
    for (std::size_t b = 0; b < d.rows(); ++b)
      for (std::size_t a = 0; a < d.cols(); ++a) {
        const AlgElem& e = d.at(b, a);
        if (e.is_zero()) continue;
        Json coords = Json::array();
        for (const auto& s : e.coords) coords.push_back(s.str());
        entries.push_back({b, a, coords});
      }
    j["differentials"].push_back({p, entries});
  }
  return j;
}

Json ext_table_to_json(const ExtTable& t) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["algebra"] = t.algebra;
  j["horizon"] = t.horizon;
  j["entries"] = Json::array();
  for (const auto& e : t.entries) j["entries"].push_back({e.n, e.x, e.y, e.i, e.dim});
  return j;
}

Json certificate_to_json(const KoszulCertificate& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["verdict"] = to_string(c.verdict);
  j["horizon"] = c.horizon;
  if (c.verdict == KoszulVerdict::FailsAt)
    j["witness"] = {{"n", c.witness.n}, {"x", c.witness.x}, {"y", c.witness.y}, {"i", c.witness.i}, {"dim", c.witness.dim}};
  if (c.verdict == KoszulVerdict::NotQuadraticIdeal) {
    j["offending_term"] = c.offending_term;
    j["line"] = c.offending_line;
  } else {
    j["evidence"] = ext_table_to_json(c.evidence);
  }
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["identity"] = r.identity;
  j["algebra"] = r.algebra;
  j["parameters"] = Json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  j["verdict"] = verdict_word(r.verdict);
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["checks"] = r.rows.size();
  j["failures"] = r.count(Verdict::Fail);
  j["inconclusive"] = r.count(Verdict::Inconclusive);
  j["columns"] = r.columns;
  j["rows"] = Json::array();
  for (const auto& row : r.rows) j["rows"].push_back({{"key", row.key}, {"values", row.values}, {"status", verdict_word(row.status)}});
  j["notes"] = r.notes;
  return j;
}

std::string ext_table_text(const ExtTable& t) {
  std::ostringstream os;
  os << "Ext table for " << t.algebra << " (horizon " << t.horizon << ")\n";
  os << std::setw(4) << "n" << std::setw(5) << "x" << std::setw(5) << "y" << std::setw(5) << "i" << std::setw(6) << "dim"
     << "\n";
  for (const auto& e : t.entries)
    os << std::setw(4) << e.n << std::setw(5) << e.x << std::setw(5) << e.y << std::setw(5) << e.i << std::setw(6)
       << e.dim << "\n";
  return os.str();
}

std::string complex_text(const SymbolicComplex& c) {
  std::ostringstream os;
  const Quiver& q = c.algebra().quiver();
  for (int p = c.lo(); p <= c.hi(); ++p) {
    os << std::setw(4) << p << " :";
    auto runs = generator_runs(c.term(p));
    if (runs.empty()) os << " 0";
    bool first = true;
    for (const auto& r : runs) {
      os << (first ? " " : " + ");
      first = false;
      std::size_t mult = r[2].get<std::size_t>();
      if (mult > 1) os << mult << "*";
      os << "P_" << q.vertex_name(r[0].get<int>()) << "<" << r[1].get<int>() << ">";
    }
    os << "\n";
  }
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity << " on " << r.algebra << ": " << to_string(r.verdict);
  if (!r.witness.empty()) os << " (" << r.witness << ")";
  os << "\n  checks " << r.rows.size() << ", failures " << r.count(Verdict::Fail) << ", inconclusive "
     << r.count(Verdict::Inconclusive) << "\n";
  for (const auto& [k, v] : r.parameters) os << "  " << k << " = " << v << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  std::size_t shown = 0;
  for (const auto& row : r.rows) {
    if (row.status == Verdict::Pass && r.rows.size() > 40) continue;
    if (++shown > 40) break;
    os << "  " << std::left << std::setw(8) << to_string(row.status) << std::right << " " << row.key << " :";
    for (std::size_t i = 0; i < row.values.size(); ++i)
      os << " " << (i < r.columns.size() ? r.columns[i] : "v") << "=" << row.values[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace koszul
