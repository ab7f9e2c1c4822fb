#include "koszul/sampling.hpp"

namespace koszul {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vec random_vec(const FieldSpec& f, std::size_t n, Rng& rng) {
  Vec v(n, f.zero());
  for (auto& x : v) x = random_scalar(f, rng);
  return v;
}

std::vector<Generator> random_generators(const GradedAlgebra& a, Rng& rng, int count, int shift_lo, int shift_hi) {
  std::vector<Generator> g;
  for (int k = 0; k < count; ++k) g.push_back({uniform(rng, 0, a.vertex_count() - 1), uniform(rng, shift_lo, shift_hi)});
  return g;
}

}  // namespace

Scalar random_scalar(const FieldSpec& f, Rng& rng) {
  if (f.is_rational()) return f.from_int(uniform(rng, -3, 3));
  return f.from_int(std::uniform_int_distribution<std::int64_t>(0, f.characteristic() - 1)(rng));
}

QuadraticPresentation random_presentation(Rng& rng, const FieldSpec& f, int max_vertices, int max_arrows) {
  Quiver q;
  int nv = uniform(rng, 1, max_vertices), na = uniform(rng, 1, max_arrows);
  for (int v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));
  for (int a = 0; a < na; ++a) q.add_arrow("a" + std::to_string(a), uniform(rng, 0, nv - 1), uniform(rng, 0, nv - 1));
  QuadraticPresentation p("RANDOM", q, f);
  for (int x = 0; x < nv; ++x)
    for (int z = 0; z < nv; ++z) {
      std::size_t n = p.block(x, z).paths.size();
      if (!n) continue;
      int r = uniform(rng, 0, static_cast<int>(n));
      for (int k = 0; k < r; ++k) p.add_relation(x, z, random_vec(f, n, rng));
    }
  return p;
}

GradedModule random_module(const AlgebraPtr& a, Rng& rng, const ModuleSampler& s) {
  const GradedAlgebra& A = *a;
  std::optional<int> cut;
  if (!A.is_finite_dimensional()) cut = s.max_degree;
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto g0 = random_generators(A, rng, uniform(rng, 1, s.max_generators), -1, 0);
    auto g1 = random_generators(A, rng, uniform(rng, 0, s.max_relations), -3, -1);
    SymbolicMatrix m(g0, g1);
    for (std::size_t b = 0; b < g0.size(); ++b)
      for (std::size_t c = 0; c < g1.size(); ++c) {
        int deg = g0[b].shift - g1[c].shift;
        std::size_t d = A.dim(g0[b].vertex, g1[c].vertex, deg);
        if (deg < 1 || !d) continue;
        AlgElem e{g0[b].vertex, g1[c].vertex, deg, random_vec(A.field(), d, rng)};
        if (!e.is_zero()) m.set(b, c, std::move(e));
      }
    GradedModule p0 = materialize_term(a, g0, cut), p1 = materialize_term(a, g1, cut);
    GradedModule out = p1.is_zero() ? p0 : cokernel(materialize_map(a, m, p1, p0)).module;
    out.trim();
    if (!out.is_zero()) return out;
  }
  return simple(a, 0, 0);
}

ModuleMorphism random_morphism(const GradedModule& m, const GradedModule& n, Rng& rng) {
  ModuleMorphism f(m, n);
  for (const auto& b : hom_graded(m, n)) f = f + b.scaled(random_scalar(m.field(), rng));
  return f;
}

ModuleComplex random_complex(const AlgebraPtr& a, Rng& rng, const ModuleSampler& s) {
  GradedModule m = random_module(a, rng, s), n = random_module(a, rng, s);
  ModuleMorphism f = random_morphism(m, n, rng);
  Quotient c = cokernel(f);
  ModuleComplex x(a);
  x.set_term(0, m);
  x.set_term(1, n);
  x.set_term(2, c.module);
  x.set_diff(0, f);
  x.set_diff(1, c.projection);
  return x;
}

}  // namespace koszul
