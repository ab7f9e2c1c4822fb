#include "koszul/field.hpp"

#include <ostream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("division by zero in GF(" + std::to_string(p) + ")");
  return mod_norm(t, p);
}

std::int64_t reduce_rational(const mpq_class& q, std::int64_t p) {
  mpz_class pz(static_cast<long>(p));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  std::int64_t n = mod_norm(num.get_si(), p);
  std::int64_t d = mod_norm(den.get_si(), p);
  if (d == 0) throw Error("denominator vanishes in GF(" + std::to_string(p) + ")");
  return n * mod_inv(d, p) % p;
}

mpq_class big(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return mpq_class(z);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31)) throw Error("GF(p) requires p < 2^31");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t v) const {
  if (p_ == 0) return Scalar(big(v));
  return Scalar::modular(v, p_);
}

Scalar FieldSpec::parse(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad scalar '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(q).in_field(*this);
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(mpq_class q) : rep_(std::move(q)) {}

Scalar Scalar::modular(std::int64_t v, std::int64_t p) { return Scalar(Rep(Mod{mod_norm(v, p), p})); }

bool Scalar::is_zero() const {
  if (auto n = std::get_if<Neutral>(&rep_)) return n->v == 0;
  if (auto m = std::get_if<Mod>(&rep_)) return m->v == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto n = std::get_if<Neutral>(&rep_)) return n->v == 1;
  if (auto m = std::get_if<Mod>(&rep_)) return m->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

Scalar Scalar::in_field(const FieldSpec& f) const {
  if (f.is_rational()) {
    if (auto n = std::get_if<Neutral>(&rep_)) return Scalar(big(n->v));
    if (std::holds_alternative<Mod>(rep_)) throw Error("cannot lift a GF(p) element to Q");
    return *this;
  }
  return modular(residue(f.characteristic()), f.characteristic());
}

std::int64_t Scalar::residue(std::int64_t p) const {
  if (auto n = std::get_if<Neutral>(&rep_)) return mod_norm(n->v, p);
  if (auto m = std::get_if<Mod>(&rep_)) {
    if (m->p != p) throw Error("mixing different prime fields");
    return m->v;
  }
  return reduce_rational(std::get<mpq_class>(rep_), p);
}

Scalar Scalar::operator-() const {
  if (auto n = std::get_if<Neutral>(&rep_)) {
    if (n->v == INT64_MIN) return Scalar(mpq_class(-big(n->v)));
    return Scalar(Rep(Neutral{-n->v}));
  }
  if (auto m = std::get_if<Mod>(&rep_)) return modular(m->p - m->v, m->p);
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (auto n = std::get_if<Neutral>(&rep_)) {
    if (n->v == 1 || n->v == -1) return *this;
    return Scalar(mpq_class(mpq_class(1) / big(n->v)));
  }
  if (auto m = std::get_if<Mod>(&rep_)) return modular(mod_inv(m->v, m->p), m->p);
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  using N = Scalar::Neutral;
  using M = Scalar::Mod;
  if (auto x = std::get_if<N>(&a.rep_)) {
    if (auto y = std::get_if<N>(&b.rep_)) {
      std::int64_t r;
      if (!__builtin_add_overflow(x->v, y->v, &r)) return Scalar(Scalar::Rep(N{r}));
      return Scalar(mpq_class(big(x->v) + big(y->v)));
    }
    if (auto y = std::get_if<M>(&b.rep_)) return Scalar::modular(x->v % y->p + y->v, y->p);
    return Scalar(mpq_class(big(x->v) + std::get<mpq_class>(b.rep_)));
  }
  if (auto x = std::get_if<M>(&a.rep_)) {
    return Scalar::modular(x->v + b.residue(x->p), x->p);
  }
  if (std::holds_alternative<M>(b.rep_) || std::holds_alternative<N>(b.rep_)) return b + a;
  return Scalar(mpq_class(std::get<mpq_class>(a.rep_) + std::get<mpq_class>(b.rep_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  using N = Scalar::Neutral;
  using M = Scalar::Mod;
  if (auto x = std::get_if<N>(&a.rep_)) {
    if (auto y = std::get_if<N>(&b.rep_)) {
      std::int64_t r;
      if (!__builtin_mul_overflow(x->v, y->v, &r)) return Scalar(Scalar::Rep(N{r}));
      return Scalar(mpq_class(big(x->v) * big(y->v)));
    }
    if (auto y = std::get_if<M>(&b.rep_)) return Scalar::modular(mod_norm(x->v, y->p) * y->v, y->p);
    if (x->v == 0) return Scalar(mpq_class(0));
    return Scalar(mpq_class(big(x->v) * std::get<mpq_class>(b.rep_)));
  }
  if (auto x = std::get_if<M>(&a.rep_)) {
    if (auto y = std::get_if<M>(&b.rep_)) {
      if (x->p != y->p) throw Error("mixing different prime fields");
      return Scalar::modular(x->v * y->v % x->p, x->p);
    }
    return Scalar::modular(x->v * b.residue(x->p) % x->p, x->p);
  }
  if (std::holds_alternative<M>(b.rep_) || std::holds_alternative<N>(b.rep_)) return b * a;
  return Scalar(mpq_class(std::get<mpq_class>(a.rep_) * std::get<mpq_class>(b.rep_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::string Scalar::str() const {
  if (auto n = std::get_if<Neutral>(&rep_)) return std::to_string(n->v);
  if (auto m = std::get_if<Mod>(&rep_)) return std::to_string(m->v);
  return std::get<mpq_class>(rep_).get_str();
}

mpq_class Scalar::to_rational() const {
  if (auto n = std::get_if<Neutral>(&rep_)) return big(n->v);
  if (auto m = std::get_if<Mod>(&rep_)) return big(m->v);
  return std::get<mpq_class>(rep_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace koszul
