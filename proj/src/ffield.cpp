#include "sylowlab/ffield.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace sylowlab {

namespace {

// Fixed modulus table (ascending coefficients, monic). Prime fields use the
// degree-1 polynomial x.
const std::map<long, std::vector<int>>& modulus_table() {
  static const std::map<long, std::vector<int>> table = {
      {4, {1, 1, 1}},          // x^2+x+1
      {8, {1, 1, 0, 1}},       // x^3+x+1
      {9, {1, 0, 1}},          // x^2+1
      {16, {1, 1, 0, 0, 1}},   // x^4+x+1
      {25, {2, 4, 1}},         // x^2+4x+2
      {27, {1, 2, 0, 1}},      // x^3+2x+1
      {32, {1, 0, 1, 0, 0, 1}} // x^5+x^2+1
  };
  return table;
}

struct PrimePower {
  int p = 0;
  int e = 0;
};

std::optional<PrimePower> as_prime_power(long q) {
  if (q < 2) return std::nullopt;
  long n = q;
  int p = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) { p = static_cast<int>(d); break; }
  }
  if (p == 0) return PrimePower{static_cast<int>(q), 1};
  int e = 0;
  while (n % p == 0) { n /= p; ++e; }
  if (n != 1) return std::nullopt;
  return PrimePower{p, e};
}

// Polynomial arithmetic over GF(p), ascending coefficients.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
    int c = a[d];
    if (c == 0) continue;
    // m is monic
    for (int k = 0; k <= dm; ++k)
      a[d - dm + k] = ((a[d - dm + k] - c * m[k]) % p + p) % p;
  }
  a.resize(dm);
  return a;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& poly) {
  int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly[deg] != 1) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> div(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) { div[i] = static_cast<int>(c % p); c /= p; }
      div[d] = 1;
      std::vector<int> rem = poly_mod(poly, div, p);
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; }))
        return false;
    }
  }
  return true;
}

Field::Field(long q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  p_ = pp->p;
  e_ = pp->e;
  q_ = q;
  if (e_ == 1) {
    modulus_ = {0, 1};   // x
  } else {
    auto it = modulus_table().find(q);
    if (it == modulus_table().end())
      throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(q) + ")");
    modulus_ = it->second;
  }
  if (!is_irreducible(p_, modulus_))
    throw std::logic_error("modulus table entry for GF(" + std::to_string(q) +
                           ") failed the irreducibility self-check");
}

Field::Elem Field::zero() const { return Elem(e_, 0); }

Field::Elem Field::one() const {
  Elem v(e_, 0);
  v[0] = 1;
  return v;
}

bool Field::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

Field::Elem Field::add(const Elem& a, const Elem& b) const {
  Elem v(e_);
  for (int i = 0; i < e_; ++i) v[i] = (a[i] + b[i]) % p_;
  return v;
}

Field::Elem Field::neg(const Elem& a) const {
  Elem v(e_);
  for (int i = 0; i < e_; ++i) v[i] = (p_ - a[i]) % p_;
  return v;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  std::vector<int> prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  return poly_mod(std::move(prod), modulus_, p_);
}

Field::Elem Field::pow(Elem a, long long n) const {
  Elem r = one();
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Field::Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

Field::Elem Field::frobenius_power(const Elem& a, int k) const {
  Elem r = a;
  for (int i = 0; i < k; ++i) r = pow(r, p_);
  return r;
}

std::vector<Field::Elem> Field::all_elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (long n = 0; n < q_; ++n) out.push_back(element(n));
  return out;
}

long Field::index_of(const Elem& a) const {
  long idx = 0;
  for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

Field::Elem Field::element(long index) const {
  Elem v(e_);
  for (int i = 0; i < e_; ++i) { v[i] = static_cast<int>(index % p_); index /= p_; }
  return v;
}

Field::Elem Field::multiplicative_generator() const {
  for (long n = 1; n < q_; ++n) {
    Elem a = element(n);
    long long ord = 1;
    Elem x = a;
    while (x != one()) { x = mul(x, a); ++ord; }
    if (ord == q_ - 1) return a;
  }
  throw std::logic_error("no multiplicative generator found");   // unreachable
}

}  // namespace sylowlab
