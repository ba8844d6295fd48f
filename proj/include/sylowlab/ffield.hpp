#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace sylowlab {

// GF(p^e) with a fixed modulus per supported q, so element encodings are
// stable across runs. Elements are coefficient vectors of length e over
// {0..p-1}, little-endian (index i holds the x^i coefficient).
class Field {
public:
  using Elem = std::vector<int>;

  explicit Field(long q);

  long q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const;
  Elem one() const;
  bool is_zero(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, long long n) const;
  Elem inv(const Elem& a) const;

  // a^(p^k)
  Elem frobenius_power(const Elem& a, int k) const;

  // All q elements, 0 first, in counter order of the coefficient vector
  // (little-endian base-p). index_of is the inverse.
  std::vector<Elem> all_elements() const;
  long index_of(const Elem& a) const;
  Elem element(long index) const;

  // Deterministic: first element (in all_elements order) of multiplicative
  // order q-1.
  Elem multiplicative_generator() const;

private:
  int p_ = 0;
  int e_ = 0;
  long q_ = 0;
  std::vector<int> modulus_;   // length e+1, monic
};

// True iff the monic polynomial (ascending coefficients over GF(p)) has no
// monic divisor of degree 1..deg/2. Used as the startup self-check for the
// built-in modulus table.
bool is_irreducible(int p, const std::vector<int>& poly);

}  // namespace sylowlab
