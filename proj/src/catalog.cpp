#include "sylowlab/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "sylowlab/ffield.hpp"

namespace sylowlab {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

CatalogEntry make_entry(Family family, std::string name, std::vector<long> params,
                        Group group, long long expected_order) {
  if (group.order() != expected_order)
    throw std::logic_error(name + ": constructed order " + std::to_string(group.order()) +
                           " != expected " + std::to_string(expected_order));
  return CatalogEntry{family, std::move(name), std::move(params), std::move(group),
                      expected_order};
}

Perm cycle_perm(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
  return Perm(std::move(img));
}

}  // namespace

CatalogEntry alternating(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("alternating: need 2 <= n <= 12");
  std::string name = "A" + std::to_string(n);
  if (n == 2)
    return make_entry(Family::Alternating, name, {n}, Group::trivial(2), 1);
  std::vector<Perm> gens{cycle_perm(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<int> big;
    for (int i = (n % 2 == 0) ? 1 : 0; i < n; ++i) big.push_back(i);
    gens.push_back(cycle_perm(n, {big}));
  }
  return make_entry(Family::Alternating, name, {n}, Group(n, gens), factorial(n) / 2);
}

CatalogEntry symmetric(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("symmetric: need 2 <= n <= 12");
  std::vector<Perm> gens{cycle_perm(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> big(n);
    std::iota(big.begin(), big.end(), 0);
    gens.push_back(cycle_perm(n, {big}));
  }
  return make_entry(Family::Symmetric, "S" + std::to_string(n), {n}, Group(n, gens),
                    factorial(n));
}

CatalogEntry cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: need n >= 1");
  std::string name = "C" + std::to_string(n);
  if (n == 1) return make_entry(Family::Cyclic, name, {n}, Group::trivial(1), 1);
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return make_entry(Family::Cyclic, name, {n}, Group(n, {cycle_perm(n, {c})}), n);
}

CatalogEntry dihedral(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("dihedral: D_m uses the order-m convention, m even >= 2");
  std::string name = "D" + std::to_string(m);
  int k = m / 2;
  if (k == 1)   // D_2 = C2
    return make_entry(Family::Dihedral, name, {m}, Group(2, {cycle_perm(2, {{0, 1}})}), 2);
  if (k == 2)   // D_4 = Klein four; a faithful action needs 4 points
    return make_entry(Family::Dihedral, name, {m},
                      Group(4, {cycle_perm(4, {{0, 1}}), cycle_perm(4, {{2, 3}})}), 4);
  std::vector<int> rot(k);
  std::iota(rot.begin(), rot.end(), 0);
  std::vector<int> refl(k);
  for (int i = 0; i < k; ++i) refl[i] = (k - i) % k;
  return make_entry(Family::Dihedral, name, {m},
                    Group(k, {cycle_perm(k, {rot}), Perm(std::move(refl))}), m);
}

CatalogEntry direct_product(const std::vector<CatalogEntry>& factors) {
  if (factors.empty()) throw std::invalid_argument("direct_product: no factors");
  int degree = 0;
  long long order = 1;
  std::string name;
  std::vector<long> params;
  for (const auto& f : factors) {
    degree += f.group.degree();
    order *= f.group.order();
    if (!name.empty()) name += "x";
    name += f.name;
    params.push_back(f.group.order());
  }
  std::vector<Perm> gens;
  int offset = 0;
  for (const auto& f : factors) {
    for (const Perm& g : f.group.generators()) {
      std::vector<int> img(degree);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < g.degree(); ++i) img[offset + i] = offset + g[i];
      gens.push_back(Perm(std::move(img)));
    }
    offset += f.group.degree();
  }
  if (gens.empty()) return make_entry(Family::DirectProduct, name, params,
                                      Group::trivial(degree), 1);
  return make_entry(Family::DirectProduct, name, params, Group(degree, gens), order);
}

CatalogEntry psl2(long q) {
  if (q < 4 || q > 32) throw std::invalid_argument("psl2: supported range is 4 <= q <= 32");
  Field f(q);   // throws for non prime powers
  auto elems = f.all_elements();
  // Points: affine chart [x:1] at index_of(x), then [1:0] at index q.
  const int deg = static_cast<int>(q) + 1;
  const int inf = static_cast<int>(q);

  auto chart_perm = [&](auto&& map) {
    std::vector<int> img(deg);
    img[inf] = inf;
    for (long i = 0; i < q; ++i) img[i] = static_cast<int>(f.index_of(map(elems[i])));
    return Perm(std::move(img));
  };

  // x -> x + 1
  Perm unip = chart_perm([&](const Field::Elem& x) { return f.add(x, f.one()); });

  // Image of diag(lambda, lambda^-1): x -> lambda^2 x; for even q the square
  // runs over everything, so use lambda itself.
  Field::Elem lam = f.multiplicative_generator();
  Field::Elem scale = (f.p() == 2) ? lam : f.mul(lam, lam);
  Perm torus = chart_perm([&](const Field::Elem& x) { return f.mul(scale, x); });

  // Weyl element x -> -1/x, swapping 0 and infinity.
  std::vector<int> wimg(deg);
  wimg[inf] = static_cast<int>(f.index_of(f.zero()));
  for (long i = 0; i < q; ++i) {
    const Field::Elem& x = elems[i];
    if (f.is_zero(x))
      wimg[i] = inf;
    else
      wimg[i] = static_cast<int>(f.index_of(f.neg(f.inv(x))));
  }
  Perm weyl(std::move(wimg));

  long long order = q * (q * q - 1) / std::gcd<long long>(2, q - 1);
  return make_entry(Family::PSL2, "PSL(2," + std::to_string(q) + ")", {q},
                    Group(deg, {unip, torus, weyl}), order);
}

CatalogEntry psl3_3() {
  // 13 projective-plane points, represented by vectors over GF(3) with
  // first nonzero coordinate 1, in lexicographic order.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
        if (lead != 1) continue;
        reps.push_back(v);
      }
  auto index_of = [&](std::array<int, 3> v) {
    int lead = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
    if (lead == 2)
      for (int& x : v) x = (2 * x) % 3;
    auto it = std::find(reps.begin(), reps.end(), v);
    return static_cast<int>(it - reps.begin());
  };
  auto mat_perm = [&](const std::array<std::array<int, 3>, 3>& m) {
    std::vector<int> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::array<int, 3> w{};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) w[r] = (w[r] + m[r][c] * reps[i][c]) % 3;
      img[i] = index_of(w);
    }
    return Perm(std::move(img));
  };
  // Elementary transvection and cyclic shift, both of determinant 1.
  Perm trans = mat_perm({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
  Perm shift = mat_perm({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
  return make_entry(Family::PSL3, "PSL(3,3)", {3}, Group(13, {trans, shift}), 5616);
}

CatalogEntry suzuki_8() {
  const long q = 8;
  const int m = 1;
  Field f(q);
  const int r = 1 << (m + 1);   // 4; theta(x) = x^r, theta(theta(x)) = x^2
  auto theta = [&](const Field::Elem& x) { return f.frobenius_power(x, m + 1); };

  // Ovoid points: infinity at index 0, then the affine chart (a, b) in
  // GF(8)^2 at index 1 + 8*index(a) + index(b).
  const int deg = static_cast<int>(q * q) + 1;
  auto pt = [&](const Field::Elem& a, const Field::Elem& b) {
    return static_cast<int>(1 + q * f.index_of(a) + f.index_of(b));
  };
  auto elems = f.all_elements();

  auto chart_perm = [&](auto&& map) {
    std::vector<int> img(deg);
    img[0] = 0;
    for (const auto& a : elems)
      for (const auto& b : elems) {
        auto [a2, b2] = map(a, b);
        img[pt(a, b)] = pt(a2, b2);
      }
    return Perm(std::move(img));
  };

  // Unipotent maps (a,b) -> (a+alpha, b+beta+a*theta(alpha)).
  auto unip = [&](const Field::Elem& al, const Field::Elem& be) {
    return chart_perm([&](const Field::Elem& a, const Field::Elem& b) {
      return std::pair(f.add(a, al), f.add(f.add(b, be), f.mul(a, theta(al))));
    });
  };

  // Torus map (a,b) -> (lambda a, lambda theta(lambda) b).
  Field::Elem lam = f.multiplicative_generator();
  Field::Elem mu = f.mul(lam, theta(lam));
  Perm torus = chart_perm([&](const Field::Elem& a, const Field::Elem& b) {
    return std::pair(f.mul(lam, a), f.mul(mu, b));
  });

  // Involution: swap infinity with the origin and invert the chart through
  // the ovoid norm F(a,b) = a b + a^(theta+2) + b^theta, nonzero off the
  // origin.
  std::vector<int> wimg(deg);
  wimg[0] = pt(f.zero(), f.zero());
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (f.is_zero(a) && f.is_zero(b)) {
        wimg[pt(a, b)] = 0;
        continue;
      }
      Field::Elem norm = f.add(f.add(f.mul(a, b), f.mul(f.mul(a, a), theta(a))), theta(b));
      Field::Elem ninv = f.inv(norm);
      wimg[pt(a, b)] = pt(f.mul(b, ninv), f.mul(a, ninv));
    }
  Perm invol(std::move(wimg));

  long long order = (q - 1) * q * q * (q * q + 1);   // 29120
  return make_entry(Family::Suzuki, "Sz(8)", {q},
                    Group(deg, {unip(f.one(), f.zero()), unip(f.zero(), f.one()),
                                torus, invol}),
                    order);
}

CatalogEntry sl2_3() {
  // SL(2,3) acting on the 8 nonzero vectors of GF(3)^2 (vector (x,y) at
  // index 3x+y-1 ... enumerated (0,1),(0,2),(1,0),...,(2,2)). Generators are
  // the transvection [[1,1],[0,1]] and [[0,-1],[1,0]]. Order 24, v_3 = 4.
  Perm s(std::vector<int>{3, 7, 2, 6, 1, 5, 0, 4});
  Perm t(std::vector<int>{5, 2, 0, 6, 3, 1, 7, 4});
  return make_entry(Family::Linear, "SL(2,3)", {3}, Group(8, {s, t}), 24);
}

long long formula_v2_psl2_even(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("formula_v2_psl2_even: p must be an odd prime");
  return (1ll << p) + 1;
}

V2OddCandidates formula_v2_psl2_odd(long q) {
  if (q < 5 || q % 2 == 0) throw std::invalid_argument("formula_v2_psl2_odd: q must be odd >= 5");
  V2OddCandidates out;
  long long qq = q;
  out.first = qq * qq - 1;
  out.second = (qq * qq * qq - qq) / 24;
  long rem = q % 8;
  if (rem == 3 || rem == 5) out.realized = out.second;   // Klein four, normalizer A4
  return out;
}

long long formula_v3_psl2_3p(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("formula_v3_psl2_3p: p must be an odd prime");
  long long q = 1;
  for (int i = 0; i < p; ++i) q *= 3;
  return q + 1;
}

VrFormula formula_vr_psl2_even(long q, long r) {
  if (q < 4 || (q & (q - 1)) != 0)
    throw std::invalid_argument("formula_vr_psl2_even: q must be a power of 2");
  if (r < 3 || r % 2 == 0 || (q * q - 1) % r != 0)
    throw std::invalid_argument("formula_vr_psl2_even: r must be an odd prime dividing q^2-1");
  long long qq = q;
  long long plus = qq * (qq + 1) / 2;    // normalizer dihedral on q-1
  long long minus = qq * (qq - 1) / 2;   // normalizer dihedral on q+1
  if ((q - 1) % r == 0) return {plus, minus};
  return {minus, plus};
}

SuzukiFormula formula_suzuki(long q) {
  // q = 2^(2m+1), m >= 1
  long long qq = q;
  int bits = 0;
  while ((1ll << bits) < qq) ++bits;
  if ((1ll << bits) != qq || bits < 3 || bits % 2 == 0)
    throw std::invalid_argument("formula_suzuki: q must be 2^(2m+1) with m >= 1");
  int mm = (bits - 1) / 2;
  SuzukiFormula out;
  out.q = qq;
  out.r = 1ll << (mm + 1);
  out.order = (qq - 1) * qq * qq * (qq * qq + 1);
  out.v2 = qq * qq + 1;
  out.t_order = 4 * (qq - out.r + 1);
  if (out.order % out.t_order != 0)
    throw std::logic_error("formula_suzuki: T order does not divide the group order");
  out.v5 = out.order / out.t_order;
  return out;
}

std::vector<MinimalSimpleFamily> minimal_simple_list() {
  return {
      {"L2(2^p)", "p odd prime"},
      {"L2(3^p)", "p odd prime"},
      {"L2(p)", "p > 5 prime, p = 2 (mod 5)"},
      {"L3(3)", "none"},
      {"Sz(q)", "q = 2^(2m+1) >= 8"},
  };
}

std::vector<CatalogEntry> builtin_corpus() {
  std::vector<CatalogEntry> corpus;
  corpus.push_back(cyclic(1));
  corpus.push_back(cyclic(2));
  corpus.push_back(cyclic(6));
  corpus.push_back(cyclic(7));
  corpus.push_back(cyclic(9));
  corpus.push_back(cyclic(12));
  corpus.push_back(cyclic(15));
  corpus.push_back(cyclic(16));
  corpus.push_back(dihedral(8));
  corpus.push_back(dihedral(10));
  corpus.push_back(dihedral(12));
  corpus.push_back(dihedral(16));
  corpus.push_back(symmetric(3));
  corpus.push_back(symmetric(4));
  corpus.push_back(symmetric(5));
  corpus.push_back(symmetric(6));
  corpus.push_back(alternating(4));
  corpus.push_back(alternating(5));
  corpus.push_back(alternating(6));

  corpus.push_back(sl2_3());
  corpus.push_back(psl2(7));
  corpus.push_back(psl2(8));
  corpus.push_back(psl2(9));
  corpus.push_back(psl2(11));
  corpus.push_back(psl2(13));
  corpus.push_back(psl2(27));
  corpus.push_back(psl3_3());
  corpus.push_back(suzuki_8());
  corpus.push_back(direct_product({alternating(5), cyclic(7)}));
  corpus.push_back(direct_product({cyclic(3), symmetric(4)}));
  corpus.push_back(direct_product({dihedral(10), cyclic(3)}));
  corpus.push_back(direct_product({alternating(4), cyclic(2)}));
  return corpus;
}

}  // namespace sylowlab
