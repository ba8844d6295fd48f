#include "sylowlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sylowlab {

Perm::Perm(int degree) : images_(degree) {
  if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b[a[i]];
  return Perm(std::move(img));
}

Perm inverse(const Perm& a) {
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[a[i]] = i;
  return Perm(std::move(img));
}

Perm conjugate(const Perm& a, const Perm& b) {
  return compose(compose(inverse(b), a), b);
}

Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

long long element_order(const Perm& a) {
  std::vector<char> done(a.degree(), 0);
  long long ord = 1;
  for (int i = 0; i < a.degree(); ++i) {
    if (done[i]) continue;
    long long len = 0;
    for (int j = i; !done[j]; j = a[j]) {
      done[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm parse_cycles(std::string_view text, int degree) {
  if (degree <= 0) throw parse_error("degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) throw parse_error("empty permutation text");
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw parse_error("unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point or ')' in cycle");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw parse_error("point out of range: " + std::to_string(v));
        ++i;
      }
      if (v < 1 || v > degree) throw parse_error("point out of range: " + std::to_string(v));
      int pt = static_cast<int>(v) - 1;
      if (used[pt]) throw parse_error("repeated point: " + std::to_string(v));
      used[pt] = 1;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;   // commas tolerated
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle) throw parse_error("no cycles found");
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& a) {
  std::ostringstream out;
  std::vector<char> done(a.degree(), 0);
  bool wrote = false;
  for (int i = 0; i < a.degree(); ++i) {
    if (done[i] || a[i] == i) { done[i] = 1; continue; }
    out << '(';
    bool first = true;
    for (int j = i; !done[j]; j = a[j]) {
      done[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return out.str();
}

}  // namespace sylowlab
