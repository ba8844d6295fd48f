#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sylowlab {

class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A permutation of {1..degree}, stored as the image array of the 0-based
// points. Composition is left-to-right throughout the library:
// compose(a, b) maps i to b(a(i)), i.e. a acts first.
class Perm {
public:
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // 0-based image array

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<int> images_;
};

Perm compose(const Perm& a, const Perm& b);  // i -> b(a(i))
Perm inverse(const Perm& a);

// b^-1 * a * b under left-to-right composition.
Perm conjugate(const Perm& a, const Perm& b);

// [a, b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

// Order of the cyclic group generated by a (lcm of cycle lengths).
long long element_order(const Perm& a);

// Disjoint-cycle notation with 1-based points; "()" is the identity.
Perm parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Perm& a);

}  // namespace sylowlab
