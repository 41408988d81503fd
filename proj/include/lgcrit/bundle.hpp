#pragma once

#include <string>
#include <vector>

#include "lgcrit/errors.hpp"

namespace lgcrit {

/// Projectivized split bundle over projective s-space with twist vector a.
/// The twist vector lists the nonzero-slot twists a_1 <= ... <= a_r; the
/// zeroth slot is untwisted. Rays are named v_0..v_s (base directions) and
/// e_0..e_r (fiber directions).
struct BundleSpec {
  int s = 1;
  std::vector<int> a;

  int r() const { return static_cast<int>(a.size()); }
  int dim() const { return s + r(); }
  int n_points() const { return (s + 1) * (r() + 1); }
  int twist_total() const {
    int t = 0;
    for (int aj : a) t += aj;
    return t;
  }
  std::string name() const;
};

/// Throws unless 1 <= s, 1 <= r, 0 <= a_1 <= ... <= a_r and the twist total
/// stays within the base dimension (the ampleness bound for -K).
void validate_spec(const BundleSpec& spec);

/// Primitive ray generators in Z^(s+r), ordered v_1..v_s, e_1..e_r, v_0, e_0.
/// v_i and e_j are standard basis vectors; v_0 = (-1..-1 | a_1..a_r) and
/// e_0 = (0..0 | -1..-1) close the two lattice relations
///   v_0 + sum_i v_i - sum_j a_j e_j = 0,   e_0 + sum_j e_j = 0.
std::vector<std::vector<int>> vertices(const BundleSpec& spec);

/// Divisor class in the rank-two Picard lattice, written in the basis
/// (hyperplane pullback, relative hyperplane). V(v_i) has class (1,0) for
/// every i, V(e_0) has class (0,1), and V(e_j) has class (-a_j, 1).
struct PicClass {
  long long h = 0;
  long long x = 0;
  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Torus-invariant divisor sum n_i V(v_i) + sum m_j V(e_j) with integer
/// coefficients n (size s+1, index i = 0..s) and m (size r+1, index j = 0..r).
struct ToricDivisor {
  std::vector<long long> n;
  std::vector<long long> m;
  friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

ToricDivisor zero_divisor(const BundleSpec& spec);
void validate_divisor(const BundleSpec& spec, const ToricDivisor& d);
bool is_effective(const ToricDivisor& d);
ToricDivisor add(const ToricDivisor& d1, const ToricDivisor& d2);
std::string divisor_to_string(const ToricDivisor& d);

/// Class of a divisor: ( sum n_i - sum a_j m_j , sum m_j ).
PicClass divisor_class(const BundleSpec& spec, const ToricDivisor& d);

/// Index pair (k,l) of a line bundle O(k) tensor O_rel(l) in the exceptional
/// collection, with 0 <= k <= s and 0 <= l <= r.
struct ExcLabel {
  int k = -1;
  int l = -1;
  bool valid() const { return k >= 0 && l >= 0; }
  friend bool operator==(const ExcLabel&, const ExcLabel&) = default;
  friend auto operator<=>(const ExcLabel&, const ExcLabel&) = default;
};

/// Full collection, ordered l-major then k ((l,k)-lexicographic).
std::vector<ExcLabel> collection(const BundleSpec& spec);

/// Position of (k,l) in collection order: l*(s+1) + k.
int label_index(const BundleSpec& spec, const ExcLabel& p);

std::string label_to_string(const ExcLabel& p);

/// Parse a comma-separated ray multiset such as "v0,v0,e1" into a divisor.
ToricDivisor parse_divisor(const BundleSpec& spec, const std::string& text);

}  // namespace lgcrit
