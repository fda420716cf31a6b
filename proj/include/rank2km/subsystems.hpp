#pragma once

// Reflection subsystems generated by finite sets of real roots: the W-orbit
// closure (Phi-subsystems), the lattice closure restricted to real roots
// (Delta-subsystems), brute-force oracles for both, and the divisibility
// identities behind the classification.

#include "rank2km/core_roots.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rank2km {

// {r} when d == 0, otherwise r + dZ with 0 <= r < d.
struct ArithSet {
  bool empty = true;
  std::int64_t r = 0;
  std::int64_t d = 0;

  static ArithSet none() { return {}; }
  static ArithSet arith(std::int64_t r, std::int64_t d) { return {false, r, d}; }
  bool contains(std::int64_t j) const;
  friend bool operator==(const ArithSet&, const ArithSet&) = default;
};

// Orbit indices present in a subsystem. An alpha_1-orbit index j stands for
// the pair LL_j, LU_{-j-1} (= -LL_j); an alpha_2-orbit index j for SU_j,
// SL_{-j-1}. "long" and "short" name the two orbits.
struct IndexSets {
  ArithSet long_set;
  ArithSet short_set;
  friend bool operator==(const IndexSets&, const IndexSets&) = default;
};

enum class Shape { I_L, I_S, II_L, II_S, II_LS };

const char* shape_name(Shape s);

struct SubsystemDescriptor {
  Shape shape = Shape::I_L;
  std::int64_t r = 0;
  std::int64_t d = 0;  // for II_LS both orbit moduli are 2d+1
  IndexSets sets;
  std::vector<RealRoot> simple_roots;
  std::vector<std::vector<Integer>> cartan;          // entry (i,j) = <b_j, b_i^vee>
  std::vector<std::vector<Rational>> inner_product;  // (b_i, b_j)
};

// The orbit index of a root: LL_j, SU_j -> j; LU_j, SL_j -> -j-1.
std::int64_t orbit_index(const RealRoot& r);

bool subsystem_contains(const SubsystemDescriptor& s, const RealRoot& r);

// Members of the subsystem with |index| <= window, sorted.
std::vector<RealRoot> subsystem_roots(const SubsystemDescriptor& s,
                                      std::int64_t window);

Integer delta_d(const CartanData& cd, std::int64_t d);  // d >= 1
Integer eps_d(const CartanData& cd, std::int64_t d);    // d >= 0

// Exact inner product (u, v) for the symmetrization [[2a/b, -a], [-a, 2]].
Rational inner_product(const CartanData& cd, const RootVector& u,
                       const RootVector& v);

IndexSets index_sets(const CartanData& cd, const std::vector<RealRoot>& gens);

SubsystemDescriptor phi_subsystem(const CartanData& cd,
                                  const std::vector<RealRoot>& gens);

SubsystemDescriptor delta_re_subsystem(const CartanData& cd,
                                       const std::vector<RealRoot>& gens);

// Brute force: reflect in everything found until nothing new with
// |index| <= bound appears.
std::vector<RealRoot> phi_closure_oracle(const CartanData& cd,
                                         const std::vector<RealRoot>& gens,
                                         std::int64_t bound);

// coords(candidate) in the Z-span of the generators' coordinates.
bool delta_re_membership_oracle(const CartanData& cd,
                                const std::vector<RealRoot>& gens,
                                const RealRoot& candidate);

// Integer lattice in Z^2 in Hermite form: rows (h11, h12) and (0, h22).
class Lattice2 {
 public:
  explicit Lattice2(const std::vector<RootVector>& gens);
  bool contains(const RootVector& v) const;
  // Index of the lattice in Z^2; 0 when it has rank < 2.
  Integer index() const { return abs(h11_ * h22_); }

 private:
  Integer h11_ = 0, h12_ = 0, h22_ = 0;
};

struct IdentityCheck {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
};

struct DivisibilityReport {
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

// The four product identities linking gamma, eta, delta, eps, and the six
// divisibility criteria, over 0 <= d <= d_max and |j| <= j_max.
DivisibilityReport divisibility_suite(const CartanData& cd, std::int64_t d_max,
                                      std::int64_t j_max);

enum class FamilyKind { Symmetric, NonSymmetric };

// Symmetric: H(delta_d, delta_d) subsystems with basis SU_0, SL_{d-1}.
// NonSymmetric: H(a eps_d, b eps_d) subsystems with basis LL_0, SU_d.
// d runs over 1..count. Hyperbolic only; NonSymmetric needs a != b.
std::vector<SubsystemDescriptor> infinite_family(const CartanData& cd,
                                                 FamilyKind kind,
                                                 std::int64_t count);

}  // namespace rank2km
