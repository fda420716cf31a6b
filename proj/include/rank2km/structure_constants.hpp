#pragma once

// Structure constants n_{alpha,beta} among real root vectors:
// [x_alpha, x_beta] = n_{alpha,beta} x_{alpha+beta}, n = +-(p+1). The signs
// are determined by free choices on extraspecial pairs, held in a
// SignAssignment.

#include "rank2km/core_roots.hpp"
#include "rank2km/root_sums.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rank2km {

enum class SignVariant { Trivial, Ha1, H41 };

const char* sign_variant_name(SignVariant v);

// Immutable-by-convention sign choices. Every input defaults to +1; only
// overrides are stored.
//
// Ha1 (H(a,1), a > 4): key "UL" is the sign of (SU0, LL0); "U:j" / "L:j"
// (j >= 0) the signs of (SU_j, SU_j+1) / (SL_j, SL_j+1).
//
// H41 (H(4,1)): one input per decomposable positive root, keyed by the root
// ("LU:k" k>=0, "LL:k" k>=1, "SL:i" i>=0, "SU:i" i>=2). An input is the sign
// of its extraspecial pair relative to the loop-algebra model, so all +1
// reproduces the model's signs.
class SignAssignment {
 public:
  SignAssignment() = default;  // Trivial
  explicit SignAssignment(SignVariant v) : variant_(v) {}

  // Ha1 for H(a,1)/H(1,a) with a > 4, H41 for H(4,1)/H(1,4), else Trivial.
  static SignAssignment defaults_for(const CartanData& cd);
  static SignVariant variant_for(const CartanData& cd);

  SignVariant variant() const { return variant_; }

  // Validates the key against the variant; sign must be +-1.
  void set(const std::string& key, int sign);
  int get(const std::string& key) const;  // +1 unless overridden

  // Canonical key spelling, or throws Parse.
  std::string canonical_key(const std::string& key) const;

  const std::map<std::string, int>& overrides() const { return overrides_; }
  // H41 only: the roots whose inputs are -1, parsed once.
  const std::vector<RealRoot>& flipped_roots() const { return flipped_roots_; }

  std::string to_json() const;
  static SignAssignment from_json(const std::string& text);

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

 private:
  SignVariant variant_ = SignVariant::Trivial;
  std::map<std::string, int> overrides_;  // only -1 entries are kept
  std::vector<RealRoot> flipped_roots_;
};

// Key of the H41 input attached to a decomposable positive root.
std::string h41_key(const RealRoot& decomposable);

struct CommutatorResult {
  enum class Tag { Zero, RealVector, Coroot, ImaginarySpace };
  Tag tag = Tag::Zero;
  Integer n = 0;           // RealVector
  RealRoot root{};         // RealVector
  CorootCoords coroot{};   // Coroot
  RootVector weight{};     // ImaginarySpace (and the sum vector generally)
};

const char* commutator_tag_name(CommutatorResult::Tag t);

struct SpecialPair {
  RealRoot alpha;
  RealRoot beta;
  bool extraspecial = false;
  friend bool operator==(const SpecialPair&, const SpecialPair&) = default;
};

// Special pairs (alpha < beta in root_order_key, all three positive real)
// with both indices in [0, window]. Empty unless one Cartan entry is 1 and
// the other is >= 4.
std::vector<SpecialPair> special_pairs(const CartanData& cd, std::int64_t window);

// Decomposable positive roots with index <= window.
std::vector<RealRoot> decomposables(const CartanData& cd, std::int64_t window);

// The extraspecial pair of a decomposable root.
SpecialPair extraspecial_pair(const CartanData& cd, const RealRoot& decomposable);

// Throws InvalidArgument when the assignment's variant does not fit cd.
CommutatorResult n_value(const CartanData& cd, const SignAssignment& signs,
                         const RealRoot& alpha, const RealRoot& beta);

// n / (p+1); throws InvalidArgument unless alpha + beta is real.
int sign_of(const CartanData& cd, const SignAssignment& signs,
            const RealRoot& alpha, const RealRoot& beta);

// sign_of(alpha, beta) = fixed * product of the listed inputs (each key at
// most once).
struct SignDependency {
  int fixed = 1;
  std::vector<std::string> inputs;
};

SignDependency sign_dependency(const CartanData& cd, const RealRoot& alpha,
                               const RealRoot& beta);

struct ConsistencyReport {
  std::uint64_t antisymmetry_checks = 0;
  std::uint64_t triple_checks = 0;
  std::uint64_t quadruple_checks = 0;
  std::uint64_t magnitude_checks = 0;  // |n| = p + 1
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// n_{b,a} = -n_{a,b} and n_{-a,-b} = -n_{a,b} (the latter forced by
// x_-a = -omega(x_a)), |n| = p+1, the triple ratio identity and the
// quadruple identity for real roots with |index| <= window.
ConsistencyReport consistency_relations(const CartanData& cd,
                                        const SignAssignment& signs,
                                        std::int64_t window);

// H(4,1) sign aliases s^U_{i,k}, s^L_{i,k} (i = 0,1,2) evaluated through
// sign_of, for k up to k_max.
struct SignAlias {
  std::string name;  // e.g. "U1,3"
  RealRoot alpha;
  RealRoot beta;
  int value = 1;
};

std::vector<SignAlias> h41_aliases(const SignAssignment& signs, std::int64_t k_max);

}  // namespace rank2km
