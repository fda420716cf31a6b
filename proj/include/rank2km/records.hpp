#pragma once

// JSON / CSV renderings of results. Every JSON record carries "schema", "a"
// and "b"; lattice coordinates and Q are always decimal strings, other
// integers become strings only beyond 2^53.

#include "rank2km/structure_constants.hpp"
#include "rank2km/subsystems.hpp"
#include "rank2km/verify.hpp"

#include <optional>
#include <string>

namespace rank2km::records {

inline constexpr const char* kRootSchema = "rank2km.root/1";
inline constexpr const char* kClassifySchema = "rank2km.classify/1";
inline constexpr const char* kCommutatorSchema = "rank2km.commutator/1";
inline constexpr const char* kSubsystemSchema = "rank2km.subsystem/1";
inline constexpr const char* kVerifySchema = "rank2km.verify/1";

// One JSON object per line.
std::string roots_jsonl(const CartanData& cd, std::int64_t max_index,
                        std::optional<Family> family);
std::string roots_csv(const CartanData& cd, std::int64_t max_index,
                      std::optional<Family> family);

std::string classify_json(const CartanData& cd, const RootVector& v);

std::string commutator_json(const CartanData& cd, const SignAssignment& signs,
                            const RealRoot& alpha, const RealRoot& beta);

// mode is "phi" or "delta".
std::string subsystem_json(const CartanData& cd, const std::vector<RealRoot>& gens,
                           const std::string& mode);

std::string verify_json(const CartanData& cd, const VerifyReport& rep);

// Columns x,y,kind. Roots (real and imaginary) with |index| <= max_index or
// inside the matching coordinate box, then `samples` points on each of the
// conics Q = a (long_curve) and Q = b (short_curve).
std::string plot_data_csv(const CartanData& cd, std::int64_t max_index,
                          std::int64_t samples);

// Comma-separated root specs, e.g. "SU:0,SL:-1"; throws Parse.
std::vector<RealRoot> parse_root_list(const std::string& text);

}  // namespace rank2km::records
