#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partineq/arith.hpp"
#include "partineq/injections.hpp"

namespace partineq::detail {

CaseLabel make_label(Theorem t, std::vector<std::string> path);

/// Runs classification and, when `build` is set, the image construction.
/// Without `build` no equation is solved and `image` is left empty.
Mapped map_large(const InjectionParams& params, const Partition& p, bool build);
Mapped map_small_k(const InjectionParams& params, const Partition& p, bool build);
Mapped map_general(const InjectionParams& params, const Partition& p, bool build);
Mapped map_gl2(const InjectionParams& params, const Partition& p, bool build);

Partition witness_large(const InjectionParams& params, Int N);
Partition witness_small_k(const InjectionParams& params, Int N);
Partition witness_general(const InjectionParams& params, Int N);
Partition witness_gl2(const InjectionParams& params, Int N);

Signature signature_large(const InjectionParams& params, const CaseLabel& label);
Signature signature_small_k(const InjectionParams& params, const CaseLabel& label);
Signature signature_general(const InjectionParams& params, const CaseLabel& label);
Signature signature_gl2(const InjectionParams& params, const CaseLabel& label);

std::vector<CaseLabel> labels_large(const InjectionParams& params);
std::vector<CaseLabel> labels_small_k(const InjectionParams& params);
std::vector<CaseLabel> labels_general(const InjectionParams& params);
std::vector<CaseLabel> labels_gl2(const InjectionParams& params);

/// fixed_solution with solver failures rethrown as SolverPrecondition.
const FixedSolution& fixed(const FixedKey& key, const Equation& eq);
PairSolution fixed_pair(const FixedKey& key, const Equation& eq);
SimpleSolution fixed_simple(const FixedKey& key, const Equation& eq);

/// Direct solve with the same error translation (for witnesses).
PairSolution solve_pair(Int a, Int b, Int n, bool shared_factor);

std::vector<Int> key_params(const InjectionParams& params);

/// Least part in [lo, hi] whose frequency is at least `min_freq`.
std::optional<Int> least_part_with(const Partition& p, Int lo, Int hi, Int min_freq);

[[noreturn]] void not_applicable(const InjectionParams& params, const Partition& p, const std::string& why);

Signature set_signature(std::string description, std::vector<Int> values);

}  // namespace partineq::detail
