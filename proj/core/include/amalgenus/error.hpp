#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amalgenus {

enum class ErrorKind {
  // Input validation.
  kNonAssociative,
  kNoIdentity,
  kNotLatinSquare,
  kSizeExceeded,
  kNotBijective,
  kSubgroupNotInParent,
  kIncompatibleShapes,
  kNotIsomorphicSubgroups,
  kFictitiousAmalgam,
  kCarrierNotClosed,
  kActionNotClosed,
  kActionNotWellDefined,
  kNotInvolution,
  kMissingXi,
  kSymmetricInputForNonsymmetricBound,
  kInvalidInput,
  // Search limits.
  kBudgetExceeded,
  // A broken internal invariant. Always a bug.
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

  bool is_budget() const { return kind_ == ErrorKind::kBudgetExceeded; }
  bool is_internal() const { return kind_ == ErrorKind::kInternal; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// Throws kInternal when `condition` is false.
void check_invariant(bool condition, std::string_view what);

/// Limits shared by every search in the library.
struct Limits {
  /// Largest group order accepted anywhere (tables are dense n x n).
  std::size_t max_order = 512;
  /// Node budget for automorphism, isomorphism and homomorphism searches.
  std::uint64_t search_budget = 10'000'000;
  /// Largest Inj(H,G1) x Inj(H,G2) carrier handed to the orbit oracle.
  std::size_t oracle_limit = 1'000'000;

  /// Defaults, with AMALGENUS_BUDGET (if set) overriding search_budget.
  static Limits from_environment();
};

}  // namespace amalgenus
