#include "amalgenus/error.hpp"

#include <charconv>
#include <cstdlib>

namespace amalgenus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonAssociative: return "NonAssociative";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNotLatinSquare: return "NotLatinSquare";
    case ErrorKind::kSizeExceeded: return "SizeExceeded";
    case ErrorKind::kNotBijective: return "NotBijective";
    case ErrorKind::kSubgroupNotInParent: return "SubgroupNotInParent";
    case ErrorKind::kIncompatibleShapes: return "IncompatibleShapes";
    case ErrorKind::kNotIsomorphicSubgroups: return "NotIsomorphicSubgroups";
    case ErrorKind::kFictitiousAmalgam: return "FictitiousAmalgam";
    case ErrorKind::kCarrierNotClosed: return "CarrierNotClosed";
    case ErrorKind::kActionNotClosed: return "ActionNotClosed";
    case ErrorKind::kActionNotWellDefined: return "ActionNotWellDefined";
    case ErrorKind::kNotInvolution: return "NotInvolution";
    case ErrorKind::kMissingXi: return "MissingXi";
    case ErrorKind::kSymmetricInputForNonsymmetricBound:
      return "SymmetricInputForNonsymmetricBound";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

void check_invariant(bool condition, std::string_view what) {
  if (!condition) fail(ErrorKind::kInternal, std::string(what));
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("AMALGENUS_BUDGET")) {
    std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      fail(ErrorKind::kInvalidInput,
           "AMALGENUS_BUDGET must be a positive integer, got '" + std::string(text) + "'");
    }
    limits.search_budget = value;
  }
  return limits;
}

}  // namespace amalgenus
