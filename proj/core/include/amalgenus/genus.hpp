#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgenus/amalgam.hpp"
#include "amalgenus/coset_actions.hpp"
#include "amalgenus/morphisms.hpp"

namespace amalgenus {

enum class GenusMode {
  kProfinitelyNonsymmetric,
  kProfsymmetricNonsymmetric,
  kSymmetric,
  kDouble,
};

/// Which N+ set enters the carrier: the user's own, {e}, or <N1, N2>.
enum class NplusPolicy { kExact, kLower, kUpper };

std::string to_string(GenusMode mode);
std::string to_string(NplusPolicy policy);
std::optional<GenusMode> parse_genus_mode(std::string_view s);
std::optional<NplusPolicy> parse_nplus_policy(std::string_view s);

/// Out(H)-level data for the genus formulas. All subgroups and sets live in
/// out_h->group.
struct GenusInput {
  OutPtr out_h;
  Subgroup a1;
  Subgroup a2;
  Subgroup ahat1;
  Subgroup ahat2;
  ElementSet nplus;
  std::optional<Subgroup> n1;  // normalizer images, needed by the upper proxy
  std::optional<Subgroup> n2;
  std::optional<Element> xi;
  GenusMode mode = GenusMode::kProfinitelyNonsymmetric;
  NplusPolicy policy = NplusPolicy::kExact;
  bool nplus_is_proxy = false;
  /// Double mode only: quotient by inversion (abstract symmetry present).
  /// Without it the count is A2 \ Ahat1 / A1.
  bool double_c2 = true;
  std::vector<std::string> conditions;
};

/// Replaces nplus according to the policy. kUpper needs n1 and n2.
GenusInput with_nplus_policy(GenusInput input, NplusPolicy policy);

struct GenusReport {
  std::size_t value = 0;
  bool is_bound = false;
  GenusMode mode = GenusMode::kProfinitelyNonsymmetric;
  NplusPolicy policy = NplusPolicy::kExact;
  bool nplus_is_proxy = false;
  OutPtr out_h;
  ElementSet k;
  ElementSet s;
  std::optional<DoubleCosetDecomposition> decomposition;
  std::optional<C2Orbits> pairing;
  /// |N2 \ <N1, N2> / N1| when the normalizer images are known.
  std::optional<std::size_t> normalizer_bound;
  std::vector<std::string> conditions;
  std::vector<std::string> provenance;
  /// genus_pushout: one entry per subgroup pair.
  std::vector<std::pair<std::string, std::size_t>> parts;
};

struct GenusOverrides {
  std::optional<ElementSet> a1;
  std::optional<ElementSet> a2;
  std::optional<ElementSet> ahat1;
  std::optional<ElementSet> ahat2;
  std::optional<ElementSet> nplus;
  std::optional<Element> xi;
  std::optional<GenusMode> mode;
};

/// Finite-group data: A_i = Ahat_i are the Out(H) restriction images, the
/// mode is symmetric iff some gamma maps H1 onto H2, and nplus follows the
/// policy (kExact requires overrides.nplus). Subgroup overrides are closed
/// under multiplication.
GenusInput derive_genus_input(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                              const Subgroup& h2, const Limits& limits = {},
                              NplusPolicy policy = NplusPolicy::kUpper,
                              const GenusOverrides& overrides = {});

GenusInput genus_input_from(const FixedSubgroupData& data, NplusPolicy policy,
                            const GenusOverrides& overrides = {});

/// Throws kInvalidInput (A_i not in Ahat_i, e not in nplus), kMissingXi,
/// kCarrierNotClosed, kActionNotClosed.
GenusReport genus_fixed(const GenusInput& input);

/// Double cosets of (A1, A1) in Ahat1 modulo inversion, or A2 \ Ahat1 / A1
/// without the quotient when input.double_c2 is false.
GenusReport genus_double(const GenusInput& input);

struct SimplificationConditions {
  bool central[2] = {false, false};
  bool direct_factor[2] = {false, false};
  bool out_abelian = false;
  bool self_normalizing[2] = {false, false};
  bool retract[2] = {false, false};
  /// <N1, N2> = N2 N1 as sets.
  bool nplus_eliminable = false;

  bool any() const;
  std::vector<std::string> names() const;
};

SimplificationConditions check_simplifications(const GroupPtr& g1, const Subgroup& h1,
                                               const GroupPtr& g2, const Subgroup& h2,
                                               const Limits& limits = {});

/// |N2 \ <N1, N2> / N1| in Out(H).
GenusReport normalizer_bound(const OutPtr& out_h, const Subgroup& n1, const Subgroup& n2);

/// Throws kSymmetricInputForNonsymmetricBound when some gamma maps H1 onto H2.
GenusReport genus_bound_finite(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                               const Subgroup& h2, const Limits& limits = {});

/// Sum of genus_fixed over pairs drawn from the Aut(G_i)-classes inside the
/// profinite orbits of H1 and H2. For finite factors those orbits are the
/// Aut(G_i)-orbits, so each side contributes one class.
GenusReport genus_pushout(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                          const Subgroup& h2, const Limits& limits = {},
                          NplusPolicy policy = NplusPolicy::kUpper);

/// Abstract variant: the per-pair inputs are supplied.
GenusReport genus_pushout(const std::vector<GenusInput>& pairs);

}  // namespace amalgenus
