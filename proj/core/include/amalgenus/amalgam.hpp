#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgenus/coset_actions.hpp"
#include "amalgenus/morphisms.hpp"

namespace amalgenus {

/// G1 *_H G2 given by the two embeddings lambda: H -> G1, mu: H -> G2.
struct PushOut {
  GroupPtr h;
  GroupPtr g1;
  GroupPtr g2;
  Morphism lambda;
  Morphism mu;

  /// Checks both injections and rejects lambda(H) = G1 or mu(H) = G2.
  static PushOut make(Morphism lambda, Morphism mu);
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

struct PushOutIsoWitness {
  std::vector<Element> beta1;  // Aut(G1)
  std::vector<Element> beta2;  // Aut(G2)
  std::vector<Element> alpha;  // Aut(H)
  /// When set, the witness relates p to the swapped form of q,
  /// (phi^-1 nu, phi eta) for a fixed isomorphism phi: G1 -> G2, or (nu, eta)
  /// when q was given over (G2, G1).
  bool swapped = false;
};

/// beta1 eta = lambda alpha and beta2 nu = mu alpha for q = (eta, nu).
/// Throws kIncompatibleShapes if q is not over the same (or, with
/// allow_swap, the reversed) pair of factors.
std::optional<PushOutIsoWitness> pushout_isomorphic(const PushOut& p, const PushOut& q,
                                                    bool allow_swap, const Limits& limits = {});

/// Some isomorphism gamma: G1 -> G2 with gamma lambda = mu.
std::optional<Morphism> is_double(const PushOut& p, const Limits& limits = {});

enum class IsoCountMode { kPushoutFamily, kFixedSubgroups };
enum class CountMethod { kFormula, kOracle };
enum class CosetLevel { kOut, kAut };

std::string to_string(IsoCountMode mode);
std::string to_string(CountMethod method);

struct IsoClassReport {
  std::size_t count = 0;
  std::vector<PushOut> representatives;
  IsoCountMode mode = IsoCountMode::kFixedSubgroups;
  bool symmetric = false;
  CountMethod method = CountMethod::kFormula;
  /// Double cosets before any C2 quotient (formula path only).
  std::size_t unquotiented = 0;
  std::string provenance;
};

/// Orbits of Aut(G1) x Aut(G2) x Aut(H) (and the swap when G1 ~ G2) on
/// Inj(H,G1) x Inj(H,G2). Throws kSizeExceeded above limits.oracle_limit.
IsoClassReport count_classes_pushout_family(const GroupPtr& h, const GroupPtr& g1,
                                            const GroupPtr& g2, const Limits& limits = {});

/// Everything the fixed-subgroup count needs. H is induced_group(h1),
/// lambda0 its inclusion, mu0 the canonical embedding of H onto h2.
struct FixedSubgroupData {
  GroupPtr g1;
  GroupPtr g2;
  GroupPtr h;
  Morphism lambda0;
  Morphism mu0;
  AutPtr aut_h;
  OutPtr out_h;
  AutPtr aut_g1;
  AutPtr aut_g2;
  RestrictionImage r1;
  /// Restrictions pulled back through mu0.
  RestrictionImage r2;
  std::optional<Morphism> gamma;  // G1 -> G2 with gamma(H1) = H2
  /// mu0^-1 gamma lambda0 as an index into Aut(H), -1 without gamma.
  Element xi = -1;
};

/// Throws kFictitiousAmalgam, kNotIsomorphicSubgroups.
FixedSubgroupData fixed_subgroup_data(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                                      const Subgroup& h2, const Limits& limits = {},
                                      AutPtr aut_g1 = nullptr, AutPtr aut_g2 = nullptr);

/// Double cosets of the restriction images in Out(H) (or Aut(H)), with the
/// twisted C2 quotient when some gamma: G1 -> G2 maps H1 onto H2.
IsoClassReport count_classes_fixed_subgroups(const GroupPtr& g1, const Subgroup& h1,
                                             const GroupPtr& g2, const Subgroup& h2,
                                             const Limits& limits = {},
                                             CosetLevel level = CosetLevel::kOut);

/// Same quantity by orbits on Inj(H,H1) x Inj(H,H2).
IsoClassReport count_classes_fixed_oracle(const GroupPtr& g1, const Subgroup& h1,
                                          const GroupPtr& g2, const Subgroup& h2,
                                          const Limits& limits = {});

/// Aut(G)-orbit representatives among the subgroups of G isomorphic to H.
std::vector<Subgroup> subgroup_orbit_reps(const GroupPtr& g, const GroupPtr& h,
                                          const Limits& limits = {});

/// The push-out family count assembled from fixed-subgroup counts over
/// pairs of orbit representatives.
IsoClassReport count_classes_pushout_formula(const GroupPtr& h, const GroupPtr& g1,
                                             const GroupPtr& g2, const Limits& limits = {});

struct ComparisonReport {
  std::string g1_label;
  std::string g2_label;
  std::string h_label;
  std::size_t formula_count = 0;
  std::size_t oracle_count = 0;
  /// Classes among the oracle's orbit representatives under pushout_isomorphic;
  /// equals oracle_count when the orbits really are the iso classes.
  std::optional<std::size_t> pairwise_count;
  bool agree = false;
  std::string counterexample;
};

ComparisonReport oracle_cross_check(const GroupPtr& g1, const GroupPtr& h, const GroupPtr& g2,
                                    const Limits& limits = {}, bool pairwise = true);

/// Isomorphism types of subgroups H with |H| <= max_order that are proper
/// in both factors, each as induced from its first occurrence in g1.
std::vector<GroupPtr> common_subgroup_types(const GroupPtr& g1, const GroupPtr& g2,
                                            std::size_t max_order, const Limits& limits = {});

struct SweepResult {
  std::vector<ComparisonReport> cases;
  std::size_t agreed = 0;

  bool all_agree() const { return agreed == cases.size(); }
};

/// oracle_cross_check over every unordered pair of groups (including a group
/// with itself) and every common subgroup type up to max_h.
SweepResult oracle_sweep(const std::vector<GroupPtr>& groups, std::size_t max_h,
                         const Limits& limits = {}, bool pairwise = false);

}  // namespace amalgenus
