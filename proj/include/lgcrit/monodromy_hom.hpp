#pragma once

#include "lgcrit/labeling.hpp"
#include "lgcrit/sections.hpp"

namespace lgcrit {

/// Shift of a label by a divisor class, each index reduced modulo its own
/// range independently.
ExcLabel act(const BundleSpec& spec, const PicClass& d, const ExcLabel& p);

/// Label map induced by translating the asymptotic grid: the second index
/// moves by the fiber degree; every wrap of the second index past r+1 drags
/// the first index by the twist total in addition to the base degree. Both
/// maps agree whenever no wrap occurs (in particular on the box divisors
/// below); they differ on wrapping twisted specs.
ExcLabel act_translation(const BundleSpec& spec, const PicClass& d, const ExcLabel& p);

/// Bounds convention for the box of divisors attached to a label.
enum class DivPlusBounds { Inclusive, ExclusiveLower };

/// Effective torus-invariant divisors D whose class keeps p inside the index
/// box: 0 <= k + |D|_1 <= s and 0 <= l + |D|_2 <= r (Inclusive), or with
/// strict lower bounds (ExclusiveLower). Deterministic lexicographic order.
std::vector<ToricDivisor> div_plus(const BundleSpec& spec, const ExcLabel& p,
                                   DivPlusBounds bounds = DivPlusBounds::Inclusive);

/// Witnesses: the divisors of div_plus(p1) whose class carries p1 to p2.
std::vector<ToricDivisor> hom_witnesses(const BundleSpec& spec, const ExcLabel& p1,
                                        const ExcLabel& p2,
                                        DivPlusBounds bounds = DivPlusBounds::Inclusive);

long long hom_mon_dimension(const BundleSpec& spec, const ExcLabel& p1, const ExcLabel& p2,
                            DivPlusBounds bounds = DivPlusBounds::Inclusive);

std::vector<std::vector<long long>> hom_mon_table(const BundleSpec& spec,
                                                  DivPlusBounds bounds = DivPlusBounds::Inclusive,
                                                  int threads = 0);

/// Section-count table versus witness-count table, entry by entry.
struct HomMismatch {
  ExcLabel p1, p2;
  long long sections = 0;
  long long witnesses = 0;
};
struct HomReport {
  long long pairs_checked = 0;
  std::vector<HomMismatch> mismatches;
  bool verified() const { return mismatches.empty(); }
};
HomReport verify_hom_equality(const BundleSpec& spec,
                              DivPlusBounds bounds = DivPlusBounds::Inclusive,
                              int threads = 0);

/// Concatenation of witnesses: for every label triple, the sum of a witness
/// for (p1,p2) and one for (p2,p3) must be a witness for (p1,p3). Also counts
/// how many triples reach the full witness set this way.
struct CompositionReport {
  long long triples = 0;      // label triples with both factor sets nonempty
  long long pairs = 0;        // witness pairs concatenated
  long long violations = 0;   // concatenations missing from the target set
  long long surjective = 0;   // triples whose target set is fully reached
  bool verified() const { return violations == 0; }
};
CompositionReport verify_composition(const BundleSpec& spec,
                                     DivPlusBounds bounds = DivPlusBounds::Inclusive);

/// The unit divisors V(v_0)..V(v_s), V(e_0)..V(e_r) in that order.
std::vector<ToricDivisor> ray_generators(const BundleSpec& spec);

/// Label map of one tracked loop, recorded over collection order: entry at
/// label_index(p) is the label of the point the p-labeled point lands on.
std::vector<ExcLabel> numeric_label_map(const CritSet& labeled_base, const ToricDivisor& D,
                                        const TrackOptions& opts = {});

struct MonodromyRow {
  ToricDivisor divisor;
  PicClass cls;
  std::vector<int> point_permutation;
  std::vector<ExcLabel> label_map;  // collection order
  bool matches_shift = false;
  bool matches_translation = false;
};
struct MonodromyReport {
  BundleSpec spec;
  double T = 12.0;
  std::vector<MonodromyRow> rows;
  bool all_shift = true;
  bool all_translation = true;
};

/// Track the loop of every given divisor at the deep base (u = -T, labeled
/// through a segment from u = 0) and compare the measured label maps against
/// both combinatorial laws. Passing no divisors selects the ray generators.
MonodromyReport verify_monodromy(const BundleSpec& spec, double T,
                                 const std::vector<ToricDivisor>& divisors = {},
                                 const TrackOptions& topts = {},
                                 const SolveOptions& sopts = {});

}  // namespace lgcrit
