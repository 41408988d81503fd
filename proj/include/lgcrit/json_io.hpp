#pragma once

#include <string>

#include "lgcrit/monodromy_hom.hpp"

namespace lgcrit {

/// 17-significant-digit decimal form: round-trips every double exactly.
std::string fmt17(double x);

std::string describe_json(const BundleSpec& spec);
std::string describe_text(const BundleSpec& spec);

std::string critset_json(const CritSet& set);
std::string critset_text(const CritSet& set);
CritSet critset_from_json(const std::string& text);

struct LimitRow {
  ExcLabel label;
  TorusPoint measured;
  TorusPoint grid;
  double dist = 0.0;
};
std::string limits_json(const BundleSpec& spec, double T, const std::string& direction,
                        const std::vector<LimitRow>& rows, double tolerance);
std::string limits_text(const BundleSpec& spec, double T, const std::string& direction,
                        const std::vector<LimitRow>& rows, double tolerance);

std::string monodromy_json(const MonodromyReport& report);
std::string monodromy_text(const MonodromyReport& report);

std::string hom_json(const BundleSpec& spec, const std::vector<std::vector<long long>>& table);
std::string hom_text(const BundleSpec& spec, const std::vector<std::vector<long long>>& table);

std::string curve_csv(const std::vector<CurveRow>& rows);
std::string curve_json(const std::vector<CurveRow>& rows);

/// Verification report fragments; each is a complete JSON object.
std::string verify_labels_json(const BundleSpec& spec, double T, const AssignReport& assign,
                               double hyper_residual, bool verified);
std::string verify_hom_json(const BundleSpec& spec, const HomReport& report);
std::string verify_monodromy_json(const MonodromyReport& report);
std::string verify_composition_json(const BundleSpec& spec, const CompositionReport& report);

}  // namespace lgcrit
