#include "lgcrit/json_io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace lgcrit {

namespace {

std::string jc(const cplx& z) { return "[" + fmt17(z.real()) + "," + fmt17(z.imag()) + "]"; }

std::string jcv(const std::vector<cplx>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + jc(v[i]);
  return out + "]";
}

std::string jlabel(const ExcLabel& p) {
  if (!p.valid()) return "null";
  return "[" + std::to_string(p.k) + "," + std::to_string(p.l) + "]";
}

std::string jint_list(const std::vector<long long>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string jspec(const BundleSpec& spec) {
  std::string out = "\"s\":" + std::to_string(spec.s) + ",\"a\":[";
  for (int j = 0; j < spec.r(); ++j) out += (j ? "," : "") + std::to_string(spec.a[j]);
  return out + "]";
}

cplx parse_c(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string describe_json(const BundleSpec& spec) {
  std::ostringstream out;
  out << "{" << jspec(spec) << ",\"name\":\"" << spec.name() << "\",\"dim\":" << spec.dim()
      << ",\"collection_size\":" << spec.n_points()
      << ",\"twist_total\":" << spec.twist_total() << ",\"rays\":[";
  const auto verts = vertices(spec);
  std::vector<std::string> ray_names;
  for (int i = 1; i <= spec.s; ++i) ray_names.push_back("v" + std::to_string(i));
  for (int j = 1; j <= spec.r(); ++j) ray_names.push_back("e" + std::to_string(j));
  ray_names.push_back("v0");
  ray_names.push_back("e0");
  auto ray_class = [&](const std::string& name) -> std::pair<long long, long long> {
    if (name[0] == 'v') return {1, 0};
    const int j = std::stoi(name.substr(1));
    if (j == 0) return {0, 1};
    return {-spec.a[j - 1], 1};
  };
  for (size_t i = 0; i < verts.size(); ++i) {
    const auto cls = ray_class(ray_names[i]);
    out << (i ? "," : "") << "{\"ray\":\"" << ray_names[i] << "\",\"coords\":[";
    for (size_t k = 0; k < verts[i].size(); ++k) out << (k ? "," : "") << verts[i][k];
    out << "],\"class\":[" << cls.first << "," << cls.second << "]}";
  }
  out << "],\"collection\":[";
  const auto labels = collection(spec);
  for (size_t i = 0; i < labels.size(); ++i)
    out << (i ? "," : "") << "[" << labels[i].k << "," << labels[i].l << "]";
  out << "]}";
  return out.str();
}

std::string describe_text(const BundleSpec& spec) {
  std::ostringstream out;
  out << "bundle " << spec.name() << ": s=" << spec.s << " r=" << spec.r()
      << " dim=" << spec.dim() << " collection=" << spec.n_points()
      << " twist_total=" << spec.twist_total() << "\n";
  const auto verts = vertices(spec);
  out << "rays:\n";
  for (const auto& v : verts) {
    out << "  (";
    for (size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
    out << ")\n";
  }
  out << "collection:";
  for (const ExcLabel& p : collection(spec)) out << " " << label_to_string(p);
  out << "\n";
  return out.str();
}

std::string critset_json(const CritSet& set) {
  std::ostringstream out;
  out << "{" << jspec(set.spec) << ",\"tol\":" << fmt17(set.tol)
      << ",\"separation\":" << fmt17(set.separation) << ",\"coeffs\":{\"cz\":"
      << jcv(set.coeffs.cz) << ",\"cw\":" << jcv(set.coeffs.cw)
      << ",\"cv0\":" << jc(set.coeffs.cv0) << ",\"ce0\":" << jc(set.coeffs.ce0)
      << "},\"points\":[";
  for (size_t i = 0; i < set.points.size(); ++i) {
    const CritPoint& p = set.points[i];
    out << (i ? "," : "") << "{\"z\":" << jcv(p.z) << ",\"w\":" << jcv(p.w)
        << ",\"residual\":" << fmt17(p.residual) << ",\"label\":" << jlabel(p.label) << "}";
  }
  out << "]}";
  return out.str();
}

std::string critset_text(const CritSet& set) {
  std::ostringstream out;
  out << "critical set of " << set.spec.name() << ": " << set.points.size() << " points\n";
  out << std::setprecision(6);
  for (size_t i = 0; i < set.points.size(); ++i) {
    const CritPoint& p = set.points[i];
    out << "  [" << i << "]";
    if (p.label.valid()) out << " label " << label_to_string(p.label);
    out << " z=(";
    for (size_t q = 0; q < p.z.size(); ++q)
      out << (q ? ", " : "") << p.z[q].real() << (p.z[q].imag() < 0 ? "-" : "+")
          << std::abs(p.z[q].imag()) << "i";
    out << ") w=(";
    for (size_t q = 0; q < p.w.size(); ++q)
      out << (q ? ", " : "") << p.w[q].real() << (p.w[q].imag() < 0 ? "-" : "+")
          << std::abs(p.w[q].imag()) << "i";
    out << ") residual=" << p.residual << "\n";
  }
  return out.str();
}

CritSet critset_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CritSet set;
  set.spec.s = j.at("s").get<int>();
  set.spec.a = j.at("a").get<std::vector<int>>();
  validate_spec(set.spec);
  set.tol = j.at("tol").get<double>();
  set.separation = j.at("separation").get<double>();
  const auto& jc_ = j.at("coeffs");
  for (const auto& v : jc_.at("cz")) set.coeffs.cz.push_back(parse_c(v));
  for (const auto& v : jc_.at("cw")) set.coeffs.cw.push_back(parse_c(v));
  set.coeffs.cv0 = parse_c(jc_.at("cv0"));
  set.coeffs.ce0 = parse_c(jc_.at("ce0"));
  validate_coeffs(set.spec, set.coeffs);
  for (const auto& jp : j.at("points")) {
    CritPoint p;
    for (const auto& v : jp.at("z")) p.z.push_back(parse_c(v));
    for (const auto& v : jp.at("w")) p.w.push_back(parse_c(v));
    p.residual = jp.at("residual").get<double>();
    if (!jp.at("label").is_null())
      p.label = {jp.at("label").at(0).get<int>(), jp.at("label").at(1).get<int>()};
    set.points.push_back(std::move(p));
  }
  return set;
}

std::string limits_json(const BundleSpec& spec, double T, const std::string& direction,
                        const std::vector<LimitRow>& rows, double tolerance) {
  std::ostringstream out;
  double max_dist = 0.0;
  for (const LimitRow& r : rows) max_dist = std::max(max_dist, r.dist);
  out << "{" << jspec(spec) << ",\"T\":" << fmt17(T) << ",\"direction\":\"" << direction
      << "\",\"tolerance\":" << fmt17(tolerance) << ",\"max_dist\":" << fmt17(max_dist)
      << ",\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    out << (i ? "," : "") << "{\"label\":" << jlabel(rows[i].label) << ",\"theta\":["
        << fmt17(rows[i].measured[0]) << "," << fmt17(rows[i].measured[1]) << "]";
    if (rows[i].dist >= 0.0)
      out << ",\"grid\":[" << fmt17(rows[i].grid[0]) << "," << fmt17(rows[i].grid[1])
          << "],\"dist\":" << fmt17(rows[i].dist);
    else
      out << ",\"grid\":null,\"dist\":null";
    out << "}";
  }
  out << "]}";
  return out.str();
}

std::string limits_text(const BundleSpec& spec, double T, const std::string& direction,
                        const std::vector<LimitRow>& rows, double tolerance) {
  std::ostringstream out;
  out << "angular limits of " << spec.name() << " at T=" << T << " (" << direction
      << " side), acceptance radius " << std::setprecision(4) << tolerance << "\n";
  out << std::setprecision(6) << std::fixed;
  for (const LimitRow& r : rows) {
    out << "  " << label_to_string(r.label) << " theta=(" << r.measured[0] << ", "
        << r.measured[1] << ")";
    if (r.dist >= 0.0)
      out << " grid=(" << r.grid[0] << ", " << r.grid[1] << ") dist " << std::setprecision(2)
          << std::scientific << r.dist << std::setprecision(6) << std::fixed;
    out << "\n";
  }
  return out.str();
}

std::string monodromy_json(const MonodromyReport& report) {
  std::ostringstream out;
  const auto labels = collection(report.spec);
  out << "{" << jspec(report.spec) << ",\"T\":" << fmt17(report.T) << ",\"rows\":[";
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const MonodromyRow& row = report.rows[i];
    out << (i ? "," : "") << "{\"divisor\":{\"n\":" << jint_list(row.divisor.n)
        << ",\"m\":" << jint_list(row.divisor.m) << ",\"text\":\""
        << divisor_to_string(row.divisor) << "\"},\"class\":[" << row.cls.h << ","
        << row.cls.x << "],\"point_permutation\":[";
    for (size_t k = 0; k < row.point_permutation.size(); ++k)
      out << (k ? "," : "") << row.point_permutation[k];
    out << "],\"label_map\":[";
    for (size_t k = 0; k < row.label_map.size(); ++k)
      out << (k ? "," : "") << "{\"from\":" << jlabel(labels[k])
          << ",\"to\":" << jlabel(row.label_map[k]) << "}";
    out << "],\"matches_shift\":" << (row.matches_shift ? "true" : "false")
        << ",\"matches_translation\":" << (row.matches_translation ? "true" : "false") << "}";
  }
  out << "],\"all_shift\":" << (report.all_shift ? "true" : "false")
      << ",\"all_translation\":" << (report.all_translation ? "true" : "false") << "}";
  return out.str();
}

std::string monodromy_text(const MonodromyReport& report) {
  std::ostringstream out;
  const auto labels = collection(report.spec);
  out << "monodromy of " << report.spec.name() << " at T=" << report.T << "\n";
  for (const MonodromyRow& row : report.rows) {
    out << "  loop " << divisor_to_string(row.divisor) << " class (" << row.cls.h << ","
        << row.cls.x << "):";
    for (size_t k = 0; k < row.label_map.size(); ++k)
      out << " " << label_to_string(labels[k]) << "->" << label_to_string(row.label_map[k]);
    out << (row.matches_shift ? "  [shift ok]" : "  [shift differs]")
        << (row.matches_translation ? " [translation ok]" : " [translation differs]") << "\n";
  }
  return out.str();
}

std::string hom_json(const BundleSpec& spec, const std::vector<std::vector<long long>>& table) {
  std::ostringstream out;
  out << "{" << jspec(spec) << ",\"collection\":[";
  const auto labels = collection(spec);
  for (size_t i = 0; i < labels.size(); ++i)
    out << (i ? "," : "") << "[" << labels[i].k << "," << labels[i].l << "]";
  out << "],\"hom_table\":[";
  for (size_t i = 0; i < table.size(); ++i) {
    out << (i ? "," : "") << "[";
    for (size_t j = 0; j < table[i].size(); ++j) out << (j ? "," : "") << table[i][j];
    out << "]";
  }
  out << "]}";
  return out.str();
}

std::string hom_text(const BundleSpec& spec, const std::vector<std::vector<long long>>& table) {
  std::ostringstream out;
  const auto labels = collection(spec);
  out << "hom dimensions of " << spec.name() << " (rows: source, columns: target)\n      ";
  for (const ExcLabel& p : labels) out << std::setw(6) << label_to_string(p);
  out << "\n";
  for (size_t i = 0; i < table.size(); ++i) {
    out << std::setw(6) << label_to_string(labels[i]);
    for (size_t j = 0; j < table[i].size(); ++j) out << std::setw(6) << table[i][j];
    out << "\n";
  }
  return out.str();
}

std::string curve_csv(const std::vector<CurveRow>& rows) {
  std::string out = "t,index,re_WZ,im_WZ,re_invW,im_invW\n";
  for (const CurveRow& r : rows)
    out += fmt17(r.t) + "," + std::to_string(r.index) + "," + fmt17(r.WZ.real()) + "," +
           fmt17(r.WZ.imag()) + "," + fmt17(r.invW.real()) + "," + fmt17(r.invW.imag()) + "\n";
  return out;
}

std::string curve_json(const std::vector<CurveRow>& rows) {
  std::string out = "{\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i)
    out += std::string(i ? "," : "") + "{\"t\":" + fmt17(rows[i].t) +
           ",\"index\":" + std::to_string(rows[i].index) + ",\"WZ\":" + jc(rows[i].WZ) +
           ",\"invW\":" + jc(rows[i].invW) + "}";
  return out + "]}";
}

std::string verify_labels_json(const BundleSpec& spec, double T, const AssignReport& assign,
                               double hyper_residual, bool verified) {
  std::ostringstream out;
  out << "{\"check\":\"asymptotic-labels\"," << jspec(spec) << ",\"T\":" << fmt17(T)
      << ",\"max_grid_dist\":" << fmt17(assign.max_dist)
      << ",\"label_tolerance\":" << fmt17(assign.tolerance)
      << ",\"hyperplane_residual\":" << fmt17(hyper_residual)
      << ",\"verified\":" << (verified ? "true" : "false") << "}";
  return out.str();
}

std::string verify_hom_json(const BundleSpec& spec, const HomReport& report) {
  std::ostringstream out;
  out << "{\"check\":\"hom-tables\"," << jspec(spec)
      << ",\"pairs_checked\":" << report.pairs_checked << ",\"mismatches\":[";
  for (size_t i = 0; i < report.mismatches.size(); ++i)
    out << (i ? "," : "") << "{\"from\":" << jlabel(report.mismatches[i].p1)
        << ",\"to\":" << jlabel(report.mismatches[i].p2)
        << ",\"sections\":" << report.mismatches[i].sections
        << ",\"witnesses\":" << report.mismatches[i].witnesses << "}";
  out << "],\"verified\":" << (report.verified() ? "true" : "false") << "}";
  return out.str();
}

std::string verify_monodromy_json(const MonodromyReport& report) {
  std::ostringstream out;
  out << "{\"check\":\"monodromy-shift\",\"report\":" << monodromy_json(report)
      << ",\"verified\":" << (report.all_shift ? "true" : "false")
      << ",\"translation_verified\":" << (report.all_translation ? "true" : "false") << "}";
  return out.str();
}

std::string verify_composition_json(const BundleSpec& spec, const CompositionReport& report) {
  std::ostringstream out;
  out << "{\"check\":\"witness-composition\"," << jspec(spec)
      << ",\"triples\":" << report.triples << ",\"pairs\":" << report.pairs
      << ",\"violations\":" << report.violations << ",\"surjective\":" << report.surjective
      << ",\"verified\":" << (report.verified() ? "true" : "false") << "}";
  return out.str();
}

}  // namespace lgcrit
