#include "lgcrit/bundle.hpp"

#include <sstream>

namespace lgcrit {

std::string BundleSpec::name() const {
  std::ostringstream out;
  out << "P" << s << "(";
  for (int j = 0; j < r(); ++j) out << (j ? "," : "") << a[j];
  out << ")";
  return out.str();
}

void validate_spec(const BundleSpec& spec) {
  if (spec.s < 1) fail(ErrorCode::InvalidArgument, "base dimension must be >= 1");
  if (spec.r() < 1) fail(ErrorCode::InvalidArgument, "twist vector must be nonempty");
  for (int aj : spec.a)
    if (aj < 0) fail(ErrorCode::NegativeTwist, "twist " + std::to_string(aj) + " is negative");
  for (int j = 1; j < spec.r(); ++j)
    if (spec.a[j] < spec.a[j - 1]) fail(ErrorCode::Unsorted, "twist vector must be ascending");
  if (spec.twist_total() > spec.s)
    fail(ErrorCode::FanoViolation, "twist total " + std::to_string(spec.twist_total()) +
                                       " exceeds base dimension " + std::to_string(spec.s));
}

std::vector<std::vector<int>> vertices(const BundleSpec& spec) {
  const int s = spec.s, r = spec.r(), d = s + r;
  std::vector<std::vector<int>> rays;
  rays.reserve(d + 2);
  for (int i = 0; i < s; ++i) {
    std::vector<int> v(d, 0);
    v[i] = 1;
    rays.push_back(v);  // v_1..v_s
  }
  for (int j = 0; j < r; ++j) {
    std::vector<int> v(d, 0);
    v[s + j] = 1;
    rays.push_back(v);  // e_1..e_r
  }
  std::vector<int> v0(d, 0);
  for (int i = 0; i < s; ++i) v0[i] = -1;
  for (int j = 0; j < r; ++j) v0[s + j] = spec.a[j];
  rays.push_back(v0);
  std::vector<int> e0(d, 0);
  for (int j = 0; j < r; ++j) e0[s + j] = -1;
  rays.push_back(e0);
  return rays;
}

ToricDivisor zero_divisor(const BundleSpec& spec) {
  return ToricDivisor{std::vector<long long>(spec.s + 1, 0),
                      std::vector<long long>(spec.r() + 1, 0)};
}

void validate_divisor(const BundleSpec& spec, const ToricDivisor& d) {
  if (static_cast<int>(d.n.size()) != spec.s + 1 ||
      static_cast<int>(d.m.size()) != spec.r() + 1)
    fail(ErrorCode::SizeMismatch,
         "divisor coefficient lengths do not match the ray layout");
}

bool is_effective(const ToricDivisor& d) {
  for (long long c : d.n)
    if (c < 0) return false;
  for (long long c : d.m)
    if (c < 0) return false;
  return true;
}

ToricDivisor add(const ToricDivisor& d1, const ToricDivisor& d2) {
  if (d1.n.size() != d2.n.size() || d1.m.size() != d2.m.size())
    fail(ErrorCode::SizeMismatch, "divisor sum with mismatched layouts");
  ToricDivisor out = d1;
  for (size_t i = 0; i < out.n.size(); ++i) out.n[i] += d2.n[i];
  for (size_t j = 0; j < out.m.size(); ++j) out.m[j] += d2.m[j];
  return out;
}

std::string divisor_to_string(const ToricDivisor& d) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](long long c, const char* ray, size_t idx) {
    if (c == 0) return;
    if (!first) out << "+";
    first = false;
    if (c != 1) out << c << "*";
    out << ray << idx;
  };
  for (size_t i = 0; i < d.n.size(); ++i) emit(d.n[i], "v", i);
  for (size_t j = 0; j < d.m.size(); ++j) emit(d.m[j], "e", j);
  if (first) out << "0";
  return out.str();
}

PicClass divisor_class(const BundleSpec& spec, const ToricDivisor& d) {
  validate_divisor(spec, d);
  PicClass c;
  for (long long ni : d.n) c.h += ni;
  for (int j = 1; j <= spec.r(); ++j) c.h -= static_cast<long long>(spec.a[j - 1]) * d.m[j];
  for (long long mj : d.m) c.x += mj;
  return c;
}

std::vector<ExcLabel> collection(const BundleSpec& spec) {
  std::vector<ExcLabel> out;
  out.reserve(spec.n_points());
  for (int l = 0; l <= spec.r(); ++l)
    for (int k = 0; k <= spec.s; ++k) out.push_back({k, l});
  return out;
}

int label_index(const BundleSpec& spec, const ExcLabel& p) {
  if (p.k < 0 || p.k > spec.s || p.l < 0 || p.l > spec.r())
    fail(ErrorCode::InvalidArgument, "label " + label_to_string(p) + " out of range");
  return p.l * (spec.s + 1) + p.k;
}

std::string label_to_string(const ExcLabel& p) {
  return "(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
}

ToricDivisor parse_divisor(const BundleSpec& spec, const std::string& text) {
  ToricDivisor d = zero_divisor(spec);
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    char kind = tok[0];
    int idx = -1;
    try {
      size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used + 1 != tok.size()) idx = -1;
    } catch (...) {
      idx = -1;
    }
    if (kind == 'v' && idx >= 0 && idx <= spec.s)
      d.n[idx] += 1;
    else if (kind == 'e' && idx >= 0 && idx <= spec.r())
      d.m[idx] += 1;
    else
      fail(ErrorCode::InvalidArgument, "bad ray token '" + tok + "'");
  }
  return d;
}

}  // namespace lgcrit
