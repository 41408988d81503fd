#include "lgcrit/monodromy_hom.hpp"

#include <algorithm>
#include <functional>

#include "lgcrit/parallel.hpp"

namespace lgcrit {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

long long pos_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

}  // namespace

ExcLabel act(const BundleSpec& spec, const PicClass& d, const ExcLabel& p) {
  return {static_cast<int>(pos_mod(p.k + d.h, spec.s + 1)),
          static_cast<int>(pos_mod(p.l + d.x, spec.r() + 1))};
}

ExcLabel act_translation(const BundleSpec& spec, const PicClass& d, const ExcLabel& p) {
  const long long l_raw = p.l + d.x;
  const long long wraps = floor_div(l_raw, spec.r() + 1);
  const long long l_new = l_raw - wraps * (spec.r() + 1);
  const long long k_new = pos_mod(p.k + d.h + wraps * spec.twist_total(), spec.s + 1);
  return {static_cast<int>(k_new), static_cast<int>(l_new)};
}

std::vector<ToricDivisor> div_plus(const BundleSpec& spec, const ExcLabel& p,
                                   DivPlusBounds bounds) {
  const int s = spec.s, r = spec.r();
  const bool strict = bounds == DivPlusBounds::ExclusiveLower;
  std::vector<ToricDivisor> out;
  ToricDivisor d = zero_divisor(spec);

  // Fill n_0..n_s left to right with total t; inner positions lexicographic.
  std::function<void(int, long long)> fill_n = [&](int at, long long left) {
    if (at == s) {
      d.n[at] = left;
      out.push_back(d);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      d.n[at] = v;
      fill_n(at + 1, left - v);
    }
  };

  const long long x_lo = strict ? std::max<long long>(0, 1 - p.l) : 0;
  const long long x_hi = r - p.l;
  std::function<void(int, long long)> fill_m = [&](int at, long long budget) {
    if (at == r + 1) {
      long long x = 0, twist = 0;
      for (int j = 0; j <= r; ++j) x += d.m[j];
      for (int j = 1; j <= r; ++j) twist += static_cast<long long>(spec.a[j - 1]) * d.m[j];
      if (x < x_lo) return;
      const long long t_lo = std::max<long long>(strict ? twist - p.k + 1 : twist - p.k, 0);
      const long long t_hi = s - p.k + twist;
      for (long long t = t_lo; t <= t_hi; ++t) fill_n(0, t);
      return;
    }
    for (long long v = 0; v <= budget; ++v) {
      d.m[at] = v;
      fill_m(at + 1, budget - v);
    }
    d.m[at] = 0;
  };
  if (x_hi >= 0) fill_m(0, x_hi);
  return out;
}

std::vector<ToricDivisor> hom_witnesses(const BundleSpec& spec, const ExcLabel& p1,
                                        const ExcLabel& p2, DivPlusBounds bounds) {
  std::vector<ToricDivisor> out;
  for (const ToricDivisor& d : div_plus(spec, p1, bounds)) {
    const PicClass c = divisor_class(spec, d);
    if (p1.k + c.h == p2.k && p1.l + c.x == p2.l) out.push_back(d);
  }
  return out;
}

long long hom_mon_dimension(const BundleSpec& spec, const ExcLabel& p1, const ExcLabel& p2,
                            DivPlusBounds bounds) {
  return static_cast<long long>(hom_witnesses(spec, p1, p2, bounds).size());
}

std::vector<std::vector<long long>> hom_mon_table(const BundleSpec& spec, DivPlusBounds bounds,
                                                  int threads) {
  const auto labels = collection(spec);
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<long long>> table(n, std::vector<long long>(n, 0));
  parallel_for(n * n, resolve_threads(threads), [&](int idx) {
    table[idx / n][idx % n] = hom_mon_dimension(spec, labels[idx / n], labels[idx % n], bounds);
  });
  return table;
}

HomReport verify_hom_equality(const BundleSpec& spec, DivPlusBounds bounds, int threads) {
  const auto labels = collection(spec);
  const auto sec = hom_table(spec, threads);
  const auto wit = hom_mon_table(spec, bounds, threads);
  HomReport report;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = 0; j < labels.size(); ++j) {
      ++report.pairs_checked;
      if (sec[i][j] != wit[i][j])
        report.mismatches.push_back({labels[i], labels[j], sec[i][j], wit[i][j]});
    }
  return report;
}

CompositionReport verify_composition(const BundleSpec& spec, DivPlusBounds bounds) {
  const auto labels = collection(spec);
  CompositionReport rep;
  auto key = [](const ToricDivisor& d) {
    std::vector<long long> k = d.n;
    k.insert(k.end(), d.m.begin(), d.m.end());
    return k;
  };
  for (const ExcLabel& p1 : labels)
    for (const ExcLabel& p2 : labels)
      for (const ExcLabel& p3 : labels) {
        const auto w12 = hom_witnesses(spec, p1, p2, bounds);
        const auto w23 = hom_witnesses(spec, p2, p3, bounds);
        if (w12.empty() || w23.empty()) continue;
        const auto w13 = hom_witnesses(spec, p1, p3, bounds);
        std::vector<std::vector<long long>> target, reached;
        for (const ToricDivisor& d : w13) target.push_back(key(d));
        std::sort(target.begin(), target.end());
        ++rep.triples;
        for (const ToricDivisor& d1 : w12)
          for (const ToricDivisor& d2 : w23) {
            ++rep.pairs;
            const auto k = key(add(d1, d2));
            if (std::binary_search(target.begin(), target.end(), k))
              reached.push_back(k);
            else
              ++rep.violations;
          }
        std::sort(reached.begin(), reached.end());
        reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
        if (reached.size() == target.size()) ++rep.surjective;
      }
  return rep;
}

std::vector<ToricDivisor> ray_generators(const BundleSpec& spec) {
  std::vector<ToricDivisor> gens;
  for (int i = 0; i <= spec.s; ++i) {
    ToricDivisor d = zero_divisor(spec);
    d.n[i] = 1;
    gens.push_back(d);
  }
  for (int j = 0; j <= spec.r(); ++j) {
    ToricDivisor d = zero_divisor(spec);
    d.m[j] = 1;
    gens.push_back(d);
  }
  return gens;
}

std::vector<ExcLabel> numeric_label_map(const CritSet& labeled_base, const ToricDivisor& D,
                                        const TrackOptions& opts) {
  const BundleSpec& spec = labeled_base.spec;
  for (const CritPoint& p : labeled_base.points)
    if (!p.label.valid())
      fail(ErrorCode::InvalidArgument, "base set must be labeled before a loop is tracked");
  const Permutation sigma = track_loop(labeled_base, D, opts);
  std::vector<ExcLabel> out(labeled_base.points.size());
  for (size_t i = 0; i < labeled_base.points.size(); ++i) {
    const int from = label_index(spec, labeled_base.points[i].label);
    out[from] = labeled_base.points[sigma.map[i]].label;
  }
  return out;
}

MonodromyReport verify_monodromy(const BundleSpec& spec, double T,
                                 const std::vector<ToricDivisor>& divisors,
                                 const TrackOptions& topts, const SolveOptions& sopts) {
  MonodromyReport report;
  report.spec = spec;
  report.T = T;
  const CritSet base0 = solve_crit(spec, CoeffVector::unit(spec), sopts);
  CritSet deep = track_segment(base0, 0.0, -T, topts);
  assign_labels(deep);

  const std::vector<ToricDivisor> divs = divisors.empty() ? ray_generators(spec) : divisors;
  const auto labels = collection(spec);
  for (const ToricDivisor& D : divs) {
    MonodromyRow row;
    row.divisor = D;
    row.cls = divisor_class(spec, D);
    const Permutation sigma = track_loop(deep, D, topts);
    row.point_permutation = sigma.map;
    row.label_map.resize(labels.size());
    for (size_t i = 0; i < deep.points.size(); ++i)
      row.label_map[label_index(spec, deep.points[i].label)] =
          deep.points[sigma.map[i]].label;
    row.matches_shift = true;
    row.matches_translation = true;
    for (const ExcLabel& p : labels) {
      const ExcLabel got = row.label_map[label_index(spec, p)];
      row.matches_shift = row.matches_shift && got == act(spec, row.cls, p);
      row.matches_translation =
          row.matches_translation && got == act_translation(spec, row.cls, p);
    }
    report.all_shift = report.all_shift && row.matches_shift;
    report.all_translation = report.all_translation && row.matches_translation;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lgcrit
