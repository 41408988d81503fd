#include "lgcrit/sections.hpp"

#include <functional>

#include "lgcrit/parallel.hpp"

namespace lgcrit {

namespace {

// C(t + s, s) for t >= 0, else 0. Values stay far below 2^63 for the sizes
// reachable from valid specs and CLI inputs.
long long base_sections(long long t, int s) {
  if (t < 0) return 0;
  long long num = 1;
  for (int i = 1; i <= s; ++i) num = num * (t + i) / i;
  return num;
}

// Visit all (m_0..m_r) >= 0 with sum == total.
void for_each_split(int parts, long long total,
                    std::vector<long long>& m,
                    const std::function<void(const std::vector<long long>&)>& fn,
                    int at = 0) {
  if (at == parts - 1) {
    m[at] = total;
    fn(m);
    return;
  }
  for (long long v = 0; v <= total; ++v) {
    m[at] = v;
    for_each_split(parts, total - v, m, fn, at + 1);
  }
}

}  // namespace

long long count_sections(const BundleSpec& spec, const PicClass& L) {
  if (L.x < 0) return 0;
  const int r = spec.r();
  long long total = 0;
  std::vector<long long> m(r + 1, 0);
  for_each_split(r + 1, L.x, m, [&](const std::vector<long long>& mm) {
    long long t = L.h;
    for (int j = 1; j <= r; ++j) t += static_cast<long long>(spec.a[j - 1]) * mm[j];
    total += base_sections(t, spec.s);
  });
  return total;
}

long long count_sections_by_enumeration(const BundleSpec& spec, const PicClass& L) {
  if (L.x < 0) return 0;
  const int s = spec.s, r = spec.r();
  long long total = 0;
  std::vector<long long> m(r + 1, 0);
  for_each_split(r + 1, L.x, m, [&](const std::vector<long long>& mm) {
    long long t = L.h;
    for (int j = 1; j <= r; ++j) t += static_cast<long long>(spec.a[j - 1]) * mm[j];
    if (t < 0) return;
    // Count (n_0..n_s) >= 0 with sum == t one tuple at a time.
    std::function<long long(int, long long)> walk = [&](int at, long long left) -> long long {
      if (at == s) return 1;  // last coordinate forced
      long long c = 0;
      for (long long v = 0; v <= left; ++v) c += walk(at + 1, left - v);
      return c;
    };
    total += walk(0, t);
  });
  return total;
}

std::vector<std::vector<long long>> hom_table(const BundleSpec& spec, int threads) {
  const auto labels = collection(spec);
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<long long>> table(n, std::vector<long long>(n, 0));
  parallel_for(n * n, resolve_threads(threads), [&](int idx) {
    const int i = idx / n, j = idx % n;
    PicClass diff{labels[j].k - labels[i].k, labels[j].l - labels[i].l};
    table[i][j] = count_sections(spec, diff);
  });
  return table;
}

}  // namespace lgcrit
