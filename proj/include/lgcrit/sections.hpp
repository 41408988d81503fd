#pragma once

#include <vector>

#include "lgcrit/bundle.hpp"

namespace lgcrit {

/// Dimension of the space of global sections of the line bundle with class L.
/// Closed form: sum over fiber-degree splittings (m_0..m_r >= 0, sum = L.x) of
/// the base section count C(L.h + sum a_j m_j + s, s), where a negative
/// twisted degree contributes nothing. Zero whenever L.x < 0.
long long count_sections(const BundleSpec& spec, const PicClass& L);

/// Independent cross-check: count lattice solutions (n, m) >= 0 with
/// divisor_class(n, m) == L by explicit enumeration (no binomials).
long long count_sections_by_enumeration(const BundleSpec& spec, const PicClass& L);

/// Square table H[i][j] = dim Hom(E_i, E_j) over collection order, computed
/// from section counts of the label differences. Entries below the partial
/// order vanish. threads = 0 picks the hardware default; any thread count
/// yields identical tables.
std::vector<std::vector<long long>> hom_table(const BundleSpec& spec, int threads = 0);

}  // namespace lgcrit
