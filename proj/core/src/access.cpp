/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/access.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace rqss::access {

namespace {

// Per-secret map: complement label -> sorted X labels of its coset members.
using LabelTable = std::vector<std::map<std::uint64_t, std::vector<std::uint64_t>>>;

LabelTable build_label_table(const qss::Scheme& scheme, const std::vector<int>& X,
                             const std::vector<int>& comp) {
  LabelTable table(scheme.secret_dim());
  for (std::uint64_t c = 0; c < scheme.coeff_count(); ++c) {
    table[scheme.secret_of_coeff(c)][scheme.subset_label(c, comp)].push_back(
        scheme.subset_label(c, X));
  }
  for (auto& per_secret : table) {
    for (auto& [label, xs] : per_secret) std::sort(xs.begin(), xs.end());
  }
  return table;
}

std::int64_t sorted_intersection_size(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
  std::int64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

const std::vector<std::uint64_t>& labels_or_empty(
    const std::map<std::uint64_t, std::vector<std::uint64_t>>& m, std::uint64_t key) {
  static const std::vector<std::uint64_t> kEmpty;
  auto it = m.find(key);
  return it == m.end() ? kEmpty : it->second;
}

}  // namespace

const char* to_string(AccessClass c) {
  switch (c) {
    case AccessClass::kForbidden:
      return "forbidden";
    case AccessClass::kIntermediate:
      return "intermediate";
    case AccessClass::kQualified:
      return "qualified";
  }
  return "?";
}

bool is_qualified(const qss::Scheme& scheme, const std::vector<int>& X, GramWitness* witness) {
  scheme.check_subset(X, /*allow_empty=*/true);
  if (X.empty()) return scheme.secret_dim() == 1;
  const auto comp = scheme.complement(X);
  LabelTable table = build_label_table(scheme, X, comp);

  // Gram blocks for complement labels not reached by any coset are zero and
  // trivially scalar; only occupied labels need checking.
  std::set<std::uint64_t> occupied;
  for (const auto& per_secret : table) {
    for (const auto& [label, xs] : per_secret) occupied.insert(label);
  }

  for (std::uint64_t a : occupied) {
    for (std::uint64_t b : occupied) {
      std::int64_t diag = -1;
      for (std::uint64_t s = 0; s < scheme.secret_dim(); ++s) {
        for (std::uint64_t t = 0; t < scheme.secret_dim(); ++t) {
          std::int64_t count =
              sorted_intersection_size(labels_or_empty(table[s], a), labels_or_empty(table[t], b));
          if (s != t && count != 0) {
            if (witness) *witness = GramWitness{a, b};
            return false;
          }
          if (s == t) {
            if (diag < 0) diag = count;
            if (count != diag) {
              if (witness) *witness = GramWitness{a, b};
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool is_vanishing(const qss::Scheme& scheme, const std::vector<int>& X,
                  VanishingWitness* witness) {
  scheme.check_subset(X);
  const auto comp = scheme.complement(X);
  const std::uint64_t s_dim = scheme.secret_dim();

  // Complement-label groups per coset.
  LabelTable table = build_label_table(scheme, X, comp);

  // Off-diagonal inputs: W_X(|s><t|) = 0 means no (c, d) in D(s) x D(t)
  // shares a complement label.
  for (std::uint64_t s = 0; s < s_dim; ++s) {
    for (std::uint64_t t = s + 1; t < s_dim; ++t) {
      for (const auto& [label, xs] : table[s]) {
        if (table[t].count(label)) {
          if (witness) *witness = VanishingWitness{s, t, /*off_diagonal=*/true};
          return false;
        }
      }
    }
  }

  // Diagonal inputs must all map to the same operator. W_X(|s><s|) is the
  // integer count map (x, x') -> #{(c,d) in D(s)^2 : same complement label}.
  using CountMap = std::map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t>;
  auto diagonal_map = [&](std::uint64_t s) {
    CountMap m;
    for (const auto& [label, xs] : table[s]) {
      for (std::uint64_t xi : xs) {
        for (std::uint64_t xj : xs) ++m[{xi, xj}];
      }
    }
    return m;
  };
  CountMap first = diagonal_map(0);
  for (std::uint64_t s = 1; s < s_dim; ++s) {
    if (diagonal_map(s) != first) {
      if (witness) *witness = VanishingWitness{0, s, /*off_diagonal=*/false};
      return false;
    }
  }
  return true;
}

AccessClass classify(const qss::Scheme& scheme, const std::vector<int>& X) {
  if (X.empty()) return AccessClass::kForbidden;
  if (is_qualified(scheme, X)) return AccessClass::kQualified;
  if (is_vanishing(scheme, X)) return AccessClass::kForbidden;
  return AccessClass::kIntermediate;
}

double basis_holevo_dits(const qss::Scheme& scheme, const std::vector<int>& X) {
  scheme.check_subset(X);
  const auto comp = scheme.complement(X);
  const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(scheme.normalization()));
  const double logq = std::log(static_cast<double>(scheme.params().q));

  double mean_h = 0.0;
  for (std::uint64_t s = 0; s < scheme.secret_dim(); ++s) {
    std::vector<qss::SparseEntry> entries;
    for (std::uint64_t c = s * scheme.normalization(); c < (s + 1) * scheme.normalization(); ++c) {
      entries.push_back({scheme.subset_label(c, X), scheme.subset_label(c, comp), inv_sqrt_c});
    }
    mean_h += qss::reduced_entropy(entries) / scheme.secret_dim();
  }
  return (mixed_entropy_dits(scheme, X) * logq - mean_h) / logq;
}

double mixed_entropy_dits(const qss::Scheme& scheme, const std::vector<int>& X) {
  scheme.check_subset(X);
  const auto comp = scheme.complement(X);
  const std::uint64_t dim_c = [&] {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) d *= scheme.params().q;
    return d;
  }();
  // Purify sigma_mu = I/q^L with a reference register of dimension q^L; the
  // rest side is (reference, complement).
  const double amp = 1.0 / std::sqrt(static_cast<double>(scheme.coeff_count()));
  std::vector<qss::SparseEntry> entries;
  for (std::uint64_t c = 0; c < scheme.coeff_count(); ++c) {
    entries.push_back({scheme.subset_label(c, X),
                       scheme.secret_of_coeff(c) * dim_c + scheme.subset_label(c, comp), amp});
  }
  return qss::reduced_entropy(entries) / std::log(static_cast<double>(scheme.params().q));
}

std::vector<int> mask_to_subset(std::uint64_t mask, std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (mask & (1ULL << i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::uint64_t subset_to_mask(const std::vector<int>& subset) {
  std::uint64_t mask = 0;
  for (int i : subset) mask |= 1ULL << i;
  return mask;
}

std::vector<AccessReport> access_structure(const qss::Scheme& scheme) {
  const std::uint64_t n = scheme.params().n;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  std::vector<AccessReport> out;
  for (std::uint64_t mask : masks) {
    AccessReport rep;
    rep.subset = mask_to_subset(mask, n);
    GramWitness gw;
    if (is_qualified(scheme, rep.subset, &gw)) {
      rep.cls = AccessClass::kQualified;
    } else {
      rep.gram_witness = gw;
      VanishingWitness vw;
      if (is_vanishing(scheme, rep.subset, &vw)) {
        rep.cls = AccessClass::kForbidden;
      } else {
        rep.cls = AccessClass::kIntermediate;
        rep.vanishing_witness = vw;
      }
    }
    rep.holevo_dits = basis_holevo_dits(scheme, rep.subset);
    rep.entropy_dits = mixed_entropy_dits(scheme, rep.subset);
    out.push_back(std::move(rep));
  }
  return out;
}

bool is_significant(const std::vector<AccessReport>& access, std::uint64_t n,
                    const std::vector<int>& X) {
  std::map<std::uint64_t, AccessClass> by_mask;
  for (const auto& rep : access) by_mask[subset_to_mask(rep.subset)] = rep.cls;
  by_mask[0] = AccessClass::kForbidden;  // empty set, by convention

  const std::uint64_t xm = subset_to_mask(X);
  for (const auto& [ym, cls] : by_mask) {
    if (cls != AccessClass::kForbidden) continue;
    std::uint64_t um = xm | ym;
    auto it = by_mask.find(um);
    if (it != by_mask.end() && it->second == AccessClass::kQualified) return true;
  }
  return false;
}

}  // namespace rqss::access
