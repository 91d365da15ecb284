#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/modp.hpp"

namespace galois {

/// Permutation of {0..n-1} as an image table.
using Permutation = std::vector<std::uint8_t>;

inline Permutation compose(const Permutation& a, const Permutation& b) {  // a after b
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
  return r;
}

inline CycleType cycle_type(const Permutation& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

/// Builds a permutation from 1-based cycles, e.g. {{1,2},{3,4}}.
inline Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k)
      p[static_cast<std::size_t>(c[k] - 1)] = static_cast<std::uint8_t>(c[(k + 1) % c.size()] - 1);
  return p;
}

inline std::set<Permutation> closure(int n, const std::vector<Permutation>& gens) {
  Permutation id = from_cycles(n, {});
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = compose(s, g);
        if (group.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return group;
}

struct GroupId {
  int n = 0;
  int k = 0;  // transitive group number [n, k]
  std::string name;
  long long order = 0;
  bool in_alternating = false;
  Signature signature;       // populated for n <= 5
  std::vector<int> parents;  // k of minimal overgroups, n <= 5
  std::string label;         // database label

  std::string gap_id() const { return "[" + std::to_string(n) + "," + std::to_string(k) + "]"; }
  friend bool operator==(const GroupId& a, const GroupId& b) { return a.n == b.n && a.k == b.k; }
};

namespace detail {

struct GroupSpec {
  const char* name;
  const char* label;
  std::vector<std::vector<std::vector<int>>> generators;
};

inline std::vector<GroupId> build_small_catalog(int n, const std::vector<GroupSpec>& specs) {
  std::vector<GroupId> out;
  std::vector<std::set<Permutation>> elements;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::vector<Permutation> gens;
    for (const auto& g : specs[i].generators) gens.push_back(from_cycles(n, g));
    auto els = closure(n, gens);
    GroupId id;
    id.n = n;
    id.k = static_cast<int>(i) + 1;
    id.name = specs[i].name;
    id.label = specs[i].label;
    id.order = static_cast<long long>(els.size());
    id.signature.degree = n;
    id.in_alternating = true;
    for (const auto& g : els) {
      CycleType t = cycle_type(g);
      id.in_alternating = id.in_alternating && t.is_even();
      id.signature.types.insert(t);
    }
    out.push_back(id);
    elements.push_back(std::move(els));
  }
  // Containment up to conjugacy, then keep only covering pairs.
  auto sym = closure(n, {from_cycles(n, {{1, 2}}), from_cycles(n, {[n] {
                                                               std::vector<int> c;
                                                               for (int i = 1; i <= n; ++i) c.push_back(i);
                                                               return c;
                                                             }()})});
  const std::size_t m = out.size();
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || out[b].order % out[a].order != 0 || out[b].order == out[a].order) continue;
      for (const auto& s : sym) {
        Permutation si = inverse(s);
        bool inside = true;
        for (const auto& g : elements[a])
          if (!elements[b].count(compose(s, compose(g, si)))) {
            inside = false;
            break;
          }
        if (inside) {
          below[a][b] = true;
          break;
        }
      }
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!below[a][b]) continue;
      bool covering = true;
      for (std::size_t c = 0; c < m; ++c)
        if (below[a][c] && below[c][b]) covering = false;
      if (covering) out[a].parents.push_back(out[b].k);
    }
  return out;
}

struct NamedGroup {
  const char* name;
  long long order;
  bool in_alternating;
};

inline std::vector<GroupId> named_catalog(int n, const std::vector<NamedGroup>& groups) {
  std::vector<GroupId> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    GroupId id;
    id.n = n;
    id.k = static_cast<int>(i) + 1;
    id.name = groups[i].name;
    id.label = groups[i].name;
    id.order = groups[i].order;
    id.in_alternating = groups[i].in_alternating;
    id.signature.degree = n;
    out.push_back(id);
  }
  return out;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// p:k (affine maps x -> a x + b with a of order k) is even iff the
/// multiplier, a product of (p-1)/k cycles of length k, is even.
inline bool frobenius_even(int p, int k) { return ((k - 1) * ((p - 1) / k)) % 2 == 0; }

}  // namespace detail

/// Number of transitive subgroups of S_n up to conjugacy, n <= 47.
inline long long transitive_group_count(int n) {
  static const std::map<int, long long> counts{
      {1, 1},       {2, 1},      {3, 2},       {4, 5},      {5, 5},      {6, 16},       {7, 7},
      {8, 50},      {9, 34},     {10, 45},     {11, 8},     {12, 301},   {13, 9},       {14, 63},
      {15, 104},    {16, 1954},  {17, 10},     {18, 983},   {19, 8},     {20, 1117},    {21, 164},
      {22, 59},     {23, 7},     {24, 25000},  {25, 211},   {26, 96},    {27, 2392},    {28, 1854},
      {29, 8},      {30, 5712},  {31, 12},     {32, 2801324}, {33, 162}, {34, 115},     {35, 407},
      {36, 121279}, {37, 11},    {38, 76},     {39, 306},   {40, 315842}, {41, 10},     {42, 9491},
      {43, 10},     {44, 2113},  {45, 10923},  {46, 56},    {47, 6}};
  auto it = counts.find(n);
  if (it == counts.end()) throw Error(ErrorCode::OutOfRange, "transitive group counts cover 1 <= n <= 47");
  return it->second;
}

/// Transitive subgroups of S_n in GAP order. Full data (signature, lattice)
/// for n = 3, 4, 5; names, orders and parity for the primes 7..19.
inline const std::vector<GroupId>& group_catalog(int n) {
  using detail::NamedGroup;
  static const std::map<int, std::vector<GroupId>> catalog = [] {
    std::map<int, std::vector<GroupId>> c;
    c[3] = detail::build_small_catalog(3, {{"C3", "A3", {{{1, 2, 3}}}},  //
                                           {"S3", "S3", {{{1, 2}}, {{1, 2, 3}}}}});
    c[4] = detail::build_small_catalog(4, {{"C4", "C(4)", {{{1, 2, 3, 4}}}},
                                           {"V4", "E(4)", {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}},
                                           {"D4", "D(4)", {{{1, 2, 3, 4}}, {{1, 3}}}},
                                           {"A4", "A4", {{{1, 2, 3}}, {{1, 2}, {3, 4}}}},
                                           {"S4", "S4", {{{1, 2}}, {{1, 2, 3, 4}}}}});
    c[5] = detail::build_small_catalog(5, {{"C5", "G_1", {{{1, 2, 3, 4, 5}}}},
                                           {"D5", "G_2", {{{1, 2, 3, 4, 5}}, {{2, 5}, {3, 4}}}},
                                           {"F5", "G_3", {{{1, 2, 3, 4, 5}}, {{2, 4, 5, 3}}}},
                                           {"A5", "G_4", {{{1, 2, 3}}, {{1, 2, 3, 4, 5}}}},
                                           {"S5", "G_5", {{{1, 2}}, {{1, 2, 3, 4, 5}}}}});
    c[7] = detail::named_catalog(7, {{"C7", 7, true},
                                     {"D7", 14, false},
                                     {"F21", 21, detail::frobenius_even(7, 3)},
                                     {"F42", 42, detail::frobenius_even(7, 6)},
                                     {"L(7)", 168, true},
                                     {"A7", detail::factorial(7) / 2, true},
                                     {"S7", detail::factorial(7), false}});
    c[11] = detail::named_catalog(11, {{"C11", 11, true},
                                       {"D11", 22, false},
                                       {"F55", 55, detail::frobenius_even(11, 5)},
                                       {"F110", 110, detail::frobenius_even(11, 10)},
                                       {"L(11)", 660, true},
                                       {"M11", 7920, true},
                                       {"A11", detail::factorial(11) / 2, true},
                                       {"S11", detail::factorial(11), false}});
    c[13] = detail::named_catalog(13, {{"C13", 13, true},
                                       {"D13", 26, true},
                                       {"F39", 39, detail::frobenius_even(13, 3)},
                                       {"F52", 52, detail::frobenius_even(13, 4)},
                                       {"F78", 78, detail::frobenius_even(13, 6)},
                                       {"F156", 156, detail::frobenius_even(13, 12)},
                                       {"L(13)", 5616, true},
                                       {"A13", detail::factorial(13) / 2, true},
                                       {"S13", detail::factorial(13), false}});
    c[17] = detail::named_catalog(17, {{"C17", 17, true},
                                       {"D17", 34, true},
                                       {"F68", 68, detail::frobenius_even(17, 4)},
                                       {"F136", 136, detail::frobenius_even(17, 8)},
                                       {"F272", 272, detail::frobenius_even(17, 16)},
                                       {"L(17)", 4080, true},
                                       {"L(17):2", 8160, true},
                                       {"L(17):4", 16320, true},
                                       {"A17", detail::factorial(17) / 2, true},
                                       {"S17", detail::factorial(17), false}});
    c[19] = detail::named_catalog(19, {{"C19", 19, true},
                                       {"D19", 38, false},
                                       {"F57", 57, detail::frobenius_even(19, 3)},
                                       {"F114", 114, detail::frobenius_even(19, 6)},
                                       {"F171", 171, detail::frobenius_even(19, 9)},
                                       {"F342", 342, detail::frobenius_even(19, 18)},
                                       {"A19", detail::factorial(19) / 2, true},
                                       {"S19", detail::factorial(19), false}});
    return c;
  }();
  auto it = catalog.find(n);
  if (it == catalog.end())
    throw Error(ErrorCode::OutOfRange, "group names are tabulated for n = 3, 4, 5, 7, 11, 13, 17, 19");
  return it->second;
}

inline const GroupId& group_by_name(int n, const std::string& name) {
  for (const auto& g : group_catalog(n))
    if (g.name == name) return g;
  throw Error(ErrorCode::InvalidArgument, "no group " + name + " in degree " + std::to_string(n));
}

inline const GroupId& group_by_index(int n, int k) {
  const auto& cat = group_catalog(n);
  if (k < 1 || k > static_cast<int>(cat.size())) throw Error(ErrorCode::OutOfRange, "group index out of range");
  return cat[static_cast<std::size_t>(k - 1)];
}

/// Catalog groups whose signature contains every observed cycle type.
inline std::vector<GroupId> candidates_from_signature(int n, const Signature& observed) {
  if (n < 3 || n > 5) throw Error(ErrorCode::OutOfRange, "signature candidates need n in {3, 4, 5}");
  if (observed.types.empty()) throw Error(ErrorCode::InvalidArgument, "observed signature is empty");
  for (const auto& t : observed.types)
    if (t.total() != n) throw Error(ErrorCode::Inconsistent, "cycle type " + t.to_string() + " has wrong degree");
  std::vector<GroupId> out;
  for (const auto& g : group_catalog(n))
    if (g.signature.includes(observed)) out.push_back(g);
  if (out.empty()) throw Error(ErrorCode::Inconsistent, "no transitive group admits the observed cycle types");
  return out;
}

}  // namespace galois
