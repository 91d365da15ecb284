#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "galois/classify.hpp"
#include "galois/error.hpp"
#include "galois/groups.hpp"
#include "galois/integer.hpp"
#include "galois/invariants.hpp"
#include "galois/modp.hpp"
#include "galois/polynomial.hpp"

namespace galois {

// ---------------------------------------------------------------- enumeration

/// Upper bound on the number of keys: a_n in 1..h, a_0 in +-1..+-h and
/// n - 1 unrestricted middle coefficients.
inline Integer key_count_bound(int n, int h) {
  return 2 * Integer(h) * Integer(h) * pow(Integer(2 * h + 1), static_cast<unsigned long>(n - 1));
}

/// Primitive points of P^n with max |a_i| <= h (no other condition):
/// (sum_d mu(d) ((2 floor(h/d) + 1)^(n+1) - 1)) / 2.
inline Integer count_projective_points(int n, int h) {
  if (n < 1 || h < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and h >= 1");
  std::vector<int> mu(static_cast<std::size_t>(h) + 1, 1);
  std::vector<bool> composite(static_cast<std::size_t>(h) + 1, false);
  for (int p = 2; p <= h; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (int m = p; m <= h; m += p) {
      if (m > p) composite[static_cast<std::size_t>(m)] = true;
      mu[static_cast<std::size_t>(m)] = -mu[static_cast<std::size_t>(m)];
    }
    for (long long m = 1LL * p * p; m <= h; m += 1LL * p * p) mu[static_cast<std::size_t>(m)] = 0;
  }
  Integer total = 0;
  for (int d = 1; d <= h; ++d) {
    if (mu[static_cast<std::size_t>(d)] == 0) continue;
    Integer term = pow(Integer(2 * (h / d) + 1), static_cast<unsigned long>(n + 1)) - 1;
    total += mu[static_cast<std::size_t>(d)] * term;
  }
  return total / 2;
}

/// Visits every primitive tuple with max |a_i| <= h, a0 an != 0 and an > 0
/// (an = 1 when monic), in lexicographic order, restricted to the given a0
/// values (all if empty).
inline void for_each_candidate(int n, int h, const std::function<void(const PolyKey&)>& visit,
                               const std::vector<long long>& a0_values = {}, bool monic = false) {
  const long long top = monic ? 1 : h;
  if (n < 1 || h < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and h >= 1");
  std::vector<long long> firsts = a0_values;
  if (firsts.empty())
    for (long long v = -h; v <= h; ++v)
      if (v != 0) firsts.push_back(v);
  std::vector<long long> a(static_cast<std::size_t>(n) + 1);
  for (long long first : firsts) {
    a[0] = first;
    for (int i = 1; i < n; ++i) a[static_cast<std::size_t>(i)] = -h;
    a[static_cast<std::size_t>(n)] = 1;
    while (true) {
      long long g = 0;
      for (long long v : a) g = std::gcd(g, v);
      if (g == 1) visit(PolyKey::trusted(a));
      int i = n;
      while (i >= 1) {
        auto& slot = a[static_cast<std::size_t>(i)];
        if (slot < (i == n ? top : h)) {
          ++slot;
          break;
        }
        slot = (i == n) ? 1 : -h;
        --i;
      }
      if (i < 1) break;
    }
  }
}

/// Canonical keys of degree n and height <= h with nonzero discriminant,
/// in lexicographic order.
inline void enumerate_keys(int n, int h, const std::function<void(const PolyKey&)>& visit, bool monic = false) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "enumeration needs n >= 3");
  for_each_candidate(
      n, h,
      [&](const PolyKey& k) {
        if (discriminant(poly_from_key(k)) != 0) visit(k);
      },
      {}, monic);
}

// -------------------------------------------------------------------- records

inline constexpr std::array<std::uint32_t, 4> kRecordPrimes{2, 3, 5, 7};

struct PolyRecord {
  PolyKey key;
  long long height = 0;
  InvariantVector invariants;
  Integer delta;
  double weighted_height = 0;
  Signature signature;                                 // good primes among 2, 3, 5, 7
  std::array<std::optional<CycleType>, 4> frobenius;  // per prime; empty when bad
  const GroupId* group = nullptr;
  std::string certainty = "deterministic";
  int real_roots = 0;
  bool resolvent_rational_root = false;
  std::optional<Rational> j;  // quartics

  int degree() const { return key.degree(); }
  int nonreal_roots() const { return degree() - real_roots; }
  bool delta_is_square() const { return is_square(delta); }
};

struct Skip {
  std::string reason;  // "singular" or "reducible"
};

using BuildResult = std::variant<PolyRecord, Skip>;

inline BuildResult build_record(const PolyKey& key, const ClassifyOptions& options = {}) {
  IntPolynomial f = poly_from_key(key);
  ClassifyOptions opts = options;
  opts.check_irreducible = false;
  PolynomialFacts facts(f, opts);
  if (facts.discriminant() == 0) return Skip{"singular"};
  if (!is_irreducible(f)) return Skip{"reducible"};

  PolyRecord r;
  r.key = key;
  r.height = key.height();
  r.delta = facts.discriminant();
  Verdict v = classify(facts);
  r.group = v.group;
  r.certainty = v.certainty();
  r.real_roots = facts.real_roots().real_count;
  r.signature.degree = f.degree();
  for (std::size_t i = 0; i < kRecordPrimes.size(); ++i) {
    if (is_bad_prime(f, kRecordPrimes[i])) continue;
    r.frobenius[i] = degree_pattern_mod_p(f, kRecordPrimes[i]);
    r.signature.types.insert(*r.frobenius[i]);
  }
  switch (f.degree()) {
    case 3:
      r.invariants = cubic_invariants(f);
      break;
    case 4: {
      auto q = quartic_invariants(f);
      r.invariants = q.vector();
      r.j = q.j;
      r.resolvent_rational_root = !quartic_resolvent_roots(f).empty();
      break;
    }
    case 5:
      r.invariants = quintic_invariants_from_resolvent(facts.resolvent()).vector();
      r.resolvent_rational_root = facts.resolvent_has_rational_root();
      break;
    default:
      throw Error(ErrorCode::OutOfRange, "records cover degrees 3 to 5");
  }
  r.weighted_height = weighted_height(r.invariants);
  return r;
}

// ----------------------------------------------------------------------- JSON

namespace detail {

inline void append_integer(std::string& out, const Integer& v) {
  // Values beyond 64 bits are quoted so readers never round them.
  if (fits_int64(v))
    out += v.get_str();
  else
    out += "\"" + v.get_str() + "\"";
}

inline void append_parts(std::string& out, const CycleType& t) {
  out += "[";
  for (std::size_t i = 0; i < t.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t.parts()[i]);
  }
  out += "]";
}

inline Integer integer_from_json(const nlohmann::json& v) {
  if (v.is_string()) return Integer(v.get<std::string>());
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return make_integer(v.get<long long>());
  throw Error(ErrorCode::IoError, "expected an integer");
}

inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace detail

/// One JSON object per line; field order is fixed.
inline std::string record_to_json(const PolyRecord& r) {
  std::string s = "{\"degree\":" + std::to_string(r.degree()) + ",\"key\":[";
  for (std::size_t i = 0; i < r.key.values().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.key.values()[i]);
  }
  s += "],\"height\":" + std::to_string(r.height) + ",\"invariants\":[";
  for (std::size_t i = 0; i < r.invariants.values.size(); ++i) {
    if (i) s += ",";
    detail::append_integer(s, r.invariants.values[i]);
  }
  s += "],\"delta\":\"" + r.delta.get_str() + "\",\"weighted_height\":";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.weighted_height);
  s += buf;
  s += ",\"signature\":[";
  bool first = true;
  for (const auto& t : r.signature.types) {
    if (!first) s += ",";
    first = false;
    detail::append_parts(s, t);
  }
  s += "],\"group_gap_id\":[" + std::to_string(r.group->n) + "," + std::to_string(r.group->k) + "],\"group_name\":\"" +
       r.group->name + "\",\"extras\":{\"label\":\"" + r.group->label + "\",\"certainty\":\"" + r.certainty +
       "\",\"real_roots\":" + std::to_string(r.real_roots) + ",\"frobenius\":[";
  for (std::size_t i = 0; i < kRecordPrimes.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(kRecordPrimes[i]) + ",";
    if (r.frobenius[i])
      detail::append_parts(s, *r.frobenius[i]);
    else
      s += "null";
    s += "]";
  }
  s += "]";
  if (r.degree() == 3) s += ",\"two_delta\":\"" + Integer(2 * r.delta).get_str() + "\"";
  if (r.degree() >= 4)
    s += std::string(",\"resolvent_rational_root\":") + (r.resolvent_rational_root ? "true" : "false");
  if (r.j) s += ",\"j\":\"" + to_string(*r.j) + "\"";
  s += "}}";
  return s;
}

inline PolyRecord record_from_json(const std::string& line) {
  nlohmann::json o;
  try {
    o = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("malformed record: ") + e.what());
  }
  try {
    PolyRecord r;
    const int n = o.at("degree").get<int>();
    r.key = PolyKey::trusted(o.at("key").get<std::vector<long long>>());
    if (r.key.degree() != n) throw Error(ErrorCode::IoError, "key length does not match degree");
    r.height = o.at("height").get<long long>();
    r.invariants.degree = n;
    for (const auto& v : o.at("invariants")) r.invariants.values.push_back(detail::integer_from_json(v));
    r.invariants.weights = n == 3 ? std::vector<int>{4} : n == 4 ? std::vector<int>{3, 4} : std::vector<int>{4, 8, 12};
    r.delta = Integer(o.at("delta").get<std::string>());
    r.weighted_height = o.at("weighted_height").get<double>();
    r.signature.degree = n;
    for (const auto& t : o.at("signature")) r.signature.types.insert(CycleType(t.get<std::vector<int>>()));
    const auto gap = o.at("group_gap_id").get<std::vector<int>>();
    if (gap.size() != 2) throw Error(ErrorCode::IoError, "group_gap_id needs two entries");
    r.group = &group_by_index(gap[0], gap[1]);
    const auto& ex = o.at("extras");
    r.certainty = ex.value("certainty", std::string("deterministic"));
    r.real_roots = ex.at("real_roots").get<int>();
    if (ex.contains("frobenius")) {
      const auto& fr = ex.at("frobenius");
      for (std::size_t i = 0; i < fr.size() && i < kRecordPrimes.size(); ++i)
        if (!fr[i][1].is_null()) r.frobenius[i] = CycleType(fr[i][1].get<std::vector<int>>());
    }
    r.resolvent_rational_root = ex.value("resolvent_rational_root", false);
    if (ex.contains("j")) r.j = detail::rational_from_string(ex.at("j").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("malformed record: ") + e.what());
  }
}

inline std::vector<PolyRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<PolyRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(record_from_json(line));
  return out;
}

// -------------------------------------------------------------------- summary

struct RatioWitness {
  double value = 0;
  std::optional<PolyKey> key;
};

struct CensusSummary {
  int degree = 0;
  int height = 0;
  bool monic = false;
  // Enumeration counts (absent when summarizing an existing file).
  std::optional<Integer> projective_points;
  std::optional<long long> candidate_keys;     // primitive, a0 an != 0
  std::optional<long long> nonsingular_keys;   // and disc != 0
  long long records = 0;                       // irreducible
  long long sampled_verdicts = 0;
  std::map<std::string, long long> groups;                        // by name
  std::map<std::string, std::map<long long, long long>> by_height;  // exact height
  std::set<std::string> classes_non_generic;
  RatioWitness ratio_min, ratio_max;
  // Invariant classes of the non-generic groups: group -> class -> count.
  std::map<std::string, std::map<std::string, long long>> class_sizes;

  /// Class key: cubic 2 disc, quartic j, quintic (J4, J8, J12).
  static std::string class_key(const PolyRecord& r) {
    if (r.degree() == 4 && r.j) return to_string(*r.j);
    std::string s;
    for (std::size_t i = 0; i < r.invariants.values.size(); ++i) {
      if (i) s += ",";
      s += r.invariants.values[i].get_str();
    }
    return s;
  }

  void add(const PolyRecord& r) {
    if (degree == 0) degree = r.degree();
    if (r.degree() != degree) throw Error(ErrorCode::MixedDegrees, "records of different degrees");
    ++records;
    if (r.certainty != "deterministic") ++sampled_verdicts;
    height = std::max<int>(height, static_cast<int>(r.height));
    ++groups[r.group->name];
    ++by_height[r.group->name][r.height];
    if (r.group->order != detail::factorial(r.degree())) {
      std::string ck = class_key(r);
      classes_non_generic.insert(ck);
      ++class_sizes[r.group->name][ck];
    }
    double ratio = r.weighted_height / static_cast<double>(r.height);
    if (!ratio_min.key || ratio < ratio_min.value) ratio_min = {ratio, r.key};
    if (!ratio_max.key || ratio > ratio_max.value) ratio_max = {ratio, r.key};
  }

  long long group_count(const std::string& name) const {
    auto it = groups.find(name);
    return it == groups.end() ? 0 : it->second;
  }

  long long non_generic_count() const {
    long long total = 0;
    for (const auto& [name, count] : groups)
      if (name != "S" + std::to_string(degree)) total += count;
    return total;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json o;
    o["degree"] = degree;
    o["height"] = height;
    o["monic"] = monic;
    nlohmann::ordered_json counts;
    if (projective_points) counts["projective_points"] = projective_points->get_str();
    if (candidate_keys) counts["candidate_keys"] = *candidate_keys;
    if (nonsingular_keys) counts["nonsingular_keys"] = *nonsingular_keys;
    counts["irreducible"] = records;
    counts["non_generic"] = non_generic_count();
    counts["sampled_verdicts"] = sampled_verdicts;
    o["counts"] = counts;
    nlohmann::ordered_json g = nlohmann::ordered_json::object();
    for (const auto& grp : group_catalog(degree)) g[grp.name] = group_count(grp.name);
    o["groups"] = g;
    nlohmann::ordered_json cum = nlohmann::ordered_json::object();
    for (const auto& grp : group_catalog(degree)) {
      std::vector<long long> row;
      long long acc = 0;
      auto it = by_height.find(grp.name);
      for (int h = 1; h <= height; ++h) {
        if (it != by_height.end()) {
          auto hit = it->second.find(h);
          if (hit != it->second.end()) acc += hit->second;
        }
        row.push_back(acc);
      }
      cum[grp.name] = row;
    }
    o["cumulative_by_height"] = cum;
    nlohmann::ordered_json classes;
    classes["non_generic"] = classes_non_generic.size();
    for (const auto& [name, sizes] : class_sizes) {
      std::vector<long long> mult;
      for (const auto& [key, count] : sizes) mult.push_back(count);
      std::sort(mult.rbegin(), mult.rend());
      classes[name] = {{"distinct", sizes.size()}, {"multiplicities", mult}};
    }
    o["classes"] = classes;
    auto witness = [](const RatioWitness& w) {
      nlohmann::ordered_json j;
      j["value"] = w.value;
      j["key"] = w.key ? w.key->values() : std::vector<long long>{};
      return j;
    };
    o["ratio_min"] = witness(ratio_min);
    o["ratio_max"] = witness(ratio_max);
    return o;
  }
};

inline CensusSummary summarize(const std::vector<PolyRecord>& records) {
  CensusSummary s;
  for (const auto& r : records) s.add(r);
  return s;
}

// ----------------------------------------------------------------- generation

struct GenerateOptions {
  int workers = 1;
  bool monic = false;
  ClassifyOptions classify;
};

inline std::string database_stem(int degree, int height, bool monic = false) {
  return "deg" + std::to_string(degree) + "_h" + std::to_string(height) + (monic ? "_monic" : "");
}

/// Streams all irreducible records of the given degree and height bound to
/// `records_path` in key order and returns the census. Work is split by a0
/// across workers and written back in order, so output is identical for
/// any worker count.
inline CensusSummary generate_database(int degree, int height, const std::filesystem::path& records_path,
                                       const GenerateOptions& options = {}) {
  if (degree < 3 || degree > 5) throw Error(ErrorCode::OutOfRange, "databases cover degrees 3 to 5");
  if (height < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
  std::ofstream out(records_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + records_path.string());

  std::vector<long long> slices;
  for (long long v = -height; v <= height; ++v)
    if (v != 0) slices.push_back(v);

  struct SliceResult {
    std::string text;
    std::vector<PolyRecord> records;
    long long candidates = 0, nonsingular = 0;
    std::exception_ptr error;
  };
  auto run_slice = [&](long long a0) {
    SliceResult res;
    try {
      for_each_candidate(degree, height, [&](const PolyKey& key) {
        ++res.candidates;
        auto built = build_record(key, options.classify);
        if (auto* skip = std::get_if<Skip>(&built)) {
          if (skip->reason != "singular") ++res.nonsingular;
          return;
        }
        ++res.nonsingular;
        auto& rec = std::get<PolyRecord>(built);
        res.text += record_to_json(rec);
        res.text += '\n';
        res.records.push_back(std::move(rec));
      }, {a0}, options.monic);
    } catch (...) {
      res.error = std::current_exception();
    }
    return res;
  };

  CensusSummary summary;
  summary.degree = degree;
  long long candidates = 0, nonsingular = 0;
  auto consume = [&](SliceResult& res) {
    if (res.error) std::rethrow_exception(res.error);
    out << res.text;
    candidates += res.candidates;
    nonsingular += res.nonsingular;
    for (const auto& r : res.records) summary.add(r);
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    for (long long a0 : slices) {
      SliceResult res = run_slice(a0);
      consume(res);
    }
  } else {
    std::vector<std::optional<SliceResult>> results(slices.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        while (!stop) {
          std::size_t i = next.fetch_add(1);
          if (i >= slices.size()) return;
          SliceResult res = run_slice(slices[i]);
          {
            std::lock_guard<std::mutex> lock(mu);
            results[i] = std::move(res);
          }
          cv.notify_all();
        }
      });
    std::exception_ptr failure;
    for (std::size_t i = 0; i < slices.size() && !failure; ++i) {
      SliceResult res;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return results[i].has_value(); });
        res = std::move(*results[i]);
        results[i].reset();
      }
      try {
        consume(res);
      } catch (...) {
        failure = std::current_exception();
        stop = true;
      }
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + records_path.string());

  summary.degree = degree;
  summary.height = height;
  summary.monic = options.monic;
  if (!options.monic) summary.projective_points = count_projective_points(degree, height);
  summary.candidate_keys = candidates;
  summary.nonsingular_keys = nonsingular;
  return summary;
}

inline void write_summary(const CensusSummary& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << s.to_json().dump(2) << "\n";
}

}  // namespace galois
