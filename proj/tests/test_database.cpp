#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "galois/database.hpp"
#include "galois/suites.hpp"

using namespace galois;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("galois-test-" + std::to_string(::getpid())) / name;
  fs::create_directories(p.parent_path());
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Brute-force reducibility of a cubic: a rational root p/q with p | a0, q | a3.
bool cubic_has_rational_root(const std::vector<long long>& a) {
  auto divisors = [](long long v) {
    std::vector<long long> d;
    for (long long i = 1; i <= std::abs(v); ++i)
      if (v % i == 0) d.push_back(i);
    return d;
  };
  for (long long p : divisors(a[0]))
    for (long long q : divisors(a[3]))
      for (long long s : {1LL, -1LL}) {
        // q^3 f(s p / q) = a3 (sp)^3 + a2 (sp)^2 q + a1 sp q^2 + a0 q^3
        const long long x = s * p;
        if (a[3] * x * x * x + a[2] * x * x * q + a[1] * x * q * q + a[0] * q * q * q == 0) return true;
      }
  return false;
}

PolyRecord record(std::initializer_list<long long> key) {
  return std::get<PolyRecord>(build_record(canonicalize(key)));
}

}  // namespace

TEST(Enumeration, SmallestCubicCount) {
  long long n = 0;
  for_each_candidate(3, 1, [&](const PolyKey&) { ++n; });
  EXPECT_EQ(n, 18);
}

TEST(Enumeration, MatchesBruteForce) {
  for (int n : {3, 4})
    for (int h : {1, 2, 3}) {
      std::vector<PolyKey> got;
      for_each_candidate(n, h, [&](const PolyKey& k) { got.push_back(k); });
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
      EXPECT_EQ(std::set<PolyKey>(got.begin(), got.end()).size(), got.size());
      long long expect = 0, points = 0;
      std::vector<long long> a(static_cast<std::size_t>(n) + 1, -h);
      while (true) {
        long long g = 0;
        for (long long v : a) g = std::gcd(g, v);
        if (g == 1) {
          ++points;
          if (a.front() != 0 && a.back() > 0) ++expect;
        }
        std::size_t i = 0;
        while (i < a.size() && a[i] == h) a[i++] = -h;
        if (i == a.size()) break;
        ++a[i];
      }
      EXPECT_EQ(static_cast<long long>(got.size()), expect) << n << " " << h;
      EXPECT_LE(make_integer(expect), key_count_bound(n, h));
      EXPECT_EQ(count_projective_points(n, h), make_integer(points / 2));
    }
}

TEST(Enumeration, MonotoneInHeight) {
  std::set<PolyKey> previous;
  for (int h = 1; h <= 3; ++h) {
    std::set<PolyKey> keys;
    enumerate_keys(3, h, [&](const PolyKey& k) { keys.insert(k); });
    EXPECT_TRUE(std::includes(keys.begin(), keys.end(), previous.begin(), previous.end()));
    for (const auto& k : keys) EXPECT_LE(k.height(), h);
    previous = std::move(keys);
  }
}

TEST(Enumeration, MonicKeys) {
  long long n = 0;
  for_each_candidate(
      4, 2,
      [&](const PolyKey& k) {
        EXPECT_EQ(k[4], 1);
        ++n;
      },
      {}, true);
  EXPECT_EQ(n, 4 * 125);  // a0 in +-1,+-2; every monic tuple is primitive
}

TEST(Records, SliceRows) {
  auto r = record({1, -2, -2, -2, 1});
  EXPECT_EQ(r.group->name, "D4");
  EXPECT_EQ(r.height, 2);
  ASSERT_TRUE(r.j.has_value());
  auto c3 = record({1, 3, -4, 1});
  EXPECT_EQ(c3.group->name, "C3");
  EXPECT_EQ(c3.delta, 49);
  EXPECT_TRUE(c3.delta_is_square());
  EXPECT_EQ(c3.real_roots, 3);
  auto s5 = record({-1, -1, 0, 0, 0, 1});
  EXPECT_EQ(s5.real_roots, 1);
  EXPECT_EQ(s5.nonreal_roots(), 4);
  for (const auto& t : s5.frobenius) EXPECT_TRUE(t.has_value());  // disc 2869 = 19 * 151
}

TEST(Records, Skips) {
  EXPECT_EQ(std::get<Skip>(build_record(canonicalize({-1, 0, 0, 1}))).reason, "reducible");
  EXPECT_EQ(std::get<Skip>(build_record(canonicalize({1, -1, -1, 1}))).reason, "singular");
  EXPECT_EQ(std::get<Skip>(build_record(canonicalize({1, 0, 2, 0, 1}))).reason, "singular");
}

TEST(Records, JsonRoundTrip) {
  for (const auto& k : suites::c5_table_keys()) {
    auto r = std::get<PolyRecord>(build_record(canonicalize(std::span<const long long>(k))));
    const std::string line = record_to_json(r);
    auto back = record_from_json(line);
    EXPECT_EQ(record_to_json(back), line);
    EXPECT_EQ(back.key, r.key);
    EXPECT_EQ(back.group, r.group);
    EXPECT_EQ(back.invariants.values, r.invariants.values);
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto f = suites::detail::random_irreducible(rng, 3 + i % 3, 1000000);
    std::vector<long long> key;
    for (const auto& c : f.coeffs()) key.push_back(c.get_si());
    auto r = std::get<PolyRecord>(build_record(canonicalize(std::span<const long long>(key))));
    EXPECT_EQ(record_to_json(record_from_json(record_to_json(r))), record_to_json(r));
  }
}

TEST(Summary, TableFourClasses) {
  std::vector<PolyRecord> rs;
  for (const auto& k : suites::c5_table_keys())
    rs.push_back(std::get<PolyRecord>(build_record(canonicalize(std::span<const long long>(k)))));
  auto s = summarize(rs);
  EXPECT_EQ(s.group_count("C5"), 20);
  auto j = s.to_json();
  EXPECT_EQ(j["classes"]["C5"]["distinct"], 3);
  EXPECT_EQ(j["classes"]["C5"]["multiplicities"], (std::vector<long long>{12, 4, 4}));
}

TEST(Summary, SingleRecordAndMixedDegrees) {
  auto s = summarize({record({1, 3, -4, 1})});
  EXPECT_EQ(s.records, 1);
  EXPECT_EQ(s.classes_non_generic.size(), 1u);
  EXPECT_THROW(summarize({record({1, 3, -4, 1}), record({1, 1, 0, 0, 1})}), Error);
}

TEST(Generate, CubicIrreducibleCountMatchesRationalRootTest) {
  auto path = scratch("deg3_h3.jsonl");
  auto s = generate_database(3, 3, path);
  long long expect = 0;
  enumerate_keys(3, 3, [&](const PolyKey& k) {
    if (!cubic_has_rational_root(k.values())) ++expect;
  });
  EXPECT_EQ(s.records, expect);
  EXPECT_EQ(static_cast<long long>(read_records(path).size()), expect);
  auto again = summarize(read_records(path));
  EXPECT_EQ(again.to_json()["groups"], s.to_json()["groups"]);
}

TEST(Generate, WorkerCountDoesNotChangeOutput) {
  auto one = scratch("w1.jsonl"), three = scratch("w3.jsonl");
  GenerateOptions o;
  o.workers = 1;
  generate_database(4, 2, one, o);
  o.workers = 3;
  generate_database(4, 2, three, o);
  EXPECT_EQ(slurp(one), slurp(three));
  EXPECT_FALSE(slurp(one).empty());
}

TEST(Generate, MonicRecordsAreMonic) {
  auto path = scratch("monic.jsonl");
  GenerateOptions o;
  o.monic = true;
  auto s = generate_database(5, 1, path, o);
  EXPECT_TRUE(s.monic);
  for (const auto& r : read_records(path)) EXPECT_EQ(r.key[5], 1);
  EXPECT_EQ(database_stem(5, 1, true), "deg5_h1_monic");
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate_database(6, 2, scratch("x.jsonl")), Error);
  EXPECT_THROW(read_records(scratch("missing.jsonl")), Error);
}
