#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "galois/bigfloat.hpp"
#include "galois/classify.hpp"
#include "galois/database.hpp"
#include "galois/invariants.hpp"
#include "galois/nsn.hpp"

// Named verification suites shared by `galois verify` and the acceptance
// binary. Each reproduces one published count or checks one property.
namespace galois::suites {

struct Context {
  std::filesystem::path data_dir = "galois-data";
  int workers = 1;
  bool reuse_files = true;  // pick up databases already present in data_dir
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Suite {
  std::string name;
  int criterion = 0;
  bool long_running = false;
  std::string description;
  std::function<Outcome(Context&)> run;
};

namespace detail {

struct Database {
  std::filesystem::path records;
  nlohmann::json summary;
};

inline Database ensure_database(Context& ctx, int degree, int height, bool monic) {
  std::filesystem::create_directories(ctx.data_dir);
  const std::string stem = database_stem(degree, height, monic);
  Database db{ctx.data_dir / (stem + ".jsonl"), {}};
  const auto summary_path = ctx.data_dir / (stem + ".summary.json");
  if (!(ctx.reuse_files && std::filesystem::exists(db.records) && std::filesystem::exists(summary_path))) {
    GenerateOptions opts;
    opts.workers = ctx.workers;
    opts.monic = monic;
    write_summary(generate_database(degree, height, db.records, opts), summary_path);
  }
  std::ifstream in(summary_path);
  db.summary = nlohmann::json::parse(in);
  return db;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }

  Outcome done() const {
    std::string d;
    for (const auto& n : notes_) d += (d.empty() ? "" : "; ") + n;
    for (const auto& f : failures_) d += (d.empty() ? "" : "; ") + std::string("MISMATCH ") + f;
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> notes_, failures_;
};

template <class T>
std::string got(const T& actual, const T& expected) {
  std::ostringstream s;
  s << actual << " (expected " << expected << ")";
  return s.str();
}

inline long long group_count(const nlohmann::json& summary, const std::string& name) {
  return summary.at("groups").value(name, 0LL);
}

inline IntPolynomial poly(std::initializer_list<long long> key) { return poly_from_key(canonicalize(key)); }

inline IntPolynomial random_irreducible(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<long long> coef(-bound, bound);
  while (true) {
    std::vector<Integer> c;
    for (int i = 0; i <= n; ++i) c.push_back(make_integer(coef(rng)));
    if (c.back() == 0 || c.front() == 0) continue;
    IntPolynomial f(std::move(c));
    if (discriminant(f) == 0 || !is_irreducible(f)) continue;
    return f;
  }
}

}  // namespace detail

// ------------------------------------------------------------------- census

inline Outcome cubic_census(Context& ctx) {
  auto db = detail::ensure_database(ctx, 3, 20, false);
  const auto& c = db.summary.at("counts");
  detail::Checker ck;
  const std::string points = c.at("projective_points").get<std::string>();
  const long long irreducible = c.at("irreducible").get<long long>();
  const long long c3 = detail::group_count(db.summary, "C3");
  ck.note("points " + points + ", irreducible " + std::to_string(irreducible) + ", C3 " + std::to_string(c3));
  ck.expect(points == "1299200", "points " + detail::got<std::string>(points, "1299200"));
  ck.expect(irreducible == 1178856, "irreducible " + detail::got(irreducible, 1178856LL));
  ck.expect(c3 == 1328, "C3 " + detail::got(c3, 1328LL));
  return ck.done();
}

inline const std::vector<std::vector<long long>>& c3_table_keys() {
  static const std::vector<std::vector<long long>> keys{
      {1, 3, -4, 1},  {-1, -4, -3, 1}, {1, -1, -2, 1},  {1, -2, -1, 1},  {-1, -2, 1, 1},  {-1, -1, 2, 1},
      {1, -4, 3, 1},  {-1, 3, 4, 1},   {1, 0, -3, 1},   {3, 0, -3, 1},   {-1, -3, 0, 1},  {1, -3, 0, 1},
      {-3, 0, 3, 1},  {-1, 0, 3, 1},   {-1, -3, 0, 3},  {1, -3, 0, 3},   {5, 4, -5, 1},   {1, 1, -4, 1},
      {5, -3, -2, 1}, {-1, -4, -1, 1}, {1, -4, 1, 1},   {-5, -3, 2, 1},  {-1, 1, 4, 1},   {-5, 4, 5, 1},
      {-1, -5, -4, 5}, {1, -2, -3, 5}, {-1, -2, 3, 5},  {1, -5, 4, 5},   {1, 2, -5, 1},   {-1, -5, -2, 1},
      {1, -5, 2, 1},  {-1, 2, 5, 1},   {2, -1, -5, 2},  {2, -5, -1, 2},  {-2, -5, 1, 2},  {-2, -1, 5, 2},
      {3, -4, -5, 3}, {3, -5, -4, 3},  {-3, -5, 4, 3},  {-3, -4, 5, 3}};
  return keys;
}

inline Outcome cubic_c3_h5(Context& ctx) {
  auto db = detail::ensure_database(ctx, 3, 5, false);
  detail::Checker ck;
  std::set<std::vector<long long>> found;
  std::set<Integer> discs;
  for (const auto& r : read_records(db.records)) {
    if (r.group->name != "C3") continue;
    found.insert(r.key.values());
    discs.insert(r.delta);
  }
  ck.note(std::to_string(found.size()) + " C3 records, " + std::to_string(discs.size()) + " discriminants");
  ck.expect(found.size() == 40, "C3 count " + detail::got(found.size(), std::size_t{40}));
  const std::set<Integer> allowed{49, 81, 169, 361, 961, 3721};
  for (const auto& d : discs) ck.expect(allowed.count(d) != 0, "discriminant " + d.get_str() + " outside the set");
  for (const auto& k : c3_table_keys())
    ck.expect(found.count(canonicalize(std::span<const long long>(k)).values()) != 0,
              "table key " + canonicalize(std::span<const long long>(k)).to_string() + " missing");
  ck.expect(discriminant(detail::poly({1, 3, -4, 1})) == 49, "disc of (1,3,-4,1)");
  ck.expect(discriminant(detail::poly({1, 0, -3, 1})) == 81, "disc of (1,0,-3,1)");
  return ck.done();
}

inline Outcome quartic_census(Context& ctx) {
  auto db = detail::ensure_database(ctx, 4, 10, true);
  detail::Checker ck;
  const long long d4 = detail::group_count(db.summary, "D4"), a4 = detail::group_count(db.summary, "A4"),
                  v4 = detail::group_count(db.summary, "V4"), c4 = detail::group_count(db.summary, "C4");
  const long long total = d4 + a4 + v4 + c4;
  std::set<std::string> js;
  for (const auto& r : read_records(db.records))
    if (r.group->name != "S4") js.insert(to_string(*r.j));
  const long long distinct = static_cast<long long>(js.size());
  ck.note("non-S4 " + std::to_string(total) + " (D4 " + std::to_string(d4) + ", A4 " + std::to_string(a4) + ", V4 " +
          std::to_string(v4) + ", C4 " + std::to_string(c4) + "), distinct j " + std::to_string(distinct));
  ck.expect(total == 5676, "non-S4 total " + detail::got(total, 5676LL));
  ck.expect(d4 == 5162, "D4 " + detail::got(d4, 5162LL));
  ck.expect(a4 == 184, "A4 " + detail::got(a4, 184LL));
  ck.expect(v4 == 222, "V4 " + detail::got(v4, 222LL));
  ck.expect(c4 == 108, "C4 " + detail::got(c4, 108LL));
  ck.expect(distinct == 1231, "distinct j " + detail::got(distinct, 1231LL));
  return ck.done();
}

inline Outcome quartic_slice(Context&) {
  detail::Checker ck;
  struct Row {
    std::initializer_list<long long> key;
    long J2, J3, delta;
    const char* j;
  };
  for (const Row& row : {Row{{1, -2, -2, -2, 1}, 4, -416, -6400, "-1/2700"},
                         Row{{-1, 2, -1, -2, 1}, 1, 110, -448, "-1/12096"}}) {
    auto key = canonicalize(row.key);
    auto built = build_record(key);
    if (!std::holds_alternative<PolyRecord>(built)) {
      ck.expect(false, key.to_string() + " skipped");
      continue;
    }
    const auto& r = std::get<PolyRecord>(built);
    auto q = quartic_invariants(poly_from_key(key));
    const std::string s = key.to_string();
    ck.expect(q.J2 == row.J2, s + " J2 " + detail::got(q.J2.get_str(), std::to_string(row.J2)));
    ck.expect(q.J3 == row.J3, s + " J3 " + detail::got(q.J3.get_str(), std::to_string(row.J3)));
    ck.expect(r.delta == row.delta, s + " disc " + detail::got(r.delta.get_str(), std::to_string(row.delta)));
    ck.expect(to_string(*r.j) == row.j, s + " j " + detail::got(to_string(*r.j), std::string(row.j)));
    ck.expect(r.group->name == "D4", s + " group " + detail::got(r.group->name, std::string("D4")));
    ck.note(s + " -> " + r.group->name + ", j " + to_string(*r.j));
  }
  return ck.done();
}

// ----------------------------------------------------------------- quintics

inline const std::vector<std::vector<long long>>& c5_table_keys() {
  static const std::vector<std::vector<long long>> keys{
      {-1, 1, 4, -3, -3, 1},   {-1, 3, 3, -4, -1, 1},  {1, 3, -3, -4, 1, 1},    {1, 1, -4, -3, 3, 1},
      {-1, -2, 5, 2, -4, 1},   {1, 4, 2, -5, -2, 1},   {-1, 4, -2, -5, 2, 1},   {1, -2, -5, 2, 4, 1},
      {1, -6, 10, -1, -6, 1},  {1, -6, -1, 10, -6, 1}, {-1, -6, -10, -1, 6, 1}, {-1, -6, 1, 10, 6, 1},
      {-1, 4, 9, -5, -9, 1},   {-1, 9, 5, -9, -4, 1},  {1, 9, -5, -9, 4, 1},    {1, 4, -9, -5, 9, 1},
      {-1, 0, 10, 5, -10, 1},  {-1, 10, -5, -10, 0, 1}, {1, 10, 5, -10, 0, 1},  {1, 0, -10, 5, 10, 1}};
  return keys;
}

inline Outcome quintic_table4(Context&) {
  detail::Checker ck;
  std::vector<PolyRecord> recs;
  for (const auto& k : c5_table_keys()) {
    auto built = build_record(canonicalize(std::span<const long long>(k)));
    if (!std::holds_alternative<PolyRecord>(built)) {
      ck.expect(false, "table key skipped");
      continue;
    }
    recs.push_back(std::get<PolyRecord>(std::move(built)));
  }
  long long c5 = 0;
  for (const auto& r : recs) c5 += r.group->name == "C5";
  ck.expect(c5 == 20, "C5 " + detail::got(c5, 20LL));

  const std::map<std::string, std::pair<long long, double>> expected{
      {"4235,4026275,-16076916075", {12, 8.06}},
      {"113377,2971552001,-47471703427379", {4, 18.34}},
      {"109375,2392578125,-96893310546875", {4, 18.18}}};
  std::map<std::string, long long> classes;
  std::map<std::string, double> wh;
  for (const auto& r : recs) {
    auto key = CensusSummary::class_key(r);
    ++classes[key];
    wh[key] = r.weighted_height;
  }
  ck.expect(classes.size() == 3, "classes " + detail::got(classes.size(), std::size_t{3}));
  for (const auto& [key, val] : expected) {
    auto it = classes.find(key);
    ck.expect(it != classes.end() && it->second == val.first, "class " + key + " multiplicity");
    if (it != classes.end()) {
      ck.expect(std::fabs(wh[key] - val.second) <= 0.01, "wh " + detail::got(wh[key], val.second));
      char buf[64];
      std::snprintf(buf, sizeof buf, " x%lld wh %.4f", it->second, wh[key]);
      ck.note("[" + key + "]" + buf);
    }
  }
  return ck.done();
}

inline Outcome quintic_c5_h5(Context& ctx) {
  auto db = detail::ensure_database(ctx, 5, 5, true);
  detail::Checker ck;
  long long c5 = 0;
  std::set<std::string> classes;
  for (const auto& r : read_records(db.records))
    if (r.group->name == "C5") {
      ++c5;
      classes.insert(CensusSummary::class_key(r));
    }
  ck.note(std::to_string(c5) + " C5 in " + std::to_string(classes.size()) + " class(es)");
  ck.expect(c5 == 8, "C5 " + detail::got(c5, 8LL));
  ck.expect(classes == std::set<std::string>{"4235,4026275,-16076916075"}, "C5 invariant classes");
  return ck.done();
}

inline Outcome quintic_census_h10(Context& ctx) {
  auto db = detail::ensure_database(ctx, 5, 10, true);
  detail::Checker ck;
  const std::pair<const char*, long long> want[] = {{"C5", 20}, {"F5", 480}, {"D5", 900}, {"A5", 1146}};
  std::string note;
  for (const auto& [name, count] : want) {
    const long long g = detail::group_count(db.summary, name);
    note += std::string(note.empty() ? "" : ", ") + name + " " + std::to_string(g);
    ck.expect(g == count, std::string(name) + " " + detail::got(g, count));
  }
  ck.note(note);
  return ck.done();
}

inline Outcome berwick(Context&) {
  detail::Checker ck;
  std::mt19937_64 rng(42);
  int ok = 0, low_precision = 0;
  for (int i = 0; i < 1000; ++i) {
    IntPolynomial f = detail::random_irreducible(rng, 5, 20);
    mpfr_prec_t used = 0;
    try {
      auto res = quintic_resolvent(f, kDefaultPrecisionBits, true, &used);
      quintic_invariants_from_resolvent(res);
      ++ok;
      if (used < 512) ++low_precision;
    } catch (const Error& e) {
      ck.expect(false, f.to_string() + ": " + e.what());
    }
  }
  ck.note(std::to_string(ok) + "/1000 satisfy d4, d5, d6; " + std::to_string(low_precision) +
          " certified below 512 bits");
  ck.expect(low_precision == 1000, "certified below 512 bits " + detail::got(low_precision, 1000));
  return ck.done();
}

// --------------------------------------------------------------- properties

inline double gradient_check_error(std::uint64_t seed) {
  nsn::Network net(3, {4}, 2, seed);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<std::vector<double>> xs(8, std::vector<double>(3));
  std::vector<int> ys(8);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (double& v : xs[i]) v = nd(rng);
    ys[i] = static_cast<int>(i % 2);
  }
  auto grads = net.zero_like();
  for (std::size_t i = 0; i < xs.size(); ++i) net.accumulate_gradient(xs[i], ys[i], grads);
  const double inv = 1.0 / static_cast<double>(xs.size());
  const double h = 1e-5;
  double worst = 0;
  auto& layers = net.layers();
  for (std::size_t li = 0; li < layers.size(); ++li) {
    auto probe = [&](double& param, double analytic) {
      const double keep = param;
      param = keep + h;
      const double up = net.loss(xs, ys);
      param = keep - h;
      const double down = net.loss(xs, ys);
      param = keep;
      const double numeric = (up - down) / (2 * h);
      const double denom = std::max({std::fabs(analytic), std::fabs(numeric), 1e-6});
      worst = std::max(worst, std::fabs(analytic - numeric) / denom);
    };
    for (std::size_t i = 0; i < layers[li].w.size(); ++i) probe(layers[li].w[i], grads[li].w[i] * inv);
    for (std::size_t i = 0; i < layers[li].b.size(); ++i) probe(layers[li].b[i], grads[li].b[i] * inv);
  }
  return worst;
}

inline Outcome properties(Context& ctx) {
  detail::Checker ck;
  std::mt19937_64 rng(42);

  // Affine invariance: half random polynomials, half non-generic database rows.
  const std::vector<detail::Database> dbs{detail::ensure_database(ctx, 3, 20, false),
                                          detail::ensure_database(ctx, 4, 10, true),
                                          detail::ensure_database(ctx, 5, 5, true)};
  long long parity_bad = 0, dedekind_bad = 0, rows = 0;
  int affine_bad = 0, affine_cases = 0;
  std::uniform_int_distribution<long long> small(-3, 3), pos(1, 3);
  for (std::size_t d = 0; d < dbs.size(); ++d) {
    const int n = static_cast<int>(d) + 3;
    std::vector<IntPolynomial> cases;
    std::vector<PolyRecord> special;
    for (const auto& r : read_records(dbs[d].records)) {
      ++rows;
      if (r.delta_is_square() != r.group->in_alternating) ++parity_bad;
      for (const auto& fr : r.frobenius)
        if (fr && !r.group->signature.contains(*fr)) ++dedekind_bad;
      if (r.group->order != galois::detail::factorial(n)) special.push_back(r);
    }
    std::shuffle(special.begin(), special.end(), rng);
    for (std::size_t i = 0; i < special.size() && cases.size() < 100; ++i) cases.push_back(poly_from_key(special[i].key));
    while (cases.size() < 200) cases.push_back(detail::random_irreducible(rng, n, 10));
    for (const auto& f : cases) {
      long long a = small(rng);
      if (a == 0) a = 1;
      Rational sa(make_integer(a), make_integer(pos(rng))), sb(make_integer(small(rng)), make_integer(pos(rng)));
      sa.canonicalize();
      sb.canonicalize();
      IntPolynomial g = affine_substitute(f, sa, sb);
      ++affine_cases;
      if (classify(f).group != classify(g).group) ++affine_bad;
    }
  }
  ck.note("affine " + std::to_string(affine_bad) + "/" + std::to_string(affine_cases) + " violations");
  ck.expect(affine_bad == 0, "affine invariance");
  ck.note("parity " + std::to_string(parity_bad) + ", Dedekind " + std::to_string(dedekind_bad) + " over " +
          std::to_string(rows) + " rows");
  ck.expect(parity_bad == 0, "disc square vs alternating");
  ck.expect(dedekind_bad == 0, "Frobenius types outside the group");

  // Sturm against 200-bit numeric roots.
  int sturm_bad = 0;
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<long long> coef(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    IntPolynomial f;
    do {
      const int n = deg(rng);
      std::vector<Integer> c;
      for (int k = 0; k <= n; ++k) c.push_back(make_integer(coef(rng)));
      if (c.back() == 0) c.back() = 1;
      f = IntPolynomial(std::move(c));
    } while (f.degree() < 1 || (f.degree() > 1 && discriminant(f) == 0));
    const int exact = count_real_roots(f).real_count;
    int numeric = 0;
    for (const auto& z : complex_roots(f, 200)) {
      const double im = std::fabs(z.im.to_double());
      if (im <= 1e-40 * std::max(1.0, std::abs(z.to_complex()))) ++numeric;
    }
    if (exact != numeric) ++sturm_bad;
  }
  ck.note("Sturm " + std::to_string(sturm_bad) + "/1000 disagreements");
  ck.expect(sturm_bad == 0, "Sturm vs numeric roots");

  double worst = 0;
  for (std::uint64_t s = 1; s <= 5; ++s) worst = std::max(worst, gradient_check_error(s));
  char buf[64];
  std::snprintf(buf, sizeof buf, "gradient rel. error %.2e", worst);
  ck.note(buf);
  ck.expect(worst < 1e-4, "gradient check");
  return ck.done();
}

// ---------------------------------------------------------------------- nsn

inline Outcome nsn_suite(Context& ctx) {
  auto db = detail::ensure_database(ctx, 5, 5, true);
  detail::Checker ck;
  const auto records = read_records(db.records);
  nsn::TrainConfig config;
  const nsn::Model model = nsn::train_model(records, config);
  {
    std::ofstream out(ctx.data_dir / "model_deg5_h5_seed42.json", std::ios::binary | std::ios::trunc);
    out << nsn::model_to_json(model).dump() << "\n";
  }
  const auto& loss = model.loss_history;
  bool decreasing = loss.size() > 10;
  for (std::size_t e = 1; e <= 10 && e < loss.size(); ++e) decreasing = decreasing && loss[e] < loss[e - 1];
  ck.expect(decreasing, "loss not strictly decreasing over the first 10 epochs");
  ck.expect(loss.back() < loss.front(), "final loss not below initial");
  bool finite = std::all_of(loss.begin(), loss.end(), [](double v) { return std::isfinite(v); });
  ck.expect(finite, "non-finite loss");

  const auto held = nsn::held_out(model, records);
  const auto ev = nsn::evaluate_model(model, held);
  ck.expect(ev.hybrid.accuracy >= ev.network.accuracy, "hybrid below network-only");
  ck.expect(ev.r1.fired == ev.r1.correct, "R1 subset not fully correct");

  const auto full = nsn::evaluate_model(model, records);
  ck.expect(full.r1.masked_truth == 0 && full.r2.masked_truth == 0 && full.r3.masked_truth == 0,
            "a rule contradicted the true group");

  const std::size_t c5 = static_cast<std::size_t>(group_by_name(5, "C5").k - 1);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "loss %.4f -> %.4f; held-out %zu: network %.4f, hybrid %.4f; R1 %lld/%lld; C5 recall %s",
                loss.front(), loss.back(), held.size(), ev.network.accuracy, ev.hybrid.accuracy, ev.r1.correct,
                ev.r1.fired,
                std::isnan(ev.hybrid.recall[c5]) ? "n/a" : std::to_string(ev.hybrid.recall[c5]).c_str());
  ck.note(buf);
  return ck.done();
}

inline Outcome determinism(Context& ctx) {
  detail::Checker ck;
  auto db = detail::ensure_database(ctx, 3, 20, false);
  const auto again = ctx.data_dir / "deg3_h20.repeat.jsonl";
  generate_database(3, 20, again, GenerateOptions{ctx.workers, false, {}});
  const bool same_db = detail::read_file(db.records) == detail::read_file(again);
  std::filesystem::remove(again);
  ck.expect(same_db, "cubic database differs between runs");

  auto q = detail::ensure_database(ctx, 5, 5, true);
  const auto records = read_records(q.records);
  const std::string m1 = nsn::model_to_json(nsn::train_model(records)).dump();
  const std::string m2 = nsn::model_to_json(nsn::train_model(records)).dump();
  ck.expect(m1 == m2, "model bytes differ between runs");
  ck.note(std::string("database ") + (same_db ? "identical" : "differs") + ", model " +
          (m1 == m2 ? "identical" : "differs"));
  return ck.done();
}

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"cubic-census-h20", 1, false, "cubic census to height 20", cubic_census},
      {"cubic-c3-h5", 2, false, "the 40 C3 cubics of height <= 5", cubic_c3_h5},
      {"quartic-census-h10", 3, false, "monic quartic census to height 10", quartic_census},
      {"quartic-slice", 4, false, "quartic slice rows", quartic_slice},
      {"quintic-table4", 5, false, "the 20 C5 quintics and their invariant classes", quintic_table4},
      {"quintic-c5-h5", 6, false, "monic quintic census to height 5", quintic_c5_h5},
      {"quintic-census-h10", 6, true, "monic quintic census to height 10", quintic_census_h10},
      {"berwick", 7, false, "resolvent identities on 1000 random quintics", berwick},
      {"properties", 8, false, "affine invariance, parity, Dedekind, Sturm, gradient", properties},
      {"nsn", 9, false, "training and rule layer on the quintic database", nsn_suite},
      {"determinism", 10, false, "repeat runs are byte-identical", determinism},
  };
  return suites;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : all_suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace galois::suites
