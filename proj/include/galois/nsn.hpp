#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "galois/database.hpp"
#include "galois/error.hpp"
#include "galois/groups.hpp"
#include "galois/realroots.hpp"

namespace galois::nsn {

// ------------------------------------------------------------------ features

/// Cycle types of degree n in descending lexicographic order.
inline std::vector<CycleType> partitions_of(int n) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

struct FeatureLayout {
  int degree = 0;
  std::vector<std::string> names;
  std::vector<bool> continuous;  // flags and one-hots are not standardized

  std::size_t size() const { return names.size(); }
};

inline FeatureLayout feature_layout(int degree) {
  if (degree < 3 || degree > 5) throw Error(ErrorCode::OutOfRange, "features need degree 3, 4 or 5");
  FeatureLayout l;
  l.degree = degree;
  auto add = [&](std::string name, bool cont) {
    l.names.push_back(std::move(name));
    l.continuous.push_back(cont);
  };
  for (int i = 0; i <= degree; ++i) add("a" + std::to_string(i), true);
  const int ninv = degree == 3 ? 1 : degree == 4 ? 2 : 3;
  for (int i = 0; i < ninv; ++i) add("log_inv" + std::to_string(i), true);
  add("log_delta", true);
  add("delta_square", false);
  add("real_roots", true);
  add("nonreal_roots", true);
  const auto parts = partitions_of(degree);
  for (auto p : kRecordPrimes) {
    for (const auto& t : parts) add("p" + std::to_string(p) + "_" + t.to_string(), false);
    add("p" + std::to_string(p) + "_bad", false);
  }
  if (degree >= 4) add("resolvent_root", false);
  return l;
}

namespace detail {

inline double signed_log(const Integer& v) {
  if (v == 0) return 0;
  const double mag = mpz_sizeinbase(v.get_mpz_t(), 2) < 52 ? std::log1p(std::fabs(v.get_d())) : log_abs(v);
  return v < 0 ? -mag : mag;
}

}  // namespace detail

inline std::vector<double> extract_features(const PolyRecord& r, int degree) {
  if (r.degree() != degree)
    throw Error(ErrorCode::DegreeMismatch,
                "record of degree " + std::to_string(r.degree()) + " given to a degree " + std::to_string(degree) +
                    " extractor");
  const FeatureLayout layout = feature_layout(degree);
  std::vector<double> x;
  x.reserve(layout.size());
  const double h = static_cast<double>(std::max<long long>(1, r.key.height()));
  for (long long a : r.key.values()) x.push_back(static_cast<double>(a) / h);
  const std::size_t ninv = degree == 3 ? 1 : degree == 4 ? 2 : 3;
  for (std::size_t i = 0; i < ninv; ++i)
    x.push_back(i < r.invariants.values.size() ? detail::signed_log(r.invariants.values[i]) : 0.0);
  x.push_back(detail::signed_log(r.delta));
  x.push_back(r.delta_is_square() ? 1.0 : 0.0);
  x.push_back(r.real_roots);
  x.push_back(r.nonreal_roots());
  const auto parts = partitions_of(degree);
  for (std::size_t i = 0; i < kRecordPrimes.size(); ++i) {
    for (const auto& t : parts) x.push_back(r.frobenius[i] && *r.frobenius[i] == t ? 1.0 : 0.0);
    x.push_back(r.frobenius[i] ? 0.0 : 1.0);
  }
  if (degree >= 4) x.push_back(r.resolvent_rational_root ? 1.0 : 0.0);
  return x;
}

// ------------------------------------------------------------------- network

struct Layer {
  int in = 0, out = 0;
  std::vector<double> w;  // out x in, row-major
  std::vector<double> b;

  Layer() = default;
  Layer(int i, int o)
      : in(i), out(o), w(static_cast<std::size_t>(i) * static_cast<std::size_t>(o), 0.0),
        b(static_cast<std::size_t>(o), 0.0) {}
};

inline void softmax_in_place(std::vector<double>& z) {
  const double m = *std::max_element(z.begin(), z.end());
  double s = 0;
  for (double& v : z) {
    v = std::exp(v - m);
    s += v;
  }
  for (double& v : z) v /= s;
}

/// Dense ReLU layers with a softmax output.
class Network {
 public:
  Network() = default;

  Network(int inputs, const std::vector<int>& hidden, int classes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int prev = inputs;
    std::vector<int> sizes = hidden;
    sizes.push_back(classes);
    for (int width : sizes) {
      Layer l(prev, width);
      std::normal_distribution<double> he(0.0, std::sqrt(2.0 / prev));
      for (double& v : l.w) v = he(rng);
      layers_.push_back(std::move(l));
      prev = width;
    }
  }

  explicit Network(std::vector<Layer> layers) : layers_(std::move(layers)) {}

  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Layer>& layers() { return layers_; }
  int inputs() const { return layers_.empty() ? 0 : layers_.front().in; }
  int classes() const { return layers_.empty() ? 0 : layers_.back().out; }

  std::vector<double> logits(const std::vector<double>& x) const {
    std::vector<double> a = x;
    for (std::size_t li = 0; li < layers_.size(); ++li) {
      a = affine(layers_[li], a);
      if (li + 1 < layers_.size())
        for (double& v : a) v = std::max(0.0, v);
    }
    return a;
  }

  std::vector<double> probabilities(const std::vector<double>& x) const {
    auto z = logits(x);
    softmax_in_place(z);
    return z;
  }

  /// Adds d(loss)/d(params) for one sample into grads; returns its cross-entropy.
  double accumulate_gradient(const std::vector<double>& x, int label, std::vector<Layer>& grads) const {
    std::vector<std::vector<double>> acts{x};
    for (std::size_t li = 0; li < layers_.size(); ++li) {
      auto z = affine(layers_[li], acts.back());
      if (li + 1 < layers_.size())
        for (double& v : z) v = std::max(0.0, v);
      acts.push_back(std::move(z));
    }
    std::vector<double> delta = acts.back();
    softmax_in_place(delta);
    const double loss = -std::log(std::max(delta[static_cast<std::size_t>(label)], 1e-300));
    delta[static_cast<std::size_t>(label)] -= 1.0;

    for (std::size_t li = layers_.size(); li-- > 0;) {
      const Layer& l = layers_[li];
      Layer& g = grads[li];
      const auto& input = acts[li];
      for (int o = 0; o < l.out; ++o) {
        const double d = delta[static_cast<std::size_t>(o)];
        if (d == 0) continue;
        g.b[static_cast<std::size_t>(o)] += d;
        double* gw = &g.w[static_cast<std::size_t>(o) * static_cast<std::size_t>(l.in)];
        for (int i = 0; i < l.in; ++i) gw[i] += d * input[static_cast<std::size_t>(i)];
      }
      if (li == 0) break;
      std::vector<double> next(static_cast<std::size_t>(l.in), 0.0);
      for (int o = 0; o < l.out; ++o) {
        const double d = delta[static_cast<std::size_t>(o)];
        if (d == 0) continue;
        const double* w = &l.w[static_cast<std::size_t>(o) * static_cast<std::size_t>(l.in)];
        for (int i = 0; i < l.in; ++i) next[static_cast<std::size_t>(i)] += d * w[i];
      }
      for (int i = 0; i < l.in; ++i)
        if (input[static_cast<std::size_t>(i)] <= 0) next[static_cast<std::size_t>(i)] = 0;
      delta = std::move(next);
    }
    return loss;
  }

  std::vector<Layer> zero_like() const {
    std::vector<Layer> g;
    for (const auto& l : layers_) g.emplace_back(l.in, l.out);
    return g;
  }

  /// Mean cross-entropy over a batch.
  double loss(const std::vector<std::vector<double>>& xs, const std::vector<int>& ys) const {
    double s = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto p = probabilities(xs[i]);
      s -= std::log(std::max(p[static_cast<std::size_t>(ys[i])], 1e-300));
    }
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
  }

 private:
  static std::vector<double> affine(const Layer& l, const std::vector<double>& a) {
    std::vector<double> z(l.b);
    for (int o = 0; o < l.out; ++o) {
      const double* w = &l.w[static_cast<std::size_t>(o) * static_cast<std::size_t>(l.in)];
      double s = 0;
      for (int i = 0; i < l.in; ++i) s += w[i] * a[static_cast<std::size_t>(i)];
      z[static_cast<std::size_t>(o)] += s;
    }
    return z;
  }

  std::vector<Layer> layers_;
};

struct TrainConfig {
  int epochs = 100;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 128;
  std::uint64_t seed = 42;
  double train_fraction = 0.8;
  int max_per_class = 2000;  // 0 keeps every record
  std::vector<int> hidden{64, 64, 64};
};

class Adam {
 public:
  Adam(const Network& net, const TrainConfig& c) : m_(net.zero_like()), v_(net.zero_like()), c_(c) {}

  void step(Network& net, const std::vector<Layer>& grads) {
    ++t_;
    const double bc1 = 1.0 - std::pow(c_.beta1, t_);
    const double bc2 = 1.0 - std::pow(c_.beta2, t_);
    auto upd = [&](std::vector<double>& p, const std::vector<double>& g, std::vector<double>& m,
                   std::vector<double>& v) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        m[i] = c_.beta1 * m[i] + (1 - c_.beta1) * g[i];
        v[i] = c_.beta2 * v[i] + (1 - c_.beta2) * g[i] * g[i];
        p[i] -= c_.learning_rate * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + c_.epsilon);
      }
    };
    auto& layers = net.layers();
    for (std::size_t li = 0; li < layers.size(); ++li) {
      upd(layers[li].w, grads[li].w, m_[li].w, v_[li].w);
      upd(layers[li].b, grads[li].b, m_[li].b, v_[li].b);
    }
  }

 private:
  std::vector<Layer> m_, v_;
  TrainConfig c_;
  int t_ = 0;
};

// ------------------------------------------------------------------- dataset

struct Dataset {
  int degree = 0;
  std::vector<std::vector<double>> x;
  std::vector<int> y;  // class index = catalog position
};

inline Dataset make_dataset(const std::vector<PolyRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::DegenerateDataset, "dataset is empty");
  Dataset d;
  d.degree = records.front().degree();
  for (const auto& r : records) {
    if (!r.group) throw Error(ErrorCode::DegenerateDataset, "record without a label");
    d.x.push_back(extract_features(r, d.degree));
    d.y.push_back(r.group->k - 1);
  }
  return d;
}

struct Split {
  std::vector<std::size_t> train, validation;
};

/// Per-class shuffle, optional cap, then the train fraction of each class
/// (at least one record on each side when the class has two or more).
inline Split stratified_split(const std::vector<int>& y, int classes, const TrainConfig& c) {
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < y.size(); ++i) by_class[static_cast<std::size_t>(y[i])].push_back(i);
  std::mt19937_64 rng(c.seed);
  Split s;
  for (auto& idx : by_class) {
    std::shuffle(idx.begin(), idx.end(), rng);
    if (c.max_per_class > 0 && idx.size() > static_cast<std::size_t>(c.max_per_class))
      idx.resize(static_cast<std::size_t>(c.max_per_class));
    std::size_t n_train = idx.size();
    if (idx.size() >= 2) {
      n_train = static_cast<std::size_t>(std::floor(c.train_fraction * static_cast<double>(idx.size())));
      n_train = std::clamp<std::size_t>(n_train, 1, idx.size() - 1);
    }
    s.train.insert(s.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    s.validation.insert(s.validation.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.validation.begin(), s.validation.end());
  return s;
}

// --------------------------------------------------------------------- model

struct Standardizer {
  std::vector<std::size_t> kept;  // raw feature indices with nonzero spread
  std::vector<double> mean, sd;

  std::vector<double> apply(const std::vector<double>& raw) const {
    std::vector<double> out(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) out[i] = (raw[kept[i]] - mean[i]) / sd[i];
    return out;
  }
};

inline Standardizer fit_standardizer(const Dataset& d, const std::vector<std::size_t>& rows) {
  const FeatureLayout layout = feature_layout(d.degree);
  Standardizer s;
  for (std::size_t f = 0; f < layout.size(); ++f) {
    double mean = 0;
    for (auto r : rows) mean += d.x[r][f];
    mean /= static_cast<double>(rows.size());
    double var = 0;
    for (auto r : rows) var += (d.x[r][f] - mean) * (d.x[r][f] - mean);
    var /= static_cast<double>(rows.size());
    if (!(var > 1e-24)) continue;
    s.kept.push_back(f);
    if (layout.continuous[f]) {
      s.mean.push_back(mean);
      s.sd.push_back(std::sqrt(var));
    } else {
      s.mean.push_back(0);
      s.sd.push_back(1);
    }
  }
  return s;
}

struct Model {
  int degree = 0;
  Standardizer standardizer;
  std::vector<int> group_k;  // class index -> transitive group number
  std::vector<std::string> names;
  TrainConfig config;
  Network network;
  std::vector<double> loss_history;  // full training-split loss, before epoch 1 then after each epoch

  int classes() const { return static_cast<int>(group_k.size()); }
  const GroupId& group(int cls) const { return group_by_index(degree, group_k[static_cast<std::size_t>(cls)]); }
};

inline Model train_model(const std::vector<PolyRecord>& records, const TrainConfig& config = {}) {
  for (const auto& r : records)
    if (r.degree() != records.front().degree()) throw Error(ErrorCode::MixedDegrees, "training records mix degrees");
  Dataset d = make_dataset(records);
  const auto& catalog = group_catalog(d.degree);
  const int classes = static_cast<int>(catalog.size());
  Split split = stratified_split(d.y, classes, config);

  std::vector<int> present;
  for (auto i : split.train) present.push_back(d.y[i]);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  if (present.size() < 2) throw Error(ErrorCode::DegenerateDataset, "training split has fewer than two classes");

  Model m;
  m.degree = d.degree;
  m.config = config;
  for (const auto& g : catalog) {
    m.group_k.push_back(g.k);
    m.names.push_back(g.name);
  }
  m.standardizer = fit_standardizer(d, split.train);
  if (m.standardizer.kept.empty()) throw Error(ErrorCode::DegenerateDataset, "every feature is constant");

  std::vector<std::vector<double>> xs;
  std::vector<int> ys;
  for (auto i : split.train) {
    xs.push_back(m.standardizer.apply(d.x[i]));
    ys.push_back(d.y[i]);
  }

  m.network = Network(static_cast<int>(m.standardizer.kept.size()), config.hidden, classes, config.seed + 1);
  Adam adam(m.network, config);
  std::mt19937_64 rng(config.seed + 2);
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  m.loss_history.push_back(m.network.loss(xs, ys));
  const std::size_t bs = static_cast<std::size_t>(std::max(1, config.batch_size));
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size(); start += bs) {
      const std::size_t end = std::min(order.size(), start + bs);
      auto grads = m.network.zero_like();
      for (std::size_t i = start; i < end; ++i) m.network.accumulate_gradient(xs[order[i]], ys[order[i]], grads);
      const double scale = 1.0 / static_cast<double>(end - start);
      for (auto& g : grads) {
        for (double& v : g.w) v *= scale;
        for (double& v : g.b) v *= scale;
      }
      adam.step(m.network, grads);
    }
    m.loss_history.push_back(m.network.loss(xs, ys));
  }
  return m;
}

/// Records of the validation side of the model's own split.
inline std::vector<PolyRecord> held_out(const Model& m, const std::vector<PolyRecord>& records) {
  Dataset d = make_dataset(records);
  if (d.degree != m.degree) throw Error(ErrorCode::DegreeMismatch, "dataset degree differs from the model");
  Split s = stratified_split(d.y, m.classes(), m.config);
  std::vector<PolyRecord> out;
  for (auto i : s.validation) out.push_back(records[i]);
  return out;
}

// --------------------------------------------------------------------- rules

struct Prediction {
  std::vector<double> network;       // raw softmax output
  std::vector<double> distribution;  // after the parity mask, if applied
  int network_label = 0;
  int label = 0;
  std::vector<std::string> fired;
};

namespace detail {

inline int argmax(const std::vector<double>& p) {
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

inline int class_of(const Model& m, int k) {
  for (int c = 0; c < m.classes(); ++c)
    if (m.group_k[static_cast<std::size_t>(c)] == k) return c;
  throw Error(ErrorCode::Inconsistent, "group not in the label map");
}

}  // namespace detail

inline std::vector<double> network_distribution(const Model& m, const PolyRecord& r) {
  return m.network.probabilities(m.standardizer.apply(extract_features(r, m.degree)));
}

/// R1 signature uniqueness, R2 real-root forcing, R3 parity mask, in that
/// order. The mask is applied when the network's top class has the wrong
/// parity; otherwise the distribution is returned as is.
inline Prediction predict_with_rules(const Model& m, const PolyRecord& r) {
  Prediction p;
  p.network = network_distribution(m, r);
  p.distribution = p.network;
  p.network_label = detail::argmax(p.network);
  p.label = p.network_label;
  const int n = m.degree;

  if (!r.signature.types.empty()) {
    auto cands = candidates_from_signature(n, r.signature);
    if (cands.size() == 1) {
      p.label = detail::class_of(m, cands.front().k);
      p.fired.push_back("R1");
      return p;
    }
  }

  const bool square = r.delta_is_square();
  if (n >= 5 && is_prime(n) && forced_alternating_or_symmetric(n, r.nonreal_roots())) {
    const long long full = galois::detail::factorial(n);
    for (const auto& g : group_catalog(n))
      if (g.order == (square ? full / 2 : full)) p.label = detail::class_of(m, g.k);
    p.fired.push_back("R2");
    return p;
  }

  if (m.group(p.network_label).in_alternating != square) {
    double s = 0;
    for (int c = 0; c < m.classes(); ++c) {
      auto& v = p.distribution[static_cast<std::size_t>(c)];
      if (m.group(c).in_alternating != square) v = 0;
      s += v;
    }
    for (double& v : p.distribution) v /= s;
    p.label = detail::argmax(p.distribution);
    p.fired.push_back("R3");
  }
  return p;
}

// ------------------------------------------------------------------- metrics

struct Metrics {
  std::vector<std::string> names;
  double accuracy = 0;
  std::vector<std::vector<long long>> confusion;  // row = truth, column = prediction
  std::vector<long long> support;
  std::vector<double> precision, recall;  // NaN when undefined

  void finish() {
    const std::size_t c = names.size();
    support.assign(c, 0);
    precision.assign(c, NAN);
    recall.assign(c, NAN);
    long long total = 0, correct = 0;
    for (std::size_t i = 0; i < c; ++i) {
      long long col = 0;
      for (std::size_t j = 0; j < c; ++j) {
        support[i] += confusion[i][j];
        col += confusion[j][i];
      }
      total += support[i];
      correct += confusion[i][i];
      if (support[i]) recall[i] = static_cast<double>(confusion[i][i]) / static_cast<double>(support[i]);
      if (col) precision[i] = static_cast<double>(confusion[i][i]) / static_cast<double>(col);
    }
    accuracy = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json o;
    o["accuracy"] = accuracy;
    o["classes"] = names;
    o["confusion"] = confusion;
    o["support"] = support;
    auto opt = [](double v) { return std::isnan(v) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v); };
    nlohmann::ordered_json pr = nlohmann::ordered_json::array(), rc = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
      pr.push_back(opt(precision[i]));
      rc.push_back(opt(recall[i]));
    }
    o["precision"] = pr;
    o["recall"] = rc;
    return o;
  }

  std::string table() const {
    std::string s;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-6s %9s %9s %9s\n", "class", "precision", "recall", "support");
    s += buf;
    auto cell = [](double v) {
      char b[16];
      if (std::isnan(v))
        std::snprintf(b, sizeof b, "%9s", "-");
      else
        std::snprintf(b, sizeof b, "%9.4f", v);
      return std::string(b);
    };
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%-6s %s %s %9lld\n", names[i].c_str(), cell(precision[i]).c_str(),
                    cell(recall[i]).c_str(), support[i]);
      s += buf;
    }
    std::snprintf(buf, sizeof buf, "accuracy %.6f\n", accuracy);
    return s + buf;
  }
};

struct RuleStats {
  long long fired = 0, correct = 0, masked_truth = 0;
};

struct Evaluation {
  Metrics network, hybrid;
  RuleStats r1, r2, r3;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json o;
    o["network"] = network.to_json();
    o["hybrid"] = hybrid.to_json();
    auto rs = [](const RuleStats& s) {
      return nlohmann::ordered_json{{"fired", s.fired}, {"correct", s.correct}, {"masked_truth", s.masked_truth}};
    };
    o["rules"] = {{"R1", rs(r1)}, {"R2", rs(r2)}, {"R3", rs(r3)}};
    return o;
  }

  std::string table() const {
    std::string s = "network only\n" + network.table() + "\nwith rules\n" + hybrid.table() + "\n";
    char buf[128];
    const std::pair<const char*, const RuleStats*> rows[] = {{"R1", &r1}, {"R2", &r2}, {"R3", &r3}};
    for (const auto& [name, st] : rows) {
      std::snprintf(buf, sizeof buf, "%s fired %lld correct %lld masked_truth %lld\n", name, st->fired, st->correct,
                    st->masked_truth);
      s += buf;
    }
    return s;
  }
};

inline Evaluation evaluate_model(const Model& m, const std::vector<PolyRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::DegenerateDataset, "nothing to evaluate");
  Evaluation e;
  const std::size_t c = static_cast<std::size_t>(m.classes());
  for (Metrics* mt : {&e.network, &e.hybrid}) {
    mt->names = m.names;
    mt->confusion.assign(c, std::vector<long long>(c, 0));
  }
  for (const auto& r : records) {
    if (!r.group) throw Error(ErrorCode::DegenerateDataset, "record without a label");
    const int truth = detail::class_of(m, r.group->k);
    Prediction p = predict_with_rules(m, r);
    ++e.network.confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(p.network_label)];
    ++e.hybrid.confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(p.label)];
    for (const auto& f : p.fired) {
      RuleStats& st = f == "R1" ? e.r1 : f == "R2" ? e.r2 : e.r3;
      ++st.fired;
      if (p.label == truth) ++st.correct;
      if (f == "R3" ? p.distribution[static_cast<std::size_t>(truth)] == 0 : p.label != truth) ++st.masked_truth;
    }
  }
  e.network.finish();
  e.hybrid.finish();
  return e;
}

// ---------------------------------------------------------------- model file

inline nlohmann::ordered_json model_to_json(const Model& m) {
  nlohmann::ordered_json o;
  o["degree"] = m.degree;
  o["features"] = feature_layout(m.degree).names;
  o["kept"] = m.standardizer.kept;
  o["mean"] = m.standardizer.mean;
  o["sd"] = m.standardizer.sd;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.group_k.size(); ++i)
    labels.push_back({{"class", i}, {"group_gap_id", {m.degree, m.group_k[i]}}, {"name", m.names[i]}});
  o["labels"] = labels;
  const auto& c = m.config;
  o["config"] = {{"epochs", c.epochs},       {"learning_rate", c.learning_rate}, {"beta1", c.beta1},
                 {"beta2", c.beta2},         {"epsilon", c.epsilon},             {"batch_size", c.batch_size},
                 {"train_fraction", c.train_fraction}, {"max_per_class", c.max_per_class}, {"hidden", c.hidden}};
  o["seed"] = c.seed;
  nlohmann::ordered_json layers = nlohmann::ordered_json::array();
  for (const auto& l : m.network.layers())
    layers.push_back({{"in", l.in}, {"out", l.out}, {"weights", l.w}, {"bias", l.b}});
  o["layers"] = layers;
  o["loss_history"] = m.loss_history;
  return o;
}

inline Model model_from_json(const nlohmann::json& o) {
  try {
    Model m;
    m.degree = o.at("degree").get<int>();
    m.standardizer.kept = o.at("kept").get<std::vector<std::size_t>>();
    m.standardizer.mean = o.at("mean").get<std::vector<double>>();
    m.standardizer.sd = o.at("sd").get<std::vector<double>>();
    for (const auto& l : o.at("labels")) {
      m.group_k.push_back(l.at("group_gap_id").at(1).get<int>());
      m.names.push_back(l.at("name").get<std::string>());
    }
    const auto& c = o.at("config");
    m.config.epochs = c.at("epochs").get<int>();
    m.config.learning_rate = c.at("learning_rate").get<double>();
    m.config.beta1 = c.at("beta1").get<double>();
    m.config.beta2 = c.at("beta2").get<double>();
    m.config.epsilon = c.at("epsilon").get<double>();
    m.config.batch_size = c.at("batch_size").get<int>();
    m.config.train_fraction = c.at("train_fraction").get<double>();
    m.config.max_per_class = c.at("max_per_class").get<int>();
    m.config.hidden = c.at("hidden").get<std::vector<int>>();
    m.config.seed = o.at("seed").get<std::uint64_t>();
    std::vector<Layer> layers;
    int prev = static_cast<int>(m.standardizer.kept.size());
    for (const auto& lj : o.at("layers")) {
      Layer l(lj.at("in").get<int>(), lj.at("out").get<int>());
      l.w = lj.at("weights").get<std::vector<double>>();
      l.b = lj.at("bias").get<std::vector<double>>();
      if (l.in != prev || l.w.size() != static_cast<std::size_t>(l.in) * static_cast<std::size_t>(l.out) ||
          l.b.size() != static_cast<std::size_t>(l.out))
        throw Error(ErrorCode::IoError, "inconsistent layer shapes in model file");
      prev = l.out;
      layers.push_back(std::move(l));
    }
    if (prev != static_cast<int>(m.group_k.size()))
      throw Error(ErrorCode::IoError, "output layer does not match the label map");
    m.network = Network(std::move(layers));
    m.loss_history = o.value("loss_history", std::vector<double>{});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("malformed model: ") + e.what());
  }
}

}  // namespace galois::nsn
