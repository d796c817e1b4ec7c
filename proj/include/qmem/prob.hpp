#pragma once

// Finite distributions, channels and selectable channels, together with
// the distance-from-uniform family of quantities built on them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "qmem/error.hpp"

namespace qmem {

/// Global tolerance on total probability mass.
inline constexpr double kSimplexTolerance = 1e-12;

class Distribution {
 public:
  explicit Distribution(std::vector<double> probs) : p_(std::move(probs)) {
    detail::require(!p_.empty(), "Distribution: alphabet must be nonempty");
    double total = 0.0;
    for (double v : p_) {
      detail::require(v >= 0.0 && std::isfinite(v), "Distribution: probabilities must be nonnegative");
      total += v;
    }
    detail::require(std::abs(total - 1.0) <= kSimplexTolerance, "Distribution: mass must sum to 1");
  }

  static Distribution uniform(std::size_t n) {
    detail::require(n >= 1, "Distribution::uniform: empty alphabet");
    return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  static Distribution point_mass(std::size_t n, std::size_t at) {
    detail::require(at < n, "Distribution::point_mass: index out of range");
    std::vector<double> p(n, 0.0);
    p[at] = 1.0;
    return Distribution(std::move(p));
  }

  /// Rescales nonnegative weights to unit mass.
  static Distribution normalized(std::vector<double> weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    detail::require(total > 0.0, "Distribution::normalized: zero total weight");
    for (auto& w : weights) w /= total;
    return Distribution(std::move(weights));
  }

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probs() const { return p_; }

  /// sum_x P(x)^2
  double collision_probability() const {
    double s = 0.0;
    for (double v : p_) s += v * v;
    return s;
  }

  /// Order-2 Renyi entropy in bits.
  double renyi_entropy() const { return -std::log2(collision_probability()); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> p_;
};

/// q * a + (1 - q) * b
inline Distribution mixture(double q, const Distribution& a, const Distribution& b) {
  detail::require(a.size() == b.size(), "mixture: alphabet mismatch");
  detail::require(q >= 0.0 && q <= 1.0, "mixture: weight outside [0, 1]");
  std::vector<double> p(a.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = q * a[i] + (1.0 - q) * b[i];
  return Distribution::normalized(std::move(p));
}

/// Joint distribution of a pair; rows index the first variable.
class JointDistribution {
 public:
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> probs)
      : rows_(rows), cols_(cols), p_(std::move(probs)) {
    detail::require(rows >= 1 && cols >= 1, "JointDistribution: empty alphabet");
    detail::require(p_.size() == rows * cols, "JointDistribution: shape mismatch");
    double total = 0.0;
    for (double v : p_) {
      detail::require(v >= 0.0 && std::isfinite(v), "JointDistribution: negative probability");
      total += v;
    }
    detail::require(std::abs(total - 1.0) <= kSimplexTolerance, "JointDistribution: mass must sum to 1");
  }

  static JointDistribution product(const Distribution& first, const Distribution& second) {
    std::vector<double> p(first.size() * second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
      for (std::size_t j = 0; j < second.size(); ++j) p[i * second.size() + j] = first[i] * second[j];
    return JointDistribution(first.size(), second.size(), std::move(p));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return p_[r * cols_ + c]; }
  std::span<const double> probs() const { return p_; }

  Distribution row_marginal() const {
    std::vector<double> m(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m[r] += (*this)(r, c);
    return Distribution::normalized(std::move(m));
  }

  Distribution col_marginal() const {
    std::vector<double> m(cols_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m[c] += (*this)(r, c);
    return Distribution::normalized(std::move(m));
  }

  /// Swaps the roles of the two variables.
  JointDistribution transposed() const {
    std::vector<double> p(p_.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) p[c * rows_ + r] = (*this)(r, c);
    return JointDistribution(cols_, rows_, std::move(p));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> p_;
};

/// Joint distribution of a triple (A, B, C), indexed (a, b, c).
class JointDistribution3 {
 public:
  JointDistribution3(std::size_t na, std::size_t nb, std::size_t nc, std::vector<double> probs)
      : na_(na), nb_(nb), nc_(nc), p_(std::move(probs)) {
    detail::require(na >= 1 && nb >= 1 && nc >= 1, "JointDistribution3: empty alphabet");
    detail::require(p_.size() == na * nb * nc, "JointDistribution3: shape mismatch");
    double total = 0.0;
    for (double v : p_) {
      detail::require(v >= 0.0 && std::isfinite(v), "JointDistribution3: negative probability");
      total += v;
    }
    detail::require(std::abs(total - 1.0) <= kSimplexTolerance, "JointDistribution3: mass must sum to 1");
  }

  /// (A, B) joint with an independent constant C.
  static JointDistribution3 with_constant(const JointDistribution& ab) {
    return JointDistribution3(ab.rows(), ab.cols(), 1, {ab.probs().begin(), ab.probs().end()});
  }

  std::size_t size_a() const { return na_; }
  std::size_t size_b() const { return nb_; }
  std::size_t size_c() const { return nc_; }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return p_[(a * nb_ + b) * nc_ + c];
  }

  JointDistribution marginal_ab() const {
    std::vector<double> p(na_ * nb_, 0.0);
    for (std::size_t a = 0; a < na_; ++a)
      for (std::size_t b = 0; b < nb_; ++b)
        for (std::size_t c = 0; c < nc_; ++c) p[a * nb_ + b] += (*this)(a, b, c);
    return JointDistribution(na_, nb_, std::move(p));
  }

  Distribution marginal_c() const {
    std::vector<double> p(nc_, 0.0);
    for (std::size_t a = 0; a < na_; ++a)
      for (std::size_t b = 0; b < nb_; ++b)
        for (std::size_t c = 0; c < nc_; ++c) p[c] += (*this)(a, b, c);
    return Distribution::normalized(std::move(p));
  }

 private:
  std::size_t na_;
  std::size_t nb_;
  std::size_t nc_;
  std::vector<double> p_;
};

/// Stochastic matrix; row s is the output distribution given input s.
class ClassicalChannel {
 public:
  explicit ClassicalChannel(std::vector<Distribution> rows) : rows_(std::move(rows)) {
    detail::require(!rows_.empty(), "ClassicalChannel: no inputs");
    for (const auto& r : rows_)
      detail::require(r.size() == rows_.front().size(), "ClassicalChannel: ragged rows");
  }

  static ClassicalChannel identity(std::size_t n) {
    std::vector<Distribution> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Distribution::point_mass(n, i));
    return ClassicalChannel(std::move(rows));
  }

  /// Channel computing a function `map` with `output_size` possible values.
  static ClassicalChannel deterministic(std::span<const std::uint32_t> map, std::size_t output_size) {
    std::vector<Distribution> rows;
    rows.reserve(map.size());
    for (auto w : map) {
      detail::require(w < output_size, "ClassicalChannel::deterministic: value out of range");
      rows.push_back(Distribution::point_mass(output_size, w));
    }
    return ClassicalChannel(std::move(rows));
  }

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const { return rows_.front().size(); }
  double operator()(std::size_t in, std::size_t out) const { return rows_[in][out]; }
  const Distribution& row(std::size_t in) const { return rows_[in]; }

  Distribution apply(const Distribution& input) const {
    detail::require(input.size() == input_size(), "ClassicalChannel::apply: alphabet mismatch");
    std::vector<double> out(output_size(), 0.0);
    for (std::size_t s = 0; s < input_size(); ++s)
      for (std::size_t w = 0; w < output_size(); ++w) out[w] += input[s] * (*this)(s, w);
    return Distribution::normalized(std::move(out));
  }

  /// (Z, S) -> (Z, W) where W is this channel applied to S.
  JointDistribution apply_to_cols(const JointDistribution& zs) const {
    detail::require(zs.cols() == input_size(), "ClassicalChannel: alphabet mismatch");
    std::vector<double> p(zs.rows() * output_size(), 0.0);
    for (std::size_t z = 0; z < zs.rows(); ++z)
      for (std::size_t s = 0; s < input_size(); ++s) {
        const double pzs = zs(z, s);
        if (pzs == 0.0) continue;
        for (std::size_t w = 0; w < output_size(); ++w) p[z * output_size() + w] += pzs * (*this)(s, w);
      }
    return JointDistribution(zs.rows(), output_size(), std::move(p));
  }

  /// This channel followed by `next`.
  ClassicalChannel then(const ClassicalChannel& next) const {
    detail::require(next.input_size() == output_size(), "ClassicalChannel::then: alphabet mismatch");
    std::vector<Distribution> rows;
    rows.reserve(input_size());
    for (std::size_t s = 0; s < input_size(); ++s) {
      std::vector<double> r(next.output_size(), 0.0);
      for (std::size_t w = 0; w < output_size(); ++w)
        for (std::size_t v = 0; v < next.output_size(); ++v) r[v] += (*this)(s, w) * next(w, v);
      rows.push_back(Distribution::normalized(std::move(r)));
    }
    return ClassicalChannel(std::move(rows));
  }

 private:
  std::vector<Distribution> rows_;
};

/// A finite set of channels sharing an input alphabet, of which an
/// observer may apply exactly one.
class SelectableChannel {
 public:
  explicit SelectableChannel(std::vector<ClassicalChannel> channels) : channels_(std::move(channels)) {
    detail::require(!channels_.empty(), "SelectableChannel: no channels");
    for (const auto& c : channels_)
      detail::require(c.input_size() == channels_.front().input_size(),
                      "SelectableChannel: channels must share the input alphabet");
  }

  /// Classical storage with `states` states. Reading it out through any
  /// further channel never increases distance from uniform, so the
  /// identity alone represents the full set of read-out channels.
  static SelectableChannel classical_device(std::size_t states) {
    return SelectableChannel({ClassicalChannel::identity(states)});
  }

  /// Two stored bits of which only one can be read. State index
  /// s = b1 + 2 * b2; channel m returns bit b_{m+1}.
  static SelectableChannel two_bit_device() {
    const std::vector<std::uint32_t> first{0, 1, 0, 1};
    const std::vector<std::uint32_t> second{0, 0, 1, 1};
    return SelectableChannel(
        {ClassicalChannel::deterministic(first, 2), ClassicalChannel::deterministic(second, 2)});
  }

  std::size_t size() const { return channels_.size(); }
  std::size_t input_size() const { return channels_.front().input_size(); }
  const ClassicalChannel& operator[](std::size_t i) const { return channels_[i]; }

 private:
  std::vector<ClassicalChannel> channels_;
};

// ---------------------------------------------------------------------------
// Distances

/// (1/2) sum |p - q|
inline double variational_distance(const Distribution& p, const Distribution& q) {
  detail::require(p.size() == q.size(), "variational_distance: alphabet mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

inline double dist_from_uniform(const Distribution& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  double s = 0.0;
  for (double v : p.probs()) s += std::abs(v - u);
  return 0.5 * s;
}

/// d(Z|W) for a joint with Z on rows and W on columns. Evaluated as
/// sum_w (1/2) sum_z |P(z,w) - P(w)/|Z||, so columns with P(w) = 0
/// contribute nothing and no division by P(w) occurs.
inline double cond_dist_from_uniform(const JointDistribution& zw) {
  const double inv = 1.0 / static_cast<double>(zw.rows());
  double total = 0.0;
  for (std::size_t w = 0; w < zw.cols(); ++w) {
    double pw = 0.0;
    for (std::size_t z = 0; z < zw.rows(); ++z) pw += zw(z, w);
    if (pw == 0.0) continue;
    double s = 0.0;
    for (std::size_t z = 0; z < zw.rows(); ++z) s += std::abs(zw(z, w) - pw * inv);
    total += 0.5 * s;
  }
  return total;
}

/// E_w[max_z P(z|w)] = sum_w max_z P(z,w).
inline double guessing_probability(const JointDistribution& zw) {
  double total = 0.0;
  for (std::size_t w = 0; w < zw.cols(); ++w) {
    double best = 0.0;
    for (std::size_t z = 0; z < zw.rows(); ++z) best = std::max(best, zw(z, w));
    total += best;
  }
  return total;
}

struct Coupling {
  /// Channel from (Z, W), flattened as z + |Z| * w, to Zbar.
  ClassicalChannel channel;
  /// Pr[Z = Zbar] = 1 - d(Z|W).
  double match_prob;
};

/// Maximal coupling of each conditional P_{Z|W=w} with the uniform
/// distribution. Zbar keeps Z = z with probability min(P(z|w), u) / P(z|w)
/// and otherwise is drawn from the normalized deficit (u - P(.|w))^+.
/// Zbar is uniform and independent of W.
inline Coupling maximal_coupling(const JointDistribution& zw) {
  const std::size_t nz = zw.rows();
  const double u = 1.0 / static_cast<double>(nz);
  std::vector<Distribution> rows;
  rows.reserve(nz * zw.cols());
  double match = 0.0;

  // rows are grouped by w: index z + nz * w
  std::vector<std::vector<double>> table(nz * zw.cols(), std::vector<double>(nz, 0.0));
  for (std::size_t w = 0; w < zw.cols(); ++w) {
    double pw = 0.0;
    for (std::size_t z = 0; z < nz; ++z) pw += zw(z, w);
    if (pw == 0.0) {
      for (std::size_t z = 0; z < nz; ++z) std::fill(table[z + nz * w].begin(), table[z + nz * w].end(), u);
      continue;
    }
    std::vector<double> cond(nz);
    for (std::size_t z = 0; z < nz; ++z) cond[z] = zw(z, w) / pw;
    std::vector<double> deficit(nz);
    double deficit_mass = 0.0;
    double overlap = 0.0;
    for (std::size_t z = 0; z < nz; ++z) {
      deficit[z] = std::max(0.0, u - cond[z]);
      deficit_mass += deficit[z];
      overlap += std::min(cond[z], u);
    }
    match += pw * overlap;
    for (std::size_t z = 0; z < nz; ++z) {
      auto& row = table[z + nz * w];
      if (cond[z] == 0.0) {
        std::fill(row.begin(), row.end(), u);
        continue;
      }
      const double keep = std::min(cond[z], u) / cond[z];
      row[z] += keep;
      if (keep < 1.0 && deficit_mass > 0.0)
        for (std::size_t zb = 0; zb < nz; ++zb) row[zb] += (1.0 - keep) * deficit[zb] / deficit_mass;
    }
  }
  for (auto& row : table) rows.push_back(Distribution::normalized(std::move(row)));
  return Coupling{ClassicalChannel(std::move(rows)), match};
}

/// d(Z | W(S)) maximized over the members of `k`; joint is (Z, S).
inline double selectable_dist(const SelectableChannel& k, const JointDistribution& zs) {
  detail::require(zs.cols() == k.input_size(), "selectable_dist: alphabet mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) best = std::max(best, cond_dist_from_uniform(k[i].apply_to_cols(zs)));
  return best;
}

/// Guessing probability with the best member channel.
inline double selectable_guessing_probability(const SelectableChannel& k, const JointDistribution& zs) {
  detail::require(zs.cols() == k.input_size(), "selectable_guessing_probability: alphabet mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) best = std::max(best, guessing_probability(k[i].apply_to_cols(zs)));
  return best;
}

struct SelectableCoupling {
  std::size_t channel_index;
  Coupling coupling;
};

/// Coupling built on the channel maximizing d(Z|W(S)) (lowest index on ties).
inline SelectableCoupling selectable_coupling(const SelectableChannel& k, const JointDistribution& zs) {
  detail::require(zs.cols() == k.input_size(), "selectable_coupling: alphabet mismatch");
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double d = cond_dist_from_uniform(k[i].apply_to_cols(zs));
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return {best, maximal_coupling(k[best].apply_to_cols(zs))};
}

struct CombinedResult {
  double value = 0.0;
  /// Maximizing channel index for each u (0 where P(u) = 0).
  std::vector<std::size_t> strategy;
};

/// E_u[max_{W in k} d(Z | W(S), U = u)] for a joint over (Z, S, U).
inline CombinedResult combined_dist(const SelectableChannel& k, const JointDistribution3& zsu) {
  detail::require(zsu.size_b() == k.input_size(), "combined_dist: alphabet mismatch");
  const std::size_t nz = zsu.size_a();
  const double inv = 1.0 / static_cast<double>(nz);
  CombinedResult out;
  out.strategy.assign(zsu.size_c(), 0);

  for (std::size_t u = 0; u < zsu.size_c(); ++u) {
    double best = -1.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const ClassicalChannel& ch = k[i];
      // unnormalized sum_w (1/2) sum_z |P(z,w,u) - P(w,u)/|Z||
      double acc = 0.0;
      for (std::size_t w = 0; w < ch.output_size(); ++w) {
        std::vector<double> pzw(nz, 0.0);
        double pw = 0.0;
        for (std::size_t z = 0; z < nz; ++z) {
          for (std::size_t s = 0; s < k.input_size(); ++s) pzw[z] += zsu(z, s, u) * ch(s, w);
          pw += pzw[z];
        }
        if (pw == 0.0) continue;
        double sum = 0.0;
        for (std::size_t z = 0; z < nz; ++z) sum += std::abs(pzw[z] - pw * inv);
        acc += 0.5 * sum;
      }
      if (acc > best) {
        best = acc;
        out.strategy[u] = i;
      }
    }
    out.value += best;
  }
  return out;
}

/// Joint of (g(X), S) from a joint of (X, S) and a function table g.
inline JointDistribution map_rows(const JointDistribution& xs, std::span<const std::uint32_t> g,
                                  std::size_t range) {
  detail::require(g.size() == xs.rows(), "map_rows: domain mismatch");
  std::vector<double> p(range * xs.cols(), 0.0);
  for (std::size_t x = 0; x < xs.rows(); ++x) {
    detail::require(g[x] < range, "map_rows: value out of range");
    for (std::size_t s = 0; s < xs.cols(); ++s) p[g[x] * xs.cols() + s] += xs(x, s);
  }
  return JointDistribution(range, xs.cols(), std::move(p));
}

/// Joint of (X, S) when S is produced from X by `storage`.
inline JointDistribution joint_with_channel(const Distribution& px, const ClassicalChannel& storage) {
  detail::require(px.size() == storage.input_size(), "joint_with_channel: alphabet mismatch");
  std::vector<double> p(px.size() * storage.output_size());
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t s = 0; s < storage.output_size(); ++s) p[x * storage.output_size() + s] = px[x] * storage(x, s);
  return JointDistribution(px.size(), storage.output_size(), std::move(p));
}

}  // namespace qmem
