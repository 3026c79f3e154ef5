#include "dtdd/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <sstream>

#include "dtdd/error.hpp"

namespace dtdd {

namespace {

// Uniform on the open interval (0, 1) from the top 53 bits.
double unit_open(std::uint64_t bits) { return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53; }
double unit_open(Rng& rng) { return unit_open(rng()); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Direction uniform of one cell of one tiling, a pure function of the drop's
// cell seed so every variant sees the same coin for the same cell.
double cell_uniform(std::uint64_t cell_seed, double rho, HexCoord c) {
  std::uint64_t h = splitmix64(cell_seed ^ std::bit_cast<std::uint64_t>(rho));
  h = splitmix64(h ^ static_cast<std::uint32_t>(c.q));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.r)) << 32));
  return unit_open(h);
}

// Exp(1) marks summed: Gamma(k, 1) for integer k >= 1.
double gamma_int(int k, Rng& rng) {
  double prod = 1.0;
  for (int i = 0; i < k; ++i) prod *= unit_open(rng);
  return -std::log(prod);
}

std::uint64_t uniform_index(std::uint64_t n, Rng& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

double path_gain(double d2, double alpha) {
  if (alpha == 4.0) return 1.0 / (d2 * d2);
  return std::pow(d2, -0.5 * alpha);
}

double norm2(Point p) { return p.x * p.x + p.y * p.y; }

// Nearest-SAP lookup over a square split into buckets. Each bucket lazily
// collects the SAPs that can be nearest to some point inside it, sorted by
// distance from the bucket, so a query scans a short list and stops early.
class SapGrid {
 public:
  SapGrid(const std::vector<Point>& saps, double side) : saps_(saps), half_(0.5 * side) {
    const double n = std::max<double>(1.0, static_cast<double>(saps.size()));
    dim_ = std::clamp(static_cast<int>(std::sqrt(n / 2.0)), 1, 2048);
    h_ = side / dim_;
    const std::size_t buckets = static_cast<std::size_t>(dim_) * dim_;
    start_.assign(buckets + 1, 0);
    for (const Point& p : saps) ++start_[bucket(p) + 1];
    for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
    items_.resize(saps.size());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (int i = 0; i < static_cast<int>(saps.size()); ++i) items_[fill[bucket(saps[i])]++] = i;
    lists_.assign(buckets, {-1, -1});
  }

  int dim() const { return dim_; }
  double bucket_side() const { return h_; }
  bool inside(Point p) const { return std::abs(p.x) <= half_ && std::abs(p.y) <= half_; }
  int bucket(Point p) const { return coord(p.y) * dim_ + coord(p.x); }
  Point bucket_corner(int b) const { return {(b % dim_) * h_ - half_, (b / dim_) * h_ - half_}; }

  int nearest(Point p) {
    if (saps_.empty()) return -1;
    if (!inside(p)) return brute_force(p);
    const auto [lo, hi] = candidates(bucket(p));
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int k = lo; k < hi; ++k) {
      if (cand_[k].min_d2 > best_d2) break;
      const double dx = cand_pts_[k].x - p.x, dy = cand_pts_[k].y - p.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2 || (d2 == best_d2 && cand_[k].id < best)) {
        best_d2 = d2;
        best = cand_[k].id;
      }
    }
    return best;
  }

  bool is_candidate(int b, int sap) {
    const auto [lo, hi] = candidates(b);
    for (int k = lo; k < hi; ++k)
      if (cand_[k].id == sap) return true;
    return false;
  }

 private:
  struct Candidate {
    double min_d2;  // squared distance from the bucket
    int id;
  };

  std::pair<int, int> candidates(int b) {
    if (lists_[b].first < 0) build(b);
    return lists_[b];
  }

  void build(int b) {
    const int bx = b % dim_, by = b / dim_;
    const double x0 = bx * h_ - half_, y0 = by * h_ - half_;
    auto max_d2 = [&](Point s) {
      const double dx = std::max(std::abs(s.x - x0), std::abs(s.x - x0 - h_));
      const double dy = std::max(std::abs(s.y - y0), std::abs(s.y - y0 - h_));
      return dx * dx + dy * dy;
    };
    auto min_d2 = [&](Point s) {
      const double dx = s.x < x0 ? x0 - s.x : (s.x > x0 + h_ ? s.x - x0 - h_ : 0.0);
      const double dy = s.y < y0 ? y0 - s.y : (s.y > y0 + h_ ? s.y - y0 - h_ : 0.0);
      return dx * dx + dy * dy;
    };
    // Every point of the bucket has a SAP within sqrt(bound); ring r lies
    // at least (r - 1) buckets away.
    double bound = std::numeric_limits<double>::infinity();
    int rings = 0;
    for (int r = 0; r <= dim_; ++r) {
      const double gap = (r - 1) * h_;
      if (gap > 0.0 && gap * gap > bound) break;
      for_ring(bx, by, r, [&](int j) { bound = std::min(bound, max_d2(saps_[j])); });
      rings = r;
    }
    const int first = static_cast<int>(cand_.size());
    for (int r = 0; r <= rings; ++r) {
      for_ring(bx, by, r, [&](int j) {
        const double d2 = min_d2(saps_[j]);
        if (d2 <= bound) cand_.push_back({d2, j});
      });
    }
    std::sort(cand_.begin() + first, cand_.end(), [](const Candidate& a, const Candidate& c) {
      return a.min_d2 < c.min_d2 || (a.min_d2 == c.min_d2 && a.id < c.id);
    });
    for (std::size_t k = first; k < cand_.size(); ++k) cand_pts_.push_back(saps_[cand_[k].id]);
    lists_[b] = {first, static_cast<int>(cand_.size())};
  }

  template <class F>
  void for_ring(int bx, int by, int r, F&& f) const {
    for (int iy = by - r; iy <= by + r; ++iy) {
      if (iy < 0 || iy >= dim_) continue;
      const int step = (r == 0 || iy == by - r || iy == by + r) ? 1 : 2 * r;
      for (int ix = bx - r; ix <= bx + r; ix += step) {
        if (ix < 0 || ix >= dim_) continue;
        const int b = iy * dim_ + ix;
        for (int k = start_[b]; k < start_[b + 1]; ++k) f(items_[k]);
      }
    }
  }

  int brute_force(Point p) const {
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(saps_.size()); ++j) {
      const double d2 = norm2(Point{saps_[j].x - p.x, saps_[j].y - p.y});
      if (d2 < best_d2) {
        best_d2 = d2;
        best = j;
      }
    }
    return best;
  }

  int coord(double v) const { return std::clamp(static_cast<int>(std::floor((v + half_) / h_)), 0, dim_ - 1); }

  const std::vector<Point>& saps_;
  double half_;
  int dim_ = 1;
  double h_ = 1.0;
  std::vector<int> start_;
  std::vector<int> items_;
  std::vector<std::pair<int, int>> lists_;
  std::vector<Candidate> cand_;
  std::vector<Point> cand_pts_;
};

struct Grouped {
  Association assoc;
  std::vector<int> start;    // per SAP segment into `members`
  std::vector<int> members;  // MU indices; the served ones lead each segment
};

std::vector<int> nearest_all(const std::vector<Point>& mus, SapGrid& grid) {
  std::vector<int> nearest(mus.size());
  for (std::size_t i = 0; i < mus.size(); ++i) nearest[i] = grid.nearest(mus[i]);
  return nearest;
}

// Groups MUs by nearest SAP (ascending MU index within a segment).
Grouped group(std::vector<int> nearest, std::size_t n_saps) {
  Grouped g;
  g.start.assign(n_saps + 1, 0);
  for (int s : nearest)
    if (s >= 0) ++g.start[s + 1];
  for (std::size_t i = 1; i < g.start.size(); ++i) g.start[i] += g.start[i - 1];
  g.members.resize(g.start.back());
  std::vector<int> fill(g.start.begin(), g.start.end() - 1);
  for (int i = 0; i < static_cast<int>(nearest.size()); ++i)
    if (nearest[i] >= 0) g.members[fill[nearest[i]]++] = i;
  g.assoc.nearest = std::move(nearest);
  return g;
}

// Applies the per-SAP cap. When `pinned` >= 0 that MU stays served.
void cap(Grouped& g, int n_cap, Rng& rng, int pinned) {
  Association& a = g.assoc;
  const std::size_t n_saps = g.start.size() - 1;
  a.served.assign(a.nearest.size(), false);
  a.served_count.assign(n_saps, 0);
  for (std::size_t s = 0; s < n_saps; ++s) {
    int* seg = g.members.data() + g.start[s];
    const int k = g.start[s + 1] - g.start[s];
    const int first = (pinned >= 0 && k > 0 && seg[0] == pinned) ? 1 : 0;
    if (k > n_cap) {
      for (int i = first; i < n_cap; ++i) {
        const int j = i + static_cast<int>(uniform_index(static_cast<std::uint64_t>(k - i), rng));
        std::swap(seg[i], seg[j]);
      }
    }
    const int n = std::min(k, n_cap);
    a.served_count[s] = n;
    for (int i = 0; i < n; ++i) a.served[seg[i]] = true;
  }
}

// Variant-independent part of a drop.
struct Realization {
  std::vector<Point> saps;
  std::vector<int> served_count;
  int typical_sap = 0;  // serving SAP (DL) or the typical SAP (UL)
  int n0 = 0;
  double r0 = 0.0;
  std::uint64_t cell_seed = 0;
  std::vector<double> gain_uniforms;  // desired-gain exponentials share these
  // Interferer contributions before transmit power, with their SAP index.
  std::vector<std::pair<int, double>> sap_terms;
  std::vector<std::pair<int, double>> mu_terms;
};

std::optional<Realization> try_realize(const NetworkConfig& cfg, Direction dir, int max_gain_terms, Rng& rng,
                                       const DropOptions& opts) {
  Realization z;
  std::vector<Point> mus;
  int desired_mu = 0;
  std::optional<Grouped> grouped;
  if (dir == Direction::downlink) {
    z.saps = sample_ppp(cfg.lambda_s, opts.window, rng);
    if (opts.fixed_serving_distance) {
      const double r0 = *opts.fixed_serving_distance;
      std::erase_if(z.saps, [&](const Point& p) { return norm2(p) < r0 * r0; });
      z.saps.insert(z.saps.begin(), Point{r0, 0.0});
    }
    if (z.saps.empty()) return std::nullopt;
    SapGrid grid(z.saps, opts.window.side);
    z.typical_sap = grid.nearest(Point{0.0, 0.0});

    // MUs in the buckets that may hold the serving SAP's cell come first, so
    // the typical-served test below needs nothing else.
    const int dim = grid.dim();
    const double h = grid.bucket_side();
    std::vector<char> near_cell(static_cast<std::size_t>(dim) * dim, 0);
    std::vector<int> stack{grid.bucket(Point{0.0, 0.0})};
    near_cell[stack.back()] = 1;
    std::vector<int> region;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      region.push_back(b);
      const int bx = b % dim, by = b / dim;
      for (const auto& [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const int nx = bx + dx, ny = by + dy;
        if (nx < 0 || ny < 0 || nx >= dim || ny >= dim) continue;
        const int nb = ny * dim + nx;
        if (near_cell[nb] || !grid.is_candidate(nb, z.typical_sap)) continue;
        near_cell[nb] = 1;
        stack.push_back(nb);
      }
    }
    std::sort(region.begin(), region.end());
    mus.push_back(Point{0.0, 0.0});
    std::poisson_distribution<long> per_bucket(cfg.lambda_u * h * h);
    for (int b : region) {
      const Point c = grid.bucket_corner(b);
      for (long i = per_bucket(rng); i > 0; --i) mus.push_back({c.x + unit_open(rng) * h, c.y + unit_open(rng) * h});
    }
    int k = 0;
    for (const Point& m : mus) k += grid.nearest(m) == z.typical_sap;
    // Condition on the typical MU being served: a congested SAP keeps it
    // with probability N/k. The oracle mode conditions on r0 alone.
    if (!opts.fixed_serving_distance && k > cfg.n_max &&
        uniform_index(static_cast<std::uint64_t>(k), rng) >= static_cast<std::uint64_t>(cfg.n_max))
      return std::nullopt;

    // The rest of the MU process: the window process thinned to outside the region.
    for (const Point& m : sample_ppp(cfg.lambda_u, opts.window, rng))
      if (!near_cell[grid.bucket(m)]) mus.push_back(m);
    grouped = group(nearest_all(mus, grid), z.saps.size());
    cap(*grouped, cfg.n_max, rng, 0);
    z.n0 = grouped->assoc.served_count[z.typical_sap];
    z.r0 = std::sqrt(norm2(z.saps[z.typical_sap]));
  } else {
    z.saps.push_back(Point{0.0, 0.0});
    const std::vector<Point> others = sample_ppp(cfg.lambda_s, opts.window, rng);
    z.saps.insert(z.saps.end(), others.begin(), others.end());
    mus = sample_ppp(cfg.lambda_u, opts.window, rng);
    SapGrid grid(z.saps, opts.window.side);
    grouped = group(nearest_all(mus, grid), z.saps.size());
    if (grouped->start[1] == grouped->start[0]) return std::nullopt;
    cap(*grouped, cfg.n_max, rng, -1);
    z.typical_sap = 0;
    z.n0 = grouped->assoc.served_count[0];
    desired_mu = grouped->members[grouped->start[0] + uniform_index(static_cast<std::uint64_t>(z.n0), rng)];
    z.r0 = std::sqrt(norm2(mus[desired_mu]));
  }
  Grouped& g = *grouped;
  z.served_count = std::move(g.assoc.served_count);

  z.cell_seed = rng();
  // One draw seeds the desired-gain stream, so the main stream does not
  // depend on how many terms the largest variant needs.
  const std::uint64_t gain_seed = rng();
  z.gain_uniforms.resize(std::max(0, max_gain_terms - z.n0 + 1));
  for (std::size_t i = 0; i < z.gain_uniforms.size(); ++i)
    z.gain_uniforms[i] = unit_open(splitmix64(gain_seed + i * 0x9e3779b97f4a7c15ULL));

  // Fading marks for every potential interferer, drawn whatever the
  // directions turn out to be.
  for (int j = 0; j < static_cast<int>(z.saps.size()); ++j) {
    const int n = z.served_count[j];
    if (j == z.typical_sap || n == 0) continue;
    z.sap_terms.emplace_back(j, path_gain(norm2(z.saps[j]), cfg.alpha) * gamma_int(n, rng));
  }
  for (int i = 0; i < static_cast<int>(mus.size()); ++i) {
    if (!g.assoc.served[i]) continue;
    const int j = g.assoc.nearest[i];
    // The typical SAP's co-served MUs are nulled (UL) or share its DL cell.
    if (j == z.typical_sap) continue;
    z.mu_terms.emplace_back(j, path_gain(norm2(mus[i]), cfg.alpha) * gamma_int(1, rng));
  }
  return z;
}

DropResult evaluate(const Realization& z, const NetworkConfig& v, Direction dir, int attempts) {
  // Cluster direction of every SAP under this variant's tiling.
  std::vector<Direction> sap_dir(z.saps.size());
  const HexCoord forced = dir == Direction::downlink ? hex_index(z.saps[z.typical_sap], v.rho) : HexCoord{0, 0};
  for (std::size_t j = 0; j < z.saps.size(); ++j) {
    const HexCoord c = hex_index(z.saps[j], v.rho);
    if (c == forced) {
      sap_dir[j] = dir;
    } else {
      sap_dir[j] = cell_uniform(z.cell_seed, v.rho, c) < v.p_d ? Direction::downlink : Direction::uplink;
    }
  }
  double i_sap = 0.0, i_mu = 0.0;
  for (const auto& [j, g] : z.sap_terms)
    if (sap_dir[j] == Direction::downlink) i_sap += g;
  for (const auto& [j, g] : z.mu_terms)
    if (sap_dir[j] == Direction::uplink) i_mu += g;

  DropResult out;
  out.direction = dir;
  out.n0 = z.n0;
  out.serving_distance = z.r0;
  out.attempts = attempts;
  double prod = 1.0;
  for (int i = 0; i < v.m_antennas - z.n0 + 1; ++i) prod *= z.gain_uniforms[i];
  out.desired_gain = -std::log(prod);
  out.interference = v.p_s * i_sap + v.q_u * i_mu;
  const double signal = v.tx_power(dir) * path_gain(z.r0 * z.r0, v.alpha) * out.desired_gain;
  out.sinr = signal / (out.interference + v.noise);
  return out;
}

void check_variants(const NetworkConfig& base, const std::vector<NetworkConfig>& variants) {
  base.validate();
  if (variants.empty()) throw ConfigError("at least one variant required");
  for (const NetworkConfig& v : variants) {
    v.validate();
    if (v.lambda_s != base.lambda_s || v.lambda_u != base.lambda_u || v.n_max != base.n_max || v.alpha != base.alpha)
      throw ConfigError("drop variants must share lambda_s, lambda_u, n_max and alpha");
  }
}

}  // namespace

std::vector<Point> sample_ppp(double intensity, const Window& window, Rng& rng) {
  if (!(intensity >= 0.0) || !(window.side > 0.0)) throw ConfigError("sample_ppp: need intensity >= 0 and side > 0");
  std::vector<Point> pts;
  if (intensity == 0.0) return pts;
  const auto count = std::poisson_distribution<long>(intensity * window.area())(rng);
  pts.resize(static_cast<std::size_t>(count));
  for (Point& p : pts) {
    p.x = (unit_open(rng) - 0.5) * window.side;
    p.y = (unit_open(rng) - 0.5) * window.side;
  }
  return pts;
}

std::vector<Direction> assign_directions(const std::vector<HexCoord>& cells, double p_d, Rng& rng) {
  if (!(p_d >= 0.0 && p_d <= 1.0)) throw ConfigError("assign_directions: require 0 <= p_d <= 1");
  std::vector<Direction> dirs(cells.size());
  for (Direction& d : dirs) d = unit_open(rng) < p_d ? Direction::downlink : Direction::uplink;
  return dirs;
}

Association associate(const std::vector<Point>& mus, const std::vector<Point>& saps, int n_cap, Rng& rng) {
  if (n_cap < 1) throw ConfigError("associate: n_cap >= 1");
  double extent = 1.0;
  for (const auto* v : {&mus, &saps})
    for (const Point& p : *v) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  SapGrid grid(saps, 2.0 * extent * (1.0 + 1e-12));
  Grouped g = group(nearest_all(mus, grid), saps.size());
  cap(g, n_cap, rng, -1);
  return std::move(g.assoc);
}

std::vector<DropResult> run_drop_variants(const NetworkConfig& base, const std::vector<NetworkConfig>& variants,
                                          Direction dir, Rng& rng, const DropOptions& opts) {
  check_variants(base, variants);
  if (opts.fixed_serving_distance) {
    const double r0 = *opts.fixed_serving_distance;
    if (dir != Direction::downlink) throw ConfigError("fixed serving distance applies to DL drops only");
    if (!(r0 > 0.0 && r0 < 0.5 * opts.window.side)) throw ConfigError("fixed serving distance outside window");
  }
  int max_m = 0;
  for (const NetworkConfig& v : variants) max_m = std::max(max_m, v.m_antennas);
  for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    const std::optional<Realization> z = try_realize(base, dir, max_m, rng, opts);
    if (!z) continue;
    std::vector<DropResult> out;
    out.reserve(variants.size());
    for (const NetworkConfig& v : variants) out.push_back(evaluate(*z, v, dir, attempt));
    return out;
  }
  std::ostringstream os;
  os << "no served typical link after " << opts.max_attempts << " attempts";
  throw NumericalError(os.str());
}

DropResult run_drop(const NetworkConfig& cfg, Direction dir, Rng& rng, const DropOptions& opts) {
  return run_drop_variants(cfg, {cfg}, dir, rng, opts).front();
}

Rng drop_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::vector<std::vector<DropResult>> simulate_variants(const NetworkConfig& base,
                                                       const std::vector<NetworkConfig>& variants, Direction dir,
                                                       std::uint64_t iterations, std::uint64_t seed,
                                                       const DropOptions& opts) {
  check_variants(base, variants);
  if (iterations < 1) throw ConfigError("iterations >= 1");
  std::vector<std::vector<DropResult>> out(variants.size(), std::vector<DropResult>(iterations));
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(iterations);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      Rng rng = drop_rng(seed, static_cast<std::uint64_t>(i));
      std::vector<DropResult> r = run_drop_variants(base, variants, dir, rng, opts);
      for (std::size_t v = 0; v < r.size(); ++v) out[v][i] = r[v];
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<DropResult> simulate(const NetworkConfig& cfg, Direction dir, std::uint64_t iterations,
                                 std::uint64_t seed, const DropOptions& opts) {
  return std::move(simulate_variants(cfg, {cfg}, dir, iterations, seed, opts).front());
}

SimulationEstimate estimate(const NetworkConfig& cfg, Direction dir, const std::vector<DropResult>& drops) {
  const TierPmf pmf = tier_pmf(cfg);
  const double gamma = cfg.threshold(dir);
  std::vector<std::uint64_t> hits(cfg.n_max, 0), count(cfg.n_max, 0);
  std::uint64_t total_hits = 0;
  SimulationEstimate e;
  e.direction = dir;
  for (const DropResult& d : drops) {
    const bool ok = d.sinr > gamma;
    total_hits += ok;
    e.attempts += d.attempts;
    if (d.n0 >= 1 && d.n0 <= cfg.n_max) {
      hits[d.n0 - 1] += ok;
      ++count[d.n0 - 1];
    }
  }
  e.overall = proportion(total_hits, drops.size());
  e.per_n0.resize(cfg.n_max);
  double t = 0.0, var = 0.0;
  for (int n0 = 1; n0 <= cfg.n_max; ++n0) {
    e.per_n0[n0 - 1] = proportion(hits[n0 - 1], count[n0 - 1]);
    const Estimate& s = count[n0 - 1] > 0 ? e.per_n0[n0 - 1] : e.overall;
    const double w = pmf.weight(n0, cfg.serving_weights) * n0;
    t += w * s.mean;
    var += (w * s.half_width_95) * (w * s.half_width_95);
  }
  const double pre = cfg.direction_probability(dir) * cfg.lambda_s * std::log2(1.0 + gamma);
  e.throughput.mean = pre * t;
  e.throughput.half_width_95 = pre * std::sqrt(var);
  e.throughput.samples = drops.size();
  return e;
}

SimulationEstimate estimate(const NetworkConfig& cfg, Direction dir, std::uint64_t iterations, std::uint64_t seed,
                            const DropOptions& opts) {
  return estimate(cfg, dir, simulate(cfg, dir, iterations, seed, opts));
}

void write_drops_csv(std::ostream& os, const std::vector<DropResult>& drops) {
  os << "direction,n0,r0_m,sinr_linear,interference_w\n";
  os << std::setprecision(17);
  for (const DropResult& d : drops) {
    os << to_string(d.direction) << ',' << d.n0 << ',' << d.serving_distance << ',' << d.sinr << ','
       << d.interference << '\n';
  }
}

std::optional<std::string> window_advisory(const NetworkConfig& cfg, const Window& window, int rings) {
  const double needed = 2.0 * std::sqrt(static_cast<double>(rings)) * cfg.rho;
  if (window.side > needed) return std::nullopt;
  std::ostringstream os;
  os << "window side " << window.side << " m does not exceed 2*sqrt(" << rings << ")*rho = " << needed
     << " m; distant cluster rings are truncated";
  return os.str();
}

}  // namespace dtdd
