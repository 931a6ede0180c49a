#include "rrm/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "rrm/errors.hpp"

namespace rrm::sim {
namespace {

using std::numbers::pi;

constexpr long long kNever = std::numeric_limits<long long>::max() / 4;
// A free particle at distance d from the surface may take k steps at once
// when d >= kSkipSigmas * sqrt(6 k dt').
constexpr double kSkipSigmas = 6.0;

double sigma_of(double dt) { return std::sqrt(4.0 * dt); }

void require_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt' must be finite and > 0");
}

Vec3 gaussian3(Rng& rng, double sd) {
  boost::random::normal_distribution<double> n01;
  const double x = n01(rng);
  const double y = n01(rng);
  const double z = n01(rng);
  return {sd * x, sd * y, sd * z};
}

// First parameter s in [0, 1] with |p0 + s d| = 1, or a negative value.
double first_crossing(const Vec3& p0, const Vec3& d) {
  const double c = dot(p0, p0) - 1.0;
  if (c <= 0.0) return 0.0;
  const double b = dot(p0, d);
  if (b >= 0.0) return -1.0;
  const double a = dot(d, d);
  const double disc = b * b - a * c;
  if (disc < 0.0) return -1.0;
  const double s = c / (-b + std::sqrt(disc));
  return s <= 1.0 ? s : -1.0;
}

}  // namespace

Rng realization_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

double degradation_prob(double kd, double dt) {
  if (!(kd >= 0.0) || !(dt >= 0.0)) throw DomainError("kd' and dt' must be >= 0");
  return -std::expm1(-kd * dt);
}

double overlap_probability(double r, double dt) {
  if (!(r >= 1.0)) throw DomainError("r' must be >= 1");
  require_dt(dt);
  if (std::isinf(r)) return 0.0;
  const double s = sigma_of(dt);
  const double lo = (r - 1.0) / s;
  const double hi = (r + 1.0) / s;
  const double gauss = s / (2.0 * r * std::sqrt(pi)) * (std::exp(-hi * hi) - std::exp(-lo * lo));
  const double p = gauss + 0.5 * (std::erfc(lo) - std::erfc(hi));
  return std::clamp(p, 0.0, 1.0);
}

double rho_normalization(double dt) {
  require_dt(dt);
  const double upper = 1.0 + 8.0 * sigma_of(dt);
  auto f = [dt](double r) { return overlap_probability(r, dt) * r * r; };
  double err = 0.0;
  const double rho =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 1.0, upper, 10, 1e-12, &err);
  if (!(rho > 0.0) || err > 1e-8 * rho) {
    std::ostringstream msg;
    msg << "rho quadrature did not converge (estimate " << rho << ", error " << err << ")";
    throw ConvergenceError(msg.str());
  }
  return rho;
}

double forward_reaction_prob(double kf, double dt, double rho) {
  if (!(rho > 0.0)) throw DomainError("rho' must be > 0");
  require_dt(dt);
  if (std::isnan(kf) || kf < 0.0) throw DomainError("kf' must be >= 0");
  const double p = kf * dt / (4.0 * pi * rho);
  if (p > 1.0) {
    std::ostringstream msg;
    msg << "forward reaction probability " << p << " exceeds 1 (kf'=" << kf << ", dt'=" << dt
        << "); reduce dt'";
    throw StepSizeError(msg.str());
  }
  return p;
}

RebindSampler::RebindSampler(double dt) {
  require_dt(dt);
  const double upper = 1.0 + 8.0 * sigma_of(dt);
  radii_.resize(kTablePoints);
  cdf_.resize(kTablePoints);
  auto f = [dt](double r) { return overlap_probability(r, dt) * r * r; };
  const double h = (upper - 1.0) / static_cast<double>(kTablePoints - 1);
  radii_[0] = 1.0;
  cdf_[0] = 0.0;
  for (std::size_t i = 1; i < kTablePoints; ++i) {
    radii_[i] = 1.0 + h * static_cast<double>(i);
    cdf_[i] = cdf_[i - 1] + boost::math::quadrature::gauss<double, 10>::integrate(f, radii_[i - 1], radii_[i]);
  }
  radii_.back() = upper;
  const double total = cdf_.back();
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

double RebindSampler::operator()(Rng& rng) const {
  boost::random::uniform_01<double> u01;
  const double u = u01(rng);
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) return radii_.back();
  const std::size_t j = static_cast<std::size_t>(it - cdf_.begin());
  const double c0 = cdf_[j - 1], c1 = cdf_[j];
  const double w = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
  return radii_[j - 1] + w * (radii_[j] - radii_[j - 1]);
}

double RebindSampler::cdf(double r) const {
  if (r <= radii_.front()) return 0.0;
  if (r >= radii_.back()) return 1.0;
  auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
  const std::size_t j = static_cast<std::size_t>(it - radii_.begin());
  const double w = (r - radii_[j - 1]) / (radii_[j] - radii_[j - 1]);
  return cdf_[j - 1] + w * (cdf_[j] - cdf_[j - 1]);
}

double sample_rebind_radius(double dt, Rng& rng) { return RebindSampler(dt)(rng); }

void SimConfig::validate() const {
  params.validate();
  require_dt(dt);
  if (!(horizon >= dt) || !std::isfinite(horizon)) throw ConfigError("horizon' must be >= dt'");
  if (realizations < 1) throw ConfigError("realizations must be >= 1");
  if (level < 0 || level > 6) throw ConfigError("subdivision level must lie in [0, 6]");
  const long long faces = 20LL << (2 * level);
  if (receptors > faces) throw ConfigError("receptor count exceeds triangle count");
  if (bin_steps < 1) throw ConfigError("bin_steps must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (params.molecules != std::floor(params.molecules) || params.molecules > 1e8)
    throw ConfigError("molecule count must be a whole number <= 1e8");
}

long long SimConfig::total_steps() const {
  return std::max(1LL, static_cast<long long>(std::ceil(horizon / dt - 1e-9)));
}

std::vector<long long> SimConfig::bin_ends() const {
  const long long n = total_steps();
  std::vector<long long> ends;
  for (long long s = bin_steps; s <= n; s += bin_steps) ends.push_back(s);
  if (ends.empty() || ends.back() != n) ends.push_back(n);
  return ends;
}

Engine::Engine(const SimConfig& cfg)
    : cfg_(cfg),
      mesh_([&] {
        cfg.validate();
        ReceiverMesh m = build_mesh(cfg.level);
        const std::size_t M = cfg.receptors < 0 ? m.triangle_count() : static_cast<std::size_t>(cfg.receptors);
        return assign_receptors(std::move(m), M, cfg.seed);
      }()),
      rho_(rho_normalization(cfg.dt)),
      p_bind_(forward_reaction_prob(cfg.params.kf, cfg.dt, rho_)),
      rebind_(cfg.dt) {}

Realization::Realization(const Engine& engine, std::uint64_t index)
    : engine_(&engine), rng_(realization_rng(engine.config().seed, index)) {
  const SimConfig& cfg = engine.config();
  last_step_ = cfg.total_steps();
  step_sd_ = std::sqrt(2.0 * cfg.dt);
  wake_.resize(static_cast<std::size_t>(last_step_));
  release_.resize(static_cast<std::size_t>(last_step_));
  occupied_.assign(engine.mesh().triangle_count(), 0);

  const Vec3 origin = cfg.params.r0 * normalized(gaussian3(rng_, 1.0));
  const auto n = static_cast<std::size_t>(cfg.params.molecules);
  particles_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    particles_[i].pos = origin;
    particles_[i].free_steps_left = draw_countdown(cfg.params.kd);
    schedule(i, 0);
  }
  counts_.free = static_cast<long long>(n);
}

long long Realization::draw_countdown(double rate) {
  const double lambda = rate * engine_->config().dt;
  if (!(lambda > 0.0)) return kNever;
  boost::random::exponential_distribution<double> e1;
  const double k = std::ceil(e1(rng_) / lambda);
  if (!(k < static_cast<double>(kNever))) return kNever;
  return std::max(1LL, static_cast<long long>(k));
}

void Realization::schedule(std::uint32_t i, long long at) {
  if (at < last_step_) wake_[static_cast<std::size_t>(at)].push_back(i);
}

void Realization::step() {
  if (finished()) return;
  const auto s = static_cast<std::size_t>(step_);
  {
    std::vector<std::uint32_t> due;
    due.swap(wake_[s]);
    for (auto i : due) advance_free(i);
  }
  {
    std::vector<std::uint32_t> due;
    due.swap(release_[s]);
    for (auto i : due) release(i);
  }
  ++step_;
}

void Realization::advance_free(std::uint32_t i) {
  Particle& q = particles_[i];
  const SimConfig& cfg = engine_->config();
  if (q.free_steps_left == 1) {
    q.state = State::degraded;
    q.free_steps_left = 0;
    --counts_.free;
    ++counts_.degraded;
    return;
  }

  const double d = norm(q.pos) - 1.0;
  long long k = 1;
  if (d > 0.0) {
    const double reach = kSkipSigmas * kSkipSigmas * 6.0 * cfg.dt;
    k = static_cast<long long>(d * d / reach);
    k = std::min({std::max(k, 1LL), q.free_steps_left - 1, last_step_ - step_});
  }
  if (k >= 2) {
    const Vec3 next = q.pos + gaussian3(rng_, step_sd_ * std::sqrt(static_cast<double>(k)));
    if (dot(next, next) > 1.0) {
      q.pos = next;
      q.free_steps_left -= k;
      schedule(i, step_ + k);
      return;
    }
  }

  const Vec3 delta = gaussian3(rng_, step_sd_);
  q.free_steps_left -= 1;
  const double s = first_crossing(q.pos, delta);
  if (s < 0.0) {
    q.pos += delta;
    schedule(i, step_ + 1);
    return;
  }
  const Vec3 hit = normalized(q.pos + s * delta);
  const ReceiverMesh& mesh = engine_->mesh();
  const std::uint32_t face = mesh.locate(hit);
  const bool available = mesh.is_receptor(face) && !(cfg.occupancy && occupied_[face]);
  if (available && engine_->bind_prob() > 0.0) {
    boost::random::uniform_01<double> u01;
    if (u01(rng_) < engine_->bind_prob()) {
      bind(i, hit, face);
      return;
    }
  }
  schedule(i, step_ + 1);  // rejected or reflected: keep the pre-step position
}

void Realization::bind(std::uint32_t i, const Vec3& hit, std::uint32_t face) {
  Particle& q = particles_[i];
  q.state = State::bound;
  q.pos = hit;
  q.receptor = face;
  occupied_[face] = 1;
  --counts_.free;
  ++counts_.bound;
  const long long g = draw_countdown(engine_->config().params.kb);
  if (g != kNever) {
    const long long at = step_ + g - 1;
    if (at < last_step_) release_[static_cast<std::size_t>(at)].push_back(i);
  }
}

void Realization::release(std::uint32_t i) {
  Particle& q = particles_[i];
  q.state = State::free;
  occupied_[q.receptor] = 0;
  q.pos = engine_->rebind()(rng_) * q.pos;
  --counts_.bound;
  ++counts_.free;
  schedule(i, step_ + 1);
}

EnsembleResult run_ensemble(const SimConfig& cfg) {
  const Engine engine(cfg);
  const std::vector<long long> ends = cfg.bin_ends();
  const auto n_real = static_cast<std::size_t>(cfg.realizations);
  std::vector<std::vector<std::int32_t>> bound(n_real, std::vector<std::int32_t>(ends.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < n_real; r = next++) {
      Realization real(engine, r);
      std::size_t b = 0;
      while (!real.finished()) {
        real.step();
        if (real.steps_done() == ends[b]) bound[r][b++] = static_cast<std::int32_t>(real.counts().bound);
      }
    }
  };
  const int n_threads = std::min<int>(cfg.threads, cfg.realizations);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  EnsembleResult out;
  out.curve.meta = cfg.params;
  const auto n = static_cast<__int128>(n_real);
  for (std::size_t b = 0; b < ends.size(); ++b) {
    __int128 sum = 0, sumsq = 0;
    for (std::size_t r = 0; r < n_real; ++r) {
      sum += bound[r][b];
      sumsq += static_cast<__int128>(bound[r][b]) * bound[r][b];
    }
    const double mean = static_cast<double>(sum) / static_cast<double>(n);
    double se = 0.0;
    if (n > 1) {
      const __int128 spread = n * sumsq - sum * sum;  // n (n-1) var
      se = std::sqrt(static_cast<double>(spread) / static_cast<double>(n * (n - 1)) / static_cast<double>(n));
    }
    out.curve.times.push_back(static_cast<double>(ends[b]) * cfg.dt);
    out.curve.values.push_back(mean);
    out.std_error.push_back(se);
    out.counts.push_back(static_cast<long long>(n_real));
  }
  return out;
}

}  // namespace rrm::sim
