#include "stickylab/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

namespace stickylab::seqspace {

TailedSequence TailedSequence::constant(double c, std::vector<double> prefix) {
  TailedSequence u;
  u.prefix = std::move(prefix);
  u.kind = TailKind::Constant;
  u.c = c;
  return u;
}

TailedSequence TailedSequence::periodic(std::vector<double> pattern, std::vector<double> prefix) {
  TailedSequence u;
  u.prefix = std::move(prefix);
  u.kind = TailKind::Periodic;
  u.pattern = std::move(pattern);
  return u;
}

TailedSequence TailedSequence::geometric(double ratio, double scale, std::vector<double> prefix) {
  TailedSequence u;
  u.prefix = std::move(prefix);
  u.kind = TailKind::Geometric;
  u.ratio = ratio;
  u.scale = scale;
  return u;
}

TailedSequence TailedSequence::unit(std::uint64_t n) {
  TailedSequence u;
  u.prefix.assign(n + 1, 0.0);
  u.prefix[n] = 1.0;
  return u;
}

double TailedSequence::operator()(std::uint64_t k) const {
  if (k < prefix.size()) return prefix[k];
  const std::uint64_t j = k - prefix.size();
  switch (kind) {
    case TailKind::Zero: return 0.0;
    case TailKind::Constant: return c;
    case TailKind::Periodic: return pattern[j % pattern.size()];
    case TailKind::Geometric: return scale * std::pow(ratio, static_cast<double>(j));
  }
  return 0.0;
}

double TailedSequence::limsup_abs() const {
  switch (kind) {
    case TailKind::Constant: return std::abs(c);
    case TailKind::Periodic: {
      double m = 0.0;
      for (double p : pattern) m = std::max(m, std::abs(p));
      return m;
    }
    default: return 0.0;
  }
}

double TailedSequence::sup_abs() const {
  double m = limsup_abs();
  for (double p : prefix) m = std::max(m, std::abs(p));
  if (kind == TailKind::Geometric) m = std::max(m, std::abs(scale));
  return m;
}

void TailedSequence::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(prefix.begin(), prefix.end(), finite)) throw Error("sequence prefix must be finite");
  switch (kind) {
    case TailKind::Zero: break;
    case TailKind::Constant:
      if (!finite(c)) throw Error("constant tail must be finite");
      break;
    case TailKind::Periodic:
      if (pattern.empty()) throw Error("periodic tail needs a non-empty pattern");
      if (!std::all_of(pattern.begin(), pattern.end(), finite)) throw Error("periodic tail must be finite");
      break;
    case TailKind::Geometric:
      if (!(std::abs(ratio) < 1.0)) throw Error("geometric tail needs |ratio| < 1");
      if (!finite(scale)) throw Error("geometric tail scale must be finite");
      break;
  }
}

TailedSequence TailedSequence::rebased(std::size_t k0) const {
  if (k0 < prefix.size()) throw Error("rebase target shorter than the prefix");
  TailedSequence u = *this;
  const std::size_t shift = k0 - prefix.size();
  for (std::size_t k = prefix.size(); k < k0; ++k) u.prefix.push_back((*this)(k));
  if (kind == TailKind::Periodic) {
    const std::size_t L = pattern.size();
    for (std::size_t i = 0; i < L; ++i) u.pattern[i] = pattern[(i + shift) % L];
  } else if (kind == TailKind::Geometric) {
    u.scale = scale * std::pow(ratio, static_cast<double>(shift));
  }
  return u;
}

TailedSequence TailedSequence::scaled(double lambda) const {
  TailedSequence u = *this;
  for (double& p : u.prefix) p *= lambda;
  for (double& p : u.pattern) p *= lambda;
  u.c *= lambda;
  u.scale *= lambda;
  return u;
}

TailedSequence TailedSequence::shifted() const {
  TailedSequence u = prefix.empty() ? rebased(1) : *this;
  u.prefix.erase(u.prefix.begin());
  return u;
}

json TailedSequence::to_json() const {
  json tail;
  switch (kind) {
    case TailKind::Zero: tail = {{"kind", "zero"}}; break;
    case TailKind::Constant: tail = {{"kind", "constant"}, {"c", c}}; break;
    case TailKind::Periodic: tail = {{"kind", "periodic"}, {"pattern", pattern}}; break;
    case TailKind::Geometric: tail = {{"kind", "geometric"}, {"ratio", ratio}, {"scale", scale}}; break;
  }
  return json{{"prefix", prefix}, {"tail", tail}};
}

TailedSequence TailedSequence::from_json(const json& j) {
  TailedSequence u;
  if (!j.is_object()) throw Error("sequence JSON must be an object with 'prefix' and 'tail'");
  for (const auto& [key, val] : j.items())
    if (key != "prefix" && key != "tail") throw Error("unexpected key '" + key + "' in sequence JSON (expected prefix, tail)");
  try {
    u.prefix = j.value("prefix", std::vector<double>{});
    const json tail = j.value("tail", json{{"kind", "zero"}});
    const std::string kind = tail.at("kind").get<std::string>();
    if (kind == "zero") {
      u.kind = TailKind::Zero;
    } else if (kind == "constant") {
      u.kind = TailKind::Constant;
      u.c = tail.at("c").get<double>();
    } else if (kind == "periodic") {
      u.kind = TailKind::Periodic;
      u.pattern = tail.at("pattern").get<std::vector<double>>();
    } else if (kind == "geometric") {
      u.kind = TailKind::Geometric;
      u.ratio = tail.at("ratio").get<double>();
      u.scale = tail.value("scale", 1.0);
    } else {
      throw Error("unknown tail kind '" + kind + "' (expected zero, constant, periodic, geometric)");
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed sequence JSON: ") + e.what());
  }
  u.validate();
  return u;
}

// ------------------------------------------------------------------- norms

namespace {

// sum_{j>=0} 2^-j |tail(j)| for a tail starting at j = 0.
double tail_weight(const TailedSequence& u) {
  switch (u.kind) {
    case TailKind::Zero: return 0.0;
    case TailKind::Constant: return 2.0 * std::abs(u.c);
    case TailKind::Periodic: {
      const std::size_t L = u.pattern.size();
      double s = 0.0;
      for (std::size_t i = 0; i < L; ++i) s += std::ldexp(std::abs(u.pattern[i]), -static_cast<int>(i));
      return s / (1.0 - std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(L, 1100))));
    }
    case TailKind::Geometric: return std::abs(u.scale) / (1.0 - std::abs(u.ratio) / 2.0);
  }
  return 0.0;
}

std::vector<double> as_pattern(const TailedSequence& u) {
  switch (u.kind) {
    case TailKind::Constant: return {u.c};
    case TailKind::Periodic: return u.pattern;
    default: return {0.0};
  }
}

constexpr std::size_t kMaxPeriod = 1u << 20;

// a*u + b*v with both already rebased to the same K; nullopt if the tail is
// not representable.
std::optional<TailedSequence> combine_aligned(const TailedSequence& u, double a, const TailedSequence& v, double b) {
  TailedSequence w;
  w.prefix.resize(u.K());
  for (std::size_t k = 0; k < u.K(); ++k) w.prefix[k] = a * u.prefix[k] + b * v.prefix[k];
  const bool ug = u.kind == TailKind::Geometric, vg = v.kind == TailKind::Geometric;
  if (ug || vg) {
    if (ug && vg && u.ratio == v.ratio) {
      w.kind = TailKind::Geometric;
      w.ratio = u.ratio;
      w.scale = a * u.scale + b * v.scale;
      return w;
    }
    if (ug && v.kind == TailKind::Zero) return w.kind = TailKind::Geometric, w.ratio = u.ratio, w.scale = a * u.scale, w;
    if (vg && u.kind == TailKind::Zero) return w.kind = TailKind::Geometric, w.ratio = v.ratio, w.scale = b * v.scale, w;
    return std::nullopt;
  }
  if (u.kind == TailKind::Zero && v.kind == TailKind::Zero) return w;
  const auto pu = as_pattern(u), pv = as_pattern(v);
  const std::size_t L = std::lcm(pu.size(), pv.size());
  if (L > kMaxPeriod) return std::nullopt;
  std::vector<double> p(L);
  for (std::size_t i = 0; i < L; ++i) p[i] = a * pu[i % pu.size()] + b * pv[i % pv.size()];
  if (L == 1) {
    w.kind = TailKind::Constant;
    w.c = p[0];
  } else {
    w.kind = TailKind::Periodic;
    w.pattern = std::move(p);
  }
  return w;
}

// limsup |a*u + b*v| with geometric tails treated as their limit 0.
double combined_limsup(const TailedSequence& u, double a, const TailedSequence& v, double b) {
  const auto pu = as_pattern(u), pv = as_pattern(v);
  const std::size_t L = std::lcm(pu.size(), pv.size());
  double m = 0.0;
  for (std::size_t i = 0; i < L; ++i) m = std::max(m, std::abs(a * pu[i % pu.size()] + b * pv[i % pv.size()]));
  return m;
}

}  // namespace

double ls_norm(const TailedSequence& u) {
  u.validate();
  double s = 0.0;
  for (std::size_t k = 0; k < u.K(); ++k) s += std::ldexp(std::abs(u.prefix[k]), -static_cast<int>(std::min<std::size_t>(k, 2000)));
  s += std::ldexp(tail_weight(u), -static_cast<int>(std::min<std::size_t>(u.K(), 2000)));
  return s + u.limsup_abs();
}

double ls_norm_combination(const TailedSequence& u0, double a, const TailedSequence& v0, double b) {
  const std::size_t K = std::max(u0.K(), v0.K());
  const TailedSequence u = u0.rebased(K), v = v0.rebased(K);
  if (auto w = combine_aligned(u, a, v, b)) return ls_norm(*w);
  // Weights below 2^-1100 vanish in double precision.
  double s = 0.0;
  for (std::size_t k = 0; k < K + 1100; ++k)
    s += std::ldexp(std::abs(a * u(k) + b * v(k)), -static_cast<int>(std::min<std::size_t>(k, 2000)));
  return s + combined_limsup(u, a, v, b);
}

double sup_norm(const TailedSequence& u) { return u.sup_abs(); }

double l1_pairing(const TailedSequence& u0, const TailedSequence& a0) {
  if (a0.kind == TailKind::Constant || a0.kind == TailKind::Periodic) {
    if (a0.limsup_abs() != 0.0) throw Error("l1 pairing needs a summable weight sequence");
  }
  const std::size_t K = std::max(u0.K(), a0.K());
  const TailedSequence u = u0.rebased(K), a = a0.rebased(K);
  double s = 0.0;
  for (std::size_t k = 0; k < K; ++k) s += a.prefix[k] * u.prefix[k];
  if (a.kind != TailKind::Geometric) return s;
  const double r = a.ratio, sc = a.scale;
  switch (u.kind) {
    case TailKind::Zero: return s;
    case TailKind::Constant: return s + u.c * sc / (1.0 - r);
    case TailKind::Periodic: {
      const std::size_t L = u.pattern.size();
      double acc = 0.0;
      for (std::size_t i = 0; i < L; ++i) acc += std::pow(r, static_cast<double>(i)) * u.pattern[i];
      return s + sc * acc / (1.0 - std::pow(r, static_cast<double>(L)));
    }
    case TailKind::Geometric: return s + sc * u.scale / (1.0 - r * u.ratio);
  }
  return s;
}

// ---------------------------------------------------------------- Cauchy

Verdict ls_cauchy(const SequenceFamilyFn& fam, std::uint64_t n_max, std::uint64_t m_max,
                  const std::vector<double>& eps_in) {
  if (n_max < 4 || m_max < 4) throw Error("ls_cauchy needs n_max, m_max >= 4");
  const std::vector<double> eps_ladder = eps_in.empty() ? ResolutionSchedule::defaults().eps_ladder : eps_in;
  std::vector<TailedSequence> u(n_max + 1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    u[n] = fam(n);
    u[n].validate();
  }
  std::map<std::uint64_t, TailedSequence> far;
  auto member = [&](std::uint64_t m) -> const TailedSequence& {
    auto it = far.find(m);
    if (it == far.end()) it = far.emplace(m, fam(m)).first;
    return it->second;
  };
  std::vector<double> weighted(n_max + 1, 0.0), lim(n_max + 1, 0.0);
  for (std::uint64_t k = 0; k < m_max; ++k) {
    const std::uint64_t M = std::max(m_max, 2 * k);
    const TailedSequence& a = member(M);
    const TailedSequence& b = member(2 * M);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const double un = u[n](k);
      const double vk = std::max(std::abs(a(k) - un), std::abs(b(k) - un));
      weighted[n] += std::ldexp(vk, -static_cast<int>(k));
      if (k > m_max / 2) lim[n] = std::max(lim[n], vk);
    }
    // Tail members are only needed for this k and the next.
    for (auto it = far.begin(); it != far.end();) it = it->first < M ? far.erase(it) : std::next(it);
  }
  std::vector<double> norm(n_max + 1);
  for (std::uint64_t n = 1; n <= n_max; ++n) norm[n] = weighted[n] + lim[n];

  Verdict v;
  v.schedule = ResolutionSchedule::defaults();
  v.schedule.eps_ladder = eps_ladder;
  json rungs = json::array();
  bool all = true;
  double first_fail = 0.0;
  for (double eps : eps_ladder) {
    std::uint64_t N = n_max + 1;
    while (N > 1 && norm[N - 1] < eps) --N;
    if (N <= n_max / 2) {
      rungs.push_back({{"eps", eps}, {"N", N}});
    } else if (all) {
      all = false;
      first_fail = eps;
    }
  }
  json values = json::array();
  for (std::uint64_t n = 1; n <= n_max; ++n) values.push_back(norm[n]);
  if (all) {
    v.outcome = Outcome::Holds;
    v.certificate = json{{"rungs", rungs}, {"norms", values}};
    return v;
  }
  std::uint64_t arg = n_max / 2 + 1;
  for (std::uint64_t n = n_max / 2 + 1; n <= n_max; ++n)
    if (lim[n] < lim[arg]) arg = n;
  if (lim[arg] >= first_fail) {
    v.outcome = Outcome::Fails;
    v.witness = json{{"eps", first_fail}, {"n", arg}, {"lower_bound", lim[arg]}, {"norm", norm[arg]}};
  } else {
    v.outcome = Outcome::Inconclusive;
  }
  v.certificate = json{{"rungs", rungs}, {"norms", values}};
  return v;
}

// ------------------------------------------------------------ closedness

std::string Space::name() const {
  switch (kind) {
    case SpaceKind::C0: return "c0";
    case SpaceKind::C: return "c";
    case SpaceKind::Lp: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "l%g", p);
      return buf;
    }
  }
  return "?";
}

bool Space::contains(const TailedSequence& u) const {
  switch (kind) {
    case SpaceKind::C0: return u.limsup_abs() == 0.0;
    case SpaceKind::C:
      if (u.kind != TailKind::Periodic) return true;
      return std::all_of(u.pattern.begin(), u.pattern.end(), [&](double x) { return x == u.pattern.front(); });
    case SpaceKind::Lp:
      if (std::isinf(p)) return true;  // every tailed sequence is bounded
      return u.limsup_abs() == 0.0;    // zero or geometric tails are p-summable
  }
  return false;
}

Space Space::from_string(const std::string& s) {
  if (s == "c0") return {SpaceKind::C0, 0.0};
  if (s == "c") return {SpaceKind::C, 0.0};
  if (s.rfind("lp:", 0) == 0) {
    const double p = std::stod(s.substr(3));
    if (!(p > 0.0)) throw Error("lp needs p > 0");
    return {SpaceKind::Lp, p};
  }
  if (s == "linf") return {SpaceKind::Lp, INFINITY};
  throw Error("unknown space '" + s + "' (expected c0, c, lp:<p>, linf)");
}

Verdict closedness_probe(const Space& space, const SequenceFamilyFn& fam, const TailedSequence& limit,
                         std::uint64_t n_max) {
  limit.validate();
  std::vector<double> dist(n_max + 1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const TailedSequence un = fam(n);
    un.validate();
    if (!(space.kind == SpaceKind::Lp && std::isinf(space.p)) && !space.contains(un))
      throw Error("member n=" + std::to_string(n) + " is not in " + space.name());
    dist[n] = ls_norm_combination(un, 1.0, limit, -1.0);
  }
  Verdict v;
  v.schedule = ResolutionSchedule::defaults();
  const Verdict cauchy = ls_cauchy(fam, n_max);
  double worst = 0.0;
  std::uint64_t arg = n_max / 2 + 1;
  for (std::uint64_t n = n_max / 2 + 1; n <= n_max; ++n)
    if (dist[n] > worst) worst = dist[n], arg = n;
  const double eps_min = *std::min_element(v.schedule.eps_ladder.begin(), v.schedule.eps_ladder.end());
  if (!cauchy.holds() || !(worst < eps_min)) {
    v.outcome = Outcome::Fails;
    v.witness = json{{"reason", "not an l_s limit"}, {"n", arg}, {"distance", dist[arg]},
                     {"cauchy", to_string(cauchy.outcome)}};
    return v;
  }
  const bool in = (space.kind == SpaceKind::Lp && std::isinf(space.p)) || space.contains(limit);
  v.certificate = json{{"space", space.name()}, {"distance_at_n_max", dist[n_max]}, {"limit_in_space", in}};
  if (in) {
    v.outcome = Outcome::Holds;
  } else {
    v.outcome = Outcome::Fails;
    v.witness = json{{"reason", "limit not in " + space.name()}, {"limit", limit.to_json()}};
  }
  return v;
}

}  // namespace stickylab::seqspace
