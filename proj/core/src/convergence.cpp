#include "stickylab/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "stickylab/parallel.hpp"

namespace stickylab::convergence {

namespace {

constexpr double kDecayRatio = 0.75;
constexpr double kDensity = 0.5;
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Status { Resolved, Decaying, Persistent, Undecided };

const char* status_name(Status s) {
  switch (s) {
    case Status::Resolved: return "resolved";
    case Status::Decaying: return "decaying";
    case Status::Persistent: return "persistent";
    case Status::Undecided: return "undecided";
  }
  return "undecided";
}

struct Rung {
  double eps = 0.0;
  Status status = Status::Undecided;
  std::uint64_t N = 0;
  double trend = 0.0;
  double density_base = 0.0;
  double density_doubled = 0.0;

  json to_json() const {
    json j{{"eps", eps}, {"status", status_name(status)}};
    if (status == Status::Resolved) j["N"] = N;
    else {
      j["trend"] = std::isfinite(trend) ? json(trend) : json(nullptr);
      j["density"] = {density_base, density_doubled};
    }
    return j;
  }
};

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

bool violates(double gap, double eps) { return !(gap < eps); }

// Classifies one (t, eps) rung from per-index gaps over sampled n in [1, 2 n_max].
Rung classify(const std::vector<std::uint64_t>& idx, const std::vector<double>& gap, double eps,
              std::uint64_t n_max) {
  Rung r;
  r.eps = eps;
  std::size_t last = idx.size();
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (violates(gap[i], eps)) last = i;
  if (last == idx.size()) {
    r.status = Status::Resolved;
    r.N = idx.front();
    return r;
  }
  if (last + 1 < idx.size() && idx[last + 1] <= n_max) {
    r.status = Status::Resolved;
    r.N = idx[last + 1];
    return r;
  }
  std::size_t base_n = 0, base_v = 0, dbl_n = 0, dbl_v = 0;
  std::vector<double> lo, hi;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::uint64_t n = idx[i];
    const bool v = violates(gap[i], eps);
    if (2 * n > n_max && n <= n_max) {
      ++base_n;
      base_v += v;
    }
    if (n > n_max) {
      ++dbl_n;
      dbl_v += v;
      hi.push_back(gap[i]);
    }
    if (4 * n > n_max && 2 * n <= n_max) lo.push_back(gap[i]);
  }
  r.density_base = base_n ? static_cast<double>(base_v) / static_cast<double>(base_n) : 0.0;
  r.density_doubled = dbl_n ? static_cast<double>(dbl_v) / static_cast<double>(dbl_n) : 0.0;
  const double ml = median(lo), mh = median(hi);
  r.trend = ml > 0.0 ? mh / ml : (mh > 0.0 ? kInf : 1.0);
  if (r.trend < kDecayRatio) r.status = Status::Decaying;
  else if (r.density_base >= kDensity && r.density_doubled >= kDensity) r.status = Status::Persistent;
  else r.status = Status::Undecided;
  return r;
}

// Members are built once per index and shared between probe points.
class MemberCache {
 public:
  explicit MemberCache(const SequenceFamily& fam) : fam_(fam) {}
  FunctionOracle get(std::uint64_t n) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    FunctionOracle f = fam_(n);
    std::lock_guard lock(mu_);
    return cache_.emplace(n, std::move(f)).first->second;
  }

 private:
  const SequenceFamily& fam_;
  std::mutex mu_;
  std::map<std::uint64_t, FunctionOracle> cache_;
};

std::vector<FunctionOracle> build_members(const SequenceFamily& fam, const std::vector<std::uint64_t>& idx) {
  std::vector<std::optional<FunctionOracle>> tmp(idx.size());
  parallel_for(idx.size(), [&](std::size_t i) { tmp[i] = fam(idx[i]); });
  std::vector<FunctionOracle> out;
  out.reserve(idx.size());
  for (auto& f : tmp) out.push_back(std::move(*f));
  return out;
}

// An exact sup may only be approached next to a jump at arg. Move arg to a
// nearby point of w where the gap comes closest, so witnesses can be replayed.
double attained_arg(const Gap& gap, const Interval& w, double arg, double value) {
  if (!(gap(arg) < value * (1.0 - 1e-12))) return arg;
  double best_s = arg, best_v = gap(arg);
  for (int k = 4; k <= 52; ++k) {
    const double h = std::ldexp(w.width(), -k);
    for (double s : {arg + h, arg - h}) {
      if (!w.contains(s)) continue;
      const double v = gap(s);
      if (v > best_v) {
        best_v = v;
        best_s = s;
      }
    }
    if (!(best_v < value * (1.0 - 1e-12))) break;
  }
  return best_s;
}

WindowSup window_sup(const Gap& gap, const Domain& d, double t, double eta, const ResolutionSchedule& sched) {
  WindowSup best{0.0, t, gap.exact()};
  bool have = false;
  for (const Interval& w : d.window(t, eta)) {
    WindowSup ws = gap.sup(w, sched);
    if (ws.exact) ws.arg = attained_arg(gap, w, ws.arg, ws.value);
    if (!have || ws.value > best.value) {
      best.value = ws.value;
      best.arg = ws.arg;
      have = true;
    }
  }
  if (d.contains(d.wrap(t))) {
    const double g0 = gap(t);
    if (!have || g0 > best.value || std::isnan(g0)) best = {g0, t, gap.exact()};
  }
  return best;
}

void check_domain(const SequenceFamily& fam, const FunctionOracle& limit) {
  if (!(fam.domain == limit.domain())) throw Error("domain mismatch between family and limit");
}

std::vector<double> detector_probes(const SequenceFamily& fam, const ResolutionSchedule& sched) {
  return probe_points(fam.domain, sched, fam.probes);
}

struct PointOut {
  double t = 0.0;
  std::vector<Rung> rungs;
  std::vector<json> rung_cert;  // detector-specific payload per rung
  json witness;                 // first persistent rung, if any
};

Verdict assemble(const char* detector, const std::vector<PointOut>& pts, const ResolutionSchedule& sched,
                 json extra = json::object()) {
  Verdict v;
  v.schedule = sched;
  bool persistent = false, undecided = false;
  json points = json::array();
  for (const PointOut& p : pts) {
    json rungs = json::array();
    for (std::size_t i = 0; i < p.rungs.size(); ++i) {
      json r = p.rungs[i].to_json();
      if (i < p.rung_cert.size())
        for (auto& [k, val] : p.rung_cert[i].items()) r[k] = val;
      rungs.push_back(std::move(r));
      persistent |= p.rungs[i].status == Status::Persistent;
      undecided |= p.rungs[i].status == Status::Undecided;
    }
    points.push_back(json{{"t", p.t}, {"rungs", std::move(rungs)}});
    if (v.witness.empty() && !p.witness.is_null() && !p.witness.empty()) v.witness = p.witness;
  }
  v.outcome = persistent ? Outcome::Fails : undecided ? Outcome::Inconclusive : Outcome::Holds;
  if (!persistent) v.witness = json::object();
  v.certificate = json{{"detector", detector}, {"points", std::move(points)}};
  for (auto& [k, val] : extra.items()) v.certificate[k] = val;
  return v;
}

// Witness rows for the violating indices above n_max / 2.
json witness_rows(double t, double eps, const std::vector<std::uint64_t>& idx, const std::vector<double>& gap,
                  const std::vector<double>& arg, std::uint64_t n_max, const std::vector<std::uint64_t>* tail_m = nullptr) {
  json rows = json::array();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (2 * idx[i] <= n_max || !violates(gap[i], eps)) continue;
    json row{{"n", idx[i]}, {"s", arg[i]}, {"gap", gap[i]}};
    if (tail_m) row["m"] = (*tail_m)[i];
    rows.push_back(std::move(row));
  }
  return json{{"t", t}, {"eps", eps}, {"violations", std::move(rows)}};
}

std::size_t first_level_below(const std::vector<double>& sups, double eps) {
  for (std::size_t l = 0; l < sups.size(); ++l)
    if (sups[l] < eps) return l;
  return sups.size();
}

std::vector<std::size_t> admissible_levels(const ResolutionSchedule& sched) {
  std::vector<std::size_t> out;
  const double floor = 4.0 / static_cast<double>(sched.n_max);
  for (std::size_t l = 0; l < sched.eta_ladder.size(); ++l)
    if (sched.eta_ladder[l] >= floor) out.push_back(l);
  if (out.empty()) out.push_back(0);
  return out;
}

}  // namespace

double window_gap(const Gap& gap, const Domain& d, double t, double eta, const ResolutionSchedule& sched) {
  return window_sup(gap, d, t, eta, sched).value;
}

// ------------------------------------------------------------ neighbourhood

Verdict neighbourhood_contains(const NeighbourhoodSpec& nbhd, const FunctionOracle& g,
                               const ResolutionSchedule& sched) {
  sched.validate();
  if (!(nbhd.base.domain() == g.domain())) throw Error("domain mismatch between neighbourhood base and g");
  if (!(nbhd.epsilon > 0.0)) throw Error("neighbourhood epsilon must be positive");
  const Domain& d = g.domain();
  const Gap gap(nbhd.base, g);
  Verdict v;
  v.schedule = sched;
  json pts = json::array();
  for (double t : nbhd.points) {
    if (!d.contains(d.wrap(t))) throw Error("neighbourhood point outside the domain");
    WindowSup finest;
    std::size_t level = sched.eta_ladder.size();
    for (std::size_t l = 0; l < sched.eta_ladder.size(); ++l) {
      finest = window_sup(gap, d, t, sched.eta_ladder[l], sched);
      if (finest.value < nbhd.epsilon) {
        level = l;
        break;
      }
    }
    if (level == sched.eta_ladder.size()) {
      v.outcome = Outcome::Fails;
      v.witness = json{{"t", t}, {"s", finest.arg}, {"gap", finest.value}, {"eps", nbhd.epsilon}};
      v.certificate = json{{"detector", "neighbourhood"}, {"points", pts}};
      return v;
    }
    pts.push_back(json{{"t", t}, {"eta", sched.eta_ladder[level]}, {"eta_level", level}, {"sup", finest.value},
                       {"exact", finest.exact}});
  }
  v.outcome = Outcome::Holds;
  v.certificate = json{{"detector", "neighbourhood"}, {"eps", nbhd.epsilon}, {"points", pts}};
  return v;
}

// ---------------------------------------------------------------- pointwise

Verdict detect_pointwise(const SequenceFamily& fam, const FunctionOracle& limit, const ResolutionSchedule& sched) {
  sched.validate();
  check_domain(fam, limit);
  const auto idx = sampled_indices(1, 2 * sched.n_max);
  const auto members = build_members(fam, idx);
  const auto probes = detector_probes(fam, sched);
  std::vector<PointOut> out(probes.size());
  parallel_for(probes.size(), [&](std::size_t p) {
    const double t = probes[p];
    const double lt = limit(t);
    std::vector<double> gap(idx.size()), arg(idx.size(), t);
    for (std::size_t i = 0; i < idx.size(); ++i) gap[i] = std::abs(members[i](t) - lt);
    PointOut& po = out[p];
    po.t = t;
    for (double eps : sched.eps_ladder) {
      po.rungs.push_back(classify(idx, gap, eps, sched.n_max));
      if (po.rungs.back().status == Status::Persistent && po.witness.is_null())
        po.witness = witness_rows(t, eps, idx, gap, arg, sched.n_max);
    }
  });
  return assemble("pointwise", out, sched);
}

// ------------------------------------------------------------------- sticky

Verdict detect_sticky(const SequenceFamily& fam, const FunctionOracle& limit, const ResolutionSchedule& sched) {
  sched.validate();
  check_domain(fam, limit);
  const auto idx = sampled_indices(1, 2 * sched.n_max);
  const auto members = build_members(fam, idx);
  std::vector<Gap> gaps;
  gaps.reserve(members.size());
  for (const auto& f : members) gaps.emplace_back(f, limit);
  const auto probes = detector_probes(fam, sched);
  const double eps_min = *std::min_element(sched.eps_ladder.begin(), sched.eps_ladder.end());
  std::vector<PointOut> out(probes.size());
  parallel_for(probes.size(), [&](std::size_t p) {
    const double t = probes[p];
    std::vector<double> best(idx.size()), arg(idx.size());
    std::vector<std::vector<double>> sups(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const double g0 = gaps[i](t);
      best[i] = kInf;
      for (std::size_t l = 0; l < sched.eta_ladder.size(); ++l) {
        const WindowSup ws = window_sup(gaps[i], fam.domain, t, sched.eta_ladder[l], sched);
        sups[i].push_back(ws.value);
        best[i] = std::min(best[i], ws.value);
        arg[i] = ws.arg;
        // Finer windows cannot beat the gap at t itself.
        if (ws.value < eps_min || ws.value <= g0) break;
        bool open = false;
        for (double eps : sched.eps_ladder)
          if (g0 < eps && !(ws.value < eps)) open = true;
        if (!open) break;
      }
    }
    PointOut& po = out[p];
    po.t = t;
    for (double eps : sched.eps_ladder) {
      Rung r = classify(idx, best, eps, sched.n_max);
      json cert = json::object();
      if (r.status == Status::Resolved) {
        json levels = json::array();
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (idx[i] >= r.N) levels.push_back({idx[i], first_level_below(sups[i], eps)});
        cert["eta_level"] = std::move(levels);
      }
      if (r.status == Status::Persistent && po.witness.is_null())
        po.witness = witness_rows(t, eps, idx, best, arg, sched.n_max);
      po.rungs.push_back(r);
      po.rung_cert.push_back(std::move(cert));
    }
  });
  return assemble("sticky", out, sched);
}

// --------------------------------------------------------- locally uniform

Verdict detect_locally_uniform(const SequenceFamily& fam, const FunctionOracle& limit,
                               const ResolutionSchedule& sched) {
  sched.validate();
  check_domain(fam, limit);
  const auto idx = sampled_indices(1, 2 * sched.n_max);
  const auto members = build_members(fam, idx);
  std::vector<Gap> gaps;
  gaps.reserve(members.size());
  for (const auto& f : members) gaps.emplace_back(f, limit);
  const auto probes = detector_probes(fam, sched);
  const auto levels = admissible_levels(sched);
  std::vector<PointOut> out(probes.size());
  parallel_for(probes.size(), [&](std::size_t p) {
    const double t = probes[p];
    // H[l][i]: window sup at admissible level l for index i.
    std::vector<std::vector<double>> H(levels.size(), std::vector<double>(idx.size()));
    std::vector<std::vector<double>> A(levels.size(), std::vector<double>(idx.size()));
    for (std::size_t l = 0; l < levels.size(); ++l)
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const WindowSup ws = window_sup(gaps[i], fam.domain, t, sched.eta_ladder[levels[l]], sched);
        H[l][i] = ws.value;
        A[l][i] = ws.arg;
      }
    PointOut& po = out[p];
    po.t = t;
    for (double eps : sched.eps_ladder) {
      std::vector<Rung> per(levels.size());
      for (std::size_t l = 0; l < levels.size(); ++l) per[l] = classify(idx, H[l], eps, sched.n_max);
      Rung r = per.back();
      json cert = json::object();
      auto resolved = std::find_if(per.begin(), per.end(), [](const Rung& x) { return x.status == Status::Resolved; });
      if (resolved != per.end()) {
        r = *resolved;
        cert["eta_level"] = levels[static_cast<std::size_t>(resolved - per.begin())];
      } else if (std::all_of(per.begin(), per.end(), [](const Rung& x) { return x.status == Status::Persistent; })) {
        r = per.back();
        if (po.witness.is_null()) {
          po.witness = witness_rows(t, eps, idx, H.back(), A.back(), sched.n_max);
          po.witness["eta_level"] = levels.back();
        }
      } else if (auto dec = std::find_if(per.begin(), per.end(),
                                         [](const Rung& x) { return x.status == Status::Decaying; });
                 dec != per.end()) {
        r = *dec;
        cert["eta_level"] = levels[static_cast<std::size_t>(dec - per.begin())];
      } else {
        r.status = Status::Undecided;
      }
      po.rungs.push_back(r);
      po.rung_cert.push_back(std::move(cert));
    }
  });
  return assemble("locally_uniform", out, sched);
}

// ------------------------------------------------------------------- Cauchy

namespace {

constexpr std::uint64_t kTailCap = std::uint64_t{1} << 44;

// Evaluates max_m |f_m(s) - f_n(s)| over the tail probes for one probe point.
class CauchyProbe {
 public:
  CauchyProbe(const SequenceFamily& fam, MemberCache& tails, const ResolutionSchedule& sched, CauchyTail mode)
      : fam_(fam), tails_(tails), sched_(sched), mode_(mode) {}

  std::uint64_t tail_base(double s) const {
    if (mode_ == CauchyTail::Fixed) return sched_.m_max;
    double se = std::abs(s);
    if (fam_.domain.periodic) {
      se = fam_.domain.wrap(s);
      se = std::min(se, 1.0 - se);
    }
    if (!(se > 0.0)) return sched_.m_max;
    const double need = std::ceil(std::log2(2048.0 / se));
    if (need >= 44.0) return kTailCap;
    const auto M = need <= 0.0 ? std::uint64_t{1} : std::uint64_t{1} << static_cast<int>(need);
    return std::max<std::uint64_t>(sched_.m_max, M);
  }

  // Returns (deviation, tail index attaining it).
  std::pair<double, std::uint64_t> dev(const FunctionOracle& fn, double s) {
    const auto& tv = tail_values(s);
    const double v = fn(s);
    double best = -1.0;
    std::uint64_t arg = 0;
    for (const auto& [m, fm] : tv) {
      const double d = std::abs(fm - v);
      if (d > best || std::isnan(d)) {
        best = d;
        arg = m;
      }
    }
    return {best, arg};
  }

  struct Sup {
    double value = 0.0;
    double s = 0.0;
    std::uint64_t m = 0;
  };

  Sup window(const FunctionOracle& fn, double t, double eta) {
    Sup best{-1.0, t, 0};
    const FunctionOracle* self[] = {&fn};
    auto take = [&](double s) {
      const auto [d, m] = dev(fn, s);
      if (d > best.value || std::isnan(d)) best = {d, s, m};
    };
    for (const Interval& w : fam_.domain.window(t, eta))
      for (double s : window_samples(w, sched_, self)) take(s);
    if (fam_.domain.contains(fam_.domain.wrap(t))) take(t);
    return best;
  }

 private:
  const std::vector<std::pair<std::uint64_t, double>>& tail_values(double s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    const std::uint64_t M = tail_base(s);
    std::vector<std::pair<std::uint64_t, double>> tv;
    for (std::uint64_t m : {M, 2 * M, 4 * M}) tv.emplace_back(m, tails_.get(m)(s));
    return cache_.emplace(s, std::move(tv)).first->second;
  }

  const SequenceFamily& fam_;
  MemberCache& tails_;
  const ResolutionSchedule& sched_;
  CauchyTail mode_;
  std::map<double, std::vector<std::pair<std::uint64_t, double>>> cache_;
};

const char* tail_name(CauchyTail t) { return t == CauchyTail::Fixed ? "fixed" : "scale_adaptive"; }

}  // namespace

Verdict sticky_cauchy(const SequenceFamily& fam, const ResolutionSchedule& sched, CauchyTail tail) {
  sched.validate();
  const auto idx = sampled_indices(1, 2 * sched.n_max);
  const auto members = build_members(fam, idx);
  MemberCache tails(fam);
  const auto probes = detector_probes(fam, sched);
  const double eps_min = *std::min_element(sched.eps_ladder.begin(), sched.eps_ladder.end());
  std::vector<PointOut> out(probes.size());
  parallel_for(probes.size(), [&](std::size_t p) {
    const double t = probes[p];
    CauchyProbe probe(fam, tails, sched, tail);
    std::vector<double> best(idx.size(), kInf), arg(idx.size(), t);
    std::vector<std::uint64_t> arg_m(idx.size(), 0);
    std::vector<std::vector<double>> sups(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const double g0 = probe.dev(members[i], t).first;
      for (double eta : sched.eta_ladder) {
        const auto ws = probe.window(members[i], t, eta);
        sups[i].push_back(ws.value);
        best[i] = std::min(best[i], ws.value);
        arg[i] = ws.s;
        arg_m[i] = ws.m;
        if (ws.value < eps_min || ws.value <= g0) break;
        bool open = false;
        for (double eps : sched.eps_ladder)
          if (g0 < eps && !(ws.value < eps)) open = true;
        if (!open) break;
      }
    }
    PointOut& po = out[p];
    po.t = t;
    for (double eps : sched.eps_ladder) {
      Rung r = classify(idx, best, eps, sched.n_max);
      json cert = json::object();
      if (r.status == Status::Resolved) {
        json levels = json::array();
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (idx[i] >= r.N) levels.push_back({idx[i], first_level_below(sups[i], eps)});
        cert["eta_level"] = std::move(levels);
      }
      if (r.status == Status::Persistent && po.witness.is_null())
        po.witness = witness_rows(t, eps, idx, best, arg, sched.n_max, &arg_m);
      po.rungs.push_back(r);
      po.rung_cert.push_back(std::move(cert));
    }
  });
  return assemble("sticky_cauchy", out, sched, json{{"tail", tail_name(tail)}});
}

// ---------------------------------------------------- eventual equality

namespace {

double distance_to(const std::vector<Interval>& supports, const Domain& d, double t) {
  double best = kInf;
  for (const Interval& w : supports) {
    double dist = 0.0;
    if (t < w.lo) dist = w.lo - t;
    else if (t > w.hi) dist = t - w.hi;
    if (d.periodic) {
      // Also measure around the circle.
      const double alt1 = (w.lo + 1.0) - t, alt2 = t - (w.hi - 1.0);
      if (alt1 >= 0.0) dist = std::min(dist, alt1);
      if (alt2 >= 0.0) dist = std::min(dist, alt2);
    }
    best = std::min(best, dist);
  }
  return best;
}

}  // namespace

Verdict eventual_equality_transfer(const SequenceFamily& fam, const SequenceFamily& ref,
                                   const FunctionOracle& ref_limit, const ResolutionSchedule& sched) {
  sched.validate();
  if (ref.label.locally_uniform != Tri::Yes)
    throw Error("eventual equality transfer needs a reference family labelled locally uniformly convergent");
  if (!(fam.domain == ref.domain) || !(ref_limit.domain() == fam.domain))
    throw Error("domain mismatch between family, reference and limit");
  const auto idx = sampled_indices(1, 2 * sched.n_max);
  const auto members = build_members(fam, idx);
  for (const auto& f : members)
    if (!f.metadata().humps_declared)
      throw Error("eventual equality transfer needs declared support metadata on every member");
  const auto probes = detector_probes(fam, sched);
  const auto levels = admissible_levels(sched);
  const double floor = sched.eta_ladder[levels.back()];
  bool persistent = false, undecided = false;
  json points = json::array();
  json witness = json::object();
  for (double t : probes) {
    std::vector<double> dist(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) dist[i] = distance_to(members[i].metadata().humps, fam.domain, t);
    json pt{{"t", t}};
    bool resolved = false;
    for (std::size_t l : levels) {
      const double eta = sched.eta_ladder[l];
      std::size_t last = idx.size();
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (!(dist[i] >= eta)) last = i;
      const std::uint64_t N = last == idx.size() ? idx.front() : (last + 1 < idx.size() ? idx[last + 1] : 0);
      if (N != 0 && N <= sched.n_max) {
        pt["eta"] = eta;
        pt["N"] = N;
        resolved = true;
        break;
      }
    }
    if (!resolved) {
      std::size_t base_n = 0, base_v = 0, dbl_n = 0, dbl_v = 0;
      json rows = json::array();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const bool v = dist[i] < floor;
        if (2 * idx[i] > sched.n_max && idx[i] <= sched.n_max) {
          ++base_n;
          base_v += v;
        }
        if (idx[i] > sched.n_max) {
          ++dbl_n;
          dbl_v += v;
        }
        if (v && 2 * idx[i] > sched.n_max) rows.push_back({{"n", idx[i]}, {"distance", dist[i]}});
      }
      const bool pers = base_n && dbl_n && 2 * base_v >= base_n && 2 * dbl_v >= dbl_n;
      pt["status"] = pers ? "persistent" : "undecided";
      if (pers && witness.empty()) witness = json{{"t", t}, {"eta", floor}, {"violations", rows}};
      persistent |= pers;
      undecided |= !pers;
    } else {
      pt["status"] = "resolved";
    }
    points.push_back(std::move(pt));
  }
  Verdict v;
  v.schedule = sched;
  v.outcome = persistent ? Outcome::Fails : undecided ? Outcome::Inconclusive : Outcome::Holds;
  v.certificate = json{{"detector", "eventual_equality"}, {"points", points}};
  if (v.holds()) v.certificate["conclusion"] = fam.name + " converges sticky to the limit of " + ref.name;
  if (persistent) v.witness = witness;
  return v;
}

// ------------------------------------------------------------------- replay

namespace {

bool replay_witness_gaps(const json& w, const std::function<double(std::uint64_t, double, const json&)>& gap) {
  if (!w.contains("violations")) return false;
  const double eps = w.at("eps").get<double>();
  for (const auto& row : w.at("violations")) {
    const double g = gap(row.at("n").get<std::uint64_t>(), row.at("s").get<double>(), row);
    if (violates(g, eps)) continue;
    if (g >= eps * (1.0 - 1e-12)) continue;
    return false;
  }
  return true;
}

}  // namespace

bool replay(const Verdict& v, const SequenceFamily& fam, const FunctionOracle* limit) {
  const std::string det = v.certificate.value("detector", "");
  const ResolutionSchedule& sched = v.schedule;
  const Domain& d = fam.domain;
  MemberCache members(fam);
  if (det != "sticky_cauchy" && !limit) throw Error("replay of " + det + " needs the limit oracle");

  if (v.fails()) {
    if (det == "pointwise" || det == "sticky" || det == "locally_uniform")
      return replay_witness_gaps(v.witness, [&](std::uint64_t n, double s, const json&) {
        return std::abs(members.get(n)(s) - (*limit)(s));
      });
    if (det == "sticky_cauchy")
      return replay_witness_gaps(v.witness, [&](std::uint64_t n, double s, const json& row) {
        return std::abs(members.get(row.at("m").get<std::uint64_t>())(s) - members.get(n)(s));
      });
    return false;
  }
  if (!v.holds()) return true;  // nothing is claimed

  const CauchyTail mode = v.certificate.value("tail", "scale_adaptive") == "fixed" ? CauchyTail::Fixed
                                                                                   : CauchyTail::ScaleAdaptive;
  MemberCache tails(fam);
  for (const auto& pt : v.certificate.at("points")) {
    const double t = pt.at("t").get<double>();
    CauchyProbe probe(fam, tails, sched, mode);
    for (const auto& r : pt.at("rungs")) {
      if (r.at("status") != "resolved") continue;
      const double eps = r.at("eps").get<double>();
      const auto N = r.at("N").get<std::uint64_t>();
      if (det == "pointwise") {
        for (auto n : sampled_indices(N, 2 * sched.n_max))
          if (violates(std::abs(members.get(n)(t) - (*limit)(t)), eps)) return false;
      } else if (det == "sticky") {
        for (const auto& pair : r.at("eta_level")) {
          const auto n = pair.at(0).get<std::uint64_t>();
          const auto l = pair.at(1).get<std::size_t>();
          if (l >= sched.eta_ladder.size()) return false;
          if (violates(window_gap(Gap(members.get(n), *limit), d, t, sched.eta_ladder[l], sched), eps)) return false;
        }
      } else if (det == "locally_uniform") {
        const auto l = r.at("eta_level").get<std::size_t>();
        for (auto n : sampled_indices(N, 2 * sched.n_max))
          if (violates(window_gap(Gap(members.get(n), *limit), d, t, sched.eta_ladder[l], sched), eps)) return false;
      } else if (det == "sticky_cauchy") {
        for (const auto& pair : r.at("eta_level")) {
          const auto n = pair.at(0).get<std::uint64_t>();
          const auto l = pair.at(1).get<std::size_t>();
          if (l >= sched.eta_ladder.size()) return false;
          if (violates(probe.window(members.get(n), t, sched.eta_ladder[l]).value, eps)) return false;
        }
      } else {
        return false;
      }
    }
  }
  return true;
}

bool replay(const Verdict& v, const NeighbourhoodSpec& nbhd, const FunctionOracle& g) {
  const Gap gap(nbhd.base, g);
  const Domain& d = g.domain();
  if (v.fails()) {
    const double s = v.witness.at("s").get<double>();
    return gap(s) >= nbhd.epsilon * (1.0 - 1e-12);
  }
  if (!v.holds()) return true;
  for (const auto& pt : v.certificate.at("points")) {
    const double t = pt.at("t").get<double>();
    const double eta = pt.at("eta").get<double>();
    if (violates(window_gap(gap, d, t, eta, v.schedule), nbhd.epsilon)) return false;
  }
  return true;
}

}  // namespace stickylab::convergence
