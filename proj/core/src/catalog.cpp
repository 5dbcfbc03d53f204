#include "stickylab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace stickylab::catalog {

namespace {

const std::map<Kind, std::string>& kind_names() {
  static const std::map<Kind, std::string> names{
      {Kind::ScaledBump, "ScaledBump"},         {Kind::PerturbedSignal, "PerturbedSignal"},
      {Kind::PoissonSeries, "PoissonSeries"},   {Kind::HaarScaled, "HaarScaled"},
      {Kind::Spike, "Spike"},                   {Kind::SpikeSum, "SpikeSum"},
      {Kind::DirichletKernel, "DirichletKernel"}, {Kind::IndicatorFront, "IndicatorFront"},
      {Kind::Custom, "Custom"},
  };
  return names;
}

template <class T>
T param(const json& p, const char* key, T fallback) {
  return p.contains(key) ? p.at(key).get<T>() : fallback;
}

GroundTruth make_label(std::optional<FunctionOracle> limit, Tri sticky, Tri lu, Tri cont, std::string prov) {
  GroundTruth g{std::move(limit), sticky, lu, cont, std::move(prov)};
  if (!g.consistent()) throw Error("inconsistent ground-truth label: " + g.provenance);
  return g;
}

Tri tri_from_json(const json& p, const char* key) {
  if (!p.contains(key)) return Tri::Unknown;
  const std::string s = p.at(key).get<std::string>();
  if (s == "Yes") return Tri::Yes;
  if (s == "No") return Tri::No;
  if (s == "Unknown") return Tri::Unknown;
  throw Error(std::string("label field ") + key + " must be Yes, No or Unknown");
}

Metadata continuous_meta() {
  Metadata m;
  m.continuous = true;
  return m;
}

// Half-line piecewise polynomials extend one unit past the horizon so that the
// closed right end of the domain is not the zero extension.
double pp_end(double horizon) { return horizon + 1.0; }

// Tent of height h on [c - w, c + w].
PiecewisePoly tent(double c, double w, double h) {
  return PiecewisePoly({c - w, c, c + w}, {Polynomial({0.0, h / w}), Polynomial({h, -h / w})});
}

// ------------------------------------------------------------ ScaledBump

SequenceFamily scaled_bump(const json& p) {
  const double horizon = param(p, "horizon", 16.0);
  const std::string xi = param<std::string>(p, "xi", "texp");
  const Domain d = Domain::half_line(horizon);
  SequenceFamily fam;
  fam.domain = d;
  fam.members_continuous = true;
  const auto zero = FunctionOracle::zero(d);
  if (xi == "texp") {
    fam.name = "scaled-bump-exp";
    fam.at = [d](std::uint64_t n) {
      const double nn = static_cast<double>(n);
      Metadata m = continuous_meta();
      m.critical_points = {1.0 / nn};
      return FunctionOracle::closure(d, [nn](double t) { return nn * t * std::exp(-nn * t); }, m);
    };
  } else if (xi == "tent") {
    fam.name = "scaled-bump-tent";
    fam.at = [d](std::uint64_t n) {
      const double nn = static_cast<double>(n);
      Metadata m = continuous_meta();
      m.humps = {Interval::closed(0.5 / nn, 1.5 / nn)};
      m.humps_declared = true;
      return FunctionOracle::piecewise(d, tent(1.0 / nn, 0.5 / nn, 1.0), m);
    };
  } else {
    throw Error("ScaledBump xi must be texp or tent (both satisfy xi(0) = 0 and decay at infinity)");
  }
  fam.label = make_label(zero, Tri::Yes, Tri::No, Tri::Yes, "scaled bump xi(nt) converges sticky to zero");
  return fam;
}

// ------------------------------------------------------- PerturbedSignal

// sqrt(2e) x exp(-x^2): |xi| <= 1 with xi(0) = 0.
double hump_xi(double x) { return std::sqrt(2.0 * std::numbers::e) * x * std::exp(-x * x); }

SequenceFamily perturbed_signal(const json& p) {
  const double horizon = param(p, "horizon", 16.0);
  std::vector<double> alpha, tk;
  for (int k = 1; k <= 8; ++k) {
    alpha.push_back(std::ldexp(1.0, -k));
    tk.push_back(k);
  }
  alpha = param(p, "alpha", alpha);
  tk = param(p, "t", tk);
  if (alpha.size() != tk.size()) throw Error("PerturbedSignal needs as many alpha_k as t_k");
  double total = 0.0;
  for (double a : alpha) {
    if (!std::isfinite(a)) throw Error("PerturbedSignal violates sum |alpha_k| < infinity");
    total += std::abs(a);
  }
  if (!std::isfinite(total)) throw Error("PerturbedSignal violates sum |alpha_k| < infinity");
  const std::string base = param<std::string>(p, "base", "sin");
  std::function<double(double)> eta;
  if (base == "sin") eta = [](double t) { return std::sin(t); };
  else if (base == "zero") eta = [](double) { return 0.0; };
  else throw Error("PerturbedSignal base must be sin or zero");
  const Domain d = Domain::half_line(horizon);
  SequenceFamily fam;
  fam.name = "perturbed-signal";
  fam.domain = d;
  fam.members_continuous = true;
  fam.probes = tk;
  fam.at = [d, alpha, tk, eta](std::uint64_t n) {
    const double nn = static_cast<double>(n);
    Metadata m = continuous_meta();
    for (double t : tk) {
      for (double c : {t - M_SQRT1_2 / nn, t, t + M_SQRT1_2 / nn})
        if (d.contains(c)) m.critical_points.push_back(c);
    }
    return FunctionOracle::closure(
        d,
        [alpha, tk, eta, nn](double t) {
          double v = eta(t);
          for (std::size_t k = 0; k < alpha.size(); ++k) v += alpha[k] * hump_xi(nn * (t - tk[k]));
          return v;
        },
        m);
  };
  fam.label = make_label(FunctionOracle::closure(d, eta, continuous_meta()), Tri::Yes, Tri::No, Tri::Yes,
                         "signal plus shrinking humps converges sticky to the signal");
  return fam;
}

// ----------------------------------------------------------- HaarScaled

SequenceFamily haar_scaled(const json& p) {
  const std::string rule = param<std::string>(p, "alpha", "n^-2");
  const auto alpha = alpha_schedule(rule);
  SequenceFamily fam;
  fam.name = "haar-scaled";
  fam.domain = Domain::circle();
  fam.at = [alpha](std::uint64_t n) {
    const double nn = static_cast<double>(n);
    return humps::haar_kernel(nn, alpha(nn)).oracle();
  };
  // sup |eta_n| = 2 alpha_n n: uniform convergence to 0 iff alpha_n n -> 0.
  if (std::abs(alpha(1e12)) * 1e12 < 1e-3)
    fam.label = make_label(FunctionOracle::zero(fam.domain), Tri::Yes, Tri::Yes, Tri::Yes,
                           "alpha_n n -> 0, so eta_n -> 0 uniformly");
  else
    fam.label = make_label(std::nullopt, Tri::No, Tri::No, Tri::Unknown, "alpha_n n does not tend to 0");
  return fam;
}

// ----------------------------------------------------------------- Spike

SequenceFamily spike_family(const json& p) {
  SequenceFamily fam;
  fam.members_continuous = true;
  if (!param(p, "glide", false)) {
    const double k = param(p, "k", 4.0);
    const double t0 = param(p, "t0", 0.5);
    if (!(k >= 4.0)) throw Error("Spike violates k >= 4");
    if (!(t0 - 1.0 / k >= 0.0 && t0 + 1.0 / k <= 1.0)) throw Error("Spike violates 0 <= t0 - 1/k < t0 + 1/k <= 1");
    const FunctionOracle f = humps::spike(k, t0).oracle();
    fam.name = "constant-spike";
    fam.domain = Domain::circle();
    fam.probes = {t0 - 1.0 / k, t0, t0 + 1.0 / k};
    fam.at = [f](std::uint64_t) { return f; };
    fam.label = make_label(f, Tri::Yes, Tri::Yes, Tri::Yes, "constant family");
    return fam;
  }
  // Spike at c_n = 1/(n+1) with half-width 1/(4 (n+1)^2).
  const double horizon = param(p, "horizon", 16.0);
  const std::string height = param<std::string>(p, "height", "k");
  if (height != "k" && height != "unit") throw Error("Spike height must be k or unit");
  const bool unit = height == "unit";
  const Domain d = Domain::half_line(horizon);
  fam.name = unit ? "bump-train" : "spike-glide";
  fam.domain = d;
  fam.at = [d, unit](std::uint64_t n) {
    const double m = static_cast<double>(n) + 1.0;
    const double w = 1.0 / (4.0 * m * m);
    Metadata meta = continuous_meta();
    meta.humps = {Interval::closed(1.0 / m - w, 1.0 / m + w)};
    meta.humps_declared = true;
    return FunctionOracle::piecewise(d, tent(1.0 / m, w, unit ? 1.0 : 1.0 / w), meta);
  };
  fam.label = make_label(FunctionOracle::zero(d), Tri::Yes, Tri::No, Tri::Yes,
                         "spikes gliding into 0 leave every window of t > 0 and miss a window of 0");
  return fam;
}

// -------------------------------------------------------------- SpikeSum

humps::SpikeSumParams spike_params(const json& p) {
  const auto i_max = param<std::size_t>(p, "i_max", 6);
  humps::SpikeSumParams sp = humps::SpikeSumParams::defaults(i_max);
  sp.t = param(p, "t", sp.t);
  sp.k = param(p, "k", sp.k);
  sp.beta = param(p, "beta", sp.beta);
  if (p.contains("alpha")) {
    sp.alpha_rule = p.at("alpha").get<std::string>();
    sp.alpha = alpha_schedule(sp.alpha_rule);
  }
  sp.validate();
  return sp;
}

SequenceFamily spike_sum_family(const json& p) {
  const humps::SpikeSumParams sp = spike_params(p);
  const auto f = std::make_shared<const humps::CirclePiecewisePoly>(humps::spike_sum(sp));
  SequenceFamily fam;
  fam.name = "spike-sum-conv";
  fam.domain = Domain::circle();
  fam.members_continuous = true;
  fam.probes = sp.t;
  fam.at = [sp, f](std::uint64_t n) { return humps::spike_sum_response(sp, *f, n).oracle(); };
  // Finitely many spikes: f is Lipschitz and |f * eta_n| <= C alpha_n / n.
  auto rate = [&](double n) { return std::abs(sp.alpha(n)) / n; };
  if (rate(1e12) < rate(1e6) && rate(1e6) < rate(1.0))
    fam.label = make_label(FunctionOracle::zero(fam.domain), Tri::Yes, Tri::Yes, Tri::Yes,
                           "finite spike sum: |f * eta_n| <= Lip(f) alpha_n / n -> 0 uniformly");
  else
    fam.label = make_label(std::nullopt, Tri::Unknown, Tri::Unknown, Tri::Unknown, "alpha_n / n does not tend to 0");
  return fam;
}

// ------------------------------------------------------- DirichletKernel

SequenceFamily dirichlet_family(const json&) {
  SequenceFamily fam;
  fam.name = "dirichlet-kernel";
  fam.domain = Domain::circle();
  fam.members_continuous = true;
  fam.at = [](std::uint64_t n) {
    Metadata m = continuous_meta();
    return FunctionOracle::closure(Domain::circle(), [n](double t) { return humps::dirichlet_kernel(n, t); }, m);
  };
  fam.label = make_label(std::nullopt, Tri::Unknown, Tri::Unknown, Tri::Unknown, "kernels only, no convergence label");
  return fam;
}

// -------------------------------------------------------- IndicatorFront

SequenceFamily indicator_front(const json& p) {
  const double horizon = param(p, "horizon", 16.0);
  const bool mollified = param(p, "mollified", false);
  const Domain d = Domain::half_line(horizon);
  const double end = pp_end(horizon);
  SequenceFamily fam;
  fam.domain = d;
  fam.members_continuous = mollified;
  if (mollified) {
    fam.name = "indicator-front-mollified";
    fam.at = [d, end](std::uint64_t n) {
      const double a = 0.5 / static_cast<double>(n), b = 1.0 / static_cast<double>(n);
      const std::pair<double, double> nodes[] = {{0.0, 0.0}, {a, 0.0}, {b, 1.0}, {end, 1.0}};
      return FunctionOracle::piecewise(d, PiecewisePoly::linear_through(nodes), continuous_meta());
    };
  } else {
    fam.name = "indicator-front";
    fam.at = [d, end](std::uint64_t n) {
      Metadata m;
      m.continuous = false;
      return FunctionOracle::piecewise(d, PiecewisePoly::constant(1.0 / static_cast<double>(n), end, 1.0), m);
    };
  }
  Metadata lm;
  lm.continuous = false;
  const auto limit = FunctionOracle::piecewise(d, PiecewisePoly({0.0, end}, {Polynomial::constant(1.0)}, {{0.0, 0.0}}), lm);
  fam.label = make_label(limit, Tri::No, Tri::No, Tri::No, "fronts converge pointwise to the indicator of (0, inf)");
  return fam;
}

// ---------------------------------------------------------------- Custom

PiecewisePoly nodes_poly(const json& j) {
  std::vector<std::pair<double, double>> nodes;
  for (const auto& n : j.at("nodes")) nodes.emplace_back(n.at(0).get<double>(), n.at(1).get<double>());
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i].first > nodes[i - 1].first)) throw Error("Custom nodes must have strictly increasing x");
  return PiecewisePoly::linear_through(nodes);
}

Domain custom_domain(const json& p) {
  if (!p.contains("domain")) return Domain::half_line(16.0);
  const auto& d = p.at("domain");
  if (d.is_string()) {
    if (d.get<std::string>() == "circle") return Domain::circle();
    throw Error("Custom domain must be \"circle\" or [a, b]");
  }
  return Domain::segment(d.at(0).get<double>(), d.at(1).get<double>());
}

PiecewisePoly scale_x(const PiecewisePoly& q, double a, double b) {
  // x -> a + b x on breakpoints; pieces re-expressed in the new local coordinate.
  std::vector<double> br;
  std::vector<Polynomial> pc;
  for (double x : q.breaks()) br.push_back(a + b * x);
  for (const auto& poly : q.pieces()) pc.push_back(poly.compose_affine(0.0, 1.0 / b));
  return PiecewisePoly(std::move(br), std::move(pc));
}

SequenceFamily custom_family(const json& p) {
  SequenceFamily fam;
  fam.name = param<std::string>(p, "name", "custom");
  fam.domain = custom_domain(p);
  const Domain d = fam.domain;
  const json lab = p.value("label", json::object());
  std::optional<FunctionOracle> limit;
  if (p.contains("limit")) limit = FunctionOracle::piecewise(d, nodes_poly(p.at("limit")), continuous_meta());

  if (p.contains("formula")) {
    const std::string f = p.at("formula").get<std::string>();
    const double end = d.span.hi + 1.0;
    fam.members_continuous = true;
    if (f == "t/n") {
      fam.at = [d, end](std::uint64_t n) {
        return FunctionOracle::piecewise(d, PiecewisePoly({d.span.lo, end}, {Polynomial({d.span.lo, 1.0}) *
                                                                                (1.0 / static_cast<double>(n))}),
                                         continuous_meta());
      };
      if (!limit) limit = FunctionOracle::zero(d);
    } else if (f == "sin(nt)") {
      fam.at = [d](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        return FunctionOracle::closure(d, [nn](double t) { return std::sin(nn * t); }, continuous_meta());
      };
    } else if (f == "x^n/n!") {
      fam.at = [d](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        return FunctionOracle::closure(
            d,
            [nn](double x) {
              if (x == 0.0) return 0.0;
              const double mag = std::exp(nn * std::log(std::abs(x)) - std::lgamma(nn + 1.0));
              return (x < 0.0 && std::fmod(nn, 2.0) == 1.0) ? -mag : mag;
            },
            continuous_meta());
      };
    } else if (f == "1/n") {
      fam.at = [d, end](std::uint64_t n) {
        return FunctionOracle::piecewise(d, PiecewisePoly::constant(d.span.lo, end, 1.0 / static_cast<double>(n)),
                                         continuous_meta());
      };
      if (!limit) limit = FunctionOracle::zero(d);
    } else if (f == "constant") {
      const double c = param(p, "c", 1.0);
      const auto oracle = FunctionOracle::piecewise(d, PiecewisePoly::constant(d.span.lo, end, c), continuous_meta());
      fam.at = [oracle](std::uint64_t) { return oracle; };
      if (!limit) limit = oracle;
    } else {
      throw Error("Custom formula must be one of t/n, sin(nt), x^n/n!, 1/n, constant");
    }
  } else if (p.contains("template")) {
    const PiecewisePoly q = nodes_poly(p.at("template"));
    const std::string placement = param<std::string>(p, "placement", "shift");
    if (placement != "shift" && placement != "shrink") throw Error("Custom placement must be shift or shrink");
    const double x0 = q.breaks().front(), x1 = q.breaks().back();
    if (placement == "shrink" && !(x0 >= 0.0 && x1 <= 1.0)) throw Error("shrink template must live on [0, 1]");
    fam.members_continuous = true;
    fam.at = [d, q, placement, x0, x1](std::uint64_t n) {
      const double nn = static_cast<double>(n);
      double a = nn, b = 1.0;  // shift: x -> n + x
      if (placement == "shrink") {
        a = 1.0 / (nn + 1.0);
        b = 1.0 / nn - 1.0 / (nn + 1.0);
      }
      Metadata m = continuous_meta();
      m.humps_declared = true;
      const Interval supp = Interval::closed(a + b * x0, a + b * x1).intersect(d.span);
      if (!supp.empty()) m.humps = {supp};
      return FunctionOracle::piecewise(d, scale_x(q, a, b), m);
    };
    if (!limit) limit = FunctionOracle::zero(d);
  } else if (p.contains("members")) {
    std::vector<FunctionOracle> members;
    for (const auto& mj : p.at("members")) {
      Metadata m = continuous_meta();
      if (mj.contains("supports")) {
        m.humps_declared = true;
        for (const auto& s : mj.at("supports")) m.humps.push_back(Interval::closed(s.at(0), s.at(1)));
      }
      members.push_back(FunctionOracle::piecewise(d, nodes_poly(mj), m));
    }
    if (members.empty()) throw Error("Custom members must not be empty");
    fam.members_continuous = true;
    fam.at = [members](std::uint64_t n) { return members[std::min<std::size_t>(n, members.size()) - 1]; };
    if (!limit) limit = members.back();
  } else {
    throw Error("Custom family needs one of formula, template or members");
  }
  const bool has_limit_label = !lab.contains("limit") || lab.at("limit").get<bool>();
  fam.label = make_label(has_limit_label ? limit : std::nullopt, tri_from_json(lab, "sticky"),
                         tri_from_json(lab, "locally_uniform"), tri_from_json(lab, "limit_continuous"),
                         param<std::string>(lab, "provenance", "user supplied"));
  return fam;
}

// Summation cut: terms beyond |n t| >= X are below the envelope tail budget.
double poisson_reach(const humps::PoissonInput& in) { return std::max(9.0, in.envelope_from + 6.0); }

// Below this s the Poisson side (1/s) sum_{m != 0} xi_hat(2 pi m / s) of the
// built-in Gaussian-type inputs is far below double precision.
constexpr double kPoissonFlat = 0.01;

double poisson_partial(const humps::PoissonInput& in, std::uint64_t N, double t) {
  if (t == 0.0) return (2.0 * static_cast<double>(N) + 1.0) * in.xi(0.0);
  const double reach = poisson_reach(in);
  const double at = std::abs(t);
  if (static_cast<double>(N) * at >= reach) return poisson_limit_value(in, t);
  double acc = 0.0;
  for (std::uint64_t n = N; n >= 1; --n) {
    const double x = at * static_cast<double>(n);
    acc += in.xi(x) + in.xi(-x);
  }
  return acc + in.xi(0.0);
}

}  // namespace

std::string to_string(Kind k) { return kind_names().at(k); }

Kind kind_from_string(const std::string& s) {
  for (const auto& [k, name] : kind_names())
    if (name == s) return k;
  throw Error("unknown family kind: " + s);
}

json FamilySpec::to_json() const { return json{{"kind", to_string(kind)}, {"params", params}}; }

FamilySpec FamilySpec::from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error("family spec must be an object with a \"kind\" field");
  FamilySpec s;
  s.kind = kind_from_string(j.at("kind").get<std::string>());
  s.params = j.value("params", json::object());
  if (!s.params.is_object()) throw Error("family spec \"params\" must be an object");
  return s;
}

std::function<double(double)> alpha_schedule(const std::string& rule) {
  if (rule == "n/log(n+2)") return [](double n) { return n / std::log(n + 2.0); };
  if (rule == "sqrt(n)") return [](double n) { return std::sqrt(n); };
  if (rule == "1") return [](double) { return 1.0; };
  if (rule.rfind("n^", 0) == 0) {
    double pw = 0.0;
    std::istringstream is(rule.substr(2));
    if (!(is >> pw) || !is.eof()) throw Error("alpha schedule n^p needs a real exponent p");
    return [pw](double n) { return std::pow(n, pw); };
  }
  throw Error("unknown alpha schedule: " + rule + " (use n/log(n+2), sqrt(n), 1 or n^p)");
}

double poisson_limit_value(const humps::PoissonInput& in, double t) {
  const double at = std::abs(t);
  if (at == 0.0) return 0.0;  // xi(0) = 0 is a hypothesis
  if (at < kPoissonFlat) return 0.0;
  const auto N = static_cast<std::uint64_t>(std::ceil(poisson_reach(in) / at));
  double acc = 0.0;
  for (std::uint64_t n = N; n >= 1; --n) {
    const double x = at * static_cast<double>(n);
    acc += in.xi(x) + in.xi(-x);
  }
  return acc + in.xi(0.0);
}

SequenceFamily poisson_family(const humps::PoissonInput& in, double horizon) {
  const Domain d = Domain::half_line(horizon);
  SequenceFamily fam;
  fam.name = "poisson";
  fam.domain = d;
  fam.members_continuous = true;
  fam.probes = {0.0};
  const double reach = poisson_reach(in);
  fam.at = [in, d, reach](std::uint64_t N) {
    Metadata m = continuous_meta();
    // psi_N departs from the limit only where N t < reach; hint that region.
    const double nn = static_cast<double>(N);
    for (double j = 1.0; j <= 4.0 * reach; j += 1.0) m.critical_points.push_back(j / (4.0 * nn));
    return FunctionOracle::series(
        d, [in, N](double t) { return poisson_partial(in, N, t); }, SeriesInfo{2 * N + 1, 0.0}, m);
  };
  const auto limit = FunctionOracle::series(
      d, [in](double t) { return poisson_limit_value(in, t); },
      SeriesInfo{static_cast<std::uint64_t>(std::ceil(reach / kPoissonFlat)), 1e-12}, continuous_meta());
  const bool odd = std::abs(in.xi(1.0) + in.xi(-1.0)) < 1e-15 && std::abs(in.xi(0.3) + in.xi(-0.3)) < 1e-15;
  fam.label = make_label(limit, Tri::Yes, odd ? Tri::Yes : Tri::No, Tri::Yes,
                         odd ? "odd xi: every partial sum vanishes"
                             : "Poisson summation: psi_N converges sticky to a limit continuous at 0");
  return fam;
}

SequenceFamily make_family(const FamilySpec& spec) {
  const json& p = spec.params;
  switch (spec.kind) {
    case Kind::ScaledBump: return scaled_bump(p);
    case Kind::PerturbedSignal: return perturbed_signal(p);
    case Kind::PoissonSeries: {
      const std::string xi = param<std::string>(p, "xi", "builtin");
      humps::PoissonInput in;
      if (xi == "builtin") in = humps::PoissonInput::builtin();
      else if (xi == "odd") in = humps::PoissonInput::odd();
      else throw Error("PoissonSeries xi must be builtin or odd");
      if (std::abs(in.xi(0.0)) > 1e-8) throw Error("PoissonSeries violates xi(0) = 0");
      return poisson_family(in, param(p, "horizon", 16.0));
    }
    case Kind::HaarScaled: return haar_scaled(p);
    case Kind::Spike: return spike_family(p);
    case Kind::SpikeSum: return spike_sum_family(p);
    case Kind::DirichletKernel: return dirichlet_family(p);
    case Kind::IndicatorFront: return indicator_front(p);
    case Kind::Custom: return custom_family(p);
  }
  throw Error("unknown family kind");
}

std::vector<CatalogEntry> catalog_list() {
  const std::vector<std::pair<std::string, FamilySpec>> specs{
      {"scaled-bump-exp", {Kind::ScaledBump, {{"xi", "texp"}}}},
      {"scaled-bump-tent", {Kind::ScaledBump, {{"xi", "tent"}}}},
      {"perturbed-signal", {Kind::PerturbedSignal, json::object()}},
      {"poisson", {Kind::PoissonSeries, {{"xi", "builtin"}}}},
      {"spike-glide", {Kind::Spike, {{"glide", true}}}},
      {"bump-train", {Kind::Spike, {{"glide", true}, {"height", "unit"}}}},
      {"spike-sum-conv", {Kind::SpikeSum, {{"i_max", 4}, {"alpha", "sqrt(n)"}}}},
      {"constant-spike", {Kind::Spike, {{"k", 4.0}, {"t0", 0.5}}}},
      {"haar-decay", {Kind::HaarScaled, {{"alpha", "n^-2"}}}},
      {"linear-shrink",
       {Kind::Custom,
        {{"name", "linear-shrink"},
         {"formula", "t/n"},
         {"label", {{"sticky", "Yes"}, {"locally_uniform", "Yes"}, {"limit_continuous", "Yes"},
                    {"provenance", "sup over [0, T] is T/n"}}}}}},
      {"indicator-front", {Kind::IndicatorFront, json::object()}},
      {"indicator-front-mollified", {Kind::IndicatorFront, {{"mollified", true}}}},
      {"sin-no-limit",
       {Kind::Custom,
        {{"name", "sin-no-limit"},
         {"formula", "sin(nt)"},
         {"label", {{"limit", false}, {"sticky", "No"}, {"locally_uniform", "No"}, {"limit_continuous", "Unknown"},
                    {"provenance", "sin(nt) has no pointwise limit at t not in pi Z"}}}}}},
      {"dirichlet-kernel", {Kind::DirichletKernel, json::object()}},
  };
  std::vector<CatalogEntry> out;
  for (const auto& [name, spec] : specs) {
    SequenceFamily fam = make_family(spec);
    out.push_back({name, spec, fam.label});
  }
  return out;
}

bool is_builtin(const std::string& name) {
  for (const auto& e : catalog_list())
    if (e.name == name) return true;
  return false;
}

SequenceFamily builtin(const std::string& name) {
  for (const auto& e : catalog_list()) {
    if (e.name == name) {
      SequenceFamily fam = make_family(e.spec);
      fam.name = name;
      return fam;
    }
  }
  throw Error("unknown built-in family: " + name);
}

}  // namespace stickylab::catalog
