#pragma once

// The sequence space l_s with norm ||u||_s = sum_{k>=0} 2^-k |u(k)| + limsup_k |u(k)|,
// on sequences given by a finite prefix and a symbolic tail.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"

namespace stickylab::seqspace {

enum class TailKind { Zero, Constant, Periodic, Geometric };

struct TailedSequence {
  std::vector<double> prefix;   // u(0) .. u(K-1)
  TailKind kind = TailKind::Zero;
  double c = 0.0;               // Constant value
  std::vector<double> pattern;  // Periodic: u(K + j) = pattern[j mod L]
  double ratio = 0.0;           // Geometric: u(K + j) = scale * ratio^j
  double scale = 0.0;

  static TailedSequence zero() { return {}; }
  static TailedSequence constant(double c, std::vector<double> prefix = {});
  static TailedSequence periodic(std::vector<double> pattern, std::vector<double> prefix = {});
  static TailedSequence geometric(double ratio, double scale, std::vector<double> prefix = {});
  static TailedSequence unit(std::uint64_t n);  // e_n

  std::size_t K() const { return prefix.size(); }
  double operator()(std::uint64_t k) const;
  double limsup_abs() const;
  double sup_abs() const;
  void validate() const;

  // Same sequence with the prefix extended to length k0 >= K.
  TailedSequence rebased(std::size_t k0) const;
  TailedSequence scaled(double lambda) const;
  TailedSequence shifted() const;  // theta(u)(k) = u(k + 1)

  json to_json() const;
  static TailedSequence from_json(const json& j);
};

double ls_norm(const TailedSequence& u);
// ||a*u + b*v||_s; exact whenever the combined tail is representable.
double ls_norm_combination(const TailedSequence& u, double a, const TailedSequence& v, double b);
double sup_norm(const TailedSequence& u);
// sum_k a(k) u(k) for a with summable tail.
double l1_pairing(const TailedSequence& u, const TailedSequence& a);

using SequenceFamilyFn = std::function<TailedSequence(std::uint64_t)>;

// v_n(k) = max over m in {M_k, 2 M_k}, M_k = max(m_max, 2k), of |u_m(k) - u_n(k)|,
// for k < m_max; limsup_k v_n is read off k in (m_max/2, m_max].
Verdict ls_cauchy(const SequenceFamilyFn& fam, std::uint64_t n_max = 64, std::uint64_t m_max = 256,
                  const std::vector<double>& eps_ladder = {});

enum class SpaceKind { C0, C, Lp };
struct Space {
  SpaceKind kind = SpaceKind::C0;
  double p = 2.0;
  std::string name() const;
  bool contains(const TailedSequence& u) const;
  static Space from_string(const std::string& s);  // "c0", "c", "lp:<p>", "linf"
};

Verdict closedness_probe(const Space& space, const SequenceFamilyFn& fam, const TailedSequence& limit,
                         std::uint64_t n_max = 64);

}  // namespace stickylab::seqspace
