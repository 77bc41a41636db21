#pragma once

// Irregularity measures over a graph's degrees:
//   irr     = sum over edges |d(u) - d(v)|
//   sigma   = sum over edges (d(u) - d(v))^2
//   sigma_t = sum over vertex pairs (d(u) - d(v))^2  (= IRV = n^2 Var)
//   Var     = sigma_t / n^2, kept as a reduced fraction.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include <json.hpp>

#include "irrlab/error.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

/// Exact non-negative fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  bool operator==(const Rational&) const = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

struct MeasureReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t delta = 0;
  std::int64_t Delta = 0;
  std::int64_t irr = 0;
  std::int64_t sigma = 0;
  std::int64_t sigma_t = 0;
  std::int64_t var_num = 0;
  std::int64_t var_den = 1;

  Rational variance() const { return {var_num, var_den}; }
  bool operator==(const MeasureReport&) const = default;
};

/// Orders beyond this could overflow sigma_t (< n^4 / 8) in 64 bits.
inline constexpr std::size_t kMaxMeasuredOrder = 50000;

/// n * sum d^2 - (sum d)^2, which equals the pairwise definition.
inline std::int64_t sigma_t_closed_form(const DegreeVector& d) {
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  for (int x : d.values) {
    s1 += x;
    s2 += static_cast<std::int64_t>(x) * x;
  }
  return static_cast<std::int64_t>(d.size()) * s2 - s1 * s1;
}

/// The O(n^2) definition, summed pair by pair.
inline std::int64_t sigma_t_pairwise(const DegreeVector& d) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const std::int64_t diff = d[i] - d[j];
      s += diff * diff;
    }
  return s;
}

inline std::int64_t sum_centered_squares(const DegreeVector& d, std::int64_t c) {
  std::int64_t s = 0;
  for (int x : d.values) s += (x - c) * (x - c);
  return s;
}

inline MeasureReport measure_all(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "measures need n >= 1");
  if (n > kMaxMeasuredOrder) throw Error(ErrorKind::InvalidArgument, "order exceeds exact 64-bit range");
  const DegreeVector d = degrees(g);
  MeasureReport r;
  r.n = static_cast<std::int64_t>(n);
  r.m = static_cast<std::int64_t>(g.size());
  r.delta = d.min();
  r.Delta = d.max();
  for (auto [u, v] : g.edges()) {
    const std::int64_t diff = d[static_cast<std::size_t>(u)] - d[static_cast<std::size_t>(v)];
    r.irr += diff < 0 ? -diff : diff;
    r.sigma += diff * diff;
  }
  r.sigma_t = sigma_t_closed_form(d);
  const Rational var = Rational::make(r.sigma_t, r.n * r.n);
  r.var_num = var.num;
  r.var_den = var.den;
  return r;
}

/// sigma_t / sigma. Throws RegularGraph when sigma = 0.
inline Rational ratio(const MeasureReport& r) {
  if (r.sigma == 0) throw Error(ErrorKind::RegularGraph, "sigma = 0");
  return Rational::make(r.sigma_t, r.sigma);
}

inline Rational ratio(const Graph& g) { return ratio(measure_all(g)); }

inline constexpr const char* kMeasureCsvHeader = "n,m,delta,Delta,irr,sigma,sigma_t,var_num,var_den";

inline std::string to_csv_row(const MeasureReport& r) {
  std::string s;
  for (std::int64_t v : {r.n, r.m, r.delta, r.Delta, r.irr, r.sigma, r.sigma_t, r.var_num, r.var_den}) {
    if (!s.empty()) s.push_back(',');
    s += std::to_string(v);
  }
  return s;
}

inline nlohmann::ordered_json to_json(const MeasureReport& r) {
  return {{"n", r.n},         {"m", r.m},         {"delta", r.delta},
          {"Delta", r.Delta}, {"irr", r.irr},     {"sigma", r.sigma},
          {"sigma_t", r.sigma_t}, {"var_num", r.var_num}, {"var_den", r.var_den}};
}

}  // namespace irrlab
