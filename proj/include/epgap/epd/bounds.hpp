#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "epgap/core/error.hpp"

namespace epgap {

using BigInt = boost::multiprecision::cpp_int;

/// 20k²r² - 8k²r + 2r - 1. The variant with constant term 2k - 1 differs whenever
/// k != r; only this form is evaluated.
inline BigInt bound_th2(int k, int r) {
  if (k < 1 || r < 1) throw ParameterError("bound_th2: k and r must be positive");
  const BigInt kk = BigInt(k) * k;
  return 20 * kk * r * r - 8 * kk * r + 2 * r - 1;
}

/// g(k, r) = k² log2(2k) (180·2^{r(r-2)} - 24·2^{r(r-2)/2}) + 6·2^{r(r-2)/2} - 1.
///
/// `ceiling` is the exact value when it is an integer (k a power of two and r even) and
/// otherwise the ceiling of a 200-digit evaluation. `symbolic` spells the value with
/// log2(2k) and, for odd r, the factor sqrt(2) kept unevaluated.
struct Th1Bound {
  BigInt ceiling;
  bool exact = false;
  BigInt k_squared;
  BigInt coefficient;  // 180·2^{r(r-2)} - 24·2^{r(r-2)/2}
  BigInt constant;     // 6·2^{r(r-2)/2} - 1, or its sqrt(2)-free part for odd r
  std::string symbolic;
};

inline Th1Bound bound_th1_exact(int k, int r) {
  using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
  if (k < 1) throw ParameterError("bound_th1: k must be positive");
  if (r <= 5) throw ParameterError("bound_th1: defined for r > 5 only");
  if (r > 200) throw ParameterError("bound_th1: r too large");
  const long e = static_cast<long>(r) * (r - 2);
  const bool odd = e % 2 != 0;
  const BigInt full = BigInt(1) << e;
  const BigInt half = BigInt(1) << (e / 2);  // times sqrt(2) when e is odd
  Th1Bound out;
  out.k_squared = BigInt(k) * k;
  int log_exact = -1;
  if ((k & (k - 1)) == 0) log_exact = 1 + std::countr_zero(static_cast<unsigned>(k));
  const std::string root = odd ? "·sqrt(2)" : "";
  if (!odd) {
    out.coefficient = 180 * full - 24 * half;
    out.constant = 6 * half - 1;
  } else {
    out.coefficient = 180 * full;
    out.constant = -1;
  }
  const std::string log_text = log_exact > 0 ? std::to_string(log_exact) : "log2(" + std::to_string(2 * k) + ")";
  if (!odd) {
    out.symbolic = out.k_squared.str() + "·" + log_text + "·" + out.coefficient.str() + " + " + out.constant.str();
  } else {
    out.symbolic = out.k_squared.str() + "·" + log_text + "·(" + out.coefficient.str() + " - " + BigInt(24 * half).str() +
                   root + ") + " + BigInt(6 * half).str() + root + " - 1";
  }
  if (!odd && log_exact > 0) {
    out.ceiling = out.k_squared * log_exact * out.coefficient + out.constant;
    out.exact = true;
    return out;
  }
  const Float sqrt2 = boost::multiprecision::sqrt(Float(2));
  const Float h = odd ? Float(half) * sqrt2 : Float(half);
  const Float lg = log_exact > 0 ? Float(log_exact) : boost::multiprecision::log(Float(2 * k)) / boost::multiprecision::log(Float(2));
  const Float value = Float(out.k_squared) * lg * (180 * Float(full) - 24 * h) + 6 * h - 1;
  out.ceiling = static_cast<BigInt>(boost::multiprecision::ceil(value));
  return out;
}

inline BigInt bound_th1(int k, int r) { return bound_th1_exact(k, r).ceiling; }

/// 648·t·sqrt(log2 t): the average degree above which a K_t minor is forced.
inline double kostochka_threshold(int t) {
  if (t < 1) throw ParameterError("kostochka_threshold: t must be positive");
  return 648.0 * t * std::sqrt(std::log2(static_cast<double>(t)));
}

/// Treewidth threshold of the mesh lemma for 2q sets of size p: 5pq - 2q + 2p - 1.
inline long good_mesh_threshold(int p, int q) { return 5L * p * q - 2L * q + 2L * p - 1; }

/// Treewidth threshold for paired terminal sets: 20p²q² - 8p²q + 2q - 1.
inline long mesh_plus_threshold(int p, int q) {
  const long pp = static_cast<long>(p) * p;
  return 20 * pp * q * q - 8 * pp * q + 2L * q - 1;
}

/// Graphs without a q-mesh of order p have treewidth below p + q - 1.
inline long mesh_treewidth_bound(int p, int q) { return static_cast<long>(p) + q - 1; }

}  // namespace epgap
