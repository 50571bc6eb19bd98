#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakajima/pgroup.hpp"

namespace nakajima {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& v);
// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& v);

// A short orbit: its length and the orders of the ramification groups
// S_P^(0), S_P^(1), ... at one of its points, ending with 1.
struct OrbitDatum {
  BigInt length;
  std::vector<BigInt> chain;
};

struct CoverData {
  int p = 0;
  BigInt order;     // |S|
  BigInt gbar;      // genus of X/S
  BigInt gammabar;  // p-rank of X/S
  std::vector<OrbitDatum> orbits;

  // Throws InvalidInput on malformed data (chain shape, chain[0] * length != |S|,
  // gammabar > gbar, |S| not a power of p).
  void validate() const;
};

BigInt different_exponent(const OrbitDatum& o);
// 2g - 2 = |S| (2 gbar - 2) + sum over orbits of length * d_P.
BigInt hurwitz_genus(const CoverData& c);
// gamma - 1 = |S| (gammabar - 1) + sum over orbits of (|S| - length).
BigInt ds_prank(const CoverData& c);

// Genus of the quotient by a freely acting group of the given order:
// gbar - 1 = (g - 1) / degree.
BigInt unramified_quotient_genus(const BigInt& g, const BigInt& degree);

struct Bounds {
  Rational stichtenoth;              // p/(p-1) g
  std::optional<Rational> nakajima;  // g - 1 (gamma = 1), p/(p-2)(gamma - 1) (gamma >= 2)
  std::optional<Rational> nakajima_genus_form;  // p/(p-2)(g - 1) for gamma >= 2
  Rational hyp_threshold;            // p^2/(p^2 - p - 1) (g - 1)
};

Bounds bounds(int p, const BigInt& g, const BigInt& gamma);

// p (g - 1) = (p - 2) |S|
bool extremal_check(int p, const BigInt& s_order, const BigInt& g);

enum class PrincCase { I, II, III, HypothesisFails, Contradiction };
std::string case_name(PrincCase c);

PrincCase classify_princ(int p, const BigInt& s_order, const BigInt& g, const BigInt& gamma, bool fixes_point);

// A subgroup M of S whose quotient X/M is to be checked.
struct QuotientDecl {
  std::string label;
  std::vector<int> elements;  // indices in S
};

struct QuotientCheck {
  std::string label;
  bool semiregular = false;
  CoverData data;  // the cover X -> X/M
  BigInt gbar, gammabar;
  bool ok = false;
  std::string note;
};

struct ConsistencyReport {
  BigInt g, gamma;
  bool g_ok = true, gamma_ok = true;
  std::vector<QuotientCheck> quotients;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Recomputes g and gamma and compares with the expectations. With a group
// and its action on the points of the short orbits (one permutation per
// element), derives the cover X -> X/M for each declared subgroup M and
// checks that semiregular M give an unramified quotient with
// gbar - 1 = (g - 1)/|M| and gammabar - 1 = (gamma - 1)/|M|.
ConsistencyReport cover_consistency(const CoverData& c, const std::optional<BigInt>& expected_g,
                                    const std::optional<BigInt>& expected_gamma, const FiniteGroup* S = nullptr,
                                    const std::vector<Perm>* action = nullptr,
                                    const std::vector<QuotientDecl>& quotients = {});

}  // namespace nakajima
