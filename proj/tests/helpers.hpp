#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "levifol/modalg.hpp"
#include "levifol/spec_parser.hpp"

namespace testing {

using namespace levifol;

inline std::vector<std::string> vars_for(std::size_t n) { return default_variable_names(n); }

inline PolyVectorField V(const std::string& expr, std::size_t n = 2) {
  return parse_field(expr, vars_for(n));
}

inline Polynomial P(const std::string& expr, std::size_t n = 2) {
  return parse_polynomial(expr, vars_for(n));
}

inline FoliationModule M(const std::vector<std::string>& exprs, std::size_t n = 2) {
  std::vector<PolyVectorField> gens;
  for (const auto& e : exprs) gens.push_back(V(e, n));
  return FoliationModule(std::move(gens));
}

/// Small random rational in [-range, range] with denominator in {1, 2, 3}.
inline Rational random_rational(std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  return Rational(num(rng)) / Rational(den(rng));
}

/// Random sparse field with terms of degree in [lo, hi].
inline PolyVectorField random_field(std::mt19937_64& rng, std::size_t n, int lo, int hi,
                                    int terms = 4) {
  PolyVectorField x(n);
  std::uniform_int_distribution<int> deg(lo, hi);
  std::uniform_int_distribution<std::size_t> comp(0, n - 1);
  for (int t = 0; t < terms; ++t) {
    auto monos = monomials_of_degree(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Rational c = random_rational(rng);
    if (sgn(c) == 0) c = 1;
    x += PolyVectorField::monomial(monos[pick(rng)], comp(rng), c);
  }
  return x;
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int lo, int hi, int terms = 3) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> deg(lo, hi);
  for (int t = 0; t < terms; ++t) {
    auto monos = monomials_of_degree(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    ts.push_back({monos[pick(rng)], random_rational(rng)});
  }
  return Polynomial(n, std::move(ts));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A shipped fixture from fixtures/<name>.fol, or a test-only one from tests/data.
inline FoliationSpec fixture_spec(const std::string& name) {
  std::string shipped = std::string(LEVIFOL_FIXTURE_DIR) + "/" + name + ".fol";
  std::ifstream probe(shipped);
  if (probe) return parse_spec(read_file(shipped));
  return parse_spec(read_file(std::string(LEVIFOL_FIXTURE_DIR) + "/../tests/data/" + name + ".fol"));
}

inline FoliationModule fixture(const std::string& name) {
  return FoliationModule(fixture_spec(name).generators);
}

}  // namespace testing
