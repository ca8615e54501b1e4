#pragma once

#include "fourman/certificate.hpp"
#include "fourman/evaluate.hpp"
#include "fourman/expr.hpp"
#include "fourman/normal_form.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fourman {

/// Existence constants the construction leaves unspecified.
struct GeographyConfig {
  Rational c = 1;   // Braungardt-Kotschick constant c(eps')
  Integer n0 = 1;   // Wall stabilization constant
  Integer n1 = 0;   // lower bound on chi_h for the symplectic geography
};

/// Lattice region 0 < y <= (9 - eps') x - c, 1 <= x <= x_max, 1 <= y <= y_max.
struct BkQuery {
  Rational eps_prime;
  Rational c;
  Integer x_max;
  Integer y_max;
};

struct GeographyQuery {
  Integer d;
  Rational epsilon;
  Rational c;  // c(eps')
  Integer n_max;
  Integer m_max;

  Rational eps_prime() const { return Rational(3, 2) * epsilon; }
  Rational n_eps() const { return Rational(2 * d, 3) * (c + 1); }
};

struct BkPoint {
  Integer x, y;
  std::string verdict;
};

struct FreeActionPoint {
  Integer n, m, k;
  std::string verdict;
};

struct FamilyBlueprint {
  Expr quotient = connected_sum({});
  Expr cover = connected_sum({});
  std::vector<std::pair<std::string, Certificate>> certificates;
  std::map<std::string, Integer> labels;
  std::vector<std::string> notes;
  std::optional<NormalForm> cover_normal_form;
};

std::vector<BkPoint> bk_region(const BkQuery& query, bool parallel = true);

bool bk_predicate(const Rational& eps_prime, const Rational& c, const Integer& x, const Integer& y);
bool free_action_predicate(const GeographyQuery& q, const Integer& n, const Integer& m);

std::vector<FreeActionPoint> free_action_region(const GeographyQuery& query, bool parallel = true);

/// M # Sd(d) # k CP2b with c1^2(M) = floor(3n/2d)+1, chi_h(M) = m/d.
FamilyBlueprint build_quotient_blueprint(const Integer& n, const Integer& m, const Integer& d, const Integer& j = 1);

/// Z_i: free Z/d quotient of a bi-cyclic cover (standard action, type (d,2), for d odd;
/// weighted action, type (d,3), for d even).
FamilyBlueprint zi_family(const Integer& d, const Integer& i);
Expr zi_expr(const Integer& d, const Integer& i);

/// Least odd index from which c1^2(Z_i) < 5 chi_h(Z_i) holds for every later odd index.
Integer zi_start_index(const Integer& d);

/// M_{i,j} = M' # Sd(d) # k CP2b homeomorphic to Z_i; c1^2(M') defaults to 8 chi_h(Z_i).
FamilyBlueprint main_pair_family(const Integer& d, const Integer& i, const Integer& j,
                                 const GeographyConfig& config = {}, std::optional<Integer> c1sq_block = {});

struct SpinFamilies {
  FamilyBlueprint first;   // X442 # Y(j) # E(2n) # Sd(d)
  FamilyBlueprint second;  // X442 # E(2) # Y(j) # E(2(2n-1)) # Sd(d)
};

/// `fourth` overrides the extra Ishida-LeBrun piece for the first family (default: K3 when the
/// b2+ congruence holds, else E(4)).
SpinFamilies spin_families(const Integer& d, const Integer& n, const Integer& j, const GeographyConfig& config = {},
                           std::optional<Expr> fourth = {});

struct GroupParams {
  Integer chi;
  Integer tau;
  GroupLabel group;
  Integer b1 = 0;
};

Expr group_block(const GroupParams& g);

/// XG #T E(4) #S2 Xk(k) #S2 E(4) #T logt(E(2), j) # p CP2b.
FamilyBlueprint nonspin_group_family(const GroupParams& g, const Integer& k, const Integer& p, const Integer& j);

/// X2 # N_G(i) # Y(j) with N_G(i) = XG #T E(2i).
FamilyBlueprint spin_group_family(const GroupParams& g, const Integer& i, const Integer& j,
                                  std::optional<Expr> fourth = {});

} // namespace fourman
