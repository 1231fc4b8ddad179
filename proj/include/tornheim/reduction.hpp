#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/linear_system.hpp"
#include "tornheim/exact/symbolic.hpp"
#include "tornheim/identities.hpp"

namespace tornheim {

/*
 * Atoms allowed in reductions of weight N.
 *
 * Even N: zeta(N), zeta(N-1), zeta(j) zeta(N-j) for odd 3 <= j <= N/2, and
 * the basis sums T(N-2r,0,2r) for 1 <= r <= floor((N-2)/6).
 * Odd N: zeta(N), zeta(N-1) and zeta(2j) zeta(N-2j); no basis sums.
 */
struct GeneratingSet {
  int weight = 0;
  std::vector<ZetaSymbol> zeta_atoms;
  std::vector<ZetaSymbol> basis_sums;

  bool contains(const ZetaSymbol& s) const {
    return std::find(zeta_atoms.begin(), zeta_atoms.end(), s) != zeta_atoms.end() ||
           std::find(basis_sums.begin(), basis_sums.end(), s) != basis_sums.end();
  }
  bool spans(const SymbolicCombo& c) const {
    for (const auto& [s, v] : c.terms())
      if (!contains(s)) return false;
    return true;
  }
};

inline int basis_count(int N) { return N % 2 == 0 && N >= 2 ? (N - 2) / 6 : 0; }

inline GeneratingSet generating_set(int N) {
  if (N < 3) throw DomainError("generating_set needs N >= 3");
  GeneratingSet g;
  g.weight = N;
  g.zeta_atoms.push_back(ZetaSymbol::zeta(N));
  g.zeta_atoms.push_back(ZetaSymbol::zeta(N - 1));
  if (N % 2 == 0) {
    for (int j = 3; j <= 2 * ((N - 1) / 4) + 1; j += 2) g.zeta_atoms.push_back(ZetaSymbol::zeta_prod(j, N - j));
    for (int r = 1; r <= basis_count(N); ++r) g.basis_sums.push_back(ZetaSymbol::t_sum(N - 2 * r, 2 * r));
  } else {
    for (int j = 2; j <= N - 3; j += 2) g.zeta_atoms.push_back(ZetaSymbol::zeta_prod(j, N - j));
  }
  std::sort(g.zeta_atoms.begin(), g.zeta_atoms.end());
  std::sort(g.basis_sums.begin(), g.basis_sums.end());
  return g;
}

struct ReductionResult {
  TornheimIndex index;
  SymbolicCombo combo;
  std::vector<std::string> provenance;
};

// Every T(i,0,N-i), i = 1..N-2, over the generating set of weight N.
struct WeightSolution {
  int weight = 0;
  std::size_t rank = 0;
  std::size_t relations = 0;
  std::vector<ZetaSymbol> free_unknowns;
  std::map<int, SymbolicCombo> depth_two;  // keyed by i
};

namespace detail {

inline void add_expansion_row(LinearSystem& sys, int m, int k, int n, const SymbolicCombo& rhs, const std::string& label) {
  std::vector<std::pair<ZetaSymbol, BigRational>> lhs;
  const int N = m + k + n;
  for (const auto& [i, c] : huard_expand(m, k, n)) lhs.push_back({t_atom(i, N - i), BigRational(c)});
  sys.add_row(lhs, rhs, label);
}

inline void add_relation_row(LinearSystem& sys, const Relation& r, const std::string& label) {
  std::vector<std::pair<ZetaSymbol, BigRational>> lhs;
  for (const auto& [idx, c] : r.lhs) lhs.push_back({t_atom(idx.m, idx.n), c});
  sys.add_row(lhs, r.rhs, label);
}

inline LinearSystem weight_system(int N) {
  const GeneratingSet g = generating_set(N);
  LinearSystem sys;
  // Non-basis unknowns first: elimination pivots on them, the basis stays free.
  for (int i = 1; i <= N - 2; ++i) {
    auto s = t_atom(i, N - i);
    if (std::find(g.basis_sums.begin(), g.basis_sums.end(), s) == g.basis_sums.end()) sys.unknowns.push_back(s);
  }
  for (int i = 1; i <= N - 2; ++i) {
    auto s = t_atom(i, N - i);
    if (std::find(g.basis_sums.begin(), g.basis_sums.end(), s) != g.basis_sums.end()) sys.unknowns.push_back(s);
  }

  for (int m = N - 2; 2 * m >= N; --m) {
    const int k = N - m;
    add_expansion_row(sys, m, k, 0, zeta_pair(m, k), "product " + TornheimIndex{m, k, 0}.to_string());
  }
  for (int n = 2; 2 * n < N; ++n) add_relation_row(sys, euler_relation(N - n, n), "euler " + std::to_string(N - n) + "," + std::to_string(n));
  add_relation_row(sys, granville_relation(N), "sum formula");
  for (int i = 1; i <= N - 2; ++i) {
    if (auto cf = known_closed_form(i, 0, N - i)) {
      sys.add_row({{t_atom(i, N - i), BigRational(1)}}, cf->value, "closed form " + TornheimIndex{i, 0, N - i}.to_string());
    }
  }
  for (int m = N - 2; 2 * m >= N - 1; --m) {
    const int k = N - 1 - m;
    add_expansion_row(sys, m, k, 1, closed_form::n_one(m, k), "closed form " + TornheimIndex{m, k, 1}.to_string());
  }
  if (N >= 4) add_expansion_row(sys, 1, 1, N - 2, closed_form::one_one(N - 2), "closed form " + TornheimIndex{1, 1, N - 2}.to_string());
  return sys;
}

inline std::shared_ptr<const WeightSolution> solve_weight(int N) {
  const GeneratingSet g = generating_set(N);
  const LinearSystem sys = weight_system(N);
  Solution sol = solve_exact(sys);
  if (sol.free_unknowns != g.basis_sums) {
    std::string got, want;
    for (const auto& s : sol.free_unknowns) got += " " + s.to_string();
    for (const auto& s : g.basis_sums) want += " " + s.to_string();
    throw BasisMismatch("weight " + std::to_string(N) + ": free unknowns {" + got + " } differ from basis {" + want + " }");
  }
  auto w = std::make_shared<WeightSolution>();
  w->weight = N;
  w->rank = sol.rank;
  w->relations = sys.rows.size();
  w->free_unknowns = sol.free_unknowns;
  for (int i = 1; i <= N - 2; ++i) {
    auto s = t_atom(i, N - i);
    auto it = sol.assignment.find(s);
    SymbolicCombo v = it == sol.assignment.end() ? SymbolicCombo(s, 1) : it->second;
    if (!g.spans(v)) throw Error("internal: reduction of " + s.to_string() + " leaves the generating set");
    w->depth_two.emplace(i, std::move(v));
  }
  return w;
}

}  // namespace detail

// Solved depth-two table for weight N; computed once per weight.
inline const WeightSolution& weight_solution(int N) {
  if (N < 3) throw DomainError("weight must be at least 3");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const WeightSolution>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, detail::solve_weight(N)).first;
  return *it->second;
}

/*
 * T(m,k,n) over the generating set of weight m+k+n: catalogued closed form
 * if one applies, otherwise the expansion into T(i,0,N-i) and the solved
 * table for that weight.
 */
inline ReductionResult reduce(int m, int k, int n) {
  require_admissible(m, k, n);
  ReductionResult r;
  r.index = {m, k, n};
  if (m < k) {
    std::swap(m, k);
    r.provenance.push_back("symmetry T(m,k,n)=T(k,m,n)");
  }
  if (auto cf = known_closed_form(m, k, n)) {
    r.combo = cf->value;
    r.provenance.push_back("closed form " + cf->rule);
    return r;
  }
  const int N = m + k + n;
  const WeightSolution& w = weight_solution(N);
  if (k == 0) {
    r.combo = w.depth_two.at(m);
    r.provenance.push_back("weight " + std::to_string(N) + " linear system");
    return r;
  }
  for (const auto& [i, c] : huard_expand(m, k, n)) r.combo += w.depth_two.at(i) * BigRational(c);
  r.provenance.push_back("expansion into T(i,0,N-i)");
  r.provenance.push_back("weight " + std::to_string(N) + " linear system");
  return r;
}

/*
 * T(N-2r,0,2r) in terms of Y*_{2r,N-2r}:
 *   (-1)^{N/2-1} Y* + zeta(2r) zeta(N-2r) - zeta(N)/2
 *   - sum_{j=1}^{N/2-2} C(N-2-2j, 2r-1) zeta(2j+1) zeta(N-1-2j).
 */
inline SymbolicCombo basis_in_ystar(int N, int r) {
  if (N % 2 != 0 || r < 1 || r > basis_count(N)) throw DomainError("basis_in_ystar: no basis sum T(N-2r,0,2r) here");
  SymbolicCombo s(ZetaSymbol::ystar(2 * r, N - 2 * r), (N / 2 - 1) % 2 == 0 ? 1 : -1);
  s += zeta_pair(2 * r, N - 2 * r);
  s += zeta_single(N, make_rational(-1, 2));
  for (int j = 1; j <= N / 2 - 2; ++j) s += zeta_pair(2 * j + 1, N - 1 - 2 * j, -BigRational(binomial(N - 2 - 2 * j, 2 * r - 1)));
  return s;
}

// Replace every basis sum by its Y* form.
inline SymbolicCombo expand_basis(const SymbolicCombo& c) {
  SymbolicCombo out;
  for (const auto& [s, v] : c.terms()) {
    if (s.kind == SymbolKind::TBasis && s.b % 2 == 0 && (s.a + s.b) % 2 == 0) {
      out += basis_in_ystar(s.a + s.b, s.b / 2) * v;
    } else if (s.kind == SymbolKind::TBasis) {
      throw Error("expand_basis: " + s.to_string() + " is not a basis sum");
    } else {
      out.add(s, v);
    }
  }
  return out;
}

/*
 * All admissible T(m,k,n) with m >= k at weight N, ordered by (m,k).
 * T(0,0,N) is listed only when include_zero_zero is set.
 */
inline std::vector<ReductionResult> weight_table(int N, bool include_zero_zero) {
  if (N < 3) throw DomainError("weight must be at least 3");
  std::vector<ReductionResult> out;
  for (int m = 0; m <= N; ++m) {
    for (int k = 0; k <= m && m + k <= N; ++k) {
      const int n = N - m - k;
      if (!is_admissible(m, k, n)) continue;
      if (m == 0 && k == 0 && !include_zero_zero) continue;
      out.push_back(reduce(m, k, n));
    }
  }
  return out;
}

// Tables reproduce the usual listing: T(0,0,N) shown for N < 6 only.
inline std::vector<ReductionResult> weight_table(int N) { return weight_table(N, N < 6); }

}  // namespace tornheim
