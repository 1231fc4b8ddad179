#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/rational.hpp"
#include "tornheim/exact/symbolic.hpp"

namespace tornheim {

// T(m,k,n) = sum_{r,s>=1} r^-m s^-k (r+s)^-n
struct TornheimIndex {
  int m = 0;
  int k = 0;
  int n = 0;

  int weight() const { return m + k + n; }
  std::string to_string() const {
    return "T(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n) + ")";
  }
  friend auto operator<=>(const TornheimIndex&, const TornheimIndex&) = default;
};

inline bool is_admissible(int m, int k, int n) {
  return m >= 0 && k >= 0 && n >= 0 && m + n >= 2 && k + n >= 2 && m + k + n >= 3;
}

inline void require_admissible(int m, int k, int n) {
  if (!is_admissible(m, k, n)) {
    throw DomainError(TornheimIndex{m, k, n}.to_string() + " does not converge");
  }
}

// k = 0 depth-two atom T(i,0,N-i); T(0,0,N) is not an atom and has no symbol.
inline ZetaSymbol t_atom(int i, int j) { return ZetaSymbol::t_sum(i, j); }

/*
 * T(m,k,n) = sum_{i=1}^m C(m+k-i-1, m-i) T(i,0,N-i)
 *          + sum_{i=1}^k C(m+k-i-1, k-i) T(i,0,N-i).
 * Returns (i, coefficient) with i ascending, zero terms dropped.
 */
inline std::vector<std::pair<int, BigInteger>> huard_expand(int m, int k, int n) {
  require_admissible(m, k, n);
  if (m == 0 && k == 0) throw DomainError("T(0,0,n) is not a combination of T(i,0,N-i)");
  std::vector<BigInteger> c(std::max(m, k) + 1);
  for (int i = 1; i <= m; ++i) c[i] += binomial(m + k - i - 1, m - i);
  for (int i = 1; i <= k; ++i) c[i] += binomial(m + k - i - 1, k - i);
  std::vector<std::pair<int, BigInteger>> out;
  for (int i = 1; i < static_cast<int>(c.size()); ++i)
    if (c[i] != 0) out.emplace_back(i, c[i]);
  return out;
}

namespace closed_form {

// T(m,k,0) = zeta(m) zeta(k)
inline SymbolicCombo n_zero(int m, int k) { return zeta_pair(m, k); }

// T(m,k,1), N = m+k+1
inline SymbolicCombo n_one(int m, int k) {
  const int N = m + k + 1;
  SymbolicCombo s;
  for (int i = 2; i <= m; ++i) s += zeta_pair(i, N - i, i % 2 == 0 ? 1 : -1);
  for (int i = 2; i <= N - 2; ++i) s += zeta_pair(i, N - i, make_rational(1, 2));
  s += zeta_single(N, make_rational(-(N + 1), 2));
  return m % 2 == 0 ? s : -s;
}

// T(1,1,n)
inline SymbolicCombo one_one(int n) {
  SymbolicCombo s = zeta_single(n + 2, n + 1);
  for (int i = 2; i <= n; ++i) s += zeta_pair(i, n + 2 - i, -1);
  return s;
}

// T(m,1,1)
inline SymbolicCombo m_one_one(int m) {
  const int N = m + 2;
  SymbolicCombo s = zeta_single(N, make_rational(N + 1, 2));
  for (int i = 2; i <= N - 2; ++i) s += zeta_pair(i, N - i, make_rational(-1, 2));
  return s;
}

// T(0,0,n)
inline SymbolicCombo zero_zero(int n) { return zeta_single(n - 1) + zeta_single(n, -1); }

// T(1,0,n)
inline SymbolicCombo one_zero(int n) {
  SymbolicCombo s = zeta_single(n + 1, make_rational(n, 2));
  for (int i = 2; i <= n - 1; ++i) s += zeta_pair(i, n + 1 - i, make_rational(-1, 2));
  return s;
}

// T(n,0,n)
inline SymbolicCombo diagonal(int n) { return zeta_pair(n, n, make_rational(1, 2)) + zeta_single(2 * n, make_rational(-1, 2)); }

// T(m,0,n) for odd m+n, with zeta(0) = -1/2.
inline SymbolicCombo odd_weight(int m, int n) {
  const int N = m + n;
  if (N % 2 == 0) throw DomainError("odd_weight: weight is even");
  SymbolicCombo s;
  for (int j = 0; j <= (n - 1) / 2; ++j) s += zeta_pair(2 * j, N - 2 * j, BigRational(binomial(N - 2 * j - 1, m - 1)));
  for (int j = 0; j <= m / 2; ++j) s += zeta_pair(2 * j, N - 2 * j, BigRational(binomial(N - 2 * j - 1, n - 1)));
  if (m % 2 == 1) s = -s;
  s += zeta_single(N, make_rational(-1, 2));
  return s;
}

}  // namespace closed_form

struct ClosedForm {
  SymbolicCombo value;
  std::string rule;
};

/*
 * Catalogued closed forms, tried in order after ordering the arguments so
 * that m >= k: n = 0, n = 1, (1,1,n), (0,0,n), (1,0,n), (n,0,n), odd weight.
 */
inline std::optional<ClosedForm> known_closed_form(int m, int k, int n) {
  require_admissible(m, k, n);
  if (m < k) std::swap(m, k);
  if (n == 0) return ClosedForm{closed_form::n_zero(m, k), "T(m,k,0)"};
  if (n == 1) return ClosedForm{closed_form::n_one(m, k), "T(m,k,1)"};
  if (m == 1 && k == 1) return ClosedForm{closed_form::one_one(n), "T(1,1,n)"};
  if (m == 0 && k == 0) return ClosedForm{closed_form::zero_zero(n), "T(0,0,n)"};
  if (m == 1 && k == 0) return ClosedForm{closed_form::one_zero(n), "T(1,0,n)"};
  if (k == 0 && m == n) return ClosedForm{closed_form::diagonal(n), "T(n,0,n)"};
  if (k == 0 && (m + n) % 2 == 1) return ClosedForm{closed_form::odd_weight(m, n), "odd weight"};
  return std::nullopt;
}

// Linear relation sum c_i T(m_i,0,n_i) = rhs.
struct Relation {
  std::vector<std::pair<TornheimIndex, BigRational>> lhs;
  SymbolicCombo rhs;
};

// T(m,0,n) + T(n,0,m) = zeta(m) zeta(n) - zeta(m+n)
inline Relation euler_relation(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("euler_relation needs m, n >= 2");
  Relation r;
  r.lhs.push_back({{m, 0, n}, 1});
  r.lhs.push_back({{n, 0, m}, 1});
  r.rhs = zeta_pair(m, n) + zeta_single(m + n, -1);
  return r;
}

// sum_{m=1}^{N-2} T(m,0,N-m) = zeta(N)
inline Relation granville_relation(int N) {
  if (N < 3) throw DomainError("granville_relation needs N >= 3");
  Relation r;
  for (int m = 1; m <= N - 2; ++m) r.lhs.push_back({{m, 0, N - m}, 1});
  r.rhs = zeta_single(N);
  return r;
}

}  // namespace tornheim
