#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "tornheim/errors.hpp"
#include "tornheim/exact/rational.hpp"
#include "tornheim/specfun/bernoulli.hpp"

namespace tornheim {

// Declaration order is the symbol order used everywhere (rendering, maps).
enum class SymbolKind { One, Zeta, ZetaProd, ZetaLog, TBasis, YStar };

/*
 * Atom of a symbolic combination.
 *
 *   One            1
 *   Zeta(a)        zeta(a), a >= 2
 *   ZetaProd(a,b)  zeta(a) zeta(b), 2 <= a <= b, not both even once canonical
 *   ZetaLog(a)     zeta(a) log(2 pi)
 *   TBasis(a,b)    T(a,0,b), a >= 1, b >= 2
 *   YStar(a,b)     Y*_{a,b}, a even, a + b even, 2 <= a <= (a+b-2)/3
 */
struct ZetaSymbol {
  SymbolKind kind = SymbolKind::One;
  int a = 0;
  int b = 0;

  static ZetaSymbol one() { return {}; }
  static ZetaSymbol zeta(int n) {
    if (n < 2) throw DomainError("zeta(" + std::to_string(n) + ") is not a valid atom");
    return {SymbolKind::Zeta, n, 0};
  }
  static ZetaSymbol zeta_prod(int x, int y) {
    if (x > y) std::swap(x, y);
    if (x < 2) throw DomainError("zeta product needs arguments >= 2");
    return {SymbolKind::ZetaProd, x, y};
  }
  static ZetaSymbol zeta_log(int n) {
    if (n < 2) throw DomainError("zeta(" + std::to_string(n) + ")*log2pi is not a valid atom");
    return {SymbolKind::ZetaLog, n, 0};
  }
  static ZetaSymbol t_sum(int m, int n) {
    if (m < 1 || n < 2) throw DomainError("T(m,0,n) atom needs m >= 1, n >= 2");
    return {SymbolKind::TBasis, m, n};
  }
  static ZetaSymbol ystar(int m, int n) {
    const int N = m + n;
    if (m < 2 || m % 2 != 0 || N % 2 != 0 || 3 * m > N - 2) {
      throw DomainError("Ystar(" + std::to_string(m) + "," + std::to_string(n) + ") is not a valid atom");
    }
    return {SymbolKind::YStar, m, n};
  }

  int weight() const {
    switch (kind) {
      case SymbolKind::One: return 0;
      case SymbolKind::Zeta:
      case SymbolKind::ZetaLog: return a;
      default: return a + b;
    }
  }

  std::string to_string() const {
    auto s = [](int v) { return std::to_string(v); };
    switch (kind) {
      case SymbolKind::One: return "1";
      case SymbolKind::Zeta: return "zeta(" + s(a) + ")";
      case SymbolKind::ZetaProd: return "zeta(" + s(a) + ")*zeta(" + s(b) + ")";
      case SymbolKind::ZetaLog: return "zeta(" + s(a) + ")*log2pi";
      case SymbolKind::TBasis: return "T(" + s(a) + ",0," + s(b) + ")";
      case SymbolKind::YStar: return "Ystar(" + s(a) + "," + s(b) + ")";
    }
    return {};
  }

  static ZetaSymbol parse(std::string_view text);

  friend auto operator<=>(const ZetaSymbol&, const ZetaSymbol&) = default;
};

namespace detail {

inline int parse_int(std::string_view& t) {
  std::size_t i = 0;
  while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i;
  if (i == 0 || i > 6) throw ParseError("expected integer");
  int v = std::stoi(std::string(t.substr(0, i)));
  t.remove_prefix(i);
  return v;
}

inline void expect(std::string_view& t, std::string_view lit) {
  if (t.substr(0, lit.size()) != lit) throw ParseError("expected '" + std::string(lit) + "'");
  t.remove_prefix(lit.size());
}

}  // namespace detail

inline ZetaSymbol ZetaSymbol::parse(std::string_view text) {
  std::string_view t = text;
  try {
    if (t == "1") return one();
    if (t.starts_with("zeta(")) {
      detail::expect(t, "zeta(");
      int x = detail::parse_int(t);
      detail::expect(t, ")");
      if (t.empty()) return zeta(x);
      if (t == "*log2pi") return zeta_log(x);
      detail::expect(t, "*zeta(");
      int y = detail::parse_int(t);
      detail::expect(t, ")");
      if (!t.empty()) throw ParseError("trailing text");
      return zeta_prod(x, y);
    }
    if (t.starts_with("T(")) {
      detail::expect(t, "T(");
      int x = detail::parse_int(t);
      detail::expect(t, ",0,");
      int y = detail::parse_int(t);
      detail::expect(t, ")");
      if (!t.empty()) throw ParseError("trailing text");
      return t_sum(x, y);
    }
    if (t.starts_with("Ystar(")) {
      detail::expect(t, "Ystar(");
      int x = detail::parse_int(t);
      detail::expect(t, ",");
      int y = detail::parse_int(t);
      detail::expect(t, ")");
      if (!t.empty()) throw ParseError("trailing text");
      return ystar(x, y);
    }
  } catch (const ParseError& e) {
    throw ParseError("bad symbol '" + std::string(text) + "': " + e.what());
  } catch (const DomainError& e) {
    throw ParseError("bad symbol '" + std::string(text) + "': " + e.what());
  }
  throw ParseError("bad symbol '" + std::string(text) + "'");
}

// zeta(2a) zeta(2b) / zeta(2a+2b), a rational number.
inline BigRational even_zeta_product_ratio(int two_a, int two_b) {
  using specfun::bernoulli_number;
  const int s = two_a + two_b;
  BigRational r = bernoulli_number(two_a) * bernoulli_number(two_b) * BigRational(factorial(s));
  r /= BigRational(factorial(two_a) * factorial(two_b) * 2) * bernoulli_number(s);
  return -r;
}

// zeta(2k) / pi^{2k}, a rational number.
inline BigRational even_zeta_over_pi_power(int two_k) {
  const int k = two_k / 2;
  BigRational r = specfun::bernoulli_number(two_k) * BigRational(BigInteger(1) << (two_k - 1));
  r /= BigRational(factorial(two_k));
  return k % 2 == 1 ? r : BigRational(-r);
}

/*
 * Finite map from canonical symbols to nonzero rationals.
 *
 * Every insertion goes through canonicalization: products of two even zeta
 * values collapse to a rational multiple of a single zeta value, and zero
 * coefficients are dropped.
 */
class SymbolicCombo {
 public:
  using Terms = std::map<ZetaSymbol, BigRational>;

  SymbolicCombo() = default;
  SymbolicCombo(const ZetaSymbol& sym, const BigRational& c) { add(sym, c); }
  static SymbolicCombo constant(const BigRational& c) { return SymbolicCombo(ZetaSymbol::one(), c); }

  void add(ZetaSymbol sym, BigRational c) {
    if (c == 0) return;
    if (sym.kind == SymbolKind::ZetaProd && sym.a % 2 == 0 && sym.b % 2 == 0) {
      c *= even_zeta_product_ratio(sym.a, sym.b);
      sym = ZetaSymbol::zeta(sym.a + sym.b);
    }
    auto it = terms_.find(sym);
    if (it == terms_.end()) {
      terms_.emplace(sym, std::move(c));
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  SymbolicCombo& operator+=(const SymbolicCombo& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  SymbolicCombo& operator-=(const SymbolicCombo& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  SymbolicCombo& operator*=(const BigRational& f) {
    if (f == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= f;
    return *this;
  }
  friend SymbolicCombo operator+(SymbolicCombo a, const SymbolicCombo& b) { return a += b; }
  friend SymbolicCombo operator-(SymbolicCombo a, const SymbolicCombo& b) { return a -= b; }
  friend SymbolicCombo operator*(SymbolicCombo a, const BigRational& f) { return a *= f; }
  friend SymbolicCombo operator*(const BigRational& f, SymbolicCombo a) { return a *= f; }
  SymbolicCombo operator-() const { return *this * BigRational(-1); }
  friend bool operator==(const SymbolicCombo& a, const SymbolicCombo& b) { return a.terms_ == b.terms_; }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigRational coefficient(const ZetaSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? BigRational(0) : it->second;
  }
  bool contains_kind(SymbolKind k) const {
    for (const auto& [s, c] : terms_)
      if (s.kind == k) return true;
    return false;
  }

  // Replace every occurrence of sym by value.
  SymbolicCombo substitute(const ZetaSymbol& sym, const SymbolicCombo& value) const {
    SymbolicCombo out;
    for (const auto& [s, c] : terms_) {
      if (s == sym) {
        out += value * c;
      } else {
        out.add(s, c);
      }
    }
    return out;
  }

  // "-187/24*zeta(8) + 5*zeta(3)*zeta(5) + 5/2*T(6,0,2)"; "0" when empty.
  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      BigRational mag = c < 0 ? BigRational(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      out += to_string(mag);
      if (s.kind != SymbolKind::One) out += "*" + s.to_string();
      first = false;
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [s, c] : terms_) {
      arr.push_back({{"symbol", s.to_string()}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
    }
    return arr;
  }

  static SymbolicCombo from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw ParseError("terms must be an array");
    SymbolicCombo out;
    for (const auto& t : arr) {
      if (!t.is_object() || !t.contains("symbol") || !t.contains("num") || !t.contains("den")) {
        throw ParseError("term needs symbol, num and den");
      }
      auto sym = ZetaSymbol::parse(t.at("symbol").get<std::string>());
      auto big = [](const nlohmann::json& v) {
        if (v.is_number_integer()) return BigInteger(std::to_string(v.get<long long>()));
        if (v.is_string()) return BigInteger(v.get<std::string>());
        throw ParseError("num/den must be integers");
      };
      BigInteger den = big(t.at("den"));
      if (den == 0) throw ParseError("zero denominator");
      out.add(sym, make_rational(big(t.at("num")), den));
    }
    return out;
  }

 private:
  // Plain JSON integer when it fits in 64 bits, decimal string otherwise.
  static nlohmann::json integer_json(const BigInteger& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) < 63) return std::stoll(z.get_str());
    return z.get_str();
  }

  Terms terms_;
};

inline SymbolicCombo canonicalize(const ZetaSymbol& sym, const BigRational& c) { return SymbolicCombo(sym, c); }

inline SymbolicCombo combo_add(const SymbolicCombo& a, const SymbolicCombo& b) { return a + b; }

// zeta(i) zeta(j) as a canonical combination, with zeta(0) = -1/2.
inline SymbolicCombo zeta_pair(int i, int j, const BigRational& c = 1) {
  if (i == 0 && j == 0) return SymbolicCombo::constant(c / 4);
  if (i == 0) return SymbolicCombo(ZetaSymbol::zeta(j), -c / 2);
  if (j == 0) return SymbolicCombo(ZetaSymbol::zeta(i), -c / 2);
  return SymbolicCombo(ZetaSymbol::zeta_prod(i, j), c);
}

inline SymbolicCombo zeta_single(int n, const BigRational& c = 1) {
  if (n == 0) return SymbolicCombo::constant(-c / 2);
  return SymbolicCombo(ZetaSymbol::zeta(n), c);
}

}  // namespace tornheim
