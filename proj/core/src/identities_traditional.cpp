// Identities with traditional harmonic numbers (zero offset).

#include "catalog.hpp"

namespace combid::catalog {
namespace {

template <class Ctx>
typename Ctx::Value h(Ctx& c, std::int64_t n) {
  return c.harmonic(c.num(0), n);
}

// sum_{k=0}^{n} [(k+1)^w - k^w] H_k = (n+1)^w H_{n+1} - H_{0,n+1}^{(1-w)}
// The k = 0 term vanishes with H_0 and is not evaluated, which keeps 0^w
// out of the sum for Re w <= 0.
struct Trad1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto w = c.value("w");
    auto sum = c.sum();
    for (const auto k : c.range(1, n + 1)) {
      sum.add((c.pow(c.num(k + 1), w) - c.pow(c.num(k), w)) * h(c, k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto w = c.value("w");
    auto sum = c.sum();
    sum.add(c.pow(c.num(n + 1), w) * h(c, n + 1));
    sum.add(-c.harmonic(c.num(0), n + 1, c.num(1) - w));
    return sum.total();
  }
};

// sum_{k=0}^{n} C(k,m) H_k = C(n+1,m+1)(H_{n+1} - 1/(m+1)) + C(0,m+1)/(m+1)
struct Trad2 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto m = c.value("m");
    auto sum = c.sum();
    for (const auto k : c.range(0, n + 1)) sum.add(c.binom(c.num(k), m) * h(c, k));
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto m = c.value("m");
    const auto m1 = m + c.num(1);
    const auto r = c.div(c.num(1), m1, "m+1");
    auto sum = c.sum();
    sum.add(c.binom(c.num(n + 1), m1) * (h(c, n + 1) - r));
    sum.add(r * c.binom(c.num(0), m1));
    return sum.total();
  }
};

// sum_{k=0}^{n} C(m,n-k) C(n,k)^{-1} H_k
//   = (n+1)/(n-m+1) [H_{n+1} + (C(m,n+1) - 1)/(n-m+1)]
struct Trad3 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto m = c.value("m");
    auto sum = c.sum();
    for (const auto k : c.range(0, n + 1)) {
      sum.add(c.binom(m, c.num(n - k)) * c.inv(c.binom(c.num(n), c.num(k)), "C(n,k)") * h(c, k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto m = c.value("m");
    const auto r = c.div(c.num(1), c.num(n + 1) - m, "n-m+1");
    const auto factor = c.num(n + 1) * r;
    auto sum = c.sum();
    sum.add(factor * h(c, n + 1));
    sum.add(factor * r * c.binom(m, c.num(n + 1)));
    sum.add(-(factor * r));
    return sum.total();
  }
};

// sum_{k=0}^{n} (-1)^k C(m,k)^{-1} H_k
//   = (m+1)/(m+2) [(-1)^n C(m+1,n+1)^{-1} (H_{n+1} - 1/(m+2)) - 1/(m+2)]
struct Trad4 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto m = c.value("m");
    auto sum = c.sum();
    for (const auto k : c.range(0, n + 1)) {
      sum.add(c.sign(k) * c.inv(c.binom(m, c.num(k)), "C(m,k)") * h(c, k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    const auto m = c.value("m");
    const auto r = c.div(c.num(1), m + c.num(2), "m+2");
    const auto factor = (m + c.num(1)) * r;
    auto sum = c.sum();
    sum.add(factor * c.sign(n) * c.inv(c.binom(m + c.num(1), c.num(n + 1)), "C(m+1,n+1)") *
            (h(c, n + 1) - r));
    sum.add(-(factor * r));
    return sum.total();
  }
};

Complex m_plus_1(const Assignment& s) { return value(s, "m") + 1.0; }
Complex m_plus_2(const Assignment& s) { return value(s, "m") + 2.0; }
Complex n_minus_m_plus_1(const Assignment& s) {
  return static_cast<double>(s.integer("n")) - value(s, "m") + 1.0;
}

IdentitySpec trad_spec(std::string id, std::string label, std::string statement,
                       std::string parameter, SymbolDomain exact_parameter,
                       std::vector<Guard> guards, SideEvaluators sides) {
  IdentitySpec s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.statement = std::move(statement);
  s.symbols = {nonneg_symbol("n"), complex_symbol(parameter)};
  s.numeric_domain = {{"n", IntRange{0, 30, ""}}, {parameter, ComplexRect{}}};
  s.exact_domain = {{"n", IntRange{0, 30, ""}}, {parameter, std::move(exact_parameter)}};
  s.guards = std::move(guards);
  s.modes = equation_modes();
  s.sides = sides;
  return s;
}

}  // namespace

void add_traditional_identities(std::vector<IdentitySpec>& out) {
  out.push_back(trad_spec("eq38_harmonictrad1", "harmonictrad1",
                          "sum_{k=0}^{n} [(k+1)^w - k^w] H_k = (n+1)^w H_{n+1} - H_{0,n+1}^{(1-w)}",
                          "w", ValueSet{{1, 2, 3}}, {}, sides_of<Trad1>()));
  out.push_back(trad_spec(
      "eq39_harmonictrad2", "harmonictrad2",
      "sum_{k=0}^{n} C(k,m) H_k = C(n+1,m+1) (H_{n+1} - 1/(m+1)) + C(0,m+1)/(m+1)", "m",
      IntRange{-5, 10, ""}, {guard("m+1", m_plus_1)}, sides_of<Trad2>()));
  out.push_back(trad_spec(
      "eq40_harmonictrad3", "harmonictrad3",
      "sum_{k=0}^{n} C(m,n-k) C(n,k)^{-1} H_k = (n+1)/(n-m+1) [H_{n+1} + (C(m,n+1) - 1)/(n-m+1)]",
      "m", RationalGrid{-5, 10, 2}, {guard("n-m+1", n_minus_m_plus_1)}, sides_of<Trad3>()));
  out.push_back(trad_spec(
      "eq41_harmonictrad4", "harmonictrad4",
      "sum_{k=0}^{n} (-1)^k C(m,k)^{-1} H_k"
      " = (m+1)/(m+2) [(-1)^n C(m+1,n+1)^{-1} (H_{n+1} - 1/(m+2)) - 1/(m+2)]",
      "m", RationalGrid{-5, 10, 2}, {guard("m+2", m_plus_2)}, sides_of<Trad4>()));
}

}  // namespace combid::catalog
