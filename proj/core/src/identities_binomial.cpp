// Telescoping binomial-power identities, their w = 1 forms, and the fixed
// central-binomial examples.

#include "catalog.hpp"

namespace combid::catalog {
namespace {

template <class Ctx>
struct Params {
  std::int64_t a;
  std::int64_t b;
  typename Ctx::Value x;
  typename Ctx::Value y;
  typename Ctx::Value w;
};

template <class Ctx>
Params<Ctx> params(Ctx& c) {
  return {c.integer("a"), c.integer("b"), c.value("x"), c.value("y"), c.value("w")};
}

template <class Ctx>
Params<Ctx> params_w1(Ctx& c) {
  return {c.integer("a"), c.integer("b"), c.value("x"), c.value("y"), c.num(1)};
}

// sum [(x+k+1)^w - (x-y+k)^w] C(x+k,y)^w = (y+1)^w [C(x+b,y+1)^w - C(x+a,y+1)^w]
struct Binomial1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kShiftedUpper, p.a, p.b, p.x, p.y, p.w);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add((c.pow(p.x + c.num(k + 1), p.w) - c.pow(p.x - p.y + c.num(k), p.w)) * fam.summand(k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kShiftedUpper, p.a, p.b, p.x, p.y, p.w);
    const auto lead = c.pow(p.y + c.num(1), p.w);
    auto sum = c.sum();
    sum.add(lead * fam.boundary(p.b));
    sum.add(-(lead * fam.boundary(p.a)));
    return sum.total();
  }
};

// sum [(y-x+k)^w - (y+k)^w] (-1)^{wk} C(x,y+k)^w
//   = x^w [(-1)^{wb} C(x-1,y+b-1)^w - (-1)^{wa} C(x-1,y+a-1)^w]
struct Binomial2 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kShiftedLower, p.a, p.b, p.x, p.y, p.w);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add((c.pow(p.y - p.x + c.num(k), p.w) - c.pow(p.y + c.num(k), p.w)) * fam.summand(k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kShiftedLower, p.a, p.b, p.x, p.y, p.w);
    const auto lead = c.pow(p.x, p.w);
    auto sum = c.sum();
    sum.add(lead * fam.boundary(p.b));
    sum.add(-(lead * fam.boundary(p.a)));
    return sum.total();
  }
};

// sum [(-y-k-1)^w - (x-y-k+1)^w] (-1)^{wk} C(x,y+k)^{-w}
//   = (x+1)^w [(-1)^{wb} C(x+1,y+b)^{-w} - (-1)^{wa} C(x+1,y+a)^{-w}]
struct Binomial3 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kInverseShiftedLower, p.a, p.b, p.x, p.y, p.w);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add((c.pow(-p.y - c.num(k + 1), p.w) - c.pow(p.x - p.y - c.num(k - 1), p.w)) *
              fam.summand(k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kInverseShiftedLower, p.a, p.b, p.x, p.y, p.w);
    const auto lead = c.pow(p.x + c.num(1), p.w);
    auto sum = c.sum();
    sum.add(lead * fam.boundary(p.b));
    sum.add(-(lead * fam.boundary(p.a)));
    return sum.total();
  }
};

// sum [(x-k)^w - (y-k+1)^w] C(x,k)^w C(y,k)^{-w}
//   = (y+1)^w [C(x,b)^w C(y+1,b)^{-w} - C(x,a)^w C(y+1,a)^{-w}]
struct Binomial4 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kRatio, p.a, p.b, p.x, p.y, p.w);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add((c.pow(p.x - c.num(k), p.w) - c.pow(p.y - c.num(k - 1), p.w)) * fam.summand(k));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    auto fam = c.family(FamilyKind::kRatio, p.a, p.b, p.x, p.y, p.w);
    const auto lead = c.pow(p.y + c.num(1), p.w);
    auto sum = c.sum();
    sum.add(lead * fam.boundary(p.b));
    sum.add(-(lead * fam.boundary(p.a)));
    return sum.total();
  }
};

// sum C(x+k,y) = C(x+b,y+1) - C(x+a,y+1)
struct Binomial1W1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) sum.add(c.binom(p.x + c.num(k), p.y));
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    auto sum = c.sum();
    sum.add(c.binom(p.x + c.num(p.b), p.y + c.num(1)));
    sum.add(-c.binom(p.x + c.num(p.a), p.y + c.num(1)));
    return sum.total();
  }
};

// sum (-1)^k C(x,y+k) = (-1)^a C(x-1,y+a-1) - (-1)^b C(x-1,y+b-1)
struct Binomial2W1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) sum.add(c.sign(k) * c.binom(p.x, p.y + c.num(k)));
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto x1 = p.x - c.num(1);
    auto sum = c.sum();
    sum.add(c.sign(p.a) * c.binom(x1, p.y + c.num(p.a - 1)));
    sum.add(-(c.sign(p.b) * c.binom(x1, p.y + c.num(p.b - 1))));
    return sum.total();
  }
};

// sum (-1)^k C(x,y+k)^{-1}
//   = (x+1)/(x+2) [(-1)^a C(x+1,y+a)^{-1} - (-1)^b C(x+1,y+b)^{-1}]
struct Binomial3W1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.sign(k) * c.inv(c.binom(p.x, p.y + c.num(k)), "C(x,y+k)"));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto x1 = p.x + c.num(1);
    const auto factor = c.div(x1, p.x + c.num(2), "x+2");
    auto sum = c.sum();
    sum.add(factor * c.sign(p.a) * c.inv(c.binom(x1, p.y + c.num(p.a)), "C(x+1,y+a)"));
    sum.add(-(factor * c.sign(p.b) * c.inv(c.binom(x1, p.y + c.num(p.b)), "C(x+1,y+b)")));
    return sum.total();
  }
};

// sum C(x,k) C(y,k)^{-1}
//   = (y+1)/(x-y-1) [C(x,b) C(y+1,b)^{-1} - C(x,a) C(y+1,a)^{-1}]
struct Binomial4W1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.binom(p.x, c.num(k)) * c.inv(c.binom(p.y, c.num(k)), "C(y,k)"));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto y1 = p.y + c.num(1);
    const auto factor = c.div(y1, p.x - p.y - c.num(1), "x-y-1");
    auto sum = c.sum();
    sum.add(factor * c.binom(p.x, c.num(p.b)) * c.inv(c.binom(y1, c.num(p.b)), "C(y+1,b)"));
    sum.add(-(factor * c.binom(p.x, c.num(p.a)) * c.inv(c.binom(y1, c.num(p.a)), "C(y+1,a)")));
    return sum.total();
  }
};

// sum_{k=0}^{n} C(n,k)^2 = C(2n,n)
struct CentralSquares {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    for (const auto k : c.range(0, n + 1)) {
      const auto t = c.binom(c.num(n), c.num(k));
      sum.add(t * t);
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    sum.add(c.binom(c.num(2 * n), c.num(n)));
    return sum.total();
  }
};

// sum_{k=0}^{n} k C(n,k)^2 = (n/2) C(2n,n)
struct WeightedCentralSquares {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    for (const auto k : c.range(0, n + 1)) {
      const auto t = c.binom(c.num(n), c.num(k));
      sum.add(c.num(k) * t * t);
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    sum.add(c.num(n, 2) * c.binom(c.num(2 * n), c.num(n)));
    return sum.total();
  }
};

// sum_{k=0}^{2n} (-1)^k C(2n,k)^3 = (-1)^n C(2n,n) C(3n,n)
struct Dixon {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    for (const auto k : c.range(0, 2 * n + 1)) {
      const auto t = c.binom(c.num(2 * n), c.num(k));
      sum.add(c.sign(k) * t * t * t);
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    sum.add(c.sign(n) * c.binom(c.num(2 * n), c.num(n)) * c.binom(c.num(3 * n), c.num(n)));
    return sum.total();
  }
};

// sum_{k=0}^{2n} (-1)^k k(2n-k) C(2n,k)^3 = (-1)^n (4/3) n^2 C(2n,n) C(3n,n)
struct WeightedDixon {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    for (const auto k : c.range(0, 2 * n + 1)) {
      const auto t = c.binom(c.num(2 * n), c.num(k));
      sum.add(c.sign(k) * c.num(k * (2 * n - k)) * t * t * t);
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto n = c.integer("n");
    auto sum = c.sum();
    sum.add(c.sign(n) * c.num(4, 3) * c.num(n * n) * c.binom(c.num(2 * n), c.num(n)) *
            c.binom(c.num(3 * n), c.num(n)));
    return sum.total();
  }
};

Domain numeric_domain(bool nonnegative_a) {
  return concat(bounds(nonnegative_a ? 0 : -10, 10, 25),
                {{"x", ComplexRect{}}, {"y", ComplexRect{}}, {"w", ComplexRect{}}});
}

Domain exact_domain(bool nonnegative_a, bool rational_y, bool with_w) {
  Domain d = concat(bounds(nonnegative_a ? 0 : -10, 10, 25),
                    {{"x", RationalGrid{-5, 5, 2}},
                     {"y", rational_y ? SymbolDomain(RationalGrid{-5, 5, 2})
                                      : SymbolDomain(IntRange{-5, 5, ""})}});
  if (with_w) d.push_back({"w", ValueSet{{1, 2, 3}}});
  return d;
}

std::vector<Symbol> symbols(bool with_w) {
  std::vector<Symbol> s{integer_symbol("a"), integer_symbol("b"), complex_symbol("x"),
                        complex_symbol("y")};
  if (with_w) s.push_back(complex_symbol("w"));
  return s;
}

IdentitySpec family_spec(std::string id, std::string label, std::string statement, bool with_w,
                         bool nonnegative_a, bool rational_y, std::vector<Guard> guards,
                         SideEvaluators sides) {
  IdentitySpec s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.statement = std::move(statement);
  s.symbols = symbols(with_w);
  s.numeric_domain = numeric_domain(nonnegative_a);
  if (!with_w) s.numeric_domain.pop_back();
  s.exact_domain = exact_domain(nonnegative_a, rational_y, with_w);
  s.guards = std::move(guards);
  s.modes = equation_modes();
  s.validity = with_w ? ValidityClass::kIntegerWOnly : ValidityClass::kProvedGeneral;
  s.sides = sides;
  return s;
}

IdentitySpec fixed_spec(std::string id, std::string label, std::string statement,
                        std::int64_t numeric_max, std::int64_t exact_max, SideEvaluators sides) {
  IdentitySpec s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.statement = std::move(statement);
  s.symbols = {nonneg_symbol("n")};
  s.numeric_domain = {{"n", IntRange{0, numeric_max, ""}}};
  s.exact_domain = {{"n", IntRange{0, exact_max, ""}}};
  s.modes = equation_modes();
  s.enumeration = Enumeration{"n", numeric_max, exact_max};
  s.sides = sides;
  return s;
}

Complex y_plus_1(const Assignment& s) { return value(s, "y") + 1.0; }
Complex x_plus_1(const Assignment& s) { return value(s, "x") + 1.0; }
Complex x_plus_2(const Assignment& s) { return value(s, "x") + 2.0; }
Complex x_value(const Assignment& s) { return value(s, "x"); }
Complex x_minus_y_minus_1(const Assignment& s) { return value(s, "x") - value(s, "y") - 1.0; }

}  // namespace

void add_binomial_identities(std::vector<IdentitySpec>& out) {
  out.push_back(family_spec(
      "eq08_binomial1", "binomial1",
      "sum_{k=a}^{b-1} [(x+k+1)^w-(x-y+k)^w] C(x+k,y)^w = (y+1)^w [C(x+b,y+1)^w - C(x+a,y+1)^w]",
      true, false, false, {guard("y+1", y_plus_1)}, sides_of<Binomial1>()));
  out.push_back(family_spec(
      "eq09_binomial2", "binomial2",
      "sum_{k=a}^{b-1} [(y-x+k)^w-(y+k)^w] (-1)^{wk} C(x,y+k)^w"
      " = x^w [(-1)^{wb} C(x-1,y+b-1)^w - (-1)^{wa} C(x-1,y+a-1)^w]",
      true, false, false, {guard("x", x_value)}, sides_of<Binomial2>()));
  out.push_back(family_spec(
      "eq10_binomial3", "binomial3",
      "sum_{k=a}^{b-1} [(-y-k-1)^w-(x-y-k+1)^w] (-1)^{wk} C(x,y+k)^{-w}"
      " = (x+1)^w [(-1)^{wb} C(x+1,y+b)^{-w} - (-1)^{wa} C(x+1,y+a)^{-w}]",
      true, false, false, {guard("x+1", x_plus_1)}, sides_of<Binomial3>()));
  out.push_back(family_spec(
      "eq11_binomial4", "binomial4",
      "sum_{k=a}^{b-1} [(x-k)^w-(y-k+1)^w] C(x,k)^w C(y,k)^{-w}"
      " = (y+1)^w [C(x,b)^w C(y+1,b)^{-w} - C(x,a)^w C(y+1,a)^{-w}]",
      true, true, true, {guard("y+1", y_plus_1)}, sides_of<Binomial4>()));

  out.push_back(family_spec("eq08w1_binomial1w1", "binomial1w1",
                            "sum_{k=a}^{b-1} C(x+k,y) = C(x+b,y+1) - C(x+a,y+1)", false, false,
                            false, {}, sides_of<Binomial1W1>()));
  out.push_back(family_spec(
      "eq09w1_binomial2w1", "binomial2w1",
      "sum_{k=a}^{b-1} (-1)^k C(x,y+k) = (-1)^a C(x-1,y+a-1) - (-1)^b C(x-1,y+b-1)", false,
      false, false, {}, sides_of<Binomial2W1>()));
  out.push_back(family_spec(
      "eq10w1_binomial3w1", "binomial3w1",
      "sum_{k=a}^{b-1} (-1)^k C(x,y+k)^{-1}"
      " = (x+1)/(x+2) [(-1)^a C(x+1,y+a)^{-1} - (-1)^b C(x+1,y+b)^{-1}]",
      false, false, false, {guard("x+2", x_plus_2)}, sides_of<Binomial3W1>()));
  out.push_back(family_spec(
      "eq11w1_binomial4w1", "binomial4w1",
      "sum_{k=a}^{b-1} C(x,k) C(y,k)^{-1}"
      " = (y+1)/(x-y-1) [C(x,b) C(y+1,b)^{-1} - C(x,a) C(y+1,a)^{-1}]",
      false, true, true, {guard("x-y-1", x_minus_y_minus_1)}, sides_of<Binomial4W1>()));

  out.push_back(fixed_spec("eq12_example1", "example1", "sum_{k=0}^{n} C(n,k)^2 = C(2n,n)", 30, 60,
                           sides_of<CentralSquares>()));
  out.push_back(fixed_spec("eq13_example1_derived", "example1 derived",
                           "sum_{k=0}^{n} k C(n,k)^2 = (n/2) C(2n,n)", 30, 60,
                           sides_of<WeightedCentralSquares>()));
  out.push_back(fixed_spec("eq14_dixon", "example2 (Dixon)",
                           "sum_{k=0}^{2n} (-1)^k C(2n,k)^3 = (-1)^n C(2n,n) C(3n,n)", 15, 20,
                           sides_of<Dixon>()));
  out.push_back(fixed_spec("eq15_dixon_derived", "example2 derived",
                           "sum_{k=0}^{2n} (-1)^k k(2n-k) C(2n,k)^3 = (-1)^n (4/3) n^2 C(2n,n) C(3n,n)",
                           15, 20, sides_of<WeightedDixon>()));
}

}  // namespace combid::catalog
