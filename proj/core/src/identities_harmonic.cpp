// Generalized-harmonic identities obtained by differentiating the telescoping
// binomial identities, and their w = 1 forms.

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

// The general forms share one shape:
//   sum_k [A_k^w H_{c,u(k)} - B_k^w H_{c,v(k)}] F(k) = sign * lead^w G(j) H_{c,b-a}
// with u, v either (k-a+1, k-a) or (b-k-1, b-k) and j = b or a accordingly.
enum class Orientation { kFromA, kFromB };

template <class Ctx, class Bases>
typename Ctx::Value harmonic_lhs(Ctx& c, FamilyKind kind, Orientation o,
                                 const typename Ctx::Value& offset, Bases bases) {
  const auto p = params(c);
  auto fam = c.family(kind, p.a, p.b, p.x, p.y, p.w);
  auto sum = c.sum();
  for (const auto k : c.range(p.a, p.b)) {
    const auto [first, second] = bases(p, k);
    const std::int64_t u = o == Orientation::kFromA ? k - p.a + 1 : p.b - k - 1;
    const std::int64_t v = o == Orientation::kFromA ? k - p.a : p.b - k;
    sum.add((c.pow(first, p.w) * c.harmonic(offset, u) - c.pow(second, p.w) * c.harmonic(offset, v)) *
            fam.summand(k));
  }
  return sum.total();
}

template <class Ctx>
typename Ctx::Value harmonic_rhs(Ctx& c, FamilyKind kind, Orientation o,
                                 const typename Ctx::Value& offset,
                                 const typename Ctx::Value& lead) {
  const auto p = params(c);
  auto fam = c.family(kind, p.a, p.b, p.x, p.y, p.w);
  const auto value = c.pow(lead, p.w) * c.harmonic(offset, p.b - p.a);
  auto sum = c.sum();
  if (o == Orientation::kFromA) {
    sum.add(value * fam.boundary(p.b));
  } else {
    sum.add(-(value * fam.boundary(p.a)));
  }
  return sum.total();
}

template <class Ctx>
auto family1_bases(Ctx& c) {
  return [&c](const Params<Ctx>& p, std::int64_t k) {
    return std::pair{p.x + c.num(k + 1), p.x - p.y + c.num(k)};
  };
}
template <class Ctx>
auto family2_bases(Ctx& c) {
  return [&c](const Params<Ctx>& p, std::int64_t k) {
    return std::pair{p.y - p.x + c.num(k), p.y + c.num(k)};
  };
}
template <class Ctx>
auto family3_bases(Ctx& c) {
  return [&c](const Params<Ctx>& p, std::int64_t k) {
    return std::pair{-p.y - c.num(k + 1), p.x - p.y - c.num(k - 1)};
  };
}
template <class Ctx>
auto family4_bases(Ctx& c) {
  return [&c](const Params<Ctx>& p, std::int64_t k) {
    return std::pair{p.x - c.num(k), p.y - c.num(k - 1)};
  };
}

struct Harmonic1a {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return p.x + c.num(p.a); }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kShiftedUpper, Orientation::kFromA, offset(c, p), family1_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kShiftedUpper, Orientation::kFromA, offset(c, p), p.y + c.num(1));
  }
};

struct Harmonic1b {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return p.y - p.x - c.num(p.b); }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kShiftedUpper, Orientation::kFromB, offset(c, p), family1_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kShiftedUpper, Orientation::kFromB, offset(c, p), p.y + c.num(1));
  }
};

struct Harmonic2a {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return p.y - p.x + c.num(p.a - 1); }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kShiftedLower, Orientation::kFromA, offset(c, p), family2_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kShiftedLower, Orientation::kFromA, offset(c, p), p.x);
  }
};

struct Harmonic2b {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return -p.y - c.num(p.b); }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kShiftedLower, Orientation::kFromB, offset(c, p), family2_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kShiftedLower, Orientation::kFromB, offset(c, p), p.x);
  }
};

struct Harmonic3a {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return p.y + c.num(p.a); }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kInverseShiftedLower, Orientation::kFromA, offset(c, p),
                        family3_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kInverseShiftedLower, Orientation::kFromA, offset(c, p),
                        p.x + c.num(1));
  }
};

struct Harmonic3b {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) {
    return p.x - p.y - c.num(p.b - 1);
  }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kInverseShiftedLower, Orientation::kFromB, offset(c, p),
                        family3_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kInverseShiftedLower, Orientation::kFromB, offset(c, p),
                        p.x + c.num(1));
  }
};

struct Harmonic4a {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return c.num(p.a - 1) - p.x; }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kRatio, Orientation::kFromA, offset(c, p), family4_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kRatio, Orientation::kFromA, offset(c, p), p.y + c.num(1));
  }
};

struct Harmonic4b {
  template <class Ctx>
  static typename Ctx::Value offset(Ctx& c, const Params<Ctx>& p) { return p.y - c.num(p.b - 1); }
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_lhs(c, FamilyKind::kRatio, Orientation::kFromB, offset(c, p), family4_bases(c));
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params(c);
    return harmonic_rhs(c, FamilyKind::kRatio, Orientation::kFromB, offset(c, p), p.y + c.num(1));
  }
};

// sum C(x+k,y) H_{x+a,k-a} = C(x+b,y+1)(H_{x+a,b-a} - 1/(y+1)) + C(x+a,y+1)/(y+1)
struct Harmonic1aW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.x + c.num(p.a);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.binom(p.x + c.num(k), p.y) * c.harmonic(off, k - p.a));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.x + c.num(p.a);
    const auto y1 = p.y + c.num(1);
    const auto r = c.div(c.num(1), y1, "y+1");
    auto sum = c.sum();
    sum.add(c.binom(p.x + c.num(p.b), y1) * (c.harmonic(off, p.b - p.a) - r));
    sum.add(r * c.binom(p.x + c.num(p.a), y1));
    return sum.total();
  }
};

// sum C(x+k,y) H_{y-x-b,b-k-1} = -C(x+a,y+1)(H_{y-x-b,b-a} - 1/(y+1)) - C(x+b,y+1)/(y+1)
struct Harmonic1bW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y - p.x - c.num(p.b);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.binom(p.x + c.num(k), p.y) * c.harmonic(off, p.b - k - 1));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y - p.x - c.num(p.b);
    const auto y1 = p.y + c.num(1);
    const auto r = c.div(c.num(1), y1, "y+1");
    auto sum = c.sum();
    sum.add(-(c.binom(p.x + c.num(p.a), y1) * (c.harmonic(off, p.b - p.a) - r)));
    sum.add(-(r * c.binom(p.x + c.num(p.b), y1)));
    return sum.total();
  }
};

// sum (-1)^k C(x,y+k) H_{y-x+a-1,k-a}
//   = (-1)^{b+1} C(x-1,y+b-1)(H_{y-x+a-1,b-a} + 1/x) + (-1)^a C(x-1,y+a-1)/x
struct Harmonic2aW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y - p.x + c.num(p.a - 1);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.sign(k) * c.binom(p.x, p.y + c.num(k)) * c.harmonic(off, k - p.a));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y - p.x + c.num(p.a - 1);
    const auto x1 = p.x - c.num(1);
    const auto r = c.div(c.num(1), p.x, "x");
    auto sum = c.sum();
    sum.add(c.sign(p.b + 1) * c.binom(x1, p.y + c.num(p.b - 1)) * (c.harmonic(off, p.b - p.a) + r));
    sum.add(c.sign(p.a) * r * c.binom(x1, p.y + c.num(p.a - 1)));
    return sum.total();
  }
};

// sum (-1)^k C(x,y+k) H_{-y-b,b-k-1}
//   = (-1)^a C(x-1,y+a-1)(H_{-y-b,b-a} + 1/x) - (-1)^b C(x-1,y+b-1)/x
struct Harmonic2bW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = -p.y - c.num(p.b);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.sign(k) * c.binom(p.x, p.y + c.num(k)) * c.harmonic(off, p.b - k - 1));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = -p.y - c.num(p.b);
    const auto x1 = p.x - c.num(1);
    const auto r = c.div(c.num(1), p.x, "x");
    auto sum = c.sum();
    sum.add(c.sign(p.a) * c.binom(x1, p.y + c.num(p.a - 1)) * (c.harmonic(off, p.b - p.a) + r));
    sum.add(-(c.sign(p.b) * r * c.binom(x1, p.y + c.num(p.b - 1))));
    return sum.total();
  }
};

// sum (-1)^k C(x,y+k)^{-1} H_{y+a,k-a}
//   = (x+1)/(x+2) [(-1)^{b+1} C(x+1,y+b)^{-1}(H_{y+a,b-a} - 1/(x+2))
//                  - (-1)^a C(x+1,y+a)^{-1}/(x+2)]
struct Harmonic3aW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y + c.num(p.a);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.sign(k) * c.inv(c.binom(p.x, p.y + c.num(k)), "C(x,y+k)") * c.harmonic(off, k - p.a));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y + c.num(p.a);
    const auto x1 = p.x + c.num(1);
    const auto r = c.div(c.num(1), p.x + c.num(2), "x+2");
    const auto factor = x1 * r;
    auto sum = c.sum();
    sum.add(factor * c.sign(p.b + 1) * c.inv(c.binom(x1, p.y + c.num(p.b)), "C(x+1,y+b)") *
            (c.harmonic(off, p.b - p.a) - r));
    sum.add(-(factor * c.sign(p.a) * r * c.inv(c.binom(x1, p.y + c.num(p.a)), "C(x+1,y+a)")));
    return sum.total();
  }
};

// sum (-1)^k C(x,y+k)^{-1} H_{x-y-b+1,b-k-1}
//   = (x+1)/(x+2) [(-1)^a C(x+1,y+a)^{-1}(H_{x-y-b+1,b-a} - 1/(x+2))
//                  + (-1)^b C(x+1,y+b)^{-1}/(x+2)]
struct Harmonic3bW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.x - p.y - c.num(p.b - 1);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.sign(k) * c.inv(c.binom(p.x, p.y + c.num(k)), "C(x,y+k)") *
              c.harmonic(off, p.b - k - 1));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.x - p.y - c.num(p.b - 1);
    const auto x1 = p.x + c.num(1);
    const auto r = c.div(c.num(1), p.x + c.num(2), "x+2");
    const auto factor = x1 * r;
    auto sum = c.sum();
    sum.add(factor * c.sign(p.a) * c.inv(c.binom(x1, p.y + c.num(p.a)), "C(x+1,y+a)") *
            (c.harmonic(off, p.b - p.a) - r));
    sum.add(factor * c.sign(p.b) * r * c.inv(c.binom(x1, p.y + c.num(p.b)), "C(x+1,y+b)"));
    return sum.total();
  }
};

// sum C(x,k) C(y,k)^{-1} H_{a-x-1,k-a}
//   = (y+1)/(x-y-1) [C(x,b) C(y+1,b)^{-1}(H_{a-x-1,b-a} + 1/(x-y-1))
//                    - C(x,a) C(y+1,a)^{-1}/(x-y-1)]
struct Harmonic4aW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = c.num(p.a - 1) - p.x;
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.binom(p.x, c.num(k)) * c.inv(c.binom(p.y, c.num(k)), "C(y,k)") *
              c.harmonic(off, k - p.a));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = c.num(p.a - 1) - p.x;
    const auto y1 = p.y + c.num(1);
    const auto r = c.div(c.num(1), p.x - p.y - c.num(1), "x-y-1");
    const auto factor = y1 * r;
    auto sum = c.sum();
    sum.add(factor * c.binom(p.x, c.num(p.b)) * c.inv(c.binom(y1, c.num(p.b)), "C(y+1,b)") *
            (c.harmonic(off, p.b - p.a) + r));
    sum.add(-(factor * r * c.binom(p.x, c.num(p.a)) * c.inv(c.binom(y1, c.num(p.a)), "C(y+1,a)")));
    return sum.total();
  }
};

// sum C(x,k) C(y,k)^{-1} H_{y-b+1,b-k-1}
//   = (y+1)/(y-x+1) [C(x,a) C(y+1,a)^{-1}(H_{y-b+1,b-a} - 1/(y-x+1))
//                    + C(x,b) C(y+1,b)^{-1}/(y-x+1)]
struct Harmonic4bW1 {
  template <class Ctx>
  static typename Ctx::Value lhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y - c.num(p.b - 1);
    auto sum = c.sum();
    for (const auto k : c.range(p.a, p.b)) {
      sum.add(c.binom(p.x, c.num(k)) * c.inv(c.binom(p.y, c.num(k)), "C(y,k)") *
              c.harmonic(off, p.b - k - 1));
    }
    return sum.total();
  }
  template <class Ctx>
  static typename Ctx::Value rhs(Ctx& c) {
    const auto p = params_w1(c);
    const auto off = p.y - c.num(p.b - 1);
    const auto y1 = p.y + c.num(1);
    const auto r = c.div(c.num(1), p.y - p.x + c.num(1), "y-x+1");
    const auto factor = y1 * r;
    auto sum = c.sum();
    sum.add(factor * c.binom(p.x, c.num(p.a)) * c.inv(c.binom(y1, c.num(p.a)), "C(y+1,a)") *
            (c.harmonic(off, p.b - p.a) - r));
    sum.add(factor * r * c.binom(p.x, c.num(p.b)) * c.inv(c.binom(y1, c.num(p.b)), "C(y+1,b)"));
    return sum.total();
  }
};

Complex y_plus_1(const Assignment& s) { return value(s, "y") + 1.0; }
Complex x_plus_1(const Assignment& s) { return value(s, "x") + 1.0; }
Complex x_plus_2(const Assignment& s) { return value(s, "x") + 2.0; }
Complex x_value(const Assignment& s) { return value(s, "x"); }
Complex x_minus_y_minus_1(const Assignment& s) { return value(s, "x") - value(s, "y") - 1.0; }
Complex y_minus_x_plus_1(const Assignment& s) { return value(s, "y") - value(s, "x") + 1.0; }

IdentitySpec harmonic_spec(std::string id, std::string label, std::string statement, bool with_w,
                           bool ratio_family, std::vector<Guard> guards, SideEvaluators sides) {
  IdentitySpec s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.statement = std::move(statement);
  s.symbols = {integer_symbol("a"), integer_symbol("b"), complex_symbol("x"), complex_symbol("y")};
  const std::int64_t a_lo = ratio_family ? 0 : -10;
  s.numeric_domain = concat(bounds(a_lo, 10, 25), {{"x", ComplexRect{}}, {"y", ComplexRect{}}});
  s.exact_domain = concat(bounds(a_lo, 10, 25),
                          {{"x", RationalGrid{-5, 5, 2}},
                           {"y", ratio_family ? SymbolDomain(RationalGrid{-5, 5, 2})
                                              : SymbolDomain(IntRange{-5, 5, ""})}});
  if (with_w) {
    s.symbols.push_back(complex_symbol("w"));
    s.numeric_domain.push_back({"w", ComplexRect{}});
    s.exact_domain.push_back({"w", ValueSet{{1, 2, 3}}});
  }
  s.guards = std::move(guards);
  s.modes = equation_modes();
  s.validity = with_w ? ValidityClass::kIntegerWOnly : ValidityClass::kProvedGeneral;
  s.sides = sides;
  return s;
}

}  // namespace

void add_harmonic_identities(std::vector<IdentitySpec>& out) {
  out.push_back(harmonic_spec(
      "eq22_harmonic1a", "harmonic1a",
      "sum_{k=a}^{b-1} [(x+k+1)^w H_{x+a,k-a+1} - (x-y+k)^w H_{x+a,k-a}] C(x+k,y)^w"
      " = (y+1)^w C(x+b,y+1)^w H_{x+a,b-a}",
      true, false, {guard("y+1", y_plus_1)}, sides_of<Harmonic1a>()));
  out.push_back(harmonic_spec(
      "eq23_harmonic1b", "harmonic1b",
      "sum_{k=a}^{b-1} [(x+k+1)^w H_{y-x-b,b-k-1} - (x-y+k)^w H_{y-x-b,b-k}] C(x+k,y)^w"
      " = -(y+1)^w C(x+a,y+1)^w H_{y-x-b,b-a}",
      true, false, {guard("y+1", y_plus_1)}, sides_of<Harmonic1b>()));
  out.push_back(harmonic_spec(
      "eq24_harmonic2a", "harmonic2a",
      "sum_{k=a}^{b-1} [(y-x+k)^w H_{y-x+a-1,k-a+1} - (y+k)^w H_{y-x+a-1,k-a}] (-1)^{wk} C(x,y+k)^w"
      " = x^w (-1)^{wb} C(x-1,y+b-1)^w H_{y-x+a-1,b-a}",
      true, false, {guard("x", x_value)}, sides_of<Harmonic2a>()));
  out.push_back(harmonic_spec(
      "eq25_harmonic2b", "harmonic2b",
      "sum_{k=a}^{b-1} [(y-x+k)^w H_{-y-b,b-k-1} - (y+k)^w H_{-y-b,b-k}] (-1)^{wk} C(x,y+k)^w"
      " = -x^w (-1)^{wa} C(x-1,y+a-1)^w H_{-y-b,b-a}",
      true, false, {guard("x", x_value)}, sides_of<Harmonic2b>()));
  out.push_back(harmonic_spec(
      "eq26_harmonic3a", "harmonic3a",
      "sum_{k=a}^{b-1} [(-y-k-1)^w H_{y+a,k-a+1} - (x-y-k+1)^w H_{y+a,k-a}] (-1)^{wk} C(x,y+k)^{-w}"
      " = (x+1)^w (-1)^{wb} C(x+1,y+b)^{-w} H_{y+a,b-a}",
      true, false, {guard("x+1", x_plus_1)}, sides_of<Harmonic3a>()));
  out.push_back(harmonic_spec(
      "eq27_harmonic3b", "harmonic3b",
      "sum_{k=a}^{b-1} [(-y-k-1)^w H_{x-y-b+1,b-k-1} - (x-y-k+1)^w H_{x-y-b+1,b-k}]"
      " (-1)^{wk} C(x,y+k)^{-w} = -(x+1)^w (-1)^{wa} C(x+1,y+a)^{-w} H_{x-y-b+1,b-a}",
      true, false, {guard("x+1", x_plus_1)}, sides_of<Harmonic3b>()));
  out.push_back(harmonic_spec(
      "eq28_harmonic4a", "harmonic4a",
      "sum_{k=a}^{b-1} [(x-k)^w H_{a-x-1,k-a+1} - (y-k+1)^w H_{a-x-1,k-a}] C(x,k)^w C(y,k)^{-w}"
      " = (y+1)^w C(x,b)^w C(y+1,b)^{-w} H_{a-x-1,b-a}",
      true, true, {guard("y+1", y_plus_1)}, sides_of<Harmonic4a>()));
  out.push_back(harmonic_spec(
      "eq29_harmonic4b", "harmonic4b",
      "sum_{k=a}^{b-1} [(x-k)^w H_{y-b+1,b-k-1} - (y-k+1)^w H_{y-b+1,b-k}] C(x,k)^w C(y,k)^{-w}"
      " = -(y+1)^w C(x,a)^w C(y+1,a)^{-w} H_{y-b+1,b-a}",
      true, true, {guard("y+1", y_plus_1)}, sides_of<Harmonic4b>()));

  out.push_back(harmonic_spec(
      "eq30_harmonic1aw1", "harmonic1aw1",
      "sum_{k=a}^{b-1} C(x+k,y) H_{x+a,k-a} = C(x+b,y+1) (H_{x+a,b-a} - 1/(y+1)) + C(x+a,y+1)/(y+1)",
      false, false, {guard("y+1", y_plus_1)}, sides_of<Harmonic1aW1>()));
  out.push_back(harmonic_spec(
      "eq31_harmonic1bw1", "harmonic1bw1",
      "sum_{k=a}^{b-1} C(x+k,y) H_{y-x-b,b-k-1}"
      " = -C(x+a,y+1) (H_{y-x-b,b-a} - 1/(y+1)) - C(x+b,y+1)/(y+1)",
      false, false, {guard("y+1", y_plus_1)}, sides_of<Harmonic1bW1>()));
  out.push_back(harmonic_spec(
      "eq32_harmonic2aw1", "harmonic2aw1",
      "sum_{k=a}^{b-1} (-1)^k C(x,y+k) H_{y-x+a-1,k-a}"
      " = (-1)^{b+1} C(x-1,y+b-1) (H_{y-x+a-1,b-a} + 1/x) + (-1)^a C(x-1,y+a-1)/x",
      false, false, {guard("x", x_value)}, sides_of<Harmonic2aW1>()));
  out.push_back(harmonic_spec(
      "eq33_harmonic2bw1", "harmonic2bw1",
      "sum_{k=a}^{b-1} (-1)^k C(x,y+k) H_{-y-b,b-k-1}"
      " = (-1)^a C(x-1,y+a-1) (H_{-y-b,b-a} + 1/x) - (-1)^b C(x-1,y+b-1)/x",
      false, false, {guard("x", x_value)}, sides_of<Harmonic2bW1>()));
  out.push_back(harmonic_spec(
      "eq34_harmonic3aw1", "harmonic3aw1",
      "sum_{k=a}^{b-1} (-1)^k C(x,y+k)^{-1} H_{y+a,k-a} = (x+1)/(x+2)"
      " [(-1)^{b+1} C(x+1,y+b)^{-1} (H_{y+a,b-a} - 1/(x+2)) - (-1)^a C(x+1,y+a)^{-1}/(x+2)]",
      false, false, {guard("x+2", x_plus_2)}, sides_of<Harmonic3aW1>()));
  out.push_back(harmonic_spec(
      "eq35_harmonic3bw1", "harmonic3bw1",
      "sum_{k=a}^{b-1} (-1)^k C(x,y+k)^{-1} H_{x-y-b+1,b-k-1} = (x+1)/(x+2)"
      " [(-1)^a C(x+1,y+a)^{-1} (H_{x-y-b+1,b-a} - 1/(x+2)) + (-1)^b C(x+1,y+b)^{-1}/(x+2)]",
      false, false, {guard("x+2", x_plus_2)}, sides_of<Harmonic3bW1>()));
  out.push_back(harmonic_spec(
      "eq36_harmonic4aw1", "harmonic4aw1",
      "sum_{k=a}^{b-1} C(x,k) C(y,k)^{-1} H_{a-x-1,k-a} = (y+1)/(x-y-1)"
      " [C(x,b) C(y+1,b)^{-1} (H_{a-x-1,b-a} + 1/(x-y-1)) - C(x,a) C(y+1,a)^{-1}/(x-y-1)]",
      false, true, {guard("x-y-1", x_minus_y_minus_1)}, sides_of<Harmonic4aW1>()));
  out.push_back(harmonic_spec(
      "eq37_harmonic4bw1", "harmonic4bw1",
      "sum_{k=a}^{b-1} C(x,k) C(y,k)^{-1} H_{y-b+1,b-k-1} = (y+1)/(y-x+1)"
      " [C(x,a) C(y+1,a)^{-1} (H_{y-b+1,b-a} - 1/(y-x+1)) + C(x,b) C(y+1,b)^{-1}/(y-x+1)]",
      false, true, {guard("y-x+1", y_minus_x_plus_1)}, sides_of<Harmonic4bW1>()));
}

}  // namespace combid::catalog
