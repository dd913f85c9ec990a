#include "contexts.hpp"

#include <functional>

namespace combid {

FactoredFamily::FactoredFamily(FamilyKind kind, std::int64_t a, std::int64_t b, Complex x,
                               Complex y, Complex w, Probe* probe)
    : a_(a), b_(b) {
  if (b < a) throw DomainError("summation range with b < a");

  const auto lg = [probe](Complex s) {
    if (probe) probe->gamma_argument(s, "gamma argument");
    return log_gamma(s);
  };
  const auto power = [w](Complex base) { return complex_pow(base, w); };
  const auto at = [](std::int64_t l) { return static_cast<double>(l); };
  const double da = at(a);
  const double db = at(b);

  Complex log_k;
  Complex lead;
  Complex phase = 1.0;
  std::function<Complex(std::int64_t)> first;
  std::function<Complex(std::int64_t)> second;

  switch (kind) {
    case FamilyKind::kShiftedUpper:
      log_k = lg(x + da + 1.0) - lg(y + 1.0) - lg(x - y + db);
      lead = y + 1.0;
      first = [&](std::int64_t l) { return x + at(l + 1); };
      second = [&](std::int64_t l) { return (x - y) + at(l); };
      break;
    case FamilyKind::kShiftedLower:
      log_k = lg(x + 1.0) - lg(y + db) - lg(x - y - da + 1.0);
      lead = x;
      phase = exp_i_pi(w * da);
      first = [&](std::int64_t l) { return (y - x) + at(l); };
      second = [&](std::int64_t l) { return y + at(l); };
      break;
    case FamilyKind::kInverseShiftedLower:
      log_k = lg(y + da + 1.0) + lg(x - y - db + 2.0) - lg(x + 1.0);
      lead = x + 1.0;
      phase = exp_i_pi(w * da);
      first = [&](std::int64_t l) { return -y - at(l + 1); };
      second = [&](std::int64_t l) { return (x - y) - at(l - 1); };
      break;
    case FamilyKind::kRatio:
      log_k = lg(x + 1.0) + lg(y - db + 2.0) - lg(x - da + 1.0) - lg(y + 1.0);
      lead = y + 1.0;
      first = [&](std::int64_t l) { return x - at(l); };
      second = [&](std::int64_t l) { return y - at(l - 1); };
      break;
  }

  common_ = phase * std::exp(w * log_k);
  lead_inverse_ = complex_pow(lead, -w);

  // The bases are formed exactly as the identities write them, so the
  // explicit powers in each summand coincide with the shared factors.
  const auto n = static_cast<std::size_t>(b - a);
  prefix_.assign(n + 1, Complex(1.0));
  suffix_.assign(n + 1, Complex(1.0));
  for (std::size_t i = 0; i < n; ++i) {
    prefix_[i + 1] = prefix_[i] * power(first(a + static_cast<std::int64_t>(i)));
  }
  for (std::size_t i = n; i-- > 0;) {
    suffix_[i] = power(second(a + static_cast<std::int64_t>(i))) * suffix_[i + 1];
  }
}

std::size_t FactoredFamily::index(std::int64_t k) const {
  if (k < a_ || k > b_) throw DomainError("index outside the summation range");
  return static_cast<std::size_t>(k - a_);
}

Complex FactoredFamily::summand(std::int64_t k) const {
  const auto i = index(k);
  if (k == b_) throw DomainError("summand index outside the summation range");
  return common_ * prefix_[i] * suffix_[i + 1];
}

Complex FactoredFamily::boundary(std::int64_t j) const {
  const auto i = index(j);
  return lead_inverse_ * common_ * prefix_[i] * suffix_[i];
}

}  // namespace combid
