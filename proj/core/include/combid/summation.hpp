#pragma once

#include <cmath>
#include <complex>

namespace combid {

/// Neumaier's improved Kahan summation. The running compensation is kept
/// separately and folded in only when the total is read.
class NeumaierSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double total() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Compensated complex sum; real and imaginary parts are compensated
/// independently. Also tracks the sum of term magnitudes, the numerator of
/// the cancellation estimate used by the verifiers.
class ComplexSum {
 public:
  void add(std::complex<double> term) noexcept {
    re_.add(term.real());
    im_.add(term.imag());
    magnitude_ += std::abs(term);
  }
  std::complex<double> total() const noexcept { return {re_.total(), im_.total()}; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
  double magnitude_ = 0.0;
};

}  // namespace combid
