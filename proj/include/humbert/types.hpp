#ifndef HUMBERT_TYPES_HPP_
#define HUMBERT_TYPES_HPP_

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace humbert {

using cplx = std::complex<double>;

/// Error on inputs outside an operation's supported domain
/// (branch cuts, invalid sectors, violated parameter constraints).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A parameter sits on (or within tolerance of) a pole of the formula,
/// e.g. a gamma argument in Z_{<=0} or a vanishing denominator Pochhammer.
class pole_error : public domain_error {
 public:
  explicit pole_error(const std::string& what) : domain_error(what) {}
};

/// No evaluation regime covers the requested point; the message names the
/// nearest applicable regime(s).
class unsupported_domain : public domain_error {
 public:
  explicit unsupported_domain(const std::string& what) : domain_error(what) {}
};

/// Result of a truncated convergent series or quadrature.
struct SeriesResult {
  cplx value{0.0, 0.0};
  double abs_error_estimate = 0.0;  // modulus of the first omitted term (or
                                    // quadrature refinement delta)
  std::size_t terms_used = 0;
  bool converged = false;
};

/// Partial sum of an asymptotic (possibly divergent) expansion. No error
/// bound is claimed, only the magnitude of the last retained term.
struct TruncatedValue {
  cplx value{0.0, 0.0};
  double last_term_modulus = 0.0;
  std::size_t terms_used = 0;
};

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// True when z lies within tol of a nonpositive integer.
inline bool is_nonpos_int(cplx z, double tol = 1e-9) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

/// True when z lies within tol of any integer.
inline bool is_int(cplx z, double tol = 1e-9) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

/// x on the branch cut [1, inf) of (1-x)^s and of the 2F1-series region.
inline bool on_cut_from_one(cplx x) {
  return x.imag() == 0.0 && x.real() >= 1.0;
}

}  // namespace humbert

#endif  // HUMBERT_TYPES_HPP_
