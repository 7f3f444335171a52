#ifndef CATDECO_ALGEBRA_HPP
#define CATDECO_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

namespace catdeco {

// Which ladder-operator algebra the oscillator coefficients belong to.
// GHA: norm^2 = eps(n+1) - eps(0).
// GeneralizedSU11: norm^2 = (eps(n+1) - eps(0)) * (eps(n+1) + eps(0) - 1).
enum class AlgebraKind { GHA, GeneralizedSU11 };

std::string algebra_name(AlgebraKind kind);

// Spectrum parameters of the perturbed oscillator
//   eps(n) = n + (a*n + e) / (n + d)
// with the linear coefficient of the denominator fixed to 1.
// Admissible region: |a| < 1, d > 0, plus a numerically strictly
// increasing spectrum over the working range (see validate_spectrum).
struct DeformationParams {
    double a = 0.5;
    double d = 0.2;
    double e = 0.1;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool passed() const;
    std::string summary() const;
};

// Dimensionless energy level n of the deformed spectrum.
double epsilon(int n, const DeformationParams& params);

// Scans |a|<1, d>0, strict monotonicity of eps(0..cutoff+1) and positivity
// of both algebras' squared ladder norms. Returns a per-condition report
// instead of throwing.
ValidationReport validate_spectrum(const DeformationParams& params, int cutoff);

// Tabulated ladder data for one algebra kind.
//   eps[n]                : spectrum values, n = 0..cutoff+1
//   log_norm_factorial[n] : ln of the norm factorial with n factors
//                           (product of ladder norms 0..n-1), entry 0 = 0.
// Factorials are accumulated in log space; the product recursion is the
// source of truth, the Gamma closed form below is a cross-check only.
struct LadderCoefficients {
    AlgebraKind kind = AlgebraKind::GHA;
    DeformationParams params;
    int cutoff = 1;
    std::vector<double> eps;
    std::vector<double> log_norm_factorial;
};

// Ladder norm connecting |n> and |n+1>. Requires n <= cutoff.
// Throws std::domain_error if the squared norm is not strictly positive.
double ladder_norm(int n, const LadderCoefficients& coeffs);

// Builds the tables after validating the spectrum (throws
// std::invalid_argument with the failing report on invalid parameters).
LadderCoefficients build_ladder(AlgebraKind kind, const DeformationParams& params, int cutoff);

// Gamma-function closed form of the su(1,1) norm factorial, evaluated in
// log space. Returns std::nullopt when inapplicable (negative discriminant,
// nonpositive prefactor, or a Gamma argument that is not strictly positive).
std::optional<double> norm_factorial_closed_form(int n, const DeformationParams& params);
std::optional<double> log_norm_factorial_closed_form(int n, const DeformationParams& params);

// Parameters of the closed form / hypergeometric normalization; nullopt when
// the discriminant is negative.
struct HypergeomParams {
    double alpha;
    double beta;
    double gamma3;  // third lower parameter, a - e/d + d + 1
};
std::optional<HypergeomParams> hypergeom_params(const DeformationParams& params);

// Scalar Casimir invariant evaluated at level n (1 <= n <= cutoff):
//   GHA  : norm(n-1)^2 - eps(n)            == -eps(0)
//   su11 : norm(n-1)^2 - eps(n)*(eps(n)-1) == eps(0)*(1 - eps(0))
double casimir_scalar(const LadderCoefficients& coeffs, int n);

}  // namespace catdeco

#endif
