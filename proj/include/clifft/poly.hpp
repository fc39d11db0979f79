#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "clifft/multivector.hpp"

namespace clifft {

/// Monomial exponent multi-index; one entry per coordinate.
using Exponents = std::vector<int>;

/// Polynomial in m real variables with Multivector coefficients, kept in
/// canonical form (no stored zero terms). The domain of the symbolic
/// operators dirac / laplace / gamma_op.
class PolyField {
public:
    explicit PolyField(int m);

    static PolyField constant(const Multivector& c);
    static PolyField monomial(Exponents alpha, const Multivector& coeff);
    /// The coordinate polynomial x_{axis+1} (scalar coefficient 1).
    static PolyField coordinate(int m, int axis);
    /// ||x||^2 = x_1^2 + ... + x_m^2 as a scalar-coefficient polynomial.
    static PolyField radius_squared(int m);

    int dim() const { return m_; }
    const std::map<Exponents, Multivector>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Adds coeff * x^alpha, pruning the term if it cancels to zero.
    void add_term(const Exponents& alpha, const Multivector& coeff);

    int degree() const;          // max |alpha|; -1 for the zero polynomial
    bool is_homogeneous() const; // all stored terms share one |alpha|

    Multivector evaluate(std::span<const double> x) const;

    PolyField& operator+=(const PolyField& rhs);
    PolyField& operator*=(double s);
    friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
    friend PolyField operator*(PolyField a, double s) { return a *= s; }
    friend PolyField operator*(double s, PolyField a) { return a *= s; }

    /// Geometric product extended to polynomials: coefficients multiply in
    /// the algebra (left factor first), exponents add.
    friend PolyField geometric_product(const PolyField& a, const PolyField& b);

    double max_coefficient_norm() const;

private:
    int m_;
    std::map<Exponents, Multivector> terms_;
};

/// Dirac operator sum_i e_i d/dx_i (left blade multiplication).
PolyField dirac(const PolyField& p);

/// Laplace operator sum_i d^2/dx_i^2, applied coefficient-wise.
PolyField laplace(const PolyField& p);

/// Angular operator -sum_{j<k} e_j e_k (x_j d/dx_k - x_k d/dx_j).
PolyField gamma_op(const PolyField& p);

/// Basis of the spherical monogenics of degree k: the nullspace of the Dirac
/// operator restricted to homogeneous degree-k polynomials, computed from the
/// SVD of the operator matrix on monomial-blade coordinates.
std::vector<PolyField> monogenic_basis(int m, int k);

/// Generalized Laguerre parameters: index j >= 0 and superscript alpha > -1.
struct LaguerreParams {
    int j;
    double alpha;
};

/// L_j^alpha(t) by the standard three-term recurrence.
double laguerre_eval(const LaguerreParams& params, double t);

enum class Parity { even, odd };

/// Pointwise field evaluator for the Laguerre x monogenic x Gaussian family:
///   even:  L_j^{m/2+k-1}(||x||^2) M(x) exp(-||x||^2/2)
///   odd :  L_j^{m/2+k}(||x||^2)  x M(x) exp(-||x||^2/2)
/// with M the supplied degree-k monogenic.
std::function<Multivector(std::span<const double>)>
psi_from_monogenic(int j, const PolyField& monogenic, Parity parity);

/// Same family with M taken from monogenic_basis(m, k)[l].
std::function<Multivector(std::span<const double>)>
psi_basis_element(int m, int j, int k, int l, Parity parity);

} // namespace clifft
