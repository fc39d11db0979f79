#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace clifft {

/// Largest supported algebra dimension; Cl(0,8) already has 256 blade
/// coefficients, which is as dense as any caller here needs.
inline constexpr int kMaxDim = 8;

/// Grade of a basis blade, i.e. the number of generators in the product.
int blade_grade(unsigned mask);

/// Sign of the product e_A e_B in Cl(0,m), where A and B are canonical
/// ascending generator products encoded as bitmasks (bit i <=> e_{i+1}).
/// Counts the transpositions needed to merge the two sequences plus one
/// factor -1 per shared generator (every generator squares to -1).
int blade_product_sign(unsigned a, unsigned b);

/// Dense element of the Clifford algebra Cl(0,m): one real coefficient per
/// basis blade, indexed by generator bitmask. Values are immutable in spirit;
/// all operations return new objects.
class Multivector {
public:
    explicit Multivector(int m);

    static Multivector scalar(int m, double value);
    static Multivector blade(int m, unsigned mask, double value = 1.0);
    /// Generator e_{axis+1}.
    static Multivector basis_vector(int m, int axis);
    /// Grade-1 element with the given Euclidean components.
    static Multivector from_vector(std::span<const double> components);

    int dim() const { return m_; }
    std::size_t size() const { return coeffs_.size(); }

    double operator[](std::size_t mask) const { return coeffs_[mask]; }
    double& operator[](std::size_t mask) { return coeffs_[mask]; }
    std::span<const double> coefficients() const { return coeffs_; }

    Multivector& operator+=(const Multivector& rhs);
    Multivector& operator-=(const Multivector& rhs);
    Multivector& operator*=(double s);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, double s) { return a *= s; }
    friend Multivector operator*(double s, Multivector a) { return a *= s; }
    Multivector operator-() const;

    bool is_zero(double tol = 0.0) const;

private:
    int m_;
    std::vector<double> coeffs_;
};

/// Bilinear extension of the generator rules e_i e_j = -e_j e_i, e_i^2 = -1.
Multivector geometric_product(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
}

/// Keeps the grade-k part, zeroes everything else.
Multivector grade_project(const Multivector& a, int k);

/// Euclidean norm of the blade coefficient vector.
double clifford_norm(const Multivector& a);

/// True when only grade-1 coefficients are (numerically) present.
bool is_pure_vector(const Multivector& a, double tol = 1e-12);

/// Grade-1 coefficients as a plain Euclidean vector.
std::vector<double> vector_part(const Multivector& a);

/// <x,y> of two grade-1 elements, returned as a scalar multivector.
/// Equals the Euclidean dot product and -1/2 (xy + yx).
Multivector inner_product(const Multivector& x, const Multivector& y);

/// x ^ y of two grade-1 elements: the grade-2 part 1/2 (xy - yx).
Multivector wedge_product(const Multivector& x, const Multivector& y);

/// Multivector with complexified coefficients, stored as a (real, imaginary)
/// pair with the product extended bilinearly. Used for kernel evaluations at
/// complexified arguments.
struct ComplexMultivector {
    Multivector re;
    Multivector im;

    explicit ComplexMultivector(int m) : re(m), im(m) {}
    ComplexMultivector(Multivector real_part, Multivector imag_part);

    int dim() const { return re.dim(); }
};

ComplexMultivector geometric_product(const ComplexMultivector& a, const ComplexMultivector& b);
ComplexMultivector operator+(const ComplexMultivector& a, const ComplexMultivector& b);
double clifford_norm(const ComplexMultivector& a);

} // namespace clifft
