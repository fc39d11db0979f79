#include "clifft/poly.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace clifft {

namespace {

void check_poly_dim(int m) {
    if (m < 1 || m > kMaxDim)
        throw std::invalid_argument("polynomial dimension must be in [1, 8]");
}

/// All exponent multi-indices with |alpha| = k, lexicographic order.
void list_monomials(int m, int k, Exponents& prefix, std::vector<Exponents>& out) {
    if (static_cast<int>(prefix.size()) == m - 1) {
        prefix.push_back(k);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = k; e >= 0; --e) {
        prefix.push_back(e);
        list_monomials(m, k - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Exponents> monomials_of_degree(int m, int k) {
    std::vector<Exponents> out;
    Exponents prefix;
    list_monomials(m, k, prefix, out);
    return out;
}

} // namespace

PolyField::PolyField(int m) : m_(m) {
    check_poly_dim(m);
}

PolyField PolyField::constant(const Multivector& c) {
    PolyField out(c.dim());
    out.add_term(Exponents(static_cast<std::size_t>(c.dim()), 0), c);
    return out;
}

PolyField PolyField::monomial(Exponents alpha, const Multivector& coeff) {
    PolyField out(coeff.dim());
    if (static_cast<int>(alpha.size()) != coeff.dim())
        throw std::invalid_argument("exponent arity does not match dimension");
    for (int e : alpha)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
    out.add_term(alpha, coeff);
    return out;
}

PolyField PolyField::coordinate(int m, int axis) {
    if (axis < 0 || axis >= m)
        throw std::invalid_argument("coordinate index out of range");
    Exponents alpha(static_cast<std::size_t>(m), 0);
    alpha[static_cast<std::size_t>(axis)] = 1;
    return monomial(alpha, Multivector::scalar(m, 1.0));
}

PolyField PolyField::radius_squared(int m) {
    PolyField out(m);
    for (int i = 0; i < m; ++i) {
        Exponents alpha(static_cast<std::size_t>(m), 0);
        alpha[static_cast<std::size_t>(i)] = 2;
        out.add_term(alpha, Multivector::scalar(m, 1.0));
    }
    return out;
}

void PolyField::add_term(const Exponents& alpha, const Multivector& coeff) {
    if (static_cast<int>(alpha.size()) != m_)
        throw std::invalid_argument("exponent arity does not match dimension");
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(alpha, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

int PolyField::degree() const {
    int deg = -1;
    for (const auto& [alpha, coeff] : terms_) {
        int d = 0;
        for (int e : alpha)
            d += e;
        if (d > deg)
            deg = d;
    }
    return deg;
}

bool PolyField::is_homogeneous() const {
    int deg = -1;
    for (const auto& [alpha, coeff] : terms_) {
        int d = 0;
        for (int e : alpha)
            d += e;
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return false;
    }
    return true;
}

Multivector PolyField::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != m_)
        throw std::invalid_argument("evaluation point arity mismatch");
    Multivector out(m_);
    for (const auto& [alpha, coeff] : terms_) {
        double mono = 1.0;
        for (int i = 0; i < m_; ++i)
            for (int e = 0; e < alpha[static_cast<std::size_t>(i)]; ++e)
                mono *= x[static_cast<std::size_t>(i)];
        out += coeff * mono;
    }
    return out;
}

PolyField& PolyField::operator+=(const PolyField& rhs) {
    if (m_ != rhs.m_)
        throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [alpha, coeff] : rhs.terms_)
        add_term(alpha, coeff);
    return *this;
}

PolyField& PolyField::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, coeff] : terms_)
        coeff *= s;
    return *this;
}

PolyField geometric_product(const PolyField& a, const PolyField& b) {
    if (a.m_ != b.m_)
        throw std::invalid_argument("polynomial dimension mismatch");
    PolyField out(a.m_);
    for (const auto& [aa, ca] : a.terms_) {
        for (const auto& [ab, cb] : b.terms_) {
            Exponents alpha(aa);
            for (std::size_t i = 0; i < alpha.size(); ++i)
                alpha[i] += ab[i];
            out.add_term(alpha, geometric_product(ca, cb));
        }
    }
    return out;
}

double PolyField::max_coefficient_norm() const {
    double best = 0.0;
    for (const auto& [alpha, coeff] : terms_)
        best = std::max(best, clifford_norm(coeff));
    return best;
}

PolyField dirac(const PolyField& p) {
    PolyField out(p.dim());
    for (const auto& [alpha, coeff] : p.terms()) {
        for (int i = 0; i < p.dim(); ++i) {
            const int e = alpha[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            Exponents da(alpha);
            da[static_cast<std::size_t>(i)] -= 1;
            out.add_term(da, geometric_product(Multivector::basis_vector(p.dim(), i), coeff) *
                                 static_cast<double>(e));
        }
    }
    return out;
}

PolyField laplace(const PolyField& p) {
    PolyField out(p.dim());
    for (const auto& [alpha, coeff] : p.terms()) {
        for (int i = 0; i < p.dim(); ++i) {
            const int e = alpha[static_cast<std::size_t>(i)];
            if (e < 2)
                continue;
            Exponents da(alpha);
            da[static_cast<std::size_t>(i)] -= 2;
            out.add_term(da, coeff * static_cast<double>(e * (e - 1)));
        }
    }
    return out;
}

PolyField gamma_op(const PolyField& p) {
    PolyField out(p.dim());
    const int m = p.dim();
    for (const auto& [alpha, coeff] : p.terms()) {
        for (int j = 0; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                const Multivector ejk =
                    Multivector::blade(m, (1u << j) | (1u << k), 1.0);
                // -e_jk x_j d/dx_k
                if (alpha[static_cast<std::size_t>(k)] > 0) {
                    Exponents da(alpha);
                    da[static_cast<std::size_t>(k)] -= 1;
                    da[static_cast<std::size_t>(j)] += 1;
                    out.add_term(da, geometric_product(ejk, coeff) *
                                         (-static_cast<double>(alpha[static_cast<std::size_t>(k)])));
                }
                // +e_jk x_k d/dx_j
                if (alpha[static_cast<std::size_t>(j)] > 0) {
                    Exponents da(alpha);
                    da[static_cast<std::size_t>(j)] -= 1;
                    da[static_cast<std::size_t>(k)] += 1;
                    out.add_term(da, geometric_product(ejk, coeff) *
                                         static_cast<double>(alpha[static_cast<std::size_t>(j)]));
                }
            }
        }
    }
    return out;
}

std::vector<PolyField> monogenic_basis(int m, int k) {
    check_poly_dim(m);
    if (m % 2 != 0)
        throw std::invalid_argument("monogenic_basis requires even dimension");
    if (k < 0)
        throw std::invalid_argument("monogenic degree must be nonnegative");

    const std::size_t blades = std::size_t{1} << m;
    if (k == 0) {
        // The Dirac operator kills every constant; the blades span them.
        std::vector<PolyField> out;
        out.reserve(blades);
        for (std::size_t a = 0; a < blades; ++a)
            out.push_back(PolyField::constant(Multivector::blade(m, static_cast<unsigned>(a))));
        return out;
    }

    const std::vector<Exponents> cols_mono = monomials_of_degree(m, k);
    const std::vector<Exponents> rows_mono = monomials_of_degree(m, k - 1);
    std::map<Exponents, std::size_t> row_index;
    for (std::size_t r = 0; r < rows_mono.size(); ++r)
        row_index.emplace(rows_mono[r], r);

    const std::size_t ncols = cols_mono.size() * blades;
    const std::size_t nrows = rows_mono.size() * blades;
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nrows),
                                               static_cast<Eigen::Index>(ncols));

    for (std::size_t t = 0; t < cols_mono.size(); ++t) {
        const Exponents& alpha = cols_mono[t];
        for (std::size_t a = 0; a < blades; ++a) {
            const std::size_t col = t * blades + a;
            for (int i = 0; i < m; ++i) {
                const int e = alpha[static_cast<std::size_t>(i)];
                if (e == 0)
                    continue;
                Exponents da(alpha);
                da[static_cast<std::size_t>(i)] -= 1;
                const unsigned mask = (1u << i) ^ static_cast<unsigned>(a);
                const int sign = blade_product_sign(1u << i, static_cast<unsigned>(a));
                const std::size_t row = row_index.at(da) * blades + mask;
                op(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                    sign * static_cast<double>(e);
            }
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * 1e-10;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff)
            ++rank;

    std::vector<PolyField> out;
    for (Eigen::Index c = rank; c < svd.matrixV().cols(); ++c) {
        Eigen::VectorXd v = svd.matrixV().col(c);
        // Fix the overall sign: largest-magnitude entry positive.
        Eigen::Index imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        if (v(imax) < 0.0)
            v = -v;
        PolyField basis_el(m);
        for (std::size_t t = 0; t < cols_mono.size(); ++t) {
            Multivector coeff(m);
            bool nonzero = false;
            for (std::size_t a = 0; a < blades; ++a) {
                const double value = v(static_cast<Eigen::Index>(t * blades + a));
                if (value != 0.0) {
                    coeff[a] = value;
                    nonzero = true;
                }
            }
            if (nonzero)
                basis_el.add_term(cols_mono[t], coeff);
        }
        out.push_back(std::move(basis_el));
    }
    return out;
}

double laguerre_eval(const LaguerreParams& params, double t) {
    if (params.alpha <= -1.0)
        throw std::invalid_argument("Laguerre superscript must exceed -1");
    if (params.j < 0)
        throw std::invalid_argument("Laguerre index must be nonnegative");
    if (t < 0.0)
        throw std::invalid_argument("Laguerre argument must be nonnegative");
    if (params.j == 0)
        return 1.0;
    double prev = 1.0;
    double curr = 1.0 + params.alpha - t;
    for (int n = 1; n < params.j; ++n) {
        const double next =
            ((2.0 * n + 1.0 + params.alpha - t) * curr - (n + params.alpha) * prev) / (n + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

std::function<Multivector(std::span<const double>)>
psi_from_monogenic(int j, const PolyField& monogenic, Parity parity) {
    const int m = monogenic.dim();
    const int k = std::max(monogenic.degree(), 0);
    const double alpha =
        (parity == Parity::even) ? 0.5 * m + k - 1.0 : 0.5 * m + k;
    const LaguerreParams lag{j, alpha};
    PolyField monocopy = monogenic;
    return [m, lag, monocopy, parity](std::span<const double> x) {
        double r2 = 0.0;
        for (double xi : x)
            r2 += xi * xi;
        const double scale = laguerre_eval(lag, r2) * std::exp(-0.5 * r2);
        Multivector value = monocopy.evaluate(x);
        if (parity == Parity::odd)
            value = geometric_product(Multivector::from_vector(x), value);
        return value * scale;
    };
}

std::function<Multivector(std::span<const double>)>
psi_basis_element(int m, int j, int k, int l, Parity parity) {
    const std::vector<PolyField> basis = monogenic_basis(m, k);
    if (l < 0 || static_cast<std::size_t>(l) >= basis.size())
        throw std::out_of_range("monogenic index out of range");
    return psi_from_monogenic(j, basis[static_cast<std::size_t>(l)], parity);
}

} // namespace clifft
