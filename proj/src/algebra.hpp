#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "check_report.hpp"
#include "matrix.hpp"

namespace homjj {

// A finite-dimensional algebra presented by structure constants, together
// with a twist endomorphism: e_i * e_j = sum_k c[i][j][k] e_k, and alpha
// given columnwise (column j = coordinates of alpha(e_j)). No semantic
// property is assumed at construction; each one is a checker verdict.
class HomAlgebra {
public:
    HomAlgebra(std::size_t dim, FieldTag tag);
    HomAlgebra(std::size_t dim, FieldTag tag, std::vector<std::string> labels);

    std::size_t dim() const { return dim_; }
    FieldTag tag() const { return tag_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& alpha() const { return alpha_; }
    void set_alpha(Matrix alpha);

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    Scalar& c(std::size_t i, std::size_t j, std::size_t k) {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    // Coordinates of e_i * e_j.
    Vec basis_product(std::size_t i, std::size_t j) const;
    // Bilinear product of coordinate vectors.
    Vec mul(const Vec& x, const Vec& y) const;
    Vec apply_alpha(const Vec& x) const { return alpha_ * x; }

    // Matrix of left multiplication L(e_i), and of right multiplication
    // R(e_i) : y -> y * e_i.
    Matrix left_mul_matrix(std::size_t i) const;
    Matrix right_mul_matrix(std::size_t i) const;

    // Structural equality ignoring basis labels.
    bool same_structure(const HomAlgebra& rhs) const;
    bool operator==(const HomAlgebra& rhs) const;

private:
    std::size_t dim_;
    FieldTag tag_;
    std::vector<std::string> labels_;
    std::vector<Scalar> tensor_;
    Matrix alpha_;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& stem = "e");

// --- Multilinear evaluators ---------------------------------------------

// Hom-Jacobian: cyclic sum of (x*y)*alpha(z).
Vec hom_jacobian(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z);
// Hom-associator: (x*y)*alpha(z) - alpha(x)*(y*z).
Vec hom_associator(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z);
// Anti-Hom-associator: (x*y)*alpha(z) + alpha(x)*(y*z).
Vec anti_hom_associator(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

// --- Checkers -------------------------------------------------------------

CheckReport check_multiplicative(const HomAlgebra& a);
CheckReport check_commutative(const HomAlgebra& a);
// Commutative + multiplicative + vanishing Hom-Jacobian on basis triples.
CheckReport check_hom_jacobi_jordan(const HomAlgebra& a);
// Multiplicative + vanishing Hom-associator on basis triples.
CheckReport check_hom_associative(const HomAlgebra& a);
// Multiplicative + left skew-symmetry of the anti-Hom-associator.
CheckReport check_left_hom_pre_jj(const HomAlgebra& a);
// Right skew-symmetry, evaluated through the opposite algebra.
CheckReport check_right_hom_pre_jj(const HomAlgebra& a);
// Commutative + multiplicative + the polarized Hom-Jordan identity.
// Rejects F2/F3 scalars (polarization needs characteristic 0 or >= 5).
CheckReport check_hom_jordan(const HomAlgebra& a);
// For Hom-associative a: vanishing of the cyclic obstruction
// 2 * cyc((x*y)*alpha(z) + (y*x)*alpha(z)); equivalent to the
// anticommutator algebra being Hom-Jacobi-Jordan.
CheckReport jj_admissibility_obstruction(const HomAlgebra& a);
// f : a -> b as a dim(b) x dim(a) matrix; algebra and twist compatibility.
CheckReport check_morphism(const HomAlgebra& a, const HomAlgebra& b, const Matrix& f);
// N commutes with alpha and has vanishing Nijenhuis torsion.
CheckReport nijenhuis_check(const HomAlgebra& a, const Matrix& n);

// --- Constructions ----------------------------------------------------------

// Yau twist (A, beta^n o mul, beta^n o alpha); beta must be a self-morphism.
HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta, unsigned n);
// x*y + y*x with the same twist.
HomAlgebra anticommutator(const HomAlgebra& a);
// Reversed multiplication; an involution.
HomAlgebra opposite(const HomAlgebra& a);
// Deformed product N(x)*y + x*N(y) - N(x*y); requires nijenhuis_check.
HomAlgebra nijenhuis_deform(const HomAlgebra& a, const Matrix& n);

}  // namespace homjj
