#include "algebra.hpp"

#include <algorithm>
#include <array>

namespace homjj {

std::vector<std::string> default_labels(std::size_t dim, const std::string& stem) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 1; i <= dim; ++i) labels.push_back(stem + std::to_string(i));
    return labels;
}

HomAlgebra::HomAlgebra(std::size_t dim, FieldTag tag)
    : HomAlgebra(dim, tag, default_labels(dim)) {}

HomAlgebra::HomAlgebra(std::size_t dim, FieldTag tag, std::vector<std::string> labels)
    : dim_(dim),
      tag_(tag),
      labels_(std::move(labels)),
      tensor_(dim * dim * dim, Scalar::zero(tag)),
      alpha_(Matrix::identity(dim, tag)) {
    if (dim == 0) {
        throw Error(ErrorCode::shape, "algebra dimension must be at least 1");
    }
    if (labels_.size() != dim_) {
        throw Error(ErrorCode::shape, "label count does not match dimension");
    }
}

void HomAlgebra::set_alpha(Matrix alpha) {
    if (alpha.rows() != dim_ || alpha.cols() != dim_) {
        throw Error(ErrorCode::shape, "twist matrix shape does not match dimension");
    }
    if (alpha.tag() != tag_) {
        throw Error(ErrorCode::domain, "twist matrix domain does not match algebra");
    }
    alpha_ = std::move(alpha);
}

Vec HomAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Vec v;
    v.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v.push_back(c(i, j, k));
    return v;
}

Vec HomAlgebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw Error(ErrorCode::shape, "coordinate vector length does not match dimension");
    }
    Vec out = vec_zero(dim_, tag_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar coeff = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& ck = c(i, j, k);
                if (!ck.is_zero()) out[k] += coeff * ck;
            }
        }
    }
    return out;
}

Matrix HomAlgebra::left_mul_matrix(std::size_t i) const {
    Matrix m(dim_, dim_, tag_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
    }
    return m;
}

Matrix HomAlgebra::right_mul_matrix(std::size_t i) const {
    Matrix m(dim_, dim_, tag_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(j, i, k);
    }
    return m;
}

bool HomAlgebra::same_structure(const HomAlgebra& rhs) const {
    return dim_ == rhs.dim_ && tag_ == rhs.tag_ && tensor_ == rhs.tensor_ &&
           alpha_ == rhs.alpha_;
}

bool HomAlgebra::operator==(const HomAlgebra& rhs) const {
    return same_structure(rhs) && labels_ == rhs.labels_;
}

Vec hom_jacobian(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
    Vec out = a.mul(a.mul(x, y), a.apply_alpha(z));
    out = vec_add(out, a.mul(a.mul(y, z), a.apply_alpha(x)));
    out = vec_add(out, a.mul(a.mul(z, x), a.apply_alpha(y)));
    return out;
}

Vec hom_associator(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return vec_sub(a.mul(a.mul(x, y), a.apply_alpha(z)),
                   a.mul(a.apply_alpha(x), a.mul(y, z)));
}

Vec anti_hom_associator(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return vec_add(a.mul(a.mul(x, y), a.apply_alpha(z)),
                   a.mul(a.apply_alpha(x), a.mul(y, z)));
}

CheckReport check_multiplicative(const HomAlgebra& a) {
    CheckReport report;
    report.property = "multiplicative";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = a.apply_alpha(a.basis_product(i, j));
            Vec rhs = a.mul(a.alpha().column(i), a.alpha().column(j));
            report.record({i + 1, j + 1}, vec_sub(lhs, rhs));
        }
    }
    return report;
}

CheckReport check_commutative(const HomAlgebra& a) {
    CheckReport report;
    report.property = "commutative";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            report.record({i + 1, j + 1},
                          vec_sub(a.basis_product(i, j), a.basis_product(j, i)));
        }
    }
    return report;
}

CheckReport check_hom_jacobi_jordan(const HomAlgebra& a) {
    CheckReport report;
    report.property = "hom-jacobi-jordan";
    report.absorb(check_commutative(a), "commutative");
    report.absorb(check_multiplicative(a), "multiplicative");
    // The Hom-Jacobian is invariant under cyclic shifts, so ordered triples
    // i <= j <= k suffice once commutativity holds.
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            for (std::size_t k = j; k < a.dim(); ++k) {
                Vec ei = vec_basis(a.dim(), i, a.tag());
                Vec ej = vec_basis(a.dim(), j, a.tag());
                Vec ek = vec_basis(a.dim(), k, a.tag());
                report.record({i + 1, j + 1, k + 1}, hom_jacobian(a, ei, ej, ek));
            }
        }
    }
    return report;
}

CheckReport check_hom_associative(const HomAlgebra& a) {
    CheckReport report;
    report.property = "hom-associative";
    report.absorb(check_multiplicative(a), "multiplicative");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                Vec ei = vec_basis(a.dim(), i, a.tag());
                Vec ej = vec_basis(a.dim(), j, a.tag());
                Vec ek = vec_basis(a.dim(), k, a.tag());
                report.record({i + 1, j + 1, k + 1}, hom_associator(a, ei, ej, ek));
            }
        }
    }
    return report;
}

CheckReport check_left_hom_pre_jj(const HomAlgebra& a) {
    CheckReport report;
    report.property = "left-hom-pre-jacobi-jordan";
    report.absorb(check_multiplicative(a), "multiplicative");
    // Left skew-symmetry: as(x,y,z) + as(y,x,z) = 0, so i <= j suffices.
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                Vec ei = vec_basis(a.dim(), i, a.tag());
                Vec ej = vec_basis(a.dim(), j, a.tag());
                Vec ek = vec_basis(a.dim(), k, a.tag());
                Vec sum = vec_add(anti_hom_associator(a, ei, ej, ek),
                                  anti_hom_associator(a, ej, ei, ek));
                report.record({i + 1, j + 1, k + 1}, sum);
            }
        }
    }
    return report;
}

CheckReport check_right_hom_pre_jj(const HomAlgebra& a) {
    CheckReport report = check_left_hom_pre_jj(opposite(a));
    report.property = "right-hom-pre-jacobi-jordan";
    return report;
}

CheckReport check_hom_jordan(const HomAlgebra& a) {
    int ch = a.tag().characteristic();
    if (ch == 2 || ch == 3) {
        throw Error(ErrorCode::domain,
                    "hom-jordan check requires characteristic 0 or >= 5 "
                    "(polarization is unsound over F" + std::to_string(ch) + ")");
    }
    CheckReport report;
    report.property = "hom-jordan";
    report.absorb(check_commutative(a), "commutative");
    report.absorb(check_multiplicative(a), "multiplicative");

    // The Hom-Jordan identity as(x*x, alpha(y), alpha(x)) = 0 is cubic in x.
    // Its full symmetrization over the three x slots is multilinear and
    // equivalent to it away from characteristic 2 and 3.
    constexpr std::array<std::array<std::size_t, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            for (std::size_t k = j; k < a.dim(); ++k) {
                std::array<Vec, 3> xs = {vec_basis(a.dim(), i, a.tag()),
                                         vec_basis(a.dim(), j, a.tag()),
                                         vec_basis(a.dim(), k, a.tag())};
                for (std::size_t y = 0; y < a.dim(); ++y) {
                    Vec ey = vec_basis(a.dim(), y, a.tag());
                    Vec sum = vec_zero(a.dim(), a.tag());
                    for (const auto& p : perms) {
                        sum = vec_add(sum, hom_associator(a, a.mul(xs[p[0]], xs[p[1]]),
                                                          ey, xs[p[2]]));
                    }
                    report.record({i + 1, j + 1, k + 1, y + 1}, sum);
                }
            }
        }
    }
    return report;
}

CheckReport jj_admissibility_obstruction(const HomAlgebra& a) {
    CheckReport assoc = check_hom_associative(a);
    if (!assoc.pass) {
        throw Error(ErrorCode::precondition,
                    "jj-admissibility requires a hom-associative algebra");
    }
    CheckReport report;
    report.property = "jj-admissible";
    Scalar two = Scalar::of_int(2, a.tag());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            for (std::size_t k = j; k < a.dim(); ++k) {
                Vec ei = vec_basis(a.dim(), i, a.tag());
                Vec ej = vec_basis(a.dim(), j, a.tag());
                Vec ek = vec_basis(a.dim(), k, a.tag());
                Vec cyc = vec_zero(a.dim(), a.tag());
                const Vec* t[3] = {&ei, &ej, &ek};
                for (int s = 0; s < 3; ++s) {
                    const Vec& x = *t[s];
                    const Vec& y = *t[(s + 1) % 3];
                    const Vec& z = *t[(s + 2) % 3];
                    cyc = vec_add(cyc, a.mul(a.mul(x, y), a.apply_alpha(z)));
                    cyc = vec_add(cyc, a.mul(a.mul(y, x), a.apply_alpha(z)));
                }
                report.record({i + 1, j + 1, k + 1}, vec_scale(two, cyc));
            }
        }
    }
    return report;
}

CheckReport check_morphism(const HomAlgebra& a, const HomAlgebra& b, const Matrix& f) {
    if (a.tag() != b.tag() || f.tag() != a.tag()) {
        throw Error(ErrorCode::domain, "morphism check requires one scalar domain");
    }
    if (f.rows() != b.dim() || f.cols() != a.dim()) {
        throw Error(ErrorCode::shape,
                    "morphism matrix must be " + std::to_string(b.dim()) + "x" +
                        std::to_string(a.dim()));
    }
    CheckReport report;
    report.property = "morphism";
    CheckReport twist;
    twist.property = "twist-compatibility";
    Matrix lhs = f * a.alpha();
    Matrix rhs = b.alpha() * f;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        twist.record({j + 1}, vec_sub(lhs.column(j), rhs.column(j)));
    }
    report.absorb(twist, "f alpha_A = alpha_B f");

    CheckReport products;
    products.property = "product-compatibility";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec left = f * a.basis_product(i, j);
            Vec right = b.mul(f.column(i), f.column(j));
            products.record({i + 1, j + 1}, vec_sub(left, right));
        }
    }
    report.absorb(products, "f mul_A = mul_B (f x f)");
    return report;
}

CheckReport nijenhuis_check(const HomAlgebra& a, const Matrix& n) {
    if (n.rows() != a.dim() || n.cols() != a.dim()) {
        throw Error(ErrorCode::shape, "nijenhuis candidate must be square of the algebra dimension");
    }
    if (n.tag() != a.tag()) {
        throw Error(ErrorCode::domain, "nijenhuis candidate domain mismatch");
    }
    CheckReport report;
    report.property = "nijenhuis";
    CheckReport comm;
    comm.property = "twist-commutation";
    Matrix lhs = n * a.alpha();
    Matrix rhs = a.alpha() * n;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        comm.record({j + 1}, vec_sub(lhs.column(j), rhs.column(j)));
    }
    report.absorb(comm, "N alpha = alpha N");

    CheckReport torsion;
    torsion.property = "torsion";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec ei = vec_basis(a.dim(), i, a.tag());
            Vec ej = vec_basis(a.dim(), j, a.tag());
            Vec ni = n * ei;
            Vec nj = n * ej;
            Vec left = a.mul(ni, nj);
            Vec inner = vec_sub(vec_add(a.mul(ni, ej), a.mul(ei, nj)),
                                n * a.mul(ei, ej));
            torsion.record({i + 1, j + 1}, vec_sub(left, n * inner));
        }
    }
    report.absorb(torsion, "torsion vanishes");
    return report;
}

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta, unsigned n) {
    CheckReport morph = check_morphism(a, a, beta);
    if (!morph.pass) {
        throw Error(ErrorCode::precondition,
                    "yau twist requires beta to be a self-morphism (including "
                    "commutation with the twist)");
    }
    if (n == 0) return a;
    Matrix bn = beta.pow(n);
    HomAlgebra out(a.dim(), a.tag(), a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec prod = bn * a.basis_product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k) out.c(i, j, k) = prod[k];
        }
    }
    out.set_alpha(bn * a.alpha());
    return out;
}

HomAlgebra anticommutator(const HomAlgebra& a) {
    HomAlgebra out(a.dim(), a.tag(), a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                out.c(i, j, k) = a.c(i, j, k) + a.c(j, i, k);
            }
        }
    }
    out.set_alpha(a.alpha());
    return out;
}

HomAlgebra opposite(const HomAlgebra& a) {
    HomAlgebra out(a.dim(), a.tag(), a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                out.c(i, j, k) = a.c(j, i, k);
            }
        }
    }
    out.set_alpha(a.alpha());
    return out;
}

HomAlgebra nijenhuis_deform(const HomAlgebra& a, const Matrix& n) {
    CheckReport check = nijenhuis_check(a, n);
    if (!check.pass) {
        throw Error(ErrorCode::precondition,
                    "nijenhuis deformation requires a nijenhuis operator");
    }
    HomAlgebra out(a.dim(), a.tag(), a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec ni = n * vec_basis(a.dim(), i, a.tag());
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec ej = vec_basis(a.dim(), j, a.tag());
            Vec nj = n * ej;
            Vec ei = vec_basis(a.dim(), i, a.tag());
            Vec prod = vec_sub(vec_add(a.mul(ni, ej), a.mul(ei, nj)),
                               n * a.basis_product(i, j));
            for (std::size_t k = 0; k < a.dim(); ++k) out.c(i, j, k) = prod[k];
        }
    }
    out.set_alpha(a.alpha());
    return out;
}

}  // namespace homjj
