#include "quadgraph/quadform.hpp"

#include <algorithm>

namespace quadgraph {

std::string to_string(LineType t) {
    switch (t) {
        case LineType::Spacelike: return "spacelike";
        case LineType::Timelike: return "timelike";
        case LineType::Lightlike: return "lightlike";
    }
    return "?";
}

std::string FormClass::to_string() const {
    if (radical_dim == 0)
        return (quotient_euclidean ? "Euclidean(" : "Lorentzian(") + std::to_string(dim) + ")";
    return "Degenerate(dim=" + std::to_string(dim) + ", radical=" + std::to_string(radical_dim) +
           ", quotient=" + (quotient_euclidean ? "Euclidean(" : "Lorentzian(") +
           std::to_string(dim - radical_dim) + "))";
}

QuadraticSpace::QuadraticSpace(Matrix gram) : n_(gram.rows()), gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw Error("Gram matrix must be symmetric");
}

QuadraticSpace QuadraticSpace::standard(StandardForm kind, int n, const FieldRef& spec) {
    if (n < 0) throw DimensionError("negative dimension");
    Matrix g(spec, n, n);
    for (int i = 0; i < n; ++i) g.raw(i, i) = 1;
    if (kind == StandardForm::LambdaDot && n >= 1) g.raw(n - 1, n - 1) = spec->nonsquare().index();
    return QuadraticSpace(std::move(g));
}

QuadraticSpace standard_space(StandardForm kind, int n, const FieldRef& spec) {
    return QuadraticSpace::standard(kind, n, spec);
}

QuadraticSpace space_from_shorthand(const std::string& text, const FieldRef& spec) {
    StandardForm kind;
    size_t prefix;
    if (text.rfind("ldot_", 0) == 0) {
        kind = StandardForm::LambdaDot;
        prefix = 5;
    } else if (text.rfind("dot_", 0) == 0) {
        kind = StandardForm::Dot;
        prefix = 4;
    } else {
        throw Error("unknown form shorthand \"" + text + "\" (expected dot_n or ldot_n)");
    }
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(text.substr(prefix), &used);
        if (used != text.size() - prefix) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw Error("unknown form shorthand \"" + text + "\" (expected dot_n or ldot_n)");
    }
    if (n < 1) throw Error("form dimension must be >= 1");
    return standard_space(kind, n, spec);
}

FieldElement QuadraticSpace::evaluate(const FVec& v) const {
    return bilinear(v, v);
}

FieldElement QuadraticSpace::bilinear(const FVec& u, const FVec& v) const {
    if (int(u.size()) != n_ || int(v.size()) != n_)
        throw DimensionError("vector/space dimension mismatch");
    const FieldSpec& f = *field();
    std::uint16_t acc = 0;
    for (int i = 0; i < n_; ++i) {
        if (!f.same_field(u[i].spec()) || !f.same_field(v[i].spec()))
            throw FieldError("field mismatch");
        std::uint16_t row = 0;
        for (int j = 0; j < n_; ++j) row = f.add(row, f.mul(gram_.raw(i, j), v[j].index()));
        acc = f.add(acc, f.mul(u[i].index(), row));
    }
    return FieldElement(&f, acc);
}

LineType QuadraticSpace::line_type(const FVec& v) const {
    bool nonzero = false;
    for (const auto& x : v)
        if (!x.is_zero()) nonzero = true;
    if (!nonzero) throw Error("line_type: zero vector spans no line");
    FieldElement val = evaluate(v);
    if (val.is_zero()) return LineType::Lightlike;
    return field()->is_square(val) ? LineType::Spacelike : LineType::Timelike;
}

namespace {

// Restricted Gram C G C^T for a row-basis C of a subspace, raw arithmetic.
Matrix restricted_gram(const Matrix& c, const Matrix& g) {
    return c * g * c.transpose();
}

}  // namespace

Diagonalization diagonalize(const QuadraticSpace& q) {
    const FieldRef& spec = q.field();
    const FieldSpec& f = *spec;
    const int n = q.dim();

    Matrix comp = Matrix::identity(spec, n);  // rows: basis of the current complement
    std::vector<std::vector<std::uint16_t>> basis_rows;
    std::vector<std::uint16_t> diag_vals;

    while (comp.rows() > 0) {
        Matrix gc = restricted_gram(comp, q.gram());
        const int m = comp.rows();
        int pick = -1;
        for (int i = 0; i < m; ++i)
            if (gc.raw(i, i) != 0) {
                pick = i;
                break;
            }
        Matrix v(spec, 1, n);
        std::uint16_t value = 0;
        if (pick >= 0) {
            for (int j = 0; j < n; ++j) v.raw(0, j) = comp.raw(pick, j);
            value = gc.raw(pick, pick);
        } else {
            // all diagonal entries vanish; look for an off-diagonal pairing
            int bi = -1, bj = -1;
            for (int i = 0; i < m && bi < 0; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (gc.raw(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) {
                // the rest is the radical
                for (int i = 0; i < m; ++i) {
                    std::vector<std::uint16_t> row(n);
                    for (int j = 0; j < n; ++j) row[j] = comp.raw(i, j);
                    basis_rows.push_back(std::move(row));
                    diag_vals.push_back(0);
                }
                break;
            }
            for (int j = 0; j < n; ++j) v.raw(0, j) = f.add(comp.raw(bi, j), comp.raw(bj, j));
            value = f.add(gc.raw(bi, bj), gc.raw(bj, bi));  // Q(e_i + e_j) = 2 B(e_i, e_j)
        }

        std::vector<std::uint16_t> row(n);
        for (int j = 0; j < n; ++j) row[j] = v.raw(0, j);
        basis_rows.push_back(std::move(row));
        diag_vals.push_back(value);

        // new complement inside comp: coefficient vectors x with x (C G v^T) = 0
        Matrix d = comp * q.gram() * v.transpose();  // m x 1
        Matrix ker = d.transpose().right_kernel();   // (m-1) x m
        comp = ker * comp;
    }

    Matrix p(spec, n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) p.raw(r, c) = basis_rows[c][r];  // columns = basis vectors

    Diagonalization out;
    out.basis_change = std::move(p);
    out.diagonal.reserve(n);
    for (auto v : diag_vals) out.diagonal.emplace_back(spec.get(), v);
    return out;
}

FormClass classify(const QuadraticSpace& q) {
    Diagonalization d = diagonalize(q);
    const FieldSpec& f = *q.field();
    int radical = 0;
    std::uint16_t disc = 1;
    for (const auto& e : d.diagonal) {
        if (e.is_zero())
            ++radical;
        else
            disc = f.mul(disc, e.index());
    }
    FormClass out;
    out.dim = q.dim();
    out.radical_dim = radical;
    out.quotient_euclidean =
        (q.dim() == radical) ? true : f.is_square(FieldElement(&f, disc));
    return out;
}

WittDecomposition witt_decompose(const QuadraticSpace& q) {
    const FieldRef& spec = q.field();
    const FieldSpec& f = *spec;
    const int n = q.dim();
    const int qq = f.order();

    // Split off the radical first: its complement carries a nondegenerate form.
    Matrix rad = q.gram().right_kernel();  // rows: radical basis
    std::vector<int> rad_pivots;
    int rad_rank = 0;
    Matrix rad_rref = rad.rref(&rad_rank, &rad_pivots);
    std::vector<bool> pivot(n, false);
    for (int c : rad_pivots) pivot[c] = true;
    Matrix comp(spec, n - rad_rank, n);
    {
        int r = 0;
        for (int j = 0; j < n; ++j)
            if (!pivot[j]) comp.raw(r++, j) = 1;
    }

    std::vector<std::vector<std::uint16_t>> pair_rows;  // hyperbolic pairs, in order
    int hyper = 0;

    auto find_isotropic = [&](const Matrix& gc, int m) -> std::optional<std::vector<std::uint16_t>> {
        // exhaustive over projective points: leading coordinate fixed to 1,
        // the (m - 1 - lead) coordinates after it free
        std::vector<std::uint16_t> x(m, 0);
        auto value_of = [&](const std::vector<std::uint16_t>& v) {
            std::uint16_t val = 0;
            for (int i = 0; i < m; ++i) {
                if (v[i] == 0) continue;
                std::uint16_t row = 0;
                for (int j = 0; j < m; ++j) row = f.add(row, f.mul(gc.raw(i, j), v[j]));
                val = f.add(val, f.mul(v[i], row));
            }
            return val;
        };
        for (int lead = 0; lead < m; ++lead) {
            std::fill(x.begin(), x.end(), 0);
            x[lead] = 1;
            const int nfree = m - 1 - lead;
            long long total = 1;
            for (int i = 0; i < nfree; ++i) total *= qq;
            for (long long idx = 0; idx < total; ++idx) {
                long long t = idx;
                for (int i = 0; i < nfree; ++i) {
                    x[lead + 1 + i] = std::uint16_t(t % qq);
                    t /= qq;
                }
                if (value_of(x) == 0) return x;
            }
        }
        return std::nullopt;
    };

    while (comp.rows() >= 2) {
        const int m = comp.rows();
        Matrix gc = restricted_gram(comp, q.gram());
        auto iso = find_isotropic(gc, m);
        if (!iso) break;

        // complete x to a hyperbolic pair inside the complement coordinates
        std::vector<std::uint16_t> x = *iso;
        std::vector<std::uint16_t> bx(m, 0);  // gc * x
        for (int i = 0; i < m; ++i) {
            std::uint16_t acc = 0;
            for (int j = 0; j < m; ++j) acc = f.add(acc, f.mul(gc.raw(i, j), x[j]));
            bx[i] = acc;
        }
        int w = -1;
        for (int i = 0; i < m; ++i)
            if (bx[i] != 0) {
                w = i;
                break;
            }
        if (w < 0) throw Error("witt_decompose: isotropic vector in the radical complement");
        // y = e_w scaled so that B(x, y) = 1
        std::vector<std::uint16_t> y(m, 0);
        y[w] = f.inv(bx[w]);
        // make y isotropic: y -= (Q(y)/2) x keeps B(x, y) = 1 (2 invertible, q odd)
        std::uint16_t qy = f.mul(f.mul(y[w], y[w]), gc.raw(w, w));
        std::uint16_t c = f.mul(qy, f.inv(f.from_int(2).index()));
        for (int i = 0; i < m; ++i) y[i] = f.sub(y[i], f.mul(c, x[i]));

        auto to_ambient = [&](const std::vector<std::uint16_t>& coeff) {
            std::vector<std::uint16_t> row(n, 0);
            for (int i = 0; i < m; ++i) {
                if (coeff[i] == 0) continue;
                for (int j = 0; j < n; ++j)
                    row[j] = f.add(row[j], f.mul(coeff[i], comp.raw(i, j)));
            }
            return row;
        };
        pair_rows.push_back(to_ambient(x));
        pair_rows.push_back(to_ambient(y));
        ++hyper;

        // complement of span(x, y) within comp w.r.t. the form
        Matrix pairc(spec, m, 2);
        for (int i = 0; i < m; ++i) {
            std::uint16_t accx = 0, accy = 0;
            for (int j = 0; j < m; ++j) {
                accx = f.add(accx, f.mul(gc.raw(i, j), x[j]));
                accy = f.add(accy, f.mul(gc.raw(i, j), y[j]));
            }
            pairc.raw(i, 0) = accx;
            pairc.raw(i, 1) = accy;
        }
        Matrix ker = pairc.transpose().right_kernel();  // (m-2) x m
        comp = ker * comp;
    }

    // remaining complement is anisotropic (or dim <= 1 with no isotropic vector)
    if (comp.rows() >= 1) {
        Matrix gc = restricted_gram(comp, q.gram());
        if (auto iso = find_isotropic(gc, comp.rows()); iso && comp.rows() >= 2)
            throw Error("witt_decompose: anisotropic part still has isotropic vectors");
    }
    if (comp.rows() > 2) throw Error("witt_decompose: anisotropic part has dimension > 2");

    Matrix p(spec, n, n);
    int col = 0;
    for (const auto& row : pair_rows) {
        for (int r = 0; r < n; ++r) p.raw(r, col) = row[r];
        ++col;
    }
    for (int i = 0; i < comp.rows(); ++i, ++col)
        for (int r = 0; r < n; ++r) p.raw(r, col) = comp.raw(i, r);
    for (int i = 0; i < rad_rank; ++i, ++col)
        for (int r = 0; r < n; ++r) p.raw(r, col) = rad_rref.raw(i, r);

    WittDecomposition out;
    out.hyperbolic_rank = hyper;
    out.anisotropic_part = QuadraticSpace(restricted_gram(comp, q.gram()));
    out.radical_dim = rad_rank;
    out.basis_change = std::move(p);
    return out;
}

Subspace orthogonal_complement(const QuadraticSpace& q, const Subspace& w) {
    if (w.ambient() != q.dim()) throw DimensionError("subspace/space dimension mismatch");
    if (!q.field()->same_field(*w.field())) throw FieldError("field mismatch");
    Matrix m = w.basis_matrix() * q.gram();  // k x n; complement = right kernel
    return Subspace::from_matrix(m.right_kernel());
}

QuadraticSpace restriction(const QuadraticSpace& q, const Subspace& w) {
    if (w.ambient() != q.dim()) throw DimensionError("subspace/space dimension mismatch");
    if (!q.field()->same_field(*w.field())) throw FieldError("field mismatch");
    return QuadraticSpace(restricted_gram(w.basis_matrix(), q.gram()));
}

bool is_dotk_subspace(const QuadraticSpace& q, const Subspace& w) {
    return classify(restriction(q, w)) == FormClass::euclidean(w.dim());
}

namespace {

// Normalization of a nondegenerate space to the standard diagonal
// (1, ..., 1) or (1, ..., 1, λ): returns P with P^T G P equal to that
// diagonal, plus whether the λ entry is present.
struct Normalized {
    Matrix p;
    bool has_lambda;
};

Normalized normalize_to_standard(const QuadraticSpace& q) {
    const FieldRef& spec = q.field();
    const FieldSpec& f = *spec;
    const int n = q.dim();
    Diagonalization d = diagonalize(q);
    FieldElement lambda = spec->nonsquare();

    // scale each diagonal entry into its square-class representative {1, λ}
    Matrix scale(spec, n, n);
    std::vector<bool> is_lambda(n);
    for (int i = 0; i < n; ++i) {
        FieldElement di = d.diagonal[i];
        if (di.is_zero()) throw Error("construct_isometry: degenerate input");
        if (f.is_square(di)) {
            scale.raw(i, i) = f.sqrt(di).inverse().index();
            is_lambda[i] = false;
        } else {
            scale.raw(i, i) = f.sqrt(di / lambda).inverse().index();
            is_lambda[i] = true;
        }
    }
    Matrix p = d.basis_change * scale;

    // permute the 1-entries to the front (stable)
    Matrix perm(spec, n, n);
    int col = 0;
    std::vector<int> lambda_pos;
    for (int i = 0; i < n; ++i)
        if (!is_lambda[i]) perm.raw(i, col++) = 1;
    for (int i = 0; i < n; ++i)
        if (is_lambda[i]) {
            perm.raw(i, col) = 1;
            lambda_pos.push_back(col++);
        }
    p = p * perm;
    int lambdas = int(lambda_pos.size());

    // diag(λ, λ) ≅ diag(1, 1): search u with λ(u1² + u2²) = 1, then
    // (u, (-u2, u1)) is an orthonormal pair for diag(λ, λ).
    while (lambdas >= 2) {
        const int r = n - lambdas;  // first λ position
        const int qq = f.order();
        int found_u1 = -1, found_u2 = -1;
        for (int u1 = 0; u1 < qq && found_u1 < 0; ++u1)
            for (int u2 = 0; u2 < qq; ++u2) {
                std::uint16_t s = f.add(f.mul(std::uint16_t(u1), std::uint16_t(u1)),
                                        f.mul(std::uint16_t(u2), std::uint16_t(u2)));
                if (f.mul(lambda.index(), s) == 1) {
                    found_u1 = u1;
                    found_u2 = u2;
                    break;
                }
            }
        if (found_u1 < 0) throw Error("construct_isometry: no unit vector found");  // impossible
        Matrix e = Matrix::identity(spec, n);
        e.raw(r, r) = std::uint16_t(found_u1);
        e.raw(r + 1, r) = std::uint16_t(found_u2);
        e.raw(r, r + 1) = f.neg(std::uint16_t(found_u2));
        e.raw(r + 1, r + 1) = std::uint16_t(found_u1);
        p = p * e;
        lambdas -= 2;
    }
    return {std::move(p), lambdas == 1};
}

}  // namespace

std::optional<Matrix> construct_isometry(const QuadraticSpace& q1, const QuadraticSpace& q2) {
    if (q1.dim() != q2.dim()) throw DimensionError("spaces of different dimension");
    if (!q1.field()->same_field(*q2.field())) throw FieldError("field mismatch");
    Normalized n1 = normalize_to_standard(q1);
    Normalized n2 = normalize_to_standard(q2);
    if (n1.has_lambda != n2.has_lambda) return std::nullopt;
    auto inv1 = n1.p.inverse();
    if (!inv1) throw Error("construct_isometry: singular basis change");
    // P_i^T G_i P_i = D for both, so M = P2 P1^{-1} has M^T G2 M = G1.
    return n2.p * *inv1;
}

Matrix reflection(const QuadraticSpace& q, const FVec& v) {
    const FieldRef& spec = q.field();
    const FieldSpec& f = *spec;
    const int n = q.dim();
    if (int(v.size()) != n) throw DimensionError("vector/space dimension mismatch");
    FieldElement qv = q.evaluate(v);
    if (qv.is_zero()) throw Error("reflection: isotropic vector");

    // R = I - (2/Q(v)) v (v G)  acting on column vectors
    std::uint16_t c = f.mul(f.from_int(2).index(), f.inv(qv.index()));
    std::vector<std::uint16_t> vg(n, 0);
    for (int j = 0; j < n; ++j) {
        std::uint16_t acc = 0;
        for (int i = 0; i < n; ++i) acc = f.add(acc, f.mul(v[i].index(), q.gram().raw(i, j)));
        vg[j] = acc;
    }
    Matrix r = Matrix::identity(spec, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.raw(i, j) = f.sub(r.raw(i, j), f.mul(c, f.mul(v[i].index(), vg[j])));
    return r;
}

}  // namespace quadgraph
