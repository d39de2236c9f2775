#pragma once

#include <optional>
#include <string>

#include "quadgraph/matrix.hpp"
#include "quadgraph/subspace.hpp"

namespace quadgraph {

enum class StandardForm { Dot, LambdaDot };

enum class LineType { Spacelike, Timelike, Lightlike };

std::string to_string(LineType t);

/// Equivalence class of a quadratic form: Euclidean(n) ~ dot_n,
/// Lorentzian(n) ~ λdot_n, or Degenerate with a radical dimension and the
/// class of the nondegenerate quotient. The zero-dimensional quotient counts
/// as Euclidean(0).
struct FormClass {
    int dim = 0;
    int radical_dim = 0;
    bool quotient_euclidean = true;

    bool is_degenerate() const { return radical_dim > 0; }
    bool is_euclidean() const { return radical_dim == 0 && quotient_euclidean; }
    bool is_lorentzian() const { return radical_dim == 0 && !quotient_euclidean; }

    static FormClass euclidean(int n) { return {n, 0, true}; }
    static FormClass lorentzian(int n) { return {n, 0, false}; }

    bool operator==(const FormClass&) const = default;
    std::string to_string() const;
};

/// Quadratic space (F_q^n, Q) with Q(v) = v G v^T for a symmetric Gram
/// matrix G (vectors are rows throughout). The associated bilinear form is
/// B(u, v) = u G v^T = (Q(u+v) - Q(u) - Q(v)) / 2.
class QuadraticSpace {
public:
    QuadraticSpace() = default;
    explicit QuadraticSpace(Matrix gram);

    static QuadraticSpace standard(StandardForm kind, int n, const FieldRef& spec);

    int dim() const { return n_; }
    const Matrix& gram() const { return gram_; }
    const FieldRef& field() const { return gram_.field(); }

    FieldElement evaluate(const FVec& v) const;
    FieldElement bilinear(const FVec& u, const FVec& v) const;
    LineType line_type(const FVec& v) const;

private:
    int n_ = 0;
    Matrix gram_;
};

QuadraticSpace standard_space(StandardForm kind, int n, const FieldRef& spec);

/// Parse the shorthand "dot_n" / "ldot_n" (e.g. "dot_5", "ldot_3").
QuadraticSpace space_from_shorthand(const std::string& text, const FieldRef& spec);

struct Diagonalization {
    Matrix basis_change;           // P with P^T G P diagonal
    std::vector<FieldElement> diagonal;
};

/// Congruence diagonalization by orthogonal splitting: pick v with Q(v) != 0
/// (using e_i + e_j when the diagonal vanishes but B(e_i, e_j) does not),
/// split off its B-complement, recurse. Trailing zeros are the radical.
Diagonalization diagonalize(const QuadraticSpace& q);

/// Complete invariant for nondegenerate forms over F_q (odd q): dimension
/// plus the square class of the discriminant; dot_n has square discriminant.
FormClass classify(const QuadraticSpace& q);

struct WittDecomposition {
    int hyperbolic_rank = 0;
    QuadraticSpace anisotropic_part;  // dimension <= 2
    int radical_dim = 0;
    Matrix basis_change;  // P^T G P = H ⊕ ... ⊕ H ⊕ aniso ⊕ 0, H = [[0,1],[1,0]]
};

WittDecomposition witt_decompose(const QuadraticSpace& q);

/// { v : B(v, w) = 0 for all w in W }.
Subspace orthogonal_complement(const QuadraticSpace& q, const Subspace& w);

/// The restricted quadratic space on W: Gram M G M^T for the canonical RREF
/// basis M of W.
QuadraticSpace restriction(const QuadraticSpace& q, const Subspace& w);

/// True iff the restriction of q to W is equivalent to dot_k.
bool is_dotk_subspace(const QuadraticSpace& q, const Subspace& w);

/// Explicit congruence between equivalent nondegenerate spaces: returns M
/// with M^T gram2 M = gram1, or nullopt when the classes differ.
std::optional<Matrix> construct_isometry(const QuadraticSpace& q1, const QuadraticSpace& q2);

/// Reflection in the hyperplane orthogonal to an anisotropic v, as a matrix
/// acting on column vectors: x -> x - 2 B(x,v)/Q(v) * v. Row vectors
/// transform by the transpose.
Matrix reflection(const QuadraticSpace& q, const FVec& v);

}  // namespace quadgraph
