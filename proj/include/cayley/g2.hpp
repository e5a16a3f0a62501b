#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

// Exact multilinear algebra in the 7-dimensional fundamental representation
// of G2: the invariant forms, the induced bracket on 3-subspaces, orbit and
// Lie-type classification, rank stratifications and the Veronese/Segre
// quadric correspondences.
namespace cayley::g2 {

using Rat = boost::multiprecision::cpp_rational;

// Basis index order: e0, e_a, e_-a, e_b, e_-b, e_g, e_-g (a, b, g the three
// short-root labels). All component indices refer to this order.
inline constexpr int kDim = 7;
inline constexpr int E0 = 0, EA = 1, EMA = 2, EB = 3, EMB = 4, EG = 5,
                     EMG = 6;
std::string basis_name(int i);

// Sparse exterior-algebra element. Terms are keyed by a bitmask over the
// basis indices; only one degree at a time is allowed. `dual` distinguishes
// polyvectors (elements of wedge powers of V) from forms (wedge powers of
// the dual space).
struct MultiVector {
    bool dual = false;
    std::map<unsigned, Rat> terms;

    int degree() const;  // -1 when zero
    bool is_zero() const;
    void add_term(unsigned mask, const Rat& c);
    Rat coefficient(unsigned mask) const;

    MultiVector operator+(const MultiVector& o) const;
    MultiVector operator-(const MultiVector& o) const;
    MultiVector operator*(const Rat& c) const;
    bool operator==(const MultiVector& o) const;
};

MultiVector basis_vector(int i);
MultiVector basis_form(int i);
MultiVector make_vector(const std::vector<Rat>& coords);
std::string to_string(const MultiVector& m);

// Wedge product of two elements of the same variance.
MultiVector wedge(const MultiVector& a, const MultiVector& b);
// Contraction of `b` (degree q) into the first q slots of `a` (degree p,
// opposite variance), with determinant-expansion signs. Result has degree
// p - q and the variance of `a`.
MultiVector convolve(const MultiVector& a, const MultiVector& b);

// The invariant data: the 4-form lambda, the symmetric bilinear form q (the
// polarization of the published quadratic form), the 3-form nu, the 3-vector
// dual to lambda, and the fixed top polyvector used to compute it. The
// duality scale between omega-contraction and nu is computed once and
// stored.
struct G2FormSet {
    MultiVector lambda;       // 4-form
    MultiVector nu;           // 3-form
    MultiVector lambda_dual;  // 3-vector, q(lambda_dual) == nu exactly
    MultiVector omega;        // top polyvector e0^ea^...^e-g
    std::vector<std::vector<Rat>> q_bilinear;  // 7x7
    Rat calibration;  // lambda_dual = calibration * (omega -| lambda)
};
const G2FormSet& forms();

// Index raising/lowering with q (extended multiplicatively to wedges).
MultiVector q_lower(const MultiVector& v);
MultiVector q_raise(const MultiVector& f);

// The bracket [u,v] = q^{-1}(nu -| (u^v)) making CG points Lie algebras.
MultiVector bracket(const MultiVector& u, const MultiVector& v);
// q^{-1}(lambda -| (x^y^z)); proportional to the Jacobiator of the bracket.
MultiVector jacobiator(const MultiVector& x, const MultiVector& y,
                       const MultiVector& z);
// Verifies [[x,y],z] + [[y,z],x] + [[z,x],y] == s * jacobiator(x,y,z) for a
// single scalar s across all 35 strictly increasing basis triples.
bool jacobiator_identity_check();

// ----- subspaces ---------------------------------------------------------

// Basis of a d-dimensional subspace of V; linear independence is checked
// exactly at construction.
struct Subspace {
    std::vector<MultiVector> basis;
    explicit Subspace(std::vector<MultiVector> b);
    int dim() const { return static_cast<int>(basis.size()); }
};

Subspace p0();  // <e0, e_g, e_-g>   open orbit representative
Subspace p1();  // <e0, e_b, e_-g>   7-dimensional orbit representative
Subspace p2();  // <e_a, e_b, e_-g>  closed orbit representative

enum class Orbit { O0, O1, O2 };
enum class LieType { Semisimple, Solvable, Nilpotent };
std::string to_string(Orbit o);
std::string to_string(LieType t);

// True iff lambda -| (u1^u2^u3) = 0.
bool is_cg_point(const Subspace& u3);
// Classification by the rank of q restricted to the subspace (3/1/0).
// Requires is_cg_point; rank 2 raises an impossible-state error.
Orbit orbit_type(const Subspace& u3);
// Lie type of a CG subspace under the bracket. Throws when the subspace is
// not closed under the bracket.
LieType lie_type(const Subspace& u3);

// Matrix of u^v -> lambda -| (u^v) from wedge^2 of the subspace to the
// 2-forms on V/U3 (6-dimensional, coordinates over a complement basis).
struct ILambdaResult {
    std::vector<std::vector<Rat>> matrix;  // 3x6
    std::vector<int> complement;           // the 4 quotient basis indices
    int rank = 0;
};
ILambdaResult i_lambda_matrix(const Subspace& u3);
// The raw 2-form lambda -| (u^v).
MultiVector i_lambda(const MultiVector& u, const MultiVector& v);
// Converts a 2-polyvector written over the quotient basis of u3 into the
// corresponding 2-form coordinates (length 6) via contraction with the
// quotient volume form; this is the identification under which the closed-
// form values at the orbit points are stated.
std::vector<Rat> quotient_two_vector_as_form(const ILambdaResult& res,
                                             const MultiVector& w);

// Rank of the 2-form lambda -| U2 on V/U2 (always 2 or 4, never 0).
int phi_lambda_rank(const Subspace& u2);

// The quadratic form on wedge^2 U3 whose zero locus is the locus of
// 2-dimensional Lie subalgebras, given by u ^ [u] = 0.
struct ConicResult {
    std::vector<std::vector<Rat>> matrix;  // 3x3 symmetric
    int rank = 0;
};
ConicResult subalgebra_conic(const Subspace& u3);

// ----- quadric correspondences -------------------------------------------

using Mat = std::vector<std::vector<Rat>>;
int matrix_rank(Mat m);
std::vector<std::vector<Rat>> matrix_kernel(const Mat& m);

// Quadric on S^2(U3) through the Veronese surface attached to a conic
// f in S^2 U3: Q_f(m) = <adj(m), f>. Coordinates on S^2 U3 are
// (m11, m22, m33, m12, m13, m23).
struct QuadricResult {
    Mat matrix;
    int rank = 0;
    std::vector<std::vector<Rat>> kernel;
};
QuadricResult veronese_quadric(const Mat& f);

// Quadric on U3 (x) U4 through the Segre variety attached to
// sigma in wedge^2 U3* (x) wedge^2 U4*, given as a 3x6 coefficient array
// over the bases (12),(13),(23) and (12),(13),(14),(23),(24),(34).
// Coordinates on U3 (x) U4 are z_{mn} at index 4*m + n (zero-based).
QuadricResult segre_quadric(const Mat& sigma);
// The associated conic on wedge^2 U3 via the wedge-pairing identification
// of wedge^2 U4* with wedge^2 U4 (volume y1^y2^y3^y4).
ConicResult segre_conic(const Mat& sigma);
// sigma is generic when it embeds wedge^2 U3 and the image plane is not
// contained in the Pluecker quadric; the rank laws are asserted only then.
bool segre_generic(const Mat& sigma);

// ----- randomized sampling -----------------------------------------------

struct Sampler {
    explicit Sampler(std::uint64_t seed);
    Rat small_rational();               // bounded-height rational
    MultiVector random_vector();        // random element of V
    Subspace random_plane();            // random 2-dimensional subspace
    Subspace random_cg_point();         // kernel construction from a plane
    Mat random_conic(int rank);         // random 3x3 symmetric of given rank
    Mat random_segre_element();         // generic 3x6 sigma, smooth conic
    struct Impl;
    std::shared_ptr<Impl> impl;
};

}  // namespace cayley::g2
