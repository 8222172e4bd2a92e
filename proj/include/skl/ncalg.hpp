#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "skl/linalg.hpp"
#include "skl/tower.hpp"

namespace skl {

/// Homogeneous element of the free algebra on `gens` generators. Words
/// of length `degree` are encoded as base-`gens` integers, first letter
/// most significant.
struct NcTensor {
    int gens = 4;
    int degree = 0;
    TowerPtr tower;
    std::map<long, FieldElem> terms;  // no zero coefficients stored
};

long word_concat(int gens, long u, int ulen, long v, int vlen);
int word_letter(int gens, long w, int len, int pos);

NcTensor nc_zero(int gens, int degree, TowerPtr t);
NcTensor nc_gen(int gens, int j, const TowerPtr& t);
void nc_add_term(NcTensor& z, long word, const FieldElem& c);
NcTensor nc_tensor(const NcTensor& a, const NcTensor& b);
NcTensor nc_scale(const FieldElem& c, const NcTensor& a);
NcTensor operator+(const NcTensor& a, const NcTensor& b);
NcTensor operator-(const NcTensor& a, const NcTensor& b);
bool nc_equal(const NcTensor& a, const NcTensor& b);
SparseRow nc_row(const NcTensor& a);
std::string nc_str(const NcTensor& a, const std::vector<std::string>& labels);

/// A quadratic algebra: free algebra on labelled generators modulo the
/// two-sided ideal generated by degree-2 relations.
class QuadAlgebra {
public:
    QuadAlgebra(std::vector<std::string> labels, std::vector<NcTensor> relations,
                TowerPtr tower);

    int gens() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<NcTensor>& relations() const { return relations_; }
    const TowerPtr& tower() const { return tower_; }

    /// R_n = sum over i of V^i R V^(n-2-i), as a subspace of the
    /// g^n-dimensional word space. Cached; n < 2 gives the zero space.
    const Subspace& span_in_degree(int n) const;

private:
    std::vector<std::string> labels_;
    std::vector<NcTensor> relations_;
    TowerPtr tower_;
    mutable std::map<int, std::unique_ptr<Subspace>> cache_;
    mutable std::mutex mutex_;
};

/// Matrix of linear forms multilinearizing the relations: entry (k, j)
/// holds the coefficients c_kij over i, so that M(u) v = (r_k(u, v))_k.
struct RelationMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::vector<FieldElem>>> coeff;  // [k][j][i]
};

Subspace relation_space(const QuadAlgebra& A, int n);  // DegreeTooSmall n<2
int hilbert_dim(const QuadAlgebra& A, int n);
std::vector<int> hilbert_dims(const QuadAlgebra& A, int nmax);

/// True iff z vanishes in A modulo the two-sided ideal generated by the
/// extra homogeneous elements.
bool is_zero_in_quotient(const QuadAlgebra& A, const NcTensor& z,
                         const std::vector<NcTensor>& extra);

bool is_central(const QuadAlgebra& A, const NcTensor& z,
                const std::vector<NcTensor>& modulo = {});

/// Dimensions of (A / A.W)_n for n = 0..nmax, W a set of degree-1 forms.
std::vector<int> left_quotient_dims(const QuadAlgebra& A,
                                    const std::vector<NcTensor>& W, int nmax);

/// Dimensions of (A / (Z))_n, Z central degree-2 elements. NotCentral.
std::vector<int> two_sided_quotient_dims(const QuadAlgebra& A,
                                         const std::vector<NcTensor>& Z,
                                         int nmax);

/// Quadratic dual: generators dualized, relations the orthogonal
/// complement of A's relation span under the word-wise dot pairing.
QuadAlgebra koszul_dual(const QuadAlgebra& A);

RelationMatrix multilinearize(const QuadAlgebra& A);

/// M(u): numeric rows x cols matrix at the point u.
std::vector<std::vector<FieldElem>> evaluate(const RelationMatrix& M,
                                             const std::vector<FieldElem>& u);

QuadAlgebra free_preset(int gens, const TowerPtr& t);
QuadAlgebra commutative_preset(int gens, const TowerPtr& t);

}  // namespace skl
