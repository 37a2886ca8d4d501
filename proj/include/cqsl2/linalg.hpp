#pragma once

#include <optional>
#include <vector>

#include "cqsl2/cyclotomic.hpp"

namespace cqsl2 {

/// Sparse vector over Q(zeta_r): entries sorted by index, values nonzero.
class SparseVec {
public:
    struct Entry {
        int idx;
        CycScalar val;
    };

    SparseVec() = default;
    static SparseVec unit(int idx, CycScalar val);
    /// Sorts, merges duplicates, drops zeros.
    static SparseVec from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    int nnz() const { return static_cast<int>(e_.size()); }
    int leading_index() const;
    CycScalar get(int idx) const;
    void set(int idx, const CycScalar& val);

    /// this += c * other
    void add_scaled(const SparseVec& other, const CycScalar& c);
    void scale(const CycScalar& c);

    friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator*(const CycScalar& c, SparseVec v);
    friend SparseVec operator-(const SparseVec& v);
    friend bool operator==(const SparseVec& a, const SparseVec& b);
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

    CycScalar dot(const SparseVec& other) const;

    /// Same vector with all indices offset (embeds blocks in larger spaces).
    SparseVec shifted(int offset) const;

private:
    std::vector<Entry> e_;
};

/// Exact sparse matrix over Q(zeta_r), row-major.  Columns index the source
/// space, rows the target, so kernels live in the column space.
class LinOp {
public:
    LinOp() = default;
    LinOp(const CycField& F, int rows, int cols)
        : field_(&F), rows_(rows), cols_(cols), data_(rows) {}
    static LinOp identity(const CycField& F, int n);

    const CycField& field() const { return *field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& row(int i) const { return data_[i]; }
    SparseVec& row(int i) { return data_[i]; }
    CycScalar at(int i, int j) const { return data_[i].get(j); }
    void set(int i, int j, const CycScalar& v) { data_[i].set(j, v); }
    long long nnz() const;

    SparseVec apply(const SparseVec& v) const;
    LinOp compose(const LinOp& other) const;  // this * other
    LinOp transpose() const;
    LinOp scaled(const CycScalar& c) const;

    friend LinOp operator+(const LinOp& a, const LinOp& b);
    friend LinOp operator-(const LinOp& a, const LinOp& b);
    friend bool operator==(const LinOp& a, const LinOp& b);

    /// Stack vertically: [this; below] (same column count).
    LinOp stacked(const LinOp& below) const;

private:
    const CycField* field_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

struct RrefResult {
    LinOp R;
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

/// Reduced row echelon form: unit pivots, zeros above and below, pivot
/// chosen as the first nonzero in column order scanning rows top-down.
/// The output is the canonical RREF of the row space.
RrefResult rref(const LinOp& m);

/// Incrementally maintained reduced echelon basis (rows kept in RREF).
class EchelonBasis {
public:
    explicit EchelonBasis(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residue of v after eliminating all pivot coordinates.
    SparseVec reduce(const SparseVec& v) const;
    /// Insert v if independent; returns true when the basis grew.
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

private:
    int ambient_;
    std::vector<SparseVec> rows_;
    std::vector<int> pivots_;
};

/// Subspace of an ambient coordinate space with its canonical (RREF) basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(EchelonBasis basis) : basis_(std::move(basis)) {}
    static Subspace zero(int ambient);
    static Subspace span(int ambient, const std::vector<SparseVec>& vectors);

    int ambient() const { return basis_.ambient(); }
    int dim() const { return basis_.dim(); }
    const std::vector<SparseVec>& basis() const { return basis_.rows(); }
    const EchelonBasis& echelon() const { return basis_; }

    bool contains(const SparseVec& v) const { return basis_.contains(v); }
    bool contains(const Subspace& other) const;
    /// Canonical coset representative of v modulo this subspace.
    SparseVec reduce(const SparseVec& v) const { return basis_.reduce(v); }

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    static Subspace sum(const Subspace& a, const Subspace& b);
    static Subspace intersect(const Subspace& a, const Subspace& b);
    /// Complement C with this ⊕ C = total; requires this ⊆ total.
    Subspace complement_in(const Subspace& total) const;
    int quotient_dim_in(const Subspace& total) const;

private:
    EchelonBasis basis_{0};
};

Subspace kernel(const LinOp& m);
Subspace image(const LinOp& m);

/// Some x with m x = b (free variables set to zero after echelon solve),
/// or nullopt when b is not in the image.
std::optional<SparseVec> solve(const LinOp& m, const SparseVec& b);

/// Quotient V/W with canonical echelon-residue representatives.
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(const Subspace& total, const Subspace& denom);

    int dim() const { return reps_.dim(); }
    const Subspace& total() const { return total_; }
    const Subspace& denominator() const { return denom_; }
    /// Canonical representatives: one ambient vector per quotient basis class.
    const std::vector<SparseVec>& representatives() const { return reps_.basis(); }

    /// Canonical residue of v modulo the denominator.
    SparseVec project(const SparseVec& v) const { return denom_.reduce(v); }
    /// Coordinates of [v] in the representative basis; requires v in total + denom.
    std::vector<CycScalar> coords(const SparseVec& v) const;
    SparseVec coord_vec(const SparseVec& v) const;
    /// Span of the classes of the given ambient vectors, in quotient coords.
    Subspace span_of_classes(const std::vector<SparseVec>& vectors) const;

private:
    Subspace total_;
    Subspace denom_;
    Subspace reps_;
};

}  // namespace cqsl2
