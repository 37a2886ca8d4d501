#include "cqsl2/linalg.hpp"

#include <algorithm>

namespace cqsl2 {

SparseVec SparseVec::unit(int idx, CycScalar val) {
    SparseVec v;
    if (!val.is_zero()) v.e_.push_back({idx, std::move(val)});
    return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
    SparseVec v;
    v.e_.reserve(entries.size());
    for (auto& e : entries) {
        if (!v.e_.empty() && v.e_.back().idx == e.idx)
            v.e_.back().val += e.val;
        else
            v.e_.push_back(std::move(e));
    }
    v.e_.erase(std::remove_if(v.e_.begin(), v.e_.end(),
                              [](const Entry& e) { return e.val.is_zero(); }),
               v.e_.end());
    return v;
}

int SparseVec::leading_index() const {
    CQSL2_CHECK(!e_.empty(), "leading index of zero vector");
    return e_.front().idx;
}

CycScalar SparseVec::get(int idx) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), idx,
                               [](const Entry& e, int i) { return e.idx < i; });
    if (it != e_.end() && it->idx == idx) return it->val;
    return CycScalar();
}

void SparseVec::set(int idx, const CycScalar& val) {
    auto it = std::lower_bound(e_.begin(), e_.end(), idx,
                               [](const Entry& e, int i) { return e.idx < i; });
    if (it != e_.end() && it->idx == idx) {
        if (val.is_zero()) e_.erase(it);
        else it->val = val;
    } else if (!val.is_zero()) {
        e_.insert(it, {idx, val});
    }
}

void SparseVec::add_scaled(const SparseVec& other, const CycScalar& c) {
    if (c.is_zero() || other.e_.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + other.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < other.e_.size()) {
        if (j == other.e_.size() ||
            (i < e_.size() && e_[i].idx < other.e_[j].idx)) {
            out.push_back(std::move(e_[i++]));
        } else if (i == e_.size() || other.e_[j].idx < e_[i].idx) {
            CycScalar v = c * other.e_[j].val;
            if (!v.is_zero()) out.push_back({other.e_[j].idx, std::move(v)});
            ++j;
        } else {
            CycScalar v = e_[i].val + c * other.e_[j].val;
            if (!v.is_zero()) out.push_back({e_[i].idx, std::move(v)});
            ++i, ++j;
        }
    }
    e_ = std::move(out);
}

void SparseVec::scale(const CycScalar& c) {
    if (c.is_zero()) {
        e_.clear();
        return;
    }
    for (auto& e : e_) e.val *= c;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    if (!b.e_.empty())
        out.add_scaled(b, b.e_.front().val.field()->one());
    return out;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    if (!b.e_.empty())
        out.add_scaled(b, -b.e_.front().val.field()->one());
    return out;
}

SparseVec operator*(const CycScalar& c, SparseVec v) {
    v.scale(c);
    return v;
}

SparseVec operator-(const SparseVec& v) {
    SparseVec out = v;
    for (auto& e : out.e_) e.val = -e.val;
    return out;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.e_.size() != b.e_.size()) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i].idx != b.e_[i].idx || a.e_[i].val != b.e_[i].val)
            return false;
    return true;
}

CycScalar SparseVec::dot(const SparseVec& other) const {
    CycScalar acc;
    size_t i = 0, j = 0;
    while (i < e_.size() && j < other.e_.size()) {
        if (e_[i].idx < other.e_[j].idx) ++i;
        else if (other.e_[j].idx < e_[i].idx) ++j;
        else acc += e_[i++].val * other.e_[j++].val;
    }
    return acc;
}

SparseVec SparseVec::shifted(int offset) const {
    SparseVec out = *this;
    for (auto& e : out.e_) e.idx += offset;
    return out;
}

LinOp LinOp::identity(const CycField& F, int n) {
    LinOp m(F, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, F.one());
    return m;
}

long long LinOp::nnz() const {
    long long n = 0;
    for (const auto& r : data_) n += r.nnz();
    return n;
}

SparseVec LinOp::apply(const SparseVec& v) const {
    std::vector<SparseVec::Entry> ents;
    for (int i = 0; i < rows_; ++i) {
        CycScalar d = data_[i].dot(v);
        if (!d.is_zero()) ents.push_back({i, std::move(d)});
    }
    return SparseVec::from_entries(std::move(ents));
}

LinOp LinOp::compose(const LinOp& other) const {
    CQSL2_CHECK(cols_ == other.rows_, "dimension mismatch in composition");
    LinOp out(*field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        SparseVec acc;
        for (const auto& e : data_[i].entries())
            acc.add_scaled(other.data_[e.idx], e.val);
        out.data_[i] = std::move(acc);
    }
    return out;
}

LinOp LinOp::transpose() const {
    LinOp out(*field_, cols_, rows_);
    std::vector<std::vector<SparseVec::Entry>> cols(cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : data_[i].entries())
            cols[e.idx].push_back({i, e.val});
    for (int j = 0; j < cols_; ++j)
        out.data_[j] = SparseVec::from_entries(std::move(cols[j]));
    return out;
}

LinOp LinOp::scaled(const CycScalar& c) const {
    LinOp out = *this;
    for (auto& r : out.data_) r.scale(c);
    return out;
}

LinOp operator+(const LinOp& a, const LinOp& b) {
    CQSL2_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch");
    LinOp out = a;
    CycScalar one = a.field().one();
    for (int i = 0; i < a.rows_; ++i) out.data_[i].add_scaled(b.data_[i], one);
    return out;
}

LinOp operator-(const LinOp& a, const LinOp& b) {
    CQSL2_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch");
    LinOp out = a;
    CycScalar neg = -a.field().one();
    for (int i = 0; i < a.rows_; ++i) out.data_[i].add_scaled(b.data_[i], neg);
    return out;
}

bool operator==(const LinOp& a, const LinOp& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int i = 0; i < a.rows_; ++i)
        if (!(a.data_[i] == b.data_[i])) return false;
    return true;
}

LinOp LinOp::stacked(const LinOp& below) const {
    CQSL2_CHECK(cols_ == below.cols_, "stack needs equal column counts");
    LinOp out(*field_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i) out.data_[i] = data_[i];
    for (int i = 0; i < below.rows_; ++i) out.data_[rows_ + i] = below.data_[i];
    return out;
}

RrefResult rref(const LinOp& m) {
    RrefResult res;
    res.R = m;
    auto& rows = res.R;
    int pr = 0;
    // Invariant: every row at position >= pr has its leading index at or
    // beyond the column currently processed, so candidates are exactly the
    // rows whose leading index equals the column.
    for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
        int sel = -1;
        for (int i = pr; i < m.rows(); ++i) {
            const SparseVec& row = rows.row(i);
            if (!row.empty() && row.leading_index() == c) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows.row(pr), rows.row(sel));
        CycScalar inv = rows.row(pr).entries().front().val.inv();
        rows.row(pr).scale(inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == pr) continue;
            CycScalar v = rows.row(i).get(c);
            if (!v.is_zero()) rows.row(i).add_scaled(rows.row(pr), -v);
        }
        res.pivots.push_back(c);
        ++pr;
    }
    res.rank = pr;
    return res;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
    SparseVec out = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        CycScalar c = out.get(pivots_[i]);
        if (!c.is_zero()) out.add_scaled(rows_[i], -c);
    }
    return out;
}

bool EchelonBasis::insert(const SparseVec& v) {
    SparseVec red = reduce(v);
    if (red.empty()) return false;
    int piv = red.leading_index();
    red.scale(red.entries().front().val.inv());
    for (size_t i = 0; i < rows_.size(); ++i) {
        CycScalar c = rows_[i].get(piv);
        if (!c.is_zero()) rows_[i].add_scaled(red, -c);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t k = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + k, std::move(red));
    return true;
}

Subspace Subspace::zero(int ambient) { return Subspace(EchelonBasis(ambient)); }

Subspace Subspace::span(int ambient, const std::vector<SparseVec>& vectors) {
    EchelonBasis eb(ambient);
    for (const auto& v : vectors) eb.insert(v);
    return Subspace(std::move(eb));
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (!(a.basis()[i] == b.basis()[i])) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    CQSL2_CHECK(a.ambient() == b.ambient(), "ambient mismatch");
    EchelonBasis eb(a.ambient());
    for (const auto& v : a.basis()) eb.insert(v);
    for (const auto& v : b.basis()) eb.insert(v);
    return Subspace(std::move(eb));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
    CQSL2_CHECK(a.ambient() == b.ambient(), "ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return zero(a.ambient());
    // Kernel vectors of [A | B] give coefficient pairs with
    // A·alpha + B·beta = 0, so A·alpha lies in both spaces.
    const CycField& F = *a.basis()[0].entries().front().val.field();
    int da = a.dim(), db = b.dim();
    LinOp m(F, a.ambient(), da + db);
    for (int j = 0; j < da; ++j)
        for (const auto& e : a.basis()[j].entries())
            m.row(e.idx).set(j, e.val);
    for (int j = 0; j < db; ++j)
        for (const auto& e : b.basis()[j].entries())
            m.row(e.idx).set(da + j, e.val);
    Subspace ker = kernel(m);
    std::vector<SparseVec> gens;
    for (const auto& kv : ker.basis()) {
        SparseVec w;
        for (const auto& e : kv.entries()) {
            if (e.idx >= da) break;
            w.add_scaled(a.basis()[e.idx], e.val);
        }
        if (!w.empty()) gens.push_back(std::move(w));
    }
    return span(a.ambient(), gens);
}

Subspace Subspace::complement_in(const Subspace& total) const {
    CQSL2_CHECK(total.contains(*this), "complement requires containment");
    EchelonBasis grow(ambient());
    for (const auto& v : basis()) grow.insert(v);
    EchelonBasis comp(ambient());
    for (const auto& v : total.basis()) {
        SparseVec res = grow.reduce(v);
        if (!res.empty()) {
            grow.insert(res);
            comp.insert(res);
        }
    }
    CQSL2_CHECK(comp.dim() + dim() == total.dim(), "complement dimension check");
    return Subspace(std::move(comp));
}

int Subspace::quotient_dim_in(const Subspace& total) const {
    CQSL2_CHECK(total.contains(*this), "quotient requires containment");
    return total.dim() - dim();
}

Subspace kernel(const LinOp& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivots) is_pivot[c] = true;
    CycScalar one = m.field().one();
    std::vector<SparseVec> gens;
    gens.reserve(m.cols() - rr.rank);
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVec::Entry> ents;
        for (int pr = 0; pr < rr.rank; ++pr) {
            CycScalar c = rr.R.row(pr).get(f);
            if (!c.is_zero()) ents.push_back({rr.pivots[pr], -c});
        }
        ents.push_back({f, one});
        gens.push_back(SparseVec::from_entries(std::move(ents)));
    }
    return Subspace::span(m.cols(), gens);
}

Subspace image(const LinOp& m) {
    LinOp t = m.transpose();
    std::vector<SparseVec> rows;
    rows.reserve(t.rows());
    for (int i = 0; i < t.rows(); ++i) rows.push_back(t.row(i));
    return Subspace::span(m.rows(), rows);
}

std::optional<SparseVec> solve(const LinOp& m, const SparseVec& b) {
    LinOp aug(m.field(), m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) aug.row(i) = m.row(i);
    for (const auto& e : b.entries()) aug.row(e.idx).set(m.cols(), e.val);
    RrefResult rr = rref(aug);
    std::vector<SparseVec::Entry> ents;
    for (int pr = 0; pr < rr.rank; ++pr) {
        if (rr.pivots[pr] == m.cols()) return std::nullopt;
        CycScalar v = rr.R.row(pr).get(m.cols());
        if (!v.is_zero()) ents.push_back({rr.pivots[pr], std::move(v)});
    }
    return SparseVec::from_entries(std::move(ents));
}

QuotientSpace::QuotientSpace(const Subspace& total, const Subspace& denom)
    : total_(total), denom_(denom) {
    CQSL2_CHECK(total.contains(denom), "denominator not inside total space");
    std::vector<SparseVec> residues;
    residues.reserve(total.dim());
    for (const auto& v : total.basis()) {
        SparseVec res = denom.reduce(v);
        if (!res.empty()) residues.push_back(std::move(res));
    }
    reps_ = Subspace::span(total.ambient(), residues);
    CQSL2_CHECK(reps_.dim() == total.dim() - denom.dim(),
                "quotient dimension mismatch");
}

std::vector<CycScalar> QuotientSpace::coords(const SparseVec& v) const {
    SparseVec res = denom_.reduce(v);
    std::vector<CycScalar> out(reps_.dim());
    for (int i = 0; i < reps_.dim(); ++i) {
        int piv = reps_.echelon().pivots()[i];
        CycScalar c = res.get(piv);
        out[i] = c;
        if (!c.is_zero()) res.add_scaled(reps_.basis()[i], -c);
    }
    CQSL2_CHECK(res.empty(), "vector not in the quotient's total space");
    return out;
}

SparseVec QuotientSpace::coord_vec(const SparseVec& v) const {
    auto c = coords(v);
    std::vector<SparseVec::Entry> ents;
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) ents.push_back({static_cast<int>(i), c[i]});
    return SparseVec::from_entries(std::move(ents));
}

Subspace QuotientSpace::span_of_classes(const std::vector<SparseVec>& vectors) const {
    std::vector<SparseVec> coord_vecs;
    for (const auto& v : vectors) {
        SparseVec cv = coord_vec(v);
        if (!cv.empty()) coord_vecs.push_back(std::move(cv));
    }
    return Subspace::span(dim(), coord_vecs);
}

}  // namespace cqsl2
