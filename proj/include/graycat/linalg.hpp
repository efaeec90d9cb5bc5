#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graycat/scalar.hpp"

namespace graycat {

// Sparse exact vector: index -> nonzero coefficient.
class SparseVector {
public:
    SparseVector() : dim_(0) {}
    explicit SparseVector(int dim) : dim_(dim) {}

    static SparseVector unit(int dim, int i, const Field& f) {
        SparseVector v(dim);
        v.set(i, f.one());
        return v;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<int, Scalar>& entries() const { return entries_; }

    Scalar get(int i, const Field& f) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? f.zero() : it->second;
    }

    void set(int i, const Scalar& c) {
        if (i < 0 || i >= dim_) throw std::out_of_range("SparseVector::set index");
        if (c.is_zero())
            entries_.erase(i);
        else
            entries_[i] = c;
    }

    void add(int i, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = entries_.find(i);
        if (it == entries_.end()) {
            entries_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    // this += c * v
    void axpy(const Scalar& c, const SparseVector& v) {
        if (c.is_zero()) return;
        if (v.dim_ != dim_) throw std::logic_error("SparseVector::axpy dimension mismatch");
        for (const auto& [i, a] : v.entries_) add(i, c * a);
    }

    void scale(const Scalar& c) {
        if (c.is_zero()) {
            entries_.clear();
            return;
        }
        for (auto& [i, a] : entries_) a *= c;
    }

    SparseVector operator+(const SparseVector& o) const {
        SparseVector r = *this;
        for (const auto& [i, a] : o.entries_) r.add(i, a);
        return r;
    }
    SparseVector operator-(const SparseVector& o) const {
        SparseVector r = *this;
        for (const auto& [i, a] : o.entries_) r.add(i, -a);
        return r;
    }
    SparseVector operator-() const {
        SparseVector r(dim_);
        for (const auto& [i, a] : entries_) r.entries_.emplace(i, -a);
        return r;
    }
    SparseVector scaled(const Scalar& c) const {
        SparseVector r = *this;
        r.scale(c);
        return r;
    }

    bool operator==(const SparseVector& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }
    bool operator!=(const SparseVector& o) const { return !(*this == o); }

    // smallest index with nonzero coefficient, or -1
    int leading_index() const { return entries_.empty() ? -1 : entries_.begin()->first; }
    Scalar leading_coeff() const {
        if (entries_.empty()) throw std::logic_error("leading_coeff of zero vector");
        return entries_.begin()->second;
    }

    std::string str() const {
        if (entries_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [i, a] : entries_) {
            if (!first) s += " + ";
            s += "(" + a.str() + ")*e" + std::to_string(i);
            first = false;
        }
        return s;
    }

private:
    int dim_;
    std::map<int, Scalar> entries_;
};

// Row space kept in reduced row echelon form, built incrementally.
// Optionally tracks, for each stored row, its expression in terms of the
// vectors inserted so far (used to express vectors in a given spanning set).
class Subspace {
public:
    Subspace() : Subspace(0, Field{}) {}
    explicit Subspace(int ambient_dim, const Field& f, bool track_combinations = false)
        : ambient_(ambient_dim), field_(f), track_(track_combinations), inserted_(0) {}

    int ambient_dim() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const Field& field() const { return field_; }

    struct Reduction {
        SparseVector residue;  // v reduced against the basis (zero iff v in span)
        SparseVector combo;    // if tracked: residue = v - sum combo_j * inserted_j
    };

    // Reduce v against the current echelon rows.
    Reduction reduce(const SparseVector& v) const {
        if (v.dim() != ambient_) throw std::logic_error("Subspace::reduce dimension mismatch");
        Reduction r;
        r.residue = v;
        r.combo = SparseVector(track_ ? combo_capacity_ : 0);
        while (true) {
            int lead = r.residue.leading_index();
            if (lead < 0) break;
            auto it = pivot_row_.find(lead);
            if (it == pivot_row_.end()) {
                // eliminate any later pivot columns too
                bool changed = false;
                for (const auto& [idx, c] : r.residue.entries()) {
                    auto jt = pivot_row_.find(idx);
                    if (jt != pivot_row_.end()) {
                        eliminate(r, jt->second, c);
                        changed = true;
                        break;
                    }
                }
                if (!changed) break;
            } else {
                eliminate(r, it->second, r.residue.leading_coeff());
            }
        }
        return r;
    }

    bool contains(const SparseVector& v) const { return reduce(v).residue.is_zero(); }

    // Insert v; returns true if the rank grew. Counts every call toward the
    // inserted-vector indexing used by combination tracking.
    bool insert(const SparseVector& v) {
        int my_index = inserted_++;
        if (track_ && my_index >= combo_capacity_) grow_combos(my_index + 1);
        Reduction r = reduce(v);
        if (r.residue.is_zero()) return false;
        Scalar lc = r.residue.leading_coeff();
        SparseVector row = r.residue.scaled(lc.inverse());
        SparseVector combo(track_ ? combo_capacity_ : 0);
        if (track_) {
            // residue = v - sum combo_j inserted_j  =>  row expression
            combo = SparseVector(combo_capacity_);
            combo.add(my_index, field_.one());
            combo.axpy(-field_.one(), r.combo);
            combo.scale(lc.inverse());
        }
        int pivot = row.leading_index();
        // back-substitute into existing rows to keep full RREF
        for (size_t k = 0; k < rows_.size(); ++k) {
            Scalar c = rows_[k].get(pivot, field_);
            if (!c.is_zero()) {
                rows_[k].axpy(-c, row);
                if (track_) combos_[k].axpy(-c, combo);
            }
        }
        pivot_row_[pivot] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        if (track_) combos_.push_back(std::move(combo));
        return true;
    }

    const std::vector<SparseVector>& rows() const { return rows_; }

    // Express v as a combination of the *inserted* vectors (requires tracking).
    // Returns nullopt if v is not in the span.
    std::optional<SparseVector> coordinates_in_inserted(const SparseVector& v) const {
        if (!track_) throw std::logic_error("Subspace: combination tracking disabled");
        Reduction r = reduce(v);
        if (!r.residue.is_zero()) return std::nullopt;
        return r.combo;  // v = sum combo_j * inserted_j
    }

    // Sorted pivot column indices.
    std::vector<int> pivot_columns() const {
        std::vector<int> p;
        p.reserve(pivot_row_.size());
        for (const auto& [col, row] : pivot_row_) p.push_back(col);
        return p;
    }

    // Ambient basis indices that are not pivots: coset representatives of the
    // quotient by this subspace.
    std::vector<int> non_pivot_columns() const {
        std::vector<int> out;
        for (int i = 0; i < ambient_; ++i)
            if (!pivot_row_.count(i)) out.push_back(i);
        return out;
    }

private:
    // coeff by value: callers may pass a reference into r.residue's entries,
    // which the axpy below invalidates
    void eliminate(Reduction& r, int row_idx, Scalar coeff) const {
        // rows are normalized with pivot coefficient one
        r.residue.axpy(-coeff, rows_[row_idx]);
        if (track_) r.combo.axpy(coeff, combos_[row_idx]);
    }
    void grow_combos(int cap) {
        combo_capacity_ = std::max(cap, combo_capacity_ * 2 + 8);
        for (auto& c : combos_) {
            SparseVector bigger(combo_capacity_);
            for (const auto& [i, a] : c.entries()) bigger.set(i, a);
            c = std::move(bigger);
        }
    }

    int ambient_;
    Field field_;
    bool track_;
    int inserted_;
    int combo_capacity_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<SparseVector> combos_;     // parallel to rows_ when tracking
    std::map<int, int> pivot_row_;         // pivot column -> row index
};

// RREF of a list of rows.
inline Subspace rref(const std::vector<SparseVector>& rows, int ambient_dim, const Field& f) {
    Subspace s(ambient_dim, f);
    for (const auto& r : rows) s.insert(r);
    return s;
}

// Linear map given by images of the domain's standard basis vectors.
struct LinMap {
    int src_dim = 0;
    int dst_dim = 0;
    std::vector<SparseVector> cols;  // cols[i] = image of e_i, in the codomain

    SparseVector apply(const SparseVector& v) const {
        SparseVector out(dst_dim);
        for (const auto& [i, c] : v.entries()) out.axpy(c, cols[i]);
        return out;
    }
};

inline LinMap compose(const LinMap& g, const LinMap& f) {
    if (f.dst_dim != g.src_dim) throw std::logic_error("LinMap compose dimension mismatch");
    LinMap r;
    r.src_dim = f.src_dim;
    r.dst_dim = g.dst_dim;
    r.cols.reserve(f.src_dim);
    for (const auto& c : f.cols) r.cols.push_back(g.apply(c));
    return r;
}

inline bool operator==(const LinMap& a, const LinMap& b) {
    return a.src_dim == b.src_dim && a.dst_dim == b.dst_dim && a.cols == b.cols;
}

// Kernel of a linear map, as a Subspace of the domain.
inline Subspace kernel(const LinMap& m, const Field& f) {
    // Row-reduce the transpose-augmented system: insert columns with tracking,
    // dependencies yield kernel vectors.
    Subspace span(m.dst_dim, f, /*track=*/true);
    Subspace ker(m.src_dim, f);
    for (int i = 0; i < m.src_dim; ++i) {
        auto before = span.rank();
        span.insert(m.cols[i]);
        if (span.rank() == before) {
            // column i is a combination of earlier columns
            auto combo = span.coordinates_in_inserted(m.cols[i]);
            SparseVector kv(m.src_dim);
            kv.set(i, f.one());
            if (combo)  // combo indices are insertion counters, all < i
                for (const auto& [j, c] : combo->entries()) kv.add(j, -c);
            ker.insert(kv);
        }
    }
    return ker;
}

inline Subspace image(const LinMap& m, const Field& f) {
    Subspace im(m.dst_dim, f);
    for (const auto& c : m.cols) im.insert(c);
    return im;
}

// Quotient of the ambient space by subspace J: coset representatives are the
// non-pivot standard basis vectors; reduce() rewrites any vector into
// representative coordinates.
struct QuotientSpace {
    int ambient_dim = 0;
    std::vector<int> rep_index;        // quotient coordinate -> ambient basis index
    std::vector<int> ambient_to_rep;   // ambient index -> quotient coordinate or -1
    const Subspace* j = nullptr;
    Field field;

    int dim() const { return static_cast<int>(rep_index.size()); }

    // ambient vector -> quotient coordinates
    SparseVector reduce(const SparseVector& v) const {
        SparseVector residue = j->reduce(v).residue;
        SparseVector out(dim());
        for (const auto& [i, c] : residue.entries()) {
            int q = ambient_to_rep[i];
            if (q < 0)
                throw std::logic_error("QuotientSpace::reduce left a pivot coordinate");
            out.set(q, c);
        }
        return out;
    }

    // quotient coordinates -> the representative ambient vector
    SparseVector lift(const SparseVector& q) const {
        SparseVector out(ambient_dim);
        for (const auto& [i, c] : q.entries()) out.set(rep_index[i], c);
        return out;
    }
};

inline QuotientSpace quotient_basis(int ambient_dim, const Subspace& j) {
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.j = &j;
    q.field = j.field();
    q.rep_index = j.non_pivot_columns();
    q.ambient_to_rep.assign(ambient_dim, -1);
    for (int k = 0; k < static_cast<int>(q.rep_index.size()); ++k)
        q.ambient_to_rep[q.rep_index[k]] = k;
    return q;
}

}  // namespace graycat
