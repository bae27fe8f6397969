#pragma once

#include <functional>

#include "flagpoly/laurent.hpp"

namespace flagpoly {

class NonGenericError : public std::runtime_error {
public:
    explicit NonGenericError(const std::string& w) : std::runtime_error(w) {}
};

// Ring adapters. Matrices are generic over any type with a RingOps
// specialisation; PosLeadZ gets the semiring subset (no neg/div by sums).
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static constexpr bool has_neg = true;
    static Rational zero(const Rational&) { return 0; }
    static Rational one(const Rational&) { return 1; }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational div(const Rational& a, const Rational& b) {
        if (b == 0) throw NonGenericError("division by zero");
        return a / b;
    }
    static Rational neg(const Rational& a) { return -a; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct RingOps<RatFunc> {
    static constexpr bool has_neg = true;
    static RatFunc zero(const RatFunc& like) { return RatFunc::zero(like.vt()); }
    static RatFunc one(const RatFunc& like) { return RatFunc::one(like.vt()); }
    static RatFunc add(const RatFunc& a, const RatFunc& b) { return a + b; }
    static RatFunc sub(const RatFunc& a, const RatFunc& b) { return a - b; }
    static RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
    static RatFunc div(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw NonGenericError("division by zero rational function");
        return a / b;
    }
    static RatFunc neg(const RatFunc& a) { return -a; }
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static bool eq(const RatFunc& a, const RatFunc& b) { return a == b; }
};

template <>
struct RingOps<PosLeadZ> {
    static constexpr bool has_neg = false;
    static PosLeadZ zero(const PosLeadZ&) { return PosLeadZ::zero(); }
    static PosLeadZ one(const PosLeadZ&) { return PosLeadZ::one(); }
    static PosLeadZ add(const PosLeadZ& a, const PosLeadZ& b) { return plz_add(a, b); }
    static PosLeadZ mul(const PosLeadZ& a, const PosLeadZ& b) { return plz_mul(a, b); }
    static PosLeadZ div(const PosLeadZ& a, const PosLeadZ& b) {
        if (b.is_zero) throw NonGenericError("division by structural zero");
        if (a.is_zero) return PosLeadZ::zero();
        return PosLeadZ(pl_div(a.v, b.v));
    }
    static bool is_zero(const PosLeadZ& a) { return a.is_zero; }
    static bool eq(const PosLeadZ& a, const PosLeadZ& b) { return a == b; }
};

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(int n, const R& fill) : n_(n), e_(static_cast<size_t>(n) * n, fill) {}

    static Matrix identity(int n, const R& like) {
        Matrix m(n, RingOps<R>::zero(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = RingOps<R>::one(like);
        return m;
    }

    int n() const { return n_; }
    R& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }       // 0-based
    const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    Matrix operator*(const Matrix& o) const {
        Matrix r(n_, RingOps<R>::zero(e_[0]));
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                if (RingOps<R>::is_zero(at(i, k))) continue;
                for (int j = 0; j < n_; ++j) {
                    if (RingOps<R>::is_zero(o.at(k, j))) continue;
                    r.at(i, j) = RingOps<R>::add(r.at(i, j), RingOps<R>::mul(at(i, k), o.at(k, j)));
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(n_, e_[0]);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (n_ != o.n_) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (!RingOps<R>::eq(e_[i], o.e_[i])) return false;
        return true;
    }

    bool is_lower_triangular() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!RingOps<R>::is_zero(at(i, j))) return false;
        return true;
    }

    bool is_upper_unitriangular() const {
        for (int i = 0; i < n_; ++i) {
            if (!RingOps<R>::eq(at(i, i), RingOps<R>::one(e_[0]))) return false;
            for (int j = 0; j < i; ++j)
                if (!RingOps<R>::is_zero(at(i, j))) return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<R> e_;
};

enum class Chevalley { X, Y, XMinus, T, SBar, W0Bar };

// One-parameter subgroup images and Weyl representatives; w0bar ignores i.
template <class R>
Matrix<R> chevalley(Chevalley kind, int n, int i, const R& param);

// Minor with 1-based row/column index sets, by cofactor expansion with
// memoisation over column subsets.
template <class R>
R minor(const Matrix<R>& m, const std::vector<int>& rows, const std::vector<int>& cols);

template <class R>
R determinant(const Matrix<R>& m);

template <class R>
struct LDU {
    Matrix<R> l, d, u;
};

// M = L D U with L lower-unitriangular, D diagonal, U upper-unitriangular.
// Throws NonGenericError when a leading principal minor vanishes.
template <class R>
LDU<R> gauss_ldu(const Matrix<R>& m);

template <class R>
Matrix<R> inverse(const Matrix<R>& m);  // via adjugate (exact, n <= 6 scale)

// ---- implementation ----

template <class R>
Matrix<R> chevalley(Chevalley kind, int n, int i, const R& param) {
    const R oneR = RingOps<R>::one(param);
    if (kind == Chevalley::W0Bar) {
        Matrix<R> m = Matrix<R>::identity(n, param);
        // product of sbar letters along any reduced word; i0 is used
        for (int len = n - 1; len >= 1; --len)
            for (int k = 1; k <= len; ++k) m = m * chevalley(Chevalley::SBar, n, k, oneR);
        return m;
    }
    if (i < 1 || i > n - 1) throw std::domain_error("chevalley index out of range");
    Matrix<R> m = Matrix<R>::identity(n, param);
    int a = i - 1, b = i;  // 0-based block position
    switch (kind) {
        case Chevalley::X:
            m.at(a, b) = param;
            break;
        case Chevalley::Y:
            m.at(b, a) = param;
            break;
        case Chevalley::XMinus:
            m.at(a, a) = RingOps<R>::div(oneR, param);
            m.at(b, a) = oneR;
            m.at(b, b) = param;
            break;
        case Chevalley::T:
            m.at(a, a) = param;
            m.at(b, b) = RingOps<R>::div(oneR, param);
            break;
        case Chevalley::SBar:
            if constexpr (RingOps<R>::has_neg) {
                m.at(a, a) = RingOps<R>::zero(param);
                m.at(b, b) = RingOps<R>::zero(param);
                m.at(a, b) = RingOps<R>::neg(oneR);
                m.at(b, a) = oneR;
            } else {
                throw std::domain_error("sbar needs a signed ring");
            }
            break;
        default:
            throw std::domain_error("unsupported chevalley kind");
    }
    return m;
}

template <class R>
R minor(const Matrix<R>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::domain_error("minor needs |rows| == |cols|");
    const R like = m.n() > 0 ? m.at(0, 0) : R();
    if (rows.empty()) return RingOps<R>::one(like);
    for (int r : rows)
        if (r < 1 || r > m.n()) throw std::domain_error("minor row out of range");
    for (int c : cols)
        if (c < 1 || c > m.n()) throw std::domain_error("minor column out of range");
    // expansion along the first remaining row; memo on (depth, column mask)
    std::map<std::pair<size_t, unsigned>, R> memo;
    std::function<R(size_t, unsigned)> rec = [&](size_t depth, unsigned colmask) -> R {
        if (depth == rows.size()) return RingOps<R>::one(like);
        auto key = std::make_pair(depth, colmask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        R acc = RingOps<R>::zero(like);
        int sign = 1;
        for (size_t c = 0; c < cols.size(); ++c) {
            if (colmask & (1u << c)) continue;
            const R& entry = m.at(rows[depth] - 1, cols[c] - 1);
            if (!RingOps<R>::is_zero(entry)) {
                R sub = rec(depth + 1, colmask | (1u << c));
                R term = RingOps<R>::mul(entry, sub);
                if constexpr (RingOps<R>::has_neg) {
                    acc = sign > 0 ? RingOps<R>::add(acc, term)
                                   : RingOps<R>::sub(acc, term);
                } else {
                    if (sign < 0)
                        throw std::domain_error("signed minor over a semiring");
                    acc = RingOps<R>::add(acc, term);
                }
            }
            sign = -sign;
        }
        memo[key] = acc;
        return acc;
    };
    return rec(0, 0);
}

template <class R>
R determinant(const Matrix<R>& m) {
    std::vector<int> idx(m.n());
    for (int i = 0; i < m.n(); ++i) idx[i] = i + 1;
    return minor(m, idx, idx);
}

template <class R>
LDU<R> gauss_ldu(const Matrix<R>& m) {
    static_assert(RingOps<R>::has_neg, "LDU needs a field-like ring");
    const int n = m.n();
    const R like = m.at(0, 0);
    Matrix<R> a = m;
    Matrix<R> l = Matrix<R>::identity(n, like);
    Matrix<R> d(n, RingOps<R>::zero(like));
    Matrix<R> u = Matrix<R>::identity(n, like);
    for (int k = 0; k < n; ++k) {
        const R pivot = a.at(k, k);
        if (RingOps<R>::is_zero(pivot))
            throw NonGenericError("vanishing leading principal minor in LDU");
        d.at(k, k) = pivot;
        for (int j = k + 1; j < n; ++j) u.at(k, j) = RingOps<R>::div(a.at(k, j), pivot);
        for (int i = k + 1; i < n; ++i) l.at(i, k) = RingOps<R>::div(a.at(i, k), pivot);
        for (int i = k + 1; i < n; ++i) {
            if (RingOps<R>::is_zero(a.at(i, k))) continue;
            for (int j = k + 1; j < n; ++j) {
                a.at(i, j) = RingOps<R>::sub(a.at(i, j),
                                             RingOps<R>::mul(l.at(i, k), a.at(k, j)));
            }
        }
    }
    return {l, d, u};
}

template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
    static_assert(RingOps<R>::has_neg, "inverse needs a field-like ring");
    const int n = m.n();
    R det = determinant(m);
    if (RingOps<R>::is_zero(det)) throw NonGenericError("singular matrix");
    Matrix<R> inv(n, RingOps<R>::zero(det));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 1; r <= n; ++r)
                if (r != j + 1) rows.push_back(r);
            for (int c = 1; c <= n; ++c)
                if (c != i + 1) cols.push_back(c);
            R cof = minor(m, rows, cols);
            if ((i + j) % 2 == 1) cof = RingOps<R>::neg(cof);
            inv.at(i, j) = RingOps<R>::div(cof, det);
        }
    return inv;
}

}  // namespace flagpoly
