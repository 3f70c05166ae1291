#pragma once

// Dense algebra for small tensors over R^3 (or C^3, or exact rationals):
// total symmetrisation, the symmetric tensor product, r-contractions, the
// generalized cross product and the rotation action.  Components are stored
// fully (3^n entries, redundantly symmetric where applicable).  The symmetric
// algebra supports orders 0..7; raw contraction intermediates may reach 8.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ela/errors.hpp"

namespace ela {

inline constexpr int kMaxOrder = 7;      // symmetric-algebra operations
inline constexpr int kMaxRawOrder = 8;   // transient raw tensors (cross intermediates)

constexpr std::size_t pow3(int n) {
    std::size_t s = 1;
    while (n-- > 0) s *= 3;
    return s;
}

/// Magnitude and integer-embedding hooks so the same templates serve
/// double, std::complex<double> and exact rational scalars.
template <class S>
struct ScalarOps {
    static double mag(const S& x) {
        using std::abs;
        return static_cast<double>(abs(x));
    }
    static S from_int(long long n) { return S(n); }
};

template <class T>
struct ScalarOps<std::complex<T>> {
    static double mag(const std::complex<T>& x) { return static_cast<double>(std::abs(x)); }
    static std::complex<T> from_int(long long n) { return {static_cast<T>(n), T(0)}; }
};

namespace detail {

inline void decode_index(std::size_t m, int order, int* digits) {
    for (int k = order - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(m % 3);
        m /= 3;
    }
}

inline std::size_t encode_index(const int* digits, int order) {
    std::size_t m = 0;
    for (int k = 0; k < order; ++k) m = m * 3 + static_cast<std::size_t>(digits[k]);
    return m;
}

inline std::size_t sorted_key(std::size_t m, int order) {
    int d[kMaxRawOrder];
    decode_index(m, order, d);
    std::sort(d, d + order);
    return encode_index(d, order);
}

}  // namespace detail

template <class Scalar>
class Tensor {
public:
    Tensor() : order_(0), c_(1, Scalar{}) {}

    explicit Tensor(int order) : order_(checked_order(order)), c_(pow3(order), Scalar{}) {}

    static Tensor scalar(Scalar v) {
        Tensor t;
        t.c_[0] = std::move(v);
        return t;
    }

    int order() const { return order_; }
    std::size_t size() const { return c_.size(); }

    Scalar& operator[](std::size_t m) { return c_[m]; }
    const Scalar& operator[](std::size_t m) const { return c_[m]; }

    template <class... I>
    Scalar& operator()(I... idx) {
        static_assert((std::is_integral_v<I> && ...));
        const int d[] = {static_cast<int>(idx)...};
        return c_[detail::encode_index(d, static_cast<int>(sizeof...(I)))];
    }
    template <class... I>
    const Scalar& operator()(I... idx) const {
        static_assert((std::is_integral_v<I> && ...));
        const int d[] = {static_cast<int>(idx)...};
        return c_[detail::encode_index(d, static_cast<int>(sizeof...(I)))];
    }

    const std::vector<Scalar>& components() const { return c_; }

    Tensor& operator+=(const Tensor& o) {
        require_same_order(o);
        for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        require_same_order(o);
        for (std::size_t m = 0; m < c_.size(); ++m) c_[m] -= o.c_[m];
        return *this;
    }
    Tensor& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
    friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
    friend Tensor operator-(Tensor a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

private:
    static int checked_order(int n) {
        if (n < 0 || n > kMaxRawOrder)
            throw UnsupportedOrderError("tensor order " + std::to_string(n) +
                                        " outside supported range 0.." + std::to_string(kMaxRawOrder));
        return n;
    }
    void require_same_order(const Tensor& o) const {
        if (o.order_ != order_) throw ArityError("tensor order mismatch");
    }

    int order_;
    std::vector<Scalar> c_;
};

/// Euclidean metric q (identity on R^3).
template <class S>
Tensor<S> metric() {
    Tensor<S> q(2);
    for (int i = 0; i < 3; ++i) q(i, i) = ScalarOps<S>::from_int(1);
    return q;
}

/// Levi-Civita symbol, eps_123 = +1.
template <class S>
Tensor<S> levi_civita() {
    Tensor<S> e(3);
    e(0, 1, 2) = e(1, 2, 0) = e(2, 0, 1) = ScalarOps<S>::from_int(1);
    e(0, 2, 1) = e(2, 1, 0) = e(1, 0, 2) = ScalarOps<S>::from_int(-1);
    return e;
}

/// Average over all order! index permutations, computed by grouping indices
/// with equal sorted key (every arrangement of a multiset receives the mean
/// of the entries over that multiset's arrangements).
template <class S>
Tensor<S> symmetrize(const Tensor<S>& T) {
    const int n = T.order();
    if (n > kMaxOrder)
        throw UnsupportedOrderError("symmetrize: order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxOrder));
    if (n < 2) return T;
    std::vector<S> sums(T.size(), S{});
    std::vector<int> counts(T.size(), 0);
    for (std::size_t m = 0; m < T.size(); ++m) {
        const std::size_t k = detail::sorted_key(m, n);
        sums[k] += T[m];
        counts[k] += 1;
    }
    Tensor<S> out(n);
    for (std::size_t m = 0; m < T.size(); ++m) {
        const std::size_t k = detail::sorted_key(m, n);
        out[m] = sums[k] / ScalarOps<S>::from_int(counts[k]);
    }
    return out;
}

template <class S>
Tensor<S> outer(const Tensor<S>& A, const Tensor<S>& B) {
    const int n = A.order() + B.order();
    if (n > kMaxRawOrder)
        throw UnsupportedOrderError("outer product order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxRawOrder));
    Tensor<S> out(n);
    for (std::size_t i = 0; i < A.size(); ++i) {
        const S& a = A[i];
        for (std::size_t j = 0; j < B.size(); ++j) out[i * B.size() + j] = a * B[j];
    }
    return out;
}

/// r-contraction: the last r indices of A against the first r of B.
template <class S>
Tensor<S> contract(const Tensor<S>& A, const Tensor<S>& B, int r) {
    if (r < 0 || r > std::min(A.order(), B.order()))
        throw ArityError("contract: r = " + std::to_string(r) + " exceeds operand orders " +
                         std::to_string(A.order()) + "," + std::to_string(B.order()));
    const int n = A.order() + B.order() - 2 * r;
    if (n > kMaxRawOrder)
        throw UnsupportedOrderError("contract: result order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxRawOrder));
    const std::size_t fa = pow3(A.order() - r);
    const std::size_t fb = pow3(B.order() - r);
    const std::size_t nk = pow3(r);
    Tensor<S> out(n);
    for (std::size_t ia = 0; ia < fa; ++ia) {
        for (std::size_t ib = 0; ib < fb; ++ib) {
            S s{};
            for (std::size_t k = 0; k < nk; ++k) s += A[ia * nk + k] * B[k * fb + ib];
            out[ia * fb + ib] = s;
        }
    }
    return out;
}

/// Full contraction <A,B> of two same-order tensors (bilinear, no conjugation).
template <class S>
S full_contract(const Tensor<S>& A, const Tensor<S>& B) {
    if (A.order() != B.order()) throw ArityError("full_contract: order mismatch");
    S s{};
    for (std::size_t m = 0; m < A.size(); ++m) s += A[m] * B[m];
    return s;
}

/// Trace over index positions p < q.
template <class S>
Tensor<S> trace(const Tensor<S>& T, int p, int q) {
    const int n = T.order();
    if (p < 0 || q <= p || q >= n) throw ArityError("trace: bad index positions");
    Tensor<S> out(n - 2);
    int din[kMaxRawOrder];
    for (std::size_t m = 0; m < out.size(); ++m) {
        int dout[kMaxRawOrder];
        detail::decode_index(m, n - 2, dout);
        S s{};
        for (int k = 0; k < 3; ++k) {
            int src = 0;
            for (int pos = 0, o = 0; pos < n; ++pos)
                din[pos] = (pos == p || pos == q) ? k : dout[o++];
            src = static_cast<int>(detail::encode_index(din, n));
            s += T[static_cast<std::size_t>(src)];
        }
        out[m] = s;
    }
    return out;
}

/// tr_13 of an order-4 tensor: (tr13 A)_{jl} = A_{ijil}.
template <class S>
Tensor<S> trace13(const Tensor<S>& A) {
    if (A.order() != 4) throw ArityError("trace13: order-4 operand required");
    return trace(A, 0, 2);
}

template <class S>
double norm_sq(const Tensor<S>& T) {
    double s = 0;
    for (std::size_t m = 0; m < T.size(); ++m) {
        const double a = ScalarOps<S>::mag(T[m]);
        s += a * a;
    }
    return s;
}

template <class S>
double norm(const Tensor<S>& T) {
    return std::sqrt(norm_sq(T));
}

template <class S>
double max_abs(const Tensor<S>& T) {
    double s = 0;
    for (std::size_t m = 0; m < T.size(); ++m) s = std::max(s, ScalarOps<S>::mag(T[m]));
    return s;
}

template <class S>
bool is_symmetric(const Tensor<S>& T, double tol = 1e-12) {
    const Tensor<S> s = symmetrize(T);
    double defect = 0;
    for (std::size_t m = 0; m < T.size(); ++m)
        defect = std::max(defect, ScalarOps<S>::mag(T[m] - s[m]));
    return defect <= tol * std::max(1e-300, norm(T));
}

template <class S, class M>
Tensor<S> mode_product(const M& g, const Tensor<S>& T, int mode) {
    const int n = T.order();
    const std::size_t w = pow3(n - 1 - mode);
    const std::size_t blocks = pow3(mode);
    Tensor<S> out(n);
    for (std::size_t a = 0; a < blocks; ++a) {
        const std::size_t base = a * 3 * w;
        for (std::size_t b = 0; b < w; ++b) {
            for (int i = 0; i < 3; ++i) {
                S s{};
                for (int j = 0; j < 3; ++j) s += S(g[i][j]) * T[base + static_cast<std::size_t>(j) * w + b];
                out[base + static_cast<std::size_t>(i) * w + b] = s;
            }
        }
    }
    return out;
}

/// Rotation (or any 3x3 matrix) action: (g*T)_{i1..in} = g_{i1 j1}...g_{in jn} T_{j1..jn}.
/// `g` is indexable as g[i][j] with entries convertible to S.
template <class S, class M>
Tensor<S> act(const M& g, const Tensor<S>& T) {
    Tensor<S> cur = T;
    for (int mode = 0; mode < T.order(); ++mode) cur = mode_product<S>(g, cur, mode);
    return cur;
}

/// Contract the last index with a vector (reduces order by one).
template <class S, class V>
Tensor<S> contract_vector(const Tensor<S>& T, const V& x) {
    if (T.order() < 1) throw ArityError("contract_vector: order-0 operand");
    Tensor<S> out(T.order() - 1);
    for (std::size_t m = 0; m < out.size(); ++m) {
        S s{};
        for (int j = 0; j < 3; ++j) s += T[m * 3 + static_cast<std::size_t>(j)] * S(x[j]);
        out[m] = s;
    }
    return out;
}

/// Polynomial value p(x) = T(x, ..., x).
template <class S, class V>
S poly_eval(const Tensor<S>& T, const V& x) {
    Tensor<S> cur = T;
    while (cur.order() > 0) cur = contract_vector(cur, x);
    return cur[0];
}

// ---------------------------------------------------------------------------
// Totally symmetric tensors
// ---------------------------------------------------------------------------

template <class Scalar>
class SymTensor {
public:
    SymTensor() : t_() {}

    explicit SymTensor(int order) : t_(checked(order)) {}

    /// Symmetrize an arbitrary tensor (projection onto the symmetric subspace).
    static SymTensor project(const Tensor<Scalar>& t) { return SymTensor(symmetrize(t)); }

    /// Wrap a tensor that is symmetric within tol * ||t||; throws DomainError otherwise.
    static SymTensor checked(const Tensor<Scalar>& t, double tol = 1e-12) {
        if (t.order() > kMaxOrder)
            throw UnsupportedOrderError("SymTensor: order > " + std::to_string(kMaxOrder));
        if (!is_symmetric(t, tol)) throw DomainError("SymTensor: components are not symmetric");
        return SymTensor(t);
    }

    /// Wrap a tensor the caller guarantees to be symmetric (no check).
    static SymTensor trusted(Tensor<Scalar> t) { return SymTensor(std::move(t)); }

    static SymTensor scalar(Scalar v) { return SymTensor(Tensor<Scalar>::scalar(std::move(v))); }

    int order() const { return t_.order(); }
    const Tensor<Scalar>& raw() const { return t_; }

    const Scalar& operator[](std::size_t m) const { return t_[m]; }
    template <class... I>
    const Scalar& operator()(I... idx) const {
        return t_(idx...);
    }

    friend SymTensor operator+(const SymTensor& a, const SymTensor& b) {
        return SymTensor(a.t_ + b.t_);
    }
    friend SymTensor operator-(const SymTensor& a, const SymTensor& b) {
        return SymTensor(a.t_ - b.t_);
    }
    friend SymTensor operator*(const SymTensor& a, const Scalar& s) { return SymTensor(a.t_ * s); }
    friend SymTensor operator*(const Scalar& s, const SymTensor& a) { return SymTensor(a.t_ * s); }
    friend SymTensor operator-(const SymTensor& a) { return SymTensor(-a.t_); }

private:
    static int checked(int order) {
        if (order > kMaxOrder)
            throw UnsupportedOrderError("SymTensor: order > " + std::to_string(kMaxOrder));
        return order;
    }
    explicit SymTensor(Tensor<Scalar> t) : t_(std::move(t)) {}
    Tensor<Scalar> t_;
};

/// S1 (.) S2 = (S1 (x) S2)^s.
template <class S>
SymTensor<S> sym_product(const SymTensor<S>& a, const SymTensor<S>& b) {
    const int n = a.order() + b.order();
    if (n > kMaxOrder)
        throw UnsupportedOrderError("sym_product: result order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxOrder));
    return SymTensor<S>::trusted(symmetrize(outer(a.raw(), b.raw())));
}

/// Symmetric r-contraction: (S1 .(r). S2)^s.
template <class S>
SymTensor<S> sym_contract(const SymTensor<S>& a, const SymTensor<S>& b, int r) {
    const int n = a.order() + b.order() - 2 * r;
    if (n > kMaxOrder)
        throw UnsupportedOrderError("sym_contract: result order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxOrder));
    return SymTensor<S>::trusted(symmetrize(contract(a.raw(), b.raw(), r)));
}

/// Generalized cross product S1 x S2 = (S2 . eps . S1)^s, order n1+n2-1.
/// For vectors this reproduces the classical cross product u x v (same sign).
template <class S>
SymTensor<S> cross(const SymTensor<S>& s1, const SymTensor<S>& s2) {
    if (s1.order() < 1 || s2.order() < 1)
        throw ArityError("cross: operands must have order >= 1");
    const int n = s1.order() + s2.order() - 1;
    if (n > kMaxOrder)
        throw UnsupportedOrderError("cross: result order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxOrder));
    Tensor<S> t = contract(contract(s2.raw(), levi_civita<S>(), 1), s1.raw(), 1);
    return SymTensor<S>::trusted(symmetrize(t));
}

/// Pair trace of a totally symmetric tensor (all index pairs agree).
template <class S>
SymTensor<S> trace(const SymTensor<S>& a) {
    if (a.order() < 2) throw ArityError("trace: order < 2");
    return SymTensor<S>::trusted(trace(a.raw(), 0, 1));
}

template <class S>
S full_contract(const SymTensor<S>& a, const SymTensor<S>& b) {
    return full_contract(a.raw(), b.raw());
}

template <class S>
double norm(const SymTensor<S>& a) {
    return norm(a.raw());
}

template <class S>
double norm_sq(const SymTensor<S>& a) {
    return norm_sq(a.raw());
}

}  // namespace ela
