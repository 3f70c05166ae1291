#pragma once

// Harmonic (totally symmetric, traceless) tensors; leading harmonic part via
// the cofactor linear solve S = S' + q (.) V; harmonic product.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ela/tensor.hpp"

namespace ela {

namespace detail {

/// Linear codes of the sorted (non-decreasing) multi-indices of length `order`:
/// one representative per multiset orbit, i.e. a basis of Sym^order.
inline std::vector<std::size_t> multiset_reps(int order) {
    std::vector<std::size_t> reps;
    const std::size_t sz = pow3(order);
    for (std::size_t m = 0; m < sz; ++m)
        if (sorted_key(m, order) == m) reps.push_back(m);
    return reps;
}

/// Indicator tensor of a multiset orbit: 1 at every arrangement of `rep`.
template <class S>
Tensor<S> orbit_indicator(std::size_t rep, int order) {
    Tensor<S> e(order);
    const std::size_t sz = pow3(order);
    for (std::size_t m = 0; m < sz; ++m)
        if (sorted_key(m, order) == rep) e[m] = ScalarOps<S>::from_int(1);
    return e;
}

template <class S>
std::vector<S> gauss_solve(std::vector<std::vector<S>> A, std::vector<S> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        double best = ScalarOps<S>::mag(A[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double m = ScalarOps<S>::mag(A[r][c]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best == 0.0) throw DomainError("gauss_solve: singular system");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            if (ScalarOps<S>::mag(A[r][c]) == 0.0) continue;
            const S f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<S> x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = b[c] / A[c][c];
    return x;
}

/// Matrix of V |-> tr_12(q (.) V) on the multiset-orbit basis of Sym^m,
/// cached per order (it is invertible: Sym^n = H^n + q (.) Sym^{n-2}).
template <class S>
const std::vector<std::vector<S>>& trace_embedding_matrix(int m) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<std::vector<S>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    const auto reps = multiset_reps(m);
    const std::size_t d = reps.size();
    auto mat = std::make_unique<std::vector<std::vector<S>>>(d, std::vector<S>(d, S{}));
    const Tensor<S> q = metric<S>();
    for (std::size_t col = 0; col < d; ++col) {
        const Tensor<S> e = orbit_indicator<S>(reps[col], m);
        const Tensor<S> t = trace(symmetrize(outer(q, e)), 0, 1);
        for (std::size_t row = 0; row < d; ++row) (*mat)[row][col] = t[reps[row]];
    }
    auto& ref = *mat;
    cache.emplace(m, std::move(mat));
    return ref;
}

}  // namespace detail

template <class Scalar>
class HarmonicTensor {
public:
    HarmonicTensor() : s_() {}
    explicit HarmonicTensor(int order) : s_(order) {}

    /// Wrap a symmetric tensor whose pair trace vanishes within tol * ||t||.
    static HarmonicTensor checked(const SymTensor<Scalar>& s, double tol = 1e-12) {
        if (s.order() >= 2) {
            const double defect = max_abs(trace(s.raw(), 0, 1));
            if (defect > tol * std::max(1e-300, norm(s)))
                throw DomainError("HarmonicTensor: trace does not vanish");
        }
        return HarmonicTensor(s);
    }

    /// Wrap a tensor the caller guarantees to be harmonic (no check).
    static HarmonicTensor trusted(SymTensor<Scalar> s) { return HarmonicTensor(std::move(s)); }

    int order() const { return s_.order(); }
    const SymTensor<Scalar>& sym() const { return s_; }
    const Tensor<Scalar>& raw() const { return s_.raw(); }

    const Scalar& operator[](std::size_t m) const { return s_[m]; }
    template <class... I>
    const Scalar& operator()(I... idx) const {
        return s_(idx...);
    }

    friend HarmonicTensor operator+(const HarmonicTensor& a, const HarmonicTensor& b) {
        return HarmonicTensor(a.s_ + b.s_);
    }
    friend HarmonicTensor operator-(const HarmonicTensor& a, const HarmonicTensor& b) {
        return HarmonicTensor(a.s_ - b.s_);
    }
    friend HarmonicTensor operator*(const HarmonicTensor& a, const Scalar& s) {
        return HarmonicTensor(a.s_ * s);
    }
    friend HarmonicTensor operator*(const Scalar& s, const HarmonicTensor& a) {
        return HarmonicTensor(a.s_ * s);
    }

private:
    explicit HarmonicTensor(SymTensor<Scalar> s) : s_(std::move(s)) {}
    SymTensor<Scalar> s_;
};

template <class S>
bool is_harmonic(const SymTensor<S>& s, double tol = 1e-12) {
    if (s.order() < 2) return true;
    return max_abs(trace(s.raw(), 0, 1)) <= tol * std::max(1e-300, norm(s));
}

template <class S>
struct HarmonicSplit {
    HarmonicTensor<S> harmonic;  // S'
    SymTensor<S> cofactor;       // V with S = S' + q (.) V
};

/// Split S in Sym^n into its leading harmonic part and the q (.) Sym^{n-2}
/// remainder, by solving tr(q (.) V) = tr(S) for the cofactor V.
template <class S>
HarmonicSplit<S> harmonic_split(const SymTensor<S>& s) {
    const int n = s.order();
    if (n > kMaxOrder)
        throw UnsupportedOrderError("harmonic_split: order > " + std::to_string(kMaxOrder));
    if (n < 2)
        return {HarmonicTensor<S>::trusted(s), SymTensor<S>::scalar(S{})};
    const int m = n - 2;
    const auto reps = detail::multiset_reps(m);
    const auto& L = detail::trace_embedding_matrix<S>(m);
    const Tensor<S> trs = trace(s.raw(), 0, 1);
    std::vector<S> rhs(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) rhs[i] = trs[reps[i]];
    const std::vector<S> x = detail::gauss_solve(L, rhs);
    Tensor<S> V(m);
    for (std::size_t m2 = 0; m2 < V.size(); ++m2) {
        const std::size_t key = detail::sorted_key(m2, m);
        const auto it = std::lower_bound(reps.begin(), reps.end(), key);
        V[m2] = x[static_cast<std::size_t>(it - reps.begin())];
    }
    SymTensor<S> cof = SymTensor<S>::trusted(std::move(V));
    SymTensor<S> prime =
        SymTensor<S>::trusted(s.raw() - sym_product(SymTensor<S>::trusted(metric<S>()), cof).raw());
    return {HarmonicTensor<S>::trusted(std::move(prime)), std::move(cof)};
}

/// Leading harmonic part S'.
template <class S>
HarmonicTensor<S> harmonic_part(const SymTensor<S>& s) {
    return harmonic_split(s).harmonic;
}

/// Harmonic product H1 * H2 = (H1 (.) H2)'.
template <class S>
HarmonicTensor<S> harmonic_product(const HarmonicTensor<S>& a, const HarmonicTensor<S>& b) {
    const int n = a.order() + b.order();
    if (n > kMaxOrder)
        throw UnsupportedOrderError("harmonic_product: result order " + std::to_string(n) + " > " +
                                    std::to_string(kMaxOrder));
    return harmonic_part(sym_product(a.sym(), b.sym()));
}

/// k-fold harmonic power *^k h (k >= 1).
template <class S>
HarmonicTensor<S> harmonic_power(const HarmonicTensor<S>& h, int k) {
    if (k < 1) throw ArityError("harmonic_power: k >= 1 required");
    HarmonicTensor<S> out = h;
    for (int i = 1; i < k; ++i) out = harmonic_product(out, h);
    return out;
}

}  // namespace ela
