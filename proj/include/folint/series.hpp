#pragma once

#include "folint/ratfunc2.hpp"
#include <vector>

namespace folint {

struct SingularPoint : std::runtime_error {
    SingularPoint() : std::runtime_error("denominator vanishes at the expansion point") {}
    explicit SingularPoint(const std::string& w) : std::runtime_error(w) {}
};

// Truncated power series sum_{i<order} (num[i]/den) * t^i with t = x - x0.
// A single positive denominator is shared by all coefficients; convolutions
// run over the integer numerators.
class TruncSeries {
public:
    TruncSeries() : den_(1), order_(0) {}
    TruncSeries(Rat x0, int order) : x0_(std::move(x0)), den_(1), order_(order) {
        num_.assign(order_, Int(0));
    }
    static TruncSeries constant(const Rat& c, const Rat& x0, int order);
    static TruncSeries from_rats(const std::vector<Rat>& coeffs, const Rat& x0);

    int order() const { return order_; }
    const Rat& x0() const { return x0_; }
    const Int& den() const { return den_; }
    const std::vector<Int>& nums() const { return num_; }

    Rat coefficient(int i) const {
        if (i < 0 || i >= order_) return Rat(0);
        return rat(num_[i], den_);
    }
    std::vector<Rat> to_rats() const;

    bool is_zero() const {
        for (auto& n : num_) if (n != 0) return false;
        return true;
    }

    void truncate(int new_order) {
        if (new_order < order_) {
            num_.resize(new_order);
            order_ = new_order;
        }
    }

    // Divide den and numerators by their common content.
    void reduce();

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    friend TruncSeries ts_raw(Rat x0, std::vector<Int> num, Int den);
    friend struct TSAccess;

    Rat x0_;
    std::vector<Int> num_;
    Int den_;
    int order_;
};

TruncSeries ts_raw(Rat x0, std::vector<Int> num, Int den);

TruncSeries ts_neg(const TruncSeries& a);
TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_scale(const TruncSeries& a, const Rat& c);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_square(const TruncSeries& a);
// Multiplicative inverse; requires a nonzero constant term.
TruncSeries ts_inverse(const TruncSeries& a);
TruncSeries ts_pow(const TruncSeries& a, long e);
// Antiderivative with zero constant term at x0 (order preserved).
TruncSeries integrate_series(const TruncSeries& s);
TruncSeries ts_derivative(const TruncSeries& s);

// Reference and instrumented kernels (see tools/kernels_bench).
void conv_schoolbook_serial(const std::vector<Int>& a, const std::vector<Int>& b,
                            std::vector<Int>& out, int ord);
void conv_schoolbook_parallel(const std::vector<Int>& a, const std::vector<Int>& b,
                              std::vector<Int>& out, int ord);
void conv_kronecker(const std::vector<Int>& a, const std::vector<Int>& b,
                    std::vector<Int>& out, int ord, bool square);

// Evaluate a bivariate polynomial on (x0 + t, powers[1]) given powers[j] ~ Y^j;
// powers must cover deg_y(p). All series share x0/order.
TruncSeries evaluate_poly_on_powers(const QPoly& p, const std::vector<TruncSeries>& powers,
                                    const Rat& x0, int order);
TruncSeries evaluate_ratfunc_on_powers(const QRat2& f, const std::vector<TruncSeries>& powers,
                                       const Rat& x0, int order);

} // namespace folint
