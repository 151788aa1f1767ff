#include "folint/series.hpp"
#include <cstring>
#ifdef _OPENMP
#include <omp.h>
#endif

namespace folint {

TruncSeries ts_raw(Rat x0, std::vector<Int> num, Int den) {
    TruncSeries s;
    s.x0_ = std::move(x0);
    s.num_ = std::move(num);
    if (sgn(den) < 0) {
        den = -den;
        for (auto& n : s.num_) n = -n;
    }
    s.den_ = std::move(den);
    s.order_ = static_cast<int>(s.num_.size());
    return s;
}

TruncSeries TruncSeries::constant(const Rat& c, const Rat& x0, int order) {
    std::vector<Int> num(order, Int(0));
    if (order > 0) num[0] = c.get_num();
    return ts_raw(x0, std::move(num), order > 0 ? Int(c.get_den()) : Int(1));
}

TruncSeries TruncSeries::from_rats(const std::vector<Rat>& coeffs, const Rat& x0) {
    Int den = 1;
    for (auto& c : coeffs) den = int_lcm(den, c.get_den());
    std::vector<Int> num;
    num.reserve(coeffs.size());
    for (auto& c : coeffs) num.push_back(Int(c.get_num() * (den / c.get_den())));
    return ts_raw(x0, std::move(num), den);
}

std::vector<Rat> TruncSeries::to_rats() const {
    std::vector<Rat> out;
    out.reserve(order_);
    for (int i = 0; i < order_; ++i) out.push_back(coefficient(i));
    return out;
}

void TruncSeries::reduce() {
    if (den_ == 1) return;
    Int g = den_;
    for (auto& n : num_) {
        if (n == 0) continue;
        g = int_gcd(g, n);
        if (g == 1) return;
    }
    if (g == 1 || g == 0) return;
    den_ /= g;
    for (auto& n : num_) n /= g;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_ || a.x0_ != b.x0_) return false;
    for (int i = 0; i < a.order_; ++i)
        if (a.num_[i] * b.den_ != b.num_[i] * a.den_) return false;
    return true;
}

TruncSeries ts_neg(const TruncSeries& a) {
    std::vector<Int> num = a.nums();
    for (auto& n : num) n = -n;
    return ts_raw(a.x0(), std::move(num), a.den());
}

static void check_compat(const TruncSeries& a, const TruncSeries& b) {
    if (a.x0() != b.x0()) throw std::invalid_argument("series base points differ");
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b) {
    check_compat(a, b);
    int ord = std::min(a.order(), b.order());
    Int den = int_lcm(a.den(), b.den());
    Int fa = den / a.den(), fb = den / b.den();
    std::vector<Int> num(ord);
    for (int i = 0; i < ord; ++i) num[i] = a.nums()[i] * fa + b.nums()[i] * fb;
    TruncSeries r = ts_raw(a.x0(), std::move(num), den);
    r.reduce();
    return r;
}

TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b) { return ts_add(a, ts_neg(b)); }

TruncSeries ts_scale(const TruncSeries& a, const Rat& c) {
    if (is_zero(c)) return TruncSeries(a.x0(), a.order());
    std::vector<Int> num = a.nums();
    for (auto& n : num) n *= c.get_num();
    TruncSeries r = ts_raw(a.x0(), std::move(num), a.den() * c.get_den());
    r.reduce();
    return r;
}

// --- convolution kernels ----------------------------------------------------

void conv_schoolbook_serial(const std::vector<Int>& a, const std::vector<Int>& b,
                            std::vector<Int>& out, int ord) {
    out.assign(ord, Int(0));
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    for (int k = 0; k < ord; ++k) {
        Int acc(0);
        int lo = std::max(0, k - nb + 1), hi = std::min(k, na - 1);
        for (int i = lo; i <= hi; ++i)
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        out[k] = std::move(acc);
    }
}

void conv_schoolbook_parallel(const std::vector<Int>& a, const std::vector<Int>& b,
                              std::vector<Int>& out, int ord) {
    out.assign(ord, Int(0));
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int k = 0; k < ord; ++k) {
        Int acc(0);
        int lo = std::max(0, k - nb + 1), hi = std::min(k, na - 1);
        for (int i = lo; i <= hi; ++i)
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        out[k] = std::move(acc);
    }
}

namespace {

size_t max_bits(const std::vector<Int>& v) {
    size_t m = 1;
    for (auto& x : v) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
}

// Packs the non-negative coefficient vector into one big integer with the
// given slot width (in 64-bit words).
Int kron_pack(const std::vector<Int>& v, size_t slot_words) {
    size_t total = v.size() * slot_words;
    std::vector<uint64_t> buf(total, 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        size_t count = 0;
        mpz_export(buf.data() + i * slot_words, &count, -1, 8, 0, 0, v[i].get_mpz_t());
    }
    Int r;
    mpz_import(r.get_mpz_t(), total, -1, 8, 0, 0, buf.data());
    return r;
}

void kron_unpack(const Int& big, size_t nslots, size_t slot_words, std::vector<Int>& out) {
    out.assign(nslots, Int(0));
    size_t words = (mpz_sizeinbase(big.get_mpz_t(), 2) + 63) / 64;
    std::vector<uint64_t> buf(std::max(words, nslots * slot_words) + 1, 0);
    size_t count = 0;
    mpz_export(buf.data(), &count, -1, 8, 0, 0, big.get_mpz_t());
    for (size_t i = 0; i < nslots; ++i) {
        mpz_import(out[i].get_mpz_t(), slot_words, -1, 8, 0, 0, buf.data() + i * slot_words);
    }
}

} // namespace

void conv_kronecker(const std::vector<Int>& a, const std::vector<Int>& b,
                    std::vector<Int>& out, int ord, bool square) {
    size_t ba = max_bits(a), bb = square ? ba : max_bits(b);
    size_t minlen = std::min(a.size(), b.size());
    size_t guard = 1;
    while ((size_t(1) << guard) < minlen + 2) ++guard;
    size_t slot_bits = ba + bb + guard + 2;
    size_t slot_words = (slot_bits + 63) / 64;

    // signed split: a = ap - an, b = bp - bn
    auto split = [](const std::vector<Int>& v, std::vector<Int>& pos, std::vector<Int>& neg) {
        pos.resize(v.size());
        neg.resize(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            if (sgn(v[i]) >= 0) { pos[i] = v[i]; neg[i] = 0; }
            else { pos[i] = 0; neg[i] = -v[i]; }
        }
    };
    std::vector<Int> ap, an, bp, bn;
    split(a, ap, an);
    if (square) { bp = ap; bn = an; }
    else split(b, bp, bn);

    auto addv = [](const std::vector<Int>& x, const std::vector<Int>& y) {
        std::vector<Int> r(x.size());
        for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
        return r;
    };

    Int A1 = kron_pack(ap, slot_words), A2 = kron_pack(an, slot_words);
    Int A3 = kron_pack(addv(ap, an), slot_words);
    Int B1, B2, B3;
    if (square) { B1 = A1; B2 = A2; B3 = A3; }
    else {
        B1 = kron_pack(bp, slot_words);
        B2 = kron_pack(bn, slot_words);
        B3 = kron_pack(addv(bp, bn), slot_words);
    }
    Int P1 = A1 * B1, P2 = A2 * B2, P3 = A3 * B3;
    size_t nconv = a.size() + b.size() - 1;
    size_t nslots = std::min<size_t>(nconv, static_cast<size_t>(ord));
    std::vector<Int> p1, p2, p3;
    kron_unpack(P1, nslots, slot_words, p1);
    kron_unpack(P2, nslots, slot_words, p2);
    kron_unpack(P3, nslots, slot_words, p3);
    out.assign(ord, Int(0));
    // c = ap*bp + an*bn - ap*bn - an*bp = 2(P1+P2) - P3
    for (size_t k = 0; k < nslots; ++k)
        out[k] = 2 * (p1[k] + p2[k]) - p3[k];
}

namespace {

constexpr int kKroneckerMinLen = 48;

void conv_dispatch(const std::vector<Int>& a, const std::vector<Int>& b,
                   std::vector<Int>& out, int ord, bool square) {
    if (static_cast<int>(std::min(a.size(), b.size())) >= kKroneckerMinLen)
        conv_kronecker(a, b, out, ord, square);
    else
        conv_schoolbook_parallel(a, b, out, ord);
}

} // namespace

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
    check_compat(a, b);
    int ord = std::min(a.order(), b.order());
    if (ord <= 0) return TruncSeries(a.x0(), std::max(0, ord));
    std::vector<Int> num;
    conv_dispatch(a.nums(), b.nums(), num, ord, false);
    TruncSeries r = ts_raw(a.x0(), std::move(num), a.den() * b.den());
    r.reduce();
    return r;
}

TruncSeries ts_square(const TruncSeries& a) {
    int ord = a.order();
    if (ord <= 0) return TruncSeries(a.x0(), 0);
    std::vector<Int> num;
    conv_dispatch(a.nums(), a.nums(), num, ord, true);
    TruncSeries r = ts_raw(a.x0(), std::move(num), a.den() * a.den());
    r.reduce();
    return r;
}

TruncSeries ts_inverse(const TruncSeries& a) {
    int ord = a.order();
    if (ord <= 0) return a;
    std::vector<Rat> av = a.to_rats();
    if (is_zero(av[0])) throw DivisionByZero("ts_inverse: zero constant term");
    std::vector<Rat> r(ord);
    Rat inv0 = 1 / av[0];
    r[0] = inv0;
    for (int n = 1; n < ord; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += av[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return TruncSeries::from_rats(r, a.x0());
}

TruncSeries ts_pow(const TruncSeries& a, long e) {
    if (e < 0) return ts_pow(ts_inverse(a), -e);
    TruncSeries r = TruncSeries::constant(Rat(1), a.x0(), a.order());
    TruncSeries base = a;
    while (e) {
        if (e & 1) r = ts_mul(r, base);
        if (e >>= 1) base = ts_square(base);
    }
    return r;
}

TruncSeries integrate_series(const TruncSeries& s) {
    std::vector<Rat> v = s.to_rats();
    std::vector<Rat> r(s.order(), Rat(0));
    for (int i = 0; i + 1 < s.order(); ++i) r[i + 1] = v[i] / Rat(i + 1);
    return TruncSeries::from_rats(r, s.x0());
}

TruncSeries ts_derivative(const TruncSeries& s) {
    std::vector<Int> num(std::max(0, s.order() - 1));
    for (int i = 1; i < s.order(); ++i) num[i - 1] = s.nums()[i] * i;
    TruncSeries r = ts_raw(s.x0(), std::move(num), s.den());
    r.reduce();
    return r;
}

TruncSeries evaluate_poly_on_powers(const QPoly& p, const std::vector<TruncSeries>& powers,
                                    const Rat& x0, int order) {
    // shift x -> x0 + t once
    std::vector<std::vector<Rat>> xshift; // xshift[i] = coefficients of (x0+t)^i
    int dx = std::max(0, p.deg_x());
    xshift.resize(dx + 1);
    xshift[0] = {Rat(1)};
    for (int i = 1; i <= dx; ++i) {
        xshift[i].assign(i + 1, Rat(0));
        for (int k = 0; k < i; ++k) {
            xshift[i][k] += xshift[i - 1][k] * x0;
            xshift[i][k + 1] += xshift[i - 1][k];
        }
    }
    int dy = std::max(0, p.deg_y());
    // group by y-degree: c_j(t) = sum_i coeff(i,j) (x0+t)^i
    TruncSeries acc(x0, order);
    for (int j = 0; j <= dy; ++j) {
        std::vector<Rat> cj(std::min(order, dx + 1), Rat(0));
        bool nonzero = false;
        for (auto& [m, c] : p.terms()) {
            if (m.j != j) continue;
            nonzero = true;
            const auto& xs = xshift[m.i];
            for (size_t k = 0; k < xs.size() && k < cj.size(); ++k)
                cj[k] += c * xs[k];
        }
        if (!nonzero) continue;
        if (cj.empty()) cj.assign(1, Rat(0));
        TruncSeries cjs = TruncSeries::from_rats(cj, x0);
        // pad to order
        std::vector<Int> padded = cjs.nums();
        padded.resize(order, Int(0));
        cjs = ts_raw(x0, std::move(padded), cjs.den());
        if (j >= static_cast<int>(powers.size()))
            throw std::invalid_argument("evaluate_poly_on_powers: missing power");
        acc = ts_add(acc, ts_mul(cjs, powers[j]));
    }
    return acc;
}

TruncSeries evaluate_ratfunc_on_powers(const QRat2& f, const std::vector<TruncSeries>& powers,
                                       const Rat& x0, int order) {
    TruncSeries n = evaluate_poly_on_powers(f.num(), powers, x0, order);
    TruncSeries d = evaluate_poly_on_powers(f.den(), powers, x0, order);
    return ts_mul(n, ts_inverse(d));
}

} // namespace folint
