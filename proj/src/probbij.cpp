#include "icegt/probbij.hpp"

#include <algorithm>
#include <array>

namespace icegt {

namespace {

template <class S>
S one();
template <>
BigRat one<BigRat>() {
    return BigRat(1);
}
template <>
RingElem one<RingElem>() {
    return RingElem(BigRat(1));
}

std::string cell(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

template <class S>
AxiomReport check_axioms_impl(const std::vector<S>& wx, const std::vector<S>& wy, const KernelT<S>& k) {
    AxiomReport r;
    if (static_cast<int>(wx.size()) != k.nx || static_cast<int>(wy.size()) != k.ny) {
        r.ok = false;
        r.violation = "shape mismatch";
        return r;
    }
    for (int x = 0; x < k.nx; ++x) {
        S s{};
        for (int y = 0; y < k.ny; ++y) s += k.p(x, y);
        if (!(s == one<S>())) {
            r.ok = false;
            r.violation = "row " + std::to_string(x) + " of P does not sum to 1";
            return r;
        }
    }
    for (int y = 0; y < k.ny; ++y) {
        S s{};
        for (int x = 0; x < k.nx; ++x) s += k.pbar(x, y);
        if (!(s == one<S>())) {
            r.ok = false;
            r.violation = "column " + std::to_string(y) + " of Pbar does not sum to 1";
            return r;
        }
    }
    for (int x = 0; x < k.nx; ++x)
        for (int y = 0; y < k.ny; ++y)
            if (!(wx[x] * k.p(x, y) == k.pbar(x, y) * wy[y])) {
                r.ok = false;
                r.violation = "weight exchange fails at " + cell(x, y);
                return r;
            }
    return r;
}

}  // namespace

AxiomReport check_axioms(const std::vector<BigRat>& wx, const std::vector<BigRat>& wy, const Kernel& k) {
    return check_axioms_impl(wx, wy, k);
}

AxiomReport check_axioms(const std::vector<RingElem>& wx, const std::vector<RingElem>& wy, const RingKernel& k) {
    return check_axioms_impl(wx, wy, k);
}

Kernel kernel_from_surjection(const std::vector<int>& f, const std::vector<BigRat>& wx,
                              const std::vector<BigRat>& wy) {
    if (f.size() != wx.size()) throw KernelError("surjection: map and weights differ in size");
    const int nx = static_cast<int>(wx.size()), ny = static_cast<int>(wy.size());
    std::vector<BigRat> sums(ny);
    for (int x = 0; x < nx; ++x) {
        if (f[x] < 0 || f[x] >= ny) throw KernelError("surjection: image out of range at x=" + std::to_string(x));
        sums[f[x]] += wx[x];
    }
    for (int y = 0; y < ny; ++y) {
        if (sums[y] != wy[y])
            throw KernelError("surjection: fibre sum " + sums[y].get_str() + " differs from weight " +
                              wy[y].get_str() + " at y=" + std::to_string(y));
        if (sgn(wy[y]) == 0) throw KernelError("surjection: zero weight at y=" + std::to_string(y));
    }
    Kernel k(nx, ny);
    for (int x = 0; x < nx; ++x) {
        k.p(x, f[x]) = 1;
        k.pbar(x, f[x]) = wx[x] / wy[f[x]];
    }
    return k;
}

Kernel compose(const Kernel& k1, const Kernel& k2) {
    if (k1.ny != k2.nx) throw KernelError("compose: middle sets differ in size");
    Kernel r(k1.nx, k2.ny);
    for (int x = 0; x < k1.nx; ++x)
        for (int y = 0; y < k1.ny; ++y) {
            const BigRat& a = k1.p(x, y);
            const BigRat& abar = k1.pbar(x, y);
            if (sgn(a) == 0 && sgn(abar) == 0) continue;
            for (int z = 0; z < k2.ny; ++z) {
                if (sgn(a) != 0) r.p(x, z) += a * k2.p(y, z);
                if (sgn(abar) != 0) r.pbar(x, z) += k2.pbar(y, z) * abar;
            }
        }
    return r;
}

Kernel identity_kernel(int n) {
    Kernel k(n, n);
    for (int i = 0; i < n; ++i) k.p(i, i) = k.pbar(i, i) = 1;
    return k;
}

const char* shape_name(LocalShape s) {
    switch (s) {
        case LocalShape::Degree6: return "degree6";
        case LocalShape::BendNE: return "bend-ne";
        case LocalShape::BendSW: return "bend-sw";
    }
    return "?";
}

namespace {

bool bit(int mask, Dir d) { return mask >> static_cast<int>(d) & 1; }

// Letter of a crossing of two lines from the path usage of its four half-edges.
std::optional<Letter> crossing(bool a_in, bool a_out, bool b_in, bool b_out) {
    if (a_in + b_in != a_out + b_out) return std::nullopt;
    if (a_in == a_out && b_in == b_out) return a_in == b_in ? Letter::a : Letter::b;
    return Letter::c;
}

std::optional<RingElem> bend_weight(Bend bend, int b, int internal) {
    bool h = internal & 1, v = internal >> 1 & 1, dg = internal >> 2 & 1;
    struct Vx {
        Family f;
        bool a_in, a_out, b_in, b_out;
    };
    std::array<Vx, 3> vs;
    if (bend == Bend::SW) {
        vs = {{{Family::HD, bit(b, Dir::W), h, bit(b, Dir::NW), dg},
               {Family::HV, h, bit(b, Dir::E), bit(b, Dir::N), v},
               {Family::VD, v, bit(b, Dir::S), dg, bit(b, Dir::SE)}}};
    } else {
        vs = {{{Family::VD, bit(b, Dir::N), v, bit(b, Dir::NW), dg},
               {Family::HV, bit(b, Dir::W), h, v, bit(b, Dir::S)},
               {Family::HD, h, bit(b, Dir::E), dg, bit(b, Dir::SE)}}};
    }
    WeightMonomial w;
    for (const auto& x : vs) {
        auto l = crossing(x.a_in, x.a_out, x.b_in, x.b_out);
        if (!l) return std::nullopt;
        w *= vertex_weight(x.f, *l);
    }
    return RingElem::from_monomial(w);
}

}  // namespace

bool balanced(int b) {
    int in = bit(b, Dir::W) + bit(b, Dir::NW) + bit(b, Dir::N);
    int out = bit(b, Dir::E) + bit(b, Dir::SE) + bit(b, Dir::S);
    return in == out;
}

RingElem resolve_degree6(int boundary, Bend bend) {
    RingElem total;
    for (int internal = 0; internal < 8; ++internal)
        if (auto w = bend_weight(bend, boundary, internal)) total += *w;
    return total;
}

bool verify_ybe(YbeReport* report) {
    YbeReport r;
    const RingElem unit(BigRat(1));
    for (int b = 0; b < 64; ++b) {
        ++r.boundaries;
        RingElem ne = resolve_degree6(b, Bend::NE);
        RingElem sw = resolve_degree6(b, Bend::SW);
        if (ne == sw) ++r.equal;
        if (balanced(b) && ne == unit && sw == unit) ++r.balanced_unit;
        if (!balanced(b) && ne.is_zero() && sw.is_zero()) ++r.unbalanced_zero;
    }
    r.ok = r.equal == 64 && r.balanced_unit == 20 && r.unbalanced_zero == 44;
    if (report) *report = r;
    return r.ok;
}

std::vector<LocalConfig> local_configs(LocalShape s, std::optional<int> boundary) {
    std::vector<LocalConfig> out;
    for (int b = 0; b < 64; ++b) {
        if (boundary && *boundary != b) continue;
        if (s == LocalShape::Degree6) {
            if (balanced(b)) out.push_back({b, 0});
            continue;
        }
        Bend bend = s == LocalShape::BendNE ? Bend::NE : Bend::SW;
        for (int internal = 0; internal < 8; ++internal)
            if (bend_weight(bend, b, internal)) out.push_back({b, internal});
    }
    return out;
}

RingElem local_weight(LocalShape s, const LocalConfig& c) {
    if (s == LocalShape::Degree6) return resolve_degree6(c.boundary, Bend::SW);
    auto w = bend_weight(s == LocalShape::BendNE ? Bend::NE : Bend::SW, c.boundary, c.internal);
    if (!w) throw std::invalid_argument("local_weight: configuration violates the ice rule");
    return *w;
}

int LocalKernel::reachable(int x) const {
    int c = 0;
    for (int y = 0; y < k.ny; ++y) c += !k.p(x, y).is_zero();
    return c;
}

namespace {

RingElem divide_by_rational_sum(const RingElem& num, const RingElem& den) {
    if (!den.is_rational()) throw ArithmeticError("local kernel: normalising sum is not rational");
    BigRat d = den.rational_value();
    if (sgn(d) == 0) throw ArithmeticError("local kernel: normalising sum is zero");
    return num * (BigRat(1) / d);
}

}  // namespace

LocalKernel local_kernel(LocalShape from, LocalShape to, std::optional<int> boundary) {
    LocalKernel lk;
    lk.xs = local_configs(from, boundary);
    lk.ys = local_configs(to, boundary);
    for (const auto& x : lk.xs) lk.wx.push_back(local_weight(from, x));
    for (const auto& y : lk.ys) lk.wy.push_back(local_weight(to, y));
    const int nx = static_cast<int>(lk.xs.size()), ny = static_cast<int>(lk.ys.size());
    lk.k = RingKernel(nx, ny);
    for (int x = 0; x < nx; ++x) {
        RingElem sum;
        int reach = 0;
        for (int y = 0; y < ny; ++y)
            if (lk.ys[y].boundary == lk.xs[x].boundary) {
                sum += lk.wy[y];
                ++reach;
            }
        if (reach == 0) throw KernelError("local kernel: configuration with no reachable target");
        for (int y = 0; y < ny; ++y)
            if (lk.ys[y].boundary == lk.xs[x].boundary) lk.k.p(x, y) = divide_by_rational_sum(lk.wy[y], sum);
    }
    for (int y = 0; y < ny; ++y) {
        RingElem sum;
        for (int x = 0; x < nx; ++x)
            if (lk.xs[x].boundary == lk.ys[y].boundary) sum += lk.wx[x];
        for (int x = 0; x < nx; ++x)
            if (lk.xs[x].boundary == lk.ys[y].boundary) lk.k.pbar(x, y) = divide_by_rational_sum(lk.wx[x], sum);
    }
    return lk;
}

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
    if (sgn(bound) <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    while (true) {
        BigInt u = 0;
        for (size_t w = 0; w < words; ++w) {
            uint64_t x = rng();
            if (w == 0 && bits % 64 != 0) x &= (uint64_t{1} << (bits % 64)) - 1;
            u <<= 64;
            u += BigInt(static_cast<unsigned long>(x));
        }
        if (u < bound) return u;
    }
}

FiberSampler::FiberSampler(const GTPattern& target, const Caps& caps) {
    fiber_ = fiber(target, caps);
    std::sort(fiber_.begin(), fiber_.end());
    if (fiber_.empty()) throw std::invalid_argument("sampler: empty fibre");
    total_ = 0;
    for (const auto& t : fiber_) {
        weights_.push_back(pow2(ic_triangle(t)));
        total_ += weights_.back();
        cumulative_.push_back(total_);
    }
}

BigRat FiberSampler::probability(size_t i) const {
    BigRat r(weights_[i], total_);
    r.canonicalize();
    return r;
}

size_t FiberSampler::draw_index(std::mt19937_64& rng) const {
    BigInt u = uniform_below(total_, rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<size_t>(it - cumulative_.begin());
}

PathFamily FiberSampler::sample(std::mt19937_64& rng) const { return psi1_inverse(fiber_[draw_index(rng)]); }

PathFamily sample_fiber(const GTPattern& target, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return FiberSampler(target).sample(rng);
}

}  // namespace icegt
