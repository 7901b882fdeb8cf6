#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "icegt/caps.hpp"
#include "icegt/exactalg.hpp"
#include "icegt/gtpat.hpp"
#include "icegt/lattice.hpp"

namespace icegt {

// Pair of stochastic matrices between weighted sets X and Y, stored row-major.
template <class S>
struct KernelT {
    int nx = 0;
    int ny = 0;
    std::vector<S> P;
    std::vector<S> Pbar;

    KernelT() = default;
    KernelT(int x, int y) : nx(x), ny(y), P(static_cast<size_t>(x) * y), Pbar(static_cast<size_t>(x) * y) {}
    S& p(int x, int y) { return P[static_cast<size_t>(x) * ny + y]; }
    S& pbar(int x, int y) { return Pbar[static_cast<size_t>(x) * ny + y]; }
    const S& p(int x, int y) const { return P[static_cast<size_t>(x) * ny + y]; }
    const S& pbar(int x, int y) const { return Pbar[static_cast<size_t>(x) * ny + y]; }
};

using Kernel = KernelT<BigRat>;
using RingKernel = KernelT<RingElem>;

struct AxiomReport {
    bool ok = true;
    std::string violation;
};

AxiomReport check_axioms(const std::vector<BigRat>& wx, const std::vector<BigRat>& wy, const Kernel& k);
AxiomReport check_axioms(const std::vector<RingElem>& wx, const std::vector<RingElem>& wy, const RingKernel& k);

class KernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// f[x] is the image of x; requires the fibre sums of wx to match wy.
Kernel kernel_from_surjection(const std::vector<int>& f, const std::vector<BigRat>& wx,
                              const std::vector<BigRat>& wy);

Kernel compose(const Kernel& k1, const Kernel& k2);

Kernel identity_kernel(int n);

// Local pictures around a crossing of the horizontal, vertical and diagonal
// lines. Boundary bits are indexed by Dir (W, NW, N, E, SE, S); a set bit
// means the half-edge carries a path.
enum class LocalShape { Degree6, BendNE, BendSW };
enum class Bend { NE, SW };

const char* shape_name(LocalShape s);

bool balanced(int boundary);

RingElem resolve_degree6(int boundary, Bend bend);

struct YbeReport {
    int boundaries = 0;
    int equal = 0;
    int balanced_unit = 0;
    int unbalanced_zero = 0;
    bool ok = false;
};

bool verify_ybe(YbeReport* report = nullptr);

struct LocalConfig {
    int boundary = 0;
    int internal = 0;  // bit 0: horizontal, 1: vertical, 2: diagonal internal edge
    bool operator==(const LocalConfig&) const = default;
};

std::vector<LocalConfig> local_configs(LocalShape s, std::optional<int> boundary = {});
RingElem local_weight(LocalShape s, const LocalConfig& c);

struct LocalKernel {
    std::vector<LocalConfig> xs, ys;
    std::vector<RingElem> wx, wy;
    RingKernel k;

    int reachable(int x) const;  // number of y with P(x,y) != 0
};

// Configurations are related when their external half-edges agree.
LocalKernel local_kernel(LocalShape from, LocalShape to, std::optional<int> boundary = {});

// Exact draws from psi^{-1}(T') with probability proportional to 2^ic.
class FiberSampler {
public:
    static constexpr const char* kGenerator = "mt19937_64";

    explicit FiberSampler(const GTPattern& target, const Caps& caps = Caps::from_env());

    const std::vector<BarredTriangle>& triangles() const { return fiber_; }
    const std::vector<BigInt>& weights() const { return weights_; }
    const BigInt& total() const { return total_; }
    BigRat probability(size_t i) const;

    size_t draw_index(std::mt19937_64& rng) const;
    PathFamily sample(std::mt19937_64& rng) const;

private:
    std::vector<BarredTriangle> fiber_;
    std::vector<BigInt> weights_;
    std::vector<BigInt> cumulative_;
    BigInt total_;
};

PathFamily sample_fiber(const GTPattern& target, uint64_t seed);

// Uniform integer in [0, bound) from 64-bit words, by rejection.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

}  // namespace icegt
