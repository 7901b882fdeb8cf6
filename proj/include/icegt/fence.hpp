#pragma once

#include <functional>
#include <string>
#include <vector>

#include "icegt/exactalg.hpp"
#include "icegt/gtpat.hpp"

namespace icegt {

// Elements e_0..e_{s-1} left to right; steps[t] is 'u' when e_{t+1} covers
// e_t and 'd' when e_t covers e_{t+1}.
struct Fence {
    std::string steps;

    int size() const { return static_cast<int>(steps.size()) + 1; }
    bool operator==(const Fence&) const = default;
};

Fence parse_fence(const std::string& steps);

using OrderIdeal = std::vector<bool>;

bool is_order_ideal(const Fence& f, const OrderIdeal& i);
void enumerate_ideals(const Fence& f, const std::function<void(const OrderIdeal&)>& sink);
std::vector<OrderIdeal> order_ideals(const Fence& f);

// Down-steps with both ends outside the ideal plus up-steps with both ends inside.
int ic_ideal(const Fence& f, const OrderIdeal& i);

BigRat fence_gf(const Fence& f, const BigRat& q);

std::vector<Fence> all_fences(int size);

// A zigzag read top to bottom: a step to the lower-right cell is 'u', to the
// lower-left cell 'd'.
Fence fence_of(const BlockPart& zigzag);

// Unbarred cells of the zigzag form the ideal.
OrderIdeal ideal_of(const BarredTriangle& t, const BlockPart& zigzag);

// Number of distinct ideal counts #J(F) over fences of the given size.
int distinct_ideal_counts(int size);

}  // namespace icegt
