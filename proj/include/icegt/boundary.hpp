#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace icegt {

// Strictly increasing positive sequence k = (k_1, ..., k_n).
class BoundarySpec {
public:
    BoundarySpec() = default;
    explicit BoundarySpec(std::vector<int> k);

    static BoundarySpec iota(int n);
    static BoundarySpec parse(const std::string& csv);

    int n() const { return static_cast<int>(k_.size()); }
    int operator[](int i) const { return k_[i]; }
    int last() const { return k_.back(); }
    const std::vector<int>& values() const { return k_; }
    std::string to_string() const;

    bool operator==(const BoundarySpec&) const = default;
    auto operator<=>(const BoundarySpec&) const = default;

private:
    std::vector<int> k_;
};

// Every strictly increasing k of length n with entries in [1, max_entry].
std::vector<BoundarySpec> all_boundaries(int n, int max_entry);

}  // namespace icegt
