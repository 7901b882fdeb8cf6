#include "icegt/boundary.hpp"

#include <sstream>

namespace icegt {

BoundarySpec::BoundarySpec(std::vector<int> k) : k_(std::move(k)) {
    if (k_.empty()) throw std::invalid_argument("boundary: k must be non-empty");
    if (k_[0] < 1) throw std::invalid_argument("boundary: entries must be positive");
    for (size_t i = 1; i < k_.size(); ++i)
        if (k_[i] <= k_[i - 1])
            throw std::invalid_argument("boundary: k must be strictly increasing");
}

BoundarySpec BoundarySpec::iota(int n) {
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[i] = i + 1;
    return BoundarySpec(std::move(k));
}

BoundarySpec BoundarySpec::parse(const std::string& csv) {
    std::vector<int> k;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("boundary: cannot parse '" + item + "'");
        }
        if (pos != item.size() && item.find_first_not_of(' ', pos) != std::string::npos)
            throw std::invalid_argument("boundary: cannot parse '" + item + "'");
        k.push_back(v);
    }
    return BoundarySpec(std::move(k));
}

std::string BoundarySpec::to_string() const {
    std::string s;
    for (size_t i = 0; i < k_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(k_[i]);
    }
    return s;
}

std::vector<BoundarySpec> all_boundaries(int n, int max_entry) {
    std::vector<BoundarySpec> out;
    if (n < 1 || max_entry < n) return out;
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[i] = i + 1;
    while (true) {
        out.emplace_back(k);
        int i = n - 1;
        while (i >= 0 && k[i] == max_entry - (n - 1 - i)) --i;
        if (i < 0) break;
        ++k[i];
        for (int j = i + 1; j < n; ++j) k[j] = k[j - 1] + 1;
    }
    return out;
}

}  // namespace icegt
