#include "wfa/stats.hpp"

#include <algorithm>

namespace wfa {

std::vector<Individual> RunStats::ranked_observed(std::size_t limit) const {
    std::vector<Individual> all;
    all.reserve(observed.size());
    for (const auto& [word, weight] : observed) {
        all.push_back({word, weight});
    }
    auto better = [](const Individual& a, const Individual& b) {
        if (a.fitness != b.fitness) {
            return a.fitness > b.fitness;
        }
        return shortlex_less(a.word, b.word);
    };
    if (limit < all.size()) {
        std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(limit), all.end(), better);
        all.resize(limit);
    } else {
        std::sort(all.begin(), all.end(), better);
    }
    return all;
}

} // namespace wfa
