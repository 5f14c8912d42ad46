#include "sparsematch/pattern.hpp"

#include <algorithm>
#include <string>

namespace sparsematch {

Pattern::Pattern(std::string_view bytes) : bytes_(bytes) {
    if (bytes_.empty()) throw EmptyPatternError();
    for (std::size_t pos = 1; pos <= bytes_.size(); ++pos) {
        auto& list = occ_[at(pos)];
        if (list.empty()) {
            ++delta_;
            present_.push_back(at(pos));
        }
        list.push_back(pos);
    }
    std::sort(present_.begin(), present_.end());
}

Pattern build_pattern(std::string_view bytes) { return Pattern(bytes); }

std::vector<std::size_t> z_array(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    // [left, right) is the rightmost window known to match a prefix of s.
    std::size_t left = 0, right = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (k < right) z[k] = std::min(right - k, z[k - left]);
        while (k + z[k] < n && s[z[k]] == s[k + z[k]]) ++z[k];
        if (k + z[k] > right) {
            left = k;
            right = k + z[k];
        }
    }
    return z;
}

NProfile compute_n_profile(const Pattern& p) {
    const std::size_t n = p.size();
    std::string reversed(p.bytes().rbegin(), p.bytes().rend());
    const auto z = z_array(reversed);
    // P[1..i] ends at reversed offset n - i.
    std::vector<std::size_t> values(n);
    for (std::size_t i = 1; i <= n; ++i) values[i - 1] = z[n - i];
    return NProfile(std::move(values));
}

}  // namespace sparsematch
