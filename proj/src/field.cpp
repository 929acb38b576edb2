#include "ffvar/field.hpp"

namespace ffvar {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int m = 0;
        while (n % d == 0) {
            n /= d;
            ++m;
        }
        out.emplace_back(d, m);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace ffvar
