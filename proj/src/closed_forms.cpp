#include "pzf/closed_forms.hpp"

#include <stdexcept>

namespace pzf {

Rat ept_cycle(int n) {
    if (n <= 2) throw std::invalid_argument("ept_cycle needs n > 2");
    return frac(n, 2) + (n % 2 == 0 ? frac(1, 3) : frac(1, 2));
}

Rat ept_path(int n) {
    if (n <= 2) throw std::invalid_argument("ept_path needs n > 2");
    return frac(n, 2) + (n % 2 == 0 ? frac(2, 3) : frac(1, 2));
}

Rat lround_cycle(int n, int rounds) {
    if (n <= 2) throw std::invalid_argument("lround_cycle needs n > 2");
    if (rounds < 0) throw std::invalid_argument("negative round count");
    if (rounds < n / 2) return Rat(0);
    if (n % 2 == 0) return Rat(1) - pow_rat(frac(1, 4), rounds - n / 2 + 1);
    return Rat(1) - frac(3, 4) * pow_rat(frac(1, 4), rounds - (n - 1) / 2);
}

Rat lround_path(int n, int rounds) {
    if (n <= 2) throw std::invalid_argument("lround_path needs n > 2");
    if (rounds < 0) throw std::invalid_argument("negative round count");
    if (rounds < n / 2) return Rat(0);
    if (n % 2 == 0) return Rat(1) - frac(1, 2) * pow_rat(frac(1, 4), rounds - n / 2);
    return Rat(1) - frac(3, 4) * pow_rat(frac(1, 4), rounds - (n - 1) / 2);
}

namespace {

template <class F>
int invert_lround(int n, const Rat& alpha, F lround) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("confidence level must be in (0,1)");
    for (int l = n / 2;; ++l)
        if (lround(n, l) >= alpha) return l;
}

}  // namespace

int confidence_cycle(int n, const Rat& alpha) {
    return invert_lround(n, alpha, lround_cycle);
}

int confidence_path(int n, const Rat& alpha) {
    return invert_lround(n, alpha, lround_path);
}

int psd_throttle_path_cycle(int n, Family kind) {
    if (kind == Family::path && n < 2)
        throw std::invalid_argument("psd throttling of P_n needs n >= 2");
    if (kind == Family::cycle && n < 4)
        throw std::invalid_argument("psd throttling of C_n needs n >= 4");
    if (kind != Family::path && kind != Family::cycle)
        throw std::invalid_argument("psd throttling closed form covers paths and cycles");
    // least m with m >= sqrt(2n) - 1/2, i.e. (2m+1)^2 >= 8n
    int m = 0;
    while (static_cast<long long>(2 * m + 1) * (2 * m + 1) < 8LL * n) ++m;
    return m;
}

}  // namespace pzf
