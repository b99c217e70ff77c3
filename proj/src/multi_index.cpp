#include "nevan/multi_index.hpp"

#include <algorithm>
#include <numeric>

namespace nevan {

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i) {
    MultiIndex e(nvars);
    e.e_.at(i) = 1;
    return e;
}

std::uint64_t MultiIndex::total() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool MultiIndex::is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

bool MultiIndex::dominates(const MultiIndex& o) const {
    if (o.size() != size()) throw InputError("multi-index arity mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] < o.e_[i]) return false;
    return true;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (!dominates(o)) throw InputError("multi-index difference requires alpha >= beta");
    MultiIndex r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (o.size() != size()) throw InputError("multi-index arity mismatch");
    MultiIndex r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.exponents() < b.exponents();
}

Integer binomial(const MultiIndex& alpha, const MultiIndex& beta) {
    if (!alpha.dominates(beta)) return 0;
    Integer r = 1, b;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        mpz_bin_uiui(b.get_mpz_t(), alpha[i], beta[i]);
        r *= b;
    }
    return r;
}

Integer factorial(const MultiIndex& gamma) {
    Integer r = 1, f;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        mpz_fac_ui(f.get_mpz_t(), gamma[i]);
        r *= f;
    }
    return r;
}

namespace {

void compositions(std::size_t nvars, std::uint64_t degree, std::size_t pos, MultiIndex& cur,
                  std::vector<MultiIndex>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = static_cast<std::uint32_t>(degree);
        out.push_back(cur);
        return;
    }
    for (std::uint64_t k = 0; k <= degree; ++k) {
        cur[pos] = static_cast<std::uint32_t>(k);
        compositions(nvars, degree - k, pos + 1, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t nvars, std::uint64_t degree) {
    std::vector<MultiIndex> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    MultiIndex cur(nvars);
    compositions(nvars, degree, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t nvars, std::uint64_t max_degree) {
    std::vector<MultiIndex> out;
    for (std::uint64_t d = 0; d <= max_degree; ++d) {
        auto level = indices_of_degree(nvars, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace nevan
