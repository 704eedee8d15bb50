#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hocolim/smith.hpp"

namespace hocolim {

/// Isomorphism class of a finitely generated module over a PID:
/// R^free_rank plus cyclic torsion in invariant-factor form d1 | d2 | ...
/// (every d_i > 1). Over a field the torsion list is always empty.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

    /// "0", "Z^2", "Z/2", "Z^1 ⊕ Z/2 ⊕ Z/4", ...
    std::string to_string(const std::string& ring_name = "Z") const {
        if (is_zero()) return "0";
        std::string out;
        auto append = [&out](const std::string& part) { out += (out.empty() ? "" : " ⊕ ") + part; };
        if (free_rank > 0) append(ring_name + "^" + std::to_string(free_rank));
        for (const auto& d : torsion) append("Z/" + d.str());
        return out;
    }
};

/// Rewrites an arbitrary list of cyclic orders (entries of 0 or 1 ignored)
/// into invariant-factor form using the Smith form of diag(orders).
inline std::vector<Integer> invariant_factors(const std::vector<Integer>& orders) {
    std::vector<Integer> nontrivial;
    for (const auto& d : orders)
        if (abs(d) > 1) nontrivial.push_back(abs(d));
    if (nontrivial.empty()) return {};
    Matrix<Integers> diag(Integers{}, nontrivial.size(), nontrivial.size());
    for (std::size_t i = 0; i < nontrivial.size(); ++i) diag(i, i) = nontrivial[i];
    std::vector<Integer> out;
    for (const auto& d : elementary_divisors(diag))
        if (d > 1) out.push_back(d);
    return out;
}

inline HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return {a.free_rank + b.free_rank, invariant_factors(orders)};
}

/// G (x) H using Z (x) G = G and Z/d (x) Z/e = Z/gcd(d, e).
inline HomologyGroup tensor_groups(const HomologyGroup& g, const HomologyGroup& h) {
    std::vector<Integer> orders;
    for (const auto& d : g.torsion)
        for (std::size_t k = 0; k < h.free_rank; ++k) orders.push_back(d);
    for (const auto& e : h.torsion)
        for (std::size_t k = 0; k < g.free_rank; ++k) orders.push_back(e);
    for (const auto& d : g.torsion)
        for (const auto& e : h.torsion) orders.push_back(gcd(d, e));
    return {g.free_rank * h.free_rank, invariant_factors(orders)};
}

} // namespace hocolim
