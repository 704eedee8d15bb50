#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hocolim/bar_cobar.hpp"
#include "hocolim/random.hpp"
#include "hocolim/tensoring.hpp"

namespace hocolim {

namespace random {

/// A functorial diagram with random values in degrees [0, 2] over one of
/// span, cospan (legs homotopic to each other), [2] (composite given by
/// composition) or Z/2 acting by -1.
inline Diagram<Integers> diagram(Rng& rng) {
    const Integers z;
    const auto base = complex(rng, z, 0, 2, 2);
    auto build = [](const FiniteCategory& c, std::vector<ChainComplex<Integers>> objs, const std::vector<std::pair<std::string, ChainMap<Integers>>>& maps) {
        Diagram<Integers> f{c, std::move(objs), {}};
        for (std::size_t m = 0; m < c.morphism_count(); ++m) f.morphisms.push_back(ChainMap<Integers>::identity(f.at(c.source(m))));
        for (const auto& [name, g] : maps) f.morphisms[c.morphism_index(name)] = g;
        return f;
    };
    switch (uniform(rng, 0, 3)) {
    case 0: {
        const auto u = scaled_inclusion(rng, base, uniform(rng, -2, 2), 0, 2, 2);
        const auto v = quasi_iso_from(rng, base, 0, 2, 2);
        return build(categories::span(), {u.target(), v.target(), base}, {{"u", u}, {"v", v}});
    }
    case 1: {
        const auto u = scaled_inclusion(rng, base, uniform(rng, -2, 2), 0, 2, 2);
        const auto v = perturb_by_homotopy(rng, u);
        return build(categories::cospan(), {base, base, u.target()}, {{"u", u}, {"v", v}});
    }
    case 2: {
        const auto g = quasi_iso_from(rng, base, 0, 2, 2);
        const auto h = scaled_inclusion(rng, g.target(), uniform(rng, -2, 2), 0, 2, 2);
        return build(categories::linear_order(2), {base, g.target(), h.target()}, {{"0<1", g}, {"1<2", h}, {"0<2", compose(h, g)}});
    }
    default: {
        std::map<int, Matrix<Integers>> neg;
        for (const auto& [n, r] : base.ranks()) neg[n] = Matrix<Integers>::identity(z, r).scaled(z.from_integer(-1));
        return build(categories::cyclic_group(2), {base}, {{"g1", ChainMap<Integers>(base, base, neg)}});
    }
    }
}

/// A simplicial chain complex through `level`: a bar construction of a
/// random diagram, or a linearization of a standard simplicial set.
inline SimplicialChainComplex<Integers> simplicial(Rng& rng, int level) {
    if (coin(rng)) return bar_simplicial(diagram(rng), level);
    const std::vector<FiniteSimplicialSet> shapes{simplex(1), boundary(2), horn(2, 1), circle(), simplex(2)};
    const auto& k = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(shapes.size()) - 1))];
    return linearize(k, complex(rng, Integers{}, 0, 1, 2), level);
}

} // namespace random

/// Outcome of one randomized property over a number of trials.
struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::string first_failure;

    bool ok() const { return passed == trials; }
};

namespace detail {

inline PropertyResult check(const std::string& name, std::size_t trials, const std::function<std::string(std::size_t)>& trial) {
    PropertyResult r{name, trials, 0, {}};
    for (std::size_t t = 0; t < trials; ++t) {
        std::string failure;
        try {
            failure = trial(t);
        } catch (const Error& e) {
            failure = e.what();
        }
        if (failure.empty()) {
            ++r.passed;
        } else if (r.first_failure.empty()) {
            r.first_failure = "trial " + std::to_string(t) + ": " + failure;
        }
    }
    return r;
}

} // namespace detail

/// Kuenneth: H_n(N(K) (x) C) against the free-homology formula.
inline PropertyResult check_kunneth(random::Rng& rng, std::size_t trials) {
    const std::vector<std::pair<std::string, FiniteSimplicialSet>> shapes{
        {"point", simplex(0)}, {"simplex 1", simplex(1)}, {"boundary 2", boundary(2)}, {"horn 2 1", horn(2, 1)}, {"circle", circle()}};
    return detail::check("kunneth", trials * shapes.size(), [&](std::size_t t) -> std::string {
        const auto& [label, k] = shapes[t % shapes.size()];
        const auto c = random::complex(rng, Integers{}, -2, 3, 3);
        const auto total = tensor(k, c);
        for (int n = -2; n <= 3 + k.d_max(); ++n)
            if (!(homology(total, n) == kunneth_rhs(k, c, n))) return label + ", degree " + std::to_string(n);
        return {};
    });
}

/// N -> M -> M-bar is unimodular levelwise and Tot(N) -> Tot(M) is a
/// quasi-isomorphism on [0, 3].
inline PropertyResult check_normalized_mbar(random::Rng& rng, std::size_t trials) {
    return detail::check("normalized-vs-mbar", trials, [&](std::size_t) -> std::string {
        const auto x = random::simplicial(rng, 4);
        if (!normalized_to_mbar_is_iso(x)) return "composite N -> M -> M-bar is not invertible";
        const DegreeWindow w{0, 3};
        if (!is_quasi_iso_on(normalized_inclusion_total(x, w), w.lo, w.hi)) return "Tot(N) -> Tot(M) is not a quasi-isomorphism";
        return {};
    });
}

/// Tot^(+) of a rowwise quasi-isomorphism is a quasi-isomorphism.
inline PropertyResult check_tot_preserves_quasi_isos(random::Rng& rng, std::size_t trials) {
    return detail::check("tot-sum-preserves-quasi-isos", trials, [&](std::size_t) -> std::string {
        const auto f = random::rowwise_quasi_iso(rng, Integers{}, 2);
        const DegreeWindow w{0, 6};
        if (!is_quasi_iso_on(tot_sum(f, w), w.lo, w.hi)) return "Tot(f) is not a quasi-isomorphism";
        return {};
    });
}

/// Fat and thin realizations have the same homology on [0, 3].
inline PropertyResult check_fat_vs_thin(random::Rng& rng, std::size_t trials) {
    return detail::check("fat-vs-thin", trials, [&](std::size_t) -> std::string {
        const auto x = random::simplicial(rng, 4);
        const DegreeWindow w{0, 3};
        if (!(window_homology(fat_realization(x, w), w) == window_homology(realization(x, w), w))) return "homology differs";
        return {};
    });
}

/// One more bar or cobar level leaves hocolim and holim homology unchanged.
inline PropertyResult check_window_stability(random::Rng& rng, std::size_t trials) {
    return detail::check("window-stability", trials, [&](std::size_t) -> std::string {
        const auto f = random::diagram(rng);
        const DegreeWindow w{0, 3};
        if (!(hocolim(f, w).homology == hocolim(f, w, 1).homology)) return "hocolim changed on " + f.index.object_name(0);
        if (is_loop_free(f.index)) {
            const DegreeWindow v{-2, 3};
            if (!(holim(f, v).homology == holim(f, v, 1).homology)) return "holim changed";
        }
        return {};
    });
}

/// The whole suite from one seed. Each property draws from its own
/// generator seeded from `seed`, so results do not depend on order.
inline std::vector<PropertyResult> verify_properties(std::uint64_t seed, std::size_t trials) {
    std::vector<PropertyResult> out;
    const std::vector<PropertyResult (*)(random::Rng&, std::size_t)> checks{
        check_kunneth, check_normalized_mbar, check_tot_preserves_quasi_isos, check_fat_vs_thin, check_window_stability};
    for (std::size_t i = 0; i < checks.size(); ++i) {
        random::Rng rng(seed * 1000003u + i);
        out.push_back(checks[i](rng, trials));
    }
    return out;
}

} // namespace hocolim
