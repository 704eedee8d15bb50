#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hocolim/dsl/elaborate.hpp"
#include "hocolim/dsl/parser.hpp"
#include "hocolim/dsl/report.hpp"

namespace hocolim::dsl {

/// Process exit status for an error kind: 1 for syntax, 2 for validation
/// (names, shapes, functoriality, rings), 3 for computation preconditions.
inline int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Syntax: return 1;
    case ErrorKind::Resolution:
    case ErrorKind::Shape:
    case ErrorKind::Functoriality:
    case ErrorKind::RingMismatch:
    case ErrorKind::InvalidDiagram: return 2;
    default: return 3;
    }
}

/// Exit status when verify-props finds a failing property.
inline constexpr int kPropertyFailure = 4;

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr std::size_t kDefaultTrials = 10;

inline Report verify_props_report(std::uint64_t seed, std::size_t trials) {
    Report r;
    r.command = "verify-props --seed " + std::to_string(seed) + " --trials " + std::to_string(trials);
    r.seed = seed;
    r.properties = verify_properties(seed, trials);
    return r;
}

template <Ring R>
Report run_command(const Environment<R>& env, const CommandDecl& c) {
    Report r;
    r.command = c.echo();
    r.ring = env.ring.name();
    const auto& a = c.arguments;
    auto window = [&] {
        const DegreeWindow w{std::stoi(a[1]), std::stoi(a[2])};
        r.window = std::pair{w.lo, w.hi};
        return w;
    };
    auto record = [&](const std::map<int, HomologyGroup>& h) {
        for (const auto& [n, g] : h) r.homology.emplace_back(n, g);
    };
    if (c.verb == "homology") {
        const auto w = window();
        record(homology_range(env.complexes.at(a[0]), w.lo, w.hi));
    } else if (c.verb == "hocolim" || c.verb == "holim") {
        const auto w = window();
        const auto& f = env.diagrams.at(a[0]);
        const auto result = c.verb == "hocolim" ? hocolim(f, w) : holim(f, w);
        record(result.homology);
        r.levels_used = result.levels_used;
    } else if (c.verb == "realize") {
        const auto w = window();
        record(window_homology(realization(env.simplicial.at(a[0]), w), w));
    } else if (c.verb == "bar") {
        const auto x = bar_simplicial(env.diagrams.at(a[0]), std::stoi(a[1]));
        for (const auto& level : x.levels()) r.bar_levels.push_back(level.ranks());
    } else if (c.verb == "snf") {
        const auto& m = env.matrices.at(a[0]);
        const auto snf = smith_normal_form(m);
        ensure(snf.U * m * snf.V == snf.D, "Smith form does not satisfy U A V = D");
        std::vector<std::string> d;
        for (std::size_t i = 0; i < snf.rank; ++i) d.push_back(env.ring.to_string(snf.D(i, i)));
        r.elementary_divisors = d;
        r.rank = snf.rank;
        r.shape = std::pair{m.rows(), m.cols()};
    } else if (c.verb == "verify-props") {
        std::uint64_t seed = kDefaultSeed;
        std::size_t trials = kDefaultTrials;
        for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
            if (a[i] == "seed") seed = std::stoull(a[i + 1]);
            if (a[i] == "trials") trials = std::stoull(a[i + 1]);
        }
        r = verify_props_report(seed, trials);
    } else {
        fail_at(ErrorKind::Syntax, c.at, "unknown command " + c.verb);
    }
    return r;
}

/// Calls `body` with the elaborated environment over the manifest's ring.
template <class F>
auto with_environment(const Manifest& m, F&& body) {
    switch (m.ring.kind) {
    case RingDecl::Kind::Rationals: return body(elaborate(m, Rationals{}));
    case RingDecl::Kind::PrimeField: return body(elaborate(m, PrimeField(m.ring.prime)));
    case RingDecl::Kind::Integers: break;
    }
    return body(elaborate(m, Integers{}));
}

/// Runs the given commands (by default the manifest's own) in order.
inline std::vector<Report> run(const Manifest& m, const std::vector<CommandDecl>& commands) {
    return with_environment(m, [&](const auto& env) {
        std::vector<Report> out;
        for (const auto& c : commands) out.push_back(run_command(env, c));
        return out;
    });
}

inline std::vector<Report> run(const Manifest& m) { return run(m, m.commands); }

} // namespace hocolim::dsl
