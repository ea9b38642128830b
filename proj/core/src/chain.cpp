#include "kswitch/chain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "kswitch/enumerate.hpp"
#include "kswitch/errors.hpp"

namespace kswitch {

std::string_view to_string(ChainKind kind) {
    switch (kind) {
        case ChainKind::Gamma4: return "gamma4";
        case ChainKind::Switch2: return "switch2";
        case ChainKind::Switch3: return "switch3";
    }
    return "gamma4";
}

ChainKind parse_chain(std::string_view name) {
    for (ChainKind k : {ChainKind::Gamma4, ChainKind::Switch2, ChainKind::Switch3})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::InvalidArgument, "unknown chain '" + std::string(name) + "'");
}

int draws_per_step(ChainKind kind) {
    switch (kind) {
        case ChainKind::Gamma4: return 4;
        case ChainKind::Switch2: return 2;
        case ChainKind::Switch3: return 3;
    }
    return 4;
}

std::optional<std::vector<Vertex>> propose_cycle(const Graph& g, std::span<const Vertex> mate,
                                                 std::span<const Vertex> draws) {
    if (draws.empty()) return std::nullopt;
    std::size_t l = draws.size();
    for (std::size_t i = 1; i < draws.size(); ++i) {
        if (draws[i] == draws[0]) {
            l = i;
            break;
        }
    }
    if (l < 2) return std::nullopt;
    std::vector<Vertex> cycle;
    cycle.reserve(2 * l);
    VertexMask seen = 0;
    for (std::size_t i = 0; i < l; ++i) {
        const Vertex u = draws[i];
        const Vertex v = mate[u];
        if (v < 0) return std::nullopt;
        if (((seen >> u) & 1U) || ((seen >> v) & 1U) || u == v) return std::nullopt;
        seen |= bit(u) | bit(v);
        cycle.push_back(u);
        cycle.push_back(v);
    }
    for (std::size_t i = 0; i < l; ++i)
        if (!g.adjacent(cycle[2 * i + 1], cycle[(2 * i + 2) % cycle.size()])) return std::nullopt;
    return cycle;
}

void switch_cycle(std::vector<Vertex>& mate, const std::vector<Vertex>& cycle) {
    const std::size_t len = cycle.size();
    for (std::size_t i = 1; i < len; i += 2) {
        const Vertex v = cycle[i];
        const Vertex u = cycle[(i + 1) % len];
        mate[v] = u;
        mate[u] = v;
    }
}

std::vector<Vertex> sampling_pool(const Graph& g) {
    if (g.is_bipartite()) return g.bipartition().left;
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    return all;
}

void chain_step(const Graph& g, ChainKind kind, std::vector<Vertex>& mate, Rng& rng) {
    const int j = draws_per_step(kind);
    Vertex draws[4];
    if (g.is_bipartite()) {
        const auto& left = g.bipartition().left;
        for (int i = 0; i < j; ++i) draws[i] = left[rng.uniform(left.size())];
    } else {
        for (int i = 0; i < j; ++i) draws[i] = static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(g.order())));
    }
    const auto cycle = propose_cycle(g, mate, std::span<const Vertex>(draws, j));
    if (cycle && rng.uniform(2) == 0) switch_cycle(mate, *cycle);
}

Matching gamma_step(const Graph& g, const Matching& m, Rng& rng) {
    std::vector<Vertex> mate = m.mates(g.order());
    chain_step(g, ChainKind::Gamma4, mate, rng);
    return matching_from_mates(mate);
}

Matching uniform_switch_step(const Graph& g, const Matching& m, int j, Rng& rng) {
    if (j != 2 && j != 3) throw Error(ErrorCode::InvalidArgument, "uniform switch chain needs j in {2,3}");
    std::vector<Vertex> mate = m.mates(g.order());
    chain_step(g, j == 2 ? ChainKind::Switch2 : ChainKind::Switch3, mate, rng);
    return matching_from_mates(mate);
}

namespace {

std::vector<Matching> chain_states(const Graph& g, std::size_t cap) {
    std::vector<Matching> states;
    try {
        states = enumerate_perfect_matchings(g, cap);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EnumerationBudgetExceeded)
            throw Error(ErrorCode::OmegaTooLarge, "more than " + std::to_string(cap) + " perfect matchings");
        throw;
    }
    if (states.empty()) throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    return states;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::size_t index_of(const std::vector<Matching>& states, const Matching& m) {
    auto it = std::lower_bound(states.begin(), states.end(), m);
    if (it == states.end() || !(*it == m)) throw std::logic_error("state outside the enumerated space");
    return static_cast<std::size_t>(it - states.begin());
}

}  // namespace

TransitionMatrix exact_transition_matrix(const Graph& g, ChainKind kind, std::size_t omega_cap,
                                         MatrixMethod method) {
    TransitionMatrix p;
    p.states = chain_states(g, omega_cap);
    const std::size_t omega = p.states.size();
    const std::vector<Vertex> pool = sampling_pool(g);
    const int j = draws_per_step(kind);
    const std::uint64_t draws_total = ipow(pool.size(), j);
    p.denominator = 2 * draws_total;
    p.counts.assign(omega * omega, 0);

    if (method == MatrixMethod::Auto)
        method = static_cast<double>(omega) * static_cast<double>(draws_total) <= 1e8 ? MatrixMethod::Draws
                                                                                       : MatrixMethod::Cycles;

    if (method == MatrixMethod::Draws) {
        std::vector<Vertex> draws(j);
        for (std::size_t a = 0; a < omega; ++a) {
            const std::vector<Vertex> mate = p.states[a].mates(g.order());
            std::uint64_t& stay = p.counts[a * omega + a];
            for (std::uint64_t code = 0; code < draws_total; ++code) {
                std::uint64_t c = code;
                for (int i = 0; i < j; ++i) {
                    draws[i] = pool[c % pool.size()];
                    c /= pool.size();
                }
                const auto cycle = propose_cycle(g, mate, draws);
                if (!cycle) {
                    stay += 2;
                    continue;
                }
                std::vector<Vertex> next = mate;
                switch_cycle(next, *cycle);
                ++p.counts[a * omega + index_of(p.states, matching_from_mates(next))];
                ++stay;
            }
        }
        return p;
    }

    // Each alternating 2l-cycle with l <= j is proposed by (start choices) * pool^(j-l-1)
    // draw sequences when l < j, and by (start choices) sequences when l = j.
    // Start choices: 2l on a general graph, l when drawing from one side.
    const int n = g.order();
    for (std::size_t a = 0; a < omega; ++a) {
        const std::vector<Vertex> ma = p.states[a].mates(n);
        std::uint64_t off = 0;
        for (std::size_t b = 0; b < omega; ++b) {
            if (a == b) continue;
            const int d = hamming(p.states[a], p.states[b]);
            if (d > 2 * j) continue;
            const std::vector<Vertex> mb = p.states[b].mates(n);
            const SymDiffDecomposition dec = symdiff_decompose(ma, mb);
            if (dec.cycles.size() != 1 || !dec.paths.empty()) continue;
            const int l = static_cast<int>(dec.cycles.front().vertices.size()) / 2;
            const std::uint64_t starts = g.is_bipartite() ? l : 2 * l;
            const std::uint64_t ways = l < j ? starts * ipow(pool.size(), j - l - 1) : starts;
            p.counts[a * omega + b] = ways;
            off += ways;
        }
        p.counts[a * omega + a] = p.denominator - off;
    }
    return p;
}

std::vector<std::pair<int, double>> tv_curve(const TransitionMatrix& p, const std::vector<double>& pi, int t_max,
                                             double stop_below) {
    const Eigen::Index omega = static_cast<Eigen::Index>(p.omega());
    Eigen::MatrixXd step(omega, omega);
    for (Eigen::Index a = 0; a < omega; ++a)
        for (Eigen::Index b = 0; b < omega; ++b) step(a, b) = p.at(a, b);
    Eigen::MatrixXd dist = Eigen::MatrixXd::Identity(omega, omega);
    std::vector<std::pair<int, double>> curve;
    for (int t = 1; t <= t_max; ++t) {
        dist = dist * step;
        double worst = 0.0;
        for (Eigen::Index a = 0; a < omega; ++a) {
            double s = 0.0;
            for (Eigen::Index b = 0; b < omega; ++b) s += std::abs(dist(a, b) - pi[b]);
            worst = std::max(worst, 0.5 * s);
        }
        curve.emplace_back(t, worst);
        if (worst < stop_below) break;
    }
    return curve;
}

ChainDiagnostics diagnostics_from_matrix(const TransitionMatrix& p, const DiagnosticsOptions& opts) {
    ChainDiagnostics d;
    const std::size_t omega = p.omega();
    d.omega = omega;
    d.symmetric = true;
    d.rows_stochastic = true;
    d.min_diagonal = 1.0;
    for (std::size_t a = 0; a < omega; ++a) {
        std::uint64_t row = 0;
        for (std::size_t b = 0; b < omega; ++b) {
            row += p.count(a, b);
            if (p.count(a, b) != p.count(b, a)) d.symmetric = false;
        }
        if (row != p.denominator) d.rows_stochastic = false;
        d.min_diagonal = std::min(d.min_diagonal, p.at(a, a));
    }

    const Eigen::Index m = static_cast<Eigen::Index>(omega);
    Eigen::MatrixXd mat(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b) mat(a, b) = p.at(a, b);

    // Stationary law: uniform for a symmetric kernel, otherwise by power iteration.
    Eigen::RowVectorXd pi = Eigen::RowVectorXd::Constant(m, 1.0 / static_cast<double>(m));
    if (!d.symmetric)
        for (int it = 0; it < opts.t_max; ++it) pi = pi * mat;
    d.stationary.assign(pi.data(), pi.data() + m);
    d.stationary_residual = (pi * mat - pi).cwiseAbs().maxCoeff();

    std::vector<double> moduli;
    if (d.symmetric) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < m; ++i) moduli.push_back(solver.eigenvalues()(i));
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(mat, false);
        for (Eigen::Index i = 0; i < m; ++i) moduli.push_back(std::real(solver.eigenvalues()(i)));
    }
    // Drop one copy of the leading eigenvalue 1; lambda_* is the largest modulus left.
    std::sort(moduli.begin(), moduli.end());
    if (!moduli.empty()) moduli.pop_back();
    d.lambda_star = 0.0;
    for (double x : moduli) d.lambda_star = std::max(d.lambda_star, std::abs(x));
    d.spectral_gap = 1.0 - d.lambda_star;
    if (std::abs(d.spectral_gap) < opts.tolerance) d.spectral_gap = 0.0;

    // A chain without gap never mixes; keep the curve short in that case.
    const int horizon = d.spectral_gap > 0.0 ? opts.t_max : std::min(opts.t_max, 64);
    d.tv_curve = tv_curve(p, d.stationary, horizon);
    if (!d.tv_curve.empty() && d.tv_curve.back().second < 0.25) d.tau_mix_empirical = d.tv_curve.back().first;
    return d;
}

ChainDiagnostics exact_diagnostics(const Graph& g, ChainKind kind, const DiagnosticsOptions& opts) {
    return diagnostics_from_matrix(exact_transition_matrix(g, kind, opts.omega_cap), opts);
}

SimulationSummary simulate(const Graph& g, ChainKind kind, const SimulationOptions& opts) {
    SimulationSummary out;
    Matching start;
    if (opts.start) {
        start = *opts.start;
        if (!is_perfect(g, start)) throw Error(ErrorCode::InvalidArgument, "start must be a perfect matching");
        (void)Matching::from_edges(g, start.edges());
    } else {
        bool found = false;
        if (g.order() % 2 == 0)
            for_each_matching(g, g.order() / 2, [&](const std::vector<Edge>& e) {
                start = Matching::from_edges(e);
                found = true;
                return false;
            });
        if (!found) throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    }

    try {
        out.states = enumerate_perfect_matchings(g, opts.omega_cap);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EnumerationBudgetExceeded) throw;
        if (opts.record_trajectory) throw Error(ErrorCode::OmegaTooLarge, "trajectory needs an enumerable state space");
        out.states.clear();
    }
    out.histogram.assign(out.states.size(), 0);
    auto record = [&](std::uint64_t t, const std::vector<Vertex>& mate) {
        if (out.states.empty()) return;
        const std::size_t idx = index_of(out.states, matching_from_mates(mate));
        ++out.histogram[idx];
        if (opts.record_trajectory) out.trajectory.emplace_back(t, idx);
    };

    Rng rng = Rng(opts.seed).substream("chain");
    std::vector<Vertex> mate = start.mates(g.order());
    record(0, mate);
    for (std::uint64_t t = 1; t <= opts.steps; ++t) {
        const std::vector<Vertex> before = mate;
        chain_step(g, kind, mate, rng);
        if (mate != before) ++out.accepted_moves;
        record(t, mate);
    }
    out.final_matching = matching_from_mates(mate);
    if (!out.states.empty()) {
        const double expected = static_cast<double>(opts.steps + 1) / static_cast<double>(out.states.size());
        for (std::uint64_t c : out.histogram) {
            const double diff = static_cast<double>(c) - expected;
            out.chi_square += diff * diff / expected;
        }
    }
    return out;
}

CongestionReport canonical_path_congestion(const Graph& g, const TransitionMatrix& p) {
    CongestionReport r;
    const std::size_t omega = p.omega();
    std::vector<double> load(omega * omega, 0.0);
    for (std::size_t s = 0; s < omega; ++s) {
        for (std::size_t t = 0; t < omega; ++t) {
            if (s == t) continue;
            const CanonicalPath cp = canonical_path(g, p.states[s], p.states[t]);
            const auto len = cp.path.steps.size();
            r.max_length = std::max(r.max_length, static_cast<int>(len));
            ++r.paths;
            Matching cur = p.states[s];
            std::size_t a = s;
            for (const SwitchStep& step : cp.path.steps) {
                cur = apply_step(g, cur, step);
                const std::size_t b = index_of(p.states, cur);
                if (p.count(a, b) == 0 || step.size_class() > 4) r.all_moves_legal = false;
                load[a * omega + b] += static_cast<double>(len);
                a = b;
            }
        }
    }
    // Uniform stationary law: rho = max_{(a,b)} sum |gamma| pi(S)pi(T) / (pi(a) P(a,b)).
    const double pi = 1.0 / static_cast<double>(omega);
    for (std::size_t a = 0; a < omega; ++a)
        for (std::size_t b = 0; b < omega; ++b) {
            if (load[a * omega + b] == 0.0 || p.count(a, b) == 0) continue;
            r.rho = std::max(r.rho, load[a * omega + b] * pi * pi / (pi * p.at(a, b)));
        }
    r.bound = 2.0 * r.rho * std::log(static_cast<double>(omega));
    return r;
}

}  // namespace kswitch
