// Copyright 2026 The qaclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaclab/search.hpp"

#include <unsupported/Eigen/NonLinearOptimization>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qaclab/errors.hpp"

namespace qaclab {

std::string Topology::str() const {
    std::string out;
    for (size_t l = 0; l < layers.size(); l++) {
        if (l) out += "/";
        for (size_t g = 0; g < layers[l].csign.size(); g++) {
            if (g) out += " ";
            out += layers[l].csign[g].str();
        }
    }
    return out;
}

void Topology::validate() const {
    std::vector<std::string> issues;
    if (n < 1 || m < n || m > kMaxStateQubits) {
        issues.push_back("need 1 <= n <= m <= " + std::to_string(kMaxStateQubits) + ", got n=" +
                         std::to_string(n) + " m=" + std::to_string(m));
    }
    const QubitSet all = QubitSet::range(1, m);
    for (size_t l = 0; l < layers.size(); l++) {
        QubitSet used;
        for (QubitSet g : layers[l].csign) {
            std::string where = "layer " + std::to_string(l + 1) + " gate " + g.str();
            if (g.empty()) issues.push_back(where + ": empty support");
            if (!g.is_subset_of(all)) issues.push_back(where + ": qubit outside 1.." + std::to_string(m));
            if (g.intersects(used)) issues.push_back(where + ": overlaps another gate in the layer");
            used = used | g;
        }
    }
    if (!issues.empty()) throw ValidationError(issues);
}

size_t ParamCircuit::param_count(const Topology &t) {
    return 4 * (t.layers.size() + 1) * static_cast<size_t>(t.m);
}

ParamCircuit ParamCircuit::identity(Topology t) {
    size_t count = param_count(t);
    return ParamCircuit{std::move(t), std::vector<double>(count, 0.0)};
}

QacCircuit ParamCircuit::materialize() const {
    topology.validate();
    const int m = topology.m;
    if (params.size() != param_count(topology)) {
        throw InvalidArgument("expected " + std::to_string(param_count(topology)) + " parameters, got " +
                              std::to_string(params.size()));
    }
    std::vector<SingleLayer> singles(topology.layers.size() + 1);
    for (size_t k = 0; k < singles.size(); k++) {
        for (int q = 1; q <= m; q++) {
            const double *p = &params[4 * (k * static_cast<size_t>(m) + static_cast<size_t>(q - 1))];
            singles[k].gates[q] = SingleQubitGate::from_zyz({p[0], p[1], p[2], p[3]});
        }
    }
    return QacCircuit::from_layers(m, topology.n, std::move(singles), topology.layers);
}

namespace {

/// Runs all 2^n classical inputs at once as the columns of a 2^m x 2^n matrix
/// and keeps the batch after every single layer for cheap partial reruns.
class BatchSimulator {
   public:
    BatchSimulator(const Topology &t, bool phase_free)
        : n_(t.n), m_(t.m), layers_(static_cast<int>(t.layers.size())), phase_free_(phase_free) {
        t.validate();
        dim_ = Eigen::Index{1} << m_;
        cols_ = Eigen::Index{1} << n_;
        for (const auto &layer : t.layers) {
            std::vector<uint64_t> masks;
            for (QubitSet g : layer.csign) masks.push_back(index_mask(g, m_));
            masks_.push_back(std::move(masks));
        }
        const uint64_t target_bit = uint64_t{1} << (n_ - 1);
        for (uint64_t x = 0; x < static_cast<uint64_t>(cols_); x++) {
            uint64_t image = (x & ~target_bit) | (static_cast<uint64_t>(std::popcount(x) & 1) << (n_ - 1));
            targets_.push_back(image << (m_ - n_));
        }
        gates_.assign(static_cast<size_t>((layers_ + 1) * m_), Matrix2c::Identity());
        after_.assign(static_cast<size_t>(layers_ + 1), ComplexMatrix());
    }

    Eigen::Index residual_size() const {
        return 2 * dim_ * cols_;
    }
    int param_size() const {
        return 4 * (layers_ + 1) * m_;
    }

    void set_params(const double *p) {
        for (size_t i = 0; i < gates_.size(); i++) {
            gates_[i] = gates::zyz(p[4 * i], p[4 * i + 1], p[4 * i + 2], p[4 * i + 3]);
        }
    }

    /// Full run; after_[k] holds the batch after single layer k.
    void forward() {
        ComplexMatrix psi = ComplexMatrix::Zero(dim_, cols_);
        for (Eigen::Index x = 0; x < cols_; x++) psi(x << (m_ - n_), x) = 1.0;
        for (int k = 0; k <= layers_; k++) {
            if (k > 0) apply_multi(psi, k - 1);
            for (int q = 1; q <= m_; q++) apply_gate(psi, gate(k, q), q);
            after_[static_cast<size_t>(k)] = psi;
        }
    }

    const ComplexMatrix &output() const {
        return after_.back();
    }

    /// Output when gate (k, q) is replaced by `replacement`, reusing the cache.
    ComplexMatrix output_with(int k, int q, const Matrix2c &replacement) const {
        ComplexMatrix psi = after_[static_cast<size_t>(k)];
        apply_gate(psi, replacement * gate(k, q).adjoint(), q);
        for (int l = k + 1; l <= layers_; l++) {
            apply_multi(psi, l - 1);
            for (int qq = 1; qq <= m_; qq++) apply_gate(psi, gate(l, qq), qq);
        }
        return psi;
    }

    void residual(const ComplexMatrix &out, double *r) const {
        for (Eigen::Index c = 0; c < cols_; c++) {
            const Eigen::Index t = static_cast<Eigen::Index>(targets_[static_cast<size_t>(c)]);
            for (Eigen::Index i = 0; i < dim_; i++) {
                Complex v = out(i, c);
                if (i == t) v = phase_free_ ? Complex(0.0, 0.0) : v - 1.0;
                r[2 * (c * dim_ + i)] = v.real();
                r[2 * (c * dim_ + i) + 1] = v.imag();
            }
        }
    }

    double loss() const {
        Eigen::VectorXd r(residual_size());
        residual(output(), r.data());
        return r.squaredNorm();
    }

   private:
    const Matrix2c &gate(int k, int q) const {
        return gates_[static_cast<size_t>(k * m_ + q - 1)];
    }
    void apply_gate(ComplexMatrix &psi, const Matrix2c &g, int q) const {
        for (Eigen::Index c = 0; c < cols_; c++) kernels::apply_1q(psi.col(c).data(), m_, g, q);
    }
    void apply_multi(ComplexMatrix &psi, int layer) const {
        for (uint64_t mask : masks_[static_cast<size_t>(layer)]) {
            for (Eigen::Index c = 0; c < cols_; c++) {
                kernels::apply_phase_on_ones(psi.col(c).data(), m_, mask, Complex(-1.0, 0.0));
            }
        }
    }

    int n_, m_, layers_;
    bool phase_free_;
    Eigen::Index dim_ = 0, cols_ = 0;
    std::vector<std::vector<uint64_t>> masks_;
    std::vector<uint64_t> targets_;
    std::vector<Matrix2c> gates_;
    std::vector<ComplexMatrix> after_;
};

/// Residual as a function of the free parameters; the others stay at their
/// initial values. Fixing them loses nothing: the phases of all gates merge
/// into one global phase, Rz(lambda) of a later layer commutes through the
/// diagonal C-SIGN layer into Rz(phi) of the previous one, and Rz(lambda) of
/// the first layer only contributes a phase on an ancilla that starts in |0>.
struct ResidualFunctor {
    BatchSimulator &sim;
    int m;
    std::vector<int> free;
    Eigen::VectorXd full;

    static std::vector<int> free_indices(int n, int m, int layers) {
        std::vector<int> out{0};  // beta of gate (0, 1)
        for (int k = 0; k <= layers; k++) {
            for (int q = 1; q <= m; q++) {
                const int base = 4 * (k * m + q - 1);
                out.push_back(base + 1);
                out.push_back(base + 2);
                if (k == 0 && q <= n) out.push_back(base + 3);
            }
        }
        return out;
    }

    int inputs() const {
        return static_cast<int>(free.size());
    }
    int values() const {
        return static_cast<int>(sim.residual_size());
    }

    void load(const Eigen::VectorXd &z) {
        for (size_t i = 0; i < free.size(); i++) full[free[i]] = z[static_cast<Eigen::Index>(i)];
    }

    int operator()(const Eigen::VectorXd &z, Eigen::VectorXd &f) {
        load(z);
        sim.set_params(full.data());
        sim.forward();
        f.resize(sim.residual_size());
        sim.residual(sim.output(), f.data());
        return 0;
    }

    /// Forward-difference Jacobian. Perturbing one parameter only changes one
    /// gate, so each column reruns the circuit from that gate onward.
    int df(const Eigen::VectorXd &z, Eigen::MatrixXd &jac) {
        load(z);
        sim.set_params(full.data());
        sim.forward();
        const Eigen::Index rows = sim.residual_size();
        Eigen::VectorXd f0(rows), f1(rows);
        sim.residual(sim.output(), f0.data());
        jac.resize(rows, z.size());
        for (Eigen::Index col = 0; col < z.size(); col++) {
            const int p = free[static_cast<size_t>(col)];
            const int slot = p / 4;
            const int k = slot / m;
            const int q = slot % m + 1;
            double h = 1e-7 * std::max(1.0, std::abs(full[p]));
            double v[4] = {full[4 * slot], full[4 * slot + 1], full[4 * slot + 2], full[4 * slot + 3]};
            v[p % 4] += h;
            sim.residual(sim.output_with(k, q, gates::zyz(v[0], v[1], v[2], v[3])), f1.data());
            jac.col(col) = (f1 - f0) / h;
        }
        return 0;
    }
};

struct RestartResult {
    double loss = 0;
    int iterations = 0;
    std::vector<double> params;
};

RestartResult run_restart(const Topology &t, uint64_t seed, int budget, bool phase_free) {
    BatchSimulator sim(t, phase_free);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    Eigen::VectorXd x(sim.param_size());
    for (Eigen::Index i = 0; i < x.size(); i++) x[i] = angle(rng);
    ResidualFunctor functor{sim, t.m,
                            ResidualFunctor::free_indices(t.n, t.m, static_cast<int>(t.layers.size())), x};
    Eigen::VectorXd z(functor.inputs());
    for (Eigen::Index i = 0; i < z.size(); i++) z[i] = x[functor.free[static_cast<size_t>(i)]];

    Eigen::LevenbergMarquardt<ResidualFunctor> lm(functor);
    lm.parameters.maxfev = std::numeric_limits<Eigen::DenseIndex>::max();
    lm.parameters.ftol = 1e-15;
    lm.parameters.xtol = 1e-15;
    RestartResult out;
    auto status = lm.minimizeInit(z);
    // Stop on a plateau: away from zero, less than 1e-4 relative progress
    // over the last kWindow iterations.
    constexpr size_t kWindow = 20;
    std::vector<double> history;
    while (status != Eigen::LevenbergMarquardtSpace::ImproperInputParameters && out.iterations < budget) {
        status = lm.minimizeOneStep(z);
        out.iterations++;
        double loss = lm.fnorm * lm.fnorm;
        history.push_back(loss);
        if (status != Eigen::LevenbergMarquardtSpace::Running || loss < 1e-20) break;
        if (history.size() > kWindow && loss > 1e-3) {
            double before = history[history.size() - 1 - kWindow];
            if (before - loss < 1e-4 * before) break;
        }
    }
    functor.load(z);
    sim.set_params(functor.full.data());
    sim.forward();
    out.loss = sim.loss();
    out.params.assign(functor.full.data(), functor.full.data() + functor.full.size());
    return out;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)> &body) {
    size_t workers = std::min(count, static_cast<size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&]() {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

double clean_sim_loss(const ParamCircuit &pc, bool phase_free) {
    if (pc.topology.n < 2) {
        throw InvalidArgument("clean-simulation loss needs at least 2 inputs");
    }
    if (pc.params.size() != ParamCircuit::param_count(pc.topology)) {
        throw InvalidArgument("expected " + std::to_string(ParamCircuit::param_count(pc.topology)) +
                              " parameters, got " + std::to_string(pc.params.size()));
    }
    BatchSimulator sim(pc.topology, phase_free);
    sim.set_params(pc.params.data());
    sim.forward();
    return sim.loss();
}

int default_thread_count() {
    if (const char *env = std::getenv("THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SearchReport optimize_depth2(const Topology &t, const SearchOptions &opts) {
    if (t.layers.size() != 2) {
        throw ValidationError({"topology has " + std::to_string(t.layers.size()) + " multi layers, expected 2"});
    }
    t.validate();
    if (t.n < 2) throw InvalidArgument("search needs at least 2 inputs");
    if (opts.restarts < 1) throw InvalidArgument("restarts must be at least 1");
    if (opts.budget_iters < 1) throw InvalidArgument("iteration budget must be at least 1");

    auto start = std::chrono::steady_clock::now();
    std::vector<RestartResult> results(static_cast<size_t>(opts.restarts));
    int threads = opts.threads > 0 ? opts.threads : default_thread_count();
    parallel_for(results.size(), threads, [&](size_t i) {
        results[i] = run_restart(t, opts.seed + i, opts.budget_iters, opts.phase_free);
    });

    SearchReport rep;
    rep.topology = t;
    rep.seed = opts.seed;
    rep.phase_free = opts.phase_free;
    rep.best_loss = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < results.size(); i++) {
        rep.restart_losses.push_back(results[i].loss);
        rep.restart_iterations.push_back(results[i].iterations);
        if (results[i].loss < rep.best_loss) {
            rep.best_loss = results[i].loss;
            rep.best_restart = static_cast<int>(i);
            rep.best_params = results[i].params;
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

/// Every nonempty set of disjoint blocks of size >= 2 over [m], as sorted
/// label masks.
std::vector<std::vector<uint64_t>> layer_options(int m) {
    std::vector<std::vector<uint64_t>> out;
    std::vector<uint64_t> blocks;
    std::function<void(uint64_t)> rec = [&](uint64_t free) {
        if (free == 0) {
            if (!blocks.empty()) {
                auto sorted = blocks;
                std::sort(sorted.begin(), sorted.end());
                out.push_back(sorted);
            }
            return;
        }
        const uint64_t low = free & (~free + 1);
        const uint64_t others = free & ~low;
        rec(others);  // lowest free label stays outside every block
        for (uint64_t sub = others; sub; sub = (sub - 1) & others) {
            blocks.push_back(low | sub);
            rec(others & ~sub);
            blocks.pop_back();
        }
    };
    rec(m >= 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1);
    return out;
}

uint64_t permute_mask(uint64_t mask, const std::vector<int> &perm) {
    uint64_t out = 0;
    while (mask) {
        int bit = std::countr_zero(mask);
        mask &= mask - 1;
        out |= uint64_t{1} << perm[static_cast<size_t>(bit)];
    }
    return out;
}

using TopologyKey = std::pair<std::vector<uint64_t>, std::vector<uint64_t>>;

TopologyKey permute_key(const std::vector<uint64_t> &l1, const std::vector<uint64_t> &l2,
                        const std::vector<int> &perm) {
    TopologyKey k;
    for (uint64_t b : l1) k.first.push_back(permute_mask(b, perm));
    for (uint64_t b : l2) k.second.push_back(permute_mask(b, perm));
    std::sort(k.first.begin(), k.first.end());
    std::sort(k.second.begin(), k.second.end());
    return k;
}

/// Permutations of bit positions fixing 0 and permuting 1..n-1 and n..m-1
/// among themselves.
std::vector<std::vector<int>> relabelings(int n, int m) {
    std::vector<int> inputs, ancillas;
    for (int i = 1; i < n; i++) inputs.push_back(i);
    for (int i = n; i < m; i++) ancillas.push_back(i);
    std::vector<std::vector<int>> out;
    do {
        auto anc = ancillas;
        do {
            std::vector<int> perm{0};
            perm.insert(perm.end(), inputs.begin(), inputs.end());
            perm.insert(perm.end(), anc.begin(), anc.end());
            out.push_back(perm);
        } while (std::next_permutation(anc.begin(), anc.end()));
    } while (std::next_permutation(inputs.begin(), inputs.end()));
    return out;
}

bool connected_and_used(const std::vector<uint64_t> &l1, const std::vector<uint64_t> &l2, int n, int m) {
    uint64_t cone = 1;
    for (uint64_t b : l2) {
        if (b & 1) cone = b;
    }
    uint64_t reach = cone;
    for (uint64_t b : l1) {
        if (b & cone) reach |= b;
    }
    const uint64_t inputs = (uint64_t{1} << n) - 1;
    if ((reach & inputs) != inputs) return false;
    uint64_t used = 0;
    for (uint64_t b : l1) used |= b;
    for (uint64_t b : l2) used |= b;
    const uint64_t all = (uint64_t{1} << m) - 1;
    return (used & (all & ~inputs)) == (all & ~inputs);
}

std::vector<Topology> canonical_topologies_limited(int n, int m, size_t limit) {
    if (n < 1 || m < n || m > 12) {
        throw InvalidArgument("topology enumeration needs 1 <= n <= m <= 12");
    }
    auto options = layer_options(m);
    auto perms = relabelings(n, m);
    std::set<TopologyKey> seen;
    for (const auto &l1 : options) {
        for (const auto &l2 : options) {
            if (!connected_and_used(l1, l2, n, m)) continue;
            TopologyKey best = permute_key(l1, l2, perms[0]);
            for (size_t i = 1; i < perms.size(); i++) best = std::min(best, permute_key(l1, l2, perms[i]));
            seen.insert(std::move(best));
            if (seen.size() > limit) {
                throw PreconditionError("more than " + std::to_string(limit) + " canonical topologies for n=" +
                                        std::to_string(n) + ", m=" + std::to_string(m) +
                                        "; pass force to enumerate anyway");
            }
        }
    }
    std::vector<Topology> out;
    for (const auto &key : seen) {
        Topology t{n, m, {MultiLayer{}, MultiLayer{}}};
        for (uint64_t b : key.first) t.layers[0].csign.push_back(QubitSet::from_mask(b));
        for (uint64_t b : key.second) t.layers[1].csign.push_back(QubitSet::from_mask(b));
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Topology &a, const Topology &b) { return a.str() < b.str(); });
    return out;
}

}  // namespace

std::vector<Topology> canonical_topologies(int n, int m) {
    return canonical_topologies_limited(n, m, std::numeric_limits<size_t>::max());
}

std::vector<Topology> sweep_candidates(int n, int m_max, bool force, size_t limit) {
    if (n < 3) throw InvalidArgument("sweeps need n >= 3");
    if (m_max < n) throw InvalidArgument("m_max must be at least n");
    std::vector<Topology> out;
    const size_t cap = force ? std::numeric_limits<size_t>::max() : limit;
    for (int m = n; m <= m_max; m++) {
        auto ts = canonical_topologies_limited(n, m, cap - std::min(cap, out.size()));
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

std::vector<SearchReport> sweep_topologies(int n, int m_max, const SearchOptions &opts, bool force) {
    auto candidates = sweep_candidates(n, m_max, force);
    std::vector<SearchReport> out(candidates.size());
    int threads = opts.threads > 0 ? opts.threads : default_thread_count();
    SearchOptions inner = opts;
    inner.threads = 1;
    parallel_for(candidates.size(), threads, [&](size_t i) { out[i] = optimize_depth2(candidates[i], inner); });
    std::stable_sort(out.begin(), out.end(),
                     [](const SearchReport &a, const SearchReport &b) { return a.best_loss < b.best_loss; });
    return out;
}

}  // namespace qaclab
