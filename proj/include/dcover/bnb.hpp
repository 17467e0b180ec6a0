#ifndef DCOVER_BNB_HPP
#define DCOVER_BNB_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cover_model.hpp"
#include "errors.hpp"

namespace dcover {

namespace detail {

constexpr double kObjTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Model reduction: merge candidates with identical cover sets (keep the
// cheapest) and drop candidates whose cover set is contained in a no-more-
// expensive candidate's. Sound for the plain model; pack rows tell otherwise
// identical candidates apart, so reduction is skipped when dominance is off.
// rep[] maps every original candidate onto its surviving representative
// (-1 only for empty covers), letting warm starts survive the reduction.
struct Reduction {
    std::vector<int> keep;  // reduced index -> original index
    std::vector<int> rep;   // original index -> original index of representative
};

inline Reduction reduce_model(const CoverModel& in, CoverModel& out) {
    const int nc = in.n_vars();
    const int n = in.n_points();
    Reduction red;
    red.rep.assign(nc, -1);

    std::vector<char> dead(nc, 0);
    for (int i = 0; i < nc; ++i)
        if (in.covers[i].empty()) dead[i] = 1;  // cannot help coverage

    if (in.allow_dominance) {
        // cover-set dedup
        struct VecHash {
            std::size_t operator()(const std::vector<int>& v) const {
                std::uint64_t h = 1469598103934665603ull;
                for (int x : v) {
                    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull +
                         (h << 6) + (h >> 2);
                }
                return static_cast<std::size_t>(h);
            }
        };
        std::unordered_map<std::vector<int>, int, VecHash> first;
        first.reserve(nc * 2);
        for (int i = 0; i < nc; ++i) {
            if (dead[i]) continue;
            auto [it, fresh] = first.emplace(in.covers[i], i);
            if (!fresh) {
                int& kept = it->second;
                if (in.cost[i] < in.cost[kept]) {
                    dead[kept] = 1;
                    red.rep[kept] = i;
                    kept = i;
                } else {
                    dead[i] = 1;
                    red.rep[i] = kept;
                }
            }
        }

        // subset dominance on bitsets, via shared-first-point adjacency;
        // skipped on very large pools where the pair scan would dwarf the search
        if (nc <= 50000) {
        const int words = (n + 63) / 64;
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < nc; ++i)
            for (int j : in.covers[i]) adj[j].push_back(i);
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(nc) * words, 0);
        for (int i = 0; i < nc; ++i)
            for (int j : in.covers[i])
                bits[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64);
        auto subset_of = [&](int a, int b) {
            const std::uint64_t* A = &bits[static_cast<std::size_t>(a) * words];
            const std::uint64_t* B = &bits[static_cast<std::size_t>(b) * words];
            for (int w = 0; w < words; ++w)
                if (A[w] & ~B[w]) return false;
            return true;
        };
        for (int a = 0; a < nc; ++a) {
            if (dead[a]) continue;
            const int anchor = in.covers[a].front();
            for (int b : adj[anchor]) {
                if (b == a || dead[b]) continue;
                if (in.covers[b].size() < in.covers[a].size()) continue;
                const bool cheaper = in.cost[b] < in.cost[a] ||
                                     (in.cost[b] == in.cost[a] && b < a);
                if (!cheaper) continue;
                if (subset_of(a, b)) {
                    dead[a] = 1;
                    red.rep[a] = b;
                    break;
                }
            }
        }
        }
    }

    std::vector<int> to_reduced(nc, -1);
    for (int i = 0; i < nc; ++i) {
        if (dead[i]) continue;
        red.rep[i] = i;
        to_reduced[i] = static_cast<int>(red.keep.size());
        red.keep.push_back(i);
    }
    // resolve replacement chains (a merged into b, b later dominated by c)
    for (int i = 0; i < nc; ++i) {
        int r = red.rep[i];
        while (r >= 0 && dead[r]) r = red.rep[r];
        red.rep[i] = r;
    }

    out = CoverModel{};
    out.kappa = in.kappa;
    out.budget = in.budget;
    out.allow_dominance = in.allow_dominance;
    for (int orig : red.keep) {
        out.cost.push_back(in.cost[orig]);
        out.covers.push_back(in.covers[orig]);
        out.ub.push_back(in.ub[orig]);
    }
    for (const PackRow& row : in.packs) {
        PackRow mapped;
        mapped.name = row.name;
        for (int v : row.vars) {
            const int r = red.rep[v];
            if (r >= 0 && to_reduced[r] >= 0) mapped.vars.push_back(to_reduced[r]);
        }
        std::sort(mapped.vars.begin(), mapped.vars.end());
        mapped.vars.erase(std::unique(mapped.vars.begin(), mapped.vars.end()),
                          mapped.vars.end());
        if (mapped.vars.size() >= 2) out.packs.push_back(std::move(mapped));
    }
    out.rebuild_point_adj();
    // children are explored cheapest-first
    for (auto& adj : out.point_adj)
        std::stable_sort(adj.begin(), adj.end(), [&](int x, int y) {
            return out.cost[x] < out.cost[y];
        });
    return red;
}

// Best-first branch and bound with a Lagrangian bound. Multipliers are tuned
// once at the root by subgradient ascent and then frozen, which turns the
// per-node bound into a reduced-cost prefix walk.
class BnbSolver {
public:
    BnbSolver(const CoverModel& model, const SolveLimits& limits)
        : M(model), limits_(limits) {}

    SolveResult run(const std::vector<std::pair<int, int>>* warm) {
        const auto t0 = std::chrono::steady_clock::now();
        SolveResult res;
        res.stats.rounds = 1;

        // cheap certificates of infeasibility first
        for (int j = 0; j < M.n_points(); ++j) {
            long long reachable = 0;
            for (int i : M.point_adj[j]) reachable += M.ub[i];
            if (std::min<long long>(reachable, M.budget) < M.kappa[j]) {
                res.status = SolveStatus::Infeasible;
                res.lower_bound = kInf;
                return res;
            }
        }

        // row lookup tables must exist before any incumbent is screened
        packs_of_.assign(M.n_vars(), {});
        for (int pi = 0; pi < static_cast<int>(M.packs.size()); ++pi)
            for (int v : M.packs[pi].vars) packs_of_[v].push_back(pi);
        dead_.assign(M.n_vars(), 0);
        max_gain_ = 1;
        for (int i = 0; i < M.n_vars(); ++i)
            max_gain_ = std::max(max_gain_, static_cast<int>(M.covers[i].size()));

        if (warm) try_incumbent(*warm);
        greedy_incumbent();
        tune_multipliers();
        build_neg_units();

        // root node
        excl_mark_.assign(M.n_vars(), 0);
        {
            Node root;
            root.sel = {};
            root.cost = 0.0;
            root.units = 0;
            root.bound = node_bound(root.sel, root.cost, root.units);
            root.seq = next_seq_++;
            root_bound_ = root.bound;
            fix_by_reduced_cost();
            if (!(root.bound >= best_obj_ - kObjTol)) push_node(std::move(root));
        }

        std::vector<int> cov(M.n_points());
        long long pops = 0;
        bool out_of_budget = false;
        while (!heap_.empty()) {
            if (!dive_ && heap_.front().bound >= best_obj_ - kObjTol) break;  // gap closed
            if ((++pops & 0x1ff) == 0 && limit_hit(t0)) { out_of_budget = true; break; }
            if (limits_.node_cap > 0 && pops > limits_.node_cap) { out_of_budget = true; break; }

            Node node = pop_node();
            ++res.stats.nodes;
            if (node.bound >= best_obj_ - kObjTol) continue;
            if (std::any_of(node.sel.begin(), node.sel.end(), [&](const auto& e) {
                    return e.second > 0 && dead_[e.first];
                }))
                continue;  // fixed out after this node was queued

            std::fill(cov.begin(), cov.end(), 0);
            for (const auto& [i, cnt] : node.sel)
                for (int j : M.covers[i]) cov[j] += cnt;

            // branch on the deficit point with the fewest candidates
            int jstar = -1, worst = 0;
            std::size_t jdeg = 0;
            long long total_deficit = 0;
            for (int j = 0; j < M.n_points(); ++j) {
                const int d = M.kappa[j] - cov[j];
                if (d <= 0) continue;
                total_deficit += d;
                worst = std::max(worst, d);
                const std::size_t deg = M.point_adj[j].size();
                if (jstar < 0 || deg < jdeg) { jstar = j; jdeg = deg; }
            }
            if (jstar < 0) {
                if (node.cost < best_obj_ - kObjTol) {
                    set_incumbent(node.sel, node.cost);
                    fix_by_reduced_cost();
                }
                continue;
            }

            const int b = M.budget - node.units;
            if (b <= 0 || worst > b || total_deficit > static_cast<long long>(b) * max_gain_)
                continue;

            for (const ExclFrame* f = node.excl.get(); f; f = f->up.get())
                for (int t = 0; t < f->len; ++t) excl_mark_[(*f->list)[t]] = 1;

            auto allowed = std::make_shared<std::vector<int>>();
            for (int i : M.point_adj[jstar]) {
                if (dead_[i] || excl_mark_[i]) continue;
                if (count_of(node.sel, i) >= M.ub[i]) continue;
                if (!pack_ok(node.sel, i)) continue;
                allowed->push_back(i);
            }

            kids_.clear();
            for (int t = 0; t < static_cast<int>(allowed->size()); ++t) {
                const int i = (*allowed)[t];
                Node child;
                child.sel = node.sel;
                bump(child.sel, i);
                child.cost = node.cost + M.cost[i];
                child.units = node.units + 1;
                if (child.cost >= best_obj_ - kObjTol) continue;
                child.bound = node_bound(child.sel, child.cost, child.units);
                if (child.bound >= best_obj_ - kObjTol) continue;
                child.seq = next_seq_++;
                child.excl = t == 0 ? node.excl
                                    : std::make_shared<const ExclFrame>(
                                          ExclFrame{allowed, t, node.excl});
                kids_.push_back(std::move(child));
            }
            if (dive_)  // tightest child lands on top of the stack
                std::sort(kids_.begin(), kids_.end(), [](const Node& a, const Node& b) {
                    if (a.bound != b.bound) return a.bound > b.bound;
                    return a.seq > b.seq;
                });
            for (Node& child : kids_) push_node(std::move(child));

            for (const ExclFrame* f = node.excl.get(); f; f = f->up.get())
                for (int t = 0; t < f->len; ++t) excl_mark_[(*f->list)[t]] = 0;

            if (heap_.size() > compact_next_) compact_frontier();
            if (heap_.size() > kQueueCap) { out_of_budget = true; break; }
        }

        if (limits_.capture_timings) {
            res.stats.wall_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
        }

        if (best_obj_ < kInf) {
            res.selected = best_sel_;
            res.objective = best_obj_;
            if (out_of_budget) {
                res.status = SolveStatus::Feasible;
                res.lower_bound =
                    heap_.empty() ? best_obj_
                                  : std::min(best_obj_, std::max(root_bound_, frontier_min()));
            } else {
                res.status = SolveStatus::Optimal;
                res.lower_bound = best_obj_;
            }
        } else if (out_of_budget) {
            res.status = SolveStatus::Feasible;  // undecided: neither cover nor proof
            res.objective = kInf;
            res.lower_bound = heap_.empty() ? root_bound_
                                            : std::max(root_bound_, frontier_min());
        } else {
            res.status = SolveStatus::Infeasible;
            res.lower_bound = kInf;
        }
        return res;
    }

private:
    // Sibling exclusions, shared down the subtree. When a node branches over
    // the ordered candidate list of its deficit point, the t-th child forbids
    // the first t list entries everywhere below it; that partitions the
    // completions by the lowest-ranked new unit covering the point, so no
    // selection multiset is ever reached along two different paths. A frame
    // records one such prefix and links to the frames inherited from above.
    struct ExclFrame {
        std::shared_ptr<const std::vector<int>> list;
        int len = 0;
        std::shared_ptr<const ExclFrame> up;
    };

    struct Node {
        double bound = 0.0;
        double cost = 0.0;
        int units = 0;
        long long seq = 0;
        std::vector<std::pair<int, int>> sel;  // (candidate, count) pairs
        std::shared_ptr<const ExclFrame> excl;
        int depth() const { return units; }
    };
    struct NodeWorse {
        bool operator()(const Node& a, const Node& b) const {
            if (a.bound != b.bound) return a.bound > b.bound;
            if (a.units != b.units) return a.units < b.units;
            return a.seq > b.seq;
        }
    };

    static int count_of(const std::vector<std::pair<int, int>>& sel, int i) {
        for (const auto& [c, cnt] : sel)
            if (c == i) return cnt;
        return 0;
    }

    static void bump(std::vector<std::pair<int, int>>& sel, int i) {
        for (auto& [c, cnt] : sel)
            if (c == i) { ++cnt; return; }
        sel.emplace_back(i, 1);
        std::sort(sel.begin(), sel.end());
    }

    bool limit_hit(std::chrono::steady_clock::time_point t0) const {
        if (limits_.time_limit_s <= 0.0) return false;
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return s >= limits_.time_limit_s;
    }

    bool pack_ok(const std::vector<std::pair<int, int>>& sel, int add) const {
        if (packs_of_.empty()) return true;
        for (int pi : packs_of_[add]) {
            for (const auto& [c, cnt] : sel) {
                if (cnt <= 0) continue;
                if (std::binary_search(M.packs[pi].vars.begin(), M.packs[pi].vars.end(), c))
                    return false;
            }
        }
        return true;
    }

    bool rows_satisfied(const std::vector<std::pair<int, int>>& sel) const {
        std::vector<int> cov(M.n_points(), 0);
        int units = 0;
        for (const auto& [i, cnt] : sel) {
            if (i < 0 || i >= M.n_vars() || cnt < 0 || cnt > M.ub[i]) return false;
            units += cnt;
            for (int j : M.covers[i]) cov[j] += cnt;
        }
        if (units > M.budget) return false;
        for (int j = 0; j < M.n_points(); ++j)
            if (cov[j] < M.kappa[j]) return false;
        for (const PackRow& row : M.packs) {
            int used = 0;
            for (int v : row.vars) used += count_of(sel, v);
            if (used > 1) return false;
        }
        return true;
    }

    void try_incumbent(const std::vector<std::pair<int, int>>& sel) {
        if (!rows_satisfied(sel)) return;
        double cost = 0.0;
        for (const auto& [i, cnt] : sel) cost += M.cost[i] * cnt;
        if (cost < best_obj_ - kObjTol) set_incumbent(sel, cost);
    }

    void set_incumbent(std::vector<std::pair<int, int>> sel, double cost) {
        std::erase_if(sel, [](const auto& e) { return e.second == 0; });
        best_sel_ = std::move(sel);
        best_obj_ = cost;
    }

    // Budget-aware greedy: one unit at a time, preferring candidates that
    // close at least ceil(deficit/budget-left) units, cheapest per unit first.
    void greedy_incumbent() {
        std::vector<std::pair<int, int>> sel;
        std::vector<int> cov(M.n_points(), 0), have(M.n_vars(), 0);
        int b = M.budget;
        for (;;) {
            long long deficit = 0;
            for (int j = 0; j < M.n_points(); ++j)
                deficit += std::max(0, M.kappa[j] - cov[j]);
            if (deficit == 0) break;
            if (b == 0) return;  // greedy failed; no incumbent from here
            const long long need = (deficit + b - 1) / b;
            int pick = -1, pick_gain = 0;
            double pick_rate = kInf;
            for (int i = 0; i < M.n_vars(); ++i) {
                if (have[i] >= M.ub[i]) continue;
                int gain = 0;
                for (int j : M.covers[i])
                    if (cov[j] < M.kappa[j]) ++gain;
                if (gain == 0) continue;
                if (!pack_ok(sel, i)) continue;
                const bool enough = gain >= need;
                const bool had_enough = pick >= 0 && pick_gain >= need;
                const double rate = M.cost[i] / gain;
                bool better;
                if (pick < 0) better = true;
                else if (enough != had_enough) better = enough;
                else if (enough) better = rate < pick_rate;
                else better = gain > pick_gain || (gain == pick_gain && rate < pick_rate);
                if (better) { pick = i; pick_gain = gain; pick_rate = rate; }
            }
            if (pick < 0) return;
            bump(sel, pick);
            ++have[pick];
            --b;
            for (int j : M.covers[pick]) ++cov[j];
        }
        double cost = 0.0;
        for (const auto& [i, cnt] : sel) cost += M.cost[i] * cnt;
        if (cost < best_obj_ - kObjTol) set_incumbent(sel, cost);
    }

    // Subgradient ascent on the coverage multipliers; frozen afterwards.
    void tune_multipliers() {
        const int n = M.n_points();
        const int nc = M.n_vars();
        lambda_.assign(n, 0.0);
        std::vector<double> lam(n, 0.0), rho(nc), g(n);
        std::vector<std::pair<double, int>> neg;
        double best_L = 0.0;
        double theta = 2.0;
        int since_improve = 0;
        const int iters = nc > 0 ? 300 : 0;
        for (int it = 0; it < iters; ++it) {
            for (int i = 0; i < nc; ++i) {
                double r = M.cost[i];
                for (int j : M.covers[i]) r -= lam[j];
                rho[i] = r;
            }
            neg.clear();
            for (int i = 0; i < nc; ++i)
                if (rho[i] < 0.0) neg.emplace_back(rho[i], i);
            std::sort(neg.begin(), neg.end());
            double inner = 0.0;
            int b = M.budget;
            std::fill(g.begin(), g.end(), 0.0);
            for (int j = 0; j < n; ++j) g[j] = M.kappa[j];
            for (const auto& [r, i] : neg) {
                if (b == 0) break;
                const int take = std::min(M.ub[i], b);
                inner += r * take;
                b -= take;
                for (int j : M.covers[i]) g[j] -= take;
            }
            double L = inner;
            for (int j = 0; j < n; ++j) L += lam[j] * M.kappa[j];
            if (L > best_L) {
                best_L = L;
                lambda_ = lam;
                since_improve = 0;
            } else if (++since_improve >= 25) {
                theta *= 0.5;
                since_improve = 0;
                if (theta < 1e-4) break;
            }
            double gnorm = 0.0;
            for (int j = 0; j < n; ++j) gnorm += g[j] * g[j];
            if (gnorm <= 0.0) break;
            const double target =
                best_obj_ < kInf ? best_obj_ : best_L + std::max(1.0, std::abs(best_L));
            double step = theta * (target - L) / gnorm;
            if (!(step > 0.0)) step = theta * std::max(1.0, std::abs(L)) / gnorm;
            for (int j = 0; j < n; ++j) lam[j] = std::max(0.0, lam[j] + step * g[j]);
        }

        rho_.resize(nc);
        for (int i = 0; i < nc; ++i) {
            double r = M.cost[i];
            for (int j : M.covers[i]) r -= lambda_[j];
            rho_[i] = r;
        }
    }

    void build_neg_units() {
        neg_units_.clear();
        for (int i = 0; i < M.n_vars(); ++i)
            if (rho_[i] < 0.0)
                for (int u = 0; u < M.ub[i]; ++u) neg_units_.emplace_back(rho_[i], i);
        std::sort(neg_units_.begin(), neg_units_.end());
    }

    // Candidates that cannot appear in any improving cover, by reduced cost.
    void fix_by_reduced_cost() {
        if (!(best_obj_ < kInf)) return;
        for (int i = 0; i < M.n_vars(); ++i)
            if (rho_[i] > 0.0 && root_bound_ + rho_[i] >= best_obj_ - kObjTol)
                dead_[i] = 1;
    }

    // Lagrangian bound for a partial selection: committed cost, plus the
    // multiplier value of the remaining deficits, plus the best attainable
    // negative reduced-cost mass within the leftover budget.
    double node_bound(const std::vector<std::pair<int, int>>& sel, double cost,
                      int units) {
        double value = cost;
        cov_buf_.assign(M.n_points(), 0);
        for (const auto& [i, cnt] : sel)
            for (int j : M.covers[i]) cov_buf_[j] += cnt;
        for (int j = 0; j < M.n_points(); ++j) {
            const int d = M.kappa[j] - cov_buf_[j];
            if (d > 0) value += lambda_[j] * d;
        }
        int b = M.budget - units;
        if (b > 0 && !neg_units_.empty()) {
            skip_buf_.assign(sel.size(), 0);
            for (const auto& [r, i] : neg_units_) {
                if (b == 0) break;
                bool skipped = false;
                for (std::size_t s = 0; s < sel.size(); ++s) {
                    if (sel[s].first == i && skip_buf_[s] < sel[s].second) {
                        ++skip_buf_[s];
                        skipped = true;
                        break;
                    }
                }
                if (skipped) continue;
                value += r;
                --b;
            }
        }
        return value;
    }

    const CoverModel& M;
    SolveLimits limits_;

    std::vector<double> lambda_, rho_;
    std::vector<std::pair<double, int>> neg_units_;
    std::vector<std::vector<int>> packs_of_;
    std::vector<char> dead_;
    std::vector<int> cov_buf_, skip_buf_;
    int max_gain_ = 1;

    // The frontier starts as a best-first heap, which closes small models
    // quickly. When it outgrows kCompactAt even after dropping entries beaten
    // by the incumbent, the bound is too flat to prune breadth-first; the
    // frontier then becomes a stack and the search dives depth-first, which
    // keeps memory bounded and spends the remaining budget improving the
    // incumbent. The hard cap is a last-resort memory guard; hitting it ends
    // the search as a budget exhaustion, like time.
    static constexpr std::size_t kCompactAt = 1u << 17;
    static constexpr std::size_t kDiveAt = 1u << 16;
    static constexpr std::size_t kQueueCap = 600000;

    void push_node(Node&& node) {
        heap_.push_back(std::move(node));
        if (!dive_) std::push_heap(heap_.begin(), heap_.end(), NodeWorse{});
    }

    Node pop_node() {
        if (!dive_) std::pop_heap(heap_.begin(), heap_.end(), NodeWorse{});
        Node node = std::move(heap_.back());
        heap_.pop_back();
        return node;
    }

    void compact_frontier() {
        std::erase_if(heap_, [&](const Node& nd) {
            return nd.bound >= best_obj_ - kObjTol;
        });
        if (!dive_) {
            std::make_heap(heap_.begin(), heap_.end(), NodeWorse{});
            if (heap_.size() > kDiveAt) {
                dive_ = true;
                // deepest and tightest entries move to the top of the stack
                std::sort(heap_.begin(), heap_.end(), [](const Node& a, const Node& b) {
                    if (a.units != b.units) return a.units < b.units;
                    if (a.bound != b.bound) return a.bound > b.bound;
                    return a.seq > b.seq;
                });
            }
        }
        compact_next_ = std::max(kCompactAt, heap_.size() * 2);
    }

    double frontier_min() const {
        double b = kInf;
        for (const Node& nd : heap_) b = std::min(b, nd.bound);
        return b;
    }

    std::vector<Node> heap_;
    std::vector<Node> kids_;
    std::size_t compact_next_ = kCompactAt;
    bool dive_ = false;
    std::vector<char> excl_mark_;
    long long next_seq_ = 0;
    double best_obj_ = kInf;
    std::vector<std::pair<int, int>> best_sel_;
    double root_bound_ = 0.0;
};

} // namespace detail

// Exact minimization over a cover model. Deterministic: repeat calls explore
// the identical tree. `warm` (candidate, copies) pairs are verified against
// the rows before being adopted as the starting incumbent.
inline SolveResult solve_exact(const CoverModel& model, const SolveLimits& limits = {},
                               const std::vector<std::pair<int, int>>* warm = nullptr) {
    if (model.budget < 1) throw ValidationError("budget: must be >= 1");
    if (model.n_points() == 0) throw ValidationError("model: no points");

    CoverModel reduced;
    const detail::Reduction red = detail::reduce_model(model, reduced);

    std::vector<std::pair<int, int>> warm_mapped;
    if (warm) {
        std::vector<int> count(reduced.n_vars(), 0);
        std::vector<int> to_reduced(model.n_vars(), -1);
        for (int r = 0; r < reduced.n_vars(); ++r) to_reduced[red.keep[r]] = r;
        bool ok = true;
        for (const auto& [orig, cnt] : *warm) {
            if (orig < 0 || orig >= model.n_vars() || cnt < 0) { ok = false; break; }
            if (cnt == 0) continue;
            const int r = red.rep[orig];
            if (r < 0) continue;  // empty-cover candidate: dropping it is free
            count[to_reduced[r]] += cnt;
        }
        if (ok) {
            for (int i = 0; i < reduced.n_vars(); ++i) {
                if (count[i] == 0) continue;
                count[i] = std::min(count[i], reduced.ub[i]);
                warm_mapped.emplace_back(i, count[i]);
            }
        }
    }

    detail::BnbSolver solver(reduced, limits);
    SolveResult res = solver.run(warm ? &warm_mapped : nullptr);

    // report in the caller's candidate indexing
    for (auto& [i, cnt] : res.selected) i = red.keep[i];
    std::sort(res.selected.begin(), res.selected.end());
    return res;
}

} // namespace dcover

#endif
