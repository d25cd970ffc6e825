#include "gridcds/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "gridcds/analysis.hpp"
#include "gridcds/errors.hpp"

namespace gridcds {

std::string_view to_string(Engine e) noexcept {
    return e == Engine::brute_force ? "brute_force" : "frontier_dp";
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(const std::optional<std::chrono::duration<double>>& timeout)
        : start_(Clock::now()) {
        if (timeout) {
            limit_ = start_ + std::chrono::duration_cast<Clock::duration>(*timeout);
            armed_ = true;
        }
    }
    void check(const char* engine) const {
        if (armed_ && Clock::now() > limit_) {
            throw Timeout(std::string(engine) + ": timed out");
        }
    }
    [[nodiscard]] std::chrono::duration<double> elapsed() const { return Clock::now() - start_; }

private:
    Clock::time_point start_;
    Clock::time_point limit_{};
    bool armed_ = false;
};

void verify_witness(const SolveResult& r) {
    if (static_cast<std::int64_t>(r.witness.size()) != r.gamma_c || !is_cds(r.witness)) {
        throw std::logic_error(std::string(to_string(r.engine)) +
                               ": witness failed verification");
    }
}

// ---------------------------------------------------------------------------
// Brute force over row-major bitmasks.

class BitGrid {
public:
    explicit BitGrid(GridDims d) : d_(d) {
        const auto cells = d.cell_count();
        full_ = cells == 64 ? ~0ULL : ((1ULL << cells) - 1);
        for (int i = 0; i < d.n; ++i) {
            first_col_ |= 1ULL << (static_cast<unsigned>(i * d.m));
            last_col_ |= 1ULL << (static_cast<unsigned>(i * d.m + d.m - 1));
        }
    }

    // Closed neighbourhood of a cell mask.
    [[nodiscard]] std::uint64_t expand(std::uint64_t x) const {
        const auto m = static_cast<unsigned>(d_.m);
        std::uint64_t out = x;
        out |= (x & ~last_col_) << 1;
        out |= (x & ~first_col_) >> 1;
        out |= x << m;
        out |= x >> m;
        return out & full_;
    }

    [[nodiscard]] bool dominating(std::uint64_t s) const { return expand(s) == full_; }

    [[nodiscard]] bool connected(std::uint64_t s) const {
        if (s == 0) return false;
        std::uint64_t reach = s & (~s + 1);
        for (;;) {
            const std::uint64_t next = expand(reach) & s;
            if (next == reach) return reach == s;
            reach = next;
        }
    }

    [[nodiscard]] VertexSet to_set(std::uint64_t s) const {
        VertexSet out(d_);
        while (s) {
            out.insert(cell_at(static_cast<std::size_t>(std::countr_zero(s)), d_));
            s &= s - 1;
        }
        return out;
    }

private:
    GridDims d_;
    std::uint64_t full_ = 0;
    std::uint64_t first_col_ = 0;
    std::uint64_t last_col_ = 0;
};

// Visits k-subsets of {0..cells-1} in lexicographic order until `visit` returns false.
template <class Visit>
void for_each_combination(int cells, int k, std::uint64_t& nodes, const Deadline& deadline,
                          Visit&& visit) {
    std::array<int, 64> idx{};
    for (int a = 0; a < k; ++a) idx[static_cast<std::size_t>(a)] = a;
    std::uint64_t mask = k == 64 ? ~0ULL : ((1ULL << static_cast<unsigned>(k)) - 1);
    for (;;) {
        if ((++nodes & 0xFFFF) == 0) deadline.check("brute_force");
        if (!visit(mask)) return;
        int a = k - 1;
        while (a >= 0 && idx[static_cast<std::size_t>(a)] == cells - k + a) --a;
        if (a < 0) return;
        ++idx[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < k; ++b) {
            idx[static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(b - 1)] + 1;
        }
        mask = 0;
        for (int b = 0; b < k; ++b) mask |= 1ULL << static_cast<unsigned>(idx[static_cast<std::size_t>(b)]);
    }
}

void require_bruteforce_size(GridDims dims, const SolveOptions& opts) {
    const std::size_t limit = std::min<std::size_t>(opts.brute_force_cells, 64);
    if (dims.cell_count() > limit) {
        throw LimitExceeded("brute force limited to n*m <= " + std::to_string(limit) + ", got " +
                            std::to_string(dims.n) + "x" + std::to_string(dims.m));
    }
}

// ---------------------------------------------------------------------------
// Frontier DP.
//
// The working grid has `height` rows and is swept column by column, top to
// bottom. After cell (r, c) the frontier holds column c in rows <= r and
// column c-1 below. Each frontier cell is packed into four bits:
//   0      out, dominated
//   1      out, still needs a dominator (only its down or right cell can help)
//   2 + k  in S, connectivity class k
// Bit 63 records that a component already left the frontier; no further
// member may then be placed.

using Packed = std::uint64_t;

constexpr Packed kClosedBit = 1ULL << 63;
constexpr unsigned kOutDom = 0;
constexpr unsigned kOutNeed = 1;
constexpr unsigned kFirstClass = 2;

constexpr unsigned code_at(Packed s, int r) {
    return static_cast<unsigned>((s >> (4 * static_cast<unsigned>(r))) & 0xF);
}

constexpr Packed with_code(Packed s, int r, unsigned code) {
    const unsigned shift = 4 * static_cast<unsigned>(r);
    return (s & ~(Packed{0xF} << shift)) | (Packed{code} << shift);
}

constexpr bool is_member(unsigned code) { return code >= kFirstClass; }

// Relabels classes in order of first appearance.
Packed canonical(Packed s, int height) {
    std::array<unsigned, 16> relabel{};
    relabel.fill(0);
    unsigned next = kFirstClass;
    Packed out = s & kClosedBit;
    for (int r = 0; r < height; ++r) {
        unsigned code = code_at(s, r);
        if (is_member(code)) {
            if (relabel[code] == 0) relabel[code] = next++;
            code = relabel[code];
        }
        out |= Packed{code} << (4 * static_cast<unsigned>(r));
    }
    return out;
}

struct SweepGeometry {
    int height = 0;  // frontier size
    int length = 0;  // number of sweep columns
    bool transposed = false;

    // Working (row, column), 0-based, to a 1-based cell of the original grid.
    [[nodiscard]] Vertex original(int r, int c) const {
        return transposed ? Vertex{c + 1, r + 1} : Vertex{r + 1, c + 1};
    }
};

// Successor of `s` after deciding working cell (r, c); nullopt when the choice
// is infeasible.
std::optional<Packed> step(Packed s, int r, int c, bool take, const SweepGeometry& g) {
    const bool last_column = c == g.length - 1;
    const unsigned up = r > 0 ? code_at(s, r - 1) : kOutDom;
    const unsigned left = code_at(s, r);  // departing cell (r, c-1)

    if (!take) {
        if (left == kOutNeed) return std::nullopt;
        if (is_member(left)) {
            bool survives = false;
            bool others = false;
            for (int q = 0; q < g.height; ++q) {
                if (q == r) continue;
                const unsigned code = code_at(s, q);
                survives = survives || code == left;
                others = others || is_member(code);
            }
            if (!survives) {
                // The departing class is complete; it must be the only component.
                if (others) return std::nullopt;
                s |= kClosedBit;
            }
        }
        if (last_column && up == kOutNeed) return std::nullopt;
        const bool dominated = is_member(up) || is_member(left);
        if (!dominated && last_column && r == g.height - 1) return std::nullopt;
        return with_code(s, r, dominated ? kOutDom : kOutNeed);
    }

    if (s & kClosedBit) return std::nullopt;
    constexpr unsigned kFresh = 15;
    Packed out = with_code(s, r, kFresh);
    auto merge = [&](unsigned from) {
        for (int q = 0; q < g.height; ++q) {
            if (code_at(out, q) == from) out = with_code(out, q, kFresh);
        }
    };
    if (is_member(left)) merge(left);
    if (is_member(up)) {
        merge(up);
    } else if (r > 0 && up == kOutNeed) {
        out = with_code(out, r - 1, kOutDom);
    }
    return canonical(out, g.height);
}

bool accepting(Packed s, int height) {
    if (s & kClosedBit) {
        for (int r = 0; r < height; ++r) {
            if (code_at(s, r) == kOutNeed) return false;
        }
        return true;
    }
    bool member = false;
    for (int r = 0; r < height; ++r) {
        const unsigned code = code_at(s, r);
        if (code == kOutNeed || code > kFirstClass) return false;
        member = member || code == kFirstClass;
    }
    return member;
}

struct Candidate {
    Packed key;
    std::uint32_t cost;
    std::uint32_t pred_rank;
    std::uint32_t pred_index;
    std::uint8_t choice_order;  // 0 = take (preferred), 1 = skip

    [[nodiscard]] auto order() const {
        return std::tie(key, cost, pred_rank, choice_order);
    }
};

struct Layer {
    std::vector<Packed> keys;
    std::vector<std::uint32_t> cost;
    std::vector<std::uint32_t> rank;
};

void expand_range(const Layer& layer, std::size_t begin, std::size_t end, int r, int c,
                  const SweepGeometry& g, std::vector<Candidate>& out) {
    for (std::size_t idx = begin; idx < end; ++idx) {
        for (std::uint8_t order : {std::uint8_t{0}, std::uint8_t{1}}) {
            const bool take = order == 0;
            if (auto next = step(layer.keys[idx], r, c, take, g)) {
                out.push_back(Candidate{*next, layer.cost[idx] + (take ? 1U : 0U),
                                        layer.rank[idx], static_cast<std::uint32_t>(idx), order});
            }
        }
    }
}

}  // namespace

SolveResult solve_bruteforce(GridDims dims, const SolveOptions& opts) {
    require_bruteforce_size(dims, opts);
    const Deadline deadline(opts.timeout);
    const BitGrid bits(dims);
    const int cells = static_cast<int>(dims.cell_count());

    SolveResult result;
    result.dims = dims;
    result.engine = Engine::brute_force;
    std::uint64_t nodes = 0;
    for (int k = 1; k <= cells; ++k) {
        std::uint64_t found = 0;
        for_each_combination(cells, k, nodes, deadline, [&](std::uint64_t s) {
            if (bits.dominating(s) && bits.connected(s)) {
                found = s;
                return false;
            }
            return true;
        });
        if (found) {
            result.gamma_c = k;
            result.witness = bits.to_set(found);
            break;
        }
    }
    result.stats.states_or_nodes = nodes;
    result.stats.elapsed = deadline.elapsed();
    verify_witness(result);
    return result;
}

std::vector<VertexSet> enumerate_min_cds(GridDims dims, std::size_t limit,
                                         const SolveOptions& opts) {
    const SolveResult best = solve_bruteforce(dims, opts);
    const Deadline deadline(opts.timeout);
    const BitGrid bits(dims);
    std::vector<VertexSet> out;
    if (limit == 0) return out;
    std::uint64_t nodes = 0;
    for_each_combination(static_cast<int>(dims.cell_count()), static_cast<int>(best.gamma_c),
                         nodes, deadline, [&](std::uint64_t s) {
                             if (bits.dominating(s) && bits.connected(s)) {
                                 out.push_back(bits.to_set(s));
                             }
                             return out.size() < limit;
                         });
    return out;
}

SolveResult solve_dp(GridDims dims, const SolveOptions& opts) {
    SweepGeometry g;
    g.transposed = dims.m <= dims.n;
    g.height = g.transposed ? dims.m : dims.n;
    g.length = g.transposed ? dims.n : dims.m;
    const int limit = std::min(opts.frontier_limit, kMaxFrontier);
    if (g.height > limit) {
        throw LimitExceeded("frontier DP limited to min(n,m) <= " + std::to_string(limit) +
                            " (frontier limit), got " + std::to_string(dims.n) + "x" +
                            std::to_string(dims.m));
    }
    const Deadline deadline(opts.timeout);
    unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
    threads = std::max(1U, threads);

    Layer layer;
    layer.keys = {0};
    layer.cost = {0};
    layer.rank = {0};
    // back[t][idx]: (predecessor index << 1) | took, for the state idx after cell t.
    std::vector<std::vector<std::uint32_t>> back;
    back.reserve(dims.cell_count());
    std::uint64_t states = 1;

    std::vector<std::vector<Candidate>> buckets(threads);
    std::vector<Candidate> all;
    for (int c = 0; c < g.length; ++c) {
        for (int r = 0; r < g.height; ++r) {
            deadline.check("frontier_dp");
            const std::size_t count = layer.keys.size();
            const std::size_t workers =
                count < 4096 ? 1 : std::min<std::size_t>(threads, count / 1024);
            if (workers <= 1) {
                buckets[0].clear();
                expand_range(layer, 0, count, r, c, g, buckets[0]);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                for (std::size_t w = 0; w < workers; ++w) {
                    const std::size_t begin = count * w / workers;
                    const std::size_t end = count * (w + 1) / workers;
                    pool.emplace_back([&, w, begin, end] {
                        buckets[w].clear();
                        expand_range(layer, begin, end, r, c, g, buckets[w]);
                    });
                }
                for (auto& t : pool) t.join();
            }
            all.clear();
            for (std::size_t w = 0; w < std::max<std::size_t>(workers, 1); ++w) {
                all.insert(all.end(), buckets[w].begin(), buckets[w].end());
            }
            std::sort(all.begin(), all.end(),
                      [](const Candidate& a, const Candidate& b) { return a.order() < b.order(); });

            Layer next;
            std::vector<std::uint32_t> links;
            std::vector<std::uint64_t> lex;  // (pred_rank, choice) of each kept state
            for (std::size_t k = 0; k < all.size(); ++k) {
                if (k > 0 && all[k].key == all[k - 1].key) continue;
                const Candidate& best = all[k];
                next.keys.push_back(best.key);
                next.cost.push_back(best.cost);
                links.push_back((best.pred_index << 1) | (best.choice_order == 0 ? 1U : 0U));
                lex.push_back((std::uint64_t{best.pred_rank} << 1) | best.choice_order);
            }
            if (next.keys.size() >= (std::size_t{1} << 31)) {
                throw LimitExceeded("frontier DP state count exceeds 2^31");
            }
            std::vector<std::uint32_t> order(next.keys.size());
            for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
            std::sort(order.begin(), order.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return lex[a] < lex[b]; });
            next.rank.assign(order.size(), 0);
            for (std::uint32_t pos = 0; pos < order.size(); ++pos) next.rank[order[pos]] = pos;

            states += next.keys.size();
            back.push_back(std::move(links));
            layer = std::move(next);
        }
    }

    std::optional<std::size_t> winner;
    for (std::size_t k = 0; k < layer.keys.size(); ++k) {
        if (!accepting(layer.keys[k], g.height)) continue;
        if (!winner || layer.cost[k] < layer.cost[*winner] ||
            (layer.cost[k] == layer.cost[*winner] && layer.rank[k] < layer.rank[*winner])) {
            winner = k;
        }
    }
    if (!winner) throw std::logic_error("frontier_dp: no accepting state");

    SolveResult result;
    result.dims = dims;
    result.engine = Engine::frontier_dp;
    result.gamma_c = layer.cost[*winner];
    result.witness = VertexSet(dims);
    std::size_t idx = *winner;
    for (std::size_t t = back.size(); t-- > 0;) {
        const std::uint32_t link = back[t][idx];
        if (link & 1U) {
            const int c = static_cast<int>(t) / g.height;
            const int r = static_cast<int>(t) % g.height;
            result.witness.insert(g.original(r, c));
        }
        idx = link >> 1;
    }
    result.stats.states_or_nodes = states;
    result.stats.elapsed = deadline.elapsed();
    verify_witness(result);
    return result;
}

SolveResult solve_auto(GridDims dims, const SolveOptions& opts) {
    if (dims.cell_count() <= std::min<std::size_t>(opts.brute_force_cells, 64)) {
        return solve_bruteforce(dims, opts);
    }
    return solve_dp(dims, opts);
}

int frontier_limit_from_env() {
    const char* raw = std::getenv("GRIDCDS_FRONTIER_LIMIT");
    if (raw == nullptr || *raw == '\0') return kDefaultFrontierLimit;
    try {
        std::size_t used = 0;
        const int value = std::stoi(raw, &used);
        if (used != std::string(raw).size() || value < 1) throw std::invalid_argument(raw);
        return value;
    } catch (const std::exception&) {
        throw InputError(std::string("GRIDCDS_FRONTIER_LIMIT must be a positive integer, got \"") +
                         raw + "\"");
    }
}

nlohmann::json to_json(const SolveResult& r) {
    return {{"status", "solved"},
            {"n", r.dims.n},
            {"m", r.dims.m},
            {"gamma_c", r.gamma_c},
            {"engine", std::string(to_string(r.engine))},
            {"stats",
             {{"states_or_nodes", r.stats.states_or_nodes},
              {"elapsed_seconds", r.stats.elapsed.count()}}},
            {"witness", to_json(r.witness)}};
}

}  // namespace gridcds
