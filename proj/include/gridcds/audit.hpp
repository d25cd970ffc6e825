#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gridcds/analysis.hpp"

namespace gridcds {

struct CheckResult {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    /// lhs - rhs; equality checks hold only at zero.
    std::int64_t slack = 0;
    bool holds = false;
    /// Precondition of the check is not met on this instance.
    bool skipped = false;
    /// The check must hold on this instance (unconditional mathematics, or
    /// a thin tree for the shape-dependent lemmas).
    bool asserted = false;
    std::string note;
};

struct AuditReport {
    GridDims dims;
    StructureStats stats;
    bool is_tree = false;
    bool has_2x2_block = false;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool thin_tree() const noexcept { return is_tree && !has_2x2_block; }
    /// nullptr when no check of that name exists.
    [[nodiscard]] const CheckResult* find(std::string_view name) const noexcept;
    /// Checks that are asserted, not skipped, and violated.
    [[nodiscard]] std::vector<const CheckResult*> asserted_violations() const;
};

// Check names, in report order.
namespace checks {
inline constexpr const char* handshake = "handshake";
inline constexpr const char* excess_ge_4 = "excess_ge_4";
inline constexpr const char* loss_lower = "loss_lower";
inline constexpr const char* param_bound1 = "param_bound1";
inline constexpr const char* param_bound2 = "param_bound2";
inline constexpr const char* param_bound3 = "param_bound3";
inline constexpr const char* joins_count = "joins_count";
inline constexpr const char* bends_count = "bends_count";
inline constexpr const char* identity = "identity";
inline constexpr const char* segment_span = "segment_span";
inline constexpr const char* main_theorem = "main_theorem";
}  // namespace checks

/// Evaluates every lemma-level inequality on a CDS. Violations are reported,
/// never thrown. Throws DomainError when S is not a CDS.
[[nodiscard]] AuditReport audit(const VertexSet& s);

enum class AuditSource { constructions, random, optimal };

[[nodiscard]] std::string_view to_string(AuditSource s) noexcept;

struct SweepOptions {
    int n_min = 4, n_max = 8;
    int m_min = 4, m_max = 8;
    bool constructions = true;
    bool random = true;
    bool optimal = true;
    int random_per_dims = 1;
    std::uint64_t seed = 1;
    std::size_t optimal_limit = 50;
    std::size_t brute_force_cells = 20;
    unsigned threads = 1;
};

struct SweepEntry {
    AuditSource source;
    std::string label;
    AuditReport report;
};

struct SweepCount {
    std::string check;
    AuditSource source;
    std::int64_t holds = 0;
    std::int64_t violations = 0;
    std::int64_t asserted_violations = 0;
    std::int64_t skipped = 0;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    std::vector<SweepCount> summary;
    std::vector<std::string> notices;
};

/// Audits D1/D2, normalized random CDSs and enumerated minimum CDSs over a
/// range of grids. Output order is deterministic regardless of thread count.
[[nodiscard]] SweepResult audit_sweep(const SweepOptions& opts);

[[nodiscard]] nlohmann::json to_json(const AuditReport& r);
/// check,source,holds,violations,asserted_violations,skipped
[[nodiscard]] std::string summary_csv(const SweepResult& r);

}  // namespace gridcds
