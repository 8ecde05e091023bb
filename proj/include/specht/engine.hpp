#pragma once

#include <condition_variable>
#include <iosfwd>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "specht/abacus.hpp"
#include "specht/branching.hpp"
#include "specht/partition.hpp"
#include "specht/schaper.hpp"

namespace specht {

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// [lo, hi] with hi possibly unbounded; solving only ever tightens.
struct Interval {
    int lo = 0;
    int hi = kUnbounded;

    bool determined() const { return lo == hi; }
    bool operator==(const Interval&) const = default;
    std::string to_string() const;
};

struct Assumption {
    int p = 2;
    Partition lambda;
    Partition mu;
    int value = 0;
};

// Lines "p; lambda; mu; value"; blank lines and '#' comments are skipped.
std::vector<Assumption> parse_assumptions(std::istream& in);
std::string assumption_to_string(const Assumption& a);

struct EngineConfig {
    int weight_cap = 4;
    int branch_depth = 1; // 0 disables the candidate search
    // residue sequences for the restriction test, beyond the defaults
    // (every single residue, then (p-1)^2 (p-2)^2 ... 0^2)
    std::vector<KleshchevSequence> extra_sequences;
    bool default_sequences = true;
    std::vector<int> rule_order = {0, 1, 2, 3, 4};
};

class DecompMatrix {
public:
    BlockId block;
    std::vector<Partition> rows; // every partition of the block, largest first
    std::vector<Partition> cols; // the p-regular ones
    std::vector<std::string> notes;

    int row_index(const Partition& la) const;
    int col_index(const Partition& mu) const;
    const Interval& at(int row, int col) const { return entries_[row * cols.size() + col]; }
    const Interval& at(const Partition& la, const Partition& mu) const;
    const std::vector<std::string>& provenance(int row, int col) const {
        return provenance_[row * cols.size() + col];
    }

    bool fully_determined() const;
    int undetermined_count() const;

    // TSV: header row of column labels, "." for zero, "lo..hi" when open.
    std::string to_tsv() const;

    friend class Engine;

private:
    std::vector<Interval> entries_;
    std::vector<std::vector<std::string>> provenance_;
    std::map<Partition, int> row_lookup_;
    std::map<Partition, int> col_lookup_;
};

struct CrossPrimeEntry {
    Partition lambda, mu;           // in the base block
    Partition lambda_plus, mu_plus; // after inserting the empty runners
    Interval left, right;
    enum Status { Equal, Unequal, Unverifiable } status = Unverifiable;
};

struct CrossPrimeReport {
    BlockId block;
    int p_prime = 0;
    bool hypothesis_holds = false; // p > w, the small-defect hypothesis
    std::vector<CrossPrimeEntry> entries;

    std::string to_string() const;
};

class Engine {
public:
    explicit Engine(EngineConfig config = {});

    const EngineConfig& config() const { return config_; }

    // Also records the conjugate-transported form of the assumption, which
    // pins the same number in the partner block.
    void add_assumption(const Assumption& a);
    const std::vector<Assumption>& assumptions() const { return assumptions_; }

    // Content-addressed TSV store keyed by block and assumption set.
    void set_cache_dir(std::string dir) { cache_dir_ = std::move(dir); }

    std::vector<Partition> enumerate_block(const BlockId& block) const;

    std::shared_ptr<const DecompMatrix> solve(const BlockId& block);

    // Entry lookup across blocks; zero when mu is outside lambda's block or
    // fails to dominate.
    Interval value(const Partition& la, const Partition& mu, int p);

    // Solve the block and its image under inserting p'-p empty runners (same
    // slots for every pair; default appends them). Entries are compared pair
    // by pair on the minimal shared display of each pair.
    CrossPrimeReport cross_prime_check(const BlockId& block, int p_prime,
                                       std::vector<int> slots = {});

private:
    struct Cell;
    struct Solver;
    friend struct Solver;

    std::shared_ptr<const DecompMatrix> compute_block(const BlockId& block);
    void offer_result(const BlockId& block, std::shared_ptr<const DecompMatrix> m);
    std::string cache_key(const BlockId& block) const;
    std::shared_ptr<const DecompMatrix> load_cached(const BlockId& block) const;
    void store_cached(const DecompMatrix& m) const;

    EngineConfig config_;
    std::vector<Assumption> assumptions_;
    std::string cache_dir_;
    std::mutex memo_mutex_;
    std::map<BlockId, std::shared_ptr<Cell>> memo_;
};

} // namespace specht
