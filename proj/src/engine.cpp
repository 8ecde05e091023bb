#include "specht/engine.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "specht/reductions.hpp"

namespace specht {

std::string Interval::to_string() const {
    if (determined())
        return std::to_string(lo);
    return std::to_string(lo) + ".." + (hi == kUnbounded ? "inf" : std::to_string(hi));
}

std::string assumption_to_string(const Assumption& a) {
    return std::to_string(a.p) + "; " + a.lambda.to_string() + "; " + a.mu.to_string() +
           "; " + std::to_string(a.value);
}

std::vector<Assumption> parse_assumptions(std::istream& in) {
    std::vector<Assumption> out;
    std::string line;
    auto trim = [](std::string s) {
        auto from = s.find_first_not_of(" \t\r");
        auto to = s.find_last_not_of(" \t\r");
        return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
    };
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            auto semi = line.find(';', start);
            fields.push_back(trim(line.substr(start, semi - start)));
            if (semi == std::string::npos)
                break;
            start = semi + 1;
        }
        if (fields.size() != 4)
            throw parse_error("assumption line needs \"p; lambda; mu; value\": " + line);
        Assumption a;
        a.p = std::stoi(fields[0]);
        a.lambda = Partition::parse(fields[1]);
        a.mu = Partition::parse(fields[2]);
        a.value = std::stoi(fields[3]);
        out.push_back(std::move(a));
    }
    return out;
}

int DecompMatrix::row_index(const Partition& la) const {
    auto it = row_lookup_.find(la);
    return it == row_lookup_.end() ? -1 : it->second;
}

int DecompMatrix::col_index(const Partition& mu) const {
    auto it = col_lookup_.find(mu);
    return it == col_lookup_.end() ? -1 : it->second;
}

const Interval& DecompMatrix::at(const Partition& la, const Partition& mu) const {
    int r = row_index(la), c = col_index(mu);
    if (r < 0 || c < 0)
        throw error("entry (" + la.to_string() + ", " + mu.to_string() +
                    ") is outside block " + block.to_string());
    return at(r, c);
}

bool DecompMatrix::fully_determined() const {
    return undetermined_count() == 0;
}

int DecompMatrix::undetermined_count() const {
    int open = 0;
    for (const auto& e : entries_)
        if (!e.determined())
            ++open;
    return open;
}

std::string DecompMatrix::to_tsv() const {
    std::string out = "# block\tp=" + std::to_string(block.p) + "\tcore=" +
                      block.core.to_string() + "\tweight=" + std::to_string(block.weight) +
                      "\n";
    out += "lambda\\mu";
    for (const auto& mu : cols) {
        out += '\t';
        out += mu.to_string();
    }
    out += '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += rows[i].to_string();
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Interval& e = at(static_cast<int>(i), static_cast<int>(j));
            out += '\t';
            if (e == Interval{0, 0})
                out += '.';
            else
                out += e.to_string();
        }
        out += '\n';
    }
    return out;
}

std::string CrossPrimeReport::to_string() const {
    std::string out = "# cross-prime\t" + block.to_string() + "\tp'=" +
                      std::to_string(p_prime) + "\thypothesis p>w: " +
                      (hypothesis_holds ? "holds" : "fails") + "\n";
    out += "lambda\tmu\tlambda+\tmu+\tvalue\tvalue+\tstatus\n";
    for (const auto& e : entries) {
        out += e.lambda.to_string() + '\t' + e.mu.to_string() + '\t' +
               e.lambda_plus.to_string() + '\t' + e.mu_plus.to_string() + '\t' +
               e.left.to_string() + '\t' + e.right.to_string() + '\t';
        switch (e.status) {
        case CrossPrimeEntry::Equal: out += "equal"; break;
        case CrossPrimeEntry::Unequal: out += "UNEQUAL"; break;
        case CrossPrimeEntry::Unverifiable: out += "unverifiable"; break;
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------

struct Engine::Cell {
    std::mutex m;
    std::condition_variable cv;
    bool done = false;
    bool running = false;
    std::thread::id owner;
    std::shared_ptr<const DecompMatrix> result;
    std::exception_ptr failure;
};

Engine::Engine(EngineConfig config) : config_(std::move(config)) {}

void Engine::add_assumption(const Assumption& a) {
    assumptions_.push_back(a);
    // the conjugate-transported statement pins the same number
    try {
        Assumption image;
        image.p = a.p;
        image.lambda = conjugate(a.lambda);
        image.mu = mullineux(a.mu, a.p);
        image.value = a.value;
        if (image.lambda != a.lambda || image.mu != a.mu)
            assumptions_.push_back(std::move(image));
    } catch (const not_regular_error&) {
        // no transported form
    }
}

std::vector<Partition> Engine::enumerate_block(const BlockId& block) const {
    if (block.weight > config_.weight_cap)
        throw weight_cap_error("block weight " + std::to_string(block.weight) +
                               " exceeds cap " + std::to_string(config_.weight_cap));
    if (block.weight < 0 || p_core(block.core, block.p) != block.core)
        throw error("not a block id: " + block.to_string());

    int b = block_bead_count(block);
    auto core_display = Abacus::from_partition(block.core, b, block.p);
    std::vector<std::vector<int>> runner_rows(block.p);
    for (int pos : core_display.beads())
        runner_rows[core_display.runner_of(pos) - 1].push_back(core_display.row_of(pos));

    std::vector<Partition> out;
    std::vector<std::vector<int>> quotient(block.p);
    std::function<void(int, int)> assign = [&](int runner, int remaining) {
        if (runner == block.p) {
            if (remaining != 0)
                return;
            std::set<int> beads;
            for (int r = 0; r < block.p; ++r) {
                auto rows = runner_rows[r];
                std::sort(rows.rbegin(), rows.rend());
                const auto& q = quotient[r];
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    int down = k < q.size() ? q[k] : 0;
                    beads.insert((rows[k] + down - 1) * block.p + (r + 1));
                }
            }
            out.push_back(
                Abacus(block.p, std::vector<int>(beads.begin(), beads.end())).to_partition());
            return;
        }
        for (int share = 0; share <= remaining; ++share) {
            for (const auto& q : partitions_of(share)) {
                if (q.rows() > static_cast<int>(runner_rows[runner].size()))
                    continue;
                quotient[runner] = q.parts();
                assign(runner + 1, remaining - share);
            }
        }
        quotient[runner].clear();
    };
    assign(0, block.weight);

    std::sort(out.begin(), out.end(), listed_before);
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw error("duplicate partition enumerating " + block.to_string());
    return out;
}

Interval Engine::value(const Partition& la, const Partition& mu, int p) {
    if (la == mu)
        return {1, 1};
    BlockId bl = block_id(la, p);
    if (block_id(mu, p) != bl || !dominates(mu, la))
        return {0, 0};
    if (!is_p_regular(mu, p))
        throw error("value() asked for a singular column " + mu.to_string());
    auto m = solve(bl);
    return m->at(la, mu);
}

std::shared_ptr<const DecompMatrix> Engine::solve(const BlockId& block) {
    std::shared_ptr<Cell> cell;
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto& slot = memo_[block];
        if (!slot)
            slot = std::make_shared<Cell>();
        cell = slot;
    }
    std::unique_lock<std::mutex> lock(cell->m);
    while (true) {
        if (cell->done) {
            if (cell->failure)
                std::rethrow_exception(cell->failure);
            return cell->result;
        }
        if (!cell->running)
            break;
        if (cell->owner == std::this_thread::get_id())
            throw error("cyclic block dependency at " + block.to_string());
        cell->cv.wait(lock);
    }
    cell->running = true;
    cell->owner = std::this_thread::get_id();
    lock.unlock();

    std::shared_ptr<const DecompMatrix> result;
    std::exception_ptr failure;
    try {
        result = compute_block(block);
    } catch (...) {
        failure = std::current_exception();
    }

    lock.lock();
    cell->running = false;
    cell->done = true;
    cell->result = result;
    cell->failure = failure;
    cell->cv.notify_all();
    if (failure)
        std::rethrow_exception(failure);
    return result;
}

void Engine::offer_result(const BlockId& block, std::shared_ptr<const DecompMatrix> m) {
    std::shared_ptr<Cell> cell;
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto& slot = memo_[block];
        if (!slot)
            slot = std::make_shared<Cell>();
        cell = slot;
    }
    std::lock_guard<std::mutex> lock(cell->m);
    if (!cell->done && !cell->running) {
        cell->done = true;
        cell->result = std::move(m);
    }
}

// ---------------------------------------------------------------------------
// joint constraint system over a block and its conjugate partner

struct Engine::Solver {
    Engine& eng;
    int p;

    // one pane per block; conjugate pairs are solved together so information
    // flows through the conjugation/Mullineux symmetry in both directions
    struct Pane {
        BlockId block;
        std::vector<Partition> rows, cols;
        std::map<Partition, int> row_idx, col_idx;
        std::vector<Interval> w;
        std::vector<std::vector<std::string>> prov;
        int C = 0;

        std::vector<std::vector<std::vector<NodeCoord>>> row_removable; // [row][res]
        struct ColRes {
            int normal_count = 0;
            Partition removed;
            bool removed_regular = false;
        };
        std::vector<std::vector<ColRes>> col_res;
        std::vector<int> col_row;
        std::vector<bool> row_regular;
        std::vector<Partition> row_conj;
        std::vector<Partition> col_mull;
        std::vector<int> mirror_row; // index of conjugate(rows[i]) in the partner
        std::vector<int> mirror_col; // index of mullineux(cols[j]) in the partner
        std::vector<std::optional<std::vector<std::pair<int, long long>>>> schaper;
    };
    std::vector<Pane> panes;
    bool self_paired = false; // single pane with a self-conjugate core
    bool changed = false;
    std::map<std::pair<Partition, Partition>, Interval> child_cache;

    Solver(Engine& engine, int prime) : eng(engine), p(prime) {}

    Interval& at(Pane& pane, int i, int j) { return pane.w[i * pane.C + j]; }

    void tighten(Pane& pane, int i, int j, int lo, int hi, const std::string& why) {
        Interval& e = at(pane, i, j);
        int nlo = std::max(e.lo, lo);
        int nhi = std::min(e.hi, hi);
        if (nlo > nhi)
            throw inconsistent_error("[" + pane.rows[i].to_string() + " : " +
                                     pane.cols[j].to_string() + "] in " +
                                     pane.block.to_string() + " tightened to (" +
                                     std::to_string(nlo) + "," + std::to_string(nhi) +
                                     ") by " + why);
        if (nlo != e.lo || nhi != e.hi) {
            e.lo = nlo;
            e.hi = nhi;
            pane.prov[i * pane.C + j].push_back(why);
            changed = true;
        }
    }

    std::optional<Interval> child(const Partition& la, const Partition& mu) {
        auto key = std::make_pair(la, mu);
        auto it = child_cache.find(key);
        if (it != child_cache.end())
            return it->second;
        Interval v;
        try {
            v = eng.value(la, mu, p);
        } catch (const weight_cap_error&) {
            return std::nullopt;
        }
        child_cache.emplace(std::move(key), v);
        return v;
    }

    void init_pane(Pane& pane, const BlockId& block) {
        pane.block = block;
        pane.rows = eng.enumerate_block(block);
        for (const auto& la : pane.rows)
            if (is_p_regular(la, p))
                pane.cols.push_back(la);
        pane.C = static_cast<int>(pane.cols.size());
        for (std::size_t i = 0; i < pane.rows.size(); ++i)
            pane.row_idx[pane.rows[i]] = static_cast<int>(i);
        for (int j = 0; j < pane.C; ++j)
            pane.col_idx[pane.cols[j]] = j;

        pane.w.assign(pane.rows.size() * pane.cols.size(), Interval{});
        pane.prov.assign(pane.w.size(), {});
        for (std::size_t i = 0; i < pane.rows.size(); ++i)
            for (int j = 0; j < pane.C; ++j) {
                if (pane.rows[i] == pane.cols[j])
                    at(pane, static_cast<int>(i), j) = {1, 1};
                else if (!dominates(pane.cols[j], pane.rows[i]))
                    at(pane, static_cast<int>(i), j) = {0, 0};
            }

        pane.row_removable.resize(pane.rows.size());
        pane.row_regular.resize(pane.rows.size());
        pane.row_conj.resize(pane.rows.size());
        for (std::size_t i = 0; i < pane.rows.size(); ++i) {
            pane.row_removable[i].resize(p);
            for (int r = 0; r < p; ++r)
                pane.row_removable[i][r] = node_signature(pane.rows[i], r, p).removable;
            pane.row_regular[i] = is_p_regular(pane.rows[i], p);
            pane.row_conj[i] = conjugate(pane.rows[i]);
        }
        pane.col_res.resize(pane.C);
        pane.col_row.resize(pane.C);
        pane.col_mull.resize(pane.C);
        for (int j = 0; j < pane.C; ++j) {
            pane.col_res[j].resize(p);
            for (int r = 0; r < p; ++r) {
                auto sig = node_signature(pane.cols[j], r, p);
                auto& cr = pane.col_res[j][r];
                cr.normal_count = static_cast<int>(sig.normal.size());
                if (cr.normal_count > 0) {
                    cr.removed = remove_nodes(pane.cols[j], sig.normal);
                    cr.removed_regular = is_p_regular(cr.removed, p);
                }
            }
            pane.col_row[j] = pane.row_idx.at(pane.cols[j]);
            pane.col_mull[j] = mullineux(pane.cols[j], p);
        }
        pane.schaper.assign(pane.rows.size(), std::nullopt);

        for (const auto& a : eng.assumptions_) {
            if (a.p != p)
                continue;
            auto ri = pane.row_idx.find(a.lambda);
            auto ci = pane.col_idx.find(a.mu);
            if (ri != pane.row_idx.end() && ci != pane.col_idx.end())
                tighten(pane, ri->second, ci->second, a.value, a.value, "assumption");
        }
    }

    void link_mirrors() {
        for (std::size_t t = 0; t < panes.size(); ++t) {
            Pane& pane = panes[t];
            Pane& other = panes[self_paired ? t : 1 - t];
            pane.mirror_row.resize(pane.rows.size());
            pane.mirror_col.resize(pane.C);
            for (std::size_t i = 0; i < pane.rows.size(); ++i)
                pane.mirror_row[i] = other.row_idx.at(pane.row_conj[i]);
            for (int j = 0; j < pane.C; ++j)
                pane.mirror_col[j] = other.col_idx.at(pane.col_mull[j]);
        }
    }

    const std::vector<std::pair<int, long long>>& schaper_terms(Pane& pane, int i) {
        if (!pane.schaper[i]) {
            std::vector<std::pair<int, long long>> terms;
            auto sum = schaper_sum(pane.rows[i], p);
            for (const auto& [nu, a] : sum.terms()) {
                auto it = pane.row_idx.find(nu);
                if (it == pane.row_idx.end())
                    throw error("hook-pair term " + nu.to_string() + " escapes block " +
                                pane.block.to_string());
                if (it->second >= i)
                    throw error("hook-pair term fails to dominate in " +
                                pane.block.to_string());
                terms.emplace_back(it->second, a);
            }
            pane.schaper[i] = std::move(terms);
        }
        return *pane.schaper[i];
    }

    void rule_prop21(Pane& pane) {
        for (std::size_t i = 0; i < pane.rows.size(); ++i)
            for (int j = 0; j < pane.C; ++j) {
                Interval& e = at(pane, static_cast<int>(i), j);
                if (e.determined() && e.lo == 0)
                    continue;
                for (int r = 0; r < p; ++r) {
                    const auto& cr = pane.col_res[j][r];
                    if (cr.normal_count == 0)
                        continue;
                    int removable = static_cast<int>(pane.row_removable[i][r].size());
                    if (removable < cr.normal_count) {
                        tighten(pane, static_cast<int>(i), j, 0, 0,
                                "P2.1(r=" + std::to_string(r) + ")=0");
                        break;
                    }
                    if (removable > cr.normal_count || !cr.removed_regular)
                        continue;
                    Partition la_bar = remove_nodes(pane.rows[i], pane.row_removable[i][r]);
                    if (auto v = child(la_bar, cr.removed)) {
                        tighten(pane, static_cast<int>(i), j, v->lo, v->hi,
                                "P2.1(r=" + std::to_string(r) + ")");
                        if (at(pane, static_cast<int>(i), j).determined())
                            break;
                    }
                }
            }
    }

    void rule_schaper(Pane& pane) {
        for (std::size_t i = 0; i < pane.rows.size(); ++i) {
            bool open_row = false;
            for (int j = 0; j < pane.C && !open_row; ++j)
                open_row = !at(pane, static_cast<int>(i), j).determined();
            if (!open_row)
                continue;
            const auto& terms = schaper_terms(pane, static_cast<int>(i));
            for (int j = 0; j < pane.C; ++j) {
                if (pane.col_row[j] == static_cast<int>(i))
                    continue; // the head factor never shows up in the sum
                long long m_lo = 0, m_hi = 0;
                bool hi_unbounded = false, lo_unbounded = false;
                for (const auto& [ri, a] : terms) {
                    const Interval& t = at(pane, ri, j);
                    if (a > 0) {
                        m_lo += a * static_cast<long long>(t.lo);
                        if (t.hi == kUnbounded)
                            hi_unbounded = true;
                        else
                            m_hi += a * static_cast<long long>(t.hi);
                    } else {
                        m_hi += a * static_cast<long long>(t.lo);
                        if (t.hi == kUnbounded)
                            lo_unbounded = true;
                        else
                            m_lo += a * static_cast<long long>(t.hi);
                    }
                }
                if (lo_unbounded)
                    m_lo = 0;
                m_lo = std::max<long long>(m_lo, 0);
                // multiplicity m in the rewritten sum: at least min(m,1), at most m
                if (m_lo >= 1)
                    tighten(pane, static_cast<int>(i), j, 1, kUnbounded, "R2>=1");
                if (!hi_unbounded) {
                    int cap = static_cast<int>(std::min<long long>(m_hi, kUnbounded - 1));
                    tighten(pane, static_cast<int>(i), j, 0, cap, "R2<=" + std::to_string(cap));
                }
            }
        }
    }

    void rule3(Pane& pane) {
        for (std::size_t i = 0; i < pane.rows.size(); ++i)
            for (int j = 0; j < pane.C; ++j) {
                Interval& e = at(pane, static_cast<int>(i), j);
                if (e.determined())
                    continue;
                for (int r = 0; r < p; ++r) {
                    const auto& cr = pane.col_res[j][r];
                    if (cr.normal_count == 0 || !cr.removed_regular)
                        continue;
                    const auto& rem = pane.row_removable[i][r];
                    int k = cr.normal_count;
                    if (static_cast<int>(rem.size()) <= k)
                        continue; // the equality and zero cases live in P2.1
                    long long bound = 0;
                    bool unbounded = false;
                    std::set<Partition> omega;
                    std::vector<int> pick(k);
                    std::function<void(int, int)> combos = [&](int next, int depth) {
                        if (depth == k) {
                            std::vector<NodeCoord> chosen;
                            for (int t = 0; t < k; ++t)
                                chosen.push_back(rem[pick[t]]);
                            omega.insert(remove_nodes(pane.rows[i], chosen));
                            return;
                        }
                        for (int t = next; t <= static_cast<int>(rem.size()) - (k - depth);
                             ++t) {
                            pick[depth] = t;
                            combos(t + 1, depth + 1);
                        }
                    };
                    combos(0, 0);
                    for (const auto& om : omega) {
                        auto v = child(om, cr.removed);
                        if (!v || v->hi == kUnbounded) {
                            unbounded = true;
                            break;
                        }
                        bound += v->hi;
                    }
                    if (!unbounded)
                        tighten(pane, static_cast<int>(i), j, 0,
                                static_cast<int>(std::min<long long>(bound, kUnbounded - 1)),
                                "R3(r=" + std::to_string(r) + ")");
                }
            }
    }

    std::optional<Interval> product(const Partition& la1, const Partition& mu1,
                                    const Partition& la2, const Partition& mu2) {
        auto a = child(la1, mu1);
        if (!a)
            return std::nullopt;
        if (a->lo == 0 && a->hi == 0)
            return Interval{0, 0};
        auto b = child(la2, mu2);
        if (!b)
            return std::nullopt;
        if (b->lo == 0 && b->hi == 0)
            return Interval{0, 0};
        Interval r;
        r.lo = a->lo * b->lo;
        if (a->hi == kUnbounded || b->hi == kUnbounded)
            r.hi = kUnbounded;
        else {
            long long h = static_cast<long long>(a->hi) * b->hi;
            r.hi = static_cast<int>(std::min<long long>(h, kUnbounded));
        }
        return r;
    }

    void rule_removals(Pane& pane) {
        for (std::size_t i = 0; i < pane.rows.size(); ++i)
            for (int j = 0; j < pane.C; ++j) {
                Interval& e = at(pane, static_cast<int>(i), j);
                if (e.determined())
                    continue;
                const Partition& la = pane.rows[i];
                const Partition& mu = pane.cols[j];
                if (auto pair = row_removal(la, mu))
                    if (auto v = child(pair->first, pair->second))
                        tighten(pane, static_cast<int>(i), j, v->lo, v->hi, "R4");
                if (auto pair = column_removal(la, mu))
                    if (auto v = child(pair->first, pair->second))
                        tighten(pane, static_cast<int>(i), j, v->lo, v->hi, "R5");
                auto donkin = [&](const Partition& a, const Partition& b, int s_from,
                                  const char* tag) {
                    int limit = std::min(a.rows(), b.rows());
                    long long pa = 0, pb = 0;
                    for (int s = 1; s <= limit; ++s) {
                        pa += a.part(s);
                        pb += b.part(s);
                        if (s < s_from || pa != pb)
                            continue;
                        if (s >= std::max(a.rows(), b.rows()))
                            break;
                        DonkinSplit split = donkin_split(a, b, s);
                        if (!is_p_regular(split.head.second, p) ||
                            !is_p_regular(split.tail.second, p))
                            continue;
                        auto v = product(split.head.first, split.head.second,
                                         split.tail.first, split.tail.second);
                        if (v)
                            tighten(pane, static_cast<int>(i), j, v->lo, v->hi,
                                    std::string(tag) + "(s=" + std::to_string(s) + ")");
                    }
                };
                donkin(la, mu, 2, "Dk");
                donkin(pane.row_conj[i], pane.col_mull[j], 1, "Dk'");
            }
    }

    // conjugation/Mullineux symmetry between the panes (or within a
    // self-conjugate pane)
    void sync_mirrors() {
        for (std::size_t t = 0; t < panes.size(); ++t) {
            Pane& pane = panes[t];
            Pane& other = panes[self_paired ? t : 1 - t];
            for (std::size_t i = 0; i < pane.rows.size(); ++i)
                for (int j = 0; j < pane.C; ++j) {
                    Interval v = at(other, pane.mirror_row[i], pane.mirror_col[j]);
                    tighten(pane, static_cast<int>(i), j, v.lo, v.hi, "R7");
                }
        }
    }

    // ---- Rule 6: candidate search over an open entry -----------------------

    enum class Restriction { Clean, Negative, Inconclusive };

    // restriction sequences for a target column: every single residue, the
    // doubled descending cycles, and greedy normal-node chains of the column
    std::vector<KleshchevSequence> sequences_for(const Partition& kappa) const {
        std::vector<KleshchevSequence> seqs;
        if (eng.config_.default_sequences) {
            for (int r = 0; r < p; ++r)
                seqs.push_back({{r, 1}});
            for (int start = 0; start < p; ++start) {
                KleshchevSequence full;
                for (int t = 0; t < p; ++t)
                    full.emplace_back(((start - t) % p + p) % p, 2);
                seqs.push_back(std::move(full));
            }
            for (int variant = 0; variant < 2; ++variant) {
                KleshchevSequence chain;
                Partition cur = kappa;
                while (!cur.empty()) {
                    int chosen = -1, count = 0;
                    for (int t = 0; t < p; ++t) {
                        int r = variant == 0 ? t : p - 1 - t;
                        auto sig = node_signature(cur, r, p);
                        if (!sig.normal.empty()) {
                            chosen = r;
                            count = static_cast<int>(sig.normal.size());
                            cur = remove_nodes(cur, sig.normal);
                            break;
                        }
                    }
                    if (chosen < 0)
                        break;
                    chain.emplace_back(chosen, count);
                }
                seqs.push_back(std::move(chain));
            }
        }
        for (const auto& s : eng.config_.extra_sequences)
            seqs.push_back(s);
        return seqs;
    }

    // Coefficients of [D(cols[target])] over the Specht classes, reading the
    // open entry (i,j) as the candidate value; empty when some needed entry
    // is still open.
    std::optional<VirtualSum> expression(Pane& pane, int i, int j, long long v, int target) {
        std::vector<long long> c(pane.C, 0);
        for (int b = pane.C - 1; b >= 0; --b) {
            long long rhs = (b == target) ? 1 : 0;
            for (int a = b + 1; a < pane.C; ++a) {
                if (c[a] == 0)
                    continue;
                int row = pane.col_row[a];
                const Interval& e = at(pane, row, b);
                long long d;
                if (row == i && b == j)
                    d = v;
                else if (e.determined())
                    d = e.lo;
                else
                    return std::nullopt;
                rhs -= c[a] * d;
            }
            c[b] = rhs;
        }
        VirtualSum x(Basis::Specht);
        for (int b = 0; b < pane.C; ++b)
            x.add(pane.cols[b], c[b]);
        return x;
    }

    // Is the Specht-basis class a non-negative combination of simples? Fails
    // soft (nullopt) when a needed block is open or beyond the weight cap.
    std::optional<bool> is_module(const VirtualSum& x) {
        std::map<Partition, long long> simple;
        for (const auto& [nu, coeff] : x.terms()) {
            BlockId bn = block_id(nu, p);
            if (bn.weight > eng.config_.weight_cap)
                return std::nullopt;
            auto m = eng.solve(bn);
            int rn = m->row_index(nu);
            for (std::size_t cn = 0; cn < m->cols.size(); ++cn) {
                const Interval& e = m->at(rn, static_cast<int>(cn));
                if (e.lo == 0 && e.hi == 0)
                    continue;
                if (!e.determined())
                    return std::nullopt;
                simple[m->cols[cn]] += coeff * e.lo;
            }
        }
        for (const auto& [mu, coeff] : simple)
            if (coeff < 0)
                return false;
        return true;
    }

    // Restrict the candidate expression along the sequence, testing at every
    // single step whether the class can still be a module.
    Restriction test_candidate(VirtualSum x, const KleshchevSequence& seq) {
        for (auto [r, k] : seq)
            for (int t = 0; t < k; ++t) {
                x = restrict_specht(x, r % p, p);
                if (x.empty())
                    return Restriction::Clean;
                auto ok = is_module(x);
                if (ok && !*ok)
                    return Restriction::Negative;
            }
        return Restriction::Clean;
    }

    // restriction tests over every determined column expression of the pane
    bool has_negative_restriction(Pane& pane) {
        for (int target = 0; target < pane.C; ++target) {
            auto x = expression(pane, -1, -1, 0, target);
            if (!x)
                continue;
            for (const auto& seq : sequences_for(pane.cols[target]))
                if (test_candidate(*x, seq) == Restriction::Negative)
                    return true;
        }
        return false;
    }

    std::vector<std::vector<Interval>> snapshot() const {
        std::vector<std::vector<Interval>> s;
        for (const Pane& pane : panes)
            s.push_back(pane.w);
        return s;
    }

    void restore(std::vector<std::vector<Interval>> s,
                 std::vector<std::vector<std::vector<std::string>>> provs) {
        for (std::size_t t = 0; t < panes.size(); ++t) {
            panes[t].w = std::move(s[t]);
            panes[t].prov = std::move(provs[t]);
        }
    }

    // Investigate one candidate value: propagate everything under the
    // hypothesis and look for a contradiction or a non-module restriction.
    bool candidate_fails(Pane& pane, int i, int j, int v) {
        auto saved_w = snapshot();
        std::vector<std::vector<std::vector<std::string>>> saved_prov;
        for (const Pane& q : panes)
            saved_prov.push_back(q.prov);
        bool failed = false;
        try {
            tighten(pane, i, j, v, v, "hypothesis");
            fixpoint();
            for (Pane& q : panes)
                if (has_negative_restriction(q)) {
                    failed = true;
                    break;
                }
        } catch (const inconsistent_error&) {
            failed = true;
        }
        restore(std::move(saved_w), std::move(saved_prov));
        return failed;
    }

    bool branch_pass(Pane& pane) {
        if (eng.config_.branch_depth < 1)
            return false;
        for (std::size_t i = 0; i < pane.rows.size(); ++i) {
            for (int j = 0; j < pane.C; ++j) {
                Interval e = at(pane, static_cast<int>(i), j);
                if (e.determined() || e.hi == kUnbounded || e.hi - e.lo > 6)
                    continue;
                std::vector<int> survivors;
                for (int v = e.lo; v <= e.hi; ++v)
                    if (!candidate_fails(pane, static_cast<int>(i), j, v))
                        survivors.push_back(v);
                if (survivors.empty())
                    throw inconsistent_error("every candidate for [" +
                                             pane.rows[i].to_string() + " : " +
                                             pane.cols[j].to_string() + "] fails");
                if (survivors.front() > e.lo || survivors.back() < e.hi) {
                    tighten(pane, static_cast<int>(i), j, survivors.front(),
                            survivors.back(), "R6");
                    return true;
                }
            }
        }
        return false;
    }

    void fixpoint() {
        do {
            changed = false;
            for (int rule : eng.config_.rule_order) {
                for (Pane& pane : panes) {
                    switch (rule) {
                    case 0: rule_prop21(pane); break;
                    case 1: rule_schaper(pane); break;
                    case 2: rule3(pane); break;
                    case 3: rule_removals(pane); break;
                    case 4: sync_mirrors(); break;
                    default: throw error("unknown rule index");
                    }
                    if (rule == 4)
                        break; // sync already covers every pane
                }
            }
        } while (changed);
    }

    std::vector<std::shared_ptr<DecompMatrix>> run(const std::vector<BlockId>& blocks) {
        panes.resize(blocks.size());
        for (std::size_t t = 0; t < blocks.size(); ++t)
            init_pane(panes[t], blocks[t]);
        self_paired = blocks.size() == 1;
        link_mirrors();

        if (blocks[0].weight > 0) {
            while (true) {
                fixpoint();
                bool progressed = false;
                for (Pane& pane : panes)
                    if (branch_pass(pane)) {
                        progressed = true;
                        break;
                    }
                if (!progressed)
                    break;
            }
        }

        std::vector<std::shared_ptr<DecompMatrix>> out;
        for (Pane& pane : panes) {
            auto m = std::make_shared<DecompMatrix>();
            m->block = pane.block;
            m->rows = std::move(pane.rows);
            m->cols = std::move(pane.cols);
            m->entries_ = std::move(pane.w);
            m->provenance_ = std::move(pane.prov);
            m->row_lookup_ = std::move(pane.row_idx);
            m->col_lookup_ = std::move(pane.col_idx);
            if (p == 5 && pane.block.weight <= 3) {
                for (std::size_t i = 0; i < m->rows.size(); ++i)
                    for (std::size_t j = 0; j < m->cols.size(); ++j) {
                        const Interval& e = m->at(static_cast<int>(i), static_cast<int>(j));
                        if (e.determined() && e.lo > 1)
                            m->notes.push_back("entry >1 at [" + m->rows[i].to_string() +
                                               " : " + m->cols[j].to_string() + "]");
                    }
            }
            int open = m->undetermined_count();
            if (open > 0)
                m->notes.push_back(std::to_string(open) + " undetermined entries");
            out.push_back(std::move(m));
        }
        return out;
    }
};

std::shared_ptr<const DecompMatrix> Engine::compute_block(const BlockId& block) {
    if (block.weight > config_.weight_cap)
        throw weight_cap_error("block weight " + std::to_string(block.weight) +
                               " exceeds cap " + std::to_string(config_.weight_cap));
    if (auto cached = load_cached(block))
        return cached;

    BlockId mirror{block.p, conjugate(block.core), block.weight};
    Solver solver(*this, block.p);
    if (mirror == block) {
        auto out = solver.run({block});
        store_cached(*out[0]);
        return out[0];
    }
    // solve the pair together, canonical pane first
    bool first = block.core.parts() < mirror.core.parts();
    std::vector<BlockId> pair = first ? std::vector<BlockId>{block, mirror}
                                      : std::vector<BlockId>{mirror, block};
    auto out = solver.run(pair);
    store_cached(*out[0]);
    store_cached(*out[1]);
    int want = first ? 0 : 1;
    offer_result(pair[1 - want], out[1 - want]);
    return out[want];
}

CrossPrimeReport Engine::cross_prime_check(const BlockId& block, int p_prime,
                                           std::vector<int> slots) {
    if (p_prime < block.p)
        throw error("cross-prime check needs p' >= p");
    int extra = p_prime - block.p;
    if (slots.empty())
        slots.assign(extra, block.p);
    if (static_cast<int>(slots.size()) != extra)
        throw bad_slot_error("need exactly p'-p slots");

    CrossPrimeReport report;
    report.block = block;
    report.p_prime = p_prime;
    report.hypothesis_holds = block.p > block.weight;

    auto left = solve(block);
    for (std::size_t i = 0; i < left->rows.size(); ++i)
        for (std::size_t j = 0; j < left->cols.size(); ++j) {
            const Partition& la = left->rows[i];
            const Partition& mu = left->cols[j];
            if (la != mu && !dominates(mu, la))
                continue; // zero on both sides
            CrossPrimeEntry entry;
            entry.lambda = la;
            entry.mu = mu;
            int b = std::max({la.rows(), mu.rows(), 1});
            entry.lambda_plus =
                insert_empty_runners(Abacus::from_partition(la, b, block.p), slots)
                    .to_partition();
            entry.mu_plus =
                insert_empty_runners(Abacus::from_partition(mu, b, block.p), slots)
                    .to_partition();
            entry.left = left->at(static_cast<int>(i), static_cast<int>(j));
            entry.right = value(entry.lambda_plus, entry.mu_plus, p_prime);
            if (entry.left.determined() && entry.right.determined())
                entry.status = entry.left.lo == entry.right.lo ? CrossPrimeEntry::Equal
                                                               : CrossPrimeEntry::Unequal;
            report.entries.push_back(std::move(entry));
        }
    return report;
}

// ---------------------------------------------------------------------------
// block store

std::string Engine::cache_key(const BlockId& block) const {
    std::string material = "v1|" + block.to_string();
    for (const auto& a : assumptions_)
        material += "|" + assumption_to_string(a);
    auto h = std::hash<std::string>{}(material);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016zx", h);
    return buf;
}

std::shared_ptr<const DecompMatrix> Engine::load_cached(const BlockId& block) const {
    if (cache_dir_.empty())
        return nullptr;
    std::ifstream in(std::filesystem::path(cache_dir_) / (cache_key(block) + ".tsv"));
    if (!in)
        return nullptr;
    try {
        std::string header, labels, line;
        if (!std::getline(in, header) || !std::getline(in, labels))
            return nullptr;
        auto m = std::make_shared<DecompMatrix>();
        m->block = block;
        {
            std::stringstream ss(labels);
            std::string cell;
            std::getline(ss, cell, '\t'); // corner
            while (std::getline(ss, cell, '\t'))
                m->cols.push_back(Partition::parse(cell));
        }
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            std::stringstream ss(line);
            std::string cell;
            std::getline(ss, cell, '\t');
            m->rows.push_back(Partition::parse(cell));
            for (std::size_t j = 0; j < m->cols.size(); ++j) {
                if (!std::getline(ss, cell, '\t'))
                    return nullptr;
                Interval e;
                if (cell == ".") {
                    e = {0, 0};
                } else if (auto dots = cell.find(".."); dots != std::string::npos) {
                    e.lo = std::stoi(cell.substr(0, dots));
                    std::string hi = cell.substr(dots + 2);
                    e.hi = hi == "inf" ? kUnbounded : std::stoi(hi);
                } else {
                    e.lo = e.hi = std::stoi(cell);
                }
                m->entries_.push_back(e);
            }
        }
        if (m->entries_.size() != m->rows.size() * m->cols.size())
            return nullptr;
        m->provenance_.assign(m->entries_.size(), {"cache"});
        for (std::size_t i = 0; i < m->rows.size(); ++i)
            m->row_lookup_[m->rows[i]] = static_cast<int>(i);
        for (std::size_t j = 0; j < m->cols.size(); ++j)
            m->col_lookup_[m->cols[j]] = static_cast<int>(j);
        return m;
    } catch (...) {
        return nullptr;
    }
}

void Engine::store_cached(const DecompMatrix& m) const {
    if (cache_dir_.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    auto path = std::filesystem::path(cache_dir_) / (cache_key(m.block) + ".tsv");
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << m.to_tsv();
    }
    std::filesystem::rename(tmp, path, ec);
}

} // namespace specht
