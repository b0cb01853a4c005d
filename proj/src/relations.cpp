#include "qmzv/relations.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace qmzv {

namespace {

using Json = nlohmann::json;

void enumerate_rec(TypeTag type, int w, std::vector<int>& t, std::vector<int>& s, int wt,
                   std::vector<ZWord>& out) {
    const int d = static_cast<int>(s.size());
    if (d > 0) out.push_back(ZWord{type, CompositionPair(t, s)});
    if (d >= w) return;
    const bool head = (d == 0);
    auto push = [&](int tj, int sj) {
        t.push_back(tj);
        s.push_back(sj);
        enumerate_rec(type, w, t, s, wt + sj, out);
        t.pop_back();
        s.pop_back();
    };
    switch (type) {
        case TypeTag::I:
            for (int k = head ? 2 : 1; k <= w - wt; ++k) push(k - 1, k);
            break;
        case TypeTag::tI:
            if (wt + 1 <= w) push(1, 1); // theta
            if (head) {
                for (int k = 2; k <= w - wt; ++k) push(k - 1, k);
            } else {
                if (wt + 1 <= w) push(0, 1); // z_1
                for (int k = 2; k <= w - wt; ++k) push(k - 1, k);
            }
            break;
        case TypeTag::II:
            for (int k = head ? 1 : 0; k <= w - wt; ++k) push(k, k);
            break;
        case TypeTag::III:
            if (head)
                for (int k = 1; k <= w - wt; ++k) push(1, k);
            else
                for (int k = 0; k <= w - wt; ++k) push(0, k);
            break;
        case TypeTag::IV:
            if (head)
                for (int k = 2; k <= w - wt; ++k) push(k - 1, k);
            else
                for (int k = 0; k <= w - wt; ++k) push(k, k);
            break;
        case TypeTag::tIV:
            if (head) {
                if (wt + 1 <= w) push(1, 1);
                for (int k = 2; k <= w - wt; ++k) push(k - 1, k);
            } else {
                for (int k = 0; k <= w - wt; ++k) push(k, k);
            }
            break;
        case TypeTag::G:
            for (int sj = head ? 1 : 0; sj <= w - wt; ++sj)
                for (int tj = head ? 1 : 0; tj <= sj; ++tj) push(tj, sj);
            break;
        case TypeTag::O:
            throw relation_error("use enumerate_o for type O");
    }
}

// tI words containing theta (t,s)=(1,1) must not collide with z_1-headed ...
// the encoding is already injective; nothing to do.

} // namespace

std::vector<ZWord> enumerate_admissible(TypeTag type, int w) {
    if (w < 1) throw relation_error("enumerate_admissible: weight must be >= 1");
    std::vector<ZWord> out;
    std::vector<int> t, s;
    enumerate_rec(type, w, t, s, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_admissible(TypeTag type, int w) {
    auto binom = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    switch (type) {
        case TypeTag::I:
            return (1LL << (w - 1)) - 1;
        case TypeTag::tI: {
            long long a = 1, b = 1; // F_0, F_1 with F_0 = F_1 = 1
            for (int i = 2; i <= 2 * w; ++i) { long long c = a + b; a = b; b = c; }
            return b - 1; // F_{2w} - 1 in the source's indexing
        }
        case TypeTag::II:
        case TypeTag::III:
        case TypeTag::tIV:
            return binom(2 * w, w) - 1;
        case TypeTag::IV:
            return binom(2 * w - 1, w) - 1;
        case TypeTag::G: {
            // sum over weight k <= w, depth d <= w of s_1 (s_2+1)...(s_d+1)
            long long total = 0;
            std::vector<int> s;
            std::function<void(int, int, long long)> rec = [&](int wt, int d, long long prod) {
                if (d > 0) total += prod;
                if (d >= w) return;
                for (int sj = (d == 0) ? 1 : 0; sj <= w - wt; ++sj)
                    rec(wt + sj, d + 1, prod * ((d == 0) ? sj : sj + 1));
            };
            rec(0, 0, 1);
            return total;
        }
        case TypeTag::O: {
            long long total = 0;
            std::function<void(int)> rec = [&](int wt) {
                if (wt > 0) ++total;
                for (int k = 2; k <= w - wt; ++k) rec(wt + k);
            };
            rec(0);
            return total;
        }
    }
    return -1;
}

int RelationSystem::column_of(const ZWord& w) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || !(*it == w)) return -1;
    return static_cast<int>(it - basis.begin());
}

void RelationSystem::append(const RelationSystem& other) {
    if (other.basis != basis) throw relation_error("append: basis mismatch");
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

namespace {

std::optional<SparseRow> lincomb_to_row(const RelationSystem& sys, const LinComb<ZWord>& c) {
    SparseRow row;
    row.reserve(c.size());
    for (const auto& [w, coeff] : c) {
        const int col = sys.column_of(w);
        if (col < 0) return std::nullopt; // escapes the window
        row.emplace_back(col, coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

template <typename F>
void parallel_for(int n, int jobs, F&& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, n);
    pool.reserve(workers);
    for (int k = 0; k < workers; ++k)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

RelationSystem gen_dbsf(TypeTag type, int w, const GenOptions& opts,
                        std::vector<std::pair<ZWord, ZWord>>* escaped) {
    RelationSystem sys;
    sys.type = type;
    sys.weight = w;
    sys.basis = enumerate_admissible(type, w);

    std::vector<std::pair<ZWord, ZWord>> pairs;
    for (std::size_t i = 0; i < sys.basis.size(); ++i) {
        const ZWord& u = sys.basis[i];
        if (u.weight() > w - 1) continue;
        for (std::size_t j = i; j < sys.basis.size(); ++j) {
            const ZWord& v = sys.basis[j];
            const int wsum = u.weight() + v.weight();
            const int dsum = u.depth() + v.depth();
            if (wsum > w || dsum > w) continue;
            if (opts.depth_le_weight && dsum > wsum) continue;
            pairs.emplace_back(u, v);
        }
    }

    std::vector<std::optional<RelationRow>> produced(pairs.size());
    std::vector<char> escape_flag(pairs.size(), 0);
    parallel_for(static_cast<int>(pairs.size()), opts.jobs, [&](int i) {
        const auto& [u, v] = pairs[i];
        LinComb<ZWord> diff = stuffle(type, u, v);
        diff -= shuffle_z(type, u, v);
        if (diff.zero()) return;
        auto row = lincomb_to_row(sys, diff);
        if (!row) { escape_flag[i] = 1; return; }
        std::ostringstream prov;
        prov << "dbsf(" << u.str() << " , " << v.str() << ")";
        produced[i] = RelationRow{std::move(*row), prov.str()};
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (escape_flag[i] && escaped) escaped->push_back(pairs[i]);
        if (produced[i]) sys.rows.push_back(std::move(*produced[i]));
    }
    return sys;
}

RelationSystem gen_duality(TypeTag type, int w) {
    RelationSystem sys;
    sys.type = type;
    sys.weight = w;
    sys.basis = enumerate_admissible(type, w);
    for (auto& rel : duality_relations(type, w)) {
        auto row = lincomb_to_row(sys, rel.relation);
        if (!row || row->empty()) continue;
        sys.rows.push_back({std::move(*row), "duality(" + rel.word.str() + " = " + rel.dual_word.str() + ")"});
    }
    return sys;
}

RelationSystem gen_pr(int w) {
    RelationSystem sys;
    sys.type = TypeTag::G;
    sys.weight = w;
    sys.basis = enumerate_admissible(TypeTag::G, w);
    for (const auto& word : sys.basis) {
        for (int j = 0; j < word.depth(); ++j) {
            if (word.ts.t[j] >= word.ts.s[j]) continue; // no pi in this letter
            // z_{t,s} = z_{t+1,s} + z_{t,s-1}
            LinComb<ZWord> rel(word);
            CompositionPair up = word.ts;
            up.t[j] += 1;
            rel.add(ZWord{TypeTag::G, up}, Rational(-1));
            CompositionPair down = word.ts;
            down.s[j] -= 1;
            rel.add(ZWord{TypeTag::G, down}, Rational(-1));
            auto row = lincomb_to_row(sys, rel);
            if (!row || row->empty()) continue;
            std::ostringstream prov;
            prov << "pr(" << word.str() << " @" << j << ")";
            sys.rows.push_back({std::move(*row), prov.str()});
        }
    }
    return sys;
}

// ---------------------------------------------------------------------------
// exact elimination
// ---------------------------------------------------------------------------

Echelon::Echelon(std::vector<int> column_priority) : prio_(std::move(column_priority)) {}

SparseRow Echelon::reduce(SparseRow row, bool* zero) const {
    // rows are kept sorted by elimination priority
    auto key = [&](int col) { return prio_.empty() ? col : prio_[col]; };
    auto cmp = [&](const std::pair<int, Rational>& a, const std::pair<int, Rational>& b) {
        return key(a.first) < key(b.first);
    };
    std::sort(row.begin(), row.end(), cmp);
    while (!row.empty()) {
        const int lead = row.front().first;
        auto it = pivots_.find(key(lead));
        if (it == pivots_.end()) {
            // normalize leading coefficient to 1
            Rational inv = 1 / row.front().second;
            for (auto& [c, v] : row) v *= inv;
            *zero = false;
            return row;
        }
        const SparseRow& p = it->second;
        const Rational f = row.front().second;
        // row -= f * p  (both sorted by priority)
        SparseRow merged;
        merged.reserve(row.size() + p.size());
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < p.size()) {
            if (b == p.size() || (a < row.size() && cmp(row[a], p[b]))) {
                merged.push_back(row[a++]);
            } else if (a == row.size() || cmp(p[b], row[a])) {
                merged.emplace_back(p[b].first, Rational(-f * p[b].second));
                ++b;
            } else {
                Rational nv = row[a].second - f * p[b].second;
                if (nv != 0) merged.emplace_back(row[a].first, std::move(nv));
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
    *zero = true;
    return row;
}

bool Echelon::add(SparseRow row) {
    bool zero = false;
    SparseRow reduced = reduce(std::move(row), &zero);
    if (zero) return false;
    const int lead = reduced.front().first;
    pivots_.emplace(prio_.empty() ? lead : prio_[lead], std::move(reduced));
    return true;
}

bool Echelon::in_span(SparseRow row) const {
    bool zero = false;
    (void)reduce(std::move(row), &zero);
    return zero;
}

int rank(const RelationSystem& sys) {
    Echelon e;
    for (const auto& r : sys.rows) e.add(r.v);
    return e.rank();
}

int rank_union(const std::vector<const RelationSystem*>& systems) {
    Echelon e;
    for (const auto* sys : systems)
        for (const auto& r : sys->rows) e.add(r.v);
    return e.rank();
}

int dim_lower_bound(const std::vector<TruncatedSeries>& rows) {
    Echelon e;
    for (const auto& s : rows) {
        SparseRow row;
        for (int i = 0; i <= s.order(); ++i)
            if (s[i] != 0) row.emplace_back(i, s[i]);
        e.add(std::move(row));
    }
    return e.rank();
}

int dim_lower_bound(const std::vector<ZWord>& words, int N, EvalCache* cache) {
    std::vector<TruncatedSeries> rows;
    rows.reserve(words.size());
    for (const auto& w : words)
        rows.push_back(cache ? cache->eval(zword_to_composition(w), N)
                             : eval_value(zword_to_composition(w), N));
    return dim_lower_bound(rows);
}

DeficiencyReport deficiency(TypeTag type, int w, int N, const GenOptions& opts,
                            const std::vector<const RelationSystem*>& extra) {
    RelationSystem ds = gen_dbsf(type, w, opts);
    RelationSystem du = gen_duality(type, w);
    std::vector<const RelationSystem*> all{&ds, &du};
    RelationSystem pr;
    if (type == TypeTag::G) {
        pr = gen_pr(w);
        all.push_back(&pr);
    }
    for (const auto* x : extra) all.push_back(x);

    EvalCache cache;
    DeficiencyReport rep;
    rep.words = static_cast<int>(ds.basis.size());
    rep.lower_bound = dim_lower_bound(ds.basis, N, &cache);
    rep.relation_rank = rank_union(all);
    rep.deficiency = rep.words - rep.lower_bound - rep.relation_rank;
    if (rep.deficiency < 0)
        throw relation_error("negative deficiency: an unsound relation row slipped through");
    return rep;
}

DeficiencyReport augmented_deficiency(TypeTag type, int w, int delta, int N,
                                      const GenOptions& opts,
                                      const std::vector<const RelationSystem*>& extra) {
    if (delta < 0) throw relation_error("augmented_deficiency: delta must be >= 0");
    const int big = w + delta;
    RelationSystem ds = gen_dbsf(type, big, opts);
    RelationSystem du = gen_duality(type, big);
    std::vector<const RelationSystem*> all{&ds, &du};
    RelationSystem pr;
    if (type == TypeTag::G) {
        pr = gen_pr(big);
        all.push_back(&pr);
    }
    for (const auto* x : extra) all.push_back(x);

    const auto small_basis = enumerate_admissible(type, w);
    // eliminate escape columns first; pivots on window columns = induced rank
    std::vector<int> prio(ds.basis.size());
    {
        int next_out = 0;
        int next_in = 0;
        std::vector<char> in_window(ds.basis.size(), 0);
        for (std::size_t i = 0; i < ds.basis.size(); ++i) {
            const auto& word = ds.basis[i];
            if (word.weight() <= w && word.depth() <= w) in_window[i] = 1, ++next_in;
        }
        int out_count = static_cast<int>(ds.basis.size()) - next_in;
        next_in = out_count;
        for (std::size_t i = 0; i < ds.basis.size(); ++i)
            prio[i] = in_window[i] ? next_in++ : next_out++;
        if (next_out != out_count) throw relation_error("augmented: column split bug");
    }
    Echelon e(prio);
    for (const auto* sys : all)
        for (const auto& r : sys->rows) e.add(r.v);
    int induced = 0;
    const int out_columns = static_cast<int>(ds.basis.size() - small_basis.size());
    for (const auto& [lead, rowv] : e.pivots())
        if (lead >= out_columns) ++induced;

    EvalCache cache;
    DeficiencyReport rep;
    rep.words = static_cast<int>(small_basis.size());
    rep.lower_bound = dim_lower_bound(small_basis, N, &cache);
    rep.relation_rank = induced;
    rep.deficiency = rep.words - rep.lower_bound - rep.relation_rank;
    if (rep.deficiency < 0)
        throw relation_error("negative deficiency after augmentation");
    return rep;
}

RelationSystem project_relations(const RelationSystem& sys, const std::vector<ZWord>& subbasis) {
    std::vector<ZWord> sorted_sub = subbasis;
    std::sort(sorted_sub.begin(), sorted_sub.end());
    // columns outside the subbasis are eliminated first
    std::vector<int> sub_col(sys.basis.size(), -1);
    int n_out = 0;
    for (std::size_t i = 0; i < sys.basis.size(); ++i) {
        auto it = std::lower_bound(sorted_sub.begin(), sorted_sub.end(), sys.basis[i]);
        if (it != sorted_sub.end() && *it == sys.basis[i])
            sub_col[i] = static_cast<int>(it - sorted_sub.begin());
        else
            ++n_out;
    }
    std::vector<int> prio(sys.basis.size());
    {
        int next_out = 0, next_in = n_out;
        for (std::size_t i = 0; i < sys.basis.size(); ++i)
            prio[i] = (sub_col[i] < 0) ? next_out++ : next_in++;
    }
    Echelon e(prio);
    for (const auto& r : sys.rows) e.add(r.v);

    RelationSystem out;
    out.type = sys.type;
    out.weight = sys.weight;
    out.basis = sorted_sub;
    // pivot rows supported entirely on subbasis columns are the induced relations
    for (const auto& [lead, rowv] : e.pivots()) {
        if (lead < n_out) continue;
        SparseRow r;
        bool clean = true;
        for (const auto& [col, val] : rowv) {
            if (sub_col[col] < 0) { clean = false; break; }
            r.emplace_back(sub_col[col], val);
        }
        if (!clean) continue; // not yet fully reduced onto the subbasis
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.rows.push_back({std::move(r), "imported"});
    }
    return out;
}

bool verify_identity(const LinComb<CompositionPair>& lhs_minus_rhs, int N, EvalCache* cache) {
    return eval_lincomb(lhs_minus_rhs, N, cache).zero();
}

std::vector<int> soundness_failures(const RelationSystem& sys, int N, EvalCache* cache) {
    EvalCache local;
    EvalCache* c = cache ? cache : &local;
    // evaluate each basis word once
    std::vector<TruncatedSeries> basis_series;
    basis_series.reserve(sys.basis.size());
    for (const auto& w : sys.basis) basis_series.push_back(c->eval(zword_to_composition(w), N));
    std::vector<int> bad;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        TruncatedSeries acc(N);
        for (const auto& [col, coeff] : sys.rows[i].v) acc.add_scaled(basis_series[col], coeff);
        if (!acc.zero()) bad.push_back(static_cast<int>(i));
    }
    return bad;
}

// ---------------------------------------------------------------------------
// JSON round trip
// ---------------------------------------------------------------------------

std::string relations_to_json(const RelationSystem& sys) {
    Json j;
    j["type"] = type_name(sys.type);
    j["weight"] = sys.weight;
    Json basis = Json::array();
    for (const auto& w : sys.basis) {
        Json entry;
        entry["s"] = w.ts.s;
        entry["t"] = w.ts.t;
        basis.push_back(std::move(entry));
    }
    j["basis"] = std::move(basis);
    Json rows = Json::array();
    for (const auto& r : sys.rows) {
        Json row;
        row["provenance"] = r.provenance;
        Json coeffs = Json::array();
        for (const auto& [col, val] : r.v) coeffs.push_back(Json::array({col, rat_str(val)}));
        row["coeffs"] = std::move(coeffs);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(1);
}

RelationSystem relations_from_json(const std::string& text) {
    Json j = Json::parse(text);
    RelationSystem sys;
    sys.type = type_from_name(j.at("type").get<std::string>());
    sys.weight = j.at("weight").get<int>();
    for (const auto& entry : j.at("basis")) {
        std::vector<int> s = entry.at("s").get<std::vector<int>>();
        std::vector<int> t = entry.at("t").get<std::vector<int>>();
        sys.basis.push_back(ZWord{sys.type, CompositionPair(std::move(t), std::move(s))});
    }
    if (!std::is_sorted(sys.basis.begin(), sys.basis.end()))
        throw relation_error("imported basis is not in canonical order");
    for (const auto& row : j.at("rows")) {
        RelationRow r;
        r.provenance = "imported";
        for (const auto& c : row.at("coeffs")) {
            const int col = c.at(0).get<int>();
            if (col < 0 || col >= static_cast<int>(sys.basis.size()))
                throw relation_error("imported row column out of range");
            r.v.emplace_back(col, rat_parse(c.at(1).get<std::string>()));
        }
        std::sort(r.v.begin(), r.v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        sys.rows.push_back(std::move(r));
    }
    return sys;
}

} // namespace qmzv
