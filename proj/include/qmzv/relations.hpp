#pragma once

#include "qmzv/qseries.hpp"
#include "qmzv/shuffle.hpp"
#include "qmzv/stuffle.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qmzv {

struct relation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sorted (column, coefficient) pairs
using SparseRow = std::vector<std::pair<int, Rational>>;

struct RelationRow {
    SparseRow v;
    std::string provenance; // "dbsf(u,v)" | "duality(w)" | "pr(w)" | "imported"
};

// A system of Q-linear relations over an ordered basis of admissible words.
struct RelationSystem {
    TypeTag type = TypeTag::II;
    int weight = 0;
    std::vector<ZWord> basis; // canonical order
    std::vector<RelationRow> rows;

    int column_of(const ZWord& w) const; // -1 if absent
    void append(const RelationSystem& other); // same basis required
};

// All admissible words of the family with weight <= w and depth <= w, in
// canonical order.  Counts match the closed forms (Fibonacci for ~I, central
// binomials for II/III/~IV, ...).
std::vector<ZWord> enumerate_admissible(TypeTag type, int w);

// Closed-form count for cross-checking enumerate_admissible.
long long count_admissible(TypeTag type, int w);

struct GenOptions {
    // pair window: wt(u)+wt(v) <= w, dep(u)+dep(v) <= w and additionally
    // dep(u)+dep(v) <= wt(u)+wt(v) (products of admissible compositions have
    // depth bounded by weight).
    bool depth_le_weight = true;
    int jobs = 1;
};

// Double shuffle rows: stuffle(u,v) - shuffle(u,v) over all admissible pairs
// in the window.  Pairs whose expansion leaves the basis are skipped and
// reported through escaped (never silently).
RelationSystem gen_dbsf(TypeTag type, int w, const GenOptions& opts = {},
                        std::vector<std::pair<ZWord, ZWord>>* escaped = nullptr);

// Duality rows of duality_relations(type, w) on the same basis.
RelationSystem gen_duality(TypeTag type, int w);

// Type G only: for every basis word and every letter with t < s, the one-step
// replacement z_{t,s} = z_{t+1,s} + z_{t,s-1}.
RelationSystem gen_pr(int w);

// Exact rank of the row space over Q.
int rank(const RelationSystem& sys);

// Rank of the span of several systems over a common basis.
int rank_union(const std::vector<const RelationSystem*>& systems);

// Incremental echelon form used by rank and the reduction services.
class Echelon {
public:
    explicit Echelon(std::vector<int> column_priority = {});
    // reduces row against the current pivots; inserts and returns true if a
    // new pivot appears, returns false if the row reduces to zero
    bool add(SparseRow row);
    // reduce only: true iff the row lies in the current span
    bool in_span(SparseRow row) const;
    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::map<int, SparseRow>& pivots() const { return pivots_; }

private:
    SparseRow reduce(SparseRow row, bool* zero) const;
    std::vector<int> prio_; // column -> elimination position (empty: identity)
    std::map<int, SparseRow> pivots_;
};

// Exact rank of the (#words x N+1) matrix of series coefficients; lower
// bounds the dimension of the span of the full series.
int dim_lower_bound(const std::vector<ZWord>& words, int N, EvalCache* cache = nullptr);
int dim_lower_bound(const std::vector<TruncatedSeries>& rows);

struct DeficiencyReport {
    int words = 0;
    int lower_bound = 0;
    int relation_rank = 0;
    int deficiency = 0; // words - lower_bound - relation_rank
};

// #W - dim lower bound - rank(DBSF u duality u (PR for G)); throws
// relation_error on a negative result (soundness violation).
DeficiencyReport deficiency(TypeTag type, int w, int N, const GenOptions& opts = {},
                            const std::vector<const RelationSystem*>& extra = {});

// Relations inside the <=w window implied by the (w+delta)-window systems:
// columns outside the small window are eliminated first and only pivots on
// window columns count.
DeficiencyReport augmented_deficiency(TypeTag type, int w, int delta, int N,
                                      const GenOptions& opts = {},
                                      const std::vector<const RelationSystem*>& extra = {});

// Rank of the system induced on a subbasis: eliminate all other columns, keep
// what remains.  Used for the ~I -> I and ~IV -> IV tables and for feeding G
// relations into other families.
RelationSystem project_relations(const RelationSystem& sys, const std::vector<ZWord>& subbasis);

// true iff the combination evaluates to the zero series at order N
bool verify_identity(const LinComb<CompositionPair>& lhs_minus_rhs, int N,
                     EvalCache* cache = nullptr);

// Every generated row must evaluate to the zero series; returns the indices
// of offending rows (empty == sound).
std::vector<int> soundness_failures(const RelationSystem& sys, int N, EvalCache* cache = nullptr);

// JSON export/import of a relation system (schema documented in README).
std::string relations_to_json(const RelationSystem& sys);
RelationSystem relations_from_json(const std::string& text);

} // namespace qmzv
