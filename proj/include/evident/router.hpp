#pragma once
// Belief-driven routing of queries over a set of heterogeneous data sources:
// per-source answerability, polling, decomposition and same-schema views.

#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "evident/evidence.hpp"
#include "evident/frame.hpp"

namespace evident {

struct SourceDescriptor {
    std::string id;
    // Attribute name -> capability weight in [0, 1]. Weight 1 is plain schema membership.
    std::map<std::string, double, std::less<>> schema;
    int priority = 0;  // lower is preferred

    bool has(std::string_view attribute) const { return schema.find(attribute) != schema.end(); }
    double weight(std::string_view attribute) const;
};

// Throws InvalidSource for an empty id or a weight outside [0, 1].
void validate(const SourceDescriptor& source);

// Atom: [w, 1] when present, [0, 0] when absent. And multiplies both bounds,
// Or takes the co-product 1 - prod(1 - x) of both bounds. Throws ImpliesNotRoutable.
EvidentialInterval answerability(const QueryExpr& query, const SourceDescriptor& source);

struct PolledSource {
    std::string id;
    EvidentialInterval interval;
};

inline constexpr double kDefaultPollThreshold = 0.5;

// Keeps sources whose answerability plausibility reaches the threshold,
// ordered by support descending, then priority, then id.
// Throws InvalidThreshold unless 0 <= threshold <= 1.
std::vector<PolledSource> poll(const QueryExpr& query, const std::vector<SourceDescriptor>& sources,
                               double threshold = kDefaultPollThreshold);

struct Assignment {
    QueryExpr fragment;
    std::string source_id;
    double support = 0.0;
};

struct RoutePlan {
    std::vector<Assignment> assignments;  // left-to-right over the query tree
    double total_support = 0.0;           // product of assigned supports; 0 when nothing is assigned
    std::vector<QueryExpr> unassigned;    // atoms no shortlisted source can answer
};

// Assigns every maximal sub-tree that some source answers in full (every atom
// present with positive weight) to the source with the highest support for it.
// Throws EmptyShortlist or ImpliesNotRoutable.
RoutePlan decompose(const QueryExpr& query, const std::vector<SourceDescriptor>& shortlist);

// Merges same-schema sources: weight = max over parts, priority = min.
// Throws TooFewParts or SchemaMismatchError.
SourceDescriptor make_view(std::string name, const std::vector<SourceDescriptor>& parts);

// Registered sources. Reads may run concurrently; additions take an exclusive
// lock and never touch existing entries.
class SourceRegistry {
public:
    // Throws InvalidSource or DuplicateSource.
    void add(SourceDescriptor source);
    std::vector<SourceDescriptor> snapshot() const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::vector<SourceDescriptor> sources_;
};

// Sources file: [{"id": str, "priority": int, "schema": {attr: weight}}].
// Throws ParseError, InvalidSource or DuplicateSource.
std::vector<SourceDescriptor> parse_sources(std::string_view text);

// Query file: {"op": "and"|"or"|"atom", "children": [...], "name": str}.
// "implies" with two children is also accepted so that callers can report it.
QueryExpr parse_query(std::string_view text);

}  // namespace evident
