#include "evident/router.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "evident/error.hpp"

namespace evident {

double SourceDescriptor::weight(std::string_view attribute) const {
    auto it = schema.find(attribute);
    return it == schema.end() ? 0.0 : it->second;
}

void validate(const SourceDescriptor& source) {
    if (source.id.empty()) throw Error(ErrorCode::InvalidSource, "source id must be non-empty");
    for (const auto& [attribute, weight] : source.schema) {
        if (attribute.empty()) throw Error(ErrorCode::InvalidSource, "source '" + source.id + "' has an empty attribute");
        if (!(weight >= 0.0 && weight <= 1.0)) {
            throw Error(ErrorCode::InvalidSource,
                        "source '" + source.id + "' weight for '" + attribute + "' is outside [0, 1]");
        }
    }
}

namespace {

void reject_implies(const QueryExpr& query) {
    if (query.kind() == QueryExpr::Kind::Implies) {
        throw Error(ErrorCode::ImpliesNotRoutable, "rewrite implications with translate_logical before routing");
    }
    for (const auto& child : query.children()) reject_implies(child);
}

EvidentialInterval answerability_unchecked(const QueryExpr& query, const SourceDescriptor& source) {
    switch (query.kind()) {
        case QueryExpr::Kind::Atom:
            if (!source.has(query.name())) return {0.0, 0.0};
            return {source.weight(query.name()), 1.0};
        case QueryExpr::Kind::And: {
            EvidentialInterval acc{1.0, 1.0};
            for (const auto& child : query.children()) {
                const auto sub = answerability_unchecked(child, source);
                acc.support *= sub.support;
                acc.plausibility *= sub.plausibility;
            }
            return acc;
        }
        case QueryExpr::Kind::Or: {
            double miss_support = 1.0;
            double miss_plausibility = 1.0;
            for (const auto& child : query.children()) {
                const auto sub = answerability_unchecked(child, source);
                miss_support *= 1.0 - sub.support;
                miss_plausibility *= 1.0 - sub.plausibility;
            }
            return {1.0 - miss_support, 1.0 - miss_plausibility};
        }
        case QueryExpr::Kind::Implies:
            break;
    }
    throw Error(ErrorCode::ImpliesNotRoutable, "rewrite implications with translate_logical before routing");
}

bool answers_fully(const QueryExpr& query, const SourceDescriptor& source) {
    if (query.kind() == QueryExpr::Kind::Atom) return source.weight(query.name()) > 0.0;
    return std::all_of(query.children().begin(), query.children().end(),
                       [&](const QueryExpr& child) { return answers_fully(child, source); });
}

// Higher support first, then lower priority, then smaller id.
bool preferred(double support_a, const SourceDescriptor& a, double support_b, const SourceDescriptor& b) {
    if (support_a != support_b) return support_a > support_b;
    if (a.priority != b.priority) return a.priority < b.priority;
    return a.id < b.id;
}

void assign(const QueryExpr& node, const std::vector<SourceDescriptor>& shortlist, RoutePlan& plan) {
    const SourceDescriptor* best = nullptr;
    double best_support = 0.0;
    for (const auto& source : shortlist) {
        if (!answers_fully(node, source)) continue;
        const double support = answerability_unchecked(node, source).support;
        if (best == nullptr || preferred(support, source, best_support, *best)) {
            best = &source;
            best_support = support;
        }
    }
    if (best != nullptr) {
        plan.assignments.push_back({node, best->id, best_support});
        return;
    }
    if (node.kind() == QueryExpr::Kind::Atom) {
        plan.unassigned.push_back(node);
        return;
    }
    for (const auto& child : node.children()) assign(child, shortlist, plan);
}

}  // namespace

EvidentialInterval answerability(const QueryExpr& query, const SourceDescriptor& source) {
    reject_implies(query);
    return answerability_unchecked(query, source);
}

std::vector<PolledSource> poll(const QueryExpr& query, const std::vector<SourceDescriptor>& sources, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw Error(ErrorCode::InvalidThreshold, "poll threshold must lie in [0, 1]");
    reject_implies(query);
    struct Candidate {
        const SourceDescriptor* source;
        EvidentialInterval interval;
    };
    std::vector<Candidate> kept;
    for (const auto& source : sources) {
        const auto iv = answerability_unchecked(query, source);
        if (iv.plausibility >= threshold) kept.push_back({&source, iv});
    }
    std::sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) {
        return preferred(a.interval.support, *a.source, b.interval.support, *b.source);
    });
    std::vector<PolledSource> out;
    out.reserve(kept.size());
    for (const auto& c : kept) out.push_back({c.source->id, c.interval});
    return out;
}

RoutePlan decompose(const QueryExpr& query, const std::vector<SourceDescriptor>& shortlist) {
    if (shortlist.empty()) throw Error(ErrorCode::EmptyShortlist, "decompose needs at least one source");
    reject_implies(query);
    RoutePlan plan;
    assign(query, shortlist, plan);
    if (!plan.assignments.empty()) {
        plan.total_support = 1.0;
        for (const auto& a : plan.assignments) plan.total_support *= a.support;
    }
    return plan;
}

SourceDescriptor make_view(std::string name, const std::vector<SourceDescriptor>& parts) {
    if (parts.size() < 2) throw Error(ErrorCode::TooFewParts, "a view needs at least two parts");
    std::set<std::string> all;
    for (const auto& part : parts) {
        for (const auto& [attribute, weight] : part.schema) all.insert(attribute);
    }
    std::vector<std::string> differing;
    for (const auto& attribute : all) {
        const bool everywhere = std::all_of(parts.begin(), parts.end(),
                                            [&](const SourceDescriptor& p) { return p.has(attribute); });
        if (!everywhere) differing.push_back(attribute);
    }
    if (!differing.empty()) throw SchemaMismatchError(std::move(differing));

    SourceDescriptor view;
    view.id = std::move(name);
    view.priority = parts.front().priority;
    view.schema = parts.front().schema;
    for (const auto& part : parts) {
        view.priority = std::min(view.priority, part.priority);
        for (const auto& [attribute, weight] : part.schema) {
            auto& merged = view.schema[attribute];
            merged = std::max(merged, weight);
        }
    }
    validate(view);
    return view;
}

void SourceRegistry::add(SourceDescriptor source) {
    validate(source);
    std::unique_lock lock(mutex_);
    for (const auto& existing : sources_) {
        if (existing.id == source.id) throw Error(ErrorCode::DuplicateSource, "source '" + source.id + "' already registered");
    }
    sources_.push_back(std::move(source));
}

std::vector<SourceDescriptor> SourceRegistry::snapshot() const {
    std::shared_lock lock(mutex_);
    return sources_;
}

std::size_t SourceRegistry::size() const {
    std::shared_lock lock(mutex_);
    return sources_.size();
}

}  // namespace evident
