#include "evident/frame.hpp"

#include <atomic>
#include <bit>

#include "evident/error.hpp"

namespace evident {

namespace {

FrameId next_frame_id() {
    static std::atomic<FrameId> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

std::size_t Proposition::cardinality() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

Frame Frame::make(std::vector<std::string> atom_names) {
    if (atom_names.empty()) throw Error(ErrorCode::EmptyFrame, "a frame needs at least one atom");
    if (atom_names.size() > kMaxAtoms) {
        throw Error(ErrorCode::TooManyAtoms,
                    std::to_string(atom_names.size()) + " atoms exceeds the limit of " + std::to_string(kMaxAtoms));
    }
    auto data = std::make_shared<Data>();
    data->id = next_frame_id();
    for (std::size_t i = 0; i < atom_names.size(); ++i) {
        const auto& name = atom_names[i];
        if (name.empty()) throw Error(ErrorCode::DuplicateAtom, "atom names must be non-empty");
        if (!data->index.emplace(name, i).second) throw Error(ErrorCode::DuplicateAtom, "atom '" + name + "' repeated");
    }
    data->atoms = std::move(atom_names);
    return Frame(std::move(data));
}

std::optional<std::size_t> Frame::index_of(std::string_view name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

Proposition Frame::singleton(std::size_t index) const {
    if (index >= size()) throw Error(ErrorCode::UnknownAtom, "atom index " + std::to_string(index) + " out of range");
    return {id(), universe(), std::uint64_t{1} << index};
}

Proposition Frame::proposition(std::span<const std::string> names) const {
    std::uint64_t bits = 0;
    for (const auto& name : names) {
        auto idx = index_of(name);
        if (!idx) throw Error(ErrorCode::UnknownAtom, "atom '" + name + "' is not in the frame");
        bits |= std::uint64_t{1} << *idx;
    }
    return {id(), universe(), bits};
}

Proposition Frame::proposition(std::initializer_list<std::string_view> names) const {
    std::vector<std::string> owned(names.begin(), names.end());
    return proposition(std::span<const std::string>(owned));
}

Proposition Frame::from_bits(std::uint64_t bits) const {
    if ((bits & ~universe()) != 0) throw Error(ErrorCode::InvalidExpression, "bits outside the frame");
    return {id(), universe(), bits};
}

std::vector<std::string> Frame::names_of(const Proposition& p) const {
    if (p.frame_id() != id()) throw Error(ErrorCode::FrameMismatch, "proposition belongs to another frame");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (p.contains_atom(i)) out.push_back(data_->atoms[i]);
    }
    return out;
}

std::string Frame::describe(const Proposition& p) const {
    std::string out = "{";
    bool first = true;
    for (const auto& name : names_of(p)) {
        if (!first) out += ',';
        out += name;
        first = false;
    }
    return out + "}";
}

void require_same_frame(const Proposition& p, const Proposition& q) {
    if (p.frame_id() != q.frame_id()) throw Error(ErrorCode::FrameMismatch, "propositions belong to different frames");
}

Proposition complement(const Proposition& p) { return {p.frame_id_, p.universe_, p.universe_ & ~p.bits_}; }

Proposition intersect(const Proposition& p, const Proposition& q) {
    require_same_frame(p, q);
    return {p.frame_id_, p.universe_, p.bits_ & q.bits_};
}

Proposition unite(const Proposition& p, const Proposition& q) {
    require_same_frame(p, q);
    return {p.frame_id_, p.universe_, p.bits_ | q.bits_};
}

bool is_subset(const Proposition& p, const Proposition& q) {
    require_same_frame(p, q);
    return (p.bits() & ~q.bits()) == 0;
}

QueryExpr QueryExpr::atom(std::string name) {
    if (name.empty()) throw Error(ErrorCode::InvalidExpression, "attribute names must be non-empty");
    return {Kind::Atom, std::move(name), {}};
}

QueryExpr QueryExpr::all_of(std::vector<QueryExpr> children) {
    if (children.size() < 2) throw Error(ErrorCode::InvalidExpression, "and needs at least two operands");
    return {Kind::And, {}, std::move(children)};
}

QueryExpr QueryExpr::any_of(std::vector<QueryExpr> children) {
    if (children.size() < 2) throw Error(ErrorCode::InvalidExpression, "or needs at least two operands");
    return {Kind::Or, {}, std::move(children)};
}

QueryExpr QueryExpr::implies(QueryExpr lhs, QueryExpr rhs) {
    std::vector<QueryExpr> children;
    children.push_back(std::move(lhs));
    children.push_back(std::move(rhs));
    return {Kind::Implies, {}, std::move(children)};
}

std::vector<std::string> QueryExpr::attributes() const {
    if (kind_ == Kind::Atom) return {name_};
    std::vector<std::string> out;
    for (const auto& child : children_) {
        auto sub = child.attributes();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::size_t QueryExpr::depth() const {
    std::size_t deepest = 0;
    for (const auto& child : children_) deepest = std::max(deepest, child.depth());
    return deepest + 1;
}

std::string QueryExpr::to_string() const {
    if (kind_ == Kind::Atom) return name_;
    std::string out = kind_ == Kind::And ? "and(" : kind_ == Kind::Or ? "or(" : "implies(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += ',';
        out += children_[i].to_string();
    }
    return out + ")";
}

Proposition translate_logical(const QueryExpr& expr, const Frame& frame, const AtomMap& atom_map) {
    switch (expr.kind()) {
        case QueryExpr::Kind::Atom: {
            auto it = atom_map.find(expr.name());
            if (it == atom_map.end()) {
                throw Error(ErrorCode::UnmappedAttribute, "attribute '" + expr.name() + "' has no proposition");
            }
            if (it->second.frame_id() != frame.id()) {
                throw Error(ErrorCode::FrameMismatch, "attribute '" + expr.name() + "' maps into another frame");
            }
            return it->second;
        }
        case QueryExpr::Kind::And: {
            Proposition acc = frame.full();
            for (const auto& child : expr.children()) acc = intersect(acc, translate_logical(child, frame, atom_map));
            return acc;
        }
        case QueryExpr::Kind::Or: {
            Proposition acc = frame.empty();
            for (const auto& child : expr.children()) acc = unite(acc, translate_logical(child, frame, atom_map));
            return acc;
        }
        case QueryExpr::Kind::Implies: {
            const auto lhs = translate_logical(expr.children()[0], frame, atom_map);
            const auto rhs = translate_logical(expr.children()[1], frame, atom_map);
            return unite(complement(lhs), rhs);
        }
    }
    throw Error(ErrorCode::InvalidExpression, "unknown expression kind");
}

}  // namespace evident
