#pragma once
// Frames of discernment and the set algebra over their propositions.
//
// A Frame is an immutable, ordered list of at most 64 atom names. Atom i is
// bit i of a Proposition's mask, so every set operation is a single word op.
// Propositions remember the identity of the frame that made them; combining
// propositions from different frames throws FrameMismatch.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evident {

inline constexpr std::size_t kMaxAtoms = 64;

using FrameId = std::uint64_t;

class Frame;

class Proposition {
public:
    FrameId frame_id() const noexcept { return frame_id_; }
    std::uint64_t bits() const noexcept { return bits_; }
    // Mask of every atom in the owning frame.
    std::uint64_t universe() const noexcept { return universe_; }

    bool is_empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == universe_; }
    bool contains_atom(std::size_t index) const noexcept {
        return index < 64 && ((bits_ >> index) & 1U) != 0;
    }
    std::size_t cardinality() const noexcept;

    friend bool operator==(const Proposition&, const Proposition&) = default;

private:
    friend class Frame;
    friend Proposition complement(const Proposition& p);
    friend Proposition intersect(const Proposition& p, const Proposition& q);
    friend Proposition unite(const Proposition& p, const Proposition& q);

    Proposition(FrameId frame, std::uint64_t universe, std::uint64_t bits) noexcept
        : frame_id_(frame), universe_(universe), bits_(bits) {}

    FrameId frame_id_;
    std::uint64_t universe_;
    std::uint64_t bits_;
};

class Frame {
public:
    // Throws EmptyFrame, TooManyAtoms or DuplicateAtom (also for empty names).
    static Frame make(std::vector<std::string> atom_names);

    FrameId id() const noexcept { return data_->id; }
    std::size_t size() const noexcept { return data_->atoms.size(); }
    const std::vector<std::string>& atoms() const noexcept { return data_->atoms; }
    const std::string& atom(std::size_t index) const { return data_->atoms.at(index); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    Proposition empty() const noexcept { return {id(), universe(), 0}; }
    Proposition full() const noexcept { return {id(), universe(), universe()}; }
    Proposition singleton(std::size_t index) const;
    // Throws UnknownAtom for any name not in the frame.
    Proposition proposition(std::span<const std::string> names) const;
    Proposition proposition(std::initializer_list<std::string_view> names) const;
    // Throws InvalidExpression when bits fall outside the frame.
    Proposition from_bits(std::uint64_t bits) const;

    // Atom names of p in frame order.
    std::vector<std::string> names_of(const Proposition& p) const;
    // "{lake,tower}" style rendering; "{}" for the empty set.
    std::string describe(const Proposition& p) const;

    std::uint64_t universe() const noexcept {
        return size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size()) - 1);
    }

    friend bool operator==(const Frame& a, const Frame& b) noexcept { return a.id() == b.id(); }

private:
    struct Data {
        FrameId id;
        std::vector<std::string> atoms;
        std::map<std::string, std::size_t, std::less<>> index;
    };
    explicit Frame(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

inline Frame make_frame(std::vector<std::string> atom_names) { return Frame::make(std::move(atom_names)); }

Proposition complement(const Proposition& p);
Proposition intersect(const Proposition& p, const Proposition& q);
Proposition unite(const Proposition& p, const Proposition& q);
bool is_subset(const Proposition& p, const Proposition& q);

// Throws FrameMismatch unless both propositions come from the same frame.
void require_same_frame(const Proposition& p, const Proposition& q);

// Logical query over named attributes.
class QueryExpr {
public:
    enum class Kind : std::uint8_t { Atom, And, Or, Implies };

    // Factories validate shape: non-empty names, And/Or with >= 2 children.
    static QueryExpr atom(std::string name);
    static QueryExpr all_of(std::vector<QueryExpr> children);
    static QueryExpr any_of(std::vector<QueryExpr> children);
    static QueryExpr implies(QueryExpr lhs, QueryExpr rhs);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<QueryExpr>& children() const noexcept { return children_; }

    // Attribute names in left-to-right order, with repeats.
    std::vector<std::string> attributes() const;
    std::size_t depth() const;
    // Compact rendering such as "and(altitude,or(depth,terrain))".
    std::string to_string() const;

    friend bool operator==(const QueryExpr&, const QueryExpr&) = default;

private:
    QueryExpr(Kind kind, std::string name, std::vector<QueryExpr> children)
        : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

    Kind kind_;
    std::string name_;
    std::vector<QueryExpr> children_;
};

using AtomMap = std::map<std::string, Proposition, std::less<>>;

// And -> intersection, Or -> union, Implies(a, b) -> complement(a) | b.
// Throws UnmappedAttribute or FrameMismatch.
Proposition translate_logical(const QueryExpr& expr, const Frame& frame, const AtomMap& atom_map);

}  // namespace evident
