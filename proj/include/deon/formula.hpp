// Formula AST for standard deontic logic: propositional connectives plus the
// obligation operator [] and permission operator <>.
//
// Formulas are immutable trees behind shared pointers; copying is cheap and
// sharing across threads is safe. Equality is structural (atoms with the same
// name compare equal), with a pointer fast path for shared subterms.
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deon/errors.hpp"

namespace deon {

class Formula {
public:
    enum class Kind : std::uint8_t {
        Atom,
        Top,
        Bottom,
        Not,
        And,
        Or,
        Implies,
        Iff,
        Box,
        Diamond,
    };

    // Atom names match [A-Za-z][A-Za-z0-9_]*.
    static Formula atom(std::string name);
    static Formula top();
    static Formula bottom();
    static Formula negate(Formula f);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula implies(Formula l, Formula r);
    static Formula iff(Formula l, Formula r);
    static Formula box(Formula f);
    static Formula diamond(Formula f);

    Kind kind() const noexcept { return node_->kind; }
    bool is(Kind k) const noexcept { return node_->kind == k; }

    const std::string& name() const;          // Atom only
    const Formula& child() const;             // Not, Box, Diamond
    const Formula& left() const;              // binary connectives
    const Formula& right() const;

    std::size_t hash() const noexcept { return node_->hash; }

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // Identity of the underlying node; distinct for distinct subterm objects
    // even when they are structurally equal.
    const void* id() const noexcept { return node_.get(); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::string name;                       // Atom
    std::shared_ptr<const Node> lhs, rhs;   // unary ops use lhs only
    std::size_t hash = 0;
};

namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

inline bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    auto alpha = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
    if (!alpha(name[0])) return false;
    for (char c : name)
        if (!alnum(c)) return false;
    return true;
}

}  // namespace detail

inline Formula Formula::atom(std::string name) {
    if (!detail::valid_identifier(name))
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->hash = detail::hash_mix(static_cast<std::size_t>(Kind::Atom),
                                  std::hash<std::string>{}(name));
    node->name = std::move(name);
    return Formula(std::move(node));
}

inline Formula Formula::top() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Top;
        n->hash = detail::hash_mix(static_cast<std::size_t>(Kind::Top), 1);
        return n;
    }();
    return Formula(node);
}

inline Formula Formula::bottom() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Bottom;
        n->hash = detail::hash_mix(static_cast<std::size_t>(Kind::Bottom), 2);
        return n;
    }();
    return Formula(node);
}

namespace detail {

inline Formula make_unary(Formula::Kind k, Formula f,
                          const std::shared_ptr<const Formula::Node>& fnode) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = k;
    node->lhs = fnode;
    node->hash = hash_mix(static_cast<std::size_t>(k), f.hash());
    return *reinterpret_cast<Formula*>(&node);  // never used; see below
}

}  // namespace detail

// Out-of-line factory bodies. Each builds one fresh node; children are shared.

inline Formula Formula::negate(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->lhs = f.node_;
    node->hash = detail::hash_mix(static_cast<std::size_t>(Kind::Not), f.hash());
    return Formula(std::move(node));
}

inline Formula Formula::box(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Box;
    node->lhs = f.node_;
    node->hash = detail::hash_mix(static_cast<std::size_t>(Kind::Box), f.hash());
    return Formula(std::move(node));
}

inline Formula Formula::diamond(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Diamond;
    node->lhs = f.node_;
    node->hash = detail::hash_mix(static_cast<std::size_t>(Kind::Diamond), f.hash());
    return Formula(std::move(node));
}

namespace detail {
inline std::size_t binary_hash(Formula::Kind k, std::size_t l, std::size_t r) {
    return hash_mix(hash_mix(static_cast<std::size_t>(k), l), r);
}
}  // namespace detail

inline Formula Formula::conj(Formula l, Formula r) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    node->lhs = l.node_;
    node->rhs = r.node_;
    node->hash = detail::binary_hash(Kind::And, l.hash(), r.hash());
    return Formula(std::move(node));
}

inline Formula Formula::disj(Formula l, Formula r) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    node->lhs = l.node_;
    node->rhs = r.node_;
    node->hash = detail::binary_hash(Kind::Or, l.hash(), r.hash());
    return Formula(std::move(node));
}

inline Formula Formula::implies(Formula l, Formula r) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Implies;
    node->lhs = l.node_;
    node->rhs = r.node_;
    node->hash = detail::binary_hash(Kind::Implies, l.hash(), r.hash());
    return Formula(std::move(node));
}

inline Formula Formula::iff(Formula l, Formula r) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Iff;
    node->lhs = l.node_;
    node->rhs = r.node_;
    node->hash = detail::binary_hash(Kind::Iff, l.hash(), r.hash());
    return Formula(std::move(node));
}

inline const std::string& Formula::name() const {
    if (node_->kind != Kind::Atom)
        throw std::logic_error("name() on non-atom formula");
    return node_->name;
}

inline const Formula& Formula::child() const {
    switch (node_->kind) {
        case Kind::Not:
        case Kind::Box:
        case Kind::Diamond:
            return *reinterpret_cast<const Formula*>(&node_->lhs);
        default:
            throw std::logic_error("child() on non-unary formula");
    }
}

inline const Formula& Formula::left() const {
    switch (node_->kind) {
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff:
            return *reinterpret_cast<const Formula*>(&node_->lhs);
        default:
            throw std::logic_error("left() on non-binary formula");
    }
}

inline const Formula& Formula::right() const {
    switch (node_->kind) {
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff:
            return *reinterpret_cast<const Formula*>(&node_->rhs);
        default:
            throw std::logic_error("right() on non-binary formula");
    }
}

namespace detail {

inline bool nodes_equal(const Formula::Node* a, const Formula::Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->hash != b->hash) return false;
    switch (a->kind) {
        case Formula::Kind::Atom:
            return a->name == b->name;
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
            return true;
        case Formula::Kind::Not:
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
            return nodes_equal(a->lhs.get(), b->lhs.get());
        default:
            return nodes_equal(a->lhs.get(), b->lhs.get()) &&
                   nodes_equal(a->rhs.get(), b->rhs.get());
    }
}

}  // namespace detail

inline bool Formula::operator==(const Formula& other) const {
    return detail::nodes_equal(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Structural measures

inline std::size_t formula_size(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
            return 1;
        case Formula::Kind::Not:
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
            return 1 + formula_size(f.child());
        default:
            return 1 + formula_size(f.left()) + formula_size(f.right());
    }
}

// Maximum nesting of [] / <> operators.
inline std::size_t modal_depth(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
            return 0;
        case Formula::Kind::Not:
            return modal_depth(f.child());
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
            return 1 + modal_depth(f.child());
        default:
            return std::max(modal_depth(f.left()), modal_depth(f.right()));
    }
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out.insert(f.name());
            return;
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
            return;
        case Formula::Kind::Not:
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
            collect_atoms(f.child(), out);
            return;
        default:
            collect_atoms(f.left(), out);
            collect_atoms(f.right(), out);
    }
}

inline std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Concrete syntax (printer; the parser lives in parser.hpp)
//
// Precedence, loosest to tightest: <-> , -> , | , & , unary. -> and <-> are
// right-associative, | and & parse as left-folded lists. The printer emits
// the minimal parentheses that survive a round-trip.

namespace detail {

enum : int {
    kPrecIff = 1,
    kPrecImplies = 2,
    kPrecOr = 3,
    kPrecAnd = 4,
    kPrecUnary = 5,
};

inline void format_into(const Formula& f, int min_prec, std::string& out) {
    auto paren = [&](int prec, auto&& body) {
        const bool need = prec < min_prec;
        if (need) out += '(';
        body(prec);
        if (need) out += ')';
    };
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out += f.name();
            break;
        case Formula::Kind::Top:
            out += "true";
            break;
        case Formula::Kind::Bottom:
            out += "false";
            break;
        case Formula::Kind::Not:
            paren(kPrecUnary, [&](int p) {
                out += '~';
                format_into(f.child(), p, out);
            });
            break;
        case Formula::Kind::Box:
            paren(kPrecUnary, [&](int p) {
                out += "[]";
                format_into(f.child(), p, out);
            });
            break;
        case Formula::Kind::Diamond:
            paren(kPrecUnary, [&](int p) {
                out += "<>";
                format_into(f.child(), p, out);
            });
            break;
        case Formula::Kind::And:
            paren(kPrecAnd, [&](int p) {
                format_into(f.left(), p, out);
                out += " & ";
                format_into(f.right(), p + 1, out);
            });
            break;
        case Formula::Kind::Or:
            paren(kPrecOr, [&](int p) {
                format_into(f.left(), p, out);
                out += " | ";
                format_into(f.right(), p + 1, out);
            });
            break;
        case Formula::Kind::Implies:
            paren(kPrecImplies, [&](int p) {
                format_into(f.left(), p + 1, out);
                out += " -> ";
                format_into(f.right(), p, out);
            });
            break;
        case Formula::Kind::Iff:
            paren(kPrecIff, [&](int p) {
                format_into(f.left(), p + 1, out);
                out += " <-> ";
                format_into(f.right(), p, out);
            });
            break;
    }
}

}  // namespace detail

inline std::string format_formula(const Formula& f) {
    std::string out;
    detail::format_into(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Negation normal form
//
// Output uses only atoms, negated atoms, & , | , [] , <> , true, false.
// Implication and equivalence are expanded; negation is pushed inward with
// De Morgan and the modal dualities ~[]F => <>~F and ~<>F => []~F. No other
// rewriting happens, so the modal depth of the input is preserved exactly.

namespace detail {

inline Formula nnf_rec(const Formula& f, bool positive) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Atom:
            return positive ? f : Formula::negate(f);
        case K::Top:
            return positive ? Formula::top() : Formula::bottom();
        case K::Bottom:
            return positive ? Formula::bottom() : Formula::top();
        case K::Not:
            return nnf_rec(f.child(), !positive);
        case K::And:
            return positive
                       ? Formula::conj(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                       : Formula::disj(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
        case K::Or:
            return positive
                       ? Formula::disj(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                       : Formula::conj(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
        case K::Implies:
            return positive
                       ? Formula::disj(nnf_rec(f.left(), false), nnf_rec(f.right(), true))
                       : Formula::conj(nnf_rec(f.left(), true), nnf_rec(f.right(), false));
        case K::Iff:
            // (l <-> r)  =>  (l & r) | (~l & ~r); negated: (l & ~r) | (~l & r)
            if (positive)
                return Formula::disj(
                    Formula::conj(nnf_rec(f.left(), true), nnf_rec(f.right(), true)),
                    Formula::conj(nnf_rec(f.left(), false), nnf_rec(f.right(), false)));
            return Formula::disj(
                Formula::conj(nnf_rec(f.left(), true), nnf_rec(f.right(), false)),
                Formula::conj(nnf_rec(f.left(), false), nnf_rec(f.right(), true)));
        case K::Box:
            return positive ? Formula::box(nnf_rec(f.child(), true))
                            : Formula::diamond(nnf_rec(f.child(), false));
        case K::Diamond:
            return positive ? Formula::diamond(nnf_rec(f.child(), true))
                            : Formula::box(nnf_rec(f.child(), false));
    }
    throw std::logic_error("unreachable formula kind");
}

}  // namespace detail

inline Formula to_nnf(const Formula& f) { return detail::nnf_rec(f, true); }

inline bool is_nnf(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Atom:
        case K::Top:
        case K::Bottom:
            return true;
        case K::Not:
            return f.child().is(K::Atom);
        case K::And:
        case K::Or:
            return is_nnf(f.left()) && is_nnf(f.right());
        case K::Box:
        case K::Diamond:
            return is_nnf(f.child());
        default:
            return false;
    }
}

// ---------------------------------------------------------------------------
// Normative systems

// A named set of deontic formulas. `formulas` are asserted of the actual
// world; `global_formulas` are norms required to hold in every reachable
// world (they become TBox axioms under translation).
struct NormativeSystem {
    std::string name;
    std::vector<Formula> formulas;
    std::vector<Formula> global_formulas;
};

// Appends f unless a structurally equal formula is already present.
inline bool append_unique(std::vector<Formula>& list, const Formula& f) {
    for (const auto& g : list)
        if (g == f) return false;
    list.push_back(f);
    return true;
}

inline std::set<std::string> vocabulary(const NormativeSystem& n) {
    std::set<std::string> out;
    for (const auto& f : n.formulas) collect_atoms(f, out);
    for (const auto& f : n.global_formulas) collect_atoms(f, out);
    return out;
}

}  // namespace deon

template <>
struct std::hash<deon::Formula> {
    std::size_t operator()(const deon::Formula& f) const noexcept { return f.hash(); }
};
