#ifndef PDX_FORMULA_HPP
#define PDX_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pdx/common.hpp"

namespace pdx {

// One of the four Belnap-Dunn truth values, encoded as a pair of support
// bits: bit 0 = positive support, bit 1 = negative support.
//   T = supported, not contradicted      (1,0)
//   F = contradicted, not supported      (0,1)
//   N = neither                          (0,0)
//   B = both                             (1,1)
enum class FourValue : std::uint8_t {
    N = 0,
    T = 1,
    F = 2,
    B = 3,
};

inline FourValue make_four_value(bool positive, bool negative) {
    return static_cast<FourValue>((positive ? 1 : 0) | (negative ? 2 : 0));
}

inline bool positively_supported(FourValue v) {
    return static_cast<std::uint8_t>(v) & 1;
}

inline bool negatively_supported(FourValue v) {
    return static_cast<std::uint8_t>(v) & 2;
}

// ~ swaps the support bits; & joins negative and meets positive support;
// | is dual. This is the De Morgan lattice with F < N < T and F < B < T.
inline FourValue fv_not(FourValue v) {
    return make_four_value(negatively_supported(v), positively_supported(v));
}

inline FourValue fv_and(FourValue a, FourValue b) {
    return make_four_value(positively_supported(a) && positively_supported(b),
                           negatively_supported(a) || negatively_supported(b));
}

inline FourValue fv_or(FourValue a, FourValue b) {
    return make_four_value(positively_supported(a) || positively_supported(b),
                           negatively_supported(a) && negatively_supported(b));
}

char four_value_letter(FourValue v);

// Immutable propositional formula over atoms, ~, &, |, bot, top.
// Shared subtrees are fine; formulas are plain values.
class Formula {
public:
    enum class Kind : std::uint8_t { Atom, Not, And, Or, Bottom, Top };

    static Formula atom(std::string name);
    static Formula bottom();
    static Formula top();
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);

    Kind kind() const noexcept;
    const std::string& atom_name() const; // Atom nodes only
    Formula child() const;                // Not nodes only
    Formula left() const;                 // And/Or nodes only
    Formula right() const;                // And/Or nodes only

    // Atom names occurring in the formula, sorted, without duplicates.
    std::vector<std::string> atoms() const;

    // Canonical concrete syntax; parse(to_string(f)) reproduces f exactly.
    std::string to_string() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Parses the surface syntax
//   or   := and ('|' and)*
//   and  := not ('&' not)*
//   not  := ('~' | '!')* atom
//   atom := ident | 'top' | 'bot' | '_|_' | '(' or ')'
// with identifiers [a-zA-Z][a-zA-Z0-9_]* other than the reserved words
// 'top' and 'bot'. Throws ParseError with the failing offset.
Formula parse_formula(std::string_view text);

// Evaluates under an assignment of every atom to a four-valued constant.
// Atoms are looked up by position in `atoms`; `values` runs parallel to it.
FourValue evaluate(const Formula& f,
                   const std::vector<std::string>& atoms,
                   const std::vector<FourValue>& values);

// Semantic equivalence: identical four-valued truth tables over all
// assignments of the atoms of either formula. At most kMaxEquivalenceAtoms
// distinct atoms are supported.
bool equivalent(const Formula& lhs, const Formula& rhs);

} // namespace pdx

#endif // PDX_FORMULA_HPP
