#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "pdx/formula.hpp"

using pdx::Formula;
using pdx::FourValue;

namespace {

Formula atom(const char* name) { return Formula::atom(name); }

std::size_t parse_error_offset(const std::string& text) {
    try {
        pdx::parse_formula(text);
    } catch (const pdx::ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for: ", text);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("parsing follows precedence and produces the expected trees") {
    CHECK(pdx::parse_formula("p & ~q") ==
          Formula::conjunction(atom("p"), Formula::negation(atom("q"))));
    CHECK(pdx::parse_formula("p | q & r") ==
          Formula::disjunction(atom("p"), Formula::conjunction(atom("q"), atom("r"))));
    CHECK(pdx::parse_formula("~p & q | r") ==
          Formula::disjunction(
              Formula::conjunction(Formula::negation(atom("p")), atom("q")), atom("r")));
    CHECK(pdx::parse_formula("(p | q) & r") ==
          Formula::conjunction(Formula::disjunction(atom("p"), atom("q")), atom("r")));
    CHECK(pdx::parse_formula("a & b & c") ==
          Formula::conjunction(Formula::conjunction(atom("a"), atom("b")), atom("c")));
    CHECK(pdx::parse_formula("!p") == Formula::negation(atom("p")));
    CHECK(pdx::parse_formula("~~p") == Formula::negation(Formula::negation(atom("p"))));
    CHECK(pdx::parse_formula("top") == Formula::top());
    CHECK(pdx::parse_formula("bot") == Formula::bottom());
    CHECK(pdx::parse_formula("_|_") == Formula::bottom());
    CHECK(pdx::parse_formula("topx") == atom("topx")); // only the exact keyword is reserved
    CHECK(pdx::parse_formula("  p  ") == atom("p"));
}

TEST_CASE("syntax errors carry the failing offset") {
    CHECK(parse_error_offset("(p |") == 4);   // operand missing at end of input
    CHECK(parse_error_offset("") == 0);       // empty input
    CHECK(parse_error_offset("   ") == 3);
    CHECK(parse_error_offset("p q") == 2);    // trailing junk
    CHECK(parse_error_offset("p )") == 2);
    CHECK(parse_error_offset("(p & q") == 6); // unbalanced parenthesis
    CHECK(parse_error_offset("& p") == 0);    // dangling operator
    CHECK(parse_error_offset("~") == 1);
    CHECK(parse_error_offset("p # q") == 2);  // stray character
}

TEST_CASE("printer emits minimal parentheses and survives a reparse") {
    CHECK(pdx::parse_formula("p & ~q").to_string() == "p & ~q");
    CHECK(pdx::parse_formula("p | q & r").to_string() == "p | q & r");
    CHECK(pdx::parse_formula("(p | q) & r").to_string() == "(p | q) & r");
    CHECK(pdx::parse_formula("~(p | q)").to_string() == "~(p | q)");
    CHECK(Formula::conjunction(atom("a"), Formula::conjunction(atom("b"), atom("c"))).to_string() ==
          "a & (b & c)"); // right nesting kept explicit
}

TEST_CASE("parse(print(f)) reproduces every generated tree") {
    pdxtest::Rng rng(20240801);
    const std::vector<std::string> atoms = {"p", "q", "r", "ab", "x1"};
    for (int i = 0; i < 500; ++i) {
        const Formula f = pdxtest::random_formula(rng, atoms, 5);
        CAPTURE(f.to_string());
        CHECK(pdx::parse_formula(f.to_string()) == f);
    }
}

TEST_CASE("four-valued connectives act on the support bits") {
    CHECK(pdx::fv_not(FourValue::T) == FourValue::F);
    CHECK(pdx::fv_not(FourValue::N) == FourValue::N);
    CHECK(pdx::fv_not(FourValue::B) == FourValue::B);
    CHECK(pdx::fv_and(FourValue::N, FourValue::B) == FourValue::F);
    CHECK(pdx::fv_or(FourValue::N, FourValue::B) == FourValue::T);
    CHECK(pdx::fv_and(FourValue::T, FourValue::B) == FourValue::B);
    CHECK(pdx::fv_or(FourValue::F, FourValue::N) == FourValue::N);
    CHECK(pdx::four_value_letter(FourValue::B) == 'B');
}

TEST_CASE("equivalence: De Morgan algebra laws hold, classical laws do not") {
    const Formula p = atom("p"), q = atom("q"), r = atom("r");
    CHECK(pdx::equivalent(Formula::negation(Formula::negation(p)), p));
    CHECK(pdx::equivalent(
        Formula::conjunction(p, Formula::disjunction(q, r)),
        Formula::disjunction(Formula::conjunction(p, q), Formula::conjunction(p, r))));
    CHECK(pdx::equivalent(Formula::negation(Formula::conjunction(p, q)),
                          Formula::disjunction(Formula::negation(p), Formula::negation(q))));
    CHECK(pdx::equivalent(Formula::conjunction(p, p), p));
    CHECK(pdx::equivalent(Formula::negation(Formula::top()), Formula::bottom()));

    // Excluded middle and explosion fail: p -> N is a counter-assignment.
    CHECK_FALSE(pdx::equivalent(Formula::disjunction(p, Formula::negation(p)), Formula::top()));
    CHECK_FALSE(pdx::equivalent(Formula::conjunction(p, Formula::negation(p)), Formula::bottom()));
    CHECK_FALSE(pdx::equivalent(Formula::conjunction(p, Formula::negation(p)),
                                Formula::conjunction(q, Formula::negation(q))));
}

TEST_CASE("equivalence agrees with truth-table signatures and is a congruence") {
    pdxtest::Rng rng(7);
    const std::vector<std::string> atoms = {"p", "q", "r"};

    // Independent oracle: the full value vector over all 4^3 assignments.
    const auto signature = [&](const Formula& f) {
        static constexpr FourValue kAll[4] = {FourValue::N, FourValue::T, FourValue::F,
                                              FourValue::B};
        std::vector<FourValue> values(3);
        std::string sig;
        for (int code = 0; code < 64; ++code) {
            int rest = code;
            for (int i = 0; i < 3; ++i) {
                values[static_cast<std::size_t>(i)] = kAll[rest & 3];
                rest >>= 2;
            }
            sig += pdx::four_value_letter(pdx::evaluate(f, atoms, values));
        }
        return sig;
    };

    std::vector<Formula> corpus;
    for (int i = 0; i < 30; ++i) corpus.push_back(pdxtest::random_formula(rng, atoms, 4));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(pdx::equivalent(corpus[i], corpus[i])); // reflexive
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            const bool eq = pdx::equivalent(corpus[i], corpus[j]);
            CHECK(eq == (signature(corpus[i]) == signature(corpus[j])));
            CHECK(eq == pdx::equivalent(corpus[j], corpus[i])); // symmetric
            if (eq) {
                // Congruence for the three connectives.
                const Formula c = corpus[(i + j) % corpus.size()];
                CHECK(pdx::equivalent(Formula::negation(corpus[i]), Formula::negation(corpus[j])));
                CHECK(pdx::equivalent(Formula::conjunction(corpus[i], c),
                                      Formula::conjunction(corpus[j], c)));
                CHECK(pdx::equivalent(Formula::disjunction(corpus[i], c),
                                      Formula::disjunction(corpus[j], c)));
            }
        }
    }
}

TEST_CASE("equivalence refuses oversized atom sets") {
    Formula big = atom("a0");
    for (int i = 1; i <= 10; ++i) {
        big = Formula::conjunction(big, Formula::atom("a" + std::to_string(i)));
    }
    CHECK_THROWS_AS(pdx::equivalent(big, big), pdx::Error);
}

TEST_CASE("atom names are validated") {
    CHECK_THROWS_AS(Formula::atom(""), pdx::Error);
    CHECK_THROWS_AS(Formula::atom("1p"), pdx::Error);
    CHECK_THROWS_AS(Formula::atom("top"), pdx::Error);
    CHECK(Formula::atom("p_1").atom_name() == "p_1");
}

TEST_CASE("the parser survives arbitrary input: tree or ParseError, nothing else") {
    pdxtest::Rng rng(424242);
    const char alphabet[] = "pq r()&|~!_abc01\t\nZ#";
    for (int round = 0; round < 2000; ++round) {
        std::string text;
        const int len = rng.range(0, 24);
        for (int i = 0; i < len; ++i) {
            text += alphabet[static_cast<std::size_t>(
                rng.range(0, static_cast<int>(sizeof(alphabet)) - 2))];
        }
        try {
            const Formula f = pdx::parse_formula(text);
            CHECK(pdx::parse_formula(f.to_string()) == f);
        } catch (const pdx::ParseError& e) {
            CHECK(e.offset() <= text.size());
        }
    }
}
