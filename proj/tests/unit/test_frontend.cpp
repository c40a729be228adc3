#include <doctest.h>

#include <random>

#include "rex/frontend/classify.hpp"
#include "rex/frontend/eval.hpp"
#include "rex/frontend/nnf.hpp"
#include "rex/frontend/parser.hpp"
#include "rex/frontend/printer.hpp"
#include "rex/oracle/generate.hpp"

using namespace rex;

namespace {

const char* example_c = R"(
(declare-fun x1 () String)
(assert (str.in_re x1 (re.* (str.to_re "1"))))
(assert (numstr 15 x1))
(assert (>= (str.len x1) 3))
)";

std::vector<std::string> words_up_to(const Alphabet& a, std::size_t n)
{
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < n)
            for (char c : a.symbols())
                out.push_back(out[i] + c);
    return out;
}

} // namespace

TEST_CASE("parse a single membership atom")
{
    auto f = parse_script("(declare-fun x () String)(assert (str.in_re x (re.* (str.to_re \"1\"))))");
    REQUIRE(f.atoms.size() == 1);
    const auto& m = std::get<MembershipAtom>(f.atoms[0]);
    CHECK(m.positive);
    CHECK(m.pattern == Pattern::variable("x"));
    CHECK(m.regex->kind == RegexKind::Star);
    CHECK(f.root.kind == NodeKind::Atom);
}

TEST_CASE("parse numstr with a constant")
{
    auto f = parse_script("(declare-fun x () String)(assert (numstr 15 x))");
    const auto& n = std::get<NumstrAtom>(f.atoms.at(0));
    CHECK(n.number.is_constant());
    CHECK(n.number.constant == 15);
    CHECK(n.word == Pattern::variable("x"));
    CHECK(n.positive);
    CHECK(f.alphabet.symbols() == "01");
}

TEST_CASE("arity violation is a syntax error with a position")
{
    try {
        parse_script("(declare-fun x () String)\n(assert (str.in_re x))");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 9);
    }
}

TEST_CASE("sort and symbol errors")
{
    CHECK_THROWS_AS(parse_script("(declare-fun i () Int)(assert (>= (str.len i) 1))"), SortError);
    CHECK_THROWS_AS(parse_script("(assert (str.in_re y (str.to_re \"a\")))"), UnknownSymbol);
    CHECK_THROWS_AS(parse_script("(declare-fun x () String)(assert (str.in_re x (re.+ (str.to_re \"a\"))))"),
                    UnknownSymbol);
    CHECK_THROWS_AS(parse_script("(declare-fun x () String)(assert (str.in_re x (str.to_re \"a\"))"), SyntaxError);
    CHECK_THROWS_AS(parse_script("(set-info :alphabet \"ab\")(declare-fun x () String)(assert (str.in_re x (str.to_re \"c\")))"),
                    SortError);
}

TEST_CASE("alphabet declaration and re.allchar")
{
    auto f = parse_script("(set-info :alphabet \"abc\")(declare-fun x () String)(assert (str.in_re x re.allchar))");
    CHECK(f.alphabet.symbols() == "abc");
    const auto& m = std::get<MembershipAtom>(f.atoms[0]);
    for (char c : std::string("abc"))
        CHECK(regex_matches(*m.regex, std::string(1, c), f.alphabet));
    CHECK_FALSE(regex_matches(*m.regex, "ab", f.alphabet));
}

TEST_CASE("string equality parses as a word equation")
{
    auto f = parse_script("(declare-fun x () String)(declare-fun y () String)(assert (= x (str.++ y \"a\")))");
    const auto& w = std::get<WordEqAtom>(f.atoms.at(0));
    CHECK(w.rhs.items.size() == 2);
}

TEST_CASE("cdepth follows the sum and nesting rules")
{
    auto a = re_literal('a'), b = re_literal('b'), c = re_literal('c');
    CHECK(cdepth(*re_concat(a, re_star(b))) == 0);
    CHECK(cdepth(*re_complement(re_star(a))) == 1);
    auto r = re_union(re_complement(re_concat(a, re_complement(b))), re_complement(c));
    CHECK(cdepth(*r) == 3);
}

TEST_CASE("cdepth is zero exactly when no complement occurs")
{
    Rng rng(7);
    Alphabet ab("ab");
    for (int i = 0; i < 300; ++i) {
        auto r = random_regex(rng, ab, 1 + i % 12, i % 3);
        CHECK((cdepth(*r) == 0) == !has_complement(*r));
        CHECK(cdepth(*r) <= static_cast<std::size_t>(i % 3));
    }
}

TEST_CASE("nnf pushes negation to atoms")
{
    auto f = parse_script(R"(
        (declare-fun x () String)
        (assert (not (or (str.in_re x (str.to_re "a")) (not (str.in_re x (re.* (str.to_re "b")))))))
    )");
    auto g = to_nnf(f);
    CHECK(is_nnf(g.root));
    REQUIRE(g.root.kind == NodeKind::And);
    CHECK_FALSE(std::get<MembershipAtom>(g.atoms[g.root.children[0].atom]).positive);
    CHECK(std::get<MembershipAtom>(g.atoms[g.root.children[1].atom]).positive);
}

TEST_CASE("negated length bound becomes the complementary integer bound")
{
    auto f = parse_script(R"(
        (declare-fun x () String)
        (assert (not (and (str.in_re x (str.to_re "a")) (<= (str.len x) 3))))
    )");
    auto g = to_nnf(f);
    REQUIRE(g.root.kind == NodeKind::Or);
    const auto& lin = std::get<LinearAtom>(g.atoms[g.root.children[1].atom]);
    CHECK(lin.relation == Relation::Ge);
    CHECK(lin.rhs.constant == 4);
    Alphabet ab("ab");
    for (const auto& w : words_up_to(g.alphabet, 5)) {
        Model m{{{"x", w}}, {}};
        CHECK(evaluate_partial(f, m) == evaluate_partial(g, m));
    }
}

TEST_CASE("nnf preserves truth on bounded assignments")
{
    Rng rng(11);
    Alphabet ab("ab");
    FormulaShape shape;
    shape.max_string_vars = 2;
    auto words = words_up_to(ab, 4);
    for (int round = 0; round < 40; ++round) {
        auto f = random_slc_formula(rng, ab, shape);
        f.declarations.push_back({"i", Sort::Int});
        LinearAtom eq{LinearTerm::of_int("i"), Relation::Eq, LinearTerm::of_len("x1")};
        std::vector<Node> parts;
        parts.push_back(std::move(f.root));
        parts.push_back(Node::negation(Node::leaf(f.add_atom(eq))));
        f.root = Node::negation(Node::disjunction(std::move(parts)));
        auto g = to_nnf(f);
        REQUIRE(is_nnf(g.root));
        for (const auto& w1 : words)
            for (const auto& w2 : words)
                for (std::int64_t i = -3; i <= 5; i += 4) {
                    Model m{{{"x1", w1}, {"x2", w2}}, {{"i", i}}};
                    if (f.declarations.size() < 3)
                        m.strings.erase("x2");
                    CHECK(evaluate_partial(f, m) == evaluate_partial(g, m));
                }
    }
}

TEST_CASE("classifier tags the worked example as A_sln")
{
    auto tag = classify_theory(parse_script(example_c));
    CHECK(tag.base == 's');
    CHECK(tag.flags.length);
    CHECK(tag.flags.numstr);
    CHECK_FALSE(tag.flags.concat);
    CHECK(tag.theory_name() == "A_sln");
    CHECK(tag.decidability == Decidability::PSpaceComplete);
}

TEST_CASE("classifier decidability table")
{
    auto tag = classify_theory(parse_script("(declare-fun x () String)(assert (str.in_re x (re.* (str.to_re \"a\"))))"));
    CHECK(tag.theory_name() == "A_s");
    CHECK(tag.decidability == Decidability::PSpaceComplete);

    auto full = classify_theory(parse_script(R"(
        (declare-fun x () String)(declare-fun y () String)
        (assert (str.in_re (str.++ x y) (re.comp (str.to_re "1"))))
        (assert (numstr 3 x))
        (assert (>= (str.len y) 1))
    )"));
    CHECK(full.theory_name() == "A_elnc");
    CHECK(full.decidability == Decidability::Undecidable);

    TheoryFlags f;
    CHECK(decidability_of('s', f) == Decidability::PSpaceComplete);
    f.concat = true;
    CHECK(decidability_of('s', f) == Decidability::PSpaceComplete);
    CHECK(decidability_of('e', f) == Decidability::Decidable);
    f.numstr = true;
    CHECK(decidability_of('s', f) == Decidability::Open);
    CHECK(decidability_of('e', f) == Decidability::Open);
    f.concat = false;
    f.length = true;
    CHECK(decidability_of('s', f) == Decidability::PSpaceComplete);
    CHECK(decidability_of('e', f) == Decidability::Open);
    f.length = false;
    CHECK(decidability_of('e', f) == Decidability::Decidable);
    f = {};
    f.length = true;
    f.word_equations = true;
    CHECK(decidability_of('s', f) == Decidability::Open);
}

TEST_CASE("classification is monotone under adding atoms")
{
    Rng rng(3);
    Alphabet ab("ab");
    for (int round = 0; round < 100; ++round) {
        auto f = random_slc_formula(rng, ab);
        auto before = classify_theory(f);
        auto extra = random_slc_formula(rng, ab);
        for (auto& d : extra.declarations)
            if (!f.sort_of(d.name))
                f.declarations.push_back(d);
        for (const auto& a : extra.atoms)
            f.conjoin(Node::leaf(f.add_atom(a)));
        auto after = classify_theory(f);
        CHECK((!before.flags.length || after.flags.length));
        CHECK((!before.flags.concat || after.flags.concat));
        CHECK((!before.flags.numstr || after.flags.numstr));
        CHECK(after.complement_depth >= before.complement_depth);
    }
}

TEST_CASE("classification json has a fixed key order")
{
    auto tag = classify_theory(parse_script(example_c));
    CHECK(classification_json("c.smt2", tag)
          == R"({"file":"c.smt2","base":"s","flags":["length","numstr"],"cdepth":0,"theory_name":"A_sln","decidability":"PSpaceComplete"})");
}

TEST_CASE("printed scripts parse back to the same text")
{
    Rng rng(5);
    Alphabet ab("ab");
    for (int round = 0; round < 100; ++round) {
        auto f = random_slc_formula(rng, ab);
        auto text = print_script(f);
        auto g = parse_script(text);
        CHECK(print_script(g) == text);
    }
    auto c = parse_script(example_c);
    CHECK(print_script(parse_script(print_script(c))) == print_script(c));
}

TEST_CASE("model printing round-trips")
{
    auto f = parse_script("(declare-fun x () String)(declare-fun i () Int)(assert true)");
    Model m{{{"x", "a\"b"}}, {{"i", -5}}};
    f.alphabet.extend("a\"b");
    auto text = print_model(f, m);
    CHECK(text.find("(- 5)") != std::string::npos);
    CHECK(parse_model("sat\n" + text) == m);
}

TEST_CASE("evaluator semantics")
{
    auto f = parse_script(example_c);
    CHECK(verify_model(f, Model{{{"x1", "1111"}}, {}}));
    CHECK_FALSE(verify_model(f, Model{{{"x1", "111"}}, {}}));
    CHECK_FALSE(verify_model(f, Model{{{"x1", "1121"}}, {}}));
    CHECK_FALSE(verify_model(f, Model{}));
}

TEST_CASE("complement is relative to the alphabet")
{
    Alphabet ab("ab");
    auto not_ab_star = re_complement(re_star(re_word("ab")));
    CHECK(regex_matches(*not_ab_star, "a", ab));
    CHECK_FALSE(regex_matches(*not_ab_star, "abab", ab));
    CHECK_FALSE(regex_matches(*not_ab_star, "", ab));
    CHECK_FALSE(regex_matches(*not_ab_star, "c", ab));
}
