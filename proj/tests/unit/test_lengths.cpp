#include <doctest.h>

#include "rex/automata/compile.hpp"
#include "rex/lengths/progression.hpp"
#include "rex/oracle/brute_force.hpp"
#include "rex/oracle/generate.hpp"

using namespace rex;

namespace {

void check_exact(const ProgressionSet& set, const std::set<std::size_t>& truth, std::size_t bound)
{
    for (std::size_t n = 0; n <= bound; ++n)
        REQUIRE_MESSAGE(set.contains(n) == truth.contains(n), "length " << n << " set " << set.to_json());
}

} // namespace

TEST_CASE("a(aa)* has odd lengths")
{
    Alphabet a("a");
    auto m = compile_regex(*re_concat(re_literal('a'), re_star(re_word("aa"))), a);
    auto set = length_abstraction(m);
    CHECK(set.progressions() == std::vector<Progression>{{1, 2}});
    CHECK(progression_member(set, 7));
    CHECK_FALSE(progression_member(set, 4));
    CHECK(nfa_length_set(m, 10) == std::set<std::size_t>{1, 3, 5, 7, 9});
}

TEST_CASE("single looping state accepts every length")
{
    Alphabet a("a");
    Nfa m(a, 1);
    m.set_final(0);
    m.add_transition(0, 0, 0);
    CHECK(length_abstraction(m).progressions() == std::vector<Progression>{{0, 1}});
    CHECK(nfa_length_set(m, 3) == std::set<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("empty language has no lengths")
{
    Alphabet a("a");
    CHECK(length_abstraction(compile_regex(*re_empty(), a)).empty());
    CHECK(nfa_length_set(compile_regex(*re_empty(), a), 10).empty());
}

TEST_CASE("two cycles in sequence")
{
    // q0 -a-> q1, q1 loops with period 2, q1 -a-> q2, q2 loops with period 3, q2 final.
    Alphabet a("a");
    Nfa m(a, 5);
    m.add_transition(0, 0, 1);
    m.add_transition(1, 0, 3);
    m.add_transition(3, 0, 1);
    m.add_transition(1, 0, 2);
    m.add_transition(2, 0, 4);
    m.add_transition(4, 0, 4 - 2);
    m.set_final(2);
    Nfa fixed(a, 6);
    fixed.add_transition(0, 0, 1);
    fixed.add_transition(1, 0, 3);
    fixed.add_transition(3, 0, 1);
    fixed.add_transition(1, 0, 2);
    fixed.add_transition(2, 0, 4);
    fixed.add_transition(4, 0, 5);
    fixed.add_transition(5, 0, 2);
    fixed.set_final(2);
    check_exact(length_abstraction(fixed), nfa_length_set(fixed, 80), 80);
    check_exact(length_abstraction(m), nfa_length_set(m, 80), 80);
}

TEST_CASE("random automata: exact up to 50, offsets and periods bounded")
{
    Rng rng(2024);
    for (int round = 0; round < 200; ++round) {
        Alphabet alphabet(round % 2 ? "ab" : "a");
        auto states = 1 + static_cast<std::size_t>(round % 8);
        auto m = random_nfa(rng, alphabet, states, 0.2 + 0.05 * (round % 4), 0.3);
        auto set = length_abstraction(m);
        auto truth = nfa_length_set(m, 50);
        check_exact(set, truth, 50);
        auto reachable = reachable_from(m, m.initial());
        auto count = static_cast<std::uint64_t>(std::count(reachable.begin(), reachable.end(), true));
        for (const auto& p : set.progressions()) {
            CHECK(p.offset <= exactness_threshold(count));
            CHECK(p.period <= count);
        }
    }
}

TEST_CASE("soundness: every member up to 50 has a word of that length")
{
    Rng rng(77);
    Alphabet ab("ab");
    for (int round = 0; round < 60; ++round) {
        auto m = random_nfa(rng, ab, 1 + round % 7, 0.25, 0.3);
        auto set = length_abstraction(m);
        for (std::size_t n = 0; n <= 50; ++n)
            if (set.contains(n))
                CHECK(word_of_length(m, n).has_value());
    }
}

TEST_CASE("normalized sets contain no subsumed members")
{
    ProgressionSet s({{3, 0}, {1, 2}, {5, 4}, {7, 2}, {0, 0}});
    CHECK(s.progressions() == std::vector<Progression>{{0, 0}, {1, 2}});
    CHECK(s.to_json() == R"([{"offset":0,"period":0},{"offset":1,"period":2}])");
}

TEST_CASE("products use their reachable tuples")
{
    Rng rng(5);
    Alphabet ab("ab");
    for (int round = 0; round < 60; ++round) {
        std::vector<ProductMember> members;
        for (int k = 0; k < 3; ++k)
            members.push_back({std::make_shared<const Nfa>(random_nfa(rng, ab, 3, 0.35, 0.5)), MemberMode::AsIs, {}, {}});
        LazyProduct p(members);
        LazyProduct q(members);
        check_exact(length_abstraction(p), nfa_length_set(q, 50), 50);
    }
}
