#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rex/automata/compile.hpp"
#include "rex/automata/lazy_product.hpp"
#include "rex/encodings/encodings.hpp"
#include "rex/frontend/classify.hpp"
#include "rex/frontend/eval.hpp"
#include "rex/frontend/parser.hpp"
#include "rex/frontend/printer.hpp"
#include "rex/lengths/progression.hpp"
#include "rex/numstr/binary.hpp"
#include "rex/oracle/brute_force.hpp"
#include "rex/oracle/generate.hpp"
#include "rex/solver/solver.hpp"

namespace fs = std::filesystem;
using namespace rex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail)
{
    if (!pass)
        ++failures;
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::vector<std::string> words_up_to(const Alphabet& a, std::size_t max_len)
{
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < max_len)
            for (char c : a.symbols())
                out.push_back(out[i] + c);
    return out;
}

void worked_example()
{
    const double limit = 1.0;
    auto start = Clock::now();
    auto f = parse_script(R"((declare-fun x1 () String)
(assert (and (str.in_re x1 (re.* (str.to_re "1"))) (numstr 15 x1) (>= (str.len x1) 3))))");
    auto v = solve(f);
    double t = seconds_since(start);
    bool pass = v.kind == VerdictKind::Sat && v.model->strings.at("x1") == "1111" && verify_model(f, *v.model) &&
                bin_value(v.model->strings.at("x1")) == 15 && t < limit;
    std::ostringstream d;
    d << "x1=\"" << (v.model ? v.model->strings.at("x1") : std::string("-")) << "\" in " << t << " s (limit < "
      << limit << " s)";
    report(1, "worked example", pass, d.str());
}

void slc_oracle_equivalence()
{
    const int count = 1000;
    const double limit = 300.0;
    auto start = Clock::now();
    Rng rng(20240601);
    Alphabet ab("ab");
    FormulaShape shape;
    shape.max_string_vars = 3;
    shape.max_atoms = 4;
    shape.max_regex_size = 12;
    shape.max_length_constant = 6;
    int disagreements = 0;
    int sat = 0;
    int unsat = 0;
    int unknown = 0;
    for (int k = 0; k < count; ++k) {
        auto f = random_slc_formula(rng, ab, shape);
        auto v = solve(f);
        auto r = brute_force_solve(f, {6, 0, 200'000'000});
        bool bad = false;
        if (v.kind == VerdictKind::Sat)
            bad = !verify_model(f, *v.model);
        if (r.status == OracleStatus::Sat && v.kind != VerdictKind::Sat)
            bad = true;
        if (v.kind == VerdictKind::Unsat && r.status == OracleStatus::Sat)
            bad = true;
        if (bad) {
            ++disagreements;
            std::fprintf(stderr, "disagreement:\n%s\n", print_script(f).c_str());
        }
        sat += v.kind == VerdictKind::Sat;
        unsat += v.kind == VerdictKind::Unsat;
        unknown += v.kind == VerdictKind::Unknown;
    }
    double t = seconds_since(start);
    std::ostringstream d;
    d << count << " formulas (" << sat << " sat, " << unsat << " unsat, " << unknown << " unknown), "
      << disagreements << " disagreements, " << t << " s (limit < " << limit << " s)";
    report(2, "slc oracle equivalence", disagreements == 0 && t < limit, d.str());
}

void complement_semantics()
{
    const int count = 200;
    Rng rng(777);
    Alphabet ab("ab");
    auto words = words_up_to(ab, 6);
    int violations = 0;
    for (int k = 0; k < count; ++k) {
        auto r = random_regex(rng, ab, 3 + static_cast<std::size_t>(k % 10), 2);
        auto plain = compile_regex(*r, ab);
        auto negated = compile_regex(*re_complement(r), ab);
        for (const auto& w : words)
            if (nfa_membership(negated, w) == nfa_membership(plain, w))
                ++violations;
    }
    std::ostringstream d;
    d << count << " regexes with cdepth <= 2, " << words.size() << " words each, " << violations << " violations";
    report(3, "complement semantics", violations == 0, d.str());
}

void length_exactness()
{
    const int count = 500;
    const std::size_t horizon = 50;
    Rng rng(4242);
    Alphabet ab("ab");
    int violations = 0;
    int products = 0;
    for (int k = 0; k < count;) {
        std::size_t states = 1 + rng() % 8;
        std::vector<bool> member;
        std::set<std::size_t> expected;
        ProgressionSet set;
        if (k % 2 == 0) {
            auto m = random_nfa(rng, ab, states);
            expected = nfa_length_set(m, horizon);
            set = length_abstraction(m);
        } else {
            auto a = std::make_shared<const Nfa>(random_nfa(rng, ab, 1 + rng() % 4));
            auto b = std::make_shared<const Nfa>(random_nfa(rng, ab, 1 + rng() % 4));
            LazyProduct p({{a}, {b}});
            auto explicit_form = p.materialize();
            if (explicit_form.state_count() > 8)
                continue;
            expected = nfa_length_set(explicit_form, horizon);
            set = length_abstraction(explicit_form);
            ++products;
        }
        for (std::size_t n = 0; n <= horizon; ++n)
            if (progression_member(set, n) != expected.contains(n))
                ++violations;
        ++k;
    }
    std::ostringstream d;
    d << count << " automata (" << products << " products), n <= " << horizon << ", " << violations << " violations";
    report(4, "length abstraction exactness", violations == 0, d.str());
}

void numstr_semantics()
{
    const std::uint64_t top = std::uint64_t{1} << 16;
    bool examples = bin_value("1111") == 15 && bin_value("01111") == 15 && bin_value("10") == 2 && bin_value("10") != 3;
    std::uint64_t violations = 0;
    for (std::uint64_t n = 0; n <= top; ++n)
        if (bin_value(min_bin(n)) != n)
            ++violations;
    std::ostringstream d;
    d << "examples " << (examples ? "hold" : "fail") << ", round trip n <= 2^16: " << violations << " violations";
    report(5, "numstr semantics", examples && violations == 0, d.str());
}

void encodings()
{
    const double limit = 600.0;
    const OracleBounds bounds{12, 1 << 14, 500'000'000};
    auto start = Clock::now();
    auto words = words_up_to(Alphabet("01"), 4);
    int mismatches = 0;
    int pairs = 0;
    for (const auto& a : words)
        for (const auto& b : words) {
            ++pairs;
            auto pa = Pattern::word(a);
            auto pb = Pattern::word(b);
            auto check = [&](const Encoding& e, bool expected, const char* name) {
                auto r = brute_force_solve(e.formula, bounds);
                bool sat = r.status == OracleStatus::Sat && verify_model(e.formula, *r.model);
                if (sat != expected) {
                    ++mismatches;
                    std::fprintf(stderr, "%s(\"%s\", \"%s\"): expected %d\n", name, a.c_str(), b.c_str(), expected);
                }
            };
            check(encode_eq_len(pa, pb), a.size() == b.size(), "eqLen");
            check(encode_leq_len(pa, pb), a.size() <= b.size(), "leqLen");
            check(encode_eq(pa, pb), a == b, "eq");
        }
    double t = seconds_since(start);
    std::ostringstream d;
    d << pairs << " pairs x 3 encoders, " << mismatches << " mismatches, " << t << " s (limit < " << limit << " s)";
    report(6, "encodings", mismatches == 0 && pairs == 961 && t < limit, d.str());
}

void classifier_golden(const fs::path& dir)
{
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".smt2")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    int mismatches = 0;
    int undecidable = 0;
    int unsound = 0;
    for (const auto& file : files) {
        std::ifstream in(file);
        std::stringstream text;
        text << in.rdbuf();
        auto f = parse_script(text.str());
        auto tag = classify_theory(f);
        auto line = classification_json(file.filename().string(), tag) + "\n";
        auto golden_path = file;
        golden_path.replace_extension(".json");
        std::ifstream golden(golden_path);
        std::stringstream expected;
        expected << golden.rdbuf();
        if (line != expected.str()) {
            ++mismatches;
            std::fprintf(stderr, "golden mismatch for %s:\n  got      %s  expected %s", file.filename().c_str(),
                         line.c_str(), expected.str().c_str());
        }
        if (tag.decidability == Decidability::Undecidable) {
            ++undecidable;
            auto v = solve(f);
            bool ok = (v.kind == VerdictKind::Unknown && v.reason == UnknownReason::UndecidableFragment) ||
                      (v.kind == VerdictKind::Sat && verify_model(f, *v.model));
            if (!ok)
                ++unsound;
        }
    }
    std::ostringstream d;
    d << files.size() << " files, " << mismatches << " mismatches; " << undecidable << " undecidable inputs, " << unsound
      << " bad verdicts";
    report(7, "classifier golden suite", files.size() == 12 && mismatches == 0 && unsound == 0, d.str());
}

void lazy_product_frugality()
{
    const std::size_t k = 6;
    const int rounds = 20;
    Rng rng(6060);
    Alphabet ab("ab");
    int violations = 0;
    std::size_t lazy_total = 0;
    std::size_t eager_total = 0;
    for (int round = 0; round < rounds; ++round) {
        // Four literals give a five-state position automaton.
        auto f = intersection_family(rng, ab, k, 4);
        std::vector<Nfa> members;
        std::vector<ProductMember> parts;
        for (const auto& atom : f.atoms) {
            members.push_back(glushkov(*std::get<MembershipAtom>(atom).regex, ab));
            parts.push_back({std::make_shared<const Nfa>(members.back())});
        }
        auto eager = explicit_product_reachable(members);
        LazyProduct product(parts);
        auto empty = is_empty(product).empty;
        SolveStats stats;
        auto v = solve(f, {}, &stats);
        bool agrees = empty ? v.kind == VerdictKind::Unsat : v.kind == VerdictKind::Sat;
        if (!agrees || product.tuples_expanded() > eager || stats.tuples_expanded > eager)
            ++violations;
        lazy_total += product.tuples_expanded();
        eager_total += eager;
    }
    std::ostringstream d;
    d << rounds << " families of k = " << k << " five-state NFAs, expanded " << lazy_total << " of " << eager_total
      << " reachable tuples, " << violations << " violations";
    report(8, "lazy product frugality", violations == 0, d.str());
}

} // namespace

int main(int argc, char** argv)
{
    fs::path golden = argc > 1 ? fs::path(argv[1]) : fs::path(REX_GOLDEN_DIR);
    worked_example();
    slc_oracle_equivalence();
    complement_semantics();
    length_exactness();
    numstr_semantics();
    encodings();
    classifier_golden(golden);
    lazy_product_frugality();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
