#include "support.hpp"

#include "htceq/error.hpp"
#include "htceq/syntax.hpp"

#include <gtest/gtest.h>

using namespace htceq;
using namespace htceq::testing;

namespace {

LinearAtom s(Comparator cmp, Integer k) { return LinearAtom{{Term{1, "s"}}, cmp, k}; }

TProgram program(std::string const &text) { return parse_program(text).program; }

TAtomSet atoms(std::initializer_list<TAtom> list) { return TAtomSet(list); }

TProgram const running = program(":- not a, &sum{s}>=120.\n"
                                 "a :- &sum{s}>100.\n"
                                 "&sum{s}=130.\n");

} // namespace

TEST(TProgram, ExternalClosure) {
    EXPECT_EQ(running.externals(),
              (LinearAtomSet{s(Comparator::ge, 120), s(Comparator::lt, 120), s(Comparator::gt, 100), s(Comparator::le, 100)}));
    EXPECT_EQ(running.founded(), LinearAtomSet{s(Comparator::eq, 130)});
    EXPECT_EQ(running.regular_atoms(), std::set<std::string>{"a"});
    EXPECT_EQ(running.theory_variables(), VariableSet{"s"});
    auto const declared = running.with_externals({s(Comparator::eq, 130)});
    EXPECT_TRUE(declared.founded().empty());
    EXPECT_EQ(declared.externals().count(s(Comparator::ne, 130)), 1U);
}

TEST(TProgram, MergeNeedsSameBounds) {
    EXPECT_THROW((void)merge(running, running.with_bounds({0, 3})), PreconditionViolation);
    EXPECT_EQ(merge(running, running).rules().size(), 3U);
}

TEST(CompCompletion, Examples) {
    auto const p = s(Comparator::gt, 0);
    auto const cp = complement(p);
    EXPECT_EQ(comp_completion({p}, {p, cp}), LinearAtomSet{p});
    EXPECT_EQ(comp_completion({}, {p, cp}), (LinearAtomSet{p, cp}));
    EXPECT_EQ(comp_completion({s(Comparator::eq, 2)}, {}), LinearAtomSet{s(Comparator::eq, 2)});
}

TEST(IsSolution, Examples) {
    LinearOptions const wide{Bounds{0, 200}};
    LinearAtomSet const e{s(Comparator::gt, 100), s(Comparator::le, 100)};
    EXPECT_TRUE(is_solution({s(Comparator::gt, 100)}, e, wide));
    EXPECT_FALSE(is_solution({}, e, wide));
    EXPECT_FALSE(is_solution({s(Comparator::eq, 1), s(Comparator::eq, 2)}, {}, LinearOptions{Bounds{0, 5}}));
}

TEST(StableModels, RunningExample) {
    TAtomSet const expected = atoms({TAtom::reg("a"), TAtom::th(s(Comparator::eq, 130)), TAtom::th(s(Comparator::gt, 100)),
                                     TAtom::th(s(Comparator::ge, 120))});
    EXPECT_EQ(theory_stable_models_def3(running).models, std::set<TAtomSet>{expected});
    EXPECT_EQ(theory_stable_models_def4(running), std::set<TAtomSet>{expected});
}

TEST(StableModels, SmallPrograms) {
    EXPECT_EQ(theory_stable_models_def3(TProgram{}).models, std::set<TAtomSet>{{}});
    EXPECT_EQ(theory_stable_models_def4(TProgram{}), std::set<TAtomSet>{{}});
    EXPECT_TRUE(theory_stable_models_def3(program(":- not p.")).models.empty());
    EXPECT_TRUE(theory_stable_models_def4(program(":- not p.")).empty());

    auto const gt = s(Comparator::gt, 0);
    auto const le = s(Comparator::le, 0);
    TProgram const choice{{}, {gt}};
    EXPECT_EQ(theory_stable_models_def4(choice), (std::set<TAtomSet>{{TAtom::th(gt)}, {TAtom::th(le)}}));
    EXPECT_EQ(theory_stable_models_def3(choice).models, theory_stable_models_def4(choice));
    auto const forbid = program(":- &sum{s}>0.");
    EXPECT_EQ(theory_stable_models_def4(forbid), std::set<TAtomSet>{{TAtom::th(le)}});
}

TEST(StableModels, UnsatisfiableTheoryPartIsDropped) {
    // both founded facts are derived but cannot hold together
    auto const p = program("&sum{s}=1. &sum{s}=2.");
    EXPECT_TRUE(theory_stable_models_def4(p).empty());
    EXPECT_TRUE(theory_stable_models_def3(p).models.empty());
}

TEST(AnswerSets, Examples) {
    auto const answers = answer_sets(running);
    ASSERT_EQ(answers.size(), 1U);
    EXPECT_EQ(answers.begin()->to_string(), "{a}, s=130");
    EXPECT_EQ(answer_sets(TProgram{}), std::set<AnswerSet>{AnswerSet{}});
    auto const two = answer_sets(program("#bounds 0..1. &sum{s}>=0."));
    EXPECT_EQ(two, (std::set<AnswerSet>{AnswerSet{{}, {{"s", DomainValue::integer(0)}}},
                                        AnswerSet{{}, {{"s", DomainValue::integer(1)}}}}));
}

TEST(SatisfiesLiteral, Examples) {
    AnswerSet const a{{"a"}, {{"s", DomainValue::integer(130)}}};
    EXPECT_TRUE(satisfies_literal(a, TAtom::reg("a"), false, Bounds{}));
    EXPECT_FALSE(satisfies_literal(a, TAtom::reg("a"), true, Bounds{}));
    EXPECT_TRUE(satisfies_literal(AnswerSet{}, TAtom::th(s(Comparator::gt, 0)), false, Bounds{0, 5}));
    AnswerSet const zero{{}, {{"s", DomainValue::integer(0)}}};
    EXPECT_FALSE(satisfies_literal(zero, TAtom::th(s(Comparator::gt, 0)), false, Bounds{0, 5}));
    EXPECT_TRUE(satisfies_literal(zero, TAtom::th(s(Comparator::gt, 0)), true, Bounds{0, 5}));
    EXPECT_FALSE(satisfies_literal(AnswerSet{}, TAtom::th(s(Comparator::gt, 5)), false, Bounds{0, 5}));
}

TEST(StableOfAnswer, Examples) {
    EXPECT_EQ(stable_of_answer(running, *answer_sets(running).begin()),
              atoms({TAtom::reg("a"), TAtom::th(s(Comparator::eq, 130)), TAtom::th(s(Comparator::gt, 100)),
                     TAtom::th(s(Comparator::ge, 120))}));
    EXPECT_EQ(stable_of_answer(TProgram{}, AnswerSet{}), TAtomSet{});
    auto const fact = program("&sum{s}>=0.");
    EXPECT_EQ(stable_of_answer(fact, AnswerSet{{}, {{"s", DomainValue::integer(1)}}}),
              atoms({TAtom::th(s(Comparator::ge, 0))}));
}

TEST(ChoiceProgram, OneChoicePerPair) {
    auto const k = choice_program(running);
    EXPECT_EQ(k.rules.size(), 5U);
    auto const bare = choice_program(TProgram{{}, {s(Comparator::gt, 0), s(Comparator::le, 0)}});
    ASSERT_EQ(bare.rules.size(), 1U);
    EXPECT_EQ(bare.rules[0].head.size(), 2U);
    EXPECT_TRUE(choice_program(TProgram{}).rules.empty());
}

TEST(Properties, CorpusSemantics) {
    auto const programs = corpus(120, 101);
    for (auto const &p : programs) {
        auto const def3 = theory_stable_models_def3(p);
        auto const def4 = theory_stable_models_def4(p);
        ASSERT_EQ(def3.models, def4) << render_program(p);
        for (auto const &x : def4) {
            for (auto const &atom : x) {
                if (atom.is_theory()) {
                    ASSERT_EQ(x.count(TAtom::th(complement(atom.linear()))), 0U) << "complementary pair";
                }
            }
        }
        for (auto const &answer : answer_sets(p)) {
            auto const x = stable_of_answer(p, answer);
            ASSERT_EQ(def4.count(x), 1U) << render_program(p) << answer.to_string();
        }
        // regular engine on the choice program agrees with the reduct oracle
        ASSERT_EQ(regular_stable_models(choice_program(p)), oracle_stable(choice_program(p)));
    }
}
