#include <doctest.h>

#include "support.hpp"
#include "wfa/casestudy.hpp"
#include "wfa/memo.hpp"

using namespace wfa;
using wfa::test::random_wfa;

TEST_SUITE("memo") {

TEST_CASE("entry counts") {
    CHECK(memo_entry_count(2, 1) == 2);
    CHECK(memo_entry_count(2, 3) == 14);
    CHECK(memo_entry_count(4, 7) == 21844);
    CHECK(memo_entry_count(1000, 10) == UINT64_MAX);

    Rng rng(1);
    const Wfa a = random_wfa(rng, 3, 2);
    const MemoTable t1 = MemoTable::build(a, 1);
    CHECK(t1.size() == 2);
    CHECK(t1.entry(Word{0}).to_dense() == a.transition(0));
    CHECK(t1.entry(Word{1}).to_dense() == a.transition(1));
    CHECK(MemoTable::build(a, 3).size() == 14);
}

TEST_CASE("entries are matrix products") {
    Rng rng(2);
    const Wfa a = random_wfa(rng, 3, 2, 1.0);
    const MemoTable t = MemoTable::build(a, 3);
    CHECK(t.entry(Word{0, 1}).to_dense() == a.transition(0) * a.transition(1));
    CHECK(t.entry(Word{1, 1, 0}).to_dense() == a.transition(1) * a.transition(1) * a.transition(0));
    std::size_t visited = 0;
    Word last;
    t.for_each([&](const Word& w, const SparseMatrix& m) {
        if (visited > 0) {
            CHECK(shortlex_less(last, w));
        }
        last = w;
        ++visited;
        Matrix expect = Matrix::identity(3);
        for (Symbol s : w) {
            expect = expect * a.transition(s);
        }
        CHECK(m.to_dense() == expect);
    });
    CHECK(visited == 14);
}

TEST_CASE("default block sizes") {
    CHECK(default_block_size(4, 12) == 7);
    CHECK(default_block_size(6, 12) == 6);
    CHECK(default_block_size(10, 12) == 5);
    CHECK(default_block_size(4, 15) == 6);
    CHECK(default_block_size(6, 20) == 5);
    CHECK(default_block_size(10, 13) == 4);
    CHECK(default_block_size(1, 1) >= 1);
    CHECK(default_block_size(1000, 1000) == 1);
    for (std::size_t sigma : {2, 3, 5, 12}) {
        for (std::size_t q : {1, 5, 10, 30}) {
            const std::size_t b = default_block_size(sigma, q);
            CHECK(b >= 1);
            if (b > 1) {
                CHECK(memo_entry_count(sigma, b) * q * q <= kDefaultMemoBudget);
            }
        }
    }
}

TEST_CASE("budget refusal reports the requirement") {
    Rng rng(3);
    const Wfa a = random_wfa(rng, 4, 3);
    try {
        (void)MemoTable::build(a, 5, 100);
        FAIL("expected refusal");
    } catch (const MemoBudgetExceeded& e) {
        CHECK(e.required() == memo_entry_count(3, 5) * 16);
        CHECK(e.budget() == 100);
    }
}

TEST_CASE("memoized evaluation equals direct evaluation") {
    Rng rng(4);
    const Wfa a = random_wfa(rng, 6, 3);
    const MemoTable t = MemoTable::build(a, 3);
    for (int n = 0; n < 500; ++n) {
        const Word w = random_word(rng, 3, 20);
        REQUIRE(eval_weight_memo(a, t, w) == eval_weight(a, w));
    }
    CHECK(eval_weight_memo(a, t, {}) == eval_weight(a, {}));
}

TEST_CASE("decomposition uses floor(n/B) full blocks plus the remainder") {
    Rng rng(5);
    const Wfa a = random_wfa(rng, 2, 2, 1.0);
    const MemoTable t = MemoTable::build(a, 3);
    // |w| = 2B + 1: two length-3 lookups and one length-1 lookup, each a
    // single vector-matrix product, so at most 3 * |Q|^2 multiplications
    // plus the final dot product.
    const Word w = {0, 1, 1, 0, 0, 1, 1};
    instrument::reset_multiplications();
    const Rational memo = eval_weight_memo(a, t, w);
    const auto cost = instrument::multiplications();
    CHECK(cost <= 3 * 4 + 2);
    CHECK(memo == eval_weight(a, w));
}

TEST_CASE("stale tables are rejected") {
    Rng rng(6);
    const Wfa a = random_wfa(rng, 3, 2);
    const Wfa b = random_wfa(rng, 3, 2);
    const MemoTable t = MemoTable::build(a, 2);
    CHECK(t.wfa_fingerprint() == a.fingerprint());
    CHECK_THROWS_AS(eval_weight_memo(b, t, {0}), StaleMemoTable);
}

TEST_CASE("memoization reduces multiplications") {
    Rng rng(7);
    const Wfa a = wfa::gen_random_wfa(10, 4, 7, {wfa::WeightProfile::dense});
    const MemoTable t = MemoTable::build(a, 4);
    std::vector<Word> words;
    for (int n = 0; n < 1000; ++n) {
        Word w;
        for (int i = 0; i < 20; ++i) {
            w.push_back(static_cast<Symbol>(uniform_below(rng, 4)));
        }
        words.push_back(std::move(w));
    }
    instrument::reset_multiplications();
    for (const auto& w : words) {
        (void)eval_weight(a, w);
    }
    const auto direct = instrument::multiplications();
    instrument::reset_multiplications();
    for (const auto& w : words) {
        (void)eval_weight_memo(a, t, w);
    }
    const auto memo = instrument::multiplications();
    MESSAGE("direct ", direct, " memo ", memo);
    CHECK(direct >= 2 * memo);
}

} // TEST_SUITE
