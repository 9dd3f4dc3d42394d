#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "symfock/partition.hpp"

using namespace symfock;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent route to the addable i-boxes: scan all partitions one box
// bigger, keep those containing lambda, and read the residue off the added
// cell.
std::vector<Partition> addable_by_scan(const Partition& lambda, long i, int p) {
    std::vector<Partition> out;
    for (auto& mu : partitions_of(static_cast<int>(lambda.size()) + 1)) {
        bool contains = mu.length() >= lambda.length();
        for (int r = 1; r <= mu.length() && contains; ++r)
            if (mu.part(r) < lambda.part(r)) contains = false;
        if (!contains) continue;
        for (int r = 1; r <= mu.length(); ++r)
            if (mu.part(r) == lambda.part(r) + 1 &&
                residue(Cell{r, mu.part(r)}, p) == residue_of_content(i, p))
                out.push_back(mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All p-cores reachable by stripping p-hooks in every possible order.
void reachable_cores(const Partition& lambda, int p, std::set<std::vector<int>>& cores,
                     std::set<std::vector<int>>& seen) {
    if (seen.count(lambda.parts())) return;
    seen.insert(lambda.parts());
    auto removals = rim_hook_removals(lambda, p);
    if (removals.empty()) {
        cores.insert(lambda.parts());
        return;
    }
    for (auto& rem : removals) reachable_cores(rem.result, p, cores, seen);
}

} // namespace

TEST_CASE("content and residue") {
    CHECK(content(Cell{1, 1}) == 0);
    CHECK(content(Cell{2, 1}) == -1);
    CHECK(residue(Cell{2, 1}, 3) == 2);
    CHECK(content(Cell{1, 4}) == 3);

    CHECK(residue_of_content(-1, 3) == 2);
    CHECK(residue_of_content(5, 0) == 5);
    CHECK(residue_of_content(4, 2) == 0);
    CHECK_THROWS_AS(residue_of_content(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(residue_of_content(1, -2), std::invalid_argument);
}

TEST_CASE("partition construction and format") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
    CHECK(P({3, 0, 0}) == P({3}));
    CHECK(P({4, 4, 2, 1}).size() == 11);
    CHECK(P({4, 4, 2, 1}).conjugate() == P({4, 3, 2, 2}));
    CHECK(P({}).to_string() == "[]");
    CHECK(Partition::parse("[4,4,2,1]") == P({4, 4, 2, 1}));
    CHECK(Partition::parse(" [ 2 , 1 ] ") == P({2, 1}));
    CHECK(Partition::parse("[]") == P({}));
    CHECK_THROWS_AS(Partition::parse("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,1"), std::invalid_argument);
}

TEST_CASE("addable and removable i-boxes") {
    for (int p : {0, 2, 3}) {
        CAPTURE(p);
        CHECK(addable_i_boxes(P({}), 0, p) == std::vector<Partition>{P({1})});
    }
    // the arrow (2) -> (2,1) labelled 2 at p=3, plus the content-2 corner (1,3)
    CHECK(addable_i_boxes(P({2}), 2, 3) == std::vector<Partition>{P({3}), P({2, 1})});
    // no corner of (2,1) has content 1
    CHECK(addable_i_boxes(P({2, 1}), 1, 0) == addable_by_scan(P({2, 1}), 1, 0));
    CHECK(addable_i_boxes(P({2, 1}), 1, 0).empty());

    CHECK(removable_i_boxes(P({1}), 0, 0) == std::vector<Partition>{P({})});
    CHECK(removable_i_boxes(P({}), 1, 0).empty());
    CHECK(removable_i_boxes(P({2, 1}), 2, 3) == std::vector<Partition>{P({2})});
}

TEST_CASE("addable boxes agree with the containment scan") {
    for (int p : {0, 2, 3}) {
        for (auto& lambda : partitions_up_to(7)) {
            auto indices = p == 0 ? std::vector<long>{-7, -3, -1, 0, 1, 2, 5}
                                  : std::vector<long>{0, 1, 2, 3, 4};
            for (long i : indices) {
                auto got = addable_i_boxes(lambda, i, p);
                auto sorted = got;
                std::sort(sorted.begin(), sorted.end());
                CAPTURE(p, i, lambda.to_string());
                CHECK(sorted == addable_by_scan(lambda, i, p));
            }
        }
    }
}

TEST_CASE("add/remove duality") {
    for (int p : {0, 2, 3, 5}) {
        for (auto& lambda : partitions_up_to(10)) {
            std::vector<long> indices;
            if (p == 0)
                for (long i = -11; i <= 11; ++i) indices.push_back(i);
            else
                for (long i = 0; i < p; ++i) indices.push_back(i);
            for (long i : indices) {
                for (auto& mu : addable_i_boxes(lambda, i, p)) {
                    auto back = removable_i_boxes(mu, i, p);
                    CAPTURE(p, i, lambda.to_string(), mu.to_string());
                    CHECK(std::find(back.begin(), back.end(), lambda) != back.end());
                }
            }
        }
    }
}

TEST_CASE("residue counts") {
    CHECK(residue_counts(P({}), 3).counts.empty());

    WeightLabel w = residue_counts(P({2, 1}), 3);
    CHECK(w.counts == std::map<long, long>{{0, 1}, {1, 1}, {2, 1}});

    WeightLabel v = residue_counts(P({4, 4, 2, 1}), 0);
    CHECK(v.counts.at(0) == 2);
    CHECK(v.total() == 11);

    // adding an i-box bumps exactly the i-th count
    for (int p : {0, 2, 3}) {
        for (auto& lambda : partitions_up_to(8)) {
            std::vector<long> indices;
            if (p == 0)
                for (long i = -9; i <= 9; ++i) indices.push_back(i);
            else
                for (long i = 0; i < p; ++i) indices.push_back(i);
            for (long i : indices)
                for (auto& mu : addable_i_boxes(lambda, i, p)) {
                    WeightLabel expected = residue_counts(lambda, p);
                    expected.add_unit(i);
                    CAPTURE(p, i, lambda.to_string());
                    CHECK(residue_counts(mu, p) == expected);
                }
        }
    }
}

TEST_CASE("rim hook removal walk") {
    auto one = rim_hook_removals(P({1}), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].result == P({}));
    CHECK(one[0].height == 0);

    auto two = rim_hook_removals(P({2, 2}), 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].result == P({2}));
    CHECK(two[0].height == 0);
    CHECK(two[1].result == P({1, 1}));
    CHECK(two[1].height == 1);

    CHECK(rim_hook_removals(P({2}), 3).empty());
    CHECK_THROWS_AS(rim_hook_removals(P({2}), 0), std::invalid_argument);
}

TEST_CASE("rim hook additions mirror removals") {
    for (auto& lambda : partitions_up_to(8)) {
        for (int r = 1; r <= 4; ++r) {
            for (auto& rem : rim_hook_removals(lambda, r)) {
                auto adds = rim_hook_additions(rem.result, r);
                bool found = false;
                for (auto& add : adds)
                    if (add.result == lambda && add.height == rem.height) found = true;
                CAPTURE(lambda.to_string(), r, rem.result.to_string());
                CHECK(found);
            }
            for (auto& add : rim_hook_additions(lambda, r)) {
                auto rems = rim_hook_removals(add.result, r);
                bool found = false;
                for (auto& rem : rems)
                    if (rem.result == lambda && rem.height == add.height) found = true;
                CAPTURE(lambda.to_string(), r, add.result.to_string());
                CHECK(found);
            }
        }
    }
}

TEST_CASE("p-core and p-quotient") {
    auto [c1, q1] = p_core_and_quotient(P({1}), 2);
    CHECK(c1 == P({1}));
    REQUIRE(q1.size() == 2);
    CHECK(q1[0].empty());
    CHECK(q1[1].empty());

    auto [c2, q2] = p_core_and_quotient(P({2}), 2);
    CHECK(c2 == P({}));
    CHECK(q2[0].size() + q2[1].size() == 1);

    CHECK_THROWS_AS(p_core_and_quotient(P({2}), 1), std::invalid_argument);

    // every removal order reaches the abacus core
    for (int p : {2, 3}) {
        for (auto& lambda : partitions_up_to(12)) {
            std::set<std::vector<int>> cores, seen;
            reachable_cores(lambda, p, cores, seen);
            REQUIRE(cores.size() == 1);
            CAPTURE(p, lambda.to_string());
            CHECK(Partition(*cores.begin()) == p_core(lambda, p));
        }
    }
}

TEST_CASE("core size bookkeeping") {
    for (int p : {2, 3, 5}) {
        for (auto& lambda : partitions_up_to(10)) {
            auto [core, quotient] = p_core_and_quotient(lambda, p);
            long qsize = 0;
            for (auto& q : quotient) qsize += q.size();
            CAPTURE(p, lambda.to_string());
            CHECK(lambda.size() == core.size() + p * qsize);
            CHECK((lambda.size() - core.size()) % p == 0);
            CHECK(rim_hook_removals(core, p).empty());
        }
    }
}

TEST_CASE("nakayama: same size and core iff same residue counts") {
    for (int p : {2, 3}) {
        for (int n = 0; n <= 8; ++n) {
            auto pn = partitions_of(n);
            for (auto& a : pn)
                for (auto& b : pn) {
                    bool same_core = p_core(a, p) == p_core(b, p);
                    bool same_label = residue_counts(a, p) == residue_counts(b, p);
                    CAPTURE(p, a.to_string(), b.to_string());
                    CHECK(same_core == same_label);
                }
        }
    }
}

TEST_CASE("strip enumeration") {
    CHECK(horizontal_strip_additions(P({}), 2) == std::vector<Partition>{P({2})});
    CHECK(vertical_strip_additions(P({}), 2) == std::vector<Partition>{P({1, 1})});
    CHECK(horizontal_strip_additions(P({2}), 1) ==
          std::vector<Partition>{P({3}), P({2, 1})});
    CHECK(horizontal_strip_removals(P({2, 1}), 1) ==
          std::vector<Partition>{P({2}), P({1, 1})});

    for (auto& lambda : partitions_up_to(7))
        for (int r = 1; r <= 3; ++r) {
            for (auto& mu : horizontal_strip_additions(lambda, r)) {
                auto back = horizontal_strip_removals(mu, r);
                CAPTURE(lambda.to_string(), r, mu.to_string());
                CHECK(std::find(back.begin(), back.end(), lambda) != back.end());
            }
            for (auto& mu : vertical_strip_additions(lambda, r)) {
                auto back = vertical_strip_removals(mu, r);
                CHECK(std::find(back.begin(), back.end(), lambda) != back.end());
            }
        }
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P({3}));
    CHECK(p3[1] == P({2, 1}));
    CHECK(p3[2] == P({1, 1, 1}));
    CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
}
