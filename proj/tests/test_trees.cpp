#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "maps.hpp"
#include "polyinv/trees.hpp"

using namespace polyinv;
using testmaps::v;

namespace {

/// Brute-force tree generation for the census cross-check. Children sequences
/// are built from arbitrary ordered subset splits, so every tree is produced
/// many times and classes are deduplicated by canonical key afterwards. This
/// is deliberately a different route from the library's partition enumeration.
struct Brute {
    std::vector<LeafLabel> labels;
    std::size_t n;

    std::vector<TreeNode> subtree_over(unsigned mask) {
        std::vector<TreeNode> out;
        if (__builtin_popcount(mask) == 1) {
            int idx = __builtin_ctz(mask);
            const LeafLabel& l = labels[idx];
            out.push_back(TreeNode{l.first, l, {}});
            return out;
        }
        for (int t = 1; t <= static_cast<int>(n); ++t)
            for (auto& kids : childsets(mask, false))
                if (kids.size() >= 2) out.push_back(TreeNode{t, {0, 0}, kids});
        return out;
    }

    /// Ordered part sequences covering mask. A tail may be one whole part,
    /// but the callers that build internal nodes need >= 2 parts, and letting
    /// the single full part through there would recurse forever.
    std::vector<std::vector<TreeNode>> childsets(unsigned mask, bool allow_single) {
        std::vector<std::vector<TreeNode>> out;
        if (allow_single)
            for (auto& t : subtree_over(mask)) out.push_back({t});
        for (unsigned first = (mask - 1) & mask; first; first = (first - 1) & mask) {
            unsigned rest = mask & ~first;
            std::vector<TreeNode> heads = subtree_over(first);
            for (auto& tail : childsets(rest, true))
                for (auto& h : heads) {
                    std::vector<TreeNode> seq{h};
                    seq.insert(seq.end(), tail.begin(), tail.end());
                    out.push_back(std::move(seq));
                }
        }
        return out;
    }

    std::set<std::string> dedup_keys(int root_type) {
        std::set<std::string> keys;
        unsigned full = (1u << labels.size()) - 1;
        if (labels.size() == 1) {
            if (labels[0].first == root_type) {
                TreeNode lf{root_type, labels[0], {}};
                keys.insert(canonicalize(lf));
            }
            return keys;
        }
        for (auto& kids : childsets(full, false))
            if (kids.size() >= 2) {
                TreeNode node{root_type, {0, 0}, kids};
                keys.insert(canonicalize(node));
            }
        return keys;
    }
};

std::set<std::string> library_keys(int root_type, const MultiIndex& alpha) {
    std::set<std::string> keys;
    for_each_tree(root_type, alpha, {}, [&](const TypedTree& t) {
        keys.insert(canonical_key(t));
        return true;
    });
    return keys;
}

std::vector<LeafLabel> labels_of(const MultiIndex& alpha) {
    std::vector<LeafLabel> s;
    for (std::size_t j = 1; j <= alpha.size(); ++j)
        for (int k = 1; k <= alpha[j]; ++k) s.push_back({static_cast<int>(j), k});
    return s;
}

}  // namespace

TEST_CASE("canonical form is stable under child reordering") {
    TreeNode a = make_internal(1, {make_leaf(2, 1), make_internal(2, {make_leaf(1, 1), make_leaf(3, 1)})});
    TreeNode b = make_internal(1, {make_internal(2, {make_leaf(3, 1), make_leaf(1, 1)}), make_leaf(2, 1)});
    CHECK(canonicalize(a) == canonicalize(b));
}

TEST_CASE("single-type census matches the total-partition numbers 1, 4, 26") {
    CHECK(count_trees(1, MultiIndex(std::vector<int>{2})) == 1);
    CHECK(count_trees(1, MultiIndex(std::vector<int>{3})) == 4);
    CHECK(count_trees(1, MultiIndex(std::vector<int>{4})) == 26);
}

TEST_CASE("enumeration agrees with brute force in count and in set") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
        for_each_multi_index(n, 2, 4, [&](const MultiIndex& alpha) {
            for (int i = 1; i <= static_cast<int>(n); ++i) {
                Brute brute{labels_of(alpha), n};
                std::set<std::string> want = brute.dedup_keys(i);
                std::set<std::string> got = library_keys(i, alpha);
                REQUIRE(got == want);
                // The stream itself is duplicate-free.
                CHECK(count_trees(i, alpha) == got.size());
            }
        });
    }
}

TEST_CASE("tree count depends only on the leaf total, not its distribution") {
    std::size_t n = 2;
    std::uint64_t c30 = count_trees(1, MultiIndex(std::vector<int>{3, 0}));
    std::uint64_t c21 = count_trees(1, MultiIndex(std::vector<int>{2, 1}));
    std::uint64_t c12 = count_trees(1, MultiIndex(std::vector<int>{1, 2}));
    std::uint64_t c03 = count_trees(1, MultiIndex(std::vector<int>{0, 3}));
    CHECK(c30 == 7);  // 1 + 3n for n = 2
    CHECK(c21 == 7);
    CHECK(c12 == 7);
    CHECK(c03 == 7);
    CHECK(count_trees(2, MultiIndex(std::vector<int>{2, 2})) == 81);  // 1 + 10n + 15n^2
}

TEST_CASE("every enumerated tree is structurally valid with the right leaf count") {
    MultiIndex alpha(std::vector<int>{2, 1});
    int enumerated = 0;
    for_each_tree(1, alpha, {}, [&](const TypedTree& t) {
        ++enumerated;
        CHECK_NOTHROW(validate_tree(t, 1, alpha));
        // Leaf-count law: leaves = 1 + sum over internals of (children - 1).
        int leaves = 0, internal_excess = 0;
        std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
            if (node.is_leaf()) {
                ++leaves;
                return;
            }
            internal_excess += static_cast<int>(node.children.size()) - 1;
            for (const auto& c : node.children) walk(c);
        };
        walk(t.root);
        CHECK(leaves == alpha.total());
        CHECK(leaves == 1 + internal_excess);
        return true;
    });
    CHECK(enumerated == 7);
}

TEST_CASE("enumeration rejects degenerate inputs") {
    CHECK_THROWS_AS(count_trees(1, MultiIndex(std::vector<int>{1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(count_trees(3, MultiIndex(std::vector<int>{2, 1})), std::invalid_argument);
}

TEST_CASE("height and outdegree caps restrict the enumeration") {
    MultiIndex alpha(std::vector<int>{4});
    // Height 1 forces the star.
    TreeEnumOptions flat;
    flat.max_height = 1;
    CHECK(count_trees(1, alpha, flat) == 1);
    // Outdegree 2 keeps only binary trees; on 4 same-type leaves that is
    // (2*4-3)!! = 15: 12 caterpillars and 3 balanced doubles.
    TreeEnumOptions binary;
    binary.max_outdeg = 2;
    CHECK(count_trees(1, alpha, binary) == 15);
    // Caps compose.
    TreeEnumOptions both;
    both.max_outdeg = 2;
    both.max_height = 2;
    CHECK(count_trees(1, alpha, both) == 3);
}

TEST_CASE("a known five-generation example tree shows up in the capped enumeration") {
    // Root of type 1 over alpha = (3,0,2,1): a type-2 vertex holding leaves
    // (3,2) and (4,1), a type-3 vertex holding (3,1), (1,1), (1,2), and the
    // bare leaf (1,3).
    std::size_t n = 4;
    MultiIndex alpha(std::vector<int>{3, 0, 2, 1});
    TreeNode expected = make_internal(
        1, {make_internal(2, {make_leaf(4, 1), make_leaf(3, 2)}),
            make_internal(3, {make_leaf(3, 1), make_leaf(1, 1), make_leaf(1, 2)}),
            make_leaf(1, 3)});
    TypedTree t{n, expected};
    CHECK_NOTHROW(validate_tree(t, 1, alpha));
    CHECK(height(t) == 2);
    CHECK(outdegree(t.root, n) == MultiIndex(std::vector<int>{1, 1, 1, 0}));
    CHECK(outdegree(t.root.children[0], n) == MultiIndex(std::vector<int>{0, 0, 1, 1}));
    CHECK(outdegree(t.root.children[1], n) == MultiIndex(std::vector<int>{2, 0, 1, 0}));

    std::string key = canonical_key(t);
    bool found = false;
    TreeEnumOptions opt;
    opt.max_outdeg = 3;
    opt.max_height = 2;
    for_each_tree(1, alpha, opt, [&](const TypedTree& cand) {
        if (canonical_key(cand) == key) {
            found = true;
            return false;
        }
        return true;
    });
    CHECK(found);
}

TEST_CASE("energy multiplies normalized coefficients over internal vertices") {
    HPart h = testmaps::quad2();
    // Star over two type-2 leaves: single internal vertex, H_{1,(0,2)} = 2.
    TypedTree star{2, make_internal(1, {make_leaf(2, 1), make_leaf(2, 2)})};
    CHECK(energy(star, h) == Rat(2));
    // Root type 2 has zero component.
    TypedTree star2{2, make_internal(2, {make_leaf(2, 1), make_leaf(2, 2)})};
    CHECK(energy(star2, h) == Rat(0));
    CHECK(energy(star, HPart::zero(2)) == Rat(0));

    // A vertex with more children than deg H kills the energy.
    HPart t3 = testmaps::tri3();
    TypedTree wide{3, make_internal(1, {make_leaf(2, 1), make_leaf(2, 2), make_leaf(3, 1)})};
    CHECK(energy(wide, t3) == Rat(0));

    // Two-level tree for tri3: root 1 over (leaf (2,1), type-2 vertex over two
    // type-3 leaves): H_{1,(0,2,0)} * H_{2,(0,0,2)} = 2 * 2 = 4.
    TypedTree chain{3, make_internal(1, {make_leaf(2, 1),
                                         make_internal(2, {make_leaf(3, 1), make_leaf(3, 2)})})};
    CHECK(energy(chain, t3) == Rat(4));
}

TEST_CASE("factored energy sums equal literal enumeration") {
    // A dense two-variable H with mixed signs and fractions.
    std::size_t n = 2;
    Poly h1 = Rat(2) * (v(n, 2) * v(n, 2)) - Rat(1, 2) * (v(n, 1) * v(n, 2)) +
              v(n, 1) * v(n, 1) * v(n, 2);
    Poly h2 = Rat(-3) * (v(n, 1) * v(n, 1)) + v(n, 1) * v(n, 2) * v(n, 2);
    HPart h({h1, h2});
    for (int i = 1; i <= 2; ++i) {
        for_each_multi_index(n, 2, 4, [&](const MultiIndex& alpha) {
            Rat literal(0);
            for_each_tree(i, alpha, {}, [&](const TypedTree& t) {
                literal += energy(t, h);
                return true;
            });
            CHECK(sum_tree_energies(h, i, alpha) == literal);
            // Same with a height restriction.
            for (int cap = 1; cap <= 2; ++cap) {
                Rat capped(0);
                TreeEnumOptions opt;
                opt.max_height = cap;
                for_each_tree(i, alpha, opt, [&](const TypedTree& t) {
                    capped += energy(t, h);
                    return true;
                });
                CHECK(sum_tree_energies(h, i, alpha, cap) == capped);
            }
        });
    }
}

TEST_CASE("energy-filtered enumeration lists exactly the nonzero-energy trees") {
    HPart h = testmaps::tri3();
    MultiIndex alpha(std::vector<int>{0, 1, 2});
    std::map<std::string, Rat> filtered;
    for_each_tree_with_energy(h, 1, alpha, {}, [&](const TypedTree& t, const Rat& e) {
        CHECK(energy(t, h) == e);
        CHECK_FALSE(e.is_zero());
        filtered[canonical_key(t)] = e;
        return true;
    });
    std::map<std::string, Rat> expected;
    for_each_tree(1, alpha, {}, [&](const TypedTree& t) {
        Rat e = energy(t, h);
        if (!e.is_zero()) expected[canonical_key(t)] = e;
        return true;
    });
    CHECK(filtered == expected);
    CHECK_FALSE(filtered.empty());
}

TEST_CASE("spine walks up from the deepest greatest label") {
    // Chain: root(1) -> [leaf (2,1), I2 -> [leaf (3,1), leaf (3,2)]].
    TypedTree chain{3, make_internal(1, {make_leaf(2, 1),
                                         make_internal(2, {make_leaf(3, 1), make_leaf(3, 2)})})};
    auto sp = spine(chain, 2);
    REQUIRE(sp.size() == 3);
    CHECK(sp[0]->type == 1);
    CHECK(sp[1]->type == 2);
    CHECK(sp[2]->is_leaf());
    CHECK(sp[2]->label == LeafLabel{3, 2});  // (3,2) beats (3,1)

    // Tie between types at the same depth: the greater label wins.
    TypedTree tie{3, make_internal(1, {make_leaf(2, 1), make_leaf(3, 1)})};
    auto sp1 = spine(tie, 1);
    REQUIRE(sp1.size() == 2);
    CHECK(sp1[1]->label == LeafLabel{3, 1});

    // The chain starts strictly below the root when the deep leaf sits deeper
    // than p. The lex-greatest deep leaf is (3,1) at depth 3, beating the
    // shallower (1,2).
    TypedTree deep{4, make_internal(
                          1, {make_leaf(1, 1),
                              make_internal(2, {make_internal(3, {make_leaf(2, 1), make_leaf(3, 1)}),
                                                make_leaf(1, 2)})})};
    auto sp2 = spine(deep, 2);
    REQUIRE(sp2.size() == 3);
    CHECK(sp2[0]->type == 2);  // depth 1 vertex, not the root
    CHECK(sp2[1]->type == 3);
    CHECK(sp2[2]->label == LeafLabel{3, 1});

    CHECK_THROWS_AS(spine(tie, 2), std::invalid_argument);
}

TEST_CASE("shuffle classes have size n^(p-1) and partition consistently") {
    TypedTree chain{3, make_internal(1, {make_leaf(2, 1),
                                         make_internal(2, {make_leaf(3, 1), make_leaf(3, 2)})})};
    // p = 1: nothing to retype.
    auto cls1 = shuffle_class(chain, 1);
    CHECK(cls1.size() == 1);
    CHECK(canonical_key(cls1[0]) == canonical_key(chain));

    // p = 2 in three types: 3 members, all distinct, containing the original.
    auto cls2 = shuffle_class(chain, 2);
    CHECK(cls2.size() == 3);
    std::set<std::string> keys;
    for (const auto& m : cls2) keys.insert(canonical_key(m));
    CHECK(keys.size() == 3);
    CHECK(keys.count(canonical_key(chain)) == 1);

    // Class membership is symmetric: each member generates the same class.
    for (const auto& m : cls2) {
        auto again = shuffle_class(m, 2);
        std::set<std::string> keys2;
        for (const auto& g : again) keys2.insert(canonical_key(g));
        CHECK(keys2 == keys);
    }
}

TEST_CASE("single-type shuffle classes are singletons") {
    TypedTree chain{1, make_internal(1, {make_leaf(1, 1),
                                         make_internal(1, {make_leaf(1, 2), make_leaf(1, 3)})})};
    auto cls = shuffle_class(chain, 2);
    CHECK(cls.size() == 1);
}

TEST_CASE("fern sums") {
    HPart h = testmaps::quad2();
    // Length 1: the sum is the single coefficient H_{1,(0,1)+e_2} = 2.
    FernSpec one{1, 2, {MultiIndex(std::vector<int>{0, 1})}};
    CHECK(fern_sum(h, one) == Rat(2));
    // Same spec with root type 2: component 2 vanishes.
    FernSpec two{2, 2, {MultiIndex(std::vector<int>{0, 1})}};
    CHECK(fern_sum(h, two) == Rat(0));
    CHECK(fern_sum(HPart::zero(2), one) == Rat(0));

    // Hand-checked length-2 fern for mix3: root 1, sink 3, generations
    // ((0,0,1), (0,0,1)). Interior k = 2 or 3:
    //   H_{1,(0,1,1)} * H_{2,(0,0,2)} + H_{1,(0,0,2)} * H_{3,(0,0,2)}
    //   = 1 * 2 + 2 * 0 = 2.
    HPart m = testmaps::mix3();
    FernSpec mixed{1, 3, {MultiIndex(std::vector<int>{0, 0, 1}), MultiIndex(std::vector<int>{0, 0, 1})}};
    CHECK(fern_sum(m, mixed) == Rat(2));
}

TEST_CASE("fern sums of length p vanish exhaustively at the strong index") {
    auto res2 = exhaustive_fern_check(testmaps::quad2(), 2, 2);
    CHECK(res2.all_vanish);
    CHECK(res2.candidates == 1);  // only alpha = (0,1) has a live coefficient matrix
    auto res3 = exhaustive_fern_check(testmaps::tri3(), 3, 2);
    CHECK(res3.all_vanish);
    auto resm = exhaustive_fern_check(testmaps::mix3(), 3, 2);
    CHECK(resm.all_vanish);
}

TEST_CASE("fern sums below the strong index can survive") {
    auto res = exhaustive_fern_check(testmaps::quad2(), 1, 2);
    CHECK_FALSE(res.all_vanish);
    REQUIRE(res.violation.has_value());
    CHECK(res.violation_value == Rat(2));
}
