#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyinv/poly_map.hpp"

namespace polyinv {

/// Leaf label (j,k): the k-th leaf of type j. Ordered lexicographically,
/// type first.
using LeafLabel = std::pair<int, int>;

/// Vertex of a leaf-labeled typed tree. Internal vertices have >= 2 children;
/// leaves carry a label whose first coordinate equals their type.
struct TreeNode {
    int type = 0;
    LeafLabel label{0, 0};  // leaves only
    std::vector<TreeNode> children;

    bool is_leaf() const { return children.empty(); }
};

/// A rooted tree together with the ambient number of types n. The root type
/// is the component index and the leaf labels enumerate a multi-index alpha.
struct TypedTree {
    std::size_t n = 0;
    TreeNode root;
};

inline TreeNode make_leaf(int type, int k) { return TreeNode{type, {type, k}, {}}; }

inline TreeNode make_internal(int type, std::vector<TreeNode> children) {
    if (children.size() < 2)
        throw std::invalid_argument("make_internal: internal vertices need >= 2 children");
    return TreeNode{type, {0, 0}, std::move(children)};
}

inline LeafLabel min_leaf_label(const TreeNode& v) {
    if (v.is_leaf()) return v.label;
    LeafLabel best = min_leaf_label(v.children.front());
    for (std::size_t k = 1; k < v.children.size(); ++k)
        best = std::min(best, min_leaf_label(v.children[k]));
    return best;
}

/// Sort children recursively into the canonical order (type, encoding,
/// smallest leaf label) and return the canonical encoding of the vertex.
/// Two trees are isomorphic as leaf-labeled typed trees iff their canonical
/// encodings agree.
inline std::string canonicalize(TreeNode& v) {
    if (v.is_leaf())
        return "L" + std::to_string(v.label.first) + "." + std::to_string(v.label.second);
    struct Item {
        TreeNode node;
        std::string key;
        LeafLabel ml;
    };
    std::vector<Item> items;
    items.reserve(v.children.size());
    for (auto& c : v.children) {
        std::string key = canonicalize(c);
        LeafLabel ml = min_leaf_label(c);
        items.push_back({std::move(c), std::move(key), ml});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.node.type != b.node.type) return a.node.type < b.node.type;
        if (a.key != b.key) return a.key < b.key;
        return a.ml < b.ml;
    });
    std::string key = "I" + std::to_string(v.type) + "(";
    v.children.clear();
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) key += ",";
        key += items[k].key;
        v.children.push_back(std::move(items[k].node));
    }
    key += ")";
    return key;
}

inline std::string canonical_key(const TypedTree& t) {
    TreeNode copy = t.root;
    return canonicalize(copy);
}

/// Number of edges on the longest root-to-leaf path; a bare leaf has height 0.
inline int height(const TreeNode& v) {
    int h = 0;
    for (const auto& c : v.children) h = std::max(h, 1 + height(c));
    return h;
}
inline int height(const TypedTree& t) { return height(t.root); }

/// Child type counts mu(v) as a multi-index over the n types.
inline MultiIndex outdegree(const TreeNode& v, std::size_t n) {
    std::vector<int> e(n, 0);
    for (const auto& c : v.children) {
        if (c.type < 1 || static_cast<std::size_t>(c.type) > n)
            throw std::invalid_argument("outdegree: child type out of range");
        ++e[c.type - 1];
    }
    return MultiIndex(e);
}

/// Check the structural contract for membership in the tree family of
/// (root_type, alpha): arity, leaf typing, and the leaf-label bijection.
inline void validate_tree(const TypedTree& t, int root_type, const MultiIndex& alpha) {
    if (t.n != alpha.size()) throw std::invalid_argument("validate_tree: dimension mismatch");
    if (t.root.type != root_type) throw std::invalid_argument("validate_tree: wrong root type");
    std::vector<LeafLabel> labels;
    std::function<void(const TreeNode&)> walk = [&](const TreeNode& v) {
        if (v.is_leaf()) {
            if (v.label.first != v.type)
                throw std::invalid_argument("validate_tree: leaf type differs from its label type");
            labels.push_back(v.label);
            return;
        }
        if (v.children.size() < 2)
            throw std::invalid_argument("validate_tree: internal vertex with < 2 children");
        if (v.type < 1 || static_cast<std::size_t>(v.type) > t.n)
            throw std::invalid_argument("validate_tree: vertex type out of range");
        for (const auto& c : v.children) walk(c);
    };
    walk(t.root);
    std::sort(labels.begin(), labels.end());
    std::vector<LeafLabel> want;
    for (std::size_t j = 1; j <= alpha.size(); ++j)
        for (int k = 1; k <= alpha[j]; ++k) want.push_back({static_cast<int>(j), k});
    if (labels != want)
        throw std::invalid_argument("validate_tree: leaf labels do not enumerate alpha");
}

/// Product over internal vertices of the normalized coefficient
/// H_{type(v), mu(v)}; zero as soon as one factor is absent from H.
inline Rat energy(const TypedTree& t, const HPart& h) {
    if (t.n != h.n()) throw std::invalid_argument("energy: dimension mismatch");
    std::function<Rat(const TreeNode&)> walk = [&](const TreeNode& v) -> Rat {
        if (v.is_leaf()) return Rat(1);
        Rat prod = h.coefficient_or_zero(v.type, outdegree(v, t.n));
        for (const auto& c : v.children) {
            if (prod.is_zero()) return prod;
            prod *= walk(c);
        }
        return prod;
    };
    return walk(t.root);
}

struct TreeEnumOptions {
    std::optional<int> max_outdeg;  // cap on children per internal vertex
    std::optional<int> max_height;
};

namespace detail {

/// Set partitions of {0..m-1} into between 2 and max_blocks blocks, emitted as
/// index blocks ordered by smallest element (restricted growth strings).
template <typename Emit>
void for_each_partition(std::size_t m, std::size_t max_blocks, const Emit& emit) {
    if (m < 2 || max_blocks < 2) return;
    std::vector<std::size_t> assign(m, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
        if (pos == m) {
            if (used < 2) return;
            std::vector<std::vector<std::size_t>> blocks(used);
            for (std::size_t i = 0; i < m; ++i) blocks[assign[i]].push_back(i);
            emit(blocks);
            return;
        }
        for (std::size_t id = 0; id < used; ++id) {
            assign[pos] = id;
            rec(pos + 1, used);
        }
        if (used < max_blocks) {
            assign[pos] = used;
            rec(pos + 1, used + 1);
        }
    };
    rec(1, 1);  // element 0 always opens block 0
}

inline std::vector<LeafLabel> labels_of(const MultiIndex& alpha) {
    std::vector<LeafLabel> s;
    for (std::size_t j = 1; j <= alpha.size(); ++j)
        for (int k = 1; k <= alpha[j]; ++k) s.push_back({static_cast<int>(j), k});
    return s;
}

/// Enumerate every tree over leaf set s with the given root type, one
/// representative per isomorphism class, children in canonical order.
/// fn returns false to stop; the return value propagates the stop request.
/// The callback is type-erased so the recursion reuses one instantiation.
inline bool gen_trees(const std::vector<LeafLabel>& s, int root_type, std::size_t n,
                      std::optional<int> budget, const TreeEnumOptions& opt,
                      const std::function<bool(TreeNode&&)>& fn) {
    if (s.size() == 1) {
        if (s[0].first != root_type) return true;
        return fn(TreeNode{root_type, s[0], {}});
    }
    if (budget && *budget <= 0) return true;
    std::optional<int> next_budget = budget ? std::optional<int>(*budget - 1) : std::nullopt;
    std::size_t cap = opt.max_outdeg
                          ? std::min<std::size_t>(static_cast<std::size_t>(std::max(0, *opt.max_outdeg)), s.size())
                          : s.size();
    bool keep = true;
    for_each_partition(s.size(), cap, [&](const std::vector<std::vector<std::size_t>>& blocks) {
        if (!keep) return;
        std::size_t m = blocks.size();
        std::vector<int> types(m, 0);
        std::vector<TreeNode> kids(m);

        std::function<void(std::size_t)> build = [&](std::size_t b) {
            if (!keep) return;
            if (b == m) {
                TreeNode node{root_type, {0, 0}, kids};
                canonicalize(node);
                keep = fn(std::move(node));
                return;
            }
            std::vector<LeafLabel> sub;
            sub.reserve(blocks[b].size());
            for (std::size_t idx : blocks[b]) sub.push_back(s[idx]);
            gen_trees(sub, types[b], n, next_budget, opt, [&](TreeNode&& child) {
                kids[b] = std::move(child);
                build(b + 1);
                return keep;
            });
        };

        std::function<void(std::size_t)> choose = [&](std::size_t b) {
            if (!keep) return;
            if (b == m) {
                build(0);
                return;
            }
            if (blocks[b].size() == 1) {
                types[b] = s[blocks[b][0]].first;
                choose(b + 1);
                return;
            }
            for (int t = 1; t <= static_cast<int>(n) && keep; ++t) {
                types[b] = t;
                choose(b + 1);
            }
        };
        choose(0);
    });
    return keep;
}

/// Same recursion, but type choices are driven by the support of H and the
/// tree's energy is carried along, so only trees with nonzero energy appear.
inline bool gen_trees_energy(const std::vector<LeafLabel>& s, int root_type, const HPart& h,
                             std::optional<int> budget, const TreeEnumOptions& opt,
                             const std::function<bool(TreeNode&&, const Rat&)>& fn) {
    std::size_t n = h.n();
    if (s.size() == 1) {
        if (s[0].first != root_type) return true;
        return fn(TreeNode{root_type, s[0], {}}, Rat(1));
    }
    if (budget && *budget <= 0) return true;
    std::optional<int> next_budget = budget ? std::optional<int>(*budget - 1) : std::nullopt;
    std::size_t cap = opt.max_outdeg
                          ? std::min<std::size_t>(static_cast<std::size_t>(std::max(0, *opt.max_outdeg)), s.size())
                          : s.size();
    bool keep = true;
    for_each_partition(s.size(), cap, [&](const std::vector<std::vector<std::size_t>>& blocks) {
        if (!keep) return;
        std::size_t m = blocks.size();
        for (const auto& [beta, plain] : h.component(root_type).terms()) {
            if (!keep) break;
            if (beta.total() != static_cast<int>(m)) continue;
            Rat root_coeff = Rat(beta.factorial_product()) * plain;
            std::vector<int> remaining = beta.exponents();
            std::vector<int> types(m, 0);
            std::vector<TreeNode> kids(m);

            std::function<void(std::size_t, const Rat&)> build = [&](std::size_t b, const Rat& acc) {
                if (!keep) return;
                if (b == m) {
                    TreeNode node{root_type, {0, 0}, kids};
                    canonicalize(node);
                    keep = fn(std::move(node), root_coeff * acc);
                    return;
                }
                std::vector<LeafLabel> sub;
                sub.reserve(blocks[b].size());
                for (std::size_t idx : blocks[b]) sub.push_back(s[idx]);
                gen_trees_energy(sub, types[b], h, next_budget, opt,
                                 [&](TreeNode&& child, const Rat& child_energy) {
                                     kids[b] = std::move(child);
                                     build(b + 1, acc * child_energy);
                                     return keep;
                                 });
            };

            std::function<void(std::size_t)> assign = [&](std::size_t b) {
                if (!keep) return;
                if (b == m) {
                    build(0, Rat(1));
                    return;
                }
                if (blocks[b].size() == 1) {
                    int j = s[blocks[b][0]].first;
                    if (remaining[j - 1] == 0) return;
                    --remaining[j - 1];
                    types[b] = j;
                    assign(b + 1);
                    ++remaining[j - 1];
                    return;
                }
                for (int j = 1; j <= static_cast<int>(n) && keep; ++j) {
                    if (remaining[j - 1] == 0) continue;
                    --remaining[j - 1];
                    types[b] = j;
                    assign(b + 1);
                    ++remaining[j - 1];
                }
            };
            assign(0);
        }
    });
    return keep;
}

/// Sum of energies over all trees on leaf set s with the given root type and
/// height budget, computed by structural recursion with per-block caching.
inline Rat energy_sum(const std::vector<LeafLabel>& s, int root_type, const HPart& h,
                      std::optional<int> budget) {
    std::size_t n = h.n();
    if (s.size() == 1) return s[0].first == root_type ? Rat(1) : Rat(0);
    if (budget && *budget <= 0) return Rat(0);
    std::optional<int> next_budget = budget ? std::optional<int>(*budget - 1) : std::nullopt;
    Rat total(0);
    for_each_partition(s.size(), s.size(), [&](const std::vector<std::vector<std::size_t>>& blocks) {
        std::size_t m = blocks.size();
        // One subtree sum per (block, type), shared across type assignments.
        std::vector<std::vector<std::optional<Rat>>> cache(m, std::vector<std::optional<Rat>>(n + 1));
        auto block_sum = [&](std::size_t b, int j) -> const Rat& {
            auto& slot = cache[b][j];
            if (!slot) {
                std::vector<LeafLabel> sub;
                sub.reserve(blocks[b].size());
                for (std::size_t idx : blocks[b]) sub.push_back(s[idx]);
                slot = energy_sum(sub, j, h, next_budget);
            }
            return *slot;
        };
        for (const auto& [beta, plain] : h.component(root_type).terms()) {
            if (beta.total() != static_cast<int>(m)) continue;
            Rat root_coeff = Rat(beta.factorial_product()) * plain;
            std::vector<int> remaining = beta.exponents();
            std::function<void(std::size_t, const Rat&)> assign = [&](std::size_t b, const Rat& acc) {
                if (b == m) {
                    total += root_coeff * acc;
                    return;
                }
                if (blocks[b].size() == 1) {
                    int j = s[blocks[b][0]].first;
                    if (remaining[j - 1] == 0) return;
                    --remaining[j - 1];
                    assign(b + 1, acc);  // a singleton block is a bare leaf, energy 1
                    ++remaining[j - 1];
                    return;
                }
                for (int j = 1; j <= static_cast<int>(n); ++j) {
                    if (remaining[j - 1] == 0) continue;
                    const Rat& sub = block_sum(b, j);
                    if (sub.is_zero()) continue;
                    --remaining[j - 1];
                    assign(b + 1, acc * sub);
                    ++remaining[j - 1];
                }
            };
            assign(0, Rat(1));
        }
    });
    return total;
}

}  // namespace detail

/// Visit one canonical representative per isomorphism class of trees with the
/// given root type and leaf multi-index. |alpha| >= 2 is required. The visitor
/// returns false to stop early.
inline void for_each_tree(int root_type, const MultiIndex& alpha, const TreeEnumOptions& opt,
                          const std::function<bool(const TypedTree&)>& fn) {
    std::size_t n = alpha.size();
    if (root_type < 1 || static_cast<std::size_t>(root_type) > n)
        throw std::invalid_argument("for_each_tree: root type out of range");
    if (alpha.total() < 2) throw std::invalid_argument("for_each_tree: |alpha| must be >= 2");
    detail::gen_trees(detail::labels_of(alpha), root_type, n, opt.max_height, opt,
                      [&](TreeNode&& node) { return fn(TypedTree{n, std::move(node)}); });
}

inline std::vector<TypedTree> enumerate_trees(int root_type, const MultiIndex& alpha,
                                              const TreeEnumOptions& opt = {}) {
    std::vector<TypedTree> out;
    for_each_tree(root_type, alpha, opt, [&](const TypedTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

inline std::uint64_t count_trees(int root_type, const MultiIndex& alpha,
                                 const TreeEnumOptions& opt = {}) {
    std::uint64_t c = 0;
    for_each_tree(root_type, alpha, opt, [&](const TypedTree&) {
        ++c;
        return true;
    });
    return c;
}

/// Visit exactly the trees whose energy against H is nonzero, with the energy.
inline void for_each_tree_with_energy(const HPart& h, int root_type, const MultiIndex& alpha,
                                      const TreeEnumOptions& opt,
                                      const std::function<bool(const TypedTree&, const Rat&)>& fn) {
    std::size_t n = h.n();
    if (alpha.size() != n) throw std::invalid_argument("for_each_tree_with_energy: dimension mismatch");
    if (root_type < 1 || static_cast<std::size_t>(root_type) > n)
        throw std::invalid_argument("for_each_tree_with_energy: root type out of range");
    if (alpha.total() < 2)
        throw std::invalid_argument("for_each_tree_with_energy: |alpha| must be >= 2");
    detail::gen_trees_energy(detail::labels_of(alpha), root_type, h, opt.max_height, opt,
                             [&](TreeNode&& node, const Rat& e) {
                                 return fn(TypedTree{n, std::move(node)}, e);
                             });
}

/// Sum of energy over all trees with the given root type and leaf multi-index,
/// optionally restricted to height <= max_height. This is the per-coefficient
/// tree formula; it factors through blockwise sums instead of materializing
/// trees, which agrees with literal enumeration by distributivity.
inline Rat sum_tree_energies(const HPart& h, int root_type, const MultiIndex& alpha,
                             std::optional<int> max_height = std::nullopt) {
    std::size_t n = h.n();
    if (alpha.size() != n) throw std::invalid_argument("sum_tree_energies: dimension mismatch");
    if (root_type < 1 || static_cast<std::size_t>(root_type) > n)
        throw std::invalid_argument("sum_tree_energies: root type out of range");
    if (alpha.total() < 2) throw std::invalid_argument("sum_tree_energies: |alpha| must be >= 2");
    return detail::energy_sum(detail::labels_of(alpha), root_type, h, max_height);
}

namespace detail {

/// Child-index path from the root to the distinguished deep leaf: among all
/// leaves at depth >= p, the one with the lexicographically greatest label.
inline std::vector<std::size_t> spine_steps(const TypedTree& t, int p) {
    if (p < 0) throw std::invalid_argument("spine: p must be >= 0");
    std::vector<std::size_t> best, cur;
    LeafLabel best_label{0, 0};
    bool found = false;
    std::function<void(const TreeNode&)> walk = [&](const TreeNode& v) {
        if (v.is_leaf()) {
            if (static_cast<int>(cur.size()) >= p && (!found || best_label < v.label)) {
                best = cur;
                best_label = v.label;
                found = true;
            }
            return;
        }
        for (std::size_t k = 0; k < v.children.size(); ++k) {
            cur.push_back(k);
            walk(v.children[k]);
            cur.pop_back();
        }
    };
    walk(t.root);
    if (!found) throw std::invalid_argument("spine: tree has no leaf at depth >= p");
    return best;
}

}  // namespace detail

/// The spine v_0..v_p: the deep leaf chosen by spine_steps and its p closest
/// ancestors, listed top-down. Requires a leaf at depth >= p.
inline std::vector<const TreeNode*> spine(const TypedTree& t, int p) {
    std::vector<std::size_t> steps = detail::spine_steps(t, p);
    std::vector<const TreeNode*> path{&t.root};
    const TreeNode* v = &t.root;
    for (std::size_t k : steps) {
        v = &v->children[k];
        path.push_back(v);
    }
    return std::vector<const TreeNode*>(path.end() - (p + 1), path.end());
}

/// All n^(p-1) trees obtained from t by retyping the interior spine vertices
/// v_1..v_(p-1) in every possible way, canonicalized. t itself is a member.
inline std::vector<TypedTree> shuffle_class(const TypedTree& t, int p) {
    if (p < 1) throw std::invalid_argument("shuffle_class: p must be >= 1");
    std::vector<std::size_t> steps = detail::spine_steps(t, p);
    std::size_t depth = steps.size();
    std::size_t n = t.n;
    std::size_t interior = static_cast<std::size_t>(p) - 1;
    std::vector<int> tuple(interior, 1);
    std::vector<TypedTree> members;
    for (;;) {
        TypedTree copy = t;
        TreeNode* v = &copy.root;
        // Walk to the leaf, retyping the ancestors at depths depth-p+1..depth-1.
        for (std::size_t d = 0; d < depth; ++d) {
            v = &v->children[steps[d]];
            std::size_t at = d + 1;
            if (at >= depth - p + 1 && at <= depth - 1)
                v->type = tuple[at - (depth - p + 1)];
        }
        canonicalize(copy.root);
        members.push_back(std::move(copy));
        // odometer over [1,n]^interior
        std::size_t pos = 0;
        while (pos < interior && tuple[pos] == static_cast<int>(n)) {
            tuple[pos] = 1;
            ++pos;
        }
        if (pos == interior) break;
        ++tuple[pos];
    }
    return members;
}

/// One layer tower of leaf multi-indices alpha^(1..p) between a root type and
/// a sink type. The associated sum runs over all interior type chains.
struct FernSpec {
    int root_type = 0;
    int sink_type = 0;
    std::vector<MultiIndex> generations;
};

/// sum over k_1..k_(p-1) of prod_{l=1..p} H_{k_(l-1), alpha^(l) + e_(k_l)},
/// with k_0 the root type and k_p the sink type. Computed as the direct
/// nested sum; zero prefixes are skipped since they cannot contribute.
inline Rat fern_sum(const HPart& h, const FernSpec& spec) {
    std::size_t n = h.n();
    std::size_t p = spec.generations.size();
    if (p < 1) throw std::invalid_argument("fern_sum: need at least one generation");
    if (spec.root_type < 1 || static_cast<std::size_t>(spec.root_type) > n ||
        spec.sink_type < 1 || static_cast<std::size_t>(spec.sink_type) > n)
        throw std::invalid_argument("fern_sum: type out of range");
    for (const auto& a : spec.generations)
        if (a.size() != n) throw std::invalid_argument("fern_sum: generation dimension mismatch");

    std::function<Rat(std::size_t, int)> rec = [&](std::size_t l, int k_prev) -> Rat {
        if (l == p)
            return h.coefficient_or_zero(k_prev, spec.generations[p - 1].plus_unit(spec.sink_type));
        Rat s(0);
        for (int k = 1; k <= static_cast<int>(n); ++k) {
            Rat c = h.coefficient_or_zero(k_prev, spec.generations[l - 1].plus_unit(k));
            if (c.is_zero()) continue;
            s += c * rec(l + 1, k);
        }
        return s;
    };
    return rec(1, spec.root_type);
}

/// Exhaustive vanishing check of fern sums of length p over every tower of
/// generations drawn from {alpha : |alpha| <= alpha_cap} and every root/sink
/// pair. Generations whose coefficient matrix (H_{a, alpha+e_b})_{a,b} is
/// identically zero force every summand to zero, so towers containing one are
/// sound to skip; candidates lists only the live generations.
struct FernCheckResult {
    bool all_vanish = true;
    std::uint64_t towers_checked = 0;
    std::size_t candidates = 0;
    std::optional<FernSpec> violation;
    Rat violation_value;
};

inline FernCheckResult exhaustive_fern_check(const HPart& h, int p, int alpha_cap) {
    if (p < 1) throw std::invalid_argument("exhaustive_fern_check: p must be >= 1");
    if (alpha_cap < 0) throw std::invalid_argument("exhaustive_fern_check: negative cap");
    std::size_t n = h.n();
    std::vector<MultiIndex> live;
    for_each_multi_index(n, 0, alpha_cap, [&](const MultiIndex& a) {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 1; k <= n; ++k)
                if (!h.coefficient_or_zero(i, a.plus_unit(k)).is_zero()) {
                    live.push_back(a);
                    return;
                }
    });
    FernCheckResult res;
    res.candidates = live.size();
    if (live.empty()) return res;

    std::vector<std::size_t> pick(static_cast<std::size_t>(p), 0);
    for (;;) {
        FernSpec spec;
        spec.generations.reserve(p);
        for (std::size_t l = 0; l < static_cast<std::size_t>(p); ++l)
            spec.generations.push_back(live[pick[l]]);
        for (int i = 1; i <= static_cast<int>(n) && res.all_vanish; ++i)
            for (int j = 1; j <= static_cast<int>(n) && res.all_vanish; ++j) {
                spec.root_type = i;
                spec.sink_type = j;
                Rat v = fern_sum(h, spec);
                if (!v.is_zero()) {
                    res.all_vanish = false;
                    res.violation = spec;
                    res.violation_value = v;
                }
            }
        ++res.towers_checked;
        if (!res.all_vanish) return res;
        std::size_t pos = 0;
        while (pos < pick.size() && pick[pos] + 1 == live.size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size()) break;
        ++pick[pos];
    }
    return res;
}

}  // namespace polyinv
