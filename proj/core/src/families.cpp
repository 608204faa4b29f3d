#include <map>
#include <queue>
#include <tuple>

#include "fsdim/error.hpp"
#include "fsdim/fst.hpp"

namespace fsdim {

Fst make_identity(unsigned base) {
  check_base(base);
  std::vector<Edge> edges;
  for (unsigned a = 0; a < base; ++a) edges.push_back({0, Digits{static_cast<Digit>(a)}});
  return Fst(base, 1, 0, std::move(edges));
}

Fst make_periodic_decoder(DigitView pattern, std::size_t copies, unsigned base) {
  check_base(base);
  if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "periodic decoder needs a pattern");
  if (copies == 0) throw Error(ErrorCode::InvalidArgument, "copies must be >= 1");
  check_digits(pattern, base);
  Digits out;
  for (std::size_t k = 0; k < copies; ++k) out.insert(out.end(), pattern.begin(), pattern.end());
  std::vector<Edge> edges(base, Edge{0, out});
  return Fst(base, 1, 0, std::move(edges));
}

namespace {

constexpr int kInternal = -1;
constexpr int kDummy = -2;

struct CodeTree {
  struct Node {
    int leaf = kInternal;  // block index, kInternal or kDummy
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = 0;
  std::vector<Digits> blocks;
};

CodeTree build_tree(const DigitStream& train, std::size_t prefix_len, std::size_t block_len,
                    unsigned base) {
  check_base(base);
  if (block_len == 0) throw Error(ErrorCode::InvalidArgument, "block length must be >= 1");
  if (prefix_len % block_len != 0) {
    throw Error(ErrorCode::InvalidArgument, "training prefix length " +
                                                std::to_string(prefix_len) +
                                                " is not a multiple of block length " +
                                                std::to_string(block_len));
  }
  if (prefix_len < block_len) {
    throw Error(ErrorCode::InsufficientTraining, "need at least one full block of training digits");
  }
  if (train.base() != base) {
    throw Error(ErrorCode::InvalidBase, "training stream base differs from transducer base");
  }

  Digits digits = train.prefix(prefix_len);
  std::map<Digits, std::size_t> counts;
  for (std::size_t i = 0; i < prefix_len; i += block_len) {
    ++counts[Digits(digits.begin() + static_cast<std::ptrdiff_t>(i),
                    digits.begin() + static_cast<std::ptrdiff_t>(i + block_len))];
  }

  CodeTree tree;
  if (counts.size() == 1) {
    tree.blocks.push_back(counts.begin()->first);
    tree.nodes.push_back({kInternal, {1}});
    tree.nodes.push_back({0, {}});
    tree.root = 0;
    return tree;
  }

  // (weight, tie-break order, node index); smallest first.
  using Item = std::tuple<std::size_t, std::size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::size_t order = 0;

  std::size_t leaves = counts.size();
  std::size_t dummies = 0;
  while ((leaves + dummies - 1) % (base - 1) != 0) ++dummies;
  for (std::size_t d = 0; d < dummies; ++d) {
    tree.nodes.push_back({kDummy, {}});
    heap.emplace(0, order++, static_cast<int>(tree.nodes.size() - 1));
  }
  for (const auto& [block, count] : counts) {
    tree.blocks.push_back(block);
    tree.nodes.push_back({static_cast<int>(tree.blocks.size() - 1), {}});
    heap.emplace(count, order++, static_cast<int>(tree.nodes.size() - 1));
  }
  while (heap.size() > 1) {
    CodeTree::Node parent;
    std::size_t weight = 0;
    for (unsigned k = 0; k < base && !heap.empty(); ++k) {
      auto [w, ord, idx] = heap.top();
      heap.pop();
      weight += w;
      parent.children.push_back(idx);
    }
    tree.nodes.push_back(std::move(parent));
    heap.emplace(weight, order++, static_cast<int>(tree.nodes.size() - 1));
  }
  tree.root = std::get<2>(heap.top());
  return tree;
}

}  // namespace

HuffmanCode build_huffman_code(const DigitStream& train, std::size_t prefix_len,
                               std::size_t block_len, unsigned base) {
  CodeTree tree = build_tree(train, prefix_len, block_len, base);
  HuffmanCode code;
  code.blocks = tree.blocks;
  code.codewords.resize(tree.blocks.size());
  std::vector<std::pair<int, Digits>> stack{{tree.root, {}}};
  while (!stack.empty()) {
    auto [idx, word] = std::move(stack.back());
    stack.pop_back();
    const auto& node = tree.nodes[static_cast<std::size_t>(idx)];
    if (node.leaf >= 0) {
      code.codewords[static_cast<std::size_t>(node.leaf)] = word;
      continue;
    }
    for (std::size_t d = 0; d < node.children.size(); ++d) {
      Digits next = word;
      next.push_back(static_cast<Digit>(d));
      stack.emplace_back(node.children[d], std::move(next));
    }
  }
  return code;
}

Fst make_block_huffman(const DigitStream& train, std::size_t prefix_len, std::size_t block_len,
                       unsigned base) {
  CodeTree tree = build_tree(train, prefix_len, block_len, base);

  // Number internal nodes breadth-first from the root.
  std::vector<int> state_of(tree.nodes.size(), -1);
  std::vector<int> order{tree.root};
  state_of[static_cast<std::size_t>(tree.root)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int child : tree.nodes[static_cast<std::size_t>(order[i])].children) {
      if (tree.nodes[static_cast<std::size_t>(child)].leaf == kInternal) {
        state_of[static_cast<std::size_t>(child)] = static_cast<int>(order.size());
        order.push_back(child);
      }
    }
  }

  std::vector<Edge> edges;
  edges.reserve(order.size() * base);
  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto& node = tree.nodes[static_cast<std::size_t>(order[s])];
    for (unsigned a = 0; a < base; ++a) {
      Edge e{static_cast<StateId>(s), {}};  // self-loop, no output
      if (a < node.children.size()) {
        const auto& child = tree.nodes[static_cast<std::size_t>(node.children[a])];
        if (child.leaf == kInternal) {
          e.next = static_cast<StateId>(state_of[static_cast<std::size_t>(node.children[a])]);
        } else if (child.leaf >= 0) {
          e.next = 0;
          e.output = tree.blocks[static_cast<std::size_t>(child.leaf)];
        }
      }
      edges.push_back(std::move(e));
    }
  }
  return Fst(base, order.size(), 0, std::move(edges));
}

}  // namespace fsdim
