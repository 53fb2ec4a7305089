#pragma once

#include <list>
#include <memory>
#include <vector>

namespace splitdiam {

// PQ-tree over leaves 1..numLeaves. Represents the set of leaf orderings in
// which every successfully reduced leaf set occurs consecutively: P-nodes
// permute their children freely, Q-nodes fix the child sequence up to
// reversal. Booth-Lueker template reduction, with parent pointers kept on
// every node; cost per reduce is proportional to the pertinent subtree plus
// the stem up to the root.
class PqTree {
public:
    explicit PqTree(int numLeaves);
    PqTree(const PqTree&) = delete;
    PqTree& operator=(const PqTree&) = delete;
    ~PqTree();

    // Restricts the represented orderings to those where `leaves` occur
    // consecutively. Returns false when no such ordering remains; the tree
    // is unusable afterwards. Duplicate ids are tolerated.
    bool reduce(std::vector<int> leaves);

    // One admissible leaf ordering (left-to-right frontier).
    std::vector<int> frontier() const;

    bool valid() const { return valid_; }

private:
    struct Node;
    enum class Label { Empty, Full, Partial };

    Node* make_node();
    Node* make_leaf(int id);
    void attach(Node* parent, Node* child);
    // Template dispatch; returns the node standing in x's place (x itself or
    // a replacement) with its label, or nullptr on failure.
    Node* process(Node* x, bool pertinentRoot, Label& outLabel);
    Node* process_p(Node* x, bool pertinentRoot, Label& outLabel);
    Node* process_q(Node* x, bool pertinentRoot, Label& outLabel);

    std::vector<std::unique_ptr<Node>> pool_;
    std::vector<Node*> leaves_; // by leaf id, 1-based
    Node* root_ = nullptr;
    int epoch_ = 0;
    bool valid_ = true;
};

} // namespace splitdiam
