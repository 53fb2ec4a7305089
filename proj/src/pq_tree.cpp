#include "splitdiam/pq_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitdiam {

struct PqTree::Node {
    enum class Type { Leaf, P, Q } type = Type::P;
    Node* parent = nullptr;
    std::list<Node*> children;
    std::list<Node*>::iterator selfIt{}; // position in parent->children
    int leafId = 0;

    // Per-reduction scratch, valid when the matching epoch tag is current.
    int visitEpoch = 0;  // node touched by the bubble pass
    int listedEpoch = 0; // node registered in parent's pertinent list
    int labelEpoch = 0;
    Label label = Label::Empty;
    bool fullsFront = true; // Partial only: full block at front of children
    int pertinentCount = 0;
    std::vector<Node*> pertinent; // pertinent children (discovered order)

    bool pertinent_now(int epoch) const { return listedEpoch == epoch; }
};

PqTree::PqTree(int numLeaves) {
    leaves_.assign(static_cast<size_t>(numLeaves) + 1, nullptr);
    root_ = make_node();
    root_->type = Node::Type::P;
    for (int i = 1; i <= numLeaves; ++i) {
        Node* leaf = make_leaf(i);
        attach(root_, leaf);
        leaves_[i] = leaf;
    }
}

PqTree::~PqTree() = default;

PqTree::Node* PqTree::make_node() {
    pool_.push_back(std::make_unique<Node>());
    return pool_.back().get();
}

PqTree::Node* PqTree::make_leaf(int id) {
    Node* n = make_node();
    n->type = Node::Type::Leaf;
    n->leafId = id;
    return n;
}

void PqTree::attach(Node* parent, Node* child) {
    child->parent = parent;
    parent->children.push_back(child);
    child->selfIt = std::prev(parent->children.end());
}

namespace {
struct ListOps {
    template <typename NodeT>
    static void detach(NodeT* child) {
        child->parent->children.erase(child->selfIt);
        child->parent = nullptr;
    }
    template <typename NodeT>
    static void insert_before(NodeT* parent, typename std::list<NodeT*>::iterator pos,
                              NodeT* child) {
        child->parent = parent;
        child->selfIt = parent->children.insert(pos, child);
    }
};
} // namespace

bool PqTree::reduce(std::vector<int> leaves) {
    if (!valid_) return false;
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    const int total = static_cast<int>(leaves.size());
    if (total <= 1) return true;
    if (total == static_cast<int>(leaves_.size()) - 1) return true;

    const int epoch = ++epoch_;

    // Bubble: walk up from every pertinent leaf, registering each node in its
    // parent's pertinent list once and stopping at already-visited ancestors.
    for (int id : leaves) {
        Node* cur = leaves_[id];
        if (cur->visitEpoch != epoch) {
            cur->visitEpoch = epoch;
            cur->pertinent.clear();
        }
        while (cur->parent != nullptr) {
            Node* par = cur->parent;
            const bool parNew = par->visitEpoch != epoch;
            if (parNew) {
                par->visitEpoch = epoch;
                par->pertinent.clear();
            }
            if (cur->listedEpoch != epoch) {
                cur->listedEpoch = epoch;
                par->pertinent.push_back(cur);
            }
            if (!parNew) break;
            cur = par;
        }
    }

    // Pertinent-leaf counts along the marked closure, then the pertinent
    // root: the deepest node covering all of `leaves`.
    auto countRec = [](auto&& self, Node* n) -> int {
        if (n->type == Node::Type::Leaf) {
            n->pertinentCount = 1;
        } else {
            int c = 0;
            for (Node* ch : n->pertinent) c += self(self, ch);
            n->pertinentCount = c;
        }
        return n->pertinentCount;
    };
    countRec(countRec, root_);

    Node* pertRoot = root_;
    while (pertRoot->type != Node::Type::Leaf && pertRoot->pertinent.size() == 1 &&
           pertRoot->pertinent.front()->pertinentCount == total)
        pertRoot = pertRoot->pertinent.front();

    Label lab;
    if (process(pertRoot, true, lab) == nullptr) {
        valid_ = false;
        return false;
    }
    return true;
}

PqTree::Node* PqTree::process(Node* x, bool pertinentRoot, Label& outLabel) {
    if (x->type == Node::Type::Leaf) {
        outLabel = Label::Full;
        x->label = Label::Full;
        x->labelEpoch = epoch_;
        return x;
    }
    if (x->type == Node::Type::P) return process_p(x, pertinentRoot, outLabel);
    return process_q(x, pertinentRoot, outLabel);
}

namespace {
// Wraps a set of nodes into a single node: the node itself when there is one,
// otherwise a fresh P-node over them.
template <typename MakeNode, typename Attach, typename NodeT>
NodeT* group(const std::vector<NodeT*>& nodes, MakeNode&& mk, Attach&& at) {
    if (nodes.size() == 1) return nodes.front();
    NodeT* p = mk();
    for (NodeT* n : nodes) at(p, n);
    return p;
}
} // namespace

PqTree::Node* PqTree::process_p(Node* x, bool pertinentRoot, Label& outLabel) {
    std::vector<Node*> fulls, partials;
    for (Node* ch : x->pertinent) {
        Label lab;
        Node* res = process(ch, false, lab);
        if (res == nullptr) return nullptr;
        (lab == Label::Full ? fulls : partials).push_back(res);
    }
    if (partials.size() + (pertinentRoot ? 0u : 1u) > 2u) return nullptr;

    const size_t childCount = x->children.size();
    const size_t emptyCount = childCount - fulls.size() - partials.size();

    auto mk = [&] {
        Node* p = make_node();
        p->type = Node::Type::P;
        return p;
    };
    auto moveUnder = [&](Node* parent, Node* child) {
        ListOps::detach(child);
        attach(parent, child);
    };

    if (partials.empty() && emptyCount == 0) {
        // P1: node entirely full.
        outLabel = Label::Full;
        x->label = Label::Full;
        x->labelEpoch = epoch_;
        return x;
    }

    if (pertinentRoot) {
        if (partials.empty()) {
            // P2: gather the full children under one P child.
            if (fulls.size() >= 2) {
                Node* pf = mk();
                for (Node* f : fulls) moveUnder(pf, f);
                attach(x, pf);
            }
            outLabel = Label::Partial; // unused past the root
            return x;
        }
        if (partials.size() == 1) {
            // P4: full children move to the full end of the partial child.
            Node* c = partials.front();
            if (!fulls.empty()) {
                Node* pf = fulls.size() == 1 ? fulls.front() : mk();
                if (fulls.size() > 1)
                    for (Node* f : fulls) moveUnder(pf, f);
                else
                    ListOps::detach(pf);
                pf->parent = c;
                if (c->fullsFront) {
                    c->children.push_front(pf);
                    pf->selfIt = c->children.begin();
                } else {
                    c->children.push_back(pf);
                    pf->selfIt = std::prev(c->children.end());
                }
            }
            outLabel = Label::Partial;
            return x;
        }
        // P6: merge the two partial children and the fulls into one Q child.
        Node* c1 = partials[0];
        Node* c2 = partials[1];
        Node* m = make_node();
        m->type = Node::Type::Q;
        ListOps::detach(c1);
        ListOps::detach(c2);
        // c1 contributes with fulls at its back, then the fulls, then c2
        // with fulls at its front.
        auto spliceInto = [&](Node* src, bool reversed) {
            std::vector<Node*> cs(src->children.begin(), src->children.end());
            if (reversed) std::reverse(cs.begin(), cs.end());
            for (Node* ch : cs) {
                ch->parent = m;
                m->children.push_back(ch);
                ch->selfIt = std::prev(m->children.end());
            }
            src->children.clear();
        };
        spliceInto(c1, c1->fullsFront);
        if (!fulls.empty()) {
            Node* pf = fulls.size() == 1 ? fulls.front() : mk();
            if (fulls.size() > 1)
                for (Node* f : fulls) moveUnder(pf, f);
            else
                ListOps::detach(pf);
            pf->parent = m;
            m->children.push_back(pf);
            pf->selfIt = std::prev(m->children.end());
        }
        spliceInto(c2, !c2->fullsFront);
        attach(x, m);
        outLabel = Label::Partial;
        return x;
    }

    // Non-root templates. At most one partial child here.
    if (partials.empty()) {
        // P3: split into a transient Q [full group | empty group]; x is
        // demoted to hold its remaining (empty) children.
        Node* q = make_node();
        q->type = Node::Type::Q;
        Node* parent = x->parent;
        auto xPos = x->selfIt;
        // q takes x's slot.
        q->parent = parent;
        q->selfIt = parent->children.insert(parent->children.erase(xPos), q);
        x->parent = nullptr;

        Node* fg = fulls.size() == 1 ? fulls.front() : mk();
        if (fulls.size() > 1)
            for (Node* f : fulls) moveUnder(fg, f);
        else
            ListOps::detach(fg);
        Node* eg;
        if (x->children.size() == 1) {
            eg = x->children.front();
            x->children.clear();
        } else {
            eg = x; // keeps all remaining empty children
        }
        attach(q, fg);
        attach(q, eg);
        q->label = Label::Partial;
        q->labelEpoch = epoch_;
        q->fullsFront = true;
        outLabel = Label::Partial;
        return q;
    }

    // P5: fold fulls, the partial child's children and the empties into one
    // Q that replaces x.
    Node* c = partials.front();
    Node* q = make_node();
    q->type = Node::Type::Q;
    Node* parent = x->parent;
    q->parent = parent;
    q->selfIt = parent->children.insert(parent->children.erase(x->selfIt), q);
    x->parent = nullptr;
    ListOps::detach(c);

    if (!fulls.empty()) {
        Node* fg = fulls.size() == 1 ? fulls.front() : mk();
        if (fulls.size() > 1)
            for (Node* f : fulls) moveUnder(fg, f);
        else
            ListOps::detach(fg);
        attach(q, fg);
    }
    {
        std::vector<Node*> cs(c->children.begin(), c->children.end());
        if (!c->fullsFront) std::reverse(cs.begin(), cs.end());
        for (Node* ch : cs) attach(q, ch);
        c->children.clear();
    }
    if (x->children.size() == 1) {
        Node* only = x->children.front();
        x->children.clear();
        attach(q, only);
    } else if (!x->children.empty()) {
        attach(q, x);
    }
    q->label = Label::Partial;
    q->labelEpoch = epoch_;
    q->fullsFront = true;
    outLabel = Label::Partial;
    return q;
}

PqTree::Node* PqTree::process_q(Node* x, bool pertinentRoot, Label& outLabel) {
    // Process pertinent children, recording labels on the (replacement)
    // nodes in place.
    int fullCount = 0, partialCount = 0;
    for (Node* ch : x->pertinent) {
        Label lab;
        Node* res = process(ch, false, lab);
        if (res == nullptr) return nullptr;
        res->label = lab;
        res->labelEpoch = epoch_;
        if (lab == Label::Full)
            ++fullCount;
        else
            ++partialCount;
    }
    const int pertTotal = fullCount + partialCount;
    auto isPert = [&](Node* n) { return n->labelEpoch == epoch_; };

    if (pertTotal == static_cast<int>(x->children.size()) && partialCount == 0) {
        // Q1: node entirely full.
        outLabel = Label::Full;
        x->label = Label::Full;
        x->labelEpoch = epoch_;
        return x;
    }

    // Locate the contiguous pertinent segment.
    Node* any = nullptr;
    for (Node* ch : x->children)
        if (isPert(ch)) {
            any = ch;
            break;
        }
    auto left = any->selfIt;
    while (left != x->children.begin() && isPert(*std::prev(left))) --left;
    auto right = any->selfIt;
    while (std::next(right) != x->children.end() && isPert(*std::next(right))) ++right;
    int segLen = 0;
    bool segPartialInside = false;
    int segPartialCount = 0;
    for (auto it = left;; ++it) {
        ++segLen;
        if ((*it)->label == Label::Partial) {
            ++segPartialCount;
            if (it != left && it != right) segPartialInside = true;
        }
        if (it == right) break;
    }
    if (segLen != pertTotal) return nullptr;        // pertinent children not consecutive
    if (segPartialCount != partialCount) return nullptr;
    if (segPartialInside && segLen > 1) return nullptr; // partial strictly inside the block

    const bool touchesFront = left == x->children.begin();
    const bool touchesBack = std::next(right) == x->children.end();

    // Splices a partial child's children into x at the child's position,
    // with the full side facing `fullsTowardsFront`.
    auto splicePartial = [&](Node* c, bool fullsTowardsFront) {
        std::vector<Node*> cs(c->children.begin(), c->children.end());
        if (c->fullsFront != fullsTowardsFront) std::reverse(cs.begin(), cs.end());
        auto pos = x->children.erase(c->selfIt);
        c->parent = nullptr;
        c->children.clear();
        for (Node* ch : cs) ListOps::insert_before(x, pos, ch);
    };

    if (!pertinentRoot) {
        // Q2: the block must reach an end of x, with at most one partial
        // child sitting at the block's inner boundary.
        if (partialCount > 1) return nullptr;
        if (!touchesFront && !touchesBack) return nullptr;
        bool fullsAtFront;
        if (partialCount == 1) {
            Node* c = (*left)->label == Label::Partial ? *left
                      : (*right)->label == Label::Partial ? *right
                                                          : nullptr;
            if (c == nullptr) return nullptr; // partial strictly inside
            // The partial child must be at the inner end of the block.
            if (segLen > 1) {
                if (touchesFront && touchesBack) {
                    // whole node pertinent; either end works
                    fullsAtFront = c == *right;
                } else if (touchesFront) {
                    if (c != *right) return nullptr;
                    fullsAtFront = true;
                } else {
                    if (c != *left) return nullptr;
                    fullsAtFront = false;
                }
            } else {
                fullsAtFront = touchesFront;
            }
            splicePartial(c, fullsAtFront);
        } else {
            fullsAtFront = touchesFront;
        }
        x->fullsFront = fullsAtFront;
        outLabel = Label::Partial;
        x->label = Label::Partial;
        x->labelEpoch = epoch_;
        return x;
    }

    // Q3 (pertinent root): optional partial at each end of the block, full
    // children in between, empties outside.
    if (partialCount > 2) return nullptr;
    for (auto it = std::next(left); it != right; ++it)
        if ((*it)->label == Label::Partial) return nullptr;
    if (partialCount == 2 && ((*left)->label != Label::Partial || (*right)->label != Label::Partial))
        return nullptr;
    if (partialCount == 1 && (*left)->label != Label::Partial &&
        (*right)->label != Label::Partial)
        return nullptr;

    if ((*right)->label == Label::Partial && segLen > 1) splicePartial(*right, true);
    if ((*left)->label == Label::Partial) splicePartial(*left, false);
    outLabel = Label::Partial; // unused past the root
    return x;
}

std::vector<int> PqTree::frontier() const {
    std::vector<int> out;
    auto rec = [&out](auto&& self, const Node* n) -> void {
        if (n->type == Node::Type::Leaf) {
            out.push_back(n->leafId);
            return;
        }
        for (const Node* ch : n->children) self(self, ch);
    };
    rec(rec, root_);
    return out;
}

} // namespace splitdiam
