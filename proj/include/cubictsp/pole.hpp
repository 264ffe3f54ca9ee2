#pragma once

// Poles are graph fragments with 2 or 3 ordered dangling edges ("stubs").
// A pole stores its inner graph plus, per stub, the vertex the dangling
// edge is attached to. Counting incident stubs, every vertex must have
// degree exactly 3, so poles are precisely fragments of cubic graphs.

#include <string>
#include <utility>
#include <vector>

#include "cubictsp/error.hpp"
#include "cubictsp/graph.hpp"

namespace cubictsp {

class Pole {
public:
    Pole(Graph inner, std::vector<int> stubs)
        : inner_(std::move(inner)), stubs_(std::move(stubs)) {
        const int r = static_cast<int>(stubs_.size());
        if (r != 2 && r != 3)
            throw ArityError("pole arity must be 2 or 3, got " + std::to_string(r));
        const int n = inner_.vertex_count();
        std::vector<int> stub_deg(n, 0);
        for (int s : stubs_) {
            if (s < 0 || s >= n)
                throw StructuralError("stub attachment " + std::to_string(s) + " out of range");
            ++stub_deg[s];
        }
        for (int v = 0; v < n; ++v) {
            if (inner_.degree(v) + stub_deg[v] != 3)
                throw StructuralError("vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(inner_.degree(v) + stub_deg[v]) +
                                      " counting stubs, expected 3");
        }
    }

    const Graph& inner() const { return inner_; }
    const std::vector<int>& stubs() const { return stubs_; }
    int arity() const { return static_cast<int>(stubs_.size()); }
    int vertex_count() const { return inner_.vertex_count(); }

    bool operator==(const Pole& other) const {
        return inner_ == other.inner_ && stubs_ == other.stubs_;
    }

private:
    Graph inner_;
    std::vector<int> stubs_;
};

}  // namespace cubictsp
