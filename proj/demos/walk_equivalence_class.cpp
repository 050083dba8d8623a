// Walks an equivalence class: starting from a directed path, lists every
// graph carrying the same separation structure, shows which single-edge
// reversals stay inside the class, and prints a stepwise reduction from a
// denser graph onto the path.

#include <iostream>

#include "razors/transforms.hpp"

using namespace razors;

int main() {
    const Dag path(4, {{1, 2}, {2, 3}, {3, 4}});
    std::cout << "start graph:\n" << path.to_text() << "\n";

    std::cout << "class members (same separation structure):\n";
    for (const Dag& member : mec_members(path)) {
        std::cout << "  ";
        for (const auto& [j, k] : member.edges()) std::cout << Dag::edge_name(j, k) << "; ";
        std::cout << "\n";
    }

    std::cout << "\nreversals that stay inside the class:\n";
    for (const auto& [j, k] : path.edges()) {
        std::cout << "  " << Dag::edge_name(j, k) << ": "
                  << (is_covered_edge(path, j, k) ? "covered, class preserved"
                                                  : "not covered, class would change")
                  << "\n";
    }

    const Dag dense(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
    std::cout << "\nreducing a denser graph onto the path:\n";
    if (const auto seq = chickering_sequence(dense, path)) {
        std::cout << seq->to_text();
        std::cout << "steps = " << seq->steps.size() << "\n";
    } else {
        std::cout << "no reduction exists\n";
    }
    return 0;
}
