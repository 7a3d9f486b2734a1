#pragma once

#include "core/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dominion {

// Parsed form of the CLI family grammar:
//   path:N | cycle:N | complete:N | star:N | sun:N
//   kpartite:M1,M2,...            (at least two parts)
//   join:<spec>+<spec>            (the left operand ends at its '+';
//                                  nest "join:" for more than two operands)
// star:N means N leaves; sun:N is a cycle of length N with a leaf on each
// cycle vertex (2N vertices total).
struct FamilySpec {
    enum class Kind { path, cycle, complete, star, sun, kpartite, join };

    Kind kind = Kind::path;
    int n = 0;                  // path/cycle/complete/star/sun parameter
    std::vector<int> parts;     // kpartite block sizes
    std::unique_ptr<FamilySpec> left;  // join operands
    std::unique_ptr<FamilySpec> right;
};

FamilySpec parse_family_spec(const std::string& text);
Graph build_family_graph(const FamilySpec& spec);
std::string describe_family(const FamilySpec& spec); // canonical grammar string

} // namespace dominion
